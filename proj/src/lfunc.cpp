#include "charboole/lfunc.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "charboole/errors.hpp"
#include "charboole/eulerfun.hpp"
#include "charboole/quadrature.hpp"

namespace charboole {

const char* to_string(LMethod m) {
  switch (m) {
    case LMethod::series: return "series";
    case LMethod::hurwitz: return "hurwitz";
    default: return "integral";
  }
}

const char* to_string(GammaRoute r) {
  switch (r) {
    case GammaRoute::quotient: return "quotient";
    case GammaRoute::partial_product: return "partial_product";
    default: return "log_formula";
  }
}

const char* to_string(GfKernel k) {
  switch (k) {
    case GfKernel::exp: return "exp";
    case GfKernel::cos: return "cos";
    case GfKernel::sin: return "sin";
    case GfKernel::cosh: return "cosh";
    default: return "sinh";
  }
}

namespace {

Complex psi_star_any(int m, double a, const DirichletCharacter& chi);

void require_alternating_char(const DirichletCharacter& chi) {
  if (!chi.is_primitive() || chi.modulus() < 2) {
    throw HypothesisError("alternating L-function needs a primitive character of modulus > 1");
  }
  if (chi.modulus() % 2 == 0) throw HypothesisError("alternating L-function needs an odd modulus");
}

void require_real(const DirichletCharacter& chi, const char* what) {
  if (!chi.is_real()) throw HypothesisError(std::string(what) + " needs a real character");
}

// c_n = (-1)^n χ(n)
Complex sign_char(const DirichletCharacter& chi, long n) {
  return ((n % 2 == 0) ? 1.0 : -1.0) * chi.complex(n);
}

double factorial_d(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

Complex cpow(double base, Complex e) { return std::exp(e * std::log(base)); }

Complex ell_hurwitz(Complex s, double a, const DirichletCharacter& chi, double tol) {
  const long k2 = 2 * chi.modulus();
  const double kd = static_cast<double>(k2);
  if (s == Complex{1.0, 0.0}) return -psi_star_any(0, a, chi);
  Complex acc{0.0, 0.0};
  for (long j = 1; j < k2; ++j) {
    const Complex c = sign_char(chi, j);
    if (c == Complex{0.0, 0.0}) continue;
    acc += c * hurwitz_zeta(s, (a + static_cast<double>(j)) / kd, 0.1 * tol);
  }
  return cpow(kd, -s) * acc;
}

LResult ell_series(Complex s, double a, const DirichletCharacter& chi, double tol) {
  if (!(s.real() > 0.0)) throw DomainError("series route needs Re(s) > 0");
  const long k2 = 2 * chi.modulus();
  constexpr int kLevels = 11;
  constexpr long kM0 = 2;
  // Partial sums P(M) over the first M full periods, M = M0 2^i.
  std::vector<Complex> P;
  Complex acc{0.0, 0.0};
  Complex comp{0.0, 0.0};
  long n = 1;
  for (int i = 0; i < kLevels; ++i) {
    const long upto = k2 * (kM0 << i);
    for (; n <= upto; ++n) {
      const Complex c = sign_char(chi, n);
      if (c == Complex{0.0, 0.0}) continue;
      // Kahan summation keeps the long alternating sums at rounding level.
      const Complex y = c * cpow(static_cast<double>(n) + a, -s) - comp;
      const Complex t = acc + y;
      comp = (t - acc) - y;
      acc = t;
    }
    P.push_back(acc);
  }
  // The tail beyond X = 2kM expands in X^{-s-j}, j = 0, 1, ...
  std::vector<std::vector<Complex>> T(kLevels);
  T[0] = P;
  Complex best = P.back();
  double best_err = std::abs(P[kLevels - 1] - P[kLevels - 2]);
  for (int j = 1; j < kLevels; ++j) {
    const Complex f = std::pow(Complex{2.0, 0.0}, s + static_cast<double>(j - 1));
    for (std::size_t i = 0; i + 1 < T[j - 1].size(); ++i) {
      T[j].push_back((f * T[j - 1][i + 1] - T[j - 1][i]) / (f - 1.0));
    }
    if (T[j].size() >= 2) {
      const double err = std::abs(T[j].back() - T[j][T[j].size() - 2]);
      if (err < best_err) {
        best_err = err;
        best = T[j].back();
      }
    }
  }
  if (!(best_err <= std::max(1e3 * tol, 1e-8))) {
    throw ConvergenceError("series route: extrapolation did not settle (estimate " + std::to_string(best_err) + ")");
  }
  return {best, best_err, "series"};
}

int integral_order(Complex s, int l) {
  if (l > 0) return l;
  return std::max(3, static_cast<int>(std::ceil(s.real())) + 2);
}

// 2ℓ(w, a, χ) with s = -w.
Complex ell_integral(Complex w, double a, const DirichletCharacter& chi, int l, double tol) {
  if (!(a > 0.0)) throw DomainError("integral route needs a > 0");
  const Complex s = -w;
  l = integral_order(s, l);
  if (!(static_cast<double>(l) + 1.0 > s.real())) throw DomainError("integral route needs l + 1 > Re(-w)");
  const DirichletCharacter cb = chi.conjugate();
  const auto e0 = euler_char_zero_values_c(cb, l);
  Complex bd{0.0, 0.0};
  Complex ff{1.0, 0.0};  // falling factorial (s)_j
  for (int j = 0; j <= l; ++j) {
    bd += ff / factorial_d(j) * e0[j] * cpow(a, s - static_cast<double>(j));
    ff *= s - static_cast<double>(j);
  }
  // ff now equals (s)_{l+1}
  const Complex I = kernel_integral(cb, l, -1, 0.0, a, s - static_cast<double>(l + 1), tol);
  return 0.5 * (bd + ff / factorial_d(l) * I);
}

}  // namespace

Complex kernel_integral(const DirichletCharacter& chibar, int l, int sigma, double x0, double a, Complex e,
                        double tol) {
  if (!(x0 + a > 0.0)) throw DomainError("kernel_integral: x0 + a must be > 0");
  if (!(e.real() < 0.0)) throw DomainError("kernel_integral: needs Re(e) < 0");
  const double k2 = 2.0 * static_cast<double>(chibar.modulus());
  const CharPeriodic K(PolyKind::euler, l, chibar);
  const double sg = sigma >= 0 ? 1.0 : -1.0;
  const double reach = k2 * (8.0 + std::abs(e));
  const double X = k2 * std::ceil((std::max(x0, 0.0) + reach) / k2);

  QuadratureSpec spec;
  spec.lower = x0;
  spec.upper = X;
  for (double n = std::floor(x0) + 1.0; n < X; n += 1.0) spec.breakpoints.push_back(n);
  spec.rel_tol = 1e-14;
  spec.abs_tol = tol;
  auto q = integrate_piecewise([&](double t) { return K(sg * t) * std::exp(e * std::log(t + a)); }, spec);

  // Remaining tail by repeated integration by parts; X is a multiple of 2k so every
  // kernel takes its value at 0.
  constexpr int kMaxTerms = 40;
  const auto e0 = euler_char_zero_values_c(chibar, l + 1 + kMaxTerms);
  Complex tail{0.0, 0.0};
  Complex g = std::exp(e * std::log(X + a));  // g^{(i)}(X)
  double fac = 1.0 / static_cast<double>(l + 1);  // l!/(l+1+i)!
  double prev = INFINITY;
  for (int i = 0; i < kMaxTerms; ++i) {
    const double sgn = ((i + 1) % 2 == 0 || sg < 0) ? 1.0 : -1.0;  // (-σ)^{i+1}
    const Complex term = sgn * fac * e0[l + 1 + i] * g;
    const double mag = std::abs(term);
    if (mag > prev && mag > 0.0) break;  // asymptotic series started to grow
    tail += term;
    if (mag != 0.0) prev = mag;
    if (mag != 0.0 && mag < 1e-3 * tol) break;
    g *= (e - static_cast<double>(i)) / (X + a);
    fac /= static_cast<double>(l + 2 + i);
  }
  return q.value + tail;
}

LResult ell_eval(const LQuery& q) {
  require_alternating_char(q.chi);
  require_finite(q.s, "ell: s");
  if (!(q.tol > 0.0)) throw DomainError("ell: tol must be > 0");
  switch (q.method) {
    case LMethod::series:
      if (!(q.a > -1.0)) throw DomainError("series route needs a > -1");
      return ell_series(q.s, q.a, q.chi, q.tol);
    case LMethod::hurwitz:
      if (!(q.a > -1.0)) throw DomainError("hurwitz route needs a > -1");
      return {require_finite(ell_hurwitz(q.s, q.a, q.chi, q.tol), "ell"), q.tol, "hurwitz"};
    default: {
      const int l = integral_order(-q.s, q.l);
      return {require_finite(ell_integral(q.s, q.a, q.chi, l, q.tol), "ell"), q.tol,
              "integral(l=" + std::to_string(l) + ")"};
    }
  }
}

Complex ell_partial_literal(double x, Complex s, double a, const DirichletCharacter& chi) {
  Complex acc{0.0, 0.0};
  for (long n = 1; static_cast<double>(n) <= x; ++n) {
    const Complex c = sign_char(chi, n);
    if (c == Complex{0.0, 0.0}) continue;
    acc += c * cpow(static_cast<double>(n) + a, s);
  }
  return acc;
}

Complex ell_partial(double x, Complex s, double a, const DirichletCharacter& chi, int l) {
  require_alternating_char(chi);
  if (!(x >= 0.0)) throw DomainError("ell_partial: x must be >= 0");
  if (!(a > 0.0)) throw DomainError("ell_partial: a must be > 0");
  if (!(static_cast<double>(l) > s.real())) throw DomainError("ell_partial: needs l > Re(s)");
  const DirichletCharacter cb = chi.conjugate();
  const double cm1 = chi.at_minus_one();
  Complex bd{0.0, 0.0};
  Complex ff{1.0, 0.0};
  for (int j = 0; j <= l; ++j) {
    const CharPeriodic E(PolyKind::euler, j, cb);
    // Right limit at x so that n = x is counted.
    const double sgn = (j % 2 == 0) ? 1.0 : -1.0;
    bd += sgn / factorial_d(j) * E(x, Limit::right) * ff * cpow(x + a, s - static_cast<double>(j));
    ff *= s - static_cast<double>(j);
  }
  const Complex I = kernel_integral(cb, l, 1, x, a, s - static_cast<double>(l + 1));
  const Complex two_ell = 2.0 * ell_hurwitz(-s, a, chi, 1e-14);
  const double sl = (l % 2 == 0) ? 1.0 : -1.0;
  return 0.5 * (cm1 * bd + two_ell + cm1 * sl / factorial_d(l) * ff * I);
}

ExactOrComplex ell_special_negint(int p, const Rational& a, const DirichletCharacter& chi) {
  require_alternating_char(chi);
  if (p < 1) throw DomainError("ell_special_negint: p must be >= 1");
  const CharPeriodic E(PolyKind::euler, p - 1, chi.conjugate());
  ExactOrComplex out;
  if (chi.is_real()) {
    out.exact = E.polynomial_exact(a) / Rational(2);
    out.value = {out.exact->to_double(), 0.0};
  } else {
    out.value = 0.5 * E.polynomial(a);
  }
  return out;
}

Complex ell_prime0(const DirichletCharacter& chi) {
  require_alternating_char(chi);
  const long k2 = 2 * chi.modulus();
  const Complex e0 = CharPeriodic(PolyKind::euler, 0, chi.conjugate()).value(Rational(0));
  Complex acc = -0.5 * e0 * std::log(static_cast<double>(k2));
  for (long n = 1; n < k2; ++n) {
    acc += sign_char(chi, n) * log_gamma(static_cast<double>(n) / static_cast<double>(k2));
  }
  return acc;
}

Complex ell_prime0_integral(const DirichletCharacter& chi) {
  require_alternating_char(chi);
  const DirichletCharacter cb = chi.conjugate();
  const double cm1 = chi.at_minus_one();
  const Complex e1 = CharPeriodic(PolyKind::euler, 1, cb).value(Rational(1));
  const Complex I = kernel_integral(cb, 1, 1, 1.0, 0.0, Complex{-2.0, 0.0});
  return 0.5 * (-cm1 * e1 + cm1 * I);
}

Derivative0 ell_derivative0(double a, const DirichletCharacter& chi) {
  require_alternating_char(chi);
  if (!(a > 0.0)) throw DomainError("ell_derivative0: a must be > 0");
  const long k2 = 2 * chi.modulus();
  const DirichletCharacter cb = chi.conjugate();
  const Complex e0 = CharPeriodic(PolyKind::euler, 0, cb).value(Rational(0));
  const Complex e1 = CharPeriodic(PolyKind::euler, 1, cb).value(Rational(0));
  Derivative0 out;
  Complex acc = -e0 * std::log(static_cast<double>(k2));
  for (long n = 1; n < k2; ++n) {
    acc += 2.0 * sign_char(chi, n) * log_gamma((static_cast<double>(n) + a) / static_cast<double>(k2));
  }
  out.gamma_sum = 0.5 * acc;
  const Complex I = kernel_integral(cb, 1, 1, 0.0, a, Complex{-2.0, 0.0});
  out.integral = 0.5 * (-e0 * std::log(a) - e1 / a + static_cast<double>(chi.at_minus_one()) * I);
  return out;
}

double gamma_star(const GammaStarQuery& q) {
  require_alternating_char(q.chi);
  require_real(q.chi, "gamma_star");
  if (!(q.a >= 0.0)) throw DomainError("gamma_star: a must be >= 0");
  if (q.a == 0.0) return 0.0;
  const long k2 = 2 * q.chi.modulus();
  const double kd = static_cast<double>(k2);
  switch (q.route) {
    case GammaRoute::quotient: {
      double acc = 0.0;
      for (long n = 1; n < k2; ++n) {
        const double c = sign_char(q.chi, n).real();
        if (c == 0.0) continue;
        const double nd = static_cast<double>(n);
        acc += c * (log_gamma((nd + q.a) / kd) - log_gamma(nd / kd));
      }
      return acc;
    }
    case GammaRoute::partial_product: {
      if (q.N < 1) throw DomainError("gamma_star: N must be >= 1");
      double acc = 0.0;
      for (long n = 1; n <= q.N; ++n) {
        const double c = sign_char(q.chi, n).real();
        if (c != 0.0) acc -= c * std::log1p(q.a / static_cast<double>(n));
      }
      return acc;
    }
    default: {
      const DirichletCharacter cb = q.chi.conjugate();
      const double e0 = CharPeriodic(PolyKind::euler, 0, cb).exact(Rational(0)).to_double();
      const double e1 = CharPeriodic(PolyKind::euler, 1, cb).exact(Rational(0)).to_double();
      const double cm1 = q.chi.at_minus_one();
      const double I = kernel_integral(cb, 1, 1, 0.0, q.a, Complex{-2.0, 0.0}).real();
      return 0.5 * (-e0 * std::log(q.a) - 2.0 * ell_prime0(q.chi).real() - cm1 * e1 / q.a + cm1 * I);
    }
  }
}

namespace {

Complex psi_star_any(int m, double a, const DirichletCharacter& chi) {
  const long k2 = 2 * chi.modulus();
  const double kd = static_cast<double>(k2);
  Complex acc{0.0, 0.0};
  for (long n = 1; n < k2; ++n) {
    const Complex c = sign_char(chi, n);
    if (c == Complex{0.0, 0.0}) continue;
    acc += c * polygamma(m, (static_cast<double>(n) + a) / kd);
  }
  return acc * std::pow(kd, -(m + 1));
}

}  // namespace

Complex psi_star(double a, const DirichletCharacter& chi) { return psi_star_derivative(0, a, chi); }

Complex psi_star_derivative(int m, double a, const DirichletCharacter& chi) {
  require_alternating_char(chi);
  if (m < 0) throw DomainError("psi_star_derivative: m must be >= 0");
  if (!(a > 0.0)) throw DomainError("psi_star: a must be > 0");
  return psi_star_any(m, a, chi);
}

double cot_derivative(int m, double x) {
  if (m < 0) throw DomainError("cot_derivative: m must be >= 0");
  // d^m/dx^m cot x = P_m(cot x), P_0(c) = c, P_{i+1}(c) = -(1 + c^2) P_i'(c).
  std::vector<double> p{0.0, 1.0};
  for (int i = 0; i < m; ++i) {
    std::vector<double> d(p.size() > 1 ? p.size() - 1 : 1, 0.0);
    for (std::size_t j = 1; j < p.size(); ++j) d[j - 1] = static_cast<double>(j) * p[j];
    std::vector<double> next(d.size() + 2, 0.0);
    for (std::size_t j = 0; j < d.size(); ++j) {
      next[j] -= d[j];
      next[j + 2] -= d[j];
    }
    p = std::move(next);
  }
  const double c = std::cos(x) / std::sin(x);
  double acc = 0.0;
  for (std::size_t j = p.size(); j-- > 0;) acc = acc * c + p[j];
  return acc;
}

Complex ell_cot(int m, const DirichletCharacter& chi) {
  require_alternating_char(chi);
  if (m < 1) throw DomainError("ell_cot: m must be >= 1");
  if (chi.at_minus_one() * ((m % 2 == 0) ? 1 : -1) != 1) {
    throw HypothesisError("ell_cot: closed form for l(m, chi) needs chi(-1)(-1)^m = 1");
  }
  const long k = chi.modulus();
  const long k2 = 2 * k;
  const double h = kPi / static_cast<double>(k2);
  Complex acc{0.0, 0.0};
  for (long n = 1; n < k2; ++n) {
    const Complex c = sign_char(chi, n);
    if (c == Complex{0.0, 0.0}) continue;
    const double x = h * static_cast<double>(n);
    const double sn = std::sin(x);
    double v;
    switch (m) {
      case 1: v = std::cos(x) / sn; break;
      case 2: v = 1.0 / (sn * sn); break;
      case 3: v = std::cos(x) / (sn * sn * sn); break;
      case 4: v = (2.0 + std::cos(2.0 * x)) / (3.0 * sn * sn * sn * sn); break;
      default: v = cot_derivative(m - 1, x); break;
    }
    acc += c * v;
  }
  if (m <= 4) return 0.5 * std::pow(h, m) * acc;
  // 2ℓ(M + 1, χ) = -((-π/2k)^{M+1} / M!) Σ c_n cot^{(M)}(πn/2k), M = m - 1.
  return -0.5 * std::pow(-h, m) / factorial_d(m - 1) * acc;
}

StirlingResult stirling_log_gamma_star(double a, const DirichletCharacter& chi, int J) {
  require_alternating_char(chi);
  require_real(chi, "stirling_log_gamma_star");
  if (!(a > 0.0)) throw DomainError("stirling_log_gamma_star: a must be > 0");
  if (J < 1) throw DomainError("stirling_log_gamma_star: J must be >= 1");
  const DirichletCharacter cb = chi.conjugate();
  const auto e = euler_char_zero_values(cb, J + 3);
  const double cm1 = chi.at_minus_one();
  StirlingResult out;
  out.partial = -0.5 * e[0].to_double() * std::log(a) - ell_prime0(chi).real();
  for (int j = 1; j <= J; ++j) {
    const double t = -0.5 * cm1 * e[j].to_double() / (static_cast<double>(j) * std::pow(a, j));
    out.terms.push_back(t);
    out.partial += t;
  }
  for (int j = J + 1; j <= J + 3; ++j) {
    if (e[j].is_zero()) continue;
    out.error_proxy = std::abs(0.5 * e[j].to_double() / (static_cast<double>(j) * std::pow(a, j)));
    break;
  }
  return out;
}

GfResult gf_coefficients(GfKernel kernel, const DirichletCharacter& chi, int J, std::optional<Parity> parity) {
  require_alternating_char(chi);
  if (J < 0) throw DomainError("gf_coefficients: J must be >= 0");
  if (parity && kernel != GfKernel::exp && *parity != chi.parity()) {
    throw HypothesisError(std::string("gf_coefficients: ") + to_string(kernel) + " form for " +
                          to_string(*parity) + " characters applied to an " + to_string(chi.parity()) +
                          " character");
  }
  const long k = chi.modulus();
  const double kd = static_cast<double>(k);
  const bool odd = chi.parity() == Parity::odd;
  std::vector<Complex> c(k + 1);
  for (long n = 0; n <= k; ++n) c[n] = sign_char(chi, n);

  auto sum = [&](auto&& fn, long lo, long hi, Complex t) {
    Complex acc{0.0, 0.0};
    for (long n = lo; n <= hi; ++n) acc += c[n] * fn(static_cast<double>(n) * t);
    return 2.0 * acc;
  };
  auto ccos = [](Complex z) { return std::cos(z); };
  auto csin = [](Complex z) { return std::sin(z); };
  auto ccosh = [](Complex z) { return std::cosh(z); };
  auto csinh = [](Complex z) { return std::sinh(z); };
  auto cexp = [](Complex z) { return std::exp(z); };

  GfResult out;
  std::function<Complex(Complex)> f;
  switch (kernel) {
    case GfKernel::exp:
      out.form = "2 sum_{n<k} (-1)^n chi(n) e^{nt} / (e^{kt} + 1)";
      f = [&](Complex t) { return sum(cexp, 0, k - 1, t) / (std::exp(kd * t) + 1.0); };
      break;
    case GfKernel::cos:
      if (odd) {
        out.form = "2 sum (-1)^n chi(n) cos(nt) / (cos(kt) + 1)";
        f = [&](Complex t) { return sum(ccos, 1, k - 1, t) / (std::cos(kd * t) + 1.0); };
      } else {
        out.form = "2 sum (-1)^n chi(n) cos(nt) / sin(kt)";
        f = [&](Complex t) { return sum(ccos, 1, k - 1, t) / std::sin(kd * t); };
      }
      break;
    case GfKernel::sin:
      if (odd) {
        out.form = "2 sum (-1)^n chi(n) sin(nt) / sin(kt)";
        f = [&](Complex t) { return sum(csin, 1, k - 1, t) / std::sin(kd * t); };
      } else {
        out.form = "2 sum (-1)^n chi(n) sin(nt) / (cos(kt) + 1)";
        f = [&](Complex t) { return sum(csin, 1, k - 1, t) / (std::cos(kd * t) + 1.0); };
      }
      break;
    case GfKernel::cosh:
      if (odd) {
        out.form = "2 sum_{n<=k} (-1)^n chi(n) cosh(nt) / (cosh(kt) + 1)";
        f = [&](Complex t) { return sum(ccosh, 0, k, t) / (std::cosh(kd * t) + 1.0); };
      } else {
        out.form = "2 sum_{n<=k} (-1)^n chi(n) cosh(nt) / sinh(kt)";
        f = [&](Complex t) { return sum(ccosh, 0, k, t) / std::sinh(kd * t); };
      }
      break;
    case GfKernel::sinh:
      if (odd) {
        out.form = "2 sum (-1)^n chi(n) sinh(nt) / sinh(kt)";
        f = [&](Complex t) { return sum(csinh, 1, k - 1, t) / std::sinh(kd * t); };
      } else {
        out.form = "2 sum_{n<=k} (-1)^n chi(n) sinh(nt) / (cosh(kt) + 1)";
        f = [&](Complex t) { return sum(csinh, 0, k, t) / (std::cosh(kd * t) + 1.0); };
      }
      break;
  }

  // Cauchy integral on |t| = r inside the radius π/k, trapezoidal rule.
  constexpr int kNodes = 256;
  const double r = 0.75 * kPi / kd;
  std::vector<Complex> vals(kNodes);
  for (int i = 0; i < kNodes; ++i) {
    const double th = 2.0 * kPi * (static_cast<double>(i) + 0.5) / kNodes;
    vals[i] = f(std::polar(r, th));
  }
  for (int j = 0; j <= J; ++j) {
    Complex acc{0.0, 0.0};
    for (int i = 0; i < kNodes; ++i) {
      const double th = 2.0 * kPi * (static_cast<double>(i) + 0.5) / kNodes;
      acc += vals[i] * std::polar(1.0, -th * j);
    }
    out.coefficients.push_back(acc / (static_cast<double>(kNodes) * std::pow(r, j)));
  }

  const auto e = euler_char_zero_values_c(chi.conjugate(), J);
  const bool trig = kernel == GfKernel::cos || kernel == GfKernel::sin;
  for (int j = 0; j <= J; ++j) {
    Complex v = e[j] / factorial_d(j);
    if (kernel != GfKernel::exp) {
      // Only indices of the opposite parity to χ survive.
      const bool keep = odd ? (j % 2 == 0) : (j % 2 == 1);
      if (!keep) v = 0.0;
      if (trig && ((j / 2) % 2 == 1)) v = -v;  // (-1)^{floor(j/2)}
      if (kernel == GfKernel::cos && !odd) v = -v;
    }
    out.expected.push_back(v);
  }
  return out;
}

double weierstrass_partial(double s, const DirichletCharacter& chi, long N) {
  require_alternating_char(chi);
  require_real(chi, "weierstrass_partial");
  if (N < 1) throw DomainError("weierstrass_partial: N must be >= 1");
  if (s == 0.0) return 0.0;
  const double ell1 = -psi_star_any(0, 0.0, chi).real();
  double acc = -s * ell1;
  for (long n = 1; n <= N; ++n) {
    const double c = sign_char(chi, n).real();
    if (c == 0.0) continue;
    const double nd = static_cast<double>(n);
    const double u = 1.0 + s / nd;
    if (std::abs(s + nd) < 1e-9) {
      if (c > 0) throw PoleError("weierstrass_partial: s = -" + std::to_string(n) + " is a pole");
      throw DomainError("weierstrass_partial: s = -" + std::to_string(n) + " is a zero");
    }
    acc += c * (s / nd - std::log(std::abs(u)));
  }
  return acc;
}

LogMeanResult log_mean_defect(double t, const DirichletCharacter& chi, int J) {
  require_alternating_char(chi);
  require_real(chi, "log_mean_defect");
  if (!(t > 1.0) || t == std::floor(t)) throw DomainError("log_mean_defect: t must be > 1 and not an integer");
  if (J < 1) throw DomainError("log_mean_defect: J must be >= 1");
  LogMeanResult out;
  for (long n = 1; static_cast<double>(n) < t; ++n) {
    const double c = sign_char(chi, n).real();
    if (c != 0.0) out.lhs += 2.0 * c * std::log(t / static_cast<double>(n));
  }
  const DirichletCharacter cb = chi.conjugate();
  const double e0 = CharPeriodic(PolyKind::euler, 0, cb).exact(Rational(0)).to_double();
  out.rhs = 2.0 * ell_prime0(chi).real() + e0 * std::log(t);
  const double cm1 = chi.at_minus_one();
  for (int j = 1; j <= J; ++j) {
    out.rhs += cm1 * CharPeriodic(PolyKind::euler, j, cb).real(t) / (static_cast<double>(j) * std::pow(t, j));
  }
  out.defect = std::abs(out.lhs - out.rhs);
  return out;
}

}  // namespace charboole
