#include "charboole/summation.hpp"

#include <cmath>

#include "charboole/errors.hpp"
#include "charboole/eulerfun.hpp"
#include "charboole/quadrature.hpp"

namespace charboole {

SmoothFunction::SmoothFunction(std::string name, std::vector<Fn> derivatives, std::vector<double> probes)
    : name_(std::move(name)), d_(std::move(derivatives)) {
  if (d_.empty()) throw DomainError("SmoothFunction: at least f itself is required");
  for (std::size_t j = 1; j < d_.size(); ++j) {
    for (double x : probes) {
      const double h = 1e-5 * std::max(1.0, std::abs(x));
      const double fd = (d_[j - 1](x + h) - d_[j - 1](x - h)) / (2.0 * h);
      const double exact = d_[j](x);
      if (std::abs(fd - exact) > 1e-5 * std::max(1.0, std::abs(exact))) {
        throw DomainError("SmoothFunction " + name_ + ": derivative " + std::to_string(j) +
                          " disagrees with finite difference at x = " + std::to_string(x));
      }
    }
  }
}

double SmoothFunction::derivative(int j, double x) const {
  if (j < 0 || j > max_order()) {
    throw DomainError("SmoothFunction " + name_ + ": derivative order " + std::to_string(j) + " not available");
  }
  return d_[j](x);
}

SmoothFunction SmoothFunction::exponential(double c, int max_order) {
  std::vector<Fn> d;
  for (int j = 0; j <= max_order; ++j) {
    const double cj = std::pow(c, j);
    d.push_back([c, cj](double x) { return cj * std::exp(c * x); });
  }
  return SmoothFunction("exp(" + std::to_string(c) + "x)", std::move(d), {0.3, 1.7, 5.2});
}

SmoothFunction SmoothFunction::monomial(int n, int max_order) {
  std::vector<Fn> d;
  for (int j = 0; j <= max_order; ++j) {
    double coef = 1.0;
    for (int i = 0; i < j; ++i) coef *= static_cast<double>(n - i);
    const int e = n - j;
    d.push_back([coef, e](double x) { return coef == 0.0 ? 0.0 : coef * std::pow(x, e); });
  }
  return SmoothFunction("x^" + std::to_string(n), std::move(d), {0.3, 1.7, 5.2});
}

SmoothFunction SmoothFunction::shifted_power(double a, double sigma, int max_order) {
  std::vector<Fn> d;
  double coef = 1.0;
  for (int j = 0; j <= max_order; ++j) {
    const double e = -sigma - j;
    d.push_back([coef, a, e](double x) {
      if (x + a <= 0.0) throw DomainError("shifted_power: x + a must be > 0");
      return coef * std::pow(x + a, e);
    });
    coef *= e;
  }
  return SmoothFunction("(x+" + std::to_string(a) + ")^-" + std::to_string(sigma), std::move(d),
                        {-a + 0.7, -a + 2.3, -a + 6.1});
}

SmoothFunction SmoothFunction::constant(double c, int max_order) {
  std::vector<Fn> d;
  d.push_back([c](double) { return c; });
  for (int j = 1; j <= max_order; ++j) d.push_back([](double) { return 0.0; });
  return SmoothFunction("const", std::move(d), {0.5});
}

namespace {

void require_primitive(const DirichletCharacter& chi) {
  if (!chi.is_primitive()) throw HypothesisError("summation formula needs a primitive character");
  if (chi.modulus() < 2) throw HypothesisError("summation formula needs modulus k > 1");
}

void require_order(const SmoothFunction& f, int needed) {
  if (needed > f.max_order()) {
    throw DomainError("order " + std::to_string(needed) + " exceeds supplied derivatives of " + f.name());
  }
}

std::vector<double> integer_breaks(double a, double b) {
  std::vector<double> out;
  for (double n = std::floor(a) + 1.0; n < b; n += 1.0) {
    if (n > a) out.push_back(n);
  }
  return out;
}

QuadratureSpec make_spec(double a, double b, const SummationTolerance& tol) {
  QuadratureSpec spec;
  spec.lower = a;
  spec.upper = b;
  spec.breakpoints = integer_breaks(a, b);
  spec.rel_tol = tol.rel_tol;
  spec.abs_tol = tol.abs_tol;
  return spec;
}

double factorial_d(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

using LComplex = std::complex<long double>;

Complex narrow(LComplex z) { return {static_cast<double>(z.real()), static_cast<double>(z.imag())}; }

// Kernel at an endpoint: evaluated at the exact value of x, rounded once.
LComplex endpoint_value(const CharPeriodic& F, double x, Limit lim = Limit::standard) {
  const Rational xr = Rational::from_double(x);
  if (F.is_real()) return {F.exact(xr, lim).to_long_double(), 0.0L};
  const Complex v = F.value(xr, lim);
  return {v.real(), v.imag()};
}

LComplex widen(Complex z) { return {z.real(), z.imag()}; }

// Boundary sums reach |f| times the kernel size, so lhs and boundary are carried in
// long double and the defect is formed before narrowing.
void finish(SummationReport& r, LComplex lhs, LComplex boundary) {
  r.lhs = narrow(lhs);
  r.rhs_boundary = narrow(boundary);
  r.defect = narrow(lhs - boundary - widen(r.rhs_integral));
}

}  // namespace

SummationReport boole_sum(const SmoothFunction& f, long alpha, long beta, int l, const SummationTolerance& tol) {
  if (alpha >= beta) throw DomainError("boole_sum: alpha must be < beta");
  if (l < 1) throw DomainError("boole_sum: order must be >= 1");
  require_order(f, l);
  SummationReport r;
  r.formula = "boole";
  r.order = l;
  long double lhs = 0.0L;
  for (long n = alpha; n < beta; ++n) lhs += ((n % 2 == 0) ? 2.0L : -2.0L) * f(static_cast<double>(n));
  const long double sb = ((beta - 1) % 2 == 0) ? 1.0L : -1.0L;
  const long double sa = (alpha % 2 == 0) ? 1.0L : -1.0L;
  long double bd = 0.0L;
  for (int j = 0; j < l; ++j) {
    const long double ej = (poly_coeffs(PolyKind::euler, j).coeffs[0] / Rational(factorial(j))).to_long_double();
    bd += ej * (sb * f.derivative(j, beta) + sa * f.derivative(j, alpha));
  }
  auto q = integrate_piecewise(
      [&](double x) { return f.derivative(l, x) * periodic_eval(PolyKind::euler, l - 1, -x); },
      make_spec(static_cast<double>(alpha), static_cast<double>(beta), tol));
  r.rhs_integral = q.value / factorial_d(l - 1);
  r.quad_error = q.error_estimate;
  r.quad_evaluations = q.evaluations;
  finish(r, lhs, bd);
  return r;
}

SummationReport char_euler_maclaurin(const DirichletCharacter& chi, const SmoothFunction& f, double alpha,
                                     double beta, int l, const SummationTolerance& tol) {
  require_primitive(chi);
  if (!(alpha < beta)) throw DomainError("char_euler_maclaurin: alpha must be < beta");
  if (l < 0) throw DomainError("char_euler_maclaurin: order must be >= 0");
  require_order(f, l + 1);
  SummationReport r;
  r.formula = "char-euler-maclaurin";
  r.order = l;
  LComplex lhs{0.0L, 0.0L};
  for (double n = std::ceil(alpha); n <= beta; n += 1.0) {
    const long double w = (n == alpha || n == beta) ? 0.5L : 1.0L;
    lhs += w * widen(chi.complex(static_cast<long>(n))) * static_cast<long double>(f(n));
  }
  const DirichletCharacter cb = chi.conjugate();
  const long double cm1 = chi.at_minus_one();
  LComplex bd{0.0L, 0.0L};
  for (int j = 0; j <= l; ++j) {
    CharPeriodic B(PolyKind::bernoulli, j + 1, cb);
    const long double sgn = (j % 2 == 0) ? -1.0L : 1.0L;  // (-1)^{j+1}
    const long double fac = Rational(factorial(j + 1)).to_long_double();
    bd += sgn / fac *
          (endpoint_value(B, beta) * static_cast<long double>(f.derivative(j, beta)) -
           endpoint_value(B, alpha) * static_cast<long double>(f.derivative(j, alpha)));
  }
  bd *= cm1;
  CharPeriodic K(PolyKind::bernoulli, l + 1, cb);
  auto q = integrate_piecewise([&](double u) { return K(u) * f.derivative(l + 1, u); },
                               make_spec(alpha, beta, tol));
  r.rhs_integral = static_cast<double>(cm1) * ((l % 2 == 0) ? 1.0 : -1.0) / factorial_d(l + 1) * q.value;
  r.quad_error = q.error_estimate;
  r.quad_evaluations = q.evaluations;
  finish(r, lhs, bd);
  return r;
}

SummationReport char_boole_sum(const DirichletCharacter& chi, const SmoothFunction& f, double alpha,
                               double beta, int l, const SummationTolerance& tol) {
  require_primitive(chi);
  if (chi.modulus() % 2 == 0) throw HypothesisError("character Boole formula needs an odd modulus");
  if (!(alpha < beta)) throw DomainError("char_boole_sum: alpha must be < beta");
  if (l < 0) throw DomainError("char_boole_sum: order must be >= 0");
  require_order(f, l + 1);
  SummationReport r;
  r.formula = "char-boole";
  r.order = l;
  LComplex lhs{0.0L, 0.0L};
  for (double n = std::floor(alpha) + 1.0; n < beta; n += 1.0) {
    const long ni = static_cast<long>(n);
    lhs += ((ni % 2 == 0) ? 2.0L : -2.0L) * widen(chi.complex(ni)) * static_cast<long double>(f(n));
  }
  const DirichletCharacter cb = chi.conjugate();
  const long double cm1 = chi.at_minus_one();
  LComplex bd{0.0L, 0.0L};
  for (int j = 0; j <= l; ++j) {
    CharPeriodic E(PolyKind::euler, j, cb);
    const long double sgn = (j % 2 == 0) ? 1.0L : -1.0L;
    const long double fac = Rational(factorial(j)).to_long_double();
    // One-sided limits from inside [alpha, beta] keep the sum strictly interior.
    bd += sgn / fac *
          (endpoint_value(E, beta, Limit::left) * static_cast<long double>(f.derivative(j, beta)) -
           endpoint_value(E, alpha, Limit::right) * static_cast<long double>(f.derivative(j, alpha)));
  }
  bd *= cm1;
  CharPeriodic K(PolyKind::euler, l, cb);
  auto q = integrate_piecewise([&](double t) { return K(t) * f.derivative(l + 1, t); },
                               make_spec(alpha, beta, tol));
  r.rhs_integral = -static_cast<double>(cm1) * ((l % 2 == 0) ? 1.0 : -1.0) / factorial_d(l) * q.value;
  r.quad_error = q.error_estimate;
  r.quad_evaluations = q.evaluations;
  finish(r, lhs, bd);
  return r;
}

}  // namespace charboole
