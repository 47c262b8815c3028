#include "charboole/eulerfun.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>

#include "charboole/errors.hpp"

namespace charboole {

const char* to_string(PolyKind k) { return k == PolyKind::bernoulli ? "bernoulli" : "euler"; }

Rational PolySpec::operator()(const Rational& x) const {
  Rational acc(0);
  for (int i = degree; i >= 0; --i) acc = acc * x + coeffs[i];
  return acc;
}

double PolySpec::operator()(double x) const {
  double acc = 0.0;
  for (int i = degree; i >= 0; --i) acc = acc * x + coeffs_d[i];
  return acc;
}

namespace {

PolySpec build_poly(PolyKind kind, int n) {
  PolySpec p{kind, n, {}, {}};
  p.coeffs.resize(n + 1);
  if (kind == PolyKind::bernoulli) {
    // B_n(x) = Σ C(n, j) B_j x^{n-j}
    for (int j = 0; j <= n; ++j) {
      p.coeffs[n - j] = Rational(binomial(n, j)) * bernoulli_number(j);
    }
  } else {
    // E_n(x) = 2/(n+1) (B_{n+1}(x) - 2^{n+1} B_{n+1}(x/2))
    const PolySpec& b = poly_coeffs(PolyKind::bernoulli, n + 1);
    for (int i = 0; i <= n; ++i) {
      Rational f = Rational(1) - pow(Rational(2), n + 1 - i);
      p.coeffs[i] = Rational(2, n + 1) * b.coeffs[i] * f;
    }
  }
  for (const auto& c : p.coeffs) p.coeffs_d.push_back(c.to_double());
  return p;
}

}  // namespace

const PolySpec& poly_coeffs(PolyKind kind, int n) {
  if (n < 0) throw DomainError("poly_coeffs: degree must be >= 0");
  static std::shared_mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<PolySpec>> cache;
  const auto key = std::make_pair(static_cast<int>(kind), n);
  {
    std::shared_lock lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }
  // Built outside the lock: the Euler case recurses into the Bernoulli cache.
  auto spec = std::make_unique<PolySpec>(build_poly(kind, n));
  std::unique_lock lock(mu);
  auto [it, inserted] = cache.emplace(key, std::move(spec));
  return *it->second;
}

Rational euler_number(int n) {
  return pow(Rational(2), n) * poly_coeffs(PolyKind::euler, n)(Rational(1, 2));
}

Rational periodic_eval(PolyKind kind, int n, const Rational& x, Limit lim) {
  const PolySpec& p = poly_coeffs(kind, n);
  const mpz_class fl = x.floor();
  const Rational f = x - Rational(fl);
  const bool odd_floor = mpz_odd_p(fl.get_mpz_t()) != 0;
  if (kind == PolyKind::bernoulli) {
    if (!f.is_zero() || n != 1) {
      if (!f.is_zero()) return p(f);
      // Continuous at integers for n != 1.
      return (lim == Limit::left) ? p(Rational(1)) : p(Rational(0));
    }
    switch (lim) {
      case Limit::right: return p(Rational(0));
      case Limit::left: return p(Rational(1));
      default: return Rational(0);
    }
  }
  const Rational s = odd_floor ? Rational(-1) : Rational(1);
  if (!f.is_zero()) return s * p(f);
  const Rational right = s * p(Rational(0));
  const Rational left = -s * p(Rational(1));
  switch (lim) {
    case Limit::left: return left;
    case Limit::average: return (left + right) / Rational(2);
    default: return right;
  }
}

double periodic_eval(PolyKind kind, int n, double x, Limit lim) {
  const PolySpec& p = poly_coeffs(kind, n);
  const double fl = std::floor(x);
  const double f = x - fl;
  const bool odd_floor = std::fmod(std::fabs(fl), 2.0) == 1.0;
  if (kind == PolyKind::bernoulli) {
    if (f != 0.0) return p(f);
    if (n != 1) return lim == Limit::left ? p(1.0) : p(0.0);
    switch (lim) {
      case Limit::right: return -0.5;
      case Limit::left: return 0.5;
      default: return 0.0;
    }
  }
  const double s = odd_floor ? -1.0 : 1.0;
  if (f != 0.0) return s * p(f);
  const double right = s * p(0.0);
  const double left = -s * p(1.0);
  switch (lim) {
    case Limit::left: return left;
    case Limit::average: return 0.5 * (left + right);
    default: return right;
  }
}

// ---- CharPeriodic ----

CharPeriodic::CharPeriodic(PolyKind kind, int order, const DirichletCharacter& chi)
    : kind_(kind), m_(order), chi_(chi) {
  const long k = chi_.modulus();
  if (kind_ == PolyKind::euler) {
    if (k % 2 == 0) throw HypothesisError("character Euler function needs an odd modulus");
    if (m_ < 0) throw DomainError("character Euler function needs order >= 0");
    scale_ = pow(Rational(k), m_);
  } else {
    if (m_ < 1) throw DomainError("character Bernoulli function needs order >= 1");
    scale_ = pow(Rational(k), m_ - 1);
  }
  wc_.resize(k);
  if (chi_.is_real()) wq_.resize(k);
  for (long j = 0; j < k; ++j) {
    const double sgn = (kind_ == PolyKind::euler && (j % 2 == 1)) ? -1.0 : 1.0;
    wc_[j] = sgn * std::conj(chi_.complex(j));
    if (chi_.is_real()) wq_[j] = Rational(static_cast<long>(sgn) * chi_.sign(j));
  }
}

Rational CharPeriodic::exact(const Rational& x, Limit lim) const {
  if (!chi_.is_real()) throw HypothesisError("exact evaluation needs a real character");
  const long k = chi_.modulus();
  Rational acc(0);
  for (long j = 0; j < k; ++j) {
    if (wq_[j].is_zero()) continue;
    acc += wq_[j] * periodic_eval(kind_, m_, (Rational(j) + x) / Rational(k), lim);
  }
  return scale_ * acc;
}

Complex CharPeriodic::value(const Rational& x, Limit lim) const {
  if (chi_.is_real()) return {exact(x, lim).to_double(), 0.0};
  const long k = chi_.modulus();
  Complex acc{0.0, 0.0};
  for (long j = 0; j < k; ++j) {
    if (wc_[j] == Complex{0.0, 0.0}) continue;
    acc += wc_[j] * periodic_eval(kind_, m_, (Rational(j) + x) / Rational(k), lim).to_double();
  }
  return scale_.to_double() * acc;
}

Cyclotomic CharPeriodic::cyclotomic(const Rational& x, int d, Limit lim) const {
  const long k = chi_.modulus();
  Cyclotomic acc(d);
  for (long j = 0; j < k; ++j) {
    if (chi_(j).is_zero()) continue;
    Cyclotomic w = chi_(j).conj().to_cyclotomic(d);
    Rational t = periodic_eval(kind_, m_, (Rational(j) + x) / Rational(k), lim);
    if (kind_ == PolyKind::euler && (j % 2 == 1)) t = -t;
    w *= t;
    acc += w;
  }
  acc *= scale_;
  return acc;
}

Complex CharPeriodic::operator()(double x, Limit lim) const {
  const long k = chi_.modulus();
  const double kd = static_cast<double>(k);
  Complex acc{0.0, 0.0};
  for (long j = 0; j < k; ++j) {
    if (wc_[j] == Complex{0.0, 0.0}) continue;
    acc += wc_[j] * periodic_eval(kind_, m_, (static_cast<double>(j) + x) / kd, lim);
  }
  return scale_.to_double() * acc;
}

double CharPeriodic::real(double x, Limit lim) const {
  if (!chi_.is_real()) throw HypothesisError("real evaluation needs a real character");
  const long k = chi_.modulus();
  const double kd = static_cast<double>(k);
  double acc = 0.0;
  for (long j = 0; j < k; ++j) {
    const double w = wc_[j].real();
    if (w == 0.0) continue;
    acc += w * periodic_eval(kind_, m_, (static_cast<double>(j) + x) / kd, lim);
  }
  return scale_.to_double() * acc;
}

Rational CharPeriodic::polynomial_exact(const Rational& x) const {
  if (kind_ != PolyKind::euler) throw DomainError("polynomial form defined for the euler kind");
  const auto zeros = euler_char_zero_values(chi_, m_);
  Rational acc(0);
  for (int j = 0; j <= m_; ++j) acc += Rational(binomial(m_, j)) * zeros[j] * pow(x, m_ - j);
  return acc;
}

Complex CharPeriodic::polynomial(const Rational& x) const {
  if (chi_.is_real()) return {polynomial_exact(x).to_double(), 0.0};
  if (kind_ != PolyKind::euler) throw DomainError("polynomial form defined for the euler kind");
  const auto zeros = euler_char_zero_values_c(chi_, m_);
  const double xd = x.to_double();
  Complex acc{0.0, 0.0};
  for (int j = 0; j <= m_; ++j) {
    acc += binomial(m_, j).get_d() * zeros[j] * std::pow(xd, m_ - j);
  }
  return acc;
}

Rational char_periodic_exact(const CharPeriodicSpec& spec, const Rational& x, Limit lim) {
  return CharPeriodic(spec).exact(x, lim);
}

Complex char_periodic_eval(const CharPeriodicSpec& spec, const Rational& x, Limit lim) {
  return CharPeriodic(spec).value(x, lim);
}

std::vector<Rational> euler_char_zero_values(const DirichletCharacter& chi, int n) {
  std::vector<Rational> out;
  for (int m = 0; m <= n; ++m) out.push_back(CharPeriodic(PolyKind::euler, m, chi).exact(Rational(0)));
  return out;
}

std::vector<Complex> euler_char_zero_values_c(const DirichletCharacter& chi, int n) {
  std::vector<Complex> out;
  for (int m = 0; m <= n; ++m) out.push_back(CharPeriodic(PolyKind::euler, m, chi).value(Rational(0)));
  return out;
}

}  // namespace charboole
