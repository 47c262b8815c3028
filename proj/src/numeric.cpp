#include "charboole/numeric.hpp"

#include <array>
#include <cmath>
#include <string>

#include "charboole/errors.hpp"
#include "charboole/rational.hpp"

namespace charboole {
namespace {

constexpr int kStirlingTerms = 10;
constexpr int kMaxZetaCorrections = 40;

// B_{2j} for j = 0..kMaxZetaCorrections as doubles.
const std::array<double, kMaxZetaCorrections + 1>& even_bernoulli() {
  static const auto table = [] {
    std::array<double, kMaxZetaCorrections + 1> t{};
    for (int j = 0; j <= kMaxZetaCorrections; ++j) t[j] = bernoulli_number(2 * j).to_double();
    return t;
  }();
  return table;
}

double factorial_d(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

Complex require_finite(Complex z, const char* what) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw NonFiniteError(std::string(what) + ": non-finite value");
  }
  return z;
}

double require_finite(double x, const char* what) {
  if (!std::isfinite(x)) throw NonFiniteError(std::string(what) + ": non-finite value");
  return x;
}

Complex hurwitz_zeta(Complex s, double a, double tol) {
  if (!(a > 0.0)) throw DomainError("hurwitz_zeta: a must be > 0");
  if (!(tol > 0.0)) throw DomainError("hurwitz_zeta: tol must be > 0");
  if (s == Complex(1.0, 0.0)) throw PoleError("hurwitz_zeta: pole at s = 1");

  const auto& b2 = even_bernoulli();
  // Head length: the correction series behaves like Σ |s+2j|^2 / (2π(N+a))^2 per step,
  // so N has to grow with |s|.  For Re s < 0 the head and the leading tail term both grow
  // like N^{1-s} and cancel, so start as short as possible and lengthen only on failure.
  int n_head = s.real() < 0.0 ? 1 : std::max(10, static_cast<int>(std::ceil(std::abs(s))) + 10);
  for (int attempt = 0; attempt < 16; ++attempt, n_head *= 2) {
    Complex head(0.0, 0.0);
    for (int n = 0; n < n_head; ++n) head += std::exp(-s * std::log(n + a));

    const double x = n_head + a;
    const Complex x_pow = std::exp(-s * std::log(x));  // x^{-s}
    Complex sum = head + x * x_pow / (s - 1.0) + 0.5 * x_pow;

    // term_j = B_{2j}/(2j)! · s(s+1)...(s+2j-2) · x^{-s-2j+1}
    Complex rising = s;           // s(s+1)...(s+2j-2) for j = 1
    Complex x_term = x_pow / x;   // x^{-s-1}
    double fact = 2.0;            // (2j)!
    bool converged = false;
    for (int j = 1; j <= kMaxZetaCorrections; ++j) {
      Complex term = b2[j] / fact * rising * x_term;
      sum += term;
      if (std::abs(term) < tol * 0.1) {
        converged = true;
        break;
      }
      rising *= (s + (2.0 * j - 1.0)) * (s + 2.0 * j);
      x_term /= x * x;
      fact *= (2.0 * j + 1.0) * (2.0 * j + 2.0);
    }
    if (converged) return require_finite(sum, "hurwitz_zeta");
  }
  throw ConvergenceError("hurwitz_zeta: Euler-Maclaurin corrections did not converge");
}

double log_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("log_gamma: x must be > 0");
  require_finite(x, "log_gamma");
  double shift = 0.0;
  double prod = 1.0;
  while (x < 10.0) {
    prod *= x;
    x += 1.0;
    if (prod > 1e280 || prod < 1e-280) {
      shift += std::log(prod);
      prod = 1.0;
    }
  }
  shift += std::log(prod);
  const auto& b2 = even_bernoulli();
  double series = 0.0;
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double p = inv;
  for (int k = 1; k <= kStirlingTerms; ++k) {
    series += b2[k] / (2.0 * k * (2.0 * k - 1.0)) * p;
    p *= inv2;
  }
  return (x - 0.5) * std::log(x) - x + 0.5 * std::log(2.0 * kPi) + series - shift;
}

double polygamma(int m, double x) {
  if (m < 0) throw DomainError("polygamma: order must be >= 0");
  if (!(x > 0.0)) throw DomainError("polygamma: x must be > 0");
  require_finite(x, "polygamma");

  // ψ^{(m)}(x) = ψ^{(m)}(x+1) - (-1)^m m! x^{-m-1}
  const double m_fact = factorial_d(m);
  const double sign_m = (m % 2 == 0) ? 1.0 : -1.0;
  const double x_min = std::max(10.0, m + 20.0);
  double recurrence = 0.0;
  while (x < x_min) {
    recurrence += std::pow(x, -m - 1.0);
    x += 1.0;
  }
  recurrence *= sign_m * m_fact;

  const auto& b2 = even_bernoulli();
  double asym;
  if (m == 0) {
    asym = std::log(x) - 0.5 / x;
    const double inv2 = 1.0 / (x * x);
    double p = inv2;
    for (int k = 1; k <= kStirlingTerms; ++k) {
      asym -= b2[k] / (2.0 * k) * p;
      p *= inv2;
    }
  } else {
    // (-1)^{m+1} [ (m-1)!/x^m + m!/(2x^{m+1}) + Σ B_{2k} (2k+m-1)!/((2k)! x^{2k+m}) ]
    double inner = factorial_d(m - 1) * std::pow(x, -m) + 0.5 * m_fact * std::pow(x, -m - 1.0);
    double ratio = factorial_d(m - 1);  // (2k+m-1)!/(2k)!, built incrementally
    double p = std::pow(x, -m);
    const double inv2 = 1.0 / (x * x);
    for (int k = 1; k <= kStirlingTerms; ++k) {
      // from (2k-2+m-1)!/(2k-2)! to (2k+m-1)!/(2k)!
      ratio *= (2.0 * k + m - 2.0) * (2.0 * k + m - 1.0) / ((2.0 * k - 1.0) * (2.0 * k));
      p *= inv2;
      inner += b2[k] * ratio * p;
    }
    asym = (m % 2 == 0 ? -1.0 : 1.0) * inner;
  }
  return asym - recurrence;
}

}  // namespace charboole
