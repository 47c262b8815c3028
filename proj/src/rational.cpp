#include "charboole/rational.hpp"

#include <cmath>

#include <mutex>
#include <ostream>
#include <shared_mutex>
#include <stdexcept>
#include <deque>

#include "charboole/errors.hpp"

namespace charboole {

Rational::Rational(long num, long den) : q_(num, den) {
  if (den == 0) throw DomainError("Rational: zero denominator");
  q_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) : q_(num, den) {
  if (den == 0) throw DomainError("Rational: zero denominator");
  q_.canonicalize();
}

Rational Rational::from_double(double x) {
  if (!std::isfinite(x)) throw DomainError("Rational::from_double: value is not finite");
  return Rational(mpq_class(x));
}

long double Rational::to_long_double() const {
  const double hi = q_.get_d();
  const mpq_class rest = q_ - mpq_class(hi);
  return static_cast<long double>(hi) + static_cast<long double>(rest.get_d());
}

Rational Rational::parse(const std::string& text) {
  mpq_class q;
  if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0) {
    throw std::invalid_argument("not a rational number: '" + text + "'");
  }
  q.canonicalize();
  return Rational(q);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("Rational: division by zero");
  q_ /= o.q_;
  return *this;
}

mpz_class Rational::floor() const {
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return out;
}

Rational Rational::frac() const { return *this - Rational(floor()); }

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& r, long e) {
  if (e < 0) return Rational(1) / pow(r, -e);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), r.raw().get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), r.raw().get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(num, den);
}

mpz_class binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

mpz_class factorial(long n) {
  if (n < 0) throw DomainError("factorial of a negative integer");
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

const Rational& bernoulli_number(int n) {
  if (n < 0) throw DomainError("bernoulli_number: negative index");
  static std::shared_mutex mutex;
  static std::deque<Rational> cache{Rational(1)};
  {
    std::shared_lock lock(mutex);
    if (static_cast<std::size_t>(n) < cache.size()) return cache[n];
  }
  std::unique_lock lock(mutex);
  // sum_{j=0}^{m} C(m+1, j) B_j = 0
  for (int m = static_cast<int>(cache.size()); m <= n; ++m) {
    Rational acc;
    for (int j = 0; j < m; ++j) acc += Rational(binomial(m + 1, j)) * cache[j];
    cache.push_back(-acc / Rational(m + 1));
  }
  return cache[n];
}

}  // namespace charboole
