#include "charboole/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

#include "charboole/errors.hpp"

namespace charboole {

namespace {

// Quotient of a by monic b, exact (remainder must vanish).
std::vector<Rational> exact_divide(std::vector<Rational> a, const std::vector<Rational>& b) {
  const std::size_t db = b.size() - 1;
  std::vector<Rational> q(a.size() - db, Rational(0));
  for (std::size_t i = a.size(); i-- > db;) {
    const Rational t = a[i];
    q[i - db] = t;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= t * b[j];
  }
  return q;
}

}  // namespace

namespace {

// Caller holds the cache lock.
const std::vector<Rational>& phi_locked(std::map<int, std::vector<Rational>>& cache, int d) {
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  // Φ_d = (x^d - 1) / Π_{e | d, e < d} Φ_e
  std::vector<Rational> p(d + 1, Rational(0));
  p[0] = Rational(-1);
  p[d] = Rational(1);
  for (int e = 1; e < d; ++e) {
    if (d % e == 0) p = exact_divide(p, phi_locked(cache, e));
  }
  return cache.emplace(d, std::move(p)).first->second;
}

}  // namespace

const std::vector<Rational>& cyclotomic_polynomial(int d) {
  if (d < 1) throw DomainError("cyclotomic_polynomial: d must be >= 1");
  static std::mutex mu;
  static std::map<int, std::vector<Rational>> cache;
  std::lock_guard lock(mu);
  return phi_locked(cache, d);
}

Cyclotomic::Cyclotomic(int d) : d_(d), c_(d, Rational(0)) {
  if (d < 1) throw DomainError("Cyclotomic: order must be >= 1");
}

Cyclotomic::Cyclotomic(int d, const Rational& r) : Cyclotomic(d) { c_[0] = r; }

Cyclotomic Cyclotomic::root(int d, long e) {
  Cyclotomic z(d);
  long r = e % d;
  if (r < 0) r += d;
  z.c_[r] = Rational(1);
  return z;
}

void Cyclotomic::check(const Cyclotomic& o) const {
  if (o.d_ != d_) throw DomainError("Cyclotomic: mixed orders");
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  check(o);
  for (int i = 0; i < d_; ++i) c_[i] += o.c_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  check(o);
  for (int i = 0; i < d_; ++i) c_[i] -= o.c_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  check(o);
  std::vector<Rational> r(d_, Rational(0));
  for (int i = 0; i < d_; ++i) {
    if (c_[i].is_zero()) continue;
    for (int j = 0; j < d_; ++j) {
      if (o.c_[j].is_zero()) continue;
      r[(i + j) % d_] += c_[i] * o.c_[j];
    }
  }
  c_ = std::move(r);
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& r) {
  for (auto& x : c_) x *= r;
  return *this;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic z = *this;
  for (auto& x : z.c_) x = -x;
  return z;
}

Cyclotomic Cyclotomic::conj() const {
  Cyclotomic z(d_);
  for (int i = 0; i < d_; ++i) z.c_[(d_ - i) % d_] = c_[i];
  return z;
}

Cyclotomic Cyclotomic::reduced() const {
  const auto& phi = cyclotomic_polynomial(d_);
  const std::size_t dp = phi.size() - 1;
  std::vector<Rational> a = c_;
  for (std::size_t i = a.size(); i-- > dp;) {
    const Rational t = a[i];
    if (t.is_zero()) continue;
    for (std::size_t j = 0; j <= dp; ++j) a[i - dp + j] -= t * phi[j];
  }
  Cyclotomic z(d_);
  for (std::size_t i = 0; i < dp && i < a.size(); ++i) z.c_[i] = a[i];
  return z;
}

bool Cyclotomic::is_zero() const {
  const Cyclotomic z = reduced();
  for (const auto& x : z.c_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Complex Cyclotomic::to_complex() const {
  const Cyclotomic z = reduced();
  Complex acc{0.0, 0.0};
  for (int i = 0; i < d_; ++i) {
    if (z.c_[i].is_zero()) continue;
    acc += z.c_[i].to_double() * std::polar(1.0, 2.0 * kPi * i / d_);
  }
  return acc;
}

std::string Cyclotomic::str() const {
  const Cyclotomic z = reduced();
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < d_; ++i) {
    if (z.c_[i].is_zero()) continue;
    const Rational& a = z.c_[i];
    if (first) {
      if (a.sign() < 0) os << "-";
    } else {
      os << (a.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const Rational m = abs(a);
    if (i == 0 || m != Rational(1)) os << m.str();
    if (i > 0) os << (m != Rational(1) ? "*" : "") << "z" << d_ << (i > 1 ? "^" + std::to_string(i) : "");
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace charboole
