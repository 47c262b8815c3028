#include "charboole/characters.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "charboole/errors.hpp"
#include "json.hpp"

namespace charboole {

namespace {

long mulmod(long a, long b, long m) { return static_cast<long>((static_cast<__int128>(a) * b) % m); }

std::vector<std::pair<long, int>> factorize(long n) {
  std::vector<std::pair<long, int>> out;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) { n /= p; ++e; }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

long ipow(long b, int e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Multiplicative order of g modulo m (g a unit).
long order_mod(long g, long m) {
  long x = g % m;
  long n = 1;
  while (x != 1 % m) {
    x = mulmod(x, g, m);
    ++n;
  }
  return n;
}

// x ≡ r mod q and x ≡ 1 mod (k/q), with gcd(q, k/q) = 1.
long crt_lift(long r, long q, long k) {
  const long rest = k / q;
  for (long x = r % q; x < k; x += q) {
    if (x % rest == 1 % rest) return x;
  }
  throw DomainError("crt_lift: no solution");
}

struct FactorData {
  CyclicFactor factor;
  long prime_power;  // modulus of the local component
  std::vector<long> dlog;  // discrete log of (n mod prime_power) wrt generator; -1 if not in <g>
};

// Local discrete-log tables. For 2^e, e >= 3 the two generators -1 and 5 split
// each unit u as u = (-1)^a 5^b mod 2^e.
std::vector<FactorData> factor_tables(long k) {
  std::vector<FactorData> out;
  for (auto [p, e] : factorize(k)) {
    const long q = ipow(p, e);
    if (p != 2) {
      const long phi = q / p * (p - 1);
      long g = 2;
      for (;; ++g) {
        if (std::gcd(g, q) != 1) continue;
        if (order_mod(g, q) == phi) break;
      }
      FactorData fd{{p, crt_lift(g, q, k), phi}, q, std::vector<long>(q, -1)};
      long x = 1;
      for (long i = 0; i < phi; ++i) {
        fd.dlog[x] = i;
        x = mulmod(x, g, q);
      }
      out.push_back(std::move(fd));
    } else if (e >= 2) {
      // Component of -1.
      FactorData minus{{2, crt_lift(q - 1, q, k), 2}, q, std::vector<long>(q, -1)};
      std::vector<long> five_log(q, -1);
      const long ord5 = (e >= 3) ? q / 4 : 1;
      long x = 1;
      for (long i = 0; i < ord5; ++i) {
        five_log[x] = i;
        five_log[q - x] = i;
        minus.dlog[x] = 0;
        minus.dlog[q - x] = 1;
        x = mulmod(x, 5, q);
      }
      out.push_back(std::move(minus));
      if (e >= 3) {
        out.push_back(FactorData{{2, crt_lift(5, q, k), ord5}, q, std::move(five_log)});
      }
    }
  }
  return out;
}

}  // namespace

// ---- CharacterValue ----

CharacterValue CharacterValue::root(const Rational& exponent) {
  CharacterValue v;
  v.zero_ = false;
  v.exponent_ = exponent.frac();
  return v;
}

bool CharacterValue::is_real() const {
  return zero_ || exponent_.is_zero() || exponent_ == Rational(1, 2);
}

Rational CharacterValue::to_rational() const {
  if (zero_) return Rational(0);
  if (exponent_.is_zero()) return Rational(1);
  if (exponent_ == Rational(1, 2)) return Rational(-1);
  throw DomainError("CharacterValue: non-real value " + str());
}

Complex CharacterValue::to_complex() const {
  if (zero_) return {0.0, 0.0};
  // Exact embeddings for the real and quarter-turn values.
  const Rational& e = exponent_;
  if (e.is_zero()) return {1.0, 0.0};
  if (e == Rational(1, 2)) return {-1.0, 0.0};
  if (e == Rational(1, 4)) return {0.0, 1.0};
  if (e == Rational(3, 4)) return {0.0, -1.0};
  const double th = 2.0 * kPi * e.to_double();
  return {std::cos(th), std::sin(th)};
}

CharacterValue CharacterValue::conj() const {
  if (zero_) return *this;
  return root(-exponent_);
}

CharacterValue operator*(const CharacterValue& a, const CharacterValue& b) {
  if (a.zero_ || b.zero_) return CharacterValue();
  return CharacterValue::root(a.exponent_ + b.exponent_);
}

bool operator==(const CharacterValue& a, const CharacterValue& b) {
  if (a.zero_ || b.zero_) return a.zero_ == b.zero_;
  return a.exponent_ == b.exponent_;
}

std::string CharacterValue::str() const { return zero_ ? "0" : exponent_.str(); }

const char* to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

// ---- DirichletCharacter ----

DirichletCharacter::DirichletCharacter(long modulus, std::vector<long> index)
    : k_(modulus), index_(std::move(index)) {
  if (k_ < 1) throw DomainError("DirichletCharacter: modulus must be >= 1");
  const auto tables = factor_tables(k_);
  if (tables.size() != index_.size()) {
    throw DomainError("DirichletCharacter: index vector has wrong length");
  }
  for (std::size_t i = 0; i < tables.size(); ++i) {
    index_[i] %= tables[i].factor.order;
    if (index_[i] < 0) index_[i] += tables[i].factor.order;
  }
  values_.resize(k_);
  complex_.resize(k_);
  for (long n = 0; n < k_; ++n) {
    if (std::gcd(n, k_) != 1) {
      values_[n] = CharacterValue::zero();
      continue;
    }
    Rational e(0);
    for (std::size_t i = 0; i < tables.size(); ++i) {
      const auto& t = tables[i];
      const long l = t.dlog[n % t.prime_power];
      e += Rational(index_[i] * l % t.factor.order, t.factor.order);
    }
    values_[n] = CharacterValue::root(e);
  }
  if (k_ == 1) values_[0] = CharacterValue::one();
  for (long n = 0; n < k_; ++n) {
    complex_[n] = values_[n].to_complex();
    real_ = real_ && values_[n].is_real();
  }
  parity_ = (values_[reduce(-1)] == CharacterValue::one()) ? Parity::even : Parity::odd;

  conductor_ = k_;
  for (long f = 1; f < k_; ++f) {
    if (k_ % f != 0) continue;
    bool induced = true;
    for (long n = 1; n < k_ && induced; n += f) {
      if (std::gcd(n, k_) == 1 && !(values_[n] == CharacterValue::one())) induced = false;
    }
    if (induced) {
      conductor_ = f;
      break;
    }
  }
}

int DirichletCharacter::sign(long n) const {
  const Rational r = (*this)(n).to_rational();
  return r.sign();
}

Cyclotomic CharacterValue::to_cyclotomic(int d) const {
  if (zero_) return Cyclotomic(d);
  const Rational t = exponent_ * Rational(d);
  if (t.denominator() != 1) throw DomainError("CharacterValue: order does not divide " + std::to_string(d));
  return Cyclotomic::root(d, t.numerator().get_si());
}

int DirichletCharacter::value_order() const {
  long d = 1;
  for (const auto& v : values_) {
    if (!v.is_zero()) d = std::lcm(d, v.exponent().denominator().get_si());
  }
  return static_cast<int>(d);
}

DirichletCharacter DirichletCharacter::conjugate() const {
  std::vector<long> neg(index_.size());
  for (std::size_t i = 0; i < index_.size(); ++i) neg[i] = -index_[i];
  return DirichletCharacter(k_, std::move(neg));
}

std::string DirichletCharacter::label() const {
  std::ostringstream os;
  os << "chi[" << k_ << "](";
  for (std::size_t i = 0; i < index_.size(); ++i) os << (i ? "," : "") << index_[i];
  os << ")";
  return os.str();
}

// ---- free functions ----

std::vector<CyclicFactor> generators(long k) {
  if (k < 1) throw DomainError("generators: k must be >= 1");
  std::vector<CyclicFactor> out;
  for (const auto& t : factor_tables(k)) out.push_back(t.factor);
  return out;
}

long euler_phi(long k) {
  long phi = k;
  for (auto [p, e] : factorize(k)) phi = phi / p * (p - 1);
  return phi;
}

std::vector<DirichletCharacter> enumerate_characters(long k) {
  if (k < 2) throw DomainError("enumerate_characters: k must be >= 2");
  const auto gens = generators(k);
  std::vector<DirichletCharacter> out;
  std::vector<long> idx(gens.size(), 0);
  while (true) {
    out.emplace_back(k, idx);
    // Odometer increment, last position fastest.
    std::size_t pos = idx.size();
    while (pos > 0) {
      --pos;
      if (++idx[pos] < gens[pos].order) break;
      idx[pos] = 0;
      if (pos == 0) return out;
    }
    if (idx.empty()) return out;
  }
}

CharacterValue char_value(const DirichletCharacter& chi, long n) { return chi(n); }

long conductor(const DirichletCharacter& chi) { return chi.conductor(); }

std::optional<DirichletCharacter> real_primitive_character(long k) {
  for (auto& chi : enumerate_characters(k)) {
    if (chi.is_real() && chi.is_primitive() && !chi.is_principal()) return chi;
  }
  return std::nullopt;
}

std::vector<DirichletCharacter> primitive_characters(long k) {
  std::vector<DirichletCharacter> out;
  for (auto& chi : enumerate_characters(k)) {
    if (chi.is_primitive()) out.push_back(chi);
  }
  return out;
}

std::string character_json(const DirichletCharacter& chi) {
  nlohmann::ordered_json j;
  j["modulus"] = chi.modulus();
  j["conductor"] = chi.conductor();
  j["parity"] = to_string(chi.parity());
  j["real"] = chi.is_real();
  j["index"] = chi.index();
  auto vals = nlohmann::ordered_json::array();
  for (const auto& v : chi.values()) {
    if (v.is_zero()) vals.push_back(nullptr);
    else vals.push_back(v.exponent().str());
  }
  j["values"] = vals;
  return j.dump();
}

}  // namespace charboole
