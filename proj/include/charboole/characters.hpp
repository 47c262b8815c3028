#pragma once

#include <optional>
#include <string>
#include <vector>

#include "charboole/cyclotomic.hpp"
#include "charboole/numeric.hpp"
#include "charboole/rational.hpp"

namespace charboole {

// Zero, or the root of unity exp(2πi·e/d) with the exponent e/d reduced into [0, 1).
class CharacterValue {
 public:
  CharacterValue() = default;  // zero
  static CharacterValue zero() { return CharacterValue(); }
  static CharacterValue one() { return root(Rational(0)); }
  static CharacterValue root(const Rational& exponent);

  bool is_zero() const { return zero_; }
  // Only meaningful when not zero.
  const Rational& exponent() const { return exponent_; }
  bool is_real() const;  // 0, 1 or -1

  // Exact value for real values (0, 1, -1); throws DomainError otherwise.
  Rational to_rational() const;
  Complex to_complex() const;
  // As an element of Q(ζ_d); d must be a multiple of the value's order.
  Cyclotomic to_cyclotomic(int d) const;
  CharacterValue conj() const;

  friend CharacterValue operator*(const CharacterValue& a, const CharacterValue& b);
  friend bool operator==(const CharacterValue& a, const CharacterValue& b);

  // "e/d" for nonzero values, "0" for zero.
  std::string str() const;

 private:
  bool zero_ = true;
  Rational exponent_;
};

enum class Parity { even, odd };
const char* to_string(Parity p);

// Immutable Dirichlet character mod k.
class DirichletCharacter {
 public:
  // index: exponent vector on the canonical generators of (ℤ/kℤ)*; see generators().
  DirichletCharacter(long modulus, std::vector<long> index);

  long modulus() const { return k_; }
  long conductor() const { return conductor_; }
  Parity parity() const { return parity_; }
  bool is_even() const { return parity_ == Parity::even; }
  bool is_real() const { return real_; }
  bool is_primitive() const { return conductor_ == k_; }
  bool is_principal() const { return conductor_ == 1; }
  const std::vector<long>& index() const { return index_; }

  const CharacterValue& operator()(long n) const { return values_[reduce(n)]; }
  // χ(n) as ±1/0; throws DomainError for non-real characters.
  int sign(long n) const;
  Complex complex(long n) const { return complex_[reduce(n)]; }
  // Least d with every value in μ_d.
  int value_order() const;
  Cyclotomic cyclotomic(long n, int d) const { return values_[reduce(n)].to_cyclotomic(d); }
  // χ(-1) as ±1.
  int at_minus_one() const { return parity_ == Parity::even ? 1 : -1; }

  DirichletCharacter conjugate() const;

  const std::vector<CharacterValue>& values() const { return values_; }

  friend bool operator==(const DirichletCharacter& a, const DirichletCharacter& b) {
    return a.k_ == b.k_ && a.index_ == b.index_;
  }

  // Short label like "chi[5](1,0)".
  std::string label() const;

 private:
  long reduce(long n) const { long r = n % k_; return r < 0 ? r + k_ : r; }

  long k_;
  std::vector<long> index_;
  std::vector<CharacterValue> values_;
  std::vector<Complex> complex_;
  long conductor_ = 1;
  Parity parity_ = Parity::even;
  bool real_ = true;
};

// One cyclic factor of (ℤ/kℤ)*: generator lifted to a residue mod k and its order.
struct CyclicFactor {
  long prime;
  long generator;
  long order;
};

// Canonical generators: one per odd prime power (least primitive root), and for 2^e
// the generators -1 (e >= 2) and 5 (e >= 3).
std::vector<CyclicFactor> generators(long k);

long euler_phi(long k);

// All φ(k) characters mod k in lexicographic order of their index vectors.
std::vector<DirichletCharacter> enumerate_characters(long k);

CharacterValue char_value(const DirichletCharacter& chi, long n);
long conductor(const DirichletCharacter& chi);

// The real primitive non-principal character mod k, if one exists.
std::optional<DirichletCharacter> real_primitive_character(long k);
// All primitive characters mod k (principal excluded unless k = 1).
std::vector<DirichletCharacter> primitive_characters(long k);

// {"modulus", "conductor", "parity", "values": ["e/d" or null]} as a JSON string.
std::string character_json(const DirichletCharacter& chi);

}  // namespace charboole
