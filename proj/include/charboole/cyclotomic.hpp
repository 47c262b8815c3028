#pragma once

#include <string>
#include <vector>

#include "charboole/numeric.hpp"
#include "charboole/rational.hpp"

namespace charboole {

// Element of the cyclotomic field Q(ζ_d), ζ_d = exp(2πi/d), stored as a polynomial
// in ζ_d of degree < d.  Products are taken mod ζ^d = 1; reduce() brings the
// polynomial to canonical form mod Φ_d so that equality is exact.
class Cyclotomic {
 public:
  explicit Cyclotomic(int d = 1);
  Cyclotomic(int d, const Rational& r);
  // ζ_d^e
  static Cyclotomic root(int d, long e);

  int order() const { return d_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Rational& r);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  Cyclotomic operator-() const;

  Cyclotomic conj() const;
  // Canonical representative mod Φ_d (degree < φ(d)).
  Cyclotomic reduced() const;
  bool is_zero() const;  // exact, via reduction
  Complex to_complex() const;
  // e.g. "70/9 + 106/9*z4" with zd = exp(2πi/d), reduced form.
  std::string str() const;

 private:
  void check(const Cyclotomic& o) const;
  int d_;
  std::vector<Rational> c_;
};

// Integer coefficients of the d-th cyclotomic polynomial, ascending.
const std::vector<Rational>& cyclotomic_polynomial(int d);

}  // namespace charboole
