#pragma once

#include <optional>
#include <vector>

#include "charboole/characters.hpp"
#include "charboole/numeric.hpp"
#include "charboole/rational.hpp"

namespace charboole {

enum class PolyKind { bernoulli, euler };
const char* to_string(PolyKind k);

// Which value to take at a jump of a periodic function.
//   standard: right limit for Euler functions; for Bernoulli functions the
//             mean of both limits (so B̄_1 vanishes at integers).
//   right / left: one-sided limits.
//   average: mean of the one-sided limits.
enum class Limit { standard, right, left, average };

// Exact rational when the character is real, complex double otherwise.
struct ExactOrComplex {
  std::optional<Rational> exact;        // real characters
  std::optional<Cyclotomic> cyclotomic;  // complex characters, exact in Q(ζ_d)
  Complex value;
};

struct PolySpec {
  PolyKind kind;
  int degree;
  std::vector<Rational> coeffs;  // ascending powers, length degree + 1
  std::vector<double> coeffs_d;

  Rational operator()(const Rational& x) const;
  double operator()(double x) const;
};

// B_n(x) or E_n(x); cached and thread-safe.
const PolySpec& poly_coeffs(PolyKind kind, int n);

// Euler number E_n = 2^n E_n(1/2).
Rational euler_number(int n);

// B̄_n(x) = B_n({x}), Ē_n(x) = (-1)^{⌊x⌋} E_n({x}).
Rational periodic_eval(PolyKind kind, int n, const Rational& x, Limit lim = Limit::standard);
double periodic_eval(PolyKind kind, int n, double x, Limit lim = Limit::standard);

// Character periodic functions
//   bernoulli: B̄_{m,χ}(x) = k^{m-1} Σ_{j<k} χ̄(j) B̄_m((j + x)/k),      m >= 1
//   euler:     Ē_{m,χ}(x) = k^m     Σ_{j<k} (-1)^j χ̄(j) Ē_m((j + x)/k), m >= 0, k odd
struct CharPeriodicSpec {
  PolyKind kind;
  int order;
  DirichletCharacter chi;
};

class CharPeriodic {
 public:
  CharPeriodic(PolyKind kind, int order, const DirichletCharacter& chi);
  explicit CharPeriodic(const CharPeriodicSpec& spec) : CharPeriodic(spec.kind, spec.order, spec.chi) {}

  PolyKind kind() const { return kind_; }
  int order() const { return m_; }
  const DirichletCharacter& chi() const { return chi_; }
  bool is_real() const { return chi_.is_real(); }

  // Exact value; real characters only (HypothesisError otherwise).
  Rational exact(const Rational& x, Limit lim = Limit::standard) const;
  // Any character; each periodic term is evaluated exactly before weighting.
  Complex value(const Rational& x, Limit lim = Limit::standard) const;
  // Exact value in Q(ζ_d); d must be a multiple of chi().value_order().
  Cyclotomic cyclotomic(const Rational& x, int d, Limit lim = Limit::standard) const;
  Complex operator()(double x, Limit lim = Limit::standard) const;
  // Real characters only.
  double real(double x, Limit lim = Limit::standard) const;

  // The polynomial E_{m,χ}(x) = Σ_j C(m,j) Ē_{j,χ}(0) x^{m-j} (euler kind), which
  // agrees with Ē_{m,χ} on [0, 1).
  Rational polynomial_exact(const Rational& x) const;
  Complex polynomial(const Rational& x) const;

 private:
  PolyKind kind_;
  int m_;
  DirichletCharacter chi_;
  std::vector<Rational> wq_;  // weights per residue j for real χ
  std::vector<Complex> wc_;
  Rational scale_;  // k^{m-1} or k^m
};

Rational char_periodic_exact(const CharPeriodicSpec& spec, const Rational& x, Limit lim = Limit::standard);
Complex char_periodic_eval(const CharPeriodicSpec& spec, const Rational& x, Limit lim = Limit::standard);

// Ē_{m,χ}(0) for m = 0..n; cached per call site by callers that need many.
std::vector<Rational> euler_char_zero_values(const DirichletCharacter& chi, int n);
std::vector<Complex> euler_char_zero_values_c(const DirichletCharacter& chi, int n);

}  // namespace charboole
