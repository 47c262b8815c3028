#pragma once

#include <optional>
#include <string>

#include "charboole/characters.hpp"
#include "charboole/eulerfun.hpp"

namespace charboole {

// definition: the sums as defined, n = 1..ck.
// proof: the normalisation the reciprocity proof produces (factor 2; S^(1) includes n = 0).
enum class HBConvention { definition, proof };
const char* to_string(HBConvention c);

struct HBParams {
  int p = 1;
  long b = 1;
  long c = 1;
  DirichletCharacter chi;
  HBConvention convention = HBConvention::proof;
  bool float_path = false;  // evaluate in complex doubles instead of exactly
};

// S(b, c) = Σ_{n=1}^{c-1} (-1)^{n+1+⌊bn/c⌋}
long hardy_S(long b, long c);

struct SChiResult {
  ExactOrComplex definition;
  // χ̄(2) 2^{-p} Σ χ(n) B̄_{p,χ̄}(bn/c) - p χ̄(2)/2^{p+1} Σ (-1)^n χ(n) Ē_{p-1,χ̄}(bn/c); p >= 2.
  std::optional<ExactOrComplex> modified;
  bool closed_form_used = false;  // first sum taken from its closed form
};

// S_p(b, c : χ) = Σ_{n=1}^{ck} χ(n) B̄_{p,χ̄}(n (b + ck)/2c)
SChiResult S_chi(const HBParams& q);
// S_p^(1)(b, c : χ) = Σ_{n=1}^{ck} (-1)^n Ē_{p,χ̄}(bn/c)
ExactOrComplex S1(const HBParams& q);
// S_p^(2)(b, c : χ) = Σ_{n=1}^{ck} (-1)^n χ(n) Ē_p(bn/c)
ExactOrComplex S2(const HBParams& q);

struct ReciprocityReport {
  ExactOrComplex lhs;
  ExactOrComplex rhs;
  std::optional<Rational> exact_defect;  // lhs - rhs, real characters
  bool exact = false;                    // decided by exact arithmetic
  double defect = 0.0;                   // |lhs - rhs|
  bool pass = false;
  std::string form;
};

// c^p S_p^(1)(b,c:χ̄) + b^p S_p^(2)(c,b:χ) = 2 Σ_j C(p,j) c^j b^{p-j} Ē_{j,χ̄}(0) E_{p-j}(0)
// needs b + c odd and χ(-1)(-1)^p = 1.
ReciprocityReport recip2_defect(const HBParams& q, double tol = 1e-10);

// corrected: χ(-2)[b c^p S_p(b,c:χ) + c b^p S_p(c,b:χ)]
//              = -(p/2^{p+1}) Σ_{j=1}^p (-1)^j C(p-1,j-1) c^j b^{p+1-j} Ē_{j-1,χ̄}(0) Ē_{p-j,χ̄}(0)
// printed:   χ̄(-2) b c^p S_p(b,c:χ) + χ(-2) c b^p S_p(c,b:χ̄)
//              = (p/2^{p+1}) Σ_j (-1)^j C(p-1,j-1) c^j b^{p+1-j} Ē_{j-1,χ}(0) Ē_{p-j,χ̄}(0)
// needs p > 1 odd and b + c odd.
enum class Recip1Form { corrected, printed };
const char* to_string(Recip1Form f);
ReciprocityReport recip1_defect(const HBParams& q, Recip1Form form = Recip1Form::corrected,
                                bool use_modified = false, double tol = 1e-10);

struct IntegralCheck {
  Complex value;        // quadrature
  Complex closed_form;
  double defect = 0.0;  // |value - closed_form|
  std::string branch;   // "p odd, b+c even" / "p even, b+c odd" / "p even, b+c even"
};

// ∫_0^k Ē_{l,χ̄}(cx) Ē_{p-2-l,χ}(bx) dx against its closed form; 0 <= l <= p - 2.
// The p even, b + c even form needs gcd(b, c) = 1.  For p even, b + c odd every
// term of the closed form carries a vanishing Ē_{j,χ}(0), so the value is 0.
IntegralCheck euler_integral_closed(int l, int p, long b, long c, const DirichletCharacter& chi);

}  // namespace charboole
