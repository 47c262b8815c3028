#pragma once

#include <optional>
#include <string>
#include <vector>

#include "charboole/characters.hpp"
#include "charboole/eulerfun.hpp"
#include "charboole/numeric.hpp"
#include "charboole/rational.hpp"

namespace charboole {

// ℓ(s, a, χ) = Σ_{n≥1} (-1)^n χ(n) (n + a)^{-s}, χ primitive with odd modulus.
enum class LMethod { series, hurwitz, integral };
const char* to_string(LMethod m);

struct LQuery {
  Complex s;
  double a = 0.0;
  DirichletCharacter chi;
  LMethod method = LMethod::hurwitz;
  int l = 0;  // integral route truncation; 0 picks max(3, ceil(Re(-s)) + 2)
  double tol = 1e-12;
};

struct LResult {
  Complex value;
  double error_estimate = 0.0;
  std::string route;
};

// series: block partial sums over periods of 2k with Richardson extrapolation (Re s > 0, a > -1)
// hurwitz: (2k)^{-s} Σ_{j=1}^{2k-1} (-1)^j χ(j) ζ(s, (a + j)/2k); digamma form at s = 1 (a > -1)
// integral: boundary terms in Ē_{j,χ̄}(0) a^{s-j} plus the remainder integral (a > 0)
LResult ell_eval(const LQuery& q);
inline Complex ell(const LQuery& q) { return ell_eval(q).value; }

// ℓ_s(x, a, χ) = Σ_{1≤n≤x} (-1)^n χ(n) (n + a)^s from the integral representation.
Complex ell_partial(double x, Complex s, double a, const DirichletCharacter& chi, int l);
Complex ell_partial_literal(double x, Complex s, double a, const DirichletCharacter& chi);

// ℓ(1 - p, a, χ) = E_{p-1,χ̄}(a) / 2, p >= 1.
ExactOrComplex ell_special_negint(int p, const Rational& a, const DirichletCharacter& chi);

// ℓ'(0, χ) = -½ Ē_{0,χ̄}(0) log 2k + Σ_{n=1}^{2k-1} (-1)^n χ(n) log Γ(n/2k)
Complex ell_prime0(const DirichletCharacter& chi);
// ℓ'(0, χ) from its integral over [1, ∞).
Complex ell_prime0_integral(const DirichletCharacter& chi);

struct Derivative0 {
  Complex gamma_sum;  // finite log-gamma sum
  Complex integral;   // Ē_{1,χ̄}(x)(x + a)^{-2} integral form
};
// ℓ'(0, a, χ) by both routes; a > 0.
Derivative0 ell_derivative0(double a, const DirichletCharacter& chi);

enum class GammaRoute { quotient, partial_product, log_formula };
const char* to_string(GammaRoute r);

struct GammaStarQuery {
  double a = 0.0;
  DirichletCharacter chi;
  GammaRoute route = GammaRoute::quotient;
  long N = 100000;  // partial_product truncation
};

// log Γ*(a, χ), Γ*(a, χ) = Π_{n≥1} (n/(n + a))^{(-1)^n χ(n)}; real χ, a >= 0.
double gamma_star(const GammaStarQuery& q);

// ψ*(a, χ) = (1/2k) Σ_{n=1}^{2k-1} (-1)^n χ(n) ψ((n + a)/2k); a > 0.
Complex psi_star(double a, const DirichletCharacter& chi);
// m-th derivative in a.
Complex psi_star_derivative(int m, double a, const DirichletCharacter& chi);

// ℓ(m, χ) = ℓ(m, 0, χ) in closed form by cotangent derivatives; needs χ(-1)(-1)^m = 1.
Complex ell_cot(int m, const DirichletCharacter& chi);
// d^m/dx^m cot x.
double cot_derivative(int m, double x);

struct StirlingResult {
  double partial = 0.0;
  std::vector<double> terms;  // j = 1..J of the asymptotic sum, signed as added
  double error_proxy = 0.0;   // magnitude of the first nonzero omitted term
};
// Asymptotic expansion of log Γ*(a, χ) through a^{-J}; real χ.
StirlingResult stirling_log_gamma_star(double a, const DirichletCharacter& chi, int J);

enum class GfKernel { exp, cos, sin, cosh, sinh };
const char* to_string(GfKernel k);

struct GfResult {
  std::string form;
  std::vector<Complex> coefficients;  // Taylor coefficients t^j, j = 0..J
  std::vector<Complex> expected;      // the same predicted from Ē_{j,χ̄}(0)/j!
};
// Taylor coefficients of the generating-function kernel for χ's parity.  When
// `parity` is given it must match χ (HypothesisError otherwise).
GfResult gf_coefficients(GfKernel kernel, const DirichletCharacter& chi, int J,
                         std::optional<Parity> parity = std::nullopt);

// -sℓ(1,χ) + Σ_{n≤N} (-1)^n χ(n) (s/n - log(1 + s/n)); real χ.
double weierstrass_partial(double s, const DirichletCharacter& chi, long N);

struct LogMeanResult {
  double lhs = 0.0;
  double rhs = 0.0;
  double defect = 0.0;  // |lhs - rhs|
};
// 2Σ_{1≤n<t} (-1)^n χ(n) log(t/n) against its J-term asymptotic expansion; real χ.
LogMeanResult log_mean_defect(double t, const DirichletCharacter& chi, int J);

// ∫_{x0}^{∞} Ē_{l,χ̄}(σ t) (t + a)^e dt for χ̄ = `chibar`, σ = ±1, Re(e) < 0.
Complex kernel_integral(const DirichletCharacter& chibar, int l, int sigma, double x0, double a, Complex e,
                        double tol = 1e-14);

}  // namespace charboole
