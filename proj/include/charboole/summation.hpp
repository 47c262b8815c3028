#pragma once

#include <functional>
#include <string>
#include <vector>

#include "charboole/characters.hpp"
#include "charboole/numeric.hpp"

namespace charboole {

// f and its derivatives f^{(0)}, ..., f^{(L)} supplied as callbacks.
class SmoothFunction {
 public:
  using Fn = std::function<double(double)>;

  // Each derivative is compared against a central difference of the previous one at
  // every probe point (relative tolerance 1e-5); DomainError on mismatch.
  SmoothFunction(std::string name, std::vector<Fn> derivatives, std::vector<double> probes);

  int max_order() const { return static_cast<int>(d_.size()) - 1; }
  double operator()(double x) const { return d_[0](x); }
  double derivative(int j, double x) const;
  const std::string& name() const { return name_; }

  // e^{c x}
  static SmoothFunction exponential(double c, int max_order = 12);
  // x^n
  static SmoothFunction monomial(int n, int max_order = 12);
  // (x + a)^{-sigma}, defined for x > -a
  static SmoothFunction shifted_power(double a, double sigma, int max_order = 12);
  // 1 / (x + a)
  static SmoothFunction reciprocal(double a, int max_order = 12) { return shifted_power(a, 1.0, max_order); }
  // c (constant)
  static SmoothFunction constant(double c, int max_order = 12);

 private:
  std::string name_;
  std::vector<Fn> d_;
};

struct SummationReport {
  std::string formula;
  Complex lhs;
  Complex rhs_boundary;
  Complex rhs_integral;
  Complex defect;  // lhs - (rhs_boundary + rhs_integral)
  int order = 0;
  double quad_error = 0.0;
  int quad_evaluations = 0;
};

struct SummationTolerance {
  double rel_tol = 1e-13;
  double abs_tol = 1e-14;
};

// 2 Σ_{n=alpha}^{beta-1} (-1)^n f(n) against the classical Boole formula of order l >= 1.
SummationReport boole_sum(const SmoothFunction& f, long alpha, long beta, int l,
                          const SummationTolerance& tol = {});

// Σ'_{alpha<=n<=beta} χ(n) f(n), integer endpoints weighted by 1/2, against the
// character Euler–Maclaurin formula with B̄_{j,χ̄} boundary terms; χ primitive.
SummationReport char_euler_maclaurin(const DirichletCharacter& chi, const SmoothFunction& f, double alpha,
                                     double beta, int l, const SummationTolerance& tol = {});

// 2 Σ_{alpha<n<beta} (-1)^n χ(n) f(n) against the character Boole formula with Ē_{j,χ̄}
// kernels; χ primitive with odd modulus, f needs l + 1 derivatives.
SummationReport char_boole_sum(const DirichletCharacter& chi, const SmoothFunction& f, double alpha,
                               double beta, int l, const SummationTolerance& tol = {});

}  // namespace charboole
