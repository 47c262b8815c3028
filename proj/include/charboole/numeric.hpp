#pragma once

#include <complex>

namespace charboole {

using Complex = std::complex<double>;

// Throws NonFiniteError if either component is NaN or infinite.
Complex require_finite(Complex z, const char* what);
double require_finite(double x, const char* what);

// Hurwitz zeta ζ(s, a) = Σ_{n≥0} (n + a)^{-s}, analytically continued to all s ≠ 1.
// Euler–Maclaurin with a shifted head sum; |error| <= tol.
Complex hurwitz_zeta(Complex s, double a, double tol = 1e-14);

// log Γ(x) for real x > 0.
double log_gamma(double x);

// m-th derivative of the digamma function at x > 0 (m = 0 gives ψ(x)).
double polygamma(int m, double x);

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

}  // namespace charboole
