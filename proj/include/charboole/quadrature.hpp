#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <type_traits>
#include <utility>
#include <vector>

#include "charboole/errors.hpp"

namespace charboole {

struct QuadratureSpec {
  double lower = 0.0;
  double upper = 1.0;
  std::vector<double> breakpoints;  // strictly inside (lower, upper), ascending
  double rel_tol = 1e-13;
  double abs_tol = 1e-15;
  int max_depth = 40;

  // Throws DomainError unless lower < upper, breakpoints are sorted and interior,
  // and both tolerances are positive.
  void validate() const;

  // Spec whose breakpoints are every multiple of 1/denominator strictly inside the range.
  static QuadratureSpec with_lattice_breaks(double lower, double upper, long denominator = 1);
  // Adds multiples of 1/denominator to the existing breakpoints (kept sorted, deduplicated).
  QuadratureSpec& add_lattice_breaks(long denominator);
};

template <class T>
struct QuadratureResult {
  T value{};
  double error_estimate = 0.0;
  int evaluations = 0;
};

namespace detail {

// 16-point Gauss–Legendre nodes (positive half) and weights on [-1, 1].
const std::array<std::pair<double, double>, 8>& gauss_legendre16();

inline double magnitude(double x) { return std::abs(x); }
inline double magnitude(std::complex<double> z) { return std::abs(z); }

template <class T, class F>
T gauss16(F& f, double a, double b, int& evals) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  T acc{};
  for (const auto& [x, w] : gauss_legendre16()) {
    acc += w * (f(mid - half * x) + f(mid + half * x));
  }
  evals += 16;
  return acc * half;
}

template <class T, class F>
void adapt(F& f, double a, double b, T whole, const QuadratureSpec& spec, double panel_abs_tol,
           int depth, QuadratureResult<T>& out) {
  const double mid = 0.5 * (a + b);
  T left = gauss16<T>(f, a, mid, out.evaluations);
  T right = gauss16<T>(f, mid, b, out.evaluations);
  T refined = left + right;
  const double diff = magnitude(refined - whole);
  if (diff <= std::max(panel_abs_tol, spec.rel_tol * magnitude(refined))) {
    out.value += refined;
    out.error_estimate += diff;
    return;
  }
  if (depth >= spec.max_depth) {
    throw ConvergenceError("integrate_piecewise: depth limit reached near x = " + std::to_string(mid));
  }
  adapt(f, a, mid, left, spec, 0.5 * panel_abs_tol, depth + 1, out);
  adapt(f, mid, b, right, spec, 0.5 * panel_abs_tol, depth + 1, out);
}

}  // namespace detail

// Adaptive 16-point Gauss–Legendre over each panel between consecutive breakpoints.
// f may return double or std::complex<double>; it is never evaluated at panel endpoints.
template <class F>
auto integrate_piecewise(F&& f, const QuadratureSpec& spec)
    -> QuadratureResult<std::decay_t<std::invoke_result_t<F&, double>>> {
  using T = std::decay_t<std::invoke_result_t<F&, double>>;
  spec.validate();
  QuadratureResult<T> out;
  std::vector<double> edges;
  edges.reserve(spec.breakpoints.size() + 2);
  edges.push_back(spec.lower);
  edges.insert(edges.end(), spec.breakpoints.begin(), spec.breakpoints.end());
  edges.push_back(spec.upper);
  const double span = spec.upper - spec.lower;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    const double a = edges[i];
    const double b = edges[i + 1];
    T whole = detail::gauss16<T>(f, a, b, out.evaluations);
    const double panel_tol = spec.abs_tol * (b - a) / span;
    detail::adapt(f, a, b, whole, spec, panel_tol, 0, out);
  }
  return out;
}

}  // namespace charboole
