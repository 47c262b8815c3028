#include "charboole/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace charboole {

void QuadratureSpec::validate() const {
  if (!(lower < upper)) throw DomainError("QuadratureSpec: lower must be < upper");
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) throw DomainError("QuadratureSpec: tolerances must be > 0");
  double prev = lower;
  for (double b : breakpoints) {
    if (!(b > prev) || !(b < upper)) {
      throw DomainError("QuadratureSpec: breakpoints must be sorted and strictly interior");
    }
    prev = b;
  }
}

QuadratureSpec QuadratureSpec::with_lattice_breaks(double lower, double upper, long denominator) {
  QuadratureSpec spec;
  spec.lower = lower;
  spec.upper = upper;
  spec.add_lattice_breaks(denominator);
  return spec;
}

QuadratureSpec& QuadratureSpec::add_lattice_breaks(long denominator) {
  const double d = static_cast<double>(denominator);
  const long first = static_cast<long>(std::floor(lower * d)) + 1;
  const long last = static_cast<long>(std::ceil(upper * d)) - 1;
  for (long i = first; i <= last; ++i) {
    const double x = static_cast<double>(i) / d;
    if (x > lower && x < upper) breakpoints.push_back(x);
  }
  std::sort(breakpoints.begin(), breakpoints.end());
  // Lattice points from different denominators coincide up to rounding; merge them.
  std::vector<double> merged;
  for (double b : breakpoints) {
    if (merged.empty() || b - merged.back() > 1e-12 * std::max(1.0, std::abs(b))) merged.push_back(b);
  }
  breakpoints = std::move(merged);
  return *this;
}

namespace detail {

const std::array<std::pair<double, double>, 8>& gauss_legendre16() {
  static const std::array<std::pair<double, double>, 8> nodes{{
      {0.0950125098376374401853193, 0.1894506104550684962853967},
      {0.2816035507792589132304605, 0.1826034150449235888667637},
      {0.4580167776572273863424194, 0.1691565193950025381893121},
      {0.6178762444026437484466718, 0.1495959888165767320815017},
      {0.7554044083550030338951012, 0.1246289712555338720524763},
      {0.8656312023878317438804679, 0.0951585116824927848099251},
      {0.9445750230732325760779884, 0.0622535239386478928628438},
      {0.9894009349916499325961542, 0.0271524594117540948517806},
  }};
  return nodes;
}

}  // namespace detail
}  // namespace charboole
