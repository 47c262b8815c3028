#pragma once

#include <stdexcept>
#include <string>

namespace charboole {

// Argument outside the mathematical domain of an operation (a <= 0, x <= 0, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Evaluation at a pole (hurwitz_zeta at s = 1, Weierstrass product at an excluded point).
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

// A theorem's hypotheses do not hold for the supplied parameters
// (non-primitive character, even modulus, parity condition, b + c parity).
class HypothesisError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Adaptive refinement or an iterative scheme failed to reach its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A NaN or infinity surfaced in a value that must stay finite.
class NonFiniteError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace charboole
