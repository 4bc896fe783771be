#pragma once

#include <stdexcept>
#include <string>

namespace giso {

// Thrown when a condition polynomial degenerates to the zero polynomial.
// This is a meaningful outcome (the condition holds identically), not a bug.
struct ZeroPolynomialError : std::runtime_error {
  ZeroPolynomialError()
      : std::runtime_error(
            "identically zero: condition holds for all parameter values") {}
};

// Thrown when an exact polynomial division that must succeed leaves a
// remainder.
struct FactorizationError : std::runtime_error {
  explicit FactorizationError(const std::string& what)
      : std::runtime_error(what) {}
};

// Thrown when an iterative scheme fails to stabilize within its budget.
struct ConvergenceError : std::runtime_error {
  explicit ConvergenceError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace giso
