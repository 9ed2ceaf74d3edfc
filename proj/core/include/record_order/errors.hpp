#pragma once

#include <stdexcept>
#include <string>

namespace record_order {

// Thrown when sf or cdf has underflowed to zero so that a hazard-type
// quantity is no longer representable at the requested point.
class SupportExhausted : public std::runtime_error {
public:
  explicit SupportExhausted(const std::string& msg) : std::runtime_error(msg) {}
};

// A ratio limit at 0+ or +infinity failed to converge to a positive finite value.
class NonFiniteLimit : public std::runtime_error {
public:
  explicit NonFiniteLimit(const std::string& msg) : std::runtime_error(msg) {}
};

// psi_1 is identically zero, so ratios involving index 1 are degenerate.
class DegenerateRatio : public std::invalid_argument {
public:
  explicit DegenerateRatio(const std::string& msg) : std::invalid_argument(msg) {}
};

// Sequential record scan exceeded its per-sample draw budget.
class DrawCapExceeded : public std::runtime_error {
public:
  explicit DrawCapExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

// Adaptive quadrature could not reach the requested tolerance.
class QuadratureNonConvergence : public std::runtime_error {
public:
  explicit QuadratureNonConvergence(const std::string& msg) : std::runtime_error(msg) {}
};

// Sequence acceleration diverged (residual grew instead of shrinking).
class OscillatingSequence : public std::runtime_error {
public:
  explicit OscillatingSequence(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace record_order
