#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace record_order {

enum class Direction { Increasing, Decreasing };

// Adaptive Gauss-Kronrod quadrature of f over [lo, hi]; hi may be +infinity,
// in which case the tail is folded onto [0,1) via t = x/(1-x). The result
// satisfies |error| <= rel_tol*|result| + 1e-300 or QuadratureNonConvergence
// is thrown (refinement depth capped at 60). Reversed bounds negate the sign.
double integrate_adaptive(const std::function<double(double)>& f, double lo, double hi,
                          double rel_tol = 1e-10);

struct MaxResult {
  double arg;
  double value;
};

// Golden-section maximization inside a bracket a < b < c with
// f(b) >= f(a) and f(b) >= f(c); converges to rel_tol in the argument.
MaxResult golden_section_max(const std::function<double(double)>& f, double a, double b,
                             double c, double rel_tol = 1e-10);

struct LimitEstimate {
  double value = 0.0;
  double residual = 0.0;           // spread of the last acceleration sweep
  std::vector<double> sweep_best;  // accelerated estimate after each sweep
};

// Accelerated limit of a convergent sequence (iterated Aitken delta-squared;
// exact on a + b*r^k with |r| < 1). Needs at least 5 iterates. Throws
// OscillatingSequence when acceleration makes the residual grow.
LimitEstimate extrapolate_limit(const std::vector<double>& iterates);

struct MonotoneResult {
  bool pass = true;
  std::ptrdiff_t first_violation = -1;  // index of the first offending value
  double margin = 0.0;                  // smallest signed relative slack seen
};

// Weak monotonicity on a sampled sequence; `slack` is relative to the local
// magnitude, so constant runs always pass.
MonotoneResult monotone_grid_test(const std::vector<double>& values, Direction direction,
                                  double slack = 1e-9);

}  // namespace record_order
