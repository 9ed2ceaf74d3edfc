#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "record_order/distribution.hpp"
#include "record_order/grid.hpp"
#include "record_order/numerics.hpp"

namespace record_order {

enum class OrderRelation {
  St,
  Hr,
  Rh,
  AgingFasterHr,   // h_X/h_Y increasing   (X ages faster, "c" order)
  AgingFasterRhr,  // r_X/r_Y decreasing   ("b" order)
  IFR,
  DRHR,
  TP2,
  RR2,
};

enum class VerdictStatus { Holds, Violated, Inconclusive };

// Outcome of a finite-grid order check. Grid evidence refutes or supports an
// all-t statement, it does not prove it; Inconclusive is a first-class result
// (raised when more than 1% of the grid had to be skipped for underflow).
struct OrderVerdict {
  OrderRelation order;
  VerdictStatus status = VerdictStatus::Inconclusive;
  std::vector<double> witness;  // empty unless Violated: (t) or (t1,t2)
  double margin = 0.0;          // smallest signed relative slack observed
  std::string grid;             // description of the evaluation points
};

inline bool holds(const OrderVerdict& v) { return v.status == VerdictStatus::Holds; }

using Curve = std::function<double(double)>;

// Relative slack separating genuine violations from roundoff on flat ratios.
inline constexpr double kMonotoneSlack = 1e-9;

// Evaluation points where both laws keep sf and cdf inside
// (1e-12, 1 - 1e-12), re-spread over the clipped range at full count.
std::vector<double> effective_grid(const DistributionModel& x, const DistributionModel& y,
                                   const GridSpec& spec = GridSpec::defaults());
std::vector<double> effective_grid(const DistributionModel& x,
                                   const GridSpec& spec = GridSpec::defaults());

// Is f/g monotone in `direction` across the grid? Points where either curve
// is non-finite or zero are skipped; skipping more than 1% of the grid turns
// a would-be Holds into Inconclusive. Negative curve values are an error.
OrderVerdict check_ratio_monotone(const Curve& f, const Curve& g, Direction direction,
                                  const std::vector<double>& grid);

// X <=_st Y : sf_X <= sf_Y pointwise.
OrderVerdict check_st(const DistributionModel& x, const DistributionModel& y,
                      const GridSpec& spec = GridSpec::defaults());
// X <=_hr Y : h_X >= h_Y pointwise.
OrderVerdict check_hr(const DistributionModel& x, const DistributionModel& y,
                      const GridSpec& spec = GridSpec::defaults());
// X <=_rh Y : r_X <= r_Y pointwise.
OrderVerdict check_rh(const DistributionModel& x, const DistributionModel& y,
                      const GridSpec& spec = GridSpec::defaults());

enum class AgingMode { HazardRatio, ReversedHazardRatio };

// X ages faster than Y: h_X/h_Y increasing (HazardRatio) or r_X/r_Y
// decreasing (ReversedHazardRatio).
OrderVerdict check_aging_faster(const DistributionModel& x, const DistributionModel& y,
                                AgingMode mode, const GridSpec& spec = GridSpec::defaults());

// IFR / DRHR aging classes of a single law.
OrderVerdict check_ifr(const DistributionModel& d, const GridSpec& spec = GridSpec::defaults());
OrderVerdict check_drhr(const DistributionModel& d, const GridSpec& spec = GridSpec::defaults());

enum class RatioMode { Hazard, ReversedHazard };

// Ratio limits at 0+ and +infinity, Aitken-accelerated along t0*2^(+-k).
// Both limits must come out positive and finite or NonFiniteLimit is thrown.
struct LimitPair {
  double at_zero = 0.0;
  double at_infinity = 0.0;
  std::vector<double> iterates_zero;
  std::vector<double> iterates_infinity;
};

LimitPair estimate_limits(const DistributionModel& x, const DistributionModel& y,
                          RatioMode mode);

enum class Tp2Sense { TP2, RR2 };

// Sign condition on the 2x2 minors of a non-negative kernel over xs x ys.
// Adjacent pairs suffice on a grid; all_pairs forces the full quadratic scan.
OrderVerdict tp2_grid_check(const std::function<double(double, double)>& kernel,
                            const std::vector<double>& xs, const std::vector<double>& ys,
                            Tp2Sense sense, bool all_pairs = false);

}  // namespace record_order
