#include "record_order/order_checks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "record_order/errors.hpp"

namespace record_order {

namespace {

constexpr double kTailMass = 1e-12;

std::string describe_grid(double lo, double hi, int count) {
  return "log[" + std::to_string(lo) + "," + std::to_string(hi) + "]x" + std::to_string(count);
}

struct RatioSamples {
  std::vector<double> t;
  std::vector<double> value;
  std::size_t skipped = 0;
};

// Evaluate f/g over the grid, skipping points lost to underflow.
RatioSamples sample_ratio(const Curve& f, const Curve& g, const std::vector<double>& grid) {
  if (grid.empty()) throw std::invalid_argument("check_ratio_monotone: empty grid");
  RatioSamples out;
  out.t.reserve(grid.size());
  out.value.reserve(grid.size());
  for (const double t : grid) {
    double fv, gv;
    try {
      fv = f(t);
      gv = g(t);
    } catch (const SupportExhausted&) {
      ++out.skipped;
      continue;
    }
    if (fv < 0.0 || gv < 0.0)
      throw std::invalid_argument("check_ratio_monotone: curves must be non-negative");
    if (!std::isfinite(fv) || !std::isfinite(gv) || fv == 0.0 || gv == 0.0) {
      ++out.skipped;
      continue;
    }
    out.t.push_back(t);
    out.value.push_back(fv / gv);
  }
  return out;
}

}  // namespace

std::vector<double> effective_grid(const DistributionModel& x, const DistributionModel& y,
                                   const GridSpec& spec) {
  const double ln_eps = std::log(kTailMass);
  const double lo = std::max({spec.lo, x.quantile_from_log_cdf(ln_eps),
                              y.quantile_from_log_cdf(ln_eps)});
  const double hi = std::min({spec.hi, x.quantile_from_log_sf(ln_eps),
                              y.quantile_from_log_sf(ln_eps)});
  if (!(lo < hi)) throw std::invalid_argument("effective_grid: supports do not overlap");
  GridSpec clipped = spec;
  clipped.lo = lo;
  clipped.hi = hi;
  return clipped.points();
}

std::vector<double> effective_grid(const DistributionModel& x, const GridSpec& spec) {
  return effective_grid(x, x, spec);
}

OrderVerdict check_ratio_monotone(const Curve& f, const Curve& g, Direction direction,
                                  const std::vector<double>& grid) {
  const RatioSamples samples = sample_ratio(f, g, grid);
  OrderVerdict v;
  v.order = direction == Direction::Increasing ? OrderRelation::AgingFasterHr
                                               : OrderRelation::AgingFasterRhr;
  v.grid = describe_grid(grid.front(), grid.back(), static_cast<int>(grid.size()));
  if (samples.value.size() < 2) {
    v.status = VerdictStatus::Inconclusive;
    return v;
  }
  const MonotoneResult mono = monotone_grid_test(samples.value, direction, kMonotoneSlack);
  v.margin = mono.margin;
  if (!mono.pass) {
    v.status = VerdictStatus::Violated;
    v.witness = {samples.t[mono.first_violation - 1], samples.t[mono.first_violation]};
    return v;
  }
  const bool sparse = samples.skipped * 100 > grid.size();
  v.status = sparse ? VerdictStatus::Inconclusive : VerdictStatus::Holds;
  return v;
}

namespace {

// Pointwise comparison lhs(t) <= rhs(t) within relative slack.
OrderVerdict pointwise_le(OrderRelation order, const Curve& lhs, const Curve& rhs,
                          const std::vector<double>& grid) {
  OrderVerdict v;
  v.order = order;
  v.grid = describe_grid(grid.front(), grid.back(), static_cast<int>(grid.size()));
  v.margin = std::numeric_limits<double>::infinity();
  std::size_t skipped = 0, used = 0;
  for (const double t : grid) {
    double a, b;
    try {
      a = lhs(t);
      b = rhs(t);
    } catch (const SupportExhausted&) {
      ++skipped;
      continue;
    }
    if (!std::isfinite(a) || !std::isfinite(b)) {
      ++skipped;
      continue;
    }
    ++used;
    const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
    const double rel = (b - a) / scale;
    if (rel < v.margin) v.margin = rel;
    if (rel < -kMonotoneSlack && v.status != VerdictStatus::Violated) {
      v.status = VerdictStatus::Violated;
      v.witness = {t};
    }
  }
  if (v.status == VerdictStatus::Violated) return v;
  if (used == 0 || skipped * 100 > grid.size()) {
    v.status = VerdictStatus::Inconclusive;
    return v;
  }
  v.status = VerdictStatus::Holds;
  return v;
}

}  // namespace

OrderVerdict check_st(const DistributionModel& x, const DistributionModel& y,
                      const GridSpec& spec) {
  const auto grid = effective_grid(x, y, spec);
  return pointwise_le(
      OrderRelation::St, [&](double t) { return x.sf(t); }, [&](double t) { return y.sf(t); },
      grid);
}

OrderVerdict check_hr(const DistributionModel& x, const DistributionModel& y,
                      const GridSpec& spec) {
  const auto grid = effective_grid(x, y, spec);
  // X <=_hr Y demands h_Y <= h_X.
  return pointwise_le(
      OrderRelation::Hr, [&](double t) { return y.hazard(t); },
      [&](double t) { return x.hazard(t); }, grid);
}

OrderVerdict check_rh(const DistributionModel& x, const DistributionModel& y,
                      const GridSpec& spec) {
  const auto grid = effective_grid(x, y, spec);
  return pointwise_le(
      OrderRelation::Rh, [&](double t) { return x.rev_hazard(t); },
      [&](double t) { return y.rev_hazard(t); }, grid);
}

OrderVerdict check_aging_faster(const DistributionModel& x, const DistributionModel& y,
                                AgingMode mode, const GridSpec& spec) {
  const auto grid = effective_grid(x, y, spec);
  OrderVerdict v;
  if (mode == AgingMode::HazardRatio) {
    v = check_ratio_monotone([&](double t) { return x.hazard(t); },
                             [&](double t) { return y.hazard(t); }, Direction::Increasing, grid);
    v.order = OrderRelation::AgingFasterHr;
  } else {
    v = check_ratio_monotone([&](double t) { return x.rev_hazard(t); },
                             [&](double t) { return y.rev_hazard(t); }, Direction::Decreasing,
                             grid);
    v.order = OrderRelation::AgingFasterRhr;
  }
  return v;
}

OrderVerdict check_ifr(const DistributionModel& d, const GridSpec& spec) {
  const auto grid = effective_grid(d, spec);
  OrderVerdict v = check_ratio_monotone([&](double t) { return d.hazard(t); },
                                        [](double) { return 1.0; }, Direction::Increasing, grid);
  v.order = OrderRelation::IFR;
  return v;
}

OrderVerdict check_drhr(const DistributionModel& d, const GridSpec& spec) {
  const auto grid = effective_grid(d, spec);
  OrderVerdict v = check_ratio_monotone([&](double t) { return d.rev_hazard(t); },
                                        [](double) { return 1.0; }, Direction::Decreasing, grid);
  v.order = OrderRelation::DRHR;
  return v;
}

namespace {

std::vector<double> limit_iterates(const std::function<double(double)>& ratio, bool toward_zero) {
  std::vector<double> its;
  double t = 1.0;
  double prev = std::numeric_limits<double>::quiet_NaN();
  for (int k = 0; k <= 52; ++k) {
    double r;
    try {
      r = ratio(t);
    } catch (const SupportExhausted&) {
      break;
    }
    if (!std::isfinite(r) || r <= 0.0) break;
    its.push_back(r);
    // Flat tail: the sequence has converged to machine precision.
    if (!std::isnan(prev) && std::abs(r - prev) <= 1e-14 * std::abs(r) && its.size() >= 8) break;
    prev = r;
    t = toward_zero ? t * 0.5 : t * 2.0;
  }
  return its;
}

double accelerated_limit(const std::vector<double>& its, const char* which) {
  if (its.size() < 5)
    throw NonFiniteLimit(std::string("estimate_limits: ratio not evaluable near ") + which);
  // Growing differences over the whole tail mean divergence, which Aitken
  // would silently map to the affine fixed point. A tail still shrinking
  // geometrically at the end of the doubling range is a limit of zero.
  const std::size_t m = its.size();
  if (m >= 5) {
    bool growing = true, vanishing = true;
    for (std::size_t i = m - 4; i + 1 < m; ++i) {
      if (std::abs(its[i + 1] - its[i]) <= std::abs(its[i] - its[i - 1])) growing = false;
      if (its[i + 1] > 0.9 * its[i]) vanishing = false;
    }
    if (growing && std::abs(its[m - 1] - its[m - 2]) > 1e-8 * std::abs(its[m - 1]))
      throw NonFiniteLimit(std::string("estimate_limits: ratio diverges near ") + which);
    if (vanishing)
      throw NonFiniteLimit(std::string("estimate_limits: ratio vanishes near ") + which);
  }
  const std::size_t tail = std::min<std::size_t>(m, 12);
  std::vector<double> window(its.end() - tail, its.end());
  LimitEstimate est;
  try {
    est = extrapolate_limit(window);
  } catch (const OscillatingSequence&) {
    throw NonFiniteLimit(std::string("estimate_limits: ratio oscillates near ") + which);
  }
  if (!std::isfinite(est.value) || est.value <= 0.0 ||
      est.residual > 1e-5 * std::max(std::abs(est.value), 1e-30))
    throw NonFiniteLimit(std::string("estimate_limits: limit not positive-finite near ") + which);
  return est.value;
}

}  // namespace

LimitPair estimate_limits(const DistributionModel& x, const DistributionModel& y,
                          RatioMode mode) {
  auto ratio = [&](double t) {
    return mode == RatioMode::Hazard ? x.hazard(t) / y.hazard(t)
                                     : x.rev_hazard(t) / y.rev_hazard(t);
  };
  LimitPair lp;
  lp.iterates_zero = limit_iterates(ratio, true);
  lp.iterates_infinity = limit_iterates(ratio, false);
  lp.at_zero = accelerated_limit(lp.iterates_zero, "0+");
  lp.at_infinity = accelerated_limit(lp.iterates_infinity, "+inf");
  return lp;
}

OrderVerdict tp2_grid_check(const std::function<double(double, double)>& kernel,
                            const std::vector<double>& xs, const std::vector<double>& ys,
                            Tp2Sense sense, bool all_pairs) {
  if (xs.size() < 2 || ys.size() < 2)
    throw std::invalid_argument("tp2_grid_check: need at least a 2x2 grid");

  std::vector<std::vector<double>> k(xs.size(), std::vector<double>(ys.size()));
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < ys.size(); ++j) {
      k[i][j] = kernel(xs[i], ys[j]);
      if (k[i][j] < 0.0 || !std::isfinite(k[i][j]))
        throw std::invalid_argument("tp2_grid_check: kernel must be non-negative and finite");
    }

  OrderVerdict v;
  v.order = sense == Tp2Sense::TP2 ? OrderRelation::TP2 : OrderRelation::RR2;
  v.grid = std::to_string(xs.size()) + "x" + std::to_string(ys.size()) +
           (all_pairs ? " all pairs" : " adjacent pairs");
  v.margin = std::numeric_limits<double>::infinity();

  auto minor_ok = [&](std::size_t i1, std::size_t i2, std::size_t j1, std::size_t j2) {
    double det = k[i1][j1] * k[i2][j2] - k[i1][j2] * k[i2][j1];
    if (sense == Tp2Sense::RR2) det = -det;
    const double scale = std::max({std::abs(k[i1][j1] * k[i2][j2]),
                                   std::abs(k[i1][j2] * k[i2][j1]), 1e-300});
    const double rel = det / scale;
    if (rel < v.margin) v.margin = rel;
    if (rel < -kMonotoneSlack) {
      if (v.status != VerdictStatus::Violated) {
        v.status = VerdictStatus::Violated;
        v.witness = {xs[i1], xs[i2], ys[j1], ys[j2]};
      }
      return false;
    }
    return true;
  };

  bool ok = true;
  if (all_pairs) {
    for (std::size_t i1 = 0; i1 < xs.size(); ++i1)
      for (std::size_t i2 = i1 + 1; i2 < xs.size(); ++i2)
        for (std::size_t j1 = 0; j1 < ys.size(); ++j1)
          for (std::size_t j2 = j1 + 1; j2 < ys.size(); ++j2) ok &= minor_ok(i1, i2, j1, j2);
  } else {
    for (std::size_t i = 0; i + 1 < xs.size(); ++i)
      for (std::size_t j = 0; j + 1 < ys.size(); ++j) ok &= minor_ok(i, i + 1, j, j + 1);
  }
  if (ok) v.status = VerdictStatus::Holds;
  return v;
}

}  // namespace record_order
