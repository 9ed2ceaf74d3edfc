#include "record_order/theorem_verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "record_order/errors.hpp"
#include "record_order/record_law.hpp"
#include "record_order/xi_psi.hpp"

namespace record_order {

namespace {

constexpr double kSupRelTol = 1e-6;  // slack for "sup <= bound", boundary equality included

void require_indices(int m, int n, int floor, const char* who) {
  if (n < floor || m < n)
    throw std::invalid_argument(std::string(who) + ": requires m >= n >= " +
                                std::to_string(floor));
  if (m > kMaxRecordIndex)
    throw std::invalid_argument(std::string(who) + ": index exceeds factorial range (170)");
}

// The sup-condition theorems carry no ordering constraint on (m, n); the
// condition itself simply fails when the indices point the wrong way.
void require_sup_indices(int m, int n, const char* who) {
  if (n < 2 || m < 2)
    throw std::invalid_argument(std::string(who) + ": requires m, n >= 2");
  if (m > kMaxRecordIndex || n > kMaxRecordIndex)
    throw std::invalid_argument(std::string(who) + ": index exceeds factorial range (170)");
}

}  // namespace

SupremumReport sup_psi_ratio(int n, int m, double exponent, RecordSide side,
                             int coarse_points) {
  if (n == 1 || m == 1)
    throw DegenerateRatio("sup_psi_ratio: psi_1 vanishes identically; indices must be >= 2");
  if (n < 1 || m < 1 || m > kMaxRecordIndex || n > kMaxRecordIndex)
    throw std::invalid_argument("sup_psi_ratio: indices out of range");
  if (!(exponent > 0.0) || !std::isfinite(exponent))
    throw std::invalid_argument("sup_psi_ratio: exponent must be positive and finite");

  // Argument scalings in s-space: u^c maps to c*s.
  const double num_scale = side == RecordSide::UpperRecords ? 1.0 : exponent;
  const double den_scale = side == RecordSide::UpperRecords ? exponent : 1.0;
  auto ratio = [=](double s) { return psi(n, num_scale * s) / psi(m, den_scale * s); };

  // psi_k(s) ~ (k-1)/s as s->0+ and ~ (k-1)/s^2 as s->inf, so the ratio has
  // finite limits at both ends of (0,1); the coarse grid cannot reach them.
  const double shape_factor = static_cast<double>(n - 1) / static_cast<double>(m - 1);
  const double rho = den_scale / num_scale;
  const double limit_boundary_one = rho * shape_factor;         // s -> 0+, u -> 1-
  const double limit_boundary_zero = rho * rho * shape_factor;  // s -> inf, u -> 0+

  const auto grid = GridSpec::log_spaced(1e-8, 1e8, coarse_points).points();
  std::vector<double> values(grid.size());
  std::size_t best = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    values[i] = ratio(grid[i]);
    if (!std::isfinite(values[i]))
      throw NonFiniteLimit("sup_psi_ratio: ratio overflowed on the search grid");
    if (values[i] > values[best]) best = i;
  }

  SupremumReport rep;
  rep.iterates.push_back(values[best]);

  double interior_value = values[best];
  double interior_arg = grid[best];
  if (best > 0 && best + 1 < grid.size()) {
    const MaxResult refined =
        golden_section_max(ratio, grid[best - 1], grid[best], grid[best + 1], 1e-10);
    if (refined.value > interior_value) {
      interior_value = refined.value;
      interior_arg = refined.arg;
    }
    rep.iterates.push_back(std::max(rep.iterates.back(), interior_value));
  }

  rep.value = interior_value;
  rep.location = SupLocation::Interior;
  rep.location_s = interior_arg;
  rep.attained = true;
  const double tie = 1.0 + 1e-12;
  if (limit_boundary_one >= rep.value / tie || limit_boundary_zero >= rep.value / tie) {
    if (limit_boundary_zero >= limit_boundary_one) {
      rep.value = std::max(rep.value, limit_boundary_zero);
      rep.location = SupLocation::BoundaryZero;
    } else {
      rep.value = std::max(rep.value, limit_boundary_one);
      rep.location = SupLocation::BoundaryOne;
    }
    rep.location_s = 0.0;
    rep.attained = false;
  }
  rep.iterates.push_back(rep.value);
  return rep;
}

namespace {

OrderVerdict record_conclusion(const DistributionModel& x, const DistributionModel& y, int m,
                               int n, RecordKind kind, const GridSpec& spec) {
  const RecordLaw rx(x, m, kind);
  const RecordLaw ry(y, n, kind);
  const auto grid = effective_grid(x, y, spec);
  OrderVerdict v;
  if (kind == RecordKind::Upper) {
    v = check_ratio_monotone([&](double t) { return rx.hazard(t); },
                             [&](double t) { return ry.hazard(t); }, Direction::Increasing,
                             grid);
    v.order = OrderRelation::AgingFasterHr;
  } else {
    v = check_ratio_monotone([&](double t) { return rx.rev_hazard(t); },
                             [&](double t) { return ry.rev_hazard(t); }, Direction::Decreasing,
                             grid);
    v.order = OrderRelation::AgingFasterRhr;
  }
  return v;
}

TheoremOutcome combine(const std::vector<HypothesisCheck>& hyps, const OrderVerdict& conclusion) {
  const bool hyps_ok =
      std::all_of(hyps.begin(), hyps.end(), [](const HypothesisCheck& h) { return h.pass; });
  if (!hyps_ok) return TheoremOutcome::HypothesisFailed;
  return holds(conclusion) ? TheoremOutcome::Pass : TheoremOutcome::ConclusionRefuted;
}

HypothesisCheck order_hypothesis(std::string name, OrderVerdict v) {
  HypothesisCheck h;
  h.name = std::move(name);
  h.pass = holds(v);
  h.verdict = std::move(v);
  return h;
}

HypothesisCheck sup_hypothesis(std::string name, SupremumReport sup, double bound) {
  HypothesisCheck h;
  h.name = std::move(name);
  h.pass = sup.value <= bound * (1.0 + kSupRelTol);
  h.boundary_equality =
      h.pass && std::abs(sup.value - bound) <= kSupRelTol * std::max(std::abs(bound), 1e-30);
  h.supremum = std::move(sup);
  h.bound = bound;
  return h;
}

TheoremReport shell(TheoremId id, const DistributionModel& x, const DistributionModel& y, int m,
                    int n) {
  TheoremReport r;
  r.theorem = id;
  r.m = m;
  r.n = n;
  r.x_spec = x.describe();
  r.y_spec = y.describe();
  return r;
}

}  // namespace

TheoremReport verify_theorem1(const DistributionModel& x, const DistributionModel& y, int m,
                              int n, const GridSpec& spec) {
  require_indices(m, n, 1, "verify_theorem1");
  TheoremReport r = shell(TheoremId::T1, x, y, m, n);
  r.hypothesis_checks.push_back(order_hypothesis("X >=st Y", check_st(y, x, spec)));
  r.hypothesis_checks.push_back(
      order_hypothesis("X <=c Y", check_aging_faster(x, y, AgingMode::HazardRatio, spec)));
  r.conclusion_check = record_conclusion(x, y, m, n, RecordKind::Upper, spec);
  r.overall = combine(r.hypothesis_checks, r.conclusion_check);
  return r;
}

TheoremReport verify_theorem2(const DistributionModel& x, const DistributionModel& y, int m,
                              int n, const GridSpec& spec) {
  require_sup_indices(m, n, "verify_theorem2");
  TheoremReport r = shell(TheoremId::T2, x, y, m, n);
  r.limits = estimate_limits(x, y, RatioMode::Hazard);
  r.hypothesis_checks.push_back(
      order_hypothesis("X <=c Y", check_aging_faster(x, y, AgingMode::HazardRatio, spec)));
  r.hypothesis_checks.push_back(
      sup_hypothesis("sup psi_n(u)/psi_m(u^c1) <= c0",
                     sup_psi_ratio(n, m, r.limits->at_infinity, RecordSide::UpperRecords),
                     r.limits->at_zero));
  r.conclusion_check = record_conclusion(x, y, m, n, RecordKind::Upper, spec);
  r.overall = combine(r.hypothesis_checks, r.conclusion_check);
  return r;
}

TheoremReport verify_theorem3(const DistributionModel& x, const DistributionModel& y, int m,
                              int n, const GridSpec& spec) {
  require_indices(m, n, 1, "verify_theorem3");
  TheoremReport r = shell(TheoremId::T3, x, y, m, n);
  r.hypothesis_checks.push_back(order_hypothesis("X <=st Y", check_st(x, y, spec)));
  r.hypothesis_checks.push_back(order_hypothesis(
      "X <=b Y", check_aging_faster(x, y, AgingMode::ReversedHazardRatio, spec)));
  r.conclusion_check = record_conclusion(x, y, m, n, RecordKind::Lower, spec);
  r.overall = combine(r.hypothesis_checks, r.conclusion_check);
  return r;
}

TheoremReport verify_theorem4(const DistributionModel& x, const DistributionModel& y, int m,
                              int n, const GridSpec& spec) {
  require_sup_indices(m, n, "verify_theorem4");
  TheoremReport r = shell(TheoremId::T4, x, y, m, n);
  r.limits = estimate_limits(x, y, RatioMode::ReversedHazard);
  r.hypothesis_checks.push_back(order_hypothesis(
      "X <=b Y", check_aging_faster(x, y, AgingMode::ReversedHazardRatio, spec)));
  r.hypothesis_checks.push_back(
      sup_hypothesis("sup psi_n(u^(1/c0*))/psi_m(u) <= c1*",
                     sup_psi_ratio(n, m, 1.0 / r.limits->at_zero, RecordSide::LowerRecords),
                     r.limits->at_infinity));
  r.conclusion_check = record_conclusion(x, y, m, n, RecordKind::Lower, spec);
  r.overall = combine(r.hypothesis_checks, r.conclusion_check);
  return r;
}

CurveSeries sample_curve(std::string name, std::string abscissa, const std::vector<double>& grid,
                         const std::function<double(double)>& f) {
  CurveSeries c;
  c.name = std::move(name);
  c.abscissa = std::move(abscissa);
  c.t.reserve(grid.size());
  c.value.reserve(grid.size());
  for (const double t : grid) {
    c.t.push_back(t);
    c.value.push_back(f(t));
  }
  return c;
}

std::string curve_to_csv(const CurveSeries& c) {
  std::string out = c.abscissa + ",value\n";
  char buf[64];
  for (std::size_t i = 0; i < c.t.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", c.t[i], c.value[i]);
    out += buf;
  }
  return out;
}

namespace {

CurveCheck monotone_check(const CurveSeries& c, Direction dir) {
  const MonotoneResult res = monotone_grid_test(c.value, dir, kMonotoneSlack);
  CurveCheck chk;
  chk.curve = c.name;
  chk.property = dir == Direction::Increasing ? "non-decreasing" : "non-increasing";
  chk.pass = res.pass;
  chk.value = res.margin;
  return chk;
}

CurveCheck sup_check(const CurveSeries& c, const SupremumReport& sup) {
  CurveCheck chk;
  chk.curve = c.name;
  chk.property = "bounded by supremum";
  const double curve_max = *std::max_element(c.value.begin(), c.value.end());
  chk.pass = curve_max <= sup.value * (1.0 + 1e-9);
  chk.value = sup.value;
  return chk;
}

std::vector<double> unit_interval_grid(int count) {
  std::vector<double> u(count);
  for (int i = 0; i < count; ++i) u[i] = (i + 1.0) / (count + 1.0);
  return u;
}

CurveSeries record_ratio_curve(std::string name, const DistributionModel& x,
                               const DistributionModel& y, int m, int n, RecordKind kind,
                               const GridSpec& spec) {
  const RecordLaw rx(x, m, kind);
  const RecordLaw ry(y, n, kind);
  const auto grid = effective_grid(x, y, spec);
  if (kind == RecordKind::Upper)
    return sample_curve(std::move(name), "t", grid,
                        [&](double t) { return rx.hazard(t) / ry.hazard(t); });
  return sample_curve(std::move(name), "t", grid,
                      [&](double t) { return rx.rev_hazard(t) / ry.rev_hazard(t); });
}

}  // namespace

ExampleBundle reproduce_example(ExampleId id, const GridSpec& spec) {
  ExampleBundle b;
  b.id = id;
  switch (id) {
    case ExampleId::Erlang: {
      b.title = "Erlang convolutions: records of exponential sequences, m=3, n=2";
      const auto x = DistributionModel::exponential(3.0);
      const auto y = DistributionModel::exponential(5.0);
      b.report = verify_theorem1(x, y, 3, 2, spec);
      b.curves.push_back(
          record_ratio_curve("fig1_record_hazard_ratio", x, y, 3, 2, RecordKind::Upper, spec));
      b.checks.push_back(monotone_check(b.curves[0], Direction::Increasing));
      break;
    }
    case ExampleId::LomaxUpper: {
      b.title = "Lomax pair: upper records under the hazard-ratio sup condition, m=3, n=2";
      const auto x = DistributionModel::lomax(3.0, 1.0);
      const auto y = DistributionModel::lomax(2.0, 0.75);
      b.report = verify_theorem2(x, y, 3, 2, spec);
      const double c1 = b.report.limits->at_infinity;
      const auto sup = sup_psi_ratio(2, 3, c1, RecordSide::UpperRecords);
      b.curves.push_back(sample_curve("fig2_psi_ratio", "u", unit_interval_grid(2001),
                                      [&](double u) {
                                        const double s = -std::log(u);
                                        return psi(2, s) / psi(3, c1 * s);
                                      }));
      b.curves.push_back(
          record_ratio_curve("fig3_record_hazard_ratio", x, y, 3, 2, RecordKind::Upper, spec));
      b.checks.push_back(sup_check(b.curves[0], sup));
      b.checks.push_back(monotone_check(b.curves[1], Direction::Increasing));
      break;
    }
    case ExampleId::InvWeibullLower1: {
      b.title = "Inverse-Weibull pair: lower records under the st + b conditions, m=3, n=2";
      const auto x = DistributionModel::inverse_weibull(2.0, 2.0);
      const auto y = DistributionModel::inverse_weibull(2.0, std::sqrt(5.0));
      b.report = verify_theorem3(x, y, 3, 2, spec);
      b.curves.push_back(
          record_ratio_curve("fig4_record_rhr_ratio", x, y, 3, 2, RecordKind::Lower, spec));
      b.checks.push_back(monotone_check(b.curves[0], Direction::Decreasing));
      break;
    }
    case ExampleId::InvWeibullLower2: {
      b.title = "Inverse-Weibull pair: lower records under the rhr-ratio sup condition, m=3, n=2";
      const auto x = DistributionModel::inverse_weibull(4.0, std::sqrt(2.0));
      const auto y = DistributionModel::inverse_weibull(4.0, std::pow(2.0, 0.25));
      b.report = verify_theorem4(x, y, 3, 2, spec);
      const double inv_c0 = 1.0 / b.report.limits->at_zero;
      const auto sup = sup_psi_ratio(2, 3, inv_c0, RecordSide::LowerRecords);
      b.curves.push_back(sample_curve("fig5_psi_ratio", "u", unit_interval_grid(2001),
                                      [&](double u) {
                                        const double s = -std::log(u);
                                        return psi(2, inv_c0 * s) / psi(3, s);
                                      }));
      b.curves.push_back(
          record_ratio_curve("fig6_record_rhr_ratio", x, y, 3, 2, RecordKind::Lower, spec));
      b.checks.push_back(sup_check(b.curves[0], sup));
      b.checks.push_back(monotone_check(b.curves[1], Direction::Decreasing));
      break;
    }
  }
  return b;
}

}  // namespace record_order
