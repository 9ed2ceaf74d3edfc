#pragma once

#include <string>

namespace record_order {

enum class Family { Exponential, Erlang, Lomax, Weibull, InverseWeibull };

// A parametric lifetime law on (0, inf) with closed-form evaluators.
//
// Conventions:
//   Exponential(rate):        sf(t) = exp(-rate*t)
//   Erlang(shape, rate):      sum of `shape` iid Exponential(rate)
//   Lomax(shape, scale):      sf(t) = (1 + t/scale)^(-shape)
//   Weibull(shape, scale):    sf(t) = exp(-(t/scale)^shape)
//   InverseWeibull(shape, scale): cdf(t) = exp(-(scale/t)^shape)
//
// Instances are immutable; parameters are validated at construction and the
// evaluators never validate them again. All evaluators are pure and safe to
// call concurrently. Tail evaluations are carried out in log space: log_sf
// and log_cdf stay finite long after sf/cdf underflow.
class DistributionModel {
public:
  static DistributionModel exponential(double rate);
  static DistributionModel erlang(int shape, double rate);
  static DistributionModel lomax(double shape, double scale);
  static DistributionModel weibull(double shape, double scale);
  static DistributionModel inverse_weibull(double shape, double scale);

  Family family() const { return family_; }

  double sf(double t) const;
  double cdf(double t) const;
  double pdf(double t) const;
  double log_sf(double t) const;
  double log_cdf(double t) const;
  double log_pdf(double t) const;

  // pdf/sf. Throws SupportExhausted once sf(t) underflows to zero.
  double hazard(double t) const;
  // pdf/cdf. Throws SupportExhausted once cdf(t) underflows to zero.
  double rev_hazard(double t) const;

  // Inverse cdf on p in (0,1). Closed form where available, bisection for Erlang.
  double quantile(double p) const;
  // Inverse maps in log space; exact well beyond where p would round to 0 or 1.
  double quantile_from_log_sf(double ls) const;
  double quantile_from_log_cdf(double lc) const;

  // Canonical spec string, e.g. "lomax:shape=3,scale=1".
  std::string describe() const;

private:
  DistributionModel(Family f, double a, double b, int ishape);

  Family family_;
  double a_;    // rate (Exponential, Erlang) or shape (others)
  double b_;    // scale (Lomax, Weibull, InverseWeibull); unused otherwise
  int ishape_;  // Erlang only
};

}  // namespace record_order
