#pragma once

#include "record_order/distribution.hpp"

namespace record_order {

enum class RecordKind { Upper, Lower };

// Law of the n-th upper (running maximum) or lower (running minimum) record
// value over an i.i.d. sequence drawn from `base`. Index 1 is the first
// observation, so it reduces exactly to the base law.
//
// With s(t) = -ln(sf_base(t)) for upper records (resp. -ln(cdf_base(t)) for
// lower records):
//   pdf(t)  = s^(n-1)/(n-1)! * pdf_base(t)
//   sf(t)   = sf_base(t)  * sum_{k<n} s^k/k!     (upper)
//   cdf(t)  = cdf_base(t) * sum_{k<n} s^k/k!     (lower)
//   hazard  = hazard_base / xi_n(s)              (upper)
//   rhr     = rev_hazard_base / xi_n(s)          (lower)
// The remaining evaluators follow from sf + cdf = 1.
class RecordLaw {
public:
  RecordLaw(DistributionModel base, int index, RecordKind kind);

  const DistributionModel& base() const { return base_; }
  int index() const { return index_; }
  RecordKind kind() const { return kind_; }

  double pdf(double t) const;
  double log_pdf(double t) const;
  double sf(double t) const;
  double cdf(double t) const;
  double log_sf(double t) const;
  double log_cdf(double t) const;
  double hazard(double t) const;
  double rev_hazard(double t) const;

private:
  DistributionModel base_;
  int index_;
  RecordKind kind_;
};

}  // namespace record_order
