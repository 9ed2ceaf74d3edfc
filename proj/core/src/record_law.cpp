#include "record_order/record_law.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "record_order/errors.hpp"
#include "record_order/xi_psi.hpp"

namespace record_order {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}

RecordLaw::RecordLaw(DistributionModel base, int index, RecordKind kind)
    : base_(std::move(base)), index_(index), kind_(kind) {
  if (index_ < 1) throw std::invalid_argument("RecordLaw: index must be >= 1");
  if (index_ > kMaxRecordIndex)
    throw std::invalid_argument("RecordLaw: index exceeds factorial range (170)");
}

// s = -ln(sf) for upper records, -ln(cdf) for lower records.
static double record_exponent(const DistributionModel& d, RecordKind kind, double t) {
  const double lv = kind == RecordKind::Upper ? d.log_sf(t) : d.log_cdf(t);
  if (lv == kNegInf)
    throw SupportExhausted(kind == RecordKind::Upper
                               ? "record law: base sf underflowed to 0"
                               : "record law: base cdf underflowed to 0");
  return -lv;
}

double RecordLaw::log_pdf(double t) const {
  if (index_ == 1) return base_.log_pdf(t);
  const double s = record_exponent(base_, kind_, t);
  if (s == 0.0) return kNegInf;
  return (index_ - 1) * std::log(s) - std::lgamma(index_) + base_.log_pdf(t);
}

double RecordLaw::pdf(double t) const { return std::exp(log_pdf(t)); }

double RecordLaw::log_sf(double t) const {
  if (kind_ == RecordKind::Upper) {
    const double ls = base_.log_sf(t);
    if (ls == kNegInf) throw SupportExhausted("record law: base sf underflowed to 0");
    return ls + log_trunc_exp_sum(index_, -ls);
  }
  return std::log(-std::expm1(log_cdf(t)));
}

double RecordLaw::log_cdf(double t) const {
  if (kind_ == RecordKind::Lower) {
    const double lc = base_.log_cdf(t);
    if (lc == kNegInf) throw SupportExhausted("record law: base cdf underflowed to 0");
    return lc + log_trunc_exp_sum(index_, -lc);
  }
  return std::log(-std::expm1(log_sf(t)));
}

double RecordLaw::sf(double t) const {
  if (kind_ == RecordKind::Upper) return std::exp(log_sf(t));
  return -std::expm1(log_cdf(t));
}

double RecordLaw::cdf(double t) const {
  if (kind_ == RecordKind::Lower) return std::exp(log_cdf(t));
  return -std::expm1(log_sf(t));
}

double RecordLaw::hazard(double t) const {
  if (kind_ == RecordKind::Upper) {
    const double s = record_exponent(base_, kind_, t);
    if (s == 0.0) return index_ == 1 ? base_.hazard(t) : 0.0;
    return base_.hazard(t) / xi(index_, s);
  }
  const double lsf = log_sf(t);
  if (std::exp(lsf) == 0.0) throw SupportExhausted("record law: record sf underflowed");
  return std::exp(log_pdf(t) - lsf);
}

double RecordLaw::rev_hazard(double t) const {
  if (kind_ == RecordKind::Lower) {
    const double s = record_exponent(base_, kind_, t);
    if (s == 0.0) return index_ == 1 ? base_.rev_hazard(t) : 0.0;
    return base_.rev_hazard(t) / xi(index_, s);
  }
  const double lcd = log_cdf(t);
  if (std::exp(lcd) == 0.0) throw SupportExhausted("record law: record cdf underflowed");
  return std::exp(log_pdf(t) - lcd);
}

}  // namespace record_order
