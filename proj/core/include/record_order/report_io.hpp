#pragma once

#include <string>

#include "record_order/order_checks.hpp"
#include "record_order/theorem_verify.hpp"

namespace record_order {

// Stable machine-readable renderings; every document carries "schema": 1.
inline constexpr int kReportSchemaVersion = 1;

std::string order_name(OrderRelation order);
std::string status_name(VerdictStatus status);
std::string outcome_name(TheoremOutcome outcome);
std::string theorem_name(TheoremId id);
std::string sup_location_name(SupLocation loc);

std::string verdict_to_json(const OrderVerdict& v, bool pretty = true);
std::string supremum_to_json(const SupremumReport& s, bool pretty = true);
std::string limits_to_json(const LimitPair& lp, bool pretty = true);
std::string theorem_report_to_json(const TheoremReport& r, bool pretty = true);
std::string example_bundle_to_json(const ExampleBundle& b, bool pretty = true);

// Exit-code policy shared by the CLI: 0 holds/pass, 2 violated/refuted,
// 3 inconclusive. (1 is reserved for usage and runtime errors.)
int exit_code_for(VerdictStatus status);
int exit_code_for(TheoremOutcome outcome);

}  // namespace record_order
