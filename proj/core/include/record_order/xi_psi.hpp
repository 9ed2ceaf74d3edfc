#pragma once

namespace record_order {

// Kernel functions of the record-value hazard identities, evaluated in
// s = -ln(u) space, s > 0. The u-space forms are singular at both endpoints;
// multiplying numerator and denominator through by s^n gives polynomial
// ratios that are stable over s spanning many orders of magnitude.
//
//   xi(n, s)       = (n-1)! * sum_{i=0}^{n-1} s^(i-n+1) / i!          (>= 1)
//   psi(n, s)      = [sum (n-1-i) s^i / i!] / [s * sum s^i / i!]      (>= 0, psi_1 == 0)
//   k_ratio(m,n,s) = [sum_{i<n} s^(i-n+1)/i!] / [sum_{i<m} s^(i-m+1)/i!]
//
// Indices are limited to n <= 170 (the double-precision factorial range).

double xi(int n, double s);
double psi(int n, double s);
double k_ratio(int m, int n, double s);

// log of the truncated exponential series sum_{i=0}^{n-1} s^i / i!,
// computed without overflow for any s > 0. This is the series appearing in
// the record survival/cdf closed forms and in the Erlang survival function.
double log_trunc_exp_sum(int n, double s);

// Maximum supported record index for xi/psi/k_ratio and the record laws.
inline constexpr int kMaxRecordIndex = 170;

}  // namespace record_order
