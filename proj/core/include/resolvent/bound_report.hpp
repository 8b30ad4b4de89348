#pragma once

#include <cstddef>

namespace resolvent {

/// Per-(n, r) comparison of R(n, r) with its asymptotic law, the interpolation
/// bounds and the Davies-Simon constant.
struct BoundReport {
  std::size_t n;
  double r;
  double exact;         // R(n, r)
  double asymptotic;    // (2/pi) (1+r)/(1-r) n
  double ratio;         // exact / asymptotic
  double lower_fejer;   // (n(1+r) + 1 - r) / (2(1-r))
  double upper_sum;     // n (1+r)/(1-r)
  double davies_simon;  // cot(pi/(4n))
};

/// Requires n >= 1 and 0 < r < 1.
BoundReport make_bound_report(std::size_t n, double r);

}  // namespace resolvent
