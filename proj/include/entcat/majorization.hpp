#pragma once

#include <cstdint>
#include <vector>

#include "entcat/rational.hpp"
#include "entcat/schmidt_vector.hpp"

namespace entcat {

/// Outcome of testing x ≺ y.
///
/// `violated_prefixes` holds 1-based prefix lengths l where the sum of the l
/// largest entries of x exceeds that of y. Both vectors are walked as
/// piecewise-linear prefix functions over their runs; inside each linear
/// segment only the smallest violated l is listed, so for vectors without
/// repeated entries the list is complete. `checked_length` is the
/// zero-padded common length.
struct FeasibilityReport {
  bool feasible = true;
  std::vector<std::uint64_t> violated_prefixes;
  std::uint64_t checked_length = 0;
};

/// Closed range [first, last] of 1-based prefix lengths.
struct PrefixRange {
  std::uint64_t first = 0;
  std::uint64_t last = 0;
};

/// Indices l in [1, n) where the l-prefix of psi strictly exceeds that of phi.
struct LSet {
  std::vector<std::uint64_t> indices;

  bool empty() const noexcept { return indices.empty(); }
  bool contains(std::uint64_t l) const;
};

/// Nielsen's criterion: true iff every prefix sum of x is <= that of y.
FeasibilityReport majorizes(const SchmidtVector& x, const SchmidtVector& y);

/// All maximal ranges of l where prefix_l(x) > prefix_l(y).
std::vector<PrefixRange> violated_ranges(const SchmidtVector& x, const SchmidtVector& y);

/// E_l(x) = x_l + ... + x_n with 1-based l, 1 <= l <= len(x).
Rational tail_sum(const SchmidtVector& x, std::uint64_t l);

LSet l_set(const SchmidtVector& psi, const SchmidtVector& phi, const Limits& limits = {});

bool incomparable(const SchmidtVector& psi, const SchmidtVector& phi);

/// Visits the common refinement of the run structures of x and y, both
/// zero-padded to the longer length. For each segment the callback receives
/// the 0-based start position, the segment length, the entries of x and y
/// on that segment and the prefix sums of x and y before the segment.
template <typename Visitor>
void for_each_segment(const SchmidtVector& x, const SchmidtVector& y, Visitor&& visit) {
  const auto& xr = x.runs();
  const auto& yr = y.runs();
  const Rational zero = 0;
  std::size_t i = 0, j = 0;
  std::uint64_t used_x = 0, used_y = 0, pos = 0;
  const std::uint64_t n = std::max(x.size(), y.size());
  Rational px = 0, py = 0;
  while (pos < n) {
    const Rational& a = i < xr.size() ? xr[i].value : zero;
    const Rational& b = j < yr.size() ? yr[j].value : zero;
    const std::uint64_t left_x = i < xr.size() ? xr[i].count - used_x : n - pos;
    const std::uint64_t left_y = j < yr.size() ? yr[j].count - used_y : n - pos;
    const std::uint64_t len = std::min(left_x, left_y);
    visit(pos, len, a, b, px, py);
    px += a * len;
    py += b * len;
    pos += len;
    if (i < xr.size() && (used_x += len) == xr[i].count) {
      ++i;
      used_x = 0;
    }
    if (j < yr.size() && (used_y += len) == yr[j].count) {
      ++j;
      used_y = 0;
    }
  }
}

}  // namespace entcat
