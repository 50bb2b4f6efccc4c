#include "entcat/majorization.hpp"

#include <algorithm>

#include "entcat/errors.hpp"

namespace entcat {

namespace {

Integer floor_div(const Rational& q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

Integer ceil_div(const Rational& q) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

// On a segment the gap d(t) = d0 + t*slope (t = 1..len) is linear; returns the
// violated t-range where d(t) > 0, if any.
bool violated_in_segment(const Rational& d0, const Rational& slope, std::uint64_t len,
                         std::uint64_t& lo, std::uint64_t& hi) {
  const int s = sgn(slope);
  if (s == 0) {
    if (sgn(d0) <= 0) return false;
    lo = 1;
    hi = len;
    return true;
  }
  if (s > 0) {
    // d(t) > 0  <=>  t > -d0/slope
    Integer t = floor_div(Rational(-d0 / slope)) + 1;
    if (t < 1) t = 1;
    if (cmp(t, Integer(static_cast<unsigned long>(len))) > 0) return false;
    lo = t.get_ui();
    hi = len;
    return true;
  }
  // slope < 0: d(t) > 0  <=>  t < d0/(-slope)
  Integer t = ceil_div(Rational(d0 / -slope)) - 1;
  if (t < 1) return false;
  lo = 1;
  hi = cmp(t, Integer(static_cast<unsigned long>(len))) > 0 ? len : t.get_ui();
  return true;
}

}  // namespace

bool LSet::contains(std::uint64_t l) const {
  return std::binary_search(indices.begin(), indices.end(), l);
}

std::vector<PrefixRange> violated_ranges(const SchmidtVector& x, const SchmidtVector& y) {
  std::vector<PrefixRange> out;
  for_each_segment(x, y, [&](std::uint64_t pos, std::uint64_t len, const Rational& a, const Rational& b,
                             const Rational& px, const Rational& py) {
    std::uint64_t lo = 0, hi = 0;
    if (!violated_in_segment(Rational(px - py), Rational(a - b), len, lo, hi)) return;
    const PrefixRange r{pos + lo, pos + hi};
    if (!out.empty() && out.back().last + 1 == r.first) {
      out.back().last = r.last;
    } else {
      out.push_back(r);
    }
  });
  return out;
}

FeasibilityReport majorizes(const SchmidtVector& x, const SchmidtVector& y) {
  FeasibilityReport report;
  report.checked_length = std::max(x.size(), y.size());
  for_each_segment(x, y, [&](std::uint64_t pos, std::uint64_t len, const Rational& a, const Rational& b,
                             const Rational& px, const Rational& py) {
    std::uint64_t lo = 0, hi = 0;
    if (violated_in_segment(Rational(px - py), Rational(a - b), len, lo, hi)) {
      report.violated_prefixes.push_back(pos + lo);
    }
  });
  report.feasible = report.violated_prefixes.empty();
  return report;
}

Rational tail_sum(const SchmidtVector& x, std::uint64_t l) {
  if (l < 1 || l > x.size()) {
    throw Error(ErrorKind::IndexOutOfRange,
                "tail index " + std::to_string(l) + " outside [1, " + std::to_string(x.size()) + "]");
  }
  return Rational(1 - x.prefix_sum(l - 1));
}

LSet l_set(const SchmidtVector& psi, const SchmidtVector& phi, const Limits& limits) {
  LSet out;
  const std::uint64_t n = std::max(psi.size(), phi.size());
  std::uint64_t total = 0;
  for (const auto& r : violated_ranges(psi, phi)) {
    const std::uint64_t last = std::min(r.last, n - 1);
    if (r.first > last) continue;
    total += last - r.first + 1;
    checked_length_product(total, 1, limits);
    for (std::uint64_t l = r.first; l <= last; ++l) out.indices.push_back(l);
  }
  return out;
}

bool incomparable(const SchmidtVector& psi, const SchmidtVector& phi) {
  return !violated_ranges(psi, phi).empty() && !violated_ranges(phi, psi).empty();
}

}  // namespace entcat
