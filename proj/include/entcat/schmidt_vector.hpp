#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "entcat/rational.hpp"

namespace entcat {

/// Upper bound on the expanded length of any vector the library builds.
struct Limits {
  static constexpr std::uint64_t kDefaultComponentCap = 50'000'000;
  std::uint64_t component_cap = kDefaultComponentCap;
};

/// A block of `count` equal coefficients.
struct Run {
  Rational value;
  std::uint64_t count = 0;

  friend bool operator==(const Run&, const Run&) = default;
};

/// Ordered Schmidt coefficients of a bipartite pure state.
///
/// Stored as runs of equal values sorted strictly decreasing, so tensor powers
/// of low-dimensional states stay small: (0.6,0.4)^{x11} has 2048 components
/// but only 12 runs. Every coefficient is strictly positive and the total is
/// exactly 1; zeros are never stored.
class SchmidtVector {
 public:
  /// Builds the canonical vector from arbitrary-order coefficients. Zeros are
  /// dropped. With `normalize` the entries are divided by their sum,
  /// otherwise a sum other than 1 is rejected.
  static SchmidtVector from_coefficients(std::span<const Rational> coeffs, bool normalize = false);
  static SchmidtVector from_runs(std::vector<Run> runs, bool normalize = false);

  /// The product state (1).
  static SchmidtVector product_state();

  /// Number of components counted with multiplicity.
  std::uint64_t size() const noexcept { return size_; }
  std::size_t run_count() const noexcept { return runs_.size(); }
  const std::vector<Run>& runs() const noexcept { return runs_; }

  const Rational& largest() const { return runs_.front().value; }
  const Rational& smallest() const { return runs_.back().value; }

  /// 0-based positional access into the expanded vector.
  const Rational& operator[](std::uint64_t index) const;

  /// Sum of the first `count` components.
  Rational prefix_sum(std::uint64_t count) const;

  std::vector<Rational> expanded(const Limits& limits = {}) const;

  friend bool operator==(const SchmidtVector&, const SchmidtVector&) = default;

 private:
  SchmidtVector() = default;
  void finish();

  std::vector<Run> runs_;
  std::vector<std::uint64_t> offsets_;  // offsets_[i] = components before run i
  std::uint64_t size_ = 0;
};

/// Comma-separated decimals or fractions, e.g. "0.4,0.4,0.1,0.1" or
/// "50/103,30/103,23/103".
SchmidtVector parse_vector(std::string_view text, bool normalize = false);

/// Canonical text: expanded fractions in lowest terms, "2/5,2/5,1/10,1/10".
std::string serialize(const SchmidtVector& v, const Limits& limits = {});

SchmidtVector tensor(const SchmidtVector& x, const SchmidtVector& y, const Limits& limits = {});

/// x tensored with itself k times; k = 0 gives the product state.
SchmidtVector tensor_power(const SchmidtVector& x, std::uint64_t k, const Limits& limits = {});

/// Saturating product used for expanded-length bookkeeping.
std::uint64_t checked_length_product(std::uint64_t a, std::uint64_t b, const Limits& limits);

}  // namespace entcat
