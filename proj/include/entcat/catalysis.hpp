#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "entcat/majorization.hpp"
#include "entcat/schmidt_vector.hpp"

namespace entcat {

/// Result of the multiple-copy stability search.
struct StabilityResult {
  /// Smallest k with psi^{xp} ≺ phi^{xp} for every p in [k, 2k-1], which
  /// certifies every p >= k.
  std::optional<std::uint64_t> threshold;
  std::uint64_t checked_up_to = 0;
  /// feasible_at[p-1] is the verdict for p copies, p = 1..checked_up_to.
  std::vector<bool> feasible_at;
};

struct CatalystVerdict {
  bool is_catalyst = false;
  std::uint64_t copies_used = 1;
  FeasibilityReport report;
};

/// Necessary conditions a catalyst's coefficients must meet, one per
/// (l, i) pair of the obstruction set.
enum class FilterCondition {
  /// gamma_1/gamma_k > beta_l/beta_{l+1}
  Spread,
  /// gamma_1/gamma_i > beta_l/beta_{l+1}  or  gamma_i/gamma_{i+1} < beta_1/beta_l
  HeadSplit,
  /// gamma_{i+1}/gamma_k > beta_l/beta_{l+1}  or  gamma_i/gamma_{i+1} < beta_{l+1}/beta_n
  TailSplit,
  /// gamma_1/gamma_2 < beta_1/beta_l
  TopRatio,
  /// gamma_{k-1}/gamma_k < beta_{l+1}/beta_n
  BottomRatio,
};

std::string_view to_string(FilterCondition c);

struct FilterViolation {
  FilterCondition condition;
  std::uint64_t l = 0;
  std::uint64_t i = 0;  // 1-based catalyst index; 0 when the condition has none

  friend bool operator==(const FilterViolation&, const FilterViolation&) = default;
};

struct FilterResult {
  bool passed = true;
  std::vector<FilterViolation> violations;
};

/// Deterministic LOCC feasibility of psi -> phi.
FeasibilityReport is_transformable(const SchmidtVector& psi, const SchmidtVector& phi);

/// Tests psi ⊗ cat^{xm} ≺ phi ⊗ cat^{xm}. The catalyst needs at least two
/// components.
CatalystVerdict is_catalyst(const SchmidtVector& cat, const SchmidtVector& psi, const SchmidtVector& phi,
                            std::uint64_t copies, const Limits& limits = {});

/// Smallest m <= max_copies for which cat^{xm} catalyzes psi -> phi.
std::optional<std::uint64_t> min_catalyst_copies(const SchmidtVector& cat, const SchmidtVector& psi,
                                                 const SchmidtVector& phi, std::uint64_t max_copies,
                                                 const Limits& limits = {});

StabilityResult mlocc_threshold(const SchmidtVector& psi, const SchmidtVector& phi, std::uint64_t k_max,
                                const Limits& limits = {});

/// Single-copy catalyst conditions (spread plus the head/tail split for every
/// catalyst index). A failed result means cat cannot catalyze psi -> phi.
FilterResult lemma3_filter(const SchmidtVector& cat, const SchmidtVector& psi, const SchmidtVector& phi,
                           const Limits& limits = {});

/// Top/bottom ratio conditions, which are invariant under tensor powers of the
/// catalyst. A failed result means no power of cat catalyzes psi -> phi.
FilterResult multicopy_filter(const SchmidtVector& cat, const SchmidtVector& psi, const SchmidtVector& phi,
                              const Limits& limits = {});

}  // namespace entcat
