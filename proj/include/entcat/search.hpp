#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "entcat/catalysis.hpp"
#include "entcat/probabilistic.hpp"
#include "entcat/schmidt_vector.hpp"

namespace entcat {

struct DeterministicMode {};

struct LambdaMode {
  Rational target;
};

struct SearchConfig {
  /// Catalyst Schmidt rank, at least 2.
  std::uint64_t dimension = 2;
  /// Grid resolution: candidate entries are j/denominator.
  std::uint64_t denominator = 10;
  /// Stop after this many verified hits.
  std::uint64_t max_candidates = 1000;
  std::variant<DeterministicMode, LambdaMode> mode = DeterministicMode{};
  /// Catalyst copies tensored in during verification.
  std::uint64_t copies = 1;
  /// Worker threads for candidate evaluation; 0 picks the hardware count.
  unsigned threads = 0;
  /// Skip the necessary-condition filters. Used to cross-check pruning.
  bool disable_filters = false;
};

struct SearchHit {
  SchmidtVector candidate;
  std::variant<CatalystVerdict, ProbabilityReport> evidence;
};

struct SearchCounters {
  std::uint64_t enumerated = 0;
  std::uint64_t pruned_by_filter = 0;
  std::uint64_t pruned_by_multicopy = 0;
  std::uint64_t pruned_by_lemma3 = 0;
  std::uint64_t verified = 0;
};

struct SearchResult {
  std::vector<SearchHit> hits;
  SearchCounters counters;
};

/// Nonincreasing positive integer k-tuples summing to q, in lexicographic
/// order, each scaled to a Schmidt vector.
void enumerate_grid(std::uint64_t dimension, std::uint64_t denominator,
                    const std::function<void(const std::vector<std::uint64_t>&)>& visit);

std::uint64_t grid_size(std::uint64_t dimension, std::uint64_t denominator);

/// Exhaustive grid search for catalysts of psi -> phi. Candidates are pruned
/// with the multi-copy filter, then (single copy, deterministic mode) the
/// per-index filter, and the survivors are verified exactly. Results are in
/// enumeration order regardless of thread count.
SearchResult search_catalysts(const SchmidtVector& psi, const SchmidtVector& phi, const SearchConfig& cfg,
                              const Limits& limits = {});

struct TradeOffRow {
  std::uint64_t source_copies = 0;
  std::optional<std::uint64_t> min_catalyst_copies;
  bool feasible_without_catalyst = false;
};

struct TradeOffTable {
  std::vector<TradeOffRow> rows;
  /// False when some later row needs more catalyst copies than an earlier one.
  bool monotone = true;
};

TradeOffTable trade_off(const SchmidtVector& psi, const SchmidtVector& phi, const SchmidtVector& cat,
                        std::uint64_t max_source, std::uint64_t max_cat, const Limits& limits = {});

}  // namespace entcat
