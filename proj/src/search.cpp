#include "entcat/search.hpp"

#include <algorithm>
#include <thread>

#include "entcat/errors.hpp"

namespace entcat {

namespace {

void enumerate_rec(std::uint64_t slots, std::uint64_t remaining, std::uint64_t cap,
                   std::vector<std::uint64_t>& prefix,
                   const std::function<void(const std::vector<std::uint64_t>&)>& visit) {
  if (slots == 0) {
    if (remaining == 0) visit(prefix);
    return;
  }
  // Entry must leave at least 1 per remaining slot and stay <= the previous
  // entry; the last entries must still be able to absorb the remainder.
  const std::uint64_t lo = (remaining + slots - 1) / slots;
  const std::uint64_t hi = std::min(cap, remaining - (slots - 1));
  for (std::uint64_t v = lo; v <= hi; ++v) {
    prefix.push_back(v);
    enumerate_rec(slots - 1, remaining - v, v, prefix, visit);
    prefix.pop_back();
  }
}

SchmidtVector grid_vector(const std::vector<std::uint64_t>& parts, std::uint64_t q) {
  std::vector<Rational> coeffs;
  coeffs.reserve(parts.size());
  for (auto p : parts) {
    coeffs.emplace_back(static_cast<unsigned long>(p), static_cast<unsigned long>(q));
    coeffs.back().canonicalize();
  }
  return SchmidtVector::from_coefficients(coeffs);
}

enum class Outcome { PrunedMulticopy, PrunedPerIndex, Rejected, Hit };

struct Evaluation {
  Outcome outcome = Outcome::Rejected;
  std::optional<SearchHit> hit;
};

}  // namespace

void enumerate_grid(std::uint64_t dimension, std::uint64_t denominator,
                    const std::function<void(const std::vector<std::uint64_t>&)>& visit) {
  if (dimension == 0 || denominator < dimension) return;
  std::vector<std::uint64_t> prefix;
  prefix.reserve(dimension);
  enumerate_rec(dimension, denominator, denominator, prefix, visit);
}

std::uint64_t grid_size(std::uint64_t dimension, std::uint64_t denominator) {
  std::uint64_t n = 0;
  enumerate_grid(dimension, denominator, [&](const auto&) { ++n; });
  return n;
}

SearchResult search_catalysts(const SchmidtVector& psi, const SchmidtVector& phi, const SearchConfig& cfg,
                              const Limits& limits) {
  if (cfg.dimension < 2) throw Error(ErrorKind::InvalidArgument, "catalyst dimension must be >= 2");
  if (cfg.denominator < cfg.dimension) {
    throw Error(ErrorKind::InvalidArgument, "denominator must be at least the catalyst dimension");
  }
  if (cfg.copies < 1) throw Error(ErrorKind::InvalidArgument, "copies must be >= 1");

  const auto* lambda = std::get_if<LambdaMode>(&cfg.mode);
  if (lambda) {
    if (sgn(lambda->target) <= 0 || lambda->target > 1) {
      throw Error(ErrorKind::InvalidArgument, "lambda must lie in (0, 1]");
    }
    if (vidal_pmax(psi, phi).p_max >= lambda->target) {
      throw Error(ErrorKind::NoSearchNeeded, "P_max already reaches the requested lambda");
    }
  } else if (majorizes(psi, phi).feasible) {
    throw Error(ErrorKind::NoSearchNeeded, "the transformation is already feasible without a catalyst");
  }

  // Positive entries already exclude the product state (1), which can never
  // change a majorization verdict.
  std::vector<std::vector<std::uint64_t>> grid;
  enumerate_grid(cfg.dimension, cfg.denominator, [&](const auto& parts) { grid.push_back(parts); });

  // The filters are necessary conditions for deterministic catalysis only.
  const bool use_filters = !lambda && !cfg.disable_filters;

  auto evaluate = [&](const std::vector<std::uint64_t>& parts) {
    Evaluation e;
    auto cand = grid_vector(parts, cfg.denominator);
    if (use_filters) {
      if (!multicopy_filter(cand, psi, phi, limits).passed) {
        e.outcome = Outcome::PrunedMulticopy;
        return e;
      }
      if (cfg.copies == 1 && !lemma3_filter(cand, psi, phi, limits).passed) {
        e.outcome = Outcome::PrunedPerIndex;
        return e;
      }
    }
    if (lambda) {
      auto report = combined_pmax(psi, phi, 1, cand, cfg.copies, limits);
      if (report.p_max >= lambda->target) {
        e.outcome = Outcome::Hit;
        e.hit = SearchHit{std::move(cand), std::move(report)};
      }
    } else {
      auto verdict = is_catalyst(cand, psi, phi, cfg.copies, limits);
      if (verdict.is_catalyst) {
        e.outcome = Outcome::Hit;
        e.hit = SearchHit{std::move(cand), std::move(verdict)};
      }
    }
    return e;
  };

  unsigned threads = cfg.threads != 0 ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(grid.size(), 1)));

  // Evaluate in batches so the hit cap can stop the search early; merging in
  // index order keeps the output independent of scheduling.
  const std::size_t batch = std::max<std::size_t>(64, 16 * static_cast<std::size_t>(threads));
  SearchResult result;
  std::vector<Evaluation> evals;
  for (std::size_t begin = 0; begin < grid.size(); begin += batch) {
    const std::size_t end = std::min(grid.size(), begin + batch);
    evals.assign(end - begin, Evaluation{});
    if (threads <= 1) {
      for (std::size_t i = begin; i < end; ++i) evals[i - begin] = evaluate(grid[i]);
    } else {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
          for (std::size_t i = begin + t; i < end; i += threads) evals[i - begin] = evaluate(grid[i]);
        });
      }
    }
    for (auto& e : evals) {
      if (result.hits.size() >= cfg.max_candidates) return result;
      ++result.counters.enumerated;
      switch (e.outcome) {
        case Outcome::PrunedMulticopy:
          ++result.counters.pruned_by_filter;
          ++result.counters.pruned_by_multicopy;
          break;
        case Outcome::PrunedPerIndex:
          ++result.counters.pruned_by_filter;
          ++result.counters.pruned_by_lemma3;
          break;
        case Outcome::Rejected:
          ++result.counters.verified;
          break;
        case Outcome::Hit:
          ++result.counters.verified;
          result.hits.push_back(std::move(*e.hit));
          break;
      }
    }
  }
  return result;
}

TradeOffTable trade_off(const SchmidtVector& psi, const SchmidtVector& phi, const SchmidtVector& cat,
                        std::uint64_t max_source, std::uint64_t max_cat, const Limits& limits) {
  if (max_source < 1 || max_cat < 1) {
    throw Error(ErrorKind::InvalidArgument, "max_source and max_cat must be >= 1");
  }
  TradeOffTable table;
  auto psi_s = SchmidtVector::product_state();
  auto phi_s = SchmidtVector::product_state();
  std::optional<std::uint64_t> previous;
  for (std::uint64_t s = 1; s <= max_source; ++s) {
    psi_s = tensor(psi_s, psi, limits);
    phi_s = tensor(phi_s, phi, limits);
    TradeOffRow row;
    row.source_copies = s;
    row.feasible_without_catalyst = majorizes(psi_s, phi_s).feasible;
    if (!row.feasible_without_catalyst) {
      row.min_catalyst_copies = min_catalyst_copies(cat, psi_s, phi_s, max_cat, limits);
      if (row.min_catalyst_copies && previous && *row.min_catalyst_copies > *previous) table.monotone = false;
      if (row.min_catalyst_copies) previous = row.min_catalyst_copies;
    }
    table.rows.push_back(row);
  }
  return table;
}

}  // namespace entcat
