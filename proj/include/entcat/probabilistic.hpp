#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "entcat/rational.hpp"
#include "entcat/schmidt_vector.hpp"

namespace entcat {

/// Maximal LOCC conversion probability min_l E_l(psi)/E_l(phi).
struct ProbabilityReport {
  Rational p_max;
  /// Smallest 1-based l attaining the minimum.
  std::uint64_t minimizing_l = 1;
  /// Tail ratios at the positions where the minimum can occur: every l for
  /// vectors without repeated entries, run boundaries otherwise.
  std::vector<std::pair<std::uint64_t, Rational>> ratios;
  /// Set when phi has larger Schmidt rank than psi; p_max is then 0.
  bool rank_deficient = false;
};

/// (P_max)^p <= best catalytic probability for p copies <= min(1, (alpha_n/beta_n)^p).
struct BoundSandwich {
  Rational lower;
  Rational upper;
  std::uint64_t p = 1;
};

ProbabilityReport vidal_pmax(const SchmidtVector& psi, const SchmidtVector& phi);

bool is_lambda_catalyst(const SchmidtVector& cat, const SchmidtVector& psi, const SchmidtVector& phi,
                        const Rational& lambda, std::uint64_t copies, const Limits& limits = {});

/// Smallest k <= k_max with P_max(psi^{xk} -> phi^{xk}) >= lambda^k.
std::optional<std::uint64_t> mlocc_attains(const SchmidtVector& psi, const SchmidtVector& phi,
                                           const Rational& lambda, std::uint64_t k_max,
                                           const Limits& limits = {});

/// P_max(psi^{xs} ⊗ cat^{xm} -> phi^{xs} ⊗ cat^{xm}); m may be zero.
ProbabilityReport combined_pmax(const SchmidtVector& psi, const SchmidtVector& phi, std::uint64_t source_copies,
                                const SchmidtVector& cat, std::uint64_t cat_copies, const Limits& limits = {});

/// Requires psi and phi of equal Schmidt rank.
BoundSandwich theorem2_bounds(const SchmidtVector& psi, const SchmidtVector& phi, std::uint64_t p);

/// True when P_max already equals alpha_n/beta_n, in which case neither extra
/// copies nor catalysts raise the per-copy probability.
bool collective_useless(const SchmidtVector& psi, const SchmidtVector& phi);

}  // namespace entcat
