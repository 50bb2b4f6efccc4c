#include "entcat/catalysis.hpp"

#include "entcat/errors.hpp"

namespace entcat {

std::string_view to_string(FilterCondition c) {
  switch (c) {
    case FilterCondition::Spread: return "spread";
    case FilterCondition::HeadSplit: return "head_split";
    case FilterCondition::TailSplit: return "tail_split";
    case FilterCondition::TopRatio: return "top_ratio";
    case FilterCondition::BottomRatio: return "bottom_ratio";
  }
  return "unknown";
}

namespace {

// a/b < c/d for b, d > 0. A zero d stands for +infinity on the right.
bool ratio_less(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  if (sgn(d) == 0) return true;
  return a * d < c * b;
}

// a/b > c/d for b, d > 0.
bool ratio_greater(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  return a * d > c * b;
}

// Target coefficients zero-padded to the common length with the source.
struct PaddedTarget {
  const SchmidtVector& phi;
  std::uint64_t n;

  // 1-based beta_j, zero beyond the Schmidt rank.
  Rational beta(std::uint64_t j) const { return j <= phi.size() ? phi[j - 1] : Rational(0); }
};

void require_catalyst_shape(const SchmidtVector& cat) {
  if (cat.size() < 2) {
    throw Error(ErrorKind::InvalidArgument, "a catalyst needs at least two Schmidt coefficients");
  }
}

}  // namespace

FeasibilityReport is_transformable(const SchmidtVector& psi, const SchmidtVector& phi) {
  return majorizes(psi, phi);
}

CatalystVerdict is_catalyst(const SchmidtVector& cat, const SchmidtVector& psi, const SchmidtVector& phi,
                            std::uint64_t copies, const Limits& limits) {
  require_catalyst_shape(cat);
  if (copies < 1) throw Error(ErrorKind::InvalidArgument, "catalyst copies must be >= 1");
  const auto c = tensor_power(cat, copies, limits);
  CatalystVerdict v;
  v.copies_used = copies;
  v.report = majorizes(tensor(psi, c, limits), tensor(phi, c, limits));
  v.is_catalyst = v.report.feasible;
  return v;
}

std::optional<std::uint64_t> min_catalyst_copies(const SchmidtVector& cat, const SchmidtVector& psi,
                                                 const SchmidtVector& phi, std::uint64_t max_copies,
                                                 const Limits& limits) {
  require_catalyst_shape(cat);
  if (max_copies < 1) throw Error(ErrorKind::InvalidArgument, "max copies must be >= 1");
  // Feasibility at m carries over to every m' > m, so the first hit is minimal.
  auto lhs = tensor(psi, cat, limits);
  auto rhs = tensor(phi, cat, limits);
  for (std::uint64_t m = 1; m <= max_copies; ++m) {
    if (m > 1) {
      lhs = tensor(lhs, cat, limits);
      rhs = tensor(rhs, cat, limits);
    }
    if (majorizes(lhs, rhs).feasible) return m;
  }
  return std::nullopt;
}

StabilityResult mlocc_threshold(const SchmidtVector& psi, const SchmidtVector& phi, std::uint64_t k_max,
                                const Limits& limits) {
  if (k_max < 1) throw Error(ErrorKind::InvalidArgument, "k_max must be >= 1");
  StabilityResult result;
  auto psi_p = SchmidtVector::product_state();
  auto phi_p = SchmidtVector::product_state();

  // Powers are checked in increasing order. A failure at p rules out every
  // window that contains p, so the next candidate threshold is p + 1.
  auto feasible = [&](std::uint64_t p) -> bool {
    while (result.checked_up_to < p) {
      psi_p = tensor(psi_p, psi, limits);
      phi_p = tensor(phi_p, phi, limits);
      result.feasible_at.push_back(majorizes(psi_p, phi_p).feasible);
      ++result.checked_up_to;
    }
    return result.feasible_at[p - 1];
  };

  std::uint64_t k = 1;
  while (k <= k_max) {
    std::uint64_t failed = 0;
    for (std::uint64_t p = k; p <= 2 * k - 1; ++p) {
      if (!feasible(p)) {
        failed = p;
        break;
      }
    }
    if (failed == 0) {
      result.threshold = k;
      break;
    }
    k = failed + 1;
  }
  return result;
}

FilterResult lemma3_filter(const SchmidtVector& cat, const SchmidtVector& psi, const SchmidtVector& phi,
                           const Limits& limits) {
  FilterResult result;
  const auto L = l_set(psi, phi, limits);
  if (L.empty()) return result;
  require_catalyst_shape(cat);

  const PaddedTarget target{phi, std::max(psi.size(), phi.size())};
  const auto gamma = cat.expanded(limits);
  const std::uint64_t k = gamma.size();
  const Rational& g1 = gamma.front();
  const Rational& gk = gamma.back();
  const Rational beta1 = target.beta(1);
  const Rational beta_n = target.beta(target.n);

  for (std::uint64_t l : L.indices) {
    const Rational beta_l = target.beta(l);
    const Rational beta_next = target.beta(l + 1);
    if (!ratio_greater(g1, gk, beta_l, beta_next)) {
      result.violations.push_back({FilterCondition::Spread, l, 0});
    }
    for (std::uint64_t i = 1; i <= k - 1; ++i) {
      const Rational& gi = gamma[i - 1];
      const Rational& gnext = gamma[i];
      const bool head = ratio_greater(g1, gi, beta_l, beta_next) || ratio_less(gi, gnext, beta1, beta_l);
      if (!head) result.violations.push_back({FilterCondition::HeadSplit, l, i});
      const bool tail = ratio_greater(gnext, gk, beta_l, beta_next) || ratio_less(gi, gnext, beta_next, beta_n);
      if (!tail) result.violations.push_back({FilterCondition::TailSplit, l, i});
    }
  }
  result.passed = result.violations.empty();
  return result;
}

FilterResult multicopy_filter(const SchmidtVector& cat, const SchmidtVector& psi, const SchmidtVector& phi,
                              const Limits& limits) {
  FilterResult result;
  const auto L = l_set(psi, phi, limits);
  if (L.empty()) return result;
  require_catalyst_shape(cat);

  const PaddedTarget target{phi, std::max(psi.size(), phi.size())};
  const std::uint64_t k = cat.size();
  const Rational& g1 = cat[0];
  const Rational& g2 = cat[1];
  const Rational& g_before_last = cat[k - 2];
  const Rational& gk = cat[k - 1];
  const Rational beta1 = target.beta(1);
  const Rational beta_n = target.beta(target.n);

  for (std::uint64_t l : L.indices) {
    if (!ratio_less(g1, g2, beta1, target.beta(l))) {
      result.violations.push_back({FilterCondition::TopRatio, l, 0});
    }
    if (!ratio_less(g_before_last, gk, target.beta(l + 1), beta_n)) {
      result.violations.push_back({FilterCondition::BottomRatio, l, 0});
    }
  }
  result.passed = result.violations.empty();
  return result;
}

}  // namespace entcat
