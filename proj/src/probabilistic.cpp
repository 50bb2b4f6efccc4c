#include "entcat/probabilistic.hpp"

#include "entcat/errors.hpp"
#include "entcat/majorization.hpp"

namespace entcat {

namespace {

void require_probability(const Rational& lambda) {
  if (sgn(lambda) <= 0 || lambda > 1) {
    throw Error(ErrorKind::InvalidArgument, "lambda must lie in (0, 1], got " + to_fraction_string(lambda));
  }
}

void require_equal_rank(const SchmidtVector& psi, const SchmidtVector& phi) {
  if (psi.size() != phi.size()) {
    throw Error(ErrorKind::DimensionMismatch, "Schmidt ranks differ: " + std::to_string(psi.size()) + " vs " +
                                                  std::to_string(phi.size()));
  }
}

}  // namespace

ProbabilityReport vidal_pmax(const SchmidtVector& psi, const SchmidtVector& phi) {
  ProbabilityReport report;
  bool have_min = false;

  // Inside a segment both tails are linear in l, so their ratio is monotone
  // and the minimum sits at one of the segment's end points.
  auto consider = [&](std::uint64_t l, const Rational& tail_psi, const Rational& tail_phi) {
    if (sgn(tail_phi) == 0) return;
    Rational r = tail_psi / tail_phi;
    if (!have_min || r < report.p_max) {
      report.p_max = r;
      report.minimizing_l = l;
      have_min = true;
    }
    report.ratios.emplace_back(l, std::move(r));
  };

  for_each_segment(psi, phi, [&](std::uint64_t pos, std::uint64_t len, const Rational& a, const Rational& b,
                                 const Rational& px, const Rational& py) {
    consider(pos + 1, Rational(1 - px), Rational(1 - py));
    if (len > 1) {
      const std::uint64_t before = len - 1;
      consider(pos + len, Rational(1 - px - a * before), Rational(1 - py - b * before));
    }
  });

  report.rank_deficient = phi.size() > psi.size();
  return report;
}

bool is_lambda_catalyst(const SchmidtVector& cat, const SchmidtVector& psi, const SchmidtVector& phi,
                        const Rational& lambda, std::uint64_t copies, const Limits& limits) {
  require_probability(lambda);
  if (copies < 1) throw Error(ErrorKind::InvalidArgument, "catalyst copies must be >= 1");
  return combined_pmax(psi, phi, 1, cat, copies, limits).p_max >= lambda;
}

std::optional<std::uint64_t> mlocc_attains(const SchmidtVector& psi, const SchmidtVector& phi,
                                           const Rational& lambda, std::uint64_t k_max, const Limits& limits) {
  require_probability(lambda);
  if (k_max < 1) throw Error(ErrorKind::InvalidArgument, "k_max must be >= 1");
  auto psi_k = SchmidtVector::product_state();
  auto phi_k = SchmidtVector::product_state();
  Rational target = 1;
  for (std::uint64_t k = 1; k <= k_max; ++k) {
    psi_k = tensor(psi_k, psi, limits);
    phi_k = tensor(phi_k, phi, limits);
    target *= lambda;
    if (vidal_pmax(psi_k, phi_k).p_max >= target) return k;
  }
  return std::nullopt;
}

ProbabilityReport combined_pmax(const SchmidtVector& psi, const SchmidtVector& phi, std::uint64_t source_copies,
                                const SchmidtVector& cat, std::uint64_t cat_copies, const Limits& limits) {
  if (source_copies < 1) throw Error(ErrorKind::InvalidArgument, "source copies must be >= 1");
  const auto c = tensor_power(cat, cat_copies, limits);
  return vidal_pmax(tensor(tensor_power(psi, source_copies, limits), c, limits),
                    tensor(tensor_power(phi, source_copies, limits), c, limits));
}

BoundSandwich theorem2_bounds(const SchmidtVector& psi, const SchmidtVector& phi, std::uint64_t p) {
  require_equal_rank(psi, phi);
  if (p < 1) throw Error(ErrorKind::InvalidArgument, "power must be >= 1");
  BoundSandwich b;
  b.p = p;
  b.lower = pow(vidal_pmax(psi, phi).p_max, p);
  const Rational tail_ratio = psi.smallest() / phi.smallest();
  b.upper = tail_ratio >= 1 ? Rational(1) : pow(tail_ratio, p);
  return b;
}

bool collective_useless(const SchmidtVector& psi, const SchmidtVector& phi) {
  require_equal_rank(psi, phi);
  return vidal_pmax(psi, phi).p_max == psi.smallest() / phi.smallest();
}

}  // namespace entcat
