// Randomized property suites. The large families run at least 10^4 cases
// with Schmidt rank <= 4 and tensor powers <= 3.

#include "doctest.h"
#include "property_suites.hpp"

using namespace entcat;
using namespace entcat::testing;

namespace {

constexpr long kCases = 10'000;

void expect_clean(const SuiteOutcome& o) {
  MESSAGE(o.cases << " cases, " << o.violations << " violations. " << o.note);
  CHECK(o.cases >= kCases);
  CHECK(o.violations == 0);
}

}  // namespace

TEST_CASE("majorization is a partial order matching the prefix oracle") {
  expect_clean(partial_order_suite(kCases));
}

TEST_CASE("tensoring preserves majorization") { expect_clean(tensor_monotonicity_suite(kCases)); }

TEST_CASE("catalyst filters are necessary conditions") { expect_clean(filter_soundness_suite(kCases)); }

TEST_CASE("catalytic probability stays inside the bound sandwich") { expect_clean(sandwich_suite(kCases)); }

TEST_CASE("extreme ratios of catalyst powers") { expect_clean(power_ratio_suite(kCases)); }

TEST_CASE("lambda-catalyst and copy-count monotonicity") {
  std::mt19937_64 rng(606);
  for (int trial = 0; trial < 2000; ++trial) {
    auto psi = small_vector(rng, 2);
    auto phi = small_vector(rng, 2);
    auto cat = small_vector(rng, 2);
    const auto p = combined_pmax(psi, phi, 1, cat, 1).p_max;
    if (sgn(p) > 0) {
      REQUIRE(is_lambda_catalyst(cat, psi, phi, p, 1));
      REQUIRE(is_lambda_catalyst(cat, psi, phi, p / 2, 1));
    }
    if (p < 1) REQUIRE_FALSE(is_lambda_catalyst(cat, psi, phi, (p + 1) / 2, 1));

    bool seen = false;
    for (std::uint64_t m = 1; m <= 3; ++m) {
      const bool now = is_catalyst(cat, psi, phi, m).is_catalyst;
      if (seen) REQUIRE(now);
      seen = seen || now;
    }

    const Rational single = vidal_pmax(psi, phi).p_max;
    if (sgn(single) > 0) REQUIRE(mlocc_attains(psi, phi, single, 3) == std::optional<std::uint64_t>{1});
  }
}

TEST_CASE("mlocc_attains returns the first power meeting lambda^k") {
  std::mt19937_64 rng(707);
  for (int trial = 0; trial < 300; ++trial) {
    auto psi = random_vector(rng, 3, 20);
    auto phi = random_vector(rng, 3, 20);
    const auto single = vidal_pmax(psi, phi).p_max;
    if (sgn(single) == 0 || single == 1) continue;
    const Rational lambda = (single + 1) / 2;
    auto k = mlocc_attains(psi, phi, lambda, 4);
    if (!k) continue;
    REQUIRE(vidal_pmax(tensor_power(psi, *k), tensor_power(phi, *k)).p_max >= pow(lambda, *k));
    if (*k > 1) {
      REQUIRE(vidal_pmax(tensor_power(psi, *k - 1), tensor_power(phi, *k - 1)).p_max < pow(lambda, *k - 1));
    }
  }
}
