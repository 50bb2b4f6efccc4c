#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "entcat/entcat.hpp"

namespace entcat::testing {

inline SchmidtVector vec(const std::string& text) { return parse_vector(text); }

inline Rational q(const std::string& text) { return parse_rational(text); }

// States used throughout the worked examples.
inline SchmidtVector intro_source() { return vec("0.4,0.4,0.1,0.1"); }
inline SchmidtVector intro_target() { return vec("0.5,0.25,0.25"); }
inline SchmidtVector source_a() { return vec("0.4,0.4,0.1,0.1"); }
inline SchmidtVector target_close() { return vec("0.5,0.25,0.22,0.03"); }
inline SchmidtVector target_far() { return vec("0.5,0.25,0.2,0.05"); }
inline SchmidtVector qutrit_catalyst() { return vec("50/103,30/103,23/103"); }
inline SchmidtVector qubit_catalyst() { return vec("0.6,0.4"); }
inline SchmidtVector padded_source() { return vec("40/101,40/101,10/101,10/101,1/101"); }
inline SchmidtVector padded_target() { return vec("50/101,25/101,20/101,5/101,1/101"); }
inline SchmidtVector steep_catalyst() { return vec("0.7,0.3"); }
inline SchmidtVector prob_source() { return vec("0.6,0.2,0.2"); }
inline SchmidtVector prob_target() { return vec("0.5,0.4,0.1"); }
inline SchmidtVector prob_catalyst() { return vec("0.65,0.35"); }

/// Random Schmidt vector of the given rank with entries j/q, j >= 1.
inline SchmidtVector random_vector(std::mt19937_64& rng, std::uint64_t dim, std::uint64_t q) {
  std::vector<std::uint64_t> cuts;
  std::uniform_int_distribution<std::uint64_t> pick(1, q - 1);
  while (cuts.size() + 1 < dim) {
    auto c = pick(rng);
    if (std::find(cuts.begin(), cuts.end(), c) == cuts.end()) cuts.push_back(c);
  }
  std::sort(cuts.begin(), cuts.end());
  std::vector<Rational> coeffs;
  std::uint64_t prev = 0;
  for (auto c : cuts) {
    coeffs.emplace_back(static_cast<unsigned long>(c - prev), static_cast<unsigned long>(q));
    prev = c;
  }
  coeffs.emplace_back(static_cast<unsigned long>(q - prev), static_cast<unsigned long>(q));
  for (auto& c : coeffs) c.canonicalize();
  return SchmidtVector::from_coefficients(coeffs);
}

/// Fully expanded reference computations sharing no code with the library's
/// run-based algorithms.
namespace brute {

inline std::vector<Rational> sorted_desc(std::vector<Rational> v) {
  std::sort(v.begin(), v.end(), [](const Rational& a, const Rational& b) { return a > b; });
  return v;
}

inline std::vector<Rational> product(const std::vector<Rational>& x, const std::vector<Rational>& y) {
  std::vector<Rational> out;
  for (const auto& a : x)
    for (const auto& b : y) out.push_back(a * b);
  return sorted_desc(out);
}

inline std::vector<Rational> power(const std::vector<Rational>& x, unsigned k) {
  std::vector<Rational> out{Rational(1)};
  for (unsigned i = 0; i < k; ++i) out = product(out, x);
  return out;
}

inline std::vector<std::uint64_t> violated(std::vector<Rational> x, std::vector<Rational> y) {
  const std::size_t n = std::max(x.size(), y.size());
  x.resize(n, Rational(0));
  y.resize(n, Rational(0));
  std::vector<std::uint64_t> out;
  Rational sx = 0, sy = 0;
  for (std::size_t l = 0; l < n; ++l) {
    sx += x[l];
    sy += y[l];
    if (sx > sy) out.push_back(l + 1);
  }
  return out;
}

inline bool majorizes(const std::vector<Rational>& x, const std::vector<Rational>& y) {
  return violated(x, y).empty();
}

inline Rational pmax(std::vector<Rational> x, std::vector<Rational> y) {
  const std::size_t n = std::max(x.size(), y.size());
  x.resize(n, Rational(0));
  y.resize(n, Rational(0));
  bool have = false;
  Rational best;
  for (std::size_t l = 0; l < n; ++l) {
    Rational tx = 0, ty = 0;
    for (std::size_t i = l; i < n; ++i) {
      tx += x[i];
      ty += y[i];
    }
    if (ty == 0) continue;
    Rational r = tx / ty;
    if (!have || r < best) best = r;
    have = true;
  }
  return best;
}

}  // namespace brute

}  // namespace entcat::testing
