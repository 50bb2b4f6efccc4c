#include "entcat/schmidt_vector.hpp"

#include <algorithm>

#include "entcat/errors.hpp"

namespace entcat {

namespace {

// Sorts runs by decreasing value and merges equal values.
std::vector<Run> canonical_runs(std::vector<Run> runs) {
  std::erase_if(runs, [](const Run& r) { return r.count == 0 || sgn(r.value) == 0; });
  std::sort(runs.begin(), runs.end(), [](const Run& a, const Run& b) { return a.value > b.value; });
  std::vector<Run> merged;
  merged.reserve(runs.size());
  for (auto& r : runs) {
    if (!merged.empty() && merged.back().value == r.value) {
      merged.back().count += r.count;
    } else {
      merged.push_back(std::move(r));
    }
  }
  return merged;
}

}  // namespace

std::uint64_t checked_length_product(std::uint64_t a, std::uint64_t b, const Limits& limits) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out) || out > limits.component_cap) {
    throw Error(ErrorKind::ResourceLimit,
                "expanded length " + std::to_string(a) + " x " + std::to_string(b) +
                    " exceeds component cap " + std::to_string(limits.component_cap));
  }
  return out;
}

SchmidtVector SchmidtVector::from_runs(std::vector<Run> runs, bool normalize) {
  for (const auto& r : runs) {
    if (sgn(r.value) < 0) {
      throw Error(ErrorKind::NonPositiveEntry, "negative coefficient " + to_fraction_string(r.value));
    }
  }
  SchmidtVector v;
  v.runs_ = canonical_runs(std::move(runs));
  if (v.runs_.empty()) throw Error(ErrorKind::EmptyInput, "no nonzero coefficients");

  Rational total = 0;
  for (const auto& r : v.runs_) total += r.value * r.count;
  if (total != 1) {
    if (!normalize) {
      throw Error(ErrorKind::NotNormalized, "coefficients sum to " + to_fraction_string(total));
    }
    for (auto& r : v.runs_) r.value /= total;
  }
  v.finish();
  return v;
}

SchmidtVector SchmidtVector::from_coefficients(std::span<const Rational> coeffs, bool normalize) {
  std::vector<Run> runs;
  runs.reserve(coeffs.size());
  for (const auto& c : coeffs) runs.push_back({c, 1});
  return from_runs(std::move(runs), normalize);
}

SchmidtVector SchmidtVector::product_state() {
  SchmidtVector v;
  v.runs_.push_back({Rational(1), 1});
  v.finish();
  return v;
}

void SchmidtVector::finish() {
  offsets_.clear();
  offsets_.reserve(runs_.size());
  size_ = 0;
  for (const auto& r : runs_) {
    offsets_.push_back(size_);
    size_ += r.count;
  }
}

const Rational& SchmidtVector::operator[](std::uint64_t index) const {
  if (index >= size_) {
    throw Error(ErrorKind::IndexOutOfRange,
                "index " + std::to_string(index) + " outside vector of length " + std::to_string(size_));
  }
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(), index);
  return runs_[static_cast<std::size_t>(it - offsets_.begin()) - 1].value;
}

Rational SchmidtVector::prefix_sum(std::uint64_t count) const {
  Rational sum = 0;
  for (const auto& r : runs_) {
    if (count == 0) break;
    std::uint64_t take = std::min(count, r.count);
    sum += r.value * take;
    count -= take;
  }
  return sum;
}

std::vector<Rational> SchmidtVector::expanded(const Limits& limits) const {
  checked_length_product(size_, 1, limits);
  std::vector<Rational> out;
  out.reserve(size_);
  for (const auto& r : runs_) out.insert(out.end(), r.count, r.value);
  return out;
}

SchmidtVector parse_vector(std::string_view text, bool normalize) {
  std::vector<Rational> coeffs;
  std::size_t start = 0;
  bool any_token = false;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    auto token = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    bool blank = token.find_first_not_of(" \t\r\n") == std::string_view::npos;
    if (!blank) {
      any_token = true;
      coeffs.push_back(parse_rational(token));
    } else if (comma != std::string_view::npos || any_token) {
      throw Error(ErrorKind::MalformedNumber, "empty entry in '" + std::string(text) + "'");
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (coeffs.empty()) throw Error(ErrorKind::EmptyInput, "empty coefficient list");
  return SchmidtVector::from_coefficients(coeffs, normalize);
}

std::string serialize(const SchmidtVector& v, const Limits& limits) {
  checked_length_product(v.size(), 1, limits);
  std::string out;
  for (const auto& r : v.runs()) {
    const std::string s = to_fraction_string(r.value);
    for (std::uint64_t i = 0; i < r.count; ++i) {
      if (!out.empty()) out.push_back(',');
      out += s;
    }
  }
  return out;
}

SchmidtVector tensor(const SchmidtVector& x, const SchmidtVector& y, const Limits& limits) {
  checked_length_product(x.size(), y.size(), limits);
  std::vector<Run> runs;
  runs.reserve(x.run_count() * y.run_count());
  for (const auto& a : x.runs()) {
    for (const auto& b : y.runs()) runs.push_back({a.value * b.value, a.count * b.count});
  }
  // Sum is exactly 1 because both factors sum to 1.
  return SchmidtVector::from_runs(std::move(runs));
}

SchmidtVector tensor_power(const SchmidtVector& x, std::uint64_t k, const Limits& limits) {
  std::uint64_t length = 1;
  for (std::uint64_t i = 0; i < k; ++i) length = checked_length_product(length, x.size(), limits);
  SchmidtVector out = SchmidtVector::product_state();
  for (std::uint64_t i = 0; i < k; ++i) out = tensor(out, x, limits);
  return out;
}

}  // namespace entcat
