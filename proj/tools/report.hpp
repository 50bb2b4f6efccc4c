#pragma once

#include <json.hpp>

#include "entcat/entcat.hpp"

namespace entcat::cli {

using Json = nlohmann::ordered_json;

/// Exact fraction plus a rounded decimal; the fraction is authoritative.
Json to_json(const Rational& value, int precision);
Json to_json(const FeasibilityReport& report);
Json to_json(const FilterResult& result);
Json to_json(const CatalystVerdict& verdict);
Json to_json(const StabilityResult& result);
Json to_json(const ProbabilityReport& report, int precision);
Json to_json(const BoundSandwich& bounds, int precision);
Json to_json(const TradeOffTable& table);
Json to_json(const SearchHit& hit, int precision);
Json to_json(const SearchCounters& counters);

}  // namespace entcat::cli
