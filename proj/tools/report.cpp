#include "report.hpp"

namespace entcat::cli {

Json to_json(const Rational& value, int precision) {
  return Json{{"fraction", to_fraction_string(value)}, {"decimal", to_decimal_string(value, precision)}};
}

Json to_json(const FeasibilityReport& report) {
  return Json{{"feasible", report.feasible},
              {"violated_prefixes", report.violated_prefixes},
              {"checked_length", report.checked_length}};
}

Json to_json(const FilterResult& result) {
  Json violations = Json::array();
  for (const auto& v : result.violations) {
    Json item{{"condition", std::string(to_string(v.condition))}, {"l", v.l}};
    if (v.i != 0) item["i"] = v.i;
    violations.push_back(std::move(item));
  }
  return Json{{"passed", result.passed}, {"violations", std::move(violations)}};
}

Json to_json(const CatalystVerdict& verdict) {
  return Json{{"is_catalyst", verdict.is_catalyst},
              {"copies_used", verdict.copies_used},
              {"report", to_json(verdict.report)}};
}

Json to_json(const StabilityResult& result) {
  Json out;
  out["threshold"] = result.threshold ? Json(*result.threshold) : Json(nullptr);
  out["checked_up_to"] = result.checked_up_to;
  Json per_power = Json::array();
  for (std::size_t p = 0; p < result.feasible_at.size(); ++p) {
    per_power.push_back(Json{{"copies", p + 1}, {"feasible", static_cast<bool>(result.feasible_at[p])}});
  }
  out["powers"] = std::move(per_power);
  return out;
}

Json to_json(const ProbabilityReport& report, int precision) {
  Json ratios = Json::array();
  for (const auto& [l, r] : report.ratios) ratios.push_back(Json{{"l", l}, {"ratio", to_json(r, precision)}});
  return Json{{"p_max", to_json(report.p_max, precision)},
              {"minimizing_l", report.minimizing_l},
              {"rank_deficient", report.rank_deficient},
              {"ratios", std::move(ratios)}};
}

Json to_json(const BoundSandwich& bounds, int precision) {
  return Json{{"p", bounds.p},
              {"lower", to_json(bounds.lower, precision)},
              {"upper", to_json(bounds.upper, precision)},
              {"collapsed", bounds.lower == bounds.upper}};
}

Json to_json(const TradeOffTable& table) {
  Json rows = Json::array();
  for (const auto& r : table.rows) {
    rows.push_back(Json{{"source_copies", r.source_copies},
                        {"min_catalyst_copies", r.min_catalyst_copies ? Json(*r.min_catalyst_copies) : Json(nullptr)},
                        {"feasible_alone", r.feasible_without_catalyst}});
  }
  return Json{{"rows", std::move(rows)}, {"monotone", table.monotone}};
}

Json to_json(const SearchHit& hit, int precision) {
  Json out{{"candidate", serialize(hit.candidate)}};
  if (const auto* v = std::get_if<CatalystVerdict>(&hit.evidence)) {
    out["verdict"] = to_json(*v);
  } else {
    out["probability"] = to_json(std::get<ProbabilityReport>(hit.evidence), precision);
  }
  return out;
}

Json to_json(const SearchCounters& counters) {
  return Json{{"enumerated", counters.enumerated},
              {"pruned_by_filter", counters.pruned_by_filter},
              {"pruned_by_multicopy", counters.pruned_by_multicopy},
              {"pruned_by_lemma3", counters.pruned_by_lemma3},
              {"verified", counters.verified}};
}

}  // namespace entcat::cli
