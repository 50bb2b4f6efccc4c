// entcat: command-line front end for the entanglement transformation library.
//
// Exit status: 0 success / positive verdict, 3 negative verdict, 2 input or
// usage error, 4 component cap exceeded.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "entcat/entcat.hpp"
#include "report.hpp"

namespace {

using entcat::cli::Json;
using entcat::cli::to_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNegative = 3;
constexpr int kExitResource = 4;

struct Options {
  std::string format = "text";
  bool stable = false;
  int precision = 4;
  bool normalize = false;
  std::optional<std::uint64_t> component_cap;
};

class Runner {
 public:
  explicit Runner(const Options& opts) : opts_(opts) {
    limits_.component_cap = opts.component_cap.value_or(cap_from_env());
  }

  const entcat::Limits& limits() const { return limits_; }
  const Options& options() const { return opts_; }
  bool json() const { return opts_.format == "json" || opts_.format == "jsonl"; }

  /// "-" reads the next line from standard input.
  entcat::SchmidtVector vector(const std::string& name, const std::string& text) {
    std::string source = text;
    if (text == "-") {
      if (!std::getline(std::cin, source)) {
        throw entcat::Error(entcat::ErrorKind::EmptyInput, "no line on stdin for " + name);
      }
    }
    auto v = entcat::parse_vector(source, opts_.normalize);
    inputs_[name] = entcat::serialize(v, limits_);
    return v;
  }

  entcat::Rational rational(const std::string& name, const std::string& text) {
    auto r = entcat::parse_rational(text);
    inputs_[name] = entcat::to_fraction_string(r);
    return r;
  }

  void emit(const std::string& command, Json result) const {
    Json out;
    out["command"] = command;
    out["inputs"] = inputs_;
    out["result"] = std::move(result);
    out["exact"] = true;
    if (!opts_.stable) {
      out["timing_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start_)
                             .count();
    }
    std::cout << (opts_.format == "jsonl" ? out.dump() : out.dump(2)) << "\n";
  }

  std::string dec(const entcat::Rational& r) const {
    return entcat::to_fraction_string(r) + " (" + entcat::to_decimal_string(r, opts_.precision) + ")";
  }

 private:
  static std::uint64_t cap_from_env() {
    if (const char* env = std::getenv("ENTCAT_COMPONENT_CAP")) {
      try {
        return std::stoull(env);
      } catch (const std::exception&) {
        throw entcat::Error(entcat::ErrorKind::InvalidArgument, "ENTCAT_COMPONENT_CAP is not an integer");
      }
    }
    return entcat::Limits::kDefaultComponentCap;
  }

  Options opts_;
  entcat::Limits limits_;
  Json inputs_ = Json::object();
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string list(const std::vector<std::uint64_t>& v) {
  std::string out;
  for (auto x : v) out += (out.empty() ? "" : ",") + std::to_string(x);
  return out.empty() ? "-" : out;
}

std::string filter_line(const entcat::FilterResult& r) {
  if (r.passed) return "passed";
  std::string out = "violated";
  for (const auto& v : r.violations) {
    out += " " + std::string(entcat::to_string(v.condition)) + "(l=" + std::to_string(v.l);
    if (v.i != 0) out += ",i=" + std::to_string(v.i);
    out += ")";
  }
  return out;
}

int cmd_check(Runner& run, const std::string& psi_s, const std::string& phi_s) {
  auto psi = run.vector("psi", psi_s);
  auto phi = run.vector("phi", phi_s);
  auto report = entcat::is_transformable(psi, phi);
  if (run.json()) {
    run.emit("check", to_json(report));
  } else {
    std::cout << "feasible: " << (report.feasible ? "yes" : "no") << "\n"
              << "violated prefixes: " << list(report.violated_prefixes) << "\n"
              << "checked length: " << report.checked_length << "\n";
  }
  return report.feasible ? kExitOk : kExitNegative;
}

int cmd_catalyze(Runner& run, const std::string& psi_s, const std::string& phi_s, const std::string& cat_s,
                 std::uint64_t copies) {
  auto psi = run.vector("psi", psi_s);
  auto phi = run.vector("phi", phi_s);
  auto cat = run.vector("cat", cat_s);
  auto verdict = entcat::is_catalyst(cat, psi, phi, copies, run.limits());
  auto single = entcat::lemma3_filter(cat, psi, phi, run.limits());
  auto multi = entcat::multicopy_filter(cat, psi, phi, run.limits());
  if (run.json()) {
    Json result = to_json(verdict);
    result["lemma3_filter"] = to_json(single);
    result["multicopy_filter"] = to_json(multi);
    run.emit("catalyze", std::move(result));
  } else {
    std::cout << "catalyst x" << copies << ": " << (verdict.is_catalyst ? "yes" : "no") << "\n"
              << "violated prefixes: " << list(verdict.report.violated_prefixes) << "\n"
              << "single-copy filter: " << filter_line(single) << "\n"
              << "multi-copy filter: " << filter_line(multi) << "\n";
    if (!multi.passed) std::cout << "no number of copies of this state can catalyze the transformation\n";
  }
  return verdict.is_catalyst ? kExitOk : kExitNegative;
}

int cmd_mlocc(Runner& run, const std::string& psi_s, const std::string& phi_s, std::uint64_t k_max) {
  auto psi = run.vector("psi", psi_s);
  auto phi = run.vector("phi", phi_s);
  auto result = entcat::mlocc_threshold(psi, phi, k_max, run.limits());
  if (run.json()) {
    run.emit("mlocc", to_json(result));
  } else {
    std::cout << "threshold: " << (result.threshold ? std::to_string(*result.threshold) : "none") << "\n";
    for (std::size_t p = 0; p < result.feasible_at.size(); ++p) {
      std::cout << "  copies " << p + 1 << ": " << (result.feasible_at[p] ? "feasible" : "infeasible") << "\n";
    }
  }
  return result.threshold ? kExitOk : kExitNegative;
}

int cmd_tradeoff(Runner& run, const std::string& psi_s, const std::string& phi_s, const std::string& cat_s,
                 std::uint64_t max_source, std::uint64_t max_cat) {
  auto psi = run.vector("psi", psi_s);
  auto phi = run.vector("phi", phi_s);
  auto cat = run.vector("cat", cat_s);
  auto table = entcat::trade_off(psi, phi, cat, max_source, max_cat, run.limits());
  const auto& fmt = run.options().format;
  if (fmt == "csv") {
    std::cout << "source_copies,min_catalyst_copies,feasible_alone\n";
    for (const auto& r : table.rows) {
      std::cout << r.source_copies << ","
                << (r.min_catalyst_copies ? std::to_string(*r.min_catalyst_copies) : "") << ","
                << (r.feasible_without_catalyst ? "true" : "false") << "\n";
    }
  } else if (run.json()) {
    run.emit("tradeoff", to_json(table));
  } else {
    std::cout << "source  catalyst copies\n";
    for (const auto& r : table.rows) {
      std::cout << "  " << r.source_copies << "     ";
      if (r.feasible_without_catalyst) {
        std::cout << "none needed\n";
      } else if (r.min_catalyst_copies) {
        std::cout << *r.min_catalyst_copies << "\n";
      } else {
        std::cout << "> " << max_cat << "\n";
      }
    }
  }
  if (!table.monotone) std::cerr << "warning: catalyst copies do not decrease with source copies\n";
  return kExitOk;
}

int cmd_pmax(Runner& run, const std::string& psi_s, const std::string& phi_s, std::uint64_t source_copies,
             const std::optional<std::string>& cat_s, std::uint64_t cat_copies) {
  auto psi = run.vector("psi", psi_s);
  auto phi = run.vector("phi", phi_s);
  auto cat = cat_s ? run.vector("cat", *cat_s) : entcat::SchmidtVector::product_state();
  if (!cat_s) cat_copies = 0;
  auto report = entcat::combined_pmax(psi, phi, source_copies, cat, cat_copies, run.limits());
  if (run.json()) {
    Json result = to_json(report, run.options().precision);
    result["source_copies"] = source_copies;
    result["cat_copies"] = cat_copies;
    run.emit("pmax", std::move(result));
  } else {
    std::cout << "p_max: " << run.dec(report.p_max) << "\n"
              << "minimizing l: " << report.minimizing_l << "\n";
    if (report.rank_deficient) std::cout << "target has larger Schmidt rank than source\n";
  }
  return kExitOk;
}

int cmd_bounds(Runner& run, const std::string& psi_s, const std::string& phi_s, std::uint64_t power) {
  auto psi = run.vector("psi", psi_s);
  auto phi = run.vector("phi", phi_s);
  auto b = entcat::theorem2_bounds(psi, phi, power);
  const bool useless = entcat::collective_useless(psi, phi);
  if (run.json()) {
    Json result = to_json(b, run.options().precision);
    result["collective_useless"] = useless;
    run.emit("bounds", std::move(result));
  } else {
    std::cout << "lower: " << run.dec(b.lower) << "\n"
              << "upper: " << run.dec(b.upper) << "\n";
    if (useless) std::cout << "copies and catalysts cannot raise the per-copy probability\n";
  }
  return kExitOk;
}

int cmd_search(Runner& run, const std::string& psi_s, const std::string& phi_s, entcat::SearchConfig cfg,
               const std::optional<std::string>& lambda_s) {
  auto psi = run.vector("psi", psi_s);
  auto phi = run.vector("phi", phi_s);
  if (lambda_s) cfg.mode = entcat::LambdaMode{run.rational("lambda", *lambda_s)};
  auto result = entcat::search_catalysts(psi, phi, cfg, run.limits());
  const int precision = run.options().precision;
  const auto& fmt = run.options().format;
  if (fmt == "jsonl") {
    for (const auto& hit : result.hits) std::cout << to_json(hit, precision).dump() << "\n";
    run.emit("search", Json{{"hits", result.hits.size()}, {"counters", to_json(result.counters)}});
  } else if (fmt == "json") {
    Json hits = Json::array();
    for (const auto& hit : result.hits) hits.push_back(to_json(hit, precision));
    run.emit("search", Json{{"hits", std::move(hits)}, {"counters", to_json(result.counters)}});
  } else {
    for (const auto& hit : result.hits) {
      std::cout << serialize(hit.candidate);
      if (const auto* p = std::get_if<entcat::ProbabilityReport>(&hit.evidence)) {
        std::cout << "  p_max " << run.dec(p->p_max);
      }
      std::cout << "\n";
    }
    const auto& c = result.counters;
    std::cout << "enumerated " << c.enumerated << ", pruned " << c.pruned_by_filter << " (multi-copy "
              << c.pruned_by_multicopy << ", single-copy " << c.pruned_by_lemma3 << "), verified " << c.verified
              << ", hits " << result.hits.size() << "\n";
  }
  return result.hits.empty() ? kExitNegative : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact analysis of bipartite pure-state entanglement transformations"};
  app.require_subcommand(1);
  Options opts;
  std::function<int(Runner&)> action;

  auto add_common = [&](CLI::App* sub, std::vector<std::string> formats) {
    sub->add_option("--format", opts.format, "Output format")->check(CLI::IsMember(formats));
    sub->add_flag("--stable", opts.stable, "Omit timing so identical runs give identical output");
    sub->add_option("--precision", opts.precision, "Decimal places for rounded values")
        ->check(CLI::Range(0, 60));
    sub->add_flag("--normalize", opts.normalize, "Rescale vectors that do not sum to 1");
    sub->add_option("--component-cap", opts.component_cap,
                    "Maximum expanded vector length (default: $ENTCAT_COMPONENT_CAP or 50000000)");
  };

  std::string psi, phi, cat;
  std::optional<std::string> opt_cat, lambda;
  std::uint64_t copies = 1, k_max = 12, max_source = 6, max_cat = 12, source_copies = 1, cat_copies = 1,
                power = 1;
  entcat::SearchConfig search_cfg;

  auto* check = app.add_subcommand("check", "Deterministic LOCC feasibility (majorization)");
  check->add_option("psi", psi, "Source Schmidt coefficients, or - for stdin")->required();
  check->add_option("phi", phi, "Target Schmidt coefficients, or - for stdin")->required();
  add_common(check, {"text", "json"});
  check->callback([&] { action = [&](Runner& r) { return cmd_check(r, psi, phi); }; });

  auto* catalyze = app.add_subcommand("catalyze", "Test a catalyst (optionally several copies of it)");
  catalyze->add_option("psi", psi)->required();
  catalyze->add_option("phi", phi)->required();
  catalyze->add_option("cat", cat)->required();
  catalyze->add_option("--copies", copies, "Catalyst copies")->check(CLI::PositiveNumber);
  add_common(catalyze, {"text", "json"});
  catalyze->callback([&] { action = [&](Runner& r) { return cmd_catalyze(r, psi, phi, cat, copies); }; });

  auto* mlocc = app.add_subcommand("mlocc", "Smallest stable number of jointly transformed copies");
  mlocc->add_option("psi", psi)->required();
  mlocc->add_option("phi", phi)->required();
  mlocc->add_option("--max", k_max, "Largest threshold to try")->check(CLI::PositiveNumber);
  add_common(mlocc, {"text", "json"});
  mlocc->callback([&] { action = [&](Runner& r) { return cmd_mlocc(r, psi, phi, k_max); }; });

  auto* tradeoff = app.add_subcommand("tradeoff", "Source copies vs minimal catalyst copies");
  tradeoff->add_option("psi", psi)->required();
  tradeoff->add_option("phi", phi)->required();
  tradeoff->add_option("cat", cat)->required();
  tradeoff->add_option("--max-source", max_source)->check(CLI::PositiveNumber);
  tradeoff->add_option("--max-cat", max_cat)->check(CLI::PositiveNumber);
  add_common(tradeoff, {"text", "csv", "json"});
  tradeoff->callback(
      [&] { action = [&](Runner& r) { return cmd_tradeoff(r, psi, phi, cat, max_source, max_cat); }; });

  auto* pmax = app.add_subcommand("pmax", "Maximal conversion probability");
  pmax->add_option("psi", psi)->required();
  pmax->add_option("phi", phi)->required();
  pmax->add_option("--source-copies", source_copies)->check(CLI::PositiveNumber);
  auto* cat_opt = pmax->add_option("--cat", opt_cat, "Catalyst state");
  pmax->add_option("--cat-copies", cat_copies)->needs(cat_opt);
  add_common(pmax, {"text", "json"});
  pmax->callback([&] {
    action = [&](Runner& r) { return cmd_pmax(r, psi, phi, source_copies, opt_cat, cat_copies); };
  });

  auto* bounds = app.add_subcommand("bounds", "Bounds on catalytic probability for p copies");
  bounds->add_option("psi", psi)->required();
  bounds->add_option("phi", phi)->required();
  bounds->add_option("--power", power)->check(CLI::PositiveNumber);
  add_common(bounds, {"text", "json"});
  bounds->callback([&] { action = [&](Runner& r) { return cmd_bounds(r, psi, phi, power); }; });

  auto* search = app.add_subcommand("search", "Grid search for catalysts");
  search->add_option("psi", psi)->required();
  search->add_option("phi", phi)->required();
  search->add_option("--dim", search_cfg.dimension, "Catalyst Schmidt rank")->check(CLI::Range(2, 64));
  search->add_option("--denominator", search_cfg.denominator, "Grid resolution")->check(CLI::PositiveNumber);
  search->add_option("--copies", search_cfg.copies)->check(CLI::PositiveNumber);
  search->add_option("--lambda", lambda, "Target probability for lambda-catalysts");
  search->add_option("--max-candidates", search_cfg.max_candidates)->check(CLI::PositiveNumber);
  search->add_option("--threads", search_cfg.threads, "Worker threads (0 = all cores)");
  add_common(search, {"text", "json", "jsonl"});
  search->callback([&] { action = [&](Runner& r) { return cmd_search(r, psi, phi, search_cfg, lambda); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    Runner runner(opts);
    return action(runner);
  } catch (const entcat::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == entcat::ErrorKind::ResourceLimit ? kExitResource : kExitUsage;
  }
}
