#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "entcat/entcat.hpp"

namespace py = pybind11;
using namespace entcat;

namespace {

SchmidtVector to_vector(const py::handle& obj, bool normalize) {
  if (py::isinstance<py::str>(obj)) return parse_vector(obj.cast<std::string>(), normalize);
  std::vector<Rational> coeffs;
  for (const auto& item : obj) coeffs.push_back(parse_rational(py::str(item).cast<std::string>()));
  return SchmidtVector::from_coefficients(coeffs, normalize);
}

SchmidtVector to_vector(const py::handle& obj) { return to_vector(obj, false); }

Rational to_rational(const py::handle& obj) { return parse_rational(py::str(obj).cast<std::string>()); }

py::object fraction(const Rational& value) {
  static const py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(to_fraction_string(value));
}

py::list fractions(const SchmidtVector& v) {
  py::list out;
  for (const auto& entry : v.expanded()) out.append(fraction(entry));
  return out;
}

py::dict probability(const ProbabilityReport& r) {
  py::dict d;
  d["p_max"] = fraction(r.p_max);
  d["minimizing_l"] = r.minimizing_l;
  d["rank_deficient"] = r.rank_deficient;
  return d;
}

py::tuple filter(const FilterResult& r) {
  py::list violations;
  for (const auto& v : r.violations) {
    violations.append(py::make_tuple(std::string(to_string(v.condition)), v.l, v.i));
  }
  return py::make_tuple(r.passed, violations);
}

}  // namespace

PYBIND11_MODULE(_entcat, m) {
  m.doc() = "Exact majorization, catalysis and conversion-probability routines";

  py::register_exception<Error>(m, "EntcatError", PyExc_ValueError);

  m.def(
      "normalize", [](const py::object& v) { return fractions(to_vector(v, true)); }, py::arg("vector"),
      "Sorted, normalized Schmidt coefficients as Fractions.");
  m.def(
      "tensor", [](const py::object& x, const py::object& y) { return fractions(tensor(to_vector(x), to_vector(y))); },
      py::arg("x"), py::arg("y"));
  m.def(
      "tensor_power", [](const py::object& x, std::uint64_t k) { return fractions(tensor_power(to_vector(x), k)); },
      py::arg("x"), py::arg("k"));

  m.def(
      "majorizes",
      [](const py::object& psi, const py::object& phi) { return majorizes(to_vector(psi), to_vector(phi)).feasible; },
      py::arg("psi"), py::arg("phi"), "True when psi is majorized by phi, so psi -> phi by LOCC.");
  m.def(
      "l_set",
      [](const py::object& psi, const py::object& phi) { return l_set(to_vector(psi), to_vector(phi)).indices; },
      py::arg("psi"), py::arg("phi"), "Prefix lengths where psi's prefix sum exceeds phi's.");
  m.def(
      "incomparable",
      [](const py::object& psi, const py::object& phi) { return incomparable(to_vector(psi), to_vector(phi)); },
      py::arg("psi"), py::arg("phi"));

  m.def(
      "is_catalyst",
      [](const py::object& cat, const py::object& psi, const py::object& phi, std::uint64_t copies) {
        return is_catalyst(to_vector(cat), to_vector(psi), to_vector(phi), copies).is_catalyst;
      },
      py::arg("cat"), py::arg("psi"), py::arg("phi"), py::arg("copies") = 1);
  m.def(
      "min_catalyst_copies",
      [](const py::object& cat, const py::object& psi, const py::object& phi, std::uint64_t max_copies) {
        return min_catalyst_copies(to_vector(cat), to_vector(psi), to_vector(phi), max_copies);
      },
      py::arg("cat"), py::arg("psi"), py::arg("phi"), py::arg("max_copies"));
  m.def(
      "mlocc_threshold",
      [](const py::object& psi, const py::object& phi, std::uint64_t k_max) {
        return mlocc_threshold(to_vector(psi), to_vector(phi), k_max).threshold;
      },
      py::arg("psi"), py::arg("phi"), py::arg("k_max"));
  m.def(
      "lemma3_filter",
      [](const py::object& cat, const py::object& psi, const py::object& phi) {
        return filter(lemma3_filter(to_vector(cat), to_vector(psi), to_vector(phi)));
      },
      py::arg("cat"), py::arg("psi"), py::arg("phi"));
  m.def(
      "multicopy_filter",
      [](const py::object& cat, const py::object& psi, const py::object& phi) {
        return filter(multicopy_filter(to_vector(cat), to_vector(psi), to_vector(phi)));
      },
      py::arg("cat"), py::arg("psi"), py::arg("phi"));

  m.def(
      "vidal_pmax",
      [](const py::object& psi, const py::object& phi) { return probability(vidal_pmax(to_vector(psi), to_vector(phi))); },
      py::arg("psi"), py::arg("phi"));
  m.def(
      "combined_pmax",
      [](const py::object& psi, const py::object& phi, std::uint64_t source_copies, const py::object& cat,
         std::uint64_t cat_copies) {
        return probability(combined_pmax(to_vector(psi), to_vector(phi), source_copies, to_vector(cat), cat_copies));
      },
      py::arg("psi"), py::arg("phi"), py::arg("source_copies"), py::arg("cat"), py::arg("cat_copies"));
  m.def(
      "is_lambda_catalyst",
      [](const py::object& cat, const py::object& psi, const py::object& phi, const py::object& lambda,
         std::uint64_t copies) {
        return is_lambda_catalyst(to_vector(cat), to_vector(psi), to_vector(phi), to_rational(lambda), copies);
      },
      py::arg("cat"), py::arg("psi"), py::arg("phi"), py::arg("lam"), py::arg("copies") = 1);
  m.def(
      "mlocc_attains",
      [](const py::object& psi, const py::object& phi, const py::object& lambda, std::uint64_t k_max) {
        return mlocc_attains(to_vector(psi), to_vector(phi), to_rational(lambda), k_max);
      },
      py::arg("psi"), py::arg("phi"), py::arg("lam"), py::arg("k_max"));
  m.def(
      "theorem2_bounds",
      [](const py::object& psi, const py::object& phi, std::uint64_t p) {
        const auto b = theorem2_bounds(to_vector(psi), to_vector(phi), p);
        return py::make_tuple(fraction(b.lower), fraction(b.upper));
      },
      py::arg("psi"), py::arg("phi"), py::arg("p"));
  m.def(
      "collective_useless",
      [](const py::object& psi, const py::object& phi) { return collective_useless(to_vector(psi), to_vector(phi)); },
      py::arg("psi"), py::arg("phi"));

  m.def(
      "search_catalysts",
      [](const py::object& psi, const py::object& phi, std::uint64_t dimension, std::uint64_t denominator,
         std::uint64_t max_candidates, const std::optional<py::object>& lambda, std::uint64_t copies,
         unsigned threads) {
        SearchConfig cfg;
        cfg.dimension = dimension;
        cfg.denominator = denominator;
        cfg.max_candidates = max_candidates;
        cfg.copies = copies;
        cfg.threads = threads;
        if (lambda) cfg.mode = LambdaMode{to_rational(*lambda)};
        const auto source = to_vector(psi), target = to_vector(phi);
        SearchResult result;
        {
          py::gil_scoped_release release;
          result = search_catalysts(source, target, cfg);
        }
        py::list hits;
        for (const auto& hit : result.hits) {
          py::dict h;
          h["candidate"] = fractions(hit.candidate);
          if (const auto* report = std::get_if<ProbabilityReport>(&hit.evidence)) {
            h["p_max"] = fraction(report->p_max);
          }
          hits.append(h);
        }
        py::dict counters;
        counters["enumerated"] = result.counters.enumerated;
        counters["pruned_by_multicopy"] = result.counters.pruned_by_multicopy;
        counters["pruned_by_lemma3"] = result.counters.pruned_by_lemma3;
        counters["verified"] = result.counters.verified;
        return py::make_tuple(hits, counters);
      },
      py::arg("psi"), py::arg("phi"), py::arg("dimension") = 2, py::arg("denominator") = 10,
      py::arg("max_candidates") = 1000, py::arg("lam") = py::none(), py::arg("copies") = 1, py::arg("threads") = 0,
      "Grid search returning (hits, counters); each hit holds the candidate and, in lambda mode, its p_max.");
  m.def(
      "trade_off",
      [](const py::object& psi, const py::object& phi, const py::object& cat, std::uint64_t max_source,
         std::uint64_t max_cat) {
        py::list rows;
        for (const auto& r : trade_off(to_vector(psi), to_vector(phi), to_vector(cat), max_source, max_cat).rows) {
          rows.append(py::make_tuple(r.source_copies, r.min_catalyst_copies, r.feasible_without_catalyst));
        }
        return rows;
      },
      py::arg("psi"), py::arg("phi"), py::arg("cat"), py::arg("max_source"), py::arg("max_cat"),
      "Rows of (source_copies, min_catalyst_copies or None, feasible_without_catalyst).");
}
