#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "nilcmetrix/corpus.hpp"
#include "nilcmetrix/errors.hpp"
#include "nilcmetrix/features.hpp"
#include "nilcmetrix/metrics.hpp"
#include "nilcmetrix/stats.hpp"
#include "nilcmetrix/surface.hpp"

namespace py = pybind11;
using namespace nilcmetrix;

namespace {

ResourceBundle bundle_from(const std::optional<std::string>& manifest) {
  return manifest ? load_bundle(*manifest) : ResourceBundle{};
}

py::dict vector_dict(const MetricVector& v) {
  py::dict values;
  for (const auto& [id, value] : v.values) {
    values[py::str(id)] = value ? py::cast(*value) : py::none();
  }
  return values;
}

py::dict compute(const std::vector<std::string>& inputs, const std::string& format,
                 const std::optional<std::string>& resources, unsigned jobs) {
  std::vector<std::filesystem::path> paths(inputs.begin(), inputs.end());
  auto docs = load_corpus(paths, parse_input_format(format));
  auto bundle = bundle_from(resources);
  std::vector<MetricVector> vectors;
  {
    py::gil_scoped_release release;
    vectors = compute_corpus(docs, bundle, jobs);
  }
  py::dict out;
  for (const auto& v : vectors) out[py::str(v.doc_id)] = vector_dict(v);
  return out;
}

py::dict compute_text(const std::string& text, const std::optional<std::string>& resources) {
  return vector_dict(compute_all(ingest_plaintext(text), bundle_from(resources)));
}

py::dict compute_conllu(const std::string& text, const std::optional<std::string>& resources) {
  return vector_dict(compute_all(parse_conllu(text), bundle_from(resources)));
}

py::list compare(const std::string& a, const std::string& b, double alpha,
                 const std::string& format, const std::optional<std::string>& resources,
                 unsigned jobs) {
  auto fmt = parse_input_format(format);
  auto bundle = bundle_from(resources);
  auto fa = export_features(load_corpus({a}, fmt), bundle, nullptr, jobs);
  auto fb = export_features(load_corpus({b}, fmt), bundle, nullptr, jobs);
  auto report = compare_corpora(fa, fb, alpha);
  py::list rows;
  for (const auto& r : report.rows) {
    py::dict row;
    row["metric"] = r.metric;
    row["category"] = r.category;
    row["mean_a"] = r.result.mean_a;
    row["mean_b"] = r.result.mean_b;
    row["t"] = r.result.t;
    row["df"] = r.result.df;
    row["p"] = r.result.p;
    row["significant"] = r.significant;
    row["direction"] = r.direction;
    rows.append(row);
  }
  return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Textual complexity metrics for Brazilian Portuguese";
  py::register_exception<Error>(m, "NilcMetrixError", PyExc_ValueError);

  m.def("list_metrics", [] {
    py::list out;
    for (const auto& info : list_metrics()) {
      py::dict d;
      d["id"] = std::string(info.id);
      d["category"] = std::string(to_string(info.category));
      d["definition"] = std::string(info.definition);
      out.append(d);
    }
    return out;
  });
  m.def("catalog_tsv", &catalog_tsv);
  m.def("compute", &compute, py::arg("inputs"), py::arg("format") = "conllu",
        py::arg("resources") = py::none(), py::arg("jobs") = 1u);
  m.def("compute_text", &compute_text, py::arg("text"), py::arg("resources") = py::none());
  m.def("compute_conllu", &compute_conllu, py::arg("text"), py::arg("resources") = py::none());
  m.def("compare", &compare, py::arg("a"), py::arg("b"), py::arg("alpha") = 0.001,
        py::arg("format") = "conllu", py::arg("resources") = py::none(), py::arg("jobs") = 1u);
  m.def(
      "welch_t",
      [](const std::vector<double>& a, const std::vector<double>& b) {
        auto r = welch_t(a, b);
        return py::make_tuple(r.t, r.df, r.p);
      },
      py::arg("a"), py::arg("b"));
  m.def("flesch_score", &flesch_score, py::arg("words_per_sentence"), py::arg("syllables_per_word"));
  m.def("dale_chall_score", &dale_chall_score, py::arg("unfamiliar_percentage"),
        py::arg("words_per_sentence"));
  m.def("gunning_fog_score", &gunning_fog_score, py::arg("words_per_sentence"),
        py::arg("difficult_percentage"));
}
