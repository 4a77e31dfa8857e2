#include "nilcmetrix/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "nilcmetrix/corpus.hpp"
#include "nilcmetrix/errors.hpp"
#include "nilcmetrix/features.hpp"
#include "nilcmetrix/metrics.hpp"
#include "nilcmetrix/resources.hpp"

namespace nilcmetrix {

namespace {

namespace fs = std::filesystem;

constexpr const char* kResourcesEnv = "NILCMETRIX_RESOURCES";

struct Options {
  std::vector<std::string> inputs;
  std::string format = "conllu";
  std::string resources;
  std::string out;
  std::string a;
  std::string b;
  double alpha = 0.001;
  std::string labels;
  unsigned jobs = 1;
};

ResourceBundle resolve_bundle(const Options& opt) {
  std::string manifest = opt.resources;
  if (manifest.empty()) {
    if (const char* env = std::getenv(kResourcesEnv)) manifest = env;
  }
  if (manifest.empty()) return {};
  return load_bundle(manifest);
}

void emit(const Options& opt, const std::string& text, std::ostream& out) {
  if (opt.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(opt.out, std::ios::binary);
  if (!file) throw Error("cannot write " + opt.out);
  file << text;
  if (!file) throw Error("cannot write " + opt.out);
}

std::vector<fs::path> paths(const std::vector<std::string>& inputs) {
  return {inputs.begin(), inputs.end()};
}

/// `doc_id<TAB>label` lines; blank lines and '#' comments ignored.
std::map<std::string, std::string> read_labels(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read labels file " + path);
  std::map<std::string, std::string> labels;
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) throw ParseError(n, path + ": expected doc_id<TAB>label");
    auto id = line.substr(0, tab);
    if (!labels.emplace(id, line.substr(tab + 1)).second) {
      throw ParseError(n, path + ": duplicate label for '" + id + "'");
    }
  }
  return labels;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Textual complexity metrics for Brazilian Portuguese", "nilcmetrix"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&opt](CLI::App* cmd) {
    cmd->add_option("--format", opt.format, "Input format")
        ->check(CLI::IsMember({"conllu", "text"}));
    cmd->add_option("--resources", opt.resources,
                    "Resource manifest (defaults to $NILCMETRIX_RESOURCES)");
    cmd->add_option("--out", opt.out, "Output file (defaults to stdout)");
    cmd->add_option("--jobs", opt.jobs, "Worker threads")->check(CLI::Range(1u, 1024u));
  };

  auto* list = app.add_subcommand("list", "Write the metric catalog");
  list->add_option("--out", opt.out, "Output file (defaults to stdout)");

  auto* compute = app.add_subcommand("compute", "Compute every metric for each document");
  compute->add_option("--input", opt.inputs, "Input files or directories")->required();
  add_common(compute);

  auto* compare = app.add_subcommand("compare", "Compare two corpora with Welch t-tests");
  compare->add_option("--a", opt.a, "First corpus")->required();
  compare->add_option("--b", opt.b, "Second corpus")->required();
  compare->add_option("--alpha", opt.alpha, "Significance level")
      ->check(CLI::Range(0.0, 1.0));
  add_common(compare);

  auto* exp = app.add_subcommand("export-features", "Write the feature matrix");
  exp->add_option("--input", opt.inputs, "Input files or directories")->required();
  exp->add_option("--labels", opt.labels, "doc_id<TAB>label file");
  add_common(exp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }
  if (compare->parsed() && !(opt.alpha > 0 && opt.alpha < 1)) {
    err << "--alpha must lie strictly between 0 and 1\n";
    return kExitUsage;
  }

  try {
    if (list->parsed()) {
      emit(opt, catalog_tsv(), out);
      return kExitOk;
    }
    const auto format = parse_input_format(opt.format);
    const ResourceBundle bundle = resolve_bundle(opt);
    if (compute->parsed()) {
      auto docs = load_corpus(paths(opt.inputs), format);
      if (docs.empty()) throw Error("no input documents");
      auto vectors = compute_corpus(docs, bundle, opt.jobs);
      for (const auto& v : vectors) {
        for (const auto& d : v.diagnostics) err << v.doc_id << ": " << d << '\n';
      }
      emit(opt, metrics_tsv(vectors), out);
      return kExitOk;
    }
    if (compare->parsed()) {
      auto docs_a = load_corpus({fs::path(opt.a)}, format);
      auto docs_b = load_corpus({fs::path(opt.b)}, format);
      if (docs_a.empty() || docs_b.empty()) throw Error("both corpora need documents");
      auto fa = export_features(docs_a, bundle, nullptr, opt.jobs);
      auto fb = export_features(docs_b, bundle, nullptr, opt.jobs);
      auto report = compare_corpora(fa, fb, opt.alpha);
      emit(opt, report.to_tsv(), out);
      if (!opt.out.empty()) out << report.to_text();
      return kExitOk;
    }
    if (exp->parsed()) {
      auto docs = load_corpus(paths(opt.inputs), format);
      if (docs.empty()) throw Error("no input documents");
      std::vector<std::string> labels;
      if (!opt.labels.empty()) {
        auto table = read_labels(opt.labels);
        for (const auto& d : docs) {
          auto it = table.find(d.id);
          if (it == table.end()) throw Error("no label for document '" + d.id + "'");
          labels.push_back(it->second);
        }
      }
      auto matrix = export_features(docs, bundle, opt.labels.empty() ? nullptr : &labels, opt.jobs);
      emit(opt, matrix.to_tsv(), out);
      return kExitOk;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace nilcmetrix
