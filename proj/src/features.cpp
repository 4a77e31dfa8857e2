#include "nilcmetrix/features.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

#include "nilcmetrix/errors.hpp"

namespace nilcmetrix {

namespace {

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto tab = line.find('\t', start);
    out.push_back(line.substr(start, tab == std::string_view::npos ? tab : tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return out;
}

MetricValue parse_cell(std::string_view cell, std::size_t line) {
  if (cell == "NA") return std::nullopt;
  std::string s(cell);
  char* end = nullptr;
  double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) {
    throw ParseError(line, "invalid numeric cell '" + s + "'");
  }
  return v;
}

std::string fixed(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return format_value(v);
}

std::string scientific(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6e", v);
  return buf;
}

}  // namespace

std::string FeatureMatrix::to_tsv() const {
  std::string out = "doc_id";
  if (has_labels) out += "\tlabel";
  for (const auto& c : columns) out += '\t' + c;
  out += '\n';
  for (const auto& row : rows) {
    out += row.doc_id;
    if (has_labels) out += '\t' + row.label.value_or("");
    for (const auto& v : row.values) out += '\t' + format_value(v);
    out += '\n';
  }
  return out;
}

FeatureMatrix read_feature_matrix(std::string_view tsv) {
  FeatureMatrix m;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool header = true;
  while (pos < tsv.size()) {
    auto nl = tsv.find('\n', pos);
    std::string_view line = tsv.substr(pos, nl == std::string_view::npos ? nl : nl - pos);
    pos = nl == std::string_view::npos ? tsv.size() : nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    auto cells = split_tabs(line);
    if (header) {
      if (cells.front() != "doc_id") throw ParseError(line_no, "header must start with doc_id");
      std::size_t first = 1;
      if (cells.size() > 1 && cells[1] == "label") {
        m.has_labels = true;
        first = 2;
      }
      for (std::size_t i = first; i < cells.size(); ++i) m.columns.emplace_back(cells[i]);
      header = false;
      continue;
    }
    const std::size_t expected = m.columns.size() + 1 + (m.has_labels ? 1 : 0);
    if (cells.size() != expected) {
      throw ParseError(line_no, "expected " + std::to_string(expected) + " cells, found " +
                                    std::to_string(cells.size()));
    }
    FeatureRow row;
    row.doc_id = std::string(cells[0]);
    std::size_t first = 1;
    if (m.has_labels) {
      row.label = std::string(cells[1]);
      first = 2;
    }
    for (std::size_t i = first; i < cells.size(); ++i) row.values.push_back(parse_cell(cells[i], line_no));
    m.rows.push_back(std::move(row));
  }
  if (header) throw ParseError(1, "empty feature matrix");
  return m;
}

FeatureMatrix make_feature_matrix(const std::vector<MetricVector>& vectors,
                                  const std::vector<std::string>* labels) {
  if (labels && labels->size() != vectors.size()) {
    throw Error("expected " + std::to_string(vectors.size()) + " labels, got " +
                std::to_string(labels->size()));
  }
  FeatureMatrix m;
  m.has_labels = labels != nullptr;
  for (const auto& info : list_metrics()) m.columns.emplace_back(info.id);
  std::set<std::string> seen;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    const auto& v = vectors[i];
    if (!seen.insert(v.doc_id).second) throw Error("duplicate document id '" + v.doc_id + "'");
    FeatureRow row;
    row.doc_id = v.doc_id;
    if (labels) row.label = (*labels)[i];
    for (const auto& c : m.columns) {
      const MetricValue* value = v.find(c);
      row.values.push_back(value ? *value : std::nullopt);
    }
    m.rows.push_back(std::move(row));
  }
  return m;
}

FeatureMatrix export_features(const std::vector<Document>& corpus, const ResourceBundle& bundle,
                              const std::vector<std::string>* labels, unsigned jobs) {
  if (corpus.empty()) throw Error("empty corpus");
  std::set<std::string> ids;
  for (const auto& d : corpus) {
    if (!ids.insert(d.id).second) throw Error("duplicate document id '" + d.id + "'");
  }
  return make_feature_matrix(compute_corpus(corpus, bundle, jobs), labels);
}

const ComparisonRow* ComparisonReport::find(std::string_view metric) const {
  for (const auto& r : rows) {
    if (r.metric == metric) return &r;
  }
  return nullptr;
}

std::string ComparisonReport::to_tsv() const {
  std::string out = "metric\tcategory\tmean_a\tmean_b\tt\tdf\tp\tsignificant\tdirection\n";
  for (const auto& r : rows) {
    out += r.metric + '\t' + r.category + '\t' + fixed(r.result.mean_a) + '\t' +
           fixed(r.result.mean_b) + '\t' + fixed(r.result.t) + '\t' + fixed(r.result.df) + '\t' +
           scientific(r.result.p) + '\t' + (r.significant ? "yes" : "no") + '\t' + r.direction +
           '\n';
  }
  return out;
}

std::string ComparisonReport::to_text() const {
  std::ostringstream out;
  std::size_t significant = 0;
  for (const auto& r : rows) significant += r.significant;
  out << "Welch t-tests at alpha " << alpha << ": " << rows.size() << " metrics tested, "
      << significant << " significant, " << skipped.size() << " skipped\n";
  std::string category;
  for (const auto& r : rows) {
    if (!r.significant) continue;
    if (r.category != category) {
      category = r.category;
      out << "\n[" << category << "]\n";
    }
    out << "  " << r.metric << ": " << r.direction << " (mean_a " << fixed(r.result.mean_a)
        << ", mean_b " << fixed(r.result.mean_b) << ", t " << fixed(r.result.t) << ", p "
        << scientific(r.result.p) << ")\n";
  }
  if (!skipped.empty()) {
    out << "\nSkipped:\n";
    for (const auto& s : skipped) out << "  " << s.metric << ": " << s.reason << '\n';
  }
  return out.str();
}

ComparisonReport compare_corpora(const FeatureMatrix& a, const FeatureMatrix& b, double alpha) {
  if (!(alpha > 0 && alpha < 1)) throw Error("alpha must lie in (0, 1)");
  std::map<std::string, std::size_t> b_index;
  for (std::size_t i = 0; i < b.columns.size(); ++i) b_index.emplace(b.columns[i], i);

  struct Column {
    std::string id;
    std::size_t ia;
    std::size_t ib;
    std::size_t rank;  // category position; unregistered ids sort last
    std::string category;
  };
  std::vector<Column> shared;
  for (std::size_t i = 0; i < a.columns.size(); ++i) {
    auto it = b_index.find(a.columns[i]);
    if (it == b_index.end()) continue;
    const MetricInfo* info = find_metric(a.columns[i]);
    auto rank = info ? static_cast<std::size_t>(info->category) : all_categories().size();
    shared.push_back({a.columns[i], i, it->second, rank,
                      info ? std::string(to_string(info->category)) : std::string("Unregistered")});
  }
  if (shared.empty()) throw Error("feature matrices share no metric column");
  std::stable_sort(shared.begin(), shared.end(), [](const Column& x, const Column& y) {
    if (x.rank != y.rank) return x.rank < y.rank;
    return x.id < y.id;
  });

  ComparisonReport report;
  report.alpha = alpha;
  for (const auto& col : shared) {
    std::vector<double> va, vb;
    for (const auto& row : a.rows) {
      if (row.values[col.ia]) va.push_back(*row.values[col.ia]);
    }
    for (const auto& row : b.rows) {
      if (row.values[col.ib]) vb.push_back(*row.values[col.ib]);
    }
    if (va.size() < 2 || vb.size() < 2) {
      report.skipped.push_back({col.id, "insufficient valid values"});
      continue;
    }
    ComparisonRow row;
    row.metric = col.id;
    row.category = col.category;
    row.result = welch_t(va, vb);
    row.significant = row.result.p < alpha;
    row.direction = row.result.mean_a > row.result.mean_b   ? "A>B"
                    : row.result.mean_a < row.result.mean_b ? "B>A"
                                                            : "=";
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace nilcmetrix
