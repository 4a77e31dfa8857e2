#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nilcmetrix/metrics.hpp"
#include "nilcmetrix/stats.hpp"

namespace nilcmetrix {

struct FeatureRow {
  std::string doc_id;
  std::optional<std::string> label;
  std::vector<MetricValue> values;  // aligned with FeatureMatrix::columns
};

struct FeatureMatrix {
  std::vector<std::string> columns;  // metric ids
  std::vector<FeatureRow> rows;
  bool has_labels = false;

  /// Header `doc_id[<TAB>label]<TAB>ids...`; NA for MISSING; six decimals.
  std::string to_tsv() const;
};

/// Parses a TSV produced by FeatureMatrix::to_tsv (or `compute`).
FeatureMatrix read_feature_matrix(std::string_view tsv);

/// Builds a matrix from computed vectors; `labels`, when given, must have
/// one entry per vector. Throws Error on duplicate document ids.
FeatureMatrix make_feature_matrix(const std::vector<MetricVector>& vectors,
                                  const std::vector<std::string>* labels = nullptr);

FeatureMatrix export_features(const std::vector<Document>& corpus, const ResourceBundle& bundle,
                              const std::vector<std::string>* labels = nullptr,
                              unsigned jobs = 1);

struct ComparisonRow {
  std::string metric;
  std::string category;
  WelchResult result;
  bool significant = false;
  std::string direction;  // "A>B", "B>A" or "="
};

struct SkippedMetric {
  std::string metric;
  std::string reason;
};

struct ComparisonReport {
  double alpha = 0.001;
  std::vector<ComparisonRow> rows;  // sorted by category, then id
  std::vector<SkippedMetric> skipped;

  std::string to_tsv() const;
  std::string to_text() const;
  const ComparisonRow* find(std::string_view metric) const;
};

/// Per-metric Welch tests over the shared columns. Throws Error when the
/// matrices share no column or alpha is outside (0, 1).
ComparisonReport compare_corpora(const FeatureMatrix& a, const FeatureMatrix& b,
                                 double alpha = 0.001);

}  // namespace nilcmetrix
