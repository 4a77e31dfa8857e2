#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nilcmetrix/resources.hpp"
#include "nilcmetrix/summary.hpp"
#include "nilcmetrix/text_model.hpp"

namespace nilcmetrix {

enum class Category {
  DescriptiveIndex,
  TextEasability,
  ReferentialCohesion,
  LsaSemanticCohesion,
  PsycholinguisticMeasures,
  LexicalDiversity,
  Connectives,
  TemporalLexicon,
  SyntacticComplexity,
  SyntacticPatternDensity,
  MorphosyntacticWordInformation,
  SemanticWordInformation,
  WordFrequency,
  ReadabilityFormulas,
};

std::string_view to_string(Category category);
std::span<const Category> all_categories();

/// Annotation layers and resources a metric needs; unmet needs yield MISSING.
struct Requirements {
  bool pos = false;
  bool dependencies = false;
  bool morphology = false;
  bool tree = false;
  std::vector<std::string_view> resources;  // manifest keys
};

struct MetricInfo {
  std::string_view id;
  Category category;
  Requirements needs;
  std::string_view definition;
};

/// Registry in canonical order (category, then declaration order).
const std::vector<MetricInfo>& list_metrics();
const MetricInfo* find_metric(std::string_view id);

bool resource_available(std::string_view key, const ResourceBundle& bundle);
bool requirements_met(const Requirements& needs, const Document& doc,
                      const ResourceBundle& bundle);

struct MetricVector {
  std::string doc_id;
  std::vector<std::pair<std::string, MetricValue>> values;  // registry order
  std::vector<std::string> diagnostics;

  /// Value by id; nullptr when the id is not in the vector.
  const MetricValue* find(std::string_view id) const;
};

MetricVector compute_all(const Document& doc, const ResourceBundle& bundle);

/// compute_all over a corpus with up to `jobs` worker threads; results keep
/// input order regardless of `jobs`.
std::vector<MetricVector> compute_corpus(const std::vector<Document>& docs,
                                         const ResourceBundle& bundle, unsigned jobs = 1);

/// "NA" for MISSING, otherwise fixed notation with six decimals.
std::string format_value(const MetricValue& value);

/// `doc_id<TAB>id...` header plus one row per vector.
std::string metrics_tsv(const std::vector<MetricVector>& vectors);

/// `id<TAB>category<TAB>requires<TAB>definition` for every registered metric.
std::string catalog_tsv();

}  // namespace nilcmetrix
