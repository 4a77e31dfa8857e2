#pragma once

#include <vector>

#include "nilcmetrix/resources.hpp"
#include "nilcmetrix/summary.hpp"
#include "nilcmetrix/text_model.hpp"

namespace nilcmetrix {

// Referential Cohesion and LSA-Semantic Cohesion.

struct ReferentialCohesion {
  MetricValue adjacent_argument;  // binary noun/pronoun lemma overlap per pair
  MetricValue argument;
  MetricValue adjacent_stem;      // binary content-word stem overlap per pair
  MetricValue stem;
  MetricValue adjacent_content;   // Dice coefficient of content lemma sets
  MetricValue content;
  MetricValue adjacent_anaphoric;  // pronoun with a compatible noun in the previous sentence
  MetricValue anaphoric;           // same test over every earlier sentence
  MetricValue coreferent_pronouns; // per sentence, pronouns with an earlier compatible noun
};

ReferentialCohesion referential_overlaps(const Document& doc);

struct SentenceVector {
  std::vector<double> values;
  double coverage = 0;  // share of the sentence's words found in the model

  bool is_zero() const;
};

SentenceVector sentence_vector(const Sentence& sentence, const EmbeddingModel& model);

/// Cosine similarity; MISSING when either vector is zero.
MetricValue cosine(const std::vector<double>& a, const std::vector<double>& b);

struct LsaSimilarities {
  MetricValue adjacent_mean;
  MetricValue adjacent_sd;
  MetricValue paragraph_mean;
  MetricValue paragraph_sd;
  MetricValue all_mean;
  MetricValue all_sd;
};

LsaSimilarities lsa_similarities(const Document& doc, const EmbeddingModel& model);

struct MeanSd {
  MetricValue mean;
  MetricValue sd;
};

MeanSd lsa_givenness(const Document& doc, const EmbeddingModel& model);
MeanSd lsa_span(const Document& doc, const EmbeddingModel& model);

/// Norm share of `v` inside the span of `basis` (any vectors, not
/// necessarily independent). MISSING when `v` is zero or the span is empty.
MetricValue span_score(const std::vector<double>& v, const std::vector<std::vector<double>>& basis);

/// Mean over adjacent sentence pairs of the base-2 cross-entropy of the
/// second sentence under an add-one smoothed unigram model of the first.
MetricValue cross_entropy(const Document& doc);

}  // namespace nilcmetrix
