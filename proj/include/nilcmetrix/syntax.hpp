#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "nilcmetrix/summary.hpp"
#include "nilcmetrix/text_model.hpp"

namespace nilcmetrix {

// Syntactic Complexity and Syntactic Pattern Density.

/// Labels treated as sentence-type nodes by frazier(). A label matches when
/// its base (text before the first '-' or '=') is in the list.
std::span<const std::string_view> default_sentence_labels();

/// Yngve load per leaf, in reading order.
std::vector<double> yngve_scores(const ConstituencyNode& tree);
double yngve(const ConstituencyNode& tree);

/// Frazier score per leaf, in reading order. The walk climbs from the leaf
/// while the current node is the leftmost child of its parent; a leaf that
/// cannot climb scores 0, otherwise every node from the leaf to the last one
/// reached scores 1, or 1.5 when its parent is a sentence-type node.
std::vector<double> frazier_scores(
    const ConstituencyNode& tree,
    std::span<const std::string_view> sentence_labels = default_sentence_labels());
double frazier(const ConstituencyNode& tree,
               std::span<const std::string_view> sentence_labels = default_sentence_labels());

/// Mean |index - head| over non-root, non-punctuation tokens.
MetricValue dependency_distance(const Sentence& sentence);

/// Root token when verbal, else the first finite verb among the root's
/// children; 1-based index.
std::optional<std::size_t> main_verb(const Sentence& sentence);
MetricValue words_before_main_verb(const Sentence& sentence);
MetricValue adverbs_before_main_verb(const Sentence& sentence);

struct ClauseAnalysis {
  std::size_t clause_count = 1;
  std::size_t subordinate = 0;
  std::size_t relative = 0;
  std::size_t adverbial = 0;
  std::size_t coordinate_starts = 0;
  std::size_t passive = 0;
  std::size_t non_svo = 0;
  std::size_t postponed_subject = 0;
  std::size_t infinitive_clauses = 0;
  std::size_t gerund_clauses = 0;
  std::size_t participle_clauses = 0;
};

/// Counts are capped at clause_count.
ClauseAnalysis clause_analysis(const Sentence& sentence);

/// Word length of every noun phrase headed by a NOUN, PROPN or PRON.
std::vector<std::size_t> noun_phrases(const Sentence& sentence);

struct PatternDensity {
  MetricValue gerund_clause_ratio;
  MetricValue np_mean_words;
  MetricValue np_max_words;
  MetricValue np_min_words;
};

PatternDensity pattern_density(const Document& doc);

struct SyntacticProfile {
  MetricValue words_before_main_verb;
  MetricValue adverbs_before_main_verb;
  MetricValue clauses_per_sentence;
  MetricValue coordinate_conjunctions_per_clause;
  MetricValue frazier;  // MISSING without constituency trees
  MetricValue yngve;
  MetricValue dependency_distance;
  MetricValue non_svo_ratio;
  MetricValue subordinate_ratio;
  MetricValue relative_ratio;
  MetricValue adverbial_ratio;
  MetricValue passive_ratio;
  MetricValue postponed_subject_ratio;
  MetricValue infinitive_ratio;
  MetricValue participle_ratio;
  MetricValue coordinate_start_ratio;
  MetricValue one_clause;  // sentence shares by clause count
  MetricValue two_clauses;
  MetricValue three_clauses;
  MetricValue four_plus_clauses;
};

SyntacticProfile syntactic_profile(const Document& doc);

}  // namespace nilcmetrix
