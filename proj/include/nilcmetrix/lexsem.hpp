#pragma once

#include <array>

#include "nilcmetrix/resources.hpp"
#include "nilcmetrix/summary.hpp"
#include "nilcmetrix/text_model.hpp"

namespace nilcmetrix {

// Psycholinguistic Measures, Semantic Word Information, Morphosyntactic Word
// Information, Connectives and Temporal Lexicon.

/// Band edges for 1..7 norm scores: [1,2.5) [2.5,4) [4,5.5) [5.5,7].
inline constexpr std::array<double, 3> kNormBandEdges{2.5, 4.0, 5.5};

struct NormSummary {
  MetricValue mean;
  MetricValue sd;
  std::array<MetricValue, 4> bands;
};

struct PsycholinguisticProfile {
  NormSummary aoa;
  NormSummary concreteness;
  NormSummary familiarity;
  NormSummary imageability;
};

/// Statistics over content-word tokens found in the norm table.
PsycholinguisticProfile psycholinguistic_profile(const Document& doc,
                                                 const ResourceBundle& bundle);

struct SemanticWordInfo {
  MetricValue positive_ratio;
  MetricValue negative_ratio;
  MetricValue content_ambiguity;
  MetricValue noun_ambiguity;
  MetricValue adjective_ambiguity;
  MetricValue verb_ambiguity;
  MetricValue adverb_ambiguity;
  MetricValue verb_hypernyms;          // mean over sentences of per-verb mean
  MetricValue abstract_noun_sentence;  // mean over sentences of abstract/nouns
  MetricValue abstract_noun_ratio;     // abstract/nouns over the text
  MetricValue proper_noun_ratio;       // PROPN / (NOUN + PROPN)
};

SemanticWordInfo semantic_word_info(const Document& doc, const ResourceBundle& bundle);

struct ClassDistribution {
  MetricValue mean;
  MetricValue sd;
  MetricValue min;
  MetricValue max;
};

struct MorphosyntacticProfile {
  // Incidences per word.
  MetricValue content_words;
  MetricValue function_words;
  MetricValue nouns;
  MetricValue proper_nouns;
  MetricValue adjectives;
  MetricValue adverbs;
  MetricValue verbs;
  MetricValue inflected_verbs;
  MetricValue non_inflected_verbs;
  MetricValue infinitive_verbs;
  MetricValue gerund_verbs;
  MetricValue pronouns;
  MetricValue personal_pronouns;
  MetricValue prepositions;
  MetricValue prepositions_per_sentence;
  MetricValue prepositions_per_clause;
  // Shares of personal pronouns / of pronouns.
  MetricValue first_person_pronouns;
  MetricValue second_person_pronouns;
  MetricValue third_person_pronouns;
  MetricValue relative_pronouns;
  MetricValue indefinite_pronouns;
  MetricValue ratio_function_to_content_words;
  // Per-sentence incidence distributions.
  ClassDistribution nouns_per_sentence;
  ClassDistribution verbs_per_sentence;
  ClassDistribution adjectives_per_sentence;
  ClassDistribution adverbs_per_sentence;
  ClassDistribution pronouns_per_sentence;
};

MorphosyntacticProfile morphosyntactic_profile(const Document& doc);

/// Finite verbs (VERB or AUX with VerbForm=Fin) in the sentence.
std::size_t finite_verb_count(const Sentence& sentence);
/// Clause proxy: number of finite verbs, at least 1.
std::size_t clause_count(const Sentence& sentence);

struct ConnectiveRatios {
  MetricValue all;
  MetricValue additive_positive;
  MetricValue additive_negative;
  MetricValue causal_positive;
  MetricValue causal_negative;
  MetricValue logical_positive;
  MetricValue logical_negative;
  MetricValue and_ratio;  // "e"
  MetricValue or_ratio;   // "ou"
  MetricValue if_ratio;   // "se"
  MetricValue negation_ratio;
  MetricValue ambiguous_ratio;  // matches whose form carries more than one kind
};

ConnectiveRatios connective_ratios(const Document& doc, const ResourceBundle& bundle);

/// Negation words counted by connective_ratios.
std::span<const std::string_view> negation_words();

struct TemporalProfile {
  MetricValue present;      // indicative
  MetricValue preterite;    // indicative perfect and pluperfect
  MetricValue imperfect;    // indicative
  MetricValue future;       // indicative
  MetricValue conditional;
  MetricValue subjunctive;  // any tense
  MetricValue imperative;
  MetricValue compound;     // finite ter/haver/ser/estar + participle
  MetricValue tense_mood_combinations;
  MetricValue temporal_positive;
  MetricValue temporal_negative;
};

TemporalProfile temporal_profile(const Document& doc, const ResourceBundle& bundle);

}  // namespace nilcmetrix
