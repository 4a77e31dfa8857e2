#pragma once

#include <cstddef>
#include <optional>

#include "nilcmetrix/resources.hpp"
#include "nilcmetrix/summary.hpp"
#include "nilcmetrix/text_model.hpp"

namespace nilcmetrix {

// Descriptive Index, Text Easability, Lexical Diversity, Word Frequency and
// Readability Formulas. "Words" are tokens accepted by is_word().

struct SurfaceProfile {
  std::size_t words = 0;
  std::size_t sentences = 0;
  std::size_t paragraphs = 0;
  double sentences_per_paragraph = 0;
  MetricValue syllables_per_content_word;  // needs PoS
  double words_per_sentence = 0;
  double words_per_sentence_max = 0;
  double words_per_sentence_min = 0;
  double words_per_sentence_sd = 0;  // population
  double heading_ratio = 0;          // heading paragraphs / sentences
};

SurfaceProfile descriptive_index(const Document& doc);

/// Syllables of a token: the sum over its maximal letter runs, or nullopt
/// when the token has no letters (numbers, symbols).
std::optional<int> token_syllables(const Token& token);

/// short: <= 11 words, medium: 12, long: 13..15, very long: > 15.
struct LengthClasses {
  double short_ratio = 0;
  double medium_ratio = 0;
  double long_ratio = 0;
  double very_long_ratio = 0;
};

LengthClasses sentence_length_classes(const Document& doc);

struct Easability {
  MetricValue easy_conj_ratio;
  MetricValue hard_conj_ratio;
  MetricValue first_person_pronoun_ratio;
  MetricValue simple_word_ratio;
};

Easability easability(const Document& doc, const ResourceBundle& bundle);

struct LexicalDiversity {
  MetricValue ttr;
  MetricValue content_ttr;
  MetricValue function_ttr;
  MetricValue noun_ttr;
  MetricValue verb_ttr;
  MetricValue adjective_ttr;
  MetricValue pronoun_ttr;
  MetricValue indefinite_pronoun_ttr;
  MetricValue relative_pronoun_ttr;
  MetricValue preposition_ttr;
  MetricValue punctuation_ttr;
  MetricValue content_density;   // content / function tokens
  MetricValue content_word_max;  // max per-sentence content-word share
};

LexicalDiversity lexical_diversity(const Document& doc);

struct CorpusFrequency {
  MetricValue content_mean;  // mean zipf over content words
  MetricValue content_rare;  // mean over sentences of the rarest content word
  MetricValue all_mean;
  MetricValue all_rare;
};

struct WordFrequency {
  CorpusFrequency corpus_a;
  CorpusFrequency corpus_b;
  MetricValue legacy_content_mean;  // raw frequencies
  MetricValue legacy_rare;
};

WordFrequency word_frequency(const Document& doc, const ResourceBundle& bundle);

// Readability formulas over explicit inputs.
double flesch_score(double words_per_sentence, double syllables_per_word);
double dale_chall_score(double unfamiliar_percentage, double words_per_sentence);
double gunning_fog_score(double words_per_sentence, double difficult_percentage);
double brunet_score(double tokens, double types);
/// MISSING when every type is a hapax.
MetricValue honore_score(double tokens, double types, double hapaxes);

// Readability formulas over a document.
MetricValue flesch(const Document& doc);
MetricValue dale_chall_adapted(const Document& doc, const ResourceBundle& bundle);
MetricValue gunning_fog(const Document& doc);
MetricValue brunet(const Document& doc);
MetricValue honore(const Document& doc);

}  // namespace nilcmetrix
