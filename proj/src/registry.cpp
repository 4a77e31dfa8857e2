#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <optional>
#include <thread>

#include "nilcmetrix/cohesion.hpp"
#include "nilcmetrix/lexsem.hpp"
#include "nilcmetrix/metrics.hpp"
#include "nilcmetrix/surface.hpp"
#include "nilcmetrix/syntax.hpp"

namespace nilcmetrix {

namespace {

enum class Family {
  Descriptive, Length, Easability, Lexical, Frequency, Readability, Psycholinguistic,
  Semantic, Morphosyntactic, Connectives, Temporal, Syntax, Pattern, Referential,
  LsaSimilarity, LsaGivenness, LsaSpan, CrossEntropy,
};
constexpr std::size_t kFamilies = static_cast<std::size_t>(Family::CrossEntropy) + 1;

constexpr std::array<std::string_view, kFamilies> kFamilyNames{
    "descriptive", "length classes", "easability", "lexical diversity", "word frequency",
    "readability", "psycholinguistic", "semantic", "morphosyntactic", "connectives",
    "temporal", "syntax", "pattern density", "referential cohesion", "lsa similarity",
    "lsa givenness", "lsa span", "cross entropy"};

struct Readability {
  MetricValue flesch, dale_chall, gunning_fog, brunet, honore;
};

struct Families {
  std::optional<SurfaceProfile> descriptive;
  std::optional<LengthClasses> length;
  std::optional<Easability> easability;
  std::optional<LexicalDiversity> lexical;
  std::optional<WordFrequency> frequency;
  std::optional<Readability> readability;
  std::optional<PsycholinguisticProfile> psycholinguistic;
  std::optional<SemanticWordInfo> semantic;
  std::optional<MorphosyntacticProfile> morphosyntactic;
  std::optional<ConnectiveRatios> connectives;
  std::optional<TemporalProfile> temporal;
  std::optional<SyntacticProfile> syntax;
  std::optional<PatternDensity> pattern;
  std::optional<ReferentialCohesion> referential;
  std::optional<LsaSimilarities> lsa_similarity;
  std::optional<MeanSd> lsa_givenness;
  std::optional<MeanSd> lsa_span;
  std::optional<MetricValue> cross_entropy;
};

using Getter = MetricValue (*)(const Families&);

struct MetricDef {
  MetricInfo info;
  Family family;
  Getter get;
};

Requirements needs(bool pos, bool dependencies, bool morphology,
                   std::vector<std::string_view> resources = {}) {
  Requirements r;
  r.pos = pos;
  r.dependencies = dependencies;
  r.morphology = morphology;
  r.resources = std::move(resources);
  return r;
}

Requirements none(std::vector<std::string_view> resources = {}) {
  return needs(false, false, false, std::move(resources));
}
Requirements pos(std::vector<std::string_view> resources = {}) {
  return needs(true, false, false, std::move(resources));
}
Requirements morph(std::vector<std::string_view> resources = {}) {
  return needs(true, false, true, std::move(resources));
}
Requirements deps() { return needs(true, true, false); }
Requirements deps_morph() { return needs(true, true, true); }
Requirements tree() {
  Requirements r;
  r.tree = true;
  return r;
}

#define NM_GET(member, expr) [](const Families& f) -> MetricValue { return f.member->expr; }

using C = Category;
using F = Family;

std::vector<MetricDef> build_registry() {
  std::vector<MetricDef> r;
  auto add = [&r](std::string_view id, Category c, Requirements q, std::string_view def,
                  Family fam, Getter g) { r.push_back({{id, c, std::move(q), def}, fam, g}); };

  // Descriptive Index
  add("words", C::DescriptiveIndex, none(), "Number of words", F::Descriptive,
      NM_GET(descriptive, words + 0.0));
  add("paragraphs", C::DescriptiveIndex, none(), "Number of paragraphs", F::Descriptive,
      NM_GET(descriptive, paragraphs + 0.0));
  add("sentences", C::DescriptiveIndex, none(), "Number of sentences", F::Descriptive,
      NM_GET(descriptive, sentences + 0.0));
  add("sentences_per_paragraph", C::DescriptiveIndex, none(), "Mean sentences per paragraph",
      F::Descriptive, NM_GET(descriptive, sentences_per_paragraph));
  add("syllables_per_content_word", C::DescriptiveIndex, pos(),
      "Mean syllables per content word", F::Descriptive,
      NM_GET(descriptive, syllables_per_content_word));
  add("words_per_sentence", C::DescriptiveIndex, none(), "Mean words per sentence",
      F::Descriptive, NM_GET(descriptive, words_per_sentence));
  add("sentence_length_max", C::DescriptiveIndex, none(), "Words in the longest sentence",
      F::Descriptive, NM_GET(descriptive, words_per_sentence_max));
  add("sentence_length_min", C::DescriptiveIndex, none(), "Words in the shortest sentence",
      F::Descriptive, NM_GET(descriptive, words_per_sentence_min));
  add("sentence_length_standard_deviation", C::DescriptiveIndex, none(),
      "Population standard deviation of sentence length", F::Descriptive,
      NM_GET(descriptive, words_per_sentence_sd));
  add("subtitles", C::DescriptiveIndex, none(), "Heading paragraphs per sentence",
      F::Descriptive, NM_GET(descriptive, heading_ratio));

  // Text Easability
  add("short_sentence_ratio", C::TextEasability, none(), "Share of sentences with <= 11 words",
      F::Length, NM_GET(length, short_ratio));
  add("medium_sentence_ratio", C::TextEasability, none(), "Share of sentences with 12 words",
      F::Length, NM_GET(length, medium_ratio));
  add("long_sentence_ratio", C::TextEasability, none(), "Share of sentences with 13-15 words",
      F::Length, NM_GET(length, long_ratio));
  add("very_long_sentence_ratio", C::TextEasability, none(),
      "Share of sentences with > 15 words", F::Length, NM_GET(length, very_long_ratio));
  add("easy_conjunctions_ratio", C::TextEasability, none({"easy_conjunctions"}),
      "Easy conjunctions per word", F::Easability, NM_GET(easability, easy_conj_ratio));
  add("hard_conjunctions_ratio", C::TextEasability, none({"hard_conjunctions"}),
      "Hard conjunctions per word", F::Easability, NM_GET(easability, hard_conj_ratio));
  add("first_person_personal_pronouns", C::TextEasability, morph(),
      "First-person share of personal pronouns", F::Easability,
      NM_GET(easability, first_person_pronoun_ratio));
  add("simple_word_ratio", C::TextEasability, pos({"simple_words"}),
      "Share of content words in the simple word lists", F::Easability,
      NM_GET(easability, simple_word_ratio));

  // Referential Cohesion
  add("adj_arg_ovl", C::ReferentialCohesion, pos(),
      "Adjacent sentence pairs sharing a noun or pronoun lemma", F::Referential,
      NM_GET(referential, adjacent_argument));
  add("arg_ovl", C::ReferentialCohesion, pos(),
      "Sentence pairs sharing a noun or pronoun lemma", F::Referential,
      NM_GET(referential, argument));
  add("adj_stem_ovl", C::ReferentialCohesion, pos(),
      "Adjacent sentence pairs sharing a content-word stem", F::Referential,
      NM_GET(referential, adjacent_stem));
  add("stem_ovl", C::ReferentialCohesion, pos(), "Sentence pairs sharing a content-word stem",
      F::Referential, NM_GET(referential, stem));
  add("adj_cw_ovl", C::ReferentialCohesion, pos(),
      "Mean Dice overlap of content lemmas in adjacent sentences", F::Referential,
      NM_GET(referential, adjacent_content));
  add("cw_ovl", C::ReferentialCohesion, pos(),
      "Mean Dice overlap of content lemmas over sentence pairs", F::Referential,
      NM_GET(referential, content));
  add("adjacent_refs", C::ReferentialCohesion, morph(),
      "Adjacent pairs whose second sentence has a pronoun agreeing with a noun of the first",
      F::Referential, NM_GET(referential, adjacent_anaphoric));
  add("anaphoric_refs", C::ReferentialCohesion, morph(),
      "Sentence pairs whose later sentence has a pronoun agreeing with a noun of the earlier",
      F::Referential, NM_GET(referential, anaphoric));
  add("coreference_pronoun_ratio", C::ReferentialCohesion, morph(),
      "Mean per sentence of pronouns agreeing with an earlier noun", F::Referential,
      NM_GET(referential, coreferent_pronouns));

  // LSA-Semantic Cohesion
  const auto emb = none({"embeddings"});
  add("lsa_adj_mean", C::LsaSemanticCohesion, emb, "Mean cosine of adjacent sentences",
      F::LsaSimilarity, NM_GET(lsa_similarity, adjacent_mean));
  add("lsa_adj_std", C::LsaSemanticCohesion, emb, "Deviation of adjacent sentence cosines",
      F::LsaSimilarity, NM_GET(lsa_similarity, adjacent_sd));
  add("lsa_paragraph_mean", C::LsaSemanticCohesion, emb, "Mean cosine of adjacent paragraphs",
      F::LsaSimilarity, NM_GET(lsa_similarity, paragraph_mean));
  add("lsa_paragraph_std", C::LsaSemanticCohesion, emb,
      "Deviation of adjacent paragraph cosines", F::LsaSimilarity,
      NM_GET(lsa_similarity, paragraph_sd));
  add("lsa_all_mean", C::LsaSemanticCohesion, emb, "Mean cosine over all sentence pairs",
      F::LsaSimilarity, NM_GET(lsa_similarity, all_mean));
  add("lsa_all_std", C::LsaSemanticCohesion, emb, "Deviation of cosines over sentence pairs",
      F::LsaSimilarity, NM_GET(lsa_similarity, all_sd));
  add("lsa_givenness_mean", C::LsaSemanticCohesion, emb,
      "Mean cosine of each sentence with the mean of its predecessors", F::LsaGivenness,
      NM_GET(lsa_givenness, mean));
  add("lsa_givenness_std", C::LsaSemanticCohesion, emb, "Deviation of givenness scores",
      F::LsaGivenness, NM_GET(lsa_givenness, sd));
  add("lsa_span_mean", C::LsaSemanticCohesion, emb,
      "Mean norm share of each sentence inside the span of its predecessors", F::LsaSpan,
      NM_GET(lsa_span, mean));
  add("lsa_span_std", C::LsaSemanticCohesion, emb, "Deviation of span scores", F::LsaSpan,
      NM_GET(lsa_span, sd));
  add("cross_entropy", C::LsaSemanticCohesion, none(),
      "Mean cross-entropy of adjacent sentence unigram distributions", F::CrossEntropy,
      [](const Families& f) -> MetricValue { return *f.cross_entropy; });

  // Psycholinguistic Measures
  static const std::array<std::array<std::string_view, 6>, 4> kNormIds{{
      {"idade_aquisicao_mean", "idade_aquisicao_std", "idade_aquisicao_1_25",
       "idade_aquisicao_25_4", "idade_aquisicao_4_55", "idade_aquisicao_55_7"},
      {"concretude_mean", "concretude_std", "concretude_1_25", "concretude_25_4",
       "concretude_4_55", "concretude_55_7"},
      {"familiaridade_mean", "familiaridade_std", "familiaridade_1_25", "familiaridade_25_4",
       "familiaridade_4_55", "familiaridade_55_7"},
      {"imageabilidade_mean", "imageabilidade_std", "imageabilidade_1_25",
       "imageabilidade_25_4", "imageabilidade_4_55", "imageabilidade_55_7"},
  }};
  static const std::array<Getter, 24> kNormGetters{
      NM_GET(psycholinguistic, aoa.mean), NM_GET(psycholinguistic, aoa.sd),
      NM_GET(psycholinguistic, aoa.bands[0]), NM_GET(psycholinguistic, aoa.bands[1]),
      NM_GET(psycholinguistic, aoa.bands[2]), NM_GET(psycholinguistic, aoa.bands[3]),
      NM_GET(psycholinguistic, concreteness.mean), NM_GET(psycholinguistic, concreteness.sd),
      NM_GET(psycholinguistic, concreteness.bands[0]),
      NM_GET(psycholinguistic, concreteness.bands[1]),
      NM_GET(psycholinguistic, concreteness.bands[2]),
      NM_GET(psycholinguistic, concreteness.bands[3]),
      NM_GET(psycholinguistic, familiarity.mean), NM_GET(psycholinguistic, familiarity.sd),
      NM_GET(psycholinguistic, familiarity.bands[0]),
      NM_GET(psycholinguistic, familiarity.bands[1]),
      NM_GET(psycholinguistic, familiarity.bands[2]),
      NM_GET(psycholinguistic, familiarity.bands[3]),
      NM_GET(psycholinguistic, imageability.mean), NM_GET(psycholinguistic, imageability.sd),
      NM_GET(psycholinguistic, imageability.bands[0]),
      NM_GET(psycholinguistic, imageability.bands[1]),
      NM_GET(psycholinguistic, imageability.bands[2]),
      NM_GET(psycholinguistic, imageability.bands[3]),
  };
  static const std::array<std::string_view, 4> kNormNames{
      "age of acquisition", "concreteness", "familiarity", "imageability"};
  static const std::array<std::string_view, 6> kNormStats{
      "Mean", "Standard deviation", "Share in [1, 2.5)", "Share in [2.5, 4)",
      "Share in [4, 5.5)", "Share in [5.5, 7]"};
  static const std::vector<std::string> norm_definitions = [] {
    std::vector<std::string> out;
    for (auto name : kNormNames) {
      for (auto stat : kNormStats) {
        out.push_back(std::string(stat) + " of content-word " + std::string(name));
      }
    }
    return out;
  }();
  for (std::size_t n = 0; n < 4; ++n) {
    for (std::size_t k = 0; k < 6; ++k) {
      add(kNormIds[n][k], C::PsycholinguisticMeasures, pos({"norms"}),
          norm_definitions[n * 6 + k], F::Psycholinguistic, kNormGetters[n * 6 + k]);
    }
  }

  // Lexical Diversity
  add("ttr", C::LexicalDiversity, none(), "Type-token ratio of words", F::Lexical,
      NM_GET(lexical, ttr));
  add("content_word_ttr", C::LexicalDiversity, pos(), "Type-token ratio of content words",
      F::Lexical, NM_GET(lexical, content_ttr));
  add("function_word_ttr", C::LexicalDiversity, pos(), "Type-token ratio of function words",
      F::Lexical, NM_GET(lexical, function_ttr));
  add("noun_ttr", C::LexicalDiversity, pos(), "Type-token ratio of nouns", F::Lexical,
      NM_GET(lexical, noun_ttr));
  add("verb_ttr", C::LexicalDiversity, pos(), "Type-token ratio of verbs", F::Lexical,
      NM_GET(lexical, verb_ttr));
  add("adjective_ttr", C::LexicalDiversity, pos(), "Type-token ratio of adjectives",
      F::Lexical, NM_GET(lexical, adjective_ttr));
  add("pronoun_ttr", C::LexicalDiversity, pos(), "Type-token ratio of pronouns", F::Lexical,
      NM_GET(lexical, pronoun_ttr));
  add("indefinite_pronoun_ttr", C::LexicalDiversity, morph(),
      "Type-token ratio of indefinite pronouns", F::Lexical,
      NM_GET(lexical, indefinite_pronoun_ttr));
  add("relative_pronoun_ttr", C::LexicalDiversity, morph(),
      "Type-token ratio of relative pronouns", F::Lexical,
      NM_GET(lexical, relative_pronoun_ttr));
  add("preposition_ttr", C::LexicalDiversity, pos(), "Type-token ratio of prepositions",
      F::Lexical, NM_GET(lexical, preposition_ttr));
  add("punctuation_ttr", C::LexicalDiversity, pos(), "Type-token ratio of punctuation",
      F::Lexical, NM_GET(lexical, punctuation_ttr));
  add("content_density", C::LexicalDiversity, pos(), "Content words per function word",
      F::Lexical, NM_GET(lexical, content_density));
  add("content_word_max", C::LexicalDiversity, pos(),
      "Largest per-sentence share of content words", F::Lexical,
      NM_GET(lexical, content_word_max));

  // Connectives
  const auto conn = none({"connectives"});
  add("connective_ratio", C::Connectives, conn, "Connectives per word", F::Connectives,
      NM_GET(connectives, all));
  add("add_pos_conn_ratio", C::Connectives, conn, "Additive positive connectives per word",
      F::Connectives, NM_GET(connectives, additive_positive));
  add("add_neg_conn_ratio", C::Connectives, conn, "Additive negative connectives per word",
      F::Connectives, NM_GET(connectives, additive_negative));
  add("cau_pos_conn_ratio", C::Connectives, conn, "Causal positive connectives per word",
      F::Connectives, NM_GET(connectives, causal_positive));
  add("cau_neg_conn_ratio", C::Connectives, conn, "Causal negative connectives per word",
      F::Connectives, NM_GET(connectives, causal_negative));
  add("log_pos_conn_ratio", C::Connectives, conn, "Logical positive connectives per word",
      F::Connectives, NM_GET(connectives, logical_positive));
  add("log_neg_conn_ratio", C::Connectives, conn, "Logical negative connectives per word",
      F::Connectives, NM_GET(connectives, logical_negative));
  add("and_ratio", C::Connectives, conn, "Occurrences of 'e' per word", F::Connectives,
      NM_GET(connectives, and_ratio));
  add("or_ratio", C::Connectives, conn, "Occurrences of 'ou' per word", F::Connectives,
      NM_GET(connectives, or_ratio));
  add("if_ratio", C::Connectives, conn, "Occurrences of 'se' per word", F::Connectives,
      NM_GET(connectives, if_ratio));
  add("negation_ratio", C::Connectives, conn, "Negation words per word", F::Connectives,
      NM_GET(connectives, negation_ratio));
  add("ambiguous_connectives_ratio", C::Connectives, conn,
      "Connectives carrying more than one relation, per word", F::Connectives,
      NM_GET(connectives, ambiguous_ratio));

  // Temporal Lexicon
  add("tenses_pres", C::TemporalLexicon, morph(), "Share of finite verbs in present indicative",
      F::Temporal, NM_GET(temporal, present));
  add("tenses_pret", C::TemporalLexicon, morph(),
      "Share of finite verbs in preterite or pluperfect indicative", F::Temporal,
      NM_GET(temporal, preterite));
  add("tenses_imperf", C::TemporalLexicon, morph(),
      "Share of finite verbs in imperfect indicative", F::Temporal,
      NM_GET(temporal, imperfect));
  add("tenses_fut", C::TemporalLexicon, morph(), "Share of finite verbs in future indicative",
      F::Temporal, NM_GET(temporal, future));
  add("tenses_cond", C::TemporalLexicon, morph(), "Share of finite verbs in the conditional",
      F::Temporal, NM_GET(temporal, conditional));
  add("subjunctive_ratio", C::TemporalLexicon, morph(),
      "Share of finite verbs in the subjunctive", F::Temporal, NM_GET(temporal, subjunctive));
  add("imperative_ratio", C::TemporalLexicon, morph(),
      "Share of finite verbs in the imperative", F::Temporal, NM_GET(temporal, imperative));
  add("aux_plus_participle_ratio", C::TemporalLexicon, morph(),
      "Finite ter/haver/ser/estar followed by a participle, per finite verb", F::Temporal,
      NM_GET(temporal, compound));
  add("verb_tense_moods_count", C::TemporalLexicon, morph(),
      "Distinct tense and mood combinations", F::Temporal,
      NM_GET(temporal, tense_mood_combinations));
  add("temporal_pos_conn_ratio", C::TemporalLexicon, conn,
      "Temporal positive connectives per word", F::Temporal,
      NM_GET(temporal, temporal_positive));
  add("temporal_neg_conn_ratio", C::TemporalLexicon, conn,
      "Temporal negative connectives per word", F::Temporal,
      NM_GET(temporal, temporal_negative));

  // Syntactic Complexity
  add("words_before_main_verb", C::SyntacticComplexity, deps(),
      "Mean words before the main verb", F::Syntax, NM_GET(syntax, words_before_main_verb));
  add("adverbs_before_main_verb", C::SyntacticComplexity, deps(),
      "Mean adverbs before the main verb", F::Syntax, NM_GET(syntax, adverbs_before_main_verb));
  add("clauses_per_sentence", C::SyntacticComplexity, morph(), "Mean clauses per sentence",
      F::Syntax, NM_GET(syntax, clauses_per_sentence));
  add("coordinate_conjunctions_per_clauses", C::SyntacticComplexity, morph(),
      "Coordinating conjunctions per clause", F::Syntax,
      NM_GET(syntax, coordinate_conjunctions_per_clause));
  add("frazier", C::SyntacticComplexity, tree(), "Mean Frazier score per word", F::Syntax,
      NM_GET(syntax, frazier));
  add("yngve", C::SyntacticComplexity, tree(), "Mean Yngve load per word", F::Syntax,
      NM_GET(syntax, yngve));
  add("dep_distance", C::SyntacticComplexity, deps(), "Mean dependency arc length",
      F::Syntax, NM_GET(syntax, dependency_distance));
  add("non_svo_ratio", C::SyntacticComplexity, deps_morph(),
      "Predicates with an object before or a subject after the verb, per clause", F::Syntax,
      NM_GET(syntax, non_svo_ratio));
  add("subordinate_clauses", C::SyntacticComplexity, deps_morph(),
      "Subordinate clauses per clause", F::Syntax, NM_GET(syntax, subordinate_ratio));
  add("relative_clauses", C::SyntacticComplexity, deps_morph(), "Relative clauses per clause",
      F::Syntax, NM_GET(syntax, relative_ratio));
  add("adverbial_clauses", C::SyntacticComplexity, deps_morph(),
      "Adverbial clauses per clause", F::Syntax, NM_GET(syntax, adverbial_ratio));
  add("passive_ratio", C::SyntacticComplexity, deps_morph(), "Passive predicates per clause",
      F::Syntax, NM_GET(syntax, passive_ratio));
  add("postponed_subject_ratio", C::SyntacticComplexity, deps_morph(),
      "Predicates with a subject after the verb, per clause", F::Syntax,
      NM_GET(syntax, postponed_subject_ratio));
  add("infinitive_clauses", C::SyntacticComplexity, deps_morph(),
      "Infinitive clauses per clause", F::Syntax, NM_GET(syntax, infinitive_ratio));
  add("participle_clauses", C::SyntacticComplexity, deps_morph(),
      "Participle clauses per clause", F::Syntax, NM_GET(syntax, participle_ratio));
  add("coordinate_clause_starts", C::SyntacticComplexity, deps_morph(),
      "Clauses starting with a coordinating conjunction, per clause", F::Syntax,
      NM_GET(syntax, coordinate_start_ratio));
  add("sentences_with_one_clause", C::SyntacticComplexity, morph(),
      "Share of sentences with one clause", F::Syntax, NM_GET(syntax, one_clause));
  add("sentences_with_two_clauses", C::SyntacticComplexity, morph(),
      "Share of sentences with two clauses", F::Syntax, NM_GET(syntax, two_clauses));
  add("sentences_with_three_clauses", C::SyntacticComplexity, morph(),
      "Share of sentences with three clauses", F::Syntax, NM_GET(syntax, three_clauses));
  add("sentences_with_four_or_more_clauses", C::SyntacticComplexity, morph(),
      "Share of sentences with four or more clauses", F::Syntax,
      NM_GET(syntax, four_plus_clauses));

  // Syntactic Pattern Density
  add("gerund_clauses", C::SyntacticPatternDensity, deps_morph(), "Gerund clauses per clause",
      F::Pattern, NM_GET(pattern, gerund_clause_ratio));
  add("mean_noun_phrase", C::SyntacticPatternDensity, deps(), "Mean words per noun phrase",
      F::Pattern, NM_GET(pattern, np_mean_words));
  add("max_noun_phrase", C::SyntacticPatternDensity, deps(), "Words in the largest noun phrase",
      F::Pattern, NM_GET(pattern, np_max_words));
  add("min_noun_phrase", C::SyntacticPatternDensity, deps(),
      "Words in the smallest noun phrase", F::Pattern, NM_GET(pattern, np_min_words));

  // Morphosyntactic Word Information
  const auto M = C::MorphosyntacticWordInformation;
  add("content_words", M, pos(), "Content words per word", F::Morphosyntactic,
      NM_GET(morphosyntactic, content_words));
  add("function_words", M, pos(), "Function words per word", F::Morphosyntactic,
      NM_GET(morphosyntactic, function_words));
  add("nouns", M, pos(), "Nouns per word", F::Morphosyntactic, NM_GET(morphosyntactic, nouns));
  add("proper_nouns", M, pos(), "Proper nouns per word", F::Morphosyntactic,
      NM_GET(morphosyntactic, proper_nouns));
  add("adjectives", M, pos(), "Adjectives per word", F::Morphosyntactic,
      NM_GET(morphosyntactic, adjectives));
  add("adverbs", M, pos(), "Adverbs per word", F::Morphosyntactic,
      NM_GET(morphosyntactic, adverbs));
  add("verbs", M, pos(), "Verbs per word", F::Morphosyntactic, NM_GET(morphosyntactic, verbs));
  add("inflected_verbs", M, morph(), "Finite verbs per word", F::Morphosyntactic,
      NM_GET(morphosyntactic, inflected_verbs));
  add("non_inflected_verbs", M, morph(), "Infinitives, gerunds and participles per word",
      F::Morphosyntactic, NM_GET(morphosyntactic, non_inflected_verbs));
  add("infinitive_verbs", M, morph(), "Infinitives per word", F::Morphosyntactic,
      NM_GET(morphosyntactic, infinitive_verbs));
  add("gerund_verbs", M, morph(), "Gerunds per word", F::Morphosyntactic,
      NM_GET(morphosyntactic, gerund_verbs));
  add("pronouns", M, pos(), "Pronouns per word", F::Morphosyntactic,
      NM_GET(morphosyntactic, pronouns));
  add("personal_pronouns", M, morph(), "Personal pronouns per word", F::Morphosyntactic,
      NM_GET(morphosyntactic, personal_pronouns));
  add("prepositions", M, pos(), "Prepositions per word", F::Morphosyntactic,
      NM_GET(morphosyntactic, prepositions));
  add("prepositions_per_sentence", M, pos(), "Prepositions per sentence", F::Morphosyntactic,
      NM_GET(morphosyntactic, prepositions_per_sentence));
  add("prepositions_per_clause", M, morph(), "Prepositions per clause", F::Morphosyntactic,
      NM_GET(morphosyntactic, prepositions_per_clause));
  add("first_person_pronouns", M, morph(), "First-person share of personal pronouns",
      F::Morphosyntactic, NM_GET(morphosyntactic, first_person_pronouns));
  add("second_person_pronouns", M, morph(), "Second-person share of personal pronouns",
      F::Morphosyntactic, NM_GET(morphosyntactic, second_person_pronouns));
  add("third_person_pronouns", M, morph(), "Third-person share of personal pronouns",
      F::Morphosyntactic, NM_GET(morphosyntactic, third_person_pronouns));
  add("relative_pronouns", M, morph(), "Relative share of pronouns", F::Morphosyntactic,
      NM_GET(morphosyntactic, relative_pronouns));
  add("indefinite_pronouns", M, morph(), "Indefinite share of pronouns", F::Morphosyntactic,
      NM_GET(morphosyntactic, indefinite_pronouns));
  add("ratio_function_to_content_words", M, pos(), "Function words per content word",
      F::Morphosyntactic, NM_GET(morphosyntactic, ratio_function_to_content_words));
  add("nouns_mean", M, pos(), "Mean per-sentence noun incidence", F::Morphosyntactic,
      NM_GET(morphosyntactic, nouns_per_sentence.mean));
  add("nouns_standard_deviation", M, pos(), "Deviation of per-sentence noun incidence",
      F::Morphosyntactic, NM_GET(morphosyntactic, nouns_per_sentence.sd));
  add("nouns_min", M, pos(), "Lowest per-sentence noun incidence", F::Morphosyntactic,
      NM_GET(morphosyntactic, nouns_per_sentence.min));
  add("nouns_max", M, pos(), "Highest per-sentence noun incidence", F::Morphosyntactic,
      NM_GET(morphosyntactic, nouns_per_sentence.max));
  add("verbs_mean", M, pos(), "Mean per-sentence verb incidence", F::Morphosyntactic,
      NM_GET(morphosyntactic, verbs_per_sentence.mean));
  add("verbs_standard_deviation", M, pos(), "Deviation of per-sentence verb incidence",
      F::Morphosyntactic, NM_GET(morphosyntactic, verbs_per_sentence.sd));
  add("verbs_min", M, pos(), "Lowest per-sentence verb incidence", F::Morphosyntactic,
      NM_GET(morphosyntactic, verbs_per_sentence.min));
  add("verbs_max", M, pos(), "Highest per-sentence verb incidence", F::Morphosyntactic,
      NM_GET(morphosyntactic, verbs_per_sentence.max));
  add("adjectives_mean", M, pos(), "Mean per-sentence adjective incidence", F::Morphosyntactic,
      NM_GET(morphosyntactic, adjectives_per_sentence.mean));
  add("adjectives_standard_deviation", M, pos(),
      "Deviation of per-sentence adjective incidence", F::Morphosyntactic,
      NM_GET(morphosyntactic, adjectives_per_sentence.sd));
  add("adjectives_min", M, pos(), "Lowest per-sentence adjective incidence",
      F::Morphosyntactic, NM_GET(morphosyntactic, adjectives_per_sentence.min));
  add("adjectives_max", M, pos(), "Highest per-sentence adjective incidence",
      F::Morphosyntactic, NM_GET(morphosyntactic, adjectives_per_sentence.max));
  add("adverbs_mean", M, pos(), "Mean per-sentence adverb incidence", F::Morphosyntactic,
      NM_GET(morphosyntactic, adverbs_per_sentence.mean));
  add("adverbs_standard_deviation", M, pos(), "Deviation of per-sentence adverb incidence",
      F::Morphosyntactic, NM_GET(morphosyntactic, adverbs_per_sentence.sd));
  add("adverbs_min", M, pos(), "Lowest per-sentence adverb incidence", F::Morphosyntactic,
      NM_GET(morphosyntactic, adverbs_per_sentence.min));
  add("adverbs_max", M, pos(), "Highest per-sentence adverb incidence", F::Morphosyntactic,
      NM_GET(morphosyntactic, adverbs_per_sentence.max));
  add("pronouns_mean", M, pos(), "Mean per-sentence pronoun incidence", F::Morphosyntactic,
      NM_GET(morphosyntactic, pronouns_per_sentence.mean));
  add("pronouns_standard_deviation", M, pos(), "Deviation of per-sentence pronoun incidence",
      F::Morphosyntactic, NM_GET(morphosyntactic, pronouns_per_sentence.sd));
  add("pronouns_min", M, pos(), "Lowest per-sentence pronoun incidence", F::Morphosyntactic,
      NM_GET(morphosyntactic, pronouns_per_sentence.min));
  add("pronouns_max", M, pos(), "Highest per-sentence pronoun incidence", F::Morphosyntactic,
      NM_GET(morphosyntactic, pronouns_per_sentence.max));

  // Semantic Word Information
  const auto S = C::SemanticWordInformation;
  add("positive_words", S, none({"polarity"}), "Positive words per word", F::Semantic,
      NM_GET(semantic, positive_ratio));
  add("negative_words", S, none({"polarity"}), "Negative words per word", F::Semantic,
      NM_GET(semantic, negative_ratio));
  add("content_words_ambiguity", S, pos({"senses"}), "Mean senses per content word",
      F::Semantic, NM_GET(semantic, content_ambiguity));
  add("nouns_ambiguity", S, pos({"senses"}), "Mean senses per noun", F::Semantic,
      NM_GET(semantic, noun_ambiguity));
  add("adjectives_ambiguity", S, pos({"senses"}), "Mean senses per adjective", F::Semantic,
      NM_GET(semantic, adjective_ambiguity));
  add("verbs_ambiguity", S, pos({"senses"}), "Mean senses per verb", F::Semantic,
      NM_GET(semantic, verb_ambiguity));
  add("adverbs_ambiguity", S, pos({"senses"}), "Mean senses per adverb", F::Semantic,
      NM_GET(semantic, adverb_ambiguity));
  add("hypernyms_verbs", S, pos({"hypernyms"}), "Mean over sentences of hypernyms per verb",
      F::Semantic, NM_GET(semantic, verb_hypernyms));
  add("abstract_nouns_ratio", S, pos({"abstract_nouns"}), "Abstract share of nouns",
      F::Semantic, NM_GET(semantic, abstract_noun_ratio));
  add("abstract_nouns_per_sentence", S, pos({"abstract_nouns"}),
      "Mean over sentences of the abstract share of nouns", F::Semantic,
      NM_GET(semantic, abstract_noun_sentence));
  add("proper_noun_ratio", S, pos(), "Proper-noun share of nouns", F::Semantic,
      NM_GET(semantic, proper_noun_ratio));

  // Word Frequency
  const auto W = C::WordFrequency;
  add("cw_freq_brasileiro", W, pos({"freq_corpus_a"}), "Mean Zipf frequency of content words",
      F::Frequency, NM_GET(frequency, corpus_a.content_mean));
  add("min_cw_freq_brasileiro", W, pos({"freq_corpus_a"}),
      "Mean over sentences of the rarest content word", F::Frequency,
      NM_GET(frequency, corpus_a.content_rare));
  add("freq_brasileiro", W, none({"freq_corpus_a"}), "Mean Zipf frequency of words",
      F::Frequency, NM_GET(frequency, corpus_a.all_mean));
  add("min_freq_brasileiro", W, none({"freq_corpus_a"}),
      "Mean over sentences of the rarest word", F::Frequency,
      NM_GET(frequency, corpus_a.all_rare));
  add("cw_freq_brwac", W, pos({"freq_corpus_b"}), "Mean Zipf frequency of content words",
      F::Frequency, NM_GET(frequency, corpus_b.content_mean));
  add("min_cw_freq_brwac", W, pos({"freq_corpus_b"}),
      "Mean over sentences of the rarest content word", F::Frequency,
      NM_GET(frequency, corpus_b.content_rare));
  add("freq_brwac", W, none({"freq_corpus_b"}), "Mean Zipf frequency of words", F::Frequency,
      NM_GET(frequency, corpus_b.all_mean));
  add("min_freq_brwac", W, none({"freq_corpus_b"}), "Mean over sentences of the rarest word",
      F::Frequency, NM_GET(frequency, corpus_b.all_rare));
  add("cw_freq", W, pos({"freq_legacy"}), "Mean raw frequency of content words", F::Frequency,
      NM_GET(frequency, legacy_content_mean));
  add("min_freq", W, none({"freq_legacy"}), "Mean over sentences of the rarest raw frequency",
      F::Frequency, NM_GET(frequency, legacy_rare));

  // Readability Formulas
  add("flesch", C::ReadabilityFormulas, none(), "Flesch reading ease adapted to Portuguese",
      F::Readability, NM_GET(readability, flesch));
  add("dalechall_adapted", C::ReadabilityFormulas, none({"simple_words"}),
      "Dale-Chall score with the simple word list", F::Readability,
      NM_GET(readability, dale_chall));
  add("gunning_fog", C::ReadabilityFormulas, none(), "Gunning Fog index", F::Readability,
      NM_GET(readability, gunning_fog));
  add("brunet", C::ReadabilityFormulas, none(), "Brunet index", F::Readability,
      NM_GET(readability, brunet));
  add("honore", C::ReadabilityFormulas, none(), "Honore statistic", F::Readability,
      NM_GET(readability, honore));

  std::stable_sort(r.begin(), r.end(), [](const MetricDef& a, const MetricDef& b) {
    return a.info.category < b.info.category;
  });
  return r;
}

#undef NM_GET

const std::vector<MetricDef>& registry() {
  static const std::vector<MetricDef> r = build_registry();
  return r;
}

bool document_has_tree(const Document& doc) {
  for (const auto* s : doc.sentences()) {
    if (s->tree) return true;
  }
  return false;
}

void compute_family(Family family, const Document& doc, const ResourceBundle& bundle,
                    Families& f) {
  switch (family) {
    case Family::Descriptive: f.descriptive = descriptive_index(doc); break;
    case Family::Length: f.length = sentence_length_classes(doc); break;
    case Family::Easability: f.easability = easability(doc, bundle); break;
    case Family::Lexical: f.lexical = lexical_diversity(doc); break;
    case Family::Frequency: f.frequency = word_frequency(doc, bundle); break;
    case Family::Readability:
      f.readability = Readability{flesch(doc), dale_chall_adapted(doc, bundle),
                                  gunning_fog(doc), brunet(doc), honore(doc)};
      break;
    case Family::Psycholinguistic: f.psycholinguistic = psycholinguistic_profile(doc, bundle); break;
    case Family::Semantic: f.semantic = semantic_word_info(doc, bundle); break;
    case Family::Morphosyntactic: f.morphosyntactic = morphosyntactic_profile(doc); break;
    case Family::Connectives: f.connectives = connective_ratios(doc, bundle); break;
    case Family::Temporal: f.temporal = temporal_profile(doc, bundle); break;
    case Family::Syntax: f.syntax = syntactic_profile(doc); break;
    case Family::Pattern: f.pattern = pattern_density(doc); break;
    case Family::Referential: f.referential = referential_overlaps(doc); break;
    case Family::LsaSimilarity: f.lsa_similarity = lsa_similarities(doc, *bundle.embeddings); break;
    case Family::LsaGivenness: f.lsa_givenness = lsa_givenness(doc, *bundle.embeddings); break;
    case Family::LsaSpan: f.lsa_span = lsa_span(doc, *bundle.embeddings); break;
    case Family::CrossEntropy: f.cross_entropy = cross_entropy(doc); break;
  }
}

}  // namespace

std::string_view to_string(Category category) {
  switch (category) {
    case Category::DescriptiveIndex: return "Descriptive Index";
    case Category::TextEasability: return "Text Easability";
    case Category::ReferentialCohesion: return "Referential Cohesion";
    case Category::LsaSemanticCohesion: return "LSA-Semantic Cohesion";
    case Category::PsycholinguisticMeasures: return "Psycholinguistic Measures";
    case Category::LexicalDiversity: return "Lexical Diversity";
    case Category::Connectives: return "Connectives";
    case Category::TemporalLexicon: return "Temporal Lexicon";
    case Category::SyntacticComplexity: return "Syntactic Complexity";
    case Category::SyntacticPatternDensity: return "Syntactic Pattern Density";
    case Category::MorphosyntacticWordInformation: return "Morphosyntactic Word Information";
    case Category::SemanticWordInformation: return "Semantic Word Information";
    case Category::WordFrequency: return "Word Frequency";
    case Category::ReadabilityFormulas: return "Readability Formulas";
  }
  return "";
}

std::span<const Category> all_categories() {
  static constexpr std::array<Category, 14> kAll{
      Category::DescriptiveIndex,         Category::TextEasability,
      Category::ReferentialCohesion,      Category::LsaSemanticCohesion,
      Category::PsycholinguisticMeasures, Category::LexicalDiversity,
      Category::Connectives,              Category::TemporalLexicon,
      Category::SyntacticComplexity,      Category::SyntacticPatternDensity,
      Category::MorphosyntacticWordInformation, Category::SemanticWordInformation,
      Category::WordFrequency,            Category::ReadabilityFormulas};
  return kAll;
}

const std::vector<MetricInfo>& list_metrics() {
  static const std::vector<MetricInfo> infos = [] {
    std::vector<MetricInfo> out;
    for (const auto& d : registry()) out.push_back(d.info);
    return out;
  }();
  return infos;
}

const MetricInfo* find_metric(std::string_view id) {
  for (const auto& m : list_metrics()) {
    if (m.id == id) return &m;
  }
  return nullptr;
}

bool resource_available(std::string_view key, const ResourceBundle& b) {
  if (key == "simple_words") return b.simple_words.has_value();
  if (key == "concrete_words") return b.concrete_words.has_value();
  if (key == "easy_conjunctions") return b.easy_conjunctions.has_value();
  if (key == "hard_conjunctions") return b.hard_conjunctions.has_value();
  if (key == "discourse_markers") return b.discourse_markers.has_value();
  if (key == "abstract_nouns") return b.abstract_nouns.has_value();
  if (key == "connectives") return b.connectives.has_value();
  if (key == "norms") return b.norms.has_value();
  if (key == "senses") return b.senses && b.senses->has_senses;
  if (key == "hypernyms") return b.senses && b.senses->has_hypernyms;
  if (key == "polarity") return b.polarity.has_value();
  if (key == "freq_corpus_a") return b.freq_corpus_a.has_value();
  if (key == "freq_corpus_b") return b.freq_corpus_b.has_value();
  if (key == "freq_legacy") return b.freq_legacy.has_value();
  if (key == "embeddings") return b.embeddings.has_value();
  return false;
}

bool requirements_met(const Requirements& needs, const Document& doc,
                      const ResourceBundle& bundle) {
  if (needs.pos && !doc.annotation.pos) return false;
  if (needs.dependencies && !doc.annotation.dependencies) return false;
  if (needs.morphology && !doc.annotation.morphology) return false;
  if (needs.tree && !document_has_tree(doc)) return false;
  for (auto key : needs.resources) {
    if (!resource_available(key, bundle)) return false;
  }
  return true;
}

const MetricValue* MetricVector::find(std::string_view id) const {
  for (const auto& [k, v] : values) {
    if (k == id) return &v;
  }
  return nullptr;
}

MetricVector compute_all(const Document& doc, const ResourceBundle& bundle) {
  MetricVector out;
  out.doc_id = doc.id;
  Families families;
  std::array<int, kFamilies> state{};  // 0 pending, 1 ok, 2 failed
  for (const auto& def : registry()) {
    MetricValue v;
    if (requirements_met(def.info.needs, doc, bundle)) {
      auto fi = static_cast<std::size_t>(def.family);
      if (state[fi] == 0) {
        try {
          compute_family(def.family, doc, bundle, families);
          state[fi] = 1;
        } catch (const std::exception& e) {
          state[fi] = 2;
          out.diagnostics.push_back(std::string(kFamilyNames[fi]) + ": " + e.what());
        }
      }
      if (state[fi] == 1) v = def.get(families);
      if (v && !std::isfinite(*v)) v.reset();
    }
    out.values.emplace_back(std::string(def.info.id), v);
  }
  return out;
}

std::vector<MetricVector> compute_corpus(const std::vector<Document>& docs,
                                         const ResourceBundle& bundle, unsigned jobs) {
  std::vector<MetricVector> out(docs.size());
  const std::size_t workers = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(docs.size(), 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < docs.size(); ++i) out[i] = compute_all(docs[i], bundle);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = next++; i < docs.size(); i = next++) {
          out[i] = compute_all(docs[i], bundle);
        }
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

std::string format_value(const MetricValue& value) {
  if (!value) return "NA";
  char buf[64];
  double v = *value;
  if (v == 0) v = 0;  // no negative zero
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s = buf;
  if (s == "-0.000000") s = "0.000000";
  return s;
}

std::string metrics_tsv(const std::vector<MetricVector>& vectors) {
  std::string out = "doc_id";
  for (const auto& m : list_metrics()) {
    out += '\t';
    out += m.id;
  }
  out += '\n';
  for (const auto& v : vectors) {
    out += v.doc_id;
    for (const auto& m : list_metrics()) {
      out += '\t';
      const MetricValue* value = v.find(m.id);
      out += value ? format_value(*value) : "NA";
    }
    out += '\n';
  }
  return out;
}

std::string catalog_tsv() {
  std::string out = "id\tcategory\trequires\tdefinition\n";
  for (const auto& m : list_metrics()) {
    std::vector<std::string> req;
    if (m.needs.pos) req.emplace_back("pos");
    if (m.needs.dependencies) req.emplace_back("dependencies");
    if (m.needs.morphology) req.emplace_back("morphology");
    if (m.needs.tree) req.emplace_back("tree");
    for (auto r : m.needs.resources) req.emplace_back(r);
    std::string joined;
    for (std::size_t i = 0; i < req.size(); ++i) joined += (i ? "," : "") + req[i];
    if (joined.empty()) joined = "-";
    out += std::string(m.id) + '\t' + std::string(to_string(m.category)) + '\t' + joined + '\t' +
           std::string(m.definition) + '\n';
  }
  return out;
}

}  // namespace nilcmetrix
