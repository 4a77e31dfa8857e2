#include "nilcmetrix/surface.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "nilcmetrix/unicode.hpp"

namespace nilcmetrix {

namespace {

template <typename Pred>
MetricValue type_token_ratio(const Document& doc, Pred pred) {
  std::unordered_set<std::string> types;
  std::size_t tokens = 0;
  for (const auto* s : doc.sentences()) {
    for (const auto& tok : s->tokens) {
      if (!pred(tok)) continue;
      types.insert(form_key(tok));
      ++tokens;
    }
  }
  return ratio(static_cast<double>(types.size()), static_cast<double>(tokens));
}

struct WordStats {
  std::size_t words = 0;
  std::size_t sentences = 0;
  std::size_t syllabified = 0;  // words with at least one letter
  std::size_t syllables = 0;
  std::size_t difficult = 0;    // more than two syllables
};

WordStats word_stats(const Document& doc) {
  WordStats st;
  for (const auto* s : doc.sentences()) {
    ++st.sentences;
    for (const auto& tok : s->tokens) {
      if (!is_word(tok)) continue;
      ++st.words;
      if (auto n = token_syllables(tok)) {
        ++st.syllabified;
        st.syllables += static_cast<std::size_t>(*n);
        if (*n > 2) ++st.difficult;
      }
    }
  }
  return st;
}

bool in_set(const std::optional<WordSet>& set, const Token& tok) {
  return set && (set->contains(form_key(tok)) || set->contains(lemma_key(tok)));
}

std::size_t count_matches(const Document& doc, const WordSet& set) {
  std::size_t n = 0;
  for (const auto* s : doc.sentences()) n += match_wordset(*s, set).size();
  return n;
}

std::size_t word_count(const Document& doc) {
  std::size_t n = 0;
  for (const auto* s : doc.sentences()) {
    for (const auto& tok : s->tokens) n += is_word(tok);
  }
  return n;
}

CorpusFrequency corpus_frequency(const Document& doc, const FreqTable& table, bool pos) {
  std::vector<double> content;
  std::vector<double> all;
  std::vector<double> rare_content;
  std::vector<double> rare_all;
  for (const auto* s : doc.sentences()) {
    double min_content = std::numeric_limits<double>::infinity();
    double min_all = std::numeric_limits<double>::infinity();
    for (const auto& tok : s->tokens) {
      if (!is_word(tok)) continue;
      auto fpm = table.find(form_key(tok));
      if (!fpm) continue;
      double z = zipf(*fpm);
      all.push_back(z);
      min_all = std::min(min_all, z);
      if (pos && is_content(tok)) {
        content.push_back(z);
        min_content = std::min(min_content, z);
      }
    }
    if (std::isfinite(min_all)) rare_all.push_back(min_all);
    if (std::isfinite(min_content)) rare_content.push_back(min_content);
  }
  CorpusFrequency out;
  out.all_mean = mean_of(all);
  out.all_rare = mean_of(rare_all);
  if (pos) {
    out.content_mean = mean_of(content);
    out.content_rare = mean_of(rare_content);
  }
  return out;
}

}  // namespace

std::optional<int> token_syllables(const Token& token) {
  auto cps = unicode::code_points(unicode::fold(token.surface));
  int total = 0;
  bool letters = false;
  std::string run;
  auto flush = [&]() {
    if (!run.empty()) {
      total += syllabify(run);
      run.clear();
    }
  };
  for (char32_t c : cps) {
    if (unicode::is_letter(c)) {
      run += unicode::encode(c);
      letters = true;
    } else {
      flush();
    }
  }
  flush();
  if (!letters) return std::nullopt;
  return total;
}

SurfaceProfile descriptive_index(const Document& doc) {
  SurfaceProfile p;
  p.paragraphs = doc.paragraphs.size();
  std::vector<double> lengths;
  std::size_t headings = 0;
  std::size_t content_words = 0;
  std::size_t content_syllables = 0;
  for (const auto& para : doc.paragraphs) {
    headings += para.is_heading;
    for (const auto& s : para.sentences) {
      std::size_t n = 0;
      for (const auto& tok : s.tokens) {
        if (!is_word(tok)) continue;
        ++n;
        if (doc.annotation.pos && is_content(tok)) {
          if (auto syl = token_syllables(tok)) {
            ++content_words;
            content_syllables += static_cast<std::size_t>(*syl);
          }
        }
      }
      lengths.push_back(static_cast<double>(n));
      p.words += n;
    }
  }
  p.sentences = lengths.size();
  p.sentences_per_paragraph =
      static_cast<double>(p.sentences) / static_cast<double>(p.paragraphs);
  if (doc.annotation.pos) {
    p.syllables_per_content_word = ratio(static_cast<double>(content_syllables),
                                         static_cast<double>(content_words));
  }
  auto summary = summarize(lengths);
  p.words_per_sentence = summary->mean;
  p.words_per_sentence_max = summary->max;
  p.words_per_sentence_min = summary->min;
  p.words_per_sentence_sd = summary->sd;
  p.heading_ratio = static_cast<double>(headings) / static_cast<double>(p.sentences);
  return p;
}

LengthClasses sentence_length_classes(const Document& doc) {
  std::size_t counts[4] = {0, 0, 0, 0};
  std::size_t total = 0;
  for (const auto* s : doc.sentences()) {
    std::size_t n = s->words().size();
    std::size_t cls = n <= 11 ? 0 : n == 12 ? 1 : n <= 15 ? 2 : 3;
    ++counts[cls];
    ++total;
  }
  const double t = static_cast<double>(total);
  return {counts[0] / t, counts[1] / t, counts[2] / t, counts[3] / t};
}

Easability easability(const Document& doc, const ResourceBundle& bundle) {
  Easability e;
  const double words = static_cast<double>(word_count(doc));
  if (bundle.easy_conjunctions) {
    e.easy_conj_ratio = ratio(static_cast<double>(count_matches(doc, *bundle.easy_conjunctions)), words);
  }
  if (bundle.hard_conjunctions) {
    e.hard_conj_ratio = ratio(static_cast<double>(count_matches(doc, *bundle.hard_conjunctions)), words);
  }
  if (doc.annotation.pos) {
    std::size_t personal = 0;
    std::size_t first = 0;
    std::size_t content = 0;
    std::size_t simple = 0;
    for (const auto* s : doc.sentences()) {
      for (const auto& tok : s->tokens) {
        if (is_personal_pronoun(tok)) {
          ++personal;
          first += tok.feature("Person") == "1";
        }
        if (is_word(tok) && is_content(tok)) {
          ++content;
          simple += in_set(bundle.simple_words, tok) || in_set(bundle.concrete_words, tok);
        }
      }
    }
    e.first_person_pronoun_ratio = ratio(static_cast<double>(first), static_cast<double>(personal));
    if (bundle.simple_words) {
      e.simple_word_ratio = ratio(static_cast<double>(simple), static_cast<double>(content));
    }
  }
  return e;
}

LexicalDiversity lexical_diversity(const Document& doc) {
  LexicalDiversity d;
  d.ttr = type_token_ratio(doc, [](const Token& t) { return is_word(t); });
  if (!doc.annotation.pos) return d;

  auto word_of = [](Pos pos) {
    return [pos](const Token& t) { return t.pos == pos && is_word(t); };
  };
  auto pron_type = [](std::string_view type) {
    return [type](const Token& t) {
      return t.pos == Pos::Pron && t.feature("PronType") == type && is_word(t);
    };
  };
  d.content_ttr = type_token_ratio(doc, [](const Token& t) { return is_word(t) && is_content(t); });
  d.function_ttr = type_token_ratio(doc, [](const Token& t) { return is_function_word(t); });
  d.noun_ttr = type_token_ratio(doc, word_of(Pos::Noun));
  d.verb_ttr = type_token_ratio(doc, word_of(Pos::Verb));
  d.adjective_ttr = type_token_ratio(doc, word_of(Pos::Adj));
  d.pronoun_ttr = type_token_ratio(doc, word_of(Pos::Pron));
  d.indefinite_pronoun_ttr = type_token_ratio(doc, pron_type("Ind"));
  d.relative_pronoun_ttr = type_token_ratio(doc, pron_type("Rel"));
  d.preposition_ttr = type_token_ratio(doc, word_of(Pos::Adp));
  d.punctuation_ttr = type_token_ratio(doc, [](const Token& t) { return t.pos == Pos::Punct; });

  std::size_t content = 0;
  std::size_t function = 0;
  std::vector<double> shares;
  for (const auto* s : doc.sentences()) {
    std::size_t words = 0;
    std::size_t c = 0;
    for (const auto& tok : s->tokens) {
      if (!is_word(tok)) continue;
      ++words;
      if (is_content(tok)) ++c;
    }
    content += c;
    function += words - c;
    if (words > 0) shares.push_back(static_cast<double>(c) / static_cast<double>(words));
  }
  d.content_density = ratio(static_cast<double>(content), static_cast<double>(function));
  d.content_word_max = max_of(shares);
  return d;
}

WordFrequency word_frequency(const Document& doc, const ResourceBundle& bundle) {
  WordFrequency f;
  const bool pos = doc.annotation.pos;
  if (bundle.freq_corpus_a) f.corpus_a = corpus_frequency(doc, *bundle.freq_corpus_a, pos);
  if (bundle.freq_corpus_b) f.corpus_b = corpus_frequency(doc, *bundle.freq_corpus_b, pos);
  if (bundle.freq_legacy) {
    std::vector<double> content;
    std::vector<double> rare;
    for (const auto* s : doc.sentences()) {
      double min_all = std::numeric_limits<double>::infinity();
      for (const auto& tok : s->tokens) {
        if (!is_word(tok)) continue;
        auto freq = bundle.freq_legacy->find(form_key(tok));
        if (!freq) continue;
        min_all = std::min(min_all, *freq);
        if (pos && is_content(tok)) content.push_back(*freq);
      }
      if (std::isfinite(min_all)) rare.push_back(min_all);
    }
    if (pos) f.legacy_content_mean = mean_of(content);
    f.legacy_rare = mean_of(rare);
  }
  return f;
}

double flesch_score(double words_per_sentence, double syllables_per_word) {
  return 248.835 - 1.015 * words_per_sentence - 84.6 * syllables_per_word;
}

double dale_chall_score(double unfamiliar_percentage, double words_per_sentence) {
  return 0.1579 * unfamiliar_percentage + 0.0496 * words_per_sentence + 3.6365;
}

double gunning_fog_score(double words_per_sentence, double difficult_percentage) {
  return 0.4 * (words_per_sentence + difficult_percentage);
}

double brunet_score(double tokens, double types) {
  return std::pow(tokens, std::pow(types, -0.165));
}

MetricValue honore_score(double tokens, double types, double hapaxes) {
  if (types <= 0 || hapaxes >= types) return std::nullopt;
  return 100.0 * std::log(tokens) / (1.0 - hapaxes / types);
}

MetricValue flesch(const Document& doc) {
  WordStats st = word_stats(doc);
  if (st.words == 0 || st.syllabified == 0) return std::nullopt;
  double asl = static_cast<double>(st.words) / static_cast<double>(st.sentences);
  double asw = static_cast<double>(st.syllables) / static_cast<double>(st.syllabified);
  return flesch_score(asl, asw);
}

MetricValue dale_chall_adapted(const Document& doc, const ResourceBundle& bundle) {
  if (!bundle.simple_words) return std::nullopt;
  std::size_t words = 0;
  std::size_t unfamiliar = 0;
  for (const auto* s : doc.sentences()) {
    for (const auto& tok : s->tokens) {
      if (!is_word(tok)) continue;
      ++words;
      unfamiliar += !in_set(bundle.simple_words, tok);
    }
  }
  if (words == 0) return std::nullopt;
  double asl = static_cast<double>(words) / static_cast<double>(doc.sentence_count());
  return dale_chall_score(100.0 * static_cast<double>(unfamiliar) / static_cast<double>(words), asl);
}

MetricValue gunning_fog(const Document& doc) {
  WordStats st = word_stats(doc);
  if (st.words == 0) return std::nullopt;
  double asl = static_cast<double>(st.words) / static_cast<double>(st.sentences);
  double pct = 100.0 * static_cast<double>(st.difficult) / static_cast<double>(st.words);
  return gunning_fog_score(asl, pct);
}

MetricValue brunet(const Document& doc) {
  std::unordered_set<std::string> types;
  std::size_t tokens = 0;
  for (const auto* s : doc.sentences()) {
    for (const auto& tok : s->tokens) {
      if (!is_word(tok)) continue;
      types.insert(form_key(tok));
      ++tokens;
    }
  }
  if (tokens == 0) return std::nullopt;
  return brunet_score(static_cast<double>(tokens), static_cast<double>(types.size()));
}

MetricValue honore(const Document& doc) {
  std::unordered_map<std::string, std::size_t> freq;
  std::size_t tokens = 0;
  for (const auto* s : doc.sentences()) {
    for (const auto& tok : s->tokens) {
      if (!is_word(tok)) continue;
      ++freq[form_key(tok)];
      ++tokens;
    }
  }
  if (tokens == 0) return std::nullopt;
  std::size_t hapax = 0;
  for (const auto& [_, n] : freq) hapax += (n == 1);
  return honore_score(static_cast<double>(tokens), static_cast<double>(freq.size()),
                      static_cast<double>(hapax));
}

}  // namespace nilcmetrix
