#include "nilcmetrix/lexsem.hpp"

#include <set>
#include <string>
#include <vector>

namespace nilcmetrix {

namespace {

std::size_t word_count(const Document& doc) {
  std::size_t n = 0;
  for (const auto* s : doc.sentences()) {
    for (const auto& tok : s->tokens) n += is_word(tok);
  }
  return n;
}

bool is_verbal(const Token& tok) { return tok.pos == Pos::Verb || tok.pos == Pos::Aux; }

bool is_finite(const Token& tok) { return is_verbal(tok) && tok.feature("VerbForm") == "Fin"; }

std::size_t band_of(double v) {
  std::size_t b = 0;
  while (b < kNormBandEdges.size() && v >= kNormBandEdges[b]) ++b;
  return b;
}

NormSummary norm_summary(const std::vector<double>& values) {
  NormSummary out;
  out.mean = mean_of(values);
  out.sd = sd_of(values);
  if (values.empty()) return out;
  std::array<double, 4> counts{};
  for (double v : values) counts[band_of(v)] += 1;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    out.bands[i] = counts[i] / static_cast<double>(values.size());
  }
  return out;
}

ClassDistribution distribution(const std::vector<double>& values) {
  return {mean_of(values), sd_of(values), min_of(values), max_of(values)};
}

constexpr std::string_view kNegation[] = {"não", "nem", "nunca", "jamais", "tampouco"};

bool is_negation(const Token& tok) {
  auto key = form_key(tok);
  for (auto w : kNegation) {
    if (key == w) return true;
  }
  return false;
}

}  // namespace

std::span<const std::string_view> negation_words() { return kNegation; }

std::size_t finite_verb_count(const Sentence& sentence) {
  std::size_t n = 0;
  for (const auto& tok : sentence.tokens) n += is_finite(tok);
  return n;
}

std::size_t clause_count(const Sentence& sentence) {
  return std::max<std::size_t>(1, finite_verb_count(sentence));
}

PsycholinguisticProfile psycholinguistic_profile(const Document& doc,
                                                 const ResourceBundle& bundle) {
  PsycholinguisticProfile out;
  if (!bundle.norms) return out;
  std::vector<double> aoa, conc, fam, imag;
  for (const auto* s : doc.sentences()) {
    for (const auto& tok : s->tokens) {
      if (!is_word(tok) || !is_content(tok)) continue;
      const NormScores* n = bundle.norms->find(lemma_key(tok));
      if (!n) n = bundle.norms->find(form_key(tok));
      if (!n) continue;
      aoa.push_back(n->aoa);
      conc.push_back(n->concreteness);
      fam.push_back(n->familiarity);
      imag.push_back(n->imageability);
    }
  }
  out.aoa = norm_summary(aoa);
  out.concreteness = norm_summary(conc);
  out.familiarity = norm_summary(fam);
  out.imageability = norm_summary(imag);
  return out;
}

SemanticWordInfo semantic_word_info(const Document& doc, const ResourceBundle& bundle) {
  SemanticWordInfo out;
  const double words = static_cast<double>(word_count(doc));

  if (bundle.polarity) {
    std::size_t pos = 0, neg = 0;
    for (const auto* s : doc.sentences()) {
      for (const auto& tok : s->tokens) {
        if (!is_word(tok)) continue;
        auto p = bundle.polarity->find(lemma_key(tok));
        if (!p) p = bundle.polarity->find(form_key(tok));
        if (!p) continue;
        (*p == Polarity::Positive ? pos : neg) += 1;
      }
    }
    out.positive_ratio = ratio(static_cast<double>(pos), words);
    out.negative_ratio = ratio(static_cast<double>(neg), words);
  }

  if (bundle.senses && bundle.senses->has_senses) {
    std::vector<double> content, noun, adj, verb, adv;
    for (const auto* s : doc.sentences()) {
      for (const auto& tok : s->tokens) {
        if (!is_word(tok) || !is_content(tok)) continue;
        auto n = bundle.senses->sense_count(lemma_key(tok), tok.pos);
        if (!n) continue;
        double v = *n;
        content.push_back(v);
        switch (tok.pos) {
          case Pos::Noun: noun.push_back(v); break;
          case Pos::Adj: adj.push_back(v); break;
          case Pos::Verb: verb.push_back(v); break;
          case Pos::Adv: adv.push_back(v); break;
          default: break;
        }
      }
    }
    out.content_ambiguity = mean_of(content);
    out.noun_ambiguity = mean_of(noun);
    out.adjective_ambiguity = mean_of(adj);
    out.verb_ambiguity = mean_of(verb);
    out.adverb_ambiguity = mean_of(adv);
  }

  if (bundle.senses && bundle.senses->has_hypernyms) {
    std::vector<double> per_sentence;
    for (const auto* s : doc.sentences()) {
      std::vector<double> counts;
      for (const auto& tok : s->tokens) {
        if (tok.pos != Pos::Verb) continue;
        if (auto h = bundle.senses->hypernym_count(lemma_key(tok))) counts.push_back(*h);
      }
      if (auto m = mean_of(counts)) per_sentence.push_back(*m);
    }
    out.verb_hypernyms = mean_of(per_sentence);
  }

  if (bundle.abstract_nouns) {
    std::vector<double> per_sentence;
    std::size_t nouns = 0, abstract = 0;
    for (const auto* s : doc.sentences()) {
      std::size_t sn = 0, sa = 0;
      for (const auto& tok : s->tokens) {
        if (tok.pos != Pos::Noun) continue;
        ++sn;
        if (bundle.abstract_nouns->contains(lemma_key(tok)) ||
            bundle.abstract_nouns->contains(form_key(tok))) {
          ++sa;
        }
      }
      if (sn > 0) per_sentence.push_back(static_cast<double>(sa) / static_cast<double>(sn));
      nouns += sn;
      abstract += sa;
    }
    out.abstract_noun_sentence = mean_of(per_sentence);
    out.abstract_noun_ratio = ratio(static_cast<double>(abstract), static_cast<double>(nouns));
  }

  std::size_t common = 0, proper = 0;
  for (const auto* s : doc.sentences()) {
    for (const auto& tok : s->tokens) {
      if (tok.pos == Pos::Noun) ++common;
      if (tok.pos == Pos::Propn) ++proper;
    }
  }
  out.proper_noun_ratio =
      ratio(static_cast<double>(proper), static_cast<double>(common + proper));
  return out;
}

MorphosyntacticProfile morphosyntactic_profile(const Document& doc) {
  MorphosyntacticProfile out;
  std::size_t words = 0, content = 0, function = 0, nouns = 0, propns = 0, adjs = 0,
              advs = 0, verbs = 0, finite = 0, nonfinite = 0, inf = 0, ger = 0,
              prons = 0, personal = 0, adps = 0, clauses = 0, first = 0, second = 0,
              third = 0, relative = 0, indefinite = 0;
  std::vector<double> noun_inc, verb_inc, adj_inc, adv_inc, pron_inc;
  const auto sentences = doc.sentences();
  for (const auto* s : sentences) {
    std::size_t sw = 0, sn = 0, sv = 0, sa = 0, sd = 0, sp = 0;
    clauses += clause_count(*s);
    for (const auto& tok : s->tokens) {
      if (!is_word(tok)) continue;
      ++sw;
      if (is_content(tok)) ++content;
      else ++function;
      if (is_verbal(tok)) {
        auto form = tok.feature("VerbForm");
        if (form == "Fin") ++finite;
        if (form == "Inf" || form == "Ger" || form == "Part") ++nonfinite;
        if (form == "Inf") ++inf;
        if (form == "Ger") ++ger;
      }
      switch (tok.pos) {
        case Pos::Noun: ++sn; break;
        case Pos::Propn: ++propns; break;
        case Pos::Adj: ++sa; break;
        case Pos::Adv: ++sd; break;
        case Pos::Verb: ++sv; break;
        case Pos::Adp: ++adps; break;
        case Pos::Pron: {
          ++sp;
          auto type = tok.feature("PronType");
          if (type == "Rel") ++relative;
          if (type == "Ind") ++indefinite;
          if (is_personal_pronoun(tok)) {
            ++personal;
            auto person = tok.feature("Person");
            if (person == "1") ++first;
            if (person == "2") ++second;
            if (person == "3") ++third;
          }
          break;
        }
        default: break;
      }
    }
    words += sw;
    nouns += sn;
    verbs += sv;
    adjs += sa;
    advs += sd;
    prons += sp;
    if (sw > 0) {
      const double w = static_cast<double>(sw);
      noun_inc.push_back(static_cast<double>(sn) / w);
      verb_inc.push_back(static_cast<double>(sv) / w);
      adj_inc.push_back(static_cast<double>(sa) / w);
      adv_inc.push_back(static_cast<double>(sd) / w);
      pron_inc.push_back(static_cast<double>(sp) / w);
    }
  }
  const double w = static_cast<double>(words);
  auto per_word = [&](std::size_t n) { return ratio(static_cast<double>(n), w); };
  out.content_words = per_word(content);
  out.function_words = per_word(function);
  out.nouns = per_word(nouns);
  out.proper_nouns = per_word(propns);
  out.adjectives = per_word(adjs);
  out.adverbs = per_word(advs);
  out.verbs = per_word(verbs);
  out.inflected_verbs = per_word(finite);
  out.non_inflected_verbs = per_word(nonfinite);
  out.infinitive_verbs = per_word(inf);
  out.gerund_verbs = per_word(ger);
  out.pronouns = per_word(prons);
  out.personal_pronouns = per_word(personal);
  out.prepositions = per_word(adps);
  out.prepositions_per_sentence =
      ratio(static_cast<double>(adps), static_cast<double>(sentences.size()));
  out.prepositions_per_clause = ratio(static_cast<double>(adps), static_cast<double>(clauses));
  const double pp = static_cast<double>(personal);
  out.first_person_pronouns = ratio(static_cast<double>(first), pp);
  out.second_person_pronouns = ratio(static_cast<double>(second), pp);
  out.third_person_pronouns = ratio(static_cast<double>(third), pp);
  out.relative_pronouns = ratio(static_cast<double>(relative), static_cast<double>(prons));
  out.indefinite_pronouns = ratio(static_cast<double>(indefinite), static_cast<double>(prons));
  out.ratio_function_to_content_words =
      ratio(static_cast<double>(function), static_cast<double>(content));
  out.nouns_per_sentence = distribution(noun_inc);
  out.verbs_per_sentence = distribution(verb_inc);
  out.adjectives_per_sentence = distribution(adj_inc);
  out.adverbs_per_sentence = distribution(adv_inc);
  out.pronouns_per_sentence = distribution(pron_inc);
  return out;
}

ConnectiveRatios connective_ratios(const Document& doc, const ResourceBundle& bundle) {
  ConnectiveRatios out;
  if (!bundle.connectives) return out;
  const auto& lex = *bundle.connectives;
  std::size_t all = 0, ambiguous = 0, e = 0, ou = 0, se = 0, neg = 0;
  std::array<std::size_t, 6> kinds{};
  constexpr std::array<std::pair<ConnectiveKind, Polarity>, 6> kKinds{{
      {ConnectiveKind::Additive, Polarity::Positive},
      {ConnectiveKind::Additive, Polarity::Negative},
      {ConnectiveKind::Causal, Polarity::Positive},
      {ConnectiveKind::Causal, Polarity::Negative},
      {ConnectiveKind::Logical, Polarity::Positive},
      {ConnectiveKind::Logical, Polarity::Negative},
  }};
  for (const auto* s : doc.sentences()) {
    for (const auto& m : match_connectives(*s, lex)) {
      ++all;
      for (std::size_t i = 0; i < kKinds.size(); ++i) {
        if (m.has(kKinds[i].first, kKinds[i].second)) ++kinds[i];
      }
      if (m.senses.size() > 1 &&
          (!bundle.discourse_markers || bundle.discourse_markers->contains(m.form))) {
        ++ambiguous;
      }
    }
    for (const auto& tok : s->tokens) {
      if (!is_word(tok)) continue;
      if (is_negation(tok)) ++neg;
      if (tok.pos == Pos::Pron) continue;
      auto key = form_key(tok);
      if (key == "e") ++e;
      else if (key == "ou") ++ou;
      else if (key == "se") ++se;
    }
  }
  const double w = static_cast<double>(word_count(doc));
  auto per_word = [&](std::size_t n) { return ratio(static_cast<double>(n), w); };
  out.all = per_word(all);
  out.additive_positive = per_word(kinds[0]);
  out.additive_negative = per_word(kinds[1]);
  out.causal_positive = per_word(kinds[2]);
  out.causal_negative = per_word(kinds[3]);
  out.logical_positive = per_word(kinds[4]);
  out.logical_negative = per_word(kinds[5]);
  out.and_ratio = per_word(e);
  out.or_ratio = per_word(ou);
  out.if_ratio = per_word(se);
  out.negation_ratio = per_word(neg);
  out.ambiguous_ratio = per_word(ambiguous);
  return out;
}

TemporalProfile temporal_profile(const Document& doc, const ResourceBundle& bundle) {
  TemporalProfile out;
  std::size_t finite = 0, pres = 0, pret = 0, imperf = 0, fut = 0, cond = 0, subj = 0,
              imper = 0, compound = 0;
  std::set<std::pair<std::string, std::string>> combos;
  for (const auto* s : doc.sentences()) {
    for (const auto& tok : s->tokens) {
      if (!is_finite(tok)) continue;
      ++finite;
      auto mood = tok.feature("Mood");
      auto tense = tok.feature("Tense");
      if (!mood.empty() || !tense.empty()) combos.emplace(std::string(mood), std::string(tense));
      if (mood == "Ind") {
        if (tense == "Pres") ++pres;
        else if (tense == "Past" || tense == "Pqp") ++pret;
        else if (tense == "Imp") ++imperf;
        else if (tense == "Fut") ++fut;
      } else if (mood == "Cnd") {
        ++cond;
      } else if (mood == "Sub") {
        ++subj;
      } else if (mood == "Imp") {
        ++imper;
      }
      if (tok.pos == Pos::Aux) {
        auto lemma = lemma_key(tok);
        if (lemma == "ter" || lemma == "haver" || lemma == "ser" || lemma == "estar") {
          bool part = false;
          if (tok.head != 0 && s->at(tok.head).feature("VerbForm") == "Part") part = true;
          if (tok.index < s->tokens.size() && s->at(tok.index + 1).feature("VerbForm") == "Part") {
            part = true;
          }
          compound += part;
        }
      }
    }
  }
  const double f = static_cast<double>(finite);
  auto share = [&](std::size_t n) { return ratio(static_cast<double>(n), f); };
  out.present = share(pres);
  out.preterite = share(pret);
  out.imperfect = share(imperf);
  out.future = share(fut);
  out.conditional = share(cond);
  out.subjunctive = share(subj);
  out.imperative = share(imper);
  out.compound = share(compound);
  out.tense_mood_combinations = static_cast<double>(combos.size());

  if (bundle.connectives) {
    std::size_t pos = 0, neg = 0;
    for (const auto* s : doc.sentences()) {
      for (const auto& m : match_connectives(*s, *bundle.connectives)) {
        pos += m.has(ConnectiveKind::Temporal, Polarity::Positive);
        neg += m.has(ConnectiveKind::Temporal, Polarity::Negative);
      }
    }
    const double w = static_cast<double>(word_count(doc));
    out.temporal_positive = ratio(static_cast<double>(pos), w);
    out.temporal_negative = ratio(static_cast<double>(neg), w);
  }
  return out;
}

}  // namespace nilcmetrix
