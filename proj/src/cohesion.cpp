#include "nilcmetrix/cohesion.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <unordered_map>

#include "nilcmetrix/stemmer.hpp"

namespace nilcmetrix {

namespace {

using KeySet = std::set<std::string>;

struct SentenceKeys {
  KeySet arguments;  // NOUN, PROPN, PRON lemmas
  KeySet stems;      // content-word stems
  KeySet content;    // content-word lemmas
  std::vector<const Token*> nouns;
  std::vector<const Token*> pronouns;  // third-person personal pronouns
};

bool is_anaphor(const Token& tok) {
  return is_personal_pronoun(tok) && tok.feature("Person") == "3" &&
         tok.feature("Reflex") != "Yes";
}

bool agrees(const Token& pronoun, const Token& noun) {
  for (std::string_view f : {"Gender", "Number"}) {
    auto a = pronoun.feature(f);
    auto b = noun.feature(f);
    if (!a.empty() && !b.empty() && a != b) return false;
  }
  return true;
}

bool has_antecedent(const SentenceKeys& earlier, const SentenceKeys& later) {
  for (const auto* p : later.pronouns) {
    for (const auto* n : earlier.nouns) {
      if (agrees(*p, *n)) return true;
    }
  }
  return false;
}

bool intersects(const KeySet& a, const KeySet& b) {
  for (const auto& k : a) {
    if (b.count(k)) return true;
  }
  return false;
}

double dice(const KeySet& a, const KeySet& b) {
  if (a.empty() && b.empty()) return 0;
  std::size_t shared = 0;
  for (const auto& k : a) shared += b.count(k);
  return 2.0 * static_cast<double>(shared) / static_cast<double>(a.size() + b.size());
}

SentenceKeys keys_of(const Sentence& s) {
  SentenceKeys k;
  for (const auto& tok : s.tokens) {
    if (!is_word(tok)) continue;
    if (tok.pos == Pos::Noun || tok.pos == Pos::Propn || tok.pos == Pos::Pron) {
      k.arguments.insert(lemma_key(tok));
    }
    if (is_content(tok)) {
      k.content.insert(lemma_key(tok));
      k.stems.insert(stem(form_key(tok)));
    }
    if (tok.pos == Pos::Noun || tok.pos == Pos::Propn) k.nouns.push_back(&tok);
    if (is_anaphor(tok)) k.pronouns.push_back(&tok);
  }
  return k;
}

double norm(const std::vector<double>& v) {
  double s = 0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

MeanSd mean_sd(const std::vector<double>& values) {
  return {mean_of(values), sd_of(values)};
}

std::vector<SentenceVector> document_vectors(const Document& doc, const EmbeddingModel& model) {
  std::vector<SentenceVector> out;
  for (const auto* s : doc.sentences()) out.push_back(sentence_vector(*s, model));
  return out;
}

/// Mean of the non-zero vectors; empty when there is none.
std::vector<double> mean_vector(const std::vector<const std::vector<double>*>& vectors,
                                std::size_t dim) {
  std::vector<double> acc(dim, 0.0);
  std::size_t n = 0;
  for (const auto* v : vectors) {
    if (norm(*v) == 0) continue;
    for (std::size_t i = 0; i < dim; ++i) acc[i] += (*v)[i];
    ++n;
  }
  if (n == 0) return {};
  for (double& x : acc) x /= static_cast<double>(n);
  return acc;
}

}  // namespace

ReferentialCohesion referential_overlaps(const Document& doc) {
  ReferentialCohesion out;
  std::vector<SentenceKeys> keys;
  for (const auto* s : doc.sentences()) keys.push_back(keys_of(*s));

  std::vector<double> adj_arg, arg, adj_stem, stems, adj_cw, cw, adj_ana, ana;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    for (std::size_t j = i + 1; j < keys.size(); ++j) {
      double a = intersects(keys[i].arguments, keys[j].arguments);
      double st = intersects(keys[i].stems, keys[j].stems);
      double c = dice(keys[i].content, keys[j].content);
      double an = has_antecedent(keys[i], keys[j]);
      arg.push_back(a);
      stems.push_back(st);
      cw.push_back(c);
      ana.push_back(an);
      if (j == i + 1) {
        adj_arg.push_back(a);
        adj_stem.push_back(st);
        adj_cw.push_back(c);
        adj_ana.push_back(an);
      }
    }
  }
  out.adjacent_argument = mean_of(adj_arg);
  out.argument = mean_of(arg);
  out.adjacent_stem = mean_of(adj_stem);
  out.stem = mean_of(stems);
  out.adjacent_content = mean_of(adj_cw);
  out.content = mean_of(cw);
  out.adjacent_anaphoric = mean_of(adj_ana);
  out.anaphoric = mean_of(ana);

  // A pronoun corefers when a compatible noun occurs anywhere before it.
  std::vector<double> per_sentence;
  std::vector<const Token*> seen;
  for (const auto* s : doc.sentences()) {
    std::size_t n = 0;
    for (const auto& tok : s->tokens) {
      if (is_anaphor(tok)) {
        for (const auto* noun : seen) {
          if (agrees(tok, *noun)) {
            ++n;
            break;
          }
        }
      }
      if (tok.pos == Pos::Noun || tok.pos == Pos::Propn) seen.push_back(&tok);
    }
    per_sentence.push_back(static_cast<double>(n));
  }
  out.coreferent_pronouns = mean_of(per_sentence);
  return out;
}

bool SentenceVector::is_zero() const { return norm(values) == 0; }

SentenceVector sentence_vector(const Sentence& sentence, const EmbeddingModel& model) {
  SentenceVector out;
  out.values.assign(model.dimension(), 0.0);
  std::size_t words = 0, found = 0;
  for (const auto& tok : sentence.tokens) {
    if (!is_word(tok)) continue;
    ++words;
    auto v = model.find(form_key(tok));
    if (!v) v = model.find(lemma_key(tok));
    if (!v) continue;
    ++found;
    for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] += (*v)[i];
  }
  if (found > 0) {
    for (double& x : out.values) x /= static_cast<double>(found);
  }
  out.coverage = words == 0 ? 0.0 : static_cast<double>(found) / static_cast<double>(words);
  return out;
}

MetricValue cosine(const std::vector<double>& a, const std::vector<double>& b) {
  double na = norm(a), nb = norm(b);
  if (na == 0 || nb == 0) return std::nullopt;
  return std::clamp(dot(a, b) / (na * nb), -1.0, 1.0);
}

LsaSimilarities lsa_similarities(const Document& doc, const EmbeddingModel& model) {
  LsaSimilarities out;
  auto vectors = document_vectors(doc, model);
  std::vector<double> adj, all, para;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    for (std::size_t j = i + 1; j < vectors.size(); ++j) {
      auto c = cosine(vectors[i].values, vectors[j].values);
      if (!c) continue;
      all.push_back(*c);
      if (j == i + 1) adj.push_back(*c);
    }
  }
  std::vector<std::vector<double>> paragraphs;
  std::size_t k = 0;
  for (const auto& p : doc.paragraphs) {
    std::vector<const std::vector<double>*> members;
    for (std::size_t s = 0; s < p.sentences.size(); ++s) members.push_back(&vectors[k++].values);
    paragraphs.push_back(mean_vector(members, model.dimension()));
  }
  for (std::size_t i = 0; i + 1 < paragraphs.size(); ++i) {
    if (paragraphs[i].empty() || paragraphs[i + 1].empty()) continue;
    if (auto c = cosine(paragraphs[i], paragraphs[i + 1])) para.push_back(*c);
  }
  out.adjacent_mean = mean_of(adj);
  out.adjacent_sd = sd_of(adj);
  out.paragraph_mean = mean_of(para);
  out.paragraph_sd = sd_of(para);
  out.all_mean = mean_of(all);
  out.all_sd = sd_of(all);
  return out;
}

MeanSd lsa_givenness(const Document& doc, const EmbeddingModel& model) {
  auto vectors = document_vectors(doc, model);
  std::vector<double> scores;
  std::vector<const std::vector<double>*> previous;
  for (const auto& v : vectors) {
    if (!previous.empty() && !v.is_zero()) {
      auto given = mean_vector(previous, model.dimension());
      if (!given.empty()) {
        if (auto c = cosine(v.values, given)) scores.push_back(*c);
      }
    }
    previous.push_back(&v.values);
  }
  return mean_sd(scores);
}

MetricValue span_score(const std::vector<double>& v,
                       const std::vector<std::vector<double>>& basis) {
  const double nv = norm(v);
  if (nv == 0) return std::nullopt;
  std::vector<std::vector<double>> ortho;
  for (const auto& b : basis) {
    std::vector<double> r = b;
    for (const auto& q : ortho) {
      double c = dot(r, q);
      for (std::size_t i = 0; i < r.size(); ++i) r[i] -= c * q[i];
    }
    double nr = norm(r);
    if (nr <= 1e-10 * norm(b) || nr == 0) continue;
    for (double& x : r) x /= nr;
    ortho.push_back(std::move(r));
  }
  if (ortho.empty()) return std::nullopt;
  double ss = 0;
  for (const auto& q : ortho) {
    double c = dot(v, q);
    ss += c * c;
  }
  return std::clamp(std::sqrt(ss) / nv, 0.0, 1.0);
}

MeanSd lsa_span(const Document& doc, const EmbeddingModel& model) {
  auto vectors = document_vectors(doc, model);
  std::vector<double> scores;
  std::vector<std::vector<double>> basis;
  for (const auto& v : vectors) {
    if (!basis.empty()) {
      if (auto s = span_score(v.values, basis)) scores.push_back(*s);
    }
    if (!v.is_zero()) basis.push_back(v.values);
  }
  return mean_sd(scores);
}

MetricValue cross_entropy(const Document& doc) {
  std::vector<std::vector<std::string>> bags;
  for (const auto* s : doc.sentences()) {
    std::vector<std::string> words;
    for (const auto& tok : s->tokens) {
      if (is_word(tok)) words.push_back(form_key(tok));
    }
    bags.push_back(std::move(words));
  }
  std::vector<double> values;
  for (std::size_t i = 0; i + 1 < bags.size(); ++i) {
    const auto& p = bags[i];
    const auto& q = bags[i + 1];
    if (p.empty() || q.empty()) continue;
    std::unordered_map<std::string, std::size_t> counts;
    std::set<std::string> vocab(q.begin(), q.end());
    for (const auto& w : p) {
      ++counts[w];
      vocab.insert(w);
    }
    const double den = static_cast<double>(p.size() + vocab.size());
    double h = 0;
    for (const auto& w : q) {
      auto it = counts.find(w);
      double c = it == counts.end() ? 0.0 : static_cast<double>(it->second);
      h -= std::log2((c + 1.0) / den);
    }
    values.push_back(h / static_cast<double>(q.size()));
  }
  return mean_of(values);
}

}  // namespace nilcmetrix
