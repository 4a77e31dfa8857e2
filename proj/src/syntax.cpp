#include "nilcmetrix/syntax.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <string>

#include "nilcmetrix/lexsem.hpp"

namespace nilcmetrix {

namespace {

constexpr std::string_view kSentenceLabels[] = {"S", "IP", "CP"};

std::string_view base_label(std::string_view label) {
  auto cut = label.find_first_of("-=");
  return cut == std::string_view::npos ? label : label.substr(0, cut);
}

bool is_sentence_label(std::string_view label, std::span<const std::string_view> labels) {
  auto base = base_label(label);
  return std::find(labels.begin(), labels.end(), base) != labels.end();
}

void yngve_walk(const ConstituencyNode& node, double load, std::vector<double>& out) {
  if (node.is_leaf()) {
    out.push_back(load);
    return;
  }
  const std::size_t n = node.children.size();
  for (std::size_t i = 0; i < n; ++i) {
    yngve_walk(node.children[i], load + static_cast<double>(n - 1 - i), out);
  }
}

struct PathStep {
  const ConstituencyNode* node;
  std::size_t child;  // index of the next path node among node->children
};

void frazier_walk(const ConstituencyNode& node, std::vector<PathStep>& path,
                  std::span<const std::string_view> labels, std::vector<double>& out) {
  if (!node.is_leaf()) {
    for (std::size_t i = 0; i < node.children.size(); ++i) {
      path.push_back({&node, i});
      frazier_walk(node.children[i], path, labels, out);
      path.pop_back();
    }
    return;
  }
  // Node at depth d (leaf at depth path.size()) is child path[d-1].child of path[d-1].node.
  std::size_t depth = path.size();
  std::size_t stop = depth;
  while (stop > 0 && path[stop - 1].child == 0) --stop;
  if (stop == depth) {
    out.push_back(0);
    return;
  }
  double score = 0;
  for (std::size_t d = stop; d <= depth; ++d) {
    bool sentential = d > 0 && is_sentence_label(path[d - 1].node->label, labels);
    score += sentential ? 1.5 : 1.0;
  }
  out.push_back(score);
}

double mean(const std::vector<double>& values) {
  if (values.empty()) return 0;
  double s = 0;
  for (double v : values) s += v;
  return s / static_cast<double>(values.size());
}

bool is_finite(const Token& tok) {
  return (tok.pos == Pos::Verb || tok.pos == Pos::Aux) && tok.feature("VerbForm") == "Fin";
}

std::vector<std::vector<std::size_t>> children_of(const Sentence& s) {
  std::vector<std::vector<std::size_t>> kids(s.tokens.size() + 1);
  for (const auto& tok : s.tokens) kids[tok.head].push_back(tok.index);
  return kids;
}

/// Smallest non-punctuation token index in the subtree of `head`.
std::size_t subtree_start(const Sentence& s, std::size_t head) {
  std::size_t best = head;
  for (const auto& tok : s.tokens) {
    if (tok.pos == Pos::Punct || tok.index >= best) continue;
    std::size_t cur = tok.index;
    std::size_t guard = 0;
    while (cur != 0 && cur != head && guard++ <= s.tokens.size()) cur = s.at(cur).head;
    if (cur == head) best = tok.index;
  }
  return best;
}

/// Clause head of a finite verb: auxiliaries and copulas stand for their head.
std::size_t clause_head(const Token& verb) {
  auto rel = verb.deprel_base();
  if (verb.head != 0 && (rel == "aux" || rel == "cop")) return verb.head;
  return verb.index;
}

bool is_clausal_relation(std::string_view rel) {
  return rel == "root" || rel == "ccomp" || rel == "xcomp" || rel == "advcl" || rel == "acl" ||
         rel == "csubj" || rel == "conj" || rel == "parataxis";
}

}  // namespace

std::span<const std::string_view> default_sentence_labels() { return kSentenceLabels; }

std::vector<double> yngve_scores(const ConstituencyNode& tree) {
  std::vector<double> out;
  yngve_walk(tree, 0, out);
  return out;
}

double yngve(const ConstituencyNode& tree) { return mean(yngve_scores(tree)); }

std::vector<double> frazier_scores(const ConstituencyNode& tree,
                                   std::span<const std::string_view> sentence_labels) {
  std::vector<double> out;
  std::vector<PathStep> path;
  frazier_walk(tree, path, sentence_labels, out);
  return out;
}

double frazier(const ConstituencyNode& tree, std::span<const std::string_view> sentence_labels) {
  return mean(frazier_scores(tree, sentence_labels));
}

MetricValue dependency_distance(const Sentence& sentence) {
  std::vector<double> arcs;
  for (const auto& tok : sentence.tokens) {
    if (tok.head == 0 || tok.pos == Pos::Punct) continue;
    arcs.push_back(std::abs(static_cast<double>(tok.index) - static_cast<double>(tok.head)));
  }
  return mean_of(arcs);
}

std::optional<std::size_t> main_verb(const Sentence& sentence) {
  const Token& root = sentence.root();
  if (root.pos == Pos::Verb || root.pos == Pos::Aux) return root.index;
  for (const auto& tok : sentence.tokens) {
    if (tok.head == root.index && is_finite(tok)) return tok.index;
  }
  return std::nullopt;
}

MetricValue words_before_main_verb(const Sentence& sentence) {
  auto mv = main_verb(sentence);
  if (!mv) return std::nullopt;
  std::size_t n = 0;
  for (const auto& tok : sentence.tokens) n += tok.index < *mv && is_word(tok);
  return static_cast<double>(n);
}

MetricValue adverbs_before_main_verb(const Sentence& sentence) {
  auto mv = main_verb(sentence);
  if (!mv) return std::nullopt;
  std::size_t n = 0;
  for (const auto& tok : sentence.tokens) n += tok.index < *mv && tok.pos == Pos::Adv;
  return static_cast<double>(n);
}

ClauseAnalysis clause_analysis(const Sentence& s) {
  ClauseAnalysis out;
  out.clause_count = clause_count(s);
  const auto kids = children_of(s);

  std::vector<std::size_t> heads;
  for (const auto& tok : s.tokens) {
    if (is_finite(tok)) heads.push_back(clause_head(tok));
  }
  std::sort(heads.begin(), heads.end());
  heads.erase(std::unique(heads.begin(), heads.end()), heads.end());

  for (const auto& tok : s.tokens) {
    auto rel = tok.deprel_base();
    if (rel == "ccomp" || rel == "xcomp" || rel == "advcl" || rel == "acl" || rel == "csubj") {
      ++out.subordinate;
    }
    if (rel == "advcl") ++out.adverbial;
    if (tok.deprel == "acl:relcl") {
      ++out.relative;
    } else if (rel == "acl") {
      for (auto k : kids[tok.index]) {
        const Token& c = s.at(k);
        if (c.pos == Pos::Pron && c.feature("PronType") == "Rel") {
          ++out.relative;
          break;
        }
      }
    }
  }

  std::vector<std::size_t> passive_heads;
  for (const auto& tok : s.tokens) {
    if (tok.head != 0 && (tok.deprel == "aux:pass" || tok.deprel == "nsubj:pass" ||
                          tok.deprel == "csubj:pass")) {
      passive_heads.push_back(tok.head);
    }
  }
  std::sort(passive_heads.begin(), passive_heads.end());
  out.passive = static_cast<std::size_t>(
      std::unique(passive_heads.begin(), passive_heads.end()) - passive_heads.begin());

  // Word order over every predicate that governs a core argument.
  for (std::size_t h = 1; h <= s.tokens.size(); ++h) {
    std::size_t verb_pos = h;
    bool has_core = false, object_first = false, subject_after = false;
    for (auto k : kids[h]) {
      const Token& c = s.at(k);
      auto rel = c.deprel_base();
      if (rel == "cop") verb_pos = k;
    }
    for (auto k : kids[h]) {
      auto rel = s.at(k).deprel_base();
      if (rel == "nsubj") {
        has_core = true;
        if (k > verb_pos) subject_after = true;
      } else if (rel == "obj") {
        has_core = true;
        if (k < verb_pos) object_first = true;
      }
    }
    if (!has_core) continue;
    if (object_first || subject_after) ++out.non_svo;
    if (subject_after) ++out.postponed_subject;
  }

  for (auto h : heads) {
    std::size_t start = subtree_start(s, h);
    if (s.at(start).pos == Pos::Cconj) ++out.coordinate_starts;
  }

  for (const auto& tok : s.tokens) {
    if (tok.pos != Pos::Verb || !is_clausal_relation(tok.deprel_base())) continue;
    bool finite_aux = false;
    for (auto k : kids[tok.index]) {
      auto rel = s.at(k).deprel_base();
      if ((rel == "aux" || rel == "cop") && is_finite(s.at(k))) finite_aux = true;
    }
    if (finite_aux) continue;
    auto form = tok.feature("VerbForm");
    if (form == "Inf") ++out.infinitive_clauses;
    if (form == "Ger") ++out.gerund_clauses;
    if (form == "Part") ++out.participle_clauses;
  }

  for (auto* field : {&out.subordinate, &out.relative, &out.adverbial, &out.coordinate_starts,
                      &out.passive, &out.non_svo, &out.postponed_subject,
                      &out.infinitive_clauses, &out.gerund_clauses, &out.participle_clauses}) {
    *field = std::min(*field, out.clause_count);
  }
  return out;
}

std::vector<std::size_t> noun_phrases(const Sentence& s) {
  const auto kids = children_of(s);
  std::vector<std::size_t> sizes;
  const std::size_t n = s.tokens.size();
  for (const auto& head : s.tokens) {
    if (head.pos != Pos::Noun && head.pos != Pos::Propn && head.pos != Pos::Pron) continue;
    std::vector<bool> in(n + 1, false);
    std::vector<std::size_t> stack{head.index};
    in[head.index] = true;
    while (!stack.empty()) {
      auto cur = stack.back();
      stack.pop_back();
      for (auto k : kids[cur]) {
        auto rel = s.at(k).deprel_base();
        if (rel == "det" || rel == "amod" || rel == "nmod" || rel == "nummod" || rel == "case" ||
            rel == "fixed" || rel == "flat" || rel == "compound") {
          if (!in[k]) {
            in[k] = true;
            stack.push_back(k);
          }
        }
      }
    }
    std::size_t lo = head.index, hi = head.index;
    while (lo > 1 && in[lo - 1]) --lo;
    while (hi < n && in[hi + 1]) ++hi;
    std::size_t words = 0;
    for (std::size_t i = lo; i <= hi; ++i) words += is_word(s.at(i));
    sizes.push_back(std::max<std::size_t>(words, 1));
  }
  return sizes;
}

PatternDensity pattern_density(const Document& doc) {
  PatternDensity out;
  std::size_t clauses = 0, gerunds = 0;
  std::vector<double> nps;
  for (const auto* s : doc.sentences()) {
    auto ca = clause_analysis(*s);
    clauses += ca.clause_count;
    gerunds += ca.gerund_clauses;
    for (auto w : noun_phrases(*s)) nps.push_back(static_cast<double>(w));
  }
  out.gerund_clause_ratio = ratio(static_cast<double>(gerunds), static_cast<double>(clauses));
  out.np_mean_words = mean_of(nps);
  out.np_max_words = max_of(nps);
  out.np_min_words = min_of(nps);
  return out;
}

SyntacticProfile syntactic_profile(const Document& doc) {
  SyntacticProfile out;
  std::vector<double> before, adv_before, per_sentence_clauses, dist, fr, yn;
  ClauseAnalysis total;
  total.clause_count = 0;
  std::size_t cconj = 0;
  std::array<std::size_t, 4> by_clauses{};
  const auto sentences = doc.sentences();
  for (const auto* s : sentences) {
    if (auto v = words_before_main_verb(*s)) before.push_back(*v);
    if (auto v = adverbs_before_main_verb(*s)) adv_before.push_back(*v);
    if (auto v = dependency_distance(*s)) dist.push_back(*v);
    if (s->tree) {
      fr.push_back(frazier(*s->tree));
      yn.push_back(yngve(*s->tree));
    }
    auto ca = clause_analysis(*s);
    per_sentence_clauses.push_back(static_cast<double>(ca.clause_count));
    by_clauses[std::min<std::size_t>(ca.clause_count, 4) - 1] += 1;
    total.clause_count += ca.clause_count;
    total.subordinate += ca.subordinate;
    total.relative += ca.relative;
    total.adverbial += ca.adverbial;
    total.coordinate_starts += ca.coordinate_starts;
    total.passive += ca.passive;
    total.non_svo += ca.non_svo;
    total.postponed_subject += ca.postponed_subject;
    total.infinitive_clauses += ca.infinitive_clauses;
    total.participle_clauses += ca.participle_clauses;
    for (const auto& tok : s->tokens) cconj += tok.pos == Pos::Cconj;
  }
  const double c = static_cast<double>(total.clause_count);
  auto per_clause = [&](std::size_t n) { return ratio(static_cast<double>(n), c); };
  const double ns = static_cast<double>(sentences.size());
  out.words_before_main_verb = mean_of(before);
  out.adverbs_before_main_verb = mean_of(adv_before);
  out.clauses_per_sentence = mean_of(per_sentence_clauses);
  out.coordinate_conjunctions_per_clause = per_clause(cconj);
  out.frazier = mean_of(fr);
  out.yngve = mean_of(yn);
  out.dependency_distance = mean_of(dist);
  out.non_svo_ratio = per_clause(total.non_svo);
  out.subordinate_ratio = per_clause(total.subordinate);
  out.relative_ratio = per_clause(total.relative);
  out.adverbial_ratio = per_clause(total.adverbial);
  out.passive_ratio = per_clause(total.passive);
  out.postponed_subject_ratio = per_clause(total.postponed_subject);
  out.infinitive_ratio = per_clause(total.infinitive_clauses);
  out.participle_ratio = per_clause(total.participle_clauses);
  out.coordinate_start_ratio = per_clause(total.coordinate_starts);
  out.one_clause = ratio(static_cast<double>(by_clauses[0]), ns);
  out.two_clauses = ratio(static_cast<double>(by_clauses[1]), ns);
  out.three_clauses = ratio(static_cast<double>(by_clauses[2]), ns);
  out.four_plus_clauses = ratio(static_cast<double>(by_clauses[3]), ns);
  return out;
}

}  // namespace nilcmetrix
