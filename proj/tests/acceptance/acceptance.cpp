#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "../oracles/random_docs.hpp"
#include "../oracles/tree_oracles.hpp"
#include "nilcmetrix/cli.hpp"
#include "nilcmetrix/cohesion.hpp"
#include "nilcmetrix/corpus.hpp"
#include "nilcmetrix/features.hpp"
#include "nilcmetrix/lexsem.hpp"
#include "nilcmetrix/metrics.hpp"
#include "nilcmetrix/stats.hpp"
#include "nilcmetrix/surface.hpp"
#include "nilcmetrix/syntax.hpp"

using namespace nilcmetrix;

namespace {

const std::string kFixtures = NILCMETRIX_FIXTURES;
const std::string kToy = std::string(NILCMETRIX_TOY) + "/toy.manifest";

/// Collects failure messages for one criterion.
struct Check {
  std::vector<std::string> failures;
  void operator()(bool ok, const std::string& what) {
    if (!ok && failures.size() < 5) failures.push_back(what);
    if (!ok) ++failed;
  }
  std::size_t failed = 0;
};

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

bool near(const MetricValue& a, const MetricValue& b, double tol) {
  if (a.has_value() != b.has_value()) return false;
  return !a || near(*a, *b, tol);
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void readability(Check& check) {
  auto start = std::chrono::steady_clock::now();
  check(near(flesch_score(10, 2), 69.485, 1e-9), "flesch " + num(flesch_score(10, 2)));
  check(near(dale_chall_score(10, 10), 5.7115, 1e-9), "dale_chall " + num(dale_chall_score(10, 10)));
  check(near(gunning_fog_score(10, 20), 12.0, 1e-9), "gunning_fog " + num(gunning_fog_score(10, 20)));
  check(near(brunet_score(100, 50), 11.19, 0.01), "brunet " + num(brunet_score(100, 50)));
  auto h = honore_score(100, 50, 25);
  check(h && near(*h, 921.034, 0.001), "honore " + (h ? num(*h) : std::string("NA")));
  check(seconds_since(start) < 1.0, "runtime");
}

void partitions(Check& check) {
  auto bundle = load_bundle(kToy);
  oracle::DocumentGenerator gen(2024);
  for (int i = 0; i < 1000; ++i) {
    auto doc = gen.next();
    auto c = sentence_length_classes(doc);
    double sum = c.short_ratio + c.medium_ratio + c.long_ratio + c.very_long_ratio;
    check(near(sum, 1.0, 1e-9), doc.id + " length classes sum " + num(sum));
    auto p = psycholinguistic_profile(doc, bundle);
    for (const auto* s : {&p.aoa, &p.concreteness, &p.familiarity, &p.imageability}) {
      if (!s->mean) continue;
      double bands = 0;
      for (const auto& b : s->bands) bands += b.value_or(0);
      check(near(bands, 1.0, 1e-9), doc.id + " norm bands sum " + num(bands));
    }
    auto t = temporal_profile(doc, bundle);
    if (t.present) {
      double shares = *t.present + *t.preterite + *t.imperfect + *t.future + *t.conditional +
                      *t.subjunctive + *t.imperative;
      check(near(shares, 1.0, 1e-9), doc.id + " tense shares " + num(shares));
    }
  }
  for (const auto& doc : load_corpus({kFixtures + "/corpus"}, InputFormat::Conllu)) {
    auto t = temporal_profile(doc, bundle);
    check(t.present.has_value(), doc.id + " has finite verbs");
    if (!t.present) continue;
    double shares = *t.present + *t.preterite + *t.imperfect + *t.future + *t.conditional +
                    *t.subjunctive + *t.imperative;
    check(near(shares, 1.0, 1e-9), doc.id + " tense shares " + num(shares));
  }
}

void welch(Check& check) {
  std::vector<double> same{1, 2, 3, 4};
  auto r = welch_t(same, same);
  check(r.t == 0 && near(r.p, 1.0, 1e-12), "identical samples t " + num(r.t) + " p " + num(r.p));
  std::vector<double> a{1, 2, 3, 4, 5}, b{2, 3, 4, 5, 6};
  auto w = welch_t(a, b);
  check(near(w.t, -1.0, 1e-12), "fixed pair t " + num(w.t));
  check(near(w.df, 8.0, 1e-9), "fixed pair df " + num(w.df));
  check(near(w.p, 0.3466, 0.0005), "fixed pair p " + num(w.p));
  std::mt19937 rng(7);
  std::normal_distribution<double> dist(0, 1);
  std::uniform_int_distribution<int> size(2, 30);
  for (int i = 0; i < 1000; ++i) {
    std::vector<double> x(static_cast<std::size_t>(size(rng))), y(static_cast<std::size_t>(size(rng)));
    double shift = dist(rng), scale = std::exp(dist(rng));
    for (double& v : x) v = dist(rng);
    for (double& v : y) v = shift + scale * dist(rng);
    auto xy = welch_t(x, y);
    auto yx = welch_t(y, x);
    check(near(xy.t, -yx.t, 1e-12 * (1 + std::abs(xy.t))), "antisymmetric t pair " + std::to_string(i));
    check(near(xy.df, yx.df, 1e-9 * xy.df), "symmetric df pair " + std::to_string(i));
    check(near(xy.p, yx.p, 1e-12), "symmetric p pair " + std::to_string(i));
    check(xy.p >= 0 && xy.p <= 1, "p in [0,1] pair " + std::to_string(i));
  }
}

void trees(Check& check, std::size_t& count) {
  auto start = std::chrono::steady_clock::now();
  const std::vector<std::string> sentence_labels{"S", "IP", "CP"};
  for (std::size_t n = 1; n <= 6; ++n) {
    oracle::enumerate_trees(n, {"S", "X"}, [&](const ConstituencyNode& t) {
      ++count;
      auto y = yngve_scores(t);
      auto expected_y = oracle::yngve_stack(t);
      check(y == expected_y, "yngve " + to_bracketed(t));
      check(near(yngve(t), oracle::mean(expected_y), 1e-12), "yngve mean " + to_bracketed(t));
      auto f = frazier_scores(t);
      auto expected_f = oracle::frazier_climb(t, sentence_labels);
      check(f == expected_f, "frazier " + to_bracketed(t));
      check(near(frazier(t), oracle::mean(expected_f), 1e-12), "frazier mean " + to_bracketed(t));
    });
  }
  check(seconds_since(start) < 30.0, "runtime " + num(seconds_since(start)) + " s");
}

Sentence words_sentence(const std::vector<std::string>& words) {
  Sentence s;
  for (std::size_t i = 0; i < words.size(); ++i) {
    Token t;
    t.index = i + 1;
    t.surface = t.lemma = words[i];
    t.pos = Pos::Noun;
    t.head = i == 0 ? 0 : 1;
    t.deprel = i == 0 ? "root" : "dep";
    s.tokens.push_back(std::move(t));
  }
  return s;
}

Document words_document(const std::vector<std::vector<std::vector<std::string>>>& paragraphs) {
  Document d;
  d.annotation = {true, true, false};
  for (const auto& p : paragraphs) {
    Paragraph para;
    for (const auto& s : p) para.sentences.push_back(words_sentence(s));
    d.paragraphs.push_back(std::move(para));
  }
  return d;
}

void lsa(Check& check) {
  auto bundle = load_bundle(kToy);
  const auto& model = *bundle.embeddings;
  auto dup = words_document({{{"gato", "dorme", "sofá"}, {"gato", "dorme", "sofá"}}});
  auto sim = lsa_similarities(dup, model);
  check(sim.adjacent_mean && near(*sim.adjacent_mean, 1.0, 1e-12), "duplicate adjacent similarity");

  EmbeddingModel plane(2);
  std::vector<double> x{1, 0}, y{1, 1};
  plane.add("x", x);
  plane.add("y", y);
  auto span = lsa_span(words_document({{{"x"}, {"y"}}}), plane);
  check(span.mean && near(*span.mean, 0.70711, 1e-5),
        "2-D span " + (span.mean ? num(*span.mean) : std::string("NA")));

  auto scaled = model.scaled(7.3);
  oracle::DocumentGenerator gen(99);
  static const char* kVocab[] = {"gato", "gatos", "sofá", "dorme", "livro", "menina", "feliz",
                                 "festa", "jornal", "chuva", "barulho", "ração", "casa"};
  std::mt19937 rng(5);
  std::uniform_int_distribution<std::size_t> pick(0, std::size(kVocab) - 1), len(1, 6), count(1, 4);
  for (int i = 0; i < 300; ++i) {
    std::vector<std::vector<std::vector<std::string>>> paras(count(rng));
    for (auto& p : paras) {
      p.resize(count(rng));
      for (auto& s : p) {
        s.resize(len(rng));
        for (auto& w : s) w = kVocab[pick(rng)];
      }
    }
    auto doc = words_document(paras);
    auto a = lsa_similarities(doc, model), b = lsa_similarities(doc, scaled);
    for (auto [u, v] : {std::pair{a.adjacent_mean, b.adjacent_mean}, {a.adjacent_sd, b.adjacent_sd},
                        {a.paragraph_mean, b.paragraph_mean}, {a.paragraph_sd, b.paragraph_sd},
                        {a.all_mean, b.all_mean}, {a.all_sd, b.all_sd}}) {
      check(near(u, v, 1e-9), "similarities scale-invariant doc " + std::to_string(i));
    }
    auto g1 = lsa_givenness(doc, model), g2 = lsa_givenness(doc, scaled);
    check(near(g1.mean, g2.mean, 1e-9) && near(g1.sd, g2.sd, 1e-9), "givenness scale-invariant");
    auto s1 = lsa_span(doc, model), s2 = lsa_span(doc, scaled);
    check(near(s1.mean, s2.mean, 1e-9) && near(s1.sd, s2.sd, 1e-9), "span scale-invariant");
    if (s1.mean) check(*s1.mean >= 0 && *s1.mean <= 1, "span in [0,1]");
  }
  oracle::DocumentGenerator random(11);
  for (int i = 0; i < 200; ++i) {
    auto doc = random.next();
    auto s = lsa_span(doc, model);
    if (s.mean) check(*s.mean >= 0 && *s.mean <= 1, doc.id + " span in [0,1]");
    auto c = compute_all(doc, bundle);
    auto c7 = [&] {
      ResourceBundle b7 = bundle;
      b7.embeddings = scaled;
      return compute_all(doc, b7);
    }();
    for (std::size_t k = 0; k < c.values.size(); ++k) {
      if (find_metric(c.values[k].first)->category != Category::LsaSemanticCohesion) continue;
      check(near(c.values[k].second, c7.values[k].second, 1e-9),
            doc.id + " " + c.values[k].first + " scale-invariant");
    }
  }
}

/// Synthetic annotated corpus with controllable sentence length, connective
/// density and first-person share.
struct Planting {
  std::size_t min_len = 8, max_len = 14;
  double connective = 0.4;
  double first_person = 0.5;
};

std::vector<Document> synthetic_corpus(const std::string& prefix, const Planting& plan,
                                       unsigned seed, std::size_t docs) {
  static const std::pair<const char*, Pos> kContent[] = {
      {"casa", Pos::Noun},    {"livro", Pos::Noun},  {"menina", Pos::Noun},
      {"bonito", Pos::Adj},   {"grande", Pos::Adj},  {"cidade", Pos::Noun},
      {"depressa", Pos::Adv}, {"jornal", Pos::Noun}, {"feliz", Pos::Adj}};
  static const std::pair<const char*, Pos> kConnectives[] = {
      {"mas", Pos::Cconj}, {"porque", Pos::Sconj}, {"e", Pos::Cconj}};
  static const std::pair<const char*, Pos> kPlain[] = {
      {"de", Pos::Adp}, {"para", Pos::Adp}, {"a", Pos::Det}};
  std::mt19937 rng(seed);
  auto uniform = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  auto coin = [&](double p) { return std::bernoulli_distribution(p)(rng); };
  std::vector<Document> out;
  for (std::size_t d = 0; d < docs; ++d) {
    Document doc;
    doc.id = prefix + std::to_string(d);
    doc.annotation = {true, true, true};
    Paragraph para;
    std::size_t sentences = uniform(3, 6);
    for (std::size_t s = 0; s < sentences; ++s) {
      Sentence sent;
      std::size_t n = uniform(plan.min_len, plan.max_len);
      auto push = [&](const std::string& form, Pos pos, std::size_t head, const char* rel) {
        Token t;
        t.index = sent.tokens.size() + 1;
        t.surface = t.lemma = form;
        t.pos = pos;
        t.head = head;
        t.deprel = rel;
        sent.tokens.push_back(std::move(t));
        return &sent.tokens.back();
      };
      bool first = coin(plan.first_person);
      auto* pron = push(first ? "Eu" : "Ele", Pos::Pron, 2, "nsubj");
      pron->lemma = first ? "eu" : "ele";
      pron->morph = {{"PronType", "Prs"}, {"Person", first ? "1" : "3"}, {"Number", "Sing"}};
      auto* verb = push("vejo", Pos::Verb, 0, "root");
      verb->lemma = "ver";
      verb->morph = {{"VerbForm", "Fin"}, {"Mood", "Ind"}, {"Tense", "Pres"}};
      for (std::size_t i = 2; i < n; ++i) {
        if (i % 3 == 0) {
          auto [form, pos] = coin(plan.connective) ? kConnectives[uniform(0, 2)] : kPlain[uniform(0, 2)];
          push(form, pos, i + 2, pos == Pos::Adp ? "case" : pos == Pos::Det ? "det" : "cc");
        } else {
          auto [form, pos] = kContent[uniform(0, std::size(kContent) - 1)];
          push(form, pos, 2, pos == Pos::Noun ? "obj" : pos == Pos::Adj ? "amod" : "advmod");
        }
      }
      sent.tokens.back().head = 2;
      push(".", Pos::Punct, 2, "punct");
      para.sentences.push_back(std::move(sent));
    }
    doc.paragraphs.push_back(std::move(para));
    validate(doc);
    out.push_back(std::move(doc));
  }
  return out;
}

ComparisonReport compare_planted(const Planting& a, const Planting& b, const ResourceBundle& bundle,
                                 unsigned seed) {
  auto fa = export_features(synthetic_corpus("a", a, seed, 40), bundle, nullptr, 4);
  auto fb = export_features(synthetic_corpus("b", b, seed + 1, 40), bundle, nullptr, 4);
  return compare_corpora(fa, fb, 0.001);
}

void directional(Check& check) {
  auto start = std::chrono::steady_clock::now();
  auto bundle = load_bundle(kToy);
  const std::set<std::string> person{"first_person_pronouns", "third_person_pronouns",
                                     "first_person_personal_pronouns"};

  auto expect = [&](const ComparisonReport& r, const std::string& metric, const std::string& label) {
    const auto* row = r.find(metric);
    check(row && row->significant && row->direction == "A>B", label + ": " + metric + " A>B");
  };
  auto forbid = [&](const ComparisonReport& r, const std::function<bool(const ComparisonRow&)>& bad,
                    const std::string& label) {
    for (const auto& row : r.rows) {
      if (row.significant && bad(row)) check(false, label + ": unexpected " + row.metric);
    }
  };
  auto descriptive = [](const ComparisonRow& row) {
    return row.category == to_string(Category::DescriptiveIndex);
  };
  auto connectives = [](const ComparisonRow& row) {
    return row.category == to_string(Category::Connectives);
  };
  auto pronoun_person = [&](const ComparisonRow& row) { return person.count(row.metric) > 0; };

  Planting base, longer;
  longer.min_len = 18;
  longer.max_len = 26;
  longer.connective = base.connective;
  auto length = compare_planted(longer, base, bundle, 100);
  expect(length, "words_per_sentence", "length");
  expect(length, "sentence_length_max", "length");
  forbid(length, [&](const ComparisonRow& row) { return descriptive(row) && row.direction != "A>B"; },
         "length");
  forbid(length, connectives, "length");
  forbid(length, pronoun_person, "length");

  Planting dense;
  dense.connective = 0.9;
  Planting sparse;
  sparse.connective = 0.1;
  auto conn = compare_planted(dense, sparse, bundle, 200);
  expect(conn, "connective_ratio", "connectives");
  forbid(conn, descriptive, "connectives");
  forbid(conn, pronoun_person, "connectives");

  Planting first, third;
  first.first_person = 0.9;
  third.first_person = 0.1;
  auto pron = compare_planted(first, third, bundle, 300);
  expect(pron, "first_person_pronouns", "person");
  expect(pron, "first_person_personal_pronouns", "person");
  const auto* third_row = pron.find("third_person_pronouns");
  check(third_row && third_row->significant && third_row->direction == "B>A",
        "person: third_person_pronouns B>A");
  forbid(pron, descriptive, "person");
  forbid(pron, connectives, "person");

  check(seconds_since(start) < 10.0, "runtime " + num(seconds_since(start)) + " s");
}

std::pair<int, std::string> cli(std::vector<std::string> args) {
  args.insert(args.begin(), "nilcmetrix");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str()};
}

void determinism(Check& check) {
  const std::string corpus = kFixtures + "/corpus";
  auto first = cli({"compute", "--input", corpus, "--resources", kToy, "--jobs", "1"});
  check(first.first == 0, "compute exit code");
  for (const char* jobs : {"1", "4"}) {
    for (int i = 0; i < 3; ++i) {
      auto again = cli({"compute", "--input", corpus, "--resources", kToy, "--jobs", jobs});
      check(again == first, std::string("jobs ") + jobs + " run " + std::to_string(i));
    }
  }
}

void coverage(Check& check) {
  auto list = cli({"list"});
  check(list.first == 0, "list exit code");
  std::set<std::string> ids;
  std::set<std::string> categories;
  std::istringstream rows(list.second);
  std::string line;
  std::getline(rows, line);
  while (std::getline(rows, line)) {
    auto tab = line.find('\t');
    auto tab2 = line.find('\t', tab + 1);
    ids.insert(line.substr(0, tab));
    categories.insert(line.substr(tab + 1, tab2 - tab - 1));
  }
  check(ids.size() >= 130, "metric count " + std::to_string(ids.size()));
  check(categories.size() == 14, "category count " + std::to_string(categories.size()));
  for (auto c : all_categories()) check(categories.count(std::string(to_string(c))) > 0, std::string(to_string(c)));
  static const char* kNamed[] = {
      // descriptive, easability, cohesion
      "words", "sentences", "paragraphs", "sentences_per_paragraph", "syllables_per_content_word",
      "words_per_sentence", "sentence_length_max", "sentence_length_min",
      "sentence_length_standard_deviation", "subtitles", "short_sentence_ratio",
      "medium_sentence_ratio", "long_sentence_ratio", "very_long_sentence_ratio",
      "easy_conjunctions_ratio", "hard_conjunctions_ratio", "first_person_personal_pronouns",
      "simple_word_ratio", "adj_arg_ovl", "arg_ovl", "adj_stem_ovl", "stem_ovl", "adj_cw_ovl",
      "cw_ovl", "adjacent_refs", "anaphoric_refs", "coreference_pronoun_ratio", "lsa_adj_mean",
      "lsa_adj_std", "lsa_paragraph_mean", "lsa_all_mean", "lsa_givenness_mean", "lsa_span_mean",
      "cross_entropy",
      // psycholinguistic, diversity, connectives, temporal
      "idade_aquisicao_mean", "concretude_mean", "familiaridade_mean", "imageabilidade_mean",
      "ttr", "content_word_ttr", "function_word_ttr", "noun_ttr", "verb_ttr", "adjective_ttr",
      "pronoun_ttr", "indefinite_pronoun_ttr", "relative_pronoun_ttr", "preposition_ttr",
      "punctuation_ttr", "content_density", "content_word_max", "connective_ratio",
      "add_pos_conn_ratio", "add_neg_conn_ratio", "cau_pos_conn_ratio", "cau_neg_conn_ratio",
      "log_pos_conn_ratio", "log_neg_conn_ratio", "and_ratio", "or_ratio", "if_ratio",
      "negation_ratio", "ambiguous_connectives_ratio", "tenses_pres", "tenses_pret",
      "tenses_imperf", "tenses_fut", "tenses_cond", "subjunctive_ratio", "imperative_ratio",
      "aux_plus_participle_ratio", "verb_tense_moods_count", "temporal_pos_conn_ratio",
      "temporal_neg_conn_ratio",
      // syntax and patterns
      "words_before_main_verb", "adverbs_before_main_verb", "clauses_per_sentence",
      "coordinate_conjunctions_per_clauses", "frazier", "yngve", "dep_distance", "non_svo_ratio",
      "subordinate_clauses", "relative_clauses", "passive_ratio", "sentences_with_one_clause",
      "gerund_clauses", "mean_noun_phrase", "max_noun_phrase", "min_noun_phrase",
      // morphosyntax, semantics, frequency, readability
      "content_words", "function_words", "prepositions_per_sentence", "prepositions_per_clause",
      "first_person_pronouns", "ratio_function_to_content_words", "verbs_max",
      "adverbs_standard_deviation", "pronouns_min", "non_inflected_verbs", "positive_words",
      "negative_words", "content_words_ambiguity", "hypernyms_verbs", "abstract_nouns_ratio",
      "proper_noun_ratio", "cw_freq_brasileiro", "freq_brwac", "min_cw_freq_brwac", "cw_freq",
      "flesch", "dalechall_adapted", "gunning_fog", "brunet", "honore"};
  for (const char* id : kNamed) check(ids.count(id) > 0, std::string("missing ") + id);
  const MetricInfo* flesch = find_metric("flesch");
  check(flesch && flesch->category == Category::ReadabilityFormulas, "flesch category");
  for (const char* id : {"yngve", "frazier"}) {
    const MetricInfo* info = find_metric(id);
    check(info && info->category == Category::SyntacticComplexity, std::string(id) + " category");
  }
}

}  // namespace

int main() {
  int failed = 0;
  auto report = [&](const std::string& name, const std::function<std::string(Check&)>& body) {
    Check check;
    std::string detail;
    try {
      detail = body(check);
    } catch (const std::exception& e) {
      check(false, std::string("exception: ") + e.what());
    }
    bool ok = check.failed == 0;
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << "  " << name;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << '\n';
    for (const auto& f : check.failures) std::cout << "      " << f << '\n';
    if (check.failed > check.failures.size()) {
      std::cout << "      ... " << check.failed - check.failures.size() << " more\n";
    }
  };
  auto timed = [](const std::function<void(Check&)>& f) {
    return [f](Check& c) {
      auto start = std::chrono::steady_clock::now();
      f(c);
      return num(seconds_since(start)) + " s";
    };
  };

  report("readability formula exactness", timed(readability));
  report("partition invariants", timed(partitions));
  report("welch oracle and antisymmetry", timed(welch));
  report("tree complexity oracles up to 6 leaves", [](Check& c) {
    std::size_t count = 0;
    auto start = std::chrono::steady_clock::now();
    trees(c, count);
    return std::to_string(count) + " trees, " + num(seconds_since(start)) + " s";
  });
  report("lsa invariants", timed(lsa));
  report("directional corpus comparison", timed(directional));
  report("determinism across runs and jobs", timed(determinism));
  report("metric coverage", timed(coverage));
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed")
            << '\n';
  return failed == 0 ? 0 : 1;
}
