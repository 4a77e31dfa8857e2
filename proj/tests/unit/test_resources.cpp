#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <string>

#include "helpers.hpp"
#include "nilcmetrix/errors.hpp"
#include "nilcmetrix/resources.hpp"

using namespace nilcmetrix;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("nilcmetrix_res_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  fs::path write(const std::string& name, const std::string& content) const {
    std::ofstream(path / name, std::ios::binary) << content;
    return path / name;
  }
};

Sentence words(std::initializer_list<const char*> forms) {
  Sentence s;
  std::size_t i = 0;
  for (const char* f : forms) {
    Token t;
    t.index = ++i;
    t.surface = f;
    t.lemma = f;
    t.head = i == 1 ? 0 : 1;
    s.tokens.push_back(t);
  }
  return s;
}

}  // namespace

TEST_CASE("partial manifest loads only the listed resource") {
  TempDir dir;
  dir.write("simple.txt", "casa\nGato\n");
  auto manifest = dir.write("m.manifest", "simple_words=simple.txt\n");
  auto bundle = load_bundle(manifest);
  REQUIRE(bundle.simple_words.has_value());
  CHECK(bundle.simple_words->contains("gato"));
  CHECK(bundle.simple_words->contains("GATO"));
  CHECK_FALSE(bundle.concrete_words.has_value());
  CHECK_FALSE(bundle.norms.has_value());
  CHECK_FALSE(bundle.embeddings.has_value());
}

TEST_CASE("norm score out of range names the word and the file") {
  TempDir dir;
  auto path = dir.write("norms.tsv", "casa\t2\t3\t4\t5\nbola\t9.0\t3\t4\t5\n");
  try {
    load_norms(path);
    FAIL("expected a resource error");
  } catch (const ResourceError& e) {
    std::string what = e.what();
    CHECK(what.find("bola") != std::string::npos);
    CHECK(what.find("norms.tsv") != std::string::npos);
  }
}

TEST_CASE("duplicates and malformed rows are rejected") {
  TempDir dir;
  CHECK_THROWS_AS(load_wordset(dir.write("w.txt", "casa\nCasa\n"), "w"), ResourceError);
  CHECK_THROWS_AS(load_wordset(dir.write("e.txt", "# nothing\n"), "e"), ResourceError);
  CHECK_THROWS_AS(load_connectives(dir.write("c.tsv", "e\tadditive\tpositive\ne\tadditive\tnegative\n")),
                  ResourceError);
  CHECK_THROWS_AS(load_connectives(dir.write("c2.tsv", "e\tfoo\tpositive\n")), ResourceError);
  CHECK_THROWS_AS(load_norms(dir.write("n.tsv", "casa\t2\t3\t4\n")), ResourceError);
  CHECK_THROWS_AS(load_norms(dir.write("n2.tsv", "casa\t2\t3\t4\t5\ncasa\t2\t3\t4\t5\n")),
                  ResourceError);
  CHECK_THROWS_AS(load_frequencies(dir.write("f.tsv", "casa\t0\n"), "a"), ResourceError);
  CHECK_THROWS_AS(load_frequencies(dir.write("f2.tsv", "casa\t-3\n"), "a"), ResourceError);
  CHECK_THROWS_AS(load_embeddings(dir.write("v.txt", "1 1\na 0.5\n")), ResourceError);
  CHECK_THROWS_AS(load_embeddings(dir.write("v2.txt", "2 2\na 1 2\n")), ResourceError);
  CHECK_THROWS_AS(load_embeddings(dir.write("v3.txt", "1 2\na 1\n")), ResourceError);
  CHECK_THROWS_AS(load_polarity(dir.write("p.tsv", "bom\tneutral\n")), ResourceError);
  SenseTable table;
  CHECK_THROWS_AS(load_senses(dir.write("s.tsv", "casa\tNOUN\t0\n"), table), ResourceError);
  CHECK_THROWS_AS(load_senses(dir.write("s2.tsv", "casa\tDET\t2\n"), table), ResourceError);
  CHECK_THROWS_AS(load_hypernyms(dir.write("h.tsv", "ir\t-1\n"), table), ResourceError);
}

TEST_CASE("manifest errors") {
  TempDir dir;
  dir.write("simple.txt", "casa\n");
  CHECK_THROWS_AS(load_bundle(dir.write("a.manifest", "bogus=simple.txt\n")), Error);
  CHECK_THROWS_AS(load_bundle(dir.write("b.manifest", "simple_words=missing.txt\n")), Error);
  CHECK_THROWS_AS(
      load_bundle(dir.write("c.manifest", "simple_words=simple.txt\nsimple_words=simple.txt\n")),
      Error);
  CHECK_THROWS_AS(load_bundle(dir.path / "absent.manifest"), Error);
}

TEST_CASE("full toy bundle passes every invariant") {
  auto bundle = load_bundle(testing::toy("toy.manifest"));
  CHECK(bundle.simple_words);
  CHECK(bundle.concrete_words);
  CHECK(bundle.easy_conjunctions);
  CHECK(bundle.hard_conjunctions);
  CHECK(bundle.discourse_markers);
  CHECK(bundle.abstract_nouns);
  REQUIRE(bundle.connectives);
  REQUIRE(bundle.norms);
  REQUIRE(bundle.senses);
  REQUIRE(bundle.polarity);
  REQUIRE(bundle.freq_corpus_a);
  REQUIRE(bundle.freq_corpus_b);
  REQUIRE(bundle.freq_legacy);
  REQUIRE(bundle.embeddings);

  // Counts below are the hand-counted entry lines of each toy file.
  CHECK(bundle.simple_words->entries.size() == 31);
  CHECK(bundle.concrete_words->entries.size() == 7);
  CHECK(bundle.hard_conjunctions->max_words == 2);
  CHECK(bundle.connectives->size() == 15);
  CHECK(bundle.connectives->senses("mas").size() == 2);
  CHECK(bundle.connectives->max_words() == 2);
  CHECK(bundle.norms->entries.size() == 17);
  CHECK(bundle.senses->senses.size() == 14);
  CHECK(bundle.senses->hypernyms.size() == 6);
  CHECK(bundle.senses->has_senses);
  CHECK(bundle.senses->has_hypernyms);
  CHECK(bundle.polarity->entries.size() == 6);
  CHECK(bundle.freq_corpus_a->fpm.size() == 20);
  CHECK(bundle.freq_corpus_a->total_tokens == 1000000);
  CHECK(bundle.freq_corpus_b->total_tokens == 2000000);
  CHECK(bundle.freq_legacy->fpm.size() == 8);
  CHECK(bundle.embeddings->size() == 12);
  CHECK(bundle.embeddings->dimension() == 3);

  for (const auto& [word, s] : bundle.norms->entries) {
    for (double v : {s.aoa, s.concreteness, s.familiarity, s.imageability}) {
      CHECK(v >= 1.0);
      CHECK(v <= 7.0);
    }
  }
  for (const auto& [word, n] : bundle.senses->senses) CHECK(n >= 1);
  for (const auto& [word, n] : bundle.senses->hypernyms) CHECK(n >= 0);
  for (const auto& [word, f] : bundle.freq_corpus_a->fpm) CHECK(f > 0);

  CHECK(bundle.senses->sense_count("gato", Pos::Noun) == 3);
  CHECK_FALSE(bundle.senses->sense_count("gato", Pos::Verb).has_value());
  CHECK(bundle.senses->hypernym_count("chegar") == 0);
  CHECK(bundle.polarity->find("Feliz") == Polarity::Positive);
  CHECK(bundle.norms->find("GATO")->aoa == doctest::Approx(2.0));
}

TEST_CASE("zipf scale") {
  CHECK(zipf(1) == doctest::Approx(3.0));
  CHECK(zipf(1000) == doctest::Approx(6.0));
  CHECK(zipf(31.62) == doctest::Approx(4.5).epsilon(1e-4));
  CHECK_THROWS_AS(zipf(0), Error);
  CHECK_THROWS_AS(zipf(-1), Error);
  double previous = zipf(1e-6);
  for (double f = 1e-5; f < 1e7; f *= 1.7) {
    double z = zipf(f);
    CHECK(z > previous);
    previous = z;
  }
}

TEST_CASE("connective matching") {
  ConnectiveLexicon lex({{"e", ConnectiveKind::Additive, Polarity::Positive},
                         {"por", ConnectiveKind::Causal, Polarity::Positive},
                         {"por isso", ConnectiveKind::Causal, Polarity::Positive},
                         {"além disso", ConnectiveKind::Additive, Polarity::Positive}});
  auto one = match_connectives(words({"e"}), lex);
  REQUIRE(one.size() == 1);
  CHECK(one[0].end - one[0].begin == 1);
  CHECK(one[0].has(ConnectiveKind::Additive, Polarity::Positive));

  auto longest = match_connectives(words({"Por", "isso"}), lex);
  REQUIRE(longest.size() == 1);
  CHECK(longest[0].begin == 0);
  CHECK(longest[0].end == 2);
  CHECK(longest[0].form == "por isso");

  CHECK(match_connectives(words({"e"}), ConnectiveLexicon{}).empty());

  auto many = match_connectives(words({"e", "por", "isso", "por", "e", "além", "disso"}), lex);
  REQUIRE(many.size() == 5);
  for (std::size_t i = 0; i < many.size(); ++i) {
    CHECK(many[i].begin < many[i].end);
    if (i > 0) CHECK(many[i - 1].end <= many[i].begin);
  }
  CHECK(many[3].form == "e");
  CHECK(many[4].form == "além disso");

  CHECK_THROWS_AS(ConnectiveLexicon({{"e", ConnectiveKind::Additive, Polarity::Positive},
                                     {"E", ConnectiveKind::Additive, Polarity::Negative}}),
                  Error);
}

TEST_CASE("lookups are NFC-normalized") {
  TempDir dir;
  // "sofá" written with a combining acute accent.
  auto path = dir.write("w.txt", "sofa\xCC\x81\n");
  auto set = load_wordset(path, "w");
  CHECK(set.contains("sof\xC3\xA1"));
  CHECK(set.contains("SOF\xC3\x81"));
}

TEST_CASE("embedding model") {
  EmbeddingModel m(2);
  std::vector<double> v{1, 2};
  m.add("casa", v);
  CHECK_THROWS_AS(m.add("casa", v), Error);
  std::vector<double> bad{1, 2, 3};
  CHECK_THROWS_AS(m.add("bola", bad), Error);
  auto s = m.scaled(7.3);
  CHECK((*s.find("casa"))[1] == doctest::Approx(14.6));
  CHECK_FALSE(m.find("bola").has_value());
}
