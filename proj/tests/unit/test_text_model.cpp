#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <string>

#include "helpers.hpp"
#include "nilcmetrix/errors.hpp"
#include "nilcmetrix/text_model.hpp"
#include "nilcmetrix/unicode.hpp"

using namespace nilcmetrix;
using testing::conllu;

namespace {

std::size_t blank_separated_blocks(const std::string& text) {
  std::size_t blocks = 0;
  bool in_block = false;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string::npos) end = text.size();
    bool blank = text.find_first_not_of(" \t\r", pos) >= end;
    if (!blank && !in_block) ++blocks;
    in_block = !blank;
    pos = end + 1;
  }
  return blocks;
}

std::size_t vowel_letters(const std::string& word) {
  std::size_t n = 0;
  for (char32_t c : unicode::code_points(unicode::fold(word))) {
    static const std::u32string vowels = U"aeiouáéíóúâêôãõàü";
    if (vowels.find(c) != std::u32string::npos) ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("minimal sentence parses into one paragraph, sentence and token") {
  auto doc = conllu("1 casa casa NOUN _ _ 0 root _ _\n");
  REQUIRE(doc.paragraphs.size() == 1);
  REQUIRE(doc.paragraphs[0].sentences.size() == 1);
  REQUIRE(doc.paragraphs[0].sentences[0].tokens.size() == 1);
  const auto& tok = doc.paragraphs[0].sentences[0].tokens[0];
  CHECK(tok.surface == "casa");
  CHECK(tok.pos == Pos::Noun);
  CHECK(tok.head == 0);
  CHECK(tok.morph.empty());
}

TEST_CASE("row with nine columns is a parse error naming the line") {
  std::string text = "# sent_id = 1\n1\tcasa\tcasa\tNOUN\t_\t_\t0\troot\t_\n";
  try {
    parse_conllu(text);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("sentences without paragraph markup share one paragraph") {
  std::string text = testing::tabify(
      "1 Oi oi INTJ _ _ 0 root _ _\n"
      "\n"
      "1 Tchau tchau INTJ _ _ 0 root _ _\n"
      "2 . . PUNCT _ _ 1 punct _ _\n");
  auto doc = parse_conllu(text);
  CHECK(doc.paragraphs.size() == 1);
  CHECK(doc.sentence_count() == blank_separated_blocks(text));
  CHECK(parse_conllu(write_conllu(doc)).sentence_count() == doc.sentence_count());
}

TEST_CASE("invalid structure is rejected") {
  CHECK_THROWS_AS(parse_conllu(""), Error);
  CHECK_THROWS_AS(parse_conllu("\n\n# only a comment\n"), Error);
  CHECK_THROWS_AS(conllu("1 a a DET _ _ 5 det _ _\n2 b b NOUN _ _ 0 root _ _\n"),
                  ValidationError);
  CHECK_THROWS_AS(conllu("1 a a DET _ _ 1 det _ _\n2 b b NOUN _ _ 0 root _ _\n"),
                  ValidationError);
  CHECK_THROWS_AS(conllu("1 a a DET _ _ 0 root _ _\n2 b b NOUN _ _ 0 root _ _\n"),
                  ValidationError);
  CHECK_THROWS_AS(conllu("1 a a XYZ _ _ 0 root _ _\n"), ParseError);
}

TEST_CASE("multiword ranges and empty nodes are skipped") {
  auto doc = conllu(
      "1 Ele ele PRON _ _ 2 nsubj _ _\n"
      "2 dorme dormir VERB _ _ 0 root _ _\n"
      "3-4 no _ _ _ _ _ _ _ _\n"
      "3 em em ADP _ _ 5 case _ _\n"
      "4 o o DET _ _ 5 det _ _\n"
      "4.1 x x X _ _ _ _ _ _\n"
      "5 sofá sofá NOUN _ _ 2 obl _ _\n");
  const auto& s = doc.paragraphs[0].sentences[0];
  REQUIRE(s.tokens.size() == 5);
  CHECK(s.at(3).surface == "em");
  CHECK(s.at(5).head == 2);
}

TEST_CASE("features, paragraphs, headings and trees are read from the fixture") {
  auto doc = parse_conllu(testing::read_file(testing::fixture("corpus/gatos.conllu")), "x");
  CHECK(doc.id == "gatos");
  REQUIRE(doc.paragraphs.size() == 3);
  CHECK(doc.paragraphs[0].is_heading);
  CHECK_FALSE(doc.paragraphs[1].is_heading);
  CHECK(doc.paragraphs[1].sentences.size() == 2);
  CHECK(doc.paragraphs[2].sentences.size() == 2);
  CHECK(doc.annotation.pos);
  CHECK(doc.annotation.dependencies);
  CHECK(doc.annotation.morphology);
  const auto& first = doc.paragraphs[1].sentences[0];
  REQUIRE(first.tree.has_value());
  CHECK(leaf_count(*first.tree) == first.tokens.size());
  CHECK(first.at(3).feature("Tense") == "Pres");
  CHECK(first.at(3).feature("Aspect").empty());
  CHECK(doc.paragraphs[2].sentences[1].at(2).deprel_base() == "nsubj");
}

TEST_CASE("round trip preserves tokens, heads, relations and layout") {
  for (const auto& entry : std::filesystem::directory_iterator(testing::fixture("corpus"))) {
    auto doc = parse_conllu(testing::read_file(entry.path().string()));
    auto again = parse_conllu(write_conllu(doc));
    CHECK(write_conllu(again) == write_conllu(doc));
    REQUIRE(again.paragraphs.size() == doc.paragraphs.size());
    auto a = doc.sentences();
    auto b = again.sentences();
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      REQUIRE(a[i]->tokens.size() == b[i]->tokens.size());
      for (std::size_t k = 0; k < a[i]->tokens.size(); ++k) {
        const auto& x = a[i]->tokens[k];
        const auto& y = b[i]->tokens[k];
        CHECK(x.surface == y.surface);
        CHECK(x.lemma == y.lemma);
        CHECK(x.pos == y.pos);
        CHECK(x.head == y.head);
        CHECK(x.deprel == y.deprel);
        CHECK(x.morph == y.morph);
      }
      CHECK(a[i]->tree.has_value() == b[i]->tree.has_value());
    }
  }
}

TEST_CASE("every ingested sentence has exactly one root") {
  for (const auto& entry : std::filesystem::directory_iterator(testing::fixture("corpus"))) {
    auto doc = parse_conllu(testing::read_file(entry.path().string()));
    for (const auto* s : doc.sentences()) {
      auto roots = std::count_if(s->tokens.begin(), s->tokens.end(),
                                 [](const Token& t) { return t.head == 0; });
      CHECK(roots == 1);
    }
  }
}

TEST_CASE("plaintext ingestion") {
  auto two = ingest_plaintext("Oi. Tchau.");
  CHECK(two.paragraphs.size() == 1);
  CHECK(two.sentence_count() == 2);
  CHECK_THROWS_AS(ingest_plaintext(""), Error);
  CHECK_THROWS_AS(ingest_plaintext("  \n\n "), Error);

  auto three = ingest_plaintext("Um dois três");
  REQUIRE(three.sentence_count() == 1);
  const auto& s = *three.sentences()[0];
  CHECK(s.tokens.size() == 3);
  for (const auto& t : s.tokens) CHECK(t.pos == Pos::X);
  CHECK_FALSE(three.annotation.pos);

  auto file = ingest_plaintext(testing::read_file(testing::fixture("text/passeio.txt")));
  CHECK(file.paragraphs.size() == 2);
  CHECK(file.sentence_count() == 5);
  CHECK(file.sentences()[1]->tokens.back().surface == ".");

  auto ellipsis = ingest_plaintext("Espera… Vai!");
  CHECK(ellipsis.sentence_count() == 2);
  auto abbreviation = ingest_plaintext("Vale 3.5 reais.");
  CHECK(abbreviation.sentence_count() == 1);
}

TEST_CASE("syllabify examples") {
  CHECK(syllabify("a") == 1);
  CHECK(syllabify("casa") == 2);
  CHECK(syllabify("criança") == 3);
  CHECK(syllabify("CASA") == syllabify("casa"));
  CHECK(syllabify("Criança") == 3);
  CHECK(syllabify("pão") == 1);
  CHECK(syllabify("saúde") == 3);
  CHECK(syllabify("leite") == 2);
  CHECK(syllabify("céu") == 1);
  CHECK_THROWS_AS(syllabify(""), Error);
  CHECK_THROWS_AS(syllabify("abc1"), Error);
  CHECK_THROWS_AS(syllabify("a-b"), Error);
}

TEST_CASE("syllabify is bounded by vowel letters and total over alphabetic words") {
  const char* words[] = {"gato", "dormir", "sofá", "ração", "menina", "trouxe", "feliz",
                         "escrito", "chovia", "quero", "jornal", "amanhã", "difícil",
                         "estudar", "barulho", "tínhamos", "chegado", "dançamos", "festa",
                         "terminou", "divertida", "voltaram", "cantando", "queijo",
                         "pneu", "psicologia", "rainha", "país", "ruim", "aeroporto",
                         "coordenação", "Paraguai", "saguão", "xyz", "mãe", "põe"};
  for (const char* w : words) {
    CAPTURE(w);
    int n = syllabify(w);
    CHECK(n >= 1);
    CHECK(static_cast<std::size_t>(n) <= std::max<std::size_t>(1, vowel_letters(w)));
  }
}

TEST_CASE("bracketed trees") {
  auto tree = parse_bracketed_tree("(S (NP (DET o) (NOUN gato)) (VP dorme))");
  CHECK(tree.label == "S");
  CHECK(leaf_count(tree) == 3);
  CHECK(parse_bracketed_tree(to_bracketed(tree)).children.size() == 2);
  CHECK(to_bracketed(parse_bracketed_tree(to_bracketed(tree))) == to_bracketed(tree));
  CHECK_THROWS_AS(parse_bracketed_tree("(S (NP a)"), Error);
  CHECK_THROWS_AS(parse_bracketed_tree(""), Error);
}
