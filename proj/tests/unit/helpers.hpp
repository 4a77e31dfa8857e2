#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "nilcmetrix/text_model.hpp"

namespace testing {

/// CoNLL-U text from rows whose columns are separated by single spaces.
inline std::string tabify(std::string_view rows) {
  std::string out;
  std::istringstream in{std::string(rows)};
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(' ');
    if (first == std::string::npos) {
      out += "\n";
      continue;
    }
    line = line.substr(first);
    if (line[0] != '#') {
      for (char& c : line) {
        if (c == ' ') c = '\t';
      }
    }
    out += line + "\n";
  }
  return out;
}

inline nilcmetrix::Document conllu(std::string_view rows, std::string id = "doc") {
  return nilcmetrix::parse_conllu(tabify(rows), std::move(id));
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string fixture(const std::string& rel) {
  return std::string(NILCMETRIX_FIXTURES) + "/" + rel;
}

inline std::string toy(const std::string& rel) {
  return std::string(NILCMETRIX_TOY) + "/" + rel;
}

/// Flat sentence of `n` NOUN tokens w<k> chained to the first token.
inline nilcmetrix::Sentence flat_sentence(std::size_t n, const std::string& prefix = "w") {
  nilcmetrix::Sentence s;
  for (std::size_t i = 1; i <= n; ++i) {
    nilcmetrix::Token t;
    t.index = i;
    t.surface = prefix + std::to_string(i);
    t.lemma = t.surface;
    t.pos = nilcmetrix::Pos::Noun;
    t.head = i == 1 ? 0 : 1;
    t.deprel = i == 1 ? "root" : "dep";
    s.tokens.push_back(std::move(t));
  }
  return s;
}

/// Document with one paragraph holding sentences of the given word counts.
inline nilcmetrix::Document doc_with_lengths(const std::vector<std::size_t>& lengths) {
  nilcmetrix::Document d;
  d.id = "synthetic";
  d.annotation = {true, true, false};
  nilcmetrix::Paragraph p;
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    p.sentences.push_back(flat_sentence(lengths[i], "s" + std::to_string(i) + "w"));
  }
  d.paragraphs.push_back(std::move(p));
  return d;
}

/// Sentence from forms, all tagged `pos`, attached to the first token.
inline nilcmetrix::Sentence sentence_of(const std::vector<std::string>& forms,
                                        nilcmetrix::Pos pos = nilcmetrix::Pos::Noun) {
  nilcmetrix::Sentence s;
  for (std::size_t i = 1; i <= forms.size(); ++i) {
    nilcmetrix::Token t;
    t.index = i;
    t.surface = forms[i - 1];
    t.lemma = t.surface;
    t.pos = pos;
    t.head = i == 1 ? 0 : 1;
    t.deprel = i == 1 ? "root" : "dep";
    s.tokens.push_back(std::move(t));
  }
  return s;
}

/// Single-paragraph document whose sentences hold the given forms.
inline nilcmetrix::Document doc_of(const std::vector<std::vector<std::string>>& sentences,
                                   nilcmetrix::Pos pos = nilcmetrix::Pos::Noun) {
  nilcmetrix::Document d;
  d.id = "synthetic";
  d.annotation = {true, true, false};
  nilcmetrix::Paragraph p;
  for (const auto& forms : sentences) p.sentences.push_back(sentence_of(forms, pos));
  d.paragraphs.push_back(std::move(p));
  return d;
}

inline std::vector<std::string> repeat(const std::string& word, std::size_t n) {
  return std::vector<std::string>(n, word);
}

}  // namespace testing
