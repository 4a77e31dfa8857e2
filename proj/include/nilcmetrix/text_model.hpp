#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nilcmetrix {

/// Universal coarse part-of-speech tags.
enum class Pos {
  Noun, Propn, Verb, Aux, Adj, Adv, Pron, Det, Adp,
  Cconj, Sconj, Num, Part, Intj, Punct, Sym, X
};

std::optional<Pos> pos_from_tag(std::string_view tag);
std::string_view pos_tag(Pos pos);

struct Token {
  std::size_t index = 0;  // 1-based position in the sentence
  std::string surface;
  std::string lemma;
  Pos pos = Pos::X;
  std::map<std::string, std::string, std::less<>> morph;
  std::size_t head = 0;  // 0 = root
  std::string deprel;

  /// Value of a morphological feature, empty when absent.
  std::string_view feature(std::string_view name) const;
  /// Relation without its subtype: "nsubj:pass" -> "nsubj".
  std::string_view deprel_base() const;
};

/// Nouns, proper nouns, verbs, adjectives and adverbs.
bool is_content(const Token& token);
/// A token that counts as a word: not PUNCT/SYM and containing a letter or digit.
bool is_word(const Token& token);
bool is_function_word(const Token& token);
/// Personal pronoun (PRON with PronType=Prs).
bool is_personal_pronoun(const Token& token);

/// Case-folded NFC surface form.
std::string form_key(const Token& token);
/// Case-folded NFC lemma, falling back to the surface form.
std::string lemma_key(const Token& token);

struct ConstituencyNode {
  std::string label;
  std::vector<ConstituencyNode> children;
  std::optional<std::size_t> leaf_token;  // token index for leaves

  bool is_leaf() const { return children.empty(); }
};

/// Parses a bracketed tree such as `(S (NP (DET o) (NOUN gato)) (VP dorme))`.
/// Bare atoms become leaves numbered 1..k in reading order.
ConstituencyNode parse_bracketed_tree(std::string_view text);
std::size_t leaf_count(const ConstituencyNode& node);
std::string to_bracketed(const ConstituencyNode& node);

/// Which tokens a constituency tree's leaves stand for.
enum class TreeCoverage { AllTokens, WordsOnly };

struct Sentence {
  std::vector<Token> tokens;
  std::optional<ConstituencyNode> tree;
  TreeCoverage tree_coverage = TreeCoverage::AllTokens;

  std::vector<const Token*> words() const;
  /// Token with the given 1-based index.
  const Token& at(std::size_t index) const { return tokens.at(index - 1); }
  const Token& root() const;
};

struct Paragraph {
  std::vector<Sentence> sentences;
  bool is_heading = false;
};

/// Which annotation layers the source actually carried.
struct Annotation {
  bool pos = false;
  bool dependencies = false;
  bool morphology = false;
};

struct Document {
  std::string id;
  std::vector<Paragraph> paragraphs;
  std::map<std::string, std::string> metadata;
  Annotation annotation;

  std::vector<const Sentence*> sentences() const;
  std::size_t sentence_count() const;
};

/// Throws ValidationError when a type invariant is violated.
void validate(const Document& doc);

/// CoNLL-U ingestion. `# newpar` starts a paragraph, `# heading = yes` marks
/// one as a heading and `# constituency = (...)` attaches a bracketed tree.
Document parse_conllu(std::string_view text, std::string default_id = "doc");
Document parse_conllu(std::istream& in, std::string default_id = "doc");

/// Serializes back to CoNLL-U, including the paragraph and tree comments.
std::string write_conllu(const Document& doc);

/// Degraded ingestion of raw text: whitespace/punctuation tokenization,
/// blank-line paragraphs, sentence breaks after . ! ? and the ellipsis.
Document ingest_plaintext(std::string_view text, std::string id = "doc");

/// Portuguese orthographic syllable count. Throws Error on non-alphabetic input.
int syllabify(std::string_view word);

}  // namespace nilcmetrix
