#include "nilcmetrix/text_model.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <istream>
#include <iterator>
#include <sstream>

#include "nilcmetrix/errors.hpp"
#include "nilcmetrix/unicode.hpp"

namespace nilcmetrix {

namespace {

constexpr std::array<std::pair<Pos, std::string_view>, 17> kPosTags{{
    {Pos::Noun, "NOUN"},   {Pos::Propn, "PROPN"}, {Pos::Verb, "VERB"},
    {Pos::Aux, "AUX"},     {Pos::Adj, "ADJ"},     {Pos::Adv, "ADV"},
    {Pos::Pron, "PRON"},   {Pos::Det, "DET"},     {Pos::Adp, "ADP"},
    {Pos::Cconj, "CCONJ"}, {Pos::Sconj, "SCONJ"}, {Pos::Num, "NUM"},
    {Pos::Part, "PART"},   {Pos::Intj, "INTJ"},   {Pos::Punct, "PUNCT"},
    {Pos::Sym, "SYM"},     {Pos::X, "X"},
}};

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::optional<std::size_t> parse_index(std::string_view s) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

// ---------------------------------------------------------------------------
// Bracketed trees

class TreeReader {
 public:
  explicit TreeReader(std::string_view text) : text_(text) {}

  ConstituencyNode read() {
    skip_space();
    ConstituencyNode node = read_node();
    skip_space();
    if (pos_ != text_.size()) fail("trailing input after tree");
    return node;
  }

 private:
  ConstituencyNode read_node() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of tree");
    if (text_[pos_] != '(') {
      ConstituencyNode leaf;
      leaf.label = read_atom();
      leaf.leaf_token = ++leaves_;
      return leaf;
    }
    ++pos_;
    skip_space();
    ConstituencyNode node;
    if (pos_ < text_.size() && text_[pos_] != '(' && text_[pos_] != ')') {
      node.label = read_atom();
    }
    while (true) {
      skip_space();
      if (pos_ >= text_.size()) fail("unbalanced parentheses");
      if (text_[pos_] == ')') {
        ++pos_;
        break;
      }
      node.children.push_back(read_node());
    }
    if (node.children.empty()) fail("constituent '" + node.label + "' has no children");
    return node;
  }

  std::string read_atom() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != '(' && text_[pos_] != ')' &&
           text_[pos_] != ' ' && text_[pos_] != '\t') {
      ++pos_;
    }
    if (pos_ == start) fail("empty atom");
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error("bracketed tree, offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t leaves_ = 0;
};

void renumber_leaves(ConstituencyNode& node, const std::vector<std::size_t>& targets,
                     std::size_t& next) {
  if (node.is_leaf()) {
    node.leaf_token = targets.at(next++);
    return;
  }
  for (auto& child : node.children) renumber_leaves(child, targets, next);
}

// ---------------------------------------------------------------------------
// CoNLL-U

struct PendingComments {
  bool newpar = false;
  bool heading = false;
  std::optional<std::string> tree;
  std::size_t tree_line = 0;
};

class ConlluReader {
 public:
  explicit ConlluReader(std::string default_id) { doc_.id = std::move(default_id); }

  void line(std::string_view raw) {
    ++line_no_;
    std::string_view text = raw;
    if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
    if (trim(text).empty()) {
      finish_sentence();
      return;
    }
    if (text.front() == '#') {
      comment(text.substr(1));
      return;
    }
    row(text);
  }

  Document finish() {
    finish_sentence();
    if (!paragraph_.sentences.empty()) doc_.paragraphs.push_back(std::move(paragraph_));
    if (doc_.paragraphs.empty()) throw ValidationError("empty input: no sentences");
    doc_.annotation.pos = saw_pos_;
    doc_.annotation.morphology = saw_morph_;
    doc_.annotation.dependencies = all_heads_;
    validate(doc_);
    return std::move(doc_);
  }

 private:
  void comment(std::string_view body) {
    body = trim(body);
    std::string_view key = body;
    std::string_view value;
    if (auto eq = body.find('='); eq != std::string_view::npos) {
      key = trim(body.substr(0, eq));
      value = trim(body.substr(eq + 1));
    }
    if (key == "newpar" || key.rfind("newpar ", 0) == 0) {
      pending_.newpar = true;
    } else if (key == "heading") {
      pending_.heading = (value == "yes" || value == "true" || value == "1");
    } else if (key == "constituency") {
      pending_.tree = std::string(value);
      pending_.tree_line = line_no_;
    } else if (key == "newdoc id" || key == "doc_id") {
      if (!value.empty()) doc_.id = std::string(value);
    } else if (key.rfind("meta::", 0) == 0) {
      doc_.metadata[std::string(key.substr(6))] = std::string(value);
    }
  }

  void row(std::string_view text) {
    auto cols = split(text, '\t');
    if (cols.size() != 10) {
      throw ParseError(line_no_, "expected 10 tab-separated columns, found " +
                                     std::to_string(cols.size()));
    }
    // Multiword token ranges and empty nodes are not part of the basic tree.
    if (cols[0].find('-') != std::string_view::npos ||
        cols[0].find('.') != std::string_view::npos) {
      return;
    }
    auto index = parse_index(cols[0]);
    if (!index || *index != sentence_.tokens.size() + 1) {
      throw ParseError(line_no_, "token id '" + std::string(cols[0]) +
                                     "' out of sequence");
    }
    if (sentence_.tokens.empty()) first_row_line_ = line_no_;

    Token tok;
    tok.index = *index;
    tok.surface = std::string(cols[1]);
    if (cols[2] != "_") tok.lemma = std::string(cols[2]);
    if (cols[3] != "_") {
      auto pos = pos_from_tag(cols[3]);
      if (!pos) throw ParseError(line_no_, "unknown UPOS tag '" + std::string(cols[3]) + "'");
      tok.pos = *pos;
      saw_pos_ = true;
    }
    if (cols[5] != "_") {
      saw_morph_ = true;
      for (auto item : split(cols[5], '|')) {
        auto eq = item.find('=');
        if (eq == std::string_view::npos || eq == 0) {
          throw ParseError(line_no_, "malformed feature '" + std::string(item) + "'");
        }
        tok.morph.emplace(std::string(item.substr(0, eq)), std::string(item.substr(eq + 1)));
      }
    }
    if (cols[6] == "_") {
      head_absent_ = true;
    } else {
      auto head = parse_index(cols[6]);
      if (!head) throw ParseError(line_no_, "malformed head '" + std::string(cols[6]) + "'");
      tok.head = *head;
      head_present_ = true;
    }
    if (cols[7] != "_") tok.deprel = std::string(cols[7]);
    sentence_.tokens.push_back(std::move(tok));
  }

  void finish_sentence() {
    if (sentence_.tokens.empty()) {
      return;
    }
    if (head_absent_ && head_present_) {
      throw ParseError(first_row_line_, "sentence mixes present and absent heads");
    }
    if (head_absent_) {
      // No dependency layer: attach everything to the first token so the
      // single-root invariant holds; the document is flagged as lacking DEP.
      all_heads_ = false;
      for (auto& tok : sentence_.tokens) {
        tok.head = tok.index == 1 ? 0 : 1;
        if (tok.deprel.empty()) tok.deprel = tok.index == 1 ? "root" : "dep";
      }
    }
    if (pending_.tree) attach_tree();

    bool starts_new = pending_.newpar || pending_.heading || paragraph_.is_heading;
    if (starts_new && !paragraph_.sentences.empty()) {
      doc_.paragraphs.push_back(std::move(paragraph_));
      paragraph_ = Paragraph{};
    }
    if (pending_.heading) paragraph_.is_heading = true;
    paragraph_.sentences.push_back(std::move(sentence_));

    sentence_ = Sentence{};
    pending_ = PendingComments{};
    head_absent_ = head_present_ = false;
  }

  void attach_tree() {
    ConstituencyNode tree;
    try {
      tree = parse_bracketed_tree(*pending_.tree);
    } catch (const Error& e) {
      throw ParseError(pending_.tree_line, e.what());
    }
    std::size_t leaves = leaf_count(tree);
    std::vector<std::size_t> targets;
    if (leaves == sentence_.tokens.size()) {
      sentence_.tree_coverage = TreeCoverage::AllTokens;
      for (const auto& tok : sentence_.tokens) targets.push_back(tok.index);
    } else {
      for (const auto& tok : sentence_.tokens) {
        if (is_word(tok)) targets.push_back(tok.index);
      }
      if (leaves != targets.size()) {
        throw ParseError(pending_.tree_line,
                         "tree has " + std::to_string(leaves) + " leaves for " +
                             std::to_string(sentence_.tokens.size()) + " tokens (" +
                             std::to_string(targets.size()) + " words)");
      }
      sentence_.tree_coverage = TreeCoverage::WordsOnly;
    }
    std::size_t next = 0;
    renumber_leaves(tree, targets, next);
    sentence_.tree = std::move(tree);
  }

  Document doc_;
  Paragraph paragraph_;
  Sentence sentence_;
  PendingComments pending_;
  std::size_t line_no_ = 0;
  std::size_t first_row_line_ = 0;
  bool head_absent_ = false;
  bool head_present_ = false;
  bool all_heads_ = true;
  bool saw_pos_ = false;
  bool saw_morph_ = false;
};

void write_tree_leaves(const ConstituencyNode& node, std::string& out) {
  if (node.is_leaf()) {
    out += node.label;
    return;
  }
  out += '(';
  out += node.label;
  for (const auto& child : node.children) {
    out += ' ';
    write_tree_leaves(child, out);
  }
  out += ')';
}

// ---------------------------------------------------------------------------
// Plaintext

bool is_terminal_mark(const std::string& tok) {
  if (tok.empty()) return false;
  for (char32_t c : unicode::code_points(tok)) {
    if (c != U'.' && c != U'!' && c != U'?' && c != U'…') return false;
  }
  return true;
}

// Splits a whitespace-delimited chunk into leading punctuation, the word body
// and trailing punctuation; punctuation between alphanumerics stays inside.
std::vector<std::string> split_chunk(const std::vector<char32_t>& cps) {
  std::vector<std::string> out;
  std::size_t begin = 0;
  std::size_t end = cps.size();
  auto punct_run = [&](std::size_t from, std::size_t to) {
    std::string run;
    for (std::size_t i = from; i < to; ++i) run += unicode::encode(cps[i]);
    return run;
  };
  while (begin < end && !unicode::is_alnum(cps[begin])) ++begin;
  while (end > begin && !unicode::is_alnum(cps[end - 1])) --end;
  if (begin == end) {
    out.push_back(punct_run(0, cps.size()));
    return out;
  }
  for (std::size_t i = 0; i < begin; ++i) out.push_back(unicode::encode(cps[i]));
  out.push_back(punct_run(begin, end));
  if (end < cps.size()) {
    // Keep runs of terminal marks ("...", "?!") together; split the rest.
    std::size_t i = end;
    while (i < cps.size()) {
      std::size_t j = i + 1;
      bool terminal = is_terminal_mark(unicode::encode(cps[i]));
      while (j < cps.size() && terminal && is_terminal_mark(unicode::encode(cps[j]))) ++j;
      out.push_back(punct_run(i, j));
      i = j;
    }
  }
  return out;
}

}  // namespace

std::optional<Pos> pos_from_tag(std::string_view tag) {
  for (const auto& [pos, name] : kPosTags) {
    if (name == tag) return pos;
  }
  return std::nullopt;
}

std::string_view pos_tag(Pos pos) {
  for (const auto& [p, name] : kPosTags) {
    if (p == pos) return name;
  }
  return "X";
}

std::string_view Token::feature(std::string_view name) const {
  auto it = morph.find(name);
  return it == morph.end() ? std::string_view{} : std::string_view(it->second);
}

std::string_view Token::deprel_base() const {
  std::string_view rel = deprel;
  return rel.substr(0, rel.find(':'));
}

bool is_content(const Token& token) {
  switch (token.pos) {
    case Pos::Noun:
    case Pos::Propn:
    case Pos::Verb:
    case Pos::Adj:
    case Pos::Adv:
      return true;
    default:
      return false;
  }
}

bool is_word(const Token& token) {
  if (token.pos == Pos::Punct || token.pos == Pos::Sym) return false;
  for (char32_t c : unicode::code_points(token.surface)) {
    if (unicode::is_alnum(c)) return true;
  }
  return false;
}

bool is_function_word(const Token& token) { return is_word(token) && !is_content(token); }

bool is_personal_pronoun(const Token& token) {
  return token.pos == Pos::Pron && token.feature("PronType") == "Prs";
}

std::string form_key(const Token& token) { return unicode::fold(token.surface); }

std::string lemma_key(const Token& token) {
  return unicode::fold(token.lemma.empty() ? token.surface : token.lemma);
}

ConstituencyNode parse_bracketed_tree(std::string_view text) {
  return TreeReader(trim(text)).read();
}

std::size_t leaf_count(const ConstituencyNode& node) {
  if (node.is_leaf()) return 1;
  std::size_t n = 0;
  for (const auto& child : node.children) n += leaf_count(child);
  return n;
}

std::string to_bracketed(const ConstituencyNode& node) {
  std::string out;
  write_tree_leaves(node, out);
  return out;
}

std::vector<const Token*> Sentence::words() const {
  std::vector<const Token*> out;
  for (const auto& tok : tokens) {
    if (is_word(tok)) out.push_back(&tok);
  }
  return out;
}

const Token& Sentence::root() const {
  for (const auto& tok : tokens) {
    if (tok.head == 0) return tok;
  }
  throw ValidationError("sentence without root");
}

std::vector<const Sentence*> Document::sentences() const {
  std::vector<const Sentence*> out;
  for (const auto& para : paragraphs) {
    for (const auto& s : para.sentences) out.push_back(&s);
  }
  return out;
}

std::size_t Document::sentence_count() const {
  std::size_t n = 0;
  for (const auto& para : paragraphs) n += para.sentences.size();
  return n;
}

void validate(const Document& doc) {
  if (doc.id.empty()) throw ValidationError("document id is empty");
  if (doc.paragraphs.empty()) throw ValidationError(doc.id + ": document has no paragraphs");
  bool body = false;
  std::size_t sentence_no = 0;
  for (const auto& para : doc.paragraphs) {
    if (para.sentences.empty()) throw ValidationError(doc.id + ": empty paragraph");
    body = body || !para.is_heading;
    for (const auto& sentence : para.sentences) {
      ++sentence_no;
      const std::string where = doc.id + ", sentence " + std::to_string(sentence_no);
      const auto& toks = sentence.tokens;
      if (toks.empty()) throw ValidationError(where + ": empty sentence");
      std::size_t roots = 0;
      for (std::size_t i = 0; i < toks.size(); ++i) {
        const Token& tok = toks[i];
        if (tok.index != i + 1) throw ValidationError(where + ": token indices not sequential");
        if (tok.head > toks.size()) {
          throw ValidationError(where + ": head " + std::to_string(tok.head) +
                                " of token " + std::to_string(tok.index) + " out of range");
        }
        if (tok.head == tok.index) {
          throw ValidationError(where + ": token " + std::to_string(tok.index) +
                                " is its own head");
        }
        if (tok.head == 0) ++roots;
      }
      if (roots != 1) {
        throw ValidationError(where + ": expected exactly one root, found " +
                              std::to_string(roots));
      }
    }
  }
  if (!body) throw ValidationError(doc.id + ": document has only heading paragraphs");
}

Document parse_conllu(std::string_view text, std::string default_id) {
  ConlluReader reader(std::move(default_id));
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    reader.line(text.substr(start, nl - start));
    start = nl + 1;
  }
  return reader.finish();
}

Document parse_conllu(std::istream& in, std::string default_id) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_conllu(std::string_view(text), std::move(default_id));
}

std::string write_conllu(const Document& doc) {
  std::ostringstream out;
  out << "# newdoc id = " << doc.id << '\n';
  for (const auto& [key, value] : doc.metadata) out << "# meta::" << key << " = " << value << '\n';
  for (const auto& para : doc.paragraphs) {
    bool first = true;
    for (const auto& sentence : para.sentences) {
      if (first) {
        out << "# newpar\n";
        if (para.is_heading) out << "# heading = yes\n";
        first = false;
      }
      if (sentence.tree) out << "# constituency = " << to_bracketed(*sentence.tree) << '\n';
      for (const auto& tok : sentence.tokens) {
        std::string feats;
        for (const auto& [k, v] : tok.morph) {
          if (!feats.empty()) feats += '|';
          feats += k + "=" + v;
        }
        out << tok.index << '\t' << tok.surface << '\t' << (tok.lemma.empty() ? "_" : tok.lemma)
            << '\t' << pos_tag(tok.pos) << "\t_\t" << (feats.empty() ? "_" : feats) << '\t'
            << tok.head << '\t' << (tok.deprel.empty() ? "_" : tok.deprel) << "\t_\t_\n";
      }
      out << '\n';
    }
  }
  return out.str();
}

Document ingest_plaintext(std::string_view text, std::string id) {
  Document doc;
  doc.id = std::move(id);

  auto lines = split(text, '\n');
  std::vector<std::vector<std::string_view>> blocks(1);
  for (auto line : lines) {
    if (trim(line).empty()) {
      if (!blocks.back().empty()) blocks.emplace_back();
    } else {
      blocks.back().push_back(line);
    }
  }

  for (const auto& block : blocks) {
    if (block.empty()) continue;
    Paragraph para;
    Sentence current;
    auto flush = [&]() {
      if (current.tokens.empty()) return;
      for (auto& tok : current.tokens) {
        tok.head = tok.index == 1 ? 0 : 1;
        tok.deprel = tok.index == 1 ? "root" : "dep";
      }
      para.sentences.push_back(std::move(current));
      current = Sentence{};
    };
    for (auto line : block) {
      auto cps = unicode::code_points(line);
      std::size_t i = 0;
      while (i < cps.size()) {
        while (i < cps.size() && unicode::is_space(cps[i])) ++i;
        std::size_t j = i;
        while (j < cps.size() && !unicode::is_space(cps[j])) ++j;
        if (j > i) {
          std::vector<char32_t> chunk(cps.begin() + static_cast<std::ptrdiff_t>(i),
                                      cps.begin() + static_cast<std::ptrdiff_t>(j));
          for (auto& piece : split_chunk(chunk)) {
            Token tok;
            tok.index = current.tokens.size() + 1;
            tok.surface = piece;
            bool terminal = is_terminal_mark(tok.surface);
            current.tokens.push_back(std::move(tok));
            if (terminal) flush();
          }
        }
        i = j;
      }
    }
    flush();
    if (!para.sentences.empty()) doc.paragraphs.push_back(std::move(para));
  }
  if (doc.paragraphs.empty()) throw ValidationError("empty input: no tokens");
  validate(doc);
  return doc;
}

}  // namespace nilcmetrix
