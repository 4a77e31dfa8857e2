#include "nilcmetrix/resources.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

#include "nilcmetrix/errors.hpp"
#include "nilcmetrix/unicode.hpp"

namespace nilcmetrix {

namespace fs = std::filesystem;

namespace {

constexpr std::array<std::string_view, 14> kManifestKeys{
    "simple_words",      "concrete_words", "easy_conjunctions", "hard_conjunctions",
    "discourse_markers", "abstract_nouns", "connectives",       "norms",
    "senses",            "hypernyms",      "polarity",          "freq_corpus_a",
    "freq_corpus_b",     "freq_legacy"};

constexpr std::string_view kEmbeddingsKey = "embeddings";

std::string_view strip_cr(std::string_view s) {
  if (!s.empty() && s.back() == '\r') s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_tabs(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find('\t', start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

// Collapses runs of whitespace so multiword forms compare by words.
std::string phrase_key(std::string_view text) {
  std::string folded = unicode::fold(text);
  std::string out;
  std::istringstream words(folded);
  std::string w;
  while (words >> w) {
    if (!out.empty()) out += ' ';
    out += w;
  }
  return out;
}

std::size_t word_count(std::string_view key) {
  if (key.empty()) return 0;
  std::size_t n = 1;
  for (char c : key) n += (c == ' ');
  return n;
}

// Calls `fn(line_no, line)` for every non-blank, non-comment line.
void for_each_line(const fs::path& path,
                   const std::function<void(std::size_t, std::string_view)>& fn) {
  std::ifstream in(path);
  if (!in) throw ResourceError(path.string(), "cannot open file");
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = strip_cr(line);
    if (view.empty() || view.front() == '#') continue;
    try {
      fn(line_no, view);
    } catch (const ResourceError&) {
      throw;
    } catch (const std::exception& e) {
      throw ResourceError(path.string(), "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
}

double parse_real(std::string_view s) {
  std::string copy(s);
  std::size_t used = 0;
  double value = std::stod(copy, &used);
  if (used != copy.size() || !std::isfinite(value)) {
    throw Error("not a real number: '" + copy + "'");
  }
  return value;
}

long parse_integer(std::string_view s) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error("not an integer: '" + std::string(s) + "'");
  }
  return value;
}

std::vector<std::string_view> columns(std::string_view line, std::size_t expected) {
  auto cols = split_tabs(line);
  if (cols.size() != expected) {
    throw Error("expected " + std::to_string(expected) + " tab-separated columns, found " +
                std::to_string(cols.size()));
  }
  return cols;
}

ConnectiveKind parse_kind(std::string_view s) {
  std::string k = unicode::fold(s);
  if (k == "additive") return ConnectiveKind::Additive;
  if (k == "causal") return ConnectiveKind::Causal;
  if (k == "logical") return ConnectiveKind::Logical;
  if (k == "temporal") return ConnectiveKind::Temporal;
  throw Error("unknown connective kind '" + std::string(s) + "'");
}

Polarity parse_polarity(std::string_view s) {
  std::string p = unicode::fold(s);
  if (p == "positive") return Polarity::Positive;
  if (p == "negative") return Polarity::Negative;
  throw Error("unknown polarity '" + std::string(s) + "'");
}

std::string sense_key(std::string_view word, Pos pos) {
  std::string key(word);
  key += '\t';
  key += pos_tag(pos);
  return key;
}

template <typename Accept>
std::vector<std::pair<std::size_t, std::size_t>> longest_matches(const Sentence& sentence,
                                                                 std::size_t max_words,
                                                                 Accept accept) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const auto& toks = sentence.tokens;
  std::vector<std::string> keys;
  keys.reserve(toks.size());
  for (const auto& tok : toks) keys.push_back(form_key(tok));

  std::size_t i = 0;
  while (i < toks.size()) {
    std::size_t best = 0;
    if (is_word(toks[i])) {
      std::string phrase;
      for (std::size_t len = 1; len <= max_words && i + len <= toks.size(); ++len) {
        const Token& last = toks[i + len - 1];
        if (!is_word(last)) break;
        if (len > 1) phrase += ' ';
        phrase += keys[i + len - 1];
        if (accept(phrase)) best = len;
      }
    }
    if (best > 0) {
      out.emplace_back(i, i + best);
      i += best;
    } else {
      ++i;
    }
  }
  return out;
}

}  // namespace

bool WordSet::contains(std::string_view key) const {
  return entries.find(unicode::fold(key)) != entries.end();
}

std::string_view to_string(ConnectiveKind kind) {
  switch (kind) {
    case ConnectiveKind::Additive: return "additive";
    case ConnectiveKind::Causal: return "causal";
    case ConnectiveKind::Logical: return "logical";
    case ConnectiveKind::Temporal: return "temporal";
  }
  return "";
}

std::string_view to_string(Polarity polarity) {
  return polarity == Polarity::Positive ? "positive" : "negative";
}

ConnectiveLexicon::ConnectiveLexicon(const std::vector<ConnectiveEntry>& entries) {
  for (const auto& entry : entries) {
    std::string key = phrase_key(entry.form);
    if (key.empty()) throw Error("empty connective form");
    auto& senses = by_form_[key];
    for (const auto& s : senses) {
      if (s.kind == entry.kind) {
        throw Error("duplicate connective '" + key + "' of kind " +
                    std::string(to_string(entry.kind)));
      }
    }
    senses.push_back({entry.kind, entry.polarity});
    max_words_ = std::max(max_words_, word_count(key));
    ++size_;
  }
}

std::span<const ConnectiveSense> ConnectiveLexicon::senses(std::string_view form) const {
  auto it = by_form_.find(unicode::fold(form));
  if (it == by_form_.end()) return {};
  return it->second;
}

bool ConnectiveMatch::has(ConnectiveKind kind, Polarity polarity) const {
  for (const auto& s : senses) {
    if (s.kind == kind && s.polarity == polarity) return true;
  }
  return false;
}

std::vector<ConnectiveMatch> match_connectives(const Sentence& sentence,
                                               const ConnectiveLexicon& lexicon) {
  std::vector<ConnectiveMatch> out;
  if (lexicon.empty()) return out;
  auto spans = longest_matches(sentence, lexicon.max_words(), [&](const std::string& phrase) {
    return !lexicon.senses(phrase).empty();
  });
  for (auto [begin, end] : spans) {
    if (end - begin == 1 && sentence.tokens[begin].pos == Pos::Pron) continue;
    ConnectiveMatch m;
    m.begin = begin;
    m.end = end;
    for (std::size_t i = begin; i < end; ++i) {
      if (i > begin) m.form += ' ';
      m.form += form_key(sentence.tokens[i]);
    }
    auto senses = lexicon.senses(m.form);
    m.senses.assign(senses.begin(), senses.end());
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> match_wordset(const Sentence& sentence,
                                                               const WordSet& set) {
  return longest_matches(sentence, set.max_words,
                         [&](const std::string& phrase) { return set.contains(phrase); });
}

const NormScores* NormTable::find(std::string_view word) const {
  auto it = entries.find(unicode::fold(word));
  return it == entries.end() ? nullptr : &it->second;
}

std::optional<int> SenseTable::sense_count(std::string_view word, Pos pos) const {
  auto it = senses.find(sense_key(unicode::fold(word), pos));
  if (it == senses.end()) return std::nullopt;
  return it->second;
}

std::optional<int> SenseTable::hypernym_count(std::string_view verb) const {
  auto it = hypernyms.find(unicode::fold(verb));
  if (it == hypernyms.end()) return std::nullopt;
  return it->second;
}

std::optional<Polarity> PolarityLexicon::find(std::string_view word) const {
  auto it = entries.find(unicode::fold(word));
  if (it == entries.end()) return std::nullopt;
  return it->second;
}

std::optional<double> FreqTable::find(std::string_view word) const {
  auto it = fpm.find(unicode::fold(word));
  if (it == fpm.end()) return std::nullopt;
  return it->second;
}

EmbeddingModel::EmbeddingModel(std::size_t dimension) : dimension_(dimension) {
  if (dimension < 2) throw Error("embedding dimension must be at least 2");
}

void EmbeddingModel::add(std::string word, std::span<const double> vector) {
  if (vector.size() != dimension_) {
    throw Error("vector for '" + word + "' has " + std::to_string(vector.size()) +
                " components, expected " + std::to_string(dimension_));
  }
  std::string key = unicode::fold(word);
  if (!index_.emplace(key, index_.size()).second) {
    throw Error("duplicate embedding for '" + key + "'");
  }
  data_.insert(data_.end(), vector.begin(), vector.end());
}

std::optional<std::span<const double>> EmbeddingModel::find(std::string_view word) const {
  auto it = index_.find(unicode::fold(word));
  if (it == index_.end()) return std::nullopt;
  return std::span<const double>(data_.data() + it->second * dimension_, dimension_);
}

EmbeddingModel EmbeddingModel::scaled(double factor) const {
  EmbeddingModel out = *this;
  for (double& v : out.data_) v *= factor;
  return out;
}

WordSet load_wordset(const fs::path& path, std::string name) {
  WordSet set;
  set.name = std::move(name);
  for_each_line(path, [&](std::size_t, std::string_view line) {
    std::string key = phrase_key(line);
    if (key.empty()) return;
    if (!set.entries.insert(key).second) throw Error("duplicate entry '" + key + "'");
    set.max_words = std::max(set.max_words, word_count(key));
  });
  if (set.entries.empty()) throw ResourceError(path.string(), "word list is empty");
  return set;
}

ConnectiveLexicon load_connectives(const fs::path& path) {
  std::vector<ConnectiveEntry> entries;
  for_each_line(path, [&](std::size_t, std::string_view line) {
    auto cols = columns(line, 3);
    entries.push_back({std::string(cols[0]), parse_kind(cols[1]), parse_polarity(cols[2])});
  });
  try {
    return ConnectiveLexicon(entries);
  } catch (const Error& e) {
    throw ResourceError(path.string(), e.what());
  }
}

NormTable load_norms(const fs::path& path) {
  NormTable table;
  for_each_line(path, [&](std::size_t, std::string_view line) {
    auto cols = columns(line, 5);
    std::string word = unicode::fold(cols[0]);
    NormScores s{parse_real(cols[1]), parse_real(cols[2]), parse_real(cols[3]),
                 parse_real(cols[4])};
    for (double v : {s.aoa, s.concreteness, s.familiarity, s.imageability}) {
      if (v < 1.0 || v > 7.0) {
        std::ostringstream msg;
        msg << "score " << v << " for '" << word << "' outside [1, 7]";
        throw Error(msg.str());
      }
    }
    if (!table.entries.emplace(word, s).second) throw Error("duplicate entry '" + word + "'");
  });
  return table;
}

void load_senses(const fs::path& path, SenseTable& table) {
  for_each_line(path, [&](std::size_t, std::string_view line) {
    auto cols = columns(line, 3);
    std::string word = unicode::fold(cols[0]);
    auto pos = pos_from_tag(cols[1]);
    if (!pos || (*pos != Pos::Noun && *pos != Pos::Verb && *pos != Pos::Adj &&
                 *pos != Pos::Adv)) {
      throw Error("sense PoS must be NOUN, VERB, ADJ or ADV, got '" + std::string(cols[1]) +
                  "'");
    }
    long count = parse_integer(cols[2]);
    if (count < 1) throw Error("sense count for '" + word + "' must be >= 1");
    if (!table.senses.emplace(sense_key(word, *pos), static_cast<int>(count)).second) {
      throw Error("duplicate entry '" + word + "' " + std::string(cols[1]));
    }
  });
  table.has_senses = true;
}

void load_hypernyms(const fs::path& path, SenseTable& table) {
  for_each_line(path, [&](std::size_t, std::string_view line) {
    auto cols = columns(line, 2);
    std::string verb = unicode::fold(cols[0]);
    long count = parse_integer(cols[1]);
    if (count < 0) throw Error("hypernym count for '" + verb + "' must be >= 0");
    if (!table.hypernyms.emplace(verb, static_cast<int>(count)).second) {
      throw Error("duplicate entry '" + verb + "'");
    }
  });
  table.has_hypernyms = true;
}

PolarityLexicon load_polarity(const fs::path& path) {
  PolarityLexicon lex;
  for_each_line(path, [&](std::size_t, std::string_view line) {
    auto cols = columns(line, 2);
    std::string word = unicode::fold(cols[0]);
    if (!lex.entries.emplace(word, parse_polarity(cols[1])).second) {
      throw Error("duplicate entry '" + word + "'");
    }
  });
  return lex;
}

FreqTable load_frequencies(const fs::path& path, std::string corpus_name) {
  FreqTable table;
  table.corpus_name = std::move(corpus_name);
  std::ifstream probe(path);
  if (!probe) throw ResourceError(path.string(), "cannot open file");
  // Optional header comment: "# total_tokens = N".
  std::string first;
  if (std::getline(probe, first)) {
    std::string_view view = strip_cr(first);
    if (view.rfind("#", 0) == 0) {
      auto eq = view.find('=');
      if (eq != std::string_view::npos && view.find("total_tokens") != std::string_view::npos) {
        std::string_view num = view.substr(eq + 1);
        while (!num.empty() && num.front() == ' ') num.remove_prefix(1);
        try {
          table.total_tokens = static_cast<std::uint64_t>(parse_integer(num));
        } catch (const std::exception& e) {
          throw ResourceError(path.string(), std::string("line 1: ") + e.what());
        }
      }
    }
  }
  for_each_line(path, [&](std::size_t, std::string_view line) {
    auto cols = columns(line, 2);
    std::string word = unicode::fold(cols[0]);
    double fpm = parse_real(cols[1]);
    if (!(fpm > 0)) throw Error("frequency for '" + word + "' must be > 0");
    if (!table.fpm.emplace(word, fpm).second) throw Error("duplicate entry '" + word + "'");
  });
  return table;
}

EmbeddingModel load_embeddings(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ResourceError(path.string(), "cannot open file");
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& what) -> ResourceError {
    return ResourceError(path.string(), "line " + std::to_string(line_no) + ": " + what);
  };
  if (!std::getline(in, line)) throw ResourceError(path.string(), "missing header");
  ++line_no;
  std::istringstream header(line);
  std::size_t vocab = 0;
  std::size_t dim = 0;
  std::string extra;
  if (!(header >> vocab >> dim) || (header >> extra)) throw fail("header must be 'V d'");
  EmbeddingModel model;
  try {
    model = EmbeddingModel(dim);
  } catch (const Error& e) {
    throw fail(e.what());
  }
  std::vector<double> vec;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = strip_cr(line);
    if (view.find_first_not_of(" \t") == std::string_view::npos) continue;
    std::istringstream row{std::string(view)};
    std::string word;
    row >> word;
    vec.clear();
    std::string cell;
    while (row >> cell) {
      try {
        vec.push_back(parse_real(cell));
      } catch (const std::exception& e) {
        throw fail(e.what());
      }
    }
    try {
      model.add(word, vec);
    } catch (const Error& e) {
      throw fail(e.what());
    }
  }
  if (model.size() != vocab) {
    throw ResourceError(path.string(), "header declares " + std::to_string(vocab) +
                                           " words, file has " + std::to_string(model.size()));
  }
  return model;
}

ResourceBundle load_bundle(const fs::path& manifest) {
  std::ifstream in(manifest);
  if (!in) throw ResourceError(manifest.string(), "cannot open manifest");
  const fs::path base = manifest.parent_path();
  ResourceBundle bundle;
  std::unordered_set<std::string> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = strip_cr(line);
    auto first = view.find_first_not_of(" \t");
    if (first == std::string_view::npos || view[first] == '#') continue;
    auto eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw ResourceError(manifest.string(),
                          "line " + std::to_string(line_no) + ": expected key=path");
    }
    auto strip = [](std::string_view s) {
      while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
      while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
      return std::string(s);
    };
    std::string key = strip(view.substr(0, eq));
    fs::path path = strip(view.substr(eq + 1));
    if (path.is_relative()) path = base / path;
    if (!seen.insert(key).second) {
      throw ResourceError(manifest.string(), "duplicate key '" + key + "'");
    }
    if (!fs::exists(path)) throw ResourceError(path.string(), "file not found");

    if (key == "simple_words") bundle.simple_words = load_wordset(path, key);
    else if (key == "concrete_words") bundle.concrete_words = load_wordset(path, key);
    else if (key == "easy_conjunctions") bundle.easy_conjunctions = load_wordset(path, key);
    else if (key == "hard_conjunctions") bundle.hard_conjunctions = load_wordset(path, key);
    else if (key == "discourse_markers") bundle.discourse_markers = load_wordset(path, key);
    else if (key == "abstract_nouns") bundle.abstract_nouns = load_wordset(path, key);
    else if (key == "connectives") bundle.connectives = load_connectives(path);
    else if (key == "norms") bundle.norms = load_norms(path);
    else if (key == "senses") {
      if (!bundle.senses) bundle.senses.emplace();
      load_senses(path, *bundle.senses);
    } else if (key == "hypernyms") {
      if (!bundle.senses) bundle.senses.emplace();
      load_hypernyms(path, *bundle.senses);
    } else if (key == "polarity") bundle.polarity = load_polarity(path);
    else if (key == "freq_corpus_a") bundle.freq_corpus_a = load_frequencies(path, "corpus-A");
    else if (key == "freq_corpus_b") bundle.freq_corpus_b = load_frequencies(path, "corpus-B");
    else if (key == "freq_legacy") bundle.freq_legacy = load_frequencies(path, "legacy");
    else if (key == kEmbeddingsKey) bundle.embeddings = load_embeddings(path);
    else {
      throw ResourceError(manifest.string(),
                          "line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
  }
  return bundle;
}

std::span<const std::string_view> manifest_keys() {
  static const std::vector<std::string_view> keys = [] {
    std::vector<std::string_view> k(kManifestKeys.begin(), kManifestKeys.end());
    k.push_back(kEmbeddingsKey);
    return k;
  }();
  return keys;
}

double zipf(double fpm) {
  if (!(fpm > 0) || !std::isfinite(fpm)) {
    throw Error("zipf: frequency per million must be positive");
  }
  return std::log10(fpm) + 3.0;
}

}  // namespace nilcmetrix
