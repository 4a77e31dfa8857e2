#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "nilcmetrix/text_model.hpp"

namespace nilcmetrix {

// Every lookup key is case-folded and NFC-normalized (unicode::fold) both at
// load time and at query time. Multiword entries are single-space joined.

struct WordSet {
  std::string name;
  std::unordered_set<std::string> entries;
  std::size_t max_words = 1;  // longest entry, in words

  bool contains(std::string_view key) const;
};

enum class ConnectiveKind { Additive, Causal, Logical, Temporal };
enum class Polarity { Positive, Negative };

std::string_view to_string(ConnectiveKind kind);
std::string_view to_string(Polarity polarity);

struct ConnectiveSense {
  ConnectiveKind kind;
  Polarity polarity;
};

struct ConnectiveEntry {
  std::string form;
  ConnectiveKind kind;
  Polarity polarity;
};

class ConnectiveLexicon {
 public:
  ConnectiveLexicon() = default;
  /// Throws Error on a duplicate (form, kind) pair.
  explicit ConnectiveLexicon(const std::vector<ConnectiveEntry>& entries);

  /// Senses of a (folded, space-joined) form; empty when unknown.
  std::span<const ConnectiveSense> senses(std::string_view form) const;
  std::size_t max_words() const { return max_words_; }
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

 private:
  std::unordered_map<std::string, std::vector<ConnectiveSense>> by_form_;
  std::size_t max_words_ = 0;
  std::size_t size_ = 0;
};

struct ConnectiveMatch {
  std::size_t begin = 0;  // 0-based token offset in the sentence
  std::size_t end = 0;    // one past the last token
  std::string form;
  std::vector<ConnectiveSense> senses;

  bool has(ConnectiveKind kind, Polarity polarity) const;
};

/// Greedy longest-match, left to right, non-overlapping. A single-token
/// match on a pronoun (reflexive "se", relative "que") is dropped.
std::vector<ConnectiveMatch> match_connectives(const Sentence& sentence,
                                               const ConnectiveLexicon& lexicon);

/// Same matching discipline over a word list (multiword entries allowed).
std::vector<std::pair<std::size_t, std::size_t>> match_wordset(const Sentence& sentence,
                                                               const WordSet& set);

struct NormScores {
  double aoa = 0;
  double concreteness = 0;
  double familiarity = 0;
  double imageability = 0;
};

struct NormTable {
  std::unordered_map<std::string, NormScores> entries;
  const NormScores* find(std::string_view word) const;
};

struct SenseTable {
  std::unordered_map<std::string, int> senses;  // key: word + '\t' + UPOS
  std::unordered_map<std::string, int> hypernyms;
  bool has_senses = false;
  bool has_hypernyms = false;

  std::optional<int> sense_count(std::string_view word, Pos pos) const;
  std::optional<int> hypernym_count(std::string_view verb) const;
};

struct PolarityLexicon {
  std::unordered_map<std::string, Polarity> entries;
  std::optional<Polarity> find(std::string_view word) const;
};

struct FreqTable {
  std::string corpus_name;
  std::unordered_map<std::string, double> fpm;
  std::uint64_t total_tokens = 0;

  std::optional<double> find(std::string_view word) const;
};

class EmbeddingModel {
 public:
  EmbeddingModel() = default;
  explicit EmbeddingModel(std::size_t dimension);

  /// Throws Error on a wrong-length vector or a duplicate word.
  void add(std::string word, std::span<const double> vector);
  std::optional<std::span<const double>> find(std::string_view word) const;
  std::size_t dimension() const { return dimension_; }
  std::size_t size() const { return index_.size(); }
  /// Copy with every vector multiplied by `factor`.
  EmbeddingModel scaled(double factor) const;

 private:
  std::size_t dimension_ = 0;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<double> data_;
};

struct ResourceBundle {
  std::optional<WordSet> simple_words;
  std::optional<WordSet> concrete_words;
  std::optional<WordSet> easy_conjunctions;
  std::optional<WordSet> hard_conjunctions;
  std::optional<WordSet> discourse_markers;
  std::optional<WordSet> abstract_nouns;
  std::optional<ConnectiveLexicon> connectives;
  std::optional<NormTable> norms;
  std::optional<SenseTable> senses;
  std::optional<PolarityLexicon> polarity;
  std::optional<FreqTable> freq_corpus_a;  // Corpus Brasileiro role
  std::optional<FreqTable> freq_corpus_b;  // BrWaC role
  std::optional<FreqTable> freq_legacy;    // raw, not normalized
  std::optional<EmbeddingModel> embeddings;
};

// Individual loaders; all throw ResourceError naming the file.
WordSet load_wordset(const std::filesystem::path& path, std::string name);
ConnectiveLexicon load_connectives(const std::filesystem::path& path);
NormTable load_norms(const std::filesystem::path& path);
void load_senses(const std::filesystem::path& path, SenseTable& table);
void load_hypernyms(const std::filesystem::path& path, SenseTable& table);
PolarityLexicon load_polarity(const std::filesystem::path& path);
FreqTable load_frequencies(const std::filesystem::path& path, std::string corpus_name);
EmbeddingModel load_embeddings(const std::filesystem::path& path);

/// Reads a `key=path` manifest; relative paths resolve against its directory.
ResourceBundle load_bundle(const std::filesystem::path& manifest);

/// Manifest keys understood by load_bundle, in documentation order.
std::span<const std::string_view> manifest_keys();

/// Zipf scale: log10(fpm) + 3. Throws Error when fpm <= 0.
double zipf(double fpm);

}  // namespace nilcmetrix
