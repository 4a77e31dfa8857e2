// Orthographic syllable counting for Brazilian Portuguese.
//
// Each maximal run of vowel letters is split into nuclei:
//  * u/ü after q or g and before another vowel is a glide ("quando", "guerra");
//  * a vowel followed by unaccented i/u forms a falling diphthong ("pai",
//    "muito", "viu"), unless the glide closes the syllable before nh or before
//    m/n/r/l/z + consonant or word end ("rainha", "ainda", "juiz", "ruim");
//  * ão, ãe, õe are nasal diphthongs;
//  * every other adjacent pair (including i/u + vowel, and accented í/ú) is a
//    hiatus ("criança", "saída", "poeta").
// Words with no vowel letter count as one syllable.

#include <string>

#include "nilcmetrix/errors.hpp"
#include "nilcmetrix/text_model.hpp"
#include "nilcmetrix/unicode.hpp"

namespace nilcmetrix {

namespace {

bool is_strong(char32_t c) {
  switch (c) {
    case U'a': case U'e': case U'o':
    case U'á': case U'é': case U'ó':
    case U'â': case U'ê': case U'ô':
    case U'ã': case U'õ': case U'à':
    case U'í': case U'ú':
      return true;
    default:
      return false;
  }
}

bool is_weak(char32_t c) { return c == U'i' || c == U'u' || c == U'ü'; }
bool is_vowel(char32_t c) { return is_strong(c) || is_weak(c) || c == U'y'; }

// Glide at `j` ends the vowel group; does the following context force a hiatus?
bool hiatus_context(const std::u32string& w, std::size_t j) {
  std::size_t k = j + 1;
  if (k >= w.size()) return false;
  char32_t c = w[k];
  if (c == U'n' && k + 1 < w.size() && w[k + 1] == U'h') return true;
  if (c == U'm' || c == U'n' || c == U'r' || c == U'l' || c == U'z') {
    return k + 1 >= w.size() || !is_vowel(w[k + 1]);
  }
  return false;
}

int count_group(const std::u32string& w, std::size_t begin, std::size_t end) {
  std::size_t i = begin;
  if (end - begin >= 2 && (w[i] == U'u' || w[i] == U'ü') && i > 0 &&
      (w[i - 1] == U'q' || w[i - 1] == U'g')) {
    ++i;
  }
  int nuclei = 0;
  while (i < end) {
    ++nuclei;
    char32_t c = w[i];
    if (i + 1 < end) {
      char32_t n = w[i + 1];
      bool nasal = (c == U'ã' && (n == U'o' || n == U'e')) || (c == U'õ' && n == U'e');
      bool falling = (is_strong(c) && c != U'í' && c != U'ú' && (n == U'i' || n == U'u')) ||
                     (c == U'u' && n == U'i') || (c == U'i' && n == U'u');
      if (nasal || (falling && !(i + 2 == end && hiatus_context(w, i + 1)))) {
        i += 2;
        continue;
      }
    }
    ++i;
  }
  return nuclei;
}

}  // namespace

int syllabify(std::string_view word) {
  if (word.empty() || !unicode::is_alphabetic(word)) {
    throw Error("syllabify: not an alphabetic word: '" + std::string(word) + "'");
  }
  auto cps = unicode::code_points(unicode::fold(word));
  std::u32string w(cps.begin(), cps.end());
  int total = 0;
  std::size_t i = 0;
  while (i < w.size()) {
    if (!is_vowel(w[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < w.size() && is_vowel(w[j])) ++j;
    total += count_group(w, i, j);
    i = j;
  }
  return total > 0 ? total : 1;
}

}  // namespace nilcmetrix
