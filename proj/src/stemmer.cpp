#include "nilcmetrix/stemmer.hpp"

#include <algorithm>
#include <array>
#include <vector>

#include "nilcmetrix/unicode.hpp"

namespace nilcmetrix {

namespace {

constexpr std::size_t kMinStem = 3;

// Suffixes are matched on code points; longest match wins.
constexpr std::string_view kSuffixes[] = {
    "amente", "mente",  "idade",  "ações",  "ação",   "ções",   "ção",    "ismo",
    "ista",   "ável",   "ível",   "ência",  "ância",  "ança",   "ença",   "adora",
    "ador",   "ante",   "mento",  "eza",    "oso",    "osa",    "ando",   "endo",
    "indo",   "ado",    "ada",    "ido",    "ida",    "aram",   "eram",   "iram",
    "avam",   "ava",    "iam",    "ia",     "ou",     "ar",     "er",     "ir",
    "aria",   "eria",   "iria",   "ará",    "erá",    "irá",    "amos",   "emos",
    "imos",   "zinho",  "zinha",  "inho",   "inha",   "íssimo", "íssima",
};

constexpr std::array<std::pair<std::string_view, std::string_view>, 6> kPlurals{{
    {"ões", "ão"}, {"ães", "ão"}, {"ais", "al"}, {"éis", "el"}, {"óis", "ol"}, {"ns", "m"},
}};

std::u32string decode(std::string_view s) {
  auto cps = unicode::code_points(s);
  return std::u32string(cps.begin(), cps.end());
}

std::string encode(const std::u32string& s) {
  std::string out;
  for (char32_t c : s) out += unicode::encode(c);
  return out;
}

bool ends_with(const std::u32string& w, const std::u32string& suffix) {
  return w.size() >= suffix.size() &&
         w.compare(w.size() - suffix.size(), suffix.size(), suffix) == 0;
}

const std::vector<std::u32string>& suffixes() {
  static const std::vector<std::u32string> list = [] {
    std::vector<std::u32string> out;
    for (auto s : kSuffixes) out.push_back(decode(s));
    std::stable_sort(out.begin(), out.end(),
                     [](const auto& a, const auto& b) { return a.size() > b.size(); });
    return out;
  }();
  return list;
}

}  // namespace

std::string stem(std::string_view word) {
  std::u32string w = decode(unicode::fold(word));
  if (w.size() <= kMinStem) return encode(w);

  bool plural_done = false;
  for (const auto& [from, to] : kPlurals) {
    auto f = decode(from);
    if (ends_with(w, f) && w.size() - f.size() + decode(to).size() >= kMinStem) {
      w = w.substr(0, w.size() - f.size()) + decode(to);
      plural_done = true;
      break;
    }
  }
  if (!plural_done && w.back() == U's' && w.size() > kMinStem + 1) w.pop_back();

  for (const auto& suffix : suffixes()) {
    if (ends_with(w, suffix) && w.size() - suffix.size() >= kMinStem) {
      w.resize(w.size() - suffix.size());
      break;
    }
  }

  if (w.size() > kMinStem) {
    char32_t last = w.back();
    if (last == U'a' || last == U'e' || last == U'i' || last == U'o') w.pop_back();
  }
  return encode(w);
}

}  // namespace nilcmetrix
