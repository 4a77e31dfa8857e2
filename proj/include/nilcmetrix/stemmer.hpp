#pragma once

#include <string>
#include <string_view>

namespace nilcmetrix {

/// Deterministic Portuguese suffix-stripping stemmer: plural reduction, then
/// the longest matching derivational or inflectional suffix, then a final
/// theme vowel. Stems never shrink below three letters.
std::string stem(std::string_view word);

}  // namespace nilcmetrix
