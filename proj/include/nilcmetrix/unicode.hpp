#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace nilcmetrix::unicode {

// Thin wrappers over ICU. All strings are UTF-8.

/// NFC-normalized, lowercased copy of `text`.
std::string fold(std::string_view text);

/// Decodes `text` into code points; throws nilcmetrix::Error on invalid UTF-8.
std::vector<char32_t> code_points(std::string_view text);

bool is_letter(char32_t c);
bool is_alnum(char32_t c);
bool is_punct(char32_t c);
bool is_space(char32_t c);

std::string encode(char32_t c);

/// True when every code point of the NFC form is a letter.
bool is_alphabetic(std::string_view text);

}  // namespace nilcmetrix::unicode
