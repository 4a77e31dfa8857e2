#include "nilcmetrix/unicode.hpp"

#include <unicode/locid.h>
#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include "nilcmetrix/errors.hpp"

namespace nilcmetrix::unicode {

namespace {

const icu::Normalizer2& nfc() {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* norm = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status) || norm == nullptr) {
    throw Error("ICU NFC normalizer unavailable");
  }
  return *norm;
}

icu::UnicodeString normalized(std::string_view text) {
  icu::UnicodeString src = icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
  UErrorCode status = U_ZERO_ERROR;
  icu::UnicodeString out = nfc().normalize(src, status);
  if (U_FAILURE(status)) throw Error("NFC normalization failed");
  return out;
}

}  // namespace

std::string fold(std::string_view text) {
  bool ascii = true;
  for (unsigned char c : text) {
    if (c >= 0x80) {
      ascii = false;
      break;
    }
  }
  if (ascii) {
    std::string out(text);
    for (char& c : out) {
      if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    }
    return out;
  }
  icu::UnicodeString s = normalized(text);
  s.toLower(icu::Locale::getRoot());
  std::string out;
  s.toUTF8String(out);
  return out;
}

std::vector<char32_t> code_points(std::string_view text) {
  std::vector<char32_t> out;
  out.reserve(text.size());
  const auto* bytes = reinterpret_cast<const uint8_t*>(text.data());
  int32_t length = static_cast<int32_t>(text.size());
  int32_t i = 0;
  while (i < length) {
    UChar32 c;
    U8_NEXT(bytes, i, length, c);
    if (c < 0) throw Error("invalid UTF-8 sequence");
    out.push_back(static_cast<char32_t>(c));
  }
  return out;
}

bool is_letter(char32_t c) { return u_isalpha(static_cast<UChar32>(c)); }
bool is_alnum(char32_t c) { return u_isalnum(static_cast<UChar32>(c)); }
bool is_punct(char32_t c) {
  return u_ispunct(static_cast<UChar32>(c)) ||
         u_charType(static_cast<UChar32>(c)) == U_MATH_SYMBOL ||
         u_charType(static_cast<UChar32>(c)) == U_CURRENCY_SYMBOL ||
         u_charType(static_cast<UChar32>(c)) == U_OTHER_SYMBOL;
}
bool is_space(char32_t c) { return u_isUWhiteSpace(static_cast<UChar32>(c)); }

std::string encode(char32_t c) {
  std::string out;
  icu::UnicodeString(static_cast<UChar32>(c)).toUTF8String(out);
  return out;
}

bool is_alphabetic(std::string_view text) {
  icu::UnicodeString s = normalized(text);
  if (s.isEmpty()) return false;
  for (int32_t i = 0; i < s.length();) {
    UChar32 c = s.char32At(i);
    if (!u_isalpha(c)) return false;
    i += U16_LENGTH(c);
  }
  return true;
}

}  // namespace nilcmetrix::unicode
