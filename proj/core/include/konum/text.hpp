#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace konum {

/// A word of the source text. Offsets are byte offsets into the UTF-8 source.
struct Token {
  std::string surface;  ///< exact source bytes [start, end)
  std::string folded;   ///< Turkish-lowercased, apostrophes removed
  std::string stem;     ///< folded text before the first in-word apostrophe
  std::size_t start = 0;
  std::size_t end = 0;

  bool operator==(const Token&) const = default;
};

/// Lowercases with Turkish rules: 'İ' -> 'i', 'I' -> 'ı'; every other letter
/// takes its ordinary lowercase form. Bytes that are not valid UTF-8 are
/// copied through unchanged, so the function is total and idempotent.
std::string fold_turkish(std::string_view text);

/// Splits on whitespace and punctuation. An apostrophe (U+0027 or U+2019)
/// between two word characters stays in the token and marks the stem
/// boundary; anywhere else it separates.
std::vector<Token> tokenize(std::string_view text);

/// True iff token.folded ends with suffix (suffix must already be folded).
bool ends_with(const Token& token, std::string_view suffix);

/// Number of Unicode code points; each invalid byte counts as one.
std::size_t codepoint_length(std::string_view text);

namespace utf8 {

inline constexpr char32_t kInvalid = 0xFFFFFFFF;

struct Decoded {
  char32_t cp;         ///< kInvalid for a malformed byte
  std::size_t length;  ///< bytes consumed, always >= 1
};

/// Decodes one code point at the start of a non-empty string.
Decoded decode(std::string_view bytes);
void append(std::string& out, char32_t cp);

}  // namespace utf8

/// Word characters are letters, digits and marks; everything else separates.
bool is_word_char(char32_t cp);
bool is_digit(char32_t cp);
bool is_apostrophe(char32_t cp);

}  // namespace konum
