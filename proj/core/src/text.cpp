#include "konum/text.hpp"

namespace konum {

namespace utf8 {

Decoded decode(std::string_view bytes) {
  const auto b0 = static_cast<unsigned char>(bytes[0]);
  if (b0 < 0x80) return {b0, 1};

  std::size_t len = 0;
  char32_t cp = 0;
  char32_t min = 0;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2; cp = b0 & 0x1F; min = 0x80;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3; cp = b0 & 0x0F; min = 0x800;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4; cp = b0 & 0x07; min = 0x10000;
  } else {
    return {kInvalid, 1};
  }
  if (bytes.size() < len) return {kInvalid, 1};
  for (std::size_t i = 1; i < len; ++i) {
    const auto b = static_cast<unsigned char>(bytes[i]);
    if ((b & 0xC0) != 0x80) return {kInvalid, 1};
    cp = (cp << 6) | (b & 0x3F);
  }
  // overlong forms, surrogates and out-of-range values are malformed
  if (cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return {kInvalid, 1};
  return {cp, len};
}

void append(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

}  // namespace utf8

namespace {

// Lowercase mapping for the scripts that show up in Turkish social media text:
// Latin (Basic, Latin-1, Extended-A/B, Extended Additional), Greek, Cyrillic
// and fullwidth Latin. Everything outside these blocks has no case here.
char32_t to_lower(char32_t cp) {
  if (cp == U'I') return U'ı';
  if (cp == U'İ') return U'i';
  if (cp >= U'A' && cp <= U'Z') return cp + 32;
  if (cp < 0xC0) return cp;

  // Latin-1: À..Þ except ×
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 32;
  if (cp < 0x100) return cp;

  // Latin Extended-A: mostly even/odd pairs, with a shifted run at 0x139..0x148
  // and 0x179..0x17E.
  if (cp <= 0x17F) {
    if (cp == 0x178) return 0xFF;
    if ((cp >= 0x139 && cp <= 0x148) || (cp >= 0x179 && cp <= 0x17E))
      return (cp % 2 == 1) ? cp + 1 : cp;
    if (cp == 0x138 || cp == 0x149 || cp == 0x17F) return cp;
    return (cp % 2 == 0) ? cp + 1 : cp;
  }

  // Latin Extended-B: the regular paired ranges only.
  if ((cp >= 0x1CD && cp <= 0x1DC)) return (cp % 2 == 1) ? cp + 1 : cp;
  if ((cp >= 0x1DE && cp <= 0x1EF) || (cp >= 0x1F8 && cp <= 0x21F) ||
      (cp >= 0x222 && cp <= 0x233))
    return (cp % 2 == 0) ? cp + 1 : cp;

  // Greek
  if (cp == 0x386) return 0x3AC;
  if (cp >= 0x388 && cp <= 0x38A) return cp + 37;
  if (cp == 0x38C) return 0x3CC;
  if (cp == 0x38E || cp == 0x38F) return cp + 63;
  if (cp >= 0x391 && cp <= 0x3AB && cp != 0x3A2) return cp + 32;

  // Cyrillic
  if (cp >= 0x400 && cp <= 0x40F) return cp + 80;
  if (cp >= 0x410 && cp <= 0x42F) return cp + 32;
  if ((cp >= 0x460 && cp <= 0x481) || (cp >= 0x48A && cp <= 0x4BF) ||
      (cp >= 0x4D0 && cp <= 0x52F))
    return (cp % 2 == 0) ? cp + 1 : cp;
  if (cp == 0x4C0) return 0x4CF;
  if (cp >= 0x4C1 && cp <= 0x4CE) return (cp % 2 == 1) ? cp + 1 : cp;

  // Latin Extended Additional (Vietnamese etc.)
  if ((cp >= 0x1E00 && cp <= 0x1E95) || (cp >= 0x1EA0 && cp <= 0x1EFF))
    return (cp % 2 == 0) ? cp + 1 : cp;

  // Fullwidth A..Z
  if (cp >= 0xFF21 && cp <= 0xFF3A) return cp + 32;
  return cp;
}

template <typename Fn>
void for_each_codepoint(std::string_view text, Fn&& fn) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto d = utf8::decode(text.substr(pos));
    fn(d, pos);
    pos += d.length;
  }
}

bool is_letter(char32_t cp) {
  if ((cp >= U'a' && cp <= U'z') || (cp >= U'A' && cp <= U'Z')) return true;
  if (cp < 0xC0) return cp == 0xAA || cp == 0xB5 || cp == 0xBA;
  if (cp == 0xD7 || cp == 0xF7) return false;
  if (cp <= 0x24F) return true;                      // Latin-1 + Extended-A/B
  if (cp >= 0x250 && cp <= 0x2AF) return true;       // IPA
  if (cp >= 0x370 && cp <= 0x3FF) return cp != 0x37E && cp != 0x387;
  if (cp >= 0x400 && cp <= 0x52F) return !(cp >= 0x482 && cp <= 0x489);
  if (cp >= 0x531 && cp <= 0x587) return true;       // Armenian
  if (cp >= 0x5D0 && cp <= 0x5EA) return true;       // Hebrew
  if (cp >= 0x620 && cp <= 0x64A) return true;       // Arabic letters
  if (cp >= 0x671 && cp <= 0x6D3) return true;
  if (cp >= 0x1E00 && cp <= 0x1FFF) return true;     // Latin/Greek extended
  if (cp >= 0x3040 && cp <= 0x30FF) return true;     // kana
  if (cp >= 0x4E00 && cp <= 0x9FFF) return true;     // CJK
  if (cp >= 0xAC00 && cp <= 0xD7A3) return true;     // Hangul
  if (cp >= 0xFF21 && cp <= 0xFF3A) return true;
  if (cp >= 0xFF41 && cp <= 0xFF5A) return true;
  return false;
}

bool is_mark(char32_t cp) {
  return (cp >= 0x300 && cp <= 0x36F) || (cp >= 0x483 && cp <= 0x489) ||
         (cp >= 0x64B && cp <= 0x65F);
}

}  // namespace

bool is_digit(char32_t cp) {
  return (cp >= U'0' && cp <= U'9') || (cp >= 0x660 && cp <= 0x669) ||
         (cp >= 0xFF10 && cp <= 0xFF19);
}

bool is_word_char(char32_t cp) {
  return cp != utf8::kInvalid && (is_letter(cp) || is_digit(cp) || is_mark(cp));
}

bool is_apostrophe(char32_t cp) { return cp == U'\'' || cp == U'’'; }

std::string fold_turkish(std::string_view text) {
  std::string out;
  out.reserve(text.size() + text.size() / 8);
  for_each_codepoint(text, [&](const utf8::Decoded& d, std::size_t pos) {
    if (d.cp == utf8::kInvalid) {
      out.push_back(text[pos]);
    } else {
      utf8::append(out, to_lower(d.cp));
    }
  });
  return out;
}

std::size_t codepoint_length(std::string_view text) {
  std::size_t n = 0;
  for_each_codepoint(text, [&](const utf8::Decoded&, std::size_t) { ++n; });
  return n;
}

std::vector<Token> tokenize(std::string_view text) {
  struct Unit {
    char32_t cp;
    std::size_t pos;
    std::size_t len;
  };
  std::vector<Unit> units;
  units.reserve(text.size());
  for_each_codepoint(text, [&](const utf8::Decoded& d, std::size_t pos) {
    units.push_back({d.cp, pos, d.length});
  });

  auto word_at = [&](std::size_t i) { return i < units.size() && is_word_char(units[i].cp); };

  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < units.size()) {
    if (!word_at(i)) {
      ++i;
      continue;
    }
    const std::size_t first = i;
    while (i < units.size()) {
      if (word_at(i)) {
        ++i;
      } else if (is_apostrophe(units[i].cp) && word_at(i + 1)) {
        i += 1;  // in-word apostrophe, word_at(i-1) holds by construction
      } else {
        break;
      }
    }

    Token tok;
    tok.start = units[first].pos;
    tok.end = units[i - 1].pos + units[i - 1].len;
    tok.surface = std::string(text.substr(tok.start, tok.end - tok.start));
    bool in_stem = true;
    for (std::size_t u = first; u < i; ++u) {
      if (is_apostrophe(units[u].cp)) {
        in_stem = false;
        continue;
      }
      std::string piece = fold_turkish(text.substr(units[u].pos, units[u].len));
      tok.folded += piece;
      if (in_stem) tok.stem += piece;
    }
    tokens.push_back(std::move(tok));
  }
  return tokens;
}

bool ends_with(const Token& token, std::string_view suffix) {
  return std::string_view(token.folded).ends_with(suffix);
}

}  // namespace konum
