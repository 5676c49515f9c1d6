#include "konum/features.hpp"

#include <stdexcept>

namespace konum {

unsigned FeatureVector::code() const {
  unsigned c = 0;
  for (int i = 0; i < kFeatureCount; ++i) {
    if (bits_[i]) c |= 1u << i;
  }
  return c;
}

FeatureVector FeatureVector::from_code(unsigned code) {
  if (code >= (1u << kFeatureCount)) throw std::out_of_range("feature vector code out of range");
  FeatureVector fv;
  for (int i = 0; i < kFeatureCount; ++i) fv.bits_[i] = (code >> i) & 1u;
  return fv;
}

std::string feature_name(int feature) { return "feature" + std::to_string(feature); }

namespace {

// Letters (word characters that are not digits) in a UTF-8 fragment, or
// npos if some code point is not a letter.
std::size_t letter_count(std::string_view s) {
  std::size_t n = 0;
  std::size_t pos = 0;
  while (pos < s.size()) {
    const auto d = utf8::decode(s.substr(pos));
    if (!is_word_char(d.cp) || is_digit(d.cp)) return std::string_view::npos;
    ++n;
    pos += d.length;
  }
  return n;
}

bool is_suffix_chain(std::string_view rest) {
  const auto n = letter_count(rest);
  return n != std::string_view::npos && n >= 1 && n <= kMaxSuffixLetters;
}

// Longest single-word gazetteer entry matched by the token, if any.
std::optional<std::string> match_in(const Token& token, const Gazetteer& g) {
  std::optional<std::string> best;
  auto consider = [&](std::string_view candidate) {
    if (!best || candidate.size() > best->size()) best = std::string(candidate);
  };
  if (g.contains_word(token.stem)) consider(token.stem);

  const std::string_view folded = token.folded;
  if (g.contains_word(folded)) consider(folded);
  // Walk prefixes at code point boundaries, shortest remainder first.
  std::size_t pos = 0;
  while (pos < folded.size()) {
    pos += utf8::decode(folded.substr(pos)).length;
    if (pos >= folded.size()) break;
    const auto prefix = folded.substr(0, pos);
    if (g.contains_word(prefix) && is_suffix_chain(folded.substr(pos))) consider(prefix);
  }
  return best;
}

std::optional<FeatureMatch> first_suffix(std::span<const Token> tokens, int feature,
                                         std::initializer_list<std::string_view> suffixes,
                                         std::size_t min_length) {
  for (const auto& tok : tokens) {
    for (auto suffix : suffixes) {
      if (ends_with(tok, suffix) && codepoint_length(tok.folded) >= min_length) {
        return FeatureMatch{feature, tok.folded};
      }
    }
  }
  return std::nullopt;
}

std::optional<FeatureMatch> first_entry(std::span<const Token> tokens, const Gazetteer& g, int feature) {
  for (const auto& tok : tokens) {
    if (auto m = match_in(tok, g)) return FeatureMatch{feature, std::move(*m)};
  }
  return std::nullopt;
}

}  // namespace

bool token_matches_entry(const Token& token, std::string_view entry) {
  if (token.stem == entry || token.folded == entry) return true;
  const std::string_view folded = token.folded;
  return folded.size() > entry.size() && folded.starts_with(entry) &&
         is_suffix_chain(folded.substr(entry.size()));
}

std::optional<FeatureMatch> find_feature1(std::span<const Token> tokens) {
  // "dayım" and "deyim" are five code points; the bare suffix does not count.
  return first_suffix(tokens, 1, {"deyim", "dayım"}, 6);
}

std::optional<FeatureMatch> find_feature2(std::span<const Token> tokens) {
  return first_suffix(tokens, 2, {"de", "da"}, 4);
}

std::optional<FeatureMatch> find_feature3(std::span<const Token> tokens, const Gazetteer& special_words) {
  return first_entry(tokens, special_words, 3);
}

std::optional<FeatureMatch> find_feature4(std::span<const Token> tokens, const Gazetteer& cities) {
  return first_entry(tokens, cities, 4);
}

std::optional<FeatureMatch> find_feature5(std::span<const Token> tokens, const Gazetteer& venues) {
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (const auto* candidates = venues.multiword_starting_with(tokens[i].folded)) {
      for (const auto& words : *candidates) {
        if (i + words.size() > tokens.size()) continue;
        bool ok = true;
        for (std::size_t w = 1; w + 1 < words.size() && ok; ++w) {
          ok = tokens[i + w].folded == words[w];
        }
        if (ok && token_matches_entry(tokens[i + words.size() - 1], words.back())) {
          std::string entry = words.front();
          for (std::size_t w = 1; w < words.size(); ++w) entry += ' ' + words[w];
          return FeatureMatch{5, std::move(entry)};
        }
      }
    }
    if (auto m = match_in(tokens[i], venues)) return FeatureMatch{5, std::move(*m)};
  }
  return std::nullopt;
}

std::optional<FeatureMatch> find_feature6(std::span<const Token> tokens, const Gazetteer& verbs) {
  for (const auto& tok : tokens) {
    if (verbs.contains_word(tok.folded)) return FeatureMatch{6, tok.folded};
  }
  return std::nullopt;
}

bool feature1(std::span<const Token> tokens) { return find_feature1(tokens).has_value(); }
bool feature2(std::span<const Token> tokens) { return find_feature2(tokens).has_value(); }
bool feature3(std::span<const Token> tokens, const Gazetteer& g) { return find_feature3(tokens, g).has_value(); }
bool feature4(std::span<const Token> tokens, const Gazetteer& g) { return find_feature4(tokens, g).has_value(); }
bool feature5(std::span<const Token> tokens, const Gazetteer& g) { return find_feature5(tokens, g).has_value(); }
bool feature6(std::span<const Token> tokens, const Gazetteer& g) { return find_feature6(tokens, g).has_value(); }

Extraction extract_with_matches(std::string_view text, const Gazetteers& gazetteers) {
  const auto tokens = tokenize(text);
  const std::array<std::optional<FeatureMatch>, kFeatureCount> found{
      find_feature1(tokens),
      find_feature2(tokens),
      find_feature3(tokens, gazetteers.special_words),
      find_feature4(tokens, gazetteers.cities),
      find_feature5(tokens, gazetteers.venues),
      find_feature6(tokens, gazetteers.verbs),
  };
  Extraction out;
  for (int f = 1; f <= kFeatureCount; ++f) {
    if (const auto& m = found[f - 1]) {
      out.features.set(f, true);
      out.matches.push_back(*m);
    }
  }
  return out;
}

FeatureVector extract(std::string_view text, const Gazetteers& gazetteers) {
  return extract_with_matches(text, gazetteers).features;
}

}  // namespace konum
