#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "konum/gazetteer.hpp"
#include "konum/text.hpp"

namespace konum {

inline constexpr int kFeatureCount = 6;

/// The six binary predictors, addressed 1..6 as feature1..feature6.
class FeatureVector {
 public:
  FeatureVector() = default;
  FeatureVector(bool f1, bool f2, bool f3, bool f4, bool f5, bool f6) : bits_{f1, f2, f3, f4, f5, f6} {}

  bool operator[](int feature) const { return bits_.at(feature - 1); }
  void set(int feature, bool value) { bits_.at(feature - 1) = value; }

  /// Bit i-1 holds feature i; inverse of from_code, range 0..63.
  unsigned code() const;
  static FeatureVector from_code(unsigned code);

  bool operator==(const FeatureVector&) const = default;

 private:
  std::array<bool, kFeatureCount> bits_{};
};

std::string feature_name(int feature);  // "feature3"

/// Which token or gazetteer entry fired a feature.
struct FeatureMatch {
  int feature = 0;
  std::string term;

  bool operator==(const FeatureMatch&) const = default;
};

/// Maximum number of letters a suffix chain may add to a gazetteer word.
inline constexpr std::size_t kMaxSuffixLetters = 7;

/// stem == entry, folded == entry, or folded == entry + 1..7 letters.
bool token_matches_entry(const Token& token, std::string_view entry);

// Each find_featureN reports the first token (in text order) that fires the
// feature; featureN is its boolean projection.
std::optional<FeatureMatch> find_feature1(std::span<const Token> tokens);
std::optional<FeatureMatch> find_feature2(std::span<const Token> tokens);
std::optional<FeatureMatch> find_feature3(std::span<const Token> tokens, const Gazetteer& special_words);
std::optional<FeatureMatch> find_feature4(std::span<const Token> tokens, const Gazetteer& cities);
std::optional<FeatureMatch> find_feature5(std::span<const Token> tokens, const Gazetteer& venues);
std::optional<FeatureMatch> find_feature6(std::span<const Token> tokens, const Gazetteer& verbs);

/// "-deyim"/"-dayım" ending on a token longer than the bare suffix.
bool feature1(std::span<const Token> tokens);
/// "-de"/"-da" ending on a token of at least four letters.
bool feature2(std::span<const Token> tokens);
bool feature3(std::span<const Token> tokens, const Gazetteer& special_words);
bool feature4(std::span<const Token> tokens, const Gazetteer& cities);
bool feature5(std::span<const Token> tokens, const Gazetteer& venues);
/// Exact match against fully inflected motion verbs; no suffix tolerance.
bool feature6(std::span<const Token> tokens, const Gazetteer& verbs);

struct Extraction {
  FeatureVector features;
  std::vector<FeatureMatch> matches;  ///< one per true feature, ascending feature order
};

Extraction extract_with_matches(std::string_view text, const Gazetteers& gazetteers);
FeatureVector extract(std::string_view text, const Gazetteers& gazetteers);

}  // namespace konum
