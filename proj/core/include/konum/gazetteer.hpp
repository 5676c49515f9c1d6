#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace konum {

class GazetteerError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An immutable set of normalized entries. An entry is one or more folded
/// words joined by single spaces; normalization runs the entry through the
/// tokenizer so entries and text tokens always agree on word boundaries.
class Gazetteer {
 public:
  Gazetteer() = default;
  Gazetteer(std::string name, const std::vector<std::string>& raw_entries);

  const std::string& name() const { return name_; }
  std::size_t size() const { return sorted_.size(); }
  bool empty() const { return sorted_.empty(); }

  /// Entries in lexicographic byte order.
  const std::vector<std::string>& entries() const { return sorted_; }
  bool contains(std::string_view entry) const;
  bool has_multiword_entries() const { return !multiword_.empty(); }

  /// Single-word entries only.
  bool contains_word(std::string_view word) const;

  /// Multi-word entries keyed by their first word, each split into words.
  const std::vector<std::vector<std::string>>* multiword_starting_with(std::string_view word) const;

  /// Normalizes a raw entry. Returns an empty string if nothing word-like is left.
  static std::string normalize(std::string_view raw);

 private:
  std::string name_;
  std::vector<std::string> sorted_;
  std::unordered_set<std::string> single_;
  std::unordered_map<std::string, std::vector<std::vector<std::string>>> multiword_;
};

/// Reads the line format: '#' comment lines, blank lines ignored, each other
/// line trimmed and normalized. Throws GazetteerError naming the line when an
/// entry normalizes to nothing.
Gazetteer load_gazetteer(std::istream& source, std::string name);
Gazetteer load_gazetteer_file(const std::filesystem::path& path, std::string name);

/// The four lists the extractors consume.
struct Gazetteers {
  Gazetteer special_words;
  Gazetteer cities;
  Gazetteer venues;
  Gazetteer verbs;

  /// Loads cities.txt, special_words.txt, verbs.txt and venues.txt from dir.
  /// Only venues may hold multi-word entries.
  static Gazetteers load_directory(const std::filesystem::path& dir);
};

}  // namespace konum
