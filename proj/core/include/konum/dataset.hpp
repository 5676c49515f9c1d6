#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "konum/features.hpp"

namespace konum {

/// Class 1 marks a text that shares the author's location.
enum class Label : std::uint8_t { Negative = 0, Positive = 1 };

inline int to_int(Label l) { return static_cast<int>(l); }
Label label_from_int(long long value);  // throws std::invalid_argument unless 0 or 1

class DatasetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LabeledExample {
  std::string text;
  Label label = Label::Negative;

  bool operator==(const LabeledExample&) const = default;
};

struct Instance {
  FeatureVector features;
  Label label = Label::Negative;

  bool operator==(const Instance&) const = default;
};

/// Reads one JSON object per line with "text" (string) and "label" (0 or 1).
/// Blank lines are skipped. Errors carry the 1-based line number.
std::vector<LabeledExample> load_corpus(std::istream& source);
std::vector<LabeledExample> load_corpus_file(const std::string& path);

/// Writes the same line format load_corpus reads.
void write_corpus(std::ostream& out, std::span<const LabeledExample> examples);

std::vector<Instance> featurize_corpus(std::span<const LabeledExample> examples, const Gazetteers& gazetteers);

inline constexpr std::string_view kTableHeader =
    "feature1,feature2,feature3,feature4,feature5,feature6,class";

/// CSV with kTableHeader and one 0/1 row per instance, LF line endings.
void export_table(std::ostream& out, std::span<const Instance> instances);
std::string export_table(std::span<const Instance> instances);

/// Inverse of export_table. Accepts CRLF; rejects a wrong header or any
/// row that is not seven 0/1 fields.
std::vector<Instance> import_table(std::istream& source);

struct ClassCount {
  std::size_t negative = 0;
  std::size_t positive = 0;
};
ClassCount count_classes(std::span<const Instance> instances);
ClassCount count_classes(std::span<const LabeledExample> examples);

}  // namespace konum
