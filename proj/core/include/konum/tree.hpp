#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "konum/dataset.hpp"
#include "konum/features.hpp"

namespace konum {

struct InducerParams {
  std::size_t min_leaf = 2;
  bool pruning = false;
  double confidence = 0.25;  ///< used only when pruning is on

  void validate() const;  // throws std::invalid_argument
  bool operator==(const InducerParams&) const = default;
};

using NodeId = std::uint32_t;

struct Leaf {
  Label label = Label::Negative;
  std::size_t reached = 0;
  std::size_t misclassified = 0;

  bool operator==(const Leaf&) const = default;
};

struct Split {
  int feature = 1;  ///< 1..6
  NodeId if_false = 0;
  NodeId if_true = 0;
};

using Node = std::variant<Leaf, Split>;

struct TreeInfo {
  std::string source = "unspecified";  ///< "paper-reference", "c4.5", "file", ...
  std::optional<InducerParams> params;
  std::size_t training_size = 0;
};

struct PathStep {
  int feature = 0;
  bool branch = false;

  bool operator==(const PathStep&) const = default;
};

struct Prediction {
  Label label = Label::Negative;
  std::vector<PathStep> path;
};

class TreeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Binary decision tree over the six features, stored as a flat node arena.
/// Construction validates the shape: every id in range, each node used once,
/// no feature repeated along a path, misclassified <= reached at every leaf.
class DecisionTree {
 public:
  DecisionTree(std::vector<Node> nodes, NodeId root, TreeInfo info = {});

  static DecisionTree single_leaf(Leaf leaf, TreeInfo info = {});

  NodeId root() const { return root_; }
  const Node& node(NodeId id) const { return nodes_.at(id); }
  const TreeInfo& info() const { return info_; }
  void set_info(TreeInfo info) { info_ = std::move(info); }

  std::size_t leaf_count() const;
  std::size_t depth() const;          ///< splits on the longest path
  std::size_t total_reached() const;  ///< sum of leaf "reached" counts

  Prediction predict(const FeatureVector& fv) const;
  Label classify(const FeatureVector& fv) const;

  /// Same shape, features and leaves; node numbering and info are ignored.
  bool same_structure(const DecisionTree& other) const;

 private:
  std::vector<Node> nodes_;
  NodeId root_ = 0;
  TreeInfo info_;
};

/// Incremental construction helper for DecisionTree.
class TreeBuilder {
 public:
  NodeId leaf(Label label, std::size_t reached, std::size_t misclassified);
  NodeId split(int feature, NodeId if_false, NodeId if_true);
  DecisionTree build(NodeId root, TreeInfo info = {}) &&;

 private:
  std::vector<Node> nodes_;
};

/// The six-leaf tree deployed in the original browser tool, with its
/// training counts (500 instances in total).
DecisionTree paper_reference_tree();

/// True iff both trees predict the same class for all 64 feature vectors.
bool same_decision_function(const DecisionTree& a, const DecisionTree& b);

class TreeFormatError : public std::runtime_error {
 public:
  TreeFormatError(std::size_t line, const std::string& what)
      : std::runtime_error("tree text line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Weka-style text: one line per branch, "| " per depth level, leaves end
/// with ": L (R.0/M.0)". A single-leaf tree is the one line ": L (R.0/M.0)".
std::string serialize(const DecisionTree& tree);

/// Parses serialize() output. Lines starting with '#' and blank lines are
/// skipped; Weka's "|   " indentation and "(R.0)" leaves are accepted too.
DecisionTree parse_tree(std::string_view text);

inline constexpr std::string_view kModelHeader = "# konum-guard tree v1";

/// Model file contents: kModelHeader, a metadata comment, then serialize().
std::string model_file_text(const DecisionTree& tree);
void save_model(const std::string& path, const DecisionTree& tree);
DecisionTree load_model(const std::string& path);

}  // namespace konum
