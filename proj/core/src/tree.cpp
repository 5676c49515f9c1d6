#include "konum/tree.hpp"

#include <functional>
#include <stdexcept>

namespace konum {

void InducerParams::validate() const {
  if (min_leaf < 1) throw std::invalid_argument("min_leaf must be >= 1");
  if (!(confidence > 0.0 && confidence < 1.0)) throw std::invalid_argument("confidence must be in (0, 1)");
}

DecisionTree::DecisionTree(std::vector<Node> nodes, NodeId root, TreeInfo info)
    : nodes_(std::move(nodes)), root_(root), info_(std::move(info)) {
  if (root_ >= nodes_.size()) throw TreeError("root id out of range");
  std::vector<bool> seen(nodes_.size(), false);
  unsigned used = 0;  // feature bitmask along the current path

  std::function<void(NodeId)> check = [&](NodeId id) {
    if (id >= nodes_.size()) throw TreeError("child id out of range");
    if (seen[id]) throw TreeError("node " + std::to_string(id) + " is shared or cyclic");
    seen[id] = true;
    if (const auto* leaf = std::get_if<Leaf>(&nodes_[id])) {
      if (leaf->misclassified > leaf->reached) throw TreeError("leaf misclassified count exceeds reached count");
      return;
    }
    const auto& s = std::get<Split>(nodes_[id]);
    if (s.feature < 1 || s.feature > kFeatureCount) throw TreeError("feature index out of range");
    const unsigned bit = 1u << (s.feature - 1);
    if (used & bit) throw TreeError(feature_name(s.feature) + " repeated on a path");
    used |= bit;
    check(s.if_false);
    check(s.if_true);
    used &= ~bit;
  };
  check(root_);
}

DecisionTree DecisionTree::single_leaf(Leaf leaf, TreeInfo info) {
  return DecisionTree({leaf}, 0, std::move(info));
}

std::size_t DecisionTree::leaf_count() const {
  std::function<std::size_t(NodeId)> count = [&](NodeId id) -> std::size_t {
    if (std::holds_alternative<Leaf>(nodes_[id])) return 1;
    const auto& s = std::get<Split>(nodes_[id]);
    return count(s.if_false) + count(s.if_true);
  };
  return count(root_);
}

std::size_t DecisionTree::depth() const {
  std::function<std::size_t(NodeId)> d = [&](NodeId id) -> std::size_t {
    if (std::holds_alternative<Leaf>(nodes_[id])) return 0;
    const auto& s = std::get<Split>(nodes_[id]);
    return 1 + std::max(d(s.if_false), d(s.if_true));
  };
  return d(root_);
}

std::size_t DecisionTree::total_reached() const {
  std::function<std::size_t(NodeId)> sum = [&](NodeId id) -> std::size_t {
    if (const auto* leaf = std::get_if<Leaf>(&nodes_[id])) return leaf->reached;
    const auto& s = std::get<Split>(nodes_[id]);
    return sum(s.if_false) + sum(s.if_true);
  };
  return sum(root_);
}

Prediction DecisionTree::predict(const FeatureVector& fv) const {
  Prediction p;
  NodeId id = root_;
  while (const auto* s = std::get_if<Split>(&nodes_[id])) {
    const bool branch = fv[s->feature];
    p.path.push_back({s->feature, branch});
    id = branch ? s->if_true : s->if_false;
  }
  p.label = std::get<Leaf>(nodes_[id]).label;
  return p;
}

Label DecisionTree::classify(const FeatureVector& fv) const {
  NodeId id = root_;
  while (const auto* s = std::get_if<Split>(&nodes_[id])) id = fv[s->feature] ? s->if_true : s->if_false;
  return std::get<Leaf>(nodes_[id]).label;
}

bool DecisionTree::same_structure(const DecisionTree& other) const {
  std::function<bool(NodeId, NodeId)> eq = [&](NodeId a, NodeId b) {
    const auto& na = nodes_[a];
    const auto& nb = other.nodes_[b];
    if (na.index() != nb.index()) return false;
    if (const auto* la = std::get_if<Leaf>(&na)) return *la == std::get<Leaf>(nb);
    const auto& sa = std::get<Split>(na);
    const auto& sb = std::get<Split>(nb);
    return sa.feature == sb.feature && eq(sa.if_false, sb.if_false) && eq(sa.if_true, sb.if_true);
  };
  return eq(root_, other.root_);
}

NodeId TreeBuilder::leaf(Label label, std::size_t reached, std::size_t misclassified) {
  nodes_.push_back(Leaf{label, reached, misclassified});
  return static_cast<NodeId>(nodes_.size() - 1);
}

NodeId TreeBuilder::split(int feature, NodeId if_false, NodeId if_true) {
  nodes_.push_back(Split{feature, if_false, if_true});
  return static_cast<NodeId>(nodes_.size() - 1);
}

DecisionTree TreeBuilder::build(NodeId root, TreeInfo info) && {
  return DecisionTree(std::move(nodes_), root, std::move(info));
}

DecisionTree paper_reference_tree() {
  constexpr auto N = Label::Negative;
  constexpr auto P = Label::Positive;
  TreeBuilder b;
  const NodeId f3_split = b.split(3, b.leaf(N, 175, 3), b.split(2, b.leaf(N, 55, 17), b.leaf(P, 43, 15)));
  const NodeId f6_split = b.split(6, f3_split, b.leaf(P, 49, 5));
  const NodeId f5_split = b.split(5, b.leaf(N, 7, 1), b.leaf(P, 171, 14));
  const NodeId root = b.split(4, f6_split, f5_split);
  return std::move(b).build(root, TreeInfo{"paper-reference", std::nullopt, 500});
}

bool same_decision_function(const DecisionTree& a, const DecisionTree& b) {
  for (unsigned code = 0; code < (1u << kFeatureCount); ++code) {
    const auto fv = FeatureVector::from_code(code);
    if (a.classify(fv) != b.classify(fv)) return false;
  }
  return true;
}

}  // namespace konum
