#include "konum/induce.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>
#include <vector>

#include <boost/math/distributions/normal.hpp>

namespace konum {

namespace {

constexpr double kGainEpsilon = 1e-12;

double plogp(double p) { return p > 0.0 ? p * std::log2(p) : 0.0; }

struct SplitStats {
  ClassCounts total{};
  std::array<ClassCounts, 2> by_value{};  // [feature value][class]
};

void add(SplitStats& st, const Instance& inst, int feature) {
  const auto cls = static_cast<std::size_t>(to_int(inst.label));
  st.total[cls]++;
  st.by_value[inst.features[feature] ? 1 : 0][cls]++;
}

std::size_t sum(const ClassCounts& c) { return c[0] + c[1]; }

double gain_ratio_of(const SplitStats& st) {
  const double n = static_cast<double>(sum(st.total));
  const double n0 = static_cast<double>(sum(st.by_value[0]));
  const double n1 = static_cast<double>(sum(st.by_value[1]));
  if (n0 == 0.0 || n1 == 0.0) return 0.0;

  const double conditional = (n0 / n) * entropy(st.by_value[0]) + (n1 / n) * entropy(st.by_value[1]);
  const double gain = entropy(st.total) - conditional;
  const double split_info = entropy({sum(st.by_value[0]), sum(st.by_value[1])});
  return gain <= kGainEpsilon ? 0.0 : gain / split_info;
}

// Working node during induction; flattened into a DecisionTree at the end.
struct Grown {
  ClassCounts counts{};
  int feature = 0;  // 0 for a leaf
  std::unique_ptr<Grown> child[2];

  bool is_leaf() const { return feature == 0; }
  Label majority() const { return counts[1] > counts[0] ? Label::Positive : Label::Negative; }
  std::size_t errors_as_leaf() const { return std::min(counts[0], counts[1]); }
};

class Inducer {
 public:
  Inducer(std::span<const Instance> data, const InducerParams& params) : data_(data), params_(params) {}

  std::unique_ptr<Grown> grow(const std::vector<std::size_t>& rows, unsigned used) {
    auto node = std::make_unique<Grown>();
    for (auto r : rows) node->counts[static_cast<std::size_t>(to_int(data_[r].label))]++;
    if (node->counts[0] == 0 || node->counts[1] == 0) return node;

    int best = 0;
    double best_ratio = 0.0;
    for (int f = 1; f <= kFeatureCount; ++f) {
      if (used & (1u << (f - 1))) continue;
      const SplitStats st = tally(rows, f);
      if (sum(st.by_value[0]) < params_.min_leaf || sum(st.by_value[1]) < params_.min_leaf) continue;
      const double ratio = gain_ratio_of(st);
      if (ratio > best_ratio) {
        best_ratio = ratio;
        best = f;
      }
    }
    if (best == 0) return node;

    std::vector<std::size_t> parts[2];
    for (auto r : rows) parts[data_[r].features[best] ? 1 : 0].push_back(r);
    node->feature = best;
    for (int v = 0; v < 2; ++v) node->child[v] = grow(parts[v], used | (1u << (best - 1)));
    return node;
  }

 private:
  SplitStats tally(const std::vector<std::size_t>& rows, int feature) const {
    SplitStats st;
    for (auto r : rows) add(st, data_[r], feature);
    return st;
  }

  std::span<const Instance> data_;
  const InducerParams& params_;
};

// Returns the pessimistic error estimate of the (possibly pruned) subtree.
double prune(Grown& node, double confidence) {
  const double n = static_cast<double>(sum(node.counts));
  const double leaf_errors = static_cast<double>(node.errors_as_leaf());
  const double as_leaf = leaf_errors + pessimistic_extra_errors(n, leaf_errors, confidence);
  if (node.is_leaf()) return as_leaf;

  const double as_subtree = prune(*node.child[0], confidence) + prune(*node.child[1], confidence);
  if (as_leaf <= as_subtree + 0.1) {
    node.feature = 0;
    node.child[0].reset();
    node.child[1].reset();
    return as_leaf;
  }
  return as_subtree;
}

NodeId emit(const Grown& node, TreeBuilder& b) {
  if (node.is_leaf()) return b.leaf(node.majority(), sum(node.counts), node.errors_as_leaf());
  const NodeId f = emit(*node.child[0], b);
  const NodeId t = emit(*node.child[1], b);
  return b.split(node.feature, f, t);
}

}  // namespace

double entropy(ClassCounts counts) {
  const double n = static_cast<double>(counts[0] + counts[1]);
  if (n == 0.0) throw std::invalid_argument("entropy of an empty class distribution");
  return -(plogp(static_cast<double>(counts[0]) / n) + plogp(static_cast<double>(counts[1]) / n));
}

double gain_ratio(std::span<const Instance> instances, int feature) {
  if (instances.empty()) throw std::invalid_argument("gain_ratio of an empty instance set");
  if (feature < 1 || feature > kFeatureCount) throw std::invalid_argument("feature index out of range");
  SplitStats st;
  for (const auto& inst : instances) add(st, inst, feature);
  return gain_ratio_of(st);
}

double pessimistic_extra_errors(double n, double errors, double confidence) {
  if (n <= 0.0) return 0.0;
  if (errors < 1.0) {
    // Exact binomial bound for zero errors, interpolated up to one error.
    const double base = n * (1.0 - std::pow(confidence, 1.0 / n));
    if (errors == 0.0) return base;
    return base + errors * (pessimistic_extra_errors(n, 1.0, confidence) - base);
  }
  if (errors + 0.5 >= n) return std::max(n - errors, 0.0);

  const double z = boost::math::quantile(boost::math::normal(), 1.0 - confidence);
  const double f = (errors + 0.5) / n;
  const double upper = (f + z * z / (2.0 * n) + z * std::sqrt(f / n - f * f / n + z * z / (4.0 * n * n))) /
                       (1.0 + z * z / n);
  return upper * n - errors;
}

DecisionTree induce(std::span<const Instance> instances, const InducerParams& params) {
  if (instances.empty()) throw std::invalid_argument("cannot induce a tree from an empty instance set");
  params.validate();

  std::vector<std::size_t> all(instances.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  auto root = Inducer(instances, params).grow(all, 0);
  if (params.pruning) prune(*root, params.confidence);

  TreeBuilder b;
  const NodeId id = emit(*root, b);
  return std::move(b).build(id, TreeInfo{"c4.5", params, instances.size()});
}

}  // namespace konum
