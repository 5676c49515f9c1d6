#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "konum/dataset.hpp"
#include "konum/tree.hpp"

namespace konum {

struct SyntheticOptions {
  std::size_t size = 500;     ///< must be even; half of each class
  double noise = 0.10;        ///< fraction of each class drawn from the other side of the labeler
  std::uint32_t seed = 1;
};

/// Builds a balanced corpus whose texts fire exactly the intended features
/// under the bundled gazetteers. In each class, round(noise * size / 2)
/// examples get a feature vector the labeler assigns to the opposite class
/// and the rest get a vector it assigns to this class; vectors are drawn
/// uniformly from the 64 combinations on the relevant side. The result is
/// shuffled. Same options, same corpus.
std::vector<LabeledExample> synthesize_corpus(const DecisionTree& labeler, const SyntheticOptions& options);

/// Every feature vector, each repeated `copies` times and labeled by `labeler`.
std::vector<Instance> exhaustive_instances(const DecisionTree& labeler, std::size_t copies);

/// One text that fires exactly the features set in fv.
std::string synthesize_text(const FeatureVector& fv, std::mt19937& rng);

/// Fisher-Yates driven directly by mt19937 output, so the permutation does
/// not depend on the standard library's distribution implementation.
template <typename T>
void seeded_shuffle(std::vector<T>& items, std::mt19937& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const std::size_t j = rng() % i;
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace konum
