#pragma once

#include <array>
#include <cstddef>
#include <span>

#include "konum/dataset.hpp"
#include "konum/tree.hpp"

namespace konum {

/// Instance counts indexed by class: [negative, positive].
using ClassCounts = std::array<std::size_t, 2>;

/// Binary Shannon entropy in bits, with 0*log(0) = 0.
/// Throws std::invalid_argument if both counts are zero.
double entropy(ClassCounts counts);

/// Information gain of splitting on `feature` divided by the split
/// information of that feature's value distribution. 0 when the feature is
/// constant over the instances. Throws std::invalid_argument on empty input.
double gain_ratio(std::span<const Instance> instances, int feature);

/// Pessimistic error estimate added to `errors` observed among `n`
/// instances, at pruning confidence `confidence` (upper confidence bound of
/// the binomial, normal approximation above one error).
double pessimistic_extra_errors(double n, double errors, double confidence);

/// Top-down C4.5 induction over the binary features. At each node the unused
/// feature with the largest positive gain ratio is chosen (lowest index wins
/// ties) among splits that leave at least min_leaf instances on both sides.
/// Leaves take the majority class, ties going to class 0. With pruning on,
/// subtrees are replaced bottom-up by a leaf whenever the leaf's pessimistic
/// error estimate is no worse. Throws std::invalid_argument on empty input.
DecisionTree induce(std::span<const Instance> instances, const InducerParams& params = {});

}  // namespace konum
