#pragma once

#include <string_view>
#include <vector>

#include "konum/features.hpp"
#include "konum/gazetteer.hpp"
#include "konum/tree.hpp"

namespace konum {

struct Verdict {
  Label label = Label::Negative;
  FeatureVector features;
  std::vector<PathStep> path;
  std::vector<FeatureMatch> matches;
};

/// Feature extraction followed by tree prediction. Both the CLI and the HTTP
/// service classify through this type. Immutable once built.
class Detector {
 public:
  Detector(DecisionTree model, Gazetteers gazetteers)
      : model_(std::move(model)), gazetteers_(std::move(gazetteers)) {}

  Verdict inspect(std::string_view text) const;

  const DecisionTree& model() const { return model_; }
  const Gazetteers& gazetteers() const { return gazetteers_; }

 private:
  DecisionTree model_;
  Gazetteers gazetteers_;
};

}  // namespace konum
