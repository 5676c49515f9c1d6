#include "konum/detector.hpp"

namespace konum {

Verdict Detector::inspect(std::string_view text) const {
  auto extraction = extract_with_matches(text, gazetteers_);
  auto prediction = model_.predict(extraction.features);
  return Verdict{prediction.label, extraction.features, std::move(prediction.path), std::move(extraction.matches)};
}

}  // namespace konum
