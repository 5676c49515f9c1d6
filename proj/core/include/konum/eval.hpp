#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "konum/dataset.hpp"
#include "konum/tree.hpp"

namespace konum {

inline constexpr std::uint32_t kDefaultSeed = 1;

using Fold = std::vector<std::size_t>;  ///< indices into the instance sequence

struct CrossValidation {
  std::size_t folds = 10;
  std::uint32_t seed = kDefaultSeed;
};

struct PercentageSplit {
  double train_pct = 66.0;
  std::uint32_t seed = kDefaultSeed;
};

using Protocol = std::variant<CrossValidation, PercentageSplit>;

std::string describe(const Protocol& protocol);  // "cv-10" or "split-66"

/// confusion[actual][predicted]
using Confusion = std::array<std::array<std::size_t, 2>, 2>;

struct EvalReport {
  Protocol protocol;
  Confusion confusion{};
  std::vector<double> per_fold;  ///< fold accuracies in percent, cross-validation only
  std::size_t train_size = 0;    ///< percentage split only
  std::size_t test_size = 0;

  double correctly_classified_pct() const;
};

class EvalError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Stratified assignment: each class is shuffled by seed, then dealt
/// round-robin across folds, the positive class continuing where the
/// negative class stopped. Per-class counts across folds differ by at most
/// one. Throws EvalError unless 2 <= k <= instances.size().
std::vector<Fold> stratified_kfold(std::span<const Instance> instances, std::size_t k, std::uint32_t seed);

EvalReport cross_validate(const InducerParams& params, std::span<const Instance> instances, std::size_t k,
                          std::uint32_t seed);

struct TrainTest {
  std::vector<Instance> train;
  std::vector<Instance> test;
};

/// Shuffles by seed; the first floor(n * pct / 100) instances train, the
/// rest test. Throws EvalError when either side would be empty.
TrainTest percentage_split(std::span<const Instance> instances, double train_pct, std::uint32_t seed);

EvalReport evaluate_split(const InducerParams& params, std::span<const Instance> instances, double train_pct,
                          std::uint32_t seed);

EvalReport evaluate(const InducerParams& params, const Protocol& protocol, std::span<const Instance> instances);

struct ComparisonConfig {
  std::string name;
  InducerParams params;
  Protocol protocol;
};

struct ComparisonRow {
  std::string name;
  std::string protocol;
  double correctly_classified_pct = 0.0;
};

/// Evaluates each configuration and sorts rows by descending accuracy;
/// equal accuracies keep input order.
std::vector<ComparisonRow> compare(std::span<const ComparisonConfig> configs, std::span<const Instance> instances);

/// Machine-readable report: protocol, seed, accuracy_pct, confusion, per_fold
/// (plus train_size/test_size for splits).
std::string report_json(const EvalReport& report);
/// Human-readable summary in the spirit of Weka's evaluation output.
std::string report_table(const EvalReport& report);
std::string comparison_table(std::span<const ComparisonRow> rows);

}  // namespace konum
