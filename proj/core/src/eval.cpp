#include "konum/eval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include <json.hpp>

#include "konum/induce.hpp"
#include "konum/synthetic.hpp"

namespace konum {

namespace {

std::string format_pct(double pct) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", pct);
  return buf;
}

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

void score(const DecisionTree& tree, std::span<const Instance> test, Confusion& confusion) {
  for (const auto& inst : test) {
    confusion[static_cast<std::size_t>(to_int(inst.label))][static_cast<std::size_t>(to_int(tree.classify(inst.features)))]++;
  }
}

std::size_t total(const Confusion& c) { return c[0][0] + c[0][1] + c[1][0] + c[1][1]; }

std::uint32_t seed_of(const Protocol& p) {
  return std::visit([](const auto& v) { return v.seed; }, p);
}

}  // namespace

std::string describe(const Protocol& protocol) {
  if (const auto* cv = std::get_if<CrossValidation>(&protocol)) return "cv-" + std::to_string(cv->folds);
  return "split-" + format_number(std::get<PercentageSplit>(protocol).train_pct);
}

double EvalReport::correctly_classified_pct() const {
  const auto n = total(confusion);
  if (n == 0) return 0.0;
  return 100.0 * static_cast<double>(confusion[0][0] + confusion[1][1]) / static_cast<double>(n);
}

std::vector<Fold> stratified_kfold(std::span<const Instance> instances, std::size_t k, std::uint32_t seed) {
  if (k < 2 || k > instances.size()) {
    throw EvalError("number of folds must be between 2 and the number of instances (" +
                    std::to_string(instances.size()) + "), got " + std::to_string(k));
  }
  std::array<std::vector<std::size_t>, 2> by_class;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    by_class[static_cast<std::size_t>(to_int(instances[i].label))].push_back(i);
  }
  std::mt19937 rng(seed);
  std::vector<Fold> folds(k);
  std::size_t next = 0;
  for (auto& members : by_class) {
    seeded_shuffle(members, rng);
    for (auto idx : members) {
      folds[next].push_back(idx);
      next = (next + 1) % k;
    }
  }
  for (auto& f : folds) std::sort(f.begin(), f.end());
  return folds;
}

EvalReport cross_validate(const InducerParams& params, std::span<const Instance> instances, std::size_t k,
                          std::uint32_t seed) {
  const auto folds = stratified_kfold(instances, k, seed);
  EvalReport report{CrossValidation{k, seed}, {}, {}, 0, instances.size()};

  std::vector<int> fold_of(instances.size());
  for (std::size_t f = 0; f < k; ++f) {
    for (auto idx : folds[f]) fold_of[idx] = static_cast<int>(f);
  }
  for (std::size_t f = 0; f < k; ++f) {
    std::vector<Instance> train;
    std::vector<Instance> test;
    for (std::size_t i = 0; i < instances.size(); ++i) {
      (fold_of[i] == static_cast<int>(f) ? test : train).push_back(instances[i]);
    }
    const auto tree = induce(train, params);
    Confusion fold_confusion{};
    score(tree, test, fold_confusion);
    for (int a = 0; a < 2; ++a)
      for (int p = 0; p < 2; ++p) report.confusion[a][p] += fold_confusion[a][p];
    report.per_fold.push_back(100.0 * static_cast<double>(fold_confusion[0][0] + fold_confusion[1][1]) /
                              static_cast<double>(test.size()));
  }
  return report;
}

TrainTest percentage_split(std::span<const Instance> instances, double train_pct, std::uint32_t seed) {
  if (!(train_pct > 0.0 && train_pct < 100.0)) {
    throw EvalError("training percentage must be strictly between 0 and 100, got " + format_number(train_pct));
  }
  const auto n_train = static_cast<std::size_t>(std::floor(static_cast<double>(instances.size()) * train_pct / 100.0));
  if (n_train == 0 || n_train == instances.size()) {
    throw EvalError("percentage split leaves an empty training or test set");
  }
  std::vector<Instance> shuffled(instances.begin(), instances.end());
  std::mt19937 rng(seed);
  seeded_shuffle(shuffled, rng);
  TrainTest out;
  out.train.assign(shuffled.begin(), shuffled.begin() + static_cast<std::ptrdiff_t>(n_train));
  out.test.assign(shuffled.begin() + static_cast<std::ptrdiff_t>(n_train), shuffled.end());
  return out;
}

EvalReport evaluate_split(const InducerParams& params, std::span<const Instance> instances, double train_pct,
                          std::uint32_t seed) {
  const auto split = percentage_split(instances, train_pct, seed);
  EvalReport report{PercentageSplit{train_pct, seed}, {}, {}, split.train.size(), split.test.size()};
  score(induce(split.train, params), split.test, report.confusion);
  return report;
}

EvalReport evaluate(const InducerParams& params, const Protocol& protocol, std::span<const Instance> instances) {
  if (const auto* cv = std::get_if<CrossValidation>(&protocol)) return cross_validate(params, instances, cv->folds, cv->seed);
  const auto& split = std::get<PercentageSplit>(protocol);
  return evaluate_split(params, instances, split.train_pct, split.seed);
}

std::vector<ComparisonRow> compare(std::span<const ComparisonConfig> configs, std::span<const Instance> instances) {
  if (configs.empty()) throw EvalError("no configurations to compare");
  std::vector<ComparisonRow> rows;
  for (const auto& c : configs) {
    rows.push_back({c.name, describe(c.protocol), evaluate(c.params, c.protocol, instances).correctly_classified_pct()});
  }
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    return a.correctly_classified_pct > b.correctly_classified_pct;
  });
  return rows;
}

std::string report_json(const EvalReport& report) {
  nlohmann::ordered_json j;
  j["protocol"] = describe(report.protocol);
  j["seed"] = seed_of(report.protocol);
  j["accuracy_pct"] = report.correctly_classified_pct();
  j["confusion"] = {{report.confusion[0][0], report.confusion[0][1]}, {report.confusion[1][0], report.confusion[1][1]}};
  j["per_fold"] = report.per_fold;
  if (std::holds_alternative<PercentageSplit>(report.protocol)) {
    j["train_size"] = report.train_size;
    j["test_size"] = report.test_size;
  }
  return j.dump(2) + "\n";
}

std::string report_table(const EvalReport& report) {
  const auto n = total(report.confusion);
  const auto correct = report.confusion[0][0] + report.confusion[1][1];
  std::ostringstream out;
  out << "Protocol:                         " << describe(report.protocol) << " (seed "
      << seed_of(report.protocol) << ")\n";
  if (std::holds_alternative<PercentageSplit>(report.protocol)) {
    out << "Training instances:               " << report.train_size << '\n';
  }
  out << "Test instances:                   " << n << '\n';
  out << "Correctly Classified Instances    " << correct << "  " << format_pct(report.correctly_classified_pct()) << " %\n";
  out << "Incorrectly Classified Instances  " << (n - correct) << "  "
      << format_pct(n == 0 ? 0.0 : 100.0 - report.correctly_classified_pct()) << " %\n";
  out << "\n=== Confusion Matrix ===\n\n";
  out << "   a   b   <-- classified as\n";
  char buf[64];
  std::snprintf(buf, sizeof buf, " %3zu %3zu |   a = 0\n", report.confusion[0][0], report.confusion[0][1]);
  out << buf;
  std::snprintf(buf, sizeof buf, " %3zu %3zu |   b = 1\n", report.confusion[1][0], report.confusion[1][1]);
  out << buf;
  if (!report.per_fold.empty()) {
    out << "\nPer-fold accuracy (%):";
    for (double a : report.per_fold) out << ' ' << format_pct(a);
    out << '\n';
  }
  return out.str();
}

std::string comparison_table(std::span<const ComparisonRow> rows) {
  std::ostringstream out;
  char buf[160];
  std::snprintf(buf, sizeof buf, "%-28s %-12s %s\n", "Configuration", "Protocol", "Correctly Classified (%)");
  out << buf;
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%-28s %-12s %.4f\n", r.name.c_str(), r.protocol.c_str(), r.correctly_classified_pct);
    out << buf;
  }
  return out.str();
}

}  // namespace konum
