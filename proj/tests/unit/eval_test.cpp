#include <numeric>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include <json.hpp>

#include "konum/eval.hpp"
#include "konum/synthetic.hpp"

namespace konum {
namespace {

std::vector<Instance> balanced(std::size_t per_class, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::vector<Instance> out;
  for (int cls = 0; cls <= 1; ++cls)
    for (std::size_t i = 0; i < per_class; ++i) out.push_back({FeatureVector::from_code(rng() % 64), label_from_int(cls)});
  seeded_shuffle(out, rng);
  return out;
}

TEST(StratifiedKFold, BalancedCorpusGivesEqualFolds) {
  const auto data = balanced(250, 1);
  const auto folds = stratified_kfold(data, 10, 1);
  ASSERT_EQ(folds.size(), 10u);
  for (const auto& f : folds) {
    EXPECT_EQ(f.size(), 50u);
    std::size_t pos = 0;
    for (auto i : f) pos += data[i].label == Label::Positive;
    EXPECT_EQ(pos, 25u);
  }
}

TEST(StratifiedKFold, KOutOfRange) {
  const auto data = balanced(3, 1);
  EXPECT_THROW(stratified_kfold(data, 1, 1), EvalError);
  EXPECT_THROW(stratified_kfold(data, 7, 1), EvalError);
  EXPECT_NO_THROW(stratified_kfold(data, 6, 1));
}

TEST(StratifiedKFold, DeterministicInSeed) {
  const auto data = balanced(40, 2);
  EXPECT_EQ(stratified_kfold(data, 5, 7), stratified_kfold(data, 5, 7));
  EXPECT_NE(stratified_kfold(data, 5, 7), stratified_kfold(data, 5, 8));
}

TEST(StratifiedKFoldProperties, PartitionAndStratification) {
  std::mt19937 rng(47);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Instance> data(2 + rng() % 80);
    for (auto& r : data) r = {FeatureVector::from_code(rng() % 64), label_from_int(rng() % 2)};
    const std::size_t k = 2 + rng() % (data.size() - 1);
    const auto folds = stratified_kfold(data, k, static_cast<std::uint32_t>(rng()));

    std::multiset<std::size_t> seen;
    std::vector<std::size_t> pos, neg;
    for (const auto& f : folds) {
      ASSERT_FALSE(f.empty());
      seen.insert(f.begin(), f.end());
      std::size_t p = 0;
      for (auto i : f) p += data[i].label == Label::Positive;
      pos.push_back(p);
      neg.push_back(f.size() - p);
    }
    std::multiset<std::size_t> all;
    for (std::size_t i = 0; i < data.size(); ++i) all.insert(i);
    EXPECT_EQ(seen, all);  // disjoint and complete
    EXPECT_LE(*std::max_element(pos.begin(), pos.end()) - *std::min_element(pos.begin(), pos.end()), 1u);
    EXPECT_LE(*std::max_element(neg.begin(), neg.end()) - *std::min_element(neg.begin(), neg.end()), 1u);
  }
}

TEST(CrossValidate, NoiselessFunctionIsLearnedPerfectly) {
  const auto paper = paper_reference_tree();
  for (std::size_t k : {2u, 5u, 10u}) {
    const auto data = exhaustive_instances(paper, k);  // each vector k times
    const auto report = cross_validate({1, false, 0.25}, data, k, 1);
    EXPECT_DOUBLE_EQ(report.correctly_classified_pct(), 100.0) << k;
  }
}

TEST(CrossValidate, SingleClassIsPerfect) {
  std::vector<Instance> data(30, Instance{FeatureVector::from_code(5), Label::Positive});
  EXPECT_DOUBLE_EQ(cross_validate({}, data, 10, 1).correctly_classified_pct(), 100.0);
}

TEST(CrossValidate, ReportShape) {
  const auto data = balanced(50, 3);
  const auto r = cross_validate({}, data, 10, 1);
  EXPECT_EQ(r.per_fold.size(), 10u);
  std::size_t n = 0;
  for (auto& a : r.confusion) n += a[0] + a[1];
  EXPECT_EQ(n, data.size());
  EXPECT_DOUBLE_EQ(r.correctly_classified_pct(),
                   100.0 * static_cast<double>(r.confusion[0][0] + r.confusion[1][1]) / static_cast<double>(n));
  EXPECT_EQ(report_json(r), report_json(cross_validate({}, data, 10, 1)));
}

TEST(PercentageSplit, FloorArithmetic) {
  const auto data = balanced(250, 4);
  const auto s = percentage_split(data, 66, 1);
  EXPECT_EQ(s.train.size(), 330u);
  EXPECT_EQ(s.test.size(), 170u);
  const auto odd = percentage_split(balanced(5, 4), 66, 1);  // floor(6.6)
  EXPECT_EQ(odd.train.size(), 6u);
}

TEST(PercentageSplit, Errors) {
  const auto data = balanced(5, 4);
  EXPECT_THROW(percentage_split(data, 100, 1), EvalError);
  EXPECT_THROW(percentage_split(data, 0, 1), EvalError);
  EXPECT_THROW(percentage_split(data, 5, 1), EvalError);  // floor(0.5) = 0 training rows
}

TEST(PercentageSplit, DeterministicInSeed) {
  const auto data = balanced(100, 5);
  const auto a = percentage_split(data, 66, 3);
  const auto b = percentage_split(data, 66, 3);
  EXPECT_EQ(a.train, b.train);
  EXPECT_EQ(a.test, b.test);
  const auto r = evaluate_split({}, data, 66, 3);
  EXPECT_EQ(r.test_size, 68u);
  EXPECT_EQ(report_json(r), report_json(evaluate_split({}, data, 66, 3)));
}

TEST(Compare, MajorityBaselineNeverOutranksFullTree) {
  const auto data = exhaustive_instances(paper_reference_tree(), 10);
  // A single-leaf majority model: no split can leave n instances on both sides.
  const std::vector<ComparisonConfig> configs = {
      {"majority", {data.size(), false, 0.25}, CrossValidation{10, 1}},
      {"full", {1, false, 0.25}, CrossValidation{10, 1}},
  };
  const auto rows = compare(configs, data);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].name, "full");
  EXPECT_DOUBLE_EQ(rows[0].correctly_classified_pct, 100.0);
  EXPECT_LT(rows[1].correctly_classified_pct, 100.0);
}

TEST(Compare, OrderingAndTies) {
  const auto data = balanced(40, 6);
  const std::vector<ComparisonConfig> configs = {
      {"a", {}, CrossValidation{5, 1}},
      {"b", {}, CrossValidation{5, 1}},  // identical: must stay after "a"
      {"c", {}, PercentageSplit{50, 1}},
  };
  const auto rows = compare(configs, data);
  ASSERT_EQ(rows.size(), 3u);
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_GE(rows[i - 1].correctly_classified_pct, rows[i].correctly_classified_pct);
  const auto a = std::find_if(rows.begin(), rows.end(), [](auto& r) { return r.name == "a"; });
  const auto b = std::find_if(rows.begin(), rows.end(), [](auto& r) { return r.name == "b"; });
  EXPECT_LT(a, b);
  EXPECT_EQ(compare(std::vector<ComparisonConfig>{configs[0]}, data).size(), 1u);
  EXPECT_THROW(compare(std::vector<ComparisonConfig>{}, data), EvalError);
}

TEST(ReportJson, Fields) {
  const auto r = cross_validate({}, balanced(20, 8), 4, 9);
  const auto j = nlohmann::json::parse(report_json(r));
  EXPECT_EQ(j["protocol"], "cv-4");
  EXPECT_EQ(j["seed"], 9);
  EXPECT_EQ(j["per_fold"].size(), 4u);
  EXPECT_EQ(j["confusion"].size(), 2u);
  EXPECT_DOUBLE_EQ(j["accuracy_pct"].get<double>(), r.correctly_classified_pct());
  EXPECT_NE(report_table(r).find("Correctly Classified Instances"), std::string::npos);
}

}  // namespace
}  // namespace konum
