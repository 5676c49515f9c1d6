#include <fstream>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "konum/synthetic.hpp"
#include <set>

namespace konum {
namespace {

const Gazetteers& bundled() {
  static const Gazetteers g = Gazetteers::load_directory(KONUM_GAZETTEER_DIR);
  return g;
}

TEST(SynthesizeText, FiresExactlyTheIntendedFeatures) {
  std::mt19937 rng(1);
  for (unsigned code = 0; code < 64; ++code) {
    for (int rep = 0; rep < 20; ++rep) {
      const auto fv = FeatureVector::from_code(code);
      const auto text = synthesize_text(fv, rng);
      EXPECT_EQ(extract(text, bundled()), fv) << text;
    }
  }
}

TEST(SynthesizeCorpus, BalancedWithExactNoise) {
  const auto tree = paper_reference_tree();
  const auto corpus = synthesize_corpus(tree, {});
  ASSERT_EQ(corpus.size(), 500u);
  EXPECT_EQ(count_classes(corpus).positive, 250u);

  std::size_t disagreements = 0;
  for (const auto& inst : featurize_corpus(corpus, bundled())) {
    disagreements += tree.classify(inst.features) != inst.label;
  }
  EXPECT_EQ(disagreements, 50u);  // 25 per class
}

TEST(SynthesizeCorpus, NoiselessFollowsLabeler) {
  const auto tree = paper_reference_tree();
  const auto instances = featurize_corpus(synthesize_corpus(tree, {200, 0.0, 9}), bundled());
  for (const auto& i : instances) EXPECT_EQ(tree.classify(i.features), i.label);
}

TEST(SynthesizeCorpus, DeterministicInSeed) {
  const auto tree = paper_reference_tree();
  EXPECT_EQ(synthesize_corpus(tree, {}), synthesize_corpus(tree, {}));
  EXPECT_NE(synthesize_corpus(tree, {500, 0.1, 1}), synthesize_corpus(tree, {500, 0.1, 2}));
}

TEST(SynthesizeCorpus, RejectsOddSize) {
  EXPECT_THROW(synthesize_corpus(paper_reference_tree(), {501, 0.1, 1}), std::invalid_argument);
}

TEST(BundledCorpus, MatchesGenerator) {
  std::ifstream in(KONUM_CORPUS_PATH);
  ASSERT_TRUE(in) << KONUM_CORPUS_PATH;
  EXPECT_EQ(load_corpus(in), synthesize_corpus(paper_reference_tree(), {}));
}

TEST(ExhaustiveInstances, CoversEveryVector) {
  const auto rows = exhaustive_instances(paper_reference_tree(), 3);
  EXPECT_EQ(rows.size(), 192u);
  std::set<unsigned> codes;
  for (const auto& r : rows) codes.insert(r.features.code());
  EXPECT_EQ(codes.size(), 64u);
}

}  // namespace
}  // namespace konum
