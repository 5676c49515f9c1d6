#include "konum/synthetic.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string_view>

namespace konum {

namespace {

template <std::size_t N>
std::string_view pick(const std::array<std::string_view, N>& pool, std::mt19937& rng) {
  return pool[rng() % N];
}

// Phrase pools. Each trigger fires only its own feature, and filler words
// fire nothing, under the bundled gazetteers.
constexpr std::array<std::string_view, 5> kLocativeCopula = {"buradayım", "yoldayım", "oradayım", "sıradayım",
                                                             "dışarıdayım"};
constexpr std::array<std::string_view, 5> kLocativeWord = {"sonunda", "aslında", "bende", "sende", "yanında"};
constexpr std::array<std::string_view, 8> kPlaceWord = {"okul", "ev", "kafe", "restoran",
                                                        "hastane", "sinema", "kütüphane", "ofis"};
constexpr std::array<std::string_view, 7> kCity = {"Ankara", "İzmir", "Bursa", "Konya",
                                                   "Antalya", "Trabzon", "Eskişehir"};
constexpr std::array<std::string_view, 7> kVenue = {"Kentpark", "Ankamall", "Cepa", "Marco Pascha",
                                                    "Kanyon", "Zorlu Center", "Starbucks"};
constexpr std::array<std::string_view, 5> kMotionVerb = {"geldim", "geldik", "gidiyorum", "gittik", "vardım"};
constexpr std::array<std::string_view, 20> kFiller = {
    "bugün", "hava",  "çok",   "güzel",   "bir",    "yine",      "biraz",    "ama",    "ve",    "harika",
    "sıkıcı", "film", "kitap", "maç",     "müzik",  "çay",       "herkes",   "yeni",   "gün",   "bitti"};

}  // namespace

std::string synthesize_text(const FeatureVector& fv, std::mt19937& rng) {
  std::vector<std::string_view> words;
  const std::size_t fillers = 2 + rng() % 3;
  for (std::size_t i = 0; i < fillers; ++i) words.push_back(pick(kFiller, rng));

  auto insert = [&](std::string_view w) {
    const std::size_t at = rng() % (words.size() + 1);
    words.insert(words.begin() + static_cast<std::ptrdiff_t>(at), w);
  };
  if (fv[1]) insert(pick(kLocativeCopula, rng));
  if (fv[2]) insert(pick(kLocativeWord, rng));
  if (fv[3]) insert(pick(kPlaceWord, rng));
  if (fv[4]) insert(pick(kCity, rng));
  if (fv[5]) insert(pick(kVenue, rng));
  if (fv[6]) insert(pick(kMotionVerb, rng));

  std::string text;
  for (const auto w : words) {
    if (!text.empty()) text += ' ';
    text += w;
  }
  constexpr std::array<std::string_view, 3> kEndings = {"", ".", "!"};
  text += pick(kEndings, rng);
  return text;
}

std::vector<LabeledExample> synthesize_corpus(const DecisionTree& labeler, const SyntheticOptions& options) {
  if (options.size == 0 || options.size % 2 != 0) throw std::invalid_argument("synthetic corpus size must be even and positive");
  if (!(options.noise >= 0.0 && options.noise <= 1.0)) throw std::invalid_argument("noise must be in [0, 1]");

  std::array<std::vector<FeatureVector>, 2> by_class;
  for (unsigned code = 0; code < (1u << kFeatureCount); ++code) {
    const auto fv = FeatureVector::from_code(code);
    by_class[static_cast<std::size_t>(to_int(labeler.classify(fv)))].push_back(fv);
  }

  const std::size_t per_class = options.size / 2;
  const auto noisy = static_cast<std::size_t>(std::llround(options.noise * static_cast<double>(per_class)));

  std::mt19937 rng(options.seed);
  std::vector<LabeledExample> out;
  out.reserve(options.size);
  for (int cls = 0; cls <= 1; ++cls) {
    const auto& agree = by_class[static_cast<std::size_t>(cls)];
    const auto& disagree = by_class[static_cast<std::size_t>(1 - cls)];
    for (std::size_t i = 0; i < per_class; ++i) {
      const auto& pool = i < noisy ? disagree : agree;
      if (pool.empty()) throw std::invalid_argument("labeler never predicts one of the classes");
      const auto& fv = pool[rng() % pool.size()];
      out.push_back({synthesize_text(fv, rng), label_from_int(cls)});
    }
  }
  seeded_shuffle(out, rng);
  return out;
}

std::vector<Instance> exhaustive_instances(const DecisionTree& labeler, std::size_t copies) {
  std::vector<Instance> out;
  for (unsigned code = 0; code < (1u << kFeatureCount); ++code) {
    const auto fv = FeatureVector::from_code(code);
    for (std::size_t c = 0; c < copies; ++c) out.push_back({fv, labeler.classify(fv)});
  }
  return out;
}

}  // namespace konum
