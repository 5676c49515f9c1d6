// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <httplib.h>
#include <json.hpp>

#include "cli.hpp"
#include "fixtures/example_sentences.hpp"
#include "konum/eval.hpp"
#include "konum/induce.hpp"
#include "konum/service.hpp"
#include "konum/synthetic.hpp"
#include "oracles/entropy_oracle.hpp"
#include "oracles/feature_oracle.hpp"

namespace {

using namespace konum;
using Clock = std::chrono::steady_clock;

// Collects failed checks for one criterion.
struct Check {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

struct Criterion {
  std::string name;
  double budget_s;  // 0 = no runtime bound
  std::function<void(Check&)> body;
};

const Gazetteers& gazetteers() {
  static const Gazetteers g = Gazetteers::load_directory(KONUM_GAZETTEER_DIR);
  return g;
}

std::vector<Instance> bundled_instances() {
  return featurize_corpus(load_corpus_file(KONUM_CORPUS_PATH), gazetteers());
}

void paper_tree_fidelity(Check& c) {
  const auto tree = paper_reference_tree();
  c.expect(serialize(tree) == fixtures::kReferenceTreeText, "serialized text differs from the published listing");
  const auto parsed = parse_tree(fixtures::kReferenceTreeText);
  for (unsigned code = 0; code < 64; ++code) {
    const auto fv = FeatureVector::from_code(code);
    c.expect(parsed.classify(fv) == tree.classify(fv), "parsed tree disagrees on vector " + std::to_string(code));
  }
  c.expect(tree.total_reached() == 500, "leaf counts sum to " + std::to_string(tree.total_reached()));
}

void sentence_fixtures(Check& c) {
  const auto lists = oracle::Lists::load(KONUM_GAZETTEER_DIR);
  for (const auto& s : fixtures::kExampleSentences) {
    const std::string text(s.text);
    const auto fv = extract(text, gazetteers());
    std::array<bool, 6> got{};
    for (int f = 1; f <= 6; ++f) got[f - 1] = fv[f];
    c.expect(got == s.expected, "vector mismatch: " + text);
    c.expect(got[s.trigger - 1], "trigger feature not set: " + text);
    c.expect(oracle::features(text, lists) == s.expected, "oracle disagrees: " + text);
  }
}

void f1_irrelevance(Check& c) {
  const auto tree = paper_reference_tree();
  for (unsigned code = 0; code < 64; ++code) {
    const auto a = FeatureVector::from_code(code);
    const auto b = FeatureVector::from_code(code ^ 1u);  // bit 0 is f1
    c.expect(tree.classify(a) == tree.classify(b), "f1 toggles prediction at vector " + std::to_string(code));
  }
}

void induction_oracle(Check& c) {
  const auto paper = paper_reference_tree();
  const auto induced = induce(exhaustive_instances(paper, 1), {1, false, 0.25});
  c.expect(same_decision_function(induced, paper), "induced tree differs from the paper tree on some input");

  std::mt19937 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Instance> data(1 + rng() % 20);
    for (auto& r : data) r = {FeatureVector::from_code(rng() % 64), label_from_int(static_cast<int>(rng() % 2))};
    for (int f = 1; f <= 6; ++f) {
      std::vector<std::pair<int, int>> rows;
      for (const auto& r : data) rows.emplace_back(r.features[f] ? 1 : 0, to_int(r.label));
      const double diff = std::abs(gain_ratio(data, f) - oracle::gain_ratio(rows));
      c.expect(diff <= 1e-12, "gain ratio off by " + std::to_string(diff) + " in trial " + std::to_string(trial));
    }
  }
}

void evaluation_protocol(Check& c) {
  const auto data = bundled_instances();
  const auto cls = count_classes(data);
  c.expect(data.size() == 500 && cls.positive == 250, "bundled corpus is not 500 balanced instances");

  for (const auto& fold : stratified_kfold(data, 10, kDefaultSeed)) {
    std::size_t pos = 0;
    for (auto i : fold) pos += data[i].label == Label::Positive;
    c.expect(fold.size() == 50 && pos == 25,
             "fold of " + std::to_string(fold.size()) + " with " + std::to_string(pos) + " positives");
  }
  const auto split = percentage_split(data, 66, kDefaultSeed);
  c.expect(split.train.size() == 330 && split.test.size() == 170, "split 66 is not 330/170");

  const auto report = cross_validate({}, data, 10, kDefaultSeed);
  const double acc = report.correctly_classified_pct();
  std::printf("      10-fold CV accuracy at seed 1: %.2f%%\n", acc);
  c.expect(acc >= 80.0 && acc <= 95.0, "CV accuracy " + std::to_string(acc) + " outside [80, 95]");
}

void pipeline_consistency(Check& c) {
  const ClassificationService service(Detector(paper_reference_tree(), gazetteers()), ServiceConfig{});
  HttpServer server(service);
  const int port = server.bind_any_port("127.0.0.1");
  c.expect(port > 0, "cannot bind a loopback port");
  if (port <= 0) return;
  std::thread thread([&] { server.listen(); });
  server.wait_until_ready();
  httplib::Client client("127.0.0.1", port);

  std::mt19937 rng(7);
  std::size_t disagreements = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto text = synthesize_text(FeatureVector::from_code(rng() % 64), rng);
    std::ostringstream out, err;
    const int code = cli::run({"konum-guard", "predict", "--paper-tree", text}, out, err);
    const int cli_label = code == cli::kExitLocationShared ? 1 : code == 0 ? 0 : -1;

    const auto res = client.Post("/api/classify", nlohmann::json{{"text", text}}.dump(), "application/json");
    const int http_label = res && res->status == 200 ? nlohmann::json::parse(res->body)["label"].get<int>() : -2;
    if (cli_label != http_label) ++disagreements;
  }
  server.stop();
  thread.join();
  c.expect(disagreements == 0, std::to_string(disagreements) + " of 1000 texts disagree");

  const auto data = bundled_instances();
  std::istringstream table(export_table(data));
  c.expect(import_table(table) == data, "table export/import does not round-trip");

  c.expect(report_json(cross_validate({}, data, 10, 5)) == report_json(cross_validate({}, data, 10, 5)),
           "cross-validation report not reproducible");
  c.expect(report_json(evaluate_split({}, data, 66, 5)) == report_json(evaluate_split({}, data, 66, 5)),
           "split report not reproducible");
}

void service_contract(Check& c) {
  const ClassificationService service(Detector(paper_reference_tree(), gazetteers()), ServiceConfig{});
  for (const char* text : {"Eve gidiyorum", "Armada'ya yemeğe geldik.", "Ankara'da Kentpark'tayım"}) {
    const auto j = nlohmann::json::parse(service.handle_classify(nlohmann::json{{"text", text}}.dump()).body);
    c.expect(j["label"] == 1 && j["warning"] == "Konum paylasiyor olabilirsiniz!",
             std::string("wrong verdict or warning for ") + text);
  }
  const auto health = nlohmann::json::parse(service.handle_health().body);
  c.expect(health["gazetteers"]["cities"] == 81, "health does not report 81 cities");
  c.expect(health["model"]["leaves"] == 6, "health does not report 6 leaves");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"reference-tree fidelity", 1.0, paper_tree_fidelity},
      {"example-sentence fixtures", 0.0, sentence_fixtures},
      {"f1-irrelevance", 0.0, f1_irrelevance},
      {"induction oracle", 5.0, induction_oracle},
      {"evaluation protocol", 5.0, evaluation_protocol},
      {"pipeline consistency", 0.0, pipeline_consistency},
      {"service contract", 0.0, service_contract},
  };

  int failed = 0;
  for (const auto& criterion : criteria) {
    Check check;
    const auto start = Clock::now();
    try {
      criterion.body(check);
    } catch (const std::exception& e) {
      check.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (criterion.budget_s > 0 && secs >= criterion.budget_s)
      check.failures.push_back("took " + std::to_string(secs) + " s, budget " + std::to_string(criterion.budget_s) + " s");

    const bool ok = check.failures.empty();
    failed += !ok;
    std::printf("%s  %-26s %8.3f s\n", ok ? "PASS" : "FAIL", criterion.name.c_str(), secs);
    for (const auto& f : check.failures) std::printf("      - %s\n", f.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
