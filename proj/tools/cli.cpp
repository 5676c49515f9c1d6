#include "cli.hpp"

#include <csignal>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "konum/dataset.hpp"
#include "konum/detector.hpp"
#include "konum/eval.hpp"
#include "konum/induce.hpp"
#include "konum/service.hpp"
#include "konum/synthetic.hpp"
#include "konum/tree.hpp"

#ifndef KONUM_DEFAULT_GAZETTEER_DIR
#define KONUM_DEFAULT_GAZETTEER_DIR "data/gazetteers"
#endif

namespace konum::cli {

namespace {

struct RunConfig {
  std::string corpus;
  std::string gazetteer_dir = KONUM_DEFAULT_GAZETTEER_DIR;
  std::string model_path;
  bool paper_tree = false;
  std::uint32_t seed = kDefaultSeed;
  std::size_t folds = 10;
  double split_pct = 66.0;
  std::size_t min_leaf = 2;
  bool prune = false;
  double confidence = 0.25;
  int port = 8077;
  std::string host = "127.0.0.1";
  std::string out;
  std::string text;
  std::string warning = "ascii";
  std::string cors_origin = "*";
  bool compare = false;
  std::size_t size = 500;
  double noise = 0.10;
};

InducerParams params_of(const RunConfig& c) {
  InducerParams p;
  p.min_leaf = c.min_leaf;
  p.pruning = c.prune;
  p.confidence = c.confidence;
  p.validate();
  return p;
}

// --paper-tree wins; otherwise --model; with neither, the paper tree.
DecisionTree load_selected_model(const RunConfig& c) {
  if (c.paper_tree || c.model_path.empty()) return paper_reference_tree();
  return load_model(c.model_path);
}

std::vector<Instance> load_instances(const RunConfig& c) {
  const auto gazetteers = Gazetteers::load_directory(c.gazetteer_dir);
  const auto corpus = load_corpus_file(c.corpus);
  return featurize_corpus(corpus, gazetteers);
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << contents;
  f.flush();
  if (!f) throw std::runtime_error("error writing " + path);
}

int cmd_extract(const RunConfig& c, std::ostream& out) {
  const auto instances = load_instances(c);
  if (c.out.empty()) {
    export_table(out, instances);
  } else {
    write_file(c.out, export_table(instances));
  }
  return 0;
}

int cmd_train(const RunConfig& c, std::ostream& out) {
  const auto instances = load_instances(c);
  if (instances.empty()) throw std::runtime_error("corpus " + c.corpus + " is empty");
  const auto tree = induce(instances, params_of(c));
  save_model(c.out, tree);
  out << serialize(tree);
  return 0;
}

int cmd_predict(const RunConfig& c, std::ostream& out) {
  const Detector detector(load_selected_model(c), Gazetteers::load_directory(c.gazetteer_dir));
  const auto v = detector.inspect(c.text);
  out << "label: " << to_int(v.label) << '\n';
  out << "features:";
  for (int f = 1; f <= kFeatureCount; ++f) out << ' ' << feature_name(f) << '=' << (v.features[f] ? 1 : 0);
  out << "\npath:";
  for (const auto& step : v.path) out << ' ' << feature_name(step.feature) << '=' << (step.branch ? 1 : 0);
  out << "\nmatched:";
  for (const auto& m : v.matches) out << ' ' << feature_name(m.feature) << "=\"" << m.term << '"';
  out << '\n';
  if (v.label == Label::Positive) {
    out << "warning: " << kWarningAscii << '\n';
    return kExitLocationShared;
  }
  return 0;
}

int cmd_eval(const RunConfig& c, bool split_given, std::ostream& out) {
  const auto instances = load_instances(c);
  const auto params = params_of(c);

  if (c.compare) {
    std::vector<ComparisonConfig> configs;
    for (std::size_t ml : {std::size_t{1}, std::size_t{2}, std::size_t{5}}) {
      for (bool prune : {false, true}) {
        InducerParams p{ml, prune, c.confidence};
        const std::string name = "c4.5 min_leaf=" + std::to_string(ml) + (prune ? " pruned" : "");
        configs.push_back({name, p, CrossValidation{c.folds, c.seed}});
        configs.push_back({name, p, PercentageSplit{c.split_pct, c.seed}});
      }
    }
    const auto rows = compare(configs, instances);
    out << comparison_table(rows);
    return 0;
  }

  const Protocol protocol = split_given ? Protocol{PercentageSplit{c.split_pct, c.seed}}
                                        : Protocol{CrossValidation{c.folds, c.seed}};
  const auto report = evaluate(params, protocol, instances);
  out << report_table(report);
  const std::string path = c.out.empty() ? "eval-report.json" : c.out;
  write_file(path, report_json(report));
  out << "JSON report written to " << path << '\n';
  return 0;
}

HttpServer* g_server = nullptr;

extern "C" void stop_on_signal(int) {
  if (g_server) g_server->stop();
}

int cmd_serve(const RunConfig& c, bool model_given, std::ostream& out, std::ostream& err) {
  ServiceConfig config;
  if (c.warning == "diacritic") config.warning = std::string(kWarningDiacritic);
  config.cors_origin = c.cors_origin;
  config.model_label = (c.paper_tree || !model_given) ? "paper-tree" : "trained";

  const ClassificationService service(Detector(load_selected_model(c), Gazetteers::load_directory(c.gazetteer_dir)),
                                      config);
  HttpServer server(service);
  if (!server.bind(c.host, c.port)) {
    err << "error: cannot bind " << c.host << ':' << c.port << " (port in use?)\n";
    return 1;
  }
  out << "serving on http://" << c.host << ':' << c.port << " (model: " << config.model_label << ")\n";
  out.flush();
  g_server = &server;
  std::signal(SIGINT, stop_on_signal);
  std::signal(SIGTERM, stop_on_signal);
  const bool ok = server.listen();
  g_server = nullptr;
  return ok ? 0 : 1;
}

int cmd_synth(const RunConfig& c, std::ostream& out) {
  SyntheticOptions options;
  options.size = c.size;
  options.noise = c.noise;
  options.seed = c.seed;
  const auto corpus = synthesize_corpus(paper_reference_tree(), options);
  if (c.out.empty()) {
    write_corpus(out, corpus);
  } else {
    std::ostringstream buf;
    write_corpus(buf, corpus);
    write_file(c.out, buf.str());
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"konum-guard: implicit location sharing detection for Turkish short text", "konum-guard"};
  app.require_subcommand(1);

  auto add_gazetteers = [&](CLI::App* sub) {
    sub->add_option("--gazetteers", c.gazetteer_dir, "Directory holding cities.txt, special_words.txt, verbs.txt, venues.txt")
        ->capture_default_str();
  };
  auto add_inducer = [&](CLI::App* sub) {
    sub->add_option("--min-leaf", c.min_leaf, "Minimum instances per leaf")->capture_default_str()->check(CLI::PositiveNumber);
    sub->add_flag("--prune", c.prune, "Enable pessimistic pruning");
    sub->add_option("--confidence", c.confidence, "Pruning confidence")->capture_default_str()->check(CLI::Range(0.0, 1.0));
  };
  auto add_model = [&](CLI::App* sub) {
    auto* model = sub->add_option("--model", c.model_path, "Tree model file");
    sub->add_flag("--paper-tree", c.paper_tree, "Use the published reference tree instead of a model file")->excludes(model);
    return model;
  };

  auto* extract = app.add_subcommand("extract", "Featurize a corpus and print the feature table (CSV)");
  extract->add_option("--corpus", c.corpus, "JSON-lines corpus")->required();
  add_gazetteers(extract);
  extract->add_option("--out", c.out, "Write the table here instead of standard output");

  auto* train = app.add_subcommand("train", "Induce a decision tree and save it");
  train->add_option("--corpus", c.corpus, "JSON-lines corpus")->required();
  add_gazetteers(train);
  add_inducer(train);
  train->add_option("--out", c.out, "Model file to write")->required();

  auto* predict = app.add_subcommand("predict", "Classify one text (exit 2 when it shares a location)");
  predict->add_option("text", c.text, "Text to classify")->required();
  add_gazetteers(predict);
  add_model(predict);

  auto* eval = app.add_subcommand("eval", "Evaluate the inducer by cross-validation or percentage split");
  eval->add_option("--corpus", c.corpus, "JSON-lines corpus")->required();
  add_gazetteers(eval);
  add_inducer(eval);
  auto* folds = eval->add_option("--folds", c.folds, "Stratified cross-validation folds")->capture_default_str()
                    ->check(CLI::Range(std::size_t{2}, std::numeric_limits<std::size_t>::max()));
  auto* split = eval->add_option("--split", c.split_pct, "Training percentage for a percentage split")
                    ->check(CLI::Range(0.0, 100.0));
  split->excludes(folds);
  eval->add_option("--seed", c.seed, "Random seed")->capture_default_str();
  eval->add_option("--out", c.out, "JSON report path (default eval-report.json)");
  eval->add_flag("--compare", c.compare, "Rank a fixed grid of inducer settings under both protocols");

  auto* serve = app.add_subcommand("serve", "Run the local HTTP classification service");
  add_gazetteers(serve);
  auto* model_opt = add_model(serve);
  serve->add_option("--port", c.port, "TCP port")->capture_default_str()->check(CLI::Range(1, 65535));
  serve->add_option("--host", c.host, "Bind address")->capture_default_str();
  serve->add_option("--warning", c.warning, "Warning text variant")->capture_default_str()
      ->check(CLI::IsMember({"ascii", "diacritic"}));
  serve->add_option("--cors-origin", c.cors_origin, "Access-Control-Allow-Origin value")->capture_default_str();

  auto* synth = app.add_subcommand("synth", "Generate the balanced synthetic corpus");
  synth->add_option("--size", c.size, "Number of examples (even)")->capture_default_str();
  synth->add_option("--noise", c.noise, "Label-noise fraction per class")->capture_default_str();
  synth->add_option("--seed", c.seed, "Random seed")->capture_default_str();
  synth->add_option("--out", c.out, "Output file (default standard output)");

  std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (extract->parsed()) return cmd_extract(c, out);
    if (train->parsed()) return cmd_train(c, out);
    if (predict->parsed()) return cmd_predict(c, out);
    if (eval->parsed()) return cmd_eval(c, split->count() > 0, out);
    if (serve->parsed()) return cmd_serve(c, model_opt->count() > 0, out, err);
    if (synth->parsed()) return cmd_synth(c, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace konum::cli
