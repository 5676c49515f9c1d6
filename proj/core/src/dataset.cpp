#include "konum/dataset.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace konum {

using nlohmann::json;

Label label_from_int(long long value) {
  if (value == 0) return Label::Negative;
  if (value == 1) return Label::Positive;
  throw std::invalid_argument("label must be 0 or 1, got " + std::to_string(value));
}

namespace {

bool is_blank(std::string_view s) {
  return s.find_first_not_of(" \t\r\n") == std::string_view::npos;
}

std::string_view chomp(std::string_view s) {
  if (!s.empty() && s.back() == '\r') s.remove_suffix(1);
  return s;
}

}  // namespace

std::vector<LabeledExample> load_corpus(std::istream& source) {
  std::vector<LabeledExample> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(source, line)) {
    ++line_no;
    if (is_blank(line)) continue;
    auto fail = [&](const std::string& why) {
      return DatasetError("corpus line " + std::to_string(line_no) + ": " + why);
    };

    json record;
    try {
      record = json::parse(line);
    } catch (const json::parse_error& e) {
      throw fail(std::string("malformed JSON: ") + e.what());
    }
    if (!record.is_object()) throw fail("expected a JSON object");
    const auto text = record.find("text");
    const auto label = record.find("label");
    if (text == record.end() || !text->is_string()) throw fail("missing string field \"text\"");
    if (label == record.end() || !label->is_number_integer()) throw fail("missing integer field \"label\"");

    LabeledExample ex;
    ex.text = text->get<std::string>();
    if (is_blank(ex.text)) throw fail("empty text");
    try {
      ex.label = label_from_int(label->get<long long>());
    } catch (const std::invalid_argument& e) {
      throw fail(e.what());
    }
    out.push_back(std::move(ex));
  }
  if (source.bad()) throw DatasetError("corpus read error");
  return out;
}

std::vector<LabeledExample> load_corpus_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DatasetError("cannot open corpus file " + path);
  try {
    return load_corpus(in);
  } catch (const DatasetError& e) {
    throw DatasetError(path + ": " + e.what());
  }
}

void write_corpus(std::ostream& out, std::span<const LabeledExample> examples) {
  for (const auto& ex : examples) {
    nlohmann::ordered_json record;
    record["text"] = ex.text;
    record["label"] = to_int(ex.label);
    out << record.dump() << '\n';
  }
}

std::vector<Instance> featurize_corpus(std::span<const LabeledExample> examples, const Gazetteers& gazetteers) {
  std::vector<Instance> out;
  out.reserve(examples.size());
  for (const auto& ex : examples) {
    out.push_back({extract(ex.text, gazetteers), ex.label});
  }
  return out;
}

void export_table(std::ostream& out, std::span<const Instance> instances) {
  out << kTableHeader << '\n';
  for (const auto& inst : instances) {
    for (int f = 1; f <= kFeatureCount; ++f) out << (inst.features[f] ? '1' : '0') << ',';
    out << to_int(inst.label) << '\n';
  }
}

std::string export_table(std::span<const Instance> instances) {
  std::ostringstream out;
  export_table(out, instances);
  return out.str();
}

std::vector<Instance> import_table(std::istream& source) {
  std::string line;
  if (!std::getline(source, line) || chomp(line) != kTableHeader) {
    throw DatasetError("feature table: expected header \"" + std::string(kTableHeader) + "\"");
  }
  std::vector<Instance> out;
  std::size_t line_no = 1;
  while (std::getline(source, line)) {
    ++line_no;
    const auto row = chomp(line);
    if (row.empty()) continue;
    // exactly "b,b,b,b,b,b,b"
    if (row.size() != 13) throw DatasetError("feature table line " + std::to_string(line_no) + ": bad row");
    Instance inst;
    for (int col = 0; col < 7; ++col) {
      const char c = row[2 * col];
      if ((c != '0' && c != '1') || (col < 6 && row[2 * col + 1] != ',')) {
        throw DatasetError("feature table line " + std::to_string(line_no) + ": bad row");
      }
      if (col < 6) {
        inst.features.set(col + 1, c == '1');
      } else {
        inst.label = c == '1' ? Label::Positive : Label::Negative;
      }
    }
    out.push_back(inst);
  }
  return out;
}

ClassCount count_classes(std::span<const Instance> instances) {
  ClassCount c;
  for (const auto& i : instances) (i.label == Label::Positive ? c.positive : c.negative)++;
  return c;
}

ClassCount count_classes(std::span<const LabeledExample> examples) {
  ClassCount c;
  for (const auto& e : examples) (e.label == Label::Positive ? c.positive : c.negative)++;
  return c;
}

}  // namespace konum
