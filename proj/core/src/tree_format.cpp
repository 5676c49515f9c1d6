#include <charconv>
#include <fstream>
#include <sstream>

#include "konum/tree.hpp"

namespace konum {

namespace {

void write_leaf(std::string& out, const Leaf& leaf) {
  out += ": " + std::to_string(to_int(leaf.label)) + " (" + std::to_string(leaf.reached) + ".0/" +
         std::to_string(leaf.misclassified) + ".0)";
}

void write_node(std::string& out, const DecisionTree& tree, NodeId id, std::size_t depth) {
  const auto& s = std::get<Split>(tree.node(id));
  for (int value = 0; value <= 1; ++value) {
    for (std::size_t i = 0; i < depth; ++i) out += "| ";
    out += feature_name(s.feature) + " = " + std::to_string(value);
    const NodeId child = value ? s.if_true : s.if_false;
    if (const auto* leaf = std::get_if<Leaf>(&tree.node(child))) {
      write_leaf(out, *leaf);
      out += '\n';
    } else {
      out += '\n';
      write_node(out, tree, child, depth + 1);
    }
  }
}

struct Line {
  std::size_t number = 0;
  std::size_t depth = 0;
  std::string_view body;  // text after the indentation
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

bool consume(std::string_view& s, std::string_view prefix) {
  if (!s.starts_with(prefix)) return false;
  s.remove_prefix(prefix.size());
  return true;
}

// Parses "123" or "123.0" (any run of zeros after the point).
bool parse_count(std::string_view s, std::size_t& out) {
  const auto dot = s.find('.');
  std::string_view whole = s.substr(0, dot);
  if (dot != std::string_view::npos) {
    const auto frac = s.substr(dot + 1);
    if (frac.empty() || frac.find_first_not_of('0') != std::string_view::npos) return false;
  }
  if (whole.empty()) return false;
  const auto [ptr, ec] = std::from_chars(whole.data(), whole.data() + whole.size(), out);
  return ec == std::errc{} && ptr == whole.data() + whole.size();
}

// ": L (R.0/M.0)" or ": L (R.0)"; s starts at the colon.
Leaf parse_leaf(std::string_view s, std::size_t line) {
  auto bad = [&] { return TreeFormatError(line, "malformed leaf \"" + std::string(s) + "\""); };
  if (!consume(s, ":")) throw bad();
  s = trim(s);
  if (s.empty() || (s.front() != '0' && s.front() != '1')) throw bad();
  Leaf leaf;
  leaf.label = s.front() == '1' ? Label::Positive : Label::Negative;
  s.remove_prefix(1);
  s = trim(s);
  if (!consume(s, "(") || !s.ends_with(")")) throw bad();
  s.remove_suffix(1);
  const auto slash = s.find('/');
  if (!parse_count(trim(s.substr(0, slash)), leaf.reached)) throw bad();
  if (slash != std::string_view::npos && !parse_count(trim(s.substr(slash + 1)), leaf.misclassified)) throw bad();
  if (leaf.misclassified > leaf.reached) throw TreeFormatError(line, "misclassified count exceeds reached count");
  return leaf;
}

class Parser {
 public:
  explicit Parser(std::vector<Line> lines) : lines_(std::move(lines)) {}

  DecisionTree parse() {
    if (lines_.empty()) throw TreeFormatError(0, "no tree lines");
    NodeId root;
    if (lines_[0].body.starts_with(":")) {
      if (lines_[0].depth != 0) throw TreeFormatError(lines_[0].number, "inconsistent indentation");
      root = add_leaf(parse_leaf(lines_[0].body, lines_[0].number));
      pos_ = 1;
    } else {
      root = parse_split(0, 0);
    }
    if (pos_ != lines_.size()) throw TreeFormatError(lines_[pos_].number, "unexpected line after complete tree");
    try {
      return std::move(builder_).build(root, TreeInfo{"file", std::nullopt, 0});
    } catch (const TreeError& e) {
      throw TreeFormatError(0, e.what());
    }
  }

 private:
  struct Branch {
    int feature;
    int value;
    std::optional<Leaf> leaf;
  };

  Branch read_branch(std::size_t depth) {
    if (pos_ >= lines_.size()) throw TreeFormatError(lines_.back().number, "unexpected end of tree");
    const Line& line = lines_[pos_++];
    if (line.depth != depth) throw TreeFormatError(line.number, "inconsistent indentation");
    std::string_view s = line.body;
    auto bad = [&] { return TreeFormatError(line.number, "malformed line \"" + std::string(line.body) + "\""); };
    if (!consume(s, "feature") || s.empty()) throw bad();
    int feature = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), feature);
    if (ec != std::errc{} || feature < 1 || feature > kFeatureCount) throw bad();
    s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
    s = trim(s);
    if (!consume(s, "=")) throw bad();
    s = trim(s);
    if (s.empty() || (s.front() != '0' && s.front() != '1')) throw bad();
    Branch b{feature, s.front() - '0', std::nullopt};
    s = trim(s.substr(1));
    if (!s.empty()) b.leaf = parse_leaf(s, line.number);
    return b;
  }

  NodeId parse_branch_child(const Branch& b, std::size_t depth, unsigned used) {
    if (b.leaf) return add_leaf(*b.leaf);
    return parse_split(depth + 1, used | (1u << (b.feature - 1)));
  }

  NodeId parse_split(std::size_t depth, unsigned used) {
    const std::size_t first_line = pos_ < lines_.size() ? lines_[pos_].number : 0;
    const Branch first = read_branch(depth);
    if (used & (1u << (first.feature - 1))) {
      throw TreeFormatError(first_line, feature_name(first.feature) + " repeated on a path");
    }
    const NodeId first_child = parse_branch_child(first, depth, used);

    const std::size_t second_line = pos_ < lines_.size() ? lines_[pos_].number : first_line;
    const Branch second = read_branch(depth);
    if (second.feature != first.feature || second.value == first.value) {
      throw TreeFormatError(second_line, "expected " + feature_name(first.feature) + " = " +
                                             std::to_string(1 - first.value));
    }
    const NodeId second_child = parse_branch_child(second, depth, used);
    return first.value == 0 ? builder_.split(first.feature, first_child, second_child)
                            : builder_.split(first.feature, second_child, first_child);
  }

  NodeId add_leaf(const Leaf& l) { return builder_.leaf(l.label, l.reached, l.misclassified); }

  std::vector<Line> lines_;
  std::size_t pos_ = 0;
  TreeBuilder builder_;
};

}  // namespace

std::string serialize(const DecisionTree& tree) {
  std::string out;
  if (const auto* leaf = std::get_if<Leaf>(&tree.node(tree.root()))) {
    write_leaf(out, *leaf);
    out += '\n';
    return out;
  }
  write_node(out, tree, tree.root(), 0);
  return out;
}

DecisionTree parse_tree(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++number;

    std::string_view s = trim(raw);
    if (s.empty() || s.front() == '#') continue;
    Line line{number, 0, {}};
    while (s.starts_with("|")) {
      ++line.depth;
      s = trim(s.substr(1));
    }
    line.body = s;
    lines.push_back(line);
  }
  return Parser(std::move(lines)).parse();
}

std::string model_file_text(const DecisionTree& tree) {
  std::ostringstream out;
  out << kModelHeader << '\n';
  const auto& info = tree.info();
  out << "# source=" << info.source << " training_size=" << info.training_size;
  if (info.params) {
    out << " min_leaf=" << info.params->min_leaf << " pruning=" << (info.params->pruning ? "on" : "off")
        << " confidence=" << info.params->confidence;
  }
  out << '\n' << serialize(tree);
  return out.str();
}

void save_model(const std::string& path, const DecisionTree& tree) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw TreeError("cannot write model file " + path);
  out << model_file_text(tree);
  out.flush();
  if (!out) throw TreeError("error writing model file " + path);
}

DecisionTree load_model(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw TreeError("cannot open model file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_tree(buf.str());
  } catch (const TreeFormatError& e) {
    throw TreeError(path + ": " + e.what());
  }
}

}  // namespace konum
