#include "konum/gazetteer.hpp"

#include <algorithm>
#include <fstream>

#include "konum/text.hpp"

namespace konum {

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n\v\f";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_words(const std::string& entry) {
  std::vector<std::string> words;
  std::size_t pos = 0;
  while (pos <= entry.size()) {
    const auto next = entry.find(' ', pos);
    words.push_back(entry.substr(pos, next == std::string::npos ? std::string::npos : next - pos));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return words;
}

}  // namespace

std::string Gazetteer::normalize(std::string_view raw) {
  std::string out;
  for (const auto& tok : tokenize(raw)) {
    if (!out.empty()) out.push_back(' ');
    out += tok.folded;
  }
  return out;
}

Gazetteer::Gazetteer(std::string name, const std::vector<std::string>& raw_entries)
    : name_(std::move(name)) {
  for (const auto& raw : raw_entries) {
    std::string entry = normalize(raw);
    if (entry.empty()) {
      throw GazetteerError("gazetteer '" + name_ + "': entry '" + raw + "' is empty after normalization");
    }
    sorted_.push_back(std::move(entry));
  }
  std::sort(sorted_.begin(), sorted_.end());
  sorted_.erase(std::unique(sorted_.begin(), sorted_.end()), sorted_.end());

  for (const auto& entry : sorted_) {
    if (entry.find(' ') == std::string::npos) {
      single_.insert(entry);
    } else {
      auto words = split_words(entry);
      multiword_[words.front()].push_back(std::move(words));
    }
  }
  // longest first, so the most specific venue is reported
  for (auto& [first, list] : multiword_) {
    std::stable_sort(list.begin(), list.end(),
                     [](const auto& a, const auto& b) { return a.size() > b.size(); });
  }
}

bool Gazetteer::contains(std::string_view entry) const {
  return std::binary_search(sorted_.begin(), sorted_.end(), entry);
}

bool Gazetteer::contains_word(std::string_view word) const {
  return single_.find(std::string(word)) != single_.end();
}

const std::vector<std::vector<std::string>>* Gazetteer::multiword_starting_with(std::string_view word) const {
  auto it = multiword_.find(std::string(word));
  return it == multiword_.end() ? nullptr : &it->second;
}

Gazetteer load_gazetteer(std::istream& source, std::string name) {
  std::vector<std::string> raw;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(source, line)) {
    ++line_no;
    const auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    if (Gazetteer::normalize(t).empty()) {
      throw GazetteerError(name + ":" + std::to_string(line_no) + ": entry '" + std::string(t) +
                           "' is empty after normalization");
    }
    raw.emplace_back(t);
  }
  if (source.bad()) throw GazetteerError(name + ": read error");
  return Gazetteer(std::move(name), raw);
}

Gazetteer load_gazetteer_file(const std::filesystem::path& path, std::string name) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GazetteerError("cannot open gazetteer file " + path.string());
  try {
    return load_gazetteer(in, std::move(name));
  } catch (const GazetteerError& e) {
    throw GazetteerError(path.string() + ": " + e.what());
  }
}

Gazetteers Gazetteers::load_directory(const std::filesystem::path& dir) {
  auto single_word = [&](const char* file, const char* name) {
    Gazetteer g = load_gazetteer_file(dir / file, name);
    if (g.has_multiword_entries()) {
      throw GazetteerError((dir / file).string() + ": multi-word entries are only allowed for venues");
    }
    return g;
  };
  Gazetteers out;
  out.cities = single_word("cities.txt", "cities");
  out.special_words = single_word("special_words.txt", "special_words");
  out.verbs = single_word("verbs.txt", "verbs");
  out.venues = load_gazetteer_file(dir / "venues.txt", "venues");
  return out;
}

}  // namespace konum
