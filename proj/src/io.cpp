#include "wallkit/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace wallkit {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
  throw std::invalid_argument("line " + std::to_string(line) + ": " + what);
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  return in;
}

}  // namespace

WallsStructure read_walls(std::istream& in) {
  std::string line;
  int lineno = 0;
  if (!std::getline(in, line)) parse_fail(1, "missing header");
  ++lineno;
  std::istringstream header(line);
  std::string tag;
  int n = 0;
  if (!(header >> tag >> n) || tag != "n" || n <= 0) {
    parse_fail(lineno, "expected header 'n <ground set size>'");
  }
  std::vector<std::pair<HalfSpace, Rat>> walls;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string weight_text, mask_text;
    if (!(row >> weight_text >> mask_text)) parse_fail(lineno, "expected '<weight> <mask>'");
    if (static_cast<int>(mask_text.size()) != n) {
      parse_fail(lineno, "mask length does not match ground set size");
    }
    try {
      walls.emplace_back(Mask::parse(mask_text), parse_rat(weight_text));
    } catch (const std::exception& e) {
      parse_fail(lineno, e.what());
    }
  }
  try {
    return WallsStructure(n, std::move(walls));
  } catch (const std::exception& e) {
    parse_fail(lineno, e.what());
  }
}

WallsStructure read_walls_file(const std::string& path) {
  auto in = open_or_throw(path);
  return read_walls(in);
}

void write_walls(std::ostream& out, const WallsStructure& mu) {
  out << "n " << mu.ground_size() << "\n";
  for (const auto& [mask, w] : mu.walls()) {
    out << format_rat(w) << " " << mask.to_string() << "\n";
  }
}

Tree read_tree(std::istream& in) {
  std::string line;
  int lineno = 0;
  if (!std::getline(in, line)) parse_fail(1, "missing vertex count");
  ++lineno;
  int n = 0;
  try {
    n = std::stoi(line);
  } catch (const std::exception&) {
    parse_fail(lineno, "bad vertex count");
  }
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream row(line);
    int u = 0, v = 0;
    if (!(row >> u >> v)) parse_fail(lineno, "expected edge 'u v'");
    edges.emplace_back(u, v);
  }
  try {
    return Tree(n, std::move(edges));
  } catch (const std::exception& e) {
    parse_fail(lineno, e.what());
  }
}

Tree read_tree_file(const std::string& path) {
  auto in = open_or_throw(path);
  return read_tree(in);
}

void write_tree(std::ostream& out, const Tree& t) {
  out << t.vertex_count() << "\n";
  for (auto [u, v] : t.edges()) out << u << " " << v << "\n";
}

FiniteGroup read_group(std::istream& in) {
  std::string line;
  int lineno = 0;
  if (!std::getline(in, line)) parse_fail(1, "missing group order");
  ++lineno;
  int n = 0;
  try {
    n = std::stoi(line);
  } catch (const std::exception&) {
    parse_fail(lineno, "bad group order");
  }
  std::vector<std::vector<int>> table;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream row(line);
    std::vector<int> entries;
    int v = 0;
    while (row >> v) entries.push_back(v);
    if (static_cast<int>(entries.size()) != n) {
      parse_fail(lineno, "expected " + std::to_string(n) + " entries");
    }
    table.push_back(std::move(entries));
  }
  if (static_cast<int>(table.size()) != n) {
    parse_fail(lineno, "expected " + std::to_string(n) + " table rows");
  }
  try {
    return FiniteGroup(std::move(table));
  } catch (const std::exception& e) {
    parse_fail(lineno, e.what());
  }
}

FiniteGroup read_group_file(const std::string& path) {
  auto in = open_or_throw(path);
  return read_group(in);
}

void write_group(std::ostream& out, const FiniteGroup& g) {
  out << g.order() << "\n";
  for (int a = 0; a < g.order(); ++a) {
    for (int b = 0; b < g.order(); ++b) {
      out << (b ? " " : "") << g.mul(a, b);
    }
    out << "\n";
  }
}

namespace {

std::int64_t parse_lamp_value(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty lamp value");
  if (text.find_first_not_of("tT") == std::string::npos) {
    std::int64_t v = 0;
    for (char c : text) v += c == 't' ? 1 : -1;
    return v;
  }
  try {
    return std::stoll(text);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad lamp value: " + text);
  }
}

}  // namespace

FreeWreathElement<std::int64_t> parse_wreath_element(int rank, const std::string& text) {
  auto bar = text.rfind('|');
  if (text.empty() || text.front() != '{' || bar == std::string::npos ||
      bar < 2 || text[bar - 1] != '}') {
    throw std::invalid_argument("wreath element must look like '{key:value,...}|cursor'");
  }
  FreeWreathElement<std::int64_t> e;
  e.cursor = FreeWord::parse(rank, text.substr(bar + 1));
  std::string body = text.substr(1, bar - 2);
  std::istringstream entries(body);
  std::string entry;
  while (std::getline(entries, entry, ',')) {
    if (entry.empty()) continue;
    auto colon = entry.find(':');
    if (colon == std::string::npos) {
      throw std::invalid_argument("lamp entry must look like 'key:value'");
    }
    FreeWord key = FreeWord::parse(rank, entry.substr(0, colon));
    std::int64_t value = parse_lamp_value(entry.substr(colon + 1));
    if (value == 0) continue;
    if (e.lamps.count(key)) throw std::invalid_argument("duplicate lamp key");
    e.lamps.emplace(std::move(key), value);
  }
  return e;
}

std::string format_wreath_element(const FreeWreathElement<std::int64_t>& e) {
  std::string out = "{";
  bool first = true;
  for (const auto& [key, value] : e.lamps) {
    if (!first) out += ",";
    first = false;
    out += key.to_string() + ":";
    if (value > 0 && value <= 8) {
      out += std::string(static_cast<size_t>(value), 't');
    } else if (value < 0 && value >= -8) {
      out += std::string(static_cast<size_t>(-value), 'T');
    } else {
      out += std::to_string(value);
    }
  }
  out += "}|" + e.cursor.to_string();
  return out;
}

}  // namespace wallkit
