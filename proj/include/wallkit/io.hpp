#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "wallkit/finite_group.hpp"
#include "wallkit/free_word.hpp"
#include "wallkit/tree.hpp"
#include "wallkit/walls.hpp"
#include "wallkit/wreath.hpp"

namespace wallkit {

// Walls file: first line "n <ground size>", then one wall per line as
// "<weight> <mask>", weight "p" or "p/q", mask a 0/1 string of length n.
// Emitted walls are in the canonical (lexicographic mask) order.
WallsStructure read_walls(std::istream& in);
WallsStructure read_walls_file(const std::string& path);
void write_walls(std::ostream& out, const WallsStructure& mu);

// Tree file: first line the vertex count, then one "u v" edge per line.
Tree read_tree(std::istream& in);
Tree read_tree_file(const std::string& path);
void write_tree(std::ostream& out, const Tree& t);

// Group table file: first line the order n, then n rows of n indices.
FiniteGroup read_group(std::istream& in);
FiniteGroup read_group_file(const std::string& path);
void write_group(std::ostream& out, const FiniteGroup& g);

// Wreath element over a free base: "{key:value,...}|cursor" with free words
// as keys ("1" = identity) and lamp values as decimal integers or runs of
// t/T. "{}|cursor" and "{...}|1" are allowed.
FreeWreathElement<std::int64_t> parse_wreath_element(int rank, const std::string& text);
std::string format_wreath_element(const FreeWreathElement<std::int64_t>& e);

}  // namespace wallkit
