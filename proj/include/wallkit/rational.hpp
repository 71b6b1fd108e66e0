#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace wallkit {

// Exact rational arithmetic for wall weights and distances. Every invariance
// and oracle check in this library compares rationals for equality; floating
// point appears only in p-th roots and regression fits.
using Rat = boost::rational<std::int64_t>;

inline Rat rat(std::int64_t num, std::int64_t den = 1) { return Rat(num, den); }

// Parses "p" or "p/q". Throws std::invalid_argument on malformed input.
Rat parse_rat(const std::string& text);

// "p" when the denominator is 1, "p/q" otherwise.
std::string format_rat(const Rat& r);

inline double to_double(const Rat& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

inline std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  return std::lcm(a, b);
}

}  // namespace wallkit
