#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wallkit/rational.hpp"
#include "wallkit/tree.hpp"
#include "wallkit/walls.hpp"
#include "wallkit/wreath.hpp"

namespace wallkit {

// Non-decreasing subadditive lower-bound profile alpha, together with the
// scale constant C >= 1 that makes beta = alpha/C satisfy beta(r) <= r/2 on
// positive integers. Two forms: a pure power r^d, or a monotone table over
// the integer grid (constant beyond its last entry). Table and d in {0,1}
// power forms evaluate exactly; fractional powers are only used by the
// advisory exponent fit.
class CompressionFunction {
 public:
  static CompressionFunction power(double exponent, const Rat& scale_c);
  static CompressionFunction table(std::vector<Rat> values, const Rat& scale_c);
  // alpha(r) = min(r, cap)
  static CompressionFunction capped_linear(std::int64_t cap, const Rat& scale_c);

  bool exact() const;
  // alpha at a nonnegative integer. Power form pins alpha(0) = 0. Throws for
  // inexact (fractional power) forms.
  Rat alpha_at(std::int64_t r) const;
  double alpha_at_approx(double r) const;
  Rat beta_at(std::int64_t r) const { return alpha_at(r) / scale_c_; }

  const Rat& scale_constant() const { return scale_c_; }
  std::optional<double> power_exponent() const { return exponent_; }

  // Input errors for broken alpha axioms (monotonicity, subadditivity) on
  // the grid 0..limit; beta(r) <= r/2 failures are returned, not thrown.
  std::vector<std::string> validate(std::int64_t grid_limit) const;

 private:
  CompressionFunction() = default;
  std::optional<double> exponent_;
  std::vector<Rat> table_;
  Rat scale_c_{1};
};

// Minimal C with beta(r) <= r/2 for 1 <= r <= grid_limit, doubled as a
// safety margin.
Rat auto_scale_constant(const CompressionFunction& alpha_c1, std::int64_t grid_limit);

// d_{Phi(sigma)}(a, b) on H wr F(rank): edges of the Cayley tree cutting
// {y : a_y != b_y} u {cursors}, plus the lamp-wise sigma distances.
template <class HOps>
Rat phi_sigma_distance_with(const FreeWreath<HOps>& wreath,
                            const typename FreeWreath<HOps>::Element& a,
                            const typename FreeWreath<HOps>::Element& b,
                            const std::function<Rat(typename HOps::Elem,
                                                    typename HOps::Elem)>& d_sigma) {
  WordTrie trie(wreath.rank);
  std::vector<int> terminal_ids{trie.insert(a.cursor), trie.insert(b.cursor)};
  Rat lamp_total(0);
  auto ia = a.lamps.begin();
  auto ib = b.lamps.begin();
  const auto id = wreath.h.id();
  auto differ = [&](const FreeWord& key, const typename HOps::Elem& va,
                    const typename HOps::Elem& vb) {
    lamp_total += d_sigma(va, vb);
    terminal_ids.push_back(trie.insert(key));
  };
  while (ia != a.lamps.end() || ib != b.lamps.end()) {
    if (ib == b.lamps.end() || (ia != a.lamps.end() && ia->first < ib->first)) {
      differ(ia->first, ia->second, id);
      ++ia;
    } else if (ia == a.lamps.end() || ib->first < ia->first) {
      differ(ib->first, id, ib->second);
      ++ib;
    } else {
      if (!(ia->second == ib->second)) differ(ia->first, ia->second, ib->second);
      ++ia;
      ++ib;
    }
  }
  Tree t = trie.tree();
  Mask terminals = Mask::of_points(t.vertex_count(), terminal_ids);
  int hull = static_cast<int>(hull_edges(t, terminals).edges.size());
  return Rat(hull) + lamp_total;
}

// Finite-H version against a walls structure indexed by H elements.
template <class HOps>
Rat phi_sigma_distance(const WallsStructure& sigma, const FreeWreath<HOps>& wreath,
                       const typename FreeWreath<HOps>::Element& a,
                       const typename FreeWreath<HOps>::Element& b) {
  return phi_sigma_distance_with<HOps>(
      wreath, a, b, [&sigma](int x, int y) { return sigma.distance(x, y); });
}

inline WallsStructure scale_walls(const WallsStructure& mu, const Rat& c) {
  return mu.scaled_by(c);
}

// One sampled wreath element, reduced to the quantities entering the
// compression chain.
struct CompressionSample {
  std::int64_t length = 0;       // |wg| = m + total lamp length
  std::int64_t walk_term = 0;    // m(w, g)
  std::int64_t hull_count = 0;   // edges cutting Supp(w) u {1, g}
  std::vector<std::pair<std::int64_t, Rat>> lamps;  // (|h|, d_sigma(1, h))
  Rat phi_distance{0};           // hull_count + sum of lamp distances
};

struct ChainViolation {
  std::size_t sample;
  std::string step;
  std::string detail;
};

// Checks every link of the lower-bound chain per sample, all in exact
// arithmetic:
//   half bound      hull >= m/2
//   lamp bound      d_sigma(1,h) >= beta(|h|) per lamp
//   monotone step   m/2 >= beta(m)
//   subadditive     beta(m) + sum beta(|h|) >= beta(|wg|)
//   chain lines     phi >= m/2 + sum beta(|h|) >= beta(m) + sum beta(|h|)
//                       >= beta(|wg|)
//   scaled bound    C*phi >= alpha(|wg|)
// Also reports beta(r) <= r/2 grid failures. Throws on broken alpha axioms.
std::vector<ChainViolation> verify_compression_chain(
    const std::vector<CompressionSample>& samples, const CompressionFunction& alpha,
    std::int64_t beta_grid_limit);

struct SampledExperiment {
  std::vector<CompressionSample> samples;
  std::uint64_t seed = 0;
};

// H = Z/2 over F(rank): sigma is the single wall {h}, alpha = min(r, 1).
SampledExperiment sample_z2_wreath(int rank, int radius, std::int64_t count,
                                   std::uint64_t seed);
// H = Z over F(rank): half-line walls give d_sigma(j,k) = |j-k|, alpha = r.
SampledExperiment sample_z_wreath(int rank, int radius, std::int64_t count,
                                  std::uint64_t seed);

// Half-line walls {k..hi} on the integer window lo..hi; the wall distance is
// |x - y|. Ground point i represents the integer lo + i.
WallsStructure half_line_walls(std::int64_t lo, std::int64_t hi);

struct B1Estimate {
  std::size_t sample_count = 0;
  double fitted_exponent = 0;
  double exponent_stderr = 0;
  double analytic_exponent = 0;  // carried by alpha; the only guaranteed bound
  std::size_t bound_violations = 0;
};

// Log-log fit of phi distance against word length. Advisory only: the
// guaranteed content is the per-sample bound beta(|wg|) <= phi, re-verified
// here. Throws when fewer than two distinct lengths are present.
B1Estimate estimate_b1(const std::vector<CompressionSample>& samples,
                       const CompressionFunction& alpha, double analytic_exponent);

}  // namespace wallkit
