#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "wallkit/finite_group.hpp"
#include "wallkit/mask.hpp"
#include "wallkit/rational.hpp"

namespace wallkit {

using HalfSpace = Mask;

// A cuts Y: Y meets both A and its complement. Throws on empty Y.
bool cuts(const HalfSpace& a, const Mask& y);

// Finitely supported measured walls structure: a finite ground set together
// with weighted half-spaces. Proper nonempty half-spaces only; duplicates
// are merged at construction by summing weights; storage order is the
// canonical mask order. Immutable once built.
class WallsStructure {
 public:
  explicit WallsStructure(int ground_size) : n_(ground_size) {}
  WallsStructure(int ground_size, std::vector<std::pair<HalfSpace, Rat>> walls);

  int ground_size() const { return n_; }
  const std::vector<std::pair<HalfSpace, Rat>>& walls() const { return walls_; }
  int wall_count() const { return static_cast<int>(walls_.size()); }

  // Total weight of stored half-spaces containing exactly one of x, y.
  Rat distance(int x, int y) const;

  // Total weight of stored half-spaces cutting the set F.
  Rat cut_weight(const Mask& f) const;

  // Common denominator of all weights, and weights scaled to integers over
  // it. Backs exact integer fast paths for big distance tables.
  std::int64_t common_denominator() const { return common_den_; }
  const std::vector<std::int64_t>& scaled_weights() const { return scaled_; }
  std::int64_t distance_scaled(int x, int y) const;
  std::int64_t cut_weight_scaled(const Mask& f) const;

  WallsStructure scaled_by(const Rat& c) const;

  bool operator==(const WallsStructure& o) const {
    return n_ == o.n_ && walls_ == o.walls_;
  }

 private:
  int n_;
  std::vector<std::pair<HalfSpace, Rat>> walls_;
  std::int64_t common_den_ = 1;
  std::vector<std::int64_t> scaled_;
};

Rat wall_distance(const WallsStructure& mu, int x, int y);

// Pushes the structure on Y back along f: X -> Y (entry i = image of point
// i). Each wall B becomes f^{-1}(B); empty/full preimages are dropped.
WallsStructure pullback(const std::vector<int>& f, const WallsStructure& mu_on_y,
                        int domain_size);

struct DirectSummand {
  WallsStructure walls;
  int basepoint = 0;
};

// Direct sum over an explicit window of configurations (one coordinate per
// summand). The returned structure lives on the window; its distance is the
// coordinatewise sum of summand distances.
WallsStructure direct_sum(const std::vector<DirectSummand>& summands,
                          const std::vector<std::vector<int>>& window);

// The affine embedding x -> 1_{A_x} - 1_{A_{x0}}, one signed entry per
// stored wall. The weighted l^1 norm of f(x) - f(y) equals the wall distance.
std::vector<std::vector<int>> l1_embed(const WallsStructure& mu, int basepoint);

Rat weighted_l1(const WallsStructure& mu, const std::vector<int>& u,
                const std::vector<int>& v);

// Checks ||f(x)-f(y)||_p = d(x,y)^{1/p} on every pair; exact for p = 1,
// within 1e-12 otherwise.
bool lp_norm_check(const WallsStructure& mu, int basepoint, double p);

// Walls presented as unordered bipartitions {A, A^c}. Canonical
// representative: the side not containing point 0.
class AlternateWalls {
 public:
  explicit AlternateWalls(int ground_size) : n_(ground_size) {}
  AlternateWalls(int ground_size, std::vector<std::pair<Mask, Rat>> partitions);

  int ground_size() const { return n_; }
  const std::vector<std::pair<Mask, Rat>>& partitions() const { return parts_; }

  // Total weight of bipartitions separating x from y.
  Rat distance(int x, int y) const;

  bool operator==(const AlternateWalls& o) const {
    return n_ == o.n_ && parts_ == o.parts_;
  }

 private:
  int n_;
  std::vector<std::pair<Mask, Rat>> parts_;
};

AlternateWalls to_alternate(const WallsStructure& mu);

// The inverse map T: each bipartition of weight w contributes w/2 on both
// sides. Output is symmetric; round-trips are exact.
WallsStructure from_alternate(const AlternateWalls& nu);

WallsStructure symmetrize(const WallsStructure& mu);

// Sum of the G-orbits of the seed walls, each orbit element once with the
// seed's weight. Empty/full seeds are dropped. G-invariant by construction.
WallsStructure orbit_invariant_walls(
    const GAction& action, const std::vector<std::pair<HalfSpace, Rat>>& seeds);

// Symmetric nonnegative rational kernel on a finite point set.
class KernelTable {
 public:
  explicit KernelTable(int m) : m_(m), values_(m * m, Rat(0)) {}

  static KernelTable from_function(int m, const std::function<Rat(int, int)>& f);

  int size() const { return m_; }
  const Rat& at(int x, int y) const { return values_[x * m_ + y]; }
  void set(int x, int y, const Rat& v);

  KernelTable operator+(const KernelTable& o) const;

  // |{y : K(x0,y) <= r}|
  int sublevel_count(int x0, const Rat& r) const;
  // Sorted distinct values of K(x0, .).
  std::vector<Rat> level_values(int x0) const;

  // Empty result means K(p(g)x, p(g)y) == K(x,y) for every g and pair.
  std::vector<std::string> invariance_violations(const GAction& action) const;

 private:
  int m_;
  std::vector<Rat> values_;
};

}  // namespace wallkit
