#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wallkit/free_word.hpp"
#include "wallkit/gauge.hpp"
#include "wallkit/mask.hpp"
#include "wallkit/walls.hpp"

namespace wallkit {

// A point of W x X: the index of a W element in the gauge's window paired
// with a point of the base ground set.
struct WindowPoint {
  int w;
  int x;
  bool operator==(const WindowPoint& o) const { return w == o.w && x == o.x; }
};

// d(w1x1, w2x2) = mu{A : A cuts phi(w1,w2) u {x1,x2}}.
Rat lift_distance(const WallsStructure& mu, const Gauge& phi, WindowPoint p,
                  WindowPoint q);

// The lifted structure materialized over a finite window: for each stored
// wall (A, m), the window splits into blocks of the relation d_A = 0, and
// every block becomes a half-space of weight m/2. Its wall distance agrees
// with lift_distance on every window pair.
WallsStructure lift_walls_explicit(const WallsStructure& mu, const Gauge& phi,
                                   const std::vector<WindowPoint>& window);

// One element of a group acting on a window of W x X points: the induced
// permutations of W-window indices and of ground-set points.
struct WindowAction {
  std::vector<int> w_perm;
  std::vector<int> x_perm;
};

struct LiftInvarianceViolation {
  int actor;
  WindowPoint p, q;
};

// Verifies d(s.p, s.q) = d(p, q) exactly for every supplied group element
// and every unordered window pair. Runs on a scaled integer distance table
// so exhaustive semidirect-product checks stay cheap.
std::vector<LiftInvarianceViolation> check_lift_equivariance(
    const WallsStructure& mu, const Gauge& phi,
    const std::vector<WindowPoint>& window,
    const std::vector<WindowAction>& actors);

struct UniformityBound {
  WindowPoint p, q;
  Rat sup_shifted;   // sup over the sampled actors of d(g.p, g.q)
  Rat lemma_bound;   // sum over y,z in F of sup_g d_mu(gy, gz)
  bool within_bound() const { return sup_shifted <= lemma_bound; }
};

// For each pair, the supremum of shifted lift distances over the sampled
// actors, against the gauge-set bound it must respect.
std::vector<UniformityBound> check_lift_uniformity(
    const WallsStructure& mu, const Gauge& phi,
    const std::vector<WindowAction>& actors,
    const std::vector<std::pair<WindowPoint, WindowPoint>>& pairs);

struct BoundedSetCertificate {
  Rat radius;
  std::vector<int> ball;             // closed d_mu-ball of the radius around x'
  bool contained = false;            // E inside {w : phi(w,w') in B} x B
  std::optional<Rat> converse_bound; // n * R, when the converse is checked
  bool converse_ok = false;
  std::vector<std::string> failures;
};

// Forward direction: every point of E within lift-distance r of the base
// point has its gauge set and x-coordinate inside the r-ball around x'.
// Converse (proper d_mu): every point of {w : phi(w,w') in B} x B lies within
// n*R of the base point, n = |ball|.
BoundedSetCertificate bounded_set_analysis(const WallsStructure& mu, const Gauge& phi,
                                           const std::vector<WindowPoint>& window,
                                           const std::vector<int>& subset,
                                           WindowPoint base, const Rat& r);

// Kernel d_lift + u on the window, where u depends only on the W components.
KernelTable proper_sum_kernel(const WallsStructure& mu, const Gauge& phi,
                              const std::vector<WindowPoint>& window,
                              const std::function<Rat(int, int)>& u_on_w);

struct ControlledCheck {
  bool controlled;                 // always true on finite input
  std::vector<int> difference_set; // {g^-1 h}, deduplicated
};

// Group coarse structure: E is controlled iff {g^-1 h | (g,h) in E} is
// finite. Elements are finite-group indices.
ControlledCheck controlled_check(const FiniteGroup& g,
                                 const std::vector<std::pair<int, int>>& pairs);
// FreeWord variant.
struct ControlledCheckWords {
  bool controlled;
  std::vector<FreeWord> difference_set;
};
ControlledCheckWords controlled_check(const std::vector<std::pair<FreeWord, FreeWord>>& pairs);

// Replays the hull-controlled inequality: with R bounding the lift distance
// over E, every pair of points drawn from phi(w,w') u {x,x'} over E has
// d_mu <= R. An explicit R overrides the computed bound (negative controls).
bool hull_controlled_check(const WallsStructure& mu, const Gauge& phi,
                           const std::vector<std::pair<WindowPoint, WindowPoint>>& pairs,
                           std::optional<Rat> explicit_r = std::nullopt);

}  // namespace wallkit
