#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "wallkit/finite_group.hpp"
#include "wallkit/mask.hpp"

namespace wallkit {

// A gauge over an explicit element window: eval(i, j) is the finite subset
// of X attached to the pair (w_i, w_j), as a mask over X. The lift module is
// generic over this interface.
struct Gauge {
  int domain_size = 0;   // number of W elements in the window
  int target_size = 0;   // ground set size of X
  std::function<Mask(int, int)> eval;
  bool left_invariant = false;
  bool equivariant = false;
};

struct GaugeViolation {
  enum class Kind { symmetry, subadditivity } kind;
  int w1, w2, w3;  // w3 = -1 for symmetry violations
  std::string describe() const;
};

struct GaugeReport {
  std::vector<GaugeViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Checks symmetry and subadditivity on the supplied triples.
GaugeReport check_gauge_axioms(const Gauge& g,
                               const std::vector<std::array<int, 3>>& triples);
// Exhaustive over the window (cubic).
GaugeReport check_gauge_axioms(const Gauge& g);

// phi(w, w') = {w, w'} on W = X.
Gauge pair_gauge(int n);

// Finitely supported H-configurations over a ground set of n points,
// as vectors of H-element indices. The support gauge of H^(X).
struct ConfigurationSpace {
  const FiniteGroup* h;
  int n;

  std::vector<std::vector<int>> all_configurations() const;  // |H|^n of them
  std::vector<int> identity() const { return std::vector<int>(n, h->identity()); }
  std::vector<int> multiply(const std::vector<int>& a, const std::vector<int>& b) const;
  std::vector<int> invert(const std::vector<int>& a) const;
  // The shift action of g on configurations: (g.w)(x) = w(g^-1 x).
  std::vector<int> shift(const GAction& action, int g, const std::vector<int>& w) const;

  Mask support(const std::vector<int>& w) const;
  Mask difference_set(const std::vector<int>& a, const std::vector<int>& b) const;
};

// psi(w) = Supp(w) on a window of configurations; phi(w,w') = {x : w_x != w'_x}.
Gauge support_gauge(const ConfigurationSpace& space,
                    const std::vector<std::vector<int>>& window);

// psi(sigma) = set of non-fixed points, over a window of permutations of
// {0..n-1}.
Gauge perm_support_gauge(int n, const std::vector<std::vector<int>>& window);
Mask perm_support(const std::vector<int>& perm);

// Words in a free product of finite factor groups, in normal form:
// alternating nontrivial syllables (factor index, element index).
struct FreeProductWord {
  std::vector<std::pair<int, int>> syllables;

  bool operator==(const FreeProductWord& o) const { return syllables == o.syllables; }
};

struct FreeProduct {
  std::vector<const FiniteGroup*> factors;

  FreeProductWord normalize(const std::vector<std::pair<int, int>>& raw) const;
  FreeProductWord multiply(const FreeProductWord& a, const FreeProductWord& b) const;
  FreeProductWord invert(const FreeProductWord& a) const;
  // psi(w) = factor indices appearing in the normal form.
  Mask factor_support(const FreeProductWord& w) const;
};

Gauge free_product_gauge(const FreeProduct& fp,
                         const std::vector<FreeProductWord>& window);

// d_A(y, y') = 1 iff A cuts phi(y, y'). Requires phi(y, y) to be a singleton
// for every y in the window (checked); then d_A is a pseudodistance.
int cut_pseudometric(const Mask& a, const Gauge& phi, int y1, int y2);

}  // namespace wallkit
