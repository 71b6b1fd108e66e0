#pragma once

#include <string>
#include <vector>

#include "wallkit/finite_group.hpp"
#include "wallkit/rational.hpp"
#include "wallkit/walls.hpp"

namespace wallkit {

struct HeckePairReport {
  CosetSpace cosets;
  std::vector<std::vector<int>> orbits;  // H-orbits on G/H, by coset index
  std::vector<int> orbit_sizes;          // sorted ascending
  bool verdict = false;                  // all orbits finite
};

// Orbit decomposition of G/H under left H-multiplication. On finite input
// the verdict is always true; it is the orbit data that feeds the other
// checks. Throws if h_elements is not a subgroup.
HeckePairReport hecke_check(const FiniteGroup& g, const std::vector<int>& h_elements);

struct HeckeKernelResult {
  KernelTable kernel;            // on G/H
  std::vector<Rat> k_values;     // k(g) = min f over HgH, indexed by g
  bool f_was_symmetrized;        // f replaced by f + f-check
};

// K(gH, g'H) = k(g^-1 g') with k(g) = min{f(w) : w in HgH}. f is
// symmetrized (f + f-check) when needed.
HeckeKernelResult hecke_kernel(const FiniteGroup& g, const std::vector<int>& h_elements,
                               const std::vector<Rat>& f);

// Word length with respect to a generating set, as a default proper f.
std::vector<Rat> word_length_function(const FiniteGroup& g,
                                      const std::vector<int>& generators);

struct CosetGraph {
  CosetSpace cosets;
  std::vector<std::vector<int>> adjacency;  // sorted, no self loops
  bool connected = false;

  KernelTable distance_kernel() const;  // BFS distances; requires connected
};

// gH ~ g'H iff g'H is one of the cosets of gHsH for some s in S. Throws
// when S is not symmetric.
CosetGraph coset_graph(const FiniteGroup& g, const std::vector<int>& h_elements,
                       const std::vector<int>& generators);

struct HeckeVerdictReport {
  bool invariant = false;
  bool proper_precondition = false;
  bool verdict = false;              // all H-orbits finite, via the kernel
  bool matches_direct_check = false; // same orbit partition as hecke_check
  std::vector<std::string> notes;
};

// Replays the kernel-to-Hecke implication: each H-orbit on G/H sits inside a
// level set of K(eH, .), hence is finite. A constant kernel on more than one
// coset is the truncation of a non-proper kernel and fails the properness
// precondition.
HeckeVerdictReport kernel_to_hecke_verdict(const FiniteGroup& g,
                                           const std::vector<int>& h_elements,
                                           const KernelTable& kernel);

}  // namespace wallkit
