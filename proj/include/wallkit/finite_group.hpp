#pragma once

#include <string>
#include <vector>

namespace wallkit {

// Finite group given by its multiplication table. Elements are indices
// 0..n-1. The table is validated at construction: Latin square,
// associativity, two-sided identity.
class FiniteGroup {
 public:
  explicit FiniteGroup(std::vector<std::vector<int>> table);

  static FiniteGroup cyclic(int n);
  static FiniteGroup symmetric(int n);   // S_n on {0..n-1}, n! elements
  static FiniteGroup dihedral(int n);    // order 2n
  static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

  int order() const { return n_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[a][b]; }
  int inv(int a) const { return inverse_[a]; }

  bool is_subgroup(const std::vector<int>& elements) const;

  // Closure of a generating set under product and inverse.
  std::vector<int> generated_subgroup(const std::vector<int>& generators) const;

  const std::vector<std::vector<int>>& table() const { return table_; }

 private:
  int n_ = 0;
  int identity_ = 0;
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
};

// Action of a finite group on a ground set of m points: one permutation per
// group element. Axioms (identity acts trivially, compatibility with the
// group law) are verified at construction.
class GAction {
 public:
  GAction(const FiniteGroup& group, int ground_size,
          std::vector<std::vector<int>> perms);

  // g -> (x -> (g + x) mod n), the left regular action of Z/n.
  static GAction cyclic_shift(const FiniteGroup& cyclic_group);
  // Left multiplication of G on a coset space given by coset membership.
  static GAction on_cosets(const FiniteGroup& group,
                           const std::vector<std::vector<int>>& cosets);
  static GAction trivial(const FiniteGroup& group, int ground_size);

  const FiniteGroup& group() const { return *group_; }
  int ground_size() const { return m_; }
  int apply(int g, int x) const { return perms_[g][x]; }
  const std::vector<int>& perm(int g) const { return perms_[g]; }

 private:
  const FiniteGroup* group_;
  int m_;
  std::vector<std::vector<int>> perms_;
};

// Left cosets gH, each sorted, listed by minimal element; cosets partition G.
struct CosetSpace {
  const FiniteGroup* group;
  std::vector<int> subgroup;               // sorted element set
  std::vector<std::vector<int>> cosets;    // each sorted; ordered by min element
  std::vector<int> coset_of;               // element -> coset index

  int count() const { return static_cast<int>(cosets.size()); }
};

// Throws std::invalid_argument if h_elements is not a subgroup.
CosetSpace left_cosets(const FiniteGroup& g, const std::vector<int>& h_elements);

}  // namespace wallkit
