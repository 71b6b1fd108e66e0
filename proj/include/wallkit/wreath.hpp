#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "wallkit/finite_group.hpp"
#include "wallkit/free_word.hpp"
#include "wallkit/mask.hpp"
#include "wallkit/rational.hpp"
#include "wallkit/tree.hpp"
#include "wallkit/walls.hpp"

namespace wallkit {

// Lamp-group operations. Elem must be regular and ordered; values equal to
// id() are never stored in a support map.
struct FiniteHOps {
  const FiniteGroup* group;
  using Elem = int;
  Elem id() const { return group->identity(); }
  Elem mul(Elem a, Elem b) const { return group->mul(a, b); }
  Elem inv(Elem a) const { return group->inv(a); }
};

struct IntegerHOps {
  using Elem = std::int64_t;
  Elem id() const { return 0; }
  Elem mul(Elem a, Elem b) const { return a + b; }
  Elem inv(Elem a) const { return -a; }
};

// Element of H wr F: finitely supported lamp configuration over the free
// group, plus a cursor. Support keys are kept in shortlex order by std::map.
template <class HElem>
struct FreeWreathElement {
  std::map<FreeWord, HElem> lamps;
  FreeWord cursor;

  bool is_identity() const { return lamps.empty() && cursor.is_identity(); }
  bool operator==(const FreeWreathElement& o) const {
    return lamps == o.lamps && cursor == o.cursor;
  }
  bool operator<(const FreeWreathElement& o) const {
    if (cursor != o.cursor) return cursor < o.cursor;
    return lamps < o.lamps;
  }
};

// The standard wreath product H wr F(rank) with lamp arithmetic from HOps.
template <class HOps>
struct FreeWreath {
  using HElem = typename HOps::Elem;
  using Element = FreeWreathElement<HElem>;

  int rank;
  HOps h;

  Element identity() const { return {}; }

  Element lamp(const FreeWord& at, HElem value) const {
    Element e;
    if (!(value == h.id())) e.lamps.emplace(at, value);
    return e;
  }

  Element cursor_only(const FreeWord& g) const {
    Element e;
    e.cursor = g;
    return e;
  }

  // (w, g)(w', g') = (w . (g.w'), g g'), where (g.w')(x) = w'(g^-1 x).
  Element multiply(const Element& a, const Element& b) const {
    Element out;
    out.cursor = a.cursor * b.cursor;
    out.lamps = a.lamps;
    for (const auto& [key, value] : b.lamps) {
      FreeWord shifted = a.cursor * key;
      auto it = out.lamps.find(shifted);
      if (it == out.lamps.end()) {
        out.lamps.emplace(shifted, value);
      } else {
        HElem prod = h.mul(it->second, value);
        if (prod == h.id()) {
          out.lamps.erase(it);
        } else {
          it->second = prod;
        }
      }
    }
    return out;
  }

  Element invert(const Element& a) const {
    Element out;
    out.cursor = a.cursor.inverse();
    for (const auto& [key, value] : a.lamps) {
      out.lamps.emplace(out.cursor * key, h.inv(value));
    }
    return out;
  }

  std::vector<FreeWord> support(const Element& a) const {
    std::vector<FreeWord> keys;
    keys.reserve(a.lamps.size());
    for (const auto& [key, value] : a.lamps) keys.push_back(key);
    return keys;
  }
};

// d(wg, w'g') = sum over lamp positions of d_sigma(w_y, w'_y); cursors do
// not enter.
template <class HOps>
Rat sigma_hat_distance_with(const FreeWreath<HOps>& wreath,
                            const typename FreeWreath<HOps>::Element& a,
                            const typename FreeWreath<HOps>::Element& b,
                            const std::function<Rat(typename HOps::Elem,
                                                    typename HOps::Elem)>& d_sigma) {
  Rat total(0);
  auto ia = a.lamps.begin();
  auto ib = b.lamps.begin();
  const auto id = wreath.h.id();
  while (ia != a.lamps.end() || ib != b.lamps.end()) {
    if (ib == b.lamps.end() || (ia != a.lamps.end() && ia->first < ib->first)) {
      total += d_sigma(ia->second, id);
      ++ia;
    } else if (ia == a.lamps.end() || ib->first < ia->first) {
      total += d_sigma(id, ib->second);
      ++ib;
    } else {
      total += d_sigma(ia->second, ib->second);
      ++ia;
      ++ib;
    }
  }
  return total;
}

// Finite-H version: sigma's ground set is indexed by H elements.
template <class HOps>
Rat sigma_hat_distance(const WallsStructure& sigma, const FreeWreath<HOps>& wreath,
                       const typename FreeWreath<HOps>::Element& a,
                       const typename FreeWreath<HOps>::Element& b) {
  return sigma_hat_distance_with<HOps>(
      wreath, a, b, [&sigma](int x, int y) { return sigma.distance(x, y); });
}

// u extended from H to the configuration group: u(w) = sum over the support
// of u(w_g), with u given by its values u(h) = u(1, h).
template <class HOps>
Rat extend_cnd(const std::vector<Rat>& u_values, const FreeWreath<HOps>& wreath,
               const typename FreeWreath<HOps>::Element& a) {
  (void)wreath;
  Rat total(0);
  for (const auto& [key, value] : a.lamps) total += u_values.at(value);
  return total;
}

// Word lengths on a finite lamp group: |1| = 0, |h| = |h^-1|, and
// |hh'| <= |h| + |h'|, all validated at construction.
class LampLengths {
 public:
  LampLengths(const FiniteGroup& h, std::vector<long long> lengths);
  static LampLengths word_length(const FiniteGroup& h,
                                 const std::vector<int>& generators);

  long long at(int h_elem) const { return lengths_.at(h_elem); }

 private:
  std::vector<long long> lengths_;
};

// Covering-walk term of the wreath word length: the shortest walk in the
// Cayley tree from the identity to the cursor visiting every lamp position,
// computed on the finite subtree spanned by the query.
long long cover_walk_term(int rank, const std::vector<FreeWord>& support,
                          const FreeWord& cursor);

// |wg| = m(w, g) + total lamp length.
template <class HOps>
long long parry_length(const FreeWreath<HOps>& wreath,
                       const typename FreeWreath<HOps>::Element& a,
                       const std::function<long long(typename HOps::Elem)>& lamp_length) {
  long long total = cover_walk_term(wreath.rank, wreath.support(a), a.cursor);
  for (const auto& [key, value] : a.lamps) {
    long long l = lamp_length(value);
    if (l <= 0) throw std::invalid_argument("lamp length of a stored lamp must be positive");
    total += l;
  }
  return total;
}

inline long long parry_length(const FreeWreath<FiniteHOps>& wreath,
                              const FreeWreathElement<int>& a,
                              const LampLengths& lengths) {
  return parry_length<FiniteHOps>(wreath, a,
                                  [&lengths](int v) { return lengths.at(v); });
}

// wg = g1 h1 g1^-1 ... gk hk gk^-1 . g with {g1 < ... < gk} = Supp(w).
template <class HElem>
struct ConjugateFactorization {
  std::vector<std::pair<FreeWord, HElem>> conjugates;
  FreeWord cursor;
};

template <class HOps>
ConjugateFactorization<typename HOps::Elem> factor_conjugates(
    const FreeWreath<HOps>& wreath, const typename FreeWreath<HOps>::Element& a) {
  (void)wreath;
  ConjugateFactorization<typename HOps::Elem> f;
  f.cursor = a.cursor;
  for (const auto& [key, value] : a.lamps) f.conjugates.emplace_back(key, value);
  return f;
}

template <class HOps>
typename FreeWreath<HOps>::Element remultiply(
    const FreeWreath<HOps>& wreath,
    const ConjugateFactorization<typename HOps::Elem>& f) {
  auto out = wreath.identity();
  for (const auto& [g, h] : f.conjugates) {
    auto conj = wreath.multiply(
        wreath.multiply(wreath.cursor_only(g), wreath.lamp(FreeWord{}, h)),
        wreath.cursor_only(g.inverse()));
    out = wreath.multiply(out, conj);
  }
  return wreath.multiply(out, wreath.cursor_only(f.cursor));
}

// The four data items controlling relative property (T) subsets: cursor
// projection, lamp-value projection, union of supports, max support size.
template <class HElem>
struct RelativeTData {
  std::set<FreeWord> cursor_projection;
  std::set<HElem> lamp_projection;
  std::set<FreeWord> support_union;
  int max_support_size = 0;
};

template <class HOps>
RelativeTData<typename HOps::Elem> relative_t_data(
    const FreeWreath<HOps>& wreath,
    const std::vector<typename FreeWreath<HOps>::Element>& c) {
  (void)wreath;
  RelativeTData<typename HOps::Elem> data;
  for (const auto& e : c) {
    data.cursor_projection.insert(e.cursor);
    for (const auto& [key, value] : e.lamps) {
      data.lamp_projection.insert(value);
      data.support_union.insert(key);
    }
    data.max_support_size =
        std::max(data.max_support_size, static_cast<int>(e.lamps.size()));
  }
  return data;
}

struct SubadditiveBoundCheck {
  Rat k_constant;
  bool ok = true;
  std::vector<size_t> violators;  // indices into the element list
};

// psi(wg) <= (3k+1) K via the conjugate factorization, K bounding psi on the
// cursor, the lamps, the support positions, and the support cardinality.
template <class HOps>
SubadditiveBoundCheck subadditive_bound(
    const FreeWreath<HOps>& wreath,
    const std::vector<typename FreeWreath<HOps>::Element>& c,
    const std::function<Rat(const typename FreeWreath<HOps>::Element&)>& psi) {
  SubadditiveBoundCheck check;
  Rat k(0);
  for (const auto& e : c) {
    k = std::max(k, psi(wreath.cursor_only(e.cursor)));
    k = std::max(k, Rat(static_cast<std::int64_t>(e.lamps.size())));
    for (const auto& [key, value] : e.lamps) {
      k = std::max(k, psi(wreath.lamp(FreeWord{}, value)));
      k = std::max(k, psi(wreath.cursor_only(key)));
    }
  }
  check.k_constant = k;
  for (size_t i = 0; i < c.size(); ++i) {
    Rat bound = Rat(static_cast<std::int64_t>(3 * c[i].lamps.size() + 1)) * k;
    if (psi(c[i]) > bound) {
      check.ok = false;
      check.violators.push_back(i);
    }
  }
  return check;
}

// Permutational wreath product H wr_{G/L} G for finite G: lamp vector over
// the coset space plus a cursor in G.
struct PermWreathElement {
  std::vector<int> lamps;  // H indices, one per coset
  int cursor = 0;

  bool operator==(const PermWreathElement& o) const {
    return lamps == o.lamps && cursor == o.cursor;
  }
  bool operator<(const PermWreathElement& o) const {
    if (cursor != o.cursor) return cursor < o.cursor;
    return lamps < o.lamps;
  }
};

class PermWreath {
 public:
  PermWreath(const FiniteGroup& g, const std::vector<int>& l_elements,
             const FiniteGroup& h);

  const FiniteGroup& base_group() const { return *g_; }
  const FiniteGroup& lamp_group() const { return *h_; }
  const CosetSpace& cosets() const { return cosets_; }
  const GAction& coset_action() const { return action_; }
  int coset_of(int g) const { return cosets_.coset_of[g]; }

  PermWreathElement identity() const;
  PermWreathElement multiply(const PermWreathElement& a, const PermWreathElement& b) const;
  PermWreathElement invert(const PermWreathElement& a) const;
  std::vector<PermWreathElement> all_elements() const;  // |H|^{#cosets} * |G|

  Mask support(const PermWreathElement& a) const;

 private:
  const FiniteGroup* g_;
  const FiniteGroup* h_;
  CosetSpace cosets_;
  GAction action_;
};

struct CombinedKernelParts {
  bool use_mu = true;      // rho* of the lifted structure on W x G/L
  bool use_lambda = true;  // p* of the proper structure on G
  bool use_sigma = true;   // the direct-sum structure over G/L
};

// d_{rho* mu~}(a,b) + d_{p* lambda}(a,b) + d_{sigma^}(a,b), with parts
// optional: lambda is redundant for finite L, sigma^ for finite H.
Rat combined_kernel(const PermWreath& wreath, const WallsStructure& mu_on_cosets,
                    const WallsStructure& lambda_on_g, const WallsStructure& sigma_on_h,
                    const PermWreathElement& a, const PermWreathElement& b,
                    const CombinedKernelParts& parts = {});

}  // namespace wallkit
