#include "wallkit/finite_group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace wallkit {

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table)
    : n_(static_cast<int>(table.size())), table_(std::move(table)) {
  if (n_ == 0) throw std::invalid_argument("empty multiplication table");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n_) {
      throw std::invalid_argument("multiplication table is not square");
    }
    for (int v : row) {
      if (v < 0 || v >= n_) throw std::invalid_argument("table entry out of range");
    }
  }
  // Latin square
  for (int i = 0; i < n_; ++i) {
    std::vector<bool> row(n_, false), col(n_, false);
    for (int j = 0; j < n_; ++j) {
      if (row[table_[i][j]] || col[table_[j][i]]) {
        throw std::invalid_argument("multiplication table is not a Latin square");
      }
      row[table_[i][j]] = true;
      col[table_[j][i]] = true;
    }
  }
  // Two-sided identity
  identity_ = -1;
  for (int e = 0; e < n_; ++e) {
    bool ok = true;
    for (int g = 0; g < n_ && ok; ++g) {
      ok = table_[e][g] == g && table_[g][e] == g;
    }
    if (ok) {
      identity_ = e;
      break;
    }
  }
  if (identity_ < 0) throw std::invalid_argument("no identity element");
  // Associativity
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) {
      for (int c = 0; c < n_; ++c) {
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) {
          throw std::invalid_argument("multiplication table is not associative");
        }
      }
    }
  }
  inverse_.assign(n_, -1);
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) {
      if (table_[a][b] == identity_) {
        inverse_[a] = b;
        break;
      }
    }
  }
}

FiniteGroup FiniteGroup::cyclic(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  }
  return FiniteGroup(std::move(t));
}

namespace {

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> perms;
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return perms;
}

}  // namespace

FiniteGroup FiniteGroup::symmetric(int n) {
  auto perms = all_permutations(n);
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
  int order = static_cast<int>(perms.size());
  std::vector<std::vector<int>> t(order, std::vector<int>(order));
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      // (p_a p_b)(x) = p_a(p_b(x))
      std::vector<int> comp(n);
      for (int x = 0; x < n; ++x) comp[x] = perms[a][perms[b][x]];
      t[a][b] = index[comp];
    }
  }
  return FiniteGroup(std::move(t));
}

FiniteGroup FiniteGroup::dihedral(int n) {
  // Elements (r, s): rotation r in Z/n, reflection flag s.
  // (r1,s1)(r2,s2) = (r1 + (-1)^{s1} r2, s1+s2).
  int order = 2 * n;
  auto id = [n](int r, int s) { return s * n + ((r % n) + n) % n; };
  std::vector<std::vector<int>> t(order, std::vector<int>(order));
  for (int s1 = 0; s1 < 2; ++s1) {
    for (int r1 = 0; r1 < n; ++r1) {
      for (int s2 = 0; s2 < 2; ++s2) {
        for (int r2 = 0; r2 < n; ++r2) {
          int r = s1 ? r1 - r2 : r1 + r2;
          t[id(r1, s1)][id(r2, s2)] = id(r, (s1 + s2) % 2);
        }
      }
    }
  }
  return FiniteGroup(std::move(t));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  int na = a.order(), nb = b.order();
  int order = na * nb;
  std::vector<std::vector<int>> t(order, std::vector<int>(order));
  for (int x = 0; x < order; ++x) {
    for (int y = 0; y < order; ++y) {
      t[x][y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
    }
  }
  return FiniteGroup(std::move(t));
}

std::vector<int> FiniteGroup::generated_subgroup(const std::vector<int>& generators) const {
  std::set<int> closure{identity_};
  std::vector<int> frontier{identity_};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier) {
      for (int s : generators) {
        for (int y : {table_[x][s], table_[x][inverse_[s]]}) {
          if (closure.insert(y).second) next.push_back(y);
        }
      }
    }
    frontier = std::move(next);
  }
  return {closure.begin(), closure.end()};
}

bool FiniteGroup::is_subgroup(const std::vector<int>& elements) const {
  if (elements.empty()) return false;
  std::set<int> h(elements.begin(), elements.end());
  for (int e : h) {
    if (e < 0 || e >= n_) return false;
  }
  if (!h.count(identity_)) return false;
  for (int a : h) {
    if (!h.count(inverse_[a])) return false;
    for (int b : h) {
      if (!h.count(table_[a][b])) return false;
    }
  }
  return true;
}

GAction::GAction(const FiniteGroup& group, int ground_size,
                 std::vector<std::vector<int>> perms)
    : group_(&group), m_(ground_size), perms_(std::move(perms)) {
  if (static_cast<int>(perms_.size()) != group.order()) {
    throw std::invalid_argument("one permutation per group element required");
  }
  for (const auto& p : perms_) {
    if (static_cast<int>(p.size()) != m_) {
      throw std::invalid_argument("permutation size mismatch");
    }
    std::vector<bool> seen(m_, false);
    for (int v : p) {
      if (v < 0 || v >= m_ || seen[v]) throw std::invalid_argument("not a permutation");
      seen[v] = true;
    }
  }
  const int e = group.identity();
  for (int x = 0; x < m_; ++x) {
    if (perms_[e][x] != x) throw std::invalid_argument("identity must act trivially");
  }
  for (int g = 0; g < group.order(); ++g) {
    for (int h = 0; h < group.order(); ++h) {
      int gh = group.mul(g, h);
      for (int x = 0; x < m_; ++x) {
        if (perms_[gh][x] != perms_[g][perms_[h][x]]) {
          throw std::invalid_argument("action is not compatible with the group law");
        }
      }
    }
  }
}

GAction GAction::cyclic_shift(const FiniteGroup& cyclic_group) {
  int n = cyclic_group.order();
  std::vector<std::vector<int>> perms(n, std::vector<int>(n));
  for (int g = 0; g < n; ++g) {
    for (int x = 0; x < n; ++x) perms[g][x] = (g + x) % n;
  }
  return GAction(cyclic_group, n, std::move(perms));
}

GAction GAction::on_cosets(const FiniteGroup& group,
                           const std::vector<std::vector<int>>& cosets) {
  int m = static_cast<int>(cosets.size());
  std::vector<int> coset_of(group.order(), -1);
  for (int c = 0; c < m; ++c) {
    for (int e : cosets[c]) coset_of[e] = c;
  }
  std::vector<std::vector<int>> perms(group.order(), std::vector<int>(m));
  for (int g = 0; g < group.order(); ++g) {
    for (int c = 0; c < m; ++c) {
      perms[g][c] = coset_of[group.mul(g, cosets[c].front())];
    }
  }
  return GAction(group, m, std::move(perms));
}

GAction GAction::trivial(const FiniteGroup& group, int ground_size) {
  std::vector<int> id(ground_size);
  std::iota(id.begin(), id.end(), 0);
  return GAction(group, ground_size,
                 std::vector<std::vector<int>>(group.order(), id));
}

CosetSpace left_cosets(const FiniteGroup& g, const std::vector<int>& h_elements) {
  if (!g.is_subgroup(h_elements)) {
    throw std::invalid_argument("left_cosets: not a subgroup");
  }
  std::vector<int> h(h_elements);
  std::sort(h.begin(), h.end());
  h.erase(std::unique(h.begin(), h.end()), h.end());

  CosetSpace cs;
  cs.group = &g;
  cs.subgroup = h;
  cs.coset_of.assign(g.order(), -1);
  // Scanning representatives in increasing element order makes each coset's
  // index the rank of its minimal element.
  for (int rep = 0; rep < g.order(); ++rep) {
    if (cs.coset_of[rep] >= 0) continue;
    std::vector<int> coset;
    for (int x : h) coset.push_back(g.mul(rep, x));
    std::sort(coset.begin(), coset.end());
    int idx = static_cast<int>(cs.cosets.size());
    for (int e : coset) cs.coset_of[e] = idx;
    cs.cosets.push_back(std::move(coset));
  }
  return cs;
}

}  // namespace wallkit
