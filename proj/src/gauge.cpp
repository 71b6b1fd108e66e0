#include "wallkit/gauge.hpp"

#include <array>
#include <stdexcept>

namespace wallkit {

std::string GaugeViolation::describe() const {
  if (kind == Kind::symmetry) {
    return "symmetry broken at (" + std::to_string(w1) + "," + std::to_string(w2) + ")";
  }
  return "subadditivity broken at (" + std::to_string(w1) + "," + std::to_string(w2) +
         "," + std::to_string(w3) + ")";
}

GaugeReport check_gauge_axioms(const Gauge& g,
                               const std::vector<std::array<int, 3>>& triples) {
  GaugeReport report;
  for (const auto& [a, b, c] : triples) {
    if (g.eval(a, b) != g.eval(b, a)) {
      report.violations.push_back({GaugeViolation::Kind::symmetry, a, b, -1});
    }
    if (!g.eval(a, c).subset_of(g.eval(a, b) | g.eval(b, c))) {
      report.violations.push_back({GaugeViolation::Kind::subadditivity, a, b, c});
    }
  }
  return report;
}

GaugeReport check_gauge_axioms(const Gauge& g) {
  std::vector<std::array<int, 3>> triples;
  for (int a = 0; a < g.domain_size; ++a) {
    for (int b = 0; b < g.domain_size; ++b) {
      for (int c = 0; c < g.domain_size; ++c) triples.push_back({a, b, c});
    }
  }
  return check_gauge_axioms(g, triples);
}

Gauge pair_gauge(int n) {
  Gauge g;
  g.domain_size = n;
  g.target_size = n;
  g.eval = [n](int w1, int w2) {
    Mask m(n);
    m.set(w1);
    m.set(w2);
    return m;
  };
  return g;
}

std::vector<std::vector<int>> ConfigurationSpace::all_configurations() const {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(n, 0);
  while (true) {
    out.push_back(cur);
    int i = n - 1;
    while (i >= 0 && cur[i] == h->order() - 1) cur[i--] = 0;
    if (i < 0) break;
    ++cur[i];
  }
  return out;
}

std::vector<int> ConfigurationSpace::multiply(const std::vector<int>& a,
                                              const std::vector<int>& b) const {
  std::vector<int> out(n);
  for (int x = 0; x < n; ++x) out[x] = h->mul(a[x], b[x]);
  return out;
}

std::vector<int> ConfigurationSpace::invert(const std::vector<int>& a) const {
  std::vector<int> out(n);
  for (int x = 0; x < n; ++x) out[x] = h->inv(a[x]);
  return out;
}

std::vector<int> ConfigurationSpace::shift(const GAction& action, int g,
                                           const std::vector<int>& w) const {
  std::vector<int> out(n);
  int ginv = action.group().inv(g);
  for (int x = 0; x < n; ++x) out[x] = w[action.apply(ginv, x)];
  return out;
}

Mask ConfigurationSpace::support(const std::vector<int>& w) const {
  Mask m(n);
  for (int x = 0; x < n; ++x) {
    if (w[x] != h->identity()) m.set(x);
  }
  return m;
}

Mask ConfigurationSpace::difference_set(const std::vector<int>& a,
                                        const std::vector<int>& b) const {
  Mask m(n);
  for (int x = 0; x < n; ++x) {
    if (a[x] != b[x]) m.set(x);
  }
  return m;
}

Gauge support_gauge(const ConfigurationSpace& space,
                    const std::vector<std::vector<int>>& window) {
  Gauge g;
  g.domain_size = static_cast<int>(window.size());
  g.target_size = space.n;
  g.left_invariant = true;
  g.equivariant = true;
  g.eval = [space, window](int w1, int w2) {
    return space.difference_set(window[w1], window[w2]);
  };
  return g;
}

Mask perm_support(const std::vector<int>& perm) {
  int n = static_cast<int>(perm.size());
  Mask m(n);
  for (int x = 0; x < n; ++x) {
    if (perm[x] != x) m.set(x);
  }
  return m;
}

Gauge perm_support_gauge(int n, const std::vector<std::vector<int>>& window) {
  Gauge g;
  g.domain_size = static_cast<int>(window.size());
  g.target_size = n;
  g.left_invariant = true;
  g.eval = [n, window](int w1, int w2) {
    // phi(sigma, tau) = Supp(sigma^-1 tau) = {x : sigma(x) != tau(x)}... the
    // set where the permutations disagree.
    Mask m(n);
    for (int x = 0; x < n; ++x) {
      if (window[w1][x] != window[w2][x]) m.set(x);
    }
    return m;
  };
  return g;
}

FreeProductWord FreeProduct::normalize(
    const std::vector<std::pair<int, int>>& raw) const {
  FreeProductWord out;
  for (auto [factor, elem] : raw) {
    if (factor < 0 || factor >= static_cast<int>(factors.size())) {
      throw std::invalid_argument("free product factor index out of range");
    }
    const FiniteGroup& f = *factors[factor];
    if (elem == f.identity()) continue;
    // The processed prefix stays in normal form, so one merge suffices:
    // a vanishing merge exposes two syllables that already alternated.
    if (!out.syllables.empty() && out.syllables.back().first == factor) {
      int merged = f.mul(out.syllables.back().second, elem);
      out.syllables.pop_back();
      if (merged != f.identity()) out.syllables.emplace_back(factor, merged);
    } else {
      out.syllables.emplace_back(factor, elem);
    }
  }
  return out;
}

FreeProductWord FreeProduct::multiply(const FreeProductWord& a,
                                      const FreeProductWord& b) const {
  std::vector<std::pair<int, int>> raw = a.syllables;
  raw.insert(raw.end(), b.syllables.begin(), b.syllables.end());
  return normalize(raw);
}

FreeProductWord FreeProduct::invert(const FreeProductWord& a) const {
  std::vector<std::pair<int, int>> raw;
  for (auto it = a.syllables.rbegin(); it != a.syllables.rend(); ++it) {
    raw.emplace_back(it->first, factors[it->first]->inv(it->second));
  }
  return normalize(raw);
}

Mask FreeProduct::factor_support(const FreeProductWord& w) const {
  Mask m(static_cast<int>(factors.size()));
  for (auto [factor, elem] : w.syllables) m.set(factor);
  return m;
}

Gauge free_product_gauge(const FreeProduct& fp,
                         const std::vector<FreeProductWord>& window) {
  Gauge g;
  g.domain_size = static_cast<int>(window.size());
  g.target_size = static_cast<int>(fp.factors.size());
  g.left_invariant = true;
  g.eval = [fp, window](int w1, int w2) {
    return fp.factor_support(fp.multiply(fp.invert(window[w1]), window[w2]));
  };
  return g;
}

int cut_pseudometric(const Mask& a, const Gauge& phi, int y1, int y2) {
  if (phi.eval(y1, y1).count() != 1 || phi.eval(y2, y2).count() != 1) {
    throw std::invalid_argument("cut_pseudometric: phi(y,y) must be a singleton");
  }
  Mask f = phi.eval(y1, y2);
  if (f.empty()) return 0;
  return a.cuts(f) ? 1 : 0;
}

}  // namespace wallkit
