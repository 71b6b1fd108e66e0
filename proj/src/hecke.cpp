#include "wallkit/hecke.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

namespace wallkit {

HeckePairReport hecke_check(const FiniteGroup& g, const std::vector<int>& h_elements) {
  HeckePairReport report;
  report.cosets = left_cosets(g, h_elements);
  const auto& cs = report.cosets;
  std::vector<int> orbit_of(cs.count(), -1);
  for (int c = 0; c < cs.count(); ++c) {
    if (orbit_of[c] >= 0) continue;
    std::vector<int> orbit;
    std::queue<int> q;
    orbit_of[c] = static_cast<int>(report.orbits.size());
    q.push(c);
    while (!q.empty()) {
      int cur = q.front();
      q.pop();
      orbit.push_back(cur);
      for (int h : cs.subgroup) {
        int next = cs.coset_of[g.mul(h, cs.cosets[cur].front())];
        if (orbit_of[next] < 0) {
          orbit_of[next] = orbit_of[c];
          q.push(next);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    report.orbits.push_back(std::move(orbit));
  }
  for (const auto& orbit : report.orbits) {
    report.orbit_sizes.push_back(static_cast<int>(orbit.size()));
  }
  std::sort(report.orbit_sizes.begin(), report.orbit_sizes.end());
  report.verdict = true;
  return report;
}

HeckeKernelResult hecke_kernel(const FiniteGroup& g, const std::vector<int>& h_elements,
                               const std::vector<Rat>& f) {
  if (static_cast<int>(f.size()) != g.order()) {
    throw std::invalid_argument("hecke_kernel: f must be defined on all of G");
  }
  CosetSpace cs = left_cosets(g, h_elements);

  std::vector<Rat> fs(f);
  bool symmetrized = false;
  for (int x = 0; x < g.order(); ++x) {
    if (f[x] != f[g.inv(x)]) {
      symmetrized = true;
      break;
    }
  }
  if (symmetrized) {
    for (int x = 0; x < g.order(); ++x) fs[x] = f[x] + f[g.inv(x)];
  }

  // k(g) = min of fs over the double coset HgH.
  std::vector<Rat> k(g.order());
  std::vector<bool> done(g.order(), false);
  for (int x = 0; x < g.order(); ++x) {
    if (done[x]) continue;
    std::vector<int> double_coset;
    for (int h1 : cs.subgroup) {
      for (int h2 : cs.subgroup) {
        double_coset.push_back(g.mul(g.mul(h1, x), h2));
      }
    }
    std::sort(double_coset.begin(), double_coset.end());
    double_coset.erase(std::unique(double_coset.begin(), double_coset.end()),
                       double_coset.end());
    Rat minimum = fs[double_coset.front()];
    for (int w : double_coset) minimum = std::min(minimum, fs[w]);
    for (int w : double_coset) {
      k[w] = minimum;
      done[w] = true;
    }
  }

  KernelTable kernel(cs.count());
  for (int c1 = 0; c1 < cs.count(); ++c1) {
    for (int c2 = c1; c2 < cs.count(); ++c2) {
      int rep1 = cs.cosets[c1].front();
      int rep2 = cs.cosets[c2].front();
      kernel.set(c1, c2, k[g.mul(g.inv(rep1), rep2)]);
    }
  }
  return {std::move(kernel), std::move(k), symmetrized};
}

std::vector<Rat> word_length_function(const FiniteGroup& g,
                                      const std::vector<int>& generators) {
  std::vector<int> dist(g.order(), -1);
  std::queue<int> q;
  dist[g.identity()] = 0;
  q.push(g.identity());
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (int s : generators) {
      for (int next : {g.mul(x, s), g.mul(x, g.inv(s))}) {
        if (dist[next] < 0) {
          dist[next] = dist[x] + 1;
          q.push(next);
        }
      }
    }
  }
  std::vector<Rat> f(g.order());
  for (int x = 0; x < g.order(); ++x) {
    if (dist[x] < 0) {
      throw std::invalid_argument("word_length_function: set does not generate G");
    }
    f[x] = Rat(dist[x]);
  }
  return f;
}

CosetGraph coset_graph(const FiniteGroup& g, const std::vector<int>& h_elements,
                       const std::vector<int>& generators) {
  std::set<int> gen_set(generators.begin(), generators.end());
  for (int s : generators) {
    if (!gen_set.count(g.inv(s))) {
      throw std::invalid_argument("coset_graph: generating set must be symmetric");
    }
  }
  CosetGraph graph;
  graph.cosets = left_cosets(g, h_elements);
  const auto& cs = graph.cosets;
  graph.adjacency.resize(cs.count());
  for (int c = 0; c < cs.count(); ++c) {
    std::set<int> nbrs;
    for (int member : cs.cosets[c]) {
      for (int s : generators) nbrs.insert(cs.coset_of[g.mul(member, s)]);
    }
    nbrs.erase(c);
    graph.adjacency[c].assign(nbrs.begin(), nbrs.end());
  }
  // Connectivity via BFS from the coset of the identity.
  std::vector<int> dist(cs.count(), -1);
  std::queue<int> q;
  int root = cs.coset_of[g.identity()];
  dist[root] = 0;
  q.push(root);
  int reached = 0;
  while (!q.empty()) {
    int c = q.front();
    q.pop();
    ++reached;
    for (int n : graph.adjacency[c]) {
      if (dist[n] < 0) {
        dist[n] = dist[c] + 1;
        q.push(n);
      }
    }
  }
  graph.connected = reached == cs.count();
  return graph;
}

KernelTable CosetGraph::distance_kernel() const {
  if (!connected) throw std::invalid_argument("distance kernel needs a connected graph");
  int m = static_cast<int>(adjacency.size());
  KernelTable kernel(m);
  for (int src = 0; src < m; ++src) {
    std::vector<int> dist(m, -1);
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
      int c = q.front();
      q.pop();
      for (int n : adjacency[c]) {
        if (dist[n] < 0) {
          dist[n] = dist[c] + 1;
          q.push(n);
        }
      }
    }
    for (int dst = 0; dst < m; ++dst) kernel.set(src, dst, Rat(dist[dst]));
  }
  return kernel;
}

HeckeVerdictReport kernel_to_hecke_verdict(const FiniteGroup& g,
                                           const std::vector<int>& h_elements,
                                           const KernelTable& kernel) {
  HeckeVerdictReport report;
  CosetSpace cs = left_cosets(g, h_elements);
  if (kernel.size() != cs.count()) {
    throw std::invalid_argument("kernel must live on G/H");
  }
  GAction action = GAction::on_cosets(g, cs.cosets);
  report.invariant = kernel.invariance_violations(action).empty();
  if (!report.invariant) report.notes.push_back("kernel is not G-invariant");

  int base = cs.coset_of[g.identity()];
  auto levels = kernel.level_values(base);
  report.proper_precondition = cs.count() == 1 || levels.size() > 1;
  if (!report.proper_precondition) {
    report.notes.push_back("kernel is constant: truncation of a non-proper kernel");
  }

  // Proof replay: h.(gH) stays in the level set {x : K(eH,x) = K(eH,gH)},
  // so every H-orbit sits inside a (finite) level set.
  bool orbits_in_levels = true;
  for (int c = 0; c < cs.count(); ++c) {
    for (int h : cs.subgroup) {
      int image = cs.coset_of[g.mul(h, cs.cosets[c].front())];
      if (kernel.at(base, image) != kernel.at(base, c)) orbits_in_levels = false;
    }
  }
  if (!orbits_in_levels) {
    report.notes.push_back("an H-orbit escapes its level set (kernel not invariant)");
  }
  report.verdict = report.invariant && report.proper_precondition && orbits_in_levels;

  // Cross-check against direct enumeration: every enumerated orbit must be
  // constant on K(eH, .), and the verdicts must agree on finite input.
  HeckePairReport direct = hecke_check(g, h_elements);
  report.matches_direct_check = true;
  for (const auto& orbit : direct.orbits) {
    for (int member : orbit) {
      if (kernel.at(base, member) != kernel.at(base, orbit.front())) {
        report.matches_direct_check = false;
      }
    }
  }
  if (report.verdict && !direct.verdict) report.matches_direct_check = false;
  return report;
}

}  // namespace wallkit
