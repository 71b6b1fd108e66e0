#include "wallkit/wreath.hpp"

#include <queue>
#include <stdexcept>

namespace wallkit {

LampLengths::LampLengths(const FiniteGroup& h, std::vector<long long> lengths)
    : lengths_(std::move(lengths)) {
  if (static_cast<int>(lengths_.size()) != h.order()) {
    throw std::invalid_argument("one length per lamp group element required");
  }
  if (lengths_[h.identity()] != 0) {
    throw std::invalid_argument("length of the identity must be 0");
  }
  for (int a = 0; a < h.order(); ++a) {
    if (lengths_[a] < 0 || (a != h.identity() && lengths_[a] == 0)) {
      throw std::invalid_argument("lengths must be positive off the identity");
    }
    if (lengths_[a] != lengths_[h.inv(a)]) {
      throw std::invalid_argument("length must be symmetric");
    }
    for (int b = 0; b < h.order(); ++b) {
      if (lengths_[h.mul(a, b)] > lengths_[a] + lengths_[b]) {
        throw std::invalid_argument("length must be subadditive");
      }
    }
  }
}

LampLengths LampLengths::word_length(const FiniteGroup& h,
                                     const std::vector<int>& generators) {
  std::vector<long long> dist(h.order(), -1);
  std::queue<int> q;
  dist[h.identity()] = 0;
  q.push(h.identity());
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (int s : generators) {
      for (int next : {h.mul(x, s), h.mul(x, h.inv(s))}) {
        if (dist[next] < 0) {
          dist[next] = dist[x] + 1;
          q.push(next);
        }
      }
    }
  }
  for (long long d : dist) {
    if (d < 0) throw std::invalid_argument("set does not generate the lamp group");
  }
  return LampLengths(h, std::move(dist));
}

long long cover_walk_term(int rank, const std::vector<FreeWord>& support,
                          const FreeWord& cursor) {
  WordTrie trie(rank);
  int start = trie.insert(FreeWord{});
  int end = trie.insert(cursor);
  std::vector<int> terminal_ids;
  for (const auto& w : support) terminal_ids.push_back(trie.insert(w));
  Tree t = trie.tree();
  Mask terminals = Mask::of_points(t.vertex_count(), terminal_ids);
  terminals.set(start);
  terminals.set(end);
  return cover_walk_length(t, start, end, terminals);
}

PermWreath::PermWreath(const FiniteGroup& g, const std::vector<int>& l_elements,
                       const FiniteGroup& h)
    : g_(&g),
      h_(&h),
      cosets_(left_cosets(g, l_elements)),
      action_(GAction::on_cosets(g, cosets_.cosets)) {}

PermWreathElement PermWreath::identity() const {
  return {std::vector<int>(cosets_.count(), h_->identity()), g_->identity()};
}

PermWreathElement PermWreath::multiply(const PermWreathElement& a,
                                       const PermWreathElement& b) const {
  PermWreathElement out;
  out.cursor = g_->mul(a.cursor, b.cursor);
  out.lamps.resize(cosets_.count());
  int ginv = g_->inv(a.cursor);
  for (int x = 0; x < cosets_.count(); ++x) {
    out.lamps[x] = h_->mul(a.lamps[x], b.lamps[action_.apply(ginv, x)]);
  }
  return out;
}

PermWreathElement PermWreath::invert(const PermWreathElement& a) const {
  PermWreathElement out;
  out.cursor = g_->inv(a.cursor);
  out.lamps.resize(cosets_.count());
  for (int x = 0; x < cosets_.count(); ++x) {
    out.lamps[x] = h_->inv(a.lamps[action_.apply(a.cursor, x)]);
  }
  return out;
}

std::vector<PermWreathElement> PermWreath::all_elements() const {
  std::vector<PermWreathElement> out;
  int m = cosets_.count();
  std::vector<int> lamps(m, 0);
  while (true) {
    for (int g = 0; g < g_->order(); ++g) out.push_back({lamps, g});
    int i = m - 1;
    while (i >= 0 && lamps[i] == h_->order() - 1) lamps[i--] = 0;
    if (i < 0) break;
    ++lamps[i];
  }
  return out;
}

Mask PermWreath::support(const PermWreathElement& a) const {
  Mask m(cosets_.count());
  for (int x = 0; x < cosets_.count(); ++x) {
    if (a.lamps[x] != h_->identity()) m.set(x);
  }
  return m;
}

Rat combined_kernel(const PermWreath& wreath, const WallsStructure& mu_on_cosets,
                    const WallsStructure& lambda_on_g, const WallsStructure& sigma_on_h,
                    const PermWreathElement& a, const PermWreathElement& b,
                    const CombinedKernelParts& parts) {
  const int m = wreath.cosets().count();
  if (parts.use_mu && mu_on_cosets.ground_size() != m) {
    throw std::invalid_argument("combined_kernel: mu must live on G/L");
  }
  if (parts.use_lambda && lambda_on_g.ground_size() != wreath.base_group().order()) {
    throw std::invalid_argument("combined_kernel: lambda must live on G");
  }
  if (parts.use_sigma && sigma_on_h.ground_size() != wreath.lamp_group().order()) {
    throw std::invalid_argument("combined_kernel: sigma must live on H");
  }
  Rat total(0);
  if (parts.use_mu) {
    Mask f(m);
    for (int x = 0; x < m; ++x) {
      if (a.lamps[x] != b.lamps[x]) f.set(x);
    }
    f.set(wreath.coset_of(a.cursor));
    f.set(wreath.coset_of(b.cursor));
    total += mu_on_cosets.cut_weight(f);
  }
  if (parts.use_lambda) total += lambda_on_g.distance(a.cursor, b.cursor);
  if (parts.use_sigma) {
    for (int x = 0; x < m; ++x) {
      if (a.lamps[x] != b.lamps[x]) total += sigma_on_h.distance(a.lamps[x], b.lamps[x]);
    }
  }
  return total;
}

}  // namespace wallkit
