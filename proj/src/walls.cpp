#include "wallkit/walls.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace wallkit {

bool cuts(const HalfSpace& a, const Mask& y) {
  if (y.empty()) throw std::invalid_argument("cuts: empty query set");
  return a.cuts(y);
}

WallsStructure::WallsStructure(int ground_size,
                               std::vector<std::pair<HalfSpace, Rat>> walls)
    : n_(ground_size) {
  std::map<Mask, Rat> merged;
  for (auto& [mask, w] : walls) {
    if (mask.size() != n_) throw std::invalid_argument("wall mask size mismatch");
    if (w <= Rat(0)) throw std::invalid_argument("wall weight must be positive");
    if (mask.empty() || mask.full()) continue;  // mu({0,X}) = 0
    merged[mask] += w;
  }
  walls_.assign(merged.begin(), merged.end());
  common_den_ = 1;
  for (const auto& [mask, w] : walls_) common_den_ = lcm64(common_den_, w.denominator());
  scaled_.reserve(walls_.size());
  for (const auto& [mask, w] : walls_) {
    scaled_.push_back(w.numerator() * (common_den_ / w.denominator()));
  }
}

Rat WallsStructure::distance(int x, int y) const {
  if (x < 0 || x >= n_ || y < 0 || y >= n_) {
    throw std::invalid_argument("distance: point out of ground set");
  }
  return Rat(distance_scaled(x, y), common_den_);
}

std::int64_t WallsStructure::distance_scaled(int x, int y) const {
  std::int64_t total = 0;
  for (size_t i = 0; i < walls_.size(); ++i) {
    if (walls_[i].first.test(x) != walls_[i].first.test(y)) total += scaled_[i];
  }
  return total;
}

Rat WallsStructure::cut_weight(const Mask& f) const {
  return Rat(cut_weight_scaled(f), common_den_);
}

std::int64_t WallsStructure::cut_weight_scaled(const Mask& f) const {
  std::int64_t total = 0;
  for (size_t i = 0; i < walls_.size(); ++i) {
    if (walls_[i].first.cuts(f)) total += scaled_[i];
  }
  return total;
}

WallsStructure WallsStructure::scaled_by(const Rat& c) const {
  if (c <= Rat(0)) throw std::invalid_argument("scale factor must be positive");
  auto scaled = walls_;
  for (auto& [mask, w] : scaled) w *= c;
  return WallsStructure(n_, std::move(scaled));
}

Rat wall_distance(const WallsStructure& mu, int x, int y) { return mu.distance(x, y); }

WallsStructure pullback(const std::vector<int>& f, const WallsStructure& mu_on_y,
                        int domain_size) {
  for (int img : f) {
    if (img < 0 || img >= mu_on_y.ground_size()) {
      throw std::invalid_argument("pullback: image out of codomain");
    }
  }
  std::vector<std::pair<HalfSpace, Rat>> walls;
  for (const auto& [b, w] : mu_on_y.walls()) {
    Mask pre(domain_size);
    for (int x = 0; x < domain_size; ++x) {
      if (b.test(f[x])) pre.set(x);
    }
    walls.emplace_back(std::move(pre), w);
  }
  return WallsStructure(domain_size, std::move(walls));
}

WallsStructure direct_sum(const std::vector<DirectSummand>& summands,
                          const std::vector<std::vector<int>>& window) {
  int m = static_cast<int>(window.size());
  for (const auto& config : window) {
    if (config.size() != summands.size()) {
      throw std::invalid_argument("direct_sum: window entry arity mismatch");
    }
    for (size_t i = 0; i < summands.size(); ++i) {
      if (config[i] < 0 || config[i] >= summands[i].walls.ground_size()) {
        throw std::invalid_argument("direct_sum: coordinate out of ground set");
      }
    }
  }
  for (const auto& s : summands) {
    if (s.basepoint < 0 || s.basepoint >= s.walls.ground_size()) {
      throw std::invalid_argument("direct_sum: basepoint out of ground set");
    }
  }
  std::vector<std::pair<HalfSpace, Rat>> walls;
  for (size_t i = 0; i < summands.size(); ++i) {
    for (const auto& [a, w] : summands[i].walls.walls()) {
      Mask lifted(m);
      for (int j = 0; j < m; ++j) {
        if (a.test(window[j][i])) lifted.set(j);
      }
      walls.emplace_back(std::move(lifted), w);
    }
  }
  return WallsStructure(m, std::move(walls));
}

std::vector<std::vector<int>> l1_embed(const WallsStructure& mu, int basepoint) {
  int n = mu.ground_size();
  if (basepoint < 0 || basepoint >= n) {
    throw std::invalid_argument("l1_embed: basepoint out of ground set");
  }
  std::vector<std::vector<int>> vectors(n, std::vector<int>(mu.wall_count()));
  for (int x = 0; x < n; ++x) {
    for (int i = 0; i < mu.wall_count(); ++i) {
      const auto& a = mu.walls()[i].first;
      vectors[x][i] = static_cast<int>(a.test(x)) - static_cast<int>(a.test(basepoint));
    }
  }
  return vectors;
}

Rat weighted_l1(const WallsStructure& mu, const std::vector<int>& u,
                const std::vector<int>& v) {
  Rat total(0);
  for (int i = 0; i < mu.wall_count(); ++i) {
    int diff = u[i] - v[i];
    if (diff != 0) total += mu.walls()[i].second * Rat(diff < 0 ? -diff : diff);
  }
  return total;
}

bool lp_norm_check(const WallsStructure& mu, int basepoint, double p) {
  if (p < 1.0) throw std::invalid_argument("lp_norm_check: p must be >= 1");
  auto f = l1_embed(mu, basepoint);
  int n = mu.ground_size();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (p == 1.0) {
        if (weighted_l1(mu, f[x], f[y]) != mu.distance(x, y)) return false;
        continue;
      }
      double sum = 0;
      for (int i = 0; i < mu.wall_count(); ++i) {
        int diff = std::abs(f[x][i] - f[y][i]);
        if (diff != 0) sum += to_double(mu.walls()[i].second) * std::pow(diff, p);
      }
      double norm = std::pow(sum, 1.0 / p);
      double expected = std::pow(to_double(mu.distance(x, y)), 1.0 / p);
      if (std::abs(norm - expected) > 1e-12 * std::max(1.0, expected)) return false;
    }
  }
  return true;
}

AlternateWalls::AlternateWalls(int ground_size,
                               std::vector<std::pair<Mask, Rat>> partitions)
    : n_(ground_size) {
  std::map<Mask, Rat> merged;
  for (auto& [mask, w] : partitions) {
    if (mask.size() != n_) throw std::invalid_argument("partition mask size mismatch");
    if (w <= Rat(0)) throw std::invalid_argument("partition weight must be positive");
    if (mask.empty() || mask.full()) continue;
    Mask canon = mask.test(0) ? mask.complement() : mask;
    merged[canon] += w;
  }
  parts_.assign(merged.begin(), merged.end());
}

Rat AlternateWalls::distance(int x, int y) const {
  Rat total(0);
  for (const auto& [a, w] : parts_) {
    if (a.test(x) != a.test(y)) total += w;
  }
  return total;
}

AlternateWalls to_alternate(const WallsStructure& mu) {
  std::vector<std::pair<Mask, Rat>> parts;
  parts.reserve(mu.wall_count());
  for (const auto& [a, w] : mu.walls()) parts.emplace_back(a, w);
  return AlternateWalls(mu.ground_size(), std::move(parts));
}

WallsStructure from_alternate(const AlternateWalls& nu) {
  std::vector<std::pair<HalfSpace, Rat>> walls;
  walls.reserve(2 * nu.partitions().size());
  for (const auto& [a, w] : nu.partitions()) {
    walls.emplace_back(a, w / 2);
    walls.emplace_back(a.complement(), w / 2);
  }
  return WallsStructure(nu.ground_size(), std::move(walls));
}

WallsStructure symmetrize(const WallsStructure& mu) {
  return from_alternate(to_alternate(mu));
}

WallsStructure orbit_invariant_walls(
    const GAction& action, const std::vector<std::pair<HalfSpace, Rat>>& seeds) {
  int n = action.ground_size();
  std::vector<std::pair<HalfSpace, Rat>> walls;
  for (const auto& [seed, w] : seeds) {
    if (seed.size() != n) throw std::invalid_argument("seed mask size mismatch");
    if (seed.empty() || seed.full()) continue;
    std::map<Mask, bool> orbit;
    for (int g = 0; g < action.group().order(); ++g) {
      orbit[seed.apply_permutation(action.perm(g))] = true;
    }
    for (const auto& [mask, unused] : orbit) walls.emplace_back(mask, w);
  }
  return WallsStructure(n, std::move(walls));
}

KernelTable KernelTable::from_function(int m, const std::function<Rat(int, int)>& f) {
  KernelTable k(m);
  for (int x = 0; x < m; ++x) {
    for (int y = x; y < m; ++y) k.set(x, y, f(x, y));
  }
  return k;
}

void KernelTable::set(int x, int y, const Rat& v) {
  if (v < Rat(0)) throw std::invalid_argument("kernel values must be nonnegative");
  values_[x * m_ + y] = v;
  values_[y * m_ + x] = v;
}

KernelTable KernelTable::operator+(const KernelTable& o) const {
  if (m_ != o.m_) throw std::invalid_argument("kernel size mismatch");
  KernelTable k(m_);
  for (int i = 0; i < m_ * m_; ++i) k.values_[i] = values_[i] + o.values_[i];
  return k;
}

int KernelTable::sublevel_count(int x0, const Rat& r) const {
  int count = 0;
  for (int y = 0; y < m_; ++y) {
    if (at(x0, y) <= r) ++count;
  }
  return count;
}

std::vector<Rat> KernelTable::level_values(int x0) const {
  std::vector<Rat> vals;
  for (int y = 0; y < m_; ++y) vals.push_back(at(x0, y));
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  return vals;
}

std::vector<std::string> KernelTable::invariance_violations(const GAction& action) const {
  std::vector<std::string> out;
  if (action.ground_size() != m_) {
    throw std::invalid_argument("kernel/action ground set mismatch");
  }
  for (int g = 0; g < action.group().order(); ++g) {
    for (int x = 0; x < m_; ++x) {
      for (int y = x; y < m_; ++y) {
        if (at(action.apply(g, x), action.apply(g, y)) != at(x, y)) {
          out.push_back("g=" + std::to_string(g) + " x=" + std::to_string(x) +
                        " y=" + std::to_string(y));
        }
      }
    }
  }
  return out;
}

}  // namespace wallkit
