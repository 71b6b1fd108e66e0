#include "wallkit/lift.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace wallkit {

namespace {

Mask pair_set(const Gauge& phi, WindowPoint p, WindowPoint q) {
  Mask f = phi.eval(p.w, q.w);
  f.set(p.x);
  f.set(q.x);
  return f;
}

}  // namespace

Rat lift_distance(const WallsStructure& mu, const Gauge& phi, WindowPoint p,
                  WindowPoint q) {
  return mu.cut_weight(pair_set(phi, p, q));
}

WallsStructure lift_walls_explicit(const WallsStructure& mu, const Gauge& phi,
                                   const std::vector<WindowPoint>& window) {
  int m = static_cast<int>(window.size());
  // Lemma "d_A is a pseudodistance" needs a singleton diagonal, i.e.
  // phi(w,w) empty so that the pair set of (wx, wx) is exactly {x}.
  for (const auto& p : window) {
    if (!phi.eval(p.w, p.w).empty()) {
      throw std::invalid_argument("lift_walls_explicit: gauge has phi(w,w) != {}");
    }
  }
  std::vector<std::pair<HalfSpace, Rat>> walls;
  for (const auto& [a, weight] : mu.walls()) {
    // Blocks of the {0,1}-pseudodistance d_A over the window. Zero distance
    // is transitive, so a linear sweep against block representatives works.
    std::vector<int> block_of(m, -1);
    std::vector<int> reps;
    for (int i = 0; i < m; ++i) {
      for (size_t b = 0; b < reps.size(); ++b) {
        Mask f = pair_set(phi, window[i], window[reps[b]]);
        if (!a.cuts(f)) {
          block_of[i] = static_cast<int>(b);
          break;
        }
      }
      if (block_of[i] < 0) {
        block_of[i] = static_cast<int>(reps.size());
        reps.push_back(i);
      }
    }
    for (size_t b = 0; b < reps.size(); ++b) {
      Mask block(m);
      for (int i = 0; i < m; ++i) {
        if (block_of[i] == static_cast<int>(b)) block.set(i);
      }
      walls.emplace_back(std::move(block), weight / 2);
    }
  }
  return WallsStructure(m, std::move(walls));
}

std::vector<LiftInvarianceViolation> check_lift_equivariance(
    const WallsStructure& mu, const Gauge& phi,
    const std::vector<WindowPoint>& window,
    const std::vector<WindowAction>& actors) {
  int m = static_cast<int>(window.size());
  // Scaled integer distance table once, then pure table comparisons per actor.
  std::vector<std::int64_t> dist(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i) {
    dist[static_cast<size_t>(i) * m + i] = 0;
    for (int j = i + 1; j < m; ++j) {
      std::int64_t d = mu.cut_weight_scaled(pair_set(phi, window[i], window[j]));
      dist[static_cast<size_t>(i) * m + j] = d;
      dist[static_cast<size_t>(j) * m + i] = d;
    }
  }
  std::map<std::pair<int, int>, int> index;
  for (int i = 0; i < m; ++i) index[{window[i].w, window[i].x}] = i;

  std::vector<LiftInvarianceViolation> violations;
  std::vector<int> image(m);
  for (size_t s = 0; s < actors.size(); ++s) {
    for (int i = 0; i < m; ++i) {
      auto it = index.find({actors[s].w_perm[window[i].w], actors[s].x_perm[window[i].x]});
      if (it == index.end()) {
        throw std::invalid_argument("window is not closed under the supplied action");
      }
      image[i] = it->second;
    }
    for (int i = 0; i < m; ++i) {
      const std::int64_t* row = &dist[static_cast<size_t>(i) * m];
      const std::int64_t* shifted = &dist[static_cast<size_t>(image[i]) * m];
      for (int j = i + 1; j < m; ++j) {
        if (shifted[image[j]] != row[j]) {
          violations.push_back({static_cast<int>(s), window[i], window[j]});
        }
      }
    }
  }
  return violations;
}

std::vector<UniformityBound> check_lift_uniformity(
    const WallsStructure& mu, const Gauge& phi,
    const std::vector<WindowAction>& actors,
    const std::vector<std::pair<WindowPoint, WindowPoint>>& pairs) {
  std::vector<UniformityBound> out;
  for (const auto& [p, q] : pairs) {
    UniformityBound b{p, q, Rat(0), Rat(0)};
    for (const auto& actor : actors) {
      WindowPoint sp{actor.w_perm[p.w], actor.x_perm[p.x]};
      WindowPoint sq{actor.w_perm[q.w], actor.x_perm[q.x]};
      b.sup_shifted = std::max(b.sup_shifted, lift_distance(mu, phi, sp, sq));
    }
    // Lemma bound: sum over ordered pairs y != z of F of sup_g d(gy, gz).
    auto f = pair_set(phi, p, q).points();
    for (int y : f) {
      for (int z : f) {
        if (y == z) continue;
        Rat sup(0);
        for (const auto& actor : actors) {
          sup = std::max(sup, mu.distance(actor.x_perm[y], actor.x_perm[z]));
        }
        b.lemma_bound += sup;
      }
    }
    out.push_back(std::move(b));
  }
  return out;
}

BoundedSetCertificate bounded_set_analysis(const WallsStructure& mu, const Gauge& phi,
                                           const std::vector<WindowPoint>& window,
                                           const std::vector<int>& subset,
                                           WindowPoint base, const Rat& r) {
  BoundedSetCertificate cert;
  cert.radius = r;
  for (int x = 0; x < mu.ground_size(); ++x) {
    if (mu.distance(base.x, x) <= r) cert.ball.push_back(x);
  }
  Mask ball_mask = Mask::of_points(mu.ground_size(), cert.ball);

  cert.contained = true;
  for (int i : subset) {
    const WindowPoint& p = window[i];
    if (lift_distance(mu, phi, p, base) > r) {
      cert.failures.push_back("point " + std::to_string(i) + " outside lift radius");
      cert.contained = false;
      continue;
    }
    Mask gauge_set = phi.eval(p.w, base.w);
    gauge_set.set(p.x);
    if (!gauge_set.subset_of(ball_mask)) {
      cert.failures.push_back("gauge set of point " + std::to_string(i) +
                              " escapes the ball");
      cert.contained = false;
    }
  }

  // Converse: every window point whose gauge set and x both lie in the ball
  // is within n*R of the base point.
  Rat bound = Rat(static_cast<std::int64_t>(cert.ball.size())) * r;
  cert.converse_bound = bound;
  cert.converse_ok = true;
  for (size_t i = 0; i < window.size(); ++i) {
    Mask gauge_set = phi.eval(window[i].w, base.w);
    gauge_set.set(window[i].x);
    if (!gauge_set.subset_of(ball_mask)) continue;
    if (lift_distance(mu, phi, window[i], base) > bound) {
      cert.converse_ok = false;
      cert.failures.push_back("converse bound violated at window point " +
                              std::to_string(i));
    }
  }
  return cert;
}

KernelTable proper_sum_kernel(const WallsStructure& mu, const Gauge& phi,
                              const std::vector<WindowPoint>& window,
                              const std::function<Rat(int, int)>& u_on_w) {
  int m = static_cast<int>(window.size());
  return KernelTable::from_function(m, [&](int i, int j) {
    return lift_distance(mu, phi, window[i], window[j]) +
           u_on_w(window[i].w, window[j].w);
  });
}

ControlledCheck controlled_check(const FiniteGroup& g,
                                 const std::vector<std::pair<int, int>>& pairs) {
  std::set<int> diff;
  for (auto [a, b] : pairs) diff.insert(g.mul(g.inv(a), b));
  return {true, std::vector<int>(diff.begin(), diff.end())};
}

ControlledCheckWords controlled_check(
    const std::vector<std::pair<FreeWord, FreeWord>>& pairs) {
  std::set<FreeWord> diff;
  for (const auto& [a, b] : pairs) diff.insert(a.inverse() * b);
  return {true, std::vector<FreeWord>(diff.begin(), diff.end())};
}

bool hull_controlled_check(const WallsStructure& mu, const Gauge& phi,
                           const std::vector<std::pair<WindowPoint, WindowPoint>>& pairs,
                           std::optional<Rat> explicit_r) {
  Rat r(0);
  if (explicit_r) {
    r = *explicit_r;
  } else {
    for (const auto& [p, q] : pairs) {
      r = std::max(r, lift_distance(mu, phi, p, q));
    }
  }
  for (const auto& [p, q] : pairs) {
    auto f = pair_set(phi, p, q).points();
    for (int u : f) {
      for (int v : f) {
        if (mu.distance(u, v) > r) return false;
      }
    }
  }
  return true;
}

}  // namespace wallkit
