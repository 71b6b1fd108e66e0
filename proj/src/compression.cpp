#include "wallkit/compression.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace wallkit {

CompressionFunction CompressionFunction::power(double exponent, const Rat& scale_c) {
  if (exponent < 0.0 || exponent > 1.0) {
    throw std::invalid_argument("power exponent must lie in [0,1]");
  }
  if (scale_c < Rat(1)) throw std::invalid_argument("scale constant must be >= 1");
  CompressionFunction f;
  f.exponent_ = exponent;
  f.scale_c_ = scale_c;
  return f;
}

CompressionFunction CompressionFunction::table(std::vector<Rat> values,
                                               const Rat& scale_c) {
  if (values.empty()) throw std::invalid_argument("empty compression table");
  if (scale_c < Rat(1)) throw std::invalid_argument("scale constant must be >= 1");
  CompressionFunction f;
  f.table_ = std::move(values);
  f.scale_c_ = scale_c;
  return f;
}

CompressionFunction CompressionFunction::capped_linear(std::int64_t cap,
                                                       const Rat& scale_c) {
  std::vector<Rat> values;
  for (std::int64_t r = 0; r <= cap; ++r) values.emplace_back(r);
  return table(std::move(values), scale_c);
}

bool CompressionFunction::exact() const {
  return !exponent_ || *exponent_ == 0.0 || *exponent_ == 1.0;
}

Rat CompressionFunction::alpha_at(std::int64_t r) const {
  if (r < 0) throw std::invalid_argument("alpha argument must be nonnegative");
  if (exponent_) {
    if (*exponent_ == 1.0) return Rat(r);
    if (*exponent_ == 0.0) return r == 0 ? Rat(0) : Rat(1);
    throw std::invalid_argument("fractional power form is not exactly evaluable");
  }
  if (r < static_cast<std::int64_t>(table_.size())) return table_[r];
  return table_.back();
}

double CompressionFunction::alpha_at_approx(double r) const {
  if (exponent_) return r <= 0 ? 0.0 : std::pow(r, *exponent_);
  auto idx = static_cast<std::int64_t>(r);
  if (idx >= static_cast<std::int64_t>(table_.size())) return to_double(table_.back());
  return to_double(table_[idx]);
}

std::vector<std::string> CompressionFunction::validate(std::int64_t grid_limit) const {
  std::vector<std::string> beta_failures;
  if (exact()) {
    for (std::int64_t r = 0; r + 1 <= grid_limit; ++r) {
      if (alpha_at(r + 1) < alpha_at(r)) {
        throw std::invalid_argument("alpha is not non-decreasing at r=" +
                                    std::to_string(r));
      }
    }
    for (std::int64_t r = 0; r <= grid_limit; ++r) {
      for (std::int64_t s = 0; s + r <= grid_limit; ++s) {
        if (alpha_at(r + s) > alpha_at(r) + alpha_at(s)) {
          throw std::invalid_argument("alpha is not subadditive at r=" +
                                      std::to_string(r) + ", s=" + std::to_string(s));
        }
      }
    }
    for (std::int64_t r = 1; r <= grid_limit; ++r) {
      if (beta_at(r) > Rat(r, 2)) {
        beta_failures.push_back("beta(" + std::to_string(r) + ") > r/2");
      }
    }
  } else {
    // r^d with d in (0,1) is non-decreasing and subadditive; only the beta
    // cap needs a numeric scan.
    for (std::int64_t r = 1; r <= grid_limit; ++r) {
      double beta = alpha_at_approx(static_cast<double>(r)) / to_double(scale_c_);
      if (beta > static_cast<double>(r) / 2 + 1e-12) {
        beta_failures.push_back("beta(" + std::to_string(r) + ") > r/2");
      }
    }
  }
  return beta_failures;
}

Rat auto_scale_constant(const CompressionFunction& alpha_c1, std::int64_t grid_limit) {
  Rat minimal(1);
  for (std::int64_t r = 1; r <= grid_limit; ++r) {
    minimal = std::max(minimal, alpha_c1.alpha_at(r) * Rat(2, r));
  }
  return minimal * 2;
}

std::vector<ChainViolation> verify_compression_chain(
    const std::vector<CompressionSample>& samples, const CompressionFunction& alpha,
    std::int64_t beta_grid_limit) {
  std::vector<ChainViolation> violations;
  for (const auto& msg : alpha.validate(beta_grid_limit)) {
    violations.push_back({0, "beta-cap", msg});
  }
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& s = samples[i];
    auto fail = [&](const std::string& step, const std::string& detail) {
      violations.push_back({i, step, detail});
    };
    Rat half_m(s.walk_term, 2);
    if (Rat(s.hull_count) < half_m) fail("half-bound", "hull < m/2");

    Rat beta_lamp_sum(0);
    std::int64_t lamp_len_total = 0;
    for (const auto& [len, dist] : s.lamps) {
      // table scan of the hypothesis that alpha is a compression function
      // for d_sigma on the lamp group, over the sampled values
      if (dist < alpha.alpha_at(len)) {
        fail("alpha-precondition", "d_sigma(1,h) < alpha(|h|)");
      }
      Rat beta_l = alpha.beta_at(len);
      if (dist < beta_l) fail("lamp-bound", "d_sigma(1,h) < beta(|h|)");
      beta_lamp_sum += beta_l;
      lamp_len_total += len;
    }
    if (s.length != s.walk_term + lamp_len_total) fail("length", "|wg| != m + lamps");

    Rat beta_m = alpha.beta_at(s.walk_term);
    if (half_m < beta_m) fail("monotone-step", "m/2 < beta(m)");
    Rat beta_total = alpha.beta_at(s.length);
    if (beta_m + beta_lamp_sum < beta_total) {
      fail("subadditive-step", "beta(m) + sum beta(|h|) < beta(|wg|)");
    }
    if (s.phi_distance < half_m + beta_lamp_sum) fail("chain-1", "phi < m/2 + sum beta");
    if (s.phi_distance < beta_m + beta_lamp_sum) {
      fail("chain-2", "phi < beta(m) + sum beta");
    }
    if (s.phi_distance < beta_total) fail("chain-3", "phi < beta(|wg|)");
    if (alpha.scale_constant() * s.phi_distance < alpha.alpha_at(s.length)) {
      fail("scaled-bound", "C*phi < alpha(|wg|)");
    }
  }
  return violations;
}

WallsStructure half_line_walls(std::int64_t lo, std::int64_t hi) {
  if (lo >= hi) throw std::invalid_argument("half_line_walls: window too small");
  int n = static_cast<int>(hi - lo + 1);
  std::vector<std::pair<HalfSpace, Rat>> walls;
  for (int k = 1; k < n; ++k) {
    Mask m(n);
    for (int i = k; i < n; ++i) m.set(i);
    walls.emplace_back(std::move(m), Rat(1));
  }
  return WallsStructure(n, std::move(walls));
}

namespace {

// Stratified random element: target generator count cycles through
// 1..radius; each step is a uniformly chosen cursor move or lamp generator.
template <class HOps, class LampStep>
FreeWreathElement<typename HOps::Elem> random_element(
    const FreeWreath<HOps>& wreath, int radius, std::int64_t index,
    std::mt19937_64& rng, int lamp_generator_count, const LampStep& lamp_step) {
  int target = 1 + static_cast<int>(index % radius);
  auto element = wreath.identity();
  std::uniform_int_distribution<int> pick(0, 2 * wreath.rank + lamp_generator_count - 1);
  for (int step = 0; step < target; ++step) {
    int choice = pick(rng);
    if (choice < 2 * wreath.rank) {
      int letter = choice < wreath.rank ? choice + 1 : -(choice - wreath.rank + 1);
      element = wreath.multiply(
          element, wreath.cursor_only(FreeWord::reduce(wreath.rank, {letter})));
    } else {
      element = wreath.multiply(element, lamp_step(choice - 2 * wreath.rank));
    }
  }
  return element;
}

template <class HOps>
CompressionSample make_sample(const FreeWreath<HOps>& wreath,
                              const FreeWreathElement<typename HOps::Elem>& e,
                              const std::function<std::int64_t(typename HOps::Elem)>& lamp_len,
                              const std::function<Rat(typename HOps::Elem)>& lamp_dist) {
  CompressionSample s;
  s.walk_term = cover_walk_term(wreath.rank, wreath.support(e), e.cursor);

  WordTrie trie(wreath.rank);
  std::vector<int> terminals{trie.insert(FreeWord{}), trie.insert(e.cursor)};
  for (const auto& [key, value] : e.lamps) terminals.push_back(trie.insert(key));
  Tree t = trie.tree();
  s.hull_count = static_cast<std::int64_t>(
      hull_edges(t, Mask::of_points(t.vertex_count(), terminals)).edges.size());

  Rat lamp_dist_total(0);
  std::int64_t lamp_len_total = 0;
  for (const auto& [key, value] : e.lamps) {
    std::int64_t len = lamp_len(value);
    Rat dist = lamp_dist(value);
    s.lamps.emplace_back(len, dist);
    lamp_len_total += len;
    lamp_dist_total += dist;
  }
  s.length = s.walk_term + lamp_len_total;
  s.phi_distance = Rat(s.hull_count) + lamp_dist_total;
  return s;
}

}  // namespace

SampledExperiment sample_z2_wreath(int rank, int radius, std::int64_t count,
                                   std::uint64_t seed) {
  FiniteGroup z2 = FiniteGroup::cyclic(2);
  FreeWreath<FiniteHOps> wreath{rank, FiniteHOps{&z2}};
  std::mt19937_64 rng(seed);
  SampledExperiment exp;
  exp.seed = seed;
  auto lamp_step = [&wreath](int) { return wreath.lamp(FreeWord{}, 1); };
  for (std::int64_t i = 0; i < count; ++i) {
    auto e = random_element(wreath, radius, i, rng, 1, lamp_step);
    exp.samples.push_back(make_sample<FiniteHOps>(
        wreath, e, [](int) { return std::int64_t{1}; }, [](int) { return Rat(1); }));
  }
  return exp;
}

SampledExperiment sample_z_wreath(int rank, int radius, std::int64_t count,
                                  std::uint64_t seed) {
  FreeWreath<IntegerHOps> wreath{rank, IntegerHOps{}};
  std::mt19937_64 rng(seed);
  SampledExperiment exp;
  exp.seed = seed;
  auto lamp_step = [&wreath](int which) {
    return wreath.lamp(FreeWord{}, which == 0 ? 1 : -1);
  };
  // d_sigma(0, k) = |k|: the distance of the half-line walls structure
  // truncated to the sampled value range (see half_line_walls).
  auto abs64 = [](std::int64_t v) { return v < 0 ? -v : v; };
  for (std::int64_t i = 0; i < count; ++i) {
    auto e = random_element(wreath, radius, i, rng, 2, lamp_step);
    exp.samples.push_back(make_sample<IntegerHOps>(
        wreath, e, [&](std::int64_t v) { return abs64(v); },
        [&](std::int64_t v) { return Rat(abs64(v)); }));
  }
  return exp;
}

B1Estimate estimate_b1(const std::vector<CompressionSample>& samples,
                       const CompressionFunction& alpha, double analytic_exponent) {
  B1Estimate est;
  est.analytic_exponent = analytic_exponent;
  std::vector<std::pair<double, double>> points;
  std::int64_t max_len = 1;
  for (const auto& s : samples) {
    max_len = std::max(max_len, s.length);
    if (s.length > 0 && s.phi_distance > Rat(0)) {
      points.emplace_back(std::log(static_cast<double>(s.length)),
                          std::log(to_double(s.phi_distance)));
    }
  }
  for (const auto& s : samples) {
    if (alpha.exact()) {
      if (s.phi_distance < alpha.beta_at(s.length)) ++est.bound_violations;
    } else {
      double beta = alpha.alpha_at_approx(static_cast<double>(s.length)) /
                    to_double(alpha.scale_constant());
      if (to_double(s.phi_distance) < beta - 1e-9) ++est.bound_violations;
    }
  }
  est.sample_count = points.size();
  bool degenerate = points.size() < 2;
  if (!degenerate) {
    double first = points.front().first;
    degenerate = true;
    for (const auto& [x, y] : points) {
      if (x != first) {
        degenerate = false;
        break;
      }
    }
  }
  if (degenerate) {
    throw std::invalid_argument("estimate_b1: need samples of at least two lengths");
  }
  double mx = 0, my = 0;
  for (const auto& [x, y] : points) {
    mx += x;
    my += y;
  }
  mx /= static_cast<double>(points.size());
  my /= static_cast<double>(points.size());
  double sxx = 0, sxy = 0, see = 0;
  for (const auto& [x, y] : points) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
  }
  est.fitted_exponent = sxy / sxx;
  double intercept = my - est.fitted_exponent * mx;
  for (const auto& [x, y] : points) {
    double r = y - (intercept + est.fitted_exponent * x);
    see += r * r;
  }
  if (points.size() > 2) {
    est.exponent_stderr =
        std::sqrt(see / (static_cast<double>(points.size() - 2) * sxx));
  }
  return est;
}

}  // namespace wallkit
