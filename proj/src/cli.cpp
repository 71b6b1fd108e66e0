#include "wallkit/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

#include "wallkit/compression.hpp"
#include "wallkit/gauge.hpp"
#include "wallkit/hecke.hpp"
#include "wallkit/io.hpp"
#include "wallkit/lift.hpp"
#include "wallkit/wreath.hpp"

namespace wallkit::cli {

namespace {

constexpr int kOk = 0;
constexpr int kVerificationFailure = 1;
constexpr int kInputError = 2;

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(std::stoi(item));
  }
  return out;
}

struct CyclicHOps {
  int order;
  using Elem = std::int64_t;
  Elem id() const { return 0; }
  Elem mul(Elem a, Elem b) const { return (a + b) % order; }
  Elem inv(Elem a) const { return (order - a) % order; }
};

// Lamp word length: |k| in Z, min(k, m-k) in Z/m.
std::int64_t lamp_word_length(std::int64_t value, int h_order) {
  if (h_order == 0) return value < 0 ? -value : value;
  std::int64_t v = ((value % h_order) + h_order) % h_order;
  return std::min(v, h_order - v);
}

FreeWreathElement<std::int64_t> normalize_element(FreeWreathElement<std::int64_t> e,
                                                  int h_order) {
  if (h_order == 0) return e;
  FreeWreathElement<std::int64_t> out;
  out.cursor = e.cursor;
  for (const auto& [key, value] : e.lamps) {
    std::int64_t v = ((value % h_order) + h_order) % h_order;
    if (v != 0) out.lamps.emplace(key, v);
  }
  return out;
}

int parse_h_order(const std::string& text) {
  if (text == "z" || text == "Z") return 0;
  int v = std::stoi(text);
  if (v < 2) throw std::invalid_argument("--h-order must be 'z' or an integer >= 2");
  return v;
}

struct CompressOptions {
  std::string h;
  int radius = 12;
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
  std::string scale;
  std::string out_path;
  std::string format = "csv";
};

int run_compress(const CompressOptions& opt, bool estimate, std::ostream& out,
                 std::ostream& err) {
  SampledExperiment exp =
      opt.h == "z" ? sample_z_wreath(2, opt.radius, opt.samples, opt.seed)
                   : sample_z2_wreath(2, opt.radius, opt.samples, opt.seed);

  std::int64_t grid = 1;
  for (const auto& s : exp.samples) grid = std::max(grid, s.length);
  auto make_alpha = [&](const Rat& c) {
    return opt.h == "z" ? CompressionFunction::power(1.0, c)
                        : CompressionFunction::capped_linear(1, c);
  };
  // Default scale: the minimal constant keeping beta under r/2 on the
  // sampled grid, doubled as a margin.
  Rat scale = opt.scale.empty() ? auto_scale_constant(make_alpha(Rat(1)), grid)
                                : parse_rat(opt.scale);
  CompressionFunction alpha = make_alpha(scale);
  auto violations = verify_compression_chain(exp.samples, alpha, grid);
  std::set<std::size_t> bad;
  for (const auto& v : violations) bad.insert(v.sample);

  std::ostringstream body;
  body << "# wallkit compress " << (estimate ? "estimate" : "verify") << "\n";
  body << "# h=" << opt.h << " radius=" << opt.radius << " samples=" << opt.samples
       << " seed=" << opt.seed << " scale=" << format_rat(scale) << "\n";
  if (opt.format == "csv") {
    body << "length,phi_distance,beta_bound,ok\n";
    for (std::size_t i = 0; i < exp.samples.size(); ++i) {
      const auto& s = exp.samples[i];
      body << s.length << "," << format_rat(s.phi_distance) << ","
           << format_rat(alpha.beta_at(s.length)) << "," << (bad.count(i) ? 0 : 1)
           << "\n";
    }
  }
  body << "violations=" << violations.size() << "\n";
  if (estimate) {
    try {
      double analytic = opt.h == "z" ? 1.0 : 0.0;
      B1Estimate est = estimate_b1(exp.samples, alpha, analytic);
      char fit[160];
      std::snprintf(fit, sizeof fit,
                    "fitted_exponent=%.6f stderr=%.6f analytic_bound_exponent=%.6f\n",
                    est.fitted_exponent, est.exponent_stderr, est.analytic_exponent);
      body << fit;
      body << "# the fitted exponent is advisory; only the analytic bound is exact\n";
    } catch (const std::exception& e) {
      err << "estimation error: " << e.what() << "\n";
      return kInputError;
    }
  }

  if (!opt.out_path.empty()) {
    std::ofstream f(opt.out_path);
    if (!f) {
      err << "cannot write " << opt.out_path << "\n";
      return kInputError;
    }
    f << body.str();
  } else {
    out << body.str();
  }
  return violations.empty() ? kOk : kVerificationFailure;
}

std::vector<std::vector<int>> decode_configs(const std::vector<std::string>& tokens,
                                             int n, int h_order,
                                             std::vector<int>* xs) {
  std::vector<std::vector<int>> configs;
  for (const auto& token : tokens) {
    auto bar = token.find('|');
    if (bar == std::string::npos) {
      throw std::invalid_argument("lift point must look like '<config>|<x>'");
    }
    std::string digits = token.substr(0, bar);
    if (static_cast<int>(digits.size()) != n) {
      throw std::invalid_argument("config length must equal the ground set size");
    }
    std::vector<int> config(n);
    for (int i = 0; i < n; ++i) {
      if (digits[i] < '0' || digits[i] > '9') {
        throw std::invalid_argument("config must be a digit string");
      }
      config[i] = digits[i] - '0';
      if (config[i] >= h_order) throw std::invalid_argument("config digit out of H");
    }
    configs.push_back(std::move(config));
    xs->push_back(std::stoi(token.substr(bar + 1)));
  }
  return configs;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"measured walls toolkit"};
  app.require_subcommand(1);

  // walls
  auto* walls_cmd = app.add_subcommand("walls", "walls structure operations");
  walls_cmd->require_subcommand(1);
  std::string walls_path, walls_out;
  int basepoint = 0;
  std::vector<std::string> pair_specs;
  auto* walls_dist = walls_cmd->add_subcommand("dist", "pairwise wall distances");
  walls_dist->add_option("--walls", walls_path)->required();
  walls_dist->add_option("--pair", pair_specs, "x,y (repeatable; default all pairs)");
  auto* walls_embed = walls_cmd->add_subcommand("embed", "signed l1 embedding");
  walls_embed->add_option("--walls", walls_path)->required();
  walls_embed->add_option("--basepoint", basepoint);
  auto* walls_symm = walls_cmd->add_subcommand("symmetrize", "symmetrized structure");
  walls_symm->add_option("--walls", walls_path)->required();
  walls_symm->add_option("--out", walls_out);

  // lift
  auto* lift_cmd = app.add_subcommand("lift", "lifted structure on W x X");
  lift_cmd->require_subcommand(1);
  std::string lift_walls_path;
  int lift_h_order = 2;
  std::vector<std::string> lift_points;
  int audit_limit = 4096;
  auto* lift_dist = lift_cmd->add_subcommand("dist", "lift distance of two points");
  lift_dist->add_option("--walls", lift_walls_path)->required();
  lift_dist->add_option("--h-order", lift_h_order, "order of the lamp group H");
  lift_dist->add_option("--point", lift_points, "'<config>|<x>' (exactly two)")
      ->expected(2);
  auto* lift_audit = lift_cmd->add_subcommand(
      "audit", "explicit walls vs distance formula on the full window");
  lift_audit->add_option("--walls", lift_walls_path)->required();
  lift_audit->add_option("--h-order", lift_h_order);
  lift_audit->add_option("--max-window", audit_limit);

  // wreath
  auto* wreath_cmd = app.add_subcommand("wreath", "wreath product over a free group");
  wreath_cmd->require_subcommand(1);
  int rank = 2;
  std::string h_order_text = "2";
  std::vector<std::string> element_texts;
  std::string sigma_spec = "discrete";
  auto* wreath_len = wreath_cmd->add_subcommand("len", "word length");
  wreath_len->add_option("--rank", rank);
  wreath_len->add_option("--h-order", h_order_text, "'z' or an integer >= 2");
  wreath_len->add_option("--element", element_texts)->required()->expected(1);
  auto* wreath_dist = wreath_cmd->add_subcommand("dist", "walls distance of a pair");
  wreath_dist->add_option("--rank", rank);
  wreath_dist->add_option("--h-order", h_order_text);
  wreath_dist->add_option("--element", element_texts)->required()->expected(2);
  wreath_dist->add_option("--sigma", sigma_spec,
                          "'discrete', 'abs' (Z only), or a walls file on H");
  auto* wreath_factor = wreath_cmd->add_subcommand("factor", "conjugate factorization");
  wreath_factor->add_option("--rank", rank);
  wreath_factor->add_option("--h-order", h_order_text);
  wreath_factor->add_option("--element", element_texts)->required()->expected(1);

  // compress
  auto* compress_cmd = app.add_subcommand("compress", "compression experiments");
  compress_cmd->require_subcommand(1);
  CompressOptions copt;
  for (auto* sub : {compress_cmd->add_subcommand("verify", "inequality chain check"),
                    compress_cmd->add_subcommand("estimate", "advisory exponent fit")}) {
    sub->add_option("--lamp-group", copt.h, "z2 or z")->required();
    sub->add_option("--radius", copt.radius);
    sub->add_option("--samples", copt.samples)->required();
    sub->add_option("--seed", copt.seed)->required();
    sub->add_option("--scale", copt.scale, "scale constant C (default 2)");
    sub->add_option("--out", copt.out_path);
    sub->add_option("--format", copt.format)->check(CLI::IsMember({"csv", "text"}));
  }

  // hecke
  auto* hecke_cmd = app.add_subcommand("hecke", "Hecke pair checks");
  hecke_cmd->require_subcommand(1);
  std::string group_path, subgroup_text, gens_text;
  auto* hecke_chk = hecke_cmd->add_subcommand("check", "orbit report on G/H");
  hecke_chk->add_option("--group", group_path)->required();
  hecke_chk->add_option("--subgroup", subgroup_text, "comma-separated elements")
      ->required();
  hecke_chk->add_option("--gens", gens_text, "symmetric generating set");

  std::vector<const char*> argv;
  argv.push_back("wallkit");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kInputError;
  }

  try {
    if (walls_dist->parsed()) {
      WallsStructure mu = read_walls_file(walls_path);
      if (pair_specs.empty()) {
        for (int x = 0; x < mu.ground_size(); ++x) {
          for (int y = x + 1; y < mu.ground_size(); ++y) {
            out << x << " " << y << " " << format_rat(mu.distance(x, y)) << "\n";
          }
        }
      } else {
        for (const auto& spec : pair_specs) {
          auto xy = parse_int_list(spec);
          if (xy.size() != 2) throw std::invalid_argument("--pair wants 'x,y'");
          out << xy[0] << " " << xy[1] << " " << format_rat(mu.distance(xy[0], xy[1]))
              << "\n";
        }
      }
      return kOk;
    }
    if (walls_embed->parsed()) {
      WallsStructure mu = read_walls_file(walls_path);
      auto vectors = l1_embed(mu, basepoint);
      for (int x = 0; x < mu.ground_size(); ++x) {
        out << x;
        for (int c : vectors[x]) out << " " << c;
        out << "\n";
      }
      return kOk;
    }
    if (walls_symm->parsed()) {
      WallsStructure mu = read_walls_file(walls_path);
      WallsStructure sym = symmetrize(mu);
      if (walls_out.empty()) {
        write_walls(out, sym);
      } else {
        std::ofstream f(walls_out);
        if (!f) throw std::invalid_argument("cannot write " + walls_out);
        write_walls(f, sym);
      }
      return kOk;
    }

    if (lift_dist->parsed()) {
      WallsStructure mu = read_walls_file(lift_walls_path);
      std::vector<int> xs;
      auto configs = decode_configs(lift_points, mu.ground_size(), lift_h_order, &xs);
      for (int x : xs) {
        if (x < 0 || x >= mu.ground_size()) {
          throw std::invalid_argument("point x outside the ground set");
        }
      }
      FiniteGroup h = FiniteGroup::cyclic(lift_h_order);
      ConfigurationSpace space{&h, mu.ground_size()};
      Gauge phi = support_gauge(space, configs);
      out << format_rat(lift_distance(mu, phi, {0, xs[0]}, {1, xs[1]})) << "\n";
      return kOk;
    }
    if (lift_audit->parsed()) {
      WallsStructure mu = read_walls_file(lift_walls_path);
      FiniteGroup h = FiniteGroup::cyclic(lift_h_order);
      ConfigurationSpace space{&h, mu.ground_size()};
      auto configs = space.all_configurations();
      std::vector<WindowPoint> window;
      for (int w = 0; w < static_cast<int>(configs.size()); ++w) {
        for (int x = 0; x < mu.ground_size(); ++x) window.push_back({w, x});
      }
      if (static_cast<int>(window.size()) > audit_limit) {
        throw std::invalid_argument("window of " + std::to_string(window.size()) +
                                    " points exceeds --max-window");
      }
      Gauge phi = support_gauge(space, configs);
      WallsStructure lifted = lift_walls_explicit(mu, phi, window);
      long long mismatches = 0, triangle_failures = 0;
      int m = static_cast<int>(window.size());
      std::vector<std::vector<Rat>> d(m, std::vector<Rat>(m));
      for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
          d[i][j] = lift_distance(mu, phi, window[i], window[j]);
          if (d[i][j] != lifted.distance(i, j)) ++mismatches;
        }
      }
      for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
          for (int k = 0; k < m; ++k) {
            if (d[i][k] > d[i][j] + d[j][k]) ++triangle_failures;
          }
        }
      }
      out << "window=" << m << "\n";
      out << "explicit_vs_formula_mismatches=" << mismatches << "\n";
      out << "triangle_failures=" << triangle_failures << "\n";
      return mismatches == 0 && triangle_failures == 0 ? kOk : kVerificationFailure;
    }

    if (wreath_len->parsed() || wreath_factor->parsed() || wreath_dist->parsed()) {
      int h_order = parse_h_order(h_order_text);
      std::vector<FreeWreathElement<std::int64_t>> elements;
      for (const auto& text : element_texts) {
        elements.push_back(normalize_element(parse_wreath_element(rank, text), h_order));
      }
      if (wreath_len->parsed()) {
        FreeWreath<IntegerHOps> wreath{rank, IntegerHOps{}};
        out << parry_length<IntegerHOps>(
                   wreath, elements[0],
                   [h_order](std::int64_t v) { return lamp_word_length(v, h_order); })
            << "\n";
        return kOk;
      }
      if (wreath_factor->parsed()) {
        FreeWreath<IntegerHOps> wreath{rank, IntegerHOps{}};
        auto f = factor_conjugates<IntegerHOps>(wreath, elements[0]);
        for (const auto& [g, h] : f.conjugates) {
          FreeWreathElement<std::int64_t> lamp_elem;
          if (h != 0) lamp_elem.lamps.emplace(FreeWord{}, h);
          out << g.to_string() << " " << format_wreath_element(lamp_elem) << " "
              << g.inverse().to_string() << "\n";
        }
        out << "cursor " << f.cursor.to_string() << "\n";
        return kOk;
      }
      // wreath dist
      std::function<Rat(std::int64_t, std::int64_t)> d_sigma;
      if (sigma_spec == "discrete") {
        d_sigma = [](std::int64_t a, std::int64_t b) { return Rat(a == b ? 0 : 1); };
      } else if (sigma_spec == "abs") {
        if (h_order != 0) throw std::invalid_argument("--sigma abs needs --h-order z");
        d_sigma = [](std::int64_t a, std::int64_t b) {
          return Rat(a < b ? b - a : a - b);
        };
      } else {
        if (h_order == 0) {
          throw std::invalid_argument("a sigma walls file needs a finite --h-order");
        }
        WallsStructure sigma = read_walls_file(sigma_spec);
        if (sigma.ground_size() != h_order) {
          throw std::invalid_argument("sigma ground set must equal the H order");
        }
        d_sigma = [sigma](std::int64_t a, std::int64_t b) {
          return sigma.distance(static_cast<int>(a), static_cast<int>(b));
        };
      }
      FreeWreath<IntegerHOps> wreath{rank, IntegerHOps{}};
      out << format_rat(phi_sigma_distance_with<IntegerHOps>(wreath, elements[0],
                                                             elements[1], d_sigma))
          << "\n";
      return kOk;
    }

    if (compress_cmd->parsed()) {
      bool estimate = compress_cmd->got_subcommand("estimate");
      if (copt.h != "z2" && copt.h != "z") {
        throw std::invalid_argument("--lamp-group must be z2 or z");
      }
      return run_compress(copt, estimate, out, err);
    }

    if (hecke_chk->parsed()) {
      FiniteGroup g = read_group_file(group_path);
      auto subgroup = parse_int_list(subgroup_text);
      HeckePairReport report = hecke_check(g, subgroup);
      out << "cosets=" << report.cosets.count() << "\n";
      out << "orbit_sizes=";
      for (size_t i = 0; i < report.orbit_sizes.size(); ++i) {
        out << (i ? "," : "") << report.orbit_sizes[i];
      }
      out << "\n";
      out << "verdict=" << (report.verdict ? "hecke" : "not-hecke") << "\n";
      if (!gens_text.empty()) {
        auto gens = parse_int_list(gens_text);
        CosetGraph graph = coset_graph(g, subgroup, gens);
        out << "graph_connected=" << (graph.connected ? "true" : "false") << "\n";
        if (graph.connected) {
          auto kernel = graph.distance_kernel();
          auto verdict = kernel_to_hecke_verdict(g, subgroup, kernel);
          out << "kernel_invariant=" << (verdict.invariant ? "true" : "false") << "\n";
          out << "cycle_consistent="
              << (verdict.verdict && verdict.matches_direct_check ? "true" : "false")
              << "\n";
          if (!verdict.verdict || !verdict.matches_direct_check) {
            return kVerificationFailure;
          }
        } else {
          return kVerificationFailure;
        }
      }
      return kOk;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  err << "no subcommand executed\n";
  return kInputError;
}

}  // namespace wallkit::cli
