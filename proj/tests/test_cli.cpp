#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "wallkit/cli.hpp"
#include "wallkit/io.hpp"
#include "wallkit/tree.hpp"

using namespace wallkit;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name, const std::string& content)
      : path("/tmp/wallkit_test_" + name) {
    std::ofstream f(path);
    f << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("unknown subcommand exits 2") {
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"walls", "nonsense"}).code == 2);
}

TEST_CASE("walls dist and embed") {
  // path tree on 4 vertices as a walls file
  std::ostringstream walls_text;
  write_walls(walls_text, tree_to_walls(Tree::path(4)));
  TempFile walls("path4.walls", walls_text.str());

  auto all = run({"walls", "dist", "--walls", walls.path});
  CHECK(all.code == 0);
  CHECK(all.out.find("0 3 3\n") != std::string::npos);

  auto pair = run({"walls", "dist", "--walls", walls.path, "--pair", "1,3"});
  CHECK(pair.code == 0);
  CHECK(pair.out == "1 3 2\n");

  auto embed = run({"walls", "embed", "--walls", walls.path, "--basepoint", "0"});
  CHECK(embed.code == 0);
  std::istringstream lines(embed.out);
  std::string line;
  int rows = 0;
  while (std::getline(lines, line)) ++rows;
  CHECK(rows == 4);

  auto missing = run({"walls", "dist", "--walls", "/tmp/does_not_exist.walls"});
  CHECK(missing.code == 2);
}

TEST_CASE("walls symmetrize emits a walls file") {
  TempFile walls("single.walls", "n 2\n1 10\n");
  auto result = run({"walls", "symmetrize", "--walls", walls.path});
  CHECK(result.code == 0);
  CHECK(result.out == "n 2\n1/2 01\n1/2 10\n");
}

TEST_CASE("malformed walls file gives a line-precise error") {
  TempFile walls("broken.walls", "n 2\n1 10\nbad\n");
  auto result = run({"walls", "dist", "--walls", walls.path});
  CHECK(result.code == 2);
  CHECK(result.err.find("line 3") != std::string::npos);
}

TEST_CASE("lift dist and audit") {
  std::ostringstream walls_text;
  write_walls(walls_text, tree_to_walls(Tree::path(3)));
  TempFile walls("path3.walls", walls_text.str());

  // lamp at vertex 2, query (w,0) vs (identity,0): distance 2
  auto dist = run({"lift", "dist", "--walls", walls.path, "--h-order", "2", "--point",
                   "001|0", "--point", "000|0"});
  CHECK(dist.code == 0);
  CHECK(dist.out == "2\n");

  auto audit = run({"lift", "audit", "--walls", walls.path, "--h-order", "2"});
  CHECK(audit.code == 0);
  CHECK(audit.out.find("explicit_vs_formula_mismatches=0") != std::string::npos);
  CHECK(audit.out.find("triangle_failures=0") != std::string::npos);
}

TEST_CASE("wreath len, dist, factor") {
  auto len = run({"wreath", "len", "--rank", "2", "--h-order", "2", "--element",
                  "{a:t}|1"});
  CHECK(len.code == 0);
  CHECK(len.out == "3\n");

  auto dist = run({"wreath", "dist", "--rank", "2", "--h-order", "2", "--element",
                   "{a:t}|1", "--element", "{}|1"});
  CHECK(dist.code == 0);
  CHECK(dist.out == "2\n");

  auto factor = run({"wreath", "factor", "--rank", "2", "--h-order", "2", "--element",
                     "{a:t,b:t}|ab"});
  CHECK(factor.code == 0);
  CHECK(factor.out ==
        "a {1:t}|1 A\n"
        "b {1:t}|1 B\n"
        "cursor ab\n");

  auto bad = run({"wreath", "len", "--rank", "2", "--h-order", "2", "--element",
                  "{a:t|1"});
  CHECK(bad.code == 2);
}

TEST_CASE("compress verify determinism and exit codes") {
  auto first = run({"compress", "verify", "--lamp-group", "z2", "--radius", "6", "--samples",
                    "200", "--seed", "9"});
  CHECK(first.code == 0);
  CHECK(first.out.find("violations=0") != std::string::npos);
  auto second = run({"compress", "verify", "--lamp-group", "z2", "--radius", "6", "--samples",
                     "200", "--seed", "9"});
  CHECK(first.out == second.out);
  auto other_seed = run({"compress", "verify", "--lamp-group", "z2", "--radius", "6",
                         "--samples", "200", "--seed", "10"});
  CHECK(first.out != other_seed.out);

  // a corrupted scale constant must be reported with exit 1
  auto corrupted = run({"compress", "verify", "--lamp-group", "z2", "--radius", "6", "--samples",
                        "200", "--seed", "9", "--scale", "1/2"});
  CHECK(corrupted.code == 2);  // C < 1 is an input error
  auto weak = run({"compress", "verify", "--lamp-group", "z", "--radius", "6", "--samples",
                   "200", "--seed", "9", "--scale", "1"});
  CHECK(weak.code == 1);
  CHECK(weak.out.find("violations=0") == std::string::npos);

  // seed is mandatory
  auto no_seed = run({"compress", "verify", "--lamp-group", "z2", "--radius", "6", "--samples",
                      "200"});
  CHECK(no_seed.code == 2);
}

TEST_CASE("compress estimate reports the fit") {
  auto est = run({"compress", "estimate", "--lamp-group", "z", "--radius", "8", "--samples",
                  "400", "--seed", "11", "--format", "text"});
  CHECK(est.code == 0);
  CHECK(est.out.find("fitted_exponent=") != std::string::npos);
  CHECK(est.out.find("analytic_bound_exponent=1.000000") != std::string::npos);
}

TEST_CASE("hecke check") {
  // S3 written as a table file
  std::ostringstream group_text;
  write_group(group_text, FiniteGroup::symmetric(3));
  TempFile group("s3.group", group_text.str());

  // find a transposition index: symmetric(3) enumerates permutations in
  // lexicographic order: 0=(012),1=(021),2=(102),3=(120),4=(201),5=(210)
  // (021) swaps 1 and 2.
  auto res = run({"hecke", "check", "--group", group.path, "--subgroup", "0,1"});
  CHECK(res.code == 0);
  CHECK(res.out.find("cosets=3") != std::string::npos);
  CHECK(res.out.find("orbit_sizes=1,2") != std::string::npos);
  CHECK(res.out.find("verdict=hecke") != std::string::npos);

  auto cycle = run({"hecke", "check", "--group", group.path, "--subgroup", "0,1",
                    "--gens", "1,2"});
  CHECK(cycle.code == 0);
  CHECK(cycle.out.find("cycle_consistent=true") != std::string::npos);

  auto not_subgroup = run({"hecke", "check", "--group", group.path, "--subgroup", "1,2"});
  CHECK(not_subgroup.code == 2);
}
