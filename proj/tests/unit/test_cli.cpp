#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int rc;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int rc = witt::cli::run(args, out, err);
  return {rc, out.str(), err.str()};
}

}  // namespace

TEST_CASE("compute examples") {
  auto g = run({"compute", "ghost (1,1)", "--p", "2", "--ring", "Z"});
  CHECK(g.rc == 0);
  CHECK(g.out == "(1, 3)\n");
  auto a = run({"compute", "add (1,0) (1,0)"});
  CHECK(a.rc == 0);
  CHECK(a.out == "(2, -1)\n");
  auto n = run({"compute", "wnorm (2,-1)", "--ring", "Q", "--p", "2"});
  CHECK(n.rc == 0);
  CHECK(n.out == "p^0\n");
  auto t = run({"compute", "teich 3 1", "--p", "3"});
  CHECK(t.out == "(3, 0)\n");
}

TEST_CASE("compute errors carry positions and exit codes") {
  auto bad = run({"compute", "add (1,0) (1,x)"});
  CHECK(bad.rc == 2);
  CHECK(bad.err.find("column 11") != std::string::npos);
  auto op = run({"compute", "frobnicate (1)"});
  CHECK(op.rc == 2);
  CHECK(op.err.find("column 1") != std::string::npos);
  CHECK(run({"compute", "add (1,0) (1,0", "--ring", "Z"}).rc == 2);
  CHECK(run({"compute", "add (1) (1)", "--ring", "nonsense"}).rc == 2);
  CHECK(run({"compute", "add (1) (1)", "--p", "4"}).rc == 2);
  // 2 x_1 = 1 has no integral solution
  auto ni = run({"compute", "unghost (0,1)", "--p", "2"});
  CHECK(ni.rc == 1);
  CHECK(ni.err.find("not-integral") != std::string::npos);
  CHECK(run({}).rc == 2);
  CHECK(run({"verify", "bogus"}).rc == 2);
}

TEST_CASE("json output is versioned") {
  auto r = run({"compute", "ghost (1,1)", "--p", "2", "--json"});
  REQUIRE(r.rc == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == witt::cli::kSchema);
  CHECK(j["value"] == nlohmann::json::array({"1", "3"}));
  auto v = run({"verify", "kernel", "--p", "2", "--samples", "5", "--json"});
  auto jv = nlohmann::json::parse(v.out);
  CHECK(jv["schema"] == witt::cli::kSchema);
  CHECK(jv["summary"]["fail"] == 0);
  CHECK_FALSE(jv.contains("seconds"));
}

TEST_CASE("verify reports are byte-stable and keyed") {
  auto a = run({"verify", "norms", "--p", "2", "--seed", "7", "--samples", "40"});
  auto b = run({"verify", "norms", "--p", "2", "--seed", "7", "--samples", "40"});
  CHECK(a.rc == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("verschiebung") != std::string::npos);
  CHECK(a.out.find("fail ") == std::string::npos);
  auto arrow = run({"verify", "arrow", "--p", "2", "--group", "mult-by-p"});
  CHECK(arrow.rc == 0);
  CHECK(arrow.out.find("mult-by-p/|2|_{W,1/2}") != std::string::npos);
}

TEST_CASE("module subcommands") {
  auto an = run({"arrow", "norm", "2", "--b", "1/2", "--p", "2", "--depth", "2"});
  CHECK(an.rc == 0);
  CHECK(an.out.find("p^(-1/2) (certified") != std::string::npos);
  auto lift = run({"arrow", "lift", "5", "--ring", "Z/2^1", "--depth", "1", "--json"});
  REQUIRE(lift.rc == 0);
  auto jl = nlohmann::json::parse(lift.out);
  CHECK(jl["lift"]["levels"][1] == nlohmann::json::array({"1", "2"}));
  CHECK(run({"arrow", "lift", "5", "--ring", "Q"}).rc == 2);
  CHECK(run({"arrow", "theta", "7", "--ring", "Z/3^4"}).out == "7\n");

  auto pz = run({"perfect", "test", "--ring", "Z", "--p", "3"});
  CHECK(pz.out.rfind("Z/3^2: no", 0) == 0);
  auto tower = run({"perfect", "test", "--tower-base", "2", "--depth", "1", "--p", "2", "--json"});
  CHECK(nlohmann::json::parse(tower.out)["verdict"] == "yes-up-to-level-1");
  CHECK(run({"perfect", "solve-frob", "(2)", "--ring", "Z/2^5"}).out == "(0, 1 (mod 2^4))\n");

  CHECK(run({"tilt", "mul", "[1;1;1;1]", "[1;1;1;3]", "--ring", "Z/2^3"}).out == "[1; 1; 1; 3]\n");
  CHECK(run({"tilt", "norm", "[0;0;2;2]", "--ring", "Z/2^3"}).rc == 1);
  auto un = run({"tilt", "untilt", "(1, 0)", "--ring", "Z[zeta_4]/2^4", "--depth", "2", "--b", "2"});
  CHECK(un.rc == 2);

  auto k = run({"kernel", "verify", "--p", "2", "--j", "2", "4", "3"});
  CHECK(k.rc == 0);
  CHECK(k.out.find("FAIL") == std::string::npos);
  CHECK(run({"kernel", "verify", "--ring", "Z", "1"}).rc == 2);

  auto a5 = run({"artin", "classify", "--field", "Qi", "--p", "5", "--f", "i"});
  CHECK(a5.rc == 0);
  CHECK(a5.out.find(": bounded;") != std::string::npos);
  auto a3 = run({"artin", "classify", "--field", "Qi", "--p", "3", "--f", "i", "--json"});
  auto j3 = nlohmann::json::parse(a3.out);
  CHECK(j3["bounded"] == false);
  CHECK(j3["matches"] == true);

  auto d = run({"universal", "dump", "--p", "2", "--i", "1", "--kind", "sum"});
  CHECK(d.out == "-x1*y1 + x2 + y2\n");
}

TEST_CASE("ring config files") {
  const std::string path = "witt_cli_test_ring.json";
  {
    std::ofstream f(path);
    f << R"({"ring": "Q", "p": 2})";
  }
  CHECK(run({"compute", "wnorm (2,-1)", "--ring", path}).out == "p^0\n");
  // flags given on the command line win over the file
  CHECK(run({"compute", "norm 3", "--ring", path, "--p", "3"}).out == "p^(-1)\n");
  {
    std::ofstream f(path);
    f << R"({"p": 2})";
  }
  CHECK(run({"compute", "norm 3", "--ring", path}).rc == 2);
  std::remove(path.c_str());
}
