#include <doctest.h>

#include <lieshift/cli.hpp>

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace lieshift;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
  args.push_back("--json");
  return json::parse(run(args).out);
}

}  // namespace

TEST_CASE("index and b reports") {
  auto r = run_json({"index", "--preset", "borel-sl3"});
  CHECK(r["status"] == "ok");
  CHECK(r["results"]["index"]["value"] == 1);
  CHECK(r["results"]["index"]["seed"] == 2020);
  CHECK(r["results"]["index"]["witness"]["point"].size() == 5);
  CHECK(r["input"]["digest"].get<std::string>().size() == 16);

  auto b = run_json({"b", "--preset", "gl4"});
  CHECK(b["results"]["b"]["value"] == "10");
}

TEST_CASE("reports are reproducible") {
  for (const char* cmd : {"index", "construct", "mf"}) {
    CAPTURE(cmd);
    auto a = run({cmd, "--preset", "sl2", "--json", "--seed", "11"});
    auto b = run({cmd, "--preset", "sl2", "--json", "--seed", "11"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
  auto t = run_json({"index", "--preset", "sl2", "--timing"});
  CHECK(t.contains("timing"));
  CHECK_FALSE(run_json({"index", "--preset", "sl2"}).contains("timing"));
}

TEST_CASE("exit codes") {
  CHECK(run({"index"}).code == 2);
  CHECK(run({"index", "--preset", "nope"}).code == 2);
  CHECK(run({"frobnicate", "--preset", "sl2"}).code == 2);
  CHECK(run({"index", "--preset", "sl2", "--samples", "0"}).code == 2);
  CHECK(run({"hat-check", "--preset", "sl2"}).code == 2);
  CHECK(run({"b-rel", "--preset", "sl3"}).code == 2);
  CHECK(run({"b-rel", "--preset", "sl3", "--subspace", "E12; E21"}).code == 2);
  CHECK(run({"--help"}).code == 0);

  auto path = (std::filesystem::temp_directory_path() / "lieshift_cli_bad.json").string();
  {
    std::ofstream f(path);
    f << R"({"format": "lieshift/1", "dim": 3, "basis": ["x", "y", "z"],
      "brackets": [{"i": "x", "j": "y", "coeffs": {"z": "1"}},
                   {"i": "y", "j": "z", "coeffs": {"x": "1"}},
                   {"i": "z", "j": "x", "coeffs": {"x": "1"}}]})";
  }
  auto v = run({"validate", "--file", path, "--json"});
  CHECK(v.code == 1);
  CHECK_FALSE(json::parse(v.out)["results"]["failures"].empty());
  CHECK(run({"index", "--file", path}).code == 2);
  std::remove(path.c_str());
}

TEST_CASE("command results") {
  auto brel = run_json({"b-rel", "--preset", "sl3", "--subspace", "H1; H2"});
  CHECK(brel["results"]["b_rel"] == "5");

  auto qmf = run_json({"quantum-mf", "--preset", "sl2", "--gamma", "h"});
  CHECK(qmf["status"] == "ok");
  CHECK(qmf["results"]["commutative"] == true);
  CHECK(qmf["results"]["trdeg"]["value"] == 2);

  auto hat = run_json({"hat-check", "--preset", "sl2-semidirect-h3"});
  CHECK(hat["results"]["checks"] == 12);
  CHECK(hat["results"]["passed"] == true);

  auto red = run_json({"reduce-abelian", "--preset", "heisenberg", "--subspace", "y; z"});
  CHECK(red["results"]["qhat_dim"] == 1);
  CHECK(red["results"]["b_relation_holds"] == true);

  auto tr = run_json({"trdeg", "--preset", "sl2-semidirect-h3", "--gens", "z; x; z*h + x*y"});
  CHECK(tr["results"]["trdeg"]["value"] == 3);
  CHECK(tr["results"]["noncommuting_pairs"].empty());

  auto mx = run_json({"maximality", "--preset", "sl2-semidirect-h3", "--gens",
                      "z; x; 2*e*z - x^2; symm(z*(h^2 + 4*e*f) + 2*(h*x*y - f*x^2 + e*y^2))"});
  CHECK(mx["results"]["new_elements"] == json::array({"e"}));
  CHECK(mx["results"]["enlarged_commutative"] == true);

  auto con = run_json({"construct", "--preset", "aff1"});
  CHECK(con["results"]["certified"] == true);
  CHECK(con["results"]["generators"][0]["element"] == "y");
}

TEST_CASE("worked example pipeline") {
  auto r = run({"reproduce-paper-example"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verdict: PASS") != std::string::npos);
  for (const auto& c : worked_example_checks()) {
    CAPTURE(c.name);
    CHECK(c.pass);
  }
}
