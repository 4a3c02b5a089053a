#include "ttow/cli.hpp"
#include "ttow/fixtures.hpp"
#include "ttow/io.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace ttow;

namespace {

struct Result {
  int code;
  std::string out, err;
  Json json() const { return Json::parse(out); }
  Json error() const { return Json::parse(err); }
};

Result cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string &stem, const std::string &text) {
  std::string path = std::string(TTOW_TEST_TMP) + "/" + stem + ".json";
  std::ofstream(path) << text;
  return path;
}

std::string slurp(const std::string &path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

} // namespace

TEST_CASE("cli: documented invocations") {
  auto r = cli({"ann", "--fixture", "idempotent_pair"});
  REQUIRE(r.code == 0);
  auto gens = r.json()["ideal"]["gens"];
  CHECK(gens == Json({"x0^2 - x0", "x0*x1", "x1^2 - x1"}));
  CHECK(r.json()["schema"] == "ttow/1");

  r = cli({"densor", "--fixture", "ghz", "--field", "rational"});
  REQUIRE(r.code == 0);
  CHECK(r.json()["dimension"] == 2);

  r = cli({"composable", "--poly", "x0^2 - x1"});
  REQUIRE(r.code == 0);
  CHECK(r.json()["outcome"] == "not_composable");
  CHECK(r.json()["reason"] == "axis projection 2Z");
}

TEST_CASE("cli: operator algebras") {
  auto r = cli({"der", "--fixture", "ghz"});
  REQUIRE(r.code == 0);
  CHECK(r.json()["dimension"] == 4);
  CHECK(r.json()["closed"] == true);
  CHECK(r.json()["unital"].is_null());

  r = cli({"centroid", "--fixture", "trunc_poly-3", "--field", "prime:101"});
  REQUIRE(r.code == 0);
  CHECK(r.json()["dimension"] == 3);
  CHECK(r.json()["unital"] == true);

  r = cli({"adjoint", "--fixture", "dotprod-3"});
  CHECK(r.json()["dimension"] == 9);
  CHECK(r.json()["variance"] == Json({0, -1, 1}));

  r = cli({"nucleus", "--fixture", "matmul-2", "--axes", "1,2"});
  CHECK(r.json()["dimension"] == 4);

  r = cli({"der", "--fixture", "sl-2"});
  CHECK(r.json()["dimension"] == 10);
}

TEST_CASE("cli: ideals and verdicts") {
  auto r = cli({"gb", "--poly", "x0^2 - x1", "--poly", "x0*x1 - 1"});
  REQUIRE(r.code == 0);
  auto ideal = ideal_from_json(r.json()["ideal"]);
  CHECK(ideal.contains(MultiPoly::parse(FieldSpec::rational(), "x1^3 - 1", 2)));

  r = cli({"gb", "--poly", "x0 - x1", "--order", "lex", "--field", "prime:7"});
  CHECK(r.json()["ideal"]["order"] == "lex");
  CHECK(r.json()["ideal"]["field"]["p"] == 7);

  r = cli({"composable", "--poly", "x1 - x2"});
  CHECK(r.json()["outcome"] == "composable");
  CHECK(r.json()["A"] == Json({1}));
  CHECK(r.json()["B"] == Json({2}));

  r = cli({"composable", "--poly", "x0 - x1*x2", "--poly", "x0*x1 - x2"});
  CHECK(r.json()["outcome"] == "unknown");

  r = cli({"composable", "--poly", "x0 - 2*x1"});
  CHECK(r.json()["reason"] == "nontrivial character");
}

TEST_CASE("cli: closure, nabla and singularity") {
  auto r = cli({"closure", "--fixture", "ghz_swap", "--poly", "x0 - x1*x2"});
  REQUIRE(r.code == 0);
  CHECK(r.json()["dimension"] == 4);

  std::string sub = R"({"axes":[{"axis":0,"basis":[[1,0]]},)"
                    R"({"axis":1,"basis":[[1,0]]},{"axis":2,"basis":[[1,0]]}]})";
  r = cli({"nabla", "--fixture", "ghz", "--subframe", sub});
  REQUIRE(r.code == 0);
  CHECK(r.json()["complex"]["vertices"] == 3);
  CHECK(r.json().contains("sr"));

  r = cli({"verify-singularity", "--fixture", "ghz", "--subframe", sub,
           "--seed", "4", "--samples", "3"});
  REQUIRE(r.code == 0);
  CHECK(r.json()["holds"] == true);
  // Same job, same bytes.
  CHECK(cli({"verify-singularity", "--fixture", "ghz", "--subframe", sub,
             "--seed", "4", "--samples", "3"})
            .out == r.out);
}

TEST_CASE("cli: homotopisms") {
  auto g = to_json(ghz_tensor(FieldSpec::rational()));
  Json swap = {{0, 1}, {1, 0}};
  Json id = {{1, 0}, {0, 1}};
  Json m1{{"domain", g}, {"codomain", g}, {"maps", {swap, swap, swap}}};
  Json m2{{"domain", g}, {"codomain", g}, {"maps", {swap, swap, id}}};

  Json job{{"variance", {1, 1, 1}}, {"morphisms", {m1, m2}}};
  auto r = cli({"homotopism", "--json", job.dump()});
  CHECK(r.code == 2);
  CHECK(r.error()["error"]["kind"] == "NotComposable");

  job["morphisms"] = {m1};
  r = cli({"homotopism", "--json", job.dump()});
  REQUIRE(r.code == 0);
  CHECK(r.json()["valid"] == Json({true}));

  job["morphisms"] = {m1, m1};
  r = cli({"homotopism", "--json", job.dump()});
  REQUIRE(r.code == 0);
  auto comp = r.json()["composite"];
  CHECK(comp["maps"] == Json({id, id, id}));
  // The composite is itself a valid morphism.
  job["morphisms"] = {comp};
  CHECK(cli({"homotopism", "--json", job.dump()}).json()["valid"] ==
        Json({true}));
}

TEST_CASE("cli: errors and exit codes") {
  auto r = cli({"densor", "--fixture", "ghz", "--field", "prime:4"});
  CHECK(r.code == 2);
  CHECK(r.error()["schema"] == "ttow/1");
  CHECK(r.out.empty());

  CHECK(cli({"densor", "--fixture", "nope"}).code == 2);
  CHECK(cli({"densor", "--json", "{not json"}).code == 2);
  CHECK(cli({"densor", "--json", R"({"dims":[2,2]})"}).code == 2);
  CHECK(cli({"densor"}).code == 2);
  CHECK(cli({}).code == 2);
  CHECK(cli({"densor", "--in", "/nonexistent/x.json"}).code == 2);
  CHECK(cli({"composable", "--poly", "x0 - "}).code == 2);
  // Bounds below the matrix size are refused.
  CHECK(cli({"ann", "--fixture", "idempotent_pair", "--degree-bound", "1,1"})
            .code == 2);
  CHECK(cli({"--help"}).code == 0);

  CHECK(exit_code_for("ParseError") == 2);
  CHECK(exit_code_for("ShapeMismatch") == 2);
  CHECK(exit_code_for("BudgetExceeded") == 3);
  CHECK(exit_code_for("CertificationFailed") == 3);
  CHECK(exit_code_for("Overflow") == 3);
}

TEST_CASE("cli: larger annihilator bounds warn and agree") {
  auto base = cli({"ann", "--fixture", "nilpotent_pair"});
  auto big = cli({"ann", "--fixture", "nilpotent_pair", "--degree-bound", "4,5"});
  REQUIRE(big.code == 0);
  CHECK(big.json()["ideal"] == base.json()["ideal"]);
  CHECK(big.json()["warnings"].size() == 1);
  CHECK_FALSE(base.json().contains("warnings"));
}

TEST_CASE("cli: emitted JSON reads back") {
  // Tensors.
  auto fx = cli({"fixtures", "--name", "w"});
  auto path = temp_file("w", fx.out);
  CHECK(cli({"der", "--in", path}).out == cli({"der", "--fixture", "w"}).out);
  CHECK(tensor_from_json(fx.json()["tensor"]) == w_tensor(FieldSpec::rational()));

  // Ideals.
  auto ann = cli({"ann", "--fixture", "nilpotent_pair"});
  auto ipath = temp_file("ann", ann.out);
  CHECK(cli({"gb", "--in", ipath}).json()["ideal"] == ann.json()["ideal"]);

  // Operators: a derivation basis feeds the closure command.
  auto der = cli({"der", "--fixture", "ghz"});
  auto dpath = temp_file("der", der.out);
  auto clo = cli({"closure", "--in", dpath, "--poly", "x0 - x1 - x2"});
  REQUIRE(clo.code == 0);
  CHECK(clo.json()["dimension"] == 2);
  // Densor basis reads back as tensors.
  auto den = cli({"densor", "--fixture", "ghz"});
  auto npath = temp_file("densor", den.out);
  CHECK(cli({"densor", "--in", npath}).json()["dimension"] == 2);

  // --out writes the same bytes.
  std::string opath = std::string(TTOW_TEST_TMP) + "/out.json";
  std::remove(opath.c_str());
  CHECK(cli({"densor", "--fixture", "ghz", "--out", opath}).out.empty());
  CHECK(slurp(opath) == den.out);
}

TEST_CASE("cli: bundled fixture corpus matches the built-in fixtures") {
  auto names = cli({"fixtures"}).json()["names"];
  CHECK(names.size() == cli_fixture_names().size());
  for (const auto &n : names) {
    std::string name = n.get<std::string>();
    CAPTURE(name);
    std::string file = std::string(TTOW_DATA_DIR) + "/fixtures/" + name + ".json";
    std::string stored = slurp(file);
    REQUIRE_FALSE(stored.empty());
    CHECK(stored == cli({"fixtures", "--name", name}).out);
  }
}
