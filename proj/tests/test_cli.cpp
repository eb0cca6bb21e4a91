#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "diagcell/cli.hpp"
#include "diagcell/assembly.hpp"
#include "diagcell/json_io.hpp"

using namespace diagcell;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out, err;
  Json json() const { return Json::parse(out); }
};

Result cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch() {
  fs::path dir = fs::temp_directory_path() / ("diagcell_cli_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

std::string write(const std::string& name, const Json& j) {
  fs::path p = scratch() / name;
  std::ofstream(p) << j.dump();
  return p.string();
}

}  // namespace

TEST_CASE("enum") {
  Result r = cli({"enum", "--kind", "tl", "--n", "3"});
  REQUIRE(r.code == 0);
  Json j = r.json();
  CHECK(j["size"] == 5);
  CHECK(same_monoid(diagram_monoid_from_json(j), enumerate(MonoidKind::TemperleyLieb, 3)));
  CHECK(cli({"enum", "--kind", "tl", "--n", "3"}).out == r.out);

  for (auto [kind, n] : {std::pair{"partition", "2"}, {"brauer", "3"}}) {
    Result e = cli({"enum", "--kind", kind, "--n", n});
    REQUIRE(e.code == 0);
    DiagramMonoid m = diagram_monoid_from_json(e.json());
    CHECK(to_json(m).dump(2) + "\n" == e.out);
  }

  std::string path = (scratch() / "tl2.json").string();
  CHECK(cli({"enum", "--kind", "tl", "--n", "2", "--out", path}).code == 0);
  std::ifstream f(path);
  CHECK(Json::parse(f)["size"] == 2);

  // The size guard refuses A_5 unless forced.
  Result big = cli({"enum", "--kind", "partition", "--n", "5"});
  CHECK(big.code == 2);
  CHECK_FALSE(big.err.empty());
}

TEST_CASE("mul reproduces the A_7 example") {
  Json x = to_json(SetPartition(7, {{1, 3, -4, -6}, {2}, {4, 5, 6}, {7}, {-1}, {-2, -3}, {-5, -7}}));
  Json y = to_json(SetPartition(7, {{1}, {2, 4}, {3, -3, -4, -6}, {5, 7}, {6, -5, -7}, {-1}, {-2}}));
  const std::string xp = write("x.json", x), yp = write("y.json", y);
  Result r = cli({"mul", "--kind", "partition", "--n", "7", "--x", xp, "--y", yp});
  REQUIRE(r.code == 0);
  Json j = r.json();
  CHECK(j["middle_count"] == 2);
  CHECK(set_partition_from_json(j["product"]) ==
        SetPartition(7, {{1, 3, -3, -4, -5, -6, -7}, {2}, {4, 5, 6}, {7}, {-1}, {-2}}));
  CHECK(delta_poly_from_json(j["coefficient"]) == DeltaPoly::delta() * DeltaPoly::delta());

  Result at3 = cli({"mul", "--kind", "partition", "--n", "7", "--x", xp, "--y", yp, "--delta", "3"});
  CHECK(delta_poly_from_json(at3.json()["coefficient"]) == DeltaPoly(9));

  // x is not a Brauer diagram; wrong rank; missing operand.
  CHECK(cli({"mul", "--kind", "brauer", "--n", "7", "--x", xp, "--y", yp}).code == 2);
  Result rank = cli({"mul", "--kind", "partition", "--n", "6", "--x", xp, "--y", yp});
  CHECK(rank.code == 1);
  CHECK(rank.json()["error"] == "RankMismatch");
  CHECK(cli({"mul", "--kind", "partition", "--n", "7", "--x", xp}).code == 2);
}

TEST_CASE("semisimple") {
  Result r = cli({"semisimple", "--kind", "tl", "--n", "2", "--delta", "0/1"});
  REQUIRE(r.code == 0);
  Json j = r.json();
  CHECK(j["applicable"] == false);
  CHECK(j["status"] == "AlphaNotUnit");
  CHECK(j["oracle"]["verdict"] == "not semisimple");

  Json k = cli({"semisimple", "--kind", "brauer", "--n", "3", "--delta", "2"}).json();
  CHECK(k["applicable"] == true);
  CHECK(k["verdict"] == "semisimple");
  CHECK(k["agrees"] == true);

  CHECK(cli({"semisimple", "--kind", "tl", "--n", "2"}).code == 2);
  CHECK(cli({"semisimple", "--kind", "tl", "--n", "2", "--delta", "x/y"}).code == 2);
  CHECK(cli({"semisimple", "--kind", "tl", "--n", "2", "--delta", "1/0"}).code == 2);
}

TEST_CASE("usage errors exit 2") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"enum", "--kind", "octopus"}).code == 2);
  CHECK(cli({"enum", "--kind", "tl", "--n", "zero"}).code == 2);
  CHECK(cli({"enum", "--kind", "generic"}).code == 2);
  CHECK(cli({"gram", "--kind", "tl", "--n", "2", "--mode", "sideways"}).code == 2);
  CHECK(cli({"enum", "--kind", "generic", "--in", "/nonexistent/file.json"}).code == 2);
  std::string broken = (scratch() / "broken.json").string();
  std::ofstream(broken) << "{ not json";
  CHECK(cli({"enum", "--kind", "generic", "--in", broken}).code == 2);
  CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("cell-datum round trip") {
  for (auto args : {std::vector<std::string>{"cell-datum", "--kind", "tl", "--n", "3"},
                    {"cell-datum", "--kind", "brauer", "--n", "3"},
                    {"cell-datum", "--kind", "brauer", "--n", "3", "--delta", "2", "--mode",
                     "unit-alpha"}}) {
    Result r = cli(args);
    REQUIRE(r.code == 0);
    CHECK(cli(args).out == r.out);
    Json j = r.json();
    for (const auto& c : j["validation"]) CHECK(c["ok"] == true);
    const std::size_t n = std::stoul(args[4]);
    auto ctx = diagram_context(enumerate(args[2] == "tl" ? MonoidKind::TemperleyLieb
                                                         : MonoidKind::Brauer, n));
    AssemblyOptions opts;
    if (args.size() > 5) {
      ctx = specialize(ctx, 2);
      opts.mode = AssemblyMode::UnitAlpha;
    }
    AssembledDatum a = assemble_datum(ctx, build_frames(ctx), opts);
    CellDatum back = cell_datum_from_json(j["datum"], a.datum->algebra_ptr());
    CHECK(same_datum(back, *a.datum));
    CHECK(to_json(back) == j["datum"]);
  }
  CHECK(cli({"cell-datum", "--kind", "partition", "--n", "4"}).code == 2);
  CHECK(cli({"cell-datum", "--kind", "tl", "--n", "2", "--mode", "unit-alpha"}).code == 1);
}

TEST_CASE("gram, green and verify") {
  Json g = cli({"gram", "--kind", "tl", "--n", "4"}).json();
  REQUIRE(g["cells"].size() == 3);
  for (const auto& c : g["cells"]) {
    CHECK(c["factorization_holds"] == true);
    CHECK(c["det_identity_holds"] == true);
  }
  CHECK(g["cells"][1]["lambda"] == "d=2:(1)");
  CHECK(delta_poly_from_json(g["cells"][1]["det"]) ==
        DeltaPoly(std::vector<Rational>{0, -2, 0, 1}));

  Result gr = cli({"green", "--kind", "brauer", "--n", "3"});
  REQUIRE(gr.code == 0);
  Json gj = gr.json();
  CHECK(gj["d_class_count"] == 2);
  CHECK(gj["regular"] == true);
  for (const auto& c : gj["checks"]) CHECK(c["ok"] == true);

  for (auto [kind, n] : {std::pair{"tl", "4"}, {"brauer", "3"}, {"partition", "2"}}) {
    Result v = cli({"verify", "--kind", kind, "--n", n, "--delta", "2"});
    CHECK(v.code == 0);
    CHECK(v.json()["ok"] == true);
  }
}

TEST_CASE("generic input") {
  // S_2 with inversion: a valid generic semigroup.
  Json s2 = {{"size", 2}, {"table", {{0, 1}, {1, 0}}}, {"identity", 0}, {"star", {0, 1}}};
  const std::string ok = write("s2.json", s2);
  Result r = cli({"cell-datum", "--kind", "generic", "--in", ok});
  REQUIRE(r.code == 0);
  CHECK(r.json()["datum"]["lambdas"].size() == 2);
  CHECK(cli({"verify", "--kind", "generic", "--in", ok}).code == 0);

  // Null semigroup: not regular.
  Json null2 = {{"size", 2}, {"table", {{0, 0}, {0, 0}}}, {"star", {0, 1}}};
  Result nr = cli({"cell-datum", "--kind", "generic", "--in", write("null.json", null2)});
  CHECK(nr.code == 1);
  CHECK(nr.json()["ok"] == false);
  CHECK(nr.json()["error"] == "NotRegular");

  // Star that is not an anti-involution.
  Json z3 = {{"size", 3}, {"table", {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}}, {"identity", 0},
             {"star", {1, 0, 2}}};
  Result bad = cli({"green", "--kind", "generic", "--in", write("z3.json", z3)});
  CHECK(bad.code == 1);
  CHECK(bad.json()["error"] == "ValidationFailed");
  CHECK_FALSE(bad.json()["witness"].get<std::string>().empty());
}
