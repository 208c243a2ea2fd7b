#include <doctest.h>

#include <fstream>
#include <sstream>

#include "nodalk/commands.hpp"
#include "nodalk/oracle.hpp"
#include "nodalk/report.hpp"
#include "nodalk/scenario.hpp"
#include "support.hpp"

using namespace nodalk;

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

std::string scenario_path(const std::string& name) { return std::string(NODALK_SCENARIO_DIR) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const char* kStarScenario = R"(
curve: {g1: 2, g2: 2}
pair: {r: 1, d1: 4, d2: 4, k: 3}
hypotheses: [star_condition, M1_semistable, M2_semistable]
)";

} // namespace

TEST_SUITE("cli") {

TEST_CASE("parse_range") {
  CHECK(parse_range("2..4") == std::pair<long long, long long>{2, 4});
  CHECK(parse_range("7") == std::pair<long long, long long>{7, 7});
  CHECK(parse_range("3..2") == std::pair<long long, long long>{3, 2});
  CHECK(parse_range("-1..1") == std::pair<long long, long long>{-1, 1});
  CHECK_THROWS_AS(parse_range("a..b"), std::invalid_argument);
  CHECK_THROWS_AS(parse_range("2.."), std::invalid_argument);
  CHECK_THROWS_AS(parse_range(""), std::invalid_argument);
}

TEST_CASE("scenario parsing") {
  auto s = parse_scenario(kStarScenario);
  CHECK(s.curve == CurveData(2, 2));
  CHECK(s.pair.k == 3);
  CHECK(s.hypotheses.asserted(Fact::star_condition));
  CHECK(s.options.grid == 1000);
  CHECK(s.options.format == OutputFormat::Text);

  auto with_opts = parse_scenario(std::string(kStarScenario) + "options: {grid: 97, format: json}\n");
  CHECK(with_opts.options.grid == 97);
  CHECK(with_opts.options.format == OutputFormat::Json);

  auto with_s = parse_scenario("curve: {g1: 2, g2: 2}\npair: {r: 1, d1: 4, d2: 4, k: 3, s1: 0, s2: 1}\nhypotheses: []\n");
  CHECK(with_s.pair.s1 == 0);
  CHECK(with_s.pair.s2 == 1);
}

TEST_CASE("scenario schema errors") {
  CHECK_THROWS_AS(parse_scenario("curve: {g1: 1, g2: 2}\npair: {r: 1, d1: 4, d2: 4, k: 3}\nhypotheses: []\n"),
                  InvariantError);
  CHECK_THROWS_AS(parse_scenario("pair: {r: 1, d1: 4, d2: 4, k: 3}\nhypotheses: []\n"), SchemaError);
  CHECK_THROWS_AS(parse_scenario("curve: {g1: 2, g2: 2}\npair: {r: 1, d1: 4, d2: 4, k: 3}\n"), SchemaError);
  CHECK_THROWS_AS(parse_scenario("curve: {g1: 2, g2: 2, g3: 1}\npair: {r: 1, d1: 4, d2: 4, k: 3}\nhypotheses: []\n"),
                  SchemaError);
  CHECK_THROWS_AS(parse_scenario("curve: {g1: two, g2: 2}\npair: {r: 1, d1: 4, d2: 4, k: 3}\nhypotheses: []\n"),
                  SchemaError);
  CHECK_THROWS_AS(parse_scenario("curve: {g1: 2, g2: 2}\npair: {r: 1, d1: 4, d2: 4, k: 1}\nhypotheses: []\n"),
                  InvariantError);
  CHECK_THROWS_AS(parse_scenario("curve: [\n"), SchemaError);
  CHECK_THROWS_AS(parse_scenario(std::string(kStarScenario) + "options: {grid: 1}\n"), SchemaError);
  try {
    parse_scenario("curve: {g1: 2, g2: 2}\npair: {r: 1, d1: 4, d2: 4, k: 3}\nhypotheses: [E1_semistabel]\n");
    FAIL("expected a schema error");
  } catch (const SchemaError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("did you mean 'E1_semistable'") != std::string::npos);
    CHECK(msg.find("pair_is_complete") != std::string::npos);
  }
  CHECK_THROWS_AS(load_scenario("/nonexistent/scenario.yaml"), IoError);
}

TEST_CASE("verdict JSON round trip") {
  auto s = load_scenario(scenario_path("complete_pair.yaml"));
  auto v = classify(s.pair, s.curve, s.hypotheses);
  auto j = verdict_to_json(v);
  CHECK(verdict_from_json(nlohmann::json::parse(j.dump())) == v);
  CHECK(j.at("instability_bounds") == nlohmann::json::array({"2/5", "2/5"}));
}

TEST_CASE("verdict command: complete pair") {
  auto r = run({"verdict", scenario_path("complete_pair.yaml")});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("verdict: StronglyUnstable") != std::string::npos);
  CHECK(r.out.find("w_1 <= 2/5, w_2 <= 2/5") != std::string::npos);
  CHECK(r.out.find("4/5 < 1") != std::string::npos);
}

TEST_CASE("verdict command: star scenario") {
  auto r = run({"verdict", scenario_path("star_generic.yaml")});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("verdict: WSemistable") != std::string::npos);
  CHECK(r.out.find("[3/7, 4/7]") != std::string::npos);
}

TEST_CASE("verdict command: machine format is parseable and stable") {
  auto a = run({"verdict", scenario_path("star_generic.yaml"), "--format", "json"});
  auto b = run({"verdict", scenario_path("star_generic.yaml"), "--format", "json"});
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  auto j = nlohmann::json::parse(a.out);
  CHECK(j.at("verdict") == "WSemistable");
  CHECK(j.at("window").at("lo") == "3/7");
}

TEST_CASE("verdict command: Inconclusive still exits 0") {
  auto path = testing::write_temp("bare.yaml", "curve: {g1: 2, g2: 2}\npair: {r: 1, d1: 4, d2: 4, k: 3}\nhypotheses: []\n");
  auto r = run({"verdict", path});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("verdict: Inconclusive") != std::string::npos);
}

TEST_CASE("exit codes") {
  auto bad = run({"verdict", scenario_path("bad_genus.yaml")});
  CHECK(bad.code == kExitSchema);
  CHECK(bad.err.find("g_i >= 2") != std::string::npos);

  CHECK(run({"verdict", "/nonexistent/x.yaml"}).code == kExitIo);
  CHECK(run({"verdict"}).code == kExitSchema);
  CHECK(run({"frobnicate"}).code == kExitSchema);
  CHECK(run({"verdict", scenario_path("star_generic.yaml"), "--format", "xml"}).code == kExitSchema);

  auto contra = testing::write_temp(
      "contra.yaml", "curve: {g1: 2, g2: 2}\npair: {r: 1, d1: 4, d2: 4, k: 3, s1: 1}\nhypotheses: [star_condition]\n");
  auto c = run({"verdict", contra});
  CHECK(c.code == kExitContradiction);
  CHECK(c.err.find("star_condition") != std::string::npos);

  auto degenerate = testing::write_temp("degenerate.yaml",
                                        "curve: {g1: 2, g2: 2}\npair: {r: 1, d1: 4, d2: 4, k: 1}\nhypotheses: []\n");
  CHECK(run({"window", degenerate}).code == kExitSchema);
  CHECK(run({"help-me"}).code == kExitSchema);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("window command") {
  auto r = run({"window", scenario_path("star_generic.yaml")});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("a1: 3/7") != std::string::npos);
  CHECK(r.out.find("b1: 4/7") != std::string::npos);
  CHECK(r.out.find("(3+4)/(7+7) = 1/2") != std::string::npos);

  auto u = run({"window", scenario_path("unequal_genera.yaml"), "--format", "json"});
  auto j = nlohmann::json::parse(u.out);
  CHECK(j.at("a1") == "8/23");
  CHECK(j.at("b1") == "11/23");
  CHECK(j.at("sample") == "19/46");
}

TEST_CASE("oracle-scan command") {
  auto r = run({"oracle-scan", scenario_path("star_generic.yaml"), "--grid", "140"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("21 points, t in [60, 80]") != std::string::npos);
  CHECK(r.out.find("agreement: NO") == std::string::npos);

  auto j = nlohmann::json::parse(
      run({"oracle-scan", scenario_path("complete_pair.yaml"), "--grid", "100", "--format", "json"}).out);
  CHECK(j.at("destabilizer_feasible_points") == 0);
  CHECK(j.at("destabilizer_agrees") == true);
  CHECK(j.at("teixidor_agrees") == true);
}

TEST_CASE("sweep command") {
  auto claim = run({"sweep", "--template", "claim"});
  CHECK(claim.code == kExitOk);
  CHECK(claim.out.find("\n0 counterexamples") != std::string::npos);

  auto empty = run({"sweep", "--g1", "3..2"});
  CHECK(empty.code == kExitOk);
  CHECK(empty.out == std::string(kSweepCsvHeader) + "\n");
  CHECK(empty.err.rfind("0 rows", 0) == 0);

  auto path = testing::write_temp("complete.csv", "");
  auto complete = run({"sweep", "--template", "complete", "--g1", "2..3", "--g2", "2..3", "--out", path});
  CHECK(complete.code == kExitOk);
  std::istringstream csv(slurp(path));
  std::string line;
  std::getline(csv, line);
  CHECK(line == kSweepCsvHeader);
  int rows = 0;
  while (std::getline(csv, line)) {
    ++rows;
    CHECK(line.find(",StronglyUnstable,") != std::string::npos);
  }
  CHECK(rows > 0);
  CHECK(complete.out.find(std::to_string(rows) + " rows") == 0);

  CHECK(run({"sweep", "--template", "nope"}).code == kExitSchema);
  CHECK(run({"sweep", "--g1", "x"}).code == kExitSchema);
  CHECK(run({"sweep", "--g1", "1..3"}).code == kExitSchema);
  CHECK(run({"sweep", "--k", "3", "--k-offset", "1"}).code == kExitSchema);
  CHECK(run({"sweep", "--out", "/nonexistent/dir/x.csv"}).code == kExitIo);
}

TEST_CASE("sweep command is deterministic") {
  auto a = testing::write_temp("det_a.csv", "");
  auto b = testing::write_temp("det_b.csv", "");
  REQUIRE(run({"sweep", "--out", a}).code == kExitOk);
  REQUIRE(run({"sweep", "--out", b}).code == kExitOk);
  CHECK(slurp(a) == slurp(b));
  CHECK_FALSE(slurp(a).empty());
}

} // TEST_SUITE
