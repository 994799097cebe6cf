#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "higgs/cli.hpp"
#include "higgs/spectral.hpp"
#include "test_util.hpp"

using namespace higgs;
using namespace higgs::cli;
using testing::error_kind;
using testing::P;

namespace {

const std::filesystem::path kConfigs = HIGGS_TEST_DATA "/configs";

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Report run_file(const std::string& name) { return run(parse_config(slurp(kConfigs / name))); }

int cli_exit(const std::string& config_text, const std::string& extra = "") {
  const auto path = std::filesystem::temp_directory_path() / "higgs_cli_test.json";
  std::ofstream(path, std::ios::binary) << config_text;
  const std::string cmd = std::string(HIGGS_CLI) + " --config " + path.string() + " " + extra + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("parse_config") {
  auto job = parse_config(R"({"command":"bx-table","model":{"kind":"product_curves","g1":2,"g2":3}})");
  CHECK(job.command == Command::BxTable);
  CHECK(std::get<ProductOfCurves>(job.model).g2 == 3);

  job = parse_config(R"({"command":"base-check","model":{"kind":"chart","nvars":2},"payload":{"s1":["x","y"],"s2":[["x^2","0"],["0","0"]]}})");
  CHECK(job.command == Command::BaseCheck);
  CHECK(std::get<ChartModel>(job.model).nvars == 2);

  job = parse_config(R"({"command":"selftest","seed":7})");
  CHECK(job.seed == 7u);
}

TEST_CASE("parse_config rejects bad input with the path") {
  auto message = [](const char* text) {
    try {
      parse_config(text);
    } catch (const Error& e) {
      return e.kind() == ErrorKind::SchemaError ? "schema: " + e.witness() : "parse: " + e.witness();
    }
    return std::string("accepted");
  };
  CHECK(message(R"({"model":{"kind":"chart","nvars":2}})") == "schema: config.command: missing key");
  CHECK(message(R"({"command":"factor","extra":1})") == "schema: config.extra: unknown key");
  CHECK(message(R"({"command":"nope"})") == "schema: config.command: unknown command \"nope\"");
  CHECK(message(R"({"command":"factor","model":{"kind":"chart","nvars":9}})") ==
        "schema: config.model.nvars: 9 outside [1, 4]");
  CHECK(message(R"({"command":1})") == "parse: config.command: expected string");
  CHECK(message("{\"command\":") .rfind("parse: config: ", 0) == 0);
}

TEST_CASE("payload schema is checked per command") {
  auto kind = [](const char* text) { return error_kind([&] { run(parse_config(text)); }); };
  CHECK(kind(R"({"command":"factor","model":{"kind":"chart","nvars":2},"payload":{"symdiff":[["1","0"],["0","1"]],"x":1}})") ==
        ErrorKind::SchemaError);
  CHECK(kind(R"({"command":"factor","model":{"kind":"chart","nvars":2},"payload":{}})") == ErrorKind::SchemaError);
  CHECK(kind(R"({"command":"bx-table","model":{"kind":"chart","nvars":2}})") == ErrorKind::SchemaError);
  CHECK(kind(R"({"command":"factor","model":{"kind":"chart","nvars":2},"payload":{"symdiff":[["1","0"],["0","1"]]}})") ==
        ErrorKind::NotRankOne);
  CHECK(kind(R"({"command":"higher-rank","model":{"kind":"chart","nvars":1},"payload":{"n":6,"c":["1","1","1","1","1"]}})") ==
        ErrorKind::RankCap);
  CHECK(kind(R"({"command":"factor","model":{"kind":"chart","nvars":2},"payload":{"symdiff":[["x^13","0"],["0","0"]]}})") ==
        ErrorKind::CapExceeded);
}

TEST_CASE("bx-table (2,3) lists dims 5, 6, 3") {
  auto r = run_file("bx_table.json");
  CHECK(r.machine["result"]["dims"] == Json::array({5, 6, 3}));
  CHECK(r.machine["command"] == "bx-table");
}

TEST_CASE("tower with m = (2,3,1) lists 4 covers and one normalization") {
  auto r = run_file("tower.json");
  const Json& res = r.machine["result"];
  CHECK(res["count"] == 4);
  int flagged = 0;
  for (const auto& c : res["covers"]) flagged += c["normalization"].get<bool>();
  CHECK(flagged == 1);
  CHECK(poly_from_json(res["covers"][3]["effective_tau"], 3, "tau") == P("x2*x3", 3));
}

TEST_CASE("every sample config runs and round-trips its machine block") {
  for (const auto& entry : std::filesystem::directory_iterator(kConfigs)) {
    CAPTURE(entry.path().filename().string());
    auto job = parse_config(slurp(entry.path()));
    auto a = run(job);
    auto b = run(job);
    CHECK(a.ok);
    const std::string dumped = a.machine.dump();
    CHECK(dumped == b.machine.dump());
    CHECK(Json::parse(dumped).dump() == dumped);
    CHECK(a.machine["command"] == std::string(to_string(job.command)));
  }
}

TEST_CASE("machine values parse back into equal library values") {
  auto r = run_file("factor.json");
  CHECK(oneform_from_json(r.machine["result"]["alpha"], 2, "alpha") == testing::F({"x", "y"}));
  CHECK(poly_from_json(r.machine["result"]["tau"], 2, "tau") == P("2"));

  r = run_file("correspondence.json");
  const Json& res = r.machine["result"];
  CHECK(res["roundtrip"] == true);
  auto s2 = symdiff_from_json(res["spectral_datum"]["s2"], 2, "s2");
  CHECK(s2 == RankOneFactorization(testing::F({"x", "1"}), P("x*y+1")).expand());
  CHECK(oneform_from_json(res["spectral_datum"]["s1"], 2, "s1").is_zero());

  r = run_file("chern.json");
  CHECK(r.machine["result"]["c1"] == Json::array({"-1", "-1"}));
  CHECK(rational_from_json(r.machine["result"]["c2"], "c2") == 0);

  r = run_file("sl2r.json");
  CHECK(r.machine["result"]["count"] == 8);

  r = run_file("higher_rank.json");
  std::vector<Poly> cp;
  for (const auto& c : r.machine["result"]["charpoly"]) cp.push_back(poly_from_json(c, 2, "c"));
  CHECK(cp == std::vector<Poly>{P("-y^2"), P("-x"), P("0"), P("1")});
}

TEST_CASE("base-check witness names the minor") {
  auto r = run(parse_config(
      R"({"command":"base-check","model":{"kind":"chart","nvars":2},"payload":{"s1":["0","0"],"s2":[["1","0"],["0","1"]]}})"));
  const Json& res = r.machine["result"];
  CHECK(res["verdict"] == "not-member");
  CHECK(rational_from_json(res["witness"]["minor"]["terms"][0]["num"], "num") == 16);
}

TEST_CASE("selftest with seed 42 passes") {
  auto r = run_file("selftest.json");
  CHECK(r.ok);
  CHECK(r.machine["result"]["all_pass"] == true);
  CHECK(r.machine["result"]["seed"] == 42);
  CHECK(r.human.find("(all pass)") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(cli_exit(R"({"command":"rigidity","payload":{"picard_number_one":false,"b1":2}})") == 0);
  CHECK(cli_exit(R"({"command":"factor","model":{"kind":"chart","nvars":2},"payload":{"symdiff":[["1","0"],["0","1"]]}})") == 1);
  CHECK(cli_exit(R"({"command":"factor","bogus":true})") == 2);
  CHECK(cli_exit("not json") == 2);
  CHECK(cli_exit(R"({"command":"rigidity","payload":{"picard_number_one":true,"b1":0}})", "--format bogus") == 2);
}
