#include <doctest.h>

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "quadpair/cli.hpp"
#include "quadpair/json_io.hpp"
#include "quadpair/modelgen.hpp"

using namespace quadpair;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = runCli(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string pairFilePath() {
  // P1 written to the build directory for file-based subcommands.
  std::string path = "cli_test_pair.json";
  Json curvePoints = Json::object();
  for (int i = 0; i < 10; ++i)
    curvePoints["p" + std::to_string(i)] =
        Json::array({Json::array({0, 1}), Json::array({0, 1}), Json::array({0, 1}),
                     Json::array({0, 1})});
  Json j{{"kind", "decomposable"},
         {"curve", {{"genus", 2}, {"points", curvePoints}}},
         {"U", {{"degree", 9}, {"jac", Json::array({Json::array({0, 1}), Json::array({0, 1}),
                                                    Json::array({0, 1}), Json::array({0, 1})})}}},
         {"L1", {{"degree", 1}, {"jac", Json::array({Json::array({0, 1}), Json::array({0, 1}),
                                                     Json::array({0, 1}), Json::array({0, 1})})}}},
         {"L2", {{"degree", 3}, {"jac", Json::array({Json::array({0, 1}), Json::array({0, 1}),
                                                     Json::array({0, 1}), Json::array({0, 1})})}}},
         {"g11", {{"points", {{"p0", 4}, {"p1", 3}}}}},
         {"g12", nullptr},
         {"g22", {{"points", {{"p2", 3}}}}}};
  std::ofstream f(path);
  f << j.dump(2);
  return path;
}

int countOccurrences(const std::string& text, const std::string& needle) {
  int n = 0;
  size_t pos = text.find(needle);
  while (pos != std::string::npos) {
    ++n;
    pos = text.find(needle, pos + needle.size());
  }
  return n;
}

}  // namespace

TEST_CASE("chambers subcommand emits exact rationals") {
  CliResult r = run({"chambers", "--g", "2", "--dU", "9", "--d", "4", "--json"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["status"] == "ok");
  CHECK(j["payload"]["criticals"] == Json::array({0, 1, 2}));
  CHECK(j["payload"]["alphaMin"] == 0);
  CHECK(j["payload"]["alphaMax"] == 2);
  CHECK(j["payload"]["chambers"] ==
        Json::array({Json::array({"-inf", 0}), Json::array({0, 1}), Json::array({1, 2})}));

  // Leading placement works as well.
  CliResult r2 = run({"--json", "chambers", "--g", "2", "--dU", "9", "--d", "4"});
  CHECK(r2.out == r.out);

  r = run({"--json", "chambers", "--g", "2", "--dU", "9", "--d", "5"});
  j = Json::parse(r.out);
  CHECK(j["payload"]["criticals"] == Json::array({1, 2, Json::array({5, 2})}));
  CHECK(j["payload"]["alphaMax"] == Json::array({5, 2}));
}

TEST_CASE("so23 components table has four connected rows at genus 2") {
  CliResult r = run({"so23", "components", "--g", "2"});
  REQUIRE(r.code == 0);
  CHECK(countOccurrences(r.out, "Connected") == 4);  // exactly the four in-range rows
  CHECK(r.out.find("in-range connected classes: 4") != std::string::npos);

  CliResult rj = run({"--json", "so23", "components", "--g", "3"});
  Json j = Json::parse(rj.out);
  CHECK(j["payload"]["inRangeConnected"] == 12);
}

TEST_CASE("jets sqrt emits two verified roots") {
  CliResult r = run({"jets", "sqrt", "--coeffs", "1,1,0", "--len", "3"});
  REQUIRE(r.code == 0);
  CHECK(countOccurrences(r.out, "(verified)") == 2);
  CHECK(r.out.find("1,1/2,-1/8") != std::string::npos);
  CHECK(r.out.find("-1,-1/2,1/8") != std::string::npos);
}

TEST_CASE("region diagram matches the stored golden file byte for byte") {
  CliResult r = run({"region-diagram", "--dU", "9", "--d-range", "0:10", "--alpha-range",
                     "-2:5", "--format", "ascii"});
  REQUIRE(r.code == 0);
  std::string golden = slurp(std::string(QUADPAIR_TEST_DIR) + "/golden/region_diagram_du9.txt");
  CHECK(r.out == golden);

  // Determinism: byte-identical output on repeated invocations.
  CliResult r2 = run({"region-diagram", "--dU", "9", "--d-range", "0:10", "--alpha-range",
                      "-2:5", "--format", "ascii"});
  CHECK(r.out == r2.out);

  // Even-dU variant golden.
  CliResult r3 = run({"region-diagram", "--dU", "8", "--d-range", "0:9", "--alpha-range",
                      "-2:4", "--format", "ascii"});
  std::string golden8 = slurp(std::string(QUADPAIR_TEST_DIR) + "/golden/region_diagram_du8.txt");
  CHECK(r3.out == golden8);

  CliResult svg = run({"region-diagram", "--dU", "9", "--d-range", "0:10", "--alpha-range",
                       "-2:5", "--format", "svg"});
  CHECK(svg.out == slurp(std::string(QUADPAIR_TEST_DIR) + "/golden/region_diagram_du9.svg"));

  // --out writes the same bytes to a file.
  CliResult viaFile = run({"region-diagram", "--dU", "9", "--d-range", "0:10", "--alpha-range",
                           "-2:5", "--format", "ascii", "--out", "cli_test_diagram.txt"});
  REQUIRE(viaFile.code == 0);
  CHECK(slurp("cli_test_diagram.txt") == golden);

  // The d <= 9 window variant is pinned as well.
  CliResult r4 = run({"region-diagram", "--dU", "9", "--d-range", "0:9", "--alpha-range",
                      "-2:5", "--format", "ascii"});
  std::string golden9 =
      slurp(std::string(QUADPAIR_TEST_DIR) + "/golden/region_diagram_du9_d0to9.txt");
  CHECK(r4.out == golden9);
}

TEST_CASE("jets file-based subcommands") {
  {
    std::ofstream f("cli_test_eta.json");
    f << R"({"D": {"points": {"p": 1, "q": 1}},
             "eta": {"p": [[-1,1]], "q": [[-4,1]]}})";
  }
  CliResult r = run({"--json", "jets", "solve", "cli_test_eta.json"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["payload"]["count"] == 4);

  {
    std::ofstream f("cli_test_det.json");
    f << R"({"D": {"points": {"p": 2}},
             "g11": {"p": [[0,1],[0,1],[1,1]]},
             "g12": {"p": [[1,1],[1,1]]},
             "g22": {"p": [[5,1],[2,1]]}})";
  }
  r = run({"jets", "det-check", "cli_test_det.json"});
  REQUIRE(r.code == 0);
  CHECK(r.out == "identity holds\n");

  {
    std::ofstream f("cli_test_restrict.json");
    f << R"({"D": {"points": {"p": 2}}, "jets": {"p": [[3,1],[5,1],[7,1]]}})";
  }
  r = run({"jets", "restrict", "cli_test_restrict.json"});
  REQUIRE(r.code == 0);
  CHECK(r.out == "p: 3,5\n");
}

TEST_CASE("stability subcommands operate on pair files") {
  std::string path = pairFilePath();

  CliResult r = run({"stability", "check", path, "--alpha", "1"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("StrictlySemistable {C} polystable") != std::string::npos);

  r = run({"--json", "stability", "check", path, "--alpha", "1/2"});
  Json j = Json::parse(r.out);
  CHECK(j["payload"]["status"] == "Stable");
  CHECK(j["payload"]["exactness"] == "Exact");

  r = run({"wall-side", path, "--alpha-k", "1"});
  CHECK(r.out == "SMinus(S0)\n");

  r = run({"destab-audit", path, "--alpha", "1"});
  CHECK(r.out == "no violations\n");

  r = run({"hitchin", path});
  CHECK(r.out.find("xi degree 5") != std::string::npos);
  CHECK(r.out.find("det divisor degree 10") != std::string::npos);
}

TEST_CASE("dims and connectedness subcommands") {
  CliResult r = run({"--json", "dims", "--g", "2", "--d", "4", "--dU", "9", "--alpha-k", "1"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["payload"]["expectedDim"] == 16);
  CHECK(j["payload"]["dimSplus"] == 7);
  CHECK(j["payload"]["dimSminus1"] == 13);
  CHECK(j["payload"]["dimPX"] == 10);
  CHECK(j["payload"]["dimHitchinFibre"] == 6);

  r = run({"connectedness", "--g", "2", "--d", "4", "--dU", "9", "--alpha", "2"});
  CHECK(r.out.find("ConnectedByCodimension") != std::string::npos);

  r = run({"connectedness", "--g", "3", "--d", "7", "--dU", "9", "--alpha", "3"});
  CHECK(r.out.find("HypothesisFails") != std::string::npos);
}

TEST_CASE("higgs and rank1 subcommands") {
  CliResult r = run({"--json", "higgs", "invariants", "--d1", "3", "--d2", "1"});
  Json j = Json::parse(r.out);
  CHECK(j["payload"]["a"] == 2);
  CHECK(j["payload"]["b"] == 1);
  CHECK(j["payload"]["dual"] == Json::array({-1, 1}));
  CHECK(j["payload"]["liftsToSp"] == false);

  r = run({"so23", "translate", "--a", "2", "--b", "1"});
  CHECK(r.out == "(a, w) = (2, 1)\n");

  r = run({"rank1", "--g", "2", "--dU", "9", "--dprime", "3", "--alpha", "3"});
  CHECK(r.out == "Cover(dim 3)\n");

  r = run({"rank1", "--g", "2", "--dU", "9", "--dprime", "5", "--alpha", "0"});
  CHECK(r.out == "Empty(NoNonzeroSection)\n");
}

TEST_CASE("exit codes distinguish usage and domain errors") {
  CliResult r = run({"no-such-command"});
  CHECK(r.code == 1);

  r = run({"chambers", "--g", "2"});  // missing required options
  CHECK(r.code == 1);

  r = run({"dims", "--g", "2", "--d", "9", "--dU", "9", "--alpha-k", "1"});
  CHECK(r.code == 2);  // d = dU has no flip loci
  CHECK(r.err.find("error") != std::string::npos);

  r = run({"--json", "rank1", "--g", "0", "--dU", "9", "--dprime", "1", "--alpha", "0"});
  CHECK(r.code == 2);
  Json j = Json::parse(r.out);
  CHECK(j["status"] == "error");

  r = run({"stability", "check", "missing_file.json", "--alpha", "1"});
  CHECK(r.code == 1);  // unreadable input is a usage problem
}

TEST_CASE("spectral, px and esp subcommands") {
  {
    Json points = Json::object();
    for (int i = 0; i < 4; ++i)
      points["p" + std::to_string(i)] =
          Json::array({Json::array({0, 1}), Json::array({0, 1}), Json::array({0, 1}),
                       Json::array({0, 1})});
    Json j{{"curve", {{"genus", 2}, {"points", points}}},
           {"D", {{"points", {{"p0", 1}, {"p1", 1}, {"p2", 1}, {"p3", 1}}}}}};
    std::ofstream f("cli_test_divisor.json");
    f << j.dump();
  }
  std::string xi = R"({"degree":2,"jac":[[0,1],[0,1],[0,1],[0,1]]})";
  CliResult r = run({"spectral", "classify", "--D", "cli_test_divisor.json", "--xi", xi});
  REQUIRE(r.code == 0);
  CHECK(r.out == "SmoothIrreducible\n");

  r = run({"px", "check", "--D", "cli_test_divisor.json", "--L", xi});
  CHECK(r.out == "member\n");

  r = run({"--json", "px", "fibre", "--D", "cli_test_divisor.json"});
  Json j = Json::parse(r.out);
  CHECK(j["payload"]["count"] == 16);
  CHECK(j["metadata"].contains("ajConvention"));

  {
    Json points = Json::object();
    for (int i = 0; i < 4; ++i)
      points["p" + std::to_string(i)] =
          Json::array({Json::array({0, 1}), Json::array({0, 1}), Json::array({0, 1}),
                       Json::array({0, 1})});
    // V = O(0) + O(2), L of degree 1, gamma = diag(g11, 0): unstable.
    Json q{{"kind", "esp"},
           {"curve", {{"genus", 2}, {"points", points}}},
           {"L1", {{"degree", 0}, {"jac", Json::array({Json::array({0, 1}), Json::array({0, 1}),
                                                       Json::array({0, 1}), Json::array({0, 1})})}}},
           {"L2", {{"degree", 2}, {"jac", Json::array({Json::array({0, 1}), Json::array({0, 1}),
                                                       Json::array({0, 1}), Json::array({0, 1})})}}},
           {"L", {{"degree", 1}, {"jac", Json::array({Json::array({0, 1}), Json::array({0, 1}),
                                                      Json::array({0, 1}), Json::array({0, 1})})}}},
           {"g11", {{"points", {{"p0", 3}}}}}};
    std::ofstream f("cli_test_esp.json");
    f << q.dump();
  }
  r = run({"esp", "check", "cli_test_esp.json", "--g", "2"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("Unstable") != std::string::npos);
  r = run({"esp", "check", "cli_test_esp.json", "--g", "3"});
  CHECK(r.code == 2);  // genus mismatch with the file
}

TEST_CASE("higgs milnor-wood, lift and translate directions") {
  CliResult r = run({"higgs", "milnor-wood", "--g", "2", "--d1", "3", "--d2", "1"});
  CHECK(r.out.find("valid") == 0);
  r = run({"higgs", "milnor-wood", "--g", "2", "--d1", "4", "--d2", "1"});
  CHECK(r.out.find("violated") == 0);
  r = run({"higgs", "lift", "--d2", "1"});
  CHECK(r.out == "does not lift\n");
  r = run({"higgs", "lift", "--d2", "-2"});
  CHECK(r.out == "lifts\n");
  r = run({"so23", "translate", "--a", "2", "--w", "1"});
  CHECK(r.out == "(a, b) = (2, 1)\n");
  r = run({"chambers", "--g", "2", "--dU", "9", "--d", "4", "--alpha", "1/2"});
  CHECK(r.out.find("Chamber(1)") != std::string::npos);
}

TEST_CASE("stability check accepts a candidates file") {
  std::string path = pairFilePath();
  {
    std::ofstream f("cli_test_candidates.json");
    f << R"([{"kind": "declared", "degree": 2, "class": "B"}])";
  }
  CliResult r = run({"--json", "stability", "check", path, "--alpha", "1/2", "--candidates",
                     "cli_test_candidates.json"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["payload"]["status"] == "StrictlySemistable");
  CHECK(j["payload"]["exactness"] == "CandidateRelative");
}

TEST_CASE("pair and quadruple files round-trip through JSON") {
  Rng rng(77);
  for (int i = 0; i < 20; ++i) {
    DecomposablePair p = randomDecomposablePair(rng, 2, 4, 9);
    DecomposablePair q = pairFromJson(toJson(p));
    CHECK(q.U == p.U);
    CHECK(q.L1 == p.L1);
    CHECK(q.L2 == p.L2);
    CHECK(q.g11 == p.g11);
    CHECK(q.g12 == p.g12);
    CHECK(q.g22 == p.g22);
    CHECK(alphaVerdict(q, Rational(1)).status == alphaVerdict(p, Rational(1)).status);
  }
  ExtensionPair e = randomExtensionPair(rng, 2, 4, 9, 1);
  ExtensionPair e2 = extensionPairFromJson(toJson(e));
  CHECK(e2.sub == e.sub);
  CHECK(e2.quot == e.quot);
  CHECK(e2.gammaQuot == e.gammaQuot);
  CHECK(e2.extNontrivial == e.extNontrivial);

  EspQuadruple q = randomEspQuadruple(rng, 2, 2, 1);
  EspQuadruple q2 = espFromJson(toJson(q));
  CHECK(q2.L1 == q.L1);
  CHECK(q2.Lcls == q.Lcls);
  CHECK(q2.g12 == q.g12);

  EspQuadruple deg;
  deg.curve = CurveModel(2);
  deg.Lcls = picZero(2);
  deg.degreeOnlyD1 = 5;
  EspQuadruple deg2 = espFromJson(toJson(deg));
  CHECK(deg2.degreeOnlyD1 == 5);
}

TEST_CASE("selftest --quick passes deterministically") {
  CliResult a = run({"--json", "selftest", "--quick", "--seed", "7"});
  REQUIRE(a.code == 0);
  Json j = Json::parse(a.out);
  CHECK(j["payload"]["totalFailures"] == 0);
  CHECK(j["payload"]["seed"] == 7);

  CliResult b = run({"--json", "selftest", "--quick", "--seed", "7"});
  CHECK(a.out == b.out);  // byte-identical for identical seeds
}

TEST_CASE("QUADPAIR_SEED drives the default selftest seed") {
  setenv("QUADPAIR_SEED", "5", 1);
  CliResult r = run({"--json", "selftest", "--quick"});
  unsetenv("QUADPAIR_SEED");
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["payload"]["seed"] == 5);
}
