#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "cli_support.hpp"
#include "operforge/cli.hpp"
#include "operforge/json_io.hpp"
#include "support.hpp"

using namespace testing;
using operforge::io::Json;
namespace io = operforge::io;
namespace cli = operforge::cli;

namespace {

Json load(const std::string& name) { return Json::parse(slurp(golden_inputs() + "/" + name)); }

cli::JobConfig config(const std::string& group, const std::string& command, int rank, char family = 'A') {
  cli::JobConfig c;
  c.family = family;
  c.rank = rank;
  c.group = group;
  c.command = command;
  return c;
}

}  // namespace

TEST_CASE("golden files") {
  auto cases = golden_cases();
  REQUIRE(cases.size() >= 20);
  for (const auto& c : cases) {
    CAPTURE(c.name);
    auto r = run_cli(c.args, golden_inputs());
    CHECK(r.code == c.code);
    CHECK(r.out == golden_expected(c));
  }
}

TEST_CASE("canonicalizing the gauged sl2 document returns the canonical one") {
  auto cfg = config("oper", "canonicalize", 1);
  cfg.precision = 12;
  auto a = cli::run(cfg, load("sl2_gauged.json"));
  auto b = cli::run(cfg, load("sl2_canonical.json"));
  REQUIRE(a.exit_code == 0);
  CHECK(a.doc == b.doc);
  CHECK(a.doc == load("sl2_canonical.json"));
}

TEST_CASE("the diagram through the CLI matches the library") {
  auto cfg = config("miura", "diagram", 1);
  auto r = cli::run(cfg, load("sl2_u3.json"));
  REQUIRE(r.exit_code == 0);
  CHECK(r.doc["equal"] == true);
  CHECK(r.doc["lhs"]["coords"] == Json::array({"25/4"}));
  CHECK(r.doc["rhs"] == r.doc["lhs"]);
}

TEST_CASE("malformed rationals are parse errors with a location") {
  auto r = run_cli("miura transform --rank 1 sl2_bad_rational.json", golden_inputs());
  CHECK(r.code == 1);
  CHECK(r.err.find("$.u.coeffs[0][1][0]") != std::string::npos);
  CHECK(r.err.find("1/0") != std::string::npos);
  CHECK(r.out.empty());
  CHECK_THROWS_AS(operforge::parse_rational("1/0", "$"), operforge::ParseError);
  CHECK_THROWS_AS(operforge::parse_rational("1/2/3"), operforge::ParseError);
  CHECK_THROWS_AS(operforge::parse_rational(""), operforge::ParseError);
  CHECK(operforge::parse_rational("-6/4") == Rational(-3, 2));
}

TEST_CASE("structural parse errors") {
  auto alg = build_algebra('A', 1);
  CHECK_THROWS_AS(io::scalar_from_json(Json::parse(R"({"window":[0,3],"coeffs":[[3,"1"]]})"), "$"), ParseError);
  CHECK_THROWS_AS(io::scalar_from_json(Json::parse(R"({"window":[0,3],"coeffs":[[-1,"1"]]})"), "$"), ParseError);
  CHECK_THROWS_AS(io::scalar_from_json(Json::parse(R"({"coeffs":[]})"), "$"), ParseError);
  CHECK_THROWS_AS(io::vec_from_json(Json::parse(R"(["1","2"])"), "$", 3), ParseError);
  auto bad_q = R"({"kind":"raw_oper","phi":[{"window":[0,2],"coeffs":[[0,"1"]]}],
                  "q":{"space":"g","window":[0,2],"coeffs":[[0,["0","0","1"]]]}})";
  CHECK_THROWS_AS(io::raw_from_json(*alg, Json::parse(bad_q), "$"), ParseError);
  auto r = cli::run(config("miura", "transform", 1), load("sl2_canonical.json"));
  CHECK(r.exit_code == 1);
  CHECK(r.error.find("$.kind") != std::string::npos);
  try {
    io::canonical_from_json(*alg, Json::parse(R"({"kind":"canonical_oper","v":[{"degree":2,"series":{"window":[0,1],"coeffs":[]}}]})"), "$");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.where() == "$.v[0].degree");
  }
}

TEST_CASE("document round trips") {
  Rng rng(1);
  for (auto [f, r] : std::vector<std::pair<char, int>>{{'A', 1}, {'A', 2}, {'B', 2}, {'G', 2}}) {
    auto alg = build_algebra(f, r);
    for (int trial = 0; trial < 5; ++trial) {
      auto s = rng.series(-2, 6);
      CHECK(io::scalar_from_json(io::to_json(s), "$") == s);
      auto p = rng.polynomial(-2, 3);
      CHECK(io::scalar_from_json(io::to_json(p), "$") == p);
      CHECK(io::scalar_from_json(io::to_json(ScalarSeries::zero(4)), "$") == ScalarSeries::zero(4));
      CHECK(io::scalar_from_json(io::to_json(ScalarSeries()), "$") == ScalarSeries());

      auto raw = random_raw(*alg, rng, 6, -1);
      auto raw2 = io::raw_from_json(*alg, io::to_json(raw), "$");
      CHECK(raw2.q.agrees_with(raw.q));
      CHECK(io::to_json(raw2) == io::to_json(raw));

      auto C = random_canonical(*alg, rng, 6, [](int d) { return d + 1; });
      CHECK(io::canonical_from_json(*alg, io::to_json(*alg, C), "$") == C);

      HConnection chi;
      for (int i = 0; i < r; ++i) chi.u.push_back(rng.series(-1, 7));
      auto chi2 = io::hconn_from_json(*alg, io::to_json(chi), "$");
      CHECK(io::to_json(chi2) == io::to_json(chi));

      auto g = random_gauge(*alg, rng, 5);
      auto g2 = io::gauge_from_json(*alg, io::to_json(g), "$");
      CHECK(io::to_json(g2) == io::to_json(g));
      auto A = oper_connection(*alg, raw);
      CHECK(apply_gauge(*alg, A, g2).agrees_with(apply_gauge(*alg, A, g)));

      CartanOrbitPoint pt{zero_vec(alg->principal.vcan_dim)};
      for (auto& x : pt.coords) x = rng.rational();
      CHECK(io::orbit_point_from_json(*alg, io::to_json(pt), "$") == pt);
    }
  }
}

TEST_CASE("precision configuration") {
  auto in = golden_inputs();
  auto low = run_cli("miura diagram --rank 2 --precision 5 sl3_w0.json", in);
  CHECK(low.code == 2);
  CHECK(low.err.find("minimum 6") != std::string::npos);
  CHECK(run_cli("miura diagram --rank 2 --precision 6 sl3_w0.json", in).code == 0);
  CHECK(run_cli("miura diagram --rank 2 sl3_w0.json", in, "OPERFORGE_PRECISION=5").code == 2);
  CHECK(run_cli("miura diagram --rank 2 --precision 6 sl3_w0.json", in, "OPERFORGE_PRECISION=5").code == 0);
  CHECK(run_cli("miura diagram --rank 2 sl3_w0.json", in, "OPERFORGE_PRECISION=x").code == 1);
  // the env var sets the truncation of the output window
  auto t = run_cli("miura transform --rank 1 --json sl2_u3.json", in, "OPERFORGE_PRECISION=7");
  REQUIRE(t.code == 0);
  CHECK(Json::parse(t.out)["v"][0]["series"]["window"] == Json::array({-2, 6}));
  // a window that ends before the polar part: precision exhaustion
  auto cfg = config("oper", "residue", 1);
  auto r = cli::run(cfg, Json::parse(R"({"kind":"canonical_oper","v":[{"degree":1,"series":{"window":[-3,-2],"coeffs":[]}}]})"));
  CHECK(r.exit_code == 3);
  auto inv = config("miura", "invert", 1);
  inv.lambda = "0";
  CHECK(cli::run(inv, load("sl2_u3.json")).exit_code == 1);
}

TEST_CASE("preconditions map to exit code 2") {
  auto in = golden_inputs();
  CHECK(run_cli("miura classify --rank 1 sl2_u3.json", in).code == 2);
  CHECK(run_cli("miura invert --rank 1 --lambda -2 sl2_inverse.json", in).code == 2);
  CHECK(run_cli("alg info --type C --rank 2", in).code == 2);
  CHECK(run_cli("kk chain --rank 1 --lambda 0 --depth 9", in).code == 2);
  CHECK(run_cli("oper horiz --rank 1 sl2_canonical.json", in).code == 2);
  CHECK(run_cli("kk check --rank 1", in).code == 2);
  CHECK(run_cli("oper frobnicate", in).code != 0);
}

TEST_CASE("batches keep input order and do not depend on the worker count") {
  auto in = golden_inputs();
  std::string files = "sl2_u0.json sl2_u1.json sl2_u3.json sl2_bad_rational.json sl2_u1.json sl2_u0.json";
  auto one = run_cli("miura diagram --rank 1 --jobs 1 " + files, in);
  auto four = run_cli("miura diagram --rank 1 --jobs 4 " + files, in);
  CHECK(one.code == 1);
  CHECK(one.out == four.out);
  auto j1 = run_cli("miura diagram --rank 1 --json --jobs 1 " + files, in);
  auto j4 = run_cli("miura diagram --rank 1 --json --jobs 4 " + files, in);
  CHECK(j1.out == j4.out);
  auto doc = Json::parse(j1.out);
  REQUIRE(doc.size() == 6);
  CHECK(doc[0]["input"] == "sl2_u0.json");
  CHECK(doc[3]["exit"] == 1);
  CHECK(doc[2]["result"]["lhs"]["coords"] == Json::array({"25/4"}));
  CHECK(doc[5]["result"] == doc[0]["result"]);
}

TEST_CASE("output file and text rendering") {
  auto in = golden_inputs();
  auto path = std::filesystem::temp_directory_path() / "operforge_cli_test_out.txt";
  auto r = run_cli("alg info --rank 2 -o '" + path.string() + "'", in);
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(slurp(path) == run_cli("alg info --rank 2", in).out);
  std::filesystem::remove(path);
  CHECK(cli::render_text(Json{{"a", 1}, {"b", Json::array({"1/2"})}}) == "a = 1\nb = [\"1/2\"]\n");
}

TEST_CASE("witnesses") {
  auto cfg = config("oper", "canonicalize", 1);
  cfg.emit_witness = true;
  auto raw_doc = load("sl2_raw.json");
  auto r = cli::run(cfg, raw_doc);
  REQUIRE(r.exit_code == 0);
  auto alg = build_algebra('A', 1);
  auto raw = io::raw_from_json(*alg, raw_doc, "$", cfg.precision);
  auto g = io::gauge_from_json(*alg, r.doc["gauge"], "$.gauge");
  auto C = io::canonical_from_json(*alg, r.doc, "$");
  CHECK(apply_gauge(*alg, oper_connection(*alg, raw), g).agrees_with(canonical_connection(*alg, C)));

  auto chain = config("kk", "chain", 1);
  chain.lambda = "0";
  chain.depth = 2;
  chain.emit_witness = true;
  auto c = cli::run(chain);
  REQUIRE(c.exit_code == 0);
  auto rd = make_root_datum('A', 1);
  const auto& weights = c.doc["weights"];
  auto parse_w = [&](const Json& w) {
    return AffineWeight{io::rational_from_json(w["delta"], "$"), io::vec_from_json(w["finite"], "$")};
  };
  // each step is a legal single move from its predecessor
  for (const auto& s : c.doc["steps"]) {
    auto from = parse_w(weights[s[0].get<int>()]), to = parse_w(weights[s[1].get<int>()]);
    auto next = kk_steps(rd, from, 2);
    CHECK(std::find(next.begin(), next.end(), to) != next.end());
  }
}
