#include <sstream>

#include "doctest.h"
#include "cli.hpp"

using namespace hyperdual;
using namespace hyperdual::cli;

namespace
{

struct Run
{
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args)
{
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args)
{
  args.push_back("--format");
  args.push_back("json");
  auto r = run(args);
  REQUIRE_MESSAGE(r.code == 0, r.err);
  return Json::parse(r.out);
}

} // namespace

TEST_CASE("exact integers switch to strings above 2^53")
{
  BigInt limit = BigInt(1) << 53;
  CHECK(exact(limit) == Json(9007199254740992LL));
  CHECK(exact(limit + 1) == Json("9007199254740993"));
  CHECK(exact(factorial(23)) == Json("25852016738884976640000"));
}

TEST_CASE("analyze the A_5 example")
{
  auto j = run_json({"analyze", "--x", "(1,2,3,4,5)", "--y", "(1,2,3)"});
  CHECK(j["command"] == "analyze");
  auto const &r = j["report"];
  CHECK(r["duality_index"] == 60);
  CHECK(r["extreme"] == true);
  CHECK(r["monodromy_class"] == "alternating");
  CHECK(r["monodromy_order"] == 60);
  CHECK(r["type_triple"]["l"] == 5);
  CHECK(r["type_triple"]["m"] == 5);
  CHECK(r["type_triple"]["n"] == 3);
  CHECK(r["duality_type"] == Json::array({3, 5}));

  std::vector<std::string> keys;
  for (auto const &[k, v] : j.items())
    keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"command", "inputs", "report", "certificates", "timing_ms"});
}

TEST_CASE("analyze the S_4 exceptional pair and a self-dual pair")
{
  auto j = run_json({"analyze", "--x", "(1,2)", "--y", "(1,2,3,4)"});
  CHECK(j["report"]["duality_index"] == 4);
  CHECK(j["report"]["self_dual"] == false);

  auto s = run_json({"analyze", "--x", "(1,2,3)", "--y", "(1,2,3)"});
  CHECK(s["report"]["self_dual"] == true);
  CHECK(s["report"]["duality_index"] == 1);
}

TEST_CASE("JSON output round-trips through analyze")
{
  for (auto const &args : std::vector<std::vector<std::string>>{
         {"analyze", "--x", "(1,2,3,4,5)", "--y", "(1,2,3)"},
         {"construct", "--duality-type", "6,4"},
         {"construct", "--duality-type", "5,9"},
         {"construct", "--lemma1-sym", "7"}}) {
    auto first = run_json(args);
    auto const &r = first["report"];
    auto again = run_json({"analyze", "--x", r["x"].get<std::string>(), "--y",
                           r["y"].get<std::string>(), "--degree", std::to_string(r["degree"].get<int>())});
    CHECK(again["report"] == r);
  }
}

TEST_CASE("degree padding")
{
  auto j = run_json({"analyze", "--x", "(1,2)", "--y", "(1,2,3)", "--degree", "5"});
  CHECK(j["report"]["degree"] == 5);
  CHECK(j["report"]["monodromy_order"] == 6);

  auto unpadded = run_json({"analyze", "--x", "(1,2)", "--y", "(1,2,3)"});
  CHECK(unpadded["report"]["degree"] == 3);
}

TEST_CASE("construct")
{
  auto a = run_json({"construct", "--duality-type", "9,5"});
  CHECK(a["certificates"][0]["case_tag"] == "case_a");
  CHECK(a["report"]["x"] == "(1,2,3,4,5,6,7,8,9)");
  CHECK(a["report"]["y"] == "(1,2,3,4,5)");
  CHECK(a["report"]["monodromy_class"] == "alternating");
  CHECK(a["report"]["extreme"] == true);

  auto c = run_json({"construct", "--duality-type", "6,4"});
  CHECK(c["certificates"][0]["case_tag"] == "case_c");
  CHECK(c["report"]["degree"] == 9);
  CHECK(c["report"]["monodromy_class"] == "symmetric");

  auto t = run_json({"construct", "--theorem2", "5"});
  CHECK(t["report"]["x"] == "(1,2,3,4,5)");
  CHECK(t["report"]["y"] == "(1,2,3)");
}

TEST_CASE("text output")
{
  auto r = run({"analyze", "--x", "(1,2,3,4,5)", "--y", "(1,2,3)"});
  CHECK(r.code == 0);
  CHECK(r.out.find("duality_index: 60") != std::string::npos);
  CHECK(r.out.find("monodromy_class: alternating") != std::string::npos);
}

TEST_CASE("exit codes")
{
  CHECK(run({}).code == usage_error);
  CHECK(run({"frobnicate"}).code == usage_error);
  CHECK(run({"analyze", "--x", "(1,2"}).code == usage_error);
  CHECK(run({"analyze", "--x", "(1,2", "--y", "(1,2)"}).code == usage_error);
  CHECK(run({"analyze", "--x", "(1,1)", "--y", "(1,2)"}).code == usage_error);
  CHECK(run({"analyze", "--x", "(1,2,3)", "--y", "(1,2)", "--degree", "2"}).code == usage_error);
  CHECK(run({"construct", "--lemma1-sym", "1"}).code == usage_error);
  CHECK(run({"construct", "--duality-type", "1,4"}).code == usage_error);
  CHECK(run({"construct", "--duality-type", "banana"}).code == usage_error);
  CHECK(run({"construct", "--theorem2", "5", "--lemma1-alt", "5"}).code == usage_error);
  CHECK(run({"construct"}).code == usage_error);
  CHECK(run({"census", "--group", "S6"}).code == usage_error);
  CHECK(run({"census", "--group", "D4"}).code == usage_error);
  CHECK(run({"verify", "--suite", "sn_classification", "--max-n", "7"}).code == usage_error);
  CHECK(run({"verify", "--suite", "nonsense"}).code == usage_error);

  // {2,2} has no extreme representative; the certificate check fails.
  CHECK(run({"construct", "--duality-type", "2,2"}).code == verification_failure);
  CHECK(run({"verify", "--suite", "main_theorem_grid", "--max-n", "3"}).code == verification_failure);

  CHECK(run({"--help"}).code == ok);
}

TEST_CASE("verify suites")
{
  auto sn = run_json({"verify", "--suite", "sn_classification", "--max-n", "4"});
  CHECK(sn["report"]["failed"] == 0);
  CHECK(sn["report"]["passed"].get<int>() > 0);

  auto agree = run_json({"verify", "--suite", "oracle_agreement", "--samples", "10", "--seed", "7"});
  CHECK(agree["report"]["failed"] == 0);

  auto jm = run_json({"verify", "--suite", "jordan_miller", "--max-n", "10"});
  CHECK(jm["report"]["failed"] == 0);
  CHECK(jm["report"]["skipped"].get<int>() > 0);

  auto grid = run({"verify", "--suite", "main_theorem_grid", "--max-n", "3", "--format", "json"});
  auto j = Json::parse(grid.out);
  CHECK(j["report"]["failed"] == 1);
  CHECK(j["report"]["instances"][0]["instance"] == "{2,2}");
}

TEST_CASE("sweep output is deterministic")
{
  auto a = run_json({"verify", "--suite", "jordan_miller", "--max-n", "8", "--verbose"});
  auto b = run_json({"verify", "--suite", "jordan_miller", "--max-n", "8", "--verbose"});
  CHECK(a["report"] == b["report"]);
  CHECK(a["report"]["instances"].size() == 49);
  CHECK(a["report"]["instances"][1]["instance"] == "{2,3}");
}

TEST_CASE("census")
{
  auto s4 = run_json({"census", "--group", "S4"});
  for (auto const &i : s4["report"]["indices"]) {
    auto v = i.get<int>();
    CHECK((v == 1 || v == 4 || v == 12 || v == 24));
  }
  std::size_t raw = 0;
  for (auto const &row : s4["report"]["table"])
    raw += row["raw"].get<std::size_t>();
  CHECK(raw == s4["report"]["generating_pairs"].get<std::size_t>());

  auto a5 = run_json({"census", "--group", "A5"});
  for (auto const &i : a5["report"]["indices"]) {
    auto v = i.get<int>();
    CHECK((v == 1 || v == 60));
  }

  auto s2 = run_json({"census", "--group", "S2"});
  CHECK(s2["report"]["generating_pairs"] == 3);
  CHECK(s2["report"]["indices"] == Json::array({1, 2}));
}
