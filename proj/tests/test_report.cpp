#include "helpers.hpp"

using namespace symcheck;

namespace {
RunConfig quick_config(std::vector<std::string> ids,
                       Convention conv = Convention::adjusted) {
  RunConfig cfg;
  cfg.pairs = std::move(ids);
  cfg.samples = 10;
  cfg.convention = conv;
  cfg.format = RunConfig::Format::json;
  return cfg;
}
}  // namespace

TEST_CASE("pair id resolution") {
  CHECK(resolve_pair_ids("all").size() == 5);
  CHECK(resolve_pair_ids("") == catalog_ids());
  CHECK(resolve_pair_ids("sl3-AI,sl2-AI") ==
        std::vector<std::string>{"sl2-AI", "sl3-AI"});
  CHECK(resolve_pair_ids("sl2-AI,sl2-AI") == std::vector<std::string>{"sl2-AI"});
  CHECK_THROWS_AS(resolve_pair_ids("bogus"), ParseError);
}

TEST_CASE("report json carries the stable schema") {
  Report r = run_verification(quick_config({"sl2-AI"}));
  Json j = report_json(r);
  CHECK(j["tool_version"] == kToolVersion);
  for (const char* key : {"pairs", "seed", "samples", "convention"})
    CHECK(j["config"].contains(key));
  REQUIRE(j["pairs"].size() == 1);
  const Json& jp = j["pairs"][0];
  CHECK(jp["id"] == "sl2-AI");
  CHECK(jp["dims"]["g"] == 3);
  CHECK(jp["dims"]["k"] == 1);
  CHECK(jp["dims"]["p"] == 2);
  CHECK(jp["dims"]["r"] == 1);
  CHECK(jp["restricted_roots"]["count"] == 2);
  CHECK(jp["restricted_roots"]["reduced"] == true);
  CHECK(jp["chamber"]["identities_hold"] == true);
  REQUIRE(jp["representatives"].size() == 1);
  const Json& jr = jp["representatives"][0];
  for (const char* key :
       {"label", "in_np", "orbit_dim", "principal", "even", "minus1_centralizer",
        "minus1_grading", "minus1_even", "noticed", "perp_identity", "levi_instance",
        "a_cap_gs_zero", "self_dual_dims", "px_nilpotent_sampling", "ps_witness",
        "witness_consistent", "criteria_agree", "matches_expected"})
    CHECK(jr.contains(key));
  for (const char* key : {"chamber_identities", "theorem_null_p", "theorem_equality",
                          "theorem_derived", "perp_random"})
    CHECK(jp["theorem_checks"].contains(key));
  CHECK(jp["cayley"]["available"] == true);
  CHECK(jp["pass"] == true);
  CHECK(j["pass"] == true);
  // exact scalar strings only: the chamber matrix entries reparse
  for (const auto& row : jp["chamber"]["matrix"])
    for (const auto& entry : row) CHECK_NOTHROW(parse_scalar(entry.get<std::string>()));
}

TEST_CASE("reports are byte-identical across runs and parallelism") {
  RunConfig cfg = quick_config(catalog_ids());
  std::string a = render_report(run_verification(cfg));
  std::string b = render_report(run_verification(cfg));
  CHECK(a == b);
  cfg.parallel = true;
  std::string c = render_report(run_verification(cfg));
  CHECK(a == c);
}

TEST_CASE("exit codes reflect the rollup") {
  Report pass = run_verification(quick_config({"sl2-AI"}));
  CHECK(report_exit_code(pass) == 0);
  Report fail = run_verification(quick_config({"sl2-AI"}, Convention::paper));
  CHECK(report_exit_code(fail) == 1);
  CHECK_FALSE(fail.pairs[0].pass);
  REQUIRE_FALSE(fail.pairs[0].ks.reps.empty());
  CHECK(fail.pairs[0].ks.reps[0].note.find("no Cayley representative") !=
        std::string::npos);
  // a tampered report maps to failure as well
  pass.pairs[0].criteria.chamber_identities = false;
  CHECK(pass.pairs[0].criteria.pass() == false);
}

TEST_CASE("markdown rendering") {
  RunConfig cfg = quick_config({"sl3-AI"});
  cfg.format = RunConfig::Format::markdown;
  Report r = run_verification(cfg);
  std::string md = render_report(r);
  CHECK(md.find("## sl3-AI") != std::string::npos);
  CHECK(md.find("overall: pass") != std::string::npos);
  CHECK(md.find("subregular") != std::string::npos);
  CHECK(md.find("semisimple witness") != std::string::npos);
}

TEST_CASE("catalog listing") {
  std::string text = list_catalog_text();
  CHECK(text.find("sl3-AI") != std::string::npos);
  CHECK(text.find("sl2xsl2-diag") != std::string::npos);
  CHECK(text.find("none") != std::string::npos);
  // one header plus five rows
  CHECK(std::count(text.begin(), text.end(), '\n') == 6);
  CHECK(text.find("sl3-AI         8   3   5   2   yes") != std::string::npos);
}

TEST_CASE("element files parse and classify") {
  const PairContext& ctx = ctx_for("sl2-AI");
  const LieAlgebra& L = ctx.alg();
  CheckConfig cfg{0, 10};

  Json good = Json::parse(
      R"({"matrix": [["1/2i","1/2"],["1/2","-1/2i"]]})");
  Element e1 = parse_element_json(L, good);
  ElementCheck check = check_element(ctx, e1, cfg);
  CHECK(check.in_np);
  REQUIRE(check.battery);
  CHECK(check.battery->principal);
  CHECK(element_check_json(check)["criteria"]["principal"] == true);
  CHECK(element_check_markdown(check).find("principal: yes") != std::string::npos);

  Json coords = Json::parse(R"({"coords": ["1/2","1/2","1/2i"]})");
  CHECK(parse_element_json(L, coords) == e1);

  // semisimple element: clear verdict, no battery
  Json c1 = Json::parse(R"({"matrix": [["0","1"],["1","0"]]})");
  ElementCheck sem = check_element(ctx, parse_element_json(L, c1), cfg);
  CHECK_FALSE(sem.in_np);
  CHECK(sem.note.find("semisimple") != std::string::npos);

  // zero element: in the cone, completion refused
  Json zero = Json::parse(R"({"coords": ["0","0","0"]})");
  ElementCheck z = check_element(ctx, parse_element_json(L, zero), cfg);
  CHECK(z.in_np);
  CHECK_FALSE(z.battery);
  CHECK(z.note.find("zero element") != std::string::npos);

  // element of k (the antisymmetric line): not in p
  Json notp = Json::parse(R"({"coords": ["1","-1","0"]})");
  ElementCheck np = check_element(ctx, parse_element_json(L, notp), cfg);
  CHECK_FALSE(np.in_np);
  CHECK(np.note.find("not lie in p") != std::string::npos);

  CHECK_THROWS_AS(parse_element_json(L, Json::parse(R"({"weird": 1})")), ParseError);
  CHECK_THROWS_AS(
      parse_element_json(L, Json::parse(R"({"matrix": [["1"]], "coords": ["1"]})")),
      ParseError);
  CHECK_THROWS_AS(parse_element_json(L, Json::parse(R"({"coords": ["1"]})")),
                  ParseError);
  CHECK_THROWS_AS(parse_element_json(L, Json::parse(R"({"matrix": [["1","0"],["0","0"]]})")),
                  ParseError);  // not traceless: outside the algebra
  CHECK_THROWS_AS(parse_element_json(L, Json::parse(R"({"coords": ["1/0","0","0"]})")),
                  ParseError);
}
