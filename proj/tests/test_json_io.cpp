#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "catalog.hpp"
#include "json_io.hpp"

using namespace jclean;
using json = nlohmann::ordered_json;

TEST_CASE("ring specs round trip through JSON") {
  for (const char* name : {"z4", "f4", "twist"}) {
    RingSpec spec = catalog_spec(name);
    RingSpec back = ring_spec_from_json(ring_spec_to_json(spec));
    FiniteRing a = FiniteRing::build(spec);
    FiniteRing b = FiniteRing::build(back);
    REQUIRE(a.size() == b.size());
    for (Elem x = 0; x < a.size(); ++x)
      for (Elem y = 0; y < a.size(); ++y) {
        CHECK(a.add(x, y) == b.add(x, y));
        CHECK(a.mul(x, y) == b.mul(x, y));
      }
  }
}

TEST_CASE("series specs round trip") {
  RingSpec spec = series_spec(catalog_spec("z2"), 3);
  RingSpec back = ring_spec_from_json(ring_spec_to_json(spec));
  CHECK(FiniteRing::build(back).size() == 8);
}

TEST_CASE("malformed ring specs are rejected") {
  CHECK_THROWS_AS(ring_spec_from_json("not json"), input_error);
  CHECK_THROWS_AS(ring_spec_from_json("{}"), input_error);
  CHECK_THROWS_AS(ring_spec_from_json(R"({"kind":"unknown"})"), input_error);
  CHECK_THROWS_AS(ring_spec_from_json(R"({"kind":"modular-integers"})"), input_error);
  CHECK_THROWS_AS(ring_spec_from_json(R"({"kind":"quotient-polynomial","p":2})"), input_error);
}

TEST_CASE("analysis JSON has the expected fields") {
  FiniteRing r = FiniteRing::build(catalog_spec("z4"));
  r.set_label("z4");
  RingAnalysis an = analyze(r, {});
  json j = json::parse(analysis_to_json(r, an));
  CHECK(j["schema"] == 1);
  CHECK(j["ring"] == "z4");
  CHECK(j["size"] == 4);
  CHECK(j["commutative"] == true);
  CHECK(j["local"] == true);
  CHECK(j["weakly_bleached"] == true);
  CHECK(j["residue_size"] == 2);
  CHECK(j["units"] == json::array({"1", "3"}));
  CHECK(j["jacobson"] == json::array({"0", "2"}));
  CHECK(j["center"].size() == 4);
}

TEST_CASE("matrix text accepts literals and objects") {
  FiniteRing r = FiniteRing::build(catalog_spec("z4"));
  FMatrix want{3, 2, 2, 2};
  CHECK(matrix_from_text(r, "[[3,2],[2,2]]") == want);
  CHECK(matrix_from_text(r, R"({"a":3,"b":2,"c":2,"d":2})") == want);
  CHECK(matrix_from_text(r, R"({"a":"3","b":"2","c":"2","d":"2"})") == want);
  CHECK_THROWS_AS(matrix_from_text(r, R"({"a":1})"), input_error);
}

TEST_CASE("verdict JSON carries the certificate") {
  FiniteRing r = FiniteRing::build(catalog_spec("z4"));
  FmContext ctx(r, 1, Caps{});
  FMatrix A{3, 2, 2, 2};
  auto cert = decide_sjc_commutative(ctx, A);
  REQUIRE(cert.has_value());
  json j = json::parse(verdict_to_json(ctx, A, CleanKind::StronglyJClean, "thm-3.6", cert, true));
  CHECK(j["schema"] == 1);
  CHECK(j["kind"] == "strongly-J-clean");
  CHECK(j["matrix"] == "[[3,2],[2,2]]");
  CHECK(j["result"] == "success");
  CHECK(j["decided_by"] == "thm-3.6");
  CHECK(j["certificate"]["variant"] == "quadratic-roots");
  CHECK(j["certificate"]["root_in_j"] == "2");
  CHECK(j["certificate"]["root_in_1_plus_j"] == "3");
  CHECK(j["agrees_with_oracle"] == true);

  json absent =
      json::parse(verdict_to_json(ctx, A, CleanKind::StronglyJClean, "oracle", std::nullopt,
                                  std::nullopt));
  CHECK(absent["result"] == "absent");
  CHECK(absent["certificate"].is_null());
  CHECK(!absent.contains("agrees_with_oracle"));
}

TEST_CASE("decomposition certificates serialize matrices") {
  FiniteRing r = FiniteRing::build(catalog_spec("z2"));
  FmContext ctx(r, 1, Caps{});
  FMatrix A{1, 0, 0, 0};
  auto cert = oracle_decide(ctx, A, CleanKind::StronglyJClean);
  REQUIRE(cert.has_value());
  json j = json::parse(verdict_to_json(ctx, A, CleanKind::StronglyJClean, "oracle", cert,
                                       std::nullopt));
  CHECK(j["certificate"]["variant"] == "decomposition");
  CHECK(j["certificate"]["E"] == "[[1,0],[0,0]]");
  CHECK(j["certificate"]["W"] == "[[0,0],[0,0]]");
}

TEST_CASE("check reports serialize") {
  SuiteEngine eng{Caps{}};
  FiniteRing r = FiniteRing::build(catalog_spec("z2"));
  r.set_label("z2");
  CheckReport rep = eng.run_check("T2.1", r, 1);
  json j = json::parse(report_to_json(rep));
  CHECK(j["schema"] == 1);
  CHECK(j["check"] == "T2.1");
  CHECK(j["ring"] == "z2");
  CHECK(j["s"] == "1");
  CHECK(j["status"] == "pass");
  CHECK(j["counterexample"].is_null());
  CHECK(j["checked"] == 16);
  CHECK(j["sampled"] == false);

  json arr = json::parse(reports_to_json({rep, rep}));
  CHECK(arr.size() == 2);
}

TEST_CASE("census CSV") {
  SuiteEngine eng{Caps{}};
  FiniteRing r = FiniteRing::build(catalog_spec("z2"));
  r.set_label("z2");
  CHECK(census_csv_header() == "ring,s,total,units,idempotents,jacobson,sc,sjc,snc");
  CHECK(census_row_csv(eng.census(r, 1)) == "z2,1,16,6,8,1,16,8,14");
}

TEST_CASE("catalog JSON") {
  json j = json::parse(catalog_to_json());
  CHECK(j.size() == 9);
  CHECK(j[0].contains("name"));
  CHECK(j[0].contains("description"));
}
