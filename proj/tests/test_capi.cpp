#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include "jclean.h"

namespace {

struct Str {
  char* p = nullptr;
  ~Str() { jc_string_free(p); }
  std::string get() const { return p ? std::string(p) : std::string(); }
};

bool has(const std::string& text, const char* needle) {
  return text.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("catalog listing") {
  Str out;
  REQUIRE(jc_catalog(&out.p) == JC_OK);
  CHECK(has(out.get(), "\"z4\""));
  CHECK(has(out.get(), "\"twist\""));
}

TEST_CASE("check id listing") {
  Str out;
  REQUIRE(jc_check_ids(&out.p) == JC_OK);
  CHECK(has(out.get(), "\"T2.1\""));
  CHECK(has(out.get(), "\"T3.6\""));
}

TEST_CASE("ring from catalog and analysis") {
  jc_ring* ring = nullptr;
  REQUIRE(jc_ring_from_catalog("z4", &ring) == JC_OK);
  CHECK(jc_ring_size(ring) == 4);
  Str an;
  REQUIRE(jc_ring_analysis(ring, &an.p) == JC_OK);
  CHECK(has(an.get(), "\"ring\": \"z4\""));
  CHECK(has(an.get(), "\"local\": true"));
  Str js;
  REQUIRE(jc_ring_j_s(ring, "2", &js.p) == JC_OK);
  CHECK(has(js.get(), "\"j_s\""));
  jc_ring_free(ring);
}

TEST_CASE("ring from JSON spec") {
  jc_ring* ring = nullptr;
  REQUIRE(jc_ring_from_json(R"({"kind":"modular-integers","n":9})", &ring) == JC_OK);
  CHECK(jc_ring_size(ring) == 9);
  jc_ring_free(ring);

  CHECK(jc_ring_from_json("garbage", &ring) == JC_INPUT_ERROR);
  CHECK(std::strlen(jc_last_error()) > 0);
}

TEST_CASE("unknown catalog name") {
  jc_ring* ring = nullptr;
  CHECK(jc_ring_from_catalog("nope", &ring) == JC_INPUT_ERROR);
}

TEST_CASE("context is central-s gated") {
  jc_ring* ring = nullptr;
  REQUIRE(jc_ring_from_catalog("twist", &ring) == JC_OK);
  jc_context* ctx = nullptr;
  CHECK(jc_context_new(ring, "t", &ctx) == JC_HYPOTHESIS_ERROR);
  CHECK(std::strlen(jc_last_error()) > 0);
  REQUIRE(jc_context_new(ring, "0", &ctx) == JC_OK);
  jc_context_free(ctx);
  jc_ring_free(ring);
}

TEST_CASE("decide with oracle and verification") {
  jc_ring* ring = nullptr;
  REQUIRE(jc_ring_from_catalog("z4", &ring) == JC_OK);
  jc_context* ctx = nullptr;
  REQUIRE(jc_context_new(ring, "1", &ctx) == JC_OK);

  Str out;
  REQUIRE(jc_decide(ctx, "[[3,2],[2,2]]", "sjc", "oracle", 1, &out.p) == JC_OK);
  CHECK(has(out.get(), "\"result\": \"success\""));
  CHECK(has(out.get(), "\"decided_by\": \"oracle\""));
  CHECK(has(out.get(), "\"agrees_with_oracle\": true"));

  Str out2;
  REQUIRE(jc_decide(ctx, "[[3,2],[2,2]]", "sjc", "auto", 1, &out2.p) == JC_OK);
  CHECK(has(out2.get(), "\"decided_by\": \"thm-3.6\""));

  Str out3;
  REQUIRE(jc_decide(ctx, "[[1,1],[1,0]]", "sjc", "auto", 0, &out3.p) == JC_OK);
  CHECK(has(out3.get(), "\"result\": \"absent\""));

  Str bad;
  CHECK(jc_decide(ctx, "[[9,0],[0,0]]", "sjc", "oracle", 0, &bad.p) == JC_INPUT_ERROR);
  Str badkind;
  CHECK(jc_decide(ctx, "[[1,0],[0,1]]", "zzz", "oracle", 0, &badkind.p) == JC_INPUT_ERROR);

  jc_context_free(ctx);
  jc_ring_free(ring);
}

TEST_CASE("auto dispatch by hypotheses") {
  jc_ring* ring = nullptr;
  REQUIRE(jc_ring_from_catalog("twist", &ring) == JC_OK);
  jc_context* ctx = nullptr;
  REQUIRE(jc_context_new(ring, "0", &ctx) == JC_OK);
  Str out;
  REQUIRE(jc_decide(ctx, "[[1,0],[0,1]]", "sjc", "auto", 0, &out.p) == JC_OK);
  CHECK(has(out.get(), "\"decided_by\": \"thm-2.16\""));
  Str sc;
  REQUIRE(jc_decide(ctx, "[[1,0],[0,1]]", "sc", "auto", 0, &sc.p) == JC_OK);
  CHECK(has(sc.get(), "\"decided_by\": \"thm-2.13\""));
  jc_context_free(ctx);
  jc_ring_free(ring);
}

TEST_CASE("run check statuses") {
  jc_ring* ring = nullptr;
  REQUIRE(jc_ring_from_catalog("z4", &ring) == JC_OK);
  jc_context* ctx = nullptr;
  REQUIRE(jc_context_new(ring, "1", &ctx) == JC_OK);

  Str pass;
  CHECK(jc_run_check(ctx, "T2.1", &pass.p) == JC_OK);
  CHECK(has(pass.get(), "\"status\": \"pass\""));

  Str gated;
  CHECK(jc_run_check(ctx, "L2.2", &gated.p) == JC_OK);
  CHECK(has(gated.get(), "\"status\": \"hypotheses-not-met\""));

  Str bad;
  CHECK(jc_run_check(ctx, "T9.9", &bad.p) == JC_INPUT_ERROR);

  jc_context_free(ctx);
  jc_ring_free(ring);
}

TEST_CASE("census") {
  jc_ring* ring = nullptr;
  REQUIRE(jc_ring_from_catalog("z2", &ring) == JC_OK);
  jc_context* ctx = nullptr;
  REQUIRE(jc_context_new(ring, "1", &ctx) == JC_OK);
  Str row;
  REQUIRE(jc_census(ctx, &row.p) == JC_OK);
  CHECK(row.get() == "z2,1,16,6,8,1,16,8,14");
  CHECK(std::string(jc_census_header()) == "ring,s,total,units,idempotents,jacobson,sc,sjc,snc");
  jc_context_free(ctx);
  jc_ring_free(ring);
}

TEST_CASE("caps") {
  CHECK(jc_set_caps("sample=100,seed=3") == JC_OK);
  CHECK(jc_set_caps("bogus=1") == JC_INPUT_ERROR);
  CHECK(jc_set_caps("sample=2000,seed=0") == JC_OK);
}
