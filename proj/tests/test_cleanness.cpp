#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "catalog.hpp"
#include "cleanness.hpp"

using namespace jclean;

namespace {

FmContext make_ctx(const char* name, Elem s) {
  return FmContext(FiniteRing::build(catalog_spec(name)), s, Caps{});
}

}  // namespace

TEST_CASE("oracle finds the idempotent decomposition") {
  FmContext ctx = make_ctx("z4", 2);
  FMatrix A{1, 1, 1, 0};
  auto cert = oracle_decide(ctx, A, CleanKind::StronglyJClean);
  REQUIRE(cert.has_value());
  CHECK(cert->variant == CertVariant::Decomposition);
  CHECK(cert->E == A);  // A is idempotent at s^2 = 0
  CHECK(cert->W == ctx.zero());
  CHECK(verify_certificate(ctx, A, *cert).ok);
}

TEST_CASE("oracle rejects the classical witness at s a unit") {
  FmContext ctx = make_ctx("z4", 1);
  FMatrix A{1, 1, 1, 0};
  CHECK(!oracle_decide(ctx, A, CleanKind::StronglyJClean).has_value());
  CHECK(oracle_decide(ctx, A, CleanKind::StronglyClean).has_value());
}

TEST_CASE("oracle kinds are nested") {
  FmContext ctx = make_ctx("z2", 1);
  for (std::uint64_t idx = 0; idx < ctx.total(); ++idx) {
    FMatrix A = ctx.at(idx);
    bool sjc = oracle_decide(ctx, A, CleanKind::StronglyJClean).has_value();
    bool snc = oracle_decide(ctx, A, CleanKind::StronglyNilClean).has_value();
    bool sc = oracle_decide(ctx, A, CleanKind::StronglyClean).has_value();
    if (sjc) CHECK(sc);
    if (snc) CHECK(sc);
  }
}

TEST_CASE("right root search scans the subset in order") {
  FiniteRing r = FiniteRing::build(catalog_spec("z4"));
  // t^2 - t + 2: roots 2 and 3
  CHECK(right_root_search(r, 1, 2, {0, 1, 2, 3}) == Elem{2});
  CHECK(right_root_search(r, 1, 2, {3}) == Elem{3});
  CHECK(!right_root_search(r, 1, 2, {0, 1}).has_value());
}

TEST_CASE("characteristic polynomial roots") {
  FmContext ctx = make_ctx("z4", 1);
  CharRoots roots = char_poly_roots(ctx, FMatrix{3, 2, 2, 2});
  CHECK(roots.all == std::vector<Elem>{2, 3});
  CHECK(roots.in_j == std::vector<Elem>{2});
  CHECK(roots.in_one_plus_j == std::vector<Elem>{3});
}

TEST_CASE("commutative decider matches frozen roots") {
  FmContext ctx = make_ctx("z4", 1);
  FMatrix A{3, 2, 2, 2};
  auto cert = decide_sjc_commutative(ctx, A);
  REQUIRE(cert.has_value());
  CHECK(cert->variant == CertVariant::QuadraticRoots);
  CHECK(cert->root_j == 2);
  CHECK(cert->root_one_plus_j == 3);
  CHECK(verify_certificate(ctx, A, *cert).ok);
}

TEST_CASE("commutative decider refuses the twist ring") {
  FmContext ctx = make_ctx("twist", 0);
  CHECK_THROWS_AS(decide_sjc_commutative(ctx, FMatrix{0, 0, 0, 0}), hypothesis_error);
}

TEST_CASE("standard forms at s in J") {
  FmContext ctx = make_ctx("z4", 2);

  auto f = find_standard_form(ctx, FMatrix{1, 1, 1, 0});
  REQUIRE(f.has_value());
  CHECK(f->orientation == 1);
  CHECK(f->u == 1);
  CHECK(f->v == 1);
  CHECK(f->w == 0);
  CHECK(f->P == ctx.identity());

  auto g = find_standard_form(ctx, FMatrix{3, 1, 1, 2});
  REQUIRE(g.has_value());
  CHECK(g->u == 3);
  CHECK(g->w == 2);

  // units are out of scope for the form
  CHECK_THROWS_AS(find_standard_form(ctx, ctx.identity()), hypothesis_error);
}

TEST_CASE("radical-s decider matches frozen roots") {
  FmContext ctx = make_ctx("z4", 2);
  FMatrix A{1, 1, 1, 0};
  auto cert = decide_sjc_radical_s(ctx, A);
  REQUIRE(cert.has_value());
  CHECK(cert->variant == CertVariant::QuadraticRoots);
  REQUIRE(cert->form.has_value());
  CHECK(cert->root_one_plus_j == 1);
  CHECK(cert->root_j == 0);
  CHECK(verify_certificate(ctx, A, *cert).ok);
}

TEST_CASE("radical-s decider requires s in J") {
  FmContext ctx = make_ctx("z4", 1);
  CHECK_THROWS_AS(decide_sjc_radical_s(ctx, FMatrix{0, 0, 0, 0}), hypothesis_error);
}

TEST_CASE("general local decider agrees with the oracle on GF(2)[t]/(t^2)") {
  FiniteRing r = FiniteRing::build(catalog_spec("f2t2"));
  for (Elem s : {Elem{0}, Elem{1}, Elem{2}, Elem{3}}) {
    FmContext ctx(r, s, Caps{});
    for (std::uint64_t idx = 0; idx < ctx.total(); ++idx) {
      FMatrix A = ctx.at(idx);
      auto fast = decide_sjc(ctx, A);
      auto slow = oracle_decide(ctx, A, CleanKind::StronglyJClean);
      REQUIRE(fast.has_value() == slow.has_value());
      if (fast) CHECK(verify_certificate(ctx, A, *fast).ok);
    }
  }
}

TEST_CASE("nil decider agrees with the oracle on M_2(Z/2;1)") {
  FmContext ctx = make_ctx("z2", 1);
  std::uint64_t count = 0;
  for (std::uint64_t idx = 0; idx < ctx.total(); ++idx) {
    FMatrix A = ctx.at(idx);
    auto fast = decide_snc(ctx, A);
    auto slow = oracle_decide(ctx, A, CleanKind::StronglyNilClean);
    REQUIRE(fast.has_value() == slow.has_value());
    count += fast.has_value();
    if (fast) CHECK(verify_certificate(ctx, A, *fast).ok);
  }
  CHECK(count == 14);  // the two order-3 units are not strongly nil-clean
  CHECK(!decide_snc(ctx, FMatrix{0, 1, 1, 1}).has_value());
}

TEST_CASE("strongly clean decider branches") {
  FmContext ctx = make_ctx("z4", 1);

  auto unit = decide_sc(ctx, FMatrix{1, 0, 0, 1});
  REQUIRE(unit.has_value());
  CHECK(unit->branch == "unit");
  CHECK(verify_certificate(ctx, FMatrix{1, 0, 0, 1}, *unit).ok);

  auto comp = decide_sc(ctx, FMatrix{0, 0, 0, 0});
  REQUIRE(comp.has_value());
  CHECK(comp->branch == "complement-unit");

  FMatrix mixed{1, 0, 0, 0};
  auto via_sjc = decide_sc(ctx, mixed);
  REQUIRE(via_sjc.has_value());
  CHECK(via_sjc->branch == "strongly-J-clean");
  CHECK(verify_certificate(ctx, mixed, *via_sjc).ok);
}

TEST_CASE("strongly clean decider agrees with the oracle on z4") {
  for (Elem s : {Elem{1}, Elem{2}}) {
    FmContext ctx = make_ctx("z4", s);
    for (std::uint64_t idx = 0; idx < ctx.total(); ++idx) {
      FMatrix A = ctx.at(idx);
      CHECK(decide_sc(ctx, A).has_value() ==
            oracle_decide(ctx, A, CleanKind::StronglyClean).has_value());
    }
  }
}

TEST_CASE("radical power check") {
  FmContext ctx = make_ctx("z4", 2);
  FMatrix inJ{2, 1, 0, 2};
  auto n = radical_power_check(ctx, inJ, 16);
  REQUIRE(n.has_value());
  CHECK(*n == 1);
  CHECK(!radical_power_check(ctx, ctx.identity(), 16).has_value());
}

TEST_CASE("determinant-trace radical screen") {
  FmContext ctx = make_ctx("z4", 1);
  // det = 2, tr = 2, not in J(M_2): screened out
  FMatrix A{0, 1, 2, 2};
  CHECK(ctx.det_s(A) == 2);
  CHECK(ctx.trace(A) == 2);
  CHECK(!ctx.in_jacobson(A));
  CHECK(det_tr_radical_test(ctx, A) == RadicalVerdict::NotStronglyJClean);
  CHECK(!oracle_decide(ctx, A, CleanKind::StronglyJClean).has_value());
  CHECK(det_tr_radical_test(ctx, FMatrix{1, 0, 0, 1}) == RadicalVerdict::NoVerdict);
}

TEST_CASE("tampered certificates are rejected") {
  FmContext ctx = make_ctx("z4", 1);
  FMatrix A{3, 2, 2, 2};
  auto cert = decide_sjc_commutative(ctx, A);
  REQUIRE(cert.has_value());
  CleanCertificate bad = *cert;
  bad.root_j = 3;
  CHECK(!verify_certificate(ctx, A, bad).ok);

  auto dec = oracle_decide(ctx, A, CleanKind::StronglyJClean);
  REQUIRE(dec.has_value());
  CleanCertificate bad2 = *dec;
  bad2.W = FMatrix{1, 0, 0, 1};
  CHECK(!verify_certificate(ctx, A, bad2).ok);
}

TEST_CASE("local deciders refuse a nonlocal base") {
  FiniteRing z6 = FiniteRing::build([] {
    RingSpec s;
    s.kind = RingSpec::Kind::Modular;
    s.n = 6;
    return s;
  }());
  FmContext ctx(z6, 1, Caps{});
  CHECK_THROWS_AS(decide_sjc(ctx, FMatrix{0, 0, 0, 0}), hypothesis_error);
  CHECK_THROWS_AS(decide_sc(ctx, FMatrix{0, 0, 0, 0}), hypothesis_error);
  CHECK_THROWS_AS(decide_snc(ctx, FMatrix{0, 0, 0, 0}), hypothesis_error);
  // the oracle has no hypotheses
  CHECK(oracle_decide(ctx, FMatrix{0, 0, 0, 0}, CleanKind::StronglyJClean).has_value());
}
