#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "catalog.hpp"
#include "finite_ring.hpp"

using namespace jclean;

namespace {

RingSpec modular(std::uint32_t n) {
  RingSpec s;
  s.kind = RingSpec::Kind::Modular;
  s.n = n;
  return s;
}

}  // namespace

TEST_CASE("modular arithmetic tables") {
  FiniteRing r = FiniteRing::build(modular(4));
  CHECK(r.size() == 4);
  CHECK(r.zero() == 0);
  CHECK(r.one() == 1);
  CHECK(r.add(3, 3) == 2);
  CHECK(r.mul(3, 3) == 1);
  CHECK(r.neg(1) == 3);
  CHECK(r.sub(1, 3) == 2);
  CHECK(r.pow(3, 2) == 1);
  CHECK(r.pow(2, 2) == 0);
  CHECK(r.pow(3, 7) == 3);
  CHECK(r.name_of(2) == "2");
  CHECK(r.find_name("3") == Elem{3});
  CHECK(!r.find_name("7").has_value());
}

TEST_CASE("quotient polynomial ring GF(2)[t]/(t^2)") {
  RingSpec s;
  s.kind = RingSpec::Kind::QuotientPoly;
  s.p = 2;
  s.modulus = {0, 0, 1};  // t^2
  FiniteRing r = FiniteRing::build(s);
  CHECK(r.size() == 4);
  // index 2 is t, index 3 is 1+t
  CHECK(r.mul(2, 2) == 0);
  CHECK(r.mul(3, 3) == 1);
  CHECK(r.add(2, 3) == 1);
}

TEST_CASE("quotient polynomial ring GF(4)") {
  RingSpec s;
  s.kind = RingSpec::Kind::QuotientPoly;
  s.p = 2;
  s.modulus = {1, 1, 1};  // t^2 + t + 1
  FiniteRing r = FiniteRing::build(s);
  CHECK(r.size() == 4);
  CHECK(r.mul(2, 2) == 3);  // t^2 = t + 1
  CHECK(r.mul(2, 3) == 1);  // t (t+1) = 1
  CHECK(r.pow(2, 3) == 1);
}

TEST_CASE("series ring over Z/2 at precision 2") {
  RingSpec base = modular(2);
  RingSpec s;
  s.kind = RingSpec::Kind::Series;
  s.base = std::make_shared<RingSpec>(base);
  s.precision = 2;
  FiniteRing r = FiniteRing::build(s);
  CHECK(r.size() == 4);
  // index 2 is x; x^2 truncates to 0
  CHECK(r.mul(2, 2) == 0);
  CHECK(r.mul(3, 3) == 1);
}

TEST_CASE("explicit tables with shifted identities") {
  // Z/2 with indices swapped: 0 <-> 1
  RingSpec s;
  s.kind = RingSpec::Kind::Tables;
  s.n = 2;
  s.add = {1, 0, 0, 1};
  s.mul = {0, 1, 1, 1};
  s.zero = 1;
  s.one = 0;
  FiniteRing r = FiniteRing::build(s);
  CHECK(r.zero() == 1);
  CHECK(r.one() == 0);
  CHECK(verify_ring_axioms(r).ok);
}

TEST_CASE("axiom verifier flags a broken table") {
  RingSpec s;
  s.kind = RingSpec::Kind::Tables;
  s.n = 2;
  s.add = {0, 1, 1, 0};
  s.mul = {0, 0, 0, 0};  // no identity
  s.zero = 0;
  s.one = 1;
  FiniteRing r = FiniteRing::build(s);
  AxiomReport rep = verify_ring_axioms(r);
  CHECK(!rep.ok);
  CHECK(!rep.violations.empty());
}

TEST_CASE("axiom verifier reports noncommutativity without failing") {
  FiniteRing r = FiniteRing::build(catalog_spec("twist"));
  AxiomReport rep = verify_ring_axioms(r);
  CHECK(rep.ok);
  CHECK(!rep.commutative_mul);
  CHECK(rep.noncommuting.has_value());
}

TEST_CASE("tables validation rejects malformed input") {
  RingSpec s;
  s.kind = RingSpec::Kind::Tables;
  s.n = 2;
  s.add = {0, 1, 1};  // wrong length
  s.mul = {0, 0, 0, 0};
  CHECK_THROWS_AS(FiniteRing::build(s), input_error);

  s.add = {0, 1, 1, 9};  // out of range
  CHECK_THROWS_AS(FiniteRing::build(s), input_error);
}

TEST_CASE("size bound enforced") {
  CHECK_THROWS_AS(FiniteRing::build(modular(100000)), input_error);
}

TEST_CASE("names can be supplied and resolved") {
  RingSpec s = modular(2);
  s.names = {"zero", "one"};
  FiniteRing r = FiniteRing::build(s);
  CHECK(r.name_of(0) == "zero");
  CHECK(r.find_name("one") == Elem{1});
}

TEST_CASE("labels default to a spec rendering") {
  FiniteRing r = FiniteRing::build(modular(4));
  CHECK(r.label() == "Z/4");
  r.set_label("custom");
  CHECK(r.label() == "custom");
}

TEST_CASE("catalog entries all build and satisfy axioms") {
  for (const auto& e : catalog_entries()) {
    FiniteRing r = FiniteRing::build(catalog_spec(e.name));
    CHECK(verify_ring_axioms(r).ok);
  }
  CHECK(catalog_entries().size() == 9);
  CHECK(catalog_has("z4"));
  CHECK(!catalog_has("nope"));
  CHECK_THROWS_AS(catalog_spec("nope"), input_error);
}
