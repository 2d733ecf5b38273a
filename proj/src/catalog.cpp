#include "catalog.hpp"

#include "common.hpp"

namespace jclean {

namespace {

RingSpec modular(std::uint32_t n) {
  RingSpec s;
  s.kind = RingSpec::Kind::Modular;
  s.n = n;
  return s;
}

RingSpec qpoly(std::uint32_t p, std::vector<std::uint32_t> modulus) {
  RingSpec s;
  s.kind = RingSpec::Kind::QuotientPoly;
  s.p = p;
  s.modulus = std::move(modulus);
  return s;
}

// F4 + F4x with xa = a^2 x and x^2 = 0; element a + bx sits at index a + 4b.
RingSpec twist_spec() {
  FiniteRing f4 = FiniteRing::build(qpoly(2, {1, 1, 1}));
  auto sq = [&](Elem a) { return f4.mul(a, a); };

  RingSpec s;
  s.kind = RingSpec::Kind::Tables;
  s.n = 16;
  s.add.resize(256);
  s.mul.resize(256);
  for (Elem a = 0; a < 4; ++a)
    for (Elem b = 0; b < 4; ++b)
      for (Elem a2 = 0; a2 < 4; ++a2)
        for (Elem b2 = 0; b2 < 4; ++b2) {
          std::uint32_t lhs = a + 4u * b, rhs = a2 + 4u * b2;
          s.add[lhs * 16 + rhs] = f4.add(a, a2) + 4u * f4.add(b, b2);
          Elem pa = f4.mul(a, a2);
          Elem pb = f4.add(f4.mul(a, b2), f4.mul(b, sq(a2)));
          s.mul[lhs * 16 + rhs] = pa + 4u * pb;
        }
  s.zero = 0;
  s.one = 1;
  s.names.reserve(16);
  for (Elem b = 0; b < 4; ++b)
    for (Elem a = 0; a < 4; ++a) {
      std::string name;
      if (a != 0 || b == 0) name = f4.name_of(a);
      if (b != 0) {
        if (!name.empty()) name += "+";
        const std::string& cb = f4.name_of(b);
        if (cb != "1") name += (cb.find('+') != std::string::npos) ? "(" + cb + ")" : cb;
        name += "x";
      }
      s.names.push_back(name);
    }
  return s;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = {
      {"z2", "Z/2, the field with two elements"},
      {"z3", "Z/3"},
      {"z4", "Z/4, local with J = {0,2}"},
      {"z8", "Z/8"},
      {"z9", "Z/9"},
      {"f2t2", "GF(2)[t]/(t^2)"},
      {"f3t2", "GF(3)[t]/(t^2)"},
      {"f4", "GF(4)"},
      {"twist", "F4+F4x with xa = a^2x, x^2 = 0 (noncommutative local)"},
  };
  return entries;
}

bool catalog_has(const std::string& name) {
  for (const CatalogEntry& e : catalog_entries())
    if (e.name == name) return true;
  return false;
}

RingSpec catalog_spec(const std::string& name) {
  if (name == "z2") return modular(2);
  if (name == "z3") return modular(3);
  if (name == "z4") return modular(4);
  if (name == "z8") return modular(8);
  if (name == "z9") return modular(9);
  if (name == "f2t2") return qpoly(2, {0, 0, 1});
  if (name == "f3t2") return qpoly(3, {0, 0, 1});
  if (name == "f4") return qpoly(2, {1, 1, 1});
  if (name == "twist") return twist_spec();
  throw input_error("unknown catalog ring '" + name + "'");
}

}  // namespace jclean
