#include "analysis.hpp"

#include <algorithm>

namespace jclean {

namespace {
BleachReport bleach_core(const FiniteRing& r, const RingAnalysis& an);
}

RingAnalysis analyze(const FiniteRing& r, const Caps& caps) {
  const std::uint32_t n = r.size();
  if (n > caps.analysis_cap)
    throw cap_error("ring analysis refused: |R| = " + std::to_string(n) +
                    " exceeds analysis cap " + std::to_string(caps.analysis_cap));

  RingAnalysis an;
  an.units = ElemSet::empty(n);
  an.jacobson = ElemSet::empty(n);
  an.one_plus_j = ElemSet::empty(n);
  an.idempotents = ElemSet::empty(n);
  an.nilpotents = ElemSet::empty(n);
  an.center = ElemSet::empty(n);
  an.inverse.assign(n, r.zero());

  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      if (r.mul(Elem(a), Elem(b)) == r.one() && r.mul(Elem(b), Elem(a)) == r.one()) {
        an.units.add(Elem(a));
        an.inverse[a] = Elem(b);
        break;
      }

  for (std::uint32_t x = 0; x < n; ++x) {
    bool in_j = true;
    for (std::uint32_t t = 0; t < n && in_j; ++t) {
      Elem rx = r.sub(r.one(), r.mul(Elem(t), Elem(x)));
      Elem xr = r.sub(r.one(), r.mul(Elem(x), Elem(t)));
      in_j = an.units.contains(rx) && an.units.contains(xr);
    }
    if (in_j) an.jacobson.add(Elem(x));
  }

  for (Elem j : an.jacobson.items) an.one_plus_j.add(r.add(r.one(), j));

  for (std::uint32_t x = 0; x < n; ++x) {
    if (r.mul(Elem(x), Elem(x)) == Elem(x)) an.idempotents.add(Elem(x));
    if (r.pow(Elem(x), n) == r.zero()) an.nilpotents.add(Elem(x));
  }

  for (std::uint32_t x = 0; x < n; ++x) {
    bool central = true;
    for (std::uint32_t t = 0; t < n && central; ++t)
      central = r.mul(Elem(x), Elem(t)) == r.mul(Elem(t), Elem(x));
    if (central) an.center.add(Elem(x));
  }
  an.commutative = an.center.size() == n;

  an.local = true;
  for (std::uint32_t a = 0; a < n && an.local; ++a) {
    if (an.units.contains(Elem(a))) continue;
    for (std::uint32_t b = 0; b < n; ++b) {
      if (an.units.contains(Elem(b))) continue;
      if (an.units.contains(r.add(Elem(a), Elem(b)))) {
        an.local = false;
        an.nonlocal_witness = {Elem(a), Elem(b)};
        break;
      }
    }
  }
  if (an.local) {
    an.residue_size = n / static_cast<std::uint32_t>(an.jacobson.size());
    an.weakly_bleached = bleach_core(r, an).value;
  }

  return an;
}

ElemSet j_s_set(const FiniteRing& r, const RingAnalysis& an, Elem s) {
  if (!an.center.contains(s))
    throw hypothesis_error("J_s requires a central s; " + r.name_of(s) + " is not central");
  ElemSet out = ElemSet::empty(r.size());
  for (std::uint32_t x = 0; x < r.size(); ++x)
    if (an.jacobson.contains(r.mul(s, Elem(x)))) out.add(Elem(x));
  return out;
}

namespace {

BleachReport bleach_core(const FiniteRing& r, const RingAnalysis& an) {
  BleachReport rep;
  if (an.commutative && an.local) {
    // b - a is a unit for a in J, b in 1+J, so both maps are r -> r(b-a) up
    // to sign placement and hit everything.
    rep.value = true;
    return rep;
  }
  const std::uint32_t n = r.size();
  std::vector<char> hit(n);
  for (Elem a : an.jacobson.items)
    for (Elem b : an.one_plus_j.items) {
      std::fill(hit.begin(), hit.end(), 0);
      for (std::uint32_t t = 0; t < n; ++t)
        hit[r.sub(r.mul(b, Elem(t)), r.mul(Elem(t), a))] = 1;
      for (std::uint32_t y = 0; y < n; ++y)
        if (!hit[y]) {
          rep.failure = {a, b, Elem(y), true};
          return rep;
        }
      std::fill(hit.begin(), hit.end(), 0);
      for (std::uint32_t t = 0; t < n; ++t)
        hit[r.sub(r.mul(a, Elem(t)), r.mul(Elem(t), b))] = 1;
      for (std::uint32_t y = 0; y < n; ++y)
        if (!hit[y]) {
          rep.failure = {a, b, Elem(y), false};
          return rep;
        }
    }
  rep.value = true;
  return rep;
}

}  // namespace

BleachReport weakly_bleached(const FiniteRing& r, const RingAnalysis& an) {
  if (!an.local)
    throw hypothesis_error("weak bleaching is defined for local rings; " + r.label() +
                           " is not local");
  return bleach_core(r, an);
}

RingSpec series_spec(const RingSpec& base, std::uint32_t precision) {
  RingSpec s;
  s.kind = RingSpec::Kind::Series;
  s.base = std::make_shared<RingSpec>(base);
  s.precision = precision;
  return s;
}

std::vector<Elem> SeriesView::coeffs(Elem e) const {
  std::vector<Elem> out(precision);
  std::uint32_t v = e;
  for (std::uint32_t i = 0; i < precision; ++i) {
    out[i] = static_cast<Elem>(v % base_size);
    v /= base_size;
  }
  return out;
}

Elem SeriesView::from_coeffs(const std::vector<Elem>& c) const {
  if (c.size() != precision)
    throw input_error("series coefficients: expected " + std::to_string(precision) +
                      " entries, got " + std::to_string(c.size()));
  std::uint32_t idx = 0;
  for (std::uint32_t i = precision; i-- > 0;) {
    if (c[i] >= base_size) throw input_error("series coefficient out of range");
    idx = idx * base_size + c[i];
  }
  return static_cast<Elem>(idx);
}

SeriesView series_view(const FiniteRing& r) {
  if (r.spec().kind != RingSpec::Kind::Series)
    throw input_error("series view requested for a non-series ring");
  SeriesView v;
  v.precision = r.spec().precision;
  std::uint32_t b = 1;
  auto ipow = [](std::uint64_t x, std::uint32_t k) {
    std::uint64_t out = 1;
    while (k--) out *= x;
    return out;
  };
  while (ipow(b, v.precision) < r.size()) ++b;
  v.base_size = b;
  return v;
}

}  // namespace jclean
