#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "common.hpp"
#include "finite_ring.hpp"

namespace jclean {

struct ElemSet {
  std::vector<char> member;
  std::vector<Elem> items;

  static ElemSet empty(std::size_t n) {
    ElemSet s;
    s.member.assign(n, 0);
    return s;
  }
  bool contains(Elem a) const { return member[a] != 0; }
  std::size_t size() const { return items.size(); }
  void add(Elem a) {
    if (!member[a]) {
      member[a] = 1;
      items.push_back(a);
    }
  }
};

struct RingAnalysis {
  ElemSet units;
  ElemSet jacobson;
  ElemSet one_plus_j;
  ElemSet idempotents;
  ElemSet nilpotents;
  ElemSet center;
  std::vector<Elem> inverse;  // meaningful where units.contains(a)
  bool commutative = false;
  bool local = false;
  bool weakly_bleached = false;  // meaningful only when local
  std::optional<std::pair<Elem, Elem>> nonlocal_witness;  // non-units with unit sum
  std::uint32_t residue_size = 0;                         // |R/J| when local
};

RingAnalysis analyze(const FiniteRing& r, const Caps& caps);

// J_s = {x : s*x in J}; requires s central.
ElemSet j_s_set(const FiniteRing& r, const RingAnalysis& an, Elem s);

struct BleachReport {
  bool value = false;
  struct Failure {
    Elem a, b, target;
    bool first_map;  // true: r -> br - ra missed target; false: r -> ar - rb
  };
  std::optional<Failure> failure;
};

// hypothesis_error on a non-local ring.
BleachReport weakly_bleached(const FiniteRing& r, const RingAnalysis& an);

RingSpec series_spec(const RingSpec& base, std::uint32_t precision);

// Digit access for a truncated-power-series ring, degree 0 least significant.
struct SeriesView {
  std::uint32_t base_size = 0;
  std::uint32_t precision = 0;

  Elem at_zero(Elem e) const { return static_cast<Elem>(e % base_size); }
  std::vector<Elem> coeffs(Elem e) const;
  Elem from_coeffs(const std::vector<Elem>& c) const;
};

SeriesView series_view(const FiniteRing& r);

}  // namespace jclean
