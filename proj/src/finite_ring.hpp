#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "common.hpp"

namespace jclean {

// Construction recipe for a finite unital ring.  Elements are indexed
// densely; the index scheme per kind is:
//   Modular       residues 0..n-1
//   QuotientPoly  coefficient vectors over GF(p), base-p digits, constant
//                 coefficient least significant
//   Tables        indices as given
//   Series        coefficient vectors over the base ring, base-|B| digits,
//                 degree-0 coefficient least significant
// With this scheme index 0 is always zero and index 1 is always one,
// except for Tables which places them wherever the tables say.
struct RingSpec {
  enum class Kind { Modular, QuotientPoly, Tables, Series };

  Kind kind = Kind::Modular;
  std::uint32_t n = 0;                  // Modular: modulus
  std::uint32_t p = 0;                  // QuotientPoly: prime base
  std::vector<std::uint32_t> modulus;   // QuotientPoly: monic, low degree first
  std::vector<std::uint32_t> add, mul;  // Tables: row-major n*n entries
  std::uint32_t zero = 0, one = 1;      // Tables: identity positions
  std::shared_ptr<RingSpec> base;       // Series: base ring recipe
  std::uint32_t precision = 0;          // Series: truncation order N
  std::vector<std::string> names;       // optional element names, any kind

  std::string describe() const;
};

// A finite unital ring with fully materialized operation tables.
class FiniteRing {
 public:
  static FiniteRing build(const RingSpec& spec);

  std::uint32_t size() const { return size_; }
  Elem zero() const { return zero_; }
  Elem one() const { return one_; }

  Elem add(Elem a, Elem b) const { return add_[std::size_t(a) * size_ + b]; }
  Elem mul(Elem a, Elem b) const { return mul_[std::size_t(a) * size_ + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg_[b]); }
  Elem pow(Elem a, std::uint64_t k) const;  // a^k for k >= 1

  const RingSpec& spec() const { return spec_; }

  // Display label: the catalog name when built from the catalog, otherwise
  // a rendering of the spec.
  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  const std::string& name_of(Elem a) const { return names_[a]; }
  std::optional<Elem> find_name(std::string_view name) const;

 private:
  FiniteRing() = default;

  std::uint32_t size_ = 0;
  Elem zero_ = 0, one_ = 0;
  std::vector<Elem> add_, mul_, neg_;
  std::vector<std::string> names_;
  RingSpec spec_;
  std::string label_;
};

struct AxiomViolation {
  std::string law;      // which law failed
  std::vector<Elem> at; // witness elements in evaluation order
  std::string detail;   // rendered lhs/rhs
};

struct AxiomReport {
  bool ok = false;
  std::vector<AxiomViolation> violations;  // first violation found per law
  // Commutativity of multiplication is probed but is not an axiom.
  bool commutative_mul = false;
  std::optional<std::pair<Elem, Elem>> noncommuting;
};

// Exhaustively checks the unital ring laws.  Refuses rings larger than
// caps.axiom_cap.
AxiomReport verify_ring_axioms(const FiniteRing& r, const Caps& caps = {});

}  // namespace jclean
