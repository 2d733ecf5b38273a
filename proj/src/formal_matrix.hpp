#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "analysis.hpp"
#include "common.hpp"
#include "finite_ring.hpp"

namespace jclean {

struct FMatrix {
  Elem a = 0, b = 0, c = 0, d = 0;
  friend bool operator==(const FMatrix&, const FMatrix&) = default;
};

enum class IdemFormKind { Zero, Identity, Diag10, Diag01 };

struct IdempotentForm {
  IdemFormKind kind;
  std::optional<FMatrix> witness;  // P with P^{-1}EP the canonical diagonal
};

enum class MatrixFilter { All, Units, Idempotents, Radical };

// M_2(R;s). Caches are built on first use; contexts are not copyable.
class FmContext {
 public:
  FmContext(FiniteRing ring, RingAnalysis an, Elem s, Caps caps);
  FmContext(const FiniteRing& ring, Elem s, const Caps& caps);
  FmContext(const FmContext&) = delete;
  FmContext& operator=(const FmContext&) = delete;

  const FiniteRing& ring() const { return ring_; }
  const RingAnalysis& an() const { return an_; }
  const Caps& caps() const { return caps_; }
  Elem s() const { return s_; }
  Elem s2() const { return s2_; }
  const ElemSet& js() const { return js_; }

  std::uint64_t total() const { return total_; }
  std::uint64_t index_of(const FMatrix& m) const {
    std::uint64_t n = ring_.size();
    return ((std::uint64_t(m.a) * n + m.b) * n + m.c) * n + m.d;
  }
  FMatrix at(std::uint64_t idx) const {
    std::uint64_t n = ring_.size();
    FMatrix m;
    m.d = static_cast<Elem>(idx % n);
    idx /= n;
    m.c = static_cast<Elem>(idx % n);
    idx /= n;
    m.b = static_cast<Elem>(idx % n);
    m.a = static_cast<Elem>(idx / n);
    return m;
  }

  FMatrix zero() const { return {ring_.zero(), ring_.zero(), ring_.zero(), ring_.zero()}; }
  FMatrix identity() const { return {ring_.one(), ring_.zero(), ring_.zero(), ring_.one()}; }
  FMatrix diag(Elem x, Elem y) const { return {x, ring_.zero(), ring_.zero(), y}; }

  FMatrix add(const FMatrix& A, const FMatrix& B) const {
    return {ring_.add(A.a, B.a), ring_.add(A.b, B.b), ring_.add(A.c, B.c), ring_.add(A.d, B.d)};
  }
  FMatrix sub(const FMatrix& A, const FMatrix& B) const {
    return {ring_.sub(A.a, B.a), ring_.sub(A.b, B.b), ring_.sub(A.c, B.c), ring_.sub(A.d, B.d)};
  }
  FMatrix neg(const FMatrix& A) const {
    return {ring_.neg(A.a), ring_.neg(A.b), ring_.neg(A.c), ring_.neg(A.d)};
  }
  FMatrix scale(Elem r, const FMatrix& A) const {
    return {ring_.mul(r, A.a), ring_.mul(r, A.b), ring_.mul(r, A.c), ring_.mul(r, A.d)};
  }
  FMatrix mul(const FMatrix& A, const FMatrix& B) const {
    const FiniteRing& r = ring_;
    return {r.add(r.mul(A.a, B.a), r.mul(s2_, r.mul(A.b, B.c))),
            r.add(r.mul(A.a, B.b), r.mul(A.b, B.d)),
            r.add(r.mul(A.c, B.a), r.mul(A.d, B.c)),
            r.add(r.mul(s2_, r.mul(A.c, B.b)), r.mul(A.d, B.d))};
  }
  FMatrix pow(const FMatrix& A, std::uint64_t k) const;

  bool is_idempotent(const FMatrix& A) const { return mul(A, A) == A; }
  Elem trace(const FMatrix& A) const { return ring_.add(A.a, A.d); }
  Elem det_s(const FMatrix& A) const;  // hypothesis_error on a noncommutative base

  // Dispatch: commutative -> det_s; local with s in J -> diagonal entries; else
  // definitional column/row solve. The strategy entry points are exposed for
  // the agreement tests.
  bool is_unit(const FMatrix& A) const;
  bool unit_by_det(const FMatrix& A) const;
  bool unit_by_diagonal(const FMatrix& A) const;
  bool unit_by_search(const FMatrix& A) const;

  std::optional<FMatrix> inverse(const FMatrix& A) const;

  bool in_jacobson(const FMatrix& A) const {
    return an_.jacobson.contains(A.a) && an_.jacobson.contains(A.d) && js_.contains(A.b) &&
           js_.contains(A.c);
  }
  bool is_nilpotent(const FMatrix& A) const;

  // Masks over all matrix indices, built on demand (enum cap gated).
  const std::vector<char>& unit_mask();           // definitional, via unit_by_search
  const std::vector<char>& jacobson_mask();       // the T2.1 pattern
  const std::vector<char>& quasireg_mask();       // 1-TA and 1-AT units for all T
  const std::vector<char>& nilpotent_mask();
  const std::vector<char>& idempotent_mask();

  const std::vector<FMatrix>& idempotents();
  // Unit list plus aligned inverses; similarity cap gated.
  const std::vector<FMatrix>& units();
  const std::vector<FMatrix>& unit_inverses();

  std::vector<FMatrix> enumerate(MatrixFilter filter);

  // First canonical unit P with B = P^{-1}AP, i.e. A*P == P*B.
  std::optional<FMatrix> similarity_witness(const FMatrix& A, const FMatrix& B);
  // First canonical units (U,V) with B = U*A*V.
  std::optional<std::pair<FMatrix, FMatrix>> equivalence_witness(const FMatrix& A,
                                                                 const FMatrix& B);
  IdempotentForm idempotent_canonical_form(const FMatrix& E);

 private:
  void require_enum(const char* what) const;
  void require_similarity(const char* what) const;

  FiniteRing ring_;
  RingAnalysis an_;
  Caps caps_;
  Elem s_, s2_;
  ElemSet js_;
  std::uint64_t total_;

  std::vector<char> unit_mask_, jac_mask_, quasireg_mask_, nil_mask_, idem_mask_;
  std::vector<FMatrix> idem_list_, unit_list_, unit_inv_list_;
};

// "[[a,b],[c,d]]" with named entries.
std::string to_literal(const FiniteRing& r, const FMatrix& m);
// Accepts names or numeric indices per entry. input_error on malformed text.
FMatrix parse_matrix_literal(const FiniteRing& r, const std::string& text);

}  // namespace jclean
