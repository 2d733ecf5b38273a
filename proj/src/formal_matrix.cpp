#include "formal_matrix.hpp"

#include <cctype>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace jclean {

FmContext::FmContext(FiniteRing ring, RingAnalysis an, Elem s, Caps caps)
    : ring_(std::move(ring)), an_(std::move(an)), caps_(caps), s_(s) {
  if (s >= ring_.size()) throw input_error("s out of range for the base ring");
  if (!an_.center.contains(s))
    throw hypothesis_error("M_2(R;s) requires a central s; " + ring_.name_of(s) +
                           " is not central in " + ring_.label());
  s2_ = ring_.mul(s, s);
  js_ = j_s_set(ring_, an_, s);
  std::uint64_t n = ring_.size();
  total_ = n * n * n * n;
}

FmContext::FmContext(const FiniteRing& ring, Elem s, const Caps& caps)
    : FmContext(ring, analyze(ring, caps), s, caps) {}

FMatrix FmContext::pow(const FMatrix& A, std::uint64_t k) const {
  FMatrix result = identity();
  FMatrix base = A;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

Elem FmContext::det_s(const FMatrix& A) const {
  if (!an_.commutative)
    throw hypothesis_error("det_s is defined over a commutative base; " + ring_.label() +
                           " is not commutative");
  return ring_.sub(ring_.mul(A.a, A.d), ring_.mul(s2_, ring_.mul(A.b, A.c)));
}

bool FmContext::unit_by_det(const FMatrix& A) const { return an_.units.contains(det_s(A)); }

bool FmContext::unit_by_diagonal(const FMatrix& A) const {
  if (!an_.local || !an_.jacobson.contains(s_))
    throw hypothesis_error("diagonal unit criterion requires a local base with s in J(R)");
  return an_.units.contains(A.a) && an_.units.contains(A.d);
}

bool FmContext::unit_by_search(const FMatrix& A) const {
  const FiniteRing& r = ring_;
  const std::uint32_t n = r.size();
  const Elem one = r.one(), zero = r.zero();
  // right inverse X, column by column: A*X = I
  bool found = false;
  for (std::uint32_t x = 0; x < n && !found; ++x)
    for (std::uint32_t z = 0; z < n; ++z)
      if (r.add(r.mul(A.a, Elem(x)), r.mul(s2_, r.mul(A.b, Elem(z)))) == one &&
          r.add(r.mul(A.c, Elem(x)), r.mul(A.d, Elem(z))) == zero) {
        found = true;
        break;
      }
  if (!found) return false;
  found = false;
  for (std::uint32_t y = 0; y < n && !found; ++y)
    for (std::uint32_t w = 0; w < n; ++w)
      if (r.add(r.mul(A.a, Elem(y)), r.mul(A.b, Elem(w))) == zero &&
          r.add(r.mul(s2_, r.mul(A.c, Elem(y))), r.mul(A.d, Elem(w))) == one) {
        found = true;
        break;
      }
  if (!found) return false;
  // left inverse, row by row: X*A = I
  found = false;
  for (std::uint32_t x = 0; x < n && !found; ++x)
    for (std::uint32_t y = 0; y < n; ++y)
      if (r.add(r.mul(Elem(x), A.a), r.mul(s2_, r.mul(Elem(y), A.c))) == one &&
          r.add(r.mul(Elem(x), A.b), r.mul(Elem(y), A.d)) == zero) {
        found = true;
        break;
      }
  if (!found) return false;
  for (std::uint32_t z = 0; z < n; ++z)
    for (std::uint32_t w = 0; w < n; ++w)
      if (r.add(r.mul(Elem(z), A.a), r.mul(Elem(w), A.c)) == zero &&
          r.add(r.mul(s2_, r.mul(Elem(z), A.b)), r.mul(Elem(w), A.d)) == one)
        return true;
  return false;
}

bool FmContext::is_unit(const FMatrix& A) const {
  if (an_.commutative) return unit_by_det(A);
  if (an_.local && an_.jacobson.contains(s_)) return unit_by_diagonal(A);
  return unit_by_search(A);
}

std::optional<FMatrix> FmContext::inverse(const FMatrix& A) const {
  const FiniteRing& r = ring_;
  if (an_.commutative) {
    Elem det = det_s(A);
    if (!an_.units.contains(det)) return std::nullopt;
    Elem di = an_.inverse[det];
    return FMatrix{r.mul(di, A.d), r.mul(di, r.neg(A.b)), r.mul(di, r.neg(A.c)),
                   r.mul(di, A.a)};
  }
  if (an_.local && an_.jacobson.contains(s_)) {
    if (!unit_by_diagonal(A)) return std::nullopt;
    Elem ai = an_.inverse[A.a], di = an_.inverse[A.d];
    Elem x = an_.inverse[r.sub(A.a, r.mul(s2_, r.mul(A.b, r.mul(di, A.c))))];
    Elem w = an_.inverse[r.sub(A.d, r.mul(s2_, r.mul(A.c, r.mul(ai, A.b))))];
    Elem z = r.neg(r.mul(di, r.mul(A.c, x)));
    Elem y = r.neg(r.mul(ai, r.mul(A.b, w)));
    return FMatrix{x, y, z, w};
  }
  const std::uint32_t n = r.size();
  const Elem one = r.one(), zero = r.zero();
  std::optional<std::pair<Elem, Elem>> col1, col2;
  for (std::uint32_t x = 0; x < n && !col1; ++x)
    for (std::uint32_t z = 0; z < n; ++z)
      if (r.add(r.mul(A.a, Elem(x)), r.mul(s2_, r.mul(A.b, Elem(z)))) == one &&
          r.add(r.mul(A.c, Elem(x)), r.mul(A.d, Elem(z))) == zero) {
        col1 = {Elem(x), Elem(z)};
        break;
      }
  if (!col1) return std::nullopt;
  for (std::uint32_t y = 0; y < n && !col2; ++y)
    for (std::uint32_t w = 0; w < n; ++w)
      if (r.add(r.mul(A.a, Elem(y)), r.mul(A.b, Elem(w))) == zero &&
          r.add(r.mul(s2_, r.mul(A.c, Elem(y))), r.mul(A.d, Elem(w))) == one) {
        col2 = {Elem(y), Elem(w)};
        break;
      }
  if (!col2) return std::nullopt;
  FMatrix X{col1->first, col2->first, col1->second, col2->second};
  if (mul(X, A) == identity()) return X;
  return std::nullopt;
}

bool FmContext::is_nilpotent(const FMatrix& A) const {
  std::unordered_set<std::uint64_t> seen;
  FMatrix x = A;
  while (seen.insert(index_of(x)).second) {
    if (x == zero()) return true;
    x = mul(x, A);
  }
  return false;
}

void FmContext::require_enum(const char* what) const {
  if (total_ > caps_.enum_cap)
    throw cap_error(std::string(what) + " refused: |M_2(R;s)| = " + std::to_string(total_) +
                    " exceeds enumeration cap " + std::to_string(caps_.enum_cap));
}

void FmContext::require_similarity(const char* what) const {
  if (ring_.size() > caps_.similarity_cap)
    throw cap_error(std::string(what) + " refused: |R| = " + std::to_string(ring_.size()) +
                    " exceeds similarity cap " + std::to_string(caps_.similarity_cap));
}

const std::vector<char>& FmContext::unit_mask() {
  if (unit_mask_.empty()) {
    require_enum("unit enumeration");
    unit_mask_.resize(total_);
    for (std::uint64_t i = 0; i < total_; ++i) unit_mask_[i] = unit_by_search(at(i)) ? 1 : 0;
  }
  return unit_mask_;
}

const std::vector<char>& FmContext::jacobson_mask() {
  if (jac_mask_.empty()) {
    require_enum("radical enumeration");
    jac_mask_.resize(total_);
    for (std::uint64_t i = 0; i < total_; ++i) jac_mask_[i] = in_jacobson(at(i)) ? 1 : 0;
  }
  return jac_mask_;
}

const std::vector<char>& FmContext::quasireg_mask() {
  if (quasireg_mask_.empty()) {
    require_enum("quasi-regularity enumeration");
    const std::vector<char>& um = unit_mask();
    quasireg_mask_.resize(total_);
    const FMatrix id = identity();
    for (std::uint64_t i = 0; i < total_; ++i) {
      FMatrix X = at(i);
      bool in_j = true;
      for (std::uint64_t t = 0; t < total_ && in_j; ++t) {
        FMatrix T = at(t);
        in_j = um[index_of(sub(id, mul(T, X)))] && um[index_of(sub(id, mul(X, T)))];
      }
      quasireg_mask_[i] = in_j ? 1 : 0;
    }
  }
  return quasireg_mask_;
}

const std::vector<char>& FmContext::nilpotent_mask() {
  if (nil_mask_.empty()) {
    require_enum("nilpotent enumeration");
    nil_mask_.resize(total_);
    for (std::uint64_t i = 0; i < total_; ++i) nil_mask_[i] = is_nilpotent(at(i)) ? 1 : 0;
  }
  return nil_mask_;
}

const std::vector<char>& FmContext::idempotent_mask() {
  if (idem_mask_.empty()) {
    require_enum("idempotent enumeration");
    idem_mask_.resize(total_);
    for (std::uint64_t i = 0; i < total_; ++i) idem_mask_[i] = is_idempotent(at(i)) ? 1 : 0;
  }
  return idem_mask_;
}

const std::vector<FMatrix>& FmContext::idempotents() {
  if (idem_list_.empty()) {
    const std::vector<char>& mask = idempotent_mask();
    for (std::uint64_t i = 0; i < total_; ++i)
      if (mask[i]) idem_list_.push_back(at(i));
  }
  return idem_list_;
}

const std::vector<FMatrix>& FmContext::units() {
  if (unit_list_.empty()) {
    require_similarity("unit-list caching");
    const std::vector<char>& mask = unit_mask();
    for (std::uint64_t i = 0; i < total_; ++i)
      if (mask[i]) unit_list_.push_back(at(i));
  }
  return unit_list_;
}

const std::vector<FMatrix>& FmContext::unit_inverses() {
  if (unit_inv_list_.empty()) {
    const std::vector<FMatrix>& us = units();
    unit_inv_list_.reserve(us.size());
    for (const FMatrix& u : us) unit_inv_list_.push_back(*inverse(u));
  }
  return unit_inv_list_;
}

std::vector<FMatrix> FmContext::enumerate(MatrixFilter filter) {
  require_enum("matrix enumeration");
  std::vector<FMatrix> out;
  switch (filter) {
    case MatrixFilter::All:
      out.reserve(total_);
      for (std::uint64_t i = 0; i < total_; ++i) out.push_back(at(i));
      break;
    case MatrixFilter::Units: {
      const std::vector<char>& mask = unit_mask();
      for (std::uint64_t i = 0; i < total_; ++i)
        if (mask[i]) out.push_back(at(i));
      break;
    }
    case MatrixFilter::Idempotents:
      out = idempotents();
      break;
    case MatrixFilter::Radical: {
      const std::vector<char>& mask = jacobson_mask();
      for (std::uint64_t i = 0; i < total_; ++i)
        if (mask[i]) out.push_back(at(i));
      break;
    }
  }
  return out;
}

std::optional<FMatrix> FmContext::similarity_witness(const FMatrix& A, const FMatrix& B) {
  require_similarity("similarity search");
  for (const FMatrix& P : units())
    if (mul(A, P) == mul(P, B)) return P;
  return std::nullopt;
}

std::optional<std::pair<FMatrix, FMatrix>> FmContext::equivalence_witness(const FMatrix& A,
                                                                          const FMatrix& B) {
  require_similarity("equivalence search");
  const std::vector<FMatrix>& us = units();
  const std::vector<FMatrix>& inv = unit_inverses();
  std::unordered_map<std::uint64_t, std::size_t> first_v;
  for (std::size_t i = 0; i < us.size(); ++i)
    first_v.emplace(index_of(mul(A, us[i])), i);
  for (std::size_t i = 0; i < us.size(); ++i) {
    auto it = first_v.find(index_of(mul(inv[i], B)));
    if (it != first_v.end()) return std::make_pair(us[i], us[it->second]);
  }
  return std::nullopt;
}

IdempotentForm FmContext::idempotent_canonical_form(const FMatrix& E) {
  if (!is_idempotent(E)) throw input_error("idempotent_canonical_form: matrix is not idempotent");
  if (!an_.local)
    throw hypothesis_error("idempotent canonical forms require a local base; " + ring_.label() +
                           " is not local");
  if (E == zero()) return {IdemFormKind::Zero, std::nullopt};
  if (E == identity()) return {IdemFormKind::Identity, std::nullopt};
  const Elem one = ring_.one(), zero_e = ring_.zero();
  if (an_.units.contains(s_)) {
    auto p = similarity_witness(E, diag(one, zero_e));
    if (!p)
      throw check_violation("non-trivial idempotent not similar to diag(1,0) despite s being "
                            "a unit");
    return {IdemFormKind::Diag10, p};
  }
  auto p = similarity_witness(E, diag(one, zero_e));
  if (p) return {IdemFormKind::Diag10, p};
  p = similarity_witness(E, diag(zero_e, one));
  if (p) return {IdemFormKind::Diag01, p};
  throw check_violation("non-trivial idempotent similar to neither diag(1,0) nor diag(0,1)");
}

std::string to_literal(const FiniteRing& r, const FMatrix& m) {
  return "[[" + r.name_of(m.a) + "," + r.name_of(m.b) + "],[" + r.name_of(m.c) + "," +
         r.name_of(m.d) + "]]";
}

namespace {

Elem parse_entry(const FiniteRing& r, const std::string& tok) {
  if (tok.empty()) throw input_error("matrix literal: empty entry");
  if (auto e = r.find_name(tok)) return *e;
  bool digits = true;
  for (char ch : tok)
    if (!std::isdigit(static_cast<unsigned char>(ch))) digits = false;
  if (digits) {
    unsigned long v = std::stoul(tok);
    if (v < r.size()) return static_cast<Elem>(v);
    throw input_error("matrix literal: index " + tok + " out of range for " + r.label());
  }
  throw input_error("matrix literal: unknown element '" + tok + "' in " + r.label());
}

}  // namespace

FMatrix parse_matrix_literal(const FiniteRing& r, const std::string& text) {
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  const std::string bad = "matrix literal must look like [[a,b],[c,d]]";
  if (t.size() < 11 || t.substr(0, 2) != "[[" || t.substr(t.size() - 2) != "]]")
    throw input_error(bad);
  std::string inner = t.substr(2, t.size() - 4);
  auto split = inner.find("],[");
  if (split == std::string::npos) throw input_error(bad);
  std::string rows[2] = {inner.substr(0, split), inner.substr(split + 3)};
  Elem e[4];
  for (int i = 0; i < 2; ++i) {
    auto comma = rows[i].find(',');
    if (comma == std::string::npos || rows[i].find(',', comma + 1) != std::string::npos)
      throw input_error(bad);
    e[2 * i] = parse_entry(r, rows[i].substr(0, comma));
    e[2 * i + 1] = parse_entry(r, rows[i].substr(comma + 1));
  }
  return {e[0], e[1], e[2], e[3]};
}

}  // namespace jclean
