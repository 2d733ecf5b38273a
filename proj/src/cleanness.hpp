#pragma once

#include <optional>
#include <string>
#include <vector>

#include "formal_matrix.hpp"

namespace jclean {

enum class CleanKind { StronglyClean, StronglyJClean, StronglyNilClean };

const char* clean_kind_name(CleanKind k);

enum class CertVariant {
  Decomposition,
  RadicalMember,
  ComplementRadicalMember,
  DiagonalSimilarity,
  QuadraticRoots,
};

// orientation 1: [[u,1],[v,w]]; orientation 2: [[w,1],[v,u]];
// u in 1+J(R), v in U(R), w in J(R).
struct StandardForm {
  int orientation = 1;
  Elem u = 0, v = 0, w = 0;
  FMatrix P;
};

struct CleanCertificate {
  CleanKind kind = CleanKind::StronglyJClean;
  CertVariant variant = CertVariant::Decomposition;
  FMatrix E, W;                         // Decomposition
  FMatrix P;                            // DiagonalSimilarity witness
  Elem v = 0, w = 0;                    // diagonal values
  int orientation = 1;                  // 1: diag(v,w), 2: diag(w,v)
  std::optional<StandardForm> form;     // QuadraticRoots via a standard form
  Elem root_one_plus_j = 0, root_j = 0;
  std::string branch;                   // decide_sc branch tag
};

// Scans idempotents in canonical order; certificate is the first decomposition.
std::optional<CleanCertificate> oracle_decide(FmContext& ctx, const FMatrix& A, CleanKind kind);

std::optional<CleanCertificate> decide_sjc(FmContext& ctx, const FMatrix& A);
std::optional<CleanCertificate> decide_snc(FmContext& ctx, const FMatrix& A);
std::optional<CleanCertificate> decide_sc(FmContext& ctx, const FMatrix& A);
std::optional<CleanCertificate> decide_sjc_commutative(FmContext& ctx, const FMatrix& A);
std::optional<CleanCertificate> decide_sjc_radical_s(FmContext& ctx, const FMatrix& A);

struct CharRoots {
  std::vector<Elem> all, in_j, in_one_plus_j;
};

CharRoots char_poly_roots(FmContext& ctx, const FMatrix& A);

// First t in subset order with t*t - p*t + q = 0, coefficients on the left.
std::optional<Elem> right_root_search(const FiniteRing& r, Elem p, Elem q,
                                      const std::vector<Elem>& subset);

// First canonical unit P putting A in a standard form. Requires a local base,
// s in J(R), and neither A nor I_2-A a unit.
std::optional<StandardForm> find_standard_form(FmContext& ctx, const FMatrix& A);

// Minimal n <= n_max with A^n in J(M_2(R;s)), following the power trajectory.
std::optional<std::uint64_t> radical_power_check(FmContext& ctx, const FMatrix& A,
                                                 std::uint64_t n_max);

enum class RadicalVerdict { NotStronglyJClean, NoVerdict };

RadicalVerdict det_tr_radical_test(FmContext& ctx, const FMatrix& A);

struct VerifyResult {
  bool ok = false;
  std::string reason;
};

VerifyResult verify_certificate(FmContext& ctx, const FMatrix& A, const CleanCertificate& cert);

}  // namespace jclean
