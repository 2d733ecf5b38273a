#include "cleanness.hpp"

#include <unordered_set>

namespace jclean {

const char* clean_kind_name(CleanKind k) {
  switch (k) {
    case CleanKind::StronglyClean: return "strongly-clean";
    case CleanKind::StronglyJClean: return "strongly-J-clean";
    case CleanKind::StronglyNilClean: return "strongly-nil-clean";
  }
  return "?";
}

namespace {

void require_local(FmContext& ctx, const char* who) {
  if (!ctx.an().local)
    throw hypothesis_error(std::string(who) + " requires a local base ring; " +
                           ctx.ring().label() + " is not local");
}

void require_radical_s(FmContext& ctx, const char* who) {
  require_local(ctx, who);
  if (!ctx.an().jacobson.contains(ctx.s()))
    throw hypothesis_error(std::string(who) + " requires s in J(R); s = " +
                           ctx.ring().name_of(ctx.s()) + " is not in J(" + ctx.ring().label() +
                           ")");
}

bool in_target(FmContext& ctx, const FMatrix& W, CleanKind kind) {
  switch (kind) {
    case CleanKind::StronglyClean: return ctx.is_unit(W);
    case CleanKind::StronglyJClean: return ctx.in_jacobson(W);
    case CleanKind::StronglyNilClean: return ctx.is_nilpotent(W);
  }
  return false;
}

// Scans units P for P^{-1}AP = diag(x,y) with x in first, y in second.
std::optional<CleanCertificate> diagonal_search(FmContext& ctx, const FMatrix& A,
                                                const ElemSet& first, const ElemSet& second,
                                                int orientation, CleanKind kind) {
  const Elem z = ctx.ring().zero();
  const std::vector<FMatrix>& us = ctx.units();
  const std::vector<FMatrix>& inv = ctx.unit_inverses();
  for (std::size_t i = 0; i < us.size(); ++i) {
    FMatrix D = ctx.mul(inv[i], ctx.mul(A, us[i]));
    if (D.b != z || D.c != z) continue;
    if (!first.contains(D.a) || !second.contains(D.d)) continue;
    CleanCertificate cert;
    cert.kind = kind;
    cert.variant = CertVariant::DiagonalSimilarity;
    cert.P = us[i];
    cert.orientation = orientation;
    if (orientation == 1) {
      cert.v = D.a;
      cert.w = D.d;
    } else {
      cert.w = D.a;
      cert.v = D.d;
    }
    return cert;
  }
  return std::nullopt;
}

ElemSet one_plus_set(const FiniteRing& r, const ElemSet& s) {
  ElemSet out = ElemSet::empty(r.size());
  for (Elem x : s.items) out.add(r.add(r.one(), x));
  return out;
}

}  // namespace

std::optional<CleanCertificate> oracle_decide(FmContext& ctx, const FMatrix& A, CleanKind kind) {
  for (const FMatrix& E : ctx.idempotents()) {
    if (ctx.mul(E, A) != ctx.mul(A, E)) continue;
    FMatrix W = ctx.sub(A, E);
    if (!in_target(ctx, W, kind)) continue;
    CleanCertificate cert;
    cert.kind = kind;
    cert.variant = CertVariant::Decomposition;
    cert.E = E;
    cert.W = W;
    return cert;
  }
  return std::nullopt;
}

std::optional<CleanCertificate> decide_sjc(FmContext& ctx, const FMatrix& A) {
  require_local(ctx, "decide_sjc");
  if (ctx.in_jacobson(A)) {
    CleanCertificate cert;
    cert.kind = CleanKind::StronglyJClean;
    cert.variant = CertVariant::RadicalMember;
    return cert;
  }
  if (ctx.in_jacobson(ctx.sub(ctx.identity(), A))) {
    CleanCertificate cert;
    cert.kind = CleanKind::StronglyJClean;
    cert.variant = CertVariant::ComplementRadicalMember;
    return cert;
  }
  const ElemSet& jac = ctx.an().jacobson;
  const ElemSet& opj = ctx.an().one_plus_j;
  if (ctx.an().units.contains(ctx.s()))
    return diagonal_search(ctx, A, opj, jac, 1, CleanKind::StronglyJClean);
  auto cert = diagonal_search(ctx, A, opj, jac, 1, CleanKind::StronglyJClean);
  if (cert) return cert;
  return diagonal_search(ctx, A, jac, opj, 2, CleanKind::StronglyJClean);
}

std::optional<CleanCertificate> decide_snc(FmContext& ctx, const FMatrix& A) {
  require_local(ctx, "decide_snc");
  if (ctx.is_nilpotent(A)) {
    CleanCertificate cert;
    cert.kind = CleanKind::StronglyNilClean;
    cert.variant = CertVariant::Decomposition;
    cert.E = ctx.zero();
    cert.W = A;
    return cert;
  }
  FMatrix complement = ctx.sub(ctx.identity(), A);
  if (ctx.is_nilpotent(complement)) {
    CleanCertificate cert;
    cert.kind = CleanKind::StronglyNilClean;
    cert.variant = CertVariant::Decomposition;
    cert.E = ctx.identity();
    cert.W = ctx.sub(A, ctx.identity());
    return cert;
  }
  ElemSet nil = ctx.an().nilpotents;
  ElemSet one_plus_nil = one_plus_set(ctx.ring(), nil);
  if (ctx.an().units.contains(ctx.s()))
    return diagonal_search(ctx, A, one_plus_nil, nil, 1, CleanKind::StronglyNilClean);
  auto cert = diagonal_search(ctx, A, one_plus_nil, nil, 1, CleanKind::StronglyNilClean);
  if (cert) return cert;
  return diagonal_search(ctx, A, nil, one_plus_nil, 2, CleanKind::StronglyNilClean);
}

std::optional<CleanCertificate> decide_sc(FmContext& ctx, const FMatrix& A) {
  require_local(ctx, "decide_sc");
  if (ctx.is_unit(A)) {
    CleanCertificate cert;
    cert.kind = CleanKind::StronglyClean;
    cert.variant = CertVariant::Decomposition;
    cert.E = ctx.zero();
    cert.W = A;
    cert.branch = "unit";
    return cert;
  }
  if (ctx.is_unit(ctx.sub(ctx.identity(), A))) {
    CleanCertificate cert;
    cert.kind = CleanKind::StronglyClean;
    cert.variant = CertVariant::Decomposition;
    cert.E = ctx.identity();
    cert.W = ctx.sub(A, ctx.identity());
    cert.branch = "complement-unit";
    return cert;
  }
  auto inner = decide_sjc(ctx, A);
  if (!inner) return std::nullopt;
  CleanCertificate cert = *inner;
  cert.kind = CleanKind::StronglyClean;
  cert.branch = "strongly-J-clean";
  return cert;
}

CharRoots char_poly_roots(FmContext& ctx, const FMatrix& A) {
  const FiniteRing& r = ctx.ring();
  Elem tr = ctx.trace(A);
  Elem det = ctx.det_s(A);
  CharRoots roots;
  for (std::uint32_t t = 0; t < r.size(); ++t) {
    Elem val = r.add(r.sub(r.mul(Elem(t), Elem(t)), r.mul(tr, Elem(t))), det);
    if (val != r.zero()) continue;
    roots.all.push_back(Elem(t));
    if (ctx.an().jacobson.contains(Elem(t))) roots.in_j.push_back(Elem(t));
    if (ctx.an().one_plus_j.contains(Elem(t))) roots.in_one_plus_j.push_back(Elem(t));
  }
  return roots;
}

std::optional<CleanCertificate> decide_sjc_commutative(FmContext& ctx, const FMatrix& A) {
  if (!ctx.an().commutative)
    throw hypothesis_error("decide_sjc_commutative requires a commutative base; " +
                           ctx.ring().label() + " is not commutative");
  require_local(ctx, "decide_sjc_commutative");
  if (ctx.in_jacobson(A)) {
    CleanCertificate cert;
    cert.kind = CleanKind::StronglyJClean;
    cert.variant = CertVariant::RadicalMember;
    return cert;
  }
  if (ctx.in_jacobson(ctx.sub(ctx.identity(), A))) {
    CleanCertificate cert;
    cert.kind = CleanKind::StronglyJClean;
    cert.variant = CertVariant::ComplementRadicalMember;
    return cert;
  }
  CharRoots roots = char_poly_roots(ctx, A);
  if (roots.in_j.empty() || roots.in_one_plus_j.empty()) return std::nullopt;
  CleanCertificate cert;
  cert.kind = CleanKind::StronglyJClean;
  cert.variant = CertVariant::QuadraticRoots;
  cert.root_j = roots.in_j.front();
  cert.root_one_plus_j = roots.in_one_plus_j.front();
  return cert;
}

std::optional<Elem> right_root_search(const FiniteRing& r, Elem p, Elem q,
                                      const std::vector<Elem>& subset) {
  for (Elem t : subset) {
    Elem val = r.add(r.sub(r.mul(t, t), r.mul(p, t)), q);
    if (val == r.zero()) return t;
  }
  return std::nullopt;
}

std::optional<StandardForm> find_standard_form(FmContext& ctx, const FMatrix& A) {
  require_radical_s(ctx, "find_standard_form");
  if (ctx.is_unit(A))
    throw hypothesis_error("find_standard_form requires a non-unit A");
  if (ctx.is_unit(ctx.sub(ctx.identity(), A)))
    throw hypothesis_error("find_standard_form requires I_2-A to be a non-unit");
  const FiniteRing& r = ctx.ring();
  const RingAnalysis& an = ctx.an();
  const std::vector<FMatrix>& us = ctx.units();
  const std::vector<FMatrix>& inv = ctx.unit_inverses();
  for (std::size_t i = 0; i < us.size(); ++i) {
    FMatrix D = ctx.mul(inv[i], ctx.mul(A, us[i]));
    if (D.b != r.one()) continue;
    if (!an.units.contains(D.c)) continue;
    if (an.one_plus_j.contains(D.a) && an.jacobson.contains(D.d))
      return StandardForm{1, D.a, D.c, D.d, us[i]};
    if (an.jacobson.contains(D.a) && an.one_plus_j.contains(D.d))
      return StandardForm{2, D.d, D.c, D.a, us[i]};
  }
  return std::nullopt;
}

std::optional<CleanCertificate> decide_sjc_radical_s(FmContext& ctx, const FMatrix& A) {
  require_radical_s(ctx, "decide_sjc_radical_s");
  const FiniteRing& r = ctx.ring();
  if (ctx.in_jacobson(A)) {
    CleanCertificate cert;
    cert.kind = CleanKind::StronglyJClean;
    cert.variant = CertVariant::RadicalMember;
    return cert;
  }
  if (ctx.in_jacobson(ctx.sub(ctx.identity(), A))) {
    CleanCertificate cert;
    cert.kind = CleanKind::StronglyJClean;
    cert.variant = CertVariant::ComplementRadicalMember;
    return cert;
  }
  if (ctx.is_unit(A) || ctx.is_unit(ctx.sub(ctx.identity(), A))) return std::nullopt;
  auto form = find_standard_form(ctx, A);
  if (!form)
    throw check_violation("no standard form for a non-unit A with non-unit I_2-A");
  Elem u = form->u, v = form->v, w = form->w;
  Elem vi = ctx.an().inverse[v];
  Elem s2v = r.mul(ctx.s2(), v);
  std::optional<Elem> root_opj, root_j;
  if (form->orientation == 1) {
    Elem conj = r.mul(v, r.mul(u, vi));
    root_opj = right_root_search(r, r.add(conj, w), r.sub(r.mul(conj, w), s2v),
                                 ctx.an().one_plus_j.items);
    root_j = right_root_search(r, r.add(u, w), r.sub(r.mul(w, u), s2v),
                               ctx.an().jacobson.items);
  } else {
    Elem conj = r.mul(v, r.mul(w, vi));
    root_j = right_root_search(r, r.add(u, conj), r.sub(r.mul(conj, u), s2v),
                               ctx.an().jacobson.items);
    root_opj = right_root_search(r, r.add(u, w), r.sub(r.mul(u, w), s2v),
                                 ctx.an().one_plus_j.items);
  }
  if (!root_opj || !root_j) return std::nullopt;
  CleanCertificate cert;
  cert.kind = CleanKind::StronglyJClean;
  cert.variant = CertVariant::QuadraticRoots;
  cert.form = *form;
  cert.root_one_plus_j = *root_opj;
  cert.root_j = *root_j;
  return cert;
}

std::optional<std::uint64_t> radical_power_check(FmContext& ctx, const FMatrix& A,
                                                 std::uint64_t n_max) {
  std::unordered_set<std::uint64_t> seen;
  FMatrix x = A;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    if (!seen.insert(ctx.index_of(x)).second) return std::nullopt;
    if (ctx.in_jacobson(x)) return n;
    x = ctx.mul(x, A);
  }
  return std::nullopt;
}

RadicalVerdict det_tr_radical_test(FmContext& ctx, const FMatrix& A) {
  Elem det = ctx.det_s(A);
  Elem tr = ctx.trace(A);
  const ElemSet& jac = ctx.an().jacobson;
  if (jac.contains(det) && jac.contains(tr) && !ctx.in_jacobson(A))
    return RadicalVerdict::NotStronglyJClean;
  return RadicalVerdict::NoVerdict;
}

namespace {

VerifyResult fail(std::string reason) { return {false, std::move(reason)}; }

VerifyResult verify_membership(FmContext& ctx, const FMatrix& W, CleanKind kind) {
  switch (kind) {
    case CleanKind::StronglyClean:
      if (!ctx.inverse(W)) return fail("W is not a unit");
      break;
    case CleanKind::StronglyJClean:
      if (!ctx.in_jacobson(W)) return fail("W is not in the radical");
      break;
    case CleanKind::StronglyNilClean:
      if (!ctx.is_nilpotent(W)) return fail("W is not nilpotent");
      break;
  }
  return {true, ""};
}

}  // namespace

VerifyResult verify_certificate(FmContext& ctx, const FMatrix& A, const CleanCertificate& cert) {
  const FiniteRing& r = ctx.ring();
  switch (cert.variant) {
    case CertVariant::Decomposition: {
      if (!ctx.is_idempotent(cert.E)) return fail("E is not idempotent");
      if (ctx.add(cert.E, cert.W) != A) return fail("E + W != A");
      if (ctx.mul(cert.E, cert.W) != ctx.mul(cert.W, cert.E)) return fail("EW != WE");
      return verify_membership(ctx, cert.W, cert.kind);
    }
    case CertVariant::RadicalMember:
      if (!ctx.in_jacobson(A)) return fail("A is not in the radical");
      return {true, ""};
    case CertVariant::ComplementRadicalMember:
      if (!ctx.in_jacobson(ctx.sub(ctx.identity(), A)))
        return fail("I_2 - A is not in the radical");
      return {true, ""};
    case CertVariant::DiagonalSimilarity: {
      auto pinv = ctx.inverse(cert.P);
      if (!pinv) return fail("P is not a unit");
      FMatrix D = ctx.mul(*pinv, ctx.mul(A, cert.P));
      Elem x = cert.orientation == 1 ? cert.v : cert.w;
      Elem y = cert.orientation == 1 ? cert.w : cert.v;
      if (D != ctx.diag(x, y)) return fail("P^{-1}AP is not the stated diagonal");
      const ElemSet& low =
          cert.kind == CleanKind::StronglyNilClean ? ctx.an().nilpotents : ctx.an().jacobson;
      if (!low.contains(cert.w)) return fail("w is not in the target ideal");
      Elem v_shift = r.sub(cert.v, r.one());
      if (!low.contains(v_shift)) return fail("v - 1 is not in the target ideal");
      return {true, ""};
    }
    case CertVariant::QuadraticRoots: {
      if (cert.form) {
        const StandardForm& f = *cert.form;
        auto pinv = ctx.inverse(f.P);
        if (!pinv) return fail("form witness P is not a unit");
        FMatrix D = ctx.mul(*pinv, ctx.mul(A, f.P));
        FMatrix expect = f.orientation == 1 ? FMatrix{f.u, r.one(), f.v, f.w}
                                            : FMatrix{f.w, r.one(), f.v, f.u};
        if (D != expect) return fail("P^{-1}AP is not the stated standard form");
        if (!ctx.an().one_plus_j.contains(f.u)) return fail("u is not in 1+J");
        if (!ctx.an().units.contains(f.v)) return fail("v is not a unit");
        if (!ctx.an().jacobson.contains(f.w)) return fail("w is not in J");
        Elem vi = ctx.an().inverse[f.v];
        Elem s2v = r.mul(ctx.s2(), f.v);
        Elem p_opj, q_opj, p_j, q_j;
        if (f.orientation == 1) {
          Elem conj = r.mul(f.v, r.mul(f.u, vi));
          p_opj = r.add(conj, f.w);
          q_opj = r.sub(r.mul(conj, f.w), s2v);
          p_j = r.add(f.u, f.w);
          q_j = r.sub(r.mul(f.w, f.u), s2v);
        } else {
          Elem conj = r.mul(f.v, r.mul(f.w, vi));
          p_j = r.add(f.u, conj);
          q_j = r.sub(r.mul(conj, f.u), s2v);
          p_opj = r.add(f.u, f.w);
          q_opj = r.sub(r.mul(f.u, f.w), s2v);
        }
        Elem t = cert.root_one_plus_j;
        if (r.add(r.sub(r.mul(t, t), r.mul(p_opj, t)), q_opj) != r.zero())
          return fail("stated 1+J root does not satisfy its quadratic");
        if (!ctx.an().one_plus_j.contains(t)) return fail("stated 1+J root is not in 1+J");
        t = cert.root_j;
        if (r.add(r.sub(r.mul(t, t), r.mul(p_j, t)), q_j) != r.zero())
          return fail("stated J root does not satisfy its quadratic");
        if (!ctx.an().jacobson.contains(t)) return fail("stated J root is not in J");
        return {true, ""};
      }
      Elem tr = ctx.trace(A);
      Elem det = ctx.det_s(A);
      for (Elem t : {cert.root_j, cert.root_one_plus_j})
        if (r.add(r.sub(r.mul(t, t), r.mul(tr, t)), det) != r.zero())
          return fail("stated root does not satisfy the characteristic polynomial");
      if (!ctx.an().jacobson.contains(cert.root_j)) return fail("stated J root is not in J");
      if (!ctx.an().one_plus_j.contains(cert.root_one_plus_j))
        return fail("stated 1+J root is not in 1+J");
      return {true, ""};
    }
  }
  return fail("unknown certificate variant");
}

}  // namespace jclean
