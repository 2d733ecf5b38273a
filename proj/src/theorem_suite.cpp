#include "theorem_suite.hpp"

#include <algorithm>
#include <chrono>
#include <random>

namespace jclean {

namespace {

struct Stopwatch {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
  }
};

// The radical pattern is only trusted after it matches the definitional radical.
const std::vector<char>& validated_jac(FmContext& ctx) {
  const auto& jm = ctx.jacobson_mask();
  const auto& qm = ctx.quasireg_mask();
  if (jm != qm)
    throw check_violation("radical pattern disagrees with the quasi-regularity scan in M_2(" +
                          ctx.ring().label() + ";" + ctx.ring().name_of(ctx.s()) + ")");
  return jm;
}

std::vector<FMatrix> diag_targets(FmContext& ctx, const ElemSet& first, const ElemSet& second) {
  std::vector<FMatrix> out;
  out.reserve(std::size_t(first.size()) * second.size());
  for (Elem x : first.items)
    for (Elem y : second.items) out.push_back(ctx.diag(x, y));
  return out;
}

void mark_orbit(FmContext& ctx, const std::vector<FMatrix>& targets, std::vector<char>& mask) {
  const auto& us = ctx.units();
  const auto& inv = ctx.unit_inverses();
  for (const auto& D : targets)
    for (std::size_t i = 0; i < us.size(); ++i)
      mask[ctx.index_of(ctx.mul(us[i], ctx.mul(D, inv[i])))] = 1;
}

ElemSet one_plus(const FiniteRing& r, const ElemSet& s) {
  ElemSet out = ElemSet::empty(r.size());
  for (Elem x : s.items) out.add(r.add(r.one(), x));
  return out;
}

std::uint64_t popcount(const std::vector<char>& m) {
  return std::uint64_t(std::count(m.begin(), m.end(), char(1)));
}

CheckReport pass(std::uint64_t checked, std::string detail = {}) {
  CheckReport rep;
  rep.status = CheckStatus::Pass;
  rep.checked = checked;
  rep.detail = std::move(detail);
  return rep;
}

CheckReport fail(std::uint64_t checked, std::string detail, std::string counterexample) {
  CheckReport rep;
  rep.status = CheckStatus::Fail;
  rep.checked = checked;
  rep.detail = std::move(detail);
  rep.counterexample = std::move(counterexample);
  return rep;
}

struct Gate {
  bool local = false, commutative = false, s_in_j = false, s_unit = false, bleached = false;
};

const std::map<std::string, Gate>& gates() {
  static const std::map<std::string, Gate> g = {
      {"T2.1", {}},
      {"L2.2", {true, false, true, false, false}},
      {"E2.3", {}},
      {"L2.4", {}},
      {"L2.5", {}},
      {"L2.6", {true, false, true, false, false}},
      {"L2.7", {true, false, false, false, false}},
      {"L2.8", {true, false, false, false, false}},
      {"L2.9", {true, false, false, false, false}},
      {"C2.10", {true, true, false, true, false}},
      {"L2.11", {true, false, false, false, false}},
      {"C2.12", {true, false, false, false, false}},
      {"T2.13", {true, false, false, false, false}},
      {"P2.14", {true, false, false, false, false}},
      {"L2.15", {true, false, true, false, false}},
      {"T2.16", {true, false, true, false, false}},
      {"L2.17", {true, false, false, false, true}},
      {"T2.18", {true, false, false, false, true}},
      {"C2.19", {true, false, false, false, true}},
      {"L3.1", {false, true, false, false, false}},
      {"P3.2", {false, true, false, false, false}},
      {"P3.3", {true, true, false, false, false}},
      {"R3.4", {true, true, true, false, false}},
      {"L3.5", {true, true, false, false, false}},
      {"T3.6", {true, true, false, false, false}},
  };
  return g;
}

}  // namespace

const char* check_status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    default: return "hypotheses-not-met";
  }
}

const std::vector<std::string>& SuiteEngine::check_ids() {
  static const std::vector<std::string> ids = {
      "T2.1", "L2.2", "E2.3", "L2.4",  "L2.5",  "L2.6",  "L2.7",  "L2.8", "L2.9",
      "C2.10", "L2.11", "C2.12", "T2.13", "P2.14", "L2.15", "T2.16", "L2.17",
      "T2.18", "C2.19", "L3.1", "P3.2", "P3.3", "R3.4", "L3.5", "T3.6"};
  return ids;
}

const FiniteRing& SuiteEngine::add_ring(const RingSpec& spec) {
  FiniteRing r = FiniteRing::build(spec);
  if (r.size() <= caps_.axiom_cap) {
    AxiomReport rep = verify_ring_axioms(r, caps_);
    if (!rep.ok) {
      const AxiomViolation& v = rep.violations.front();
      throw input_error("ring " + r.label() + " violates " + v.law + ": " + v.detail);
    }
  }
  rings_.push_back(std::make_unique<FiniteRing>(std::move(r)));
  ring_ptrs_.push_back(rings_.back().get());
  return *rings_.back();
}

const RingAnalysis& SuiteEngine::analysis(const FiniteRing& r) {
  auto it = analyses_.find(&r);
  if (it == analyses_.end()) it = analyses_.emplace(&r, analyze(r, caps_)).first;
  return it->second;
}

FmContext& SuiteEngine::context(const FiniteRing& r, Elem s) { return *entry(r, s).ctx; }

SuiteEngine::CtxEntry& SuiteEngine::entry(const FiniteRing& r, Elem s) {
  auto key = std::make_pair(&r, s);
  auto it = ctxs_.find(key);
  if (it == ctxs_.end()) {
    CtxEntry e;
    e.ctx = std::make_unique<FmContext>(r, analysis(r), s, caps_);
    it = ctxs_.emplace(key, std::move(e)).first;
  }
  return it->second;
}

void SuiteEngine::build_oracle_masks(CtxEntry& e) {
  if (!e.masks[0].empty()) return;
  FmContext& ctx = *e.ctx;
  validated_jac(ctx);
  const auto& um = ctx.unit_mask();
  const auto& jm = ctx.jacobson_mask();
  const auto& nm = ctx.nilpotent_mask();
  const auto& idems = ctx.idempotents();
  const std::uint64_t total = ctx.total();
  for (auto& m : e.masks) m.assign(total, 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    FMatrix A = ctx.at(idx);
    bool sc = false, sjc = false, snc = false;
    for (const FMatrix& E : idems) {
      if (!(ctx.mul(E, A) == ctx.mul(A, E))) continue;
      std::uint64_t w = ctx.index_of(ctx.sub(A, E));
      sc = sc || um[w];
      sjc = sjc || jm[w];
      snc = snc || nm[w];
      if (sc && sjc && snc) break;
    }
    e.masks[int(CleanKind::StronglyClean)][idx] = sc;
    e.masks[int(CleanKind::StronglyJClean)][idx] = sjc;
    e.masks[int(CleanKind::StronglyNilClean)][idx] = snc;
  }
}

const std::vector<char>& SuiteEngine::oracle_mask(const FiniteRing& r, Elem s, CleanKind kind) {
  CtxEntry& e = entry(r, s);
  build_oracle_masks(e);
  return e.masks[int(kind)];
}

CheckReport SuiteEngine::run_check(const std::string& id, const FiniteRing& r, Elem s) {
  auto git = gates().find(id);
  if (git == gates().end()) throw input_error("unknown check id: " + id);
  Stopwatch sw;
  CheckReport rep;
  rep.check = id;
  rep.ring = r.label();
  if (s >= r.size()) throw input_error("s out of range for " + r.label());
  rep.s = r.name_of(s);
  try {
    const RingAnalysis& an = analysis(r);
    const Gate& g = git->second;
    if (!an.center.contains(s)) throw hypothesis_error("requires a central s");
    if (g.commutative && !an.commutative)
      throw hypothesis_error("requires a commutative base ring");
    if (g.local && !an.local) throw hypothesis_error("requires a local base ring");
    if (g.s_in_j && !an.jacobson.contains(s)) throw hypothesis_error("requires s in J(R)");
    if (g.s_unit && !an.units.contains(s)) throw hypothesis_error("requires s a unit");
    if (g.bleached && !(an.local && an.weakly_bleached))
      throw hypothesis_error("requires a weakly bleached local base ring");

    CheckReport body;
    if (id == "T2.1") body = check_t21(context(r, s));
    else if (id == "L2.2") body = check_l22(context(r, s));
    else if (id == "E2.3") body = check_e23(r, s);
    else if (id == "L2.4") body = check_l24(r, s);
    else if (id == "L2.5") body = check_l25(r, s);
    else if (id == "L2.6") body = check_l26(context(r, s));
    else if (id == "L2.7") body = check_l27(context(r, s));
    else if (id == "L2.8") body = check_l28(r, s);
    else if (id == "L2.9") body = check_l29(r, s);
    else if (id == "C2.10") body = check_c210(r, s);
    else if (id == "L2.11") body = check_l211(r, s);
    else if (id == "C2.12") body = check_c212(r, s);
    else if (id == "T2.13") body = check_t213(r, s);
    else if (id == "P2.14") body = check_p214(r, s);
    else if (id == "L2.15") body = check_l215(context(r, s));
    else if (id == "T2.16") body = check_t216(r, s);
    else if (id == "L2.17" || id == "T2.18" || id == "C2.19") {
      body = lift_check(id, r, s, adaptive_precision(r));
    } else if (id == "L3.1") body = check_l31(context(r, s));
    else if (id == "P3.2") body = check_p32(r, s);
    else if (id == "P3.3") body = check_p33(r, s);
    else if (id == "R3.4") body = check_r34(r, s);
    else if (id == "L3.5") body = check_l35(r, s);
    else body = check_t36(r, s);

    rep.status = body.status;
    rep.detail = body.detail;
    rep.counterexample = body.counterexample;
    rep.checked = body.checked;
    rep.sampled = body.sampled;
  } catch (const hypothesis_error& e) {
    rep.status = CheckStatus::HypothesesNotMet;
    rep.detail = e.what();
  } catch (const check_violation& e) {
    rep.status = CheckStatus::Fail;
    rep.detail = e.what();
  }
  rep.elapsed_ms = sw.ms();
  return rep;
}

CheckReport SuiteEngine::check_t21(FmContext& ctx) {
  const auto& jm = ctx.jacobson_mask();
  const auto& qm = ctx.quasireg_mask();
  for (std::uint64_t idx = 0; idx < ctx.total(); ++idx)
    if (jm[idx] != qm[idx]) {
      const char* dir = qm[idx] ? "radical member outside the entry pattern"
                                : "entry pattern member that is not quasi-regular";
      return fail(idx + 1, dir, to_literal(ctx.ring(), ctx.at(idx)));
    }
  return pass(ctx.total(), "radical equals the entry pattern");
}

CheckReport SuiteEngine::check_l22(FmContext& ctx) {
  const auto& qm = ctx.quasireg_mask();
  const auto& um = ctx.unit_mask();
  const RingAnalysis& an = ctx.an();
  for (std::uint64_t idx = 0; idx < ctx.total(); ++idx) {
    FMatrix A = ctx.at(idx);
    bool pat = an.jacobson.contains(A.a) && an.jacobson.contains(A.d);
    if (bool(qm[idx]) != pat)
      return fail(idx + 1, "radical differs from the diagonal-radical pattern",
                  to_literal(ctx.ring(), A));
    bool du = an.units.contains(A.a) && an.units.contains(A.d);
    if (bool(um[idx]) != du)
      return fail(idx + 1, "unit criterion via diagonal entries fails", to_literal(ctx.ring(), A));
  }
  return pass(2 * ctx.total(), "radical has free off-diagonal entries; units have unit diagonal");
}

CheckReport SuiteEngine::check_e23(const FiniteRing& r, Elem s) {
  CtxEntry& e = entry(r, s);
  build_oracle_masks(e);
  FmContext& ctx = *e.ctx;
  const auto& jm = validated_jac(ctx);
  const auto& um = ctx.unit_mask();
  const auto& sjc = e.masks[int(CleanKind::StronglyJClean)];
  FMatrix I = ctx.identity();
  std::uint64_t checked = 0;
  for (std::uint64_t idx = 0; idx < ctx.total(); ++idx) {
    FMatrix A = ctx.at(idx);
    if (jm[idx] && !sjc[idx])
      return fail(checked, "radical member that is not strongly J-clean",
                  to_literal(r, A));
    ++checked;
    if (um[idx]) {
      bool rhs = jm[ctx.index_of(ctx.sub(A, I))];
      if (bool(sjc[idx]) != rhs)
        return fail(checked, "for a unit, strongly J-clean must match A-I in the radical",
                    to_literal(r, A));
      ++checked;
    }
    if (bool(sjc[idx]) != bool(sjc[ctx.index_of(ctx.sub(I, A))]))
      return fail(checked, "strongly J-clean is not symmetric under A -> I-A",
                  to_literal(r, A));
    ++checked;
  }
  return pass(checked, "radical members, units via A-I, and the I-A symmetry all agree");
}

CheckReport SuiteEngine::check_l24(const FiniteRing& r, Elem s) {
  CtxEntry& e = entry(r, s);
  build_oracle_masks(e);
  FmContext& ctx = *e.ctx;
  const auto& jm = validated_jac(ctx);
  const auto& um = ctx.unit_mask();
  const auto& sjc = e.masks[int(CleanKind::StronglyJClean)];
  FMatrix I = ctx.identity();
  for (std::uint64_t idx = 0; idx < ctx.total(); ++idx) {
    FMatrix A = ctx.at(idx);
    bool lhs = um[idx] && sjc[idx];
    bool rhs = jm[ctx.index_of(ctx.sub(A, I))];
    if (lhs != rhs)
      return fail(idx + 1, "strongly J-clean units are not exactly I + radical",
                  to_literal(r, A));
  }
  return pass(ctx.total(), "strongly J-clean units are exactly I + radical");
}

CheckReport SuiteEngine::check_l25(const FiniteRing& r, Elem s) {
  CtxEntry& e = entry(r, s);
  build_oracle_masks(e);
  FmContext& ctx = *e.ctx;
  const auto& sjc = e.masks[int(CleanKind::StronglyJClean)];
  const auto& us = ctx.units();
  const auto& inv = ctx.unit_inverses();
  auto conj_ok = [&](std::uint64_t idx, std::size_t i) {
    FMatrix A = ctx.at(idx);
    FMatrix C = ctx.mul(us[i], ctx.mul(A, inv[i]));
    return bool(sjc[idx]) == bool(sjc[ctx.index_of(C)]);
  };
  if (r.size() <= 4) {
    std::uint64_t checked = 0;
    for (std::uint64_t idx = 0; idx < ctx.total(); ++idx)
      for (std::size_t i = 0; i < us.size(); ++i, ++checked)
        if (!conj_ok(idx, i))
          return fail(checked + 1, "conjugation changed strongly J-clean membership",
                      to_literal(r, ctx.at(idx)) + " by " + to_literal(r, us[i]));
    return pass(checked, "invariant under all conjugations");
  }
  std::mt19937_64 rng(caps_.seed);
  std::uniform_int_distribution<std::uint64_t> pick_a(0, ctx.total() - 1);
  std::uniform_int_distribution<std::size_t> pick_u(0, us.size() - 1);
  for (std::uint32_t k = 0; k < caps_.sample_size; ++k) {
    std::uint64_t idx = pick_a(rng);
    std::size_t i = pick_u(rng);
    if (!conj_ok(idx, i))
      return fail(k + 1, "conjugation changed strongly J-clean membership",
                  to_literal(r, ctx.at(idx)) + " by " + to_literal(r, us[i]));
  }
  CheckReport rep = pass(caps_.sample_size, "invariant under sampled conjugations");
  rep.sampled = true;
  return rep;
}

CheckReport SuiteEngine::check_l26(FmContext& ctx) {
  const auto& jm = validated_jac(ctx);
  for (std::uint64_t idx = 0; idx < ctx.total(); ++idx) {
    FMatrix A = ctx.at(idx);
    bool powered = radical_power_check(ctx, A, ctx.total()).has_value();
    if (powered != bool(jm[idx]))
      return fail(idx + 1,
                  powered ? "a power lies in the radical but the matrix does not"
                          : "radical member with no radical power",
                  to_literal(ctx.ring(), A));
  }
  return pass(ctx.total(), "some power in the radical exactly when the matrix is");
}

CheckReport SuiteEngine::check_l27(FmContext& ctx) {
  const FiniteRing& r = ctx.ring();
  const RingAnalysis& an = ctx.an();
  bool s_unit = an.units.contains(ctx.s());
  FMatrix zero = ctx.zero(), I = ctx.identity();
  FMatrix d10 = ctx.diag(r.one(), r.zero()), d01 = ctx.diag(r.zero(), r.one());
  std::uint64_t checked = 0;
  for (const FMatrix& E : ctx.idempotents()) {
    if (E == zero || E == I) continue;
    auto w10 = ctx.similarity_witness(E, d10);
    if (s_unit) {
      if (!w10)
        return fail(checked, "non-trivial idempotent not similar to diag(1,0)", to_literal(r, E));
      ++checked;
      continue;
    }
    auto w01 = ctx.similarity_witness(E, d01);
    if (w10.has_value() == w01.has_value())
      return fail(checked,
                  w10 ? "idempotent similar to both diag(1,0) and diag(0,1)"
                      : "idempotent similar to neither diag(1,0) nor diag(0,1)",
                  to_literal(r, E));
    ++checked;
  }
  return pass(checked, s_unit ? "every non-trivial idempotent is similar to diag(1,0)"
                              : "each non-trivial idempotent matches exactly one orientation");
}

CheckReport SuiteEngine::check_l28(const FiniteRing& r, Elem s) {
  CtxEntry& e = entry(r, s);
  build_oracle_masks(e);
  FmContext& ctx = *e.ctx;
  const auto& jm = validated_jac(ctx);
  const auto& sjc = e.masks[int(CleanKind::StronglyJClean)];
  const RingAnalysis& an = ctx.an();
  std::vector<char> orbit(ctx.total(), 0);
  mark_orbit(ctx, diag_targets(ctx, an.one_plus_j, an.jacobson), orbit);
  if (!an.units.contains(s))
    mark_orbit(ctx, diag_targets(ctx, an.jacobson, an.one_plus_j), orbit);
  FMatrix I = ctx.identity();
  for (std::uint64_t idx = 0; idx < ctx.total(); ++idx) {
    bool rhs = jm[idx] || jm[ctx.index_of(ctx.sub(I, ctx.at(idx)))] || orbit[idx];
    if (bool(sjc[idx]) != rhs)
      return fail(idx + 1,
                  sjc[idx] ? "strongly J-clean matrix outside all stated cases"
                           : "stated case produced a non strongly J-clean matrix",
                  to_literal(r, ctx.at(idx)));
  }
  return pass(ctx.total(), "strongly J-clean set matches the case analysis");
}

CheckReport SuiteEngine::check_l29(const FiniteRing& r, Elem s) {
  CtxEntry& e = entry(r, s);
  build_oracle_masks(e);
  FmContext& ctx = *e.ctx;
  const auto& nm = ctx.nilpotent_mask();
  const auto& snc = e.masks[int(CleanKind::StronglyNilClean)];
  const RingAnalysis& an = ctx.an();
  ElemSet opn = one_plus(r, an.nilpotents);
  std::vector<char> orbit(ctx.total(), 0);
  mark_orbit(ctx, diag_targets(ctx, opn, an.nilpotents), orbit);
  if (!an.units.contains(s)) mark_orbit(ctx, diag_targets(ctx, an.nilpotents, opn), orbit);
  FMatrix I = ctx.identity();
  for (std::uint64_t idx = 0; idx < ctx.total(); ++idx) {
    bool rhs = nm[idx] || nm[ctx.index_of(ctx.sub(I, ctx.at(idx)))] || orbit[idx];
    if (bool(snc[idx]) != rhs)
      return fail(idx + 1,
                  snc[idx] ? "strongly nil-clean matrix outside all stated cases"
                           : "stated case produced a non strongly nil-clean matrix",
                  to_literal(r, ctx.at(idx)));
  }
  return pass(ctx.total(), "strongly nil-clean set matches the case analysis");
}

CheckReport SuiteEngine::check_c210(const FiniteRing& r, Elem s) {
  CtxEntry& e = entry(r, s);
  build_oracle_masks(e);
  FmContext& ctx = *e.ctx;
  const auto& sjc = e.masks[int(CleanKind::StronglyJClean)];
  FMatrix A0{r.one(), r.one(), r.one(), r.zero()};
  if (sjc[ctx.index_of(A0)])
    return fail(1, "the witness matrix is strongly J-clean", to_literal(r, A0));
  std::uint64_t missing = ctx.total() - popcount(sjc);
  return pass(ctx.total(), "witness " + to_literal(r, A0) + " is not strongly J-clean; " +
                               std::to_string(missing) + " matrices are not");
}

CheckReport SuiteEngine::check_l211(const FiniteRing& r, Elem s) {
  CtxEntry& e = entry(r, s);
  build_oracle_masks(e);
  FmContext& ctx = *e.ctx;
  const auto& um = ctx.unit_mask();
  const auto& sc = e.masks[int(CleanKind::StronglyClean)];
  const RingAnalysis& an = ctx.an();
  std::vector<char> orbit(ctx.total(), 0);
  mark_orbit(ctx, diag_targets(ctx, an.jacobson, an.one_plus_j), orbit);
  if (!an.units.contains(s))
    mark_orbit(ctx, diag_targets(ctx, an.one_plus_j, an.jacobson), orbit);
  FMatrix I = ctx.identity();
  for (std::uint64_t idx = 0; idx < ctx.total(); ++idx) {
    bool rhs = um[idx] || um[ctx.index_of(ctx.sub(I, ctx.at(idx)))] || orbit[idx];
    if (bool(sc[idx]) != rhs)
      return fail(idx + 1,
                  sc[idx] ? "strongly clean matrix outside all stated cases"
                          : "stated case produced a non strongly clean matrix",
                  to_literal(r, ctx.at(idx)));
  }
  return pass(ctx.total(), "strongly clean set matches the case analysis");
}

CheckReport SuiteEngine::check_c212(const FiniteRing& r, Elem s) {
  CtxEntry& e = entry(r, s);
  build_oracle_masks(e);
  FmContext& ctx = *e.ctx;
  const auto& um = ctx.unit_mask();
  const auto& sc = e.masks[int(CleanKind::StronglyClean)];
  ElemSet all = ElemSet::empty(r.size());
  for (Elem x = 0; x < r.size(); ++x) all.add(x);
  std::vector<char> orbit(ctx.total(), 0);
  mark_orbit(ctx, diag_targets(ctx, all, all), orbit);
  FMatrix I = ctx.identity();
  for (std::uint64_t idx = 0; idx < ctx.total(); ++idx) {
    bool rhs = um[idx] || um[ctx.index_of(ctx.sub(I, ctx.at(idx)))] || orbit[idx];
    if (bool(sc[idx]) != rhs)
      return fail(idx + 1,
                  sc[idx] ? "strongly clean matrix that is neither near a unit nor diagonalizable"
                          : "diagonalizable or unit-adjacent matrix that is not strongly clean",
                  to_literal(r, ctx.at(idx)));
  }
  return pass(ctx.total(), "strongly clean = unit, complement unit, or similar to a diagonal");
}

CheckReport SuiteEngine::check_t213(const FiniteRing& r, Elem s) {
  CtxEntry& e = entry(r, s);
  build_oracle_masks(e);
  FmContext& ctx = *e.ctx;
  const auto& um = ctx.unit_mask();
  const auto& sc = e.masks[int(CleanKind::StronglyClean)];
  const auto& sjc = e.masks[int(CleanKind::StronglyJClean)];
  FMatrix I = ctx.identity();
  for (std::uint64_t idx = 0; idx < ctx.total(); ++idx) {
    bool rhs = um[idx] || um[ctx.index_of(ctx.sub(I, ctx.at(idx)))] || sjc[idx];
    if (bool(sc[idx]) != rhs)
      return fail(idx + 1, "strongly clean does not reduce to units and strongly J-clean",
                  to_literal(r, ctx.at(idx)));
  }
  return pass(ctx.total(), "strongly clean = unit, complement unit, or strongly J-clean");
}

CheckReport SuiteEngine::check_p214(const FiniteRing& r, Elem s) {
  CtxEntry& e = entry(r, s);
  build_oracle_masks(e);
  FmContext& ctx = *e.ctx;
  const RingAnalysis& an = ctx.an();
  for (Elem j : an.jacobson.items)
    if (!an.nilpotents.contains(j))
      return fail(0, "J(R) contains a non-nilpotent element", r.name_of(j));
  const auto& um = ctx.unit_mask();
  const auto& sjc = e.masks[int(CleanKind::StronglyJClean)];
  const auto& snc = e.masks[int(CleanKind::StronglyNilClean)];
  FMatrix I = ctx.identity();
  std::uint64_t checked = 0;
  for (std::uint64_t idx = 0; idx < ctx.total(); ++idx) {
    if (um[idx] || um[ctx.index_of(ctx.sub(I, ctx.at(idx)))]) continue;
    ++checked;
    if (bool(snc[idx]) != bool(sjc[idx]))
      return fail(checked, "nil-clean and J-clean disagree on a doubly non-unit matrix",
                  to_literal(r, ctx.at(idx)));
  }
  return pass(checked,
              "J(R) is nil and both cleanness notions agree where A and I-A are non-units");
}

CheckReport SuiteEngine::check_l215(FmContext& ctx) {
  const FiniteRing& r = ctx.ring();
  const auto& um = ctx.unit_mask();
  FMatrix I = ctx.identity();
  std::uint64_t checked = 0;
  for (std::uint64_t idx = 0; idx < ctx.total(); ++idx) {
    if (um[idx] || um[ctx.index_of(ctx.sub(I, ctx.at(idx)))]) continue;
    FMatrix A = ctx.at(idx);
    auto f = find_standard_form(ctx, A);
    if (!f)
      return fail(checked, "doubly non-unit matrix with no standard form", to_literal(r, A));
    FMatrix expect = f->orientation == 1 ? FMatrix{f->u, r.one(), f->v, f->w}
                                         : FMatrix{f->w, r.one(), f->v, f->u};
    FMatrix conj = ctx.mul(ctx.mul(*ctx.inverse(f->P), A), f->P);
    if (!(conj == expect))
      return fail(checked, "standard form witness fails to conjugate", to_literal(r, A));
    ++checked;
  }
  return pass(checked, "every doubly non-unit matrix reaches a standard form");
}

CheckReport SuiteEngine::check_t216(const FiniteRing& r, Elem s) {
  CtxEntry& e = entry(r, s);
  build_oracle_masks(e);
  FmContext& ctx = *e.ctx;
  const auto& sjc = e.masks[int(CleanKind::StronglyJClean)];
  for (std::uint64_t idx = 0; idx < ctx.total(); ++idx) {
    FMatrix A = ctx.at(idx);
    auto cert = decide_sjc_radical_s(ctx, A);
    if (cert.has_value() != bool(sjc[idx]))
      return fail(idx + 1,
                  cert ? "criterion accepts a matrix the oracle rejects"
                       : "criterion rejects a matrix the oracle accepts",
                  to_literal(r, A));
    if (cert) {
      VerifyResult vr = verify_certificate(ctx, A, *cert);
      if (!vr.ok)
        return fail(idx + 1, "certificate rejected: " + vr.reason, to_literal(r, A));
    }
  }
  return pass(ctx.total(), "quadratic-root criterion matches the oracle, certificates verified");
}

CheckReport SuiteEngine::check_l31(FmContext& ctx) {
  const FiniteRing& r = ctx.ring();
  const RingAnalysis& an = ctx.an();
  const auto& um = ctx.unit_mask();
  FMatrix I = ctx.identity();
  std::uint64_t checked = 0;
  for (std::uint64_t idx = 0; idx < ctx.total(); ++idx) {
    FMatrix A = ctx.at(idx);
    Elem dA = ctx.det_s(A);
    if (bool(um[idx]) != an.units.contains(dA))
      return fail(checked, "unit status disagrees with determinant unit status",
                  to_literal(r, A));
    ++checked;
    if (um[idx]) {
      FMatrix X = *ctx.inverse(A);
      if (!(ctx.mul(A, X) == I) || !(ctx.mul(X, A) == I))
        return fail(checked, "adjugate inverse formula fails", to_literal(r, A));
      ++checked;
    }
    Elem lhs = ctx.det_s(ctx.sub(I, A));
    Elem rhs = r.sub(r.add(r.one(), dA), ctx.trace(A));
    if (lhs != rhs)
      return fail(checked, "det(I-A) = 1 - tr(A) + det(A) fails", to_literal(r, A));
    ++checked;
  }
  const auto& us = ctx.units();
  const auto& inv = ctx.unit_inverses();
  bool sampled = r.size() > 4;
  auto mult_ok = [&](std::uint64_t i, std::uint64_t j) {
    FMatrix A = ctx.at(i), B = ctx.at(j);
    return ctx.det_s(ctx.mul(A, B)) == r.mul(ctx.det_s(A), ctx.det_s(B));
  };
  auto sim_ok = [&](std::uint64_t i, std::size_t k) {
    FMatrix A = ctx.at(i);
    FMatrix C = ctx.mul(us[k], ctx.mul(A, inv[k]));
    return ctx.det_s(C) == ctx.det_s(A) && ctx.trace(C) == ctx.trace(A);
  };
  if (!sampled) {
    for (std::uint64_t i = 0; i < ctx.total(); ++i)
      for (std::uint64_t j = 0; j < ctx.total(); ++j, ++checked)
        if (!mult_ok(i, j))
          return fail(checked, "determinant is not multiplicative",
                      to_literal(r, ctx.at(i)) + " * " + to_literal(r, ctx.at(j)));
    for (std::uint64_t i = 0; i < ctx.total(); ++i)
      for (std::size_t k = 0; k < us.size(); ++k, ++checked)
        if (!sim_ok(i, k))
          return fail(checked, "determinant or trace not similarity invariant",
                      to_literal(r, ctx.at(i)));
  } else {
    std::mt19937_64 rng(caps_.seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, ctx.total() - 1);
    std::uniform_int_distribution<std::size_t> pick_u(0, us.size() - 1);
    for (std::uint32_t k = 0; k < caps_.sample_size; ++k, ++checked)
      if (!mult_ok(pick(rng), pick(rng)))
        return fail(checked, "determinant is not multiplicative", "");
    for (std::uint32_t k = 0; k < caps_.sample_size; ++k, ++checked)
      if (!sim_ok(pick(rng), pick_u(rng)))
        return fail(checked, "determinant or trace not similarity invariant", "");
  }
  CheckReport rep = pass(checked, "determinant laws hold");
  rep.sampled = sampled;
  return rep;
}

CheckReport SuiteEngine::check_p32(const FiniteRing& r, Elem s) {
  CtxEntry& e = entry(r, s);
  build_oracle_masks(e);
  FmContext& ctx = *e.ctx;
  const auto& jm = validated_jac(ctx);
  const auto& sjc = e.masks[int(CleanKind::StronglyJClean)];
  const RingAnalysis& an = ctx.an();
  std::uint64_t checked = 0;
  for (std::uint64_t idx = 0; idx < ctx.total(); ++idx) {
    FMatrix A = ctx.at(idx);
    if (!an.jacobson.contains(ctx.det_s(A)) || !an.jacobson.contains(ctx.trace(A)) || jm[idx])
      continue;
    ++checked;
    if (sjc[idx])
      return fail(checked, "radical det and trace outside J(M_2) yet strongly J-clean",
                  to_literal(r, A));
    if (det_tr_radical_test(ctx, A) != RadicalVerdict::NotStronglyJClean)
      return fail(checked, "negative test fails to flag the matrix", to_literal(r, A));
  }
  return pass(checked, "radical det and trace outside the radical exclude strongly J-clean");
}

CheckReport SuiteEngine::check_p33(const FiniteRing& r, Elem s) {
  CtxEntry& e = entry(r, s);
  build_oracle_masks(e);
  FmContext& ctx = *e.ctx;
  const auto& jm = validated_jac(ctx);
  const auto& sjc = e.masks[int(CleanKind::StronglyJClean)];
  const RingAnalysis& an = ctx.an();
  for (std::uint64_t idx = 0; idx < ctx.total(); ++idx) {
    FMatrix A = ctx.at(idx);
    bool lhs = an.jacobson.contains(ctx.det_s(A)) && an.jacobson.contains(ctx.trace(A)) &&
               sjc[idx];
    if (lhs != bool(jm[idx]))
      return fail(idx + 1, "radical membership differs from radical det/trace plus J-clean",
                  to_literal(r, A));
  }
  return pass(ctx.total(), "strongly J-clean with radical det and trace = radical members");
}

CheckReport SuiteEngine::check_r34(const FiniteRing& r, Elem s) {
  FmContext& ctx = context(r, s);
  const auto& jm = validated_jac(ctx);
  const RingAnalysis& an = ctx.an();
  for (std::uint64_t idx = 0; idx < ctx.total(); ++idx) {
    FMatrix A = ctx.at(idx);
    bool lhs = an.jacobson.contains(ctx.det_s(A)) && an.jacobson.contains(ctx.trace(A));
    if (lhs != bool(jm[idx]))
      return fail(idx + 1, "radical det and trace do not characterize the radical",
                  to_literal(r, A));
  }
  return pass(ctx.total(), "radical membership = radical det and trace");
}

CheckReport SuiteEngine::check_l35(const FiniteRing& r, Elem s) {
  CtxEntry& e = entry(r, s);
  build_oracle_masks(e);
  FmContext& ctx = *e.ctx;
  const auto& sc = e.masks[int(CleanKind::StronglyClean)];
  std::uint64_t checked = 0;
  for (Elem a = 0; a < r.size(); ++a)
    for (Elem b = 0; b < r.size(); ++b)
      for (Elem d = 0; d < r.size(); ++d) {
        FMatrix A{a, b, r.zero(), d};
        ++checked;
        if (!sc[ctx.index_of(A)])
          return fail(checked, "upper triangular matrix that is not strongly clean",
                      to_literal(r, A));
      }
  return pass(checked, "every upper triangular matrix is strongly clean");
}

CheckReport SuiteEngine::check_t36(const FiniteRing& r, Elem s) {
  CtxEntry& e = entry(r, s);
  build_oracle_masks(e);
  FmContext& ctx = *e.ctx;
  const auto& sjc = e.masks[int(CleanKind::StronglyJClean)];
  for (std::uint64_t idx = 0; idx < ctx.total(); ++idx) {
    FMatrix A = ctx.at(idx);
    auto cert = decide_sjc_commutative(ctx, A);
    if (cert.has_value() != bool(sjc[idx]))
      return fail(idx + 1,
                  cert ? "criterion accepts a matrix the oracle rejects"
                       : "criterion rejects a matrix the oracle accepts",
                  to_literal(r, A));
    if (cert) {
      VerifyResult vr = verify_certificate(ctx, A, *cert);
      if (!vr.ok)
        return fail(idx + 1, "certificate rejected: " + vr.reason, to_literal(r, A));
    }
  }
  return pass(ctx.total(), "characteristic-root criterion matches the oracle");
}

std::uint32_t SuiteEngine::adaptive_precision(const FiniteRing& r) const {
  std::uint32_t N = caps_.series_precision;
  auto fits = [&](std::uint32_t k) {
    std::uint64_t size = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
      size *= r.size();
      if (size > caps_.analysis_cap || size > caps_.similarity_cap) return false;
    }
    std::uint64_t t = 1;
    for (int i = 0; i < 4; ++i) t *= size;
    return t <= caps_.enum_cap;
  };
  while (N > 1 && !fits(N)) --N;
  return N;
}

const FiniteRing& SuiteEngine::series_ring(const FiniteRing& base, std::uint32_t N) {
  auto key = std::make_pair(&base, N);
  auto it = series_cache_.find(key);
  if (it != series_cache_.end()) return *it->second;
  FiniteRing r = FiniteRing::build(series_spec(base.spec(), N));
  if (r.size() <= caps_.axiom_cap) {
    AxiomReport rep = verify_ring_axioms(r, caps_);
    if (!rep.ok)
      throw check_violation("series quotient " + r.label() + " violates " +
                            rep.violations.front().law);
  }
  aux_rings_.push_back(std::make_unique<FiniteRing>(std::move(r)));
  const FiniteRing* p = aux_rings_.back().get();
  series_cache_[key] = p;
  return *p;
}

CheckReport SuiteEngine::lift_check(const std::string& id, const FiniteRing& r, Elem s,
                                    std::uint32_t N) {
  Stopwatch sw;
  CheckReport rep;
  rep.check = id;
  rep.ring = r.label();
  rep.s = r.name_of(s);
  try {
    const RingAnalysis& an = analysis(r);
    if (!an.center.contains(s)) throw hypothesis_error("requires a central s");
    if (!an.local) throw hypothesis_error("requires a local base ring");
    if (!an.weakly_bleached) throw hypothesis_error("requires a weakly bleached local base ring");
    if (N < 1) throw input_error("series precision must be at least 1");

    const FiniteRing& rp = series_ring(r, N);
    Elem sp = N >= 2 ? Elem(std::uint64_t(s) * r.size()) : r.zero();
    FmContext& ctxp = context(rp, sp);
    CtxEntry& e0 = entry(r, r.zero());
    build_oracle_masks(e0);
    FmContext& ctx0 = *e0.ctx;
    SeriesView sv = series_view(rp);
    auto proj = [&](const FMatrix& A) {
      return FMatrix{sv.at_zero(A.a), sv.at_zero(A.b), sv.at_zero(A.c), sv.at_zero(A.d)};
    };

    bool exhaustive = ctxp.total() <= caps_.series_exhaustive_cap;
    std::vector<std::uint64_t> indices;
    if (exhaustive) {
      indices.resize(ctxp.total());
      for (std::uint64_t i = 0; i < ctxp.total(); ++i) indices[i] = i;
    } else {
      std::mt19937_64 rng(caps_.seed);
      std::uniform_int_distribution<std::uint64_t> pick(0, ctxp.total() - 1);
      indices.resize(caps_.sample_size);
      for (auto& v : indices) v = pick(rng);
    }

    std::string note = "precision " + std::to_string(N) + ", s lifts to " +
                       rp.name_of(sp) + (exhaustive ? ", exhaustive" : ", sampled");
    if (N == 1) note += "; precision 1 truncates x to 0, so this is the base-case identity";

    CheckReport body;
    if (id == "T2.18" || id == "C2.19") {
      CleanKind kind = id == "T2.18" ? CleanKind::StronglyJClean : CleanKind::StronglyClean;
      const auto& mask0 = e0.masks[int(kind)];
      std::uint64_t checked = 0;
      body = pass(0);
      for (std::uint64_t idx : indices) {
        FMatrix Ap = ctxp.at(idx);
        bool lhs = oracle_decide(ctxp, Ap, kind).has_value();
        bool rhs = mask0[ctx0.index_of(proj(Ap))];
        ++checked;
        if (lhs != rhs) {
          body = fail(checked, "membership over the series quotient differs at x = 0",
                      to_literal(rp, Ap));
          break;
        }
      }
      if (body.status == CheckStatus::Pass) body = pass(checked, note);
      else body.detail += "; " + note;
    } else {  // L2.17
      const auto& um0 = ctx0.unit_mask();
      const RingAnalysis& anp = analysis(rp);
      const auto& us = ctxp.units();
      const auto& inv = ctxp.unit_inverses();
      FMatrix I0 = ctx0.identity();
      std::uint64_t checked = 0;
      body = pass(0);
      for (std::uint64_t idx : indices) {
        FMatrix Ap = ctxp.at(idx);
        FMatrix A0 = proj(Ap);
        std::uint64_t i0 = ctx0.index_of(A0);
        if (um0[i0] || um0[ctx0.index_of(ctx0.sub(I0, A0))]) continue;
        auto f0 = find_standard_form(ctx0, A0);
        if (!f0) {
          body = fail(checked, "constant term has no standard form", to_literal(r, A0));
          break;
        }
        bool found = false;
        for (std::size_t i = 0; i < us.size() && !found; ++i) {
          FMatrix D = ctxp.mul(inv[i], ctxp.mul(Ap, us[i]));
          if (!(D.b == rp.one()) || !anp.units.contains(D.c)) continue;
          if (sv.at_zero(D.c) != f0->v) continue;
          if (f0->orientation == 1) {
            found = anp.one_plus_j.contains(D.a) && anp.jacobson.contains(D.d) &&
                    sv.at_zero(D.a) == f0->u && sv.at_zero(D.d) == f0->w;
          } else {
            found = anp.jacobson.contains(D.a) && anp.one_plus_j.contains(D.d) &&
                    sv.at_zero(D.a) == f0->w && sv.at_zero(D.d) == f0->u;
          }
        }
        if (!found) {
          body = fail(checked, "no lifted standard form matches the constant-term form",
                      to_literal(rp, Ap));
          break;
        }
        ++checked;
      }
      if (body.status == CheckStatus::Pass) body = pass(checked, note);
      else body.detail += "; " + note;
    }

    rep.status = body.status;
    rep.detail = body.detail;
    rep.counterexample = body.counterexample;
    rep.checked = body.checked;
    rep.sampled = !exhaustive;
  } catch (const hypothesis_error& e) {
    rep.status = CheckStatus::HypothesesNotMet;
    rep.detail = e.what();
  } catch (const check_violation& e) {
    rep.status = CheckStatus::Fail;
    rep.detail = e.what();
  }
  rep.elapsed_ms = sw.ms();
  return rep;
}

std::vector<CheckReport> SuiteEngine::run_all() {
  std::vector<CheckReport> out;
  std::vector<const FiniteRing*> snapshot = ring_ptrs_;
  for (const FiniteRing* r : snapshot) {
    const RingAnalysis& an = analysis(*r);
    for (Elem s = 0; s < r->size(); ++s) {
      if (!an.center.contains(s)) continue;
      for (const std::string& id : check_ids()) out.push_back(run_check(id, *r, s));
    }
  }
  return out;
}

CensusRow SuiteEngine::census(const FiniteRing& r, Elem s) {
  CtxEntry& e = entry(r, s);
  build_oracle_masks(e);
  FmContext& ctx = *e.ctx;
  CensusRow row;
  row.ring = r.label();
  row.s = r.name_of(s);
  row.total = ctx.total();
  row.units = popcount(ctx.unit_mask());
  row.idempotents = popcount(ctx.idempotent_mask());
  row.jacobson = popcount(ctx.jacobson_mask());
  row.sc = popcount(e.masks[int(CleanKind::StronglyClean)]);
  row.sjc = popcount(e.masks[int(CleanKind::StronglyJClean)]);
  row.snc = popcount(e.masks[int(CleanKind::StronglyNilClean)]);
  return row;
}

}  // namespace jclean
