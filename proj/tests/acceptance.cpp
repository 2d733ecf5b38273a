// Acceptance gate: one pass/fail line per criterion, exit 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "cleanness.hpp"
#include "theorem_suite.hpp"

using namespace jclean;

namespace {

struct Gate {
  SuiteEngine eng{Caps{}};
  std::vector<std::unique_ptr<FiniteRing>> rings;
  std::uint64_t certs_seen = 0, certs_verified = 0;
  bool all_ok = true;

  const FiniteRing& ring(const char* name) {
    for (const auto& r : rings)
      if (r->label() == name) return *r;
    auto r = std::make_unique<FiniteRing>(FiniteRing::build(catalog_spec(name)));
    r->set_label(name);
    rings.push_back(std::move(r));
    return *rings.back();
  }

  std::vector<Elem> central(const FiniteRing& r) { return eng.analysis(r).center.items; }

  void verify(FmContext& ctx, const FMatrix& A, const CleanCertificate& cert) {
    ++certs_seen;
    certs_verified += verify_certificate(ctx, A, cert).ok;
  }

  void report(int n, bool ok, const std::string& text) {
    all_ok = all_ok && ok;
    std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", n, text.c_str());
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void criterion1(Gate& g) {
  std::uint64_t contexts = 0, matrices = 0;
  double worst_ms = 0;
  for (const auto& e : catalog_entries()) {
    const FiniteRing& r = g.ring(e.name.c_str());
    if (r.size() > 9) continue;
    for (Elem s : g.central(r)) {
      CheckReport rep = g.eng.run_check("T2.1", r, s);
      if (rep.status != CheckStatus::Pass) {
        g.report(1, false, "radical pattern mismatch on " + rep.ring + " s=" + rep.s + ": " +
                               rep.detail);
        return;
      }
      worst_ms = std::max(worst_ms, rep.elapsed_ms);
      ++contexts;
      matrices += rep.checked;
    }
  }
  g.report(1, worst_ms < 10000.0,
           "radical formula holds on " + std::to_string(contexts) + " contexts, " +
               std::to_string(matrices) + " matrices, worst " + std::to_string(worst_ms) +
               " ms per context");
}

void criterion2(Gate& g) {
  auto t0 = std::chrono::steady_clock::now();
  std::uint64_t decisions = 0;
  for (const char* name : {"z4", "z8", "z9", "f2t2", "f4", "z2", "z3"}) {
    const FiniteRing& r = g.ring(name);
    for (Elem s : g.central(r)) {
      FmContext& ctx = g.eng.context(r, s);
      const auto& sjc = g.eng.oracle_mask(r, s, CleanKind::StronglyJClean);
      bool s_in_j = g.eng.analysis(r).jacobson.contains(s);
      for (std::uint64_t idx = 0; idx < ctx.total(); ++idx) {
        FMatrix A = ctx.at(idx);
        auto general = decide_sjc(ctx, A);
        auto comm = decide_sjc_commutative(ctx, A);
        bool want = sjc[idx] != 0;
        if (general.has_value() != want || comm.has_value() != want) {
          g.report(2, false, std::string("decider disagrees with the oracle on ") + name +
                                 " s=" + r.name_of(s) + " at " + to_literal(r, A));
          return;
        }
        if (general) g.verify(ctx, A, *general);
        if (comm) g.verify(ctx, A, *comm);
        decisions += 2;
        if (s_in_j) {
          auto rad = decide_sjc_radical_s(ctx, A);
          if (rad.has_value() != want) {
            g.report(2, false, std::string("radical-s decider disagrees on ") + name +
                                   " s=" + r.name_of(s) + " at " + to_literal(r, A));
            return;
          }
          if (rad) g.verify(ctx, A, *rad);
          ++decisions;
        }
      }
    }
  }
  double t = seconds_since(t0);
  g.report(2, t < 300.0,
           std::to_string(decisions) + " theorem-path decisions agree with the oracle in " +
               std::to_string(t) + " s");
}

void criterion3(Gate& g) {
  std::uint64_t matrices = 0;
  for (const auto& e : catalog_entries()) {
    const FiniteRing& r = g.ring(e.name.c_str());
    for (Elem s : g.central(r)) {
      CheckReport rep = g.eng.run_check("T2.13", r, s);
      if (rep.status != CheckStatus::Pass) {
        g.report(3, false, "clean equivalence fails on " + rep.ring + " s=" + rep.s);
        return;
      }
      matrices += rep.checked;
    }
  }
  g.report(3, true,
           "strongly clean == unit or complement-unit or strongly J-clean on " +
               std::to_string(matrices) + " matrices");
}

void criterion4(Gate& g) {
  std::uint64_t contexts = 0;
  for (const auto& e : catalog_entries()) {
    const FiniteRing& r = g.ring(e.name.c_str());
    const RingAnalysis& an = g.eng.analysis(r);
    if (!an.commutative || !an.local) continue;
    for (Elem s : g.central(r)) {
      if (!an.units.contains(s)) continue;
      FmContext& ctx = g.eng.context(r, s);
      const auto& sjc = g.eng.oracle_mask(r, s, CleanKind::StronglyJClean);
      FMatrix witness{r.one(), r.one(), r.one(), r.zero()};
      if (sjc[ctx.index_of(witness)]) {
        g.report(4, false, "[[1,1],[1,0]] decided strongly J-clean on " + r.label() +
                               " s=" + r.name_of(s));
        return;
      }
      std::uint64_t members = 0;
      for (char m : sjc) members += m;
      if (members == ctx.total()) {
        g.report(4, false, "no non-member exists on " + r.label() + " s=" + r.name_of(s));
        return;
      }
      ++contexts;
    }
  }
  CensusRow row = g.eng.census(g.ring("z2"), 1);
  if (row.sjc != 8) {
    g.report(4, false, "M_2(Z/2;1) strongly J-clean count is " + std::to_string(row.sjc) +
                           ", expected 8");
    return;
  }
  g.report(4, true,
           "witness excluded on " + std::to_string(contexts) +
               " unit-s contexts; M_2(Z/2;1) has exactly 8 strongly J-clean elements");
}

void criterion5(Gate& g) {
  std::uint64_t matrices = 0;
  for (const char* name : {"z4", "f2t2"}) {
    const FiniteRing& r = g.ring(name);
    for (Elem s : g.central(r)) {
      CheckReport rep = g.eng.run_check("T3.6", r, s);
      if (rep.status != CheckStatus::Pass) {
        g.report(5, false, "characteristic-polynomial criterion fails on " + rep.ring +
                               " s=" + rep.s + ": " + rep.detail);
        return;
      }
      matrices += rep.checked;
    }
  }
  g.report(5, true,
           "characteristic-polynomial criterion matches the oracle on " +
               std::to_string(matrices) + " matrices");
}

void criterion6(Gate& g) {
  auto t0 = std::chrono::steady_clock::now();
  const FiniteRing& r = g.ring("twist");
  FmContext& ctx = g.eng.context(r, 0);
  const auto& sjc = g.eng.oracle_mask(r, 0, CleanKind::StronglyJClean);
  for (std::uint64_t idx = 0; idx < ctx.total(); ++idx) {
    FMatrix A = ctx.at(idx);
    auto cert = decide_sjc_radical_s(ctx, A);
    if (cert.has_value() != (sjc[idx] != 0)) {
      g.report(6, false, "quadratic criterion disagrees with the oracle at " + to_literal(r, A));
      return;
    }
    if (cert) g.verify(ctx, A, *cert);
  }
  double t = seconds_since(t0);
  g.report(6, t < 600.0,
           "noncommutative quadratic criterion matches the oracle on 65536 matrices in " +
               std::to_string(t) + " s");
}

void criterion7(Gate& g) {
  const char* ids[] = {"L2.6", "L2.7", "L3.1", "L3.5", "P3.2", "P3.3", "E2.3", "L2.4", "L2.5"};
  std::uint64_t passes = 0;
  bool sampled_large = false;
  for (const char* id : ids) {
    bool ran = false;
    for (const auto& e : catalog_entries()) {
      const FiniteRing& r = g.ring(e.name.c_str());
      for (Elem s : g.central(r)) {
        CheckReport rep = g.eng.run_check(id, r, s);
        if (rep.status == CheckStatus::Fail) {
          g.report(7, false, std::string(id) + " fails on " + rep.ring + " s=" + rep.s + ": " +
                                 rep.detail);
          return;
        }
        if (rep.status == CheckStatus::Pass) {
          ran = true;
          ++passes;
          if (std::string(id) == "L2.5" && r.size() == 16 && rep.sampled && rep.checked >= 2000)
            sampled_large = true;
        }
      }
    }
    if (!ran) {
      g.report(7, false, std::string(id) + " never ran on the catalog");
      return;
    }
  }
  g.report(7, sampled_large,
           std::to_string(passes) +
               " structural check runs pass; conjugation invariance sampled at |R|=16");
}

void criterion8(Gate& g) {
  const FiniteRing& z2 = g.ring("z2");
  const FiniteRing& z4 = g.ring("z4");
  for (const char* id : {"T2.18", "C2.19"}) {
    CheckReport small = g.eng.lift_check(id, z2, 1, 2);
    if (small.status != CheckStatus::Pass || small.sampled || small.checked != 256) {
      g.report(8, false, std::string(id) + " on Z/2 at precision 2: " + small.detail);
      return;
    }
    CheckReport big = g.eng.lift_check(id, z4, 1, 2);
    if (big.status != CheckStatus::Pass || !big.sampled || big.checked < 2000) {
      g.report(8, false, std::string(id) + " on Z/4 at precision 2: " + big.detail);
      return;
    }
  }
  g.report(8, true,
           "series lifting holds: Z/2 precision 2 exhaustive (256), Z/4 precision 2 sampled "
           "(2000, seed 0)");
}

void criterion9(Gate& g) {
  struct Target {
    const char* name;
    Elem s;
  } targets[] = {{"z4", 1}, {"z4", 2}, {"z2", 1}, {"f2t2", 1}};
  for (const Target& t : targets) {
    const FiniteRing& r = g.ring(t.name);
    FmContext& ctx = g.eng.context(r, t.s);
    bool s_in_j = g.eng.analysis(r).jacobson.contains(t.s);
    for (std::uint64_t idx = 0; idx < ctx.total(); ++idx) {
      FMatrix A = ctx.at(idx);
      for (CleanKind kind :
           {CleanKind::StronglyClean, CleanKind::StronglyJClean, CleanKind::StronglyNilClean}) {
        if (auto c = oracle_decide(ctx, A, kind)) g.verify(ctx, A, *c);
      }
      if (auto c = decide_sc(ctx, A)) g.verify(ctx, A, *c);
      if (auto c = decide_sjc(ctx, A)) g.verify(ctx, A, *c);
      if (auto c = decide_snc(ctx, A)) g.verify(ctx, A, *c);
      if (auto c = decide_sjc_commutative(ctx, A)) g.verify(ctx, A, *c);
      if (s_in_j) {
        if (auto c = decide_sjc_radical_s(ctx, A)) g.verify(ctx, A, *c);
      }
    }
  }
  bool ok = g.certs_seen > 0 && g.certs_verified == g.certs_seen;
  g.report(9, ok,
           std::to_string(g.certs_verified) + " of " + std::to_string(g.certs_seen) +
               " success certificates re-verify by multiplication");
}

}  // namespace

int main() {
  Gate g;
  criterion1(g);
  criterion2(g);
  criterion3(g);
  criterion4(g);
  criterion5(g);
  criterion6(g);
  criterion7(g);
  criterion8(g);
  criterion9(g);
  return g.all_ok ? 0 : 1;
}
