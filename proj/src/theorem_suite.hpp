#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "cleanness.hpp"
#include "formal_matrix.hpp"

namespace jclean {

enum class CheckStatus { Pass, Fail, HypothesesNotMet };

const char* check_status_name(CheckStatus s);

struct CheckReport {
  std::string check;
  std::string ring;
  std::string s;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
  std::string counterexample;
  std::uint64_t checked = 0;
  bool sampled = false;
  double elapsed_ms = 0;
};

struct CensusRow {
  std::string ring;
  std::string s;
  std::uint64_t total = 0, units = 0, idempotents = 0, jacobson = 0, sc = 0, sjc = 0, snc = 0;
};

class SuiteEngine {
 public:
  explicit SuiteEngine(Caps caps) : caps_(caps) {}

  // Builds, axiom-verifies and registers a ring. input_error on axiom failure.
  const FiniteRing& add_ring(const RingSpec& spec);
  const std::vector<const FiniteRing*>& rings() const { return ring_ptrs_; }

  const RingAnalysis& analysis(const FiniteRing& r);
  FmContext& context(const FiniteRing& r, Elem s);

  // Oracle membership over all matrices, cached per context.
  const std::vector<char>& oracle_mask(const FiniteRing& r, Elem s, CleanKind kind);

  static const std::vector<std::string>& check_ids();

  CheckReport run_check(const std::string& id, const FiniteRing& r, Elem s);
  // Series lift checks with an explicit precision; id is L2.17, T2.18 or C2.19.
  CheckReport lift_check(const std::string& id, const FiniteRing& r, Elem s, std::uint32_t N);
  std::vector<CheckReport> run_all();

  CensusRow census(const FiniteRing& r, Elem s);

  const Caps& caps() const { return caps_; }

 private:
  struct CtxEntry {
    std::unique_ptr<FmContext> ctx;
    std::vector<char> masks[3];  // indexed by CleanKind
  };

  CtxEntry& entry(const FiniteRing& r, Elem s);
  void build_oracle_masks(CtxEntry& e);
  std::uint32_t adaptive_precision(const FiniteRing& r) const;
  const FiniteRing& series_ring(const FiniteRing& base, std::uint32_t N);

  CheckReport check_t21(FmContext& ctx);
  CheckReport check_l22(FmContext& ctx);
  CheckReport check_e23(const FiniteRing& r, Elem s);
  CheckReport check_l24(const FiniteRing& r, Elem s);
  CheckReport check_l25(const FiniteRing& r, Elem s);
  CheckReport check_l26(FmContext& ctx);
  CheckReport check_l27(FmContext& ctx);
  CheckReport check_l28(const FiniteRing& r, Elem s);
  CheckReport check_l29(const FiniteRing& r, Elem s);
  CheckReport check_c210(const FiniteRing& r, Elem s);
  CheckReport check_l211(const FiniteRing& r, Elem s);
  CheckReport check_c212(const FiniteRing& r, Elem s);
  CheckReport check_t213(const FiniteRing& r, Elem s);
  CheckReport check_p214(const FiniteRing& r, Elem s);
  CheckReport check_l215(FmContext& ctx);
  CheckReport check_t216(const FiniteRing& r, Elem s);
  CheckReport check_l31(FmContext& ctx);
  CheckReport check_p32(const FiniteRing& r, Elem s);
  CheckReport check_p33(const FiniteRing& r, Elem s);
  CheckReport check_r34(const FiniteRing& r, Elem s);
  CheckReport check_l35(const FiniteRing& r, Elem s);
  CheckReport check_t36(const FiniteRing& r, Elem s);

  Caps caps_;
  std::vector<std::unique_ptr<FiniteRing>> rings_;
  std::vector<const FiniteRing*> ring_ptrs_;
  std::vector<std::unique_ptr<FiniteRing>> aux_rings_;  // series quotients
  std::map<std::pair<const FiniteRing*, std::uint32_t>, const FiniteRing*> series_cache_;
  std::map<const FiniteRing*, RingAnalysis> analyses_;
  std::map<std::pair<const FiniteRing*, Elem>, CtxEntry> ctxs_;
};

}  // namespace jclean
