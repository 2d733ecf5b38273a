#include "jclean.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include <json.hpp>

#include "catalog.hpp"
#include "cleanness.hpp"
#include "json_io.hpp"
#include "theorem_suite.hpp"

using namespace jclean;

struct jc_ring {
  FiniteRing ring;
};

struct jc_context {
  jc_ring* ring = nullptr;  // borrowed
  Elem s = 0;
  SuiteEngine engine;

  explicit jc_context(Caps caps) : engine(caps) {}
};

namespace {

thread_local std::string g_error;
Caps g_caps = Caps::from_env();

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

template <typename F>
jc_status guarded(F&& body) {
  try {
    return body();
  } catch (const check_violation& e) {
    g_error = e.what();
    return JC_CHECK_FAILED;
  } catch (const hypothesis_error& e) {
    g_error = e.what();
    return JC_HYPOTHESIS_ERROR;
  } catch (const cap_error& e) {
    g_error = e.what();
    return JC_CAP_EXCEEDED;
  } catch (const input_error& e) {
    g_error = e.what();
    return JC_INPUT_ERROR;
  } catch (const std::exception& e) {
    g_error = e.what();
    return JC_INTERNAL_ERROR;
  }
}

Elem parse_elem(const FiniteRing& r, const char* text) {
  if (!text) throw input_error("element: null");
  std::string t(text);
  if (auto e = r.find_name(t)) return *e;
  if (!t.empty() && t.find_first_not_of("0123456789") == std::string::npos) {
    unsigned long v = std::stoul(t);
    if (v < r.size()) return static_cast<Elem>(v);
  }
  throw input_error("element '" + t + "' is neither a name nor an index in " + r.label());
}

CleanKind parse_kind(const char* kind) {
  std::string k = kind ? kind : "";
  if (k == "sc" || k == "strongly-clean") return CleanKind::StronglyClean;
  if (k == "sjc" || k == "strongly-J-clean") return CleanKind::StronglyJClean;
  if (k == "snc" || k == "strongly-nil-clean") return CleanKind::StronglyNilClean;
  throw input_error("kind must be sc, sjc or snc");
}

jc_status ring_out(FiniteRing r, jc_ring** out) {
  AxiomReport rep = verify_ring_axioms(r, g_caps);
  if (!rep.ok) {
    const AxiomViolation& v = rep.violations.front();
    throw input_error("ring " + r.label() + " violates " + v.law + ": " + v.detail);
  }
  *out = new jc_ring{std::move(r)};
  return JC_OK;
}

}  // namespace

extern "C" {

jc_status jc_set_caps(const char* caps) {
  return guarded([&]() -> jc_status {
    Caps next = g_caps;
    next.apply(caps ? caps : "");
    g_caps = next;
    return JC_OK;
  });
}

jc_status jc_ring_from_json(const char* spec_json, jc_ring** out) {
  return guarded([&]() -> jc_status {
    if (!spec_json || !out) throw input_error("jc_ring_from_json: null argument");
    return ring_out(FiniteRing::build(ring_spec_from_json(spec_json)), out);
  });
}

jc_status jc_ring_from_catalog(const char* name, jc_ring** out) {
  return guarded([&]() -> jc_status {
    if (!name || !out) throw input_error("jc_ring_from_catalog: null argument");
    FiniteRing r = FiniteRing::build(catalog_spec(name));
    r.set_label(name);
    return ring_out(std::move(r), out);
  });
}

void jc_ring_free(jc_ring* ring) { delete ring; }

unsigned jc_ring_size(const jc_ring* ring) { return ring ? ring->ring.size() : 0; }

jc_status jc_ring_analysis(jc_ring* ring, char** out_json) {
  return guarded([&]() -> jc_status {
    if (!ring || !out_json) throw input_error("jc_ring_analysis: null argument");
    RingAnalysis an = analyze(ring->ring, g_caps);
    *out_json = dup_string(analysis_to_json(ring->ring, an));
    return JC_OK;
  });
}

jc_status jc_ring_j_s(jc_ring* ring, const char* s, char** out_json) {
  return guarded([&]() -> jc_status {
    if (!ring || !s || !out_json) throw input_error("jc_ring_j_s: null argument");
    const FiniteRing& r = ring->ring;
    Elem se = parse_elem(r, s);
    RingAnalysis an = analyze(r, g_caps);
    ElemSet js = j_s_set(r, an, se);
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["ring"] = r.label();
    j["s"] = r.name_of(se);
    auto names = nlohmann::ordered_json::array();
    for (Elem x : js.items) names.push_back(r.name_of(x));
    j["j_s"] = names;
    *out_json = dup_string(j.dump(2));
    return JC_OK;
  });
}

jc_status jc_context_new(jc_ring* ring, const char* s, jc_context** out) {
  return guarded([&]() -> jc_status {
    if (!ring || !s || !out) throw input_error("jc_context_new: null argument");
    auto ctx = std::make_unique<jc_context>(g_caps);
    ctx->ring = ring;
    ctx->s = parse_elem(ring->ring, s);
    ctx->engine.context(ring->ring, ctx->s);  // surfaces range/centrality errors now
    *out = ctx.release();
    return JC_OK;
  });
}

void jc_context_free(jc_context* ctx) { delete ctx; }

jc_status jc_decide(jc_context* ctx, const char* matrix, const char* kind, const char* method,
                    int verify, char** out_json) {
  return guarded([&]() -> jc_status {
    if (!ctx || !matrix || !kind || !out_json) throw input_error("jc_decide: null argument");
    const FiniteRing& r = ctx->ring->ring;
    FMatrix A = matrix_from_text(r, matrix);
    CleanKind ck = parse_kind(kind);
    std::string m = method ? method : "oracle";
    FmContext& fm = ctx->engine.context(r, ctx->s);
    const RingAnalysis& an = ctx->engine.analysis(r);

    std::optional<CleanCertificate> cert;
    std::string decided_by;
    if (m == "oracle") {
      cert = oracle_decide(fm, A, ck);
      decided_by = "oracle";
    } else if (m == "auto") {
      bool s_in_j = an.jacobson.contains(ctx->s);
      switch (ck) {
        case CleanKind::StronglyJClean:
          if (an.commutative && an.local) {
            cert = decide_sjc_commutative(fm, A);
            decided_by = "thm-3.6";
          } else if (an.local && s_in_j) {
            cert = decide_sjc_radical_s(fm, A);
            decided_by = "thm-2.16";
          } else if (an.local) {
            cert = decide_sjc(fm, A);
            decided_by = "lemma-2.8";
          } else {
            cert = oracle_decide(fm, A, ck);
            decided_by = "oracle";
          }
          break;
        case CleanKind::StronglyClean:
          if (an.local) {
            cert = decide_sc(fm, A);
            decided_by = "thm-2.13";
          } else {
            cert = oracle_decide(fm, A, ck);
            decided_by = "oracle";
          }
          break;
        case CleanKind::StronglyNilClean:
          if (an.local) {
            cert = decide_snc(fm, A);
            decided_by = "lemma-2.9";
          } else {
            cert = oracle_decide(fm, A, ck);
            decided_by = "oracle";
          }
          break;
      }
    } else {
      throw input_error("method must be oracle or auto");
    }

    if (cert) {
      VerifyResult vr = verify_certificate(fm, A, *cert);
      if (!vr.ok) throw check_violation("certificate failed re-verification: " + vr.reason);
    }

    std::optional<bool> agrees;
    if (verify) {
      bool oracle = oracle_decide(fm, A, ck).has_value();
      agrees = oracle == cert.has_value();
    }
    *out_json = dup_string(verdict_to_json(fm, A, ck, decided_by, cert, agrees));
    if (agrees && !*agrees) {
      g_error = "method " + decided_by + " disagrees with the oracle";
      return JC_CHECK_FAILED;
    }
    return JC_OK;
  });
}

jc_status jc_run_check(jc_context* ctx, const char* check_id, char** out_json) {
  return guarded([&]() -> jc_status {
    if (!ctx || !check_id || !out_json) throw input_error("jc_run_check: null argument");
    CheckReport rep = ctx->engine.run_check(check_id, ctx->ring->ring, ctx->s);
    *out_json = dup_string(report_to_json(rep));
    if (rep.status == CheckStatus::Fail) {
      g_error = "check " + rep.check + " failed: " + rep.detail;
      return JC_CHECK_FAILED;
    }
    return JC_OK;
  });
}

jc_status jc_census(jc_context* ctx, char** out_csv) {
  return guarded([&]() -> jc_status {
    if (!ctx || !out_csv) throw input_error("jc_census: null argument");
    CensusRow row = ctx->engine.census(ctx->ring->ring, ctx->s);
    *out_csv = dup_string(census_row_csv(row));
    return JC_OK;
  });
}

const char* jc_census_header(void) { return "ring,s,total,units,idempotents,jacobson,sc,sjc,snc"; }

jc_status jc_catalog(char** out_json) {
  return guarded([&]() -> jc_status {
    if (!out_json) throw input_error("jc_catalog: null argument");
    *out_json = dup_string(catalog_to_json());
    return JC_OK;
  });
}

jc_status jc_check_ids(char** out_json) {
  return guarded([&]() -> jc_status {
    if (!out_json) throw input_error("jc_check_ids: null argument");
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const std::string& id : SuiteEngine::check_ids()) j.push_back(id);
    *out_json = dup_string(j.dump());
    return JC_OK;
  });
}

const char* jc_last_error(void) { return g_error.c_str(); }

void jc_string_free(char* s) { std::free(s); }

}  // extern "C"
