#ifndef JCLEAN_H
#define JCLEAN_H

/* C surface for the finite-ring / twisted 2x2 formal matrix toolkit.
 * Handles are opaque; every string output is malloc'd JSON (or CSV) and
 * must be released with jc_string_free. A ring must outlive the contexts
 * created from it. Calls are thread-safe as long as each handle is used
 * from one thread at a time. */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum jc_status {
  JC_OK = 0,
  JC_CHECK_FAILED = 1,
  JC_INPUT_ERROR = 2,
  JC_HYPOTHESIS_ERROR = 3,
  JC_CAP_EXCEEDED = 4,
  JC_INTERNAL_ERROR = 5
} jc_status;

typedef struct jc_ring jc_ring;
typedef struct jc_context jc_context;

/* Resource caps as "key=value,..." with keys: axiom, analysis, enum,
 * similarity, sample, seed, precision, series-exhaustive. Applies on top of
 * the JCLEAN_CAPS environment variable and affects later constructions. */
jc_status jc_set_caps(const char* caps);

/* spec_json: {"kind": "modular-integers" | "quotient-polynomial" |
 * "explicit-tables" | "truncated-power-series", ...}. The ring is
 * axiom-checked on construction. */
jc_status jc_ring_from_json(const char* spec_json, jc_ring** out);
jc_status jc_ring_from_catalog(const char* name, jc_ring** out);
void jc_ring_free(jc_ring* ring);

unsigned jc_ring_size(const jc_ring* ring);

/* Units, radical, idempotents, nilpotents, center, locality, bleaching. */
jc_status jc_ring_analysis(jc_ring* ring, char** out_json);

/* J_s(R) = {x : s*x in J(R)} for a central s (name or decimal index). */
jc_status jc_ring_j_s(jc_ring* ring, const char* s, char** out_json);

/* s as element name or decimal index; must be central. */
jc_status jc_context_new(jc_ring* ring, const char* s, jc_context** out);
void jc_context_free(jc_context* ctx);

/* matrix: "[[a,b],[c,d]]" or {"a":..,"b":..,"c":..,"d":..}, entries as names
 * or indices. kind: sjc | sc | snc (long forms accepted). method: oracle |
 * auto. verify != 0 cross-checks the oracle and records the agreement; a
 * disagreement sets *out_json and returns JC_CHECK_FAILED. A decided
 * "absent" is JC_OK. Every success certificate is re-verified by
 * multiplication before it is emitted. */
jc_status jc_decide(jc_context* ctx, const char* matrix, const char* kind,
                    const char* method, int verify, char** out_json);

/* check_id: "T2.1" .. "T3.6". The report JSON is always written when the
 * check runs; pass and hypotheses-not-met return JC_OK, a failed check
 * returns JC_CHECK_FAILED. */
jc_status jc_run_check(jc_context* ctx, const char* check_id, char** out_json);

/* One CSV row of oracle counts for this context. */
jc_status jc_census(jc_context* ctx, char** out_csv);
const char* jc_census_header(void);

jc_status jc_catalog(char** out_json);

/* JSON array of the suite check identifiers, in canonical order. */
jc_status jc_check_ids(char** out_json);

/* Message for the most recent failing call on this thread. */
const char* jc_last_error(void);

void jc_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
