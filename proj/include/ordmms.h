#ifndef ORDMMS_H
#define ORDMMS_H

/* C interface to the ordinal maximin-share solver. All functions return an
 * error code; results come back through out-parameters. Strings returned via
 * char** are heap-allocated and must be released with ordmms_string_free. */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define ORDMMS_OK 0
#define ORDMMS_ERR_INVALID 1   /* bad argument or malformed input */
#define ORDMMS_ERR_TOO_LARGE 2 /* exceeds an exact-computation size cap */
#define ORDMMS_ERR_CONTRACT 3  /* internal guarantee failed to hold */
#define ORDMMS_ERR_NOMEM 4

typedef struct ordmms_instance ordmms_instance;

/* Last error detail for the calling thread; valid until the next call. */
const char* ordmms_last_error(void);

void ordmms_string_free(char* s);

/* values is row-major: values[i*m + g] is agent i's value for good g. */
int ordmms_instance_create(int n, int m, const int64_t* values,
                           ordmms_instance** out);
/* JSON schema: {"n": int, "m": int, "values": [[int, ...], ...]} */
int ordmms_instance_from_json(const char* json, ordmms_instance** out);
int ordmms_instance_to_json(const ordmms_instance* inst, char** json_out);
int ordmms_fixture(const char* name, ordmms_instance** out);
int ordmms_fixture_names(char** json_out); /* JSON array of names */
void ordmms_instance_free(ordmms_instance* inst);

int ordmms_instance_n(const ordmms_instance* inst);
int ordmms_instance_m(const ordmms_instance* inst);

/* Exact l-out-of-d maximin share of one agent, as a reduced fraction. */
int ordmms_mms(const ordmms_instance* inst, int agent, int ell, int d,
               int good_cap, int64_t* num, int64_t* den);

/* l-out-of-floor((l+1/2)n) MMS allocation. greedy_thresholds != 0 swaps the
 * exact per-agent MMS oracle for the greedy lower bound (no size cap).
 * JSON: {"ell", "d", "shares" (fractions as strings), "bundles",
 *        "unallocated", "values"} */
int ordmms_solve(const ordmms_instance* inst, int ell, int greedy_thresholds,
                 int good_cap, char** json_out);

/* 1-out-of-ceil(3n/2) MMS allocation via bidirectional bag filling.
 * JSON: {"thresholds", "bundles", "unallocated", "values",
 *        "prefix_invariant_held"} */
int ordmms_bbfs(const ordmms_instance* inst, char** json_out);

/* ok becomes 1 when the two-agent construction defeats every bipartition. */
int ordmms_verify_responsive(int d, int* ok);

/* experiment: "ordinal" | "thresholds-individual" | "thresholds-common".
 * dist_spec: "uniform:LO:HI" | "geometric:MEAN".
 * ells may be NULL for the threshold experiments.
 * svg_out may be NULL when no plot is wanted. */
int ordmms_simulate(const char* experiment, const char* dist_spec, int trials,
                    uint64_t seed, const int* ns, int ns_len, const int* ms,
                    int ms_len, const int* ells, int ells_len, char** csv_out,
                    char** svg_out);

#ifdef __cplusplus
}
#endif

#endif
