#ifndef FINLANG_FINLANG_H_
#define FINLANG_FINLANG_H_

/* Counting engine for irreducible characters of finite reductive groups,
 * computed two ways (dual-side L-parameters and group-side cell strata) and
 * checked against brute-force class counts.
 *
 * Handles are opaque.  Every call returns a status; on failure
 * flc_last_error() describes the problem (thread-local, valid until the next
 * failing call on the same thread). */

#include <stddef.h>
#include <stdint.h>

#if defined(__GNUC__)
#define FLC_API __attribute__((visibility("default")))
#else
#define FLC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum flc_status {
  FLC_OK = 0,
  FLC_ERR_ARGUMENT = 1,    /* null pointer or bad enum value */
  FLC_ERR_CONFIG = 2,      /* malformed or invalid group description */
  FLC_ERR_UNSUPPORTED = 3, /* type, isogeny or size outside the supported range */
  FLC_ERR_INTERNAL = 4,    /* an internal consistency check failed */
  FLC_ERR_MISMATCH = 5     /* compare: counts disagree (a report is still produced) */
} flc_status;

typedef enum flc_pipeline {
  FLC_PIPELINE_AUTO = 0,
  FLC_PIPELINE_SPECTRAL = 1,
  FLC_PIPELINE_STRATIFIED = 2,
  FLC_PIPELINE_BOTH = 3
} flc_pipeline;

typedef struct flc_group flc_group;
typedef struct flc_report flc_report;

/* Group from "key = value" text.  q_override > 0 replaces the q key. */
FLC_API flc_status flc_group_parse(const char* text, int64_t q_override, flc_group** out);
/* Named shortcut: sl2 gl2 pgl2 sl3 gl3 pgl3 sp4 so5 g2 torus1 o2. */
FLC_API flc_status flc_group_named(const char* name, int64_t q, flc_group** out);
FLC_API void flc_group_free(flc_group* g);
FLC_API flc_status flc_group_is_connected(const flc_group* g, int* out);
FLC_API flc_status flc_whittaker_torsor_size(const flc_group* g, int64_t* out);

/* seed may be null for canonical choices. */
FLC_API flc_status flc_count(const flc_group* g, flc_pipeline p, const uint64_t* seed, flc_report** out);
/* As flc_count plus the oracle.  Returns FLC_ERR_MISMATCH with *out set when
 * the counts disagree. */
FLC_API flc_status flc_compare(const flc_group* g, flc_pipeline p, const uint64_t* seed, flc_report** out);

FLC_API flc_status flc_report_total(const flc_report* r, int64_t* out);
/* JSON text owned by the report. */
FLC_API flc_status flc_report_json(const flc_report* r, const char** out);
/* 1 match, 0 mismatch, -1 when no oracle ran. */
FLC_API flc_status flc_report_match(const flc_report* r, int* out);
FLC_API void flc_report_free(flc_report* r);

/* Dumps; release *out with flc_string_free. */
FLC_API flc_status flc_cells_report(const char* type, char** out);
FLC_API flc_status flc_tables_report(const char* type, char** out);
FLC_API flc_status flc_oracle_report(const char* name, int64_t q, char** out);
FLC_API void flc_string_free(char* s);

FLC_API const char* flc_last_error(void);

#ifdef __cplusplus
}
#endif

#endif /* FINLANG_FINLANG_H_ */
