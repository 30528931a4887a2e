/* C interface to libedcalc. Every handle is opaque and owned by the caller
 * until passed to the matching *_free. Strings returned by accessors live as
 * long as their handle. */
#ifndef EDCALC_H
#define EDCALC_H

#include <stdint.h>

#if defined(_WIN32)
#define EDCALC_API __declspec(dllexport)
#else
#define EDCALC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values match the command-line exit codes. */
typedef enum edcalc_status {
  EDCALC_OK = 0,
  EDCALC_DISAGREE = 1,
  EDCALC_ERR_PARSE = 2,
  EDCALC_ERR_VALIDATION = 3,
  EDCALC_ERR_CAP = 4,
  EDCALC_ERR_CERTIFICATE = 5,
  EDCALC_ERR_INTERNAL = 6
} edcalc_status;

typedef struct edcalc_options {
  uint64_t basis_cap; /* bases tried for the upper bound */
  uint64_t enum_cap;  /* closure elements; also 2^(max enumerable dim R) */
} edcalc_options;

typedef struct edcalc_spec edcalc_spec;
typedef struct edcalc_report edcalc_report;
typedef struct edcalc_oracle edcalc_oracle;
typedef struct edcalc_cert edcalc_cert;

EDCALC_API const char* edcalc_version(void);
EDCALC_API void edcalc_options_init(edcalc_options* opts);
/* Message of the last failing call on this thread, "" if none. */
EDCALC_API const char* edcalc_last_error(void);

/* Schema checks only (EDCALC_ERR_PARSE); semantic checks run in compute. */
EDCALC_API edcalc_status edcalc_spec_parse(const char* json, edcalc_spec** out);
EDCALC_API int edcalc_spec_factor_count(const edcalc_spec* spec);
EDCALC_API void edcalc_spec_free(edcalc_spec* spec);

/* On EDCALC_ERR_CAP *out still receives the bounds-only report. */
EDCALC_API edcalc_status edcalc_compute(const edcalc_spec* spec,
                                        const edcalc_options* opts,
                                        edcalc_report** out);
EDCALC_API int edcalc_report_is_exact(const edcalc_report* r);
EDCALC_API const char* edcalc_report_lower(const edcalc_report* r);
/* NULL when no upper bound is known. */
EDCALC_API const char* edcalc_report_upper(const edcalc_report* r);
EDCALC_API const char* edcalc_report_rule(const edcalc_report* r);
EDCALC_API const char* edcalc_report_json(const edcalc_report* r);
EDCALC_API const char* edcalc_report_text(const edcalc_report* r);
EDCALC_API void edcalc_report_free(edcalc_report* r);

/* EDCALC_DISAGREE when any comparison fails. */
EDCALC_API edcalc_status edcalc_oracle_spec(const edcalc_spec* spec,
                                            const edcalc_options* opts,
                                            edcalc_oracle** out);
EDCALC_API edcalc_status edcalc_oracle_random(int trials, uint64_t seed,
                                              const edcalc_options* opts,
                                              edcalc_oracle** out);
EDCALC_API int edcalc_oracle_trials(const edcalc_oracle* o);
EDCALC_API int edcalc_oracle_agreements(const edcalc_oracle* o);
EDCALC_API const char* edcalc_oracle_text(const edcalc_oracle* o);
EDCALC_API void edcalc_oracle_free(edcalc_oracle* o);

/* `source` is certificate JSON or a name such as "builtin:pair:1:5".
 * EDCALC_ERR_CERTIFICATE still fills *out with the failing report. */
EDCALC_API edcalc_status edcalc_certify(const char* source,
                                        const edcalc_options* opts,
                                        edcalc_cert** out);
/* -1 when the certificate is invalid. */
EDCALC_API int edcalc_cert_lower_bound(const edcalc_cert* c);
EDCALC_API const char* edcalc_cert_json(const edcalc_cert* c);
EDCALC_API const char* edcalc_cert_text(const edcalc_cert* c);
EDCALC_API void edcalc_cert_free(edcalc_cert* c);

EDCALC_API const char* edcalc_table_text(void);

#ifdef __cplusplus
}
#endif

#endif
