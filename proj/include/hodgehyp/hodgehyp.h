#ifndef HODGEHYP_H
#define HODGEHYP_H

/* C interface to the hodgehyp library: local Hodge data of irreducible
 * hypergeometric D-modules, computed by closed formulas or by the
 * convolution recursion.
 *
 * Every call returns an hh_status. On failure, hh_last_error() describes the
 * problem for the calling thread. Strings handed out by the library are
 * released with hh_string_free. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define HH_API __declspec(dllexport)
#else
#define HH_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hh_status {
    HH_OK = 0,
    HH_VERIFY_FAILED = 1,
    HH_PARSE_ERROR = 2,
    HH_REDUCIBLE = 3,
    HH_INTERNAL = 4,
    HH_INVALID_ARGUMENT = 5,
    HH_UNKNOWN_DATA = 6
} hh_status;

typedef enum hh_engine { HH_ENGINE_CLOSED = 0, HH_ENGINE_RECURSIVE = 1, HH_ENGINE_BOTH = 2 } hh_engine;

typedef enum hh_format { HH_FORMAT_JSON = 0, HH_FORMAT_TSV = 1 } hh_format;

typedef struct hh_params hh_params;
typedef struct hh_profile hh_profile;

typedef struct hh_compute_options {
    hh_engine engine;
    int normalize; /* nonzero: shift so that min p = 0 */
    hh_format format;
} hh_compute_options;

typedef struct hh_verify_options {
    int n_max;
    int den_max;
    uint64_t sample; /* 0: exhaustive grid */
    uint64_t seed;
    int inject_fault;
} hh_verify_options;

HH_API const char* hh_version(void);
HH_API const char* hh_last_error(void);
HH_API void hh_string_free(char* s);

/* Comma-separated rationals such as "0,1/2". */
HH_API hh_status hh_params_parse(const char* alpha_csv, const char* beta_csv, hh_params** out);
/* {"alpha": ["0", "1/2"], "beta": [...]} */
HH_API hh_status hh_params_from_json(const char* json, hh_params** out);
HH_API void hh_params_free(hh_params* params);
HH_API size_t hh_params_size(const hh_params* params);
HH_API int hh_params_is_irreducible(const hh_params* params);

/* engine must be HH_ENGINE_CLOSED or HH_ENGINE_RECURSIVE. */
HH_API hh_status hh_profile_compute(const hh_params* params, hh_engine engine, hh_profile** out);
HH_API hh_status hh_profile_from_json(const char* json, hh_profile** out);
HH_API void hh_profile_free(hh_profile* profile);
HH_API int hh_profile_rank(const hh_profile* profile);
HH_API hh_status hh_profile_hodge_number(const hh_profile* profile, int p, int64_t* out);
/* *has_shift = 0 when no shift matches; otherwise *shift is set. */
HH_API hh_status hh_profile_equal_up_to_shift(const hh_profile* a, const hh_profile* b, int* has_shift, int* shift);
HH_API hh_status hh_profile_to_json(const hh_profile* profile, char** out);

/* Full output document (JSON or TSV). */
HH_API hh_status hh_compute_document(const hh_params* params, const hh_compute_options* options, char** out);

/* One JSON-lines record; errors are reported inline, so the status is
 * HH_OK unless the arguments themselves are invalid. */
HH_API hh_status hh_batch_line(const char* line, const hh_compute_options* options, char** out);

/* Sweep report as JSON; HH_VERIFY_FAILED when any check fails. */
HH_API hh_status hh_verify(const hh_verify_options* options, char** out);

#ifdef __cplusplus
}
#endif

#endif
