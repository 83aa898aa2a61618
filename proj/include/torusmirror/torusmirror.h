#ifndef TORUSMIRROR_H
#define TORUSMIRROR_H

/*
 * C interface to the torusmirror library: exact q-series for theta functions
 * with characteristics, the Fukaya product structure constants of the
 * two-torus, the Hesse cubic relation they satisfy and the j-invariant it
 * determines.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_free function. Functions return a tm_status; on failure the
 * out-parameter is left NULL and tm_last_error() describes the problem
 * (the message is per thread and valid until the next failing call).
 *
 * Orders named order_y are in units of y = exp(i pi tau / 72); orders named
 * order_x are in units of x = y^4 = exp(i pi tau / 18).
 */

#include <stddef.h>

#if defined(_WIN32)
#  if defined(TM_BUILDING_LIBRARY)
#    define TM_API __declspec(dllexport)
#  else
#    define TM_API __declspec(dllimport)
#  endif
#else
#  define TM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tm_status {
    TM_OK = 0,
    TM_CHECK_FAILED = 1,          /* a report was produced but a check failed */
    TM_ERR_PRECISION = 2,         /* not certifiable inside the known window */
    TM_ERR_INVALID_ARGUMENT = 3,
    TM_ERR_DOMAIN = 4,            /* input outside the operation's domain */
    TM_ERR_INTERNAL = 5
} tm_status;

typedef enum tm_format {
    TM_FORMAT_TEXT = 0,
    TM_FORMAT_JSON = 1
} tm_format;

typedef struct tm_series tm_series;
typedef struct tm_report tm_report;

TM_API const char* tm_version(void);
TM_API const char* tm_status_string(tm_status status);
TM_API const char* tm_last_error(void);

/* Strings returned through char** out-parameters. */
TM_API void tm_string_free(char* s);

/* ---- series ------------------------------------------------------------ */

/* family is one of 'A', 'B', 'C', 'D'; the index is reduced by the family period. */
TM_API tm_status tm_series_theta(char family, long long index, long long order_y, tm_series** out);

/* Parses {"base", "valuation", "truncation", "coefficients"}; x-based records
 * are converted to y. */
TM_API tm_status tm_series_from_json(const char* record, tm_series** out);

TM_API tm_status tm_series_add(const tm_series* a, const tm_series* b, tm_series** out);
TM_API tm_status tm_series_mul(const tm_series* a, const tm_series* b, tm_series** out);
TM_API tm_status tm_series_inv(const tm_series* a, tm_series** out);
TM_API tm_status tm_series_pow(const tm_series* a, unsigned n, tm_series** out);

TM_API long long tm_series_valuation(const tm_series* s);
TM_API long long tm_series_truncation(const tm_series* s);

/* Coefficient of y^exponent as "num/den". */
TM_API tm_status tm_series_coeff(const tm_series* s, long long exponent, char** out);

/* Equality of all coefficients below order_y; *equal receives 0 or 1. */
TM_API tm_status tm_series_eq_to_order(const tm_series* a, const tm_series* b, long long order_y, int* equal);

/* Record in base x when prefer_x is nonzero and the exponents permit it. */
TM_API tm_status tm_series_to_json(const tm_series* s, int prefer_x, char** out);

TM_API void tm_series_free(tm_series* s);

/* ---- batch commands ---------------------------------------------------- */

/* Each returns TM_OK when every check passed, TM_CHECK_FAILED when the
 * report was produced but some check failed (the report is still returned),
 * or an error status with *out == NULL. */
TM_API tm_status tm_run_theta(char family, long long index, long long order_x, tm_report** out);

/* which: "products", "commutativity", "associativity", "mumford", "oracle",
 * "matrix" or "relation". */
TM_API tm_status tm_run_verify(const char* which, long long order_x, tm_report** out);
TM_API tm_status tm_run_jcheck(long long order_x, int n_terms, tm_report** out);
TM_API tm_status tm_run_matrix(long long order_x, tm_report** out);
TM_API tm_status tm_run_relation(long long order_x, tm_report** out);

/* Smallest order_x at which tm_run_jcheck certifies n_terms coefficients. */
TM_API long long tm_jcheck_required_order_x(int n_terms);

TM_API int tm_report_passed(const tm_report* r);
TM_API tm_status tm_report_render(const tm_report* r, tm_format format, char** out);
TM_API void tm_report_free(tm_report* r);

#ifdef __cplusplus
}
#endif

#endif /* TORUSMIRROR_H */
