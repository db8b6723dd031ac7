#ifndef PADYN_PADYN_H
#define PADYN_PADYN_H

/* C interface to libpadyn: p-adic numbers and the map f(x) = x^3 + a x^2.
 *
 * Every fallible call returns a padyn_status; on failure the message is
 * available from padyn_last_error() on the same thread. Handles and strings
 * returned through out-parameters are owned by the caller and released with
 * the matching *_free function. */

#include <stddef.h>
#include <stdint.h>

#if defined(PADYN_BUILDING_LIBRARY)
#define PADYN_API __attribute__((visibility("default")))
#else
#define PADYN_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum padyn_status {
  PADYN_OK = 0,
  PADYN_INVALID_ARGUMENT,
  PADYN_NOT_PRIME,
  PADYN_ZERO_DENOMINATOR,
  PADYN_PRIME_MISMATCH,
  PADYN_DIVISION_BY_ZERO,
  PADYN_PRECISION_EXHAUSTED,
  PADYN_ZERO_INPUT,
  PADYN_NO_SQUARE_ROOT,
  PADYN_UNIT_NORM_PARAMETER,
  PADYN_REGIME_MISMATCH,
  PADYN_BUDGET_EXCEEDED,
  PADYN_PREDICATE_MISMATCH,
  PADYN_INTERNAL_ERROR
} padyn_status;

typedef enum padyn_format { PADYN_FORMAT_JSON = 0, PADYN_FORMAT_CSV = 1 } padyn_format;

typedef enum padyn_regime { PADYN_REGIME_A_BIG = 0, PADYN_REGIME_A_SMALL = 1 } padyn_regime;

typedef struct padyn_number padyn_number;
typedef struct padyn_map padyn_map;

PADYN_API const char* padyn_status_string(padyn_status status);
/* Message of the last failed call on this thread; "" if none. */
PADYN_API const char* padyn_last_error(void);
PADYN_API const char* padyn_version(void);

/* Numbers. */
PADYN_API padyn_status padyn_number_from_rational(uint32_t p, int64_t numerator,
                                                  int64_t denominator, int precision,
                                                  padyn_number** out);
/* digits little-endian, digits[0] != 0; count == 0 builds zero. */
PADYN_API padyn_status padyn_number_from_digits(uint32_t p, int64_t valuation,
                                                const uint32_t* digits, size_t count,
                                                padyn_number** out);
PADYN_API void padyn_number_free(padyn_number* x);

PADYN_API padyn_status padyn_number_add(const padyn_number* x, const padyn_number* y,
                                        padyn_number** out);
PADYN_API padyn_status padyn_number_sub(const padyn_number* x, const padyn_number* y,
                                        padyn_number** out);
PADYN_API padyn_status padyn_number_mul(const padyn_number* x, const padyn_number* y,
                                        padyn_number** out);
PADYN_API padyn_status padyn_number_div(const padyn_number* x, const padyn_number* y,
                                        padyn_number** out);
PADYN_API padyn_status padyn_number_sqrt(const padyn_number* x, padyn_number** out);
PADYN_API padyn_status padyn_number_sqrt_exists(const padyn_number* x, int* exists);

PADYN_API int padyn_number_is_zero(const padyn_number* x);
/* Valuation of a nonzero number; 0 for zero. */
PADYN_API int64_t padyn_number_valuation(const padyn_number* x);
PADYN_API int padyn_number_precision(const padyn_number* x);
/* Copies up to `capacity` digits and returns the total digit count. */
PADYN_API size_t padyn_number_digits(const padyn_number* x, uint32_t* out, size_t capacity);
PADYN_API padyn_status padyn_number_to_string(const padyn_number* x, char** out);

/* Maps. a = numerator / denominator; |a|_p = 1 gives PADYN_UNIT_NORM_PARAMETER. */
PADYN_API padyn_status padyn_map_create(uint32_t p, int64_t numerator, int64_t denominator,
                                        int precision, padyn_map** out);
PADYN_API void padyn_map_free(padyn_map* map);
PADYN_API padyn_regime padyn_map_regime(const padyn_map* map);
PADYN_API padyn_status padyn_map_eval(const padyn_map* map, const padyn_number* x,
                                      padyn_number** out);

typedef struct padyn_run_options {
  int max_iter;
  int depth;
  int exhaustive; /* nonzero: exhaustive spheres, falling back to random above budget */
  uint64_t seed;
  int64_t budget;
  int random_points;
  unsigned threads; /* 0: hardware concurrency capped by PADIC_DYN_THREADS */
  int siegel_points;
  int siegel_iter;
  padyn_format format;
} padyn_run_options;

PADYN_API void padyn_run_options_default(padyn_run_options* options);

/* Reports, written to a newly allocated NUL-terminated string. */
PADYN_API padyn_status padyn_report_fixed_points(const padyn_map* map, padyn_format format,
                                                 char** out);
PADYN_API padyn_status padyn_report_orbit(const padyn_map* map, int64_t x_numerator,
                                          int64_t x_denominator,
                                          const padyn_run_options* options, char** out);
PADYN_API padyn_status padyn_report_basin(const padyn_map* map, const padyn_run_options* options,
                                          char** out);
/* fail_count and undecided_count may be NULL. */
PADYN_API padyn_status padyn_report_verify(const padyn_map* map, const padyn_run_options* options,
                                           char** out, int* fail_count, int* undecided_count);
PADYN_API void padyn_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* PADYN_PADYN_H */
