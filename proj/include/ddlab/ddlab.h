#ifndef DDLAB_DDLAB_H
#define DDLAB_DDLAB_H

#include <stddef.h>
#include <stdint.h>

#if defined(DDLAB_BUILDING_LIBRARY)
#define DDLAB_API __attribute__((visibility("default")))
#else
#define DDLAB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ddlab_status {
  DDLAB_OK = 0,
  DDLAB_ERR_NULL_ARGUMENT,
  DDLAB_ERR_PARSE,
  DDLAB_ERR_DUPLICATE_POINT,
  DDLAB_ERR_EMPTY_SET,
  DDLAB_ERR_INVALID_ARGUMENT,
  DDLAB_ERR_DEGENERATE_DEGREE,
  DDLAB_ERR_ZERO_POLYNOMIAL,
  DDLAB_ERR_SHARED_COMPONENT,
  DDLAB_ERR_NOT_A_CIRCLE,
  DDLAB_ERR_PRECONDITION,
  DDLAB_ERR_UNSUPPORTED_CURVE,
  DDLAB_ERR_BOX_TOO_SMALL,
  DDLAB_ERR_UNKNOWN_FAMILY,
  DDLAB_ERR_UNREALIZED_DISTANCE,
  DDLAB_ERR_BUDGET_EXCEEDED,
  DDLAB_ERR_IO,
  DDLAB_ERR_INTERNAL
} ddlab_status;

typedef struct ddlab_pointset ddlab_pointset;
typedef struct ddlab_curve ddlab_curve;
typedef struct ddlab_spectrum ddlab_spectrum;
typedef struct ddlab_report ddlab_report;

/* Message of the last failing call on this thread; "" after success. */
DDLAB_API const char* ddlab_last_error(void);
DDLAB_API const char* ddlab_status_name(ddlab_status status);
DDLAB_API const char* ddlab_version(void);
/* Frees any char* returned through an out parameter. */
DDLAB_API void ddlab_string_free(char* s);

/* Point sets: "NUM/DEN NUM/DEN" per line, '#' comments. */
DDLAB_API ddlab_status ddlab_pointset_parse(const char* text, ddlab_pointset** out);
DDLAB_API ddlab_status ddlab_pointset_load(const char* path, ddlab_pointset** out);
DDLAB_API ddlab_status ddlab_pointset_to_text(const ddlab_pointset* set, const char* const* header, size_t header_len,
                                              char** out);
DDLAB_API size_t ddlab_pointset_size(const ddlab_pointset* set);
DDLAB_API void ddlab_pointset_free(ddlab_pointset* set);

/* Curves, given by their irreducible factors. */
DDLAB_API ddlab_status ddlab_curve_parse(const char* text, ddlab_curve** out);
DDLAB_API ddlab_status ddlab_curve_load(const char* path, ddlab_curve** out);
DDLAB_API ddlab_status ddlab_curve_preset(const char* name, ddlab_curve** out);
DDLAB_API ddlab_status ddlab_curve_to_text(const ddlab_curve* curve, char** out);
DDLAB_API int ddlab_curve_degree(const ddlab_curve* curve);
/* Coordinates as "NUM/DEN" or integers. */
DDLAB_API ddlab_status ddlab_curve_contains(const ddlab_curve* curve, const char* x, const char* y, int* out);
DDLAB_API ddlab_status ddlab_curve_circle_intersections(const ddlab_curve* curve, const char* cx, const char* cy,
                                                        const char* squared_radius, uint64_t* out);
DDLAB_API void ddlab_curve_free(ddlab_curve* curve);

/* Distance spectra over P1 x P2. threads = 0 picks automatically. */
DDLAB_API ddlab_status ddlab_spectrum_compute(const ddlab_pointset* p1, const ddlab_pointset* p2, unsigned threads,
                                              ddlab_spectrum** out);
DDLAB_API ddlab_status ddlab_spectrum_from_csv(const char* text, ddlab_spectrum** out);
DDLAB_API ddlab_status ddlab_spectrum_to_csv(const ddlab_spectrum* s, char** out);
DDLAB_API uint64_t ddlab_spectrum_distinct(const ddlab_spectrum* s);
DDLAB_API uint64_t ddlab_spectrum_total_pairs(const ddlab_spectrum* s);
DDLAB_API uint64_t ddlab_spectrum_zero_pairs(const ddlab_spectrum* s);
DDLAB_API uint64_t ddlab_spectrum_max_multiplicity(const ddlab_spectrum* s);
/* E_d as a decimal string. */
DDLAB_API ddlab_status ddlab_spectrum_energy(const ddlab_spectrum* s, unsigned d, char** out);
/* k_{2^j} for j = 0..; writes min(len, cap) values and the full length. */
DDLAB_API ddlab_status ddlab_spectrum_dyadic(const ddlab_spectrum* s, int r, uint64_t n, uint64_t* k, size_t cap,
                                             size_t* len);
DDLAB_API void ddlab_spectrum_free(ddlab_spectrum* s);

/* Generators. */
DDLAB_API ddlab_status ddlab_gen_grid(int k, ddlab_pointset** out);
DDLAB_API ddlab_status ddlab_gen_on_curve(const ddlab_curve* curve, size_t m, uint64_t seed, ddlab_pointset** out);
DDLAB_API ddlab_status ddlab_gen_cloud(size_t n, const char* x_min, const char* y_min, const char* x_max,
                                       const char* y_max, int64_t den, uint64_t seed, ddlab_pointset** out);
DDLAB_API ddlab_status ddlab_gen_adversarial(const char* family, size_t m, size_t n, uint64_t seed,
                                             ddlab_pointset** p1, ddlab_pointset** p2, ddlab_curve** curve);
DDLAB_API ddlab_status ddlab_gen_bipartite(const char* curve_name, size_t m, size_t n, uint64_t seed,
                                           ddlab_pointset** p1, ddlab_pointset** p2);
/* Sidecar header, one line per '\n'. curve may be NULL. */
DDLAB_API ddlab_status ddlab_instance_header(const char* family, uint64_t seed, const ddlab_curve* curve, char** out);

/* Verification. */
typedef struct ddlab_verify_options {
  uint64_t tuple_budget;            /* default 10^7 */
  int precondition_fail;            /* 0: violations SKIP, 1: violations FAIL */
  unsigned threads;
  const ddlab_spectrum* spectrum;   /* optional replacement spectrum */
  const char* instance_id;          /* optional */
} ddlab_verify_options;

typedef enum ddlab_check_status { DDLAB_CHECK_PASS = 0, DDLAB_CHECK_FAIL = 1, DDLAB_CHECK_SKIP = 2 } ddlab_check_status;

typedef enum ddlab_report_format {
  DDLAB_REPORT_TEXT = 0,
  DDLAB_REPORT_LINES = 1,
  DDLAB_REPORT_INCIDENCE_CSV = 2
} ddlab_report_format;

DDLAB_API void ddlab_verify_options_init(ddlab_verify_options* options);
DDLAB_API ddlab_status ddlab_verify(const ddlab_pointset* p1, const ddlab_pointset* p2, const ddlab_curve* curve,
                                    const ddlab_verify_options* options, ddlab_report** out);
DDLAB_API int ddlab_report_has_failures(const ddlab_report* report);
DDLAB_API size_t ddlab_report_check_count(const ddlab_report* report);
/* Borrowed strings, valid until the report is freed. Any out pointer may be NULL. */
DDLAB_API ddlab_status ddlab_report_check(const ddlab_report* report, size_t i, const char** name,
                                          ddlab_check_status* status, const char** lhs, const char** rhs,
                                          const char** citation);
DDLAB_API ddlab_status ddlab_report_render(const ddlab_report* report, ddlab_report_format format, char** out);
DDLAB_API void ddlab_report_free(ddlab_report* report);

/* Bound expressions, log base 2. */
DDLAB_API ddlab_status ddlab_theorem_bound(uint64_t m, uint64_t n, char* regime, double* value);
DDLAB_API ddlab_status ddlab_pach_sharir_bound(uint64_t m, uint64_t n, unsigned s, double* value);

/* Sweeps. Ranges use "16,32,64", "16:256:x2" or "10:50:+10". */
typedef struct ddlab_sweep_options {
  const char* family;      /* curve preset, default "parabola" */
  const char* m_values;
  const char* n_values;
  const char* d_values;    /* default "2,3" */
  uint64_t seed;
  uint64_t pair_budget;    /* default 10^8 */
  unsigned threads;
} ddlab_sweep_options;

DDLAB_API void ddlab_sweep_options_init(ddlab_sweep_options* options);
DDLAB_API ddlab_status ddlab_sweep_csv(const ddlab_sweep_options* options, char** out);

#ifdef __cplusplus
}
#endif

#endif
