/* C interface to the D-lattice verification library. */
#ifndef DLATTICE_H
#define DLATTICE_H

#include <stdint.h>

#if defined(_WIN32)
#define EA_API __declspec(dllexport)
#else
#define EA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct ea_algebra ea_algebra;

typedef enum ea_status {
  EA_OK = 0,
  /* A property check ran and found a counterexample. */
  EA_FAILED = 1,
  /* Malformed input, axiom violation or unreadable file. */
  EA_EINPUT = 2,
  /* Carrier exceeds a size cap. */
  EA_ESIZECAP = 3,
  /* Bad argument: element out of range, null pointer, mixed algebras. */
  EA_EARG = 4,
  EA_EINTERNAL = 5
} ea_status;

typedef enum ea_congruence_mode { EA_CONGRUENCES_BRUTE = 0, EA_CONGRUENCES_VIA_FILTERS = 1 } ea_congruence_mode;

typedef enum ea_submeasure_op { EA_SUBMEASURE_CHECK = 0, EA_SUBMEASURE_UNIFORMITY = 1 } ea_submeasure_op;

typedef enum ea_measure_op { EA_MEASURE_CHECK = 0, EA_MEASURE_UNIFORMITY = 1, EA_MEASURE_DECOMPOSE = 2 } ea_measure_op;

typedef struct ea_options {
  int max_n;
  int congruence_cap;
  int submeasures;
  int measures;
  int mv_functions;
  uint64_t seed;
  /* Nonzero to include timings in reports (breaks byte-identical output). */
  int timings;
} ea_options;

EA_API void ea_options_default(ea_options* options);

/* Message and error kind (e.g. "AxiomViolation") of the last failure on this thread. */
EA_API const char* ea_last_error(void);
EA_API const char* ea_last_error_kind(void);

/* Frees strings returned through char** out-parameters. */
EA_API void ea_string_free(char* s);

EA_API ea_status ea_algebra_from_json(const char* json, ea_algebra** out);
EA_API ea_status ea_algebra_load(const char* path, ea_algebra** out);
EA_API ea_status ea_algebra_to_json(const ea_algebra* alg, char** out);
EA_API void ea_algebra_free(ea_algebra* alg);
EA_API int ea_algebra_size(const ea_algebra* alg);
EA_API int ea_algebra_zero(const ea_algebra* alg);
EA_API int ea_algebra_one(const ea_algebra* alg);

EA_API ea_status ea_catalog_chain(int n, ea_algebra** out);
EA_API ea_status ea_catalog_boolean(int atoms, ea_algebra** out);
EA_API ea_status ea_catalog_mo(int blocks, ea_algebra** out);
EA_API ea_status ea_catalog_product(const ea_algebra* a, const ea_algebra* b, ea_algebra** out);
EA_API ea_status ea_catalog_hsum(const ea_algebra* a, const ea_algebra* b, ea_algebra** out);

/* Partial operations; *out is -1 when undefined. */
EA_API ea_status ea_osum(const ea_algebra* alg, int a, int b, int* out);
EA_API ea_status ea_ominus(const ea_algebra* alg, int c, int a, int* out);
EA_API ea_status ea_symm_diff(const ea_algebra* alg, int a, int b, int* out);

/* Element sets are bitmasks: bit i set iff element i is a member. */
EA_API ea_status ea_is_dfilter_generator(const ea_algebra* alg, uint64_t mask, int* result);
/* Writes up to `capacity` generators in canonical order; *count is the total. */
EA_API ea_status ea_dfilters(const ea_algebra* alg, uint64_t* masks, int capacity, int* count);
/* block_of has one entry per element. */
EA_API ea_status ea_congruence_from_filter(const ea_algebra* alg, uint64_t mask, int* block_of);
EA_API ea_status ea_filter_from_congruence(const ea_algebra* alg, const int* block_of, uint64_t* mask);

/*
 * Reports. Each writes a JSON document to *json (free with ea_string_free)
 * and returns EA_OK when every check passed or EA_FAILED otherwise; other
 * statuses leave *json unset. `options` may be NULL for defaults.
 */
EA_API ea_status ea_report_check(const ea_algebra* alg, const ea_options* options, char** json);
/* *dot (optional) receives the Hasse diagram of the D-filter lattice. */
EA_API ea_status ea_report_filters(const ea_algebra* alg, const ea_options* options, char** json, char** dot);
EA_API ea_status ea_report_congruences(const ea_algebra* alg, ea_congruence_mode mode, const ea_options* options,
                                       char** json);
EA_API ea_status ea_report_iso(const ea_algebra* alg, const ea_options* options, char** json);
EA_API ea_status ea_report_lattice(const ea_algebra* alg, const ea_options* options, char** json, char** dot);
EA_API ea_status ea_report_submeasure(const ea_algebra* alg, const char* submeasure_json, ea_submeasure_op op,
                                      const ea_options* options, char** json);
EA_API ea_status ea_report_measure(const ea_algebra* alg, const char* measure_json, ea_measure_op op,
                                   const ea_options* options, char** json);
EA_API ea_status ea_report_suite(const ea_options* options, char** json);

#ifdef __cplusplus
}
#endif

#endif /* DLATTICE_H */
