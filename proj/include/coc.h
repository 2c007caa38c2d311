/* C interface to the component order connectivity toolkit.
 *
 * Every function returns a coc_status. On failure, coc_last_error() gives a
 * message for the calling thread. Handles and strings returned through out
 * parameters belong to the caller and are released with the matching free
 * function. */
#ifndef COC_H
#define COC_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#pragma GCC visibility push(default)
#endif

typedef enum coc_status {
  COC_OK = 0,
  COC_ERR_PARSE = 1,
  COC_ERR_INVALID_ARGUMENT = 2,
  COC_ERR_NOT_CATERPILLAR = 3,
  COC_ERR_CLASS_VIOLATION = 4,
  COC_ERR_TOO_LARGE = 5,
  COC_ERR_PRECONDITION = 6,
  COC_ERR_NOT_APPLICABLE = 7,
  COC_ERR_MODULATOR_NOT_VC = 8,
  COC_ERR_PACKING_NOT_FULL = 9,
  COC_ERR_INTERNAL = 10,
  COC_ERR_IO = 11,
  COC_ERR_NULL_ARGUMENT = 12
} coc_status;

typedef struct coc_instance coc_instance;
typedef struct coc_annotated coc_annotated;
typedef struct coc_kernel_result coc_kernel_result;

const char* coc_last_error(void);
const char* coc_status_name(coc_status status);
void coc_string_free(char* s);

/* Instances */
typedef struct coc_instance_info {
  int n;
  int64_t edges;
  int d;
  int64_t k;
  int modulator_size;
} coc_instance_info;

coc_status coc_instance_parse(const char* text, coc_instance** out);
coc_status coc_instance_read(const char* path, coc_instance** out);
coc_status coc_instance_write(const coc_instance* inst, char** out_text);
coc_status coc_instance_get_info(const coc_instance* inst, coc_instance_info* out);
coc_status coc_instance_set_k(coc_instance* inst, int64_t k);
void coc_instance_free(coc_instance* inst);

coc_status coc_annotated_parse(const char* text, coc_annotated** out);
coc_status coc_annotated_read(const char* path, coc_annotated** out);
coc_status coc_annotated_write(const coc_annotated* inst, char** out_text);
void coc_annotated_free(coc_annotated* inst);

/* Exact solving */
typedef enum coc_solve_method {
  COC_SOLVE_BRUTE = 0,       /* subset enumeration, up to max_brute_n vertices */
  COC_SOLVE_CATERPILLAR = 1, /* whole graph must be a caterpillar forest */
  COC_SOLVE_BRANCH_VC = 2,   /* modulator must be a vertex cover */
  COC_SOLVE_ANNOTATED_BRUTE = 3
} coc_solve_method;

typedef struct coc_solve_result {
  int yes;
  int has_opt;          /* opt is filled by the brute and caterpillar methods */
  int64_t opt;
  uint64_t colorings;   /* branch-vc only */
} coc_solve_result;

/* max_brute_n <= 0 keeps the default cap of 24 vertices. witness_text may be
 * NULL; otherwise it receives the space-separated witness (empty for NO). */
coc_status coc_solve(const coc_instance* inst, coc_solve_method method, int max_brute_n,
                     coc_solve_result* out, char** witness_text);
coc_status coc_solve_annotated(const coc_annotated* inst, coc_solve_result* out);

/* Kernelization */
typedef enum coc_rules { COC_RULES_ALL = 0, COC_RULES_1 = 1, COC_RULES_2 = 2 } coc_rules;
typedef enum coc_outcome { COC_TRIVIAL_YES = 0, COC_TRIVIAL_NO = 1, COC_REDUCED = 2 } coc_outcome;

typedef struct coc_kernel_options {
  coc_rules rules;
  int deg2; /* nonzero: modulator to cycles and caterpillars */
} coc_kernel_options;

coc_status coc_kernelize(const coc_instance* inst, const coc_kernel_options* options, coc_kernel_result** out);
coc_outcome coc_kernel_outcome(const coc_kernel_result* result);
/* Copy of the output instance (the canonical trivial instance for trivial outcomes). */
coc_status coc_kernel_instance(const coc_kernel_result* result, coc_instance** out);
coc_status coc_kernel_report(const coc_kernel_result* result, int with_trace, char** out_text);
void coc_kernel_result_free(coc_kernel_result* result);

/* Essence tooling. Tables have d+2 entries. */
coc_status coc_essence_decompose(int d, const int* table, size_t len, char** out_list, int* out_length,
                                 int* out_verified);
/* Essence of component `component` of G - M. spine may be NULL to use the
 * recognized spine; otherwise it fixes the spine order. */
coc_status coc_essence_compute(const coc_instance* inst, int component, const int* spine, size_t spine_len,
                               int* out_table, size_t out_len);
/* Caterpillar realizing the table, as an instance with empty modulator and k = opt. */
coc_status coc_essence_synthesize(int d, const int* table, size_t len, coc_instance** out, char** out_spine);
/* Packing dump: one line per packed graph. alpha = 1 gives the solution-tight packing. */
coc_status coc_essence_pack(const coc_instance* inst, int alpha, char** out_text);

/* Generators */
typedef struct coc_random_profile {
  int d;
  int modulator_size;
  int components;
  int spine_min;
  int spine_max;
  int max_pendants;
  double pendant_density;
  double modulator_edge_prob;
  double modulator_inner_prob;
  int k_fixed;      /* nonzero: k = k_min */
  int64_t k_min;
  int64_t k_max;
  int shuffle;
} coc_random_profile;

void coc_random_profile_default(coc_random_profile* out);
coc_status coc_gen_random(const coc_random_profile* profile, uint64_t seed, coc_instance** out);
/* Uses the graph and k of `vc`; its d and modulator are ignored. */
coc_status coc_gen_vc2coc(const coc_instance* vc, int d, coc_instance** out);
coc_status coc_gen_umrss2coc(const char* umrss_text, coc_instance** out);
coc_status coc_gen_xsc2acoc(const char* xsc_text, coc_annotated** out);
coc_status coc_gen_acoc2coc(const coc_annotated* inst, coc_instance** out);
/* Decides the source problems by enumeration. */
coc_status coc_umrss_brute(const char* umrss_text, int* out_yes);
coc_status coc_xsc_brute(const char* xsc_text, int* out_yes);

#if defined(__GNUC__)
#pragma GCC visibility pop
#endif

#ifdef __cplusplus
}
#endif

#endif
