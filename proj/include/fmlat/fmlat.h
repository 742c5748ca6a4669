/* C interface to the fmlat library. All strings returned through `char**`
 * out-parameters are heap allocated and must be released with
 * fmlat_string_free. Handles are released with their matching *_free. */
#ifndef FMLAT_FMLAT_H
#define FMLAT_FMLAT_H

#include <stdint.h>

#if defined(FMLAT_BUILDING_LIBRARY)
#define FMLAT_API __attribute__((visibility("default")))
#else
#define FMLAT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fmlat_status {
  FMLAT_OK = 0,
  FMLAT_ERR_INPUT = 1,
  FMLAT_ERR_PARSE = 2,
  FMLAT_ERR_UNSUPPORTED_MODEL = 3,
  FMLAT_ERR_COPRIMALITY = 4,
  FMLAT_ERR_ADMISSIBILITY = 5,
  FMLAT_ERR_SINGULAR = 6,
  FMLAT_ERR_REDUCTION = 7,
  FMLAT_ERR_INTERNAL = 8
} fmlat_status;

typedef enum fmlat_source {
  FMLAT_SOURCE_BUILT = 0,
  FMLAT_SOURCE_GOLDEN = 1,
  FMLAT_SOURCE_GRR = 2
} fmlat_source;

typedef struct fmlat_surface fmlat_surface;
typedef struct fmlat_operator fmlat_operator;

/* Message of the last failed call on this thread; "" if none. */
FMLAT_API const char* fmlat_last_error(void);
FMLAT_API const char* fmlat_status_name(fmlat_status s);
FMLAT_API int fmlat_schema_version(void);
FMLAT_API void fmlat_string_free(char* s);

FMLAT_API fmlat_status fmlat_surface_standard_k3(fmlat_surface** out);
FMLAT_API fmlat_status fmlat_surface_load(const char* path, fmlat_surface** out);
FMLAT_API fmlat_status fmlat_surface_parse(const char* text, fmlat_surface** out);
FMLAT_API fmlat_status fmlat_surface_format(const fmlat_surface* s, char** out);
FMLAT_API void fmlat_surface_free(fmlat_surface* s);

/* chi(v, w) for comma-separated classes r,div...,p. */
FMLAT_API fmlat_status fmlat_chi(const fmlat_surface* s, const char* v, const char* w, int as_json,
                                 char** out);

/* `divisor` is "x,y" for A_TL and may be NULL otherwise. */
FMLAT_API fmlat_status fmlat_operator_create(const char* name, int64_t d, const char* divisor,
                                             fmlat_source source, fmlat_operator** out);
FMLAT_API fmlat_status fmlat_operator_render(const fmlat_operator* op, int as_json, char** out);
FMLAT_API fmlat_status fmlat_operator_apply(const fmlat_operator* op, const char* vector,
                                            int as_json, char** out);
FMLAT_API void fmlat_operator_free(fmlat_operator* op);

/* `corrupt` names a golden table to perturb, or NULL. */
FMLAT_API fmlat_status fmlat_verify(int64_t d_lo, int64_t d_hi, const char* corrupt, int as_json,
                                    char** out, int* all_pass);

/* `surface` may be NULL. `request_json` keys: phi [c,a,e,b], d_v, d_w, v, w,
 * lambda, theorems ["k3","general"], t_v, t_w, no_higher_cohomology.
 * `passed` is 1 iff every requested theorem check passes. */
FMLAT_API fmlat_status fmlat_sd_check(const fmlat_surface* surface, const char* request_json,
                                      int as_json, char** out, int* passed);

/* `target_json` may be NULL; keys d_v, d_w, theorem, t_v, t_w. */
FMLAT_API fmlat_status fmlat_search(int64_t lambda, int64_t bound, const char* target_json,
                                    int as_json, char** out);

#ifdef __cplusplus
}
#endif

#endif
