#ifndef CMPGEO_H
#define CMPGEO_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define CMPGEO_API __declspec(dllexport)
#else
#define CMPGEO_API __attribute__((visibility("default")))
#endif

/* Matches the CLI exit codes. */
typedef enum {
  CMPGEO_OK = 0,
  CMPGEO_VERIFICATION_FAILED = 1,
  CMPGEO_INPUT_ERROR = 2,
  CMPGEO_LIMITATION = 3,
  CMPGEO_INTERNAL = 4
} cmpgeo_status;

typedef struct {
  uint32_t characteristic; /* prime */
  int max_len;             /* longest path kept when building the algebra */
  int orbit_bound;         /* 0: default of 256 syzygy steps */
  uint64_t seed;           /* only affects randomized isomorphism tests */
  int jobs;                /* worker threads for sweeps */
} cmpgeo_options;

CMPGEO_API void cmpgeo_options_default(cmpgeo_options* opt);

typedef struct cmpgeo_input cmpgeo_input;

/* JSON text describing a triangulation ("surface" key) or a presentation
   ("vertices" key). */
CMPGEO_API cmpgeo_status cmpgeo_input_parse(const char* text, const cmpgeo_options* opt, cmpgeo_input** out);
CMPGEO_API cmpgeo_status cmpgeo_input_fixture(const char* name, const cmpgeo_options* opt, cmpgeo_input** out);
CMPGEO_API void cmpgeo_input_free(cmpgeo_input* in);
CMPGEO_API int cmpgeo_input_is_triangulation(const cmpgeo_input* in);
CMPGEO_API cmpgeo_status cmpgeo_input_algebra_dim(cmpgeo_input* in, long* dim);

/* Report functions write a JSON document (or DOT text for arquiver) to *out,
   to be released with cmpgeo_string_free. A report that ran but found a
   mismatch or a failed check returns CMPGEO_VERIFICATION_FAILED and still
   fills *out. On other errors *out is NULL and cmpgeo_last_error explains. */
CMPGEO_API cmpgeo_status cmpgeo_build(cmpgeo_input* in, char** out);
/* method: "geometric", "algebraic" or "both" */
CMPGEO_API cmpgeo_status cmpgeo_cmp(cmpgeo_input* in, const char* method, char** out);
CMPGEO_API cmpgeo_status cmpgeo_itdim(cmpgeo_input* in, int assume_complete, const char* const* modules,
                                      size_t n_modules, char** out);
/* format: "dot" or "json" */
CMPGEO_API cmpgeo_status cmpgeo_arquiver(cmpgeo_input* in, const char* format, char** out);
/* checks: NULL or empty selects every check */
CMPGEO_API cmpgeo_status cmpgeo_verify_input(cmpgeo_input* in, const char* const* checks, size_t n_checks,
                                             char** out);
/* surface: "punctured-disc" or "polygon" */
CMPGEO_API cmpgeo_status cmpgeo_verify_sweep(const char* surface, int n, const char* const* checks, size_t n_checks,
                                             const cmpgeo_options* opt, char** out);
CMPGEO_API cmpgeo_status cmpgeo_enumerate(const char* surface, int n, char** out);
/* [{"name": ..., "description": ...}] */
CMPGEO_API cmpgeo_status cmpgeo_fixture_list(char** out);
/* ["calibration", ...] */
CMPGEO_API cmpgeo_status cmpgeo_check_list(char** out);

CMPGEO_API void cmpgeo_string_free(char* s);
/* Message of the last failure on this thread; empty after success. */
CMPGEO_API const char* cmpgeo_last_error(void);
CMPGEO_API const char* cmpgeo_version(void);

#ifdef __cplusplus
}
#endif

#endif
