#ifndef FPP_FPP_H
#define FPP_FPP_H

/* C interface to the verification library. All handles are opaque; every
 * function returning fpp_status leaves a message in fpp_last_error() on
 * failure. Strings returned through `const char**` stay valid until the
 * owning handle is destroyed. */

#include <stddef.h>
#include <stdint.h>

#if defined(FPP_BUILDING_LIBRARY)
#define FPP_API __attribute__((visibility("default")))
#else
#define FPP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fpp_status {
  FPP_OK = 0,
  FPP_ERR_INVALID_ARGUMENT = 1,
  FPP_ERR_DOMAIN = 2,
  FPP_ERR_PRECISION = 3,
  FPP_ERR_IO = 4,
  FPP_ERR_INTERNAL = 5
} fpp_status;

typedef struct fpp_config {
  int precision;           /* starting 2-adic precision in bits */
  double tolerance;        /* float tolerance for numerical checks */
  uint64_t seed;           /* sampling and Sylow construction */
  int max_radius;          /* ceiling for building radii */
  int max_factor_exponent; /* similitude factors 2^k, k <= this */
  int samples;             /* random samples per property check */
} fpp_config;

typedef struct fpp_session fpp_session;
typedef struct fpp_report fpp_report;

FPP_API fpp_config fpp_config_default(void);

FPP_API fpp_status fpp_session_create(const fpp_config* config, fpp_session** out);
FPP_API void fpp_session_destroy(fpp_session* session);

/* Runs the checks whose id starts with `filter` (NULL or "" for all). */
FPP_API fpp_status fpp_verify(fpp_session* session, const char* filter, fpp_report** out);

/* Ball, transitivity and stabilizer checks. `factors` may be NULL (then all
 * 2^k, k <= max_factor_exponent, are used). */
FPP_API fpp_status fpp_building(fpp_session* session, int radius, const int64_t* factors, size_t n_factors,
                                fpp_report** out);

/* Writes every similitude with factor `factor` (a power of 2) to `path`.
 * The number written is stored in *count when count is not NULL. */
FPP_API fpp_status fpp_enumerate(fpp_session* session, int64_t factor, const char* path, size_t* count);

FPP_API fpp_status fpp_report_json(fpp_report* report, const char** out);
FPP_API fpp_status fpp_report_text(fpp_report* report, const char** out);
/* Number of FAIL records. */
FPP_API size_t fpp_report_failures(const fpp_report* report);
FPP_API void fpp_report_destroy(fpp_report* report);

/* Message for the most recent failure on the calling thread. */
FPP_API const char* fpp_last_error(void);
FPP_API const char* fpp_status_string(fpp_status status);
FPP_API const char* fpp_version(void);

#ifdef __cplusplus
}
#endif

#endif
