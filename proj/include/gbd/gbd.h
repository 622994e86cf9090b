#ifndef GBD_GBD_H
#define GBD_GBD_H

/*
 * C API for the Groebner basis decision library.
 *
 * All functions returning gbd_status set a thread-local error message,
 * readable via gbd_last_error(), when they fail. Objects returned through
 * out-parameters are owned by the caller and released with the matching
 * _free function; strings with gbd_string_free.
 */

#include <stddef.h>

#if defined(_WIN32)
#define GBD_API __declspec(dllexport)
#elif defined(__GNUC__)
#define GBD_API __attribute__((visibility("default")))
#else
#define GBD_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gbd_status {
    GBD_OK = 0,
    GBD_ERR_INVALID_ARGUMENT = 1,
    GBD_ERR_PARSE = 2,
    GBD_ERR_PRECONDITION = 3, /* theory-check or pham-mode hypotheses unmet */
    GBD_ERR_CHECK_FAILED = 4, /* a theory check ran and its assertion failed */
    GBD_ERR_INTERNAL = 5
} gbd_status;

typedef struct gbd_system gbd_system;
typedef struct gbd_report gbd_report;

GBD_API const char* gbd_version(void);

/* Message for the most recent failure on this thread; never NULL. */
GBD_API const char* gbd_last_error(void);

GBD_API void gbd_string_free(char* s);

/* --- systems --- */

GBD_API gbd_status gbd_system_parse(const char* text, gbd_system** out);
GBD_API void gbd_system_free(gbd_system* sys);

/* Canonical text form; parse(serialize(s)) == s. */
GBD_API gbd_status gbd_system_serialize(const gbd_system* sys, char** out_text);

/* Number of polynomials, or -1 on NULL. */
GBD_API int gbd_system_size(const gbd_system* sys);

/* Replace the ordering: spec is "<kind> [<name>...]", e.g. "grlex x y z". */
GBD_API gbd_status gbd_system_set_order(gbd_system* sys, const char* spec);

/* --- decision --- */

/* mode: "plain" | "buchberger" | "extended" | "pham".
 * b3_rereduce: nonzero re-reduces cached chain edges against G' (extended). */
GBD_API gbd_status gbd_decide(const gbd_system* sys, const char* mode, int b3_rereduce, int threads,
                      gbd_report** out);

GBD_API void gbd_report_free(gbd_report* report);

/* 1 = Groebner basis, 0 = not, -1 on NULL. */
GBD_API int gbd_report_is_groebner(const gbd_report* report);

/* Distinct S-polynomials reduced, or -1 on NULL. */
GBD_API long gbd_report_reductions(const gbd_report* report);

GBD_API gbd_status gbd_report_json(const gbd_report* report, char** out_text);
GBD_API gbd_status gbd_report_text(const gbd_report* report, char** out_text);

/* --- Pham-like generation --- */

/* Writes the generated system and, when make_gb, a factor sidecar
 * ("factor 1 m <p>") describing the hidden common factor. Either out
 * pointer may be NULL if the caller does not need it. */
GBD_API gbd_status gbd_generate_pham_like(int m, int extra_vars, unsigned long long seed, int make_gb,
                                  int trivial_p, gbd_system** out_sys, char** out_factors);

/* --- theory checks --- */

/* factors_text may be NULL or empty (chain-matrix checks only).
 * Returns GBD_OK when every check passes, GBD_ERR_PRECONDITION when a
 * hypothesis cannot be established, GBD_ERR_CHECK_FAILED when an asserted
 * identity fails; out_json (optional) receives the detailed report in the
 * first and last cases. */
GBD_API gbd_status gbd_check_theory(const gbd_system* sys, const char* factors_text, char** out_json);

#ifdef __cplusplus
}
#endif

#endif
