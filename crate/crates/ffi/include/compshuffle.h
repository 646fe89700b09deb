#ifndef COMPSHUFFLE_H
#define COMPSHUFFLE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes.
 */
typedef enum CsStatus {
  CS_STATUS_OK = 0,
  CS_STATUS_NULL_POINTER = 1,
  CS_STATUS_INVALID_UTF8 = 2,
  CS_STATUS_INVALID_INPUT = 3,
  /**
   * The input was valid but exceeds the enumeration cap.
   */
  CS_STATUS_TOO_LARGE = 4,
  /**
   * An exact computation failed (inexact division, singular system, ...).
   */
  CS_STATUS_COMPUTATION = 5,
  CS_STATUS_PANIC = 6,
} CsStatus;

/**
 * A Dyck path.
 */
typedef struct CsPath CsPath;

/**
 * A symmetric function with Laurent polynomial coefficients in q, t.
 */
typedef struct CsSymFunc CsSymFunc;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failure on this thread, or null. Valid until the next failing call.
 */
const char *cs_last_error(void);

/**
 * Parses an NE-string (or a comma-separated area sequence).
 *
 * # Safety
 * `text` must be null or a valid C string; `out` must be null or writable.
 */
enum CsStatus cs_path_parse(const char *text, struct CsPath **out);

/**
 * # Safety
 * `path` must be null or a handle from this library that has not been freed.
 */
void cs_path_free(struct CsPath *path);

/**
 * Writes area, dinv and bounce of `path`; any of the outputs may be null.
 *
 * # Safety
 * `path` must be a live handle; non-null outputs must be writable.
 */
enum CsStatus cs_path_stats(const struct CsPath *path, size_t *area, size_t *dinv, size_t *bounce);

/**
 * The zeta image of `path`, as a new handle.
 *
 * # Safety
 * `path` must be a live handle; `out` must be writable.
 */
enum CsStatus cs_path_zeta(const struct CsPath *path, struct CsPath **out);

/**
 * The NE-string of `path`; release with [`cs_string_free`].
 *
 * # Safety
 * `path` must be a live handle; `out` must be writable.
 */
enum CsStatus cs_path_to_string(const struct CsPath *path, char **out);

/**
 * The characteristic function of `path`.
 *
 * # Safety
 * `path` must be a live handle; `out` must be writable.
 */
enum CsStatus cs_chi(const struct CsPath *path, struct CsSymFunc **out);

/**
 * `D_alpha`, the dinv-weighted sum over paths with touch composition `alpha`.
 *
 * # Safety
 * `parts` must point to `len` readable values (or be null with `len == 0`); `out` must be writable.
 */
enum CsStatus cs_d_alpha(const uint32_t *parts, size_t len, struct CsSymFunc **out);

/**
 * `nabla C_alpha(1)`.
 *
 * # Safety
 * As for [`cs_d_alpha`].
 */
enum CsStatus cs_nabla_c(const uint32_t *parts, size_t len, struct CsSymFunc **out);

/**
 * The modified Macdonald polynomial `H_mu`; `parts` may be in any order.
 *
 * # Safety
 * As for [`cs_d_alpha`].
 */
enum CsStatus cs_macdonald_h(const uint32_t *parts, size_t len, struct CsSymFunc **out);

/**
 * `nabla f`.
 *
 * # Safety
 * `f` must be a live handle; `out` must be writable.
 */
enum CsStatus cs_nabla(const struct CsSymFunc *f, struct CsSymFunc **out);

/**
 * Parses a symmetric function from its JSON encoding.
 *
 * # Safety
 * `json` must be null or a valid C string; `out` must be writable.
 */
enum CsStatus cs_symfunc_from_json(const char *json, struct CsSymFunc **out);

/**
 * The JSON encoding of `f` in the Schur basis; release with [`cs_string_free`].
 *
 * # Safety
 * `f` must be a live handle; `out` must be writable.
 */
enum CsStatus cs_symfunc_to_json(const struct CsSymFunc *f, char **out);

/**
 * Exact equality of two symmetric functions (in any bases).
 *
 * # Safety
 * `a` and `b` must be live handles; `out` must be writable.
 */
enum CsStatus cs_symfunc_equal(const struct CsSymFunc *a, const struct CsSymFunc *b, bool *out);

/**
 * # Safety
 * `f` must be null or a handle from this library that has not been freed.
 */
void cs_symfunc_free(struct CsSymFunc *f);

/**
 * # Safety
 * `s` must be null or a string returned by this library that has not been freed.
 */
void cs_string_free(char *s);

/**
 * Runs the shuffle check for every composition of `n`; `pass` receives the verdict.
 *
 * # Safety
 * `pass` must be writable.
 */
enum CsStatus cs_verify_shuffle(uint32_t n, bool *pass);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* COMPSHUFFLE_H */
