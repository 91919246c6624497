/* C interface to the zeonperm exact-combinatorics library. */

#pragma once

/* Generated with cbindgen:0.29.4 */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Status code returned by every fallible entry point.
typedef enum ZpStatus {
  ZP_STATUS_OK = 0,
  ZP_STATUS_NULL_ARGUMENT = 1,
  ZP_STATUS_INVALID_UTF8 = 2,
  ZP_STATUS_PARSE_ERROR = 3,
  ZP_STATUS_DOMAIN_ERROR = 4,
  ZP_STATUS_VERIFY_FAILED = 5,
  ZP_STATUS_PANIC = 6,
} ZpStatus;

// Triangle families exposed through the C API.
typedef enum ZpTriangleKind {
  ZP_TRIANGLE_KIND_POLY = 0,
  ZP_TRIANGLE_KIND_DERANGEMENT = 1,
  ZP_TRIANGLE_KIND_ARRANGEMENT = 2,
} ZpTriangleKind;

// Opaque matrix handle.
typedef struct ZpMatrix ZpMatrix;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Most recent error message on this thread, or NULL if none. The caller
// owns the returned string and must release it with `zp_string_free`.
char *zp_last_error_message(void);

// Release a string allocated by this library. NULL is a no-op.
//
// # Safety
// `s` must have been returned by this library and not freed before.
void zp_string_free(char *s);

// Parse a matrix from the JSON format
// `{"n": 2, "entries": [["s+t", 1], [0, "t"]]}` (integer or polynomial
// string entries) into a new handle.
//
// # Safety
// `json` must be a valid NUL-terminated C string; `out` must be a valid
// pointer to a matrix-handle slot.
enum ZpStatus zp_matrix_parse_json(const char *json, struct ZpMatrix **out);

// Release a matrix handle. NULL is a no-op.
//
// # Safety
// `handle` must have been returned by this library and not freed before.
void zp_matrix_free(struct ZpMatrix *handle);

// Dimension of the matrix; 0 for NULL.
//
// # Safety
// `handle` must be a live handle from this library, or NULL.
uintptr_t zp_matrix_dim(const struct ZpMatrix *handle);

// Canonical JSON rendering of a matrix.
//
// # Safety
// `handle` must be a live handle; `out` a valid string slot.
enum ZpStatus zp_matrix_to_json(const struct ZpMatrix *handle, char **out);

// Exact permanent, rendered as a canonical polynomial string.
//
// # Safety
// `handle` must be a live handle; `out` a valid string slot.
enum ZpStatus zp_matrix_permanent(const struct ZpMatrix *handle, char **out);

// The ell-th zeon power (subpermanent matrix) as a new handle.
//
// # Safety
// `handle` must be a live handle; `out` a valid matrix-handle slot.
enum ZpStatus zp_matrix_zeon_power(const struct ZpMatrix *handle,
                                   uintptr_t ell,
                                   struct ZpMatrix **out);

// The ell-th zeon power computed by direct zeon-algebra expansion;
// agrees with `zp_matrix_zeon_power` and exists for cross-checking.
//
// # Safety
// `handle` must be a live handle; `out` a valid matrix-handle slot.
enum ZpStatus zp_matrix_zeon_power_algebra(const struct ZpMatrix *handle,
                                           uintptr_t ell,
                                           struct ZpMatrix **out);

// Characteristic polynomial of an integer matrix in the variable `x`.
//
// # Safety
// `handle` must be a live handle; `out` a valid string slot.
enum ZpStatus zp_matrix_charpoly(const struct ZpMatrix *handle, char **out);

// The exponential moment polynomial h_{n,m}(s,t) as a canonical string.
//
// # Safety
// `out` must be a valid string slot.
enum ZpStatus zp_hpoly(uintptr_t n, uintptr_t m, char **out);

// Johnson-basis coefficients of (sI + tJ)^(ell) as JSON.
//
// # Safety
// `out` must be a valid string slot.
enum ZpStatus zp_expand_json(uintptr_t n, uintptr_t ell, char **out);

// Spectrum of (sI + tJ)^(ell) as JSON, symbolic in s and t.
//
// # Safety
// `out` must be a valid string slot.
enum ZpStatus zp_spectrum_json(uintptr_t n, uintptr_t ell, char **out);

// A triangle (polynomial, derangement, or arrangement) in the
// zero-padded square CSV layout.
//
// # Safety
// `out` must be a valid string slot.
enum ZpStatus zp_triangle_csv(enum ZpTriangleKind kind, uintptr_t n, char **out);

// D_{n,ell} as a decimal string.
//
// # Safety
// `out` must be a valid string slot.
enum ZpStatus zp_derangement_number(uintptr_t n, uintptr_t ell, char **out);

// A_{n,ell} as a decimal string.
//
// # Safety
// `out` must be a valid string slot.
enum ZpStatus zp_arrangement_number(uintptr_t n, uintptr_t ell, char **out);

// Permanent of a matrix evaluated at integer (s, t), as a decimal
// string. Useful for callers that keep matrices symbolic.
//
// # Safety
// `handle` must be a live handle; `out` a valid string slot.
enum ZpStatus zp_matrix_permanent_at(const struct ZpMatrix *handle,
                                     int64_t s,
                                     int64_t t,
                                     char **out);

// Run a named verification suite (see the CLI `verify` command).
// Returns Ok when every check passes, VerifyFailed otherwise.
//
// # Safety
// `suite` must be a valid NUL-terminated C string.
enum ZpStatus zp_verify_suite(const char *suite, uint64_t seed);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus
