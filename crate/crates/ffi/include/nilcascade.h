#ifndef NILCASCADE_H
#define NILCASCADE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum NcStatus {
  NC_STATUS_OK = 0,
  NC_STATUS_NULL_POINTER = 1,
  NC_STATUS_INVALID_UTF8 = 2,
  NC_STATUS_INVALID_INPUT = 3,
  NC_STATUS_NOT_IN_CASCADE = 4,
  NC_STATUS_INTERNAL = 5,
} NcStatus;

/**
 * Opaque linear form.
 */
typedef struct NcLinearForm NcLinearForm;

/**
 * Opaque linear order on the indices.
 */
typedef struct NcOrder NcOrder;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses an order from JSON.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a valid pointer.
 */
enum NcStatus nc_order_from_json(const char *json, struct NcOrder **out);

/**
 * # Safety
 * `order` must come from [`nc_order_from_json`] and not be freed twice.
 */
void nc_order_free(struct NcOrder *order);

/**
 * Parses a linear form from JSON.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a valid pointer.
 */
enum NcStatus nc_linear_form_from_json(const char *json, struct NcLinearForm **out);

/**
 * # Safety
 * `form` must come from [`nc_linear_form_from_json`] and not be freed twice.
 */
void nc_linear_form_free(struct NcLinearForm *form);

/**
 * First `limit` cascade roots as `{"roots": [...], "terminated": bool}`.
 *
 * # Safety
 * `order` must be a live handle and `out` a valid pointer.
 */
enum NcStatus nc_cascade_json(const struct NcOrder *order, uintptr_t limit, char **out);

/**
 * Verdict on `I(λ) ≠ 0`, as the CLI prints it.
 *
 * # Safety
 * `order` and `form` must be live handles and `out` a valid pointer.
 */
enum NcStatus nc_criterion_json(const struct NcOrder *order,
                                const struct NcLinearForm *form,
                                uintptr_t max_window,
                                char **out);

/**
 * Canonical generator of a cascade root such as `"e3-e4"`.
 *
 * # Safety
 * `order` must be a live handle, `root` a NUL-terminated string and `out` a valid pointer.
 */
enum NcStatus nc_central_generator_json(const struct NcOrder *order, const char *root, char **out);

/**
 * Releases a string returned by this library.
 *
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void nc_string_free(char *s);

/**
 * Message for the last failed call on this thread; valid until the next call.
 */
const char *nc_last_error_message(void);

/**
 * Library version, statically allocated.
 */
const char *nc_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* NILCASCADE_H */
