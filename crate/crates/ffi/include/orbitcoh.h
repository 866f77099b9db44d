#ifndef ORBITCOH_H
#define ORBITCOH_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum OrbitcohStatus {
  ORBITCOH_STATUS_OK = 0,
  ORBITCOH_STATUS_NULL_POINTER = 1,
  ORBITCOH_STATUS_INVALID_UTF8 = 2,
  ORBITCOH_STATUS_UNKNOWN_ALGEBRA = 3,
  ORBITCOH_STATUS_LABEL_PARSE = 4,
  ORBITCOH_STATUS_UNLISTED_LABEL = 5,
  ORBITCOH_STATUS_CATALOG_CORRUPT = 6,
  ORBITCOH_STATUS_INVALID_CARTAN_TYPE = 7,
  ORBITCOH_STATUS_INVALID_FOLDING = 8,
  ORBITCOH_STATUS_VALIDATION_FAILED = 9,
  ORBITCOH_STATUS_PANIC = 10,
} OrbitcohStatus;

typedef enum OrbitcohValueKind {
  ORBITCOH_VALUE_KIND_EXACT = 0,
  ORBITCOH_VALUE_KIND_UPPER_BOUND = 1,
} OrbitcohValueKind;

/**
 * Opaque handle to a loaded catalog.
 */
typedef struct OrbitcohCatalog OrbitcohCatalog;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Loads the catalog compiled into the library.
 *
 * # Safety
 * `out` must be a valid pointer; on success it receives a handle to release
 * with [`orbitcoh_catalog_free`].
 */
enum OrbitcohStatus orbitcoh_catalog_load_embedded(struct OrbitcohCatalog **out);

/**
 * Loads and checks a catalog file.
 *
 * # Safety
 * `path` must be a NUL-terminated string and `out` a valid pointer.
 */
enum OrbitcohStatus orbitcoh_catalog_load_path(const char *path, struct OrbitcohCatalog **out);

/**
 * # Safety
 * `catalog` must be null or a handle from a load function, not yet freed.
 */
void orbitcoh_catalog_free(struct OrbitcohCatalog *catalog);

/**
 * # Safety
 * Pointers must be valid; `algebra` NUL-terminated.
 */
enum OrbitcohStatus orbitcoh_orbit_count(const struct OrbitcohCatalog *catalog,
                                         const char *algebra,
                                         uint32_t *out);

/**
 * Second cohomology of a listed orbit (or the zero orbit).
 *
 * # Safety
 * Pointers must be valid; strings NUL-terminated.
 */
enum OrbitcohStatus orbitcoh_h2(const struct OrbitcohCatalog *catalog,
                                const char *algebra,
                                const char *label,
                                enum OrbitcohValueKind *kind,
                                uint32_t *n);

/**
 * First cohomology of a listed orbit (or the zero orbit).
 *
 * # Safety
 * Pointers must be valid; strings NUL-terminated.
 */
enum OrbitcohStatus orbitcoh_h1(const struct OrbitcohCatalog *catalog,
                                const char *algebra,
                                const char *label,
                                enum OrbitcohValueKind *kind,
                                uint32_t *n);

/**
 * Runs every consistency check. `failures` receives the number of failing
 * checks; the status is `VALIDATION_FAILED` when it is nonzero.
 *
 * # Safety
 * Pointers must be valid.
 */
enum OrbitcohStatus orbitcoh_validate(const struct OrbitcohCatalog *catalog, uint32_t *failures);

/**
 * Number of roots of a Cartan type such as `"E8"`.
 *
 * # Safety
 * `cartan_type` must be NUL-terminated and `out` valid.
 */
enum OrbitcohStatus orbitcoh_root_count(const char *cartan_type, uint32_t *out);

/**
 * Folds E6 under a convention (`"orbit-sum"`, `"orbit-restriction"`,
 * `"twisted-affine"`). The type name is written to `out` and must be released
 * with [`orbitcoh_string_free`].
 *
 * # Safety
 * `convention` must be NUL-terminated and `out` valid.
 */
enum OrbitcohStatus orbitcoh_fold_e6(const char *convention, char **out);

/**
 * Message for the last failure on this thread, or an empty string. The
 * pointer stays valid until the next failing call on the same thread.
 */
const char *orbitcoh_last_error_message(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void orbitcoh_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ORBITCOH_H */
