#ifndef PERAZZO_H
#define PERAZZO_H

/* generated by cbindgen from the perazzo-ffi crate; do not edit */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes mirrored in the generated header.
 */
#define PZ_OK 0

#define PZ_CHECK_FAILED 1

#define PZ_USAGE 2

#define PZ_PANIC 3

/**
 * Opaque result handle.
 */
typedef struct PzReport PzReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static string.
 */
const char *pz_version(void);

/**
 * Run a verification suite (`all`, `lattice`, `brauer`, `torsor`,
 * `geometry`, `segre`, `bookkeeping`).
 *
 * # Safety
 * `suite` must be null (meaning `all`) or a valid NUL-terminated string.
 */
PzReport *pz_verify(const char *suite, uint64_t seed);

/**
 * The subgroup classification table.
 */
PzReport *pz_brauer_table(uint64_t seed);

/**
 * First cohomology of the subgroup generated by `group` (cycle notation,
 * semicolon separated) on a named standard module.
 *
 * # Safety
 * `group` and `module` must be valid NUL-terminated strings.
 */
PzReport *pz_cohomology(const char *group, const char *module, uint64_t seed);

/**
 * Chart-map checks (identity, equivariance, double-three, censuses).
 */
PzReport *pz_torsor_check(uint64_t seed);

/**
 * Finite-field census for `object` in {"segre", "perazzo"}.
 *
 * # Safety
 * `object` must be a valid NUL-terminated string.
 */
PzReport *pz_census(const char *object, uint32_t q, uint64_t seed);

/**
 * Smith normal form of a row-major integer matrix; the report JSON carries
 * the diagonal, both transforms, and the rank.
 *
 * # Safety
 * `entries` must point to `rows * cols` readable values.
 */
PzReport *pz_snf(uintptr_t rows, uintptr_t cols, const int64_t *entries);

/**
 * Status code of a report (`PZ_OK`, `PZ_CHECK_FAILED`, `PZ_USAGE`,
 * `PZ_PANIC`).
 *
 * # Safety
 * `report` must be a live pointer from this library, or null.
 */
int pz_report_status(const PzReport *report);

/**
 * Borrowed JSON document of a report, NUL-terminated; valid until
 * `pz_report_free`.
 *
 * # Safety
 * `report` must be a live pointer from this library, or null.
 */
const char *pz_report_json(const PzReport *report);

/**
 * Release a report.
 *
 * # Safety
 * `report` must be a pointer from this library, not yet freed; null is a
 * no-op.
 */
void pz_report_free(PzReport *report);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* PERAZZO_H */
