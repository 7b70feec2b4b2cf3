#ifndef RIBBONRES_H
#define RIBBONRES_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum RibbonresStatus {
  RIBBONRES_STATUS_OK = 0,
  RIBBONRES_STATUS_NULL_POINTER = 1,
  RIBBONRES_STATUS_INVALID_ARGUMENT = 2,
  RIBBONRES_STATUS_PRECONDITION = 3,
  RIBBONRES_STATUS_RESOURCE = 4,
  RIBBONRES_STATUS_VERIFICATION_FAILED = 5,
  RIBBONRES_STATUS_INTERNAL = 6,
} RibbonresStatus;

// Report of a verification run, with its JSON rendering.
typedef struct RibbonresReport RibbonresReport;

// Minimal free resolution window of a Veronese module.
typedef struct RibbonresResolution RibbonresResolution;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread; empty after a success.
// The pointer stays valid until the next call on this thread.
const char *ribbonres_last_error(void);

// Number of semistandard fillings of the ribbon with row lengths
// `parts[0..len]` (bottom row first) using entries `1..=n`.
//
// # Safety
// `parts` must point to `len` readable values and `out` must be writable.
enum RibbonresStatus ribbonres_count_ribbon_ssyt(const size_t *parts,
                                                 size_t len,
                                                 size_t n,
                                                 uint64_t *out);

// Generator degree `di+r` and rank of the `i`-th resolvent of `S^(d,r)`.
//
// # Safety
// `degree` and `rank` must be writable.
enum RibbonresStatus ribbonres_betti(size_t d,
                                     size_t r,
                                     size_t n,
                                     size_t i,
                                     size_t *degree,
                                     size_t *rank);

// Builds the resolution window up to homological degree `i_max` and
// internal degree `deg_max`. `ring` is `"q"`, `"z"` or `"fp:<p>"`; null
// means `"q"`.
//
// # Safety
// `ring` is null or a NUL-terminated string; `out` must be writable.
enum RibbonresStatus ribbonres_resolution_new(size_t d,
                                              size_t r,
                                              size_t n,
                                              const char *ring,
                                              size_t i_max,
                                              size_t deg_max,
                                              struct RibbonresResolution **out);

// # Safety
// `h` is null or a handle from `ribbonres_resolution_new` not yet freed.
void ribbonres_resolution_free(struct RibbonresResolution *h);

// Number of resolvents in the window (`i_max + 1`).
//
// # Safety
// `h` must be a live handle and `out` writable.
enum RibbonresStatus ribbonres_resolution_num_steps(const struct RibbonresResolution *h,
                                                    size_t *out);

// Generator degree and number of generators of resolvent `i`.
//
// # Safety
// `h` must be a live handle; `degree` and `generators` writable.
enum RibbonresStatus ribbonres_resolution_step(const struct RibbonresResolution *h,
                                               size_t i,
                                               size_t *degree,
                                               size_t *generators);

// Runs the exactness, minimality, Betti and Euler checks on the window;
// `passed` receives whether all of them hold.
//
// # Safety
// `h` must be a live handle and `passed` writable.
enum RibbonresStatus ribbonres_resolution_verify(const struct RibbonresResolution *h, bool *passed);

// Runs the default verification suite for `n` variables over `ring`.
// A suite with failing checks still returns `RIBBONRES_STATUS_OK`; query
// `ribbonres_report_passed`.
//
// # Safety
// `ring` is null or a NUL-terminated string; `out` must be writable.
enum RibbonresStatus ribbonres_verify_all(size_t n, const char *ring, struct RibbonresReport **out);

// # Safety
// `h` must be a live handle and `passed` writable.
enum RibbonresStatus ribbonres_report_passed(const struct RibbonresReport *h, bool *passed);

// # Safety
// `h` must be a live handle and `out` writable.
enum RibbonresStatus ribbonres_report_num_checks(const struct RibbonresReport *h, size_t *out);

// JSON rendering of the report, owned by the handle.
//
// # Safety
// `h` must be a live handle; the result is valid until it is freed.
const char *ribbonres_report_json(const struct RibbonresReport *h);

// # Safety
// `h` is null or a handle from `ribbonres_verify_all` not yet freed.
void ribbonres_report_free(struct RibbonresReport *h);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* RIBBONRES_H */
