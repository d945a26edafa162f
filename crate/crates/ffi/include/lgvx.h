#ifndef LGVX_H
#define LGVX_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result code of every call.
typedef enum LgvxStatus {
  LGVX_STATUS_OK = 0,
  LGVX_STATUS_NULL_POINTER = 1,
  LGVX_STATUS_INVALID_UTF8 = 2,
  LGVX_STATUS_PARSE = 3,
  LGVX_STATUS_INVALID_INPUT = 4,
  LGVX_STATUS_LIMIT_EXCEEDED = 5,
  LGVX_STATUS_MIXED_SIGN = 6,
  LGVX_STATUS_INTERNAL = 7,
} LgvxStatus;

// Tiling counter selection for [`lgvx_region_count`].
typedef enum LgvxTileMethod {
  LGVX_TILE_METHOD_BRUTE = 0,
  LGVX_TILE_METHOD_PATHS = 1,
} LgvxTileMethod;

// A parsed graph file: drawing plus marked points.
typedef struct LgvxInstance LgvxInstance;

// A parsed region file.
typedef struct LgvxRegion LgvxRegion;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the most recent failure on this thread. Owned by the library;
// valid until the next call on the same thread.
const char *lgvx_last_error(void);

// Releases a string returned by this library.
//
// # Safety
// `s` must come from this library and not have been freed, or be null.
void lgvx_string_free(char *s);

// Parses and validates a graph file.
//
// # Safety
// `src` must be a NUL-terminated string and `out` a valid pointer.
enum LgvxStatus lgvx_instance_parse(const char *src, struct LgvxInstance **out);

// # Safety
// `inst` must come from [`lgvx_instance_parse`] and not have been freed, or be null.
void lgvx_instance_free(struct LgvxInstance *inst);

// Number of marked start/end pairs, or 0 for a null handle.
//
// # Safety
// `inst` must be a live handle or null.
size_t lgvx_instance_num_pairs(const struct LgvxInstance *inst);

// Weight of the non-intersecting families by the signed determinant, as
// polynomial text.
//
// # Safety
// `inst` must be a live handle and `out` a valid pointer.
enum LgvxStatus lgvx_instance_count(const struct LgvxInstance *inst, char **out);

// Same weight by exhaustive enumeration of families.
//
// # Safety
// `inst` must be a live handle and `out` a valid pointer.
enum LgvxStatus lgvx_instance_count_brute(const struct LgvxInstance *inst, char **out);

// The count evaluated at integer values, one per declared variable in file
// order, as decimal text.
//
// # Safety
// `inst` must be a live handle, `values` must point to `n_values` integers
// and `out` must be a valid pointer.
enum LgvxStatus lgvx_instance_count_at(const struct LgvxInstance *inst,
                                       const int64_t *values,
                                       size_t n_values,
                                       char **out);

// Parses a region file.
//
// # Safety
// `src` must be a NUL-terminated string and `out` a valid pointer.
enum LgvxStatus lgvx_region_parse(const char *src, struct LgvxRegion **out);

// # Safety
// `r` must come from [`lgvx_region_parse`] and not have been freed, or be null.
void lgvx_region_free(struct LgvxRegion *r);

// Number of domino tilings as decimal text.
//
// # Safety
// `r` must be a live handle and `out` a valid pointer.
enum LgvxStatus lgvx_region_count(const struct LgvxRegion *r,
                                  enum LgvxTileMethod method,
                                  char **out);

// Tilings of a mixed Aztec rectangle with four collinear holes at spacings
// `a, b, c`, as decimal text.
//
// # Safety
// `out` must be a valid pointer.
enum LgvxStatus lgvx_aztec_formula(uint32_t a, uint32_t b, uint32_t c, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LGVX_H */
