#ifndef MINAFF_H
#define MINAFF_H

/* Generated by cbindgen. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Graded character status, mirrored for C callers.
typedef enum MinaffGradedStatus {
  MINAFF_GRADED_STATUS_PROVED = 0,
  MINAFF_GRADED_STATUS_CONJECTURAL = 1,
  MINAFF_GRADED_STATUS_UPPER_BOUND_ONLY = 2,
} MinaffGradedStatus;

// Result code of every fallible call.
typedef enum MinaffStatus {
  MINAFF_STATUS_OK = 0,
  MINAFF_STATUS_NULL_POINTER = 1,
  MINAFF_STATUS_INVALID_ARGUMENT = 2,
  MINAFF_STATUS_NOT_DOMINANT = 3,
  MINAFF_STATUS_OUT_OF_RANGE = 4,
  MINAFF_STATUS_BUFFER_TOO_SMALL = 5,
  MINAFF_STATUS_INTERNAL = 6,
} MinaffStatus;

// Opaque Dynkin diagram.
typedef struct MinaffDiagram MinaffDiagram;

// Opaque graded character of an E6 module `M(lambda)`.
typedef struct MinaffGraded MinaffGraded;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Library version as a static NUL-terminated string.
const char *minaff_version(void);

// Copies the calling thread's last error message into `buf`.
//
// `*needed` receives the size including the terminating NUL. Returns
// `BufferTooSmall` (and writes nothing) when `cap` is less than that; an
// empty string is written when there is no pending error.
//
// # Safety
// `buf` must point to `cap` writable bytes; `needed` must be valid or NULL.
enum MinaffStatus minaff_last_error(char *buf, size_t cap, size_t *needed);

// Releases a string returned by this library.
//
// # Safety
// `s` must come from this library and not have been freed.
void minaff_string_free(char *s);

// Builds a diagram from a type spec such as `E6`, `A3`, `D5` or
// `edges:1-2,2-3`.
//
// # Safety
// `spec` must be a NUL-terminated string; `out` must be writable.
enum MinaffStatus minaff_diagram_new(const char *spec, struct MinaffDiagram **out);

// # Safety
// `d` must come from [`minaff_diagram_new`] and not have been freed.
void minaff_diagram_free(struct MinaffDiagram *d);

// # Safety
// `d` must be a live diagram handle; `out` must be writable.
enum MinaffStatus minaff_diagram_rank(const struct MinaffDiagram *d, size_t *out);

// Number of positive roots.
//
// # Safety
// `d` must be a live diagram handle; `out` must be writable.
enum MinaffStatus minaff_diagram_positive_root_count(const struct MinaffDiagram *d, size_t *out);

// Positive roots as a JSON document.
//
// # Safety
// `d` must be a live diagram handle; `out` must be writable.
enum MinaffStatus minaff_roots_json(const struct MinaffDiagram *d, char **out);

// Dimension of `V(hw)` as a decimal string.
//
// # Safety
// `hw` must point to `len` integers; `out` must be writable.
enum MinaffStatus minaff_weyl_dim(const struct MinaffDiagram *d,
                                  const int64_t *hw,
                                  size_t len,
                                  char **out);

// Multiplicity of `mu` in `V(hw)` as a decimal string.
//
// # Safety
// `hw` and `mu` must point to `len` integers each; `out` must be writable.
enum MinaffStatus minaff_weight_multiplicity(const struct MinaffDiagram *d,
                                             const int64_t *hw,
                                             const int64_t *mu,
                                             size_t len,
                                             char **out);

// Character of `V(hw)` (dominant weights with multiplicities) as JSON.
//
// # Safety
// `hw` must point to `len` integers; `out` must be writable.
enum MinaffStatus minaff_character_json(const struct MinaffDiagram *d,
                                        const int64_t *hw,
                                        size_t len,
                                        char **out);

// Decomposition of `V(a) (x) V(b)` as JSON.
//
// # Safety
// `a` and `b` must point to `len` integers each; `out` must be writable.
enum MinaffStatus minaff_tensor_json(const struct MinaffDiagram *d,
                                     const int64_t *a,
                                     const int64_t *b,
                                     size_t len,
                                     char **out);

// Highest l-weight of a minimal affinization as JSON. `orientation` is
// `1` or `-1`.
//
// # Safety
// `lambda` must point to `len` integers; `out` must be writable.
enum MinaffStatus minaff_min_aff_json(const struct MinaffDiagram *d,
                                      const int64_t *lambda,
                                      size_t len,
                                      int32_t orientation,
                                      int64_t base,
                                      char **out);

// Root-set classification for E6 `lambda` (six coordinates) as JSON.
//
// # Safety
// `lambda` must point to `len` integers; `out` must be writable.
enum MinaffStatus minaff_psi_json(const int64_t *lambda, size_t len, char **out);

// Computes the graded character of the E6 module `M(lambda)`.
//
// # Safety
// `lambda` must point to `len` integers; `out` must be writable.
enum MinaffStatus minaff_graded_new(const int64_t *lambda, size_t len, struct MinaffGraded **out);

// # Safety
// `g` must come from [`minaff_graded_new`] and not have been freed.
void minaff_graded_free(struct MinaffGraded *g);

// # Safety
// `g` must be a live graded handle; `out` must be writable.
enum MinaffStatus minaff_graded_status(const struct MinaffGraded *g, enum MinaffGradedStatus *out);

// Largest degree with a nonzero component.
//
// # Safety
// `g` must be a live graded handle; `out` must be writable.
enum MinaffStatus minaff_graded_max_degree(const struct MinaffGraded *g, uint64_t *out);

// Dimension polynomial, e.g. `351 + 27 t`.
//
// # Safety
// `g` must be a live graded handle; `out` must be writable.
enum MinaffStatus minaff_graded_dimension_polynomial(const struct MinaffGraded *g, char **out);

// Full graded decomposition as JSON, with the dimension polynomial.
//
// # Safety
// `g` must be a live graded handle; `out` must be writable.
enum MinaffStatus minaff_graded_json(const struct MinaffGraded *g, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MINAFF_H */
