#ifndef SPRINGER_H
#define SPRINGER_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum SpringerStatus {
  SPRINGER_STATUS_OK = 0,
  SPRINGER_STATUS_INVALID_ARGUMENT = 1,
  SPRINGER_STATUS_NULL_POINTER = 2,
  SPRINGER_STATUS_BUFFER_TOO_SMALL = 3,
  SPRINGER_STATUS_OUT_OF_RANGE = 4,
  SPRINGER_STATUS_INTERNAL = 5,
} SpringerStatus;

// Opaque restriction matrix handle.
typedef struct SpringerMatrix SpringerMatrix;

// Opaque partition handle.
typedef struct SpringerPartition SpringerPartition;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the most recent failure on this thread; valid until the next failing call.
const char *springer_last_error(void);

// Static description of a status code.
const char *springer_status_str(enum SpringerStatus status);

// # Safety
// `s` must be null or a string returned by this library, not yet freed.
void springer_string_free(char *s);

// Creates a partition from `len` row lengths.
//
// # Safety
// `rows` must point to `len` readable values and `out` must be writable.
enum SpringerStatus springer_partition_new(const uint32_t *rows,
                                           size_t len,
                                           struct SpringerPartition **out);

// Parses a partition such as `"4,2"`.
//
// # Safety
// `text` must be a NUL-terminated string and `out` must be writable.
enum SpringerStatus springer_partition_parse(const char *text, struct SpringerPartition **out);

// # Safety
// `p` must be null or a handle from `springer_partition_new`/`springer_partition_parse`.
void springer_partition_free(struct SpringerPartition *p);

// Number of boxes.
//
// # Safety
// `p` must be a valid handle and `out` writable.
enum SpringerStatus springer_partition_size(const struct SpringerPartition *p, size_t *out);

// Writes the Betti numbers `b_0, b_1, ...` into `buf`.
//
// `*out_len` always receives the required length; `BufferTooSmall` is returned when `cap` is short.
//
// # Safety
// `p` must be a valid handle, `buf` must hold `cap` values and `out_len` must be writable.
enum SpringerStatus springer_betti_numbers(const struct SpringerPartition *p,
                                           uint64_t *buf,
                                           size_t cap,
                                           size_t *out_len);

// Number of distinct highest forms of the Jordan matrix of shape `p`.
//
// # Safety
// `p` must be a valid handle and `out` writable.
enum SpringerStatus springer_highest_form_count(const struct SpringerPartition *p, uint64_t *out);

// Pinball table under the rotated English reading, as a JSON array.
//
// # Safety
// `p` must be a valid handle and `out` writable; free the result with `springer_string_free`.
enum SpringerStatus springer_pinball_json(const struct SpringerPartition *p, char **out);

// Builds the restriction matrix of `p`.
//
// # Safety
// `p` must be a valid handle and `out` writable; free the result with `springer_matrix_free`.
enum SpringerStatus springer_matrix_build(const struct SpringerPartition *p,
                                          struct SpringerMatrix **out);

// # Safety
// `m` must be null or a handle from `springer_matrix_build`.
void springer_matrix_free(struct SpringerMatrix *m);

// Number of rows (and columns).
//
// # Safety
// `m` must be a valid handle and `out` writable.
enum SpringerStatus springer_matrix_size(const struct SpringerMatrix *m, size_t *out);

// Entry at `(row, col)`, 0-based, as a JSON array of rational strings.
//
// # Safety
// `m` must be a valid handle and `out` writable; free the result with `springer_string_free`.
enum SpringerStatus springer_matrix_entry_json(const struct SpringerMatrix *m,
                                               size_t row,
                                               size_t col,
                                               char **out);

// The whole matrix as `{"order": [...], "entries": [[...]]}`.
//
// # Safety
// `m` must be a valid handle and `out` writable; free the result with `springer_string_free`.
enum SpringerStatus springer_matrix_json(const struct SpringerMatrix *m, char **out);

// Exact rank over `Q(t)`.
//
// # Safety
// `m` must be a valid handle; `out_rank` and `out_full` must be writable.
enum SpringerStatus springer_matrix_rank(const struct SpringerMatrix *m,
                                         size_t *out_rank,
                                         bool *out_full);

// Runs every basis check; writes the JSON report and whether everything passed.
//
// # Safety
// `p` must be a valid handle; `out_json` and `out_verified` must be writable.
enum SpringerStatus springer_verify_basis_json(const struct SpringerPartition *p,
                                               char **out_json,
                                               bool *out_verified);

// `p_v(u)` under the rotated English weights of `p`, as JSON. `v` and `u` are one-line
// permutations of length `n`.
//
// # Safety
// `p` must be a valid handle, `v` and `u` must hold `n` values and `out` must be writable.
enum SpringerStatus springer_restrict_json(const struct SpringerPartition *p,
                                           const uint32_t *v,
                                           const uint32_t *u,
                                           size_t n,
                                           char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SPRINGER_H */
