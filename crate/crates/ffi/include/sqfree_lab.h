#ifndef SQFREE_LAB_H
#define SQFREE_LAB_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Pass as `characteristic` to use the `char:` line of an ideal file (or the rationals).
 */
#define SQF_CHAR_FROM_INPUT UINT32_MAX

typedef enum SqfStatus {
  SQF_STATUS_OK = 0,
  SQF_STATUS_INTERNAL = 1,
  SQF_STATUS_PARSE = 2,
  SQF_STATUS_PRECONDITION = 3,
  SQF_STATUS_NULL_POINTER = 4,
  SQF_STATUS_INVALID_ARGUMENT = 5,
  SQF_STATUS_BUFFER_TOO_SMALL = 6,
} SqfStatus;

typedef enum SqfOrder {
  SQF_ORDER_DEG_REV_LEX = 0,
  SQF_ORDER_LEX = 1,
} SqfOrder;

/**
 * A parsed simplicial complex.
 */
typedef struct SqfComplex SqfComplex;

/**
 * A parsed ideal file.
 */
typedef struct SqfIdeal SqfIdeal;

/**
 * A computed Lyubeznik table.
 */
typedef struct SqfLyubeznikTable SqfLyubeznikTable;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failure on this thread, or an empty string. The
 * pointer stays valid until the next call into this library on the thread.
 */
const char *sqf_last_error_message(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *sqf_version(void);

/**
 * Parses a complex file, or a squarefree monomial ideal file, into a new handle.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
enum SqfStatus sqf_complex_parse(const char *text_in, struct SqfComplex **out);

/**
 * # Safety
 * `complex` must come from [`sqf_complex_parse`] and not be freed twice. Null is ignored.
 */
void sqf_complex_free(struct SqfComplex *complex);

/**
 * Vertex count `n` of the ground set.
 *
 * # Safety
 * `complex` must be a live handle and `out` a valid pointer.
 */
enum SqfStatus sqf_complex_vertex_count(const struct SqfComplex *complex, size_t *out);

/**
 * Reduced Betti numbers `H~_{-1}, ..., H~_{dim}` written to `dims`. On
 * `BufferTooSmall`, `len` still receives the required length.
 *
 * # Safety
 * `dims` must have room for `capacity` entries; `complex` and `len` must be valid.
 */
enum SqfStatus sqf_complex_homology(const struct SqfComplex *complex,
                                    uint32_t characteristic,
                                    size_t *dims,
                                    size_t capacity,
                                    size_t *len);

/**
 * Reisner's criterion.
 *
 * # Safety
 * `complex` must be a live handle and `out` a valid pointer.
 */
enum SqfStatus sqf_complex_is_cohen_macaulay(const struct SqfComplex *complex,
                                             uint32_t characteristic,
                                             bool *out);

/**
 * # Safety
 * `complex` must be a live handle and `out` a valid pointer.
 */
enum SqfStatus sqf_complex_is_buchsbaum(const struct SqfComplex *complex,
                                        uint32_t characteristic,
                                        bool *out);

/**
 * Canonical Cohen-Macaulay test. `witness` (may be null) receives the first
 * failing index, or `-1` when the ring is CCM.
 *
 * # Safety
 * `complex` must be a live handle and `out` a valid pointer.
 */
enum SqfStatus sqf_complex_is_ccm(const struct SqfComplex *complex,
                                  uint32_t characteristic,
                                  bool *out,
                                  int32_t *witness);

/**
 * Number of connected components of the dual graph.
 *
 * # Safety
 * `complex` must be a live handle and `out` a valid pointer.
 */
enum SqfStatus sqf_complex_dual_graph_components(const struct SqfComplex *complex, size_t *out);

/**
 * Computes the Lyubeznik table into a new handle.
 *
 * # Safety
 * `complex` must be a live handle and `out` a valid pointer.
 */
enum SqfStatus sqf_lyubeznik_table(const struct SqfComplex *complex,
                                   uint32_t characteristic,
                                   struct SqfLyubeznikTable **out);

/**
 * # Safety
 * `table` must come from [`sqf_lyubeznik_table`] and not be freed twice. Null is ignored.
 */
void sqf_lyubeznik_table_free(struct SqfLyubeznikTable *table);

/**
 * The Krull dimension `d`; the table is `(d + 1) x (d + 1)`.
 *
 * # Safety
 * `table` must be a live handle and `out` a valid pointer.
 */
enum SqfStatus sqf_lyubeznik_table_dimension(const struct SqfLyubeznikTable *table, size_t *out);

/**
 * Entry `λ_{i,j}`.
 *
 * # Safety
 * `table` must be a live handle and `out` a valid pointer.
 */
enum SqfStatus sqf_lyubeznik_table_get(const struct SqfLyubeznikTable *table,
                                       size_t i,
                                       size_t j,
                                       size_t *out);

/**
 * # Safety
 * `table` must be a live handle and `out` a valid pointer.
 */
enum SqfStatus sqf_lyubeznik_table_is_trivial(const struct SqfLyubeznikTable *table, bool *out);

/**
 * Parses an ideal file into a new handle.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
enum SqfStatus sqf_ideal_parse(const char *text_in, struct SqfIdeal **out);

/**
 * # Safety
 * `ideal` must come from [`sqf_ideal_parse`] and not be freed twice. Null is ignored.
 */
void sqf_ideal_free(struct SqfIdeal *ideal);

/**
 * Minimal generators of the initial ideal as a JSON array of strings, e.g.
 * `["x2*x4","x3*x4"]`. Release the string with [`sqf_string_free`].
 *
 * # Safety
 * `ideal` must be a live handle and `out` a valid pointer.
 */
enum SqfStatus sqf_ideal_initial_ideal_json(const struct SqfIdeal *ideal,
                                            uint32_t characteristic,
                                            enum SqfOrder order,
                                            char **out);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void sqf_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SQFREE_LAB_H */
