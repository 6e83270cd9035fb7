#ifndef FANO_TORIC_H
#define FANO_TORIC_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum FtStatus {
  FT_STATUS_OK = 0,
  FT_STATUS_NULL_POINTER = 1,
  FT_STATUS_INVALID_ARGUMENT = 2,
  FT_STATUS_PARSE_ERROR = 3,
  FT_STATUS_SPEC_ERROR = 4,
  FT_STATUS_INVALID_POLYTOPE = 5,
  FT_STATUS_INTERNAL_ERROR = 6,
  FT_STATUS_PANIC = 7,
} FtStatus;

typedef struct FtPolytope FtPolytope;

typedef struct FtPolytopeList FtPolytopeList;

typedef struct FtReport FtReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, or null. The pointer
// stays valid until the next call into the library on the same thread.
const char *ft_last_error_message(void);

// Builds a polytope from `vertex_count` rows of `dim` coordinates stored
// row-major in `coords`.
//
// # Safety
// `name` must be a NUL-terminated string, `coords` must point to
// `dim * vertex_count` integers and `out` must be writable.
enum FtStatus ft_polytope_from_vertices(const char *name,
                                        size_t dim,
                                        const int64_t *coords,
                                        size_t vertex_count,
                                        struct FtPolytope **out);

// Builds a polytope from a family spec such as `product(simplex:2,hexagon)`.
//
// # Safety
// `spec` must be a NUL-terminated string and `out` must be writable.
enum FtStatus ft_polytope_construct(const char *spec, struct FtPolytope **out);

// # Safety
// `p` must be null or a handle from this library not yet freed.
void ft_polytope_free(struct FtPolytope *p);

// Dimension, or 0 for a null handle.
//
// # Safety
// `p` must be null or a live handle.
size_t ft_polytope_dim(const struct FtPolytope *p);

// Vertex count, or 0 for a null handle.
//
// # Safety
// `p` must be null or a live handle.
size_t ft_polytope_vertex_count(const struct FtPolytope *p);

// Writes whether `p` satisfies every smooth Fano condition. When it does
// not, the failures are available from `ft_last_error_message`.
//
// # Safety
// `p` must be a live handle and `valid` writable.
enum FtStatus ft_polytope_validate(const struct FtPolytope *p, bool *valid);

// Parses polytope text.
//
// # Safety
// `text` must be a NUL-terminated string and `out` writable.
enum FtStatus ft_polytope_list_parse(const char *text, struct FtPolytopeList **out);

// # Safety
// `list` must be null or a live handle.
size_t ft_polytope_list_len(const struct FtPolytopeList *list);

// Copies entry `index` into a new polytope handle.
//
// # Safety
// `list` must be a live handle and `out` writable.
enum FtStatus ft_polytope_list_get(const struct FtPolytopeList *list,
                                   size_t index,
                                   struct FtPolytope **out);

// # Safety
// `list` must be null or a handle from this library not yet freed.
void ft_polytope_list_free(struct FtPolytopeList *list);

// Runs the full analysis. Invalid polytopes still produce a report.
//
// # Safety
// `p` must be a live handle and `out` writable.
enum FtStatus ft_analyze(const struct FtPolytope *p, struct FtReport **out);

// # Safety
// `r` must be null or a handle from this library not yet freed.
void ft_report_free(struct FtReport *r);

// Picard rank, or 0 for a null handle.
//
// # Safety
// `r` must be null or a live handle.
int64_t ft_report_picard_rank(const struct FtReport *r);

// # Safety
// `r` must be null or a live handle.
bool ft_report_is_valid(const struct FtReport *r);

// # Safety
// `r` must be null or a live handle.
size_t ft_report_minimal_component_count(const struct FtReport *r);

// Number of violated theorem-level checks; nonzero means a bug.
//
// # Safety
// `r` must be null or a live handle.
size_t ft_report_theorem_violations(const struct FtReport *r);

// The report as pretty JSON with sorted keys; free with `ft_string_free`.
//
// # Safety
// `r` must be a live handle and `out` writable.
enum FtStatus ft_report_to_json(const struct FtReport *r, char **out);

// # Safety
// `s` must be null or a string returned by this library not yet freed.
void ft_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FANO_TORIC_H */
