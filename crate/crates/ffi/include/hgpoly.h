#ifndef HGPOLY_H
#define HGPOLY_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

#define HG_POLY_CHI 0

#define HG_POLY_IND 1

#define HG_POLY_MATCH 2

#define HG_BASIS_NATIVE 0

#define HG_BASIS_MONOMIAL 1

#define HG_BASIS_FALLING 2

typedef enum HgStatus {
  HG_STATUS_OK = 0,
  /**
   * Null pointer, bad UTF-8 or an unknown enumeration value.
   */
  HG_STATUS_INVALID_ARGUMENT = 1,
  /**
   * The hypergraph or parameters are invalid.
   */
  HG_STATUS_VALIDATION = 2,
  /**
   * The instance is beyond a feasibility guard.
   */
  HG_STATUS_FEASIBILITY = 3,
  /**
   * A search budget was exhausted.
   */
  HG_STATUS_BUDGET = 4,
  HG_STATUS_INTERNAL = 5,
} HgStatus;

typedef struct HgHypergraph HgHypergraph;

typedef struct HgPolynomial HgPolynomial;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. Valid until the
 * next failing call on the same thread.
 */
const char *hg_last_error_message(void);

void hg_string_free(char *s);

/**
 * Build a hypergraph on `n` vertices. Edge `i` has `sizes[i]` vertices
 * (1-based) stored consecutively in `vertices`.
 */
enum HgStatus hg_hypergraph_new(size_t n,
                                const uint32_t *vertices,
                                const size_t *sizes,
                                size_t edge_count,
                                struct HgHypergraph **out);

/**
 * Parse the text or JSON hypergraph format.
 */
enum HgStatus hg_hypergraph_parse(const char *text, struct HgHypergraph **out);

/**
 * Generate a family from its JSON description, e.g.
 * `{"kind":"sunflower","n":7,"p":2,"r":3}`.
 */
enum HgStatus hg_family_from_json(const char *spec, struct HgHypergraph **out);

enum HgStatus hg_family_sunflower(size_t n, size_t p, size_t r, struct HgHypergraph **out);

enum HgStatus hg_family_hypercycle(size_t m, size_t r, struct HgHypergraph **out);

/**
 * The hypergraph with a smallest missing proper superset of an edge added;
 * the result has the same chromatic and independence polynomials.
 */
enum HgStatus hg_hypergraph_superset_extension(const struct HgHypergraph *h,
                                               struct HgHypergraph **out);

void hg_hypergraph_free(struct HgHypergraph *h);

/**
 * Vertex count, or 0 for a null handle.
 */
size_t hg_hypergraph_vertex_count(const struct HgHypergraph *h);

size_t hg_hypergraph_edge_count(const struct HgHypergraph *h);

enum HgStatus hg_hypergraph_to_json(const struct HgHypergraph *h, char **out);

/**
 * Compute polynomial `poly` (`HG_POLY_*`) with default limits.
 */
enum HgStatus hg_polynomial_compute(const struct HgHypergraph *h,
                                    uint32_t poly,
                                    struct HgPolynomial **out);

void hg_polynomial_free(struct HgPolynomial *p);

/**
 * JSON `{"basis":...,"coeffs":[...]}` in basis `HG_BASIS_*`; coefficients
 * are decimal strings.
 */
enum HgStatus hg_polynomial_to_json(const struct HgPolynomial *p, uint32_t basis, char **out);

/**
 * Value at `x` as a decimal string.
 */
enum HgStatus hg_polynomial_evaluate(const struct HgPolynomial *p, int64_t x, char **out);

/**
 * Exact equality, independent of basis.
 */
enum HgStatus hg_polynomial_equal(const struct HgPolynomial *a,
                                  const struct HgPolynomial *b,
                                  bool *out);

/**
 * 64-bit digest of the canonical form; equal for isomorphic hypergraphs.
 */
enum HgStatus hg_canonical_digest(const struct HgHypergraph *h, uint64_t *out);

enum HgStatus hg_are_isomorphic(const struct HgHypergraph *a,
                                const struct HgHypergraph *b,
                                bool *out);

/**
 * Number of non-isomorphic `r`-uniform hypergraphs on `n` vertices, as a
 * decimal string.
 */
enum HgStatus hg_count_nonisomorphic_uniform(size_t n, size_t r, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HGPOLY_H */
