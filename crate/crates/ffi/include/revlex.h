#ifndef REVLEX_H
#define REVLEX_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum RvxStatus {
  RVX_STATUS_OK = 0,
  RVX_STATUS_NULL_POINTER = 1,
  RVX_STATUS_INVALID_UTF8 = 2,
  RVX_STATUS_PARSE = 3,
  RVX_STATUS_INVALID_ARGUMENT = 4,
  RVX_STATUS_DEGENERATE = 5,
  RVX_STATUS_MISMATCH = 6,
  RVX_STATUS_PANIC = 7,
} RvxStatus;

/**
 * Reduced grevlex Gröbner basis.
 */
typedef struct RvxGroebner RvxGroebner;

/**
 * Polynomial ideal given by generators.
 */
typedef struct RvxIdeal RvxIdeal;

/**
 * Monomial ideal stored by its minimal generators.
 */
typedef struct RvxMonomialIdeal RvxMonomialIdeal;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread, or NULL.
 * The pointer stays valid until the next failing call on the same thread.
 */
const char *rvx_last_error(void);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library that has not been freed.
 */
void rvx_string_free(char *s);

/**
 * Parses an ideal file: a `ring <k> vars over <domain>` header followed by
 * one generator per line.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
enum RvxStatus rvx_ideal_parse(const char *text, struct RvxIdeal **out);

/**
 * # Safety
 * `ideal` must be NULL or a handle from [`rvx_ideal_parse`] not yet freed.
 */
void rvx_ideal_free(struct RvxIdeal *ideal);

/**
 * # Safety
 * `ideal` must be a live handle and `out` a valid pointer.
 */
enum RvxStatus rvx_groebner_basis(const struct RvxIdeal *ideal, struct RvxGroebner **out);

/**
 * # Safety
 * `gb` must be NULL or a handle from [`rvx_groebner_basis`] not yet freed.
 */
void rvx_groebner_free(struct RvxGroebner *gb);

/**
 * # Safety
 * `gb` must be a live handle and `out` a valid pointer.
 */
enum RvxStatus rvx_groebner_len(const struct RvxGroebner *gb, size_t *out);

/**
 * Basis in ideal-file form, sorted by ascending leading monomial.
 *
 * # Safety
 * `gb` must be a live handle and `out` a valid pointer. Free the result
 * with [`rvx_string_free`].
 */
enum RvxStatus rvx_groebner_to_string(const struct RvxGroebner *gb, char **out);

/**
 * Ideal membership of one polynomial written in the basis ring.
 *
 * # Safety
 * `gb` must be a live handle, `poly` a NUL-terminated string and `out` a valid pointer.
 */
enum RvxStatus rvx_groebner_contains(const struct RvxGroebner *gb, const char *poly, bool *out);

/**
 * # Safety
 * `gb` must be a live handle and `out` a valid pointer.
 */
enum RvxStatus rvx_groebner_initial_ideal(const struct RvxGroebner *gb,
                                          struct RvxMonomialIdeal **out);

/**
 * Parses `{"nvars": k, "generators": [[e1, .., ek], ..]}`; the generators
 * are minimalized.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a valid pointer.
 */
enum RvxStatus rvx_monomial_ideal_from_json(const char *json, struct RvxMonomialIdeal **out);

/**
 * Initial ideal of two generic binary forms of degrees `n <= m`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum RvxStatus rvx_closed_form_initial_ideal(uint32_t n, uint32_t m, struct RvxMonomialIdeal **out);

/**
 * Samples a generic pair over the default prime field and reports whether
 * the closed-form basis agrees with Buchberger. A disagreement is reported
 * through `agreement`, not the status.
 *
 * # Safety
 * `agreement` must be a valid pointer.
 */
enum RvxStatus rvx_closed_form_check(uint32_t n, uint32_t m, uint64_t seed, bool *agreement);

/**
 * # Safety
 * `ideal` must be NULL or a live monomial ideal handle.
 */
void rvx_monomial_ideal_free(struct RvxMonomialIdeal *ideal);

/**
 * # Safety
 * `ideal` must be a live handle and `out` a valid pointer. Free the result
 * with [`rvx_string_free`].
 */
enum RvxStatus rvx_monomial_ideal_to_json(const struct RvxMonomialIdeal *ideal, char **out);

/**
 * # Safety
 * `ideal` must be a live handle and `out` a valid pointer.
 */
enum RvxStatus rvx_monomial_ideal_num_generators(const struct RvxMonomialIdeal *ideal, size_t *out);

/**
 * # Safety
 * `ideal` must be a live handle and `out` a valid pointer.
 */
enum RvxStatus rvx_monomial_ideal_is_weakly_revlex(const struct RvxMonomialIdeal *ideal, bool *out);

/**
 * Revlex test. Artinian ideals are decided exactly; otherwise monomials of
 * degree up to `degree_bound` are examined.
 *
 * # Safety
 * `ideal` must be a live handle and `out` a valid pointer.
 */
enum RvxStatus rvx_monomial_ideal_is_revlex(const struct RvxMonomialIdeal *ideal,
                                            uint32_t degree_bound,
                                            bool *out);

/**
 * Number of standard monomials of an Artinian ideal.
 *
 * # Safety
 * `ideal` must be a live handle and `out` a valid pointer.
 */
enum RvxStatus rvx_monomial_ideal_colength(const struct RvxMonomialIdeal *ideal, uint64_t *out);

/**
 * # Safety
 * `ideal` must be a live two-variable handle and `out` a valid pointer.
 * Free the result with [`rvx_string_free`].
 */
enum RvxStatus rvx_staircase_ascii(const struct RvxMonomialIdeal *ideal, char **out);

/**
 * # Safety
 * `ideal` must be a live two-variable handle and `out` a valid pointer.
 * Free the result with [`rvx_string_free`].
 */
enum RvxStatus rvx_staircase_svg(const struct RvxMonomialIdeal *ideal, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* REVLEX_H */
