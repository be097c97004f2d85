/* C interface to the kostka library. */

#ifndef KOSTKA_H
#define KOSTKA_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by the C API.
 */
typedef enum KostkaStatus {
  KOSTKA_STATUS_OK = 0,
  /**
   * Malformed input (bad partition string, size mismatch, bad indices).
   */
  KOSTKA_STATUS_INVALID_INPUT = 1,
  /**
   * A mathematical cross-check failed.
   */
  KOSTKA_STATUS_CHECK_FAILED = 2,
  /**
   * A null pointer or non-UTF8 string was passed in.
   */
  KOSTKA_STATUS_BAD_POINTER = 3,
  /**
   * Internal panic; this is a bug.
   */
  KOSTKA_STATUS_PANIC = 4,
} KostkaStatus;

/**
 * Opaque handle around a Laurent polynomial in `q`.
 */
typedef struct KostkaPoly KostkaPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Last error message for this thread, or null if none.  The pointer stays
 * valid until the next failing call on the same thread; do not free it.
 */
const char *kostka_last_error(void);

/**
 * Frees a string returned by this library.
 *
 * # Safety
 * `s` must be a pointer previously returned by a `kostka_*` function that
 * documents `kostka_string_free`, and must not have been freed already.
 */
void kostka_string_free(char *s);

/**
 * Frees a polynomial handle.
 *
 * # Safety
 * `p` must come from a `kostka_*` constructor and not be freed twice.
 */
void kostka_poly_free(struct KostkaPoly *p);

/**
 * `K_{lambda,(1^N)}(q)` by the hook formula.  Returns null on error.
 *
 * # Safety
 * `lambda` must be a valid NUL-terminated string like "2,1".
 */
struct KostkaPoly *kostka_hook_poly(const char *lambda);

/**
 * `K_{lambda,mu}(q)` by the charge statistic.  Returns null on error.
 *
 * # Safety
 * Both arguments must be valid NUL-terminated strings.
 */
struct KostkaPoly *kostka_charge_poly(const char *lambda, const char *mu);

/**
 * `~K_{lambda,mu}(q)` from the graded trace decomposition of the
 * Garsia-Procesi ring `R_mu`.  Returns null on error.
 *
 * # Safety
 * Both arguments must be valid NUL-terminated strings.
 */
struct KostkaPoly *kostka_ring_tilde_poly(const char *lambda, const char *mu);

/**
 * `~K(q) = q^{n(mu)} K(1/q)` of an existing polynomial handle.
 *
 * # Safety
 * `k` must be a live polynomial handle; `mu` a valid string.
 */
struct KostkaPoly *kostka_tilde_poly(const struct KostkaPoly *k, const char *mu);

/**
 * Lowest exponent of the polynomial (0 for the zero polynomial).
 *
 * # Safety
 * `p` must be a live polynomial handle.
 */
int64_t kostka_poly_min_exp(const struct KostkaPoly *p);

/**
 * Highest exponent of the polynomial (0 for the zero polynomial).
 *
 * # Safety
 * `p` must be a live polynomial handle.
 */
int64_t kostka_poly_max_exp(const struct KostkaPoly *p);

/**
 * Coefficient of `q^e` as a decimal string; free with
 * [`kostka_string_free`].
 *
 * # Safety
 * `p` must be a live polynomial handle.
 */
char *kostka_poly_coeff(const struct KostkaPoly *p, int64_t e);

/**
 * The polynomial as a canonical JSON map `{"exponent": "coefficient"}`;
 * free with [`kostka_string_free`].
 *
 * # Safety
 * `p` must be a live polynomial handle.
 */
char *kostka_poly_to_json(const struct KostkaPoly *p);

/**
 * JSON report of the Garsia-Procesi ring `R_mu` (Hilbert series, Specht
 * decomposition, filtered dimensions, checks).  On success `*out_json`
 * holds a string to be freed with [`kostka_string_free`].
 *
 * # Safety
 * `mu` must be a valid NUL-terminated string; `out_json` a valid pointer.
 */
enum KostkaStatus kostka_ring_report(const char *mu, char **out_json);

/**
 * JSON report of the fusion product for the composition `mu` and rank `n`.
 *
 * # Safety
 * `mu` must be a valid NUL-terminated string; `out_json` a valid pointer.
 */
enum KostkaStatus kostka_fusion_report(const char *mu, int n, char **out_json);

/**
 * JSON report of the reduced wedge decomposition for `N` factors, rank `n`.
 *
 * # Safety
 * `out_json` must be a valid pointer.
 */
enum KostkaStatus kostka_wedge_report(int n_boxes, int n, char **out_json);

/**
 * JSON report of the W-algebra character and the stabilization sweep.
 *
 * # Safety
 * `mu` must be a valid NUL-terminated string; `out_json` a valid pointer.
 */
enum KostkaStatus kostka_winf_report(const char *mu,
                                     int n,
                                     int64_t depth,
                                     int m_max,
                                     char **out_json);

/**
 * Runs the verification suite; `level` 0 is quick, anything else full.
 * Returns `Ok` only if every criterion passes; `*out_json` always receives
 * the full report when the computation itself ran.
 *
 * # Safety
 * `out_json` must be a valid pointer.
 */
enum KostkaStatus kostka_verify(int level, char **out_json);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* KOSTKA_H */
