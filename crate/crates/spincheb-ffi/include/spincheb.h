/* C interface to the spin-j Chebyshev operator calculus. */

#ifndef SPINCHEB_H
#define SPINCHEB_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible function.
 */
typedef enum SpinchebStatus {
  /**
   * Success.
   */
  SpinchebStatus_Ok = 0,
  /**
   * A quantum number, rank, or range argument was invalid.
   */
  SpinchebStatus_InvalidArgument = 1,
  /**
   * A required pointer was null.
   */
  SpinchebStatus_NullPointer = 2,
} SpinchebStatus;

/**
 * Opaque table of `f_lambda^(j)(m)` values for one `j`.
 */
typedef struct SpinchebChebTable SpinchebChebTable;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static NUL-terminated string.
 */
const char *spincheb_version(void);

/**
 * Static human-readable message for a status code.
 */
const char *spincheb_status_message(int status);

/**
 * Chebyshev polynomial of a discrete variable, `f_lambda^(j)(m)`.
 *
 * # Safety
 * `out` must point to a writable double.
 */
enum SpinchebStatus spincheb_cheb(int twice_j, uint32_t lambda, int twice_m, double *out);

/**
 * Clebsch-Gordan coefficient `C^{c gamma}_{a alpha b beta}`; all quantum
 * numbers are twice their value.
 *
 * # Safety
 * `out` must point to a writable double.
 */
enum SpinchebStatus spincheb_clebsch_gordan(int twice_a,
                                            int twice_alpha,
                                            int twice_b,
                                            int twice_beta,
                                            int twice_c,
                                            int twice_gamma,
                                            double *out);

/**
 * Legendre polynomial `P_l(x)`.
 *
 * # Safety
 * `out` must point to a writable double.
 */
enum SpinchebStatus spincheb_legendre_p(uint32_t l, double x, double *out);

/**
 * Generalized character `chi_lambda^(j)(psi)`.
 *
 * # Safety
 * `out` must point to a writable double.
 */
enum SpinchebStatus spincheb_generalized_character(int twice_j,
                                                   uint32_t lambda,
                                                   double psi,
                                                   double *out);

/**
 * Transition probability `P^(j)_{m m'}` at relative axis angle `cos beta`.
 *
 * # Safety
 * `out` must point to a writable double.
 */
enum SpinchebStatus spincheb_meckler_probability(int twice_j,
                                                 int twice_m,
                                                 int twice_mp,
                                                 double cos_beta,
                                                 double *out);

/**
 * Closed-form extreme spin flip `P^(j)_{j,-j} = sin^{4j}(beta/2)`.
 *
 * # Safety
 * `out` must point to a writable double.
 */
enum SpinchebStatus spincheb_spin_flip_extreme(int twice_j, double beta, double *out);

/**
 * Closed-form next-to-extreme spin flip `P^(j)_{j-1,-(j-1)}`.
 *
 * # Safety
 * `out` must point to a writable double.
 */
enum SpinchebStatus spincheb_spin_flip_next(int twice_j, double beta, double *out);

/**
 * Reduced rotation matrix `d^j(beta)` written row-major into a
 * caller-allocated buffer of length `(2j+1)^2`.
 *
 * # Safety
 * `out` must point to at least `(twice_j + 1)^2` writable doubles.
 */
enum SpinchebStatus spincheb_wigner_small_d(int twice_j, double beta, double *out);

/**
 * Builds the full `f_lambda^(j)(m)` table; the handle must be released with
 * `spincheb_cheb_table_free`.
 *
 * # Safety
 * `out` must point to a writable handle slot.
 */
enum SpinchebStatus spincheb_cheb_table_new(int twice_j, struct SpinchebChebTable **out);

/**
 * Multiplet dimension `2j + 1` of a table.
 *
 * # Safety
 * `table` must be a live handle from `spincheb_cheb_table_new`.
 */
enum SpinchebStatus spincheb_cheb_table_dim(const struct SpinchebChebTable *table, uint32_t *out);

/**
 * Looks up `f_lambda^(j)(m)` in a table.
 *
 * # Safety
 * `table` must be a live handle from `spincheb_cheb_table_new`.
 */
enum SpinchebStatus spincheb_cheb_table_value(const struct SpinchebChebTable *table,
                                              uint32_t lambda,
                                              int twice_m,
                                              double *out);

/**
 * Releases a table handle; a null pointer is a no-op.
 *
 * # Safety
 * `table` must be null or a handle from `spincheb_cheb_table_new` that has
 * not been freed.
 */
void spincheb_cheb_table_free(struct SpinchebChebTable *table);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SPINCHEB_H */
