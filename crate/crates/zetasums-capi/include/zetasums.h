/* C interface to the zetasums library. */

#ifndef ZETASUMS_H
#define ZETASUMS_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes returned by every entry point.
typedef enum ZsStatus {
  ZsOk = 0,
  // The argument sits on a pole.
  ZsErrPole = 1,
  // The argument lies outside the formula's domain.
  ZsErrDomain = 2,
  // Removable degeneracy; a different evaluator covers this point.
  ZsErrDegenerate = 3,
  // A table-backed quantity was requested beyond the table size.
  ZsErrTableOverflow = 4,
  // A required pointer was null.
  ZsErrNullArgument = 5,
  // Internal failure.
  ZsErrInternal = 6,
} ZsStatus;

// Representation selector for the product integrals.
typedef enum ZsRepresentation {
  // Hypergeometric k-sum (usable at integer parameters, Re > 1).
  ZsRepHyp2f1 = 0,
  // Zeta-series expansion (analytic continuation off the integers).
  ZsRepZetaSeries = 1,
  // Alternating zeta-series expansion (J only).
  ZsRepAlternating = 2,
  // Symmetric eps-offset probe for degenerate parameters.
  ZsRepEpsProbe = 3,
} ZsRepresentation;

// Opaque evaluation context: tolerance and term budget.
typedef struct ZsContext ZsContext;

// Complex scalar used for parameters and results.
typedef struct ZsComplex {
  double re;
  double im;
} ZsComplex;

// Value of a truncated series together with an error estimate.
typedef struct ZsSeriesResult {
  struct ZsComplex value;
  double abs_error_estimate;
  uint64_t terms_used;
  // 1 when the truncation policy converged, 0 otherwise.
  uint8_t converged;
} ZsSeriesResult;

// Quadrature value with its level-difference error estimate.
typedef struct ZsQuadratureResult {
  struct ZsComplex value;
  double abs_error_estimate;
  uint64_t evaluations;
} ZsQuadratureResult;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Create an evaluation context. Non-finite or non-positive tolerances fall
// back to the library default; terms_max = 0 selects the default budget.
struct ZsContext *zs_context_new(double tol, uint64_t terms_max);

// Release a context created by [`zs_context_new`].
//
// # Safety
// `ctx` must be a pointer previously returned by `zs_context_new` and not
// yet freed; null is accepted and ignored.
void zs_context_free(struct ZsContext *ctx);

// Gamma function.
enum ZsStatus zs_gamma(struct ZsComplex z, struct ZsComplex *out);

// Digamma function.
enum ZsStatus zs_digamma(struct ZsComplex z, struct ZsComplex *out);

// Riemann zeta function (analytic continuation, pole at s = 1).
enum ZsStatus zs_riemann_zeta(struct ZsComplex s, struct ZsComplex *out);

// zeta(s) - 1, at full relative precision for large Re s.
enum ZsStatus zs_riemann_zeta_m1(struct ZsComplex s, struct ZsComplex *out);

// First derivative of the Riemann zeta function.
enum ZsStatus zs_zeta_deriv(struct ZsComplex s, struct ZsComplex *out);

// Hurwitz zeta zeta(a, x), real shift x > 0.
enum ZsStatus zs_hurwitz_zeta(struct ZsComplex a, double x, struct ZsComplex *out);

// Auxiliary zeta zeta_1(a, x) = zeta(a, x+1), continuous on x >= 0.
enum ZsStatus zs_zeta1(struct ZsComplex a, double x, struct ZsComplex *out);

// I(a, b): the equal-shift product integral, through the selected
// representation.
enum ZsStatus zs_eval_i(const struct ZsContext *ctx,
                        struct ZsComplex a,
                        struct ZsComplex b,
                        enum ZsRepresentation rep,
                        struct ZsSeriesResult *out);

// J(a, b): the complementary-shift product integral.
enum ZsStatus zs_eval_j(const struct ZsContext *ctx,
                        struct ZsComplex a,
                        struct ZsComplex b,
                        enum ZsRepresentation rep,
                        struct ZsSeriesResult *out);

// I(1/2 + it, 1/2 - it) on the critical line; the result is real.
enum ZsStatus zs_critical_line_i(const struct ZsContext *ctx, double t, struct ZsSeriesResult *out);

// J(1/2 + it, 1/2 - it) on the critical line; the result is real.
enum ZsStatus zs_critical_line_j(const struct ZsContext *ctx, double t, struct ZsSeriesResult *out);

// Moment integral by the infinite series; needs Re a < n + 1, a != 1.
enum ZsStatus zs_moment_series(const struct ZsContext *ctx,
                               uint32_t n,
                               struct ZsComplex a,
                               struct ZsSeriesResult *out);

// Moment integral by the finite sum.
enum ZsStatus zs_moment_finite(const struct ZsContext *ctx,
                               uint32_t n,
                               struct ZsComplex a,
                               struct ZsComplex *out);

// Moment integral at integer exponent m with 2 <= m <= n.
enum ZsStatus zs_moment_integer(uint32_t n, uint32_t m, double *out);

// Moment integral at exponent a = -m, non-positive integer.
enum ZsStatus zs_moment_negative_integer(uint32_t n, uint32_t m, double *out);

// Closed form of the factorial-coupled double sum.
enum ZsStatus zs_s1_closed(struct ZsComplex a, struct ZsComplex b, struct ZsComplex *out);

// Finite closed form of the factorial-coupled sum at a = -m, b = -n.
enum ZsStatus zs_s1_finite(uint32_t m, uint32_t n, double *out);

// Closed form of the harmonic-coupled double sum.
enum ZsStatus zs_s2_closed(struct ZsComplex a, struct ZsComplex b, struct ZsComplex *out);

// Limit of the harmonic-coupled sum at integer a + b = total <= 0.
enum ZsStatus zs_s2_integer_sum(struct ZsComplex a, int64_t total, struct ZsComplex *out);

// Direct summation of the factorial-coupled double sum.
enum ZsStatus zs_s1_direct(const struct ZsContext *ctx,
                           struct ZsComplex a,
                           struct ZsComplex b,
                           struct ZsSeriesResult *out);

// Direct summation of the harmonic-coupled double sum.
enum ZsStatus zs_s2_direct(const struct ZsContext *ctx,
                           struct ZsComplex a,
                           struct ZsComplex b,
                           struct ZsSeriesResult *out);

// Quadrature oracle for I(a, b).
enum ZsStatus zs_oracle_i(struct ZsComplex a, struct ZsComplex b, struct ZsQuadratureResult *out);

// Quadrature oracle for J(a, b).
enum ZsStatus zs_oracle_j(struct ZsComplex a, struct ZsComplex b, struct ZsQuadratureResult *out);

// Singular-endpoint quadrature of the equal-shift full-zeta product.
enum ZsStatus zs_oracle_i_star(struct ZsComplex a,
                               struct ZsComplex b,
                               struct ZsQuadratureResult *out);

// Singular-endpoint quadrature of the complementary-shift full-zeta product.
enum ZsStatus zs_oracle_j_star(struct ZsComplex a,
                               struct ZsComplex b,
                               struct ZsQuadratureResult *out);

// Quadrature oracle for the moment integral.
enum ZsStatus zs_oracle_moment(uint32_t n, struct ZsComplex a, struct ZsQuadratureResult *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ZETASUMS_H */
