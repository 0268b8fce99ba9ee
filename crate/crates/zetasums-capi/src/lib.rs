//! C ABI for the zetasums library.
//!
//! Every function returns a [`ZsStatus`] code and writes its result through
//! an out-pointer. Series evaluators take an opaque [`ZsContext`] handle
//! carrying the tolerance and term budget; contexts are immutable after
//! creation and may be shared across threads. The header is generated by
//! cbindgen into `include/zetasums.h` at build time.
//!
//! Pointer contract: every out-pointer is checked for null (reported as
//! `ZsErrNullArgument`) before being written exactly once; a non-null
//! pointer must reference writable memory of the right type, as with any
//! C interface.
#![allow(clippy::not_unsafe_ptr_arg_deref)]

use std::panic::{catch_unwind, AssertUnwindSafe};

use zetasums::double_sums::{
    s1_closed, s1_direct, s1_finite, s2_closed, s2_direct, s2_integer_sum,
};
use zetasums::integrals::{
    i_critical_line, i_eps_probe, i_via_2f1, i_via_zeta, j_critical_line, j_eps_probe, j_via_2f1,
    j_via_alt, j_via_zeta, ParameterPair,
};
use zetasums::moments::{h_finite, h_integer, h_negative_integer, h_series, MomentSpec};
use zetasums::quadrature::{oracle_i, oracle_i_star, oracle_j, oracle_j_star, oracle_moment};
use zetasums::{Complex, EvalError, SeriesValue};

/// Status codes returned by every entry point.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ZsStatus {
    ZsOk = 0,
    /// The argument sits on a pole.
    ZsErrPole = 1,
    /// The argument lies outside the formula's domain.
    ZsErrDomain = 2,
    /// Removable degeneracy; a different evaluator covers this point.
    ZsErrDegenerate = 3,
    /// A table-backed quantity was requested beyond the table size.
    ZsErrTableOverflow = 4,
    /// A required pointer was null.
    ZsErrNullArgument = 5,
    /// Internal failure.
    ZsErrInternal = 6,
}

/// Complex scalar used for parameters and results.
#[repr(C)]
#[derive(Clone, Copy, Debug)]
pub struct ZsComplex {
    pub re: f64,
    pub im: f64,
}

/// Value of a truncated series together with an error estimate.
#[repr(C)]
#[derive(Clone, Copy, Debug)]
pub struct ZsSeriesResult {
    pub value: ZsComplex,
    pub abs_error_estimate: f64,
    pub terms_used: u64,
    /// 1 when the truncation policy converged, 0 otherwise.
    pub converged: u8,
}

/// Quadrature value with its level-difference error estimate.
#[repr(C)]
#[derive(Clone, Copy, Debug)]
pub struct ZsQuadratureResult {
    pub value: ZsComplex,
    pub abs_error_estimate: f64,
    pub evaluations: u64,
}

/// Representation selector for the product integrals.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ZsRepresentation {
    /// Hypergeometric k-sum (usable at integer parameters, Re > 1).
    ZsRepHyp2f1 = 0,
    /// Zeta-series expansion (analytic continuation off the integers).
    ZsRepZetaSeries = 1,
    /// Alternating zeta-series expansion (J only).
    ZsRepAlternating = 2,
    /// Symmetric eps-offset probe for degenerate parameters.
    ZsRepEpsProbe = 3,
}

/// Opaque evaluation context: tolerance and term budget.
pub struct ZsContext {
    tol: f64,
    terms_max: usize,
}

fn cx(z: ZsComplex) -> Complex {
    Complex::new(z.re, z.im)
}

fn out_cx(z: Complex) -> ZsComplex {
    ZsComplex { re: z.re, im: z.im }
}

fn status_of(e: &EvalError) -> ZsStatus {
    match e {
        EvalError::Pole(_) => ZsStatus::ZsErrPole,
        EvalError::Domain(_) => ZsStatus::ZsErrDomain,
        EvalError::Degenerate(_) => ZsStatus::ZsErrDegenerate,
        EvalError::TableOverflow(_) => ZsStatus::ZsErrTableOverflow,
    }
}

fn write_complex(out: *mut ZsComplex, r: zetasums::Result<Complex>) -> ZsStatus {
    if out.is_null() {
        return ZsStatus::ZsErrNullArgument;
    }
    match r {
        Ok(v) => {
            unsafe { *out = out_cx(v) };
            ZsStatus::ZsOk
        }
        Err(e) => status_of(&e),
    }
}

fn write_series(out: *mut ZsSeriesResult, r: zetasums::Result<SeriesValue>) -> ZsStatus {
    if out.is_null() {
        return ZsStatus::ZsErrNullArgument;
    }
    match r {
        Ok(v) => {
            unsafe {
                *out = ZsSeriesResult {
                    value: out_cx(v.value),
                    abs_error_estimate: v.abs_error_estimate,
                    terms_used: v.terms_used as u64,
                    converged: v.converged as u8,
                }
            };
            ZsStatus::ZsOk
        }
        Err(e) => status_of(&e),
    }
}

fn write_quadrature(
    out: *mut ZsQuadratureResult,
    r: zetasums::Result<zetasums::QuadratureResult>,
) -> ZsStatus {
    if out.is_null() {
        return ZsStatus::ZsErrNullArgument;
    }
    match r {
        Ok(v) => {
            unsafe {
                *out = ZsQuadratureResult {
                    value: out_cx(v.value),
                    abs_error_estimate: v.abs_error_estimate,
                    evaluations: v.evaluations as u64,
                }
            };
            ZsStatus::ZsOk
        }
        Err(e) => status_of(&e),
    }
}

fn guarded(f: impl FnOnce() -> ZsStatus) -> ZsStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or(ZsStatus::ZsErrInternal)
}

/// Create an evaluation context. Non-finite or non-positive tolerances fall
/// back to the library default; terms_max = 0 selects the default budget.
#[no_mangle]
pub extern "C" fn zs_context_new(tol: f64, terms_max: u64) -> *mut ZsContext {
    let tol = if tol.is_finite() && tol > 0.0 {
        tol
    } else {
        zetasums::DEFAULT_TOL
    };
    let terms_max = if terms_max == 0 {
        400
    } else {
        terms_max as usize
    };
    Box::into_raw(Box::new(ZsContext { tol, terms_max }))
}

/// Release a context created by [`zs_context_new`].
///
/// # Safety
/// `ctx` must be a pointer previously returned by `zs_context_new` and not
/// yet freed; null is accepted and ignored.
#[no_mangle]
pub unsafe extern "C" fn zs_context_free(ctx: *mut ZsContext) {
    if !ctx.is_null() {
        drop(Box::from_raw(ctx));
    }
}

fn ctx_params(ctx: *const ZsContext) -> (f64, usize) {
    if ctx.is_null() {
        (zetasums::DEFAULT_TOL, 400)
    } else {
        let c = unsafe { &*ctx };
        (c.tol, c.terms_max)
    }
}

/// Gamma function.
#[no_mangle]
pub extern "C" fn zs_gamma(z: ZsComplex, out: *mut ZsComplex) -> ZsStatus {
    guarded(|| write_complex(out, zetasums::gamma::gamma(cx(z))))
}

/// Digamma function.
#[no_mangle]
pub extern "C" fn zs_digamma(z: ZsComplex, out: *mut ZsComplex) -> ZsStatus {
    guarded(|| write_complex(out, zetasums::gamma::digamma(cx(z))))
}

/// Riemann zeta function (analytic continuation, pole at s = 1).
#[no_mangle]
pub extern "C" fn zs_riemann_zeta(s: ZsComplex, out: *mut ZsComplex) -> ZsStatus {
    guarded(|| write_complex(out, zetasums::zeta::riemann_zeta(cx(s))))
}

/// zeta(s) - 1, at full relative precision for large Re s.
#[no_mangle]
pub extern "C" fn zs_riemann_zeta_m1(s: ZsComplex, out: *mut ZsComplex) -> ZsStatus {
    guarded(|| write_complex(out, zetasums::zeta::riemann_zeta_m1(cx(s))))
}

/// First derivative of the Riemann zeta function.
#[no_mangle]
pub extern "C" fn zs_zeta_deriv(s: ZsComplex, out: *mut ZsComplex) -> ZsStatus {
    guarded(|| write_complex(out, zetasums::zeta::zeta_deriv(cx(s))))
}

/// Hurwitz zeta zeta(a, x), real shift x > 0.
#[no_mangle]
pub extern "C" fn zs_hurwitz_zeta(a: ZsComplex, x: f64, out: *mut ZsComplex) -> ZsStatus {
    guarded(|| write_complex(out, zetasums::hurwitz::hurwitz_zeta(cx(a), x)))
}

/// Auxiliary zeta zeta_1(a, x) = zeta(a, x+1), continuous on x >= 0.
#[no_mangle]
pub extern "C" fn zs_zeta1(a: ZsComplex, x: f64, out: *mut ZsComplex) -> ZsStatus {
    guarded(|| write_complex(out, zetasums::hurwitz::zeta1(cx(a), x)))
}

/// I(a, b): the equal-shift product integral, through the selected
/// representation.
#[no_mangle]
pub extern "C" fn zs_eval_i(
    ctx: *const ZsContext,
    a: ZsComplex,
    b: ZsComplex,
    rep: ZsRepresentation,
    out: *mut ZsSeriesResult,
) -> ZsStatus {
    guarded(|| {
        let (tol, _) = ctx_params(ctx);
        let p = ParameterPair::new(cx(a), cx(b));
        let r = match rep {
            ZsRepresentation::ZsRepHyp2f1 => i_via_2f1(p, tol),
            ZsRepresentation::ZsRepZetaSeries => i_via_zeta(p, tol),
            ZsRepresentation::ZsRepEpsProbe => i_eps_probe(p, tol),
            ZsRepresentation::ZsRepAlternating => return ZsStatus::ZsErrDomain,
        };
        write_series(out, r)
    })
}

/// J(a, b): the complementary-shift product integral.
#[no_mangle]
pub extern "C" fn zs_eval_j(
    ctx: *const ZsContext,
    a: ZsComplex,
    b: ZsComplex,
    rep: ZsRepresentation,
    out: *mut ZsSeriesResult,
) -> ZsStatus {
    guarded(|| {
        let (tol, _) = ctx_params(ctx);
        let p = ParameterPair::new(cx(a), cx(b));
        let r = match rep {
            ZsRepresentation::ZsRepHyp2f1 => j_via_2f1(p, tol),
            ZsRepresentation::ZsRepZetaSeries => j_via_zeta(p, tol),
            ZsRepresentation::ZsRepAlternating => j_via_alt(p, tol),
            ZsRepresentation::ZsRepEpsProbe => j_eps_probe(p, tol),
        };
        write_series(out, r)
    })
}

/// I(1/2 + it, 1/2 - it) on the critical line; the result is real.
#[no_mangle]
pub extern "C" fn zs_critical_line_i(
    ctx: *const ZsContext,
    t: f64,
    out: *mut ZsSeriesResult,
) -> ZsStatus {
    guarded(|| {
        let (tol, _) = ctx_params(ctx);
        write_series(out, i_critical_line(t, tol))
    })
}

/// J(1/2 + it, 1/2 - it) on the critical line; the result is real.
#[no_mangle]
pub extern "C" fn zs_critical_line_j(
    ctx: *const ZsContext,
    t: f64,
    out: *mut ZsSeriesResult,
) -> ZsStatus {
    guarded(|| {
        let (tol, _) = ctx_params(ctx);
        write_series(out, j_critical_line(t, tol))
    })
}

/// Moment integral by the infinite series; needs Re a < n + 1, a != 1.
#[no_mangle]
pub extern "C" fn zs_moment_series(
    ctx: *const ZsContext,
    n: u32,
    a: ZsComplex,
    out: *mut ZsSeriesResult,
) -> ZsStatus {
    guarded(|| {
        let (tol, _) = ctx_params(ctx);
        write_series(
            out,
            MomentSpec::new(n, cx(a)).and_then(|s| h_series(s, tol)),
        )
    })
}

/// Moment integral by the finite sum.
#[no_mangle]
pub extern "C" fn zs_moment_finite(
    ctx: *const ZsContext,
    n: u32,
    a: ZsComplex,
    out: *mut ZsComplex,
) -> ZsStatus {
    guarded(|| {
        let (tol, _) = ctx_params(ctx);
        write_complex(
            out,
            MomentSpec::new(n, cx(a)).and_then(|s| h_finite(s, tol)),
        )
    })
}

/// Moment integral at integer exponent m with 2 <= m <= n.
#[no_mangle]
pub extern "C" fn zs_moment_integer(n: u32, m: u32, out: *mut f64) -> ZsStatus {
    guarded(|| {
        if out.is_null() {
            return ZsStatus::ZsErrNullArgument;
        }
        match h_integer(n, m) {
            Ok(v) => {
                unsafe { *out = v };
                ZsStatus::ZsOk
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Moment integral at exponent a = -m, non-positive integer.
#[no_mangle]
pub extern "C" fn zs_moment_negative_integer(n: u32, m: u32, out: *mut f64) -> ZsStatus {
    guarded(|| {
        if out.is_null() {
            return ZsStatus::ZsErrNullArgument;
        }
        match h_negative_integer(n, m) {
            Ok(v) => {
                unsafe { *out = v };
                ZsStatus::ZsOk
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Closed form of the factorial-coupled double sum.
#[no_mangle]
pub extern "C" fn zs_s1_closed(a: ZsComplex, b: ZsComplex, out: *mut ZsComplex) -> ZsStatus {
    guarded(|| write_complex(out, s1_closed(cx(a), cx(b))))
}

/// Finite closed form of the factorial-coupled sum at a = -m, b = -n.
#[no_mangle]
pub extern "C" fn zs_s1_finite(m: u32, n: u32, out: *mut f64) -> ZsStatus {
    guarded(|| {
        if out.is_null() {
            return ZsStatus::ZsErrNullArgument;
        }
        match s1_finite(m, n) {
            Ok(v) => {
                unsafe { *out = v };
                ZsStatus::ZsOk
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Closed form of the harmonic-coupled double sum.
#[no_mangle]
pub extern "C" fn zs_s2_closed(a: ZsComplex, b: ZsComplex, out: *mut ZsComplex) -> ZsStatus {
    guarded(|| write_complex(out, s2_closed(cx(a), cx(b))))
}

/// Limit of the harmonic-coupled sum at integer a + b = total <= 0.
#[no_mangle]
pub extern "C" fn zs_s2_integer_sum(a: ZsComplex, total: i64, out: *mut ZsComplex) -> ZsStatus {
    guarded(|| write_complex(out, s2_integer_sum(cx(a), total)))
}

/// Direct summation of the factorial-coupled double sum.
#[no_mangle]
pub extern "C" fn zs_s1_direct(
    ctx: *const ZsContext,
    a: ZsComplex,
    b: ZsComplex,
    out: *mut ZsSeriesResult,
) -> ZsStatus {
    guarded(|| {
        let (_, terms) = ctx_params(ctx);
        write_series(out, s1_direct(cx(a), cx(b), terms, terms))
    })
}

/// Direct summation of the harmonic-coupled double sum.
#[no_mangle]
pub extern "C" fn zs_s2_direct(
    ctx: *const ZsContext,
    a: ZsComplex,
    b: ZsComplex,
    out: *mut ZsSeriesResult,
) -> ZsStatus {
    guarded(|| {
        let (_, terms) = ctx_params(ctx);
        write_series(out, s2_direct(cx(a), cx(b), terms, terms))
    })
}

/// Quadrature oracle for I(a, b).
#[no_mangle]
pub extern "C" fn zs_oracle_i(
    a: ZsComplex,
    b: ZsComplex,
    out: *mut ZsQuadratureResult,
) -> ZsStatus {
    guarded(|| write_quadrature(out, oracle_i(cx(a), cx(b))))
}

/// Quadrature oracle for J(a, b).
#[no_mangle]
pub extern "C" fn zs_oracle_j(
    a: ZsComplex,
    b: ZsComplex,
    out: *mut ZsQuadratureResult,
) -> ZsStatus {
    guarded(|| write_quadrature(out, oracle_j(cx(a), cx(b))))
}

/// Singular-endpoint quadrature of the equal-shift full-zeta product.
#[no_mangle]
pub extern "C" fn zs_oracle_i_star(
    a: ZsComplex,
    b: ZsComplex,
    out: *mut ZsQuadratureResult,
) -> ZsStatus {
    guarded(|| write_quadrature(out, oracle_i_star(cx(a), cx(b))))
}

/// Singular-endpoint quadrature of the complementary-shift full-zeta product.
#[no_mangle]
pub extern "C" fn zs_oracle_j_star(
    a: ZsComplex,
    b: ZsComplex,
    out: *mut ZsQuadratureResult,
) -> ZsStatus {
    guarded(|| write_quadrature(out, oracle_j_star(cx(a), cx(b))))
}

/// Quadrature oracle for the moment integral.
#[no_mangle]
pub extern "C" fn zs_oracle_moment(n: u32, a: ZsComplex, out: *mut ZsQuadratureResult) -> ZsStatus {
    guarded(|| write_quadrature(out, oracle_moment(n, cx(a))))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(re: f64, im: f64) -> ZsComplex {
        ZsComplex { re, im }
    }

    #[test]
    fn scalar_functions_through_the_abi() {
        let mut out = z(0.0, 0.0);
        assert_eq!(zs_riemann_zeta(z(2.0, 0.0), &mut out), ZsStatus::ZsOk);
        assert!((out.re - std::f64::consts::PI.powi(2) / 6.0).abs() < 1e-13);
        assert_eq!(zs_riemann_zeta(z(1.0, 0.0), &mut out), ZsStatus::ZsErrPole);
        assert_eq!(
            zs_hurwitz_zeta(z(2.0, 0.0), -1.0, &mut out),
            ZsStatus::ZsErrDomain
        );
        assert_eq!(
            zs_gamma(z(0.5, 0.0), std::ptr::null_mut()),
            ZsStatus::ZsErrNullArgument
        );
    }

    #[test]
    fn representations_agree_through_the_abi() {
        let ctx = zs_context_new(1e-13, 0);
        let mut hyp = ZsSeriesResult {
            value: z(0.0, 0.0),
            abs_error_estimate: 0.0,
            terms_used: 0,
            converged: 0,
        };
        let mut zet = hyp;
        assert_eq!(
            zs_eval_i(
                ctx,
                z(2.3, 0.0),
                z(3.7, 0.0),
                ZsRepresentation::ZsRepHyp2f1,
                &mut hyp
            ),
            ZsStatus::ZsOk
        );
        assert_eq!(
            zs_eval_i(
                ctx,
                z(2.3, 0.0),
                z(3.7, 0.0),
                ZsRepresentation::ZsRepZetaSeries,
                &mut zet
            ),
            ZsStatus::ZsOk
        );
        assert!((hyp.value.re - zet.value.re).abs() < 1e-9);
        assert_eq!(zet.converged, 1);
        // degenerate parameters surface as a status, not a crash
        let mut out = hyp;
        assert_eq!(
            zs_eval_i(
                ctx,
                z(2.0, 0.0),
                z(2.0, 0.0),
                ZsRepresentation::ZsRepZetaSeries,
                &mut out
            ),
            ZsStatus::ZsErrDegenerate
        );
        unsafe { zs_context_free(ctx) };
    }

    #[test]
    fn quadrature_through_the_abi() {
        let mut q = ZsQuadratureResult {
            value: z(0.0, 0.0),
            abs_error_estimate: 0.0,
            evaluations: 0,
        };
        assert_eq!(
            zs_oracle_j_star(z(0.0, 0.0), z(0.0, 0.0), &mut q),
            ZsStatus::ZsOk
        );
        assert!((q.value.re + 1.0 / 12.0).abs() < 1e-10);
        assert!(q.evaluations > 0);
    }

    #[test]
    fn null_context_uses_defaults() {
        let mut out = ZsSeriesResult {
            value: z(0.0, 0.0),
            abs_error_estimate: 0.0,
            terms_used: 0,
            converged: 0,
        };
        assert_eq!(
            zs_s2_direct(std::ptr::null(), z(0.0, 0.0), z(0.0, 0.0), &mut out),
            ZsStatus::ZsOk
        );
        assert!((out.value.re - 1.0 / 12.0).abs() < 1e-12);
    }
}
