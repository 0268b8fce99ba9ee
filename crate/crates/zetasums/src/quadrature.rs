//! Independent tanh-sinh (double-exponential) quadrature over (0, 1), plus
//! the oracle integrals used to ground-truth every closed form in the crate.
//!
//! tanh-sinh was chosen over Gauss-Legendre because the starred oracles have
//! algebraic endpoint singularities for Re a, b in (0, 1); the same engine
//! serves the smooth cases. Abscissas are generated in the form that keeps
//! the distance to each endpoint fully resolved. Near x = 1 the integrand
//! argument is clamped to 1 - eps^(3/4) so that expressions like
//! zeta(b, 1 - x) stay computable; near x = 0 no such guard is needed (f64
//! resolves the abscissas all the way down), so x^sigma layers at the left
//! endpoint are integrated at full accuracy.

use num_complex::Complex64;

use crate::error::{EvalError, Result};
use crate::hurwitz::{hurwitz_zeta, zeta1};
use crate::series::pairwise_sum;

/// Default clamp distance eps_machine^(3/4).
fn default_clamp() -> f64 {
    f64::EPSILON.powf(0.75)
}

/// Oracle integral value with its level-difference error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult {
    pub value: Complex64,
    pub abs_error_estimate: f64,
    pub evaluations: usize,
}

/// Configuration for [`integrate_unit_interval`].
#[derive(Debug, Clone, Copy)]
pub struct QuadratureConfig {
    /// Refinement cap; level L uses step 2^-L in the transformed variable.
    pub max_level: u32,
    /// Stop once two successive levels differ by less than this.
    pub target_abs_error: f64,
    /// Endpoint exponent hints: real part of sigma in f ~ x^sigma as x -> 0.
    pub exponent_at_zero: f64,
    /// Same near x = 1.
    pub exponent_at_one: f64,
    /// Smallest distance to the x = 1 endpoint passed to the integrand.
    pub clamp: f64,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig {
            max_level: 12,
            target_abs_error: 1e-10,
            exponent_at_zero: 0.0,
            exponent_at_one: 0.0,
            clamp: default_clamp(),
        }
    }
}

impl QuadratureConfig {
    pub fn with_endpoint_exponents(zero: f64, one: f64) -> Result<Self> {
        if zero <= -1.0 || one <= -1.0 {
            return Err(EvalError::Domain(format!(
                "endpoint exponent not integrable: x^{zero} at 0, (1-x)^{one} at 1"
            )));
        }
        Ok(QuadratureConfig {
            exponent_at_zero: zero,
            exponent_at_one: one,
            ..Default::default()
        })
    }
}

const T_MAX: f64 = 6.5;

/// Node abscissa and weight at transformed coordinate t, with the distance
/// to the nearer endpoint computed in a cancellation-free form.
fn node(t: f64) -> Option<(f64, f64)> {
    use std::f64::consts::FRAC_PI_2;
    let u = FRAC_PI_2 * t.sinh();
    // x = 1/(1 + e^{-2u}) maps R onto (0, 1); 1 - x = 1/(1 + e^{2u}).
    let x = 1.0 / (1.0 + (-2.0 * u).exp());
    let cosh_u = u.cosh();
    if !cosh_u.is_finite() {
        return None;
    }
    // dx/dt = (pi/2) cosh t / (2 cosh^2 u)
    let w = FRAC_PI_2 * t.cosh() / (2.0 * cosh_u * cosh_u);
    if w == 0.0 || !w.is_finite() {
        return None;
    }
    Some((x, w))
}

/// Tanh-sinh quadrature of a complex-valued integrand over (0, 1).
pub fn integrate_unit_interval<F>(f: F, cfg: &QuadratureConfig) -> Result<QuadratureResult>
where
    F: Fn(f64) -> Complex64,
{
    let clamp = cfg.clamp;
    let eval = |x: f64| -> Complex64 { f(x.clamp(1e-300, 1.0 - clamp)) };

    let mut evaluations = 0usize;
    let mut prev_estimate;
    let mut estimate = Complex64::new(0.0, 0.0);
    let mut error = f64::INFINITY;

    // Level 0: step 1. Each later level adds the odd multiples of its step,
    // so earlier sums are reused.
    let mut sum_parts: Vec<Complex64> = Vec::new();
    for level in 0..=cfg.max_level {
        let h = 0.5f64.powi(level as i32);
        let mut new_vals: Vec<Complex64> = Vec::new();
        let mut push_node = |t: f64| -> Result<()> {
            if let Some((x, w)) = node(t) {
                let v = eval(x);
                if v.re.is_nan() || v.im.is_nan() {
                    return Err(EvalError::Domain(format!("integrand NaN at x = {x}")));
                }
                evaluations += 1;
                new_vals.push(w * v);
            }
            Ok(())
        };
        if level == 0 {
            let mut t = 0.0;
            while t <= T_MAX {
                push_node(t)?;
                if t > 0.0 {
                    push_node(-t)?;
                }
                t += 1.0;
            }
        } else {
            let mut k = 1u64;
            loop {
                let t = k as f64 * h;
                if t > T_MAX {
                    break;
                }
                push_node(t)?;
                push_node(-t)?;
                k += 2;
            }
        }
        sum_parts.push(pairwise_sum(&new_vals));
        prev_estimate = estimate;
        estimate = pairwise_sum(&sum_parts) * h;
        if level >= 2 {
            error = (estimate - prev_estimate).norm();
            if error <= cfg.target_abs_error {
                return Ok(QuadratureResult {
                    value: estimate,
                    abs_error_estimate: error,
                    evaluations,
                });
            }
        }
    }
    Ok(QuadratureResult {
        value: estimate,
        abs_error_estimate: error,
        evaluations,
    })
}

fn check_not_one(v: Complex64, name: &str) -> Result<()> {
    if (v - 1.0).norm() < 1e-10 {
        return Err(EvalError::Pole(format!(
            "{name} = 1 is a pole of the integrand"
        )));
    }
    Ok(())
}

/// Quadrature of the product of auxiliary zetas with equal shift arguments.
pub fn oracle_i(a: Complex64, b: Complex64) -> Result<QuadratureResult> {
    check_not_one(a, "a")?;
    check_not_one(b, "b")?;
    let f = move |x: f64| -> Complex64 {
        match (zeta1(a, x), zeta1(b, x)) {
            (Ok(u), Ok(v)) => u * v,
            _ => Complex64::new(f64::NAN, 0.0),
        }
    };
    integrate_unit_interval(f, &QuadratureConfig::default())
}

/// Quadrature of the product of auxiliary zetas with complementary shifts.
pub fn oracle_j(a: Complex64, b: Complex64) -> Result<QuadratureResult> {
    check_not_one(a, "a")?;
    check_not_one(b, "b")?;
    let f = move |x: f64| -> Complex64 {
        match (zeta1(a, x), zeta1(b, 1.0 - x)) {
            (Ok(u), Ok(v)) => u * v,
            _ => Complex64::new(f64::NAN, 0.0),
        }
    };
    integrate_unit_interval(f, &QuadratureConfig::default())
}

/// Singular-endpoint-aware quadrature of zeta(a, x) zeta(b, x); the
/// integrand blows up like x^-(a+b) at 0, so Re(a+b) < 1 is required.
pub fn oracle_i_star(a: Complex64, b: Complex64) -> Result<QuadratureResult> {
    if a.re >= 1.0 || b.re >= 1.0 || (a + b).re >= 1.0 {
        return Err(EvalError::Domain(
            "equal-shift product integral needs Re a < 1, Re b < 1, Re(a+b) < 1".into(),
        ));
    }
    check_not_one(a, "a")?;
    check_not_one(b, "b")?;
    let cfg = QuadratureConfig::with_endpoint_exponents(-(a + b).re, 0.0)?;
    let f = move |x: f64| -> Complex64 {
        match (hurwitz_zeta(a, x), hurwitz_zeta(b, x)) {
            (Ok(u), Ok(v)) => u * v,
            _ => Complex64::new(f64::NAN, 0.0),
        }
    };
    integrate_unit_interval(f, &cfg)
}

/// Singular-endpoint-aware quadrature of zeta(a, x) zeta(b, 1-x) with
/// exponents -a at 0 and -b at 1; Re a < 1, Re b < 1 required.
pub fn oracle_j_star(a: Complex64, b: Complex64) -> Result<QuadratureResult> {
    if a.re >= 1.0 || b.re >= 1.0 {
        return Err(EvalError::Domain(
            "complementary-shift product integral needs Re a < 1, Re b < 1".into(),
        ));
    }
    check_not_one(a, "a")?;
    check_not_one(b, "b")?;
    let cfg = QuadratureConfig::with_endpoint_exponents(-a.re, -b.re)?;
    let f = move |x: f64| -> Complex64 {
        match (hurwitz_zeta(a, x), hurwitz_zeta(b, 1.0 - x)) {
            (Ok(u), Ok(v)) => u * v,
            _ => Complex64::new(f64::NAN, 0.0),
        }
    };
    integrate_unit_interval(f, &cfg)
}

/// Quadrature of the moment integrand x^n zeta(a, x); needs Re a < n + 1.
pub fn oracle_moment(n: u32, a: Complex64) -> Result<QuadratureResult> {
    if a.re >= n as f64 + 1.0 {
        return Err(EvalError::Domain(format!(
            "moment integral needs Re a < n + 1 = {}",
            n as f64 + 1.0
        )));
    }
    check_not_one(a, "a")?;
    let cfg = QuadratureConfig::with_endpoint_exponents(n as f64 - a.re, 0.0)?;
    // split form x^n zeta_1(a,x) + x^(n-a): the combined power stays in
    // range where x^n and zeta(a,x) would under/overflow separately
    let f = move |x: f64| -> Complex64 {
        match zeta1(a, x) {
            Ok(v) => {
                x.powi(n as i32) * v
                    + crate::series::pow_real_base(x, Complex64::new(n as f64, 0.0) - a)
            }
            _ => Complex64::new(f64::NAN, 0.0),
        }
    };
    integrate_unit_interval(f, &cfg)
}
