//! Pochhammer symbols, the beta function, Gauss hypergeometric evaluation
//! and two identity residuals built from it.
//!
//! The 2F1 evaluator uses the direct series for |z| <= 0.7. For real z in
//! (0.7, 1) it switches to the 1-z connection formula, taking the
//! logarithmic form when c - a - b is an integer; Pfaff's z/(z-1) map covers
//! real z < -0.7 and complex arguments whose image lands inside the series
//! region. The paper-facing sums only ever need z in [0, 1) and the Pfaff
//! image in (-1, 0), but the evaluator is kept general enough to
//! cross-check its own transformations.

use num_complex::Complex64;

use crate::constants::EULER_GAMMA;
use crate::error::{EvalError, Result};
use crate::gamma::{digamma, gamma, log_gamma, recip_gamma};
use crate::series::{near_integer, pow_real_base, SeriesAccumulator, SeriesValue, INT_EPS};

/// Rising factorial (a)_n with (a)_0 = 1.
pub fn pochhammer(a: Complex64, n: usize) -> Complex64 {
    let mut acc = Complex64::new(1.0, 0.0);
    for k in 0..n {
        acc *= a + k as f64;
    }
    acc
}

fn nonpositive_integer_of(z: Complex64) -> Option<i64> {
    near_integer(z, INT_EPS).filter(|&m| m <= 0)
}

/// B(x, y) = Gamma(x) Gamma(y) / Gamma(x+y), via log-gamma to avoid overflow.
pub fn beta_fn(x: Complex64, y: Complex64) -> Result<Complex64> {
    for (v, name) in [(x, "x"), (y, "y"), (x + y, "x+y")] {
        if nonpositive_integer_of(v).is_some() {
            return Err(EvalError::Pole(format!(
                "beta argument {name} = {v} at a gamma pole"
            )));
        }
    }
    Ok((log_gamma(x)? + log_gamma(y)? - log_gamma(x + y)?).exp())
}

/// Beta with the reciprocal-pole limit: returns 0 when only x + y sits at a
/// gamma pole (the situation B(1-a, 1-b) meets whenever a + b is an integer).
pub(crate) fn beta_or_zero(x: Complex64, y: Complex64) -> Result<Complex64> {
    for (v, name) in [(x, "x"), (y, "y")] {
        if nonpositive_integer_of(v).is_some() {
            return Err(EvalError::Degenerate(format!(
                "beta argument {name} = {v} at a gamma pole"
            )));
        }
    }
    if nonpositive_integer_of(x + y).is_some() {
        return Ok(Complex64::new(0.0, 0.0));
    }
    Ok((log_gamma(x)? + log_gamma(y)? - log_gamma(x + y)?).exp())
}

/// Raw Gauss series for callers inside the crate that have already
/// established |z| is small enough.
pub(crate) fn gauss_series(
    a: Complex64,
    b: Complex64,
    c: Complex64,
    z: Complex64,
    tol: f64,
) -> SeriesValue {
    direct_series(a, b, c, z, tol)
}

fn direct_series(a: Complex64, b: Complex64, c: Complex64, z: Complex64, tol: f64) -> SeriesValue {
    let mut acc = SeriesAccumulator::new(tol);
    let mut term = Complex64::new(1.0, 0.0);
    let mut n = 0usize;
    loop {
        if !acc.push(term) {
            break;
        }
        let nf = n as f64;
        term *= (a + nf) * (b + nf) / ((c + nf) * (nf + 1.0)) * z;
        n += 1;
    }
    acc.finish()
}

/// Terminating case: a (or b, swapped by the caller) is the non-positive
/// integer -m; the sum has exactly m + 1 terms.
fn polynomial_series(m: usize, b: Complex64, c: Complex64, z: Complex64) -> SeriesValue {
    let a = Complex64::new(-(m as f64), 0.0);
    let mut sum = Complex64::new(1.0, 0.0);
    let mut term = Complex64::new(1.0, 0.0);
    for n in 0..m {
        let nf = n as f64;
        term *= (a + nf) * (b + nf) / ((c + nf) * (nf + 1.0)) * z;
        sum += term;
    }
    SeriesValue::exact(sum, m + 1)
}

/// Two-term 1-z connection formula, valid when d = c - a - b is not an integer.
fn connection_generic(
    a: Complex64,
    b: Complex64,
    c: Complex64,
    w: f64,
    tol: f64,
) -> Result<SeriesValue> {
    let d = c - a - b;
    let gc = gamma(c)?;
    let coef1 = gc * gamma(d)? * recip_gamma(c - a) * recip_gamma(c - b);
    let coef2 = gc * gamma(-d)? * recip_gamma(a) * recip_gamma(b);
    let wz = Complex64::new(w, 0.0);
    let s1 = direct_series(a, b, 1.0 - d, wz, tol);
    let s2 = direct_series(c - a, c - b, 1.0 + d, wz, tol);
    let value = coef1 * s1.value + pow_real_base(w, d) * coef2 * s2.value;
    Ok(SeriesValue {
        value,
        abs_error_estimate: coef1.norm() * s1.abs_error_estimate
            + coef2.norm() * s2.abs_error_estimate,
        terms_used: s1.terms_used + s2.terms_used,
        converged: s1.converged && s2.converged,
    })
}

/// Logarithmic 1-z connection for integer d = c - a - b.
fn connection_log_case(
    a: Complex64,
    b: Complex64,
    c: Complex64,
    d: i64,
    w: f64,
    tol: f64,
) -> Result<SeriesValue> {
    let log_w = Complex64::new(w.ln(), 0.0);
    let wz = Complex64::new(w, 0.0);
    let gc = gamma(c)?;

    if d >= 0 {
        // c = a + b + m
        let m = d as usize;
        let mut finite = Complex64::new(0.0, 0.0);
        if m > 0 {
            let coef = gamma(Complex64::new(m as f64, 0.0))?
                * gc
                * recip_gamma(a + m as f64)
                * recip_gamma(b + m as f64);
            let mut term = Complex64::new(1.0, 0.0);
            let mut sum = Complex64::new(0.0, 0.0);
            for k in 0..m {
                sum += term;
                let kf = k as f64;
                term *= (a + kf) * (b + kf) / ((1.0 - m as f64 + kf) * (kf + 1.0)) * wz;
            }
            finite = coef * sum;
        }
        let sign = if m.is_multiple_of(2) { 1.0 } else { -1.0 };
        let coef_log = -sign * gc * recip_gamma(a) * recip_gamma(b) * wz.powu(m as u32);
        let mut psi1 = -EULER_GAMMA; // psi(k+1)
        let mut psi2 = digamma(Complex64::new(m as f64 + 1.0, 0.0))?.re; // psi(k+m+1)
        let mut psi_a = digamma(a + m as f64)?;
        let mut psi_b = digamma(b + m as f64)?;
        let mut fact_ratio = 1.0 / factorial(m); // 1/(k!(k+m)!) progressive
        let mut poch = Complex64::new(1.0, 0.0); // (a+m)_k (b+m)_k
        let mut wp = Complex64::new(1.0, 0.0);
        let mut acc = SeriesAccumulator::new(tol);
        let mut k = 0usize;
        loop {
            let bracket = log_w - psi1 - psi2 + psi_a + psi_b;
            let term = poch * fact_ratio * wp * bracket;
            if !acc.push(term) {
                break;
            }
            let kf = k as f64;
            poch *= (a + m as f64 + kf) * (b + m as f64 + kf);
            fact_ratio /= (kf + 1.0) * (kf + 1.0 + m as f64);
            wp *= wz;
            psi1 += 1.0 / (kf + 1.0);
            psi2 += 1.0 / (kf + 1.0 + m as f64);
            psi_a += 1.0 / (a + m as f64 + kf);
            psi_b += 1.0 / (b + m as f64 + kf);
            k += 1;
        }
        let series = acc.finish();
        Ok(SeriesValue {
            value: finite + coef_log * series.value,
            abs_error_estimate: coef_log.norm() * series.abs_error_estimate,
            terms_used: series.terms_used + m,
            converged: series.converged,
        })
    } else {
        // c = a + b - m
        let m = (-d) as usize;
        let coef_fin = gamma(Complex64::new(m as f64, 0.0))?
            * gc
            * recip_gamma(a)
            * recip_gamma(b)
            * pow_real_base(w, Complex64::new(-(m as f64), 0.0));
        let mut term = Complex64::new(1.0, 0.0);
        let mut sum = Complex64::new(0.0, 0.0);
        for k in 0..m {
            sum += term;
            let kf = k as f64;
            term *= (a - m as f64 + kf) * (b - m as f64 + kf)
                / ((1.0 - m as f64 + kf) * (kf + 1.0))
                * wz;
        }
        let finite = coef_fin * sum;

        let sign = if m.is_multiple_of(2) { 1.0 } else { -1.0 };
        let coef_log = -sign * gc * recip_gamma(a - m as f64) * recip_gamma(b - m as f64);
        let mut psi1 = -EULER_GAMMA;
        let mut psi2 = digamma(Complex64::new(m as f64 + 1.0, 0.0))?.re;
        let mut psi_a = digamma(a)?;
        let mut psi_b = digamma(b)?;
        let mut fact_ratio = 1.0 / factorial(m);
        let mut poch = Complex64::new(1.0, 0.0); // (a)_k (b)_k
        let mut wp = Complex64::new(1.0, 0.0);
        let mut acc = SeriesAccumulator::new(tol);
        let mut k = 0usize;
        loop {
            let bracket = log_w - psi1 - psi2 + psi_a + psi_b;
            let term = poch * fact_ratio * wp * bracket;
            if !acc.push(term) {
                break;
            }
            let kf = k as f64;
            poch *= (a + kf) * (b + kf);
            fact_ratio /= (kf + 1.0) * (kf + 1.0 + m as f64);
            wp *= wz;
            psi1 += 1.0 / (kf + 1.0);
            psi2 += 1.0 / (kf + 1.0 + m as f64);
            psi_a += 1.0 / (a + kf);
            psi_b += 1.0 / (b + kf);
            k += 1;
        }
        let series = acc.finish();
        Ok(SeriesValue {
            value: finite + coef_log * series.value,
            abs_error_estimate: coef_log.norm() * series.abs_error_estimate,
            terms_used: series.terms_used + m,
            converged: series.converged,
        })
    }
}

fn factorial(n: usize) -> f64 {
    let mut acc = 1.0f64;
    for k in 2..=n {
        acc *= k as f64;
    }
    acc
}

/// Gauss hypergeometric function 2F1(a, b; c; z).
pub fn gauss_2f1(
    a: Complex64,
    b: Complex64,
    c: Complex64,
    z: Complex64,
    tol: f64,
) -> Result<SeriesValue> {
    let a_int = nonpositive_integer_of(a);
    let b_int = nonpositive_integer_of(b);
    if let Some(q) = nonpositive_integer_of(c) {
        let rescued =
            a_int.map(|m| m >= q).unwrap_or(false) || b_int.map(|m| m >= q).unwrap_or(false);
        if !rescued {
            return Err(EvalError::Degenerate(format!(
                "lower parameter c = {c} is a non-positive integer"
            )));
        }
    }
    if z.norm() == 0.0 {
        return Ok(SeriesValue::exact(Complex64::new(1.0, 0.0), 1));
    }
    // Terminating numerator parameter: exact polynomial for any z.
    if let Some(m) = a_int {
        if b_int.map(|mb| mb < m).unwrap_or(true) {
            return Ok(polynomial_series((-m) as usize, b, c, z));
        }
    }
    if let Some(m) = b_int {
        return Ok(polynomial_series((-m) as usize, a, c, z));
    }
    if z.norm() <= 0.7 {
        return Ok(direct_series(a, b, c, z, tol));
    }
    if z.im == 0.0 && z.re > 0.7 && z.re < 1.0 {
        return gauss_2f1_near_one(a, b, c, 1.0 - z.re, tol);
    }
    // Pfaff map z -> z/(z-1); for real z < -0.7 this lands in (0.41, 0.5],
    // and it is also tried for complex arguments outside the series disk.
    let zp = z / (z - 1.0);
    if zp.norm() <= 0.7 || (zp.im == 0.0 && zp.re > 0.0 && zp.re < 1.0) {
        let inner = gauss_2f1(a, c - b, c, zp, tol)?;
        let pref = (Complex64::new(1.0, 0.0) - z).powc(-a);
        return Ok(SeriesValue {
            value: pref * inner.value,
            abs_error_estimate: pref.norm() * inner.abs_error_estimate,
            terms_used: inner.terms_used,
            converged: inner.converged,
        });
    }
    Err(EvalError::Domain(format!(
        "2F1 argument z = {z} outside the supported region"
    )))
}

/// 2F1(a, b; c; 1 - w) for small positive w, taking the distance to z = 1
/// directly so arguments exponentially close to 1 keep full precision.
pub(crate) fn gauss_2f1_near_one(
    a: Complex64,
    b: Complex64,
    c: Complex64,
    w: f64,
    tol: f64,
) -> Result<SeriesValue> {
    debug_assert!(w > 0.0 && w < 1.0);
    let d = c - a - b;
    match near_integer(d, INT_EPS) {
        Some(m) => connection_log_case(a, b, c, m, w, tol),
        None => connection_generic(a, b, c, w, tol),
    }
}

/// Explicit Pfaff-transformed evaluation, kept public so the transformation
/// can be cross-checked against the direct series.
pub fn gauss_2f1_pfaff(
    a: Complex64,
    b: Complex64,
    c: Complex64,
    z: Complex64,
    tol: f64,
) -> Result<SeriesValue> {
    let zp = z / (z - 1.0);
    let inner = gauss_2f1(a, c - b, c, zp, tol)?;
    let pref = (Complex64::new(1.0, 0.0) - z).powc(-a);
    Ok(SeriesValue {
        value: pref * inner.value,
        abs_error_estimate: pref.norm() * inner.abs_error_estimate,
        terms_used: inner.terms_used,
        converged: inner.converged,
    })
}

/// sum_{n>=1} (g)_n xi^n / ((mu)_n n); reduces to -ln(1 - xi) when g = mu.
pub fn pochhammer_log_series(
    g: Complex64,
    mu: Complex64,
    xi: f64,
    tol: f64,
) -> Result<SeriesValue> {
    if nonpositive_integer_of(mu).is_some() {
        return Err(EvalError::Degenerate(format!(
            "series parameter mu = {mu} is a non-positive integer"
        )));
    }
    if !(xi > 0.0 && xi < 1.0) {
        return Err(EvalError::Domain(format!(
            "series needs 0 < xi < 1, got {xi}"
        )));
    }
    let mut acc = SeriesAccumulator::new(tol);
    let mut ratio = Complex64::new(1.0, 0.0); // (g)_n xi^n / (mu)_n
    let mut n = 1usize;
    loop {
        ratio *= (g + (n - 1) as f64) / (mu + (n - 1) as f64) * xi;
        if !acc.push(ratio / n as f64) {
            break;
        }
        n += 1;
    }
    Ok(acc.finish())
}

/// Maximum quadratic-remainder ratio of the two first-order small-parameter
/// expansions of the prefactored Gauss series: evaluates both left sides at
/// the given eps, subtracts 1 + eps * (first-order bracket) and divides by
/// eps^2. Bounded on generic parameters.
pub fn epsilon_limit_residual(a: Complex64, b: Complex64, xi: f64, eps: f64) -> Result<f64> {
    if !(xi > 0.0 && xi < 1.0) {
        return Err(EvalError::Domain(format!("needs 0 < xi < 1, got {xi}")));
    }
    if !(eps > 0.0 && eps <= 1e-3) {
        return Err(EvalError::Domain(format!(
            "needs 0 < eps <= 1e-3, got {eps}"
        )));
    }
    for v in [a, b] {
        if near_integer(v, 1e-6).is_some() {
            return Err(EvalError::Degenerate(format!(
                "parameter {v} too close to an integer degeneracy"
            )));
        }
    }
    let tol = 1e-14;
    let g = a + b - 1.0;
    let h_a = pochhammer_log_series(g, a, xi, tol)?.value;
    let h_b = pochhammer_log_series(g, b, xi, tol)?.value;
    let one = Complex64::new(1.0, 0.0);

    let f_reg = gauss_2f1(a, 1.0 - b, 2.0 - b, Complex64::new(xi, 0.0), tol)?.value;
    let bracket1 = digamma(a)? - digamma(1.0 - b)?
        + pow_real_base(xi, 1.0 - b) * beta_fn(a, b - 1.0)? * f_reg
        + h_b;
    let lhs1 = pow_real_base(xi, 1.0 - b - eps)
        * gauss_2f1(a, 1.0 - b, a + eps, Complex64::new(1.0 - xi, 0.0), tol)?.value;
    let r1 = (lhs1 - one - eps * bracket1).norm() / (eps * eps);

    let bracket2 = h_a;
    let lhs2 = pow_real_base(1.0 - xi, 1.0 - b - eps)
        * gauss_2f1(a, 1.0 - b, a + eps, Complex64::new(xi, 0.0), tol)?.value;
    let r2 = (lhs2 - one - eps * bracket2).norm() / (eps * eps);

    Ok(r1.max(r2))
}

/// Residual of the half-argument identity
/// 2^-a sum_n (a)_n (1/2)^n / (n! (n+1-b)) + (a <-> b) = 2^-gamma B(1-a, 1-b).
pub fn beta_sum_identity_residual(a: Complex64, b: Complex64, tol: f64) -> Result<f64> {
    for v in [1.0 - a, 1.0 - b, 2.0 - a, 2.0 - b] {
        if nonpositive_integer_of(v).is_some() {
            return Err(EvalError::Degenerate(format!(
                "parameter combination {v} at a gamma pole"
            )));
        }
    }
    let half_sum = |p: Complex64, q: Complex64| -> SeriesValue {
        let mut acc = SeriesAccumulator::new(tol);
        let mut coeff = Complex64::new(1.0, 0.0); // (p)_n (1/2)^n / n!
        let mut n = 0usize;
        loop {
            let term = coeff / (Complex64::new(n as f64 + 1.0, 0.0) - q);
            if !acc.push(term) {
                break;
            }
            coeff *= (p + n as f64) * 0.5 / (n as f64 + 1.0);
            n += 1;
        }
        acc.finish()
    };
    let s_ab = half_sum(a, b);
    let s_ba = half_sum(b, a);
    let lhs = pow_real_base(2.0, -a) * s_ab.value + pow_real_base(2.0, -b) * s_ba.value;
    let g = a + b - 1.0;
    // the beta factor degenerates to 0 when 2 - a - b is a non-positive integer
    let rhs = pow_real_base(2.0, -g) * beta_or_zero(1.0 - a, 1.0 - b)?;
    Ok((lhs - rhs).norm())
}
