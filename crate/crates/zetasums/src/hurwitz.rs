//! Hurwitz zeta, the auxiliary (zeroth-term-removed) zeta, and its Taylor
//! expansions in the shift argument.
//!
//! Route selection for zeta(a, x):
//! * a at a non-positive integer -n: exact Bernoulli polynomial value
//!   -B_{n+1}(x)/(n+1);
//! * Re a > -2: Euler-Maclaurin with the shift scaled to |a|;
//! * Re a <= -2: the expansion over sin(2 pi n x + pi a / 2)/n^{1-a} on the
//!   reduced shift, which avoids the heavy cancellation Euler-Maclaurin
//!   suffers in f64 at strongly negative Re a.

use num_complex::Complex64;

use crate::bernoulli;
use crate::constants::PI;
use crate::error::{EvalError, Result};
use crate::gamma::gamma;
use crate::series::{near_integer, SeriesAccumulator, SeriesValue, INT_EPS, MAX_TERMS};
use crate::zeta::riemann_zeta;

fn em_shift(a: Complex64) -> usize {
    ((10.0 + 0.55 * a.norm()).ceil() as usize).clamp(10, 80)
}

/// Euler-Maclaurin core; valid for complex shift with Re x > 0.
pub(crate) fn hurwitz_em(a: Complex64, x: Complex64) -> Complex64 {
    let m = em_shift(a);
    let table = bernoulli::shared();

    let mut acc = Complex64::new(0.0, 0.0);
    for k in 0..m {
        acc += (x + k as f64).powc(-a);
    }
    let base = x + m as f64;
    let base_pow = base.powc(-a);
    acc += base_pow * base / (a - 1.0);
    acc += 0.5 * base_pow;

    let inv_b2 = 1.0 / (base * base);
    let mut poch = a;
    let mut power = base_pow / base;
    let mut fact = 2.0;
    let mut prev = f64::INFINITY;
    for j in 1.. {
        let b = table.as_f64(2 * j).unwrap_or(f64::NAN);
        let term = b / fact * poch * power;
        let mag = term.norm();
        if !mag.is_finite() || mag > prev {
            break;
        }
        acc += term;
        if mag <= 1e-18 * acc.norm().max(1.0) {
            break;
        }
        prev = mag;
        if 2 * (j + 1) >= bernoulli::SHARED_MAX_INDEX {
            break;
        }
        poch *= (a + (2 * j - 1) as f64) * (a + (2 * j) as f64);
        power *= inv_b2;
        fact *= (2 * j + 1) as f64 * (2 * j + 2) as f64;
    }
    acc
}

/// Expansion of zeta(a, x) over n^{a-1} sin(2 pi n x + pi a / 2) for
/// Re a < 0 and 0 < x <= 1, with a one-step Abel correction on the tail.
fn hurwitz_reflected(a: Complex64, x: f64) -> Result<Complex64> {
    debug_assert!(x > 0.0 && x <= 1.0);
    let ca = (PI * a / 2.0).cos();
    let sa = (PI * a / 2.0).sin();
    let p = a - 1.0;
    let mut acc = Complex64::new(0.0, 0.0);
    let mut n = 1usize;
    let mut last = Complex64::new(0.0, 0.0);
    while n <= MAX_TERMS {
        let theta = 2.0 * PI * n as f64 * x;
        let npow = Complex64::new(n as f64, 0.0).powc(p);
        last = npow * (theta.sin() * ca + theta.cos() * sa);
        acc += last;
        if last.norm() <= 1e-16 * acc.norm().max(1e-300) && n > 8 {
            break;
        }
        n += 1;
    }
    // One Abel step on the oscillatory tail: sum_{k>n} k^p e^{2 pi i k x}
    // ~ (n+1)^p q^{n+1} / (1 - q), split back into sin/cos parts.
    if n < MAX_TERMS {
        let q = Complex64::new(0.0, 2.0 * PI * x).exp();
        let np1 = Complex64::new(n as f64 + 1.0, 0.0).powc(p);
        let head = np1 * q.powu(n as u32 + 1) / (1.0 - q);
        // sin(theta + phi) = Im(e^{i theta}) cos(phi) + Re(e^{i theta}) sin(phi):
        // with complex a the two parts come from the analytic continuation of
        // the same combination, so take the corresponding combination of the
        // geometric head.
        let head_sin = Complex64::new(head.im, 0.0);
        let head_cos = Complex64::new(head.re, 0.0);
        acc += head_sin * ca + head_cos * sa;
    }
    let _ = last;
    let pref = 2.0 * gamma(1.0 - a)? * ((a - 1.0) * (2.0 * PI).ln()).exp();
    Ok(pref * acc)
}

/// Hurwitz zeta zeta(a, x) for real shift x > 0, all complex a != 1.
pub fn hurwitz_zeta(a: Complex64, x: f64) -> Result<Complex64> {
    if x.is_nan() || x <= 0.0 {
        return Err(EvalError::Domain(format!(
            "hurwitz zeta needs x > 0, got {x}"
        )));
    }
    if (a - 1.0).norm() < 1e-12 {
        return Err(EvalError::Pole("hurwitz zeta pole at a = 1".into()));
    }
    if let Some(m) = near_integer(a, INT_EPS) {
        if m <= 0 {
            let n = (-m) as usize;
            let val = -bernoulli::shared().bernoulli_poly(n + 1, x)? / (n as f64 + 1.0);
            return Ok(Complex64::new(val, 0.0));
        }
    }
    if a.re > -2.0 {
        return Ok(hurwitz_em(a, Complex64::new(x, 0.0)));
    }
    // Reduce the shift into (0, 1], then add the split-off powers back.
    let m = if x <= 1.0 {
        0
    } else {
        (x - 1.0).ceil() as usize
    };
    let xf = x - m as f64;
    let mut val = hurwitz_reflected(a, xf)?;
    for j in 0..m {
        val -= Complex64::new(xf + j as f64, 0.0).powc(-a);
    }
    Ok(val)
}

/// The auxiliary function zeta_1(a, x) = zeta(a, x) - x^{-a} = zeta(a, x+1);
/// continuous on x in [0, 1], with zeta_1(a, 0) = zeta(a).
pub fn zeta1(a: Complex64, x: f64) -> Result<Complex64> {
    if x < 0.0 {
        return Err(EvalError::Domain(format!("zeta_1 needs x >= 0, got {x}")));
    }
    hurwitz_zeta(a, x + 1.0)
}

/// Expansion of zeta(a, b - x) in powers of x with coefficients
/// (a)_k zeta(a+k, b) / k!; converges for |x| < |b|.
pub fn wilton_zeta_shift(
    a: Complex64,
    b: Complex64,
    x: Complex64,
    tol: f64,
) -> Result<SeriesValue> {
    if (a - 1.0).norm() < 1e-12 {
        return Err(EvalError::Pole("expansion pole at a = 1".into()));
    }
    if b.re <= 0.0 {
        return Err(EvalError::Domain(
            "shift expansion is evaluated for Re b > 0 only".into(),
        ));
    }
    let divergent = x.norm() >= b.norm();
    let mut acc = SeriesAccumulator::with_cap(tol, if divergent { 64 } else { MAX_TERMS });
    let mut coeff = Complex64::new(1.0, 0.0); // (a)_k x^k / k!
    let mut k = 0usize;
    let mut grow_streak = 0u32;
    let mut prev = f64::INFINITY;
    loop {
        let term = coeff * hurwitz_em(a + k as f64, b);
        let mag = term.norm();
        if mag > prev {
            grow_streak += 1;
            if grow_streak >= 3 {
                let mut out = acc.finish();
                out.converged = false;
                return Ok(out);
            }
        } else {
            grow_streak = 0;
        }
        prev = mag;
        let more = acc.push(term);
        if !more {
            break;
        }
        coeff *= (a + k as f64) * x / (k as f64 + 1.0);
        k += 1;
    }
    let mut out = acc.finish();
    if divergent {
        out.converged = false;
    }
    Ok(out)
}

/// Taylor expansion of zeta(a, 1 - x) = sum_k (a)_k zeta(a+k) x^k / k! for
/// |x| < 1, with the pole-term limit convention at non-positive integer a.
pub fn zeta_one_minus(a: Complex64, x: f64, tol: f64) -> Result<SeriesValue> {
    if (a - 1.0).norm() < 1e-12 {
        return Err(EvalError::Pole("expansion pole at a = 1".into()));
    }
    let divergent = x.abs() >= 1.0;
    if let Some(m) = near_integer(a, INT_EPS) {
        if m <= 0 {
            // Finite sum: terms vanish for k > 1 - m.
            let pole_index = (1 - m) as usize;
            let mut sum = Complex64::new(0.0, 0.0);
            let mut coeff = 1.0f64; // (m)_k x^k / k!
            for k in 0..pole_index {
                sum += coeff * riemann_zeta(Complex64::new((m + k as i64) as f64, 0.0))?;
                coeff *= (m + k as i64) as f64 * x / (k as f64 + 1.0);
            }
            let k = pole_index;
            let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
            sum += sign * x.powi(k as i32) / k as f64;
            return Ok(SeriesValue::exact(sum, pole_index + 1));
        }
    }
    let mut acc = SeriesAccumulator::with_cap(tol, if divergent { 64 } else { MAX_TERMS });
    let mut coeff = Complex64::new(1.0, 0.0);
    let mut k = 0usize;
    loop {
        let term = coeff * riemann_zeta(a + k as f64)?;
        if !acc.push(term) {
            break;
        }
        coeff *= (a + k as f64) * x / (k as f64 + 1.0);
        k += 1;
    }
    let mut out = acc.finish();
    if divergent {
        out.converged = false;
    }
    Ok(out)
}
