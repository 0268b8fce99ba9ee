//! Riemann zeta on the complex plane, its derivative, and the pole-term
//! limit convention for Pochhammer-zeta products.
//!
//! For Re s > -1/2 the values come from Euler-Maclaurin summation with the
//! shift scaled to |Im s| and an adaptive Bernoulli correction order; for
//! Re s <= -1/2 the functional equation maps back to the convergent region.
//! zeta(s) - 1 has its own evaluator so that series over {zeta(s+n) - 1}
//! keep full relative precision deep into the 2^-n tail.

use num_complex::Complex64;

use crate::bernoulli;
use crate::constants::{LOG_TWO_PI, PI};
use crate::error::{EvalError, Result};
use crate::gamma::{digamma, gamma};
use crate::series::{near_integer, INT_EPS};

fn em_shift(s: Complex64) -> usize {
    (12.0 + 0.6 * s.im.abs()).ceil() as usize
}

/// Euler-Maclaurin evaluation of zeta(s) - 1 for Re s > -1/2.
fn zeta_em_m1(s: Complex64) -> Complex64 {
    let m = em_shift(s);
    let mf = m as f64;
    let table = bernoulli::shared();

    let mut acc = Complex64::new(0.0, 0.0);
    for n in 2..m {
        acc += Complex64::new(n as f64, 0.0).powc(-s);
    }
    let m_pow = Complex64::new(mf, 0.0).powc(-s);
    acc += 0.5 * m_pow;
    acc += m_pow * mf / (s - 1.0);

    // Bernoulli corrections B_{2j}/(2j)! (s)_{2j-1} M^{-s-2j+1}, adaptive order.
    let inv_m2 = 1.0 / (mf * mf);
    let mut poch = s; // (s)_1
    let mut power = m_pow / mf; // M^{-s-1}
    let mut fact = 2.0; // (2j)!
    let mut prev = f64::INFINITY;
    for j in 1.. {
        let b = table.as_f64(2 * j).unwrap_or(f64::NAN);
        let term = b / fact * poch * power;
        let mag = term.norm();
        if !mag.is_finite() || mag > prev {
            break; // asymptotic divergence onset
        }
        acc += term;
        if mag <= 1e-18 * acc.norm().max(1.0) {
            break;
        }
        prev = mag;
        if 2 * (j + 1) >= bernoulli::SHARED_MAX_INDEX {
            break;
        }
        poch *= (s + (2 * j - 1) as f64) * (s + (2 * j) as f64);
        power *= inv_m2;
        fact *= (2 * j + 1) as f64 * (2 * j + 2) as f64;
    }
    acc
}

/// The functional-equation factor chi(s) = 2^s pi^(s-1) sin(pi s / 2) Gamma(1-s),
/// split so callers can regroup the sin with other factors.
fn chi_parts(s: Complex64) -> Result<(Complex64, Complex64)> {
    let pref = (s * 2.0_f64.ln()).exp() * ((s - 1.0) * PI.ln()).exp() * gamma(1.0 - s)?;
    Ok((pref, (PI * s / 2.0).sin()))
}

/// zeta(s) - 1, valid for all complex s except the pole at s = 1.
pub fn riemann_zeta_m1(s: Complex64) -> Result<Complex64> {
    if (s - 1.0).norm() < 1e-12 {
        return Err(EvalError::Pole("zeta pole at s = 1".into()));
    }
    if s.re > -0.5 {
        Ok(zeta_em_m1(s))
    } else {
        let (pref, sin_half) = chi_parts(s)?;
        let z = 1.0 + zeta_em_m1(1.0 - s);
        Ok(pref * sin_half * z - 1.0)
    }
}

/// Riemann zeta function; analytic continuation everywhere except s = 1.
pub fn riemann_zeta(s: Complex64) -> Result<Complex64> {
    Ok(riemann_zeta_m1(s)? + 1.0)
}

/// zeta(1 + eps); the pole sits in a single explicit Euler-Maclaurin term,
/// so evaluation stays stable down to |eps| ~ 1e-12.
pub fn riemann_zeta_near_one(eps: Complex64) -> Result<Complex64> {
    if eps.norm() == 0.0 {
        return Err(EvalError::Pole("zeta(1 + eps) requires eps != 0".into()));
    }
    riemann_zeta(Complex64::new(1.0, 0.0) + eps)
}

/// zeta'(s) by term-by-term differentiation of the Euler-Maclaurin form for
/// Re s > -1/2 and of the functional equation otherwise. The sin/cot factors
/// are grouped so the negative even integers come out exact rather than 0*inf.
pub fn zeta_deriv(s: Complex64) -> Result<Complex64> {
    if (s - 1.0).norm() < 1e-12 {
        return Err(EvalError::Pole("zeta' pole at s = 1".into()));
    }
    if s.re > -0.5 {
        return Ok(zeta_deriv_em(s));
    }
    let w = 1.0 - s;
    let (pref, sin_half) = chi_parts(s)?;
    let cos_half = (PI * s / 2.0).cos();
    let z = 1.0 + zeta_em_m1(w);
    let zp = zeta_deriv_em(w);
    let bracket = (PI / 2.0) * cos_half * z + sin_half * ((LOG_TWO_PI - digamma(w)?) * z - zp);
    Ok(pref * bracket)
}

fn zeta_deriv_em(s: Complex64) -> Complex64 {
    let m = em_shift(s);
    let mf = m as f64;
    let log_m = mf.ln();
    let table = bernoulli::shared();

    let mut acc = Complex64::new(0.0, 0.0);
    for n in 2..m {
        let nf = n as f64;
        acc -= nf.ln() * Complex64::new(nf, 0.0).powc(-s);
    }
    let m_pow = Complex64::new(mf, 0.0).powc(-s);
    acc -= 0.5 * log_m * m_pow;
    let sm1 = s - 1.0;
    acc -= m_pow * mf * (log_m / sm1 + 1.0 / (sm1 * sm1));

    let inv_m2 = 1.0 / (mf * mf);
    let mut poch = s;
    let mut dpoch = Complex64::new(1.0, 0.0);
    let mut power = m_pow / mf;
    let mut fact = 2.0;
    let mut prev = f64::INFINITY;
    for j in 1.. {
        let b = table.as_f64(2 * j).unwrap_or(f64::NAN);
        let term = b / fact * (dpoch - poch * log_m) * power;
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
        for step in [2 * j - 1, 2 * j] {
            let f = s + step as f64;
            dpoch = dpoch * f + poch;
            poch *= f;
        }
        power *= inv_m2;
        fact *= (2 * j + 1) as f64 * (2 * j + 2) as f64;
    }
    acc
}

/// zeta'(-2n) = (-1)^n (2n)! / (2^(2n+1) pi^(2n)) * zeta(2n+1), exact in form.
pub fn zeta_deriv_neg_even(n: u32) -> Result<f64> {
    if n < 1 {
        return Err(EvalError::Domain("zeta'(-2n) needs n >= 1".into()));
    }
    let two_n = 2 * n;
    let mut fact = 1.0f64;
    for k in 2..=two_n {
        fact *= k as f64;
    }
    let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
    let z = riemann_zeta(Complex64::new(two_n as f64 + 1.0, 0.0))?.re;
    Ok(sign * fact / (2.0f64.powi(two_n as i32 + 1) * PI.powi(two_n as i32)) * z)
}

fn factorial_f64(n: usize) -> f64 {
    let mut acc = 1.0f64;
    for k in 2..=n {
        acc *= k as f64;
    }
    acc
}

/// (c)_i * {zeta(c+i) - 1} with the pole-term limit convention: when c is a
/// non-positive integer (within the repo threshold) and c + i = 1, the
/// product is replaced by its limit (-1)^(i-1) (i-1)!. Inputs within the
/// threshold of a non-positive integer are snapped to it, so later terms of
/// a series vanish exactly.
pub fn poch_zeta_m1(c: Complex64, i: usize) -> Result<Complex64> {
    if let Some(m) = near_integer(c, INT_EPS) {
        if m <= 0 {
            let pole_index = (1 - m) as usize;
            if i == pole_index {
                let sign = if i % 2 == 1 { 1.0 } else { -1.0 };
                return Ok(Complex64::new(sign * factorial_f64(i - 1), 0.0));
            }
            if i > pole_index {
                return Ok(Complex64::new(0.0, 0.0));
            }
            let mut poch = 1.0f64;
            for l in 0..i {
                poch *= (m + l as i64) as f64;
            }
            return Ok(poch * riemann_zeta_m1(Complex64::new((m + i as i64) as f64, 0.0))?);
        }
    }
    let mut poch = Complex64::new(1.0, 0.0);
    for l in 0..i {
        poch *= c + l as f64;
    }
    Ok(poch * riemann_zeta_m1(c + i as f64)?)
}

/// (c)_i * zeta(c+i) with the same convention; the limit value is identical
/// because the extra (c)_i * 1 piece vanishes at the degenerate index.
pub fn poch_zeta(c: Complex64, i: usize) -> Result<Complex64> {
    if let Some(m) = near_integer(c, INT_EPS) {
        if m <= 0 {
            let pole_index = (1 - m) as usize;
            if i >= pole_index {
                return poch_zeta_m1(c, i);
            }
            let mut poch = 1.0f64;
            for l in 0..i {
                poch *= (m + l as i64) as f64;
            }
            return Ok(poch * riemann_zeta(Complex64::new((m + i as i64) as f64, 0.0))?);
        }
    }
    let mut poch = Complex64::new(1.0, 0.0);
    for l in 0..i {
        poch *= c + l as f64;
    }
    Ok(poch * riemann_zeta(c + i as f64)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::{EULER_GAMMA, LOG_GLAISHER, ZETA_3};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn classical_values() {
        assert!((riemann_zeta(c(2.0, 0.0)).unwrap().re - PI * PI / 6.0).abs() < 1e-14);
        assert!((riemann_zeta(c(0.0, 0.0)).unwrap().re + 0.5).abs() < 1e-14);
        assert!((riemann_zeta(c(-1.0, 0.0)).unwrap().re + 1.0 / 12.0).abs() < 1e-15);
        assert!((riemann_zeta(c(4.0, 0.0)).unwrap().re - PI.powi(4) / 90.0).abs() < 1e-14);
    }

    #[test]
    fn trivial_zeros() {
        for n in 1..=5 {
            let z = riemann_zeta(c(-2.0 * n as f64, 0.0)).unwrap();
            assert!(z.norm() < 1e-14, "zeta(-{}) = {z}", 2 * n);
        }
    }

    #[test]
    fn bernoulli_relation_negative_integers() {
        let table = bernoulli::shared();
        for s in 1..=20usize {
            let exact = crate::bernoulli::BernoulliTable::zeta_negative_integer(table, s).unwrap();
            let exact = crate::bernoulli::shared()
                .as_f64(s + 1)
                .map(|_| exact)
                .unwrap();
            let exact_f = {
                use num_traits::ToPrimitive;
                exact.numer().to_f64().unwrap() / exact.denom().to_f64().unwrap()
            };
            let got = riemann_zeta(c(-(s as f64), 0.0)).unwrap().re;
            assert!(
                (got - exact_f).abs() <= 1e-12 * exact_f.abs().max(1.0),
                "zeta(-{s}): got {got}, exact {exact_f}"
            );
        }
    }

    #[test]
    fn pole_is_reported() {
        assert!(riemann_zeta(c(1.0, 0.0)).is_err());
        assert!(riemann_zeta_near_one(c(0.0, 0.0)).is_err());
    }

    #[test]
    fn near_one_expansion() {
        // eps * zeta(1+eps) = 1 + gamma_E * eps + O(eps^2)
        let eps = c(1e-6, 0.0);
        let z = riemann_zeta_near_one(eps).unwrap();
        let resid = (eps * z - 1.0 - EULER_GAMMA * eps).norm();
        assert!(resid < 1e-10, "residual {resid}");
        // consistency away from the pole
        assert!((riemann_zeta_near_one(c(1.0, 0.0)).unwrap().re - PI * PI / 6.0).abs() < 1e-13);
        let direct = riemann_zeta(c(1.5, 0.0)).unwrap();
        assert!((riemann_zeta_near_one(c(0.5, 0.0)).unwrap() - direct).norm() < 1e-15);
    }

    #[test]
    fn zeta_m1_keeps_relative_precision() {
        // zeta(40) - 1 ~ 2^-40; the dedicated evaluator must resolve it.
        let v = riemann_zeta_m1(c(40.0, 0.0)).unwrap().re;
        let expect = 2.0f64.powi(-40) * (1.0 + 3.0f64 / 2.0f64 * (2.0 / 3.0f64).powi(40));
        // crude: 2^-40 + 3^-40 + ...
        let direct: f64 = (2..60).map(|n| (n as f64).powi(-40)).sum();
        assert!(
            (v - direct).abs() / direct < 1e-13,
            "{v} vs {direct} ({expect})"
        );
    }

    #[test]
    fn derivative_known_values() {
        // zeta'(0) = -0.5 ln(2 pi)
        let d0 = zeta_deriv(c(0.0, 0.0)).unwrap();
        assert!((d0.re + 0.5 * LOG_TWO_PI).abs() < 1e-12, "{d0}");
        // zeta'(-1) = 1/12 - ln A
        let d1 = zeta_deriv(c(-1.0, 0.0)).unwrap();
        assert!((d1.re - (1.0 / 12.0 - LOG_GLAISHER)).abs() < 1e-12, "{d1}");
        // zeta'(-2) agrees with the exact negative-even formula
        let d2 = zeta_deriv(c(-2.0, 0.0)).unwrap();
        let exact = zeta_deriv_neg_even(1).unwrap();
        assert!((d2.re - exact).abs() < 1e-13, "{} vs {exact}", d2.re);
        assert!(d2.im.abs() < 1e-14);
    }

    #[test]
    fn neg_even_derivative_formula() {
        // n = 1: -zeta(3)/(4 pi^2)
        let v1 = zeta_deriv_neg_even(1).unwrap();
        assert!((v1 + ZETA_3 / (4.0 * PI * PI)).abs() < 1e-15);
        // n = 2: 4! zeta(5) / (2^5 pi^4)
        let z5 = riemann_zeta(c(5.0, 0.0)).unwrap().re;
        let v2 = zeta_deriv_neg_even(2).unwrap();
        assert!((v2 - 24.0 * z5 / (32.0 * PI.powi(4))).abs() < 1e-15);
        assert!(zeta_deriv_neg_even(0).is_err());
    }

    #[test]
    fn neg_even_derivative_matches_finite_differences() {
        for n in 1..=3u32 {
            let s = -2.0 * n as f64;
            let h = 1e-5;
            let fd = (riemann_zeta(c(s + h, 0.0)).unwrap().re
                - riemann_zeta(c(s - h, 0.0)).unwrap().re)
                / (2.0 * h);
            let exact = zeta_deriv_neg_even(n).unwrap();
            assert!((fd - exact).abs() < 1e-7, "n={n}: fd {fd} vs {exact}");
        }
    }

    #[test]
    fn derivative_matches_finite_differences_generic() {
        for &s in &[c(2.5, 0.0), c(0.3, 0.8), c(-3.7, 0.4), c(5.0, -2.0)] {
            let h = 1e-5;
            let fd = (riemann_zeta(s + h).unwrap() - riemann_zeta(s - h).unwrap()) / (2.0 * h);
            let d = zeta_deriv(s).unwrap();
            assert!(
                (fd - d).norm() <= 1e-7 * d.norm().max(1.0),
                "s={s}: fd {fd} vs {d}"
            );
        }
    }

    #[test]
    fn conjugate_symmetry() {
        for &s in &[c(0.5, 3.0), c(-4.3, 1.7), c(2.2, -9.0)] {
            let a = riemann_zeta(s.conj()).unwrap();
            let b = riemann_zeta(s).unwrap().conj();
            assert!((a - b).norm() <= 1e-13 * b.norm().max(1.0), "s={s}");
        }
    }

    #[test]
    fn poch_zeta_limit_convention() {
        // c = 0, i = 1: limit is (+1) * 0! = 1
        let v = poch_zeta_m1(c(0.0, 0.0), 1).unwrap();
        assert!((v.re - 1.0).abs() < 1e-15 && v.im == 0.0);
        // c = -1, i = 2: (-1)^(1) * 1! = -1
        let v = poch_zeta_m1(c(-1.0, 0.0), 2).unwrap();
        assert!((v.re + 1.0).abs() < 1e-15);
        // c = -2, i = 3: (+1) * 2! = 2
        let v = poch_zeta(c(-2.0, 0.0), 3).unwrap();
        assert!((v.re - 2.0).abs() < 1e-15);
        // beyond the pole index the product vanishes exactly
        assert_eq!(poch_zeta_m1(c(-2.0, 0.0), 5).unwrap(), c(0.0, 0.0));
        // snapping: inputs within 1e-8 behave like the integer
        let v = poch_zeta_m1(c(-2.0 + 3e-9, 0.0), 3).unwrap();
        assert!((v.re - 2.0).abs() < 1e-15);
        // generic c multiplies plain pochhammer and zeta
        let cc = c(0.3, 0.2);
        let expect = cc * (cc + 1.0) * riemann_zeta_m1(cc + 2.0).unwrap();
        assert!((poch_zeta_m1(cc, 2).unwrap() - expect).norm() < 1e-15);
    }
}
