//! Moment integrals H_n(a) = int_0^1 x^n zeta(a, x) dx in all four regimes:
//! infinite series, finite sum, non-positive integer a, and the binomial
//! closed form for integer a = m in [2, n]; plus the summation identities
//! tying them together.
//!
//! The infinite series is evaluated with zeta split as 1 + (zeta - 1): the
//! pure-Pochhammer part collapses to 1/((n+1-a) n!) by Gauss summation of
//! the terminating 2F1 at unit argument, and the remainder gains a 2^-k
//! factor. Without the split the raw terms decay only like
//! k^(Re a - n - 2), which cannot reach the working tolerances when Re a
//! approaches n + 1.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;

use crate::bernoulli::{self, big_binomial};
use crate::constants::{EULER_GAMMA, LOG_TWO_PI};
use crate::error::{EvalError, Result};
use crate::gamma::{digamma, gamma};
use crate::series::{near_integer, SeriesAccumulator, SeriesValue, INT_EPS, MAX_TERMS};
use crate::zeta::{poch_zeta_m1, riemann_zeta, zeta_deriv, zeta_deriv_neg_even};

/// Moment order and exponent, validated on construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MomentSpec {
    pub n: u32,
    pub a: Complex64,
}

impl MomentSpec {
    pub fn new(n: u32, a: Complex64) -> Result<Self> {
        if a.re >= n as f64 + 1.0 {
            return Err(EvalError::Domain(format!(
                "moment needs Re a < n + 1 = {}",
                n as f64 + 1.0
            )));
        }
        if (a - 1.0).norm() < 1e-12 {
            return Err(EvalError::Pole("moment pole at a = 1".into()));
        }
        Ok(MomentSpec { n, a })
    }

    /// Integer exponent within the repo threshold, if any.
    pub fn integer_exponent(&self) -> Option<i64> {
        near_integer(self.a, INT_EPS)
    }
}

/// Infinite-series moment: 0 for n = 0, else
/// n! sum_k (a)_k zeta(a+k) / (n+k+1)!. Needs no limit at integer a.
pub fn h_series(spec: MomentSpec, tol: f64) -> Result<SeriesValue> {
    let (n, a) = (spec.n, spec.a);
    if n == 0 {
        return Ok(SeriesValue::exact(Complex64::new(0.0, 0.0), 0));
    }
    let nf = n as f64;
    let head = 1.0 / (nf + 1.0 - a);
    let mut acc = SeriesAccumulator::new_absolute(tol / 4.0);
    let mut ratio = 1.0 / (nf + 1.0); // n!/(n+k+1)!
    let mut k = 0usize;
    loop {
        let term = poch_zeta_m1(a, k)? * ratio;
        if !acc.push(term) {
            break;
        }
        ratio /= nf + k as f64 + 2.0;
        k += 1;
        if k >= MAX_TERMS {
            break;
        }
    }
    let series = acc.finish();
    Ok(SeriesValue {
        value: head + series.value,
        ..series
    }
    .with_contract(tol))
}

fn reject_near_finite_sum_poles(n: u32, a: Complex64) -> Result<()> {
    // zeta(a - k) sits on its pole when a = k + 1, k = 1..n
    for k in 1..=n as i64 {
        if (a - Complex64::new(k as f64 + 1.0, 0.0)).norm() < 1e-6 {
            return Err(EvalError::Degenerate(format!(
                "a within 1e-6 of {}: use the integer evaluator or the series",
                k + 1
            )));
        }
    }
    Ok(())
}

/// Finite-sum moment: -(n!/Gamma(a)) sum_{k=1}^n Gamma(a-k) zeta(a-k)/(n-k+1)!.
/// The gamma ratio is computed as 1/(a-k)_k, which stays finite at
/// non-positive integer a and makes that regime exact.
pub fn h_finite(spec: MomentSpec, _tol: f64) -> Result<Complex64> {
    let (n, a) = (spec.n, spec.a);
    reject_near_finite_sum_poles(n, a)?;
    if let Some(m) = spec.integer_exponent() {
        if m >= 2 {
            return Err(EvalError::Degenerate(format!(
                "integer a = {m} in [2, n] requires the binomial closed form"
            )));
        }
    }
    let nf = n as f64;
    let mut acc = Complex64::new(0.0, 0.0);
    let mut fact = 1.0f64; // (n-k+1)! running from k = n down
                           // iterate k = 1..=n with (n-k+1)! computed directly (n is small)
    for k in 1..=n {
        let mut den_fact = 1.0f64;
        for j in 2..=(n - k + 1) {
            den_fact *= j as f64;
        }
        let mut poch = Complex64::new(1.0, 0.0); // (a-k)_k
        for l in 0..k {
            poch *= a - k as f64 + l as f64;
        }
        let z = riemann_zeta(a - k as f64)?;
        acc += z / (poch * den_fact);
        let _ = fact;
        fact = den_fact;
    }
    // n! prefactor
    let mut n_fact = 1.0f64;
    for j in 2..=n {
        n_fact *= j as f64;
    }
    let _ = nf;
    Ok(-n_fact * acc)
}

/// Moment at a = -m (non-positive integer exponent):
/// m! n! sum_{k=1}^n (-1)^(k-1) zeta(-m-k) / ((m+k)! (n-k+1)!).
/// Terms with even m + k vanish through the trivial zeros.
pub fn h_negative_integer(n: u32, m: u32) -> Result<f64> {
    if n < 1 {
        return Err(EvalError::Domain("needs n >= 1".into()));
    }
    let table = bernoulli::shared();
    let mut acc = 0.0f64;
    for k in 1..=n {
        if (m + k).is_multiple_of(2) {
            continue;
        }
        let zeta_neg = rational_to_f64(&table.zeta_negative_integer((m + k) as usize)?);
        // m! n! / ((m+k)! (n-k+1)!) assembled as a product of ratios
        let mut coeff = 1.0f64;
        for j in (m + 1)..=(m + k) {
            coeff /= j as f64;
        }
        let mut n_part = 1.0f64;
        for j in (n - k + 2)..=n {
            n_part *= j as f64;
        }
        let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
        acc += sign * zeta_neg * coeff * n_part;
    }
    Ok(acc)
}

fn rational_to_f64(r: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN)
}

/// Closed form for integer exponent a = m with 2 <= m <= n;
/// N = n - m + 1. Uses the exact Bernoulli values for zeta(-k), the exact
/// negative-even closed form for zeta'(-k) at even k and the generic
/// derivative evaluator at odd k.
pub fn h_integer(n: u32, m: u32) -> Result<f64> {
    if !(2 <= m && m <= n) {
        return Err(EvalError::Domain(format!(
            "needs 2 <= m <= n, got m={m} n={n}"
        )));
    }
    let big_n = n - m + 1; // N
    let table = bernoulli::shared();

    // (1/N!) sum_{k=1}^{N-1} (-1)^(k-1) C(N,k) {psi(k+1) zeta(-k) + zeta'(-k)}
    let mut bin_sum = 0.0f64;
    for k in 1..big_n {
        let zeta_neg = rational_to_f64(&table.zeta_negative_integer(k as usize)?);
        let deriv = if k % 2 == 0 {
            zeta_deriv_neg_even(k / 2)?
        } else {
            zeta_deriv(Complex64::new(-(k as f64), 0.0))?.re
        };
        let psi = digamma(Complex64::new(k as f64 + 1.0, 0.0))?.re;
        let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
        let binom = binomial_f64(big_n, k);
        bin_sum += sign * binom * (psi * zeta_neg + deriv);
    }
    let n_bang = factorial_f64(big_n);
    let mut inner = bin_sum / n_bang + (LOG_TWO_PI - EULER_GAMMA) / (2.0 * n_bang);

    // - sum_{k=1}^{m-2} Gamma(m-k) zeta(m-k) / (n-k+1)!  (empty at m = 2)
    for k in 1..=(m.saturating_sub(2)) {
        let g = factorial_f64(m - k - 1);
        let z = riemann_zeta(Complex64::new((m - k) as f64, 0.0))?.re;
        inner -= g * z / factorial_f64(n - k + 1);
    }

    // n!/Gamma(m) = n!/(m-1)!
    let mut pref = 1.0f64;
    for j in m..=n {
        pref *= j as f64;
    }
    Ok(pref * inner)
}

fn factorial_f64(n: u32) -> f64 {
    let mut acc = 1.0f64;
    for k in 2..=n {
        acc *= k as f64;
    }
    acc
}

fn binomial_f64(n: u32, k: u32) -> f64 {
    use num_traits::ToPrimitive;
    big_binomial(n as usize, k as usize)
        .to_f64()
        .unwrap_or(f64::NAN)
}

/// Residual of the identity tying the two moment forms together:
/// |sum_{k>=0} Gamma(a+k) zeta(a+k)/(n+k+1)! + sum_{k=1}^n Gamma(a-k) zeta(a-k)/(n-k+1)!|.
/// Both sides share a Gamma(a) factor, which is kept symbolic so nothing
/// overflows.
pub fn summation_identity_residual(n: u32, a: Complex64, tol: f64) -> Result<f64> {
    if near_integer(a, INT_EPS).is_some() {
        return Err(EvalError::Degenerate(
            "integer a puts a gamma factor on a pole".into(),
        ));
    }
    if a.re >= n as f64 + 1.0 {
        return Err(EvalError::Domain(format!("needs Re a < n + 1 = {}", n + 1)));
    }
    reject_near_finite_sum_poles(n, a)?;
    let nf = n as f64;

    // infinite part / Gamma(a) = 1/(n! (n+1-a)) + sum_k (a)_k {zeta(a+k)-1}/(n+k+1)!
    let mut acc = SeriesAccumulator::new(tol);
    let mut ratio = 1.0 / factorial_f64(n + 1);
    let mut k = 0usize;
    loop {
        let term = poch_zeta_m1(a, k)? * ratio;
        if !acc.push(term) {
            break;
        }
        ratio /= nf + k as f64 + 2.0;
        k += 1;
        if k >= MAX_TERMS {
            break;
        }
    }
    let infinite = 1.0 / (factorial_f64(n) * (nf + 1.0 - a)) + acc.finish().value;

    // finite part / Gamma(a) = sum_{k=1}^n zeta(a-k)/((a-k)_k (n-k+1)!)
    let mut finite = Complex64::new(0.0, 0.0);
    for k in 1..=n {
        let mut poch = Complex64::new(1.0, 0.0);
        for l in 0..k {
            poch *= a - k as f64 + l as f64;
        }
        finite += riemann_zeta(a - k as f64)? / (poch * factorial_f64(n - k + 1));
    }

    Ok((gamma(a)? * (infinite + finite)).norm())
}

/// sum_{k>=1} (-alpha)_k zeta(-alpha+k) / k! for Re alpha > 0; vanishes
/// identically. Evaluated with the zeta split: the binomial part sums to -1
/// exactly, leaving a 2^-k series (the raw terms decay only like
/// k^(-Re alpha - 1) and cannot reach tolerance near the boundary).
pub fn wilton_null_sum(alpha: Complex64, tol: f64) -> Result<SeriesValue> {
    if alpha.re <= 0.0 {
        return Err(EvalError::Domain(format!(
            "null sum needs Re alpha > 0, got {alpha}"
        )));
    }
    let c = -alpha;
    let mut acc = SeriesAccumulator::with_cap(tol / 4.0, 150);
    let mut inv_fact = 1.0f64;
    let mut k = 1usize;
    loop {
        inv_fact /= k as f64;
        let term = poch_zeta_m1(c, k)? * inv_fact;
        if !acc.push(term) {
            break;
        }
        k += 1;
    }
    let series = acc.finish();
    Ok(SeriesValue {
        value: series.value - 1.0,
        ..series
    }
    .with_contract(tol))
}

/// Exact rational pair (sum_{k=2}^N C(N, k-1) B_k / k, (N-1)/(2(N+1)));
/// the two entries agree for every N >= 2.
pub fn bernoulli_binomial_identity(n: u32) -> Result<(BigRational, BigRational)> {
    if n < 2 {
        return Err(EvalError::Domain("needs N >= 2".into()));
    }
    let table = bernoulli::shared();
    if n as usize > table.max_index() {
        return Err(EvalError::TableOverflow(format!(
            "N = {n} beyond the Bernoulli table"
        )));
    }
    let mut lhs = BigRational::new(BigInt::from(0), BigInt::from(1));
    for k in 2..=n as usize {
        let b = table.rational(k)?;
        lhs += BigRational::from(big_binomial(n as usize, k - 1)) * b
            / BigRational::from(BigInt::from(k as i64));
    }
    let rhs = BigRational::new(BigInt::from(n as i64 - 1), BigInt::from(2 * (n as i64 + 1)));
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::{LOG_GLAISHER, PI};
    use crate::quadrature::oracle_moment;
    use crate::series::DEFAULT_TOL;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn golden_h32() -> f64 {
        1.5 * LOG_TWO_PI - EULER_GAMMA - 6.0 * LOG_GLAISHER
    }

    fn golden_h43() -> f64 {
        3.0 * LOG_TWO_PI - 2.0 * EULER_GAMMA - 12.0 * LOG_GLAISHER - PI * PI / 12.0
    }

    #[test]
    fn series_examples() {
        // n = 0: the moment vanishes
        let v = h_series(MomentSpec::new(0, c(0.5, 0.0)).unwrap(), DEFAULT_TOL).unwrap();
        assert_eq!(v.value, c(0.0, 0.0));
        // n = 1, a = 0: integral of x (1/2 - x) = -1/12
        let v = h_series(MomentSpec::new(1, c(0.0, 0.0)).unwrap(), DEFAULT_TOL).unwrap();
        assert!((v.value.re + 1.0 / 12.0).abs() < 1e-14, "{}", v.value);
        // n = 3, a = 2 hits the first golden value
        let v = h_series(MomentSpec::new(3, c(2.0, 0.0)).unwrap(), DEFAULT_TOL).unwrap();
        assert!((v.value.re - golden_h32()).abs() < 1e-12, "{}", v.value);
    }

    #[test]
    fn finite_sum_cross_checks() {
        // n = 1, a = 0 agrees with the series
        let spec = MomentSpec::new(1, c(0.0, 0.0)).unwrap();
        let fin = h_finite(spec, DEFAULT_TOL).unwrap();
        assert!((fin.re + 1.0 / 12.0).abs() < 1e-14);
        // n = 3, a = 0.5
        let spec = MomentSpec::new(3, c(0.5, 0.0)).unwrap();
        let fin = h_finite(spec, DEFAULT_TOL).unwrap();
        let ser = h_series(spec, DEFAULT_TOL).unwrap();
        assert!((fin - ser.value).norm() <= 1e-11 * fin.norm().max(1.0));
        // n = 2, a = -0.5 against quadrature
        let spec = MomentSpec::new(2, c(-0.5, 0.0)).unwrap();
        let fin = h_finite(spec, DEFAULT_TOL).unwrap();
        let orc = oracle_moment(2, c(-0.5, 0.0)).unwrap();
        assert!((fin - orc.value).norm() <= 1e-9 * orc.value.norm().max(1.0));
        // integer a in [2, n] refused with a route
        assert!(h_finite(MomentSpec::new(3, c(2.0, 0.0)).unwrap(), DEFAULT_TOL).is_err());
        // near the zeta pole in the sum
        assert!(h_finite(MomentSpec::new(3, c(2.0 + 3e-7, 0.0)).unwrap(), DEFAULT_TOL).is_err());
    }

    #[test]
    fn negative_integer_exponent() {
        // n = 1, m = 0: single term, zeta(-1) = -1/12
        let v = h_negative_integer(1, 0).unwrap();
        assert!((v + 1.0 / 12.0).abs() < 1e-16);
        // n = 2, m = 1: k = 1 term vanishes, leaving -zeta(-3)/3 = -1/360
        let v = h_negative_integer(2, 1).unwrap();
        assert!((v + 1.0 / 360.0).abs() < 1e-17, "{v}");
        // polynomial-integrand quadrature oracle across a small grid
        for (n, m) in [(1u32, 0u32), (2, 1), (3, 2), (4, 0), (5, 3)] {
            let v = h_negative_integer(n, m).unwrap();
            let f = |x: f64| -> Complex64 {
                c(x.powi(n as i32), 0.0)
                    * crate::hurwitz::hurwitz_zeta(c(-(m as f64), 0.0), x).unwrap()
            };
            let cfg = crate::quadrature::QuadratureConfig {
                target_abs_error: 1e-14,
                ..Default::default()
            };
            let orc = crate::quadrature::integrate_unit_interval(f, &cfg).unwrap();
            assert!(
                (v - orc.value.re).abs() <= 1e-12,
                "H_{n}(-{m}): {v} vs {}",
                orc.value.re
            );
        }
    }

    #[test]
    fn integer_exponent_golden_values() {
        let v = h_integer(3, 2).unwrap();
        assert!((v - golden_h32()).abs() < 1e-13, "{v} vs {}", golden_h32());
        let v = h_integer(4, 3).unwrap();
        assert!((v - golden_h43()).abs() < 1e-13, "{v} vs {}", golden_h43());
        // boundary m = n (N = 1, empty binomial sum) against quadrature
        let v = h_integer(2, 2).unwrap();
        let orc = oracle_moment(2, c(2.0, 0.0)).unwrap();
        assert!((v - orc.value.re).abs() <= 1e-9 * orc.value.re.abs().max(1.0));
        assert!(h_integer(3, 1).is_err());
        assert!(h_integer(2, 3).is_err());
    }

    #[test]
    fn integer_exponent_agrees_with_series() {
        for n in 2..=8u32 {
            for m in 2..=n {
                let closed = h_integer(n, m).unwrap();
                let series =
                    h_series(MomentSpec::new(n, c(m as f64, 0.0)).unwrap(), DEFAULT_TOL).unwrap();
                assert!(
                    (closed - series.value.re).abs() <= 1e-9 * closed.abs().max(1.0),
                    "H_{n}({m}): {closed} vs {}",
                    series.value.re
                );
            }
        }
    }

    #[test]
    fn summation_identity_examples() {
        assert!(summation_identity_residual(3, c(0.5, 0.0), DEFAULT_TOL).unwrap() < 1e-10);
        assert!(summation_identity_residual(2, c(-0.3, 0.0), DEFAULT_TOL).unwrap() < 1e-10);
        assert!(summation_identity_residual(1, c(0.9, 0.0), DEFAULT_TOL).unwrap() < 1e-9);
        assert!(summation_identity_residual(3, c(2.0, 0.0), DEFAULT_TOL).is_err());
    }

    #[test]
    fn null_sum_examples() {
        let v = wilton_null_sum(c(2.5, 0.0), DEFAULT_TOL).unwrap();
        assert!(v.value.norm() < 1e-10, "{}", v.value);
        let v = wilton_null_sum(c(1.0, 1.0), DEFAULT_TOL).unwrap();
        assert!(v.value.norm() < 1e-10, "{}", v.value);
        let v = wilton_null_sum(c(0.1, 0.0), DEFAULT_TOL).unwrap();
        assert!(v.value.norm() < 1e-8, "{}", v.value);
        assert!(wilton_null_sum(c(-0.5, 0.0), DEFAULT_TOL).is_err());
    }

    #[test]
    fn binomial_identity_small_and_grid() {
        let (lhs, rhs) = bernoulli_binomial_identity(2).unwrap();
        assert_eq!(lhs, BigRational::new(BigInt::from(1), BigInt::from(6)));
        assert_eq!(lhs, rhs);
        let (lhs, rhs) = bernoulli_binomial_identity(3).unwrap();
        assert_eq!(lhs, BigRational::new(BigInt::from(1), BigInt::from(4)));
        assert_eq!(lhs, rhs);
        let (lhs, rhs) = bernoulli_binomial_identity(20).unwrap();
        assert_eq!(lhs, rhs);
        assert!(bernoulli_binomial_identity(1).is_err());
        assert!(bernoulli_binomial_identity(10_000).is_err());
    }

    #[test]
    fn regime_agreement_on_random_nondegenerate_points() {
        // series vs finite sum, both vs quadrature
        for &(n, re, im) in &[
            (3u32, 0.5f64, 0.0f64),
            (4, -1.3, 0.4),
            (2, 0.25, -0.6),
            (5, 3.4, 0.2),
        ] {
            let a = c(re, im);
            let spec = MomentSpec::new(n, a).unwrap();
            let ser = h_series(spec, DEFAULT_TOL).unwrap();
            let fin = h_finite(spec, DEFAULT_TOL).unwrap();
            assert!(
                (ser.value - fin).norm() <= 1e-10 * fin.norm().max(1.0),
                "n={n} a={a}: {} vs {fin}",
                ser.value
            );
            let orc = oracle_moment(n, a).unwrap();
            assert!(
                (ser.value - orc.value).norm() <= 1e-8 * orc.value.norm().max(1.0),
                "n={n} a={a}: {} vs oracle {}",
                ser.value,
                orc.value
            );
        }
    }
}
