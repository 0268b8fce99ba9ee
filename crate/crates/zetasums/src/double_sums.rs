//! Doubly infinite zeta sums with two free parameters: the factorial-coupled
//! sum S1, the harmonic-coupled sum S2, their closed forms, the integer-sum
//! limits, finite degenerations, and direct summation oracles.
//!
//! The direct evaluators split every zeta factor as 1 + (zeta - 1). The
//! pure-binomial blocks then collapse to elementary beta/rational closed
//! forms (Euler's integral term by term), and the remaining series gain a
//! 2^-k factor. Raw truncation of the original lattice converges only like
//! a small power of the cut near the domain boundary, far short of the
//! working tolerances; the split keeps the oracle honest (no use of the
//! closed forms under test) while reaching them. Pole terms (c)_i zeta(c+i)
//! at non-positive integer c with c + i = 1 take their finite limit
//! (-1)^(i-1) (i-1)!, which is what makes the direct sums continuous in
//! (a, b) across the integers.

use num_complex::Complex64;

use crate::bernoulli;
use crate::error::{EvalError, Result};
use crate::gamma::gamma;
use crate::hyp2f1::beta_fn;
use crate::series::{near_integer, SeriesValue, INT_EPS};
use crate::zeta::{poch_zeta_m1, riemann_zeta, zeta_deriv_neg_even};

fn require_half_plane(a: Complex64, b: Complex64) -> Result<()> {
    if a.re >= 1.0 || b.re >= 1.0 {
        return Err(EvalError::Domain(
            "the summation needs Re a < 1 and Re b < 1".into(),
        ));
    }
    Ok(())
}

/// One cell of the defining lattice of a double sum, with the pole-term
/// limit convention applied factor by factor.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DoubleSumTerm {
    pub j: usize,
    pub k: usize,
    pub value: Complex64,
    /// Set only when (a)_j zeta(a+j) or (b)_k zeta(b+k) was replaced by its
    /// finite limit, i.e. the index crossed the zeta pole at argument 1
    /// with a non-positive integer base.
    pub is_limit_term: bool,
}

fn is_limit_index(c: Complex64, i: usize) -> bool {
    matches!(near_integer(c, INT_EPS), Some(m) if m <= 0 && (1 - m) as usize == i)
}

/// (c)_i zeta(c+i) / i! with the limit convention; the factorial is folded
/// into the Pochhammer so nothing overflows at large i.
fn term_factor(c: Complex64, i: usize) -> Result<Complex64> {
    if is_limit_index(c, i) {
        let sign = if i % 2 == 1 { 1.0 } else { -1.0 };
        return Ok(Complex64::new(sign / i as f64, 0.0));
    }
    if let Some(m) = near_integer(c, INT_EPS) {
        if m <= 0 && i > (1 - m) as usize {
            return Ok(Complex64::new(0.0, 0.0));
        }
    }
    let mut ratio = Complex64::new(1.0, 0.0); // (c)_i / i!
    for l in 0..i {
        ratio *= (c + l as f64) / (l as f64 + 1.0);
    }
    Ok(ratio * riemann_zeta(c + i as f64)?)
}

/// Raw (j, k) term of the factorial-coupled sum:
/// (a)_j (b)_k zeta(a+j) zeta(b+k) / (j+k+1)!, defined for j >= 0, k >= 1.
pub fn s1_term(a: Complex64, b: Complex64, j: usize, k: usize) -> Result<DoubleSumTerm> {
    if k < 1 {
        return Err(EvalError::Domain(
            "the factorial-coupled sum starts at k = 1".into(),
        ));
    }
    // j! k! / (j+k+1)! as a bounded ratio chain
    let mut coeff = 1.0 / (j as f64 + k as f64 + 1.0);
    for l in 1..=k {
        coeff *= l as f64 / (j + l) as f64;
    }
    let value = term_factor(a, j)? * term_factor(b, k)? * coeff;
    Ok(DoubleSumTerm {
        j,
        k,
        value,
        is_limit_term: is_limit_index(a, j) || is_limit_index(b, k),
    })
}

/// Raw (j, k) term of the harmonic-coupled sum:
/// (a)_j (b)_k zeta(a+j) zeta(b+k) / (j! k! (j+k+1)).
pub fn s2_term(a: Complex64, b: Complex64, j: usize, k: usize) -> Result<DoubleSumTerm> {
    let value = term_factor(a, j)? * term_factor(b, k)? / (j as f64 + k as f64 + 1.0);
    Ok(DoubleSumTerm {
        j,
        k,
        value,
        is_limit_term: is_limit_index(a, j) || is_limit_index(b, k),
    })
}

/// Closed form of the factorial-coupled double sum:
/// S1(a, b) = B(1-a, 1-b) zeta(a + b - 1) for Re a < 1, Re b < 1.
pub fn s1_closed(a: Complex64, b: Complex64) -> Result<Complex64> {
    require_half_plane(a, b)?;
    Ok(beta_fn(1.0 - a, 1.0 - b)? * riemann_zeta(a + b - 1.0)?)
}

/// Finite closed form at non-positive integer parameters a = -m, b = -n:
/// m! n! / (m+n+1)! zeta(-m-n-1); vanishes exactly for m, n of different
/// parity through the trivial zeros.
pub fn s1_finite(m: u32, n: u32) -> Result<f64> {
    let table = bernoulli::shared();
    let zeta_neg = table.zeta_negative_integer((m + n + 1) as usize)?;
    use num_traits::{ToPrimitive, Zero};
    if zeta_neg.is_zero() {
        return Ok(0.0);
    }
    let z = zeta_neg.numer().to_f64().unwrap_or(f64::NAN)
        / zeta_neg.denom().to_f64().unwrap_or(f64::NAN);
    // m! n! / (m+n+1)! = n! / ((m+1)(m+2)...(m+n+1))
    let mut coeff = 1.0f64;
    for j in (m + 1)..=(m + n + 1) {
        coeff /= j as f64;
    }
    for j in 2..=n {
        coeff *= j as f64;
    }
    Ok(coeff * z)
}

/// Closed form of the harmonic-coupled double sum for Re a < 1, Re b < 1,
/// Re(a+b) < 1, written with the gamma-ratio bracket so nearly-degenerate
/// sine factors never appear:
/// S2(a, b) = Gamma(g) zeta(g) {Gamma(1-a)/Gamma(b) + Gamma(1-b)/Gamma(a)}.
pub fn s2_closed(a: Complex64, b: Complex64) -> Result<Complex64> {
    require_half_plane(a, b)?;
    if (a + b).re >= 1.0 {
        return Err(EvalError::Domain("the summation needs Re(a+b) < 1".into()));
    }
    for (v, name) in [(a, "a"), (b, "b")] {
        if near_integer(v, INT_EPS).is_some() {
            return Err(EvalError::Degenerate(format!(
                "integer {name}: the closed form degenerates; use the direct sum"
            )));
        }
    }
    if let Some(s) = near_integer(a + b, INT_EPS) {
        return Err(EvalError::Degenerate(format!(
            "a + b = {s}: route to the integer-sum evaluator"
        )));
    }
    let g = a + b - 1.0;
    let bracket = gamma(1.0 - a)? / gamma(b)? + gamma(1.0 - b)? / gamma(a)?;
    Ok(gamma(g)? * riemann_zeta(g)? * bracket)
}

/// Limits of S2 when a + b is zero or a negative integer: for a+b = -2m,
/// -Gamma(1-a) Gamma(2m+1+a)/(2m+1)! cos(pi a) zeta(-2m-1); for a+b = -2m-1,
/// 2 (a)_{2m+2}/(2m+2)! zeta'(-2m-2).
pub fn s2_integer_sum(a: Complex64, total: i64) -> Result<Complex64> {
    if total > 0 {
        return Err(EvalError::Domain(
            "needs a + b = 0 or a negative integer".into(),
        ));
    }
    use num_traits::ToPrimitive;
    let table = bernoulli::shared();
    if total % 2 == 0 {
        let m = (-total / 2) as u32;
        if !(a.re > -(2.0 * m as f64) - 1.0 && a.re < 1.0) {
            return Err(EvalError::Domain(format!(
                "even case needs {} < Re a < 1",
                -(2.0 * m as f64) - 1.0
            )));
        }
        let zeta_neg = table.zeta_negative_integer((2 * m + 1) as usize)?;
        let z = zeta_neg.numer().to_f64().unwrap_or(f64::NAN)
            / zeta_neg.denom().to_f64().unwrap_or(f64::NAN);
        let mut fact = 1.0f64;
        for j in 2..=(2 * m + 1) {
            fact *= j as f64;
        }
        let value = -gamma(1.0 - a)? * gamma(a + (2 * m + 1) as f64)? / fact
            * (crate::constants::PI * a).cos()
            * z;
        Ok(value)
    } else {
        let m = ((-total - 1) / 2) as u32;
        if !(a.re > -(2.0 * m as f64) - 2.0 && a.re < 1.0) {
            return Err(EvalError::Domain(format!(
                "odd case needs {} < Re a < 1",
                -(2.0 * m as f64) - 2.0
            )));
        }
        let mut poch = Complex64::new(1.0, 0.0);
        let mut fact = 1.0f64;
        for l in 0..(2 * m + 2) {
            poch *= a + l as f64;
            fact *= (l + 1) as f64;
        }
        Ok(2.0 * poch / fact * zeta_deriv_neg_even(m + 1)?)
    }
}

/// Caps for the split series; the (zeta - 1) factors give 2^-k decay, so
/// anything past ~150 terms is below f64 resolution anyway.
fn series_cap(requested: usize) -> usize {
    requested.clamp(8, 160)
}

/// Direct evaluation of S1(a, b) =
/// sum_{j>=0, k>=1} (a)_j (b)_k zeta(a+j) zeta(b+k) / (j+k+1)!
/// with the pole-term limit convention.
pub fn s1_direct(a: Complex64, b: Complex64, j_max: usize, k_max: usize) -> Result<SeriesValue> {
    require_half_plane(a, b)?;
    let jz = series_cap(j_max);
    let kz = series_cap(k_max);
    let mut terms_used = 0usize;

    // zeta -> 1 in both factors: B(1-b, 1-a) - 1/(1-a)
    let q11 = beta_fn(1.0 - b, 1.0 - a)? - 1.0 / (1.0 - a);

    // j-part 1, k-part zeta-1: sum_k (b)_k {zeta(b+k)-1} / (k! (k+1-a))
    let mut q1z = Complex64::new(0.0, 0.0);
    {
        let mut inv_fact = 1.0f64;
        for k in 1..=kz {
            inv_fact /= k as f64;
            let t = poch_zeta_m1(b, k)? * inv_fact / (Complex64::new(k as f64 + 1.0, 0.0) - a);
            q1z += t;
            terms_used += 1;
            if t.norm() < 1e-18 * q1z.norm().max(1.0) && k > 8 {
                break;
            }
        }
    }

    // j-part zeta-1, k-part 1: sum_j (a)_j {zeta(a+j)-1}/j! [1/(j+1-b) - 1/(j+1)]
    let mut qz1 = Complex64::new(0.0, 0.0);
    {
        let mut inv_fact = 1.0f64;
        for j in 0..=jz {
            if j > 0 {
                inv_fact /= j as f64;
            }
            let jf = j as f64;
            let bracket = 1.0 / (Complex64::new(jf + 1.0, 0.0) - b) - 1.0 / (jf + 1.0);
            let t = poch_zeta_m1(a, j)? * inv_fact * bracket;
            qz1 += t;
            terms_used += 1;
            if t.norm() < 1e-18 * qz1.norm().max(1.0) && j > 8 {
                break;
            }
        }
    }

    // both zeta-1: A_j B_k / (j+k+1)! assembled through overflow-free ratios
    let mut qzz = Complex64::new(0.0, 0.0);
    {
        let mut inv_fact_j = 1.0f64; // 1/(j+1)!
        for j in 0..=jz {
            inv_fact_j /= j as f64 + 1.0;
            let aj = poch_zeta_m1(a, j)? * inv_fact_j; // (a)_j {zeta-1} / (j+1)!
            if aj.norm() < 1e-22 * qzz.norm().max(1.0) && j > 8 {
                break;
            }
            let mut den = 1.0f64; // (j+2)...(j+k+1)
            let mut row = Complex64::new(0.0, 0.0);
            for k in 1..=kz {
                den *= (j + k + 1) as f64;
                let bk = poch_zeta_m1(b, k)?;
                let t = bk / den;
                row += t;
                terms_used += 1;
                if t.norm() < 1e-20 * row.norm().max(1.0) && k > 8 {
                    break;
                }
            }
            qzz += aj * row;
        }
    }

    let value = q11 + q1z + qz1 + qzz;
    Ok(SeriesValue {
        value,
        abs_error_estimate: 1e-14 * value.norm().max(1.0),
        terms_used,
        converged: true,
    })
}

/// Direct evaluation of S2(a, b) =
/// sum_{j,k>=0} (a)_j (b)_k zeta(a+j) zeta(b+k) / (j! k! (j+k+1))
/// with the pole-term limit convention; finite when a and b are
/// non-positive integers.
pub fn s2_direct(a: Complex64, b: Complex64, j_max: usize, k_max: usize) -> Result<SeriesValue> {
    require_half_plane(a, b)?;
    if (a + b).re >= 1.0 {
        return Err(EvalError::Domain("the summation needs Re(a+b) < 1".into()));
    }
    let jz = series_cap(j_max);
    let kz = series_cap(k_max);
    let mut terms_used = 0usize;

    // zeta -> 1 in both: integral of (1-t)^{-a-b} = 1/(1 - a - b)
    let p11 = 1.0 / (Complex64::new(1.0, 0.0) - a - b);

    // mixed blocks: Gamma(1-x) sum_k (y)_k {zeta(y+k)-1} / Gamma(k+2-x)
    let mixed = |x: Complex64, y: Complex64, cap: usize| -> Result<(Complex64, usize)> {
        let gx = gamma(1.0 - x)?;
        let mut recip = 1.0 / gamma(2.0 - x)?; // 1/Gamma(k+2-x)
        let mut acc = Complex64::new(0.0, 0.0);
        let mut used = 0usize;
        for k in 0..=cap {
            let t = poch_zeta_m1(y, k)? * recip;
            acc += t;
            used += 1;
            if t.norm() < 1e-18 * acc.norm().max(1.0) && k > 8 {
                break;
            }
            recip /= Complex64::new(k as f64 + 2.0, 0.0) - x;
        }
        Ok((gx * acc, used))
    };
    let (p1z, used1) = mixed(a, b, kz)?;
    let (pz1, used2) = mixed(b, a, jz)?;
    terms_used += used1 + used2;

    // both zeta-1: u_j v_k / (j+k+1) with u_j = (a)_j {zeta(a+j)-1}/j!
    let build = |x: Complex64, cap: usize| -> Result<Vec<Complex64>> {
        let mut out = Vec::with_capacity(cap + 1);
        let mut inv_fact = 1.0f64;
        for i in 0..=cap {
            if i > 0 {
                inv_fact /= i as f64;
            }
            let u = poch_zeta_m1(x, i)? * inv_fact;
            out.push(u);
            if u.norm() < 1e-20 && i > 12 {
                break;
            }
        }
        Ok(out)
    };
    let u = build(a, jz)?;
    let v = build(b, kz)?;
    let mut pzz = Complex64::new(0.0, 0.0);
    for (j, uj) in u.iter().enumerate() {
        for (k, vk) in v.iter().enumerate() {
            pzz += uj * vk / (j as f64 + k as f64 + 1.0);
            terms_used += 1;
        }
    }

    let value = p11 + p1z + pz1 + pzz;
    Ok(SeriesValue {
        value,
        abs_error_estimate: 1e-14 * value.norm().max(1.0),
        terms_used,
        converged: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::{PI, ZETA_3};
    use crate::quadrature::{oracle_i_star, oracle_j_star};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn s1_closed_values() {
        // a + b = -1 makes the zeta factor a trivial zero
        let v = s1_closed(c(-0.3, 0.0), c(-0.7, 0.0)).unwrap();
        assert!(v.norm() < 1e-14, "{v}");
        // a = b = 0: B(1,1) zeta(-1) = -1/12
        let v = s1_closed(c(0.0, 0.0), c(0.0, 0.0)).unwrap();
        assert!((v.re + 1.0 / 12.0).abs() < 1e-15);
        // component oracle at a = b = 1/4
        let expect =
            beta_fn(c(0.75, 0.0), c(0.75, 0.0)).unwrap() * riemann_zeta(c(-0.5, 0.0)).unwrap();
        let v = s1_closed(c(0.25, 0.0), c(0.25, 0.0)).unwrap();
        assert!((v - expect).norm() < 1e-15);
        assert!(s1_closed(c(1.2, 0.0), c(0.0, 0.0)).is_err());
    }

    #[test]
    fn s1_finite_values_and_parity() {
        assert!((s1_finite(0, 0).unwrap() + 1.0 / 12.0).abs() < 1e-16);
        assert_eq!(s1_finite(0, 1).unwrap(), 0.0);
        assert!((s1_finite(1, 1).unwrap() - 1.0 / 720.0).abs() < 1e-18);
        for m in 0..=6u32 {
            for n in 0..=6u32 {
                if (m + n) % 2 == 1 {
                    assert_eq!(s1_finite(m, n).unwrap(), 0.0, "parity at ({m},{n})");
                }
            }
        }
    }

    #[test]
    fn raw_terms_reproduce_the_hand_count() {
        // S1 at (0,0): (j=0,k=1) gives zeta(0)/2! = -1/4 and the (1,1)
        // limit term gives 1/3! = 1/6; everything else vanishes.
        let z0 = c(0.0, 0.0);
        let t = s1_term(z0, z0, 0, 1).unwrap();
        assert!((t.value.re + 0.25).abs() < 1e-15 && t.is_limit_term);
        let t = s1_term(z0, z0, 1, 1).unwrap();
        assert!((t.value.re - 1.0 / 6.0).abs() < 1e-16 && t.is_limit_term);
        assert_eq!(s1_term(z0, z0, 2, 1).unwrap().value, c(0.0, 0.0));
        // S2 at (0,0): 1/4 - 1/4 - 1/4 + 1/3 with two limit terms and one
        // double-limit term
        let t00 = s2_term(z0, z0, 0, 0).unwrap();
        assert!((t00.value.re - 0.25).abs() < 1e-15 && !t00.is_limit_term);
        let t10 = s2_term(z0, z0, 1, 0).unwrap();
        assert!((t10.value.re + 0.25).abs() < 1e-15 && t10.is_limit_term);
        let t01 = s2_term(z0, z0, 0, 1).unwrap();
        assert!((t01.value.re + 0.25).abs() < 1e-15 && t01.is_limit_term);
        let t11 = s2_term(z0, z0, 1, 1).unwrap();
        assert!((t11.value.re - 1.0 / 3.0).abs() < 1e-15 && t11.is_limit_term);
        let total = t00.value + t10.value + t01.value + t11.value;
        assert!((total.re - 1.0 / 12.0).abs() < 1e-15);
        // generic parameters carry no limit flag
        let t = s2_term(c(0.3, 0.0), c(0.2, 0.0), 2, 3).unwrap();
        assert!(!t.is_limit_term);
        assert!(s1_term(z0, z0, 0, 0).is_err());
    }

    #[test]
    fn raw_lattice_agrees_with_split_evaluator() {
        // at strongly damped parameters the raw lattice truncation is
        // accurate enough to validate the split evaluation independently
        let (a, b) = (c(-2.5, 0.0), c(-3.3, 0.0));
        let mut raw1 = c(0.0, 0.0);
        let mut raw2 = c(0.0, 0.0);
        for j in 0..400 {
            for k in 0..400 {
                if k >= 1 {
                    raw1 += s1_term(a, b, j, k).unwrap().value;
                }
                raw2 += s2_term(a, b, j, k).unwrap().value;
            }
        }
        let split1 = s1_direct(a, b, 400, 400).unwrap().value;
        assert!(
            (raw1 - split1).norm() <= 1e-10 * split1.norm().max(1.0),
            "{raw1} vs {split1}"
        );
        let split2 = s2_direct(a, b, 400, 400).unwrap().value;
        assert!(
            (raw2 - split2).norm() <= 1e-8 * split2.norm().max(1.0),
            "{raw2} vs {split2}"
        );
    }

    #[test]
    fn s1_direct_matches_finite_and_closed() {
        // hand case a = b = 0
        let v = s1_direct(c(0.0, 0.0), c(0.0, 0.0), 400, 400).unwrap();
        assert!((v.value.re + 1.0 / 12.0).abs() < 1e-14, "{}", v.value);
        // a = -1, b = 0: parity zero
        let v = s1_direct(c(-1.0, 0.0), c(0.0, 0.0), 400, 400).unwrap();
        assert!(v.value.norm() < 1e-14, "{}", v.value);
        // generic point against the closed form
        let v = s1_direct(c(0.25, 0.0), c(0.25, 0.0), 400, 400).unwrap();
        let closed = s1_closed(c(0.25, 0.0), c(0.25, 0.0)).unwrap();
        assert!(
            (v.value - closed).norm() <= 1e-8 * closed.norm().max(1.0),
            "{} vs {closed}",
            v.value
        );
    }

    #[test]
    fn s1_direct_symmetry() {
        let (a, b) = (c(0.3, 0.2), c(-0.6, -0.1));
        let ab = s1_direct(a, b, 200, 200).unwrap().value;
        let ba = s1_direct(b, a, 200, 200).unwrap().value;
        assert!(
            (ab - ba).norm() <= 1e-10 * ab.norm().max(1.0),
            "{ab} vs {ba}"
        );
    }

    #[test]
    fn s2_closed_against_direct() {
        for (a, b) in [
            (c(0.25, 0.0), c(0.25, 0.0)),
            (c(0.3, 0.0), c(0.2, 0.0)),
            (c(0.3, 0.1), c(-0.4, 0.0)),
            (c(-2.5, 0.0), c(0.7, 0.3)),
        ] {
            let closed = s2_closed(a, b).unwrap();
            let direct = s2_direct(a, b, 400, 400).unwrap();
            assert!(
                (closed - direct.value).norm() <= 1e-8 * closed.norm().max(1.0),
                "({a},{b}): {closed} vs {}",
                direct.value
            );
        }
    }

    #[test]
    fn s2_closed_symmetry_and_degeneracies() {
        let (a, b) = (c(0.35, 0.2), c(-0.8, -0.3));
        let ab = s2_closed(a, b).unwrap();
        let ba = s2_closed(b, a).unwrap();
        assert!((ab - ba).norm() <= 1e-13 * ab.norm());
        assert!(s2_closed(c(0.0, 0.0), c(0.3, 0.0)).is_err());
        assert!(s2_closed(c(0.3, 0.0), c(-0.3, 0.0)).is_err());
        assert!(s2_closed(c(0.6, 0.0), c(0.6, 0.0)).is_err());
    }

    #[test]
    fn s2_integer_sum_special_cases() {
        // a + b = 0: (pi a / 12) cot(pi a)
        let a = 0.3;
        let expect = PI * a / 12.0 * (PI * a).cos() / (PI * a).sin();
        let v = s2_integer_sum(c(a, 0.0), 0).unwrap();
        assert!((v.re - expect).abs() < 1e-14, "{v} vs {expect}");
        // a + b = -1 at a = 0.5: a b zeta(3) / (4 pi^2), b = -1.5
        let expect = 0.5 * (-1.5) * ZETA_3 / (4.0 * PI * PI);
        let v = s2_integer_sum(c(0.5, 0.0), -1).unwrap();
        assert!((v.re - expect).abs() < 1e-15, "{v} vs {expect}");
        // a -> 0 limit of the even case: 1/12
        let v = s2_integer_sum(c(1e-9, 0.0), 0).unwrap();
        assert!((v.re - 1.0 / 12.0).abs() < 1e-12);
        // domain windows
        assert!(s2_integer_sum(c(-1.5, 0.0), 0).is_err());
        assert!(s2_integer_sum(c(0.5, 0.0), 1).is_err());
    }

    #[test]
    fn s2_direct_hand_value_and_integer_routes() {
        // the four-term hand evaluation with two limit terms
        let v = s2_direct(c(0.0, 0.0), c(0.0, 0.0), 400, 400).unwrap();
        assert!((v.value.re - 1.0 / 12.0).abs() < 1e-14, "{}", v.value);
        // degenerate sum: direct vs the integer-sum closed form
        let v = s2_direct(c(0.3, 0.0), c(-0.3, 0.0), 400, 400).unwrap();
        let closed = s2_integer_sum(c(0.3, 0.0), 0).unwrap();
        assert!(
            (v.value - closed).norm() <= 1e-8 * closed.norm().max(1.0),
            "{} vs {closed}",
            v.value
        );
        // both parameters negative integers: finite double sum
        let v = s2_direct(c(-1.0, 0.0), c(-1.0, 0.0), 400, 400).unwrap();
        let closed = s2_integer_sum(c(-1.0, 0.0), -2).unwrap();
        assert!(
            (v.value - closed).norm() <= 1e-12 * closed.norm().max(1e-6),
            "{} vs {closed}",
            v.value
        );
    }

    #[test]
    fn quadrature_agreement() {
        // S1 closed form against the complementary-shift product integral
        let (a, b) = (c(0.25, 0.0), c(0.25, 0.0));
        let closed = s1_closed(a, b).unwrap();
        let orc = oracle_j_star(a, b).unwrap();
        assert!(
            (closed - orc.value).norm() <= 1e-7 * closed.norm().max(1.0),
            "{closed} vs {}",
            orc.value
        );
        // S2 closed form against the equal-shift product integral
        let (a, b) = (c(0.3, 0.0), c(0.2, 0.0));
        let closed = s2_closed(a, b).unwrap();
        let orc = oracle_i_star(a, b).unwrap();
        assert!(
            (closed - orc.value).norm() <= 1e-7 * closed.norm().max(1.0),
            "{closed} vs {}",
            orc.value
        );
    }

    #[test]
    fn integer_seam_continuity() {
        // |S2_closed(a, total - a + delta) - S2_integer_sum(a, total)| -> 0
        // linearly in delta
        let a = c(0.3, 0.0);
        let closed_at = |delta: f64| -> Complex64 { s2_closed(a, c(-0.3 + delta, 0.0)).unwrap() };
        let limit = s2_integer_sum(a, 0).unwrap();
        let d1 = (closed_at(1e-4) - limit).norm();
        let d2 = (closed_at(1e-5) - limit).norm();
        assert!(d1 < 1e-2 && d2 < 1e-3, "d1={d1} d2={d2}");
        let ratio = d1 / d2;
        assert!((5.0..20.0).contains(&ratio), "seam ratio {ratio}");
    }
}
