//! Exact-rational Bernoulli numbers, built once and shared read-only.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{EvalError, Result};

/// Largest index kept in the shared table. Chosen so every Euler-Maclaurin
/// correction order used in the crate is covered and `B_n` still converts
/// to a finite f64.
pub const SHARED_MAX_INDEX: usize = 160;

/// Exact Bernoulli numbers `B_0 .. B_max` with cached f64 conversions.
#[derive(Debug, Clone)]
pub struct BernoulliTable {
    values: Vec<BigRational>,
    values_f64: Vec<f64>,
}

impl BernoulliTable {
    /// Build the table up to `max_index` by the defining recurrence
    /// sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1.
    pub fn new(max_index: usize) -> Self {
        let mut values: Vec<BigRational> = Vec::with_capacity(max_index + 1);
        values.push(BigRational::one());
        // Pascal row for C(m+1, j), updated incrementally.
        let mut row: Vec<BigInt> = vec![BigInt::one(), BigInt::one()];
        for m in 1..=max_index {
            // Extend the row to represent binomials of m+1.
            let mut next = Vec::with_capacity(m + 2);
            next.push(BigInt::one());
            for j in 1..=m {
                next.push(&row[j - 1] + &row[j]);
            }
            next.push(BigInt::one());
            row = next;
            if m > 1 && m % 2 == 1 {
                values.push(BigRational::zero());
                continue;
            }
            let mut acc = BigRational::zero();
            for (j, b) in values.iter().enumerate() {
                if !b.is_zero() {
                    acc += BigRational::from(row[j].clone()) * b;
                }
            }
            let bm = -acc / BigRational::from(row[m].clone());
            values.push(bm);
        }
        let values_f64 = values.iter().map(rational_to_f64).collect();
        BernoulliTable { values, values_f64 }
    }

    pub fn max_index(&self) -> usize {
        self.values.len() - 1
    }

    pub fn rational(&self, n: usize) -> Result<&BigRational> {
        self.values.get(n).ok_or_else(|| {
            EvalError::TableOverflow(format!("B_{n} beyond table max {}", self.max_index()))
        })
    }

    pub fn as_f64(&self, n: usize) -> Result<f64> {
        self.values_f64.get(n).copied().ok_or_else(|| {
            EvalError::TableOverflow(format!("B_{n} beyond table max {}", self.max_index()))
        })
    }

    /// zeta(-s) = -B_{s+1}/(s+1) for integer s >= 1, exact rational.
    pub fn zeta_negative_integer(&self, s: usize) -> Result<BigRational> {
        let b = self.rational(s + 1)?;
        Ok(-b / BigRational::from(BigInt::from(s as i64 + 1)))
    }

    /// Bernoulli polynomial B_n(x) = sum_k C(n,k) B_k x^{n-k} in f64.
    pub fn bernoulli_poly(&self, n: usize, x: f64) -> Result<f64> {
        if n > self.max_index() {
            return Err(EvalError::TableOverflow(format!(
                "B_{n}(x) beyond table max {}",
                self.max_index()
            )));
        }
        let mut binom = 1.0f64;
        let mut acc = 0.0f64;
        // Horner-like accumulation over k with exact binomials kept in f64;
        // n stays small enough (<= ~60 in practice) that C(n,k) is exact.
        for k in 0..=n {
            let bk = self.values_f64[k];
            if bk != 0.0 {
                acc += binom * bk * x.powi((n - k) as i32);
            }
            binom *= (n - k) as f64 / (k + 1) as f64;
        }
        Ok(acc)
    }
}

fn rational_to_f64(r: &BigRational) -> f64 {
    if r.is_zero() {
        return 0.0;
    }
    match (r.numer().to_f64(), r.denom().to_f64()) {
        (Some(n), Some(d)) if n.is_finite() && d.is_finite() => n / d,
        _ => {
            // Scale numerator and denominator together; only reached for
            // indices near the table ceiling.
            let shift = (r.numer().bits().max(r.denom().bits()) as i64 - 900).max(0) as u64;
            let n = (r.numer() >> shift).to_f64().unwrap_or(f64::NAN);
            let d = (r.denom() >> shift).to_f64().unwrap_or(f64::NAN);
            n / d
        }
    }
}

/// The shared read-only table (`B_0 .. B_160`), built on first use.
pub fn shared() -> &'static BernoulliTable {
    static TABLE: OnceLock<BernoulliTable> = OnceLock::new();
    TABLE.get_or_init(|| BernoulliTable::new(SHARED_MAX_INDEX))
}

/// C(n, k) as an exact BigInt.
pub(crate) fn big_binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for j in 0..k {
        num *= BigInt::from((n - j) as u64);
        den *= BigInt::from((j + 1) as u64);
    }
    num / den
}
