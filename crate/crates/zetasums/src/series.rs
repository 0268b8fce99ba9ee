//! Series return contract and the repo-wide truncation policy.

use num_complex::Complex64;

/// Default tolerance used whenever the caller does not supply one.
pub const DEFAULT_TOL: f64 = 1e-13;

/// Hard cap on the number of terms any series evaluator may consume.
pub const MAX_TERMS: usize = 100_000;

/// Value of a truncated series together with an error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesValue {
    pub value: Complex64,
    pub abs_error_estimate: f64,
    pub terms_used: usize,
    pub converged: bool,
}

impl SeriesValue {
    /// An exactly known value (finite sums, closed forms folded into a series return).
    pub fn exact(value: Complex64, terms_used: usize) -> Self {
        SeriesValue {
            value,
            abs_error_estimate: f64::EPSILON * value.norm().max(1.0),
            terms_used,
            converged: true,
        }
    }

    /// Re-check the convergence contract after combining component series
    /// into a final value: converged implies
    /// abs_error_estimate <= tol * max(1, |value|).
    pub(crate) fn with_contract(mut self, tol: f64) -> Self {
        self.converged =
            self.converged && self.abs_error_estimate <= tol * self.value.norm().max(1.0);
        self
    }
}

/// Truncation policy shared by all series evaluators: stop once three
/// consecutive terms satisfy |term| <= tol * max(1, |partial|), give up
/// past [`MAX_TERMS`].
pub(crate) struct SeriesAccumulator {
    sum: Complex64,
    tol: f64,
    absolute: bool,
    small_streak: u32,
    terms: usize,
    cap: usize,
    last_term: f64,
}

impl SeriesAccumulator {
    pub fn new(tol: f64) -> Self {
        SeriesAccumulator {
            sum: Complex64::new(0.0, 0.0),
            tol: tol.max(1e-16),
            absolute: false,
            small_streak: 0,
            terms: 0,
            cap: MAX_TERMS,
            last_term: f64::INFINITY,
        }
    }

    /// Fixed-scale variant for component series of assembled quantities:
    /// the stop threshold ignores the partial-sum magnitude, so the final
    /// error bound holds against the assembled value, not the partials.
    pub fn new_absolute(tol: f64) -> Self {
        let mut acc = Self::new(tol);
        acc.absolute = true;
        acc
    }

    pub fn with_cap(tol: f64, cap: usize) -> Self {
        let mut acc = Self::new(tol);
        acc.cap = cap.min(MAX_TERMS);
        acc
    }

    fn scale(&self) -> f64 {
        if self.absolute {
            1.0
        } else {
            self.sum.norm().max(1.0)
        }
    }

    /// Add one term; returns `true` while more terms are wanted.
    pub fn push(&mut self, term: Complex64) -> bool {
        self.sum += term;
        self.terms += 1;
        self.last_term = term.norm();
        if self.last_term <= self.tol * self.scale() {
            self.small_streak += 1;
        } else {
            self.small_streak = 0;
        }
        self.small_streak < 3 && self.terms < self.cap
    }

    /// Finish with the geometric-tail heuristic: twice the magnitude of the
    /// last (smallest) term.
    pub fn finish(self) -> SeriesValue {
        let converged = self.small_streak >= 3;
        let scale = self.scale();
        let err = if converged {
            (2.0 * self.last_term).min(self.tol * scale)
        } else {
            (2.0 * self.last_term).max(self.tol * scale)
        };
        SeriesValue {
            value: self.sum,
            abs_error_estimate: err,
            terms_used: self.terms,
            converged,
        }
    }
}

/// Deterministic pairwise summation; used where the concurrency model
/// promises bit-for-bit reproducible reductions.
pub(crate) fn pairwise_sum(values: &[Complex64]) -> Complex64 {
    match values.len() {
        0 => Complex64::new(0.0, 0.0),
        1 => values[0],
        2 => values[0] + values[1],
        n => {
            let mid = n / 2;
            pairwise_sum(&values[..mid]) + pairwise_sum(&values[mid..])
        }
    }
}

/// Integer detection with an explicit tolerance (repo-wide default 1e-8).
pub(crate) fn near_integer(z: Complex64, tol: f64) -> Option<i64> {
    if z.im.abs() <= tol && (z.re - z.re.round()).abs() <= tol && z.re.abs() < 4.0e15 {
        Some(z.re.round() as i64)
    } else {
        None
    }
}

/// Repo-wide degeneracy threshold for "is an integer" decisions.
pub(crate) const INT_EPS: f64 = 1e-8;

/// x^w for a positive real base, principal branch.
pub(crate) fn pow_real_base(x: f64, w: Complex64) -> Complex64 {
    debug_assert!(x > 0.0);
    (w * x.ln()).exp()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accumulator_stops_after_three_small_terms() {
        let mut acc = SeriesAccumulator::new(1e-10);
        let mut n = 0u32;
        loop {
            let term = Complex64::new(0.5f64.powi(n as i32), 0.0);
            n += 1;
            if !acc.push(term) {
                break;
            }
        }
        let out = acc.finish();
        assert!(out.converged);
        assert!((out.value.re - 2.0).abs() < 1e-9);
        assert!(out.abs_error_estimate <= 1e-10 * out.value.norm().max(1.0));
    }

    #[test]
    fn accumulator_flags_cap() {
        let mut acc = SeriesAccumulator::with_cap(1e-13, 50);
        while acc.push(Complex64::new(1.0, 0.0)) {}
        let out = acc.finish();
        assert!(!out.converged);
        assert_eq!(out.terms_used, 50);
    }

    #[test]
    fn pairwise_matches_sequential() {
        let vals: Vec<Complex64> = (1..=100)
            .map(|k| Complex64::new(1.0 / k as f64, -0.5 / k as f64))
            .collect();
        let seq: Complex64 = vals.iter().sum();
        let pw = pairwise_sum(&vals);
        assert!((seq - pw).norm() < 1e-12);
    }

    #[test]
    fn integer_detection_respects_tolerance() {
        assert_eq!(
            near_integer(Complex64::new(3.0 + 5e-9, 0.0), INT_EPS),
            Some(3)
        );
        assert_eq!(near_integer(Complex64::new(3.0 + 5e-7, 0.0), INT_EPS), None);
        assert_eq!(near_integer(Complex64::new(-2.0, 1e-9), INT_EPS), Some(-2));
        assert_eq!(near_integer(Complex64::new(-2.0, 1e-3), INT_EPS), None);
    }
}
