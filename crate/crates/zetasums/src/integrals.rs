//! Closed-form representations of the two product integrals
//!
//! ```text
//! I(a,b) = int_0^1 zeta_1(a,x) zeta_1(b,x)   dx
//! J(a,b) = int_0^1 zeta_1(a,x) zeta_1(b,1-x) dx
//! ```
//!
//! Each has a hypergeometric k-sum and one or two zeta-series expansions;
//! the critical-line specialisations a = 1/2 + it, b = conj(a) get their own
//! evaluators. The hypergeometric sums decay only algebraically (k^-gamma,
//! resp. k^-min(a,b)), so after a direct stretch the tail is completed with
//! Euler-Maclaurin: an integral of the termwise-interpolated summand plus
//! endpoint corrections. Without that completion the representation
//! cross-checks could not reach 1e-9 near Re a = Re b = 1.3.

use num_complex::Complex64;

use crate::error::{EvalError, Result};
use crate::gamma::digamma;
use crate::hyp2f1::{beta_fn, beta_or_zero, gauss_2f1};
use crate::quadrature::{integrate_unit_interval, QuadratureConfig};
use crate::series::{
    near_integer, pow_real_base, SeriesAccumulator, SeriesValue, INT_EPS, MAX_TERMS,
};
use crate::zeta::{poch_zeta_m1, riemann_zeta, riemann_zeta_m1};

/// Classification of the (a, b) parameter pair against the degeneracies the
/// closed forms care about. `PoleAtOne` wins, then integer a, integer b,
/// integer a + b.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Degeneracy {
    Generic,
    PoleAtOne,
    AInteger(i64),
    BInteger(i64),
    SumInteger(i64),
}

/// The pair (a, b) with gamma = a + b - 1 and its degeneracy class.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParameterPair {
    pub a: Complex64,
    pub b: Complex64,
    pub gamma: Complex64,
    pub degeneracy: Degeneracy,
}

impl ParameterPair {
    pub fn new(a: Complex64, b: Complex64) -> Self {
        let degeneracy = if near_integer(a - 1.0, INT_EPS) == Some(0)
            || near_integer(b - 1.0, INT_EPS) == Some(0)
        {
            Degeneracy::PoleAtOne
        } else if let Some(m) = near_integer(a, INT_EPS) {
            Degeneracy::AInteger(m)
        } else if let Some(m) = near_integer(b, INT_EPS) {
            Degeneracy::BInteger(m)
        } else if let Some(m) = near_integer(a + b, INT_EPS) {
            Degeneracy::SumInteger(m)
        } else {
            Degeneracy::Generic
        };
        ParameterPair {
            a,
            b,
            gamma: a + b - 1.0,
            degeneracy,
        }
    }

    pub fn swapped(&self) -> Self {
        ParameterPair::new(self.b, self.a)
    }

    fn a_integer(&self) -> Option<i64> {
        near_integer(self.a, INT_EPS)
    }

    fn b_integer(&self) -> Option<i64> {
        near_integer(self.b, INT_EPS)
    }

    fn reject_pole_at_one(&self) -> Result<()> {
        if self.degeneracy == Degeneracy::PoleAtOne {
            return Err(EvalError::Pole(
                "a = 1 or b = 1 is a pole of the integrand".into(),
            ));
        }
        Ok(())
    }
}

/// Tags for the representations exposed through reports and the C ABI.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RepresentationId {
    I2f1,
    IZeta,
    J2f1,
    JZeta,
    JAlt,
}

impl RepresentationId {
    pub fn tag(&self) -> &'static str {
        match self {
            RepresentationId::I2f1 => "I_2F1",
            RepresentationId::IZeta => "I_ZETA",
            RepresentationId::J2f1 => "J_2F1",
            RepresentationId::JZeta => "J_ZETA",
            RepresentationId::JAlt => "J_ALT",
        }
    }
}

/// Index where the direct stretch of the k-sums hands over to the
/// Euler-Maclaurin tail.
const TAIL_START: usize = 256;

/// Direct sum of f(k) for k in [k0, TAIL_START) plus the Euler-Maclaurin
/// tail from TAIL_START: integral + f/2 - f'/12 + f'''/720, the derivatives
/// from a 5-point stencil. `decay` is the algebraic decay power of f.
fn accelerated_sum<F>(f: F, k0: usize, decay: f64, tol: f64) -> Result<SeriesValue>
where
    F: Fn(f64) -> Result<Complex64>,
{
    if decay <= 1.0 {
        return Err(EvalError::Domain(format!(
            "series terms decay like k^-{decay}; the sum does not converge"
        )));
    }
    let mut direct = Complex64::new(0.0, 0.0);
    let mut terms = 0usize;
    let mut last_mag = 0.0f64;
    for k in k0..TAIL_START {
        let t = f(k as f64)?;
        direct += t;
        last_mag = t.norm();
        terms += 1;
    }
    let big_k = TAIL_START as f64;

    // integral_K^inf f(x) dx via x = K/u
    let cfg = QuadratureConfig {
        max_level: 11,
        target_abs_error: (tol * direct.norm().max(1.0) * 0.01).max(1e-15),
        exponent_at_zero: decay - 2.0,
        ..Default::default()
    };
    let integrand = |u: f64| -> Complex64 {
        // below this the contribution is under 1e-30 of the tail for any
        // decay power above 1.2, and u^2 would leave the f64 range
        if u < 1e-120 {
            return Complex64::new(0.0, 0.0);
        }
        match f(big_k / u) {
            Ok(v) if v == Complex64::new(0.0, 0.0) => v,
            Ok(v) => v * big_k / (u * u),
            Err(_) => Complex64::new(f64::NAN, 0.0),
        }
    };
    let integral = integrate_unit_interval(integrand, &cfg)?;

    let f0 = f(big_k)?;
    let fm1 = f(big_k - 1.0)?;
    let fmh = f(big_k - 0.5)?;
    let fph = f(big_k + 0.5)?;
    let fp1 = f(big_k + 1.0)?;
    // 4th-order first derivative and 2nd-order third derivative, h = 1/2
    let d1 = (-fp1 + 8.0 * fph - 8.0 * fmh + fm1) / 6.0;
    let d3 = (fp1 - 2.0 * fph + 2.0 * fmh - fm1) / 0.25;
    let tail = integral.value + 0.5 * f0 - d1 / 12.0 + d3 / 720.0;

    let value = direct + tail;
    let omitted = d3.norm() / 30240.0 * (decay + 4.0).powi(2) / (big_k * big_k);
    let err = integral.abs_error_estimate
        + omitted
        + f64::EPSILON * terms as f64 * last_mag.max(f0.norm());
    Ok(SeriesValue {
        value,
        abs_error_estimate: err,
        terms_used: terms + integral.evaluations + 5,
        converged: err <= tol * value.norm().max(1.0),
    })
}

/// One folded term of the hypergeometric I-sum:
/// (x+1)^(-g) * 2F1(p, g; g+1; x/(x+1)) with every power of (x+1) combined
/// into a single exponent, so the deep tail neither overflows nor loses the
/// distance to z = 1. `q = g + 1 - p` is the complementary exponent. The
/// asymptotic pieces decay like x^-g and x^-q; both exponents have positive
/// real part in the representation's domain.
fn i_term_folded(p: Complex64, q: Complex64, g: Complex64, x: f64, tol: f64) -> Result<Complex64> {
    let w = 1.0 / (x + 1.0);
    let wz = Complex64::new(w, 0.0);
    let lx = (x + 1.0).ln();
    let pow_e = |e: Complex64| -> Complex64 { (-e * lx).exp() };
    match near_integer(p, INT_EPS) {
        None => {
            // piece 1 collapses: F(p, g; p; w) = (1-w)^(-g), leaving x^(-g)
            let piece1 = crate::gamma::gamma(g + 1.0)?
                * crate::gamma::gamma(1.0 - p)?
                * crate::gamma::recip_gamma(q)
                * (-g * x.ln()).exp();
            let series = crate::hyp2f1::gauss_series(q, Complex64::new(1.0, 0.0), 2.0 - p, wz, tol);
            let piece2 = g / (p - 1.0) * series.value * pow_e(q);
            Ok(piece1 + piece2)
        }
        Some(ip) => {
            // integer exponent p = m + 1 >= 2: the logarithmic connection
            // with the same folding; psi(k+m+1) and psi(p+k) cancel.
            let m = (ip - 1) as usize;
            let mut finite = Complex64::new(0.0, 0.0);
            if m > 0 {
                let mut term = Complex64::new(1.0, 0.0);
                let mut sum = Complex64::new(0.0, 0.0);
                for k in 0..m {
                    sum += term;
                    let kf = k as f64;
                    // (1)_k (g-m)_k / ((1-m)_k k!) increments -> (g-m+k)/(1-m+k)
                    term *= (g - m as f64 + kf) / (1.0 - m as f64 + kf) * wz;
                }
                finite = g / m as f64 * sum * pow_e(q);
            }
            let sign = if m.is_multiple_of(2) { 1.0 } else { -1.0 };
            // Gamma(g+1)/Gamma(g-m) = (q)_{m+1}
            let mut poch_q = Complex64::new(1.0, 0.0);
            for l in 0..=m {
                poch_q *= q + l as f64;
            }
            let coef_log = -sign * poch_q;
            let log_w = Complex64::new(w.ln(), 0.0);
            let mut acc = SeriesAccumulator::new(tol);
            let mut psi1 = -crate::constants::EULER_GAMMA;
            let mut psi_g = digamma(g)?;
            let mut poch = Complex64::new(1.0, 0.0); // (m+1)_k (g)_k
            let mut fact_ratio = 1.0 / factorial_f64(m);
            let mut wp = Complex64::new(1.0, 0.0);
            let mut k = 0usize;
            loop {
                let bracket = log_w - psi1 + psi_g;
                let term = poch * fact_ratio * wp * bracket;
                if !acc.push(term) {
                    break;
                }
                let kf = k as f64;
                poch *= (m as f64 + 1.0 + kf) * (g + kf);
                fact_ratio /= (kf + 1.0) * (kf + 1.0 + m as f64);
                wp *= wz;
                psi1 += 1.0 / (kf + 1.0);
                psi_g += 1.0 / (g + kf);
                k += 1;
            }
            Ok(finite + coef_log * acc.finish().value * pow_e(g))
        }
    }
}

fn factorial_f64(n: usize) -> f64 {
    let mut acc = 1.0f64;
    for k in 2..=n {
        acc *= k as f64;
    }
    acc
}

/// Hypergeometric representation of I(a, b): 1/gamma plus the k-sum of
/// (k+1)^-gamma {2F1(a, gamma; gamma+1; k/(k+1)) + (a <-> b)} / gamma.
/// Valid (and exact without limits) for Re a, Re b > 1, integers included.
pub fn i_via_2f1(p: ParameterPair, tol: f64) -> Result<SeriesValue> {
    p.reject_pole_at_one()?;
    if p.a.re <= 1.0 || p.b.re <= 1.0 {
        return Err(EvalError::Domain(
            "hypergeometric representation needs Re a > 1 and Re b > 1".into(),
        ));
    }
    let (a, b, g) = (p.a, p.b, p.gamma);
    let f = move |x: f64| -> Result<Complex64> {
        let w = 1.0 / (x + 1.0);
        if w >= 0.3 {
            let z = Complex64::new(x / (x + 1.0), 0.0);
            let fa = gauss_2f1(a, g, g + 1.0, z, 1e-15)?.value;
            let fb = gauss_2f1(b, g, g + 1.0, z, 1e-15)?.value;
            Ok(pow_real_base(x + 1.0, -g) * (fa + fb))
        } else {
            Ok(i_term_folded(a, b, g, x, 1e-15)? + i_term_folded(b, a, g, x, 1e-15)?)
        }
    };
    let sum = accelerated_sum(f, 1, a.re.min(b.re), tol)?;
    Ok(SeriesValue {
        value: 1.0 / g + sum.value / g,
        abs_error_estimate: sum.abs_error_estimate / g.norm(),
        ..sum
    }
    .with_contract(tol))
}

/// n-th term of the zeta-series sums in the expansions of I (plain) and its
/// alternating J counterpart: (a)_n / (1-b)_{n+1} {zeta(a+n) - 1}.
fn ratio_series_term(a: Complex64, b: Complex64, n: usize) -> Result<Complex64> {
    let mut den = Complex64::new(1.0, 0.0);
    for l in 0..=n {
        den *= 1.0 - b + l as f64;
    }
    Ok(poch_zeta_m1(a, n)? / den)
}

fn ratio_series(a: Complex64, b: Complex64, tol: f64) -> Result<SeriesValue> {
    let mut acc = SeriesAccumulator::new_absolute(tol);
    let mut n = 0usize;
    loop {
        if !acc.push(ratio_series_term(a, b, n)?) {
            break;
        }
        n += 1;
        if n >= MAX_TERMS {
            break;
        }
    }
    Ok(acc.finish())
}

/// Zeta-series expansion of I(a, b); analytic continuation in a and b except
/// at the listed degeneracies (integer a, b >= 2; a + b <= 2 integer; poles
/// at a = 1 or b = 1), which are routed elsewhere.
pub fn i_via_zeta(p: ParameterPair, tol: f64) -> Result<SeriesValue> {
    p.reject_pole_at_one()?;
    if let Some(m) = p.a_integer() {
        if m >= 2 {
            return Err(EvalError::Degenerate(
                "integer a >= 2: use the hypergeometric representation or the eps probe".into(),
            ));
        }
    }
    if let Some(m) = p.b_integer() {
        if m >= 2 {
            return Err(EvalError::Degenerate(
                "integer b >= 2: use the hypergeometric representation or the eps probe".into(),
            ));
        }
    }
    if let Some(s) = near_integer(p.a + p.b, INT_EPS) {
        if s <= 2 {
            return Err(EvalError::Degenerate(format!(
                "a + b = {s} makes the beta-zeta block indeterminate; use the eps probe \
                 or the critical-line evaluator"
            )));
        }
    }
    let (a, b, g) = (p.a, p.b, p.gamma);
    let beta_block = (beta_fn(1.0 - a, g)? + beta_fn(1.0 - b, g)?) * riemann_zeta(g)?;
    // the two halves must each land tighter than the combined request
    let s_ab = ratio_series(a, b, tol / 8.0)?;
    let s_ba = ratio_series(b, a, tol / 8.0)?;
    Ok(SeriesValue {
        value: 1.0 / g + beta_block - s_ab.value - s_ba.value,
        abs_error_estimate: s_ab.abs_error_estimate + s_ba.abs_error_estimate,
        terms_used: s_ab.terms_used + s_ba.terms_used,
        converged: s_ab.converged && s_ba.converged,
    }
    .with_contract(tol))
}

/// I on the critical line: I(1/2 + it, 1/2 - it); real-valued.
pub fn i_critical_line(t: f64, tol: f64) -> Result<SeriesValue> {
    let h = Complex64::new(0.5, t);
    let mut acc = SeriesAccumulator::new_absolute(tol / 4.0);
    let mut n = 0usize;
    loop {
        let term = riemann_zeta_m1(h + n as f64)? / (h + n as f64);
        if !acc.push(term) {
            break;
        }
        n += 1;
    }
    let series = acc.finish();
    let value = crate::constants::EULER_GAMMA - crate::constants::LOG_TWO_PI
        + (digamma(h)? - 2.0 * series.value).re;
    Ok(SeriesValue {
        value: Complex64::new(value, 0.0),
        abs_error_estimate: 2.0 * series.abs_error_estimate,
        terms_used: series.terms_used,
        converged: series.converged,
    })
}

/// The beta-zeta block of the J expansions:
/// M0 = B(1-a, 1-b) {zeta(gamma) - 1 - 2^-gamma}.
pub fn j_m0(p: ParameterPair) -> Result<Complex64> {
    let (a, b, g) = (p.a, p.b, p.gamma);
    let beta = beta_or_zero(1.0 - a, 1.0 - b)?;
    if beta == Complex64::new(0.0, 0.0) {
        return Ok(beta);
    }
    Ok(beta * (riemann_zeta_m1(g)? - pow_real_base(2.0, -g)))
}

fn reject_any_integer(p: &ParameterPair) -> Result<()> {
    p.reject_pole_at_one()?;
    if p.a_integer().is_some() || p.b_integer().is_some() {
        return Err(EvalError::Degenerate(
            "integer a or b requires a limiting procedure: use the eps probe".into(),
        ));
    }
    if near_integer(p.a + p.b, INT_EPS) == Some(2) {
        return Err(EvalError::Degenerate(
            "a + b = 2 puts zeta(gamma) on its pole; use the eps probe".into(),
        ));
    }
    Ok(())
}

/// Zeta-series expansion of J(a, b) for non-integer parameters.
pub fn j_via_zeta(p: ParameterPair, tol: f64) -> Result<SeriesValue> {
    reject_any_integer(&p)?;
    let (a, b, g) = (p.a, p.b, p.gamma);
    let head = beta_or_zero(1.0 - a, 1.0 - b)? * riemann_zeta_m1(g)?;
    let sum = |x: Complex64, y: Complex64| -> Result<SeriesValue> {
        let mut acc = SeriesAccumulator::new_absolute(tol / 8.0);
        let mut coeff = Complex64::new(1.0, 0.0); // (x)_n / n!
        let mut n = 0usize;
        loop {
            let term = coeff * riemann_zeta_m1(x + n as f64)? / (n as f64 + 1.0 - y);
            if !acc.push(term) {
                break;
            }
            coeff *= (x + n as f64) / (n as f64 + 1.0);
            n += 1;
        }
        Ok(acc.finish())
    };
    let s_ab = sum(a, b)?;
    let s_ba = sum(b, a)?;
    Ok(SeriesValue {
        value: head - s_ab.value - s_ba.value,
        abs_error_estimate: s_ab.abs_error_estimate + s_ba.abs_error_estimate,
        terms_used: s_ab.terms_used + s_ba.terms_used,
        converged: s_ab.converged && s_ba.converged,
    }
    .with_contract(tol))
}

/// Alternating-series expansion of J(a, b): M0 minus the alternating
/// versions of the sums in the I expansion.
pub fn j_via_alt(p: ParameterPair, tol: f64) -> Result<SeriesValue> {
    reject_any_integer(&p)?;
    let (a, b) = (p.a, p.b);
    let m0 = j_m0(p)?;
    let alt_sum = |x: Complex64, y: Complex64| -> Result<SeriesValue> {
        let mut acc = SeriesAccumulator::new_absolute(tol / 8.0);
        let mut n = 0usize;
        loop {
            let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
            let term = sign * ratio_series_term(x, y, n)?;
            if !acc.push(term) {
                break;
            }
            n += 1;
            if n >= MAX_TERMS {
                break;
            }
        }
        Ok(acc.finish())
    };
    let s_ab = alt_sum(a, b)?;
    let s_ba = alt_sum(b, a)?;
    Ok(SeriesValue {
        value: m0 - s_ab.value - s_ba.value,
        abs_error_estimate: s_ab.abs_error_estimate + s_ba.abs_error_estimate,
        terms_used: s_ab.terms_used + s_ba.terms_used,
        converged: s_ab.converged && s_ba.converged,
    }
    .with_contract(tol))
}

/// Hypergeometric representation of J(a, b): M0 plus the k-sum over
/// xi^a/(b-1) 2F1(a, 1-b; 2-b; xi) + (a <-> b), xi = 1/(k+1), k >= 2.
pub fn j_via_2f1(p: ParameterPair, tol: f64) -> Result<SeriesValue> {
    p.reject_pole_at_one()?;
    if p.a.re <= 1.0 || p.b.re <= 1.0 {
        return Err(EvalError::Domain(
            "hypergeometric representation needs Re a > 1 and Re b > 1".into(),
        ));
    }
    if p.a_integer().is_some() || p.b_integer().is_some() {
        return Err(EvalError::Degenerate(
            "integer a or b degenerates the 2 - a / 2 - b lower parameters".into(),
        ));
    }
    let (a, b) = (p.a, p.b);
    let m0 = j_m0(p)?;
    let min_decay = a.re.min(b.re);
    let f = move |x: f64| -> Result<Complex64> {
        if min_decay * (x + 1.0).ln() > 700.0 {
            return Ok(Complex64::new(0.0, 0.0));
        }
        let xi = j_series_xi_real(x);
        let zi = Complex64::new(xi, 0.0);
        let fa = gauss_2f1(a, 1.0 - b, 2.0 - b, zi, 1e-15)?.value;
        let fb = gauss_2f1(b, 1.0 - a, 2.0 - a, zi, 1e-15)?.value;
        Ok(pow_real_base(xi, a) / (b - 1.0) * fa + pow_real_base(xi, b) / (a - 1.0) * fb)
    };
    let sum = accelerated_sum(f, 2, p.a.re.min(p.b.re), tol)?;
    Ok(SeriesValue {
        value: m0 + sum.value,
        ..sum
    }
    .with_contract(tol))
}

/// The summation variable of the J series maps to the 2F1 argument through
/// xi = 1/(k+1); the tail completion evaluates it at real k as well.
fn j_series_xi_real(k: f64) -> f64 {
    1.0 / (k + 1.0)
}

#[cfg(test)]
pub(crate) fn j_series_xi(k: u64) -> f64 {
    j_series_xi_real(k as f64)
}

/// J on the critical line: J(1/2 + it, 1/2 - it); real-valued.
pub fn j_critical_line(t: f64, tol: f64) -> Result<SeriesValue> {
    let h = Complex64::new(0.5, t);
    let mut acc = SeriesAccumulator::new_absolute(tol / 4.0);
    let mut n = 0usize;
    loop {
        let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
        let term = sign * riemann_zeta_m1(h + n as f64)? / (h + n as f64);
        if !acc.push(term) {
            break;
        }
        n += 1;
    }
    let series = acc.finish();
    let value =
        -2.5 * crate::constants::PI / (crate::constants::PI * t).cosh() - 2.0 * series.value.re;
    Ok(SeriesValue {
        value: Complex64::new(value, 0.0),
        abs_error_estimate: 2.0 * series.abs_error_estimate,
        terms_used: series.terms_used,
        converged: series.converged,
    })
}

// Probe offset for the integer-parameter fallback. The representations'
// internal blocks scale like 1/eps near the degeneracy, so f64 noise grows
// as eps shrinks; 1e-4 balances that against the O(eps^2) averaging bias
// and delivers ~1e-7 accuracy.
const EPS_PROBE: f64 = 1e-4;

fn probe_offsets(p: &ParameterPair) -> Vec<(Complex64, Complex64)> {
    let (a, b) = (p.a, p.b);
    let shift_a = p.a_integer().is_some() || p.a_integer().is_none() && p.b_integer().is_none();
    let shift_b = p.b_integer().is_some();
    match (p.a_integer().is_some(), shift_b) {
        (true, true) => vec![
            (a + EPS_PROBE, b + EPS_PROBE),
            (a + EPS_PROBE, b - EPS_PROBE),
            (a - EPS_PROBE, b + EPS_PROBE),
            (a - EPS_PROBE, b - EPS_PROBE),
        ],
        (true, false) => vec![(a + EPS_PROBE, b), (a - EPS_PROBE, b)],
        (false, true) => vec![(a, b + EPS_PROBE), (a, b - EPS_PROBE)],
        (false, false) => {
            let _ = shift_a;
            // only the sum is degenerate: move a alone
            vec![(a + EPS_PROBE, b), (a - EPS_PROBE, b)]
        }
    }
}

fn eps_probe<F>(p: ParameterPair, eval: F) -> Result<SeriesValue>
where
    F: Fn(ParameterPair) -> Result<SeriesValue>,
{
    p.reject_pole_at_one()?;
    let offsets = probe_offsets(&p);
    let mut acc = Complex64::new(0.0, 0.0);
    let mut err = 0.0f64;
    let mut terms = 0usize;
    let mut spread = 0.0f64;
    let mut first: Option<Complex64> = None;
    for &(a, b) in &offsets {
        let v = eval(ParameterPair::new(a, b))?;
        acc += v.value;
        err += v.abs_error_estimate;
        terms += v.terms_used;
        match first {
            None => first = Some(v.value),
            Some(f0) => spread = spread.max((v.value - f0).norm()),
        }
    }
    let value = acc / offsets.len() as f64;
    Ok(SeriesValue {
        value,
        abs_error_estimate: err / offsets.len() as f64 + spread * EPS_PROBE,
        terms_used: terms,
        converged: true,
    })
}

/// I at degenerate parameters by symmetric eps-offset averaging of the
/// zeta-series representation; the averaging cancels the O(eps) drift.
pub fn i_eps_probe(p: ParameterPair, tol: f64) -> Result<SeriesValue> {
    eps_probe(p, |q| i_via_zeta(q, tol))
}

/// J at degenerate parameters by symmetric eps-offset averaging.
pub fn j_eps_probe(p: ParameterPair, tol: f64) -> Result<SeriesValue> {
    eps_probe(p, |q| j_via_zeta(q, tol))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::{oracle_i, oracle_j};
    use crate::series::DEFAULT_TOL;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn pp(a: Complex64, b: Complex64) -> ParameterPair {
        ParameterPair::new(a, b)
    }

    #[test]
    fn classification() {
        assert_eq!(
            pp(c(1.0, 0.0), c(2.5, 0.0)).degeneracy,
            Degeneracy::PoleAtOne
        );
        assert_eq!(
            pp(c(2.0, 0.0), c(2.5, 0.0)).degeneracy,
            Degeneracy::AInteger(2)
        );
        assert_eq!(
            pp(c(2.5, 0.0), c(-1.0, 0.0)).degeneracy,
            Degeneracy::BInteger(-1)
        );
        assert_eq!(
            pp(c(2.5, 0.0), c(3.5, 0.0)).degeneracy,
            Degeneracy::SumInteger(6)
        );
        assert_eq!(pp(c(2.3, 0.0), c(3.7, 0.1)).degeneracy, Degeneracy::Generic);
        let p = pp(c(2.3, 0.0), c(3.7, 0.0));
        assert!((p.gamma - c(5.0, 0.0)).norm() == 0.0);
    }

    #[test]
    fn i_representations_cross_check() {
        let p = pp(c(2.3, 0.0), c(3.7, 0.1));
        let hyp = i_via_2f1(p, DEFAULT_TOL).unwrap();
        let zet = i_via_zeta(p, DEFAULT_TOL).unwrap();
        let rel = (hyp.value - zet.value).norm() / zet.value.norm();
        assert!(
            rel <= 1e-9,
            "I reps disagree by {rel}: {} vs {}",
            hyp.value,
            zet.value
        );
    }

    #[test]
    fn i_integer_case_matches_quadrature() {
        let p = pp(c(2.0, 0.0), c(2.0, 0.0));
        let hyp = i_via_2f1(p, DEFAULT_TOL).unwrap();
        let orc = oracle_i(c(2.0, 0.0), c(2.0, 0.0)).unwrap();
        assert!(
            (hyp.value - orc.value).norm() <= 1e-9 * orc.value.norm(),
            "{} vs {}",
            hyp.value,
            orc.value
        );
        // the zeta expansion refuses the integers and says where to go
        assert!(matches!(
            i_via_zeta(p, DEFAULT_TOL),
            Err(EvalError::Degenerate(_))
        ));
    }

    #[test]
    fn i_zeta_matches_quadrature() {
        let p = pp(c(2.3, 0.0), c(3.7, 0.1));
        let zet = i_via_zeta(p, DEFAULT_TOL).unwrap();
        let orc = oracle_i(p.a, p.b).unwrap();
        assert!(
            (zet.value - orc.value).norm() <= 1e-8 * orc.value.norm(),
            "{} vs {}",
            zet.value,
            orc.value
        );
    }

    #[test]
    fn i_symmetry_exact() {
        let p = pp(c(2.1, 0.0), c(4.2, 0.0));
        let ab = i_via_2f1(p, DEFAULT_TOL).unwrap().value;
        let ba = i_via_2f1(p.swapped(), DEFAULT_TOL).unwrap().value;
        assert!((ab - ba).norm() <= 1e-12 * ab.norm());
        let ab = i_via_zeta(p, DEFAULT_TOL).unwrap().value;
        let ba = i_via_zeta(p.swapped(), DEFAULT_TOL).unwrap().value;
        assert!((ab - ba).norm() <= 1e-12 * ab.norm());
    }

    #[test]
    fn i_conjugate_symmetry() {
        let (a, b) = (c(2.0, 1.0), c(3.0, -0.5));
        let v = i_via_zeta(pp(a, b), DEFAULT_TOL).unwrap().value;
        let vc = i_via_zeta(pp(a.conj(), b.conj()), DEFAULT_TOL)
            .unwrap()
            .value;
        assert!((vc - v.conj()).norm() <= 1e-12 * v.norm());
    }

    #[test]
    fn critical_line_routing_and_values() {
        // the zeta expansion refuses the critical-line pair (a + b = 1)
        assert!(i_via_zeta(pp(c(0.5, 1.0), c(0.5, -1.0)), DEFAULT_TOL).is_err());

        for &t in &[0.5, 1.0] {
            let cl = i_critical_line(t, DEFAULT_TOL).unwrap();
            assert_eq!(cl.value.im, 0.0);
            let orc = oracle_i(c(0.5, t), c(0.5, -t)).unwrap();
            assert!(orc.value.im.abs() < 1e-10);
            assert!(
                (cl.value.re - orc.value.re).abs() <= 1e-7 * orc.value.re.abs().max(1.0),
                "t={t}: {} vs {}",
                cl.value.re,
                orc.value.re
            );
        }
        // t = 0: direct series value cross-checked against quadrature
        let cl = i_critical_line(0.0, DEFAULT_TOL).unwrap();
        let orc = oracle_i(c(0.5, 0.0), c(0.5, 0.0)).unwrap();
        assert!((cl.value.re - orc.value.re).abs() <= 1e-7 * orc.value.re.abs().max(1.0));
    }

    #[test]
    fn m0_block() {
        // numerator gamma poles are a genuine degeneracy
        assert!(j_m0(pp(c(2.0, 0.0), c(2.0, 0.0))).is_err());
        // reciprocal pole: B(-1.5, -2.5) = 0 through 1/Gamma(-4)
        let v = j_m0(pp(c(2.5, 0.0), c(3.5, 0.0))).unwrap();
        assert_eq!(v, c(0.0, 0.0));
        // M0 + 2^-gamma B(1-a,1-b) = B(1-a,1-b) {zeta(gamma) - 1}
        let p = pp(c(2.3, 0.0), c(3.7, 0.1));
        let beta = beta_or_zero(1.0 - p.a, 1.0 - p.b).unwrap();
        let lhs = j_m0(p).unwrap() + pow_real_base(2.0, -p.gamma) * beta;
        let rhs = beta * riemann_zeta_m1(p.gamma).unwrap();
        assert!((lhs - rhs).norm() <= 1e-13 * rhs.norm().max(1.0));
    }

    #[test]
    fn j_representations_cross_check() {
        let p = pp(c(2.5, 0.0), c(2.5, 0.5));
        let zet = j_via_zeta(p, DEFAULT_TOL).unwrap();
        let alt = j_via_alt(p, DEFAULT_TOL).unwrap();
        let hyp = j_via_2f1(p, DEFAULT_TOL).unwrap();
        for (name, v) in [("alt", alt.value), ("2f1", hyp.value)] {
            let rel = (v - zet.value).norm() / zet.value.norm();
            assert!(rel <= 1e-9, "J {name} disagrees by {rel}");
        }
        // integer a + b: the head beta block vanishes entirely, leaving the
        // sums to carry the whole value
        let p = pp(c(2.5, 0.0), c(3.5, 0.0));
        let zet = j_via_zeta(p, DEFAULT_TOL).unwrap();
        let hyp = j_via_2f1(p, DEFAULT_TOL).unwrap();
        assert!(
            (hyp.value - zet.value).norm() <= 1e-9 * zet.value.norm(),
            "{} vs {}",
            hyp.value,
            zet.value
        );
        let orc = oracle_j(p.a, p.b).unwrap();
        assert!((zet.value - orc.value).norm() <= 1e-8 * orc.value.norm());
    }

    #[test]
    fn j_matches_quadrature() {
        let p = pp(c(2.3, 0.0), c(3.7, 0.1));
        let zet = j_via_zeta(p, DEFAULT_TOL).unwrap();
        let orc = oracle_j(p.a, p.b).unwrap();
        assert!(
            (zet.value - orc.value).norm() <= 1e-8 * orc.value.norm(),
            "{} vs {}",
            zet.value,
            orc.value
        );
        let hyp = j_via_2f1(p, DEFAULT_TOL).unwrap();
        assert!((hyp.value - orc.value).norm() <= 1e-8 * orc.value.norm());
    }

    #[test]
    fn j_symmetry_and_conjugation() {
        let p = pp(c(2.1, 0.0), c(4.2, 0.0));
        let ab = j_via_zeta(p, DEFAULT_TOL).unwrap().value;
        let ba = j_via_zeta(p.swapped(), DEFAULT_TOL).unwrap().value;
        assert!((ab - ba).norm() <= 1e-12 * ab.norm());
        let (a, b) = (c(2.0, 1.0), c(3.0, -1.0));
        let v = j_via_alt(pp(a, b), DEFAULT_TOL).unwrap().value;
        let vc = j_via_alt(pp(a.conj(), b.conj()), DEFAULT_TOL)
            .unwrap()
            .value;
        assert!((vc - v.conj()).norm() <= 1e-12 * v.norm());
    }

    #[test]
    fn alternating_term_structure() {
        // the alternating expansion's n-th term over the plain one is (-1)^n
        let (a, b) = (c(2.3, 0.0), c(3.7, 0.0));
        for n in 0..=5 {
            let base = ratio_series_term(a, b, n).unwrap();
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            let alt = sign * base;
            assert!((alt / base - sign).norm() < 1e-15);
        }
    }

    #[test]
    fn xi_symbol() {
        assert_eq!(j_series_xi(2), 1.0 / 3.0);
    }

    #[test]
    fn j_critical_line_values() {
        let t = 1.0;
        let cl = j_critical_line(t, DEFAULT_TOL).unwrap();
        assert_eq!(cl.value.im, 0.0);
        let orc = oracle_j(c(0.5, t), c(0.5, -t)).unwrap();
        assert!(orc.value.im.abs() < 1e-10);
        assert!(
            (cl.value.re - orc.value.re).abs() <= 1e-7 * orc.value.re.abs().max(1.0),
            "{} vs {}",
            cl.value.re,
            orc.value.re
        );
        // cosh growth kills the closed-form head by t = 10
        let head = -2.5 * crate::constants::PI / (crate::constants::PI * 10.0).cosh();
        assert!(head.abs() < 1e-12);
    }

    #[test]
    fn positivity_for_real_parameters() {
        for &(a, b) in &[(1.3, 1.3), (2.3, 3.7), (4.5, 5.1)] {
            let p = pp(c(a, 0.0), c(b, 0.0));
            let i = i_via_zeta(p, DEFAULT_TOL).unwrap().value;
            let j = j_via_zeta(p, DEFAULT_TOL).unwrap().value;
            assert!(i.re > 0.0 && i.im.abs() < 1e-12, "I({a},{b}) = {i}");
            assert!(j.re > 0.0 && j.im.abs() < 1e-12, "J({a},{b}) = {j}");
        }
    }

    #[test]
    fn eps_probe_agrees_with_integer_representation() {
        let p = pp(c(2.0, 0.0), c(3.3, 0.0));
        let probe = i_eps_probe(p, DEFAULT_TOL).unwrap();
        let hyp = i_via_2f1(p, DEFAULT_TOL).unwrap();
        assert!(
            (probe.value - hyp.value).norm() <= 1e-6 * hyp.value.norm(),
            "{} vs {}",
            probe.value,
            hyp.value
        );
        // J at an integer point: probe against quadrature
        let orc = oracle_j(c(2.0, 0.0), c(3.3, 0.0)).unwrap();
        let probe = j_eps_probe(p, DEFAULT_TOL).unwrap();
        assert!(
            (probe.value - orc.value).norm() <= 1e-6 * orc.value.norm(),
            "{} vs {}",
            probe.value,
            orc.value
        );
    }
}
