//! Squeezed states built on the effective vacuum `|3⟩`.
//!
//! Two families exist:
//!
//! * the nonlinear squeezed states `|β, f̃⟩`, produced by the non-unitary
//!   operator `exp(β/2 𝒩₊² − β*/2 N₋²)`,
//!   `c_{2n+3} = N_β βⁿ/(2ⁿ n!) √((2n)! / ((2n+2)! (2n+3)!))`;
//! * the squeezed states `|ξ⟩ = exp(ξ/2 K₊² − ξ*/2 K₋²)|3⟩`,
//!   `c_{2n+3} = N_ξ ξⁿ √((2n)!) / (2ⁿ n!)`, with `|ξ| < 1`.
//!
//! Both are assembled directly from their expansions. Factorial ratios are
//! kept in log space and exponentiated only once the normalization has been
//! folded in, since `(2n+3)!` overflows long before `n = 70`.
//!
//! The dual family obtained from `exp(β/2 N₊² − β*/2 𝒩₋²)` has a divergent
//! normalization series; [`dual_series_diagnosis`] reproduces that verdict.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fock::{FockVector, TAIL_WINDOW};
use crate::specfun::log_factorial;

pub const DEFAULT_N_MAX: usize = 70;

/// Zero levels appended above the top populated level, so that words of up
/// to four raising operators act without truncation loss.
pub const HEADROOM: usize = 4;

/// `|ξ|` above which [`build_squeezed`] raises the truncation on its own.
pub const AUTO_RAISE_THRESHOLD: f64 = 0.7;

/// Tail-mass target used when raising the truncation.
pub const AUTO_RAISE_TAIL_TARGET: f64 = 1e-16;

const AUTO_RAISE_LIMIT: usize = 20_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SqueezeKind {
    /// `|β, f̃⟩`, built from the non-unitary operator (case i).
    Nonlinear,
    /// `|ξ⟩`, built from the unitary operator (case iii).
    Unitary,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SqueezeParams {
    pub kind: SqueezeKind,
    /// `|β|` or `|ξ|`.
    pub r: f64,
    /// Phase of `β` or `ξ`, in radians.
    pub theta: f64,
    /// Largest half-index kept; the top populated level is `2·n_max + 3`.
    pub n_max: usize,
}

impl SqueezeParams {
    pub fn nonlinear(r: f64, theta: f64) -> Self {
        SqueezeParams { kind: SqueezeKind::Nonlinear, r, theta, n_max: DEFAULT_N_MAX }
    }

    pub fn squeezed(r: f64, theta: f64) -> Self {
        SqueezeParams { kind: SqueezeKind::Unitary, r, theta, n_max: DEFAULT_N_MAX }
    }

    pub fn with_n_max(mut self, n_max: usize) -> Self {
        self.n_max = n_max;
        self
    }

    /// `β` or `ξ` as a complex number.
    pub fn parameter(&self) -> Complex64 {
        Complex64::from_polar(self.r, self.theta)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.r.is_finite() && self.r >= 0.0) {
            return Err(Error::InvalidParams(format!("modulus must be finite and non-negative, got {}", self.r)));
        }
        if !self.theta.is_finite() {
            return Err(Error::InvalidParams(format!("phase must be finite, got {}", self.theta)));
        }
        if self.n_max < 1 {
            return Err(Error::InvalidParams("n_max must be at least 1".into()));
        }
        if self.kind == SqueezeKind::Unitary && self.r >= 1.0 {
            return Err(Error::RadiusViolation { r: self.r });
        }
        Ok(())
    }
}

fn ln_power(r: f64, n: usize) -> f64 {
    if n == 0 {
        0.0
    } else {
        n as f64 * r.ln()
    }
}

/// `ln |c_{2n+3}| − ln N` for the given family.
pub fn ln_unnormalized_amplitude(kind: SqueezeKind, r: f64, n: usize) -> f64 {
    let common = ln_power(r, n) - n as f64 * std::f64::consts::LN_2 - log_factorial(n) + 0.5 * log_factorial(2 * n);
    match kind {
        SqueezeKind::Nonlinear => common - 0.5 * (log_factorial(2 * n + 2) + log_factorial(2 * n + 3)),
        SqueezeKind::Unitary => common,
    }
}

/// `ln Σ_n |c_n/N|²` for `n = 0..=n_max`, with the largest term factored out
/// and Kahan compensation on the rest.
fn ln_norm_series(kind: SqueezeKind, r: f64, n_max: usize) -> f64 {
    let ln_terms: Vec<f64> = (0..=n_max).map(|n| 2.0 * ln_unnormalized_amplitude(kind, r, n)).collect();
    let largest = ln_terms.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let mut sum = 0.0_f64;
    let mut carry = 0.0_f64;
    for &t in &ln_terms {
        let y = (t - largest).exp() - carry;
        let s = sum + y;
        carry = (s - sum) - y;
        sum = s;
    }
    largest + sum.ln()
}

/// `N_β` truncated at half-index `n_max`.
pub fn nonlinear_norm(r: f64, n_max: usize) -> f64 {
    (-0.5 * ln_norm_series(SqueezeKind::Nonlinear, r, n_max)).exp()
}

/// `N_ξ` truncated at half-index `n_max`; tends to `(1 − |ξ|²)^{1/4}`.
pub fn squeezed_norm(r: f64, n_max: usize) -> f64 {
    (-0.5 * ln_norm_series(SqueezeKind::Unitary, r, n_max)).exp()
}

fn assemble(kind: SqueezeKind, r: f64, theta: f64, n_max: usize) -> FockVector {
    let ln_norm = ln_norm_series(kind, r, n_max);
    let top = 2 * n_max;
    let mut amps = vec![Complex64::new(0.0, 0.0); top + 1 + HEADROOM];
    for n in 0..=n_max {
        let magnitude = (ln_unnormalized_amplitude(kind, r, n) - 0.5 * ln_norm).exp();
        amps[2 * n] = Complex64::from_polar(magnitude, n as f64 * theta);
    }
    let tail: f64 = amps[top + 1 - TAIL_WINDOW.min(top + 1)..=top].iter().map(|a| a.norm_sqr()).sum();
    FockVector::new(amps).with_tail_bound(tail)
}

/// The nonlinear squeezed state `|β, f̃⟩` with `β = r·e^{iθ}`.
pub fn build_nonlinear_squeezed(params: &SqueezeParams) -> Result<FockVector> {
    params.validate()?;
    if params.kind != SqueezeKind::Nonlinear {
        return Err(Error::InvalidParams("expected nonlinear (case i) parameters".into()));
    }
    Ok(assemble(SqueezeKind::Nonlinear, params.r, params.theta, params.n_max))
}

/// The squeezed state `|ξ⟩` with `ξ = r·e^{iθ}`.
///
/// For `|ξ| > 0.7` the truncation grows beyond `params.n_max` until the
/// trailing mass drops below [`AUTO_RAISE_TAIL_TARGET`].
pub fn build_squeezed(params: &SqueezeParams) -> Result<FockVector> {
    params.validate()?;
    if params.kind != SqueezeKind::Unitary {
        return Err(Error::InvalidParams("expected unitary (case iii) parameters".into()));
    }
    let mut n_max = params.n_max;
    loop {
        let state = assemble(SqueezeKind::Unitary, params.r, params.theta, n_max);
        if params.r <= AUTO_RAISE_THRESHOLD || state.tail_bound() < AUTO_RAISE_TAIL_TARGET || n_max >= AUTO_RAISE_LIMIT
        {
            return Ok(state);
        }
        n_max += n_max / 4 + 10;
    }
}

pub fn build(params: &SqueezeParams) -> Result<FockVector> {
    match params.kind {
        SqueezeKind::Nonlinear => build_nonlinear_squeezed(params),
        SqueezeKind::Unitary => build_squeezed(params),
    }
}

/// Half-index truncation actually used by a vector from [`build`].
pub fn effective_n_max(state: &FockVector) -> usize {
    (state.dim() - 1 - HEADROOM) / 2
}

/// `x_n = 2n / ((2n−1)(2n+1)(2n+2)²(2n+3))`; the dual normalization series
/// has successive-term ratio `|β|² / x_n`.
pub fn dual_ratio_denominator(n: usize) -> f64 {
    let m = 2.0 * n as f64;
    m / ((m - 1.0) * (m + 1.0) * (m + 2.0) * (m + 2.0) * (m + 3.0))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Divergent,
    Convergent,
}

#[derive(Clone, Debug, Serialize)]
pub struct DualSeriesReport {
    pub x_seq: Vec<f64>,
    /// Estimate of `L² = lim x_n`.
    pub limit_estimate: f64,
    pub verdict: Verdict,
}

/// Ratio-test diagnosis of the dual-state normalization series.
///
/// The series `Σ 12|β|^{2n} / (x_n x_{n−1} ⋯ x_1)` converges only for
/// `|β|² < lim x_n`. A vanishing limit leaves no admissible `β ≠ 0`.
pub fn dual_series_diagnosis(n_terms: usize) -> Result<DualSeriesReport> {
    if n_terms < 2 {
        return Err(Error::InvalidParams("need at least two terms".into()));
    }
    let x_seq: Vec<f64> = (1..=n_terms).map(dual_ratio_denominator).collect();
    let monotone = x_seq.windows(2).all(|w| w[1] < w[0]);
    let limit_estimate = *x_seq.last().unwrap();
    let verdict = if monotone && limit_estimate < 1e-6 { Verdict::Divergent } else { Verdict::Convergent };
    Ok(DualSeriesReport { x_seq, limit_estimate, verdict })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nonzero_levels(v: &FockVector) -> Vec<usize> {
        v.amps().iter().enumerate().filter(|(_, a)| a.norm() > 0.0).map(|(k, _)| k + 3).collect()
    }

    #[test]
    fn zero_parameters_give_effective_vacuum() {
        for params in [SqueezeParams::nonlinear(0.0, 0.3), SqueezeParams::squeezed(0.0, 1.1)] {
            let v = build(&params).unwrap();
            assert_eq!(nonzero_levels(&v), vec![3]);
            assert_eq!(v.amp(3), Complex64::new(1.0, 0.0));
            assert!(v.tail_bound() < 1e-300);
        }
        assert!((nonlinear_norm(0.0, 70) - 12f64.sqrt()).abs() < 1e-12);
        assert!((squeezed_norm(0.0, 70) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn even_support_and_normalization() {
        for params in [
            SqueezeParams::nonlinear(20.0, 0.4),
            SqueezeParams::nonlinear(31.0, -2.0),
            SqueezeParams::squeezed(0.4, 0.0),
            SqueezeParams::squeezed(0.85, 2.5),
        ] {
            let v = build(&params).unwrap();
            assert!((v.norm() - 1.0).abs() < 1e-12);
            for (k, a) in v.amps().iter().enumerate() {
                if k % 2 == 1 {
                    assert_eq!(*a, Complex64::new(0.0, 0.0));
                }
            }
            // head-room above the top populated level
            assert!(v.amps()[v.dim() - HEADROOM..].iter().all(|a| a.norm() == 0.0));
        }
    }

    #[test]
    fn squeezed_norm_matches_closed_form() {
        // direct summation oracle of Σ C(2n,n) (|ξ|²/4)ⁿ
        let oracle = |xi: f64, n_max: usize| {
            let mut term = 1.0_f64;
            let mut sum = 1.0_f64;
            for n in 1..=n_max {
                let nf = n as f64;
                term *= xi * xi * (2.0 * nf) * (2.0 * nf - 1.0) / (4.0 * nf * nf);
                sum += term;
            }
            sum.powf(-0.5)
        };
        let n04 = squeezed_norm(0.4, 70);
        assert!((n04 - 0.84f64.powf(0.25)).abs() < 1e-10);
        assert!((n04 - 0.957348).abs() < 1e-6);
        assert!((n04 - oracle(0.4, 70)).abs() < 1e-14);
        let n09 = squeezed_norm(0.9, 300);
        assert!((n09 - 0.19f64.powf(0.25)).abs() < 1e-8);
        assert!((n09 - oracle(0.9, 300)).abs() < 1e-12);
    }

    #[test]
    fn radius_violation() {
        let err = build(&SqueezeParams::squeezed(1.0, 0.0)).unwrap_err();
        assert!(matches!(err, Error::RadiusViolation { .. }));
        assert!(build(&SqueezeParams::nonlinear(5.0, 0.0).with_n_max(0)).is_err());
        assert!(build_squeezed(&SqueezeParams::nonlinear(0.5, 0.0)).is_err());
    }

    #[test]
    fn auto_raise_for_large_xi() {
        let v = build(&SqueezeParams::squeezed(0.9, 0.0)).unwrap();
        assert!(effective_n_max(&v) > DEFAULT_N_MAX);
        assert!(v.tail_bound() < AUTO_RAISE_TAIL_TARGET);
        let small = build(&SqueezeParams::squeezed(0.5, 0.0)).unwrap();
        assert_eq!(effective_n_max(&small), DEFAULT_N_MAX);
    }

    #[test]
    fn ratio_form_matches_log_space_construction() {
        let r = 17.0;
        let v = build(&SqueezeParams::nonlinear(r, 0.0)).unwrap();
        let mut prob = v.amp(3).norm_sqr();
        for n in 0..40usize {
            let nf = n as f64;
            let ratio = (r * r / (4.0 * (nf + 1.0) * (nf + 1.0)))
                * ((2.0 * nf + 2.0) * (2.0 * nf + 1.0) / ((2.0 * nf + 4.0) * (2.0 * nf + 3.0) * (2.0 * nf + 5.0)))
                * (1.0 / (2.0 * nf + 4.0));
            prob *= ratio;
            let got = v.amp(2 * n + 5).norm_sqr();
            assert!((got - prob).abs() <= 1e-10 * prob, "n={n}: {got} vs {prob}");
        }
    }

    #[test]
    fn unitary_family_is_shifted_squeezed_vacuum() {
        // textbook law: c_{2n} = (tanh ρ)ⁿ e^{inθ} √((2n)!)/(2ⁿ n!) / √(cosh ρ)
        let (xi, theta) = (0.6_f64, 0.8);
        let rho = xi.atanh();
        let v = build(&SqueezeParams::squeezed(xi, theta)).unwrap();
        for n in 0..60usize {
            let ln_mag = n as f64 * rho.tanh().ln() + 0.5 * log_factorial(2 * n)
                - n as f64 * std::f64::consts::LN_2
                - log_factorial(n)
                - 0.5 * rho.cosh().ln();
            let expected = Complex64::from_polar(ln_mag.exp(), n as f64 * theta);
            assert!((v.amp(2 * n + 3) - expected).norm() < 1e-10);
        }
    }

    #[test]
    fn phase_enters_through_powers_only() {
        let a = build(&SqueezeParams::nonlinear(6.0, 0.0)).unwrap();
        let b = build(&SqueezeParams::nonlinear(6.0, 1.3)).unwrap();
        for n in 0..20usize {
            let expected = a.amp(2 * n + 3) * Complex64::from_polar(1.0, 1.3 * n as f64);
            assert!((b.amp(2 * n + 3) - expected).norm() < 1e-15);
        }
    }

    #[test]
    fn tail_mass_examples() {
        use crate::fock::tail_mass;
        assert!(tail_mass(&SqueezeParams::nonlinear(0.0, 0.0)).unwrap() < 1e-300);
        assert!(tail_mass(&SqueezeParams::squeezed(0.4, 0.0)).unwrap() < 1e-12);
        assert!(tail_mass(&SqueezeParams::nonlinear(20.0, 0.0)).unwrap() < 1e-8);
    }

    #[test]
    fn dual_series_values() {
        assert!((dual_ratio_denominator(1) - 1.0 / 120.0).abs() < 1e-18);
        let x10 = 20.0 / (19.0 * 21.0 * 484.0 * 23.0);
        assert!((dual_ratio_denominator(10) - x10).abs() < 1e-20);
        assert!((x10 - 4.503e-6).abs() < 1e-9);
        let report = dual_series_diagnosis(50).unwrap();
        assert_eq!(report.x_seq.len(), 50);
        assert_eq!(report.verdict, Verdict::Divergent);
        assert!(report.limit_estimate < 1e-6);
        assert!(dual_series_diagnosis(1).is_err());
        assert_eq!(dual_series_diagnosis(3).unwrap().verdict, Verdict::Convergent);
    }

    #[test]
    fn dual_ratio_is_successive_term_ratio() {
        // t_n = |β|^{2n} (2n)! (2n+2)! (2n+3)! / (4ⁿ (n!)²)
        let ln_term = |n: usize, b: f64| {
            2.0 * n as f64 * b.ln() + log_factorial(2 * n) + log_factorial(2 * n + 2) + log_factorial(2 * n + 3)
                - n as f64 * 4f64.ln()
                - 2.0 * log_factorial(n)
        };
        let b = 0.3;
        for n in 1..30 {
            let ratio = (ln_term(n, b) - ln_term(n - 1, b)).exp();
            let expected = b * b / dual_ratio_denominator(n);
            assert!((ratio - expected).abs() < 1e-9 * expected);
        }
    }
}
