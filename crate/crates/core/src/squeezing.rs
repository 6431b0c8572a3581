//! Quadrature and amplitude-squared squeezing.
//!
//! With `x̂ = (K₊ + K₋)/√2` and `p̂ = i(K₊ − K₋)/√2`, the identities
//! `I₁ = 2(Δx)² − 1` and `I₂ = 2(Δp)² − 1` are negative exactly when the
//! state is squeezed in that quadrature. `I₃` and `I₄` play the same role
//! for `X̂ = (K₊² + K₋²)/√2` and `P̂ = i(K₊² − K₋²)/√2`.
//!
//! All expectations are evaluated by applying operator words to the state
//! vector. States from [`crate::states::build`] carry enough zero levels
//! above their support for the quartic words to act without loss.

use std::f64::consts::{PI, SQRT_2};

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{AlgebraSpec, Op};
use crate::error::{Error, Result};
use crate::fock::{inner_product, FockVector};
use crate::states::{self, SqueezeKind, SqueezeParams};

pub const DEFAULT_THETA_POINTS: usize = 128;
pub const DEFAULT_R_POINTS: usize = 64;

/// Relative size of the imaginary part tolerated in a real identity.
const IMAGINARY_TOLERANCE: f64 = 1e-10;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KStep {
    Plus,
    Minus,
}

impl KStep {
    fn op(self) -> Op {
        match self {
            KStep::Plus => Op::KPlus,
            KStep::Minus => Op::KMinus,
        }
    }
}

use KStep::{Minus, Plus};

/// `⟨v| word[0] word[1] ⋯ |v⟩`, with the rightmost step applied first.
pub fn expectation_k_word(v: &FockVector, word: &[KStep]) -> Complex64 {
    let ops: Vec<Op> = word.iter().map(|s| s.op()).collect();
    let applied = AlgebraSpec::default().apply_word(&ops, v);
    inner_product(v, &applied)
}

fn real_part(value: Complex64, scale: f64) -> Result<f64> {
    if value.im.abs() > IMAGINARY_TOLERANCE * scale.max(1.0) {
        return Err(Error::ImaginaryResidue { residue: value.im });
    }
    Ok(value.re)
}

/// `(I₁, I₂)`.
pub fn quadrature_identities(v: &FockVector) -> Result<(f64, f64)> {
    let km = expectation_k_word(v, &[Minus]);
    let kp = expectation_k_word(v, &[Plus]);
    let km2 = expectation_k_word(v, &[Minus, Minus]);
    let kp2 = expectation_k_word(v, &[Plus, Plus]);
    let kpkm = expectation_k_word(v, &[Plus, Minus]);

    let quadratic = km2 + kp2 - km * km - kp * kp;
    let cross = -2.0 * km * kp + 2.0 * kpkm;
    let scale = km2.norm() + kp2.norm() + km.norm_sqr() + kp.norm_sqr() + 2.0 * kpkm.norm();
    Ok((real_part(quadratic + cross, scale)?, real_part(-quadratic + cross, scale)?))
}

/// `(I₃, I₄)`.
pub fn amplitude_squared_identities(v: &FockVector) -> Result<(f64, f64)> {
    let km2 = expectation_k_word(v, &[Minus, Minus]);
    let kp2 = expectation_k_word(v, &[Plus, Plus]);
    let km4 = expectation_k_word(v, &[Minus; 4]);
    let kp4 = expectation_k_word(v, &[Plus; 4]);
    let kp2km2 = expectation_k_word(v, &[Plus, Plus, Minus, Minus]);
    let km2kp2 = expectation_k_word(v, &[Minus, Minus, Plus, Plus]);
    let kpkm = expectation_k_word(v, &[Plus, Minus]);

    let quartic = km4 + kp4 - km2 * km2 - kp2 * kp2;
    let cross = -2.0 * km2 * kp2 + kp2km2 + km2kp2;
    let shift = -kpkm - 0.5;
    let scale = km4.norm() + kp4.norm() + km2.norm_sqr() + kp2.norm_sqr() + kp2km2.norm() + km2kp2.norm();
    let i3 = 0.25 * (quartic + cross) + shift;
    let i4 = 0.25 * (-quartic + cross) + shift;
    Ok((real_part(i3, scale)?, real_part(i4, scale)?))
}

/// `⟨v|A†A|v⟩ − |⟨v|A|v⟩|²` for the Hermitian `A` whose action on `v` is `av`.
fn variance(v: &FockVector, av: &FockVector) -> f64 {
    av.norm_sqr() - inner_product(v, av).norm_sqr()
}

fn hermitian_pair(raise: &FockVector, lower: &FockVector) -> (FockVector, FockVector) {
    let inv = Complex64::new(1.0 / SQRT_2, 0.0);
    let sum = raise.add_scaled(Complex64::new(1.0, 0.0), lower);
    let diff = raise.add_scaled(Complex64::new(-1.0, 0.0), lower);
    (
        FockVector::new(sum.amps().iter().map(|a| a * inv).collect()),
        FockVector::new(diff.amps().iter().map(|a| a * inv * Complex64::i()).collect()),
    )
}

/// `((Δx)², (Δp)²)`, from the norms of `x̂|v⟩` and `p̂|v⟩`.
pub fn quadrature_variances(v: &FockVector) -> (f64, f64) {
    let spec = AlgebraSpec::default();
    let (x, p) = hermitian_pair(&spec.apply(Op::KPlus, v), &spec.apply(Op::KMinus, v));
    (variance(v, &x), variance(v, &p))
}

/// `((ΔX)², (ΔP)²)` for the amplitude-squared pair.
pub fn amplitude_squared_variances(v: &FockVector) -> (f64, f64) {
    let spec = AlgebraSpec::default();
    let raise = spec.apply_word(&[Op::KPlus, Op::KPlus], v);
    let lower = spec.apply_word(&[Op::KMinus, Op::KMinus], v);
    let (x, p) = hermitian_pair(&raise, &lower);
    (variance(v, &x), variance(v, &p))
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct QuadReport {
    pub r: f64,
    pub theta: f64,
    #[serde(rename = "I1")]
    pub i1: f64,
    #[serde(rename = "I2")]
    pub i2: f64,
    #[serde(rename = "I3")]
    pub i3: f64,
    #[serde(rename = "I4")]
    pub i4: f64,
    /// `(I₁ + 1)(I₂ + 1) ≥ 1`, the uncertainty relation for `x̂`, `p̂`.
    pub uncertainty_ok: bool,
}

impl QuadReport {
    pub fn from_state(r: f64, theta: f64, v: &FockVector) -> Result<Self> {
        let (i1, i2) = quadrature_identities(v)?;
        let (i3, i4) = amplitude_squared_identities(v)?;
        Ok(QuadReport { r, theta, i1, i2, i3, i4, uncertainty_ok: (i1 + 1.0) * (i2 + 1.0) >= 1.0 - 1e-9 })
    }

    pub fn compute(params: &SqueezeParams) -> Result<Self> {
        let v = states::build(params)?;
        Self::from_state(params.r, params.theta, &v)
    }
}

/// `n` equally spaced phases on `[0, 2π)`.
pub fn theta_grid(n: usize) -> Vec<f64> {
    (0..n).map(|i| 2.0 * PI * i as f64 / n as f64).collect()
}

/// `n` equally spaced moduli on `(0, r_max]`.
pub fn r_grid(r_max: f64, n: usize) -> Vec<f64> {
    (1..=n).map(|i| r_max * i as f64 / n as f64).collect()
}

/// Identities over the product grid, ordered with `theta` varying fastest.
pub fn sweep(kind: SqueezeKind, rs: &[f64], thetas: &[f64], n_max: usize) -> Result<Vec<QuadReport>> {
    let cells: Vec<(f64, f64)> = rs.iter().flat_map(|&r| thetas.iter().map(move |&t| (r, t))).collect();
    cells
        .par_iter()
        .map(|&(r, theta)| {
            let params = SqueezeParams { kind, r, theta, n_max };
            QuadReport::compute(&params)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn squeezed(xi: f64, theta: f64) -> FockVector {
        states::build(&SqueezeParams::squeezed(xi, theta)).unwrap()
    }

    #[test]
    fn eigenstate_words() {
        let five = FockVector::basis(5, 12);
        assert!((expectation_k_word(&five, &[Plus, Minus]) - Complex64::new(2.0, 0.0)).norm() < 1e-14);
        assert_eq!(expectation_k_word(&five, &[Minus]), Complex64::new(0.0, 0.0));
    }

    #[test]
    fn vacuum_has_no_squeezing() {
        let vac = FockVector::basis(3, 10);
        assert_eq!(quadrature_identities(&vac).unwrap(), (0.0, 0.0));
        let (i3, i4) = amplitude_squared_identities(&vac).unwrap();
        assert!(i3.abs() < 1e-14 && i4.abs() < 1e-14);
        assert!((expectation_k_word(&vac, &[Minus, Minus, Plus, Plus]).re - 2.0).abs() < 1e-14);
    }

    #[test]
    fn single_steps_vanish_on_built_states() {
        for params in [SqueezeParams::nonlinear(7.0, 1.1), SqueezeParams::squeezed(0.6, 2.0)] {
            let v = states::build(&params).unwrap();
            assert_eq!(expectation_k_word(&v, &[Minus]).norm(), 0.0);
            assert_eq!(expectation_k_word(&v, &[Plus]).norm(), 0.0);
        }
    }

    #[test]
    fn squeezed_second_moment_matches_bogoliubov_form() {
        for xi in [0.1, 0.4, 0.8] {
            let rs = f64::atanh(xi);
            let km2 = expectation_k_word(&squeezed(xi, 0.0), &[Minus, Minus]);
            assert!((km2.re - rs.sinh() * rs.cosh()).abs() < 1e-10, "xi={xi}");
            assert!(km2.im.abs() < 1e-14);
        }
    }

    #[test]
    fn squeezed_quadrature_closed_forms() {
        let (i1, i2) = quadrature_identities(&squeezed(0.4, 0.0)).unwrap();
        assert!((i1 - 4.0 / 3.0).abs() < 1e-10);
        assert!((i2 + 4.0 / 7.0).abs() < 1e-10);
        for k in 1..=9 {
            let xi = k as f64 / 10.0;
            let (i1, i2) = quadrature_identities(&squeezed(xi, 0.0)).unwrap();
            assert!((i1 - 2.0 * xi / (1.0 - xi)).abs() < 1e-6, "xi={xi}");
            assert!((i2 + 2.0 * xi / (1.0 + xi)).abs() < 1e-6, "xi={xi}");
        }
    }

    #[test]
    fn squeezed_state_is_amplitude_squared_squeezed() {
        let (i3, i4) = amplitude_squared_identities(&squeezed(0.4, 0.0)).unwrap();
        assert!(i3.min(i4) < 0.0, "I3={i3} I4={i4}");
    }

    #[test]
    fn identities_match_variances() {
        for params in
            [SqueezeParams::nonlinear(5.0, 0.3), SqueezeParams::nonlinear(25.0, 2.9), SqueezeParams::squeezed(0.7, 4.0)]
        {
            let v = states::build(&params).unwrap();
            let (i1, i2) = quadrature_identities(&v).unwrap();
            let (vx, vp) = quadrature_variances(&v);
            assert!((i1 + 1.0 - 2.0 * vx).abs() < 1e-10);
            assert!((i2 + 1.0 - 2.0 * vp).abs() < 1e-10);

            // [K₋², K₊²] = 4K₀ + 2, so I₃ = ½(ΔX)² − ⟨K₀⟩ − ½
            let (i3, i4) = amplitude_squared_identities(&v).unwrap();
            let (vxx, vpp) = amplitude_squared_variances(&v);
            let k0 = expectation_k_word(&v, &[Plus, Minus]).re;
            assert!((i3 - (0.5 * vxx - k0 - 0.5)).abs() < 1e-9 * (1.0 + vxx));
            assert!((i4 - (0.5 * vpp - k0 - 0.5)).abs() < 1e-9 * (1.0 + vpp));
        }
    }

    #[test]
    fn nonlinear_quadratures_oscillate_out_of_phase() {
        let thetas = theta_grid(DEFAULT_THETA_POINTS);
        let reports = sweep(SqueezeKind::Nonlinear, &[5.0], &thetas, states::DEFAULT_N_MAX).unwrap();
        let half = DEFAULT_THETA_POINTS / 2;
        for (k, rep) in reports.iter().enumerate() {
            let shifted = &reports[(k + half) % DEFAULT_THETA_POINTS];
            assert!((rep.i1 - shifted.i2).abs() < 1e-8);
            assert!(rep.uncertainty_ok);
        }
        assert!(reports.iter().any(|r| r.i1 < 0.0));
        assert!(reports.iter().any(|r| r.i2 < 0.0));
    }

    #[test]
    fn report_serializes_with_identity_names() {
        let rep = QuadReport::compute(&SqueezeParams::squeezed(0.2, 0.0)).unwrap();
        let json = serde_json::to_value(rep).unwrap();
        assert!(json.get("I1").is_some() && json.get("I4").is_some());
    }

    #[test]
    fn grids() {
        assert_eq!(theta_grid(4), vec![0.0, PI / 2.0, PI, 1.5 * PI]);
        let rs = r_grid(31.0, 64);
        assert_eq!(rs.len(), 64);
        assert!(rs[0] > 0.0 && rs[63] == 31.0);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn uncertainty_holds(r in 0.0f64..31.0, theta in 0.0f64..(2.0 * PI)) {
            let rep = QuadReport::compute(&SqueezeParams::nonlinear(r, theta)).unwrap();
            prop_assert!(rep.uncertainty_ok);
            prop_assert!(rep.i1 + rep.i2 >= -1e-9);
        }

        #[test]
        fn squeezed_uncertainty_holds(xi in 0.0f64..0.95, theta in 0.0f64..(2.0 * PI)) {
            let rep = QuadReport::compute(&SqueezeParams::squeezed(xi, theta)).unwrap();
            prop_assert!(rep.uncertainty_ok);
        }
    }
}
