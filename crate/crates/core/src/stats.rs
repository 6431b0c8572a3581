//! Photon statistics in the K-algebra: `K₀ = K₊K₋` counts excitations above
//! the effective vacuum `|3⟩`, so level `n` carries `n − 3` photons.
//!
//! Every moment is a weighted sum over the photon-number distribution.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fock::{FockVector, BASE_INDEX};

/// `(level, probability)` for every retained level.
pub fn photon_distribution(v: &FockVector) -> Vec<(usize, f64)> {
    v.amps().iter().enumerate().map(|(k, a)| (k + BASE_INDEX, a.norm_sqr())).collect()
}

fn weighted_sum(v: &FockVector, weight: impl Fn(f64) -> f64) -> f64 {
    v.amps()
        .iter()
        .enumerate()
        .map(|(k, a)| {
            let p = a.norm_sqr();
            if p == 0.0 {
                0.0
            } else {
                weight(k as f64) * p
            }
        })
        .sum()
}

/// `(⟨K₀⟩, ⟨K₀²⟩)`.
pub fn k0_moments(v: &FockVector) -> (f64, f64) {
    (weighted_sum(v, |k| k), weighted_sum(v, |k| k * k))
}

/// `⟨K₀^j⟩`.
pub fn power_moment(v: &FockVector, j: u32) -> f64 {
    weighted_sum(v, |k| k.powi(j as i32))
}

/// `m_j = ⟨K₊^j K₋^j⟩ = Σ k(k−1)⋯(k−j+1) P(k)`.
pub fn factorial_moment(v: &FockVector, j: u32) -> f64 {
    weighted_sum(v, |k| (0..j).map(|i| k - i as f64).product())
}

/// Mandel's `Q = ⟨K₀²⟩/⟨K₀⟩ − ⟨K₀⟩ − 1`.
pub fn mandel_q(v: &FockVector) -> Result<f64> {
    let (mean, mean_sq) = k0_moments(v);
    if mean <= 0.0 {
        return Err(Error::UndefinedMoment);
    }
    Ok(mean_sq / mean - mean - 1.0)
}

/// `g²(0) = (⟨K₀²⟩ − ⟨K₀⟩)/⟨K₀⟩²`.
pub fn g2_zero(v: &FockVector) -> Result<f64> {
    let (mean, mean_sq) = k0_moments(v);
    if mean <= 0.0 {
        return Err(Error::UndefinedMoment);
    }
    Ok((mean_sq - mean) / (mean * mean))
}

fn hankel_det(moments: [f64; 4]) -> f64 {
    let [a, b, c, d] = moments;
    // det [[1, a, b], [a, b, c], [b, c, d]] by cofactors along the first row
    (b * d - c * c) - a * (a * d - c * b) + b * (a * c - b * b)
}

/// Agarwal–Tara parameter `A₃ = det m⁽³⁾ / (det μ⁽³⁾ − det m⁽³⁾)`, where
/// `m⁽³⁾` is the Hankel matrix of the factorial moments `⟨K₊^j K₋^j⟩` and
/// `μ⁽³⁾` that of the power moments `⟨(K₊K₋)^j⟩`.
///
/// Fock states give `−1`, coherent-like Poissonian statistics `0`.
pub fn a3_parameter(v: &FockVector) -> Result<f64> {
    let m = [1, 2, 3, 4].map(|j| factorial_moment(v, j));
    let mu = [1, 2, 3, 4].map(|j| power_moment(v, j));
    a3_from_moments(m, mu)
}

fn a3_from_moments(m: [f64; 4], mu: [f64; 4]) -> Result<f64> {
    let det_m = hankel_det(m);
    let det_mu = hankel_det(mu);
    let scale = det_m.abs() + det_mu.abs();
    // moment matrix of a positive measure
    debug_assert!(det_mu >= -1e-9 * scale.max(1e-300), "det μ = {det_mu}");
    let denominator = det_mu - det_m;
    let resolvable = denominator.abs() > 1e-14 * scale;
    if !resolvable {
        return Err(Error::UndefinedA3 { denominator });
    }
    Ok(det_m / denominator)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MomentTable {
    pub mean_k0: f64,
    pub mean_k0_sq: f64,
    /// Factorial moments `m₁ … m₄`.
    pub m: [f64; 4],
    /// Power moments `μ₁ … μ₄`.
    pub mu: [f64; 4],
    pub q: Option<f64>,
    pub g2: Option<f64>,
    pub a3: Option<f64>,
}

impl MomentTable {
    pub fn from_state(v: &FockVector) -> Self {
        let m = [1, 2, 3, 4].map(|j| factorial_moment(v, j));
        let mu = [1, 2, 3, 4].map(|j| power_moment(v, j));
        MomentTable {
            mean_k0: mu[0],
            mean_k0_sq: mu[1],
            m,
            mu,
            q: mandel_q(v).ok(),
            g2: g2_zero(v).ok(),
            a3: a3_from_moments(m, mu).ok(),
        }
    }
}
