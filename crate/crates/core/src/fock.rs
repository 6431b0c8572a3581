//! Truncated Fock-space vectors over the levels `|3⟩, |4⟩, |5⟩, …`.
//!
//! The isolated ground state `|0⟩` never enters: slot `k` of a
//! [`FockVector`] is the level `k + 3`, which is also the excitation number
//! counted by `K₀`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::states::{self, SqueezeParams};

/// Lowest retained level.
pub const BASE_INDEX: usize = 3;

/// Number of trailing retained levels summed by [`FockVector::trailing_mass`].
pub const TAIL_WINDOW: usize = 5;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "FockVectorRepr", into = "FockVectorRepr")]
pub struct FockVector {
    amps: Vec<Complex64>,
    tail_bound: f64,
}

impl FockVector {
    pub fn new(amps: Vec<Complex64>) -> Self {
        Self { amps, tail_bound: 0.0 }
    }

    pub fn zeros(dim: usize) -> Self {
        Self::new(vec![Complex64::new(0.0, 0.0); dim])
    }

    /// The basis state `|level⟩` in a space of `dim` retained levels.
    ///
    /// # Panics
    ///
    /// If `level` is below [`BASE_INDEX`] or does not fit in `dim` slots.
    pub fn basis(level: usize, dim: usize) -> Self {
        assert!(level >= BASE_INDEX, "level {level} is outside the |3⟩, |4⟩, … sector");
        let mut v = Self::zeros(dim);
        v.amps[level - BASE_INDEX] = Complex64::new(1.0, 0.0);
        v
    }

    pub fn with_tail_bound(mut self, tail_bound: f64) -> Self {
        self.tail_bound = tail_bound.max(0.0);
        self
    }

    pub fn base_index(&self) -> usize {
        BASE_INDEX
    }

    /// Number of retained levels.
    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    /// Highest retained level.
    pub fn top_level(&self) -> usize {
        BASE_INDEX + self.amps.len().saturating_sub(1)
    }

    pub fn amps(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn amps_mut(&mut self) -> &mut [Complex64] {
        &mut self.amps
    }

    pub fn into_amps(self) -> Vec<Complex64> {
        self.amps
    }

    /// Upper bound on probability mass discarded by truncation.
    pub fn tail_bound(&self) -> f64 {
        self.tail_bound
    }

    /// Amplitude of `|level⟩`; zero for levels outside the stored range.
    pub fn amp(&self, level: usize) -> Complex64 {
        level.checked_sub(BASE_INDEX).and_then(|k| self.amps.get(k).copied()).unwrap_or_default()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn normalize(&self) -> Result<FockVector> {
        let norm = self.norm();
        if norm == 0.0 || !norm.is_finite() {
            return Err(Error::ZeroVector);
        }
        let amps = self.amps.iter().map(|a| a / norm).collect();
        Ok(FockVector { amps, tail_bound: self.tail_bound })
    }

    /// Probability summed over the last `window` slots.
    pub fn trailing_mass(&self, window: usize) -> f64 {
        let start = self.amps.len().saturating_sub(window);
        self.amps[start..].iter().map(|a| a.norm_sqr()).sum()
    }

    /// `self + factor · other`, zero-padding the shorter operand.
    pub fn add_scaled(&self, factor: Complex64, other: &FockVector) -> FockVector {
        let dim = self.dim().max(other.dim());
        let amps = (0..dim)
            .map(|k| {
                let a = self.amps.get(k).copied().unwrap_or_default();
                let b = other.amps.get(k).copied().unwrap_or_default();
                a + factor * b
            })
            .collect();
        FockVector { amps, tail_bound: self.tail_bound + other.tail_bound }
    }

    /// Largest absolute amplitude difference, zero-padding the shorter operand.
    pub fn max_abs_diff(&self, other: &FockVector) -> f64 {
        self.add_scaled(Complex64::new(-1.0, 0.0), other).amps.iter().map(|a| a.norm()).fold(0.0, f64::max)
    }
}

/// `⟨u|v⟩ = Σ conj(u_n) v_n`; the shorter vector is implicitly zero-padded.
pub fn inner_product(u: &FockVector, v: &FockVector) -> Complex64 {
    u.amps.iter().zip(&v.amps).map(|(a, b)| a.conj() * b).sum()
}

/// Probability carried by the last [`TAIL_WINDOW`] retained levels of the
/// state described by `params`.
///
/// The amplitudes of both state families fall off monotonically at large
/// level, so this is an empirical proxy for the mass lost to truncation.
pub fn tail_mass(params: &SqueezeParams) -> Result<f64> {
    Ok(states::build(params)?.tail_bound())
}

#[derive(Serialize, Deserialize)]
struct FockVectorRepr {
    base_index: usize,
    amps: Vec<[f64; 2]>,
    tail_bound: f64,
}

impl From<FockVector> for FockVectorRepr {
    fn from(v: FockVector) -> Self {
        FockVectorRepr {
            base_index: BASE_INDEX,
            amps: v.amps.iter().map(|a| [a.re, a.im]).collect(),
            tail_bound: v.tail_bound,
        }
    }
}

impl TryFrom<FockVectorRepr> for FockVector {
    type Error = String;

    fn try_from(repr: FockVectorRepr) -> std::result::Result<Self, Self::Error> {
        if repr.base_index != BASE_INDEX {
            return Err(format!("base_index must be {BASE_INDEX}, got {}", repr.base_index));
        }
        if repr.tail_bound.is_nan() || repr.tail_bound < 0.0 {
            return Err(format!("tail_bound must be non-negative, got {}", repr.tail_bound));
        }
        Ok(FockVector {
            amps: repr.amps.into_iter().map(|[re, im]| Complex64::new(re, im)).collect(),
            tail_bound: repr.tail_bound,
        })
    }
}
