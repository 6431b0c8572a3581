//! Phase-space pictures of a state: the phase-parameterized quadrature
//! distribution `P(x, φ)` and the `s`-parameterized quasi-probability
//! `F(z, s)`, with `z = x + ip`.
//!
//! `F` is evaluated in closed form as `Tr[ρ T(z, s)]`, where
//! `T(z, s) = 2/(π(1−s)) D(z) t^{K₀} D(z)†` and `t = (s+1)/(s−1)`. Its
//! matrix elements reduce to associated Laguerre polynomials, written here
//! as `t^j L_j^k(y/t)` so that the Husimi limit `s = −1` (`t = 0`) needs no
//! special case. [`FourierOracle`] integrates the characteristic function
//! directly and is independent of that reduction.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fock::{FockVector, BASE_INDEX};
use crate::specfun::{gauss_legendre, hermite_functions, log_factorial, scaled_laguerre};
use crate::states::{self, SqueezeKind, SqueezeParams};

/// Pairs of amplitudes whose (growth-weighted) product falls below this are
/// skipped in the double sums.
const PRUNE: f64 = 1e-18;

/// Imaginary part tolerated in a nominally real `F`, relative to its scale.
const IMAGINARY_TOLERANCE: f64 = 1e-8;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DistGrid {
    /// `x`.
    pub axis1: Vec<f64>,
    /// `φ` for `P(x, φ)`, `p` for `F(x + ip, s)`.
    pub axis2: Vec<f64>,
    pub s: Option<f64>,
    /// `values[i][j]` belongs to `(axis1[i], axis2[j])`.
    pub values: Vec<Vec<f64>>,
}

impl DistGrid {
    pub fn min(&self) -> f64 {
        self.values.iter().flatten().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn max(&self) -> f64 {
        self.values.iter().flatten().copied().fold(f64::NEG_INFINITY, f64::max)
    }
}

/// `n` points from `a` to `b` inclusive.
pub fn linspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    match n {
        0 => vec![],
        1 => vec![a],
        _ => (0..n).map(|i| a + (b - a) * i as f64 / (n - 1) as f64).collect(),
    }
}

/// `n` points on `[0, 2π)`.
pub fn phase_axis(n: usize) -> Vec<f64> {
    (0..n).map(|i| 2.0 * PI * i as f64 / n as f64).collect()
}

fn support(v: &FockVector) -> Vec<(usize, Complex64)> {
    v.amps().iter().enumerate().filter(|(_, a)| a.norm_sqr() > 0.0).map(|(k, &a)| (k, a)).collect()
}

fn quadrature_sum(v: &FockVector, psi: &[f64], phi: f64) -> Complex64 {
    v.amps()
        .iter()
        .zip(psi)
        .enumerate()
        .filter(|(_, (a, _))| a.norm_sqr() > 0.0)
        .map(|(n, (a, &h))| a * h * Complex64::from_polar(1.0, -(n as f64) * phi))
        .sum()
}

/// `⟨x, φ|v⟩ = Σₙ c_{n+3} ψₙ(x) e^{−inφ}`, where `ψₙ` are the normalized
/// Hermite functions and `|x, φ⟩` the eigenstates of
/// `(e^{−iφ}K₋ + e^{iφ}K₊)/√2`.
pub fn quadrature_wavefunction(v: &FockVector, x: f64, phi: f64) -> Complex64 {
    let psi = hermite_functions(v.dim().saturating_sub(1), x);
    quadrature_sum(v, &psi, phi)
}

pub fn quadrature_probability(v: &FockVector, x: f64, phi: f64) -> f64 {
    quadrature_wavefunction(v, x, phi).norm_sqr()
}

/// `P(x, φ) = |⟨x, φ|v⟩|²` on a grid.
pub fn quadrature_distribution(v: &FockVector, xs: &[f64], phis: &[f64]) -> DistGrid {
    let values = xs
        .par_iter()
        .map(|&x| {
            let psi = hermite_functions(v.dim().saturating_sub(1), x);
            phis.iter().map(|&phi| quadrature_sum(v, &psi, phi).norm_sqr()).collect()
        })
        .collect();
    DistGrid { axis1: xs.to_vec(), axis2: phis.to_vec(), s: None, values }
}

/// `P(x, φ)` for the nonlinear squeezed state from its explicit double sum
/// `Σ_{n,m} aₙ aₘ cos((m−n)(2φ−θ))`.
///
/// `aₙ` combines `|c_{2n+3}|` with the normalized `ψ_{2n}(x)`, which keeps
/// the large Hermite values and factorials from ever being formed. The sum
/// is grouped by `d = m − n`, so each `(x, φ)` costs one cosine per `d`.
pub fn quadrature_distribution_closed(params: &SqueezeParams, xs: &[f64], phis: &[f64]) -> Result<DistGrid> {
    params.validate()?;
    if params.kind != SqueezeKind::Nonlinear {
        return Err(Error::InvalidParams("closed-form P(x, φ) is for nonlinear (case i) states".into()));
    }
    let n_max = params.n_max;
    let norm = states::nonlinear_norm(params.r, n_max);
    let moduli: Vec<f64> = (0..=n_max)
        .map(|n| norm * states::ln_unnormalized_amplitude(SqueezeKind::Nonlinear, params.r, n).exp())
        .collect();

    let values = xs
        .par_iter()
        .map(|&x| {
            let psi = hermite_functions(2 * n_max, x);
            let a: Vec<f64> = moduli.iter().enumerate().map(|(n, c)| c * psi[2 * n]).collect();
            // S_d = Σ_n a_n a_{n+d}
            let lag: Vec<f64> = (0..=n_max).map(|d| (0..=n_max - d).map(|n| a[n] * a[n + d]).sum()).collect();
            phis.iter()
                .map(|&phi| {
                    let angle = 2.0 * phi - params.theta;
                    lag[0] + 2.0 * (1..=n_max).map(|d| lag[d] * (d as f64 * angle).cos()).sum::<f64>()
                })
                .collect()
        })
        .collect();
    Ok(DistGrid { axis1: xs.to_vec(), axis2: phis.to_vec(), s: None, values })
}

/// `⟨row|D(λ)|col⟩` for `D(λ) = exp(λK₊ − λ*K₋)`, levels `≥ 3`.
///
/// With `p = row − 3`, `q = col − 3`:
/// `√(q!/p!) λ^{p−q} e^{−|λ|²/2} L_q^{p−q}(|λ|²)` for `p ≥ q`, and
/// `√(p!/q!) (−λ*)^{q−p} e^{−|λ|²/2} L_p^{q−p}(|λ|²)` otherwise.
pub fn displacement_element_levels(row: usize, col: usize, lambda: Complex64) -> Complex64 {
    assert!(row >= BASE_INDEX && col >= BASE_INDEX, "levels start at {BASE_INDEX}");
    displacement_k(row - BASE_INDEX, col - BASE_INDEX, lambda)
}

fn displacement_k(p: usize, q: usize, lambda: Complex64) -> Complex64 {
    let x = lambda.norm_sqr();
    let (lo, hi) = (p.min(q), p.max(q));
    let order = hi - lo;
    if order > 0 && x == 0.0 {
        return Complex64::new(0.0, 0.0);
    }
    let ln_mag = 0.5 * (log_factorial(lo) - log_factorial(hi)) - 0.5 * x
        + if order > 0 { order as f64 * 0.5 * x.ln() } else { 0.0 };
    let base = if p >= q { lambda } else { -lambda.conj() };
    let phase = Complex64::from_polar(1.0, order as f64 * base.arg());
    phase * ln_mag.exp() * scaled_laguerre(lo, order, x, 1.0)
}

/// `⟨2m+3|D(λ)|2n+3⟩`.
pub fn displacement_element(m: usize, n: usize, lambda: Complex64) -> Complex64 {
    displacement_k(2 * m, 2 * n, lambda)
}

/// `C(λ, s) = e^{s|λ|²/2} Tr[ρ D(λ)]` for `ρ = |v⟩⟨v|`.
pub fn characteristic_function(v: &FockVector, lambda: Complex64, s: f64) -> Complex64 {
    let sup = support(v);
    let largest = sup.iter().map(|(_, a)| a.norm()).fold(0.0, f64::max);
    let mut trace = Complex64::new(0.0, 0.0);
    for &(j, cj) in &sup {
        for &(k, ck) in &sup {
            // |⟨j|D|k⟩| ≤ 1
            if cj.norm() * ck.norm() < PRUNE * largest * largest {
                continue;
            }
            trace += cj.conj() * ck * displacement_k(j, k, lambda);
        }
    }
    trace * (0.5 * s * lambda.norm_sqr()).exp()
}

fn check_s(s: f64) -> Result<()> {
    if s.is_nan() || s >= 1.0 {
        return Err(Error::SParameterOutOfRange { s });
    }
    Ok(())
}

/// Per-state data reused across all `z` for a fixed `s`.
struct QuasiKernel {
    sup: Vec<(usize, Complex64)>,
    pairs: Vec<(usize, usize)>,
    s: f64,
    t: f64,
}

impl QuasiKernel {
    fn new(v: &FockVector, s: f64) -> Self {
        let sup = support(v);
        let t = (s + 1.0) / (s - 1.0);
        // ⟨j|t^{K₀}|k⟩ grows like |t|^j when s > 0
        let growth = t.abs().max(1.0);
        let weight = |k: usize, a: Complex64| a.norm() * growth.powf(0.5 * k as f64);
        let largest = sup.iter().map(|&(k, a)| weight(k, a)).fold(0.0, f64::max);
        let mut pairs = Vec::new();
        for (ia, &(j, cj)) in sup.iter().enumerate() {
            for (ib, &(k, ck)) in sup.iter().enumerate().skip(ia) {
                if weight(j, cj) * weight(k, ck) >= PRUNE * largest * largest {
                    pairs.push((ia, ib));
                }
            }
        }
        QuasiKernel { sup, pairs, s, t }
    }

    /// `Σ_{j,k} ρ_{kj} ⟨j|T(z, s)|k⟩`, using hermiticity of `T` for `k < j`.
    fn evaluate(&self, z: Complex64) -> Result<f64> {
        let (s, t) = (self.s, self.t);
        let gap = 1.0 - s;
        let x = z.norm_sqr();
        let y = -4.0 * x / (gap * gap);
        let ln_scale = (2.0 * z.norm() / gap).ln();
        let mut total = Complex64::new(0.0, 0.0);
        let mut scale = 0.0;
        for &(ia, ib) in &self.pairs {
            let (j, cj) = self.sup[ia];
            let (k, ck) = self.sup[ib];
            let order = k - j;
            if order > 0 && x == 0.0 {
                continue;
            }
            let mut ln_mag = 0.5 * (log_factorial(j) - log_factorial(k)) - 2.0 * x / gap;
            if order > 0 {
                ln_mag += order as f64 * ln_scale;
            }
            let element =
                Complex64::from_polar(ln_mag.exp(), -(order as f64) * z.arg()) * scaled_laguerre(j, order, y, t);
            let term = ck * cj.conj() * element;
            if j == k {
                total += term;
                scale += term.norm();
            } else {
                // the (k, j) partner is the complex conjugate
                total += 2.0 * term.re;
                scale += 2.0 * term.norm();
            }
        }
        let value = total * (2.0 / (PI * gap));
        let scale = scale * 2.0 / (PI * gap);
        if value.im.abs() > IMAGINARY_TOLERANCE * scale.max(1e-300) {
            return Err(Error::ImaginaryResidue { residue: value.im });
        }
        Ok(value.re)
    }
}

/// `F(z, s)` for `s < 1`: Wigner at `s = 0`, Husimi at `s = −1`.
pub fn quasi_probability(v: &FockVector, z: Complex64, s: f64) -> Result<f64> {
    check_s(s)?;
    QuasiKernel::new(v, s).evaluate(z)
}

/// `F(x + ip, s)` on a grid.
pub fn quasi_probability_grid(v: &FockVector, xs: &[f64], ps: &[f64], s: f64) -> Result<DistGrid> {
    check_s(s)?;
    let kernel = QuasiKernel::new(v, s);
    let values = xs
        .par_iter()
        .map(|&x| ps.iter().map(|&p| kernel.evaluate(Complex64::new(x, p))).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Ok(DistGrid { axis1: xs.to_vec(), axis2: ps.to_vec(), s: Some(s), values })
}

/// Brute-force `F(z, s) = π⁻² ∫ C(λ, s) e^{λ*z − λz*} d²λ`.
///
/// Polar product rule: Gauss–Legendre in `|λ|` on `[0, R]`, trapezoid in
/// `arg λ`. `R` is grown until `C` is negligible on the outer ring. The
/// weighted samples of `C` are computed once and shared by every `z`.
pub struct FourierOracle {
    nodes: Vec<(Complex64, Complex64)>,
    pub radius: f64,
}

impl FourierOracle {
    pub const DEFAULT_RADIAL: usize = 256;
    pub const DEFAULT_ANGULAR: usize = 256;

    pub fn new(v: &FockVector, s: f64) -> Result<Self> {
        Self::with_nodes(v, s, Self::DEFAULT_RADIAL, Self::DEFAULT_ANGULAR)
    }

    pub fn with_nodes(v: &FockVector, s: f64, radial: usize, angular: usize) -> Result<Self> {
        check_s(s)?;
        let angles = phase_axis(angular);
        let ring_max = |rho: f64| {
            angles
                .iter()
                .map(|&a| characteristic_function(v, Complex64::from_polar(rho, a), s).norm())
                .fold(0.0, f64::max)
        };
        // start at the Gaussian envelope's 1e-14 point, then walk outward
        let mut radius = (2.0 * 14.0 * 10f64.ln() / (1.0 - s)).sqrt();
        while ring_max(radius) > 1e-14 || ring_max(radius + 0.5) > 1e-14 {
            radius += 0.5;
        }

        let (gx, gw) = gauss_legendre(radial);
        let dtheta = 2.0 * PI / angular as f64;
        let nodes = gx
            .par_iter()
            .zip(&gw)
            .flat_map_iter(|(&u, &w)| {
                let rho = 0.5 * radius * (u + 1.0);
                let weight = 0.5 * radius * w * rho * dtheta;
                angles.iter().map(move |&a| {
                    let lambda = Complex64::from_polar(rho, a);
                    (lambda, characteristic_function(v, lambda, s) * weight)
                })
            })
            .collect();
        Ok(FourierOracle { nodes, radius })
    }

    pub fn evaluate(&self, z: Complex64) -> f64 {
        let total: Complex64 =
            self.nodes.iter().map(|&(lambda, weighted)| weighted * (lambda.conj() * z - lambda * z.conj()).exp()).sum();
        total.re / (PI * PI)
    }
}

/// Convenience for building and evaluating `F` straight from parameters.
pub fn quasi_probability_for(params: &SqueezeParams, xs: &[f64], ps: &[f64], s: f64) -> Result<DistGrid> {
    let v = states::build(params)?;
    quasi_probability_grid(&v, xs, ps, s)
}
