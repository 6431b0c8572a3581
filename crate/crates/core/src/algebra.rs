//! Deformed ladder operators of the generalized isotonic oscillator.
//!
//! The bare pair `N₋`, `N₊` carries the deformation `f(n) = √((n−1)(n−3))`.
//! Rescaling by `F = (N₀ + δ) / (N₋N₊)` gives the one-sided operators
//! `𝒩₊ = N₊F` and `𝒩₋ = F N₋`, and the symmetric split `G = √F` gives
//! `K₊ = N₊G`, `K₋ = G N₋`, which obey the ordinary Heisenberg algebra on
//! `|3⟩, |4⟩, …`.
//!
//! Operators are basis-action rules: a shift of ±1 (or 0) together with a
//! coefficient depending on the level they act on. They are never stored as
//! matrices.

use num_complex::Complex64;
use serde::Serialize;

use crate::fock::{FockVector, BASE_INDEX};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Op {
    /// `N₋|n⟩ = √n f(n) |n−1⟩`
    NMinus,
    /// `N₊|n⟩ = √(n+1) f(n+1) |n+1⟩`
    NPlus,
    /// `𝒩₊ = N₊ F`
    ScaledNPlus,
    /// `𝒩₋ = F N₋`
    ScaledNMinus,
    A,
    ADagger,
    KMinus,
    KPlus,
    N0,
    K0,
}

impl Op {
    pub fn shift(self) -> isize {
        match self {
            Op::NMinus | Op::ScaledNMinus | Op::A | Op::KMinus => -1,
            Op::NPlus | Op::ScaledNPlus | Op::ADagger | Op::KPlus => 1,
            Op::N0 | Op::K0 => 0,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    Plus,
    Minus,
}

/// Deformation data: `f(n)`, the shift `δ` in `F`, and the derived rescalings.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AlgebraSpec {
    pub delta: f64,
}

impl Default for AlgebraSpec {
    fn default() -> Self {
        AlgebraSpec { delta: -2.0 }
    }
}

impl AlgebraSpec {
    /// `f(n)²  = (n−1)(n−3)`.
    pub fn deform_f_sq(&self, n: usize) -> f64 {
        (n as f64 - 1.0) * (n as f64 - 3.0)
    }

    /// `f(n)`; real for `n ∈ {0, 1}` and `n ≥ 3`.
    pub fn deform_f(&self, n: usize) -> f64 {
        self.deform_f_sq(n).sqrt()
    }

    /// `h(n) = (5/2) n(n+1) − n(n+1)(n+½)`.
    pub fn h(&self, n: f64) -> f64 {
        2.5 * n * (n + 1.0) - n * (n + 1.0) * (n + 0.5)
    }

    /// Eigenvalue of `N₋N₊` on `|n⟩`, i.e. `(n+1) f(n+1)²`.
    pub fn n_minus_n_plus(&self, n: usize) -> f64 {
        (n as f64 + 1.0) * self.deform_f_sq(n + 1)
    }

    /// `F(n) = (n + δ) / ((n+1) f(n+1)²)`, for `n ≥ 3`.
    pub fn scale_f(&self, n: usize) -> f64 {
        (n as f64 + self.delta) / self.n_minus_n_plus(n)
    }

    pub fn scale_g(&self, n: usize) -> f64 {
        self.scale_f(n).sqrt()
    }

    /// Coefficient of `op` acting on `|level⟩`, for `level ≥ 3`.
    ///
    /// The rescaled operators use their simplified closed forms; the zeros of
    /// `f` at the bottom of the sector are resolved before any division.
    pub fn coefficient(&self, op: Op, level: usize) -> f64 {
        debug_assert!(level >= BASE_INDEX);
        let n = level as f64;
        let at_floor = level == BASE_INDEX;
        match op {
            Op::NMinus => (n * self.deform_f_sq(level)).sqrt(),
            Op::NPlus => self.n_minus_n_plus(level).sqrt(),
            Op::ScaledNPlus => (n + self.delta) / self.n_minus_n_plus(level).sqrt(),
            Op::ScaledNMinus if at_floor => 0.0,
            Op::ScaledNMinus => (n - 1.0 + self.delta) / (n * self.deform_f_sq(level)).sqrt(),
            Op::A if at_floor => 0.0,
            Op::A => n.sqrt(),
            Op::ADagger => (n + 1.0).sqrt(),
            Op::KMinus if at_floor => 0.0,
            Op::KMinus => (n - 1.0 + self.delta).sqrt(),
            Op::KPlus => (n + self.delta).sqrt(),
            Op::N0 => n,
            Op::K0 if at_floor => 0.0,
            Op::K0 => n - 1.0 + self.delta,
        }
    }

    /// Applies `op` to `v`. Mass raised past the top retained level is
    /// dropped and added to the tail bound.
    pub fn apply(&self, op: Op, v: &FockVector) -> FockVector {
        let dim = v.dim();
        let mut out = vec![Complex64::new(0.0, 0.0); dim];
        let mut lost = 0.0;
        for (k, &amp) in v.amps().iter().enumerate() {
            if amp == Complex64::new(0.0, 0.0) {
                continue;
            }
            let coeff = self.coefficient(op, k + BASE_INDEX);
            let target = k as isize + op.shift();
            if target < 0 {
                // only reachable with a vanishing coefficient at |3⟩
                debug_assert!(coeff == 0.0);
                continue;
            }
            match out.get_mut(target as usize) {
                Some(slot) => *slot += amp * coeff,
                None => lost += (amp * coeff).norm_sqr(),
            }
        }
        FockVector::new(out).with_tail_bound(v.tail_bound() + lost)
    }

    /// Applies the operator product `word[0] · word[1] · …`, rightmost first.
    pub fn apply_word(&self, word: &[Op], v: &FockVector) -> FockVector {
        word.iter().rev().fold(v.clone(), |acc, &op| self.apply(op, &acc))
    }

    /// `[X, Y]|v⟩` for operator products `X`, `Y`.
    pub fn commutator(&self, x: &[Op], y: &[Op], v: &FockVector) -> FockVector {
        let xy = self.apply_word(y, v);
        let xy = self.apply_word(x, &xy);
        let yx = self.apply_word(x, v);
        let yx = self.apply_word(y, &yx);
        xy.add_scaled(Complex64::new(-1.0, 0.0), &yx)
    }

    /// `δ` fixed by demanding `[N₋, 𝒩₊]|3⟩ = |3⟩`.
    ///
    /// The commutator at `|3⟩` is affine in `δ`, so two probes determine it.
    pub fn delta_from_floor_commutator() -> f64 {
        let probe = |delta: f64| {
            let spec = AlgebraSpec { delta };
            let three = FockVector::basis(BASE_INDEX, 3);
            spec.commutator(&[Op::NMinus], &[Op::ScaledNPlus], &three).amp(BASE_INDEX).re
        };
        let (at0, at1) = (probe(0.0), probe(1.0));
        (1.0 - at0) / (at1 - at0)
    }
}

fn default_spec() -> AlgebraSpec {
    AlgebraSpec::default()
}

pub fn apply_n_minus(v: &FockVector) -> FockVector {
    default_spec().apply(Op::NMinus, v)
}

pub fn apply_n_plus(v: &FockVector) -> FockVector {
    default_spec().apply(Op::NPlus, v)
}

pub fn apply_a(v: &FockVector) -> FockVector {
    default_spec().apply(Op::A, v)
}

pub fn apply_a_dagger(v: &FockVector) -> FockVector {
    default_spec().apply(Op::ADagger, v)
}

pub fn apply_k_minus(v: &FockVector) -> FockVector {
    default_spec().apply(Op::KMinus, v)
}

pub fn apply_k_plus(v: &FockVector) -> FockVector {
    default_spec().apply(Op::KPlus, v)
}

pub fn apply_k0(v: &FockVector) -> FockVector {
    default_spec().apply(Op::K0, v)
}

/// `Ẽₙ = ½ n(1 − 5n + 2n²)`, the spectrum of `½(N₊N₋ + N₋N₊)`.
pub fn deformed_energy(n: i64) -> f64 {
    // n(2n² − 5n + 1) is always even
    let n = n as i128;
    (n * (1 - 5 * n + 2 * n * n) / 2) as f64
}

/// Level-dependent vibration frequency of the deformed oscillator.
///
/// `Plus` is the forward gap `Ẽ_{n+1} − Ẽₙ = 3n² − 2n − 1`. `Minus` is the
/// closed form `3n² − 4n + 2`; note it is not the backward gap
/// `Ẽₙ − Ẽ_{n−1} = 3n² − 8n + 4`.
pub fn vibration_frequency(n: i64, branch: Branch) -> f64 {
    let n = n as i128;
    let value = match branch {
        Branch::Plus => 3 * n * n - 2 * n - 1,
        Branch::Minus => 3 * n * n - 4 * n + 2,
    };
    value as f64
}

/// `⟨n|Ĉ|n⟩` with `Ĉ = N₋N₊ + h(N₀)`, by operator application.
pub fn casimir_eigenvalue(n: usize) -> f64 {
    casimir_forms(n).0
}

/// Both forms of the Casimir on `|n⟩`: `N₋N₊ + h(N₀)` and `N₊N₋ + h(N₀ − 1)`.
pub fn casimir_forms(n: usize) -> (f64, f64) {
    let spec = default_spec();
    let ket = FockVector::basis(n, n - BASE_INDEX + 2);
    let diag = |word: &[Op]| spec.apply_word(word, &ket).amp(n).re;
    let first = diag(&[Op::NMinus, Op::NPlus]) + spec.h(n as f64);
    let second = diag(&[Op::NPlus, Op::NMinus]) + spec.h(n as f64 - 1.0);
    (first, second)
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub max_deviation: f64,
    pub worst_level: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct CommutatorReport {
    pub n_low: usize,
    pub n_high: usize,
    pub identities: Vec<IdentityCheck>,
    /// `max |⟨n|Ĉ|n⟩|` over the range.
    pub casimir_max_abs: f64,
    /// Largest disagreement between the two Casimir forms.
    pub casimir_forms_max_diff: f64,
    /// `max |ω₊(n) − (Ẽ_{n+1} − Ẽₙ)|` over the range.
    pub frequency_max_diff: f64,
    /// Largest commutator deviation over all identities.
    pub max_deviation: f64,
}

enum Rhs {
    /// `g(n)|n⟩`
    Diagonal(fn(f64) -> f64),
    /// `sign · W|n⟩`
    Word(f64, &'static [Op]),
}

struct Identity {
    name: &'static str,
    x: &'static [Op],
    y: &'static [Op],
    rhs: Rhs,
}

const IDENTITIES: &[Identity] = &[
    Identity {
        name: "[N+, N-] = 5 N0 - 3 N0^2",
        x: &[Op::NPlus],
        y: &[Op::NMinus],
        rhs: Rhs::Diagonal(|n| 5.0 * n - 3.0 * n * n),
    },
    Identity { name: "[N0, N+] = N+", x: &[Op::N0], y: &[Op::NPlus], rhs: Rhs::Word(1.0, &[Op::NPlus]) },
    Identity { name: "[N0, N-] = -N-", x: &[Op::N0], y: &[Op::NMinus], rhs: Rhs::Word(-1.0, &[Op::NMinus]) },
    Identity { name: "[N-, sN+] = I", x: &[Op::NMinus], y: &[Op::ScaledNPlus], rhs: Rhs::Diagonal(|_| 1.0) },
    Identity {
        name: "[sN+ N-, N-] = -N-",
        x: &[Op::ScaledNPlus, Op::NMinus],
        y: &[Op::NMinus],
        rhs: Rhs::Word(-1.0, &[Op::NMinus]),
    },
    Identity {
        name: "[sN+ N-, sN+] = sN+",
        x: &[Op::ScaledNPlus, Op::NMinus],
        y: &[Op::ScaledNPlus],
        rhs: Rhs::Word(1.0, &[Op::ScaledNPlus]),
    },
    Identity { name: "[sN-, N+] = I", x: &[Op::ScaledNMinus], y: &[Op::NPlus], rhs: Rhs::Diagonal(|_| 1.0) },
    Identity {
        name: "[N+ sN-, sN-] = -sN-",
        x: &[Op::NPlus, Op::ScaledNMinus],
        y: &[Op::ScaledNMinus],
        rhs: Rhs::Word(-1.0, &[Op::ScaledNMinus]),
    },
    Identity {
        name: "[N+ sN-, N+] = N+",
        x: &[Op::NPlus, Op::ScaledNMinus],
        y: &[Op::NPlus],
        rhs: Rhs::Word(1.0, &[Op::NPlus]),
    },
    Identity { name: "[K-, K+] = I", x: &[Op::KMinus], y: &[Op::KPlus], rhs: Rhs::Diagonal(|_| 1.0) },
    Identity { name: "[K0, K-] = -K-", x: &[Op::K0], y: &[Op::KMinus], rhs: Rhs::Word(-1.0, &[Op::KMinus]) },
    Identity { name: "[K0, K+] = K+", x: &[Op::K0], y: &[Op::KPlus], rhs: Rhs::Word(1.0, &[Op::KPlus]) },
];

/// Checks every commutator identity of the deformed algebra, its rescalings
/// and the Heisenberg K-algebra on `|n_low⟩ … |n_high⟩`, together with the
/// Casimir and the frequency/energy relation.
///
/// Vectors carry two levels of head-room above `n_high`, so raising never
/// leaks mass on the checked range.
pub fn verify_commutators(n_low: usize, n_high: usize) -> CommutatorReport {
    assert!(n_low >= BASE_INDEX, "n_low must be at least {BASE_INDEX}");
    assert!(n_high >= n_low + 2, "n_high must exceed n_low by at least 2");
    let spec = default_spec();
    let dim = n_high - BASE_INDEX + 3;

    let identities: Vec<IdentityCheck> = IDENTITIES
        .iter()
        .map(|id| {
            let mut check = IdentityCheck { name: id.name, max_deviation: 0.0, worst_level: n_low };
            for n in n_low..=n_high {
                let ket = FockVector::basis(n, dim);
                let lhs = spec.commutator(id.x, id.y, &ket);
                let rhs = match id.rhs {
                    Rhs::Diagonal(g) => {
                        let mut r = FockVector::zeros(dim);
                        r.amps_mut()[n - BASE_INDEX] = Complex64::new(g(n as f64), 0.0);
                        r
                    }
                    Rhs::Word(sign, word) => {
                        let w = spec.apply_word(word, &ket);
                        FockVector::zeros(dim).add_scaled(Complex64::new(sign, 0.0), &w)
                    }
                };
                let dev = lhs.max_abs_diff(&rhs);
                if dev > check.max_deviation {
                    check.max_deviation = dev;
                    check.worst_level = n;
                }
            }
            check
        })
        .collect();

    let mut casimir_max_abs: f64 = 0.0;
    let mut casimir_forms_max_diff: f64 = 0.0;
    let mut frequency_max_diff: f64 = 0.0;
    for n in n_low..=n_high {
        let (first, second) = casimir_forms(n);
        casimir_max_abs = casimir_max_abs.max(first.abs());
        casimir_forms_max_diff = casimir_forms_max_diff.max((first - second).abs());
        let gap = deformed_energy(n as i64 + 1) - deformed_energy(n as i64);
        frequency_max_diff = frequency_max_diff.max((vibration_frequency(n as i64, Branch::Plus) - gap).abs());
    }

    let max_deviation = identities.iter().map(|c| c.max_deviation).fold(0.0, f64::max);
    CommutatorReport {
        n_low,
        n_high,
        identities,
        casimir_max_abs,
        casimir_forms_max_diff,
        frequency_max_diff,
        max_deviation,
    }
}
