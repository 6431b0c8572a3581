//! Special-function kernels: log-factorials, Hermite and associated Laguerre
//! polynomials.
//!
//! Every polynomial is evaluated with its upward three-term recurrence. The
//! explicit alternating sums are left to the tests, where they serve as
//! oracles at small degree.

use std::f64::consts::PI;
use std::sync::OnceLock;

const LN_FACTORIAL_TABLE_LEN: usize = 1024;

fn ln_factorial_table() -> &'static [f64] {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut table = Vec::with_capacity(LN_FACTORIAL_TABLE_LEN);
        let mut sum = 0.0_f64;
        let mut carry = 0.0_f64;
        table.push(0.0);
        for k in 1..LN_FACTORIAL_TABLE_LEN {
            // Kahan-compensated running sum of ln k
            let y = (k as f64).ln() - carry;
            let t = sum + y;
            carry = (t - sum) - y;
            sum = t;
            table.push(sum);
        }
        table
    })
}

/// Natural logarithm of `n!`.
///
/// Tabulated up to 1023; larger arguments use the Stirling series, which is
/// accurate to machine precision there.
pub fn log_factorial(n: usize) -> f64 {
    if n < LN_FACTORIAL_TABLE_LEN {
        return ln_factorial_table()[n];
    }
    let x = n as f64 + 1.0;
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    let series = inv * (1.0 / 12.0 - inv2 * (1.0 / 360.0 - inv2 * (1.0 / 1260.0 - inv2 / 1680.0)));
    (x - 0.5) * x.ln() - x + 0.5 * (2.0 * PI).ln() + series
}

/// Physicists' Hermite polynomial `H_n(x)`.
pub fn hermite(n: usize, x: f64) -> f64 {
    let mut prev = 1.0;
    if n == 0 {
        return prev;
    }
    let mut cur = 2.0 * x;
    for k in 1..n {
        let next = 2.0 * x * cur - 2.0 * k as f64 * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Normalized Hermite functions
/// `ψ_k(x) = H_k(x) e^{-x²/2} / (π^{1/4} √(2^k k!))` for `k = 0..=n_max`.
///
/// Uses the orthonormal recurrence, which stays bounded for any degree
/// where the raw polynomials would overflow.
pub fn hermite_functions(n_max: usize, x: f64) -> Vec<f64> {
    let mut out = Vec::with_capacity(n_max + 1);
    let psi0 = (-0.5 * x * x).exp() / PI.powf(0.25);
    out.push(psi0);
    if n_max == 0 {
        return out;
    }
    out.push(std::f64::consts::SQRT_2 * x * psi0);
    for k in 1..n_max {
        let kf = k as f64;
        let next = (2.0 / (kf + 1.0)).sqrt() * x * out[k] - (kf / (kf + 1.0)).sqrt() * out[k - 1];
        out.push(next);
    }
    out
}

/// Associated Laguerre polynomial `L_n^k(x)`.
pub fn assoc_laguerre(n: usize, k: usize, x: f64) -> f64 {
    scaled_laguerre(n, k, x, 1.0)
}

/// `t^n · L_n^k(y / t)`, evaluated without dividing by `t`.
///
/// This is the combination that appears in s-ordered quasi-probabilities
/// with `t = 1 + s`; it stays finite (and exact) as `t → 0`.
pub fn scaled_laguerre(n: usize, k: usize, y: f64, t: f64) -> f64 {
    let mut prev = 1.0;
    if n == 0 {
        return prev;
    }
    let kf = k as f64;
    let mut cur = (1.0 + kf) * t - y;
    for j in 1..n {
        let jf = j as f64;
        let next = (((2.0 * jf + 1.0 + kf) * t - y) * cur - (jf + kf) * t * t * prev) / (jf + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// Gauss–Legendre nodes and weights on `[-1, 1]`, ascending.
///
/// Roots of `P_n` by Newton iteration from the Tricomi estimate.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let nf = n as f64;
    for i in 0..n.div_ceil(2) {
        let mut x = (PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            // P_n(x) and P_{n-1}(x) by recurrence
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            let pn = if n == 0 { 1.0 } else { p1 };
            let pm = if n == 1 { 1.0 } else { p0 };
            dp = nf * (x * pn - pm) / (x * x - 1.0);
            let step = pn / dp;
            x -= step;
            if step.abs() < 1e-16 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}
