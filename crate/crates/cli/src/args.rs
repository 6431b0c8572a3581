use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Debug, Parser)]
#[command(name = "isosqueeze", version, about = "Squeezed states of the generalized isotonic oscillator")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Photon-number distribution of one state (nonzero levels only).
    State(StateArgs),
    /// ⟨K₀⟩, ⟨K₀²⟩, Q, g²(0) and A₃, at one modulus or over a sweep.
    Stats(StatsArgs),
    /// Squeezing identities I₁..I₄ over a (modulus, phase) grid.
    Squeeze(SqueezeArgs),
    /// Phase-parameterized quadrature distribution P(x, φ).
    QuadDist(QuadDistArgs),
    /// s-parameterized quasi-probability F(x + ip, s).
    Quasiprob(QuasiprobArgs),
    /// Check the deformed commutators and the Casimir on a range of levels.
    VerifyAlgebra(VerifyAlgebraArgs),
    /// Ratio test on the normalization series of the dual state.
    DualCheck(DualCheckArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
pub enum Case {
    /// Nonlinear squeezed states, parameter β = r·e^{iθ}.
    #[value(name = "i")]
    #[serde(rename = "i")]
    I,
    /// Squeezed states, parameter ξ with |ξ| < 1.
    #[value(name = "iii")]
    #[serde(rename = "iii")]
    Iii,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Route {
    /// |⟨x, φ|ψ⟩|² from the Hermite-function expansion.
    Wavefunction,
    /// The explicit double sum over (n, m); case i only.
    Closed,
}

#[derive(Debug, Args)]
pub struct Output {
    /// Output file. A JSON sidecar is written next to it as `<out>.json`.
    #[arg(long, short)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Args)]
pub struct StateSel {
    #[arg(long, value_enum, default_value = "i")]
    pub case: Case,
    /// |β| for case i.
    #[arg(long, conflicts_with = "xi")]
    pub r: Option<f64>,
    /// |ξ| for case iii.
    #[arg(long)]
    pub xi: Option<f64>,
    /// Phase of β or ξ, in radians.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub theta: f64,
    /// Largest half-index kept in the expansion.
    #[arg(long, env = "ISOSQUEEZE_N_MAX", default_value_t = 70)]
    pub n_max: usize,
}

#[derive(Debug, Args)]
pub struct SweepSel {
    #[arg(long, value_enum, default_value = "i")]
    pub case: Case,
    /// Single |β| (case i); omit to sweep.
    #[arg(long, conflicts_with_all = ["xi", "r_max"])]
    pub r: Option<f64>,
    /// Single |ξ| (case iii); omit to sweep.
    #[arg(long, conflicts_with = "r_max")]
    pub xi: Option<f64>,
    /// Upper end of the modulus sweep (default 31 for case i, 0.9 for case iii).
    #[arg(long)]
    pub r_max: Option<f64>,
    #[arg(long, env = "ISOSQUEEZE_R_STEPS", default_value_t = 64)]
    pub r_steps: usize,
    #[arg(long, env = "ISOSQUEEZE_N_MAX", default_value_t = 70)]
    pub n_max: usize,
}

#[derive(Debug, Args)]
pub struct StateArgs {
    #[command(flatten)]
    pub sel: StateSel,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct StatsArgs {
    #[command(flatten)]
    pub sweep: SweepSel,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub theta: f64,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct SqueezeArgs {
    #[command(flatten)]
    pub sweep: SweepSel,
    #[arg(long, env = "ISOSQUEEZE_THETA_STEPS", default_value_t = 128)]
    pub theta_steps: usize,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct QuadDistArgs {
    #[command(flatten)]
    pub sel: StateSel,
    #[arg(long, default_value_t = -5.0, allow_negative_numbers = true)]
    pub x_min: f64,
    #[arg(long, default_value_t = 5.0, allow_negative_numbers = true)]
    pub x_max: f64,
    #[arg(long, env = "ISOSQUEEZE_X_POINTS", default_value_t = 201)]
    pub x_points: usize,
    /// Points on [0, 2π).
    #[arg(long, env = "ISOSQUEEZE_PHI_POINTS", default_value_t = 256)]
    pub phi_points: usize,
    #[arg(long, value_enum, default_value = "wavefunction")]
    pub route: Route,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct QuasiprobArgs {
    #[command(flatten)]
    pub sel: StateSel,
    /// Ordering parameter, s < 1 (0 Wigner, −1 Husimi).
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub s: f64,
    /// Half-width of the square x, p ∈ [−extent, extent].
    #[arg(long, default_value_t = 4.0)]
    pub extent: f64,
    #[arg(long, env = "ISOSQUEEZE_Z_POINTS", default_value_t = 161)]
    pub points: usize,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct VerifyAlgebraArgs {
    #[arg(long, default_value_t = 3)]
    pub n_low: usize,
    #[arg(long, default_value_t = 60)]
    pub n_high: usize,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct DualCheckArgs {
    #[arg(long, default_value_t = 50)]
    pub terms: usize,
    #[command(flatten)]
    pub output: Output,
}
