//! Nonlinear squeezed states of the generalized isotonic oscillator.
//!
//! The oscillator's deformed ladder operators, rescaled into a Heisenberg
//! pair `K₋`, `K₊` on the levels `|3⟩, |4⟩, …`, generate two families of
//! squeezed states. This crate builds them on a truncated Fock space and
//! evaluates their non-classicality diagnostics: photon statistics, the
//! Mandel `Q` parameter, `g²(0)`, the `A₃` moment-determinant parameter,
//! quadrature and amplitude-squared squeezing, the phase-parameterized
//! quadrature distribution and the `s`-parameterized quasi-probability.
//!
//! ```
//! use isosqueeze::{states::{self, SqueezeParams}, stats};
//!
//! let state = states::build(&SqueezeParams::squeezed(0.4, 0.0))?;
//! let q = stats::mandel_q(&state)?;
//! assert!((q - (2.0 * 0.16 / 0.84 + 1.0)).abs() < 1e-10);
//! # Ok::<(), isosqueeze::Error>(())
//! ```

pub mod algebra;
pub mod dist;
mod error;
pub mod fock;
pub mod specfun;
pub mod squeezing;
pub mod states;
pub mod stats;

pub use error::{Error, Result};
pub use fock::{inner_product, FockVector};
pub use states::{SqueezeKind, SqueezeParams};
