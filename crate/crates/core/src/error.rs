use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("vector has no nonzero amplitude")]
    ZeroVector,

    #[error("squeezing modulus {r} lies outside the unit disc")]
    RadiusViolation { r: f64 },

    #[error("⟨K₀⟩ vanishes, the moment ratio is undefined")]
    UndefinedMoment,

    #[error("A₃ is undefined: det μ⁽³⁾ - det m⁽³⁾ = {denominator:e}")]
    UndefinedA3 { denominator: f64 },

    #[error("s = {s} is not below 1")]
    SParameterOutOfRange { s: f64 },

    #[error("expectation value expected to be real has imaginary part {residue:e}")]
    ImaginaryResidue { residue: f64 },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),
}
