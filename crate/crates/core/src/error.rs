use thiserror::Error;

/// Errors raised by the numerical routines of this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid angular momentum: 2j={two_j}, 2m={two_m}")]
    InvalidAngularMomentum { two_j: i64, two_m: i64 },

    #[error("invalid spherical-harmonic order: K={degree}, Q={order}")]
    InvalidOrder { degree: i64, order: i64 },

    #[error("spin dimensions differ: 2j={left} vs 2j={right}")]
    SpinMismatch { left: u32, right: u32 },

    #[error("invalid spin: 2j must be at least 1")]
    InvalidSpin,

    #[error("post-selection probability vanishes (|u|^2 = {0:e})")]
    ZeroPostselection(f64),

    #[error("state is not normalized (|psi|^2 = {0})")]
    NotNormalized(f64),

    #[error("grid too coarse: need n_alpha >= {min_alpha} and n_beta >= {min_beta}, got {n_alpha} x {n_beta}")]
    GridTooCoarse {
        n_alpha: usize,
        n_beta: usize,
        min_alpha: usize,
        min_beta: usize,
    },

    #[error("no interior local maximum of P(phi) in [{lo}, {hi}]")]
    NoPeak { lo: f64, hi: f64 },

    #[error("weak value diverges: pre- and post-selected states are orthogonal (gamma = {0})")]
    DivergentWeakValue(f64),

    #[error("success probability is degenerate (p = {0}); classical Fisher information undefined")]
    DegenerateBernoulli(f64),

    #[error("field amplitudes are not normalized (|c+|^2 + |c-|^2 = {0})")]
    FieldNotNormalized(f64),

    #[error("information bound violated: {what} = {value} exceeds N = {n}")]
    InformationBound {
        what: &'static str,
        value: f64,
        n: u32,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
