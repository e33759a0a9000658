//! Weak-value amplification of atomic spin-j cat states.
//!
//! A spin coherent state is entangled with a single photon through a
//! dispersive Faraday-type phase `Omega`; post-selecting the photon at angle
//! `gamma` heralds a superposition of two coherent states. This crate builds
//! those states, evaluates their SU(2) Wigner function and equatorial phase
//! distribution, and computes the Fisher information of the protocol.

pub mod error;
pub mod fisher_info;
pub mod optimize;
pub mod phase_dist;
pub mod protocol;
pub mod quadrature;
pub mod specfun;
pub mod spin_core;
pub mod wigner_dist;

pub use error::{Error, Result};
pub use protocol::{cat_state, FieldState, ProtocolParams};
pub use spin_core::{coherent_state, BlochAngles, DickeVector, SpinJ};

/// Crate version, recorded in emitted data headers.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
