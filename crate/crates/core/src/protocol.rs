//! Pre-selection, entangling evolution and post-selection of the single-photon
//! polarization, producing the heralded atomic cat state.

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::spin_core::{coherent_state, rotate_phase, BlochAngles, DickeVector, SpinJ};

/// `|u|^2` below this is treated as an exactly vanishing post-selection.
pub const ZERO_POSTSELECTION: f64 = 1e-300;

/// Photon polarization `c+ |1+,0-> + c- |0+,1->`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldState {
    pub c_plus: Complex64,
    pub c_minus: Complex64,
}

impl FieldState {
    pub fn new(c_plus: Complex64, c_minus: Complex64) -> Result<Self> {
        let n = c_plus.norm_sqr() + c_minus.norm_sqr();
        if (n - 1.0).abs() > 1e-12 {
            return Err(Error::FieldNotNormalized(n));
        }
        Ok(Self { c_plus, c_minus })
    }

    /// Linear x polarization, `c+ = c- = 1/sqrt(2)`.
    pub fn x_polarized() -> Self {
        let c = Complex64::new(FRAC_1_SQRT_2, 0.0);
        Self { c_plus: c, c_minus: c }
    }

    /// Post-selected polarization `sin(gamma - pi/4) |1+,0-> + cos(gamma - pi/4) |0+,1->`.
    pub fn postselected(gamma: f64) -> Self {
        // Expanded so that gamma = 0 gives exactly (-1, 1)/sqrt(2), orthogonal
        // to the x-polarized pre-selection in floating point as well.
        let (sg, cg) = gamma.sin_cos();
        let s = FRAC_1_SQRT_2 * (sg - cg);
        let c = FRAC_1_SQRT_2 * (sg + cg);
        Self { c_plus: Complex64::new(s, 0.0), c_minus: Complex64::new(c, 0.0) }
    }

    /// `<self|other>`.
    pub fn overlap(&self, other: &FieldState) -> Complex64 {
        self.c_plus.conj() * other.c_plus + self.c_minus.conj() * other.c_minus
    }
}

/// Everything needed to build the heralded cat state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProtocolParams {
    pub spin: SpinJ,
    /// Angles of the prepared coherent state.
    pub prep: BlochAngles,
    /// Accumulated interaction phase `Omega`.
    pub omega: f64,
    /// Post-selection angle.
    pub gamma: f64,
}

impl ProtocolParams {
    pub fn new(spin: SpinJ, prep: BlochAngles, omega: f64, gamma: f64) -> Result<Self> {
        if !(omega > -PI && omega <= PI) {
            return Err(Error::InvalidParameter(format!("omega = {omega} outside (-pi, pi]")));
        }
        if !gamma.is_finite() {
            return Err(Error::InvalidParameter(format!("gamma = {gamma} is not finite")));
        }
        Ok(Self { spin, prep, omega, gamma })
    }

    /// `N` atoms prepared in the equatorial state `|pi/2, 0>`.
    pub fn equatorial(n_atoms: u32, omega: f64, gamma: f64) -> Result<Self> {
        Self::new(SpinJ::from_atoms(n_atoms)?, BlochAngles::equator(0.0), omega, gamma)
    }

    pub fn with_omega(&self, omega: f64) -> Result<Self> {
        Self::new(self.spin, self.prep, omega, self.gamma)
    }

    pub fn with_gamma(&self, gamma: f64) -> Result<Self> {
        Self::new(self.spin, self.prep, self.omega, gamma)
    }
}

/// Joint atom-photon state after the interaction, resolved on the photon basis.
#[derive(Debug, Clone, PartialEq)]
pub struct EntangledState {
    /// Atomic amplitude attached to `|1+,0->`.
    pub branch_plus: DickeVector,
    /// Atomic amplitude attached to `|0+,1->`.
    pub branch_minus: DickeVector,
}

impl EntangledState {
    pub fn norm_sq(&self) -> f64 {
        self.branch_plus.norm_sq() + self.branch_minus.norm_sq()
    }
}

/// Normalized heralded atomic state.
#[derive(Debug, Clone, PartialEq)]
pub struct CatState {
    pub vector: DickeVector,
    /// `|<Psi_ph|Psi_at-f>|^2` before normalization.
    pub norm_sq: f64,
    /// Probability that the post-selection succeeds; equal to `norm_sq`.
    pub success_prob: f64,
}

/// Apply `exp(-i Omega N_z J_z)` to `|theta,phi> (c+|1+,0-> + c-|0+,1->)`.
///
/// The branches come out as `c+ e^{ij Omega} |theta, phi+Omega>` and
/// `c- e^{-ij Omega} |theta, phi-Omega>`.
pub fn evolve(params: &ProtocolParams, field: &FieldState) -> EntangledState {
    let prepared = coherent_state(params.spin, params.prep);
    EntangledState {
        branch_plus: rotate_phase(&prepared, params.omega).scaled(field.c_plus),
        branch_minus: rotate_phase(&prepared, -params.omega).scaled(field.c_minus),
    }
}

/// Project the photon onto the post-selected polarization at angle `gamma`.
pub fn postselect(state: &EntangledState, gamma: f64) -> Result<CatState> {
    let post = FieldState::postselected(gamma);
    let u = state
        .branch_plus
        .scaled(post.c_plus.conj())
        .add_scaled(post.c_minus.conj(), &state.branch_minus)?;
    let norm_sq = u.norm_sq();
    if !(norm_sq >= ZERO_POSTSELECTION) {
        return Err(Error::ZeroPostselection(norm_sq));
    }
    let vector = u.scaled(Complex64::new(1.0 / norm_sq.sqrt(), 0.0));
    Ok(CatState { vector, norm_sq, success_prob: norm_sq })
}

/// Cat state for an x-polarized pre-selected photon.
pub fn cat_state(params: &ProtocolParams) -> Result<CatState> {
    postselect(&evolve(params, &FieldState::x_polarized()), params.gamma)
}

/// `p = [1 - cos(2 gamma) cos^N(Omega)] / 2` for the equatorial preparation.
pub fn success_probability(n_atoms: u32, omega: f64, gamma: f64) -> f64 {
    0.5 * (1.0 - (2.0 * gamma).cos() * omega.cos().powi(n_atoms as i32))
}

/// Closed-form normalization `N^2` for an x-polarized photon and arbitrary
/// preparation angle `theta`:
/// `1/2 [sum_m w_m - cos(2 gamma) sum_m w_m cos(2 m Omega)]` with
/// `w_m = C(2j, j+m) sin^{2(j+m)}(theta/2) cos^{2(j-m)}(theta/2)`.
pub fn norm_sq_closed_form(params: &ProtocolParams) -> f64 {
    let spin = params.spin;
    let n = spin.two_j();
    let (s, c) = (params.prep.theta / 2.0).sin_cos();
    let (mut direct, mut interference) = (0.0, 0.0);
    for k in 0..=n {
        let w = crate::specfun::binomial(n as u64, k as i64)
            * s.powi(2 * k as i32)
            * c.powi(2 * (n - k) as i32);
        direct += w;
        interference += w * (2.0 * spin.m(k as usize) * params.omega).cos();
    }
    0.5 * (direct - (2.0 * params.gamma).cos() * interference)
}
