//! Quantum Fisher information of the joint and post-selected states, and the
//! classical Fisher information carried by the post-selection statistics.
//!
//! Closed forms are paired with vector-based evaluations: the analytic
//! derivative `d/dOmega` of each branch is `-/+ i J_z` applied to it, so the
//! state derivative is exact. [`numeric`] holds central-difference versions that
//! share nothing with either route beyond state construction.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::protocol::{evolve, success_probability, FieldState, ProtocolParams, ZERO_POSTSELECTION};

/// `4 [<dpsi|dpsi> - |<psi|dpsi>|^2]` for a normalized `psi`.
pub fn pure_state_qfi(psi: &[Complex64], dpsi: &[Complex64]) -> f64 {
    let dd: f64 = dpsi.iter().map(|d| d.norm_sqr()).sum();
    let pd: Complex64 = psi.iter().zip(dpsi).map(|(p, d)| p.conj() * d).sum();
    4.0 * (dd - pd.norm_sqr())
}

/// QFI of the unnormalized ray `u`:
/// `4 [<du|du>/|u|^2 - |<u|du>|^2/|u|^4]`.
pub fn ray_qfi(u: &[Complex64], du: &[Complex64]) -> f64 {
    let nn: f64 = u.iter().map(|x| x.norm_sqr()).sum();
    let dd: f64 = du.iter().map(|d| d.norm_sqr()).sum();
    let pd: Complex64 = u.iter().zip(du).map(|(p, d)| p.conj() * d).sum();
    4.0 * (dd / nn - pd.norm_sqr() / (nn * nn))
}

fn minus_i() -> Complex64 {
    Complex64::new(0.0, -1.0)
}

/// Joint atom-photon state and its exact `Omega` derivative, flattened as
/// `[branch_plus, branch_minus]`.
fn joint_with_derivative(params: &ProtocolParams, field: &FieldState) -> (Vec<Complex64>, Vec<Complex64>) {
    let ent = evolve(params, field);
    let d_plus = ent.branch_plus.apply_jz().scaled(minus_i());
    let d_minus = ent.branch_minus.apply_jz().scaled(-minus_i());
    let psi = [ent.branch_plus.amps(), ent.branch_minus.amps()].concat();
    let dpsi = [d_plus.amps(), d_minus.amps()].concat();
    (psi, dpsi)
}

/// QFI of the joint state for an arbitrary preparation and pre-selected field.
pub fn entangled_qfi(params: &ProtocolParams, field: &FieldState) -> f64 {
    let (psi, dpsi) = joint_with_derivative(params, field);
    pure_state_qfi(&psi, &dpsi)
}

/// `I_at-f = N` for the equatorial preparation and an x-polarized photon.
pub fn qfi_joint(n_atoms: u32) -> f64 {
    n_atoms as f64
}

/// QFI of the normalized cat state built from the explicit vectors.
pub fn cat_qfi(params: &ProtocolParams) -> Result<f64> {
    let (psi, dpsi) = joint_with_derivative(params, &FieldState::x_polarized());
    let post = FieldState::postselected(params.gamma);
    let half = psi.len() / 2;
    let project = |v: &[Complex64]| -> Vec<Complex64> {
        (0..half)
            .map(|i| post.c_plus.conj() * v[i] + post.c_minus.conj() * v[half + i])
            .collect()
    };
    let u = project(&psi);
    let du = project(&dpsi);
    let nn: f64 = u.iter().map(|x| x.norm_sqr()).sum();
    if !(nn > ZERO_POSTSELECTION) {
        return Err(Error::ZeroPostselection(nn));
    }
    Ok(ray_qfi(&u, &du))
}

/// Closed-form QFI of the post-selected state,
/// `(N/2p) [1 + cos2g cos^{N-2}W (1 - N sin^2 W) - (N/2p) cos^2 2g cos^{2N-2}W sin^2 W]`.
pub fn qfi_postselected(n_atoms: u32, omega: f64, gamma: f64) -> Result<f64> {
    let p = success_probability(n_atoms, omega, gamma);
    if !(p > ZERO_POSTSELECTION) {
        return Err(Error::ZeroPostselection(p));
    }
    let n = n_atoms as f64;
    let ni = n_atoms as i32;
    let c2 = (2.0 * gamma).cos();
    let (s, c) = omega.sin_cos();
    let a = 0.5 * n / p;
    Ok(a * (1.0 + c2 * c.powi(ni - 2) * (1.0 - n * s * s)
        - a * c2 * c2 * c.powi(2 * ni - 2) * s * s))
}

/// `F_p = N^2 cos^2 2g cos^{2N-2}W sin^2 W / (1 - cos^2 2g cos^{2N} W)`.
pub fn classical_fisher_post(n_atoms: u32, omega: f64, gamma: f64) -> Result<f64> {
    let p = success_probability(n_atoms, omega, gamma);
    if p <= 0.0 || p >= 1.0 {
        return Err(Error::DegenerateBernoulli(p));
    }
    let n = n_atoms as f64;
    let ni = n_atoms as i32;
    let c2 = (2.0 * gamma).cos();
    let (s, c) = omega.sin_cos();
    let denom = 1.0 - c2 * c2 * c.powi(2 * ni);
    Ok(n * n * c2 * c2 * c.powi(2 * ni - 2) * s * s / denom)
}

/// `(p I, F_p, p I + F_p, N)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InformationBudget {
    pub p_times_i: f64,
    pub f_post: f64,
    pub total: f64,
    pub joint: f64,
}

/// Slack allowed when checking that no channel exceeds the joint QFI.
pub const BUDGET_SLACK: f64 = 1e-9;

pub fn information_budget(n_atoms: u32, omega: f64, gamma: f64) -> Result<InformationBudget> {
    let p = success_probability(n_atoms, omega, gamma);
    if p <= 0.0 || p >= 1.0 {
        return Err(Error::DegenerateBernoulli(p));
    }
    let p_times_i = p * qfi_postselected(n_atoms, omega, gamma)?;
    let f_post = classical_fisher_post(n_atoms, omega, gamma)?;
    let joint = qfi_joint(n_atoms);
    if p_times_i > joint + BUDGET_SLACK {
        return Err(Error::InformationBound { what: "p*I", value: p_times_i, n: n_atoms });
    }
    if f_post > joint + BUDGET_SLACK {
        return Err(Error::InformationBound { what: "F_p", value: f_post, n: n_atoms });
    }
    Ok(InformationBudget { p_times_i, f_post, total: p_times_i + f_post, joint })
}

/// All Fisher quantities at one `(N, Omega, gamma)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FisherReport {
    pub n_atoms: u32,
    pub omega: f64,
    pub gamma: f64,
    pub i_joint: f64,
    pub i_postselected: f64,
    pub p: f64,
    pub f_post: f64,
}

pub fn fisher_report(n_atoms: u32, omega: f64, gamma: f64) -> Result<FisherReport> {
    Ok(FisherReport {
        n_atoms,
        omega,
        gamma,
        i_joint: qfi_joint(n_atoms),
        i_postselected: qfi_postselected(n_atoms, omega, gamma)?,
        p: success_probability(n_atoms, omega, gamma),
        f_post: classical_fisher_post(n_atoms, omega, gamma)?,
    })
}

/// Central-difference oracles.
pub mod numeric {
    use num_complex::Complex64;

    use super::pure_state_qfi;
    use crate::error::Result;
    use crate::protocol::{cat_state, evolve, FieldState, ProtocolParams};

    /// Step for state derivatives.
    pub const QFI_STEP: f64 = 1e-5;
    /// Step for `dp/dOmega`.
    pub const PROB_STEP: f64 = 1e-6;

    fn central(plus: &[Complex64], minus: &[Complex64], h: f64) -> Vec<Complex64> {
        plus.iter().zip(minus).map(|(a, b)| (a - b) / (2.0 * h)).collect()
    }

    fn joint(params: &ProtocolParams, field: &FieldState) -> Vec<Complex64> {
        let e = evolve(params, field);
        [e.branch_plus.amps(), e.branch_minus.amps()].concat()
    }

    /// QFI of the joint state with a finite-difference state derivative.
    pub fn entangled_qfi(params: &ProtocolParams, field: &FieldState, h: f64) -> Result<f64> {
        let psi = joint(params, field);
        let plus = joint(&params.with_omega(params.omega + h)?, field);
        let minus = joint(&params.with_omega(params.omega - h)?, field);
        Ok(pure_state_qfi(&psi, &central(&plus, &minus, h)))
    }

    /// QFI of the normalized cat vector with a finite-difference derivative.
    pub fn cat_qfi(params: &ProtocolParams, h: f64) -> Result<f64> {
        let psi = cat_state(params)?.vector;
        let plus = cat_state(&params.with_omega(params.omega + h)?)?.vector;
        let minus = cat_state(&params.with_omega(params.omega - h)?)?.vector;
        Ok(pure_state_qfi(psi.amps(), &central(plus.amps(), minus.amps(), h)))
    }

    /// Two-outcome Fisher information `(dp)^2/p + (d(1-p))^2/(1-p)` with `p`
    /// taken as the squared norm of the explicitly post-selected vector.
    pub fn classical_fisher(params: &ProtocolParams, h: f64) -> Result<f64> {
        let p = |o: f64| -> Result<f64> { Ok(cat_state(&params.with_omega(o)?)?.norm_sq) };
        let p0 = p(params.omega)?;
        let dp = (p(params.omega + h)? - p(params.omega - h)?) / (2.0 * h);
        Ok(dp * dp / p0 + dp * dp / (1.0 - p0))
    }
}
