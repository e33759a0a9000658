//! Phase distribution `P(phi) = |<pi/2, phi|Psi_cat>|^2`, its peaks, and the
//! weak-value (linear-response) model of the peak shift.

use std::f64::consts::FRAC_PI_2;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::optimize::golden_section_max;
use crate::protocol::{cat_state, success_probability, CatState, FieldState, ProtocolParams};
use crate::specfun::binomial;
use crate::spin_core::{coherent_state, inner_product, BlochAngles, SpinJ};

pub const DEFAULT_WINDOW: (f64, f64) = (-FRAC_PI_2, FRAC_PI_2);
pub const DEFAULT_COARSE_NODES: usize = 20_001;
/// Bracket width at which golden-section refinement stops.
pub const PEAK_TOLERANCE: f64 = 1e-10;

/// `f(phi) = sum_m C(2j, j+m) e^{i m phi}`, which is real.
pub fn f_kernel(spin: SpinJ, phi: f64) -> f64 {
    let n = spin.two_j();
    let sum: Complex64 = (0..=n)
        .map(|k| Complex64::from_polar(binomial(n as u64, k as i64), spin.m(k as usize) * phi))
        .sum();
    sum.re
}

/// The cat state of an equatorial preparation together with the data needed to
/// evaluate `P(phi)` along three independent routes.
#[derive(Debug, Clone)]
pub struct PhaseDistribution {
    params: ProtocolParams,
    cat: CatState,
    /// `sin(gamma - pi/4)`, `cos(gamma - pi/4)`.
    weights: (f64, f64),
    closed_norm_sq: f64,
}

impl PhaseDistribution {
    pub fn new(params: ProtocolParams) -> Result<Self> {
        if (params.prep.theta - FRAC_PI_2).abs() > 1e-12 {
            return Err(Error::InvalidParameter(format!(
                "phase distribution needs an equatorial preparation, got theta = {}",
                params.prep.theta
            )));
        }
        let cat = cat_state(&params)?;
        let post = FieldState::postselected(params.gamma);
        Ok(Self {
            params,
            cat,
            weights: (post.c_plus.re, post.c_minus.re),
            closed_norm_sq: success_probability(params.spin.atoms(), params.omega, params.gamma),
        })
    }

    pub fn params(&self) -> &ProtocolParams {
        &self.params
    }

    pub fn cat(&self) -> &CatState {
        &self.cat
    }

    /// `|<pi/2, phi|Psi_cat>|^2` from the explicit state vector.
    pub fn density(&self, phi: f64) -> f64 {
        let probe = coherent_state(self.params.spin, BlochAngles::equator(phi));
        inner_product(&probe, &self.cat.vector)
            .expect("probe shares the cat spin")
            .norm_sqr()
    }

    /// `[s cos^{2j}((phi-Omega)/2) + c cos^{2j}((phi+Omega)/2)]^2 / (2 N^2)`.
    pub fn density_closed_form(&self, phi: f64) -> f64 {
        let n = self.params.spin.two_j() as i32;
        let (s, c) = self.weights;
        let x = phi - self.params.prep.phi;
        let om = self.params.omega;
        let d = s * ((x - om) / 2.0).cos().powi(n) + c * ((x + om) / 2.0).cos().powi(n);
        d * d / (2.0 * self.closed_norm_sq)
    }

    /// Double binomial sum
    /// `|sum_m C(2j,j+m) e^{i(j+m)phi} (s e^{-im Omega} + c e^{im Omega})|^2 / (N^2 2^{4j+1})`.
    pub fn density_binomial_sum(&self, phi: f64) -> f64 {
        let spin = self.params.spin;
        let n = spin.two_j();
        let (s, c) = self.weights;
        let x = phi - self.params.prep.phi;
        let om = self.params.omega;
        let sum: Complex64 = (0..=n)
            .map(|k| {
                let m = spin.m(k as usize);
                let b = binomial(n as u64, k as i64);
                Complex64::from_polar(b, k as f64 * x)
                    * (Complex64::from_polar(s, -m * om) + Complex64::from_polar(c, m * om))
            })
            .sum();
        sum.norm_sqr() / (self.closed_norm_sq * 2f64.powi(2 * n as i32 + 1))
    }
}

/// `P(phi)` for the cat state built from `params`.
pub fn phase_density(params: &ProtocolParams, phi: f64) -> Result<f64> {
    Ok(PhaseDistribution::new(*params)?.density(phi))
}

/// `P(phi)` sampled on a uniform grid.
#[derive(Debug, Clone, PartialEq)]
pub struct PhaseProfile {
    pub phis: Vec<f64>,
    pub values: Vec<f64>,
    pub params: ProtocolParams,
}

pub fn phase_profile(params: &ProtocolParams, window: (f64, f64), n: usize) -> Result<PhaseProfile> {
    if n < 2 || !(window.0 < window.1) {
        return Err(Error::InvalidParameter(format!("bad phase grid: n={n}, window={window:?}")));
    }
    let dist = PhaseDistribution::new(*params)?;
    let phis = linspace(window.0, window.1, n);
    let values = phis.iter().map(|&p| dist.density(p)).collect();
    Ok(PhaseProfile { phis, values, params: *params })
}

fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let step = (hi - lo) / (n - 1) as f64;
    (0..n).map(|i| if i == n - 1 { hi } else { lo + step * i as f64 }).collect()
}

/// Peak structure of `P(phi)` inside a window.
#[derive(Debug, Clone, PartialEq)]
pub struct PeakReport {
    /// Location of the leftmost local maximum.
    pub left_peak_phi: f64,
    /// `|left_peak_phi| / |Omega|`.
    pub scaled_shift: f64,
    pub n_peaks: usize,
    /// `P` has a local minimum at `phi = 0`.
    pub dip_at_zero: bool,
    /// All refined maxima, ascending.
    pub peaks: Vec<f64>,
}

/// Coarse scan for local maxima followed by golden-section refinement on the
/// closed form.
pub fn find_peaks(params: &ProtocolParams, window: (f64, f64), n_coarse: usize) -> Result<PeakReport> {
    if params.omega == 0.0 {
        return Err(Error::InvalidParameter("peak shift needs omega != 0".into()));
    }
    if n_coarse < 3 || !(window.0 < window.1) {
        return Err(Error::InvalidParameter(format!(
            "bad peak search grid: n={n_coarse}, window={window:?}"
        )));
    }
    let dist = PhaseDistribution::new(*params)?;
    let p = |x: f64| dist.density_closed_form(x);
    let phis = linspace(window.0, window.1, n_coarse);
    let vals: Vec<f64> = phis.iter().map(|&x| p(x)).collect();

    let peaks: Vec<f64> = (1..n_coarse - 1)
        .filter(|&i| vals[i] > vals[i - 1] && vals[i] >= vals[i + 1])
        .map(|i| golden_section_max(p, phis[i - 1], phis[i + 1], PEAK_TOLERANCE))
        .collect();
    let Some(&left) = peaks.first() else {
        return Err(Error::NoPeak { lo: window.0, hi: window.1 });
    };

    let h = (window.1 - window.0) / (n_coarse - 1) as f64;
    let dip_at_zero = window.0 < 0.0 && window.1 > 0.0 && {
        let p0 = p(0.0);
        p0 < p(-h) && p0 < p(h)
    };

    Ok(PeakReport {
        left_peak_phi: left,
        scaled_shift: left.abs() / params.omega.abs(),
        n_peaks: peaks.len(),
        dip_at_zero,
        peaks,
    })
}

/// Weak value `A = cot(gamma)` of the photon Stokes operator, with the operator
/// form `-<Psi_f|S|Psi_ph> / <Psi_f|Psi_ph>` evaluated alongside.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeakValueModel {
    pub a: f64,
    pub a_operator: f64,
}

impl WeakValueModel {
    /// Linear-response peak location `-A Omega`.
    pub fn predicted_shift(&self, omega: f64) -> f64 {
        -self.a * omega
    }
}

/// `S = |1+,0-><1+,0-| - |0+,1-><0+,1-|` applied to a polarization state.
fn stokes(field: &FieldState) -> FieldState {
    FieldState { c_plus: field.c_plus, c_minus: -field.c_minus }
}

pub fn weak_value(gamma: f64) -> Result<WeakValueModel> {
    let pre = FieldState::x_polarized();
    let post = FieldState::postselected(gamma);
    // <Psi_f|Psi_ph> = sin(gamma); rounding keeps it ~1e-16 at gamma = 0.
    if gamma.sin().abs() < 1e-12 {
        return Err(Error::DivergentWeakValue(gamma));
    }
    let a_operator = -(pre.overlap(&stokes(&post)) / pre.overlap(&post)).re;
    Ok(WeakValueModel { a: 1.0 / gamma.tan(), a_operator })
}

/// Peak location from the full distribution against the weak-value prediction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TaylorCheck {
    pub true_shift: f64,
    pub predicted_shift: f64,
    /// `|true - predicted| / |predicted|`; normalized by `|Omega|` instead when
    /// the prediction vanishes.
    pub relative_error: f64,
}

pub fn taylor_shift_check(params: &ProtocolParams) -> Result<TaylorCheck> {
    if params.omega == 0.0 || !(params.gamma > 0.0 && params.gamma <= FRAC_PI_2) {
        return Err(Error::InvalidParameter(format!(
            "taylor check needs omega != 0 and gamma in (0, pi/2], got omega={}, gamma={}",
            params.omega, params.gamma
        )));
    }
    let report = find_peaks(params, DEFAULT_WINDOW, DEFAULT_COARSE_NODES)?;
    let model = weak_value(params.gamma)?;
    let predicted = model.predicted_shift(params.omega);
    let diff = (report.left_peak_phi - predicted).abs();
    let scale = if model.a.abs() < 1e-12 { params.omega.abs() } else { predicted.abs() };
    Ok(TaylorCheck {
        true_shift: report.left_peak_phi,
        predicted_shift: predicted,
        relative_error: diff / scale,
    })
}
