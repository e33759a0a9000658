//! Dicke-basis spin-j states, atomic coherent states and azimuthal rotations.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::specfun::ln_binomial;

/// Spin quantum number, stored doubled: `two_j = N` for `N` two-level atoms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SpinJ {
    two_j: u32,
}

impl SpinJ {
    pub fn new(two_j: u32) -> Result<Self> {
        if two_j == 0 {
            return Err(Error::InvalidSpin);
        }
        Ok(Self { two_j })
    }

    /// Collective spin of `n_atoms` two-level atoms, `j = N/2`.
    pub fn from_atoms(n_atoms: u32) -> Result<Self> {
        Self::new(n_atoms)
    }

    pub fn two_j(self) -> u32 {
        self.two_j
    }

    pub fn atoms(self) -> u32 {
        self.two_j
    }

    pub fn j(self) -> f64 {
        self.two_j as f64 / 2.0
    }

    /// Hilbert-space dimension `2j + 1`.
    pub fn dim(self) -> usize {
        self.two_j as usize + 1
    }

    /// Doubled projection `2m` of basis index `i` (`m = -j + i`).
    pub fn two_m(self, index: usize) -> i64 {
        2 * index as i64 - self.two_j as i64
    }

    pub fn m(self, index: usize) -> f64 {
        self.two_m(index) as f64 / 2.0
    }
}

/// Bloch-sphere angles of a coherent state. `phi` is kept unreduced.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochAngles {
    pub theta: f64,
    pub phi: f64,
}

impl BlochAngles {
    pub fn new(theta: f64, phi: f64) -> Result<Self> {
        if !(0.0..=PI).contains(&theta) || !phi.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "Bloch angles out of range: theta={theta}, phi={phi}"
            )));
        }
        Ok(Self { theta, phi })
    }

    /// The equatorial point `(pi/2, phi)`.
    pub fn equator(phi: f64) -> Self {
        Self { theta: PI / 2.0, phi }
    }

    pub fn reduced_phi(&self) -> f64 {
        self.phi.rem_euclid(2.0 * PI)
    }
}

/// Amplitudes over `|j, m>`, `m = -j ..= j`; index `i` holds `m = -j + i`.
#[derive(Debug, Clone, PartialEq)]
pub struct DickeVector {
    spin: SpinJ,
    amps: Vec<Complex64>,
}

impl DickeVector {
    pub fn new(spin: SpinJ, amps: Vec<Complex64>) -> Result<Self> {
        if amps.len() != spin.dim() {
            return Err(Error::InvalidParameter(format!(
                "expected {} amplitudes for 2j={}, got {}",
                spin.dim(),
                spin.two_j(),
                amps.len()
            )));
        }
        Ok(Self { spin, amps })
    }

    pub fn zeros(spin: SpinJ) -> Self {
        Self { spin, amps: vec![Complex64::new(0.0, 0.0); spin.dim()] }
    }

    /// The Dicke state with basis index `index` (`m = -j + index`).
    pub fn basis(spin: SpinJ, index: usize) -> Self {
        let mut v = Self::zeros(spin);
        v.amps[index] = Complex64::new(1.0, 0.0);
        v
    }

    pub fn spin(&self) -> SpinJ {
        self.spin
    }

    pub fn amps(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn norm_sq(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    pub fn scaled(&self, factor: Complex64) -> Self {
        Self { spin: self.spin, amps: self.amps.iter().map(|a| a * factor).collect() }
    }

    /// `self + factor * other`.
    pub fn add_scaled(&self, factor: Complex64, other: &DickeVector) -> Result<Self> {
        check_same_spin(self, other)?;
        let amps = self.amps.iter().zip(&other.amps).map(|(a, b)| a + factor * b).collect();
        Ok(Self { spin: self.spin, amps })
    }

    /// `J_z |v>`.
    pub fn apply_jz(&self) -> Self {
        let amps = self
            .amps
            .iter()
            .enumerate()
            .map(|(i, a)| a * self.spin.m(i))
            .collect();
        Self { spin: self.spin, amps }
    }
}

fn check_same_spin(a: &DickeVector, b: &DickeVector) -> Result<()> {
    if a.spin != b.spin {
        return Err(Error::SpinMismatch { left: a.spin.two_j(), right: b.spin.two_j() });
    }
    Ok(())
}

/// Atomic coherent state `|theta, phi>` in the Dicke basis:
/// `C(2j, j+m)^{1/2} sin^{j+m}(theta/2) cos^{j-m}(theta/2) e^{-i(j+m)phi}`.
pub fn coherent_state(spin: SpinJ, angles: BlochAngles) -> DickeVector {
    let n = spin.two_j();
    if angles.theta == 0.0 {
        return DickeVector::basis(spin, 0);
    }
    if angles.theta == PI {
        return DickeVector::basis(spin, n as usize)
            .scaled(Complex64::from_polar(1.0, -(n as f64) * angles.phi));
    }
    let (s, c) = (angles.theta / 2.0).sin_cos();
    let (ln_s, ln_c) = (s.ln(), c.ln());
    let amps = (0..=n)
        .map(|k| {
            let kf = k as f64;
            let ln_mag = 0.5 * ln_binomial(n as u64, k as i64) + kf * ln_s + (n - k) as f64 * ln_c;
            Complex64::from_polar(ln_mag.exp(), -kf * angles.phi)
        })
        .collect();
    DickeVector { spin, amps }
}

/// `<a|b> = sum_m conj(a_m) b_m`.
pub fn inner_product(a: &DickeVector, b: &DickeVector) -> Result<Complex64> {
    check_same_spin(a, b)?;
    Ok(a.amps.iter().zip(&b.amps).map(|(x, y)| x.conj() * y).sum())
}

/// `|<theta,phi|theta',phi'>|^2 = (cos^2(Theta/2))^{2j}`, `Theta` the angle between
/// the two Bloch directions.
///
/// `cos^2(Theta/2)` is evaluated as `|cc' + ss' e^{i(phi-phi')}|^2` with half-angle
/// sines and cosines, which equals `(1 + cos Theta)/2` and stays accurate near
/// antipodal pairs.
pub fn overlap_law(spin: SpinJ, a: BlochAngles, b: BlochAngles) -> f64 {
    let (sa, ca) = (a.theta / 2.0).sin_cos();
    let (sb, cb) = (b.theta / 2.0).sin_cos();
    let half = Complex64::new(ca * cb, 0.0) + Complex64::from_polar(sa * sb, a.phi - b.phi);
    half.norm_sqr().powi(spin.two_j() as i32)
}

/// `e^{-i delta J_z}`: multiplies each amplitude by `e^{-i m delta}`.
pub fn rotate_phase(v: &DickeVector, delta_phi: f64) -> DickeVector {
    let amps = v
        .amps
        .iter()
        .enumerate()
        .map(|(i, a)| a * Complex64::from_polar(1.0, -v.spin.m(i) * delta_phi))
        .collect();
    DickeVector { spin: v.spin, amps }
}
