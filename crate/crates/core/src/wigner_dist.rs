//! SU(2) Wigner quasiprobability of a pure spin-j state through its
//! state-multipole expansion
//! `W(alpha, beta) = sqrt((2j+1)/4pi) sum_KQ <T_KQ^dagger> Y_KQ(alpha, beta)`.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::quadrature::gauss_legendre;
use crate::specfun::{normalized_legendre_column, wigner_3j, ThreeJArgs};
use crate::spin_core::{DickeVector, SpinJ};

/// Tolerance on `|psi|^2 - 1` accepted by [`decompose`].
pub const NORMALIZATION_TOLERANCE: f64 = 1e-8;

/// `<j,m1| T_KQ |j,m2> = (-1)^{j-m1} sqrt(2K+1) (j K j; -m1 Q m2)`, with doubled
/// projections `two_m1`, `two_m2`.
pub fn multipole_matrix_element(spin: SpinJ, k: u32, q: i32, two_m1: i64, two_m2: i64) -> Result<f64> {
    let tj = spin.two_j() as i64;
    if q.unsigned_abs() > k {
        return Err(Error::InvalidOrder { degree: k as i64, order: q as i64 });
    }
    if k as i64 > tj {
        return Err(Error::InvalidParameter(format!("multipole rank K={k} exceeds 2j={tj}")));
    }
    let three_j = wigner_3j(ThreeJArgs::doubled([tj, 2 * k as i64, tj], [-two_m1, 2 * q as i64, two_m2]))?;
    if three_j == 0.0 {
        return Ok(0.0);
    }
    let sign = if ((tj - two_m1) / 2) % 2 == 0 { 1.0 } else { -1.0 };
    Ok(sign * (2.0 * k as f64 + 1.0).sqrt() * three_j)
}

/// Multipole moments `<psi| T_KQ^dagger |psi>`, `0 <= K <= 2j`, `|Q| <= K`.
#[derive(Debug, Clone, PartialEq)]
pub struct MultipoleDecomposition {
    spin: SpinJ,
    coeffs: Vec<Complex64>,
}

impl MultipoleDecomposition {
    pub fn spin(&self) -> SpinJ {
        self.spin
    }

    pub fn max_rank(&self) -> u32 {
        self.spin.two_j()
    }

    #[inline]
    fn slot(k: u32, q: i32) -> usize {
        (k * k) as usize + (q + k as i32) as usize
    }

    pub fn coeff(&self, k: u32, q: i32) -> Complex64 {
        assert!(k <= self.max_rank() && q.unsigned_abs() <= k, "multipole index out of range");
        self.coeffs[Self::slot(k, q)]
    }

    /// `sum_KQ |<T_KQ^dagger>|^2`, which equals `tr(rho^2)`.
    pub fn purity(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm_sqr()).sum()
    }

    /// Azimuthal Fourier components `g_Q(alpha) = sum_K <T_KQ^dagger> Pbar_KQ(cos alpha)`,
    /// indexed by `Q + 2j`.
    fn azimuthal_components(&self, alpha: f64) -> Vec<Complex64> {
        let kmax = self.max_rank();
        let width = 2 * kmax as usize + 1;
        let mut g = vec![Complex64::new(0.0, 0.0); width];
        for q in 0..=kmax {
            let column = normalized_legendre_column(kmax, q, alpha);
            let sign = if q % 2 == 0 { 1.0 } else { -1.0 };
            let (mut pos, mut neg) = (Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0));
            for (offset, plm) in column.iter().enumerate() {
                let k = q + offset as u32;
                pos += self.coeff(k, q as i32) * plm;
                if q > 0 {
                    // Pbar_{K,-Q} = (-1)^Q Pbar_{KQ}
                    neg += self.coeff(k, -(q as i32)) * (sign * plm);
                }
            }
            g[kmax as usize + q as usize] = pos;
            if q > 0 {
                g[kmax as usize - q as usize] = neg;
            }
        }
        g
    }
}

/// Multipole moments of a normalized pure state.
pub fn decompose(state: &DickeVector) -> Result<MultipoleDecomposition> {
    let norm = state.norm_sq();
    if (norm - 1.0).abs() > NORMALIZATION_TOLERANCE {
        return Err(Error::NotNormalized(norm));
    }
    let spin = state.spin();
    let kmax = spin.two_j();
    let amps = state.amps();
    let dim = spin.dim() as i64;

    let per_rank: Vec<Result<Vec<Complex64>>> = (0..=kmax)
        .into_par_iter()
        .map(|k| {
            let mut row = Vec::with_capacity(2 * k as usize + 1);
            for q in -(k as i32)..=(k as i32) {
                // <m1|T_KQ^dagger|m2> = <m2|T_KQ|m1>, nonzero for m1 = m2 - Q.
                let mut acc = Complex64::new(0.0, 0.0);
                for i2 in 0..dim {
                    let i1 = i2 - q as i64;
                    if !(0..dim).contains(&i1) {
                        continue;
                    }
                    let elem = multipole_matrix_element(spin, k, q, spin.two_m(i2 as usize), spin.two_m(i1 as usize))?;
                    acc += amps[i1 as usize].conj() * amps[i2 as usize] * elem;
                }
                row.push(acc);
            }
            Ok(row)
        })
        .collect();

    let mut coeffs = Vec::with_capacity(((kmax + 1) * (kmax + 1)) as usize);
    for row in per_rank {
        coeffs.extend(row?);
    }
    Ok(MultipoleDecomposition { spin, coeffs })
}

fn prefactor(spin: SpinJ) -> f64 {
    ((spin.two_j() as f64 + 1.0) / (4.0 * PI)).sqrt()
}

/// The assembled multipole sum before the imaginary residue is dropped.
pub fn wigner_at_complex(decomp: &MultipoleDecomposition, alpha: f64, beta: f64) -> Complex64 {
    let kmax = decomp.max_rank() as i32;
    let g = decomp.azimuthal_components(alpha);
    let sum: Complex64 = (-kmax..=kmax)
        .map(|q| g[(q + kmax) as usize] * Complex64::from_polar(1.0, q as f64 * beta))
        .sum();
    sum * prefactor(decomp.spin)
}

/// `W(alpha, beta)`; the imaginary part is a rounding residue and is discarded.
pub fn wigner_at(decomp: &MultipoleDecomposition, alpha: f64, beta: f64) -> f64 {
    wigner_at_complex(decomp, alpha, beta).re
}

/// `W` sampled on a Gauss-Legendre (in `cos alpha`) by uniform (in `beta`) grid.
#[derive(Debug, Clone, PartialEq)]
pub struct WignerField {
    /// Polar nodes, ascending in `alpha`.
    pub alphas: Vec<f64>,
    /// Gauss-Legendre weights for the `d(cos alpha)` measure.
    pub alpha_weights: Vec<f64>,
    pub betas: Vec<f64>,
    /// Row-major `alphas.len() x betas.len()`.
    pub values: Vec<f64>,
}

impl WignerField {
    pub fn n_alpha(&self) -> usize {
        self.alphas.len()
    }

    pub fn n_beta(&self) -> usize {
        self.betas.len()
    }

    pub fn value(&self, i_alpha: usize, i_beta: usize) -> f64 {
        self.values[i_alpha * self.n_beta() + i_beta]
    }

    fn beta_weight(&self) -> f64 {
        2.0 * PI / self.n_beta() as f64
    }

    /// Quadrature of `f(W) sin(alpha) dalpha dbeta`.
    fn integrate(&self, f: impl Fn(f64) -> f64) -> f64 {
        let nb = self.n_beta();
        self.alpha_weights
            .iter()
            .enumerate()
            .map(|(i, w)| w * self.values[i * nb..(i + 1) * nb].iter().map(|&v| f(v)).sum::<f64>())
            .sum::<f64>()
            * self.beta_weight()
    }

    /// `int W sin(alpha) dalpha dbeta`, exactly 1 for a normalized state.
    pub fn integral(&self) -> f64 {
        self.integrate(|w| w)
    }

    pub fn min(&self) -> f64 {
        self.values.iter().cloned().fold(f64::INFINITY, f64::min)
    }

    pub fn max(&self) -> f64 {
        self.values.iter().cloned().fold(f64::NEG_INFINITY, f64::max)
    }

    /// Iterator over `(alpha, beta, W)` in row-major order.
    pub fn triples(&self) -> impl Iterator<Item = (f64, f64, f64)> + '_ {
        let nb = self.n_beta();
        self.values
            .iter()
            .enumerate()
            .map(move |(idx, &w)| (self.alphas[idx / nb], self.betas[idx % nb], w))
    }
}

/// Minimum node counts that integrate the degree-`2j` harmonic content exactly.
pub fn minimum_grid(spin: SpinJ) -> (usize, usize) {
    let tj = spin.two_j() as usize;
    (tj + 2, 2 * tj + 2)
}

/// Sample `W` on `n_alpha x n_beta` nodes.
pub fn sample_grid(decomp: &MultipoleDecomposition, n_alpha: usize, n_beta: usize) -> Result<WignerField> {
    let (min_alpha, min_beta) = minimum_grid(decomp.spin);
    if n_alpha < min_alpha || n_beta < min_beta {
        return Err(Error::GridTooCoarse { n_alpha, n_beta, min_alpha, min_beta });
    }
    let (nodes, weights) = gauss_legendre(n_alpha);
    // Reverse so that alpha ascends while cos(alpha) descends.
    let alphas: Vec<f64> = nodes.iter().rev().map(|x| x.acos()).collect();
    let alpha_weights: Vec<f64> = weights.iter().rev().cloned().collect();
    let betas: Vec<f64> = (0..n_beta).map(|k| 2.0 * PI * k as f64 / n_beta as f64).collect();

    let kmax = decomp.max_rank() as i32;
    let pre = prefactor(decomp.spin);
    let phases: Vec<Vec<Complex64>> = betas
        .iter()
        .map(|&b| (-kmax..=kmax).map(|q| Complex64::from_polar(1.0, q as f64 * b)).collect())
        .collect();

    let values: Vec<f64> = alphas
        .par_iter()
        .flat_map_iter(|&alpha| {
            let g = decomp.azimuthal_components(alpha);
            phases
                .iter()
                .map(|ph| pre * g.iter().zip(ph).map(|(a, b)| (a * b).re).sum::<f64>())
                .collect::<Vec<_>>()
        })
        .collect();

    Ok(WignerField { alphas, alpha_weights, betas, values })
}

/// `int max(0, -W) sin(alpha) dalpha dbeta` over the grid.
pub fn negativity_volume(field: &WignerField) -> f64 {
    field.integrate(|w| (-w).max(0.0))
}
