//! Independent oracles shared by the integration and acceptance tests.
#![allow(dead_code)]

use std::f64::consts::{FRAC_PI_4, PI};

use catwva::protocol::success_probability;
use catwva::specfun::{binomial, spherical_harmonic, wigner_3j, SphericalIndex, ThreeJArgs};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub fn big_factorial(n: i64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Racah formula in exact rationals: returns `sign * sqrt(R) * S` as f64.
pub fn exact_3j(two_j: [i64; 3], two_m: [i64; 3]) -> f64 {
    let [j1, j2, j3] = two_j;
    let [m1, m2, m3] = two_m;
    if m1 + m2 + m3 != 0 || (j1 - j2).abs() > j3 || j3 > j1 + j2 || (j1 + j2 + j3) % 2 != 0 {
        return 0.0;
    }
    let f = |t: i64| {
        assert!(t % 2 == 0 && t >= 0);
        big_factorial(t / 2)
    };
    let num = f(j1 + j2 - j3) * f(j1 - j2 + j3) * f(-j1 + j2 + j3)
        * f(j1 + m1) * f(j1 - m1) * f(j2 + m2) * f(j2 - m2) * f(j3 + m3) * f(j3 - m3);
    let r = BigRational::new(num, f(j1 + j2 + j3 + 2));

    let mut s = BigRational::zero();
    for k in 0i64..=200 {
        let parts = [
            k,
            (j3 - j2 + m1) / 2 + k,
            (j3 - j1 - m2) / 2 + k,
            (j1 + j2 - j3) / 2 - k,
            (j1 - m1) / 2 - k,
            (j2 + m2) / 2 - k,
        ];
        if parts.iter().any(|&p| p < 0) {
            continue;
        }
        let den = parts.iter().fold(BigInt::one(), |acc, &p| acc * big_factorial(p));
        let term = BigRational::new(BigInt::one(), den);
        if k % 2 == 0 {
            s += term;
        } else {
            s -= term;
        }
    }
    let sq = (r * &s * &s).to_f64().unwrap();
    let phase = if ((j1 - j2 - m3) / 2).rem_euclid(2) == 0 { 1.0 } else { -1.0 };
    let s_sign = if s.is_negative() { -1.0 } else { 1.0 };
    phase * s_sign * sq.sqrt()
}


/// Integer coefficients (ascending powers) of `d^{K+Q}/dx^{K+Q} (x^2 - 1)^K`.
pub fn rodrigues_coefficients(k: u32, q: u32) -> Vec<BigInt> {
    let k = k as usize;
    let mut c = vec![BigInt::zero(); 2 * k + 1];
    for i in 0..=k {
        let b = big_factorial(k as i64) / (big_factorial(i as i64) * big_factorial((k - i) as i64));
        c[2 * i] = if (k - i) % 2 == 0 { b } else { -b };
    }
    for _ in 0..(k + q as usize) {
        c = c.iter().enumerate().skip(1).map(|(p, v)| v * BigInt::from(p)).collect();
    }
    c
}

/// `Pbar_K^Q(cos alpha)` (with Condon-Shortley phase and `1/sqrt(4pi)`) via
/// exact Rodrigues coefficients.
pub fn rodrigues_normalized(k: u32, q: u32, alpha: f64) -> f64 {
    let coeffs: Vec<f64> = rodrigues_coefficients(k, q)
        .iter()
        .map(|c| BigRational::from(c.clone()).to_f64().unwrap())
        .collect();
    // (K-Q)!/(K+Q)! and 1/(2^K K!) folded into one exact rational.
    let scale = BigRational::new(
        big_factorial((k - q) as i64),
        big_factorial((k + q) as i64) * big_factorial(k as i64).pow(2) * BigInt::from(4).pow(k),
    );
    let norm = ((2 * k + 1) as f64 * scale.to_f64().unwrap() / (4.0 * PI)).sqrt();
    let (s, x) = alpha.sin_cos();
    let poly = coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c);
    let cs = if q % 2 == 0 { 1.0 } else { -1.0 };
    cs * norm * s.powi(q as i32) * poly
}

/// Expanded triple sum for the equatorial cat state,
/// `W = N^-2 2^{-(2j+1)} sqrt((2j+1)/4pi) sum_KQ sum_m' [...] Y_KQ`, built from
/// binomial weights and explicit branch phases rather than from the state
/// vector. The inner `m'` sums do not depend on the angles and are tabulated
/// once. With `literal = false` the azimuthal phases follow the Dicke expansion
/// `e^{-i(j+m)phi}`; with `literal = true` the two single-branch terms carry
/// the opposite sign of `Q Omega`.
pub struct ExpandedCatWigner {
    two_j: u32,
    /// `(K, Q, inner sum)`.
    terms: Vec<(u32, i32, Complex64)>,
    prefactor: f64,
}

impl ExpandedCatWigner {
    pub fn new(two_j: u32, omega: f64, gamma: f64, literal: bool) -> Self {
        let n = two_j as i64;
        let (s, c) = (gamma - FRAC_PI_4).sin_cos();
        let c2g = (2.0 * gamma).cos();
        let sign_q = if literal { 1.0 } else { -1.0 };
        let mut terms = Vec::new();
        for k in 0..=two_j {
            for q in -(k as i64)..=(k as i64) {
                let mut inner = Complex64::new(0.0, 0.0);
                for i in 0..=n {
                    // i = j + m'
                    let i_lower = i - q;
                    if !(0..=n).contains(&i_lower) {
                        continue;
                    }
                    let two_mp = 2 * i - n;
                    let tj = wigner_3j(ThreeJArgs::doubled([n, 2 * k as i64, n], [-two_mp, 2 * q, two_mp - 2 * q]))
                        .unwrap();
                    if tj == 0.0 {
                        continue;
                    }
                    let mp = two_mp as f64 / 2.0;
                    let parity = if ((n - two_mp) / 2) % 2 == 0 { 1.0 } else { -1.0 };
                    let weight = (binomial(n as u64, i) * binomial(n as u64, i_lower)).sqrt()
                        * parity
                        * (2.0 * k as f64 + 1.0).sqrt()
                        * tj;
                    let qo = q as f64 * omega;
                    let bracket = Complex64::from_polar(s * s, sign_q * qo)
                        + Complex64::from_polar(c * c, -sign_q * qo)
                        - c2g * ((2.0 * mp - q as f64) * omega).cos();
                    inner += bracket * weight;
                }
                terms.push((k, q as i32, inner));
            }
        }
        let norm_sq = success_probability(two_j, omega, gamma);
        let prefactor = 0.5f64.powi(two_j as i32 + 1) * ((two_j as f64 + 1.0) / (4.0 * PI)).sqrt() / norm_sq;
        Self { two_j, terms, prefactor }
    }

    pub fn two_j(&self) -> u32 {
        self.two_j
    }

    pub fn at(&self, alpha: f64, beta: f64) -> f64 {
        let total: Complex64 = self
            .terms
            .iter()
            .map(|&(k, q, inner)| inner * spherical_harmonic(SphericalIndex::new(k, q, alpha, beta)).unwrap())
            .sum();
        total.re * self.prefactor
    }
}
