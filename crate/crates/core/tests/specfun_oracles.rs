use std::f64::consts::PI;

use catwva::quadrature::gauss_legendre;
use catwva::specfun::{
    binomial, ln_binomial, log_factorial, normalized_legendre, spherical_harmonic, wigner_3j, LogFactorials,
    SphericalIndex, ThreeJArgs,
};
use catwva::Error;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use proptest::prelude::*;

mod common;
use common::{big_factorial, exact_3j, rodrigues_normalized};

fn all_valid_tuples(max_two_j: i64) -> Vec<([i64; 3], [i64; 3])> {
    let mut out = Vec::new();
    for a in 0..=max_two_j {
        for b in 0..=max_two_j {
            for c in 0..=max_two_j {
                for ma in (-a..=a).step_by(2) {
                    for mb in (-b..=b).step_by(2) {
                        for mc in (-c..=c).step_by(2) {
                            out.push(([a, b, c], [ma, mb, mc]));
                        }
                    }
                }
            }
        }
    }
    out
}

#[test]
fn log_factorial_matches_ln_gamma() {
    for n in [2u64, 5, 17, 100, 1000, 5000, 10000] {
        let expect = statrs::function::gamma::ln_gamma(n as f64 + 1.0);
        let got = log_factorial(n);
        assert!((got - expect).abs() <= 1e-13 * expect, "n={n}: {got} vs {expect}");
    }
}

#[test]
fn log_factorial_is_monotone_across_table_edge() {
    let table = LogFactorials::with_capacity(64);
    let mut prev = table.get(0);
    for n in 1..200 {
        let v = table.get(n);
        assert!(v >= prev, "n={n}");
        assert!((v - log_factorial(n)).abs() < 1e-12 * v.max(1.0));
        prev = v;
    }
}

#[test]
fn binomials_match_big_integers() {
    for n in [10u64, 50, 200, 1000, 2000] {
        for k in [0, 1, 3, n / 7, n / 3, n / 2, n - 1, n] {
            let exact = big_factorial(n as i64) / (big_factorial(k as i64) * big_factorial((n - k) as i64));
            let exact = BigRational::from(exact).to_f64().unwrap();
            let got = binomial(n, k as i64);
            if exact.is_finite() {
                assert!((got - exact).abs() <= 1e-12 * exact, "C({n},{k}) = {got} vs {exact}");
            } else {
                assert!(got.is_infinite());
            }
        }
    }
    assert_eq!(binomial(10, 5), 252.0);
    assert_eq!(binomial(10, -1), 0.0);
    assert_eq!(binomial(10, 11), 0.0);
    assert_eq!(binomial(0, 0), 1.0);
    assert_eq!(ln_binomial(4, 7), f64::NEG_INFINITY);
}

#[test]
fn three_j_reference_values() {
    let v = wigner_3j(ThreeJArgs::integer([1, 1, 0], [0, 0, 0])).unwrap();
    assert!((v + 1.0 / 3f64.sqrt()).abs() < 1e-14);
    assert_eq!(wigner_3j(ThreeJArgs::integer([1, 1, 3], [0, 0, 0])).unwrap(), 0.0);
    let v = wigner_3j(ThreeJArgs::integer([5, 0, 5], [2, 0, -2])).unwrap();
    assert!((v + 0.301_511_344_577_763_6).abs() < 1e-12);
}

#[test]
fn three_j_scalar_coupling_closed_form() {
    // (j 0 j; m 0 -m) = (-1)^{2j} (-1)^{j-m} / sqrt(2j+1)
    for tj in 0..=30i64 {
        for tm in (-tj..=tj).step_by(2) {
            let v = wigner_3j(ThreeJArgs::doubled([tj, 0, tj], [tm, 0, -tm])).unwrap();
            let parity = (tj + (tj - tm) / 2).rem_euclid(2);
            let expect = if parity == 0 { 1.0 } else { -1.0 } / ((tj + 1) as f64).sqrt();
            assert!((v - expect).abs() < 1e-13, "2j={tj} 2m={tm}: {v} vs {expect}");
        }
    }
}

#[test]
fn three_j_matches_exact_racah_sum() {
    for (tj, tm) in all_valid_tuples(6) {
        let got = wigner_3j(ThreeJArgs::doubled(tj, tm)).unwrap();
        let expect = exact_3j(tj, tm);
        assert!((got - expect).abs() < 1e-13, "{tj:?} {tm:?}: {got} vs {expect}");
    }
    // A few larger arguments where cancellation in the alternating sum matters.
    for (tj, tm) in [
        ([20, 20, 20], [2, -4, 2]),
        ([30, 16, 24], [10, -6, -4]),
        ([40, 40, 40], [0, 0, 0]),
        ([39, 21, 40], [-7, 5, 2]),
    ] {
        let got = wigner_3j(ThreeJArgs::doubled(tj, tm)).unwrap();
        let expect = exact_3j(tj, tm);
        assert!((got - expect).abs() <= 1e-11 * expect.abs().max(1e-3), "{tj:?} {tm:?}: {got} vs {expect}");
    }
}

#[test]
fn three_j_exhaustive_selection_rule() {
    for (tj, tm) in all_valid_tuples(8) {
        let args = ThreeJArgs::doubled(tj, tm);
        let v = wigner_3j(args).unwrap();
        if !args.satisfies_selection() {
            assert_eq!(v, 0.0, "{tj:?} {tm:?}");
        }
    }
}

#[test]
fn three_j_rejects_invalid_projections() {
    let bad = [
        ThreeJArgs::doubled([2, 2, 2], [4, -2, -2]),
        ThreeJArgs::doubled([2, 2, 2], [1, -1, 0]),
        ThreeJArgs::doubled([1, 1, 2], [2, -1, -1]),
    ];
    for args in bad {
        assert!(matches!(wigner_3j(args), Err(Error::InvalidAngularMomentum { .. })));
    }
}

#[test]
fn three_j_orthogonality_sum_rule() {
    for j1 in 0..=12i64 {
        for j2 in 0..=12i64 {
            for j3 in (j1 - j2).abs()..=(j1 + j2).min(12) {
                if (j1 + j2 + j3) % 2 != 0 {
                    continue;
                }
                for m3 in (-j3..=j3).step_by(2) {
                    let mut total = 0.0;
                    for m1 in (-j1..=j1).step_by(2) {
                        let m2 = -m1 - m3;
                        if m2.abs() > j2 {
                            continue;
                        }
                        let v = wigner_3j(ThreeJArgs::doubled([j1, j2, j3], [m1, m2, m3])).unwrap();
                        total += (j3 + 1) as f64 * v * v;
                    }
                    assert!((total - 1.0).abs() < 1e-10, "2j=({j1},{j2},{j3}) 2m3={m3}: {total}");
                }
            }
        }
    }
}

#[test]
fn three_j_row_orthogonality() {
    // sum_{m1,m2} (j1 j2 j3; m1 m2 m3)(j1 j2 j3'; m1 m2 m3) = delta_{j3 j3'} / (2j3+1)
    for (j1, j2) in [(4i64, 6i64), (5, 7), (12, 12), (3, 9)] {
        let lo = (j1 - j2).abs();
        let hi = j1 + j2;
        for j3 in (lo..=hi).step_by(2) {
            for j3p in (lo..=hi).step_by(2) {
                // Smallest projection allowed by the parity of j3.
                let m3 = j3 % 2;
                let mut total = 0.0;
                for m1 in (-j1..=j1).step_by(2) {
                    let m2 = -m1 - m3;
                    if m2.abs() > j2 {
                        continue;
                    }
                    total += wigner_3j(ThreeJArgs::doubled([j1, j2, j3], [m1, m2, m3])).unwrap()
                        * wigner_3j(ThreeJArgs::doubled([j1, j2, j3p], [m1, m2, m3])).unwrap();
                }
                let expect = if j3 == j3p { 1.0 / (j3 + 1) as f64 } else { 0.0 };
                assert!((total - expect).abs() < 1e-10);
            }
        }
    }
}

fn valid_tuple() -> impl Strategy<Value = ([i64; 3], [i64; 3])> {
    (0i64..=12, 0i64..=12)
        .prop_flat_map(|(a, b)| {
            let lo = (a - b).abs();
            let choices: Vec<i64> = (lo..=a + b).step_by(2).collect();
            (Just(a), Just(b), proptest::sample::select(choices))
        })
        .prop_flat_map(|(a, b, c)| {
            let ma: Vec<i64> = (-a..=a).step_by(2).collect();
            let mb: Vec<i64> = (-b..=b).step_by(2).collect();
            (Just([a, b, c]), proptest::sample::select(ma), proptest::sample::select(mb))
        })
        .prop_filter_map("third projection out of range", |(tj, ma, mb)| {
            let mc = -ma - mb;
            (mc.abs() <= tj[2]).then_some((tj, [ma, mb, mc]))
        })
}

proptest! {
    #[test]
    fn three_j_column_permutations((tj, tm) in valid_tuple()) {
        let v = wigner_3j(ThreeJArgs::doubled(tj, tm)).unwrap();
        let odd = if ((tj[0] + tj[1] + tj[2]) / 2) % 2 == 0 { 1.0 } else { -1.0 };
        let perm = |p: [usize; 3]| {
            wigner_3j(ThreeJArgs::doubled(p.map(|i| tj[i]), p.map(|i| tm[i]))).unwrap()
        };
        for p in [[1, 2, 0], [2, 0, 1]] {
            prop_assert!((perm(p) - v).abs() < 1e-12);
        }
        for p in [[1, 0, 2], [0, 2, 1], [2, 1, 0]] {
            prop_assert!((perm(p) - odd * v).abs() < 1e-12);
        }
        let flipped = wigner_3j(ThreeJArgs::doubled(tj, tm.map(|m| -m))).unwrap();
        prop_assert!((flipped - odd * v).abs() < 1e-12);
    }

    #[test]
    fn harmonic_conjugation(k in 0u32..=40, q_frac in 0.0f64..1.0, alpha in 0.0f64..PI, beta in 0.0f64..(2.0 * PI)) {
        let q = ((k as f64 + 1.0) * q_frac).floor().min(k as f64) as i32;
        let pos = spherical_harmonic(SphericalIndex::new(k, q, alpha, beta)).unwrap();
        let neg = spherical_harmonic(SphericalIndex::new(k, -q, alpha, beta)).unwrap();
        let sign = if q % 2 == 0 { 1.0 } else { -1.0 };
        prop_assert!((neg - pos.conj() * sign).norm() < 1e-12);
    }
}

#[test]
fn harmonic_reference_values() {
    let y = |k, q, a, b| spherical_harmonic(SphericalIndex::new(k, q, a, b)).unwrap();
    assert!((y(0, 0, 1.1, 4.0).re - 0.282_094_791_773_878_1).abs() < 1e-15);
    assert!((y(1, 0, 0.0, 0.0).re - 0.488_602_511_902_919_9).abs() < 1e-15);
    let v = y(1, 1, PI / 2.0, 0.0);
    assert!((v.re + 0.345_494_149_471_335_5).abs() < 1e-15 && v.im.abs() < 1e-15);
    let v = y(2, -1, 0.7, 0.3);
    let expect = (15.0 / (8.0 * PI)).sqrt() * 0.7f64.sin() * 0.7f64.cos();
    assert!((v - num_complex::Complex64::from_polar(expect, -0.3)).norm() < 1e-14);
    assert!(matches!(
        spherical_harmonic(SphericalIndex::new(3, 4, 0.1, 0.1)),
        Err(Error::InvalidOrder { degree: 3, order: 4 })
    ));
}

#[test]
fn harmonic_orthonormality() {
    let kmax = 20u32;
    let (nodes, weights) = gauss_legendre(kmax as usize + 2);
    let nb = 2 * kmax as usize + 2;
    let betas: Vec<f64> = (0..nb).map(|i| 2.0 * PI * i as f64 / nb as f64).collect();
    let dbeta = 2.0 * PI / nb as f64;
    let mut index = Vec::new();
    for k in 0..=kmax {
        for q in -(k as i32)..=(k as i32) {
            index.push((k, q));
        }
    }
    let samples: Vec<Vec<num_complex::Complex64>> = index
        .iter()
        .map(|&(k, q)| {
            nodes
                .iter()
                .flat_map(|&x| {
                    let a = x.acos();
                    betas.iter().map(move |&b| spherical_harmonic(SphericalIndex::new(k, q, a, b)).unwrap())
                })
                .collect()
        })
        .collect();
    let mut worst = 0.0f64;
    for (i1, s1) in samples.iter().enumerate() {
        for (i2, s2) in samples.iter().enumerate().skip(i1) {
            let mut acc = num_complex::Complex64::new(0.0, 0.0);
            for (ia, w) in weights.iter().enumerate() {
                for ib in 0..nb {
                    let idx = ia * nb + ib;
                    acc += s1[idx] * s2[idx].conj() * (w * dbeta);
                }
            }
            let expect = if i1 == i2 { 1.0 } else { 0.0 };
            worst = worst.max((acc - expect).norm());
        }
    }
    assert!(worst < 1e-8, "worst deviation {worst}");
}

#[test]
fn legendre_recurrence_matches_rodrigues() {
    for k in 0..=12u32 {
        for q in 0..=k {
            for step in 0..=40 {
                let alpha = PI * step as f64 / 40.0;
                let expect = rodrigues_normalized(k, q, alpha);
                let got = normalized_legendre(k, q, alpha);
                assert!((got - expect).abs() < 1e-10, "K={k} Q={q} alpha={alpha}: {got} vs {expect}");
            }
        }
    }
}

#[test]
fn legendre_stays_bounded_at_high_degree() {
    // |Y_KQ| <= sqrt((2K+1)/4pi) for every K, Q.
    for k in [100u32, 200, 400] {
        let bound = ((2 * k + 1) as f64 / (4.0 * PI)).sqrt();
        for q in [0u32, 1, k / 2, k - 1, k] {
            for alpha in [1e-3, 0.3, 1.0, PI / 2.0, 2.9] {
                let v = normalized_legendre(k, q, alpha);
                assert!(v.is_finite() && v.abs() <= bound * (1.0 + 1e-12), "K={k} Q={q}: {v}");
            }
        }
        // Zonal harmonic at the pole is exactly the bound.
        assert!((normalized_legendre(k, 0, 0.0) - bound).abs() < 1e-10 * bound);
    }
}
