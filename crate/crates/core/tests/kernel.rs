mod common;

use common::*;
use qsp_fpi::chebyshev::NodeGrid;
use qsp_fpi::kernel::Su2Matrix;
use qsp_fpi::{
    coeffs_of_samples, expand_symmetric, g, g_full, qsp_unitary, FullPhaseFactors, Parity,
    ReducedPhaseFactors,
};
use proptest::prelude::*;

fn grid_100() -> Vec<f64> {
    (0..100).map(|i| -1.0 + 2.0 * i as f64 / 99.0).collect()
}

#[test]
fn even_two_phase_closed_form() {
    // Ψ = (φ1, 2φ0, φ1): symbolic expansion gives
    // g = sin 2φ0 cos 2φ1 + T_2(x) cos 2φ0 sin 2φ1.
    for &(p0, p1) in &[(0.3, 0.2), (-0.7, 0.45), (1.1, -0.9)] {
        let (sym, residue) = symbolic_g_full(&[p1, 2.0 * p0, p1]);
        assert!(residue < 1e-15);
        let f0 = (2.0 * p0).sin() * (2.0 * p1).cos();
        let f2 = (2.0 * p0).cos() * (2.0 * p1).sin();
        assert!((sym[0] - f0).abs() < 1e-15 && sym[1].abs() < 1e-15 && (sym[2] - f2).abs() < 1e-15);

        let phi = ReducedPhaseFactors::new(vec![p0, p1], Parity::Even);
        for x in grid_100() {
            let t2 = 2.0 * x * x - 1.0;
            assert!((g(x, &phi).unwrap() - (f0 + t2 * f2)).abs() < 1e-14);
        }
    }
}

#[test]
fn symbolic_oracle_matches_pointwise_evaluation() {
    let mut r = rng(11);
    for d in 0..8 {
        let psi = random_with_norm(&mut r, d + 1, 2.0);
        let (coeffs, residue) = symbolic_g_full(&psi);
        assert!(residue < 1e-13);
        let full = FullPhaseFactors::new(psi);
        for x in grid_100() {
            let series = qsp_fpi::chebyshev::clenshaw(&coeffs, x);
            assert!((g_full(x, &full).unwrap() - series).abs() < 1e-13);
        }
    }
}

#[test]
fn degree_and_parity_of_g() {
    let mut r = rng(12);
    for n in 1..8 {
        for parity in [Parity::Even, Parity::Odd] {
            let phi = ReducedPhaseFactors::new(random_with_norm(&mut r, n, 1.5), parity);
            let d = phi.full_degree();
            let grid = NodeGrid::new(2 * d + 1);
            let samples = grid.sample(|x| g(x, &phi).unwrap());
            let wrong = match parity {
                Parity::Even => Parity::Odd,
                Parity::Odd => Parity::Even,
            };
            let other = coeffs_of_samples(&samples, wrong).unwrap();
            assert!(other.coeffs().iter().all(|c| c.abs() <= 1e-10));
            let same = coeffs_of_samples(&samples, parity).unwrap();
            assert!(same.coeffs()[n..].iter().all(|c| c.abs() <= 1e-10));
        }
    }
}

#[test]
fn x_one_gives_sine_of_phase_sum() {
    let mut r = rng(13);
    for d in 0..20 {
        let psi = random_with_norm(&mut r, d + 1, 3.0);
        let sum: f64 = psi.iter().sum();
        let full = FullPhaseFactors::new(psi);
        assert!((g_full(1.0, &full).unwrap() - sum.sin()).abs() < 1e-13);
    }
}

#[test]
fn bit_for_bit_reproducible() {
    let psi = FullPhaseFactors::new((0..301).map(|j| (j as f64 * 0.37).sin()).collect());
    let a = qsp_unitary(0.123, &psi).unwrap();
    let b = qsp_unitary(0.123, &psi).unwrap();
    assert_eq!(a, b);
}

#[test]
fn evaluation_is_thread_independent() {
    let phi = ReducedPhaseFactors::new((0..64).map(|j| 0.01 / (1.0 + j as f64)).collect(), Parity::Odd);
    let serial: Vec<f64> = grid_100().into_iter().map(|x| g(x, &phi).unwrap()).collect();
    let handles: Vec<_> = (0..4)
        .map(|_| {
            let phi = phi.clone();
            std::thread::spawn(move || {
                grid_100().into_iter().map(|x| g(x, &phi).unwrap()).collect::<Vec<_>>()
            })
        })
        .collect();
    for h in handles {
        assert_eq!(h.join().unwrap(), serial);
    }
}

fn reduced_strategy() -> impl Strategy<Value = ReducedPhaseFactors> {
    (prop::collection::vec(-1.5f64..1.5, 1..12), any::<bool>()).prop_map(|(v, even)| {
        ReducedPhaseFactors::new(v, if even { Parity::Even } else { Parity::Odd })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn padding_leaves_g_unchanged(phi in reduced_strategy(), p in prop::sample::select(vec![1usize, 2, 5])) {
        let padded = phi.resized(phi.len() + p);
        for x in grid_100() {
            prop_assert!((g(x, &phi).unwrap() - g(x, &padded).unwrap()).abs() <= 1e-12);
        }
    }

    #[test]
    fn real_part_from_shifted_imaginary_part(psi in prop::collection::vec(-3.0f64..3.0, 1..16)) {
        let full = FullPhaseFactors::new(psi.clone());
        let mut shifted = psi;
        let last = shifted.len() - 1;
        shifted[0] += std::f64::consts::FRAC_PI_4;
        shifted[last] += std::f64::consts::FRAC_PI_4;
        let shifted = FullPhaseFactors::new(shifted);
        for x in grid_100() {
            let re = qsp_unitary(x, &full).unwrap().a.re;
            let rot = Su2Matrix::z_rotation(std::f64::consts::FRAC_PI_4);
            let sandwiched = rot.mul(&qsp_unitary(x, &full).unwrap()).mul(&rot);
            prop_assert!((re - sandwiched.a.im).abs() <= 1e-12);
            prop_assert!((re - g_full(x, &shifted).unwrap()).abs() <= 1e-12);
        }
    }

    #[test]
    fn unitary_and_bounded(psi in prop::collection::vec(-10.0f64..10.0, 1..40), x in -1.0f64..=1.0) {
        let full = FullPhaseFactors::new(psi);
        let m = qsp_unitary(x, &full).unwrap();
        prop_assert!(m.unitarity_defect() <= 1e-12);
        prop_assert!(g_full(x, &full).unwrap().abs() <= 1.0);
    }

    #[test]
    fn symmetric_phases_have_equal_off_diagonals(phi in reduced_strategy(), x in -1.0f64..=1.0) {
        let psi = expand_symmetric(&phi).unwrap();
        prop_assert!(psi.is_symmetric());
        let m = qsp_unitary(x, &psi).unwrap();
        prop_assert!((m.b - m.c).norm() <= 1e-12);
    }
}
