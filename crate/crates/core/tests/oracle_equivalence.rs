//! Closed forms checked against the brute-force oracle on the explicit 4×4 state.

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use nalgebra::Complex;
use proptest::prelude::*;
use scs_discord::closed_form::{self, MeasurementAngles, MinusSecondOutcome};
use scs_discord::oracle::{self, Matrix4c};
use scs_discord::scs_states::{self, CoherentParams, Parity};

fn params(a: f64, b: f64) -> CoherentParams {
    CoherentParams::new(a, b).unwrap()
}

fn rho(p: &CoherentParams, parity: Parity, a: f64) -> oracle::DensityMatrix4 {
    scs_states::quasi_werner_density(p, parity, a).unwrap().rho().clone()
}

fn angles(theta: f64, phi: f64) -> MeasurementAngles {
    MeasurementAngles::new(theta, phi).unwrap()
}

fn parity_strategy() -> impl Strategy<Value = Parity> {
    prop_oneof![Just(Parity::Plus), Just(Parity::Minus)]
}

/// Entry-by-entry construction of the quasi-Werner matrix from the printed
/// layout, using the normalization constants directly.
fn printed_layout(p: &CoherentParams, parity: Parity, a: f64) -> Matrix4c {
    let set = scs_states::normalization_constants(p, parity).unwrap();
    let n2 = set.n().powi(2);
    let (pa, pb) = (set.n_plus_a(), set.n_plus_b());
    let (ma, mb) = (set.n_minus_a().unwrap(), set.n_minus_b().unwrap());
    let (first, second) = match parity {
        Parity::Plus => ((pa * pb).powi(2), (ma * mb).powi(2)),
        Parity::Minus => ((pa * mb).powi(2), (ma * pb).powi(2)),
    };
    let corner = a * n2 / (4.0 * pa * pb * ma * mb);
    let mut m = Matrix4c::identity() * Complex::new((1.0 - a) / 4.0, 0.0);
    let (i, j) = match parity {
        Parity::Plus => (0, 3),
        Parity::Minus => (1, 2),
    };
    m[(i, i)] = Complex::new(0.25 + a / 4.0 * (n2 / first - 1.0), 0.0);
    m[(j, j)] = Complex::new(0.25 + a / 4.0 * (n2 / second - 1.0), 0.0);
    m[(i, j)] = Complex::new(corner, 0.0);
    m[(j, i)] = Complex::new(corner, 0.0);
    m
}

#[test]
fn density_matches_printed_layout() {
    for parity in Parity::BOTH {
        let p = params(1.0, 2.0);
        let built = rho(&p, parity, 0.7);
        let diff = (built.matrix() - printed_layout(&p, parity, 0.7)).norm();
        assert!(diff < 1e-14, "{parity}: {diff:e}");
    }
}

#[test]
fn reduced_pair_matches_partial_trace() {
    let p = params(1.0, 2.0);
    let r = rho(&p, Parity::Plus, 0.7);
    let (r1, r2) = closed_form::reduced_eigenvalues(&p, Parity::Plus, 0.7).unwrap();
    let s = oracle::eigvals_hermitian(&oracle::reduced_state_y(&r)).unwrap();
    assert!(s.max_deviation(&[r1, r2]) < 1e-14);
}

#[test]
fn outcome_pair_matches_oracle() {
    let p = params(1.0, 2.0);
    let (a, theta) = (0.6, 0.3);
    for parity in Parity::BOTH {
        let pair = closed_form::outcome_probabilities(&p, parity, a, theta).unwrap();
        let (o1, o2) = oracle::outcome_probabilities(&rho(&p, parity, a), &angles(theta, 0.0));
        // The minus-parity formulas label the outcomes in the opposite order
        // to the projectors on mode Y.
        let (o1, o2) = match parity {
            Parity::Plus => (o1, o2),
            Parity::Minus => (o2, o1),
        };
        assert!((pair.p1 - o1).abs() < 1e-14, "{parity}");
        assert!((pair.p2 - o2).abs() < 1e-14, "{parity}");
    }
}

#[test]
fn conditional_entropy_matches_oracle() {
    let p = params(1.0, 2.0);
    let c = closed_form::conditional_entropy(&p, Parity::Plus, 0.5, 0.3).unwrap();
    let o = oracle::conditional_entropy(&rho(&p, Parity::Plus, 0.5), &angles(0.3, 0.0)).unwrap();
    assert!((c - o).abs() < 1e-12);
}

#[test]
fn pure_state_conditional_spectrum() {
    let r = rho(&params(1.0, 2.0), Parity::Plus, 1.0);
    let pair = oracle::measurement_projectors(&angles(0.0, 0.0));
    let (_, cond) = oracle::conditional_state(&r, &pair.pi1).unwrap();
    let s = oracle::eigvals_hermitian(&cond).unwrap();
    assert!(s.max_deviation(&[1.0, 0.0]) < 1e-14);
}

#[test]
fn anchor_point_discord() {
    let p = params(1.0, 2.0);
    let d = closed_form::discord(&p, Parity::Plus, 0.5, 0.3).unwrap();
    let o = oracle::discord_by_definition(&rho(&p, Parity::Plus, 0.5), &angles(0.3, 1.1)).unwrap();
    assert!((d - o).abs() < 1e-10, "{d} vs {o}");
    let d = closed_form::discord(&p, Parity::Minus, 0.6, 0.4).unwrap();
    let o = oracle::discord_by_definition(&rho(&p, Parity::Minus, 0.6), &angles(0.4, 0.0)).unwrap();
    assert!((d - o).abs() < 1e-10, "{d} vs {o}");
}

#[test]
fn mutual_information_matches_oracle() {
    let p = params(1.0, 2.0);
    let c = closed_form::mutual_information(&p, Parity::Plus, 0.5).unwrap();
    let o = oracle::mutual_information(&rho(&p, Parity::Plus, 0.5)).unwrap();
    assert!((c - o).abs() < 1e-12);
    let bell = rho(&params(25.0, 25.0), Parity::Plus, 1.0);
    assert!((oracle::mutual_information(&bell).unwrap() - 2.0).abs() < 1e-12);
}

#[test]
fn sqrt_spectrum_anchor() {
    let p = params(1.0, 2.0);
    let c = closed_form::sqrt_eigenvalues_rho_rhotilde(&p, Parity::Minus, 0.7).unwrap();
    let o = oracle::wootters_sqrt_spectrum(&rho(&p, Parity::Minus, 0.7)).unwrap();
    assert!(o.max_deviation(&c) < 1e-12);
}

#[test]
fn eof_composition() {
    let p = params(1.0, 2.0);
    let e = closed_form::entanglement_of_formation(&p, Parity::Plus, 0.8).unwrap();
    let c = oracle::wootters_concurrence(&rho(&p, Parity::Plus, 0.8)).unwrap();
    assert!((e - oracle::eof_from_concurrence(c)).abs() < 1e-10);
}

#[test]
fn pure_concurrence_matches_wootters_on_grid() {
    for i in 0..20 {
        for j in 0..20 {
            let a2 = 0.1 + 4.9 * i as f64 / 19.0;
            let b2 = 0.1 + 4.9 * j as f64 / 19.0;
            let p = params(a2, b2);
            for parity in Parity::BOTH {
                let psi = scs_states::pure_scs_vector(&p, parity).unwrap().to_vector();
                let r = oracle::DensityMatrix4::new(psi * psi.adjoint()).unwrap();
                let w = oracle::wootters_concurrence(&r).unwrap();
                let c = scs_states::pure_concurrence(&p, parity).unwrap();
                assert!((w - c).abs() < 1e-10, "({a2},{b2},{parity}): {w} vs {c}");
            }
        }
    }
}

#[test]
fn misprinted_minus_probability_disagrees_with_oracle() {
    let p = params(1.0, 2.0);
    let printed = closed_form::discord_with(&p, Parity::Minus, 0.6, 0.4, MinusSecondOutcome::NPlus).unwrap();
    let o = oracle::discord_by_definition(&rho(&p, Parity::Minus, 0.6), &angles(0.4, 0.0)).unwrap();
    assert!((printed - o).abs() > 1e-6);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn discord_and_spectra_agree(
        a in 0.0f64..0.99,
        a2 in 0.05f64..6.0,
        b2 in 0.05f64..6.0,
        theta in 0.0f64..PI,
        phi in 0.0f64..TAU,
        parity in parity_strategy(),
    ) {
        let p = params(a2, b2);
        let r = rho(&p, parity, a);
        let d = closed_form::discord(&p, parity, a, theta).unwrap();
        let o = oracle::discord_by_definition(&r, &angles(theta, phi)).unwrap();
        prop_assert!((d - o).abs() <= 1e-10, "discord {} vs {}", d, o);

        let o0 = oracle::discord_by_definition(&r, &angles(theta, 0.0)).unwrap();
        prop_assert!((o - o0).abs() <= 1e-10);

        let c = closed_form::sqrt_eigenvalues_rho_rhotilde(&p, parity, a).unwrap();
        let w = oracle::wootters_sqrt_spectrum(&r).unwrap();
        prop_assert!(w.max_deviation(&c) <= 1e-10);

        for z in oracle::rho_rhotilde_eigenvalues(&r) {
            prop_assert!(z.im.abs() <= 1e-10);
        }

        let joint = closed_form::joint_eigenvalues(a).unwrap().eigenvalues;
        prop_assert!(oracle::eigvals_hermitian(r.matrix()).unwrap().max_deviation(&joint) <= 1e-12);
        let (r1, r2) = closed_form::reduced_eigenvalues(&p, parity, a).unwrap();
        let red = oracle::eigvals_hermitian(&oracle::reduced_state_y(&r)).unwrap();
        prop_assert!(red.max_deviation(&[r1, r2]) <= 1e-12);
    }

    #[test]
    fn state_invariants(
        a in 0.0f64..=1.0,
        a2 in 0.0f64..50.0,
        b2 in 0.0f64..50.0,
        parity in parity_strategy(),
    ) {
        prop_assume!(parity == Parity::Plus || a2 + b2 > 0.0);
        let p = params(a2, b2);
        let psi = scs_states::pure_scs_vector(&p, parity).unwrap();
        prop_assert!((psi.norm() - 1.0).abs() <= 1e-12);
        let r = rho(&p, parity, a);
        let m = r.matrix();
        prop_assert!((m.trace().re - 1.0).abs() <= 1e-12);
        prop_assert!(oracle::hermitian_defect(m) <= 1e-12);
        prop_assert!(oracle::eigvals_hermitian(m).unwrap().min() >= -1e-12);
        for (idx, c) in psi.amplitudes().iter().enumerate() {
            let allowed = match parity {
                Parity::Plus => idx == 0 || idx == 3,
                Parity::Minus => idx == 1 || idx == 2,
            };
            prop_assert!(allowed || *c == 0.0);
            prop_assert!(*c >= 0.0);
        }
    }

    #[test]
    fn mode_swap_symmetry(
        a in 0.0f64..=1.0,
        a2 in 0.05f64..6.0,
        b2 in 0.05f64..6.0,
        theta in 0.0f64..FRAC_PI_2,
        parity in parity_strategy(),
    ) {
        let p = params(a2, b2);
        let q = p.swapped();
        let v = scs_states::pure_scs_vector(&p, parity).unwrap().amplitudes();
        let w = scs_states::pure_scs_vector(&q, parity).unwrap().amplitudes();
        prop_assert!((v[0] - w[0]).abs() <= 1e-15 && (v[3] - w[3]).abs() <= 1e-15);
        prop_assert!((v[1] - w[2]).abs() <= 1e-15 && (v[2] - w[1]).abs() <= 1e-15);
        prop_assert_eq!(
            scs_states::pure_concurrence(&p, parity).unwrap(),
            scs_states::pure_concurrence(&q, parity).unwrap()
        );
        let d = |x: &CoherentParams| closed_form::discord(x, parity, a, theta).unwrap();
        prop_assert!((d(&p) - d(&q)).abs() <= 1e-12);
        let e = |x: &CoherentParams| closed_form::entanglement_of_formation(x, parity, a).unwrap();
        prop_assert!((e(&p) - e(&q)).abs() <= 1e-12);
    }

    #[test]
    fn theta_symmetries(
        a in 0.0f64..=1.0,
        a2 in 0.05f64..6.0,
        b2 in 0.05f64..6.0,
        theta in 0.0f64..PI,
        parity in parity_strategy(),
    ) {
        let p = params(a2, b2);
        let d = |t: f64| closed_form::discord(&p, parity, a, t).unwrap();
        prop_assert!((d(theta) - d(FRAC_PI_2 - theta)).abs() <= 1e-12);
        prop_assert!((d(theta) - d(theta + FRAC_PI_2)).abs() <= 1e-12);
    }

    #[test]
    fn bounds(
        a in 0.0f64..=1.0,
        a2 in 0.05f64..6.0,
        b2 in 0.05f64..6.0,
        theta in 0.0f64..PI,
        parity in parity_strategy(),
    ) {
        let p = params(a2, b2);
        let c = closed_form::concurrence_mixed(&p, parity, a).unwrap();
        let e = closed_form::entanglement_of_formation(&p, parity, a).unwrap();
        let d = closed_form::discord(&p, parity, a, theta).unwrap();
        let i = closed_form::mutual_information(&p, parity, a).unwrap();
        let j = closed_form::classical_correlation(&p, parity, a, theta).unwrap();
        prop_assert!((0.0..=1.0).contains(&c));
        prop_assert!((0.0..=1.0).contains(&e));
        prop_assert_eq!(e == 0.0, c == 0.0);
        prop_assert!(d >= -1e-12);
        prop_assert!((i - j - d).abs() <= 1e-10);
    }
}
