use std::f64::consts::PI;

use approx::assert_abs_diff_eq;
use cplxinfo::quadrature::density_mass;
use cplxinfo::{
    ce_discrete, ce_monte_carlo, ce_quadrature, gaussian_ce_asymptotic, Density, DiscretePmf,
    Distribution, Event, PhasedMeasure, QuadConfig,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Composite trapezoid rule on a uniform grid, independent of the adaptive
/// integrator.
fn trapezoid_ce(d: &Density, beta: f64, lo: f64, hi: f64, n: usize) -> f64 {
    let h = (hi - lo) / n as f64;
    let (mut re, mut im) = (0.0, 0.0);
    for i in 0..=n {
        let x = lo + h * i as f64;
        let p = d.pdf(x);
        let w = if i == 0 || i == n { 0.5 } else { 1.0 };
        re += w * p * (beta * p).cos();
        im += w * p * (beta * p).sin();
    }
    (re * h).hypot(im * h)
}

fn random_piecewise(rng: &mut ChaCha8Rng) -> Density {
    let pieces = rng.random_range(2..7);
    let mut breaks = vec![rng.random_range(-3.0..3.0)];
    for _ in 0..pieces {
        let last = *breaks.last().unwrap();
        breaks.push(last + rng.random_range(0.05..1.5));
    }
    let raw: Vec<f64> = (0..pieces).map(|_| rng.random_range(0.05..2.0)).collect();
    let mass: f64 = raw
        .iter()
        .zip(breaks.windows(2))
        .map(|(l, w)| l * (w[1] - w[0]))
        .sum();
    Density::piecewise(breaks, raw.iter().map(|l| l / mass).collect()).unwrap()
}

fn test_densities() -> Vec<Density> {
    vec![
        Density::uniform(0.0, 1.0).unwrap(),
        Density::normal(0.0, 1.0).unwrap(),
        Density::normal(2.0, 0.3).unwrap(),
        Density::laplace(0.0, 0.5).unwrap(),
        Density::piecewise(vec![0.0, 0.5, 1.0], vec![0.5, 1.5]).unwrap(),
        Density::disjoint_mixture(
            vec![0.4, 0.6],
            vec![
                Density::uniform(-2.0, -1.0).unwrap(),
                Density::normal(3.0, 0.2).unwrap(),
            ],
        )
        .unwrap(),
    ]
}

#[test]
fn densities_integrate_to_one() {
    let cfg = QuadConfig::default();
    for d in test_densities() {
        let m = density_mass(&d, &cfg).unwrap();
        assert!((m - 1.0).abs() <= 1e-8, "{d:?}: mass {m}");
    }
}

#[test]
fn quadrature_matches_dense_trapezoid() {
    // Smooth densities: a 2e6-point trapezoid rule is accurate to ~1e-11.
    let cases = [
        (Density::normal(0.0, 1.0).unwrap(), 1.0, -8.5, 8.5),
        (Density::normal(0.0, 0.1).unwrap(), 5.0, -0.85, 0.85),
        (Density::laplace(0.0, 1.0).unwrap(), 3.0, -28.0, 28.0),
    ];
    for (d, beta, lo, hi) in cases {
        let reference = trapezoid_ce(&d, beta, lo, hi, 2_000_000);
        let got = ce_quadrature(&d, beta).unwrap().value;
        assert!(
            (got - reference).abs() < 1e-8,
            "{d:?} beta={beta}: {got} vs {reference}"
        );
    }
}

#[test]
fn bounded_by_one() {
    for d in test_densities() {
        for beta in [1e-3, 0.1, 1.0, 7.0, 50.0] {
            let v = ce_quadrature(&d, beta).unwrap().value;
            assert!((0.0..=1.0 + 1e-9).contains(&v), "{d:?} beta={beta}: {v}");
        }
    }
}

#[test]
fn uniform_on_two_intervals_is_maximal() {
    let d = Density::uniform_on(&[(0.0, 1.0), (5.0, 5.5)]).unwrap();
    for beta in [0.3, 2.0, 40.0] {
        assert_abs_diff_eq!(ce_quadrature(&d, beta).unwrap().value, 1.0, epsilon = 1e-10);
    }
}

#[test]
fn small_beta_limit() {
    for d in test_densities() {
        assert!(ce_quadrature(&d, 1e-6).unwrap().value > 1.0 - 1e-3);
    }
    let b = DiscretePmf::bernoulli(0.1).unwrap();
    assert!(ce_discrete(&b, 1e-6).unwrap().value > 1.0 - 1e-3);
}

#[test]
fn scaling_identity_for_normals() {
    let base = Density::normal(0.0, 1.0).unwrap();
    for &(beta, sigma) in &[(0.1, 0.1), (2.0, 0.5), (10.0, 3.0), (0.5, 0.02)] {
        let lhs = ce_quadrature(&Density::normal(0.0, sigma).unwrap(), beta)
            .unwrap()
            .value;
        let rhs = ce_quadrature(&base, beta / sigma).unwrap().value;
        assert!((lhs - rhs).abs() < 1e-8, "beta={beta} sigma={sigma}");
    }
}

#[test]
fn scaled_density_shifts_beta() {
    // q(x) = a p(a x) has CE_beta(Q) = CE_{a beta}(P).
    for d in test_densities() {
        for &(a, beta) in &[(2.0, 0.7), (0.25, 3.0)] {
            let lhs = ce_quadrature(&d.scaled(a).unwrap(), beta).unwrap().value;
            let rhs = ce_quadrature(&d, a * beta).unwrap().value;
            assert!((lhs - rhs).abs() < 1e-8, "{d:?} a={a}");
        }
    }
}

#[test]
fn monotone_under_beta_scaling() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xC0FFEE);
    for _ in 0..50 {
        let d = random_piecewise(&mut rng);
        let beta = rng.random_range(0.05..0.99) * PI / d.max_density();
        let gamma = rng.random_range(0.01..1.0);
        let full = ce_quadrature(&d, beta).unwrap().value;
        let reduced = ce_quadrature(&d, gamma * beta).unwrap().value;
        assert!(reduced >= full - 1e-9, "{d:?}: {reduced} < {full}");
    }
}

#[test]
fn mixing_bound_on_disjoint_supports() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..50 {
        let p1 = random_piecewise(&mut rng);
        let p2 = random_piecewise(&mut rng);
        let gap = p1.support().1 - p2.support().0 + rng.random_range(0.0..1.0);
        let p2 = p2.shifted(gap);
        let alpha = rng.random_range(0.05..0.95);
        let beta = rng.random_range(0.1..20.0);
        let mix = Density::disjoint_mixture(vec![alpha, 1.0 - alpha], vec![p1.clone(), p2.clone()])
            .unwrap();
        let lhs = ce_quadrature(&mix, beta).unwrap().value;
        let rhs = alpha * ce_quadrature(&p1, alpha * beta).unwrap().value
            + (1.0 - alpha) * ce_quadrature(&p2, (1.0 - alpha) * beta).unwrap().value;
        assert!(lhs <= rhs + 1e-9, "{lhs} > {rhs}");
    }
}

#[test]
fn bernoulli_sequence_converges_to_point_mass() {
    let beta = 3.0;
    let gaps: Vec<f64> = [2, 10, 100, 1000, 100_000]
        .iter()
        .map(|&n| {
            1.0 - ce_discrete(&DiscretePmf::bernoulli(1.0 / n as f64).unwrap(), beta)
                .unwrap()
                .value
        })
        .collect();
    assert!(gaps.last().unwrap().abs() < 1e-4, "{gaps:?}");
    assert!(
        gaps.windows(2).skip(1).all(|w| w[1].abs() <= w[0].abs()),
        "{gaps:?}"
    );
}

#[test]
fn gaussian_asymptotics_agree() {
    let rel: Vec<f64> = [1e-3, 1e-4, 1e-5]
        .iter()
        .map(|&s| {
            let q = ce_quadrature(&Density::normal(0.0, s).unwrap(), 1.0)
                .unwrap()
                .value;
            let a = gaussian_ce_asymptotic(s, 1.0).unwrap().value;
            (q - a).abs() / a
        })
        .collect();
    assert!(rel[1] < 0.05, "{rel:?}");
    assert!(rel[0] > rel[1] && rel[1] > rel[2], "{rel:?}");
    let v = ce_quadrature(&Density::normal(0.0, 1e-4).unwrap(), 1.0)
        .unwrap()
        .value;
    assert!((v - 0.01583).abs() < 0.05 * 0.01583);
}

#[test]
fn monte_carlo_agrees_with_quadrature() {
    let mut misses = 0;
    let mut runs = 0;
    for d in test_densities() {
        let dist: Distribution = d.clone().into();
        for (i, beta) in [0.5, 2.0, 8.0].into_iter().enumerate() {
            let q = ce_quadrature(&d, beta).unwrap().value;
            let mc = ce_monte_carlo(&dist, beta, 10_000, 100 + i as u64).unwrap();
            runs += 1;
            if (mc.value - q).abs() > 4.0 * mc.stderr.unwrap() + 1e-8 {
                misses += 1;
            }
        }
    }
    assert!(misses <= 1, "{misses} of {runs} outside 4 sigma");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn translation_invariance(shift in -50.0f64..50.0, beta in 0.05f64..20.0, which in 0usize..6) {
        let d = &test_densities()[which];
        let a = ce_quadrature(d, beta).unwrap().value;
        let b = ce_quadrature(&d.shifted(shift), beta).unwrap().value;
        prop_assert!((a - b).abs() < 1e-8);
    }

    #[test]
    fn phased_measure_preserves_total_variation(theta in -10.0f64..10.0, lo in -3.0f64..3.0, width in 0.0f64..4.0) {
        let base: Distribution = Density::normal(0.0, 1.0).unwrap().into();
        let q = PhasedMeasure::new(base.clone(), theta);
        let z = q.event_measure(&Event::Interval { lo, hi: lo + width }).unwrap();
        let Distribution::Continuous(d) = &base else { unreachable!() };
        prop_assert!((z.norm() - d.interval_mass(lo, lo + width)).abs() < 1e-15);
    }

    #[test]
    fn discrete_ce_bounded(masses in proptest::collection::vec(0.0f64..1.0, 1..10), beta in 0.01f64..100.0) {
        let total: f64 = masses.iter().sum();
        prop_assume!(total > 1e-6);
        let atoms: Vec<(f64, f64)> = masses.iter().enumerate().map(|(i, m)| (i as f64, m / total)).collect();
        let v = ce_discrete(&DiscretePmf::new(&atoms).unwrap(), beta).unwrap().value;
        prop_assert!((0.0..=1.0 + 1e-12).contains(&v));
    }
}
