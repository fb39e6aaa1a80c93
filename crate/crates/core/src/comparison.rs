//! Complex divergence, complex metric and total variation between two
//! distributions of the same kind.

use serde::Serialize;

use crate::distributions::{Density, DiscretePmf, Distribution, Side};
use crate::entropy::check_beta;
use crate::error::{Error, Result};
use crate::quadrature::{integrate, integrate_real, merge_breaks, Node, QuadConfig};
use crate::ComplexAmplitude;

/// Amplitude moduli at or below this are reported as an infinite divergence.
pub const UNDERFLOW_THRESHOLD: f64 = 1e-300;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DivergenceResult {
    /// `-ln |amplitude|`, or `+inf` when `infinite` is set.
    pub value: f64,
    pub amplitude_modulus: f64,
    pub beta: f64,
    pub infinite: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MetricResult {
    pub value: f64,
    pub beta: f64,
}

fn side_pdf(d: &Density, x: f64, side: Option<Side>) -> f64 {
    match side {
        Some(s) => d.pdf_side(x, s),
        None => d.pdf(x),
    }
}

/// Atoms of either PMF, in increasing order.
fn union_points(p: &DiscretePmf, q: &DiscretePmf) -> Vec<f64> {
    merge_breaks(&[p.points(), q.points()])
}

/// `sum_x p(x) e^{i beta (p(x) - q(x))}` over the atoms of `p`, or the
/// corresponding integral over the support of `p`.
pub fn cd_amplitude(
    p: &Distribution,
    q: &Distribution,
    beta: f64,
    cfg: &QuadConfig,
) -> Result<ComplexAmplitude> {
    check_beta(beta)?;
    match (p, q) {
        (Distribution::Discrete(p), Distribution::Discrete(q)) => Ok(p
            .atoms()
            .map(|(x, m)| ComplexAmplitude::from_polar(m, beta * (m - q.mass_at(x))))
            .sum()),
        (Distribution::Continuous(p), Distribution::Continuous(q)) => {
            let breaks = merge_breaks(&[&p.breakpoints(), &q.breakpoints()]);
            let (lo, hi) = p.support();
            let breaks: Vec<f64> = breaks.into_iter().filter(|&x| x >= lo && x <= hi).collect();
            let eval = |x: f64, side: Option<Side>| {
                let pv = side_pdf(p, x, side);
                let qv = side_pdf(q, x, side);
                Node::new(
                    ComplexAmplitude::from_polar(pv, beta * (pv - qv)),
                    [beta * pv, beta * qv],
                )
            };
            let active = |a: f64, b: f64| p.pdf(0.5 * (a + b)) > 0.0;
            integrate(&breaks, active, eval, cfg)
        }
        _ => Err(Error::KindMismatch),
    }
}

/// Complex divergence `CD_beta(P || Q) = -ln |amplitude|`.
pub fn cd(p: &Distribution, q: &Distribution, beta: f64) -> Result<DivergenceResult> {
    cd_with(p, q, beta, &QuadConfig::default())
}

pub fn cd_with(
    p: &Distribution,
    q: &Distribution,
    beta: f64,
    cfg: &QuadConfig,
) -> Result<DivergenceResult> {
    Ok(from_modulus(cd_amplitude(p, q, beta, cfg)?.norm(), beta))
}

fn from_modulus(modulus: f64, beta: f64) -> DivergenceResult {
    let infinite = modulus <= UNDERFLOW_THRESHOLD;
    // Quadrature noise can push the modulus a hair above 1.
    let value = if infinite {
        f64::INFINITY
    } else {
        0.0 - modulus.min(1.0).ln()
    };
    DivergenceResult {
        value,
        amplitude_modulus: modulus,
        beta,
        infinite,
    }
}

/// Complex metric `CM_beta(P, Q) = 1/2 int |p e^{i beta p} - q e^{i beta q}|`.
/// At `beta = 0` this is the total variation distance.
pub fn cm(p: &Distribution, q: &Distribution, beta: f64) -> Result<MetricResult> {
    cm_with(p, q, beta, &QuadConfig::default())
}

pub fn cm_with(
    p: &Distribution,
    q: &Distribution,
    beta: f64,
    cfg: &QuadConfig,
) -> Result<MetricResult> {
    if !(beta >= 0.0 && beta.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "beta must be nonnegative, got {beta}"
        )));
    }
    if beta == 0.0 {
        return Ok(MetricResult {
            value: tv_with(p, q, cfg)?,
            beta,
        });
    }
    let value = match (p, q) {
        (Distribution::Discrete(p), Distribution::Discrete(q)) => {
            let total: f64 = union_points(p, q)
                .into_iter()
                .map(|x| {
                    let (a, b) = (p.mass_at(x), q.mass_at(x));
                    (ComplexAmplitude::from_polar(a, beta * a)
                        - ComplexAmplitude::from_polar(b, beta * b))
                    .norm()
                })
                .sum();
            0.5 * total
        }
        (Distribution::Continuous(p), Distribution::Continuous(q)) => {
            let breaks = merge_breaks(&[&p.breakpoints(), &q.breakpoints()]);
            let eval = |x: f64, side: Option<Side>| {
                let pv = side_pdf(p, x, side);
                let qv = side_pdf(q, x, side);
                let diff = ComplexAmplitude::from_polar(pv, beta * pv)
                    - ComplexAmplitude::from_polar(qv, beta * qv);
                Node::new(
                    ComplexAmplitude::new(diff.norm(), 0.0),
                    [beta * pv, beta * qv],
                )
            };
            let active = |a: f64, b: f64| {
                let m = 0.5 * (a + b);
                p.pdf(m) > 0.0 || q.pdf(m) > 0.0
            };
            0.5 * integrate(&breaks, active, eval, cfg)?.re
        }
        _ => return Err(Error::KindMismatch),
    };
    Ok(MetricResult { value, beta })
}

/// Total variation distance `1/2 int |p - q|`.
pub fn tv(p: &Distribution, q: &Distribution) -> Result<f64> {
    tv_with(p, q, &QuadConfig::default())
}

pub fn tv_with(p: &Distribution, q: &Distribution, cfg: &QuadConfig) -> Result<f64> {
    match (p, q) {
        (Distribution::Discrete(p), Distribution::Discrete(q)) => Ok(0.5
            * union_points(p, q)
                .into_iter()
                .map(|x| (p.mass_at(x) - q.mass_at(x)).abs())
                .sum::<f64>()),
        (Distribution::Continuous(p), Distribution::Continuous(q)) => {
            let breaks = merge_breaks(&[&p.breakpoints(), &q.breakpoints()]);
            let v = integrate_real(
                &breaks,
                |x, side| (side_pdf(p, x, side) - side_pdf(q, x, side)).abs(),
                cfg,
            )?;
            Ok(0.5 * v)
        }
        _ => Err(Error::KindMismatch),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn bern(p: f64) -> Distribution {
        DiscretePmf::bernoulli(p).unwrap().into()
    }

    fn unif(a: f64, b: f64) -> Distribution {
        Density::uniform(a, b).unwrap().into()
    }

    #[test]
    fn divergence_of_self_is_zero() {
        let n: Distribution = Density::normal(1.0, 2.0).unwrap().into();
        assert_abs_diff_eq!(cd(&n, &n, 3.0).unwrap().value, 0.0, epsilon = 1e-10);
        assert_abs_diff_eq!(
            cd(&bern(0.2), &bern(0.2), 3.0).unwrap().value,
            0.0,
            epsilon = 1e-15
        );
    }

    #[test]
    fn nested_uniform_divergences() {
        let a = cd(&unif(0.0, 1.0), &unif(0.0, 2.0), 1.0).unwrap();
        assert_abs_diff_eq!(a.value, 0.0, epsilon = 1e-10);
        let b = cd(&unif(0.0, 2.0), &unif(0.0, 1.0), 1.0).unwrap();
        // -ln cos(0.5)
        assert_abs_diff_eq!(b.value, 0.130_584_240_443_722_66, epsilon = 1e-10);
        assert!(!b.infinite);
    }

    #[test]
    fn divergence_flags_underflow() {
        let r = from_modulus(0.0, 1.0);
        assert!(r.infinite && r.value == f64::INFINITY);
        assert!(from_modulus(1e-320, 1.0).infinite);
        // Atoms whose phases differ by pi nearly cancel; rounding leaves
        // a tiny but representable modulus.
        let p: Distribution = DiscretePmf::bernoulli(0.5).unwrap().into();
        let q: Distribution = DiscretePmf::point_mass(1.0).unwrap().into();
        let r = cd(&p, &q, std::f64::consts::PI).unwrap();
        assert!(r.amplitude_modulus < 1e-15);
        assert!(r.value > 30.0 && r.value.is_finite());
    }

    #[test]
    fn metric_examples() {
        assert_abs_diff_eq!(
            cm(&bern(0.3), &bern(0.3), 5.0).unwrap().value,
            0.0,
            epsilon = 1e-15
        );
        let a: Distribution = DiscretePmf::point_mass(0.0).unwrap().into();
        let b: Distribution = DiscretePmf::point_mass(1.0).unwrap().into();
        assert_abs_diff_eq!(cm(&a, &b, 2.5).unwrap().value, 1.0, epsilon = 1e-15);
        // Two-term complex differences evaluated by hand.
        assert_abs_diff_eq!(
            cm(&bern(0.5), &bern(0.3), 1.0).unwrap().value,
            0.223_354_12,
            epsilon = 1e-8
        );
        assert_abs_diff_eq!(
            cm(&bern(0.5), &bern(0.3), 0.0).unwrap().value,
            0.2,
            epsilon = 1e-15
        );
        assert!(cm(&bern(0.5), &bern(0.3), -1.0).is_err());
    }

    #[test]
    fn total_variation_examples() {
        assert_eq!(tv(&bern(0.4), &bern(0.4)).unwrap(), 0.0);
        assert_abs_diff_eq!(
            tv(&unif(0.0, 1.0), &unif(2.0, 3.0)).unwrap(),
            1.0,
            epsilon = 1e-12
        );
        assert_abs_diff_eq!(
            tv(&unif(0.0, 1.0), &unif(0.5, 1.5)).unwrap(),
            0.5,
            epsilon = 1e-12
        );
        let n1: Distribution = Density::normal(0.0, 1.0).unwrap().into();
        let n2: Distribution = Density::normal(1.0, 1.0).unwrap().into();
        // 2 Phi(1/2) - 1
        assert_abs_diff_eq!(tv(&n1, &n2).unwrap(), 0.382_924_922_548_026, epsilon = 1e-8);
    }

    #[test]
    fn continuous_metric_of_disjoint_uniforms() {
        let v = cm(&unif(0.0, 1.0), &unif(3.0, 5.0), 4.0).unwrap().value;
        assert_abs_diff_eq!(v, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn kinds_must_match() {
        assert_eq!(
            cm(&bern(0.5), &unif(0.0, 1.0), 1.0),
            Err(Error::KindMismatch)
        );
        assert_eq!(
            cd(&unif(0.0, 1.0), &bern(0.5), 1.0),
            Err(Error::KindMismatch)
        );
        assert_eq!(tv(&bern(0.5), &unif(0.0, 1.0)), Err(Error::KindMismatch));
    }
}
