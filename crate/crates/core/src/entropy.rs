//! Complex entropy `CE_beta(P) = |E[e^{i beta p(X)}]|`.

use serde::Serialize;

use crate::distributions::{draw_samples, Density, DiscretePmf, Distribution, Side};
use crate::error::{Error, Result};
use crate::quadrature::{integrate, Node, QuadConfig};
use crate::ComplexAmplitude;

/// How an estimate was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CeMethod {
    ExactSum,
    Quadrature,
    MonteCarlo,
}

impl CeMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            CeMethod::ExactSum => "exact-sum",
            CeMethod::Quadrature => "quadrature",
            CeMethod::MonteCarlo => "monte-carlo",
        }
    }
}

/// Value reported for a single-atom PMF.
///
/// The defining sum gives 1 (a point mass is uniform on a singleton); some
/// applications prefer 0, the entropy of a deterministic outcome.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DegenerateCe {
    Zero,
    #[default]
    One,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CeEstimate {
    pub value: f64,
    pub method: CeMethod,
    pub beta: f64,
    pub n_samples: Option<usize>,
    pub stderr: Option<f64>,
    pub seed: Option<u64>,
}

pub(crate) fn check_beta(beta: f64) -> Result<()> {
    if beta > 0.0 && beta.is_finite() {
        Ok(())
    } else {
        Err(Error::NonPositiveBeta(beta))
    }
}

/// `sum_x p(x) e^{i beta p(x)}` in atom order.
pub fn discrete_amplitude(p: &DiscretePmf, beta: f64) -> ComplexAmplitude {
    p.masses()
        .iter()
        .map(|&m| ComplexAmplitude::from_polar(m, beta * m))
        .sum()
}

/// Exact complex entropy of a PMF.
pub fn ce_discrete(p: &DiscretePmf, beta: f64) -> Result<CeEstimate> {
    ce_discrete_with(p, beta, DegenerateCe::One)
}

pub fn ce_discrete_with(
    p: &DiscretePmf,
    beta: f64,
    degenerate: DegenerateCe,
) -> Result<CeEstimate> {
    check_beta(beta)?;
    let value = if p.is_degenerate() && degenerate == DegenerateCe::Zero {
        0.0
    } else {
        discrete_amplitude(p, beta).norm()
    };
    Ok(CeEstimate {
        value,
        method: CeMethod::ExactSum,
        beta,
        n_samples: None,
        stderr: None,
        seed: None,
    })
}

/// `int p(x) e^{i beta p(x)} dx` by phase-guarded adaptive Simpson.
pub fn ce_amplitude(d: &Density, beta: f64, cfg: &QuadConfig) -> Result<ComplexAmplitude> {
    check_beta(beta)?;
    let eval = |x: f64, side: Option<Side>| {
        let p = match side {
            Some(s) => d.pdf_side(x, s),
            None => d.pdf(x),
        };
        let phase = beta * p;
        Node::new(ComplexAmplitude::from_polar(p, phase), [phase, phase])
    };
    let active = |lo: f64, hi: f64| d.pdf(0.5 * (lo + hi)) > 0.0;
    integrate(&d.breakpoints(), active, eval, cfg)
}

/// Complex entropy of a density by quadrature.
pub fn ce_quadrature(d: &Density, beta: f64) -> Result<CeEstimate> {
    ce_quadrature_with(d, beta, &QuadConfig::default())
}

pub fn ce_quadrature_with(d: &Density, beta: f64, cfg: &QuadConfig) -> Result<CeEstimate> {
    let amp = ce_amplitude(d, beta, cfg)?;
    Ok(CeEstimate {
        value: amp.norm(),
        method: CeMethod::Quadrature,
        beta,
        n_samples: None,
        stderr: None,
        seed: None,
    })
}

/// Deterministic complex entropy: exact sum for PMFs, quadrature for densities.
pub fn ce(dist: &Distribution, beta: f64) -> Result<CeEstimate> {
    match dist {
        Distribution::Discrete(p) => ce_discrete(p, beta),
        Distribution::Continuous(d) => ce_quadrature(d, beta),
    }
}

/// Monte-Carlo estimate `|(1/N) sum_i e^{i beta p(X_i)}|` with `X_i ~ P`.
///
/// The reported standard error is the larger of the standard errors of the
/// real and imaginary sample means.
pub fn ce_monte_carlo(dist: &Distribution, beta: f64, n: usize, seed: u64) -> Result<CeEstimate> {
    check_beta(beta)?;
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "Monte-Carlo estimate needs at least 2 samples, got {n}"
        )));
    }
    let samples = draw_samples(dist, n, seed)?;
    let terms: Vec<ComplexAmplitude> = samples
        .values()
        .iter()
        .map(|&x| ComplexAmplitude::from_polar(1.0, beta * dist.prob_at(x)))
        .collect();
    let nf = n as f64;
    let mean: ComplexAmplitude = terms.iter().sum::<ComplexAmplitude>() / nf;
    let (var_re, var_im) = terms.iter().fold((0.0, 0.0), |(vr, vi), t| {
        let d = t - mean;
        (vr + d.re * d.re, vi + d.im * d.im)
    });
    let se_re = (var_re / (nf - 1.0)).sqrt() / nf.sqrt();
    let se_im = (var_im / (nf - 1.0)).sqrt() / nf.sqrt();
    Ok(CeEstimate {
        value: mean.norm(),
        method: CeMethod::MonteCarlo,
        beta,
        n_samples: Some(n),
        stderr: Some(se_re.max(se_im)),
        seed: Some(seed),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::PI;

    #[test]
    fn discrete_examples() {
        let uniform4 =
            DiscretePmf::new(&[(0.0, 0.25), (1.0, 0.25), (2.0, 0.25), (3.0, 0.25)]).unwrap();
        assert_abs_diff_eq!(
            ce_discrete(&uniform4, 3.0).unwrap().value,
            1.0,
            epsilon = 1e-15
        );
        let half = DiscretePmf::bernoulli(0.5).unwrap();
        assert_abs_diff_eq!(ce_discrete(&half, 7.0).unwrap().value, 1.0, epsilon = 1e-15);
        // |0.3 e^{0.3i} + 0.7 e^{0.7i}| evaluated by hand
        let b = DiscretePmf::bernoulli(0.3).unwrap();
        assert_abs_diff_eq!(
            ce_discrete(&b, 1.0).unwrap().value,
            0.983_283_081,
            epsilon = 1e-9
        );
        let point = DiscretePmf::point_mass(2.0).unwrap();
        assert_eq!(ce_discrete(&point, 4.2).unwrap().value, 1.0);
        assert_eq!(
            ce_discrete_with(&point, 4.2, DegenerateCe::Zero)
                .unwrap()
                .value,
            0.0
        );
    }

    #[test]
    fn rejects_nonpositive_beta() {
        let b = DiscretePmf::bernoulli(0.3).unwrap();
        assert!(matches!(
            ce_discrete(&b, 0.0),
            Err(Error::NonPositiveBeta(_))
        ));
        let u = Density::uniform(0.0, 1.0).unwrap();
        assert!(ce_quadrature(&u, -1.0).is_err());
        assert!(ce_monte_carlo(&u.into(), f64::NAN, 10, 0).is_err());
    }

    #[test]
    fn uniform_and_piecewise_quadrature() {
        let u = Density::uniform(-3.0, 4.5).unwrap();
        assert_abs_diff_eq!(ce_quadrature(&u, 17.0).unwrap().value, 1.0, epsilon = 1e-12);
        let pw = Density::piecewise(vec![0.0, 0.5, 1.0], vec![0.5, 1.5]).unwrap();
        assert_abs_diff_eq!(
            ce_quadrature(&pw, 2.0 * PI).unwrap().value,
            1.0,
            epsilon = 1e-12
        );
        // |0.25 e^{i pi/2} + 0.75 e^{i 3pi/2}| = 0.5
        assert_abs_diff_eq!(ce_quadrature(&pw, PI).unwrap().value, 0.5, epsilon = 1e-12);
    }

    #[test]
    fn standard_normal_quadrature() {
        let n = Density::normal(0.0, 1.0).unwrap();
        let v = ce_quadrature(&n, 1.0).unwrap().value;
        // Table value 0.9936588 carries Monte-Carlo noise.
        assert!((v - 0.993_658_8).abs() < 0.01);
        // Dense trapezoid reference computed offline: 0.99386054
        assert_abs_diff_eq!(v, 0.993_860_54, epsilon = 1e-8);
    }

    #[test]
    fn monte_carlo_uniform_is_exact() {
        let u: Distribution = Density::uniform(0.0, 1.0).unwrap().into();
        let est = ce_monte_carlo(&u, 5.0, 1000, 3).unwrap();
        assert_abs_diff_eq!(est.value, 1.0, epsilon = 1e-12);
        assert!(est.stderr.unwrap() < 1e-12);
        assert!(ce_monte_carlo(&u, 5.0, 1, 3).is_err());
    }

    #[test]
    fn monte_carlo_is_seeded() {
        let n: Distribution = Density::normal(0.0, 0.01).unwrap().into();
        let a = ce_monte_carlo(&n, 0.1, 1000, 99).unwrap();
        let b = ce_monte_carlo(&n, 0.1, 1000, 99).unwrap();
        assert_eq!(a, b);
        assert!((a.value - 0.535).abs() < 0.08, "{}", a.value);
        let wide: Distribution = Density::normal(0.0, 1.0).unwrap().into();
        assert!(ce_monte_carlo(&wide, 0.01, 1000, 5).unwrap().value >= 0.9999);
    }
}
