//! Stationary-phase asymptotics of the Gaussian complex entropy.
//!
//! For `N(0, sigma^2)` with `lambda = 1 / (sqrt(2 pi) sigma)`, the amplitude
//! integral has a single non-degenerate stationary point at the mode and
//!
//! ```text
//! CE_beta ~ 1 / sqrt(lambda beta) = (2 pi)^{1/4} sqrt(sigma / beta)   as sigma -> 0.
//! ```

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};

/// Smallest peak phase `lambda * beta` at which the leading-order value is
/// flagged as meaningful.
pub const REGIME_THRESHOLD: f64 = 50.0;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AsymptoticCe {
    pub value: f64,
    pub lambda: f64,
    pub regime_ok: bool,
}

pub fn gaussian_ce_asymptotic(sigma: f64, beta: f64) -> Result<AsymptoticCe> {
    if !(sigma > 0.0 && sigma.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "sigma must be positive, got {sigma}"
        )));
    }
    if !(beta > 0.0 && beta.is_finite()) {
        return Err(Error::NonPositiveBeta(beta));
    }
    let lambda = 1.0 / ((2.0 * PI).sqrt() * sigma);
    Ok(AsymptoticCe {
        value: (2.0 * PI).powf(0.25) * (sigma / beta).sqrt(),
        lambda,
        regime_ok: lambda * beta >= REGIME_THRESHOLD,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    #[test]
    fn closed_form_values() {
        let a = gaussian_ce_asymptotic(1e-4, 1.0).unwrap();
        assert_abs_diff_eq!(a.value, 0.015_832_334_870_861_6, epsilon = 1e-15);
        assert!(a.regime_ok);
        let b = gaussian_ce_asymptotic(0.01, 10.0).unwrap();
        assert_abs_diff_eq!(b.value, 0.050_066_238_870_430_4, epsilon = 1e-15);
        let c = gaussian_ce_asymptotic(0.3, 0.3).unwrap();
        assert_abs_diff_eq!(c.value, (2.0 * PI).powf(0.25), epsilon = 1e-15);
        assert!(!c.regime_ok);
    }

    #[test]
    fn depends_on_ratio_only() {
        for &(s, b, k) in &[(0.1, 2.0, 3.0), (1e-3, 0.5, 0.01), (7.0, 7.0, 12.0)] {
            let v1 = gaussian_ce_asymptotic(s, b).unwrap().value;
            let v2 = gaussian_ce_asymptotic(k * s, k * b).unwrap().value;
            assert_relative_eq!(v1, v2, max_relative = 1e-14);
        }
    }

    #[test]
    fn rejects_nonpositive() {
        assert!(gaussian_ce_asymptotic(0.0, 1.0).is_err());
        assert!(gaussian_ce_asymptotic(1.0, -1.0).is_err());
    }
}
