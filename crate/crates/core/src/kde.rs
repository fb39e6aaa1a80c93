//! Gaussian kernel density estimation onto a uniform grid.

use std::f64::consts::PI;

use serde::Serialize;

use crate::distributions::{Density, SampleSet};
use crate::error::{Error, Result};

pub const DEFAULT_GRID_POINTS: usize = 512;
pub const MIN_GRID_POINTS: usize = 64;
pub const DEFAULT_PADDING: f64 = 4.0;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Bandwidth {
    /// Silverman's rule of thumb.
    Auto,
    Fixed(f64),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct KdeConfig {
    pub bandwidth: Bandwidth,
    pub grid_points: usize,
    /// Grid extends this many bandwidths beyond the sample range.
    pub padding: f64,
}

impl Default for KdeConfig {
    fn default() -> Self {
        Self {
            bandwidth: Bandwidth::Auto,
            grid_points: DEFAULT_GRID_POINTS,
            padding: DEFAULT_PADDING,
        }
    }
}

impl KdeConfig {
    pub fn validate(&self) -> Result<()> {
        if self.grid_points < MIN_GRID_POINTS {
            return Err(Error::InvalidArgument(format!(
                "KDE grid needs at least {MIN_GRID_POINTS} points, got {}",
                self.grid_points
            )));
        }
        if let Bandwidth::Fixed(h) = self.bandwidth {
            if !(h > 0.0 && h.is_finite()) {
                return Err(Error::InvalidArgument(format!(
                    "bandwidth must be positive, got {h}"
                )));
            }
        }
        if !(self.padding >= 0.0 && self.padding.is_finite()) {
            return Err(Error::InvalidArgument(format!(
                "grid padding must be nonnegative, got {}",
                self.padding
            )));
        }
        Ok(())
    }

    /// Explicit bandwidth, or Silverman's rule on `s`.
    pub fn resolve_bandwidth(&self, s: &SampleSet) -> Result<f64> {
        match self.bandwidth {
            Bandwidth::Fixed(h) => Ok(h),
            Bandwidth::Auto => silverman_bandwidth(s),
        }
    }
}

/// Linear-interpolation quantile of sorted data (the "type 7" definition).
fn quantile_sorted(sorted: &[f64], q: f64) -> f64 {
    let pos = q * (sorted.len() - 1) as f64;
    let i = pos.floor() as usize;
    let frac = pos - i as f64;
    if i + 1 < sorted.len() {
        sorted[i] + frac * (sorted[i + 1] - sorted[i])
    } else {
        sorted[i]
    }
}

/// `h = 0.9 min(sd, IQR / 1.34) n^{-1/5}`, falling back to whichever spread
/// measure is nonzero.
pub fn silverman_bandwidth(s: &SampleSet) -> Result<f64> {
    let xs = s.values();
    let n = xs.len();
    if n < 2 {
        return Err(Error::InvalidSamples {
            label: s.label().to_string(),
            reason: format!("bandwidth needs at least 2 samples, got {n}"),
        });
    }
    let nf = n as f64;
    let mean = xs.iter().sum::<f64>() / nf;
    let sd = (xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (nf - 1.0)).sqrt();
    let mut sorted = xs.to_vec();
    sorted.sort_by(f64::total_cmp);
    let iqr = quantile_sorted(&sorted, 0.75) - quantile_sorted(&sorted, 0.25);
    let spread = match (sd > 0.0, iqr > 0.0) {
        (true, true) => sd.min(iqr / 1.34),
        (true, false) => sd,
        (false, true) => iqr / 1.34,
        (false, false) => return Err(Error::ZeroSpread(s.label().to_string())),
    };
    Ok(0.9 * spread * nf.powf(-0.2))
}

/// Fits a Gaussian KDE on `[min - pad h, max + pad h]`.
pub fn fit_kde(s: &SampleSet, cfg: &KdeConfig) -> Result<Density> {
    cfg.validate()?;
    if s.len() < 2 {
        return Err(Error::InvalidSamples {
            label: s.label().to_string(),
            reason: "KDE needs at least 2 samples".into(),
        });
    }
    let h = cfg.resolve_bandwidth(s)?;
    let (lo, hi) = sample_range(s.values());
    kde_on_grid(
        s.values(),
        h,
        lo - cfg.padding * h,
        hi + cfg.padding * h,
        cfg.grid_points,
    )
}

pub(crate) fn sample_range(xs: &[f64]) -> (f64, f64) {
    xs.iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &x| {
            (lo.min(x), hi.max(x))
        })
}

/// Gaussian KDE with bandwidth `h` tabulated at `n` equispaced points on
/// `[lo, hi]`, renormalized to unit trapezoid mass.
pub fn kde_on_grid(values: &[f64], h: f64, lo: f64, hi: f64, n: usize) -> Result<Density> {
    if values.is_empty() {
        return Err(Error::InvalidArgument(
            "KDE needs at least one value".into(),
        ));
    }
    if !(h > 0.0 && h.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "bandwidth must be positive, got {h}"
        )));
    }
    if hi.partial_cmp(&lo) != Some(std::cmp::Ordering::Greater) || n < 2 {
        return Err(Error::InvalidArgument(format!(
            "bad KDE grid [{lo}, {hi}] with {n} points"
        )));
    }
    let step = (hi - lo) / (n - 1) as f64;
    let points: Vec<f64> = (0..n)
        .map(|i| if i + 1 == n { hi } else { lo + step * i as f64 })
        .collect();
    let norm = 1.0 / (values.len() as f64 * h * (2.0 * PI).sqrt());
    let inv_h = 1.0 / h;
    let density: Vec<f64> = points
        .iter()
        .map(|&x| {
            values
                .iter()
                .map(|&v| {
                    let z = (x - v) * inv_h;
                    (-0.5 * z * z).exp()
                })
                .sum::<f64>()
                * norm
        })
        .collect();
    Density::grid_normalized(points, density)
}
