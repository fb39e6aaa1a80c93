//! Two-sample permutation test with the complex metric as statistic.
//!
//! Densities are estimated from each sample (Gaussian KDE, or empirical PMFs
//! in discrete mode), `T = CM_beta(p_hat, q_hat)` is computed, and the null
//! distribution of `T` is approximated by re-splitting the pooled sample `K`
//! times. The p-value is `#{k : T_k >= T_obs} / K`.
//!
//! Bandwidth, KDE grid and `beta` are fixed once from the pooled sample, which
//! every permutation shares, so the statistic has the same definition for the
//! observed split and all permuted splits.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::comparison::cm;
use crate::distributions::{DiscretePmf, Distribution, SampleSet};
use crate::error::{Error, Result};
use crate::kde::{kde_on_grid, sample_range, KdeConfig};
use crate::seed::derive_seed;

pub const DEFAULT_PERMUTATIONS: usize = 1000;
pub const MIN_PERMUTATIONS: usize = 100;
pub const DEFAULT_ALPHA: f64 = 0.05;
/// Minimum size of each sample for the KDE-based test.
pub const MIN_CONTINUOUS_SAMPLES: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BetaChoice {
    /// Reciprocal median of the pooled density estimate at the pooled points.
    Auto,
    Fixed(f64),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PermTestConfig {
    pub beta: BetaChoice,
    pub permutations: usize,
    pub seed: u64,
    pub alpha: f64,
    pub kde: KdeConfig,
    pub discrete: bool,
}

impl Default for PermTestConfig {
    fn default() -> Self {
        Self {
            beta: BetaChoice::Auto,
            permutations: DEFAULT_PERMUTATIONS,
            seed: 0,
            alpha: DEFAULT_ALPHA,
            kde: KdeConfig::default(),
            discrete: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PermTestResult {
    pub t_obs: f64,
    pub t_perm: Vec<f64>,
    /// `#{k : t_perm[k] >= t_obs} / K`.
    pub p_value: f64,
    /// `(#{k : t_perm[k] >= t_obs} + 1) / (K + 1)`.
    pub p_value_adjusted: f64,
    pub beta_used: f64,
    /// Pooled KDE bandwidth; `None` in discrete mode.
    pub bandwidth: Option<f64>,
    /// Shared KDE grid as `(lo, hi, points)`; `None` in discrete mode.
    pub grid: Option<(f64, f64, usize)>,
    pub reject: bool,
    pub alpha: f64,
    pub seed: u64,
    pub permutations: usize,
    pub m: usize,
    pub n: usize,
}

/// `beta = 1 / median(values)`.
pub fn beta_heuristic(values: &[f64]) -> Result<f64> {
    if values.is_empty() {
        return Err(Error::InvalidArgument(
            "beta heuristic needs density values".into(),
        ));
    }
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    let k = sorted.len();
    let median = if k % 2 == 1 {
        sorted[k / 2]
    } else {
        0.5 * (sorted[k / 2 - 1] + sorted[k / 2])
    };
    if !(median > 0.0 && median.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "median density {median} is not positive; cannot pick beta"
        )));
    }
    Ok(1.0 / median)
}

/// How densities are estimated from a split of the pooled sample.
enum Estimator {
    Kde {
        h: f64,
        lo: f64,
        hi: f64,
        points: usize,
    },
    Empirical,
}

impl Estimator {
    fn fit(&self, values: &mut [f64]) -> Result<Distribution> {
        // Sorting makes the estimate depend on the set, not the order.
        values.sort_by(f64::total_cmp);
        match *self {
            Estimator::Kde { h, lo, hi, points } => {
                Ok(kde_on_grid(values, h, lo, hi, points)?.into())
            }
            Estimator::Empirical => Ok(DiscretePmf::empirical(values)?.into()),
        }
    }

    fn statistic(&self, x: &mut [f64], y: &mut [f64], beta: f64) -> Result<f64> {
        let p = self.fit(x)?;
        let q = self.fit(y)?;
        Ok(cm(&p, &q, beta)?.value)
    }
}

pub fn perm_test(x: &SampleSet, y: &SampleSet, cfg: &PermTestConfig) -> Result<PermTestResult> {
    if cfg.permutations < MIN_PERMUTATIONS {
        return Err(Error::InvalidArgument(format!(
            "at least {MIN_PERMUTATIONS} permutations required, got {}",
            cfg.permutations
        )));
    }
    if !(cfg.alpha > 0.0 && cfg.alpha < 1.0) {
        return Err(Error::InvalidArgument(format!(
            "alpha must lie in (0, 1), got {}",
            cfg.alpha
        )));
    }
    if let BetaChoice::Fixed(b) = cfg.beta {
        if !(b > 0.0 && b.is_finite()) {
            return Err(Error::NonPositiveBeta(b));
        }
    }
    let min_size = if cfg.discrete {
        1
    } else {
        MIN_CONTINUOUS_SAMPLES
    };
    for s in [x, y] {
        if s.len() < min_size {
            return Err(Error::InvalidSamples {
                label: s.label().to_string(),
                reason: format!("need at least {min_size} observations, got {}", s.len()),
            });
        }
    }

    let (m, n) = (x.len(), y.len());
    let pooled: Vec<f64> = x.values().iter().chain(y.values()).copied().collect();

    let (estimator, bandwidth, grid) = if cfg.discrete {
        (Estimator::Empirical, None, None)
    } else {
        cfg.kde.validate()?;
        let pooled_set = SampleSet::new(pooled.clone(), "pooled")?;
        let h = cfg.kde.resolve_bandwidth(&pooled_set)?;
        let (lo, hi) = sample_range(&pooled);
        let (lo, hi) = (lo - cfg.kde.padding * h, hi + cfg.kde.padding * h);
        let points = cfg.kde.grid_points;
        (
            Estimator::Kde { h, lo, hi, points },
            Some(h),
            Some((lo, hi, points)),
        )
    };

    let beta = match cfg.beta {
        BetaChoice::Fixed(b) => b,
        BetaChoice::Auto => {
            let pooled_fit = estimator.fit(&mut pooled.clone())?;
            let heights: Vec<f64> = pooled.iter().map(|&z| pooled_fit.prob_at(z)).collect();
            beta_heuristic(&heights)?
        }
    };

    let t_obs = estimator.statistic(&mut x.values().to_vec(), &mut y.values().to_vec(), beta)?;

    let t_perm = (0..cfg.permutations)
        .into_par_iter()
        .map(|k| {
            let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(cfg.seed, k as u64));
            let mut z = pooled.clone();
            z.shuffle(&mut rng);
            let (xs, ys) = z.split_at_mut(m);
            estimator.statistic(xs, ys, beta)
        })
        .collect::<Result<Vec<f64>>>()?;

    let exceed = t_perm.iter().filter(|&&t| t >= t_obs).count();
    let k = cfg.permutations as f64;
    let p_value = exceed as f64 / k;
    Ok(PermTestResult {
        t_obs,
        p_value,
        p_value_adjusted: (exceed as f64 + 1.0) / (k + 1.0),
        beta_used: beta,
        bandwidth,
        grid,
        reject: p_value < cfg.alpha,
        alpha: cfg.alpha,
        seed: cfg.seed,
        permutations: cfg.permutations,
        m,
        n,
        t_perm,
    })
}
