//! Discrete and continuous distributions, sampling, and the global-phase
//! complex measure.

mod density;
mod pmf;
mod spec;

pub(crate) use density::Side;
pub use density::{
    Density, Family, GridDensity, LAPLACE_TRUNCATION_SCALES, MASS_TOLERANCE,
    NORMAL_TRUNCATION_SIGMAS,
};
pub use pmf::{DiscretePmf, MASS_SUM_TOLERANCE};
pub use spec::DistSpec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ComplexAmplitude;

/// Either kind of distribution handled by the library.
#[derive(Debug, Clone, PartialEq)]
pub enum Distribution {
    Discrete(DiscretePmf),
    Continuous(Density),
}

impl Distribution {
    /// Probability mass (discrete) or density (continuous) at `x`.
    pub fn prob_at(&self, x: f64) -> f64 {
        match self {
            Distribution::Discrete(p) => p.mass_at(x),
            Distribution::Continuous(d) => d.pdf(x),
        }
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        match self {
            Distribution::Discrete(p) => {
                let u: f64 = rng.random();
                let cum = p.cumulative();
                let i = cum.partition_point(|&c| c <= u).min(p.len() - 1);
                // Rounding in the cumulative sum can land on a trailing zero-mass atom.
                let i = (0..=i).rev().find(|&j| p.masses()[j] > 0.0).unwrap_or(i);
                p.points()[i]
            }
            Distribution::Continuous(d) => d.sample(rng),
        }
    }

    pub fn is_discrete(&self) -> bool {
        matches!(self, Distribution::Discrete(_))
    }
}

impl From<DiscretePmf> for Distribution {
    fn from(p: DiscretePmf) -> Self {
        Distribution::Discrete(p)
    }
}

impl From<Density> for Distribution {
    fn from(d: Density) -> Self {
        Distribution::Continuous(d)
    }
}

/// Observations of a real random variable, with a label naming their origin.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SampleSet {
    values: Vec<f64>,
    label: String,
}

impl SampleSet {
    /// Rejects empty sets and non-finite values.
    pub fn new(values: Vec<f64>, label: impl Into<String>) -> Result<Self> {
        let label = label.into();
        if values.is_empty() {
            return Err(Error::InvalidSamples {
                label,
                reason: "no observations".into(),
            });
        }
        if let Some(v) = values.iter().find(|v| !v.is_finite()) {
            return Err(Error::InvalidSamples {
                label,
                reason: format!("non-finite value {v}"),
            });
        }
        Ok(Self { values, label })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Draws `n` i.i.d. observations. The output depends only on
/// `(dist, n, seed)`.
pub fn draw_samples(dist: &Distribution, n: usize, seed: u64) -> Result<SampleSet> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "sample size must be at least 1".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let values = (0..n).map(|_| dist.sample(&mut rng)).collect();
    SampleSet::new(values, format!("draw(seed={seed})"))
}

/// An event whose probability can be measured.
#[derive(Debug, Clone, PartialEq)]
pub enum Event {
    /// Closed interval `[lo, hi]`.
    Interval { lo: f64, hi: f64 },
    /// Finite set of points.
    Points(Vec<f64>),
}

/// A probability measure rotated by the constant phase `e^{i theta}`.
#[derive(Debug, Clone, PartialEq)]
pub struct PhasedMeasure {
    pub base: Distribution,
    pub theta: f64,
}

impl PhasedMeasure {
    pub fn new(base: Distribution, theta: f64) -> Self {
        Self { base, theta }
    }

    /// `e^{i theta} P(event)`.
    pub fn event_measure(&self, event: &Event) -> Result<ComplexAmplitude> {
        let prob = match (event, &self.base) {
            (Event::Interval { lo, hi }, _) if lo > hi || lo.is_nan() || hi.is_nan() => {
                return Err(Error::MalformedInterval { lo: *lo, hi: *hi })
            }
            (Event::Interval { lo, hi }, Distribution::Discrete(p)) => p.interval_mass(*lo, *hi),
            (Event::Interval { lo, hi }, Distribution::Continuous(d)) => d.interval_mass(*lo, *hi),
            (Event::Points(xs), Distribution::Discrete(p)) => {
                let mut xs = xs.clone();
                xs.sort_by(f64::total_cmp);
                xs.dedup();
                xs.iter().map(|&x| p.mass_at(x)).sum()
            }
            (Event::Points(_), Distribution::Continuous(_)) => 0.0,
        };
        Ok(ComplexAmplitude::from_polar(prob, self.theta))
    }
}
