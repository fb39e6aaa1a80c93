use serde::Serialize;

use crate::error::{Error, Result};

/// Largest deviation of the mass sum from 1 that is treated as float noise
/// and silently renormalized.
pub const MASS_SUM_TOLERANCE: f64 = 1e-9;

/// A probability mass function on finitely many real points.
///
/// Atoms are kept in strictly increasing order of their points.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DiscretePmf {
    points: Vec<f64>,
    masses: Vec<f64>,
}

impl DiscretePmf {
    /// Validates and canonicalizes a list of `(point, mass)` atoms.
    ///
    /// Atoms are sorted by point. A mass sum within [`MASS_SUM_TOLERANCE`]
    /// of one is renormalized; anything further off is rejected.
    pub fn new(atoms: &[(f64, f64)]) -> Result<Self> {
        if atoms.is_empty() {
            return Err(Error::InvalidDistribution("PMF has no atoms".into()));
        }
        for &(point, mass) in atoms {
            if !point.is_finite() || !mass.is_finite() {
                return Err(Error::InvalidDistribution(format!(
                    "non-finite atom ({point}, {mass})"
                )));
            }
            if mass < 0.0 {
                return Err(Error::NegativeMass { point, mass });
            }
        }
        let mut sorted = atoms.to_vec();
        sorted.sort_by(|a, b| a.0.total_cmp(&b.0));
        if let Some(w) = sorted.windows(2).find(|w| w[0].0 == w[1].0) {
            return Err(Error::DuplicatePoint(w[0].0));
        }
        let sum: f64 = sorted.iter().map(|a| a.1).sum();
        if (sum - 1.0).abs() > MASS_SUM_TOLERANCE {
            return Err(Error::MassSum { sum });
        }
        let (points, masses) = sorted.into_iter().map(|(x, m)| (x, m / sum)).unzip();
        Ok(Self { points, masses })
    }

    /// Bernoulli distribution with `P(1) = p`. Atoms with zero mass are kept.
    pub fn bernoulli(p: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::InvalidDistribution(format!(
                "Bernoulli parameter {p} outside [0, 1]"
            )));
        }
        Self::new(&[(0.0, 1.0 - p), (1.0, p)])
    }

    /// Unit mass at `x`.
    pub fn point_mass(x: f64) -> Result<Self> {
        Self::new(&[(x, 1.0)])
    }

    /// Empirical PMF of a sample: mass `count / n` on every distinct value.
    pub fn empirical(values: &[f64]) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidDistribution("empty sample".into()));
        }
        let mut sorted = values.to_vec();
        sorted.sort_by(f64::total_cmp);
        let n = sorted.len() as f64;
        let mut points: Vec<f64> = Vec::new();
        let mut masses: Vec<f64> = Vec::new();
        for x in sorted {
            if !x.is_finite() {
                return Err(Error::InvalidDistribution(format!("non-finite value {x}")));
            }
            match points.last() {
                Some(&last) if last == x => *masses.last_mut().unwrap() += 1.0,
                _ => {
                    points.push(x);
                    masses.push(1.0);
                }
            }
        }
        masses.iter_mut().for_each(|m| *m /= n);
        Ok(Self { points, masses })
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }

    pub fn masses(&self) -> &[f64] {
        &self.masses
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn atoms(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.points.iter().copied().zip(self.masses.iter().copied())
    }

    /// Mass at `x`, zero off the atoms.
    pub fn mass_at(&self, x: f64) -> f64 {
        match self.points.binary_search_by(|p| p.total_cmp(&x)) {
            Ok(i) => self.masses[i],
            Err(_) => 0.0,
        }
    }

    /// True when a single atom carries all the mass.
    pub fn is_degenerate(&self) -> bool {
        self.masses.iter().filter(|&&m| m > 0.0).count() == 1
    }

    /// `P(lo <= X <= hi)`.
    pub fn interval_mass(&self, lo: f64, hi: f64) -> f64 {
        self.atoms()
            .filter(|&(x, _)| x >= lo && x <= hi)
            .map(|(_, m)| m)
            .sum()
    }

    /// Shifts every atom by `offset`.
    pub fn shifted(&self, offset: f64) -> Self {
        Self {
            points: self.points.iter().map(|x| x + offset).collect(),
            masses: self.masses.clone(),
        }
    }

    pub(crate) fn cumulative(&self) -> Vec<f64> {
        self.masses
            .iter()
            .scan(0.0, |acc, m| {
                *acc += m;
                Some(*acc)
            })
            .collect()
    }
}
