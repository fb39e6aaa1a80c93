use std::f64::consts::{PI, SQRT_2};

use libm::erfc;
use rand::Rng;
use rand_distr::{Distribution as _, StandardNormal};

use crate::error::{Error, Result};

/// Half-width, in standard deviations, of the window a normal density is
/// integrated over. The two tails beyond it carry about 2e-17 of mass.
pub const NORMAL_TRUNCATION_SIGMAS: f64 = 8.5;

/// Half-width, in scale units, of the window a Laplace density is integrated
/// over. The tails beyond it carry `exp(-28)` of mass.
pub const LAPLACE_TRUNCATION_SCALES: f64 = 28.0;

/// Tolerance on the total mass of a continuous density.
pub const MASS_TOLERANCE: f64 = 1e-8;

/// Which one-sided limit to take when evaluating at a jump.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Side {
    /// Limit from below.
    Left,
    /// Limit from above.
    Right,
}

/// Parametric family of a [`Density`].
#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    Uniform {
        a: f64,
        b: f64,
    },
    Normal {
        mu: f64,
        sigma: f64,
    },
    Laplace {
        mu: f64,
        b: f64,
    },
    PiecewiseConst {
        breaks: Vec<f64>,
        levels: Vec<f64>,
    },
    Mixture {
        weights: Vec<f64>,
        components: Vec<Density>,
        disjoint: bool,
    },
    Grid(GridDensity),
}

/// Piecewise-linear density tabulated on increasing grid points, zero
/// outside the grid.
#[derive(Debug, Clone, PartialEq)]
pub struct GridDensity {
    points: Vec<f64>,
    values: Vec<f64>,
    cumulative: Vec<f64>,
}

impl GridDensity {
    pub fn points(&self) -> &[f64] {
        &self.points
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    fn eval(&self, x: f64) -> f64 {
        let pts = &self.points;
        let last = pts.len() - 1;
        if x < pts[0] || x > pts[last] {
            return 0.0;
        }
        let i = pts.partition_point(|&p| p <= x);
        if i > last {
            return self.values[last];
        }
        let (x0, x1) = (pts[i - 1], pts[i]);
        let (v0, v1) = (self.values[i - 1], self.values[i]);
        v0 + (v1 - v0) * (x - x0) / (x1 - x0)
    }

    fn cdf(&self, x: f64) -> f64 {
        let pts = &self.points;
        if x <= pts[0] {
            return 0.0;
        }
        if x >= pts[pts.len() - 1] {
            return 1.0;
        }
        let i = pts.partition_point(|&p| p <= x);
        let x0 = pts[i - 1];
        let v0 = self.values[i - 1];
        let vx = self.eval(x);
        self.cumulative[i - 1] + 0.5 * (v0 + vx) * (x - x0)
    }

    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        let u: f64 = rng.random();
        let k = self
            .cumulative
            .partition_point(|&c| c < u)
            .clamp(1, self.points.len() - 1);
        let (x0, x1) = (self.points[k - 1], self.points[k]);
        let (v0, v1) = (self.values[k - 1], self.values[k]);
        let seg_mass = self.cumulative[k] - self.cumulative[k - 1];
        let target = (u - self.cumulative[k - 1]).clamp(0.0, seg_mass);
        let w = x1 - x0;
        let slope = (v1 - v0) / w;
        // Solve v0 t + slope t^2 / 2 = target for t in [0, w].
        let t = if slope.abs() < 1e-300 || (slope * w).abs() < 1e-12 * v0.max(v1) {
            if v0 > 0.0 {
                target / v0
            } else {
                w * rng.random::<f64>()
            }
        } else {
            let disc = (v0 * v0 + 2.0 * slope * target).max(0.0);
            2.0 * target / (v0 + disc.sqrt())
        };
        if t.is_finite() {
            x0 + t.clamp(0.0, w)
        } else {
            x0 + w * rng.random::<f64>()
        }
    }
}

/// A continuous probability distribution on the real line.
#[derive(Debug, Clone, PartialEq)]
pub struct Density {
    family: Family,
}

fn check_finite(name: &str, values: &[f64]) -> Result<()> {
    match values.iter().find(|v| !v.is_finite()) {
        Some(v) => Err(Error::InvalidDistribution(format!(
            "{name}: non-finite value {v}"
        ))),
        None => Ok(()),
    }
}

fn check_increasing(name: &str, xs: &[f64]) -> Result<()> {
    if xs.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidDistribution(format!(
            "{name} must be strictly increasing"
        )));
    }
    Ok(())
}

impl Density {
    pub fn uniform(a: f64, b: f64) -> Result<Self> {
        check_finite("uniform", &[a, b])?;
        if a >= b {
            return Err(Error::InvalidDistribution(format!(
                "uniform needs a < b, got [{a}, {b}]"
            )));
        }
        Ok(Self {
            family: Family::Uniform { a, b },
        })
    }

    pub fn normal(mu: f64, sigma: f64) -> Result<Self> {
        check_finite("normal", &[mu, sigma])?;
        if sigma <= 0.0 {
            return Err(Error::InvalidDistribution(format!(
                "normal needs sigma > 0, got {sigma}"
            )));
        }
        Ok(Self {
            family: Family::Normal { mu, sigma },
        })
    }

    pub fn laplace(mu: f64, b: f64) -> Result<Self> {
        check_finite("laplace", &[mu, b])?;
        if b <= 0.0 {
            return Err(Error::InvalidDistribution(format!(
                "laplace needs b > 0, got {b}"
            )));
        }
        Ok(Self {
            family: Family::Laplace { mu, b },
        })
    }

    /// Step density equal to `levels[i]` on `[breaks[i], breaks[i + 1])`.
    pub fn piecewise(breaks: Vec<f64>, levels: Vec<f64>) -> Result<Self> {
        check_finite("piecewise breaks", &breaks)?;
        check_finite("piecewise levels", &levels)?;
        if levels.is_empty() || breaks.len() != levels.len() + 1 {
            return Err(Error::InvalidDistribution(format!(
                "piecewise needs len(breaks) = len(levels) + 1, got {} and {}",
                breaks.len(),
                levels.len()
            )));
        }
        check_increasing("piecewise breaks", &breaks)?;
        if let Some(l) = levels.iter().find(|&&l| l < 0.0) {
            return Err(Error::InvalidDistribution(format!(
                "negative density level {l}"
            )));
        }
        let mass: f64 = breaks
            .windows(2)
            .zip(&levels)
            .map(|(w, l)| l * (w[1] - w[0]))
            .sum();
        if (mass - 1.0).abs() > MASS_TOLERANCE {
            return Err(Error::InvalidDistribution(format!(
                "piecewise density integrates to {mass}, expected 1"
            )));
        }
        Ok(Self {
            family: Family::PiecewiseConst { breaks, levels },
        })
    }

    /// Uniform density over a union of disjoint intervals.
    pub fn uniform_on(intervals: &[(f64, f64)]) -> Result<Self> {
        let mut iv = intervals.to_vec();
        iv.sort_by(|a, b| a.0.total_cmp(&b.0));
        let total: f64 = iv.iter().map(|(a, b)| b - a).sum();
        if iv.is_empty() || iv.iter().any(|(a, b)| a >= b) || iv.windows(2).any(|w| w[0].1 > w[1].0)
        {
            return Err(Error::InvalidDistribution(
                "intervals must be nonempty and disjoint".into(),
            ));
        }
        let mut breaks = vec![iv[0].0];
        let mut levels = Vec::new();
        for (i, &(a, b)) in iv.iter().enumerate() {
            if i > 0 {
                let prev_end = iv[i - 1].1;
                if a > prev_end {
                    breaks.push(a);
                    levels.push(0.0);
                }
            }
            breaks.push(b);
            levels.push(1.0 / total);
        }
        Self::piecewise(breaks, levels)
    }

    /// General finite mixture `sum_i weights[i] * components[i]`.
    pub fn mixture(weights: Vec<f64>, components: Vec<Density>) -> Result<Self> {
        Self::build_mixture(weights, components, false)
    }

    /// Mixture whose components must have pairwise disjoint supports.
    pub fn disjoint_mixture(weights: Vec<f64>, components: Vec<Density>) -> Result<Self> {
        Self::build_mixture(weights, components, true)
    }

    fn build_mixture(weights: Vec<f64>, components: Vec<Density>, disjoint: bool) -> Result<Self> {
        check_finite("mixture weights", &weights)?;
        if components.is_empty() || weights.len() != components.len() {
            return Err(Error::InvalidDistribution(
                "mixture needs one weight per component".into(),
            ));
        }
        if weights.iter().any(|&w| w < 0.0) {
            return Err(Error::InvalidDistribution("negative mixture weight".into()));
        }
        let sum: f64 = weights.iter().sum();
        if (sum - 1.0).abs() > 1e-9 {
            return Err(Error::InvalidDistribution(format!(
                "mixture weights sum to {sum}"
            )));
        }
        if disjoint {
            let mut supports: Vec<(f64, f64)> = components.iter().map(Density::support).collect();
            supports.sort_by(|a, b| a.0.total_cmp(&b.0));
            if supports.windows(2).any(|w| w[0].1 > w[1].0) {
                return Err(Error::InvalidDistribution(
                    "mixture components flagged disjoint have overlapping supports".into(),
                ));
            }
        }
        Ok(Self {
            family: Family::Mixture {
                weights,
                components,
                disjoint,
            },
        })
    }

    /// Piecewise-linear density on a grid. The trapezoid mass must be 1.
    pub fn grid(points: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        let g = Self::grid_unchecked_mass(points, values)?;
        let mass = match &g.family {
            Family::Grid(grid) => *grid.cumulative.last().unwrap(),
            _ => unreachable!(),
        };
        if (mass - 1.0).abs() > MASS_TOLERANCE {
            return Err(Error::InvalidDistribution(format!(
                "grid density integrates to {mass}, expected 1"
            )));
        }
        Ok(g)
    }

    /// Grid density with the values rescaled so the trapezoid mass is 1.
    pub fn grid_normalized(points: Vec<f64>, mut values: Vec<f64>) -> Result<Self> {
        let raw = Self::grid_unchecked_mass(points.clone(), values.clone())?;
        let mass = match &raw.family {
            Family::Grid(grid) => *grid.cumulative.last().unwrap(),
            _ => unreachable!(),
        };
        if mass <= 0.0 {
            return Err(Error::InvalidDistribution(
                "grid density has zero mass".into(),
            ));
        }
        values.iter_mut().for_each(|v| *v /= mass);
        Self::grid_unchecked_mass(points, values)
    }

    fn grid_unchecked_mass(points: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        check_finite("grid points", &points)?;
        check_finite("grid values", &values)?;
        if points.len() < 2 || points.len() != values.len() {
            return Err(Error::InvalidDistribution(
                "grid needs at least two points and one value per point".into(),
            ));
        }
        check_increasing("grid points", &points)?;
        if values.iter().any(|&v| v < 0.0) {
            return Err(Error::InvalidDistribution(
                "negative grid density value".into(),
            ));
        }
        let mut cumulative = Vec::with_capacity(points.len());
        cumulative.push(0.0);
        for i in 1..points.len() {
            let seg = 0.5 * (values[i - 1] + values[i]) * (points[i] - points[i - 1]);
            cumulative.push(cumulative[i - 1] + seg);
        }
        Ok(Self {
            family: Family::Grid(GridDensity {
                points,
                values,
                cumulative,
            }),
        })
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    /// Density at `x`. Step densities are right-continuous inside their
    /// support and include both endpoints.
    pub fn pdf(&self, x: f64) -> f64 {
        match &self.family {
            Family::Uniform { a, b } => {
                if x >= *a && x <= *b {
                    1.0 / (b - a)
                } else {
                    0.0
                }
            }
            Family::PiecewiseConst { breaks, levels } => {
                let last = breaks.len() - 1;
                if x < breaks[0] || x > breaks[last] {
                    0.0
                } else if x == breaks[last] {
                    levels[last - 1]
                } else {
                    levels[breaks.partition_point(|&b| b <= x) - 1]
                }
            }
            Family::Mixture {
                weights,
                components,
                ..
            } => weights
                .iter()
                .zip(components)
                .map(|(w, c)| w * c.pdf(x))
                .sum(),
            _ => self.smooth_pdf(x),
        }
    }

    fn smooth_pdf(&self, x: f64) -> f64 {
        match &self.family {
            Family::Normal { mu, sigma } => {
                let z = (x - mu) / sigma;
                (-0.5 * z * z).exp() / ((2.0 * PI).sqrt() * sigma)
            }
            Family::Laplace { mu, b } => (-(x - mu).abs() / b).exp() / (2.0 * b),
            Family::Grid(g) => g.eval(x),
            _ => unreachable!("smooth_pdf on a step family"),
        }
    }

    /// One-sided limit of the density at `x`.
    pub(crate) fn pdf_side(&self, x: f64, side: Side) -> f64 {
        match &self.family {
            Family::Uniform { a, b } => {
                let inside = match side {
                    Side::Left => x > *a && x <= *b,
                    Side::Right => x >= *a && x < *b,
                };
                if inside {
                    1.0 / (b - a)
                } else {
                    0.0
                }
            }
            Family::PiecewiseConst { breaks, levels } => {
                let last = breaks.len() - 1;
                match side {
                    Side::Right => {
                        if x < breaks[0] || x >= breaks[last] {
                            0.0
                        } else {
                            levels[breaks.partition_point(|&b| b <= x) - 1]
                        }
                    }
                    Side::Left => {
                        if x <= breaks[0] || x > breaks[last] {
                            0.0
                        } else {
                            levels[breaks.partition_point(|&b| b < x) - 1]
                        }
                    }
                }
            }
            Family::Grid(g) => {
                let (lo, hi) = (g.points[0], g.points[g.points.len() - 1]);
                match side {
                    Side::Left if x <= lo => 0.0,
                    Side::Right if x >= hi => 0.0,
                    _ => g.eval(x),
                }
            }
            Family::Mixture {
                weights,
                components,
                ..
            } => weights
                .iter()
                .zip(components)
                .map(|(w, c)| w * c.pdf_side(x, side))
                .sum(),
            _ => self.smooth_pdf(x),
        }
    }

    /// `P(X <= x)`.
    pub fn cdf(&self, x: f64) -> f64 {
        match &self.family {
            Family::Uniform { a, b } => ((x - a) / (b - a)).clamp(0.0, 1.0),
            Family::Normal { mu, sigma } => 0.5 * erfc(-(x - mu) / (sigma * SQRT_2)),
            Family::Laplace { mu, b } => {
                if x < *mu {
                    0.5 * ((x - mu) / b).exp()
                } else {
                    1.0 - 0.5 * (-(x - mu) / b).exp()
                }
            }
            Family::PiecewiseConst { breaks, levels } => breaks
                .windows(2)
                .zip(levels)
                .map(|(w, l)| l * (x.min(w[1]) - w[0]).max(0.0))
                .sum::<f64>()
                .min(1.0),
            Family::Mixture {
                weights,
                components,
                ..
            } => weights
                .iter()
                .zip(components)
                .map(|(w, c)| w * c.cdf(x))
                .sum(),
            Family::Grid(g) => g.cdf(x),
        }
    }

    /// `P(lo <= X <= hi)`.
    pub fn interval_mass(&self, lo: f64, hi: f64) -> f64 {
        (self.cdf(hi) - self.cdf(lo)).max(0.0)
    }

    /// Interval outside of which the density is zero (or, for the normal and
    /// Laplace families, carries negligible tail mass).
    pub fn support(&self) -> (f64, f64) {
        let bp = self.breakpoints();
        (bp[0], bp[bp.len() - 1])
    }

    /// Sorted points between which the density is smooth. Integration
    /// panels never straddle one of these.
    pub fn breakpoints(&self) -> Vec<f64> {
        match &self.family {
            Family::Uniform { a, b } => vec![*a, *b],
            Family::Normal { mu, sigma } => {
                let w = NORMAL_TRUNCATION_SIGMAS * sigma;
                vec![mu - w, *mu, mu + w]
            }
            Family::Laplace { mu, b } => {
                let w = LAPLACE_TRUNCATION_SCALES * b;
                vec![mu - w, *mu, mu + w]
            }
            Family::PiecewiseConst { breaks, .. } => breaks.clone(),
            Family::Grid(g) => g.points.clone(),
            Family::Mixture { components, .. } => {
                let mut all: Vec<f64> = components.iter().flat_map(Density::breakpoints).collect();
                all.sort_by(f64::total_cmp);
                all.dedup();
                all
            }
        }
    }

    /// Supremum of the density. For overlapping mixtures this is an upper
    /// bound rather than the exact maximum.
    pub fn max_density(&self) -> f64 {
        match &self.family {
            Family::Uniform { a, b } => 1.0 / (b - a),
            Family::Normal { sigma, .. } => 1.0 / ((2.0 * PI).sqrt() * sigma),
            Family::Laplace { b, .. } => 1.0 / (2.0 * b),
            Family::PiecewiseConst { levels, .. } => levels.iter().copied().fold(0.0, f64::max),
            Family::Grid(g) => g.values.iter().copied().fold(0.0, f64::max),
            Family::Mixture {
                weights,
                components,
                disjoint,
            } => {
                let parts = weights
                    .iter()
                    .zip(components)
                    .map(|(w, c)| w * c.max_density());
                if *disjoint {
                    parts.fold(0.0, f64::max)
                } else {
                    parts.sum()
                }
            }
        }
    }

    /// Distribution of `X + offset`.
    pub fn shifted(&self, offset: f64) -> Self {
        self.affine(1.0, offset)
    }

    /// Distribution of `X / a`, i.e. the density `a * p(a * x)`.
    pub fn scaled(&self, a: f64) -> Result<Self> {
        if !(a > 0.0 && a.is_finite()) {
            return Err(Error::InvalidArgument(format!(
                "scale factor must be positive, got {a}"
            )));
        }
        Ok(self.affine(1.0 / a, 0.0))
    }

    /// Distribution of `c * X + offset` for `c > 0`.
    fn affine(&self, c: f64, offset: f64) -> Self {
        let map = |x: f64| c * x + offset;
        let family = match &self.family {
            Family::Uniform { a, b } => Family::Uniform {
                a: map(*a),
                b: map(*b),
            },
            Family::Normal { mu, sigma } => Family::Normal {
                mu: map(*mu),
                sigma: c * sigma,
            },
            Family::Laplace { mu, b } => Family::Laplace {
                mu: map(*mu),
                b: c * b,
            },
            Family::PiecewiseConst { breaks, levels } => Family::PiecewiseConst {
                breaks: breaks.iter().map(|&x| map(x)).collect(),
                levels: levels.iter().map(|l| l / c).collect(),
            },
            Family::Grid(g) => Family::Grid(GridDensity {
                points: g.points.iter().map(|&x| map(x)).collect(),
                values: g.values.iter().map(|v| v / c).collect(),
                cumulative: g.cumulative.clone(),
            }),
            Family::Mixture {
                weights,
                components,
                disjoint,
            } => Family::Mixture {
                weights: weights.clone(),
                components: components.iter().map(|d| d.affine(c, offset)).collect(),
                disjoint: *disjoint,
            },
        };
        Self { family }
    }

    /// One draw from the distribution.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        match &self.family {
            Family::Uniform { a, b } => a + (b - a) * rng.random::<f64>(),
            Family::Normal { mu, sigma } => {
                let z: f64 = StandardNormal.sample(rng);
                mu + sigma * z
            }
            Family::Laplace { mu, b } => {
                let u: f64 = rng.random::<f64>() - 0.5;
                mu - b * u.signum() * (1.0 - 2.0 * u.abs()).ln()
            }
            Family::PiecewiseConst { breaks, levels } => {
                let u: f64 = rng.random();
                let mut acc = 0.0;
                let mut chosen = levels.len() - 1;
                for (i, (w, l)) in breaks.windows(2).zip(levels).enumerate() {
                    acc += l * (w[1] - w[0]);
                    if u < acc && *l > 0.0 {
                        chosen = i;
                        break;
                    }
                }
                while levels[chosen] == 0.0 && chosen > 0 {
                    chosen -= 1;
                }
                breaks[chosen] + (breaks[chosen + 1] - breaks[chosen]) * rng.random::<f64>()
            }
            Family::Mixture {
                weights,
                components,
                ..
            } => {
                let u: f64 = rng.random();
                let mut acc = 0.0;
                let mut chosen = components.len() - 1;
                for (i, w) in weights.iter().enumerate() {
                    acc += w;
                    if u < acc {
                        chosen = i;
                        break;
                    }
                }
                components[chosen].sample(rng)
            }
            Family::Grid(g) => g.sample(rng),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn closed_form_values() {
        assert_eq!(Density::uniform(0.0, 1.0).unwrap().pdf(0.5), 1.0);
        assert_abs_diff_eq!(
            Density::normal(0.0, 1.0).unwrap().pdf(0.0),
            0.398_942_280_401_432_7,
            epsilon = 1e-15
        );
        let pw = Density::piecewise(vec![0.0, 0.5, 1.0], vec![0.5, 1.5]).unwrap();
        assert_eq!(pw.pdf(0.75), 1.5);
        assert_eq!(pw.pdf(0.25), 0.5);
        assert_eq!(pw.pdf(1.0), 1.5);
        assert_eq!(pw.pdf(1.5), 0.0);
    }

    #[test]
    fn one_sided_limits_at_jumps() {
        let pw = Density::piecewise(vec![0.0, 0.5, 1.0], vec![0.5, 1.5]).unwrap();
        assert_eq!(pw.pdf_side(0.5, Side::Left), 0.5);
        assert_eq!(pw.pdf_side(0.5, Side::Right), 1.5);
        assert_eq!(pw.pdf_side(0.0, Side::Left), 0.0);
        assert_eq!(pw.pdf_side(1.0, Side::Right), 0.0);
        let u = Density::uniform(0.0, 2.0).unwrap();
        assert_eq!(u.pdf_side(2.0, Side::Left), 0.5);
        assert_eq!(u.pdf_side(2.0, Side::Right), 0.0);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(Density::uniform(1.0, 1.0).is_err());
        assert!(Density::normal(0.0, 0.0).is_err());
        assert!(Density::laplace(0.0, -1.0).is_err());
        assert!(Density::piecewise(vec![0.0, 1.0], vec![0.9]).is_err());
        assert!(Density::piecewise(vec![0.0, 1.0, 0.5], vec![1.0, 1.0]).is_err());
        assert!(Density::grid(vec![0.0, 1.0], vec![1.0, 0.5]).is_err());
        let u = Density::uniform(0.0, 2.0).unwrap();
        let v = Density::uniform(1.0, 3.0).unwrap();
        assert!(Density::disjoint_mixture(vec![0.5, 0.5], vec![u.clone(), v.clone()]).is_err());
        assert!(Density::mixture(vec![0.5, 0.5], vec![u, v]).is_ok());
    }

    #[test]
    fn grid_interpolates_linearly() {
        let g = Density::grid(vec![0.0, 1.0, 2.0], vec![0.0, 1.0, 0.0]).unwrap();
        assert_eq!(g.pdf(0.5), 0.5);
        assert_eq!(g.pdf(1.0), 1.0);
        assert_eq!(g.pdf(-0.1), 0.0);
        assert_eq!(g.pdf(2.1), 0.0);
        assert_abs_diff_eq!(g.cdf(1.0), 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(g.cdf(0.5), 0.125, epsilon = 1e-15);
    }

    #[test]
    fn disjoint_mixture_matches_weighted_component() {
        let a = Density::uniform(0.0, 1.0).unwrap();
        let b = Density::normal(10.0, 0.5).unwrap();
        let m = Density::disjoint_mixture(vec![0.3, 0.7], vec![a.clone(), b.clone()]).unwrap();
        for x in [0.2, 0.9, 9.0, 10.0, 11.3] {
            let expected = if x <= 1.0 {
                0.3 * a.pdf(x)
            } else {
                0.7 * b.pdf(x)
            };
            assert_abs_diff_eq!(m.pdf(x), expected, epsilon = 1e-15);
        }
    }

    #[test]
    fn uniform_on_two_intervals() {
        let d = Density::uniform_on(&[(0.0, 1.0), (2.0, 3.0)]).unwrap();
        assert_eq!(d.pdf(0.5), 0.5);
        assert_eq!(d.pdf(1.5), 0.0);
        assert_eq!(d.pdf(2.5), 0.5);
    }

    #[test]
    fn scaling_and_shift() {
        let n = Density::normal(0.0, 1.0).unwrap();
        let s = n.scaled(4.0).unwrap();
        assert_eq!(s, Density::normal(0.0, 0.25).unwrap());
        assert_abs_diff_eq!(s.pdf(0.1), 4.0 * n.pdf(0.4), epsilon = 1e-14);
        let t = n.shifted(2.0);
        assert_abs_diff_eq!(t.pdf(2.3), n.pdf(0.3), epsilon = 1e-15);
    }

    #[test]
    fn cdfs_are_consistent() {
        let l = Density::laplace(1.0, 2.0).unwrap();
        assert_abs_diff_eq!(l.cdf(1.0), 0.5, epsilon = 1e-15);
        let n = Density::normal(0.0, 1.0).unwrap();
        assert_abs_diff_eq!(n.cdf(1.96), 0.975_002_104_851_780, epsilon = 1e-12);
        let pw = Density::piecewise(vec![0.0, 0.5, 1.0], vec![0.5, 1.5]).unwrap();
        assert_abs_diff_eq!(pw.cdf(0.75), 0.25 + 0.375, epsilon = 1e-15);
    }
}
