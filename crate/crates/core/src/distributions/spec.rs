//! JSON description of a distribution, e.g. `{"kind":"normal","mu":0,"sigma":1}`.

use serde::{Deserialize, Serialize};

use super::{Density, DiscretePmf, Distribution, Family};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum DistSpec {
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
    Piecewise {
        breaks: Vec<f64>,
        levels: Vec<f64>,
    },
    Grid {
        points: Vec<f64>,
        values: Vec<f64>,
    },
    Mixture {
        weights: Vec<f64>,
        components: Vec<DistSpec>,
        #[serde(default, skip_serializing_if = "std::ops::Not::not")]
        disjoint: bool,
    },
    Pmf {
        atoms: Vec<(f64, f64)>,
    },
    Bernoulli {
        p: f64,
    },
}

impl DistSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Spec(e.to_string()))
    }

    pub fn build(&self) -> Result<Distribution> {
        Ok(match self {
            DistSpec::Pmf { atoms } => Distribution::Discrete(DiscretePmf::new(atoms)?),
            DistSpec::Bernoulli { p } => Distribution::Discrete(DiscretePmf::bernoulli(*p)?),
            other => Distribution::Continuous(other.build_density()?),
        })
    }

    fn build_density(&self) -> Result<Density> {
        match self {
            DistSpec::Uniform { a, b } => Density::uniform(*a, *b),
            DistSpec::Normal { mu, sigma } => Density::normal(*mu, *sigma),
            DistSpec::Laplace { mu, b } => Density::laplace(*mu, *b),
            DistSpec::Piecewise { breaks, levels } => {
                Density::piecewise(breaks.clone(), levels.clone())
            }
            DistSpec::Grid { points, values } => Density::grid(points.clone(), values.clone()),
            DistSpec::Mixture {
                weights,
                components,
                disjoint,
            } => {
                let comps = components
                    .iter()
                    .map(DistSpec::build_density)
                    .collect::<Result<Vec<_>>>()?;
                if *disjoint {
                    Density::disjoint_mixture(weights.clone(), comps)
                } else {
                    Density::mixture(weights.clone(), comps)
                }
            }
            DistSpec::Pmf { .. } | DistSpec::Bernoulli { .. } => Err(Error::Spec(
                "mixture components must be continuous densities".into(),
            )),
        }
    }
}

impl From<&Density> for DistSpec {
    fn from(d: &Density) -> Self {
        match d.family() {
            Family::Uniform { a, b } => DistSpec::Uniform { a: *a, b: *b },
            Family::Normal { mu, sigma } => DistSpec::Normal {
                mu: *mu,
                sigma: *sigma,
            },
            Family::Laplace { mu, b } => DistSpec::Laplace { mu: *mu, b: *b },
            Family::PiecewiseConst { breaks, levels } => DistSpec::Piecewise {
                breaks: breaks.clone(),
                levels: levels.clone(),
            },
            Family::Grid(g) => DistSpec::Grid {
                points: g.points().to_vec(),
                values: g.values().to_vec(),
            },
            Family::Mixture {
                weights,
                components,
                disjoint,
            } => DistSpec::Mixture {
                weights: weights.clone(),
                components: components.iter().map(DistSpec::from).collect(),
                disjoint: *disjoint,
            },
        }
    }
}

impl From<&Distribution> for DistSpec {
    fn from(d: &Distribution) -> Self {
        match d {
            Distribution::Discrete(p) => DistSpec::Pmf {
                atoms: p.atoms().collect(),
            },
            Distribution::Continuous(c) => DistSpec::from(c),
        }
    }
}
