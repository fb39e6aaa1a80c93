//! Monte-Carlo complex entropy of `Normal(0, sigma)` over a fixed
//! `(beta, sigma)` grid, with quadrature values as the reference column.

use std::io::Write;

use cplxinfo::{ce_monte_carlo, ce_quadrature, derive_seed, Density, Distribution};
use serde_json::{json, Value};

use crate::output::{fmt_num, round9, Report};
use crate::CliError;

pub const BETAS: [f64; 7] = [0.01, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0];
pub const SIGMAS: [f64; 6] = [0.01, 0.1, 1.0, 10.0, 50.0, 100.0];
pub const MIN_SAMPLES: usize = 100;

#[derive(Debug, Clone, PartialEq)]
pub struct Cell {
    pub beta: f64,
    pub sigma: f64,
    pub ce_mc: f64,
    pub ce_mc_stderr: f64,
    pub ce_quadrature: f64,
    pub seed: u64,
}

/// Cells in row-major order (beta outer, sigma inner). Cell `k` is seeded
/// with `derive_seed(seed, k)`.
pub fn table2(samples: usize, seed: u64) -> Result<Vec<Cell>, CliError> {
    if samples < MIN_SAMPLES {
        return Err(CliError::Data(format!(
            "table2 needs --samples >= {MIN_SAMPLES}, got {samples}"
        )));
    }
    let mut cells = Vec::with_capacity(BETAS.len() * SIGMAS.len());
    for &beta in &BETAS {
        for &sigma in &SIGMAS {
            let k = cells.len() as u64;
            let density = Density::normal(0.0, sigma)?;
            let quad = ce_quadrature(&density, beta)?.value;
            let cell_seed = derive_seed(seed, k);
            let mc = ce_monte_carlo(&Distribution::Continuous(density), beta, samples, cell_seed)?;
            cells.push(Cell {
                beta,
                sigma,
                ce_mc: mc.value,
                ce_mc_stderr: mc.stderr.unwrap_or(0.0),
                ce_quadrature: quad,
                seed: cell_seed,
            });
        }
    }
    Ok(cells)
}

pub(crate) fn run(
    samples: usize,
    seed: u64,
    json: bool,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let cells = table2(samples, seed)?;
    if json {
        let rows: Vec<Value> = cells
            .iter()
            .map(|c| {
                json!({
                    "beta": round9(c.beta),
                    "sigma": round9(c.sigma),
                    "ce_mc": round9(c.ce_mc),
                    "ce_mc_stderr": round9(c.ce_mc_stderr),
                    "ce_quadrature": round9(c.ce_quadrature),
                })
            })
            .collect();
        Report::new("table2")
            .int("samples", samples as u64)
            .int("seed", seed)
            .raw("cells", Value::Array(rows))
            .write_json(out)?;
    } else {
        writeln!(out, "# cplxinfo table2 samples={samples} seed={seed}")?;
        writeln!(out, "beta,sigma,ce_mc,ce_mc_stderr,ce_quadrature")?;
        for c in &cells {
            writeln!(
                out,
                "{},{},{},{},{}",
                fmt_num(c.beta),
                fmt_num(c.sigma),
                fmt_num(c.ce_mc),
                fmt_num(c.ce_mc_stderr),
                fmt_num(c.ce_quadrature)
            )?;
        }
    }
    Ok(())
}
