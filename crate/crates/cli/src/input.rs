//! Distribution specs and sample files given on the command line.

use std::fs;
use std::path::Path;

use cplxinfo::{DiscretePmf, DistSpec, Distribution, SampleSet};

use crate::CliError;

/// Parses a distribution given as inline JSON, a path to a JSON file, or a
/// shorthand such as `bern(0.3)`, `normal(0,1)`, `uniform(a,b)`,
/// `laplace(mu,b)` or `point(x)`.
pub fn parse_distribution(arg: &str) -> Result<(Distribution, DistSpec), CliError> {
    let text = arg.trim();
    let spec = if text.starts_with('{') {
        DistSpec::from_json(text).map_err(|e| CliError::Data(e.to_string()))?
    } else if let Some(spec) = parse_shorthand(text)? {
        spec
    } else if Path::new(text).is_file() {
        let body = fs::read_to_string(text).map_err(|e| CliError::Data(format!("{text}: {e}")))?;
        DistSpec::from_json(&body).map_err(|e| CliError::Data(format!("{text}: {e}")))?
    } else {
        return Err(CliError::Data(format!(
            "cannot interpret distribution {text:?}: expected JSON, a JSON file, or a shorthand like normal(0,1)"
        )));
    };
    let dist = spec.build().map_err(|e| CliError::Data(e.to_string()))?;
    // Echo the canonical form (sorted atoms, renormalized masses).
    let canonical = DistSpec::from(&dist);
    let echoed = match (&spec, &dist) {
        (DistSpec::Bernoulli { .. }, _) | (DistSpec::Pmf { .. }, _) => canonical,
        _ => spec,
    };
    Ok((dist, echoed))
}

fn parse_shorthand(text: &str) -> Result<Option<DistSpec>, CliError> {
    let Some(open) = text.find('(') else {
        return Ok(None);
    };
    if !text.ends_with(')') {
        return Ok(None);
    }
    let name = text[..open].trim().to_ascii_lowercase();
    let args: Vec<f64> = text[open + 1..text.len() - 1]
        .split(',')
        .map(|a| a.trim())
        .filter(|a| !a.is_empty())
        .map(|a| {
            a.parse::<f64>()
                .map_err(|_| CliError::Data(format!("bad number {a:?} in {text:?}")))
        })
        .collect::<Result<_, _>>()?;
    let arity = |n: usize| -> Result<(), CliError> {
        if args.len() == n {
            Ok(())
        } else {
            Err(CliError::Data(format!(
                "{name} takes {n} argument(s), got {}",
                args.len()
            )))
        }
    };
    let spec = match name.as_str() {
        "bern" | "bernoulli" => {
            arity(1)?;
            DistSpec::Bernoulli { p: args[0] }
        }
        "normal" => {
            arity(2)?;
            DistSpec::Normal {
                mu: args[0],
                sigma: args[1],
            }
        }
        "uniform" => {
            arity(2)?;
            DistSpec::Uniform {
                a: args[0],
                b: args[1],
            }
        }
        "laplace" => {
            arity(2)?;
            DistSpec::Laplace {
                mu: args[0],
                b: args[1],
            }
        }
        "point" => {
            arity(1)?;
            let pmf =
                DiscretePmf::point_mass(args[0]).map_err(|e| CliError::Data(e.to_string()))?;
            DistSpec::Pmf {
                atoms: pmf.atoms().collect(),
            }
        }
        _ => {
            return Err(CliError::Data(format!(
                "unknown distribution shorthand {name:?}"
            )))
        }
    };
    Ok(Some(spec))
}

/// Reads observations from a file holding one number per line, or a CSV
/// file with a `value` column.
pub fn read_samples(path: &Path) -> Result<SampleSet, CliError> {
    let label = path.display().to_string();
    let body = fs::read_to_string(path).map_err(|e| CliError::Data(format!("{label}: {e}")))?;
    let first = body.lines().map(str::trim).find(|l| !l.is_empty());
    let values = match first {
        None => Vec::new(),
        Some(line) if line.parse::<f64>().is_ok() => body
            .lines()
            .map(str::trim)
            .enumerate()
            .filter(|(_, l)| !l.is_empty())
            .map(|(i, l)| {
                l.parse::<f64>()
                    .map_err(|_| CliError::Data(format!("{label}:{}: not a number: {l:?}", i + 1)))
            })
            .collect::<Result<Vec<_>, _>>()?,
        Some(_) => read_csv_values(&body, &label)?,
    };
    SampleSet::new(values, label).map_err(|e| CliError::Data(e.to_string()))
}

fn read_csv_values(body: &str, label: &str) -> Result<Vec<f64>, CliError> {
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_reader(body.as_bytes());
    let headers = reader
        .headers()
        .map_err(|e| CliError::Data(format!("{label}: {e}")))?
        .clone();
    let column = headers
        .iter()
        .position(|h| h.eq_ignore_ascii_case("value"))
        .ok_or_else(|| CliError::Data(format!("{label}: CSV input needs a `value` column")))?;
    reader
        .records()
        .enumerate()
        .map(|(i, rec)| {
            let rec = rec.map_err(|e| CliError::Data(format!("{label}: {e}")))?;
            let cell = rec.get(column).unwrap_or("");
            cell.parse::<f64>().map_err(|_| {
                CliError::Data(format!("{label}: row {}: not a number: {cell:?}", i + 2))
            })
        })
        .collect()
}
