//! Adaptive Simpson quadrature for phase-modulated integrands.
//!
//! The integrands handled here look like `p(x) e^{i beta p(x)}`: they
//! oscillate in the value of the density rather than in `x`. On top of the
//! usual Richardson error test a panel is only accepted once the phase
//! `beta * p` changes by less than [`QuadConfig::phase_step`] between
//! neighbouring nodes, so panel width tracks the slope of the density.

use num_complex::Complex64;

use crate::distributions::{Density, Side};
use crate::error::{Error, Result};

/// Integrand value together with the phases whose variation must stay
/// resolved. Unused phase slots should repeat a used one.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Node {
    pub value: Complex64,
    pub phases: [f64; 2],
}

impl Node {
    pub fn new(value: Complex64, phases: [f64; 2]) -> Self {
        Self { value, phases }
    }
}

/// Knobs of the adaptive integrator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadConfig {
    /// Absolute error budget for the whole integral.
    pub abs_tol: f64,
    /// Largest phase change allowed between adjacent nodes.
    pub phase_step: f64,
    /// Panels a segment is cut into before adaptation starts.
    pub initial_panels: usize,
    /// Total accepted panels before giving up.
    pub max_panels: usize,
    pub max_depth: u32,
}

impl Default for QuadConfig {
    fn default() -> Self {
        Self {
            abs_tol: 1e-10,
            phase_step: std::f64::consts::PI / 8.0,
            initial_panels: 4,
            max_panels: 20_000_000,
            max_depth: 60,
        }
    }
}

struct Panel {
    a: f64,
    b: f64,
    fa: Node,
    fm: Node,
    fb: Node,
    whole: Complex64,
    tol: f64,
    depth: u32,
}

fn simpson(h: f64, fa: Complex64, fm: Complex64, fb: Complex64) -> Complex64 {
    (fa + fm * 4.0 + fb) * (h / 6.0)
}

fn phase_jump(nodes: &[&Node]) -> f64 {
    nodes
        .windows(2)
        .flat_map(|w| (0..2).map(move |k| (w[1].phases[k] - w[0].phases[k]).abs()))
        .fold(0.0, f64::max)
}

/// Integrates over consecutive segments `[breaks[i], breaks[i+1]]`.
///
/// `f(x, side)` is evaluated with `Some(Side::Right)` at each segment's left
/// end, `Some(Side::Left)` at its right end and `None` in between, so jumps
/// at the breakpoints are never sampled from the wrong side. Segments for
/// which `active(lo, hi)` is false are skipped.
pub(crate) fn integrate<F, A>(
    breaks: &[f64],
    active: A,
    f: F,
    cfg: &QuadConfig,
) -> Result<Complex64>
where
    F: Fn(f64, Option<Side>) -> Node,
    A: Fn(f64, f64) -> bool,
{
    let segments: Vec<(f64, f64)> = breaks
        .windows(2)
        .map(|w| (w[0], w[1]))
        .filter(|&(lo, hi)| hi > lo && active(lo, hi))
        .collect();
    let total_width: f64 = segments.iter().map(|(lo, hi)| hi - lo).sum();
    if total_width == 0.0 {
        return Ok(Complex64::new(0.0, 0.0));
    }

    let mut sum = Complex64::new(0.0, 0.0);
    let mut accepted = 0usize;
    let mut stack: Vec<Panel> = Vec::with_capacity(128);

    for &(lo, hi) in &segments {
        let seg_tol = cfg.abs_tol * (hi - lo) / total_width;
        let n0 = cfg.initial_panels.max(1);
        let width = (hi - lo) / n0 as f64;
        let at = |i: usize| -> Node {
            if i == 0 {
                f(lo, Some(Side::Right))
            } else if i == n0 {
                f(hi, Some(Side::Left))
            } else {
                f(lo + width * i as f64, None)
            }
        };
        // Push in reverse so panels are processed left to right.
        for i in (0..n0).rev() {
            let a = if i == 0 { lo } else { lo + width * i as f64 };
            let b = if i + 1 == n0 {
                hi
            } else {
                lo + width * (i + 1) as f64
            };
            let fa = at(i);
            let fb = at(i + 1);
            let fm = f(0.5 * (a + b), None);
            stack.push(Panel {
                a,
                b,
                fa,
                fm,
                fb,
                whole: simpson(b - a, fa.value, fm.value, fb.value),
                tol: seg_tol / n0 as f64,
                depth: 0,
            });
        }

        while let Some(p) = stack.pop() {
            let m = 0.5 * (p.a + p.b);
            let flm = f(0.5 * (p.a + m), None);
            let frm = f(0.5 * (m + p.b), None);
            let h = 0.5 * (p.b - p.a);
            let left = simpson(h, p.fa.value, flm.value, p.fm.value);
            let right = simpson(h, p.fm.value, frm.value, p.fb.value);
            let refined = left + right;
            let diff = refined - p.whole;
            let resolved = phase_jump(&[&p.fa, &flm, &p.fm, &frm, &p.fb]) < cfg.phase_step;
            let converged = diff.norm() <= 15.0 * p.tol && resolved;
            let exhausted = p.depth >= cfg.max_depth || h <= f64::EPSILON * m.abs().max(1e-300);
            if converged || exhausted {
                if exhausted && !converged && diff.norm() > 15.0 * p.tol.max(1e-14) {
                    return Err(Error::QuadratureDiverged {
                        lo: p.a,
                        hi: p.b,
                        panels: accepted,
                    });
                }
                sum += refined + diff / 15.0;
                accepted += 1;
                if accepted > cfg.max_panels {
                    return Err(Error::QuadratureDiverged {
                        lo,
                        hi,
                        panels: accepted,
                    });
                }
                continue;
            }
            let depth = p.depth + 1;
            let tol = 0.5 * p.tol;
            stack.push(Panel {
                a: m,
                b: p.b,
                fa: p.fm,
                fm: frm,
                fb: p.fb,
                whole: right,
                tol,
                depth,
            });
            stack.push(Panel {
                a: p.a,
                b: m,
                fa: p.fa,
                fm: flm,
                fb: p.fm,
                whole: left,
                tol,
                depth,
            });
        }
    }
    Ok(sum)
}

/// Integrates a real function over `breaks` with the same machinery and no
/// phase guard.
pub(crate) fn integrate_real<F>(breaks: &[f64], f: F, cfg: &QuadConfig) -> Result<f64>
where
    F: Fn(f64, Option<Side>) -> f64,
{
    let z = integrate(
        breaks,
        |_, _| true,
        |x, side| Node::new(Complex64::new(f(x, side), 0.0), [0.0, 0.0]),
        cfg,
    )?;
    Ok(z.re)
}

/// Total mass of a density, integrated piecewise between its breakpoints.
pub fn density_mass(d: &Density, cfg: &QuadConfig) -> Result<f64> {
    integrate_real(
        &d.breakpoints(),
        |x, side| match side {
            Some(s) => d.pdf_side(x, s),
            None => d.pdf(x),
        },
        cfg,
    )
}

/// Merges several sorted breakpoint lists into one sorted, deduplicated list.
pub(crate) fn merge_breaks(lists: &[&[f64]]) -> Vec<f64> {
    let mut all: Vec<f64> = lists.iter().flat_map(|l| l.iter().copied()).collect();
    all.sort_by(f64::total_cmp);
    all.dedup();
    all
}
