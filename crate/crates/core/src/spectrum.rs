//! Counting and locating the real eigenvalues, the positive zeros of
//! `E_{2α,2}(-λ)`.
//!
//! g is negative on the intervals
//!
//! ```text
//! I_n = (((2n + 1/2 + 1/(2α)) π / sin φ)^{2α}, ((2n + 3/2 + 1/(2α)) π / sin φ)^{2α}),
//! ```
//!
//! each holding the odd extremum `z_n = ((2n + 3/2) π / sin φ)^{2α}`. While
//! `|g(z_n)| ≥ f(z_n)` the characteristic function dips to a non-positive
//! value inside `I_n` and has two zeros there; N* is the first n where `f`
//! wins, and the real spectrum has `2N*` eigenvalues.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::decomposition::DecompositionContext;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::order::FractionalOrder;

/// `I_n` and its image `Ĩ_n` under `λ ↦ λ^{1/(2α)}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EigenvalueBracket {
    pub n: usize,
    pub lambda_lo: f64,
    pub lambda_hi: f64,
    pub rho_lo: f64,
    pub rho_hi: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Eigenvalue {
    pub lambda: f64,
    /// `|E_{2α,2}(-λ)|` at the returned λ.
    pub residual: f64,
    /// Index n of the bracket `I_n` holding the root.
    pub bracket: usize,
}

/// Outcome of the N* search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct NStar {
    pub value: usize,
    /// The inequality `|g| < f` also holds at the next three odd extrema.
    pub persistent: bool,
    /// Some extremum up to N* had `|g|` and `f` equal to within 1e-12
    /// (relative); such an interval is counted.
    pub tie: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub alpha: FractionalOrder,
    pub n_star: usize,
    pub eigen_count: usize,
    pub first_bracket: Option<EigenvalueBracket>,
    pub last_bracket: Option<EigenvalueBracket>,
    pub brackets: Vec<EigenvalueBracket>,
    pub eigenvalues: Vec<Eigenvalue>,
    /// Sign changes of the characteristic function found by the scan, or
    /// `None` when the scan was skipped.
    pub oracle_count: Option<usize>,
    pub oracle_agrees: bool,
    pub warnings: Vec<String>,
}

/// Settings for [`spectrum_report`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectrumOptions {
    /// Root tolerance: `|Δλ| ≤ tol (1 + λ)` and `|E(λ)| ≤ tol`.
    pub tol: f64,
    pub refine: bool,
    /// Refine only the first this many brackets.
    pub max_refined_brackets: Option<usize>,
    pub samples_per_unit_rho: usize,
    /// The sign scan is skipped when it would need more samples than this.
    pub max_scan_samples: usize,
}

impl Default for SpectrumOptions {
    fn default() -> Self {
        SpectrumOptions {
            tol: 1e-10,
            refine: true,
            max_refined_brackets: None,
            samples_per_unit_rho: DEFAULT_SAMPLES_PER_UNIT_RHO,
            max_scan_samples: 4_000_000,
        }
    }
}

pub const DEFAULT_SAMPLES_PER_UNIT_RHO: usize = 64;

/// Upper limit for the N* search.
pub const N_STAR_CAP: usize = 200_000;

const TIE_TOL: f64 = 1e-12;
const PERSISTENCE_CHECKS: usize = 3;

pub fn negative_interval(ctx: &DecompositionContext, n: usize) -> EigenvalueBracket {
    let k = 2 * n as i64;
    let rho_lo = ctx.g_zero_rho(k).expect("k >= 0");
    let rho_hi = ctx.g_zero_rho(k + 1).expect("k >= 0");
    EigenvalueBracket {
        n,
        lambda_lo: ctx.lambda(rho_lo),
        lambda_hi: ctx.lambda(rho_hi),
        rho_lo,
        rho_hi,
    }
}

/// `f(z_n) - |g(z_n)|` at the odd extremum of `I_n`, with the tie flag.
fn margin(ctx: &DecompositionContext, n: usize) -> Result<(f64, bool)> {
    let k = 2 * n as u64 + 1;
    let (_, g) = ctx.g_extremum(k);
    let f = ctx.f_of_rho(ctx.g_extremum_rho(k))?;
    let m = f - g.abs();
    Ok((m, m.abs() <= TIE_TOL * f.max(g.abs())))
}

/// Smallest N with `|g(z_N)| < f(z_N)` at the odd extremum `z_N`; ties count
/// as not yet satisfied.
pub fn find_n_star(ctx: &DecompositionContext) -> Result<NStar> {
    const CHUNK: usize = 32;
    let mut tie = false;
    let mut start = 0;
    while start < N_STAR_CAP {
        let ns: Vec<usize> = (start..start + CHUNK).collect();
        let margins = ctx.execution().try_map(&ns, |&n| margin(ctx, n))?;
        for (n, (m, t)) in ns.iter().zip(margins) {
            if m > 0.0 && !t {
                let later: Vec<usize> = (n + 1..=n + PERSISTENCE_CHECKS).collect();
                let persistent = ctx
                    .execution()
                    .try_map(&later, |&k| margin(ctx, k))?
                    .iter()
                    .all(|&(m, t)| m > 0.0 && !t);
                return Ok(NStar {
                    value: *n,
                    persistent,
                    tie,
                });
            }
            tie |= t;
        }
        start += CHUNK;
    }
    Err(Error::Range(format!(
        "N* exceeds {N_STAR_CAP} for alpha = {}",
        ctx.alpha()
    )))
}

pub fn brackets(ctx: &DecompositionContext, n_star: usize) -> Vec<EigenvalueBracket> {
    (0..n_star).map(|n| negative_interval(ctx, n)).collect()
}

/// Root of `E(-λ)` in `[lo, hi]` where `E(lo)` and `E(hi)` differ in sign:
/// Illinois-modified regula falsi, falling back to bisection when an
/// interpolation step fails to shrink the interval by half.
fn refine_root(ctx: &DecompositionContext, mut lo: f64, mut hi: f64, mut f_lo: f64, mut f_hi: f64, tol: f64) -> Result<(f64, f64)> {
    if f_lo == 0.0 {
        return Ok((lo, 0.0));
    }
    if f_hi == 0.0 {
        return Ok((hi, 0.0));
    }
    let mut side = 0i8;
    for _ in 0..200 {
        let width = hi - lo;
        let x = if side.abs() >= 2 {
            side = 0;
            0.5 * (lo + hi)
        } else {
            let s = lo - f_lo * width / (f_hi - f_lo);
            if s > lo && s < hi {
                s
            } else {
                0.5 * (lo + hi)
            }
        };
        let fx = ctx.char_fn(x)?;
        if fx == 0.0 {
            return Ok((x, 0.0));
        }
        if (fx > 0.0) == (f_lo > 0.0) {
            lo = x;
            f_lo = fx;
            if side < 0 {
                f_hi *= 0.5;
            }
            side = if side < 0 { side - 1 } else { -1 };
        } else {
            hi = x;
            f_hi = fx;
            if side > 0 {
                f_lo *= 0.5;
            }
            side = if side > 0 { side + 1 } else { 1 };
        }
        let best = if fx.abs() <= tol { Some(x) } else { None };
        let narrow = hi - lo <= tol * (1.0 + x.abs());
        let stuck = 0.5 * (lo + hi) <= lo || 0.5 * (lo + hi) >= hi;
        if (narrow && best.is_some()) || stuck {
            return Ok((x, fx.abs()));
        }
        if narrow {
            // the bracket is tight; finish on the better endpoint after a bisection step
            let mid = 0.5 * (lo + hi);
            let fm = ctx.char_fn(mid)?;
            let cand = [(lo, f_lo.abs()), (hi, f_hi.abs()), (mid, fm.abs())];
            let (x, r) = cand.into_iter().fold((mid, fm.abs()), |acc, c| if c.1 < acc.1 { c } else { acc });
            if r <= tol || hi - lo <= 4.0 * f64::EPSILON * hi {
                return Ok((x, ctx.char_fn(x)?.abs()));
            }
            if (fm > 0.0) == (f_lo > 0.0) {
                lo = mid;
                f_lo = fm;
            } else {
                hi = mid;
                f_hi = fm;
            }
            side = 0;
        }
    }
    let mid = 0.5 * (lo + hi);
    Ok((mid, ctx.char_fn(mid)?.abs()))
}

fn sample_bracket(ctx: &DecompositionContext, b: &EigenvalueBracket, count: usize) -> Result<Vec<(f64, f64)>> {
    (0..=count)
        .map(|i| {
            let rho = b.rho_lo + (b.rho_hi - b.rho_lo) * i as f64 / count as f64;
            let lam = ctx.lambda(rho);
            ctx.char_fn(lam).map(|e| (lam, e))
        })
        .collect()
}

/// The two eigenvalues inside one bracket, in increasing order.
fn refine_bracket(ctx: &DecompositionContext, b: &EigenvalueBracket, tol: f64) -> Result<[Eigenvalue; 2]> {
    let lo = b.lambda_lo;
    let hi = b.lambda_hi;
    let (z, _) = ctx.g_extremum(2 * b.n as u64 + 1);
    let e_lo = ctx.char_fn(lo)?;
    let e_hi = ctx.char_fn(hi)?;
    let e_z = ctx.char_fn(z)?;
    let split = if e_lo > 0.0 && e_hi > 0.0 && e_z <= 0.0 {
        Some((z, e_z))
    } else {
        None
    };
    let (first, second) = match split {
        Some((z, ez)) => (
            refine_root(ctx, lo, z, e_lo, ez, tol)?,
            refine_root(ctx, z, hi, ez, e_hi, tol)?,
        ),
        None => {
            // the extremum did not separate the roots: fall back to a scan
            let samples = sample_bracket(ctx, b, 64)?;
            let changes: Vec<usize> = (1..samples.len())
                .filter(|&i| (samples[i - 1].1 > 0.0) != (samples[i].1 > 0.0))
                .collect();
            if changes.len() != 2 {
                return Err(Error::Bracket {
                    index: b.n,
                    lambda_lo: lo,
                    lambda_hi: hi,
                    found: changes.len(),
                    samples,
                });
            }
            let root = |i: usize| {
                let (a, fa) = samples[i - 1];
                let (c, fc) = samples[i];
                refine_root(ctx, a, c, fa, fc, tol)
            };
            (root(changes[0])?, root(changes[1])?)
        }
    };
    Ok([
        Eigenvalue {
            lambda: first.0,
            residual: first.1,
            bracket: b.n,
        },
        Eigenvalue {
            lambda: second.0,
            residual: second.1,
            bracket: b.n,
        },
    ])
}

/// Two roots per bracket, refined to `|Δλ| ≤ tol (1 + λ)` and `|E| ≤ tol`.
///
/// The odd extremum of g inside each bracket separates the two roots; if
/// the characteristic function is not non-positive there the bracket is
/// scanned instead, and anything other than exactly two sign changes is an
/// [`Error::Bracket`].
pub fn refine_eigenvalues(ctx: &DecompositionContext, brackets: &[EigenvalueBracket], tol: f64) -> Result<Vec<Eigenvalue>> {
    if !(tol > 0.0) {
        return Err(Error::domain(format!("tolerance must be positive, got {tol}")));
    }
    let pairs = ctx.execution().try_map(brackets, |b| refine_bracket(ctx, b, tol))?;
    Ok(pairs.into_iter().flatten().collect())
}

/// Sign changes of `E_{2α,2}(-λ)` sampled uniformly in ρ on `(0, ρ_max]`,
/// `ρ_max = lambda_max^{1/(2α)}`. Exact zeros carry no sign and are skipped.
pub fn sign_scan_count(ctx: &DecompositionContext, lambda_max: f64, samples_per_unit_rho: usize) -> Result<usize> {
    if !(lambda_max > 0.0) || lambda_max.is_infinite() || samples_per_unit_rho == 0 {
        return Err(Error::domain("sign scan needs a finite lambda_max > 0 and at least one sample per unit"));
    }
    let rho_max = ctx.rho(lambda_max);
    let m = samples_per_unit_rho as f64;
    let count = (rho_max * m).ceil() as usize;
    let idx: Vec<usize> = (1..=count).collect();
    let values = ctx.execution().try_map(&idx, |&i| {
        let rho = (i as f64 / m).min(rho_max);
        ctx.char_fn(ctx.lambda(rho))
    })?;
    let mut changes = 0;
    let mut last = 0.0f64;
    for v in values {
        if v == 0.0 {
            continue;
        }
        if last != 0.0 && (v > 0.0) != (last > 0.0) {
            changes += 1;
        }
        last = v;
    }
    Ok(changes)
}

/// Samples [`sign_scan_count`] would take for this `lambda_max`.
pub fn sign_scan_samples(ctx: &DecompositionContext, lambda_max: f64, samples_per_unit_rho: usize) -> usize {
    (ctx.rho(lambda_max) * samples_per_unit_rho as f64).ceil() as usize
}

/// Large-n eigenvalue estimate `(nπ / sin φ)^{2α}`.
pub fn asymptotic_eigenvalue(alpha: FractionalOrder, n: usize) -> Result<f64> {
    if n == 0 {
        return Err(Error::domain("eigenvalues are numbered from 1"));
    }
    let a = alpha.value();
    Ok((n as f64 * PI / (PI / (2.0 * a)).sin()).powf(2.0 * a))
}

/// Where the oracle scan stops: two g-zeros past the last bracket.
pub fn oracle_lambda_max(ctx: &DecompositionContext, n_star: usize) -> f64 {
    ctx.g_zeros(2 * n_star as i64 + 4).expect("index is non-negative")
}

pub fn spectrum_report(ctx: &DecompositionContext, opts: &SpectrumOptions) -> Result<SpectrumReport> {
    let alpha = FractionalOrder::spectral(ctx.alpha())?;
    let ns = find_n_star(ctx)?;
    let mut warnings = Vec::new();
    if !ns.persistent {
        warnings.push(format!(
            "|g| < f at the first {} odd extrema after N* = {} does not hold throughout",
            PERSISTENCE_CHECKS, ns.value
        ));
    }
    if ns.tie {
        warnings.push("|g| and f tied within 1e-12 at an odd extremum; the interval was counted".into());
    }
    let brackets = brackets(ctx, ns.value);
    let eigenvalues = if opts.refine {
        let take = opts.max_refined_brackets.unwrap_or(brackets.len()).min(brackets.len());
        if take < brackets.len() {
            warnings.push(format!("refined {take} of {} brackets", brackets.len()));
        }
        let found = refine_eigenvalues(ctx, &brackets[..take], opts.tol)?;
        let over = found.iter().filter(|e| e.residual > opts.tol).count();
        if over > 0 {
            warnings.push(format!("{over} eigenvalues have residual above {:e}", opts.tol));
        }
        found
    } else {
        Vec::new()
    };
    let lambda_max = oracle_lambda_max(ctx, ns.value);
    let needed = sign_scan_samples(ctx, lambda_max, opts.samples_per_unit_rho);
    let oracle_count = if needed <= opts.max_scan_samples {
        Some(sign_scan_count(ctx, lambda_max, opts.samples_per_unit_rho)?)
    } else {
        warnings.push(format!(
            "sign scan skipped: {needed} samples exceed the limit of {}",
            opts.max_scan_samples
        ));
        None
    };
    let eigen_count = 2 * ns.value;
    Ok(SpectrumReport {
        alpha,
        n_star: ns.value,
        eigen_count,
        first_bracket: brackets.first().copied(),
        last_bracket: brackets.last().copied(),
        brackets,
        eigenvalues,
        oracle_count,
        oracle_agrees: oracle_count == Some(eigen_count),
        warnings,
    })
}

/// One report per α, in input order. Each α is independent, so a failure
/// is reported in its slot without stopping the others.
pub fn sweep(alphas: &[FractionalOrder], opts: &SpectrumOptions, execution: Execution) -> Vec<Result<SpectrumReport>> {
    execution.map(alphas, |&a| {
        let ctx = DecompositionContext::new(a)?.with_execution(execution);
        spectrum_report(&ctx, opts)
    })
}
