use std::io::Write;

use fslp_core::solutions::{fe1_fss, fe3_fss, psi, Interval};
use fslp_core::spectrum::{spectrum_report, SpectrumOptions};
use fslp_core::{decomposition::ml_with_decomposition, DecompositionContext, Execution, FractionalOrder, SpectrumReport};
use serde_json::json;

use crate::args::{Equation, Format};
use crate::config::FileConfig;
use crate::error::CliError;
use crate::output::{num, write_json, Table};

pub const DEFAULT_ALPHAS: [&str; 18] = [
    "0.78", "0.80", "0.82", "0.84", "0.86", "0.88", "0.90", "0.92", "0.94", "0.96", "0.98", "0.981", "0.983",
    "0.985", "0.987", "0.989", "0.9895", "0.9898",
];

const TABLE1_DIGITS: usize = 6;

pub struct Env<'a> {
    pub format: Format,
    pub precision: Option<usize>,
    pub quiet: bool,
    pub config: &'a FileConfig,
}

impl Env<'_> {
    fn warn(&self, msg: impl std::fmt::Display) {
        if !self.quiet {
            eprintln!("fslp: warning: {msg}");
        }
    }

    fn context(&self, alpha: FractionalOrder) -> Result<DecompositionContext, CliError> {
        let mut ctx = DecompositionContext::new(alpha)?.with_quadrature(self.config.quadrature()?)?;
        if let Some(n) = self.config.series_terms_max {
            ctx = ctx.with_series_terms_max(n)?;
        }
        Ok(ctx)
    }
}

fn parse_alpha(label: &str) -> Result<FractionalOrder, CliError> {
    let a: f64 = label
        .trim()
        .parse()
        .map_err(|_| CliError::usage(format!("alpha: not a number: {label:?}")))?;
    Ok(FractionalOrder::spectral(a)?)
}

fn reports(env: &Env, labels: &[String], opts: &SpectrumOptions) -> Result<Vec<SpectrumReport>, CliError> {
    let alphas = labels.iter().map(|l| parse_alpha(l)).collect::<Result<Vec<_>, _>>()?;
    let execution = Execution::default();
    let results = execution.map(&alphas, |&a| {
        let ctx = env.context(a)?.with_execution(execution);
        spectrum_report(&ctx, opts).map_err(CliError::from)
    });
    let mut out = Vec::with_capacity(results.len());
    for (label, r) in labels.iter().zip(results) {
        let r = r.map_err(|e| CliError { message: format!("alpha = {label}: {e}"), ..e })?;
        for w in &r.warnings {
            env.warn(format!("alpha = {label}: {w}"));
        }
        out.push(r);
    }
    Ok(out)
}

pub fn table1(env: &Env, alphas: &[String], refine: bool, out: &mut dyn Write) -> Result<(), CliError> {
    let labels: Vec<String> = if alphas.is_empty() {
        DEFAULT_ALPHAS.iter().map(|s| s.to_string()).collect()
    } else {
        alphas.iter().map(|s| s.trim().to_string()).collect()
    };
    let opts = SpectrumOptions {
        refine,
        ..env.config.spectrum(None)
    };
    let reports = reports(env, &labels, &opts)?;
    if env.format == Format::Json {
        let rows: Vec<_> = labels
            .iter()
            .zip(&reports)
            .map(|(label, r)| {
                let mut v = serde_json::to_value(r).expect("report serialises");
                v["label"] = json!(label);
                if !refine {
                    v.as_object_mut().expect("object").remove("eigenvalues");
                }
                v
            })
            .collect();
        return write_json(&json!(rows), out);
    }
    let digits = Some(env.precision.unwrap_or(TABLE1_DIGITS));
    let mut headers = vec!["alpha", "eigen_count", "I0_lo", "I0_hi", "Ilast_lo", "Ilast_hi", "oracle_agrees"];
    if refine {
        headers.push("eigenvalues");
    }
    let mut table = Table::new(headers);
    for (label, r) in labels.iter().zip(&reports) {
        let ends = |b: Option<fslp_core::EigenvalueBracket>| match b {
            Some(b) => [num(b.rho_lo, digits), num(b.rho_hi, digits)],
            None => [String::new(), String::new()],
        };
        let [f0, f1] = ends(r.first_bracket);
        let [l0, l1] = ends(r.last_bracket);
        let mut row = vec![label.clone(), r.eigen_count.to_string(), f0, f1, l0, l1, r.oracle_agrees.to_string()];
        if refine {
            let lambdas: Vec<String> = r.eigenvalues.iter().map(|e| num(e.lambda, digits)).collect();
            row.push(lambdas.join(" "));
        }
        table.rows.push(row);
    }
    table.write(env.format, out)
}

pub fn eig(
    env: &Env,
    alpha: &str,
    tol: Option<f64>,
    max_brackets: Option<usize>,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let opts = SpectrumOptions {
        refine: true,
        max_refined_brackets: max_brackets,
        ..env.config.spectrum(tol)
    };
    if !(opts.tol > 0.0) {
        return Err(CliError::usage(format!("tol must be positive, got {}", opts.tol)));
    }
    let r = reports(env, &[alpha.to_string()], &opts)?.remove(0);
    if env.format == Format::Json {
        return write_json(&serde_json::to_value(&r)?, out);
    }
    let p = env.precision;
    if env.format == Format::Table {
        let oracle = r.oracle_count.map_or("skipped".to_string(), |c| c.to_string());
        writeln!(out, "alpha = {}  N* = {}  eigenvalues = {}  sign scan = {oracle}", r.alpha.value(), r.n_star, r.eigen_count)?;
    }
    let mut table = Table::new(vec!["n", "bracket", "lambda", "rho", "residual"]);
    for (i, e) in r.eigenvalues.iter().enumerate() {
        let rho = e.lambda.powf(1.0 / (2.0 * r.alpha.value()));
        table.rows.push(vec![
            (i + 1).to_string(),
            e.bracket.to_string(),
            num(e.lambda, p),
            num(rho, p),
            num(e.residual, p),
        ]);
    }
    table.write(env.format, out)
}

pub fn ml(env: &Env, delta: f64, theta: f64, z: f64, out: &mut dyn Write) -> Result<(), CliError> {
    let params = env.config.ml_params(delta, theta)?;
    let (value, branch) = ml_with_decomposition(&params, z)?;
    let p = env.precision;
    match env.format {
        Format::Json => write_json(
            &json!({ "delta": delta, "theta": theta, "z": z, "value": value, "branch": branch }),
            out,
        ),
        Format::Csv => {
            let mut t = Table::new(vec!["delta", "theta", "z", "value", "branch"]);
            t.rows.push(vec![num(delta, p), num(theta, p), num(z, p), num(value, p), branch.as_str().into()]);
            t.write(Format::Csv, out)
        }
        Format::Table => {
            writeln!(out, "{}  ({})", num(value, p), branch.as_str())?;
            Ok(())
        }
    }
}

fn split_numbers(s: &str, what: &str, n: usize) -> Result<Vec<f64>, CliError> {
    let parts: Vec<&str> = s.split(':').collect();
    let bad = || CliError::usage(format!("{what}: expected {n} colon-separated values, got {s:?}"));
    if parts.len() != n {
        return Err(bad());
    }
    parts.iter().map(|p| p.trim().parse::<f64>().map_err(|_| bad())).collect()
}

fn grid(spec: &str) -> Result<Vec<f64>, CliError> {
    let parts: Vec<&str> = spec.split(':').collect();
    let bad = || CliError::usage(format!("grid: expected start:end:count, got {spec:?}"));
    if parts.len() != 3 {
        return Err(bad());
    }
    let start: f64 = parts[0].trim().parse().map_err(|_| bad())?;
    let end: f64 = parts[1].trim().parse().map_err(|_| bad())?;
    let count: usize = parts[2].trim().parse().map_err(|_| bad())?;
    if count < 2 || !start.is_finite() || !end.is_finite() {
        return Err(CliError::usage(format!("grid: need finite ends and count >= 2, got {spec:?}")));
    }
    let n = (count - 1) as f64;
    Ok((0..count).map(|i| start + (end - start) * i as f64 / n).collect())
}

pub fn fss(
    env: &Env,
    equation: Equation,
    alpha: f64,
    lambda: Option<f64>,
    interval: &str,
    grid_spec: &str,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let alpha = FractionalOrder::new(alpha)?;
    let ts = grid(grid_spec)?;
    let ab = split_numbers(interval, "interval", 2)?;
    let iv = Interval::new(ab[0], ab[1])?;
    let lambda = match (equation, lambda) {
        (Equation::Fe3, None) => return Err(CliError::usage("fe3 needs --lambda")),
        (_, l) => l.unwrap_or(0.0),
    };
    if !lambda.is_finite() {
        return Err(CliError::usage("lambda must be finite"));
    }
    let p = env.precision;
    let headers = match equation {
        Equation::Fe2 => vec!["t", "psi"],
        _ => vec!["t", "y1", "y2"],
    };
    let mut table = Table::new(headers);
    let mut json_rows = Vec::new();
    let mut all_domain = true;
    for &t in &ts {
        let row = match equation {
            Equation::Fe1 => fe1_fss(alpha, iv, t).map(|(y1, y2)| vec![y1, y2]),
            Equation::Fe2 => psi(alpha, iv, t).map(|v| vec![v]),
            Equation::Fe3 => fe3_fss(alpha, lambda, t).map(|(y1, y2)| vec![y1, y2]),
        };
        match row {
            Ok(vals) => {
                let mut cells = vec![num(t, p)];
                cells.extend(vals.iter().map(|&v| num(v, p)));
                table.rows.push(cells);
                let mut obj = serde_json::Map::new();
                for (h, v) in table.headers.iter().zip(std::iter::once(t).chain(vals)) {
                    obj.insert(h.to_string(), json!(v));
                }
                json_rows.push(serde_json::Value::Object(obj));
            }
            Err(e) => {
                eprintln!("fslp: t = {t:?}: {e}");
                all_domain &= e.is_domain();
            }
        }
    }
    if table.rows.is_empty() {
        let msg = "no grid point could be evaluated";
        return Err(if all_domain { CliError::usage(msg) } else { CliError::compute(msg) });
    }
    match env.format {
        Format::Json => write_json(&json!(json_rows), out),
        f => table.write(f, out),
    }
}
