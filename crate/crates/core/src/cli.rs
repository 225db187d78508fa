//! Command-line front end.
//!
//! Every subcommand resolves a [`RunConfig`] (defaults, then an optional
//! `--config` JSON file, then flags), runs, and prints a JSON report that
//! embeds the resolved config. Point clouds go to CSV when `--csv` is given.
//!
//! Exit codes: 0 success, 2 a failed verdict, 1 usage or configuration error.

use std::f64::consts::PI;
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::geometry::HankelDomain;
use crate::globalrel::{gr_residual, DirichletTraces, Variant};
use crate::identities::{
    check_f_identities, default_f_points, run_suite, FPoint, ResidualReport, Suite, DEFAULT_TOLERANCE,
};
use crate::quadrature::QuadratureSpec;
use crate::solver::{
    asymptotic_from_moments, dirichlet_arc, dirichlet_diff, dirichlet_ray, dirichlet_sum, hankel_moment_closed,
    hankel_moment_riemann, moment_s, moment_s_tilde, power_exact, solve_grid, ArcKernel, DataFamily,
    NeumannData, Part,
};

pub const SCHEMA_VERSION: u32 = 1;

/// Environment variable capping the worker threads of grid sweeps.
pub const THREADS_ENV: &str = "HANKEL_LAPLACE_THREADS";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct GridConfig {
    pub r_min: f64,
    pub r_max: f64,
    pub n_r: usize,
    pub n_theta: usize,
    /// Explicit `(r, θ)` points; replaces the tensor grid when present.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub points: Option<Vec<[f64; 2]>>,
}

impl Default for GridConfig {
    fn default() -> Self {
        GridConfig { r_min: 1.1, r_max: 8.0, n_r: 10, n_theta: 10, points: None }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct OutputConfig {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub csv_path: Option<PathBuf>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub json_path: Option<PathBuf>,
}

/// Which boundary trace the `trace` subcommand evaluates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum TraceKind {
    #[default]
    Arc,
    Plus,
    Minus,
    Sum,
    Diff,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct RunConfig {
    pub domain: HankelDomain,
    pub data: DataFamily,
    pub grid: GridConfig,
    pub quadrature: QuadratureSpec,
    pub output: OutputConfig,
    pub suite: Suite,
    pub tolerance: f64,
    /// Spectral grid of `global-relation`.
    pub k_grid: Vec<f64>,
    /// Number of boundary points per functional in `global-relation`.
    pub n_points: usize,
    pub trace: TraceKind,
    pub arc_kernel: ArcKernel,
    /// Angle of the `asymptotics` sweep.
    pub theta: f64,
    /// Exponent `s` of `zeta-check`.
    pub s: f64,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            domain: HankelDomain::new(1.0, 0.75 * PI).expect("valid default domain"),
            data: DataFamily::PowerRe { k: -1.0, k_im: 0.0 },
            grid: GridConfig::default(),
            quadrature: QuadratureSpec::default(),
            output: OutputConfig::default(),
            suite: Suite::All,
            tolerance: DEFAULT_TOLERANCE,
            k_grid: vec![-0.75, -0.25, 0.25],
            n_points: 5,
            trace: TraceKind::Arc,
            arc_kernel: ArcKernel::Printed,
            theta: 0.0,
            s: -1.0,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "hankel-laplace", version, about = "Laplace problem exterior to a Hankel contour")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate the solution on a grid.
    Solve(Common),
    /// Evaluate a Dirichlet trace on the boundary.
    Trace(Common),
    /// Compare the solution with its large-r asymptotics.
    Asymptotics(Common),
    /// Global-relation residuals and the functionals F1..F4.
    GlobalRelation(Common),
    /// Run an identity suite.
    Verify(Common),
    /// Compare the Hankel moment S(s) with the zeta closed form.
    ZetaCheck(Common),
}

#[derive(Debug, Args)]
struct Common {
    /// JSON config file (a bare config or an emitted report).
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    a: Option<f64>,
    /// Opening half-angle in radians.
    #[arg(long)]
    alpha: Option<f64>,
    /// Data family: power_re, power_im, zeta_trace, arc_sine, zero.
    #[arg(long)]
    data: Option<String>,
    /// Exponent of the power families.
    #[arg(long, allow_hyphen_values = true)]
    k: Option<f64>,
    /// Exponent of zeta_trace and zeta-check.
    #[arg(long, allow_hyphen_values = true)]
    s: Option<f64>,
    /// Amplitude of arc_sine.
    #[arg(long, allow_hyphen_values = true)]
    c: Option<f64>,
    #[arg(long, value_parser = ["re", "im"])]
    part: Option<String>,
    #[arg(long)]
    r_min: Option<f64>,
    #[arg(long)]
    r_max: Option<f64>,
    #[arg(long)]
    n_r: Option<usize>,
    #[arg(long)]
    n_theta: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    theta: Option<f64>,
    #[arg(long)]
    rel_tol: Option<f64>,
    #[arg(long)]
    abs_tol: Option<f64>,
    #[arg(long)]
    tolerance: Option<f64>,
    /// Identity suite: F, ident1, k2, khalf, k4, F2id, meijer, all.
    #[arg(long)]
    suite: Option<String>,
    /// Comma-separated spectral grid.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    k_grid: Option<Vec<f64>>,
    #[arg(long)]
    n_points: Option<usize>,
    #[arg(long, value_enum)]
    trace: Option<TraceKind>,
    #[arg(long)]
    mirrored_arc_kernel: bool,
    #[arg(long)]
    csv: Option<PathBuf>,
    #[arg(long)]
    json: Option<PathBuf>,
}

fn cfg_err(msg: impl Into<String>) -> Error {
    Error::Config(msg.into())
}

/// Read a config file. An emitted report is accepted too, in which case its
/// embedded `config` is used.
pub fn load_config(path: &Path) -> Result<RunConfig> {
    let text = std::fs::read_to_string(path).map_err(|e| cfg_err(format!("{}: {e}", path.display())))?;
    let mut v: Value = serde_json::from_str(&text).map_err(|e| cfg_err(format!("{}: {e}", path.display())))?;
    if v.get("schema_version").is_some() {
        v = v.get("config").cloned().ok_or_else(|| cfg_err("report has no config"))?;
    }
    serde_json::from_value(v).map_err(|e| cfg_err(format!("{}: {e}", path.display())))
}

impl Common {
    fn resolve(&self) -> Result<RunConfig> {
        let mut c = match &self.config {
            Some(p) => load_config(p)?,
            None => RunConfig::default(),
        };
        if self.a.is_some() || self.alpha.is_some() {
            let a = self.a.unwrap_or(c.domain.a());
            let alpha = self.alpha.unwrap_or(c.domain.alpha());
            c.domain = HankelDomain::new(a, alpha)?;
        }
        if let Some(s) = self.s {
            c.s = s;
        }
        let part = match self.part.as_deref() {
            Some("im") => Some(Part::Im),
            Some(_) => Some(Part::Re),
            None => None,
        };
        let family = self.data.clone().or_else(|| {
            // exponent flags alone retune the configured family
            (self.k.is_some() || part.is_some() || self.c.is_some()).then(|| family_name(&c.data).to_string())
        });
        if let Some(name) = family {
            c.data = build_family(&name, &c.data, self.k, c.s, self.c, part)?;
        }
        let g = &mut c.grid;
        if let Some(v) = self.r_min {
            g.r_min = v;
        }
        if let Some(v) = self.r_max {
            g.r_max = v;
        }
        if let Some(v) = self.n_r {
            g.n_r = v;
            g.points = None;
        }
        if let Some(v) = self.n_theta {
            g.n_theta = v;
            g.points = None;
        }
        if let Some(v) = self.theta {
            c.theta = v;
        }
        if let Some(v) = self.rel_tol {
            c.quadrature.rel_tol = v;
        }
        if let Some(v) = self.abs_tol {
            c.quadrature.abs_tol = v;
        }
        if let Some(v) = self.tolerance {
            c.tolerance = v;
        }
        if let Some(s) = &self.suite {
            c.suite = s.parse()?;
        }
        if let Some(k) = &self.k_grid {
            c.k_grid = k.clone();
        }
        if let Some(n) = self.n_points {
            c.n_points = n;
        }
        if let Some(t) = self.trace {
            c.trace = t;
        }
        if self.mirrored_arc_kernel {
            c.arc_kernel = ArcKernel::Mirrored;
        }
        if let Some(p) = &self.csv {
            c.output.csv_path = Some(p.clone());
        }
        if let Some(p) = &self.json {
            c.output.json_path = Some(p.clone());
        }
        c.quadrature.validate()?;
        if !(c.tolerance > 0.0) {
            return Err(cfg_err("tolerance must be positive"));
        }
        Ok(c)
    }
}

fn family_name(f: &DataFamily) -> &'static str {
    match f {
        DataFamily::PowerRe { .. } => "power_re",
        DataFamily::PowerIm { .. } => "power_im",
        DataFamily::ZetaTrace { .. } => "zeta_trace",
        DataFamily::ArcSine { .. } => "arc_sine",
        DataFamily::Zero => "zero",
        DataFamily::Custom => "custom",
    }
}

fn build_family(
    name: &str,
    old: &DataFamily,
    k: Option<f64>,
    s: f64,
    c: Option<f64>,
    part: Option<Part>,
) -> Result<DataFamily> {
    let (old_k, old_kim) = match *old {
        DataFamily::PowerRe { k, k_im } | DataFamily::PowerIm { k, k_im } => (k, k_im),
        _ => (-1.0, 0.0),
    };
    let old_part = match *old {
        DataFamily::ZetaTrace { part, .. } => part,
        _ => Part::Re,
    };
    Ok(match name {
        "power_re" => DataFamily::PowerRe { k: k.unwrap_or(old_k), k_im: old_kim },
        "power_im" => DataFamily::PowerIm { k: k.unwrap_or(old_k), k_im: old_kim },
        "zeta_trace" => DataFamily::ZetaTrace { s, part: part.unwrap_or(old_part) },
        "arc_sine" => DataFamily::ArcSine {
            c: c.unwrap_or(match *old {
                DataFamily::ArcSine { c } => c,
                _ => 1.0,
            }),
        },
        "zero" => DataFamily::Zero,
        other => return Err(cfg_err(format!("unknown data family {other:?}"))),
    })
}

/// Grid points, validated to lie in the domain.
pub fn grid_points(d: &HankelDomain, g: &GridConfig) -> Result<Vec<(f64, f64)>> {
    let pts: Vec<(f64, f64)> = match &g.points {
        Some(p) => p.iter().map(|q| (q[0], q[1])).collect(),
        None => {
            if !(g.r_min >= d.a() && g.r_max >= g.r_min) {
                return Err(cfg_err(format!("need a <= r_min <= r_max, got [{}, {}]", g.r_min, g.r_max)));
            }
            let rs = linspace(g.r_min, g.r_max, g.n_r);
            let ths = open_angles(d.alpha(), g.n_theta);
            rs.iter().flat_map(|&r| ths.iter().map(move |&t| (r, t))).collect()
        }
    };
    if pts.is_empty() {
        return Err(cfg_err("empty grid"));
    }
    if let Some(&(r, t)) = pts.iter().find(|&&(r, t)| !d.contains(r, t)) {
        return Err(cfg_err(format!("grid point ({r}, {t}) lies outside the domain")));
    }
    Ok(pts)
}

fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    match n {
        0 => vec![],
        1 => vec![lo],
        _ => (0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64).collect(),
    }
}

/// `n` cell-centred angles in `(−α, α)`.
fn open_angles(alpha: f64, n: usize) -> Vec<f64> {
    (0..n).map(|j| -alpha + (j as f64 + 0.5) * 2.0 * alpha / n as f64).collect()
}

/// Float formatted with 17 significant digits.
pub fn fmt_f64(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        "null".into()
    }
}

/// Pretty JSON with every float written at 17 significant digits, so that
/// identical inputs give byte-identical output.
pub fn to_json_string(v: &Value) -> String {
    let mut out = String::new();
    emit(v, 0, &mut out);
    out.push('\n');
    out
}

fn emit(v: &Value, depth: usize, out: &mut String) {
    let pad = |d: usize| "  ".repeat(d);
    match v {
        Value::Number(n) => match (n.as_i64(), n.as_u64(), n.as_f64()) {
            (Some(i), _, _) => write!(out, "{i}").unwrap(),
            (_, Some(u), _) => write!(out, "{u}").unwrap(),
            (_, _, Some(f)) => out.push_str(&fmt_f64(f)),
            _ => out.push_str("null"),
        },
        Value::Array(a) if a.is_empty() => out.push_str("[]"),
        Value::Array(a) => {
            out.push_str("[\n");
            for (i, x) in a.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                emit(x, depth + 1, out);
                out.push_str(if i + 1 < a.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(depth));
            out.push(']');
        }
        Value::Object(m) if m.is_empty() => out.push_str("{}"),
        Value::Object(m) => {
            out.push_str("{\n");
            for (i, (k, x)) in m.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                out.push_str(&Value::String(k.clone()).to_string());
                out.push_str(": ");
                emit(x, depth + 1, out);
                out.push_str(if i + 1 < m.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(depth));
            out.push('}');
        }
        other => out.push_str(&other.to_string()),
    }
}

fn write_csv(path: &Path, header: &[&str], rows: &[Vec<f64>]) -> Result<()> {
    let io = |e: csv::Error| cfg_err(format!("{}: {e}", path.display()));
    let mut w = csv::Writer::from_path(path).map_err(io)?;
    w.write_record(header).map_err(io)?;
    for row in rows {
        w.write_record(row.iter().map(|&x| fmt_f64(x))).map_err(io)?;
    }
    w.flush().map_err(|e| cfg_err(format!("{}: {e}", path.display())))
}

/// Outcome of a subcommand: the report body and whether every verdict passed.
struct Outcome {
    body: Value,
    passed: bool,
}

fn report(command: &str, cfg: &RunConfig, out: Outcome) -> Value {
    let mut v = json!({
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "config": cfg,
        "passed": out.passed,
    });
    v["result"] = out.body;
    v
}

fn power_part(f: &DataFamily) -> Option<(Complex64, Part)> {
    match *f {
        DataFamily::PowerRe { k, k_im } => Some((Complex64::new(k, k_im), Part::Re)),
        DataFamily::PowerIm { k, k_im } => Some((Complex64::new(k, k_im), Part::Im)),
        _ => None,
    }
}

fn cmd_solve(cfg: &RunConfig) -> Result<Outcome> {
    let d = &cfg.domain;
    let pts = grid_points(d, &cfg.grid)?;
    let data = NeumannData::from_family(d, cfg.data)?;
    let samples = solve_grid(d, &data, &pts, &cfg.quadrature)?;
    let s = moment_s(d, &data, &cfg.quadrature)?;
    let st = moment_s_tilde(d, &data, &cfg.quadrature)?;
    let exact = power_part(&cfg.data);
    let mut rows = Vec::with_capacity(samples.len());
    let mut max_err: f64 = 0.0;
    for f in &samples {
        let mut row = vec![f.r, f.theta, f.q];
        if let Some((k, part)) = exact {
            let e = power_exact(k, part, f.r, f.theta);
            max_err = max_err.max((f.q - e).abs());
            row.push(e);
        }
        rows.push(row);
    }
    if let Some(p) = &cfg.output.csv_path {
        let header: &[&str] = if exact.is_some() { &["r", "theta", "q", "exact"] } else { &["r", "theta", "q"] };
        write_csv(p, header, &rows)?;
    }
    let qs = samples.iter().map(|f| f.q);
    let mut body = json!({
        "n_points": samples.len(),
        "S": s,
        "S_tilde": st,
        "q_min": qs.clone().fold(f64::INFINITY, f64::min),
        "q_max": qs.fold(f64::NEG_INFINITY, f64::max),
    });
    let mut passed = true;
    if exact.is_some() {
        body["max_abs_error"] = json!(max_err);
        passed = max_err <= cfg.tolerance;
    }
    Ok(Outcome { body, passed })
}

fn cmd_trace(cfg: &RunConfig) -> Result<Outcome> {
    let d = &cfg.domain;
    let data = NeumannData::from_family(d, cfg.data)?;
    let sp = &cfg.quadrature;
    let (name, xs): (&str, Vec<f64>) = match cfg.trace {
        TraceKind::Arc => ("theta", open_angles(d.alpha(), cfg.grid.n_theta)),
        _ => {
            if !(cfg.grid.r_min > d.a()) {
                return Err(cfg_err("ray traces need r_min > a"));
            }
            ("r", linspace(cfg.grid.r_min, cfg.grid.r_max, cfg.grid.n_r))
        }
    };
    if xs.is_empty() {
        return Err(cfg_err("empty grid"));
    }
    let values = xs
        .iter()
        .map(|&x| match cfg.trace {
            TraceKind::Arc => dirichlet_arc(d, &data, x, cfg.arc_kernel, sp),
            TraceKind::Plus => dirichlet_ray(d, &data, x, 1.0, sp),
            TraceKind::Minus => dirichlet_ray(d, &data, x, -1.0, sp),
            TraceKind::Sum => dirichlet_sum(d, &data, x, sp),
            TraceKind::Diff => dirichlet_diff(d, &data, x, sp),
        })
        .collect::<Result<Vec<f64>>>()?;
    // closed-form traces of the power solutions
    let exact = power_part(&cfg.data).map(|(k, part)| {
        let (a, al) = (d.a(), d.alpha());
        xs.iter()
            .map(|&x| match cfg.trace {
                TraceKind::Arc => power_exact(k, part, a, x),
                TraceKind::Plus => power_exact(k, part, x, al),
                TraceKind::Minus => power_exact(k, part, x, -al),
                TraceKind::Sum => power_exact(k, part, x, al) + power_exact(k, part, x, -al),
                TraceKind::Diff => power_exact(k, part, x, -al) - power_exact(k, part, x, al),
            })
            .collect::<Vec<f64>>()
    });
    let mut rows: Vec<Vec<f64>> = xs.iter().zip(&values).map(|(&x, &v)| vec![x, v]).collect();
    let mut body = json!({ "trace": cfg.trace, "n_points": xs.len() });
    let mut passed = true;
    if let Some(ex) = &exact {
        let err = values.iter().zip(ex).map(|(v, e)| (v - e).abs()).fold(0.0, f64::max);
        body["max_abs_error"] = json!(err);
        passed = err <= cfg.tolerance;
        for (row, e) in rows.iter_mut().zip(ex) {
            row.push(*e);
        }
    }
    if let Some(p) = &cfg.output.csv_path {
        let header: &[&str] = if exact.is_some() { &[name, "value", "exact"] } else { &[name, "value"] };
        write_csv(p, header, &rows)?;
    }
    Ok(Outcome { body, passed })
}

fn cmd_asymptotics(cfg: &RunConfig) -> Result<Outcome> {
    let d = &cfg.domain;
    let g = &cfg.grid;
    if !(g.r_min > d.a() && g.r_max > g.r_min) || g.n_r < 2 {
        return Err(cfg_err("asymptotics needs a < r_min < r_max and n_r >= 2"));
    }
    if !d.contains(g.r_min, cfg.theta) {
        return Err(cfg_err(format!("theta = {} outside the domain", cfg.theta)));
    }
    let data = NeumannData::from_family(d, cfg.data)?;
    let sp = &cfg.quadrature;
    let s = moment_s(d, &data, sp)?;
    let st = moment_s_tilde(d, &data, sp)?;
    // geometric radii
    let rs: Vec<f64> = linspace(g.r_min.ln(), g.r_max.ln(), g.n_r).into_iter().map(f64::exp).collect();
    let pts: Vec<(f64, f64)> = rs.iter().map(|&r| (r, cfg.theta)).collect();
    let samples = solve_grid(d, &data, &pts, sp)?;
    let rows: Vec<Vec<f64>> = samples
        .iter()
        .map(|f| {
            let asy = asymptotic_from_moments(d, s, st, f.r, f.theta);
            vec![f.r, f.q, asy, (f.q - asy).abs()]
        })
        .collect();
    if let Some(p) = &cfg.output.csv_path {
        write_csv(p, &["r", "q", "asymptotic", "abs_diff"], &rows)?;
    }
    let fit: Vec<(f64, f64)> = rows
        .iter()
        .filter(|r| r[3] > 0.0)
        .map(|r| ((r[0] / d.a()).ln(), r[3].ln()))
        .collect();
    let slope = loglog_slope(&fit);
    let bound = -d.p() + 0.1;
    let passed = slope.map_or(true, |m| m <= bound);
    Ok(Outcome {
        body: json!({
            "S": s,
            "S_tilde": st,
            "fitted_exponent": slope,
            "exponent_bound": bound,
            "n_points": rows.len(),
        }),
        passed,
    })
}

/// Least-squares slope of `(x, y)` pairs.
pub fn loglog_slope(pts: &[(f64, f64)]) -> Option<f64> {
    if pts.len() < 2 {
        return None;
    }
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

fn cmd_global_relation(cfg: &RunConfig) -> Result<Outcome> {
    let d = &cfg.domain;
    let sp = &cfg.quadrature;
    if cfg.k_grid.is_empty() || cfg.n_points == 0 {
        return Err(cfg_err("empty grid"));
    }
    let data = NeumannData::from_family(d, cfg.data)?;
    let traces = match power_part(&cfg.data) {
        Some((k, part)) => DirichletTraces::power(d, k, part),
        None => DirichletTraces::from_solver(d, &data, sp),
    };
    let mut rows = Vec::new();
    for &k in &cfg.k_grid {
        for variant in [Variant::Plus, Variant::Minus, Variant::Sum, Variant::Diff] {
            let r = gr_residual(d, &data, &traces, Complex64::new(k, 0.0), variant, sp)?;
            let label = match variant {
                Variant::Plus => 0.0,
                Variant::Minus => 1.0,
                Variant::Sum => 2.0,
                Variant::Diff => 3.0,
            };
            let mut p = std::collections::BTreeMap::new();
            p.insert("k".to_string(), k);
            p.insert("variant".to_string(), label);
            rows.push((p, r));
        }
    }
    let gr = ResidualReport::new("global_relation", rows, cfg.tolerance);
    let points: Vec<FPoint> = default_f_points(d, cfg.n_points);
    let f = check_f_identities(d, &cfg.k_grid, &points, sp, cfg.tolerance)?;
    if let Some(p) = &cfg.output.csv_path {
        write_residual_csv(p, &[&gr, &f])?;
    }
    let passed = gr.passed() && f.passed();
    Ok(Outcome { body: json!([gr, f]), passed })
}

fn write_residual_csv(path: &Path, reports: &[&ResidualReport]) -> Result<()> {
    let io = |e: csv::Error| cfg_err(format!("{}: {e}", path.display()));
    let mut w = csv::Writer::from_path(path).map_err(io)?;
    w.write_record(["identity_id", "point", "re", "im"]).map_err(io)?;
    for rep in reports {
        for (pt, r) in rep.grid.iter().zip(&rep.residuals) {
            let label = pt.iter().map(|(k, v)| format!("{k}={}", fmt_f64(*v))).collect::<Vec<_>>().join(";");
            w.write_record([rep.identity_id.clone(), label, fmt_f64(r[0]), fmt_f64(r[1])]).map_err(io)?;
        }
    }
    w.flush().map_err(|e| cfg_err(format!("{}: {e}", path.display())))
}

fn cmd_verify(cfg: &RunConfig) -> Result<Outcome> {
    let reps = run_suite(cfg.suite, &cfg.domain, &cfg.quadrature, cfg.tolerance)?;
    if let Some(p) = &cfg.output.csv_path {
        write_residual_csv(p, &reps.iter().collect::<Vec<_>>())?;
    }
    let passed = reps.iter().all(ResidualReport::passed);
    Ok(Outcome { body: json!(reps), passed })
}

fn cmd_zeta(cfg: &RunConfig) -> Result<Outcome> {
    let s = cfg.s;
    let num = hankel_moment_riemann(&cfg.domain, Complex64::new(s, 0.0), &cfg.quadrature)?;
    let closed = hankel_moment_closed(s)?;
    let res = (num - closed).norm();
    Ok(Outcome {
        body: json!({
            "s": s,
            "S_numeric": [num.re, num.im],
            "S_closed": [closed.re, closed.im],
            "residual": res,
            "tolerance": cfg.tolerance,
        }),
        passed: res <= cfg.tolerance,
    })
}

fn init_threads() {
    if let Some(n) = std::env::var(THREADS_ENV).ok().and_then(|v| v.trim().parse::<usize>().ok()) {
        if n > 0 {
            // a pool may already exist when called from a test harness
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
    }
}

/// Run the command line `argv` (including the program name) and return the
/// process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    init_threads();
    let (name, common) = match &cli.command {
        Command::Solve(c) => ("solve", c),
        Command::Trace(c) => ("trace", c),
        Command::Asymptotics(c) => ("asymptotics", c),
        Command::GlobalRelation(c) => ("global-relation", c),
        Command::Verify(c) => ("verify", c),
        Command::ZetaCheck(c) => ("zeta-check", c),
    };
    let cfg = match common.resolve() {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return 1;
        }
    };
    let outcome = match name {
        "solve" => cmd_solve(&cfg),
        "trace" => cmd_trace(&cfg),
        "asymptotics" => cmd_asymptotics(&cfg),
        "global-relation" => cmd_global_relation(&cfg),
        "verify" => cmd_verify(&cfg),
        _ => cmd_zeta(&cfg),
    };
    let outcome = match outcome {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return 1;
        }
    };
    let passed = outcome.passed;
    let text = to_json_string(&report(name, &cfg, outcome));
    let written = match &cfg.output.json_path {
        Some(p) => std::fs::write(p, &text).map_err(|e| format!("{}: {e}", p.display())),
        None => std::io::stdout().write_all(text.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return 1;
    }
    if passed {
        0
    } else {
        2
    }
}
