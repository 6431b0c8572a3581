use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde_json::{json, Map, Value};
use thiserror::Error;

use isosqueeze::algebra::verify_commutators;
use isosqueeze::dist::{self, linspace, phase_axis};
use isosqueeze::squeezing::{self, r_grid, theta_grid};
use isosqueeze::states::{self, SqueezeKind, SqueezeParams};
use isosqueeze::stats::{photon_distribution, MomentTable};

use crate::args::*;
use crate::format::{round12, Cell, Table};

/// Tail mass above which a warning is attached to the output.
const TAIL_WARNING: f64 = 1e-6;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Validation(String),
    #[error("{0}")]
    Numeric(String),
    #[error("cannot write {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Validation(_) => 3,
            CliError::Numeric(_) | CliError::Io { .. } => 1,
        }
    }
}

impl From<isosqueeze::Error> for CliError {
    fn from(e: isosqueeze::Error) -> Self {
        use isosqueeze::Error::*;
        match e {
            RadiusViolation { .. } | SParameterOutOfRange { .. } | InvalidParams(_) => {
                CliError::Validation(e.to_string())
            }
            _ => CliError::Numeric(e.to_string()),
        }
    }
}

/// Everything a command produces, before it is rendered.
#[derive(Clone, Debug)]
pub struct Artifact {
    pub header: Map<String, Value>,
    pub table: Table,
    pub warnings: Vec<String>,
    default_format: Format,
}

impl Artifact {
    fn new(command: &str, table: Table) -> Self {
        let mut header = Map::new();
        header.insert("command".into(), command.into());
        Artifact { header, table, warnings: Vec::new(), default_format: Format::Csv }
    }

    fn with(mut self, key: &str, value: Value) -> Self {
        self.header.insert(key.into(), value);
        self
    }

    pub fn header_json(&self) -> Value {
        let mut h = self.header.clone();
        h.insert("warnings".into(), json!(self.warnings));
        Value::Object(h)
    }

    pub fn full_json(&self) -> Value {
        let mut h = self.header.clone();
        h.insert("warnings".into(), json!(self.warnings));
        if let Value::Object(t) = self.table.to_json() {
            h.extend(t);
        }
        Value::Object(h)
    }
}

fn case_label(kind: SqueezeKind) -> &'static str {
    match kind {
        SqueezeKind::Nonlinear => "i",
        SqueezeKind::Unitary => "iii",
    }
}

fn kind_of(case: Case) -> SqueezeKind {
    match case {
        Case::I => SqueezeKind::Nonlinear,
        Case::Iii => SqueezeKind::Unitary,
    }
}

fn single_modulus(case: Case, r: Option<f64>, xi: Option<f64>) -> Result<Option<f64>, CliError> {
    match (case, r, xi) {
        (Case::I, _, Some(_)) => Err(CliError::Usage("--xi belongs to case iii; use --r with --case i".into())),
        (Case::Iii, Some(_), _) => Err(CliError::Usage("--r belongs to case i; use --xi with --case iii".into())),
        (Case::I, r, None) => Ok(r),
        (Case::Iii, None, xi) => Ok(xi),
    }
}

fn resolve_state(sel: &StateSel) -> Result<SqueezeParams, CliError> {
    let modulus = single_modulus(sel.case, sel.r, sel.xi)?.ok_or_else(|| {
        CliError::Usage(match sel.case {
            Case::I => "case i needs --r".into(),
            Case::Iii => "case iii needs --xi".into(),
        })
    })?;
    let params = SqueezeParams { kind: kind_of(sel.case), r: modulus, theta: sel.theta, n_max: sel.n_max };
    params.validate()?;
    Ok(params)
}

fn resolve_sweep(sweep: &SweepSel) -> Result<Vec<f64>, CliError> {
    let moduli = match single_modulus(sweep.case, sweep.r, sweep.xi)? {
        Some(m) => vec![m],
        None => {
            if sweep.r_steps == 0 {
                return Err(CliError::Validation("--r-steps must be positive".into()));
            }
            let r_max = sweep.r_max.unwrap_or(match sweep.case {
                Case::I => 31.0,
                Case::Iii => 0.9,
            });
            r_grid(r_max, sweep.r_steps)
        }
    };
    for &r in &moduli {
        SqueezeParams { kind: kind_of(sweep.case), r, theta: 0.0, n_max: sweep.n_max }.validate()?;
    }
    Ok(moduli)
}

fn state_header(params: &SqueezeParams) -> Value {
    let key = if params.kind == SqueezeKind::Nonlinear { "r" } else { "xi" };
    json!({ key: params.r, "theta": params.theta, "n_max": params.n_max })
}

fn tail_warnings(kind: SqueezeKind, tails: &[(f64, f64)]) -> Vec<String> {
    let over: Vec<&(f64, f64)> = tails.iter().filter(|(_, t)| *t > TAIL_WARNING).collect();
    let Some(&&(r, worst)) = over.iter().max_by(|a, b| a.1.total_cmp(&b.1)) else {
        return Vec::new();
    };
    let name = if kind == SqueezeKind::Nonlinear { "r" } else { "xi" };
    vec![format!(
        "tail mass above {TAIL_WARNING:e} at {} of {} moduli (largest {worst:e} at {name} = {r})",
        over.len(),
        tails.len()
    )]
}

fn state_cmd(a: &StateArgs) -> Result<Artifact, CliError> {
    let params = resolve_state(&a.sel)?;
    let v = states::build(&params)?;
    let mut table = Table::new(&["level", "prob"]);
    for (level, p) in photon_distribution(&v) {
        if p > 0.0 {
            table.push(vec![level.into(), p.into()]);
        }
    }
    let mut art = Artifact::new("state", table)
        .with("case", case_label(params.kind).into())
        .with("params", state_header(&params))
        .with("effective_n_max", states::effective_n_max(&v).into())
        .with("tail_mass", round12(v.tail_bound()).into());
    art.warnings = tail_warnings(params.kind, &[(params.r, v.tail_bound())]);
    Ok(art)
}

fn stats_cmd(a: &StatsArgs) -> Result<Artifact, CliError> {
    let kind = kind_of(a.sweep.case);
    let moduli = resolve_sweep(&a.sweep)?;
    let results: Vec<(f64, MomentTable, f64)> = moduli
        .par_iter()
        .map(|&r| {
            let v = states::build(&SqueezeParams { kind, r, theta: a.theta, n_max: a.sweep.n_max })?;
            Ok((r, MomentTable::from_state(&v), v.tail_bound()))
        })
        .collect::<Result<_, isosqueeze::Error>>()?;

    let mut table = Table::new(&["r", "theta", "mean_k0", "mean_k0_sq", "Q", "g2", "A3"]);
    let mut undefined_a3 = Vec::new();
    let mut undefined_q = Vec::new();
    for (r, m, _) in &results {
        if m.a3.is_none() {
            undefined_a3.push(*r);
        }
        if m.q.is_none() {
            undefined_q.push(*r);
        }
        table.push(vec![
            (*r).into(),
            a.theta.into(),
            m.mean_k0.into(),
            m.mean_k0_sq.into(),
            m.q.into(),
            m.g2.into(),
            m.a3.into(),
        ]);
    }
    let tails: Vec<(f64, f64)> = results.iter().map(|(r, _, t)| (*r, *t)).collect();
    let mut art = Artifact::new("stats", table)
        .with("case", case_label(kind).into())
        .with("params", json!({ "theta": a.theta, "n_max": a.sweep.n_max }))
        .with("grid", json!({ "moduli": moduli.len(), "first": moduli[0], "last": moduli[moduli.len() - 1] }));
    art.warnings = tail_warnings(kind, &tails);
    if !undefined_q.is_empty() {
        art.warnings.push(format!("Q and g2 undefined (vanishing <K0>) at {} moduli", undefined_q.len()));
    }
    if !undefined_a3.is_empty() {
        art.warnings.push(format!("A3 undefined (vanishing denominator) at {} moduli", undefined_a3.len()));
    }
    Ok(art)
}

fn squeeze_cmd(a: &SqueezeArgs) -> Result<Artifact, CliError> {
    let kind = kind_of(a.sweep.case);
    let moduli = resolve_sweep(&a.sweep)?;
    if a.theta_steps == 0 {
        return Err(CliError::Validation("--theta-steps must be positive".into()));
    }
    let thetas = theta_grid(a.theta_steps);
    let reports = squeezing::sweep(kind, &moduli, &thetas, a.sweep.n_max)?;
    let tails: Vec<(f64, f64)> = moduli
        .par_iter()
        .map(|&r| Ok((r, states::build(&SqueezeParams { kind, r, theta: 0.0, n_max: a.sweep.n_max })?.tail_bound())))
        .collect::<Result<_, isosqueeze::Error>>()?;

    let mut table = Table::new(&["r", "theta", "I1", "I2", "I3", "I4"]);
    let mut violations = 0;
    for rep in &reports {
        if !rep.uncertainty_ok {
            violations += 1;
        }
        table.push(vec![rep.r.into(), rep.theta.into(), rep.i1.into(), rep.i2.into(), rep.i3.into(), rep.i4.into()]);
    }
    let mut art = Artifact::new("squeeze", table)
        .with("case", case_label(kind).into())
        .with("params", json!({ "n_max": a.sweep.n_max }))
        .with("grid", json!({ "moduli": moduli.len(), "theta_steps": a.theta_steps }));
    art.warnings = tail_warnings(kind, &tails);
    if violations > 0 {
        art.warnings.push(format!("uncertainty bound (I1+1)(I2+1) >= 1 violated at {violations} cells"));
    }
    Ok(art)
}

fn quad_dist_cmd(a: &QuadDistArgs) -> Result<Artifact, CliError> {
    let params = resolve_state(&a.sel)?;
    if a.x_points == 0 || a.phi_points == 0 {
        return Err(CliError::Validation("grid sizes must be positive".into()));
    }
    let xs = linspace(a.x_min, a.x_max, a.x_points);
    let phis = phase_axis(a.phi_points);
    let v = states::build(&params)?;
    let grid = match a.route {
        Route::Wavefunction => dist::quadrature_distribution(&v, &xs, &phis),
        Route::Closed => dist::quadrature_distribution_closed(&params, &xs, &phis)?,
    };
    let mut table = Table::new(&["x", "phi", "P"]);
    for (i, &x) in xs.iter().enumerate() {
        for (j, &phi) in phis.iter().enumerate() {
            table.push(vec![x.into(), phi.into(), grid.values[i][j].into()]);
        }
    }
    let route = match a.route {
        Route::Wavefunction => "wavefunction",
        Route::Closed => "closed",
    };
    let mut art = Artifact::new("quad-dist", table)
        .with("case", case_label(params.kind).into())
        .with("params", state_header(&params))
        .with("route", route.into())
        .with(
            "grid",
            json!({ "x_min": a.x_min, "x_max": a.x_max, "x_points": a.x_points, "phi_points": a.phi_points }),
        );
    art.warnings = tail_warnings(params.kind, &[(params.r, v.tail_bound())]);
    Ok(art)
}

fn quasiprob_cmd(a: &QuasiprobArgs) -> Result<Artifact, CliError> {
    let params = resolve_state(&a.sel)?;
    if a.points == 0 || a.extent.is_nan() || a.extent <= 0.0 {
        return Err(CliError::Validation("grid must have positive size and extent".into()));
    }
    let axis = linspace(-a.extent, a.extent, a.points);
    let v = states::build(&params)?;
    let grid = dist::quasi_probability_grid(&v, &axis, &axis, a.s)?;
    let mut table = Table::new(&["x", "p", "F"]);
    for (i, &x) in axis.iter().enumerate() {
        for (j, &p) in axis.iter().enumerate() {
            table.push(vec![x.into(), p.into(), grid.values[i][j].into()]);
        }
    }
    let mut art = Artifact::new("quasiprob", table)
        .with("case", case_label(params.kind).into())
        .with("params", state_header(&params))
        .with("s", a.s.into())
        .with("grid", json!({ "extent": a.extent, "points": a.points }));
    art.warnings = tail_warnings(params.kind, &[(params.r, v.tail_bound())]);
    Ok(art)
}

fn verify_algebra_cmd(a: &VerifyAlgebraArgs) -> Result<Artifact, CliError> {
    if a.n_low < 3 || a.n_high < a.n_low + 2 {
        return Err(CliError::Validation("need 3 <= n_low and n_low + 2 <= n_high".into()));
    }
    let report = verify_commutators(a.n_low, a.n_high);
    let mut table = Table::new(&["identity", "max_deviation", "worst_level"]);
    for id in &report.identities {
        table.push(vec![Cell::Text(id.name), id.max_deviation.into(), id.worst_level.into()]);
    }
    let mut art = Artifact::new("verify-algebra", table)
        .with("n_low", a.n_low.into())
        .with("n_high", a.n_high.into())
        .with("max_deviation", round12(report.max_deviation).into())
        .with("casimir_max_abs", round12(report.casimir_max_abs).into())
        .with("casimir_forms_max_diff", round12(report.casimir_forms_max_diff).into())
        .with("frequency_max_diff", round12(report.frequency_max_diff).into());
    art.default_format = Format::Json;
    Ok(art)
}

fn dual_check_cmd(a: &DualCheckArgs) -> Result<Artifact, CliError> {
    let report = states::dual_series_diagnosis(a.terms)?;
    let mut table = Table::new(&["n", "x_n"]);
    for (k, &x) in report.x_seq.iter().enumerate() {
        table.push(vec![(k + 1).into(), x.into()]);
    }
    let mut art = Artifact::new("dual-check", table)
        .with("terms", a.terms.into())
        .with("verdict", serde_json::to_value(report.verdict).expect("verdict serializes"))
        .with("limit_estimate", round12(report.limit_estimate).into());
    art.default_format = Format::Json;
    Ok(art)
}

/// Runs the command and returns its result without writing anything.
pub fn execute(cli: &Cli) -> Result<Artifact, CliError> {
    match &cli.command {
        Command::State(a) => state_cmd(a),
        Command::Stats(a) => stats_cmd(a),
        Command::Squeeze(a) => squeeze_cmd(a),
        Command::QuadDist(a) => quad_dist_cmd(a),
        Command::Quasiprob(a) => quasiprob_cmd(a),
        Command::VerifyAlgebra(a) => verify_algebra_cmd(a),
        Command::DualCheck(a) => dual_check_cmd(a),
    }
}

fn output_of(cli: &Cli) -> &Output {
    match &cli.command {
        Command::State(a) => &a.output,
        Command::Stats(a) => &a.output,
        Command::Squeeze(a) => &a.output,
        Command::QuadDist(a) => &a.output,
        Command::Quasiprob(a) => &a.output,
        Command::VerifyAlgebra(a) => &a.output,
        Command::DualCheck(a) => &a.output,
    }
}

fn sidecar(path: &Path) -> PathBuf {
    let mut name = OsString::from(path.as_os_str());
    name.push(".json");
    PathBuf::from(name)
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

fn pretty(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("json renders");
    s.push('\n');
    s
}

fn stream_error(source: std::io::Error) -> CliError {
    CliError::Io { path: "<stdio>".into(), source }
}

/// Runs the command and writes its output: CSV plus a JSON sidecar, or a
/// single JSON document.
pub fn run(cli: &Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<(), CliError> {
    let artifact = execute(cli)?;
    let output = output_of(cli);
    let format = output.format.unwrap_or(artifact.default_format);
    match (&output.out, format) {
        (Some(path), Format::Csv) => {
            write_file(path, &artifact.table.to_csv())?;
            write_file(&sidecar(path), &pretty(&artifact.header_json()))?;
        }
        (Some(path), Format::Json) => write_file(path, &pretty(&artifact.full_json()))?,
        (None, Format::Csv) => {
            stdout.write_all(artifact.table.to_csv().as_bytes()).map_err(stream_error)?;
            writeln!(stderr, "{}", artifact.header_json()).map_err(stream_error)?;
        }
        (None, Format::Json) => stdout.write_all(pretty(&artifact.full_json()).as_bytes()).map_err(stream_error)?,
    }
    if output.out.is_some() {
        for w in &artifact.warnings {
            writeln!(stderr, "warning: {w}").map_err(stream_error)?;
        }
    }
    Ok(())
}
