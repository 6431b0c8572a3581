use std::fs;
use std::path::PathBuf;

use clap::Parser;
use serde_json::Value;

use crate::args::Cli;
use crate::figures::FIGURES;
use crate::{csv_for, run, CliError};

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden")
}

fn parse(args: &[&str]) -> Cli {
    Cli::try_parse_from(std::iter::once("isosqueeze").chain(args.iter().copied())).unwrap()
}

fn run_captured(args: &[&str]) -> (Result<(), CliError>, String, String) {
    let cli = parse(args);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let result = run(&cli, &mut out, &mut err);
    (result, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

/// Set `UPDATE_GOLDEN=1` to rewrite the files after an intended change.
#[test]
fn golden_files_match() {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    for fig in FIGURES {
        let csv = csv_for(fig.golden_args).unwrap();
        let path = golden_dir().join(format!("{}.csv", fig.golden));
        if update {
            fs::write(&path, &csv).unwrap();
        }
        let expected = fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing {}", path.display()));
        assert!(csv == expected, "{} differs from its golden file", fig.golden);
    }
}

#[test]
fn figures_table_lists_every_invocation() {
    let doc = fs::read_to_string(PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../figures.md")).unwrap();
    for fig in FIGURES {
        let line = format!("isosqueeze {}", fig.args.join(" "));
        assert!(doc.contains(&line), "figures.md lacks `{line}`");
    }
}

#[test]
fn full_invocations_parse() {
    for fig in FIGURES {
        assert!(
            Cli::try_parse_from(std::iter::once("isosqueeze").chain(fig.args.iter().copied())).is_ok(),
            "{}",
            fig.label
        );
    }
}

#[test]
fn vacuum_state_is_one_row() {
    let csv = csv_for(&["state", "--case", "iii", "--xi", "0"]).unwrap();
    assert_eq!(csv, "level,prob\n3,1\n");
}

#[test]
fn stats_sweep_is_super_poissonian() {
    let csv = csv_for(&["stats", "--case", "i", "--r-max", "31", "--r-steps", "64", "--n-max", "70"]).unwrap();
    let mut lines = csv.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    let q = header.iter().position(|&c| c == "Q").unwrap();
    let rows: Vec<f64> = lines.map(|l| l.split(',').nth(q).unwrap().parse().unwrap()).collect();
    assert_eq!(rows.len(), 64);
    assert!(rows.iter().all(|&q| q > 0.0));
}

#[test]
fn dual_check_reports_divergence() {
    let (result, out, _) = run_captured(&["dual-check", "--terms", "50"]);
    result.unwrap();
    let json: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(json["verdict"], "divergent");
    assert!(json["limit_estimate"].as_f64().unwrap() < 1e-6);
}

#[test]
fn verify_algebra_reports_clean_identities() {
    let (result, out, _) = run_captured(&["verify-algebra"]);
    result.unwrap();
    let json: Value = serde_json::from_str(&out).unwrap();
    assert!(json["max_deviation"].as_f64().unwrap() < 1e-10);
    assert_eq!(json["frequency_max_diff"].as_f64().unwrap(), 0.0);
}

#[test]
fn csv_to_stdout_puts_header_on_stderr() {
    let (result, out, err) = run_captured(&["state", "--case", "iii", "--xi", "0.4", "--n-max", "20"]);
    result.unwrap();
    assert!(out.starts_with("level,prob\n"));
    let header: Value = serde_json::from_str(err.trim()).unwrap();
    assert_eq!(header["case"], "iii");
    assert_eq!(header["params"]["xi"], 0.4);
}

#[test]
fn sidecar_is_written_next_to_output() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("q.csv");
    let p = path.to_str().unwrap();
    let (result, out, _) = run_captured(&["quasiprob", "--r", "1", "--s", "-1", "--points", "5", "--out", p]);
    result.unwrap();
    assert!(out.is_empty());
    assert!(fs::read_to_string(&path).unwrap().starts_with("x,p,F\n"));
    let header: Value = serde_json::from_str(&fs::read_to_string(dir.path().join("q.csv.json")).unwrap()).unwrap();
    assert_eq!(header["s"], -1.0);
    assert_eq!(header["grid"]["points"], 5);
    assert!(header["warnings"].as_array().unwrap().is_empty());
}

#[test]
fn json_format_embeds_rows() {
    let (result, out, _) = run_captured(&["state", "--case", "iii", "--xi", "0", "--format", "json"]);
    result.unwrap();
    let json: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(json["columns"][0], "level");
    assert_eq!(json["rows"][0][1], 1.0);
}

#[test]
fn truncation_warning_is_data() {
    let (result, _, err) = run_captured(&["state", "--case", "iii", "--xi", "0.5", "--n-max", "5"]);
    result.unwrap();
    let header: Value = serde_json::from_str(err.trim()).unwrap();
    let warnings = header["warnings"].as_array().unwrap();
    assert_eq!(warnings.len(), 1);
    assert!(warnings[0].as_str().unwrap().contains("tail mass"));
}

#[test]
fn exit_codes() {
    let usage =
        |args: &[&str]| Cli::try_parse_from(std::iter::once("isosqueeze").chain(args.iter().copied())).unwrap_err();
    assert_eq!(usage(&["state", "--bogus"]).exit_code(), 2);
    assert_eq!(usage(&["stats", "--r", "1", "--r-max", "3"]).exit_code(), 2);
    assert_eq!(usage(&["frobnicate"]).exit_code(), 2);

    let code = |args: &[&str]| csv_for(args).unwrap_err().exit_code();
    assert_eq!(code(&["state", "--case", "i", "--xi", "0.3"]), 2);
    assert_eq!(code(&["state", "--case", "iii", "--r", "0.3"]), 2);
    assert_eq!(code(&["state", "--case", "i"]), 2);
    assert_eq!(code(&["state", "--case", "iii", "--xi", "1.0"]), 3);
    assert_eq!(code(&["stats", "--case", "iii", "--r-max", "1.5"]), 3);
    assert_eq!(code(&["quasiprob", "--r", "1", "--s", "1"]), 3);
    assert_eq!(code(&["quad-dist", "--case", "iii", "--xi", "0.2", "--route", "closed"]), 3);
    assert_eq!(code(&["state", "--r=-2"]), 3);
}

#[test]
fn repeated_runs_are_byte_identical() {
    let args = ["squeeze", "--case", "i", "--r-max", "20", "--r-steps", "3", "--theta-steps", "6", "--n-max", "70"];
    assert_eq!(csv_for(&args).unwrap(), csv_for(&args).unwrap());
}

#[test]
fn routes_agree_on_quadrature_grid() {
    let base = ["quad-dist", "--r", "10", "--theta", "0.5", "--x-points", "11", "--phi-points", "8", "--n-max", "70"];
    let parse_p = |csv: String| -> Vec<f64> {
        csv.lines().skip(1).map(|l| l.rsplit(',').next().unwrap().parse().unwrap()).collect()
    };
    let wave = parse_p(csv_for(&base).unwrap());
    let mut closed_args = base.to_vec();
    closed_args.extend(["--route", "closed"]);
    let closed = parse_p(csv_for(&closed_args).unwrap());
    assert_eq!(wave.len(), 88);
    for (a, b) in wave.iter().zip(&closed) {
        assert!((a - b).abs() < 1e-8);
    }
}

#[test]
fn mean_excitation_grows_with_modulus() {
    for args in [
        &["stats", "--case", "i", "--r-max", "31", "--r-steps", "64", "--n-max", "70"][..],
        &["stats", "--case", "iii", "--r-max", "0.95", "--r-steps", "64", "--n-max", "70"][..],
    ] {
        let csv = csv_for(args).unwrap();
        let means: Vec<f64> = csv.lines().skip(1).map(|l| l.split(',').nth(2).unwrap().parse().unwrap()).collect();
        assert!(means.windows(2).all(|w| w[1] > w[0]), "{args:?}");
    }
}
