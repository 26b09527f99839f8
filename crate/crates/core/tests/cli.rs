use std::fs;
use std::path::Path;
use std::process::Command as Process;

use clap::Parser;
use zetalab::cli::{run, Cli, Command, RunConfig};

fn bin() -> Process {
    Process::new(env!("CARGO_BIN_EXE_zetalab"))
}

fn config(args: &[&str], dir: &Path) -> RunConfig {
    let mut full = vec!["zetalab"];
    full.extend_from_slice(args);
    let cli = Cli::try_parse_from(full).unwrap();
    let mut c = RunConfig::from_cli(cli, None).unwrap();
    c.out_dir = dir.join("out");
    c.cache_dir = dir.join("cache");
    c
}

#[test]
fn dynzeta_identity_series() {
    let dir = tempfile::tempdir().unwrap();
    let report = run(&config(&["dynzeta", "--matrix", "id1", "--order", "5"], dir.path())).unwrap();
    let series: Vec<String> = serde_json::from_value(report.outputs["series"].clone()).unwrap();
    assert_eq!(series, vec!["1"; 6]);
    assert!(report.passed());
    let csv = fs::read_to_string(dir.path().join("out/dynzeta-series.csv")).unwrap();
    assert!(csv.starts_with("k,periodic_points,series_coefficient\n0,,1\n1,1,1\n"));
}

#[test]
fn ene_unit_check() {
    let dir = tempfile::tempdir().unwrap();
    let c = config(&["ene", "--unit-check", "--prime", "97"], dir.path());
    assert_eq!(c.command, Command::Ene { unit_check: true, prime: 97 });
    let report = run(&c).unwrap();
    assert!(report.passed());
    assert_eq!(report.verdicts.len(), 1);
}

#[test]
fn zeros_command_writes_cache_and_csv() {
    let dir = tempfile::tempdir().unwrap();
    let report = run(&config(&["zeros", "--family", "zeta", "--height", "35"], dir.path())).unwrap();
    let first: Vec<f64> = serde_json::from_value(report.outputs["first_ordinates"].clone()).unwrap();
    for (g, t) in first.iter().zip([14.134725, 21.022039, 25.01085, 30.42487]) {
        assert!((g - t).abs() < 1e-5);
    }
    assert!(report.passed());
    let out = dir.path().join("out/zeros-zeta.csv");
    let text = fs::read_to_string(&out).unwrap();
    assert!(text.starts_with("family,ordinate,tolerance,certified_height,format=zetalab-zeros-v1\n"));
    assert_eq!(fs::read_dir(dir.path().join("cache")).unwrap().count(), 1);
}

#[test]
fn csv_outputs_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let mut texts = Vec::new();
    for round in 0..2 {
        let mut c = config(&["explicit", "--height", "200", "--range", "2:60"], dir.path());
        c.out_dir = dir.path().join(format!("out{round}"));
        run(&c).unwrap();
        texts.push(fs::read(c.out_dir.join("explicit-psi.csv")).unwrap());
    }
    assert_eq!(texts[0], texts[1]);
    let first_line = String::from_utf8(texts[0].clone()).unwrap().lines().nth(1).unwrap().to_string();
    // 17 significant digits per float
    assert!(first_line.split(',').all(|f| f.contains('e') && f.split('e').next().unwrap().len() == 18));
}

#[test]
fn selfcheck_passes_with_seed() {
    let dir = tempfile::tempdir().unwrap();
    let report = run(&config(&["selfcheck", "--seed", "7"], dir.path())).unwrap();
    assert!(report.passed(), "{report}");
}

#[test]
fn config_validation() {
    let parse = |args: &[&str]| {
        let mut full = vec!["zetalab"];
        full.extend_from_slice(args);
        RunConfig::from_cli(Cli::try_parse_from(full).unwrap(), None)
    };
    assert!(parse(&["count", "--height=-3"]).is_err());
    assert!(parse(&["count", "--family", "psi"]).is_err());
    assert!(parse(&["stats", "--range", "5:1"]).is_err());
    assert!(parse(&["count", "--out", "same", "--cache", "same"]).is_err());
    let cli = Cli::try_parse_from(["zetalab", "count"]).unwrap();
    let c = RunConfig::from_cli(cli, Some("from-env".into())).unwrap();
    assert_eq!(c.cache_dir, Path::new("from-env"));
    let cli = Cli::try_parse_from(["zetalab", "count", "--cache", "flag"]).unwrap();
    let c = RunConfig::from_cli(cli, Some("from-env".into())).unwrap();
    assert_eq!(c.cache_dir, Path::new("flag"));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let status = |args: &[&str]| {
        bin()
            .args(args)
            .current_dir(dir.path())
            .env("ZETALAB_CACHE", dir.path().join("cache"))
            .output()
            .unwrap()
            .status
            .code()
    };
    assert_eq!(status(&["ene", "--unit-check", "--prime", "97"]), Some(0));
    assert_eq!(status(&["frobnicate"]), Some(2));
    assert_eq!(status(&["ene", "--unit-check", "--prime", "91"]), Some(2));
    assert_eq!(status(&["padic", "--residue", "2"]), Some(2));
    assert_eq!(status(&["stats", "--height", "500"]), Some(2));
    // 649 zeros leave the pair correlation too noisy for the 0.1 budget
    assert_eq!(status(&["stats", "--height", "1000"]), Some(1));
}

#[test]
fn env_cache_is_used_by_the_binary() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("env-cache");
    let out = bin()
        .args(["zeros", "--height", "40", "--json"])
        .current_dir(dir.path())
        .env("ZETALAB_CACHE", &cache)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["outputs"]["zeros"], 6);
    assert_eq!(fs::read_dir(&cache).unwrap().count(), 1);
}
