use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use spa_singlet_cli::report::{AnalysisReport, VerdictLabel, SCAN_HEADER};
use spa_singlet_cli::{parse_state_file, StateFile};

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_spa-singlet"));
    cmd.env_remove("SPA_SINGLET_SEED");
    cmd
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn report(o: &Output) -> AnalysisReport {
    serde_json::from_slice(&o.stdout).expect("report JSON")
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

#[test]
fn singlet_fixture_is_entangled() {
    let o = run(&["analyze", fixture("singlet.json").to_str().unwrap()]);
    assert_eq!(code(&o), 3);
    let r = report(&o);
    assert_eq!(r.verdict, VerdictLabel::Entangled);
    assert!((r.lambda_min - 1.0 / 6.0).abs() < 1e-12);
    assert!((r.f_opt - 1.0).abs() < 1e-12);
    assert!((r.teleport_fidelity - 1.0).abs() < 1e-12);
    assert!(r.residuals.max() <= 1e-9);
    let bytes = std::fs::read(fixture("singlet.json")).unwrap();
    assert_eq!(
        r.input_sha256.as_deref(),
        Some(spa_singlet_cli::state_file::digest(&bytes).as_str())
    );
}

#[test]
fn maximally_mixed_fixture_is_separable() {
    let o = run(&["analyze", fixture("maximally-mixed.json").to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let r = report(&o);
    assert_eq!(r.verdict, VerdictLabel::Separable);
    assert!((r.lambda_min - 0.25).abs() < 1e-12);
}

#[test]
fn fixture_holds_the_singlet_projector() {
    let loaded = parse_state_file(&fixture("singlet.json")).unwrap();
    let m = loaded.state.matrix();
    assert_eq!(m[(1, 1)].re, 0.5);
    assert_eq!(m[(1, 2)].re, -0.5);
    assert_eq!(m[(0, 0)].re, 0.0);
}

#[test]
fn werner_states_through_generate_and_analyze() {
    let dir = tempfile::tempdir().unwrap();
    let weak = dir.path().join("w025.json");
    let strong = dir.path().join("w08.json");
    assert_eq!(
        code(&run(&[
            "generate",
            "--type",
            "werner",
            "--w",
            "0.25",
            "--out",
            weak.to_str().unwrap()
        ])),
        0
    );
    assert_eq!(
        code(&run(&[
            "generate",
            "--type",
            "werner",
            "--w",
            "0.8",
            "--out",
            strong.to_str().unwrap()
        ])),
        0
    );
    assert_eq!(code(&run(&["analyze", weak.to_str().unwrap()])), 0);
    assert_eq!(code(&run(&["analyze", strong.to_str().unwrap()])), 3);
}

#[test]
fn generated_singlet_matches_fixture_bytes() {
    let o = run(&["generate", "--type", "bell", "--which", "psi-minus"]);
    assert_eq!(code(&o), 0);
    assert_eq!(o.stdout, std::fs::read(fixture("singlet.json")).unwrap());
}

#[test]
fn generation_is_deterministic() {
    let a = run(&["generate", "--type", "random", "--seed", "7"]);
    let b = run(&["generate", "--type", "random", "--seed", "7"]);
    assert_eq!(a.stdout, b.stdout);
    let from_env = bin()
        .args(["generate", "--type", "random"])
        .env("SPA_SINGLET_SEED", "7")
        .output()
        .unwrap();
    assert_eq!(from_env.stdout, a.stdout);
    let other = run(&["generate", "--type", "random", "--seed", "8"]);
    assert_ne!(other.stdout, a.stdout);

    let dir = tempfile::tempdir().unwrap();
    let p = write(
        dir.path(),
        "r.json",
        std::str::from_utf8(&a.stdout).unwrap(),
    );
    let first = run(&["analyze", p.to_str().unwrap()]);
    let second = run(&["analyze", p.to_str().unwrap()]);
    assert_eq!(first.stdout, second.stdout);
    let parsed: StateFile = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(parsed.to_json().as_bytes(), a.stdout.as_slice());
}

#[test]
fn product_states_are_separable() {
    let dir = tempfile::tempdir().unwrap();
    for seed in 0..5 {
        let p = dir.path().join(format!("p{seed}.json"));
        let s = seed.to_string();
        run(&[
            "generate",
            "--type",
            "product",
            "--seed",
            &s,
            "--out",
            p.to_str().unwrap(),
        ]);
        assert_eq!(code(&run(&["analyze", p.to_str().unwrap()])), 0);
    }
}

#[test]
fn invalid_state_files() {
    let dir = tempfile::tempdir().unwrap();
    let trace = write(
        dir.path(),
        "trace.json",
        r#"{"dim": 2, "matrix": [[[0.5, 0], [0, 0]], [[0, 0], [0.4, 0]]]}"#,
    );
    let o = run(&["analyze", trace.to_str().unwrap()]);
    assert_eq!(code(&o), 1);
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("trace") && err.contains("0.9"), "{err}");

    let herm = write(
        dir.path(),
        "herm.json",
        r#"{"dim": 2, "matrix": [[[0.5, 0], [0.1, 0]], [[0.2, 0], [0.5, 0]]]}"#,
    );
    let o = run(&["analyze", herm.to_str().unwrap()]);
    assert_eq!(code(&o), 1);
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("Hermitian") && err.contains("(0,1)"), "{err}");

    let junk = write(dir.path(), "junk.json", "{ not json");
    assert_eq!(code(&run(&["analyze", junk.to_str().unwrap()])), 1);
    assert_eq!(
        code(&run(&[
            "analyze",
            dir.path().join("missing.json").to_str().unwrap()
        ])),
        1
    );
}

#[test]
fn estimate_singlet_with_a_million_shots() {
    let o = run(&[
        "estimate",
        fixture("singlet.json").to_str().unwrap(),
        "--shots",
        "1000000",
        "--seed",
        "42",
    ]);
    assert_eq!(code(&o), 0);
    let r = report(&o);
    let e = r.estimate.unwrap();
    assert_eq!(e.shots, Some(1_000_000));
    assert!(e.lambda_min.ci_low <= 1.0 / 6.0 && 1.0 / 6.0 <= e.lambda_min.ci_high);
    assert!((e.lambda_min.analytic - 1.0 / 6.0).abs() < 1e-12);
}

#[test]
fn single_shot_interval_spans_everything() {
    let o = run(&[
        "estimate",
        fixture("singlet.json").to_str().unwrap(),
        "--shots",
        "1",
    ]);
    assert_eq!(code(&o), 0);
    let e = report(&o).estimate.unwrap();
    assert!(e.overlap.ci_low <= 0.0 && e.overlap.ci_high >= 1.0);
    assert!(e.lambda_min.ci_low <= 1.0 / 6.0 && e.lambda_min.ci_high >= 0.25);
}

#[test]
fn estimate_usage_errors() {
    let s = fixture("singlet.json");
    assert_eq!(code(&run(&["estimate", s.to_str().unwrap()])), 2);
    assert_eq!(
        code(&run(&["estimate", s.to_str().unwrap(), "--shots", "0"])),
        2
    );
    assert_eq!(
        code(&run(&[
            "estimate",
            s.to_str().unwrap(),
            "--shots",
            "10",
            "--analytic"
        ])),
        2
    );
}

#[test]
fn analytic_estimate_agrees_with_analyze() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("r.json");
    run(&[
        "generate",
        "--type",
        "random",
        "--seed",
        "11",
        "--rank",
        "2",
        "--out",
        p.to_str().unwrap(),
    ]);
    let a = report(&run(&["analyze", p.to_str().unwrap()]));
    let mut e = report(&run(&["estimate", p.to_str().unwrap(), "--analytic"]));
    let block = e.estimate.take().unwrap();
    assert_eq!(a, e);
    for (est, exact) in [
        (block.lambda_min.point, a.lambda_min),
        (block.f_avg.point, a.f_avg),
        (block.f_opt.point, a.f_opt),
        (block.teleport_fidelity.point, a.teleport_fidelity),
    ] {
        assert!((est - exact).abs() <= 1e-12);
    }
}

#[test]
fn report_reparses_losslessly() {
    let o = run(&[
        "estimate",
        fixture("singlet.json").to_str().unwrap(),
        "--shots",
        "777",
        "--seed",
        "3",
    ]);
    let r = report(&o);
    let again = serde_json::to_string_pretty(&r).unwrap();
    assert_eq!(
        again.trim_end(),
        String::from_utf8_lossy(&o.stdout).trim_end()
    );
}

#[test]
fn hybrid_scan_csv() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("scan.csv");
    let o = run(&[
        "hybrid-scan",
        "--p-grid",
        "0:1:0.25",
        "--theta-grid",
        "pi/16:pi/4:pi/16",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    let text = std::fs::read_to_string(&out).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], SCAN_HEADER);
    let rows: Vec<Vec<&str>> = lines[1..]
        .iter()
        .filter(|l| !l.starts_with('#'))
        .map(|l| l.split(',').collect())
        .collect();
    assert_eq!(rows.len(), 20);
    let ps: Vec<f64> = rows.iter().map(|r| r[0].parse().unwrap()).collect();
    assert!(ps.windows(2).all(|w| w[0] <= w[1]));
    let anchor = rows
        .iter()
        .find(|r| r[0] == "0.500000000000" && r[1] == "0.785398163397")
        .unwrap();
    assert_eq!(anchor[2], "0.750000000000");
    assert_eq!(anchor[3], "0.833333333333");
    assert_eq!(anchor[4], "true");
    assert!(lines.last().unwrap().starts_with("# decreasing_in_p=true"));
}

#[test]
fn hybrid_scan_errors() {
    assert_eq!(code(&run(&["hybrid-scan", "--p-grid", "0:1"])), 2);
    assert_eq!(
        code(&run(&["hybrid-scan", "--theta-grid", "0:pi/4:pi/8"])),
        2
    );
    assert_eq!(code(&run(&["hybrid-scan", "--p-grid", "x:1:0.5"])), 2);
    let o = run(&[
        "hybrid-scan",
        "--p-grid",
        "0.5",
        "--theta-grid",
        "pi/4",
        "--out",
        "/nonexistent-dir/x.csv",
    ]);
    assert_eq!(code(&o), 1);
}

#[test]
fn spa_dump() {
    let o = run(&["spa", fixture("singlet.json").to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let f: StateFile = serde_json::from_slice(&o.stdout).unwrap();
    let m = f.to_matrix().unwrap();
    // singlet: ρ^{T_B}/9 + 2I/9 has 2/9 on |00>,|11>, 5/18 on |01>,|10> and -1/18 corners
    assert!((m[(0, 0)].re - 2.0 / 9.0).abs() < 1e-15);
    assert!((m[(1, 1)].re - 5.0 / 18.0).abs() < 1e-15);
    assert!((m[(0, 3)].re + 1.0 / 18.0).abs() < 1e-15);

    let lit = run(&[
        "spa",
        "--literal",
        fixture("singlet.json").to_str().unwrap(),
    ]);
    assert_eq!(code(&lit), 0);
    assert!(String::from_utf8_lossy(&lit.stderr).contains("deviation"));
}

#[test]
fn help_for_every_subcommand() {
    for sub in ["analyze", "estimate", "hybrid-scan", "generate", "spa"] {
        let o = run(&[sub, "--help"]);
        assert_eq!(code(&o), 0, "{sub}");
        assert!(!o.stdout.is_empty());
    }
    assert_eq!(code(&run(&["--help"])), 0);
    assert_eq!(code(&run(&["frobnicate"])), 2);
    assert_eq!(code(&run(&["generate", "--type", "nope"])), 2);
    assert_eq!(code(&run(&["generate", "--type", "werner"])), 2);
}

#[test]
fn text_summary() {
    let o = run(&[
        "analyze",
        "--text",
        fixture("singlet.json").to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 3);
    let text = String::from_utf8_lossy(&o.stdout);
    assert!(text.contains("verdict            entangled"));
    assert!(text.contains("lambda_min         0.166666666667"));
}
