use std::f64::consts::PI;
use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use smallworld::build_ring_lattice;
use smallworld::export::read_edge_list;

fn smallworld(args: &[&str], out: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_smallworld"))
        .args(args)
        .arg("--out")
        .arg(out)
        .output()
        .expect("binary runs")
}

fn csv_column(path: &Path, column: usize) -> Vec<f64> {
    let mut reader = csv::Reader::from_path(path).unwrap();
    reader
        .records()
        .map(|r| r.unwrap()[column].parse().unwrap())
        .collect()
}

#[test]
fn generate_writes_edge_list_and_log() {
    let dir = tempfile::tempdir().unwrap();
    let out = smallworld(
        &[
            "generate", "--n", "20", "--k", "4", "--p", "0.5", "--seed", "1",
        ],
        dir.path(),
    );
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = fs::read_to_string(dir.path().join("edges.txt")).unwrap();
    assert!(text.starts_with("# n=20 k=4 p=0.5 seed=1 exhausted="));
    assert_eq!(text.lines().filter(|l| !l.starts_with('#')).count(), 40);
    let log = fs::read_to_string(dir.path().join("rewire.jsonl")).unwrap();
    assert_eq!(log.lines().count(), 40);
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("edges=40"), "{stdout}");
}

#[test]
fn generate_rejects_small_n() {
    let dir = tempfile::tempdir().unwrap();
    let out = smallworld(
        &["generate", "--n", "9", "--k", "4", "--p", "0.5"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("invalid parameters"));
}

#[test]
fn generate_p_zero_is_the_lattice() {
    let dir = tempfile::tempdir().unwrap();
    let out = smallworld(
        &["generate", "--n", "12", "--k", "4", "--p", "0"],
        dir.path(),
    );
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("default seed 0"));
    let (_, g) =
        read_edge_list(fs::read(dir.path().join("edges.txt")).unwrap().as_slice()).unwrap();
    assert_eq!(g, build_ring_lattice(12, 4).unwrap());
}

#[test]
fn reruns_are_byte_identical() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    for dir in [&a, &b] {
        let args = [
            "spectrum", "--n", "40", "--k", "4", "--p", "0.3", "--seed", "5", "--bins", "7",
        ];
        assert!(smallworld(&args, dir.path()).status.success());
        assert!(smallworld(
            &["generate", "--n", "40", "--k", "4", "--p", "0.3", "--seed", "5"],
            dir.path()
        )
        .status
        .success());
    }
    for name in [
        "eigenvalues.csv",
        "histogram.csv",
        "edges.txt",
        "rewire.jsonl",
    ] {
        assert_eq!(
            fs::read(a.path().join(name)).unwrap(),
            fs::read(b.path().join(name)).unwrap(),
            "{name}"
        );
    }
}

#[test]
fn spectrum_of_cycle() {
    let dir = tempfile::tempdir().unwrap();
    let out = smallworld(
        &[
            "spectrum", "--n", "64", "--k", "2", "--p", "0", "--bins", "10",
        ],
        dir.path(),
    );
    assert!(out.status.success());
    let got = csv_column(&dir.path().join("eigenvalues.csv"), 1);
    let mut want: Vec<f64> = (0..64)
        .map(|j| 2.0 * (2.0 * PI * j as f64 / 64.0).cos())
        .collect();
    want.sort_by(f64::total_cmp);
    assert_eq!(got.len(), 64);
    for (g, w) in got.iter().zip(&want) {
        assert!((g - w).abs() <= 1e-9);
    }
    let counts = csv_column(&dir.path().join("histogram.csv"), 2);
    assert_eq!(counts.len(), 10);
    assert_eq!(counts.iter().sum::<f64>(), 64.0);
}

#[test]
fn spectrum_second_moment_is_k() {
    let dir = tempfile::tempdir().unwrap();
    let out = smallworld(
        &[
            "spectrum", "--n", "100", "--k", "4", "--p", "0.5", "--seed", "3", "--format", "json",
        ],
        dir.path(),
    );
    assert!(out.status.success());
    let rows: serde_json::Value =
        serde_json::from_slice(&fs::read(dir.path().join("eigenvalues.json")).unwrap()).unwrap();
    let second: f64 = rows
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["eigenvalue"].as_f64().unwrap().powi(2))
        .sum::<f64>()
        / 100.0;
    assert!((second - 4.0).abs() <= 1e-7, "{second}");
}

#[test]
fn spectrum_of_k5() {
    let dir = tempfile::tempdir().unwrap();
    assert!(smallworld(
        &["spectrum", "--n", "5", "--k", "4", "--p", "0"],
        dir.path()
    )
    .status
    .success());
    let got = csv_column(&dir.path().join("eigenvalues.csv"), 1);
    for (g, w) in got.iter().zip([-1.0, -1.0, -1.0, -1.0, 4.0]) {
        assert!((g - w).abs() < 1e-12);
    }
}

#[test]
fn moments_on_the_lattice_are_exact() {
    let dir = tempfile::tempdir().unwrap();
    let out = smallworld(
        &[
            "moments", "--k", "4", "--p", "0", "--n-list", "100,200", "--order", "3", "--trials",
            "3",
        ],
        dir.path(),
    );
    assert!(out.status.success());
    let text = fs::read_to_string(dir.path().join("moments.csv")).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("n,k,p,order,trials,mean,stderr,limit,gap")
    );
    assert_eq!(
        csv_column(&dir.path().join("moments.csv"), 5),
        vec![6.0, 6.0]
    );
    assert_eq!(
        csv_column(&dir.path().join("moments.csv"), 8),
        vec![0.0, 0.0]
    );
}

#[test]
fn moments_limit_column_is_zero_for_k2() {
    let dir = tempfile::tempdir().unwrap();
    let out = smallworld(
        &[
            "moments", "--k", "2", "--p", "0.7", "--n-list", "100", "--trials", "5",
        ],
        dir.path(),
    );
    assert!(out.status.success());
    assert_eq!(csv_column(&dir.path().join("moments.csv"), 7), vec![0.0]);
}

#[test]
fn moments_check_mode_passes_within_band() {
    let dir = tempfile::tempdir().unwrap();
    let out = smallworld(
        &[
            "moments", "--k", "4", "--p", "0.3", "--n-list", "400", "--trials", "500", "--check",
        ],
        dir.path(),
    );
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert_eq!(out.status.code(), Some(0), "{stdout}");
    assert!(stdout.contains("check band n=400: PASS"));
}

#[test]
fn moments_check_mode_fails_outside_band() {
    // at n = 20, k = 8 the finite-size excess over the limit is far beyond the band
    let dir = tempfile::tempdir().unwrap();
    let out = smallworld(
        &[
            "moments", "--k", "8", "--p", "0.5", "--n-list", "20", "--trials", "50", "--check",
        ],
        dir.path(),
    );
    assert_eq!(
        out.status.code(),
        Some(1),
        "{}",
        String::from_utf8_lossy(&out.stdout)
    );
}

#[test]
fn configs_counts() {
    let dir = tempfile::tempdir().unwrap();
    assert!(
        smallworld(&["configs", "--n", "20", "--k", "4"], dir.path())
            .status
            .success()
    );
    let v: serde_json::Value =
        serde_json::from_slice(&fs::read(dir.path().join("configs.json")).unwrap()).unwrap();
    assert_eq!(v["all_close"], 120);
    assert_eq!(v["total"], 6840);
    assert_eq!(v["closed_form"]["two_far"], 1080);
    assert_eq!(v["ratios"]["one_far"], 3.0);

    assert!(
        smallworld(&["configs", "--n", "30", "--k", "6"], dir.path())
            .status
            .success()
    );
    let v: serde_json::Value =
        serde_json::from_slice(&fs::read(dir.path().join("configs.json")).unwrap()).unwrap();
    assert_eq!(v["all_close"], 540);
    assert_eq!(v["closed_form"]["all_close"], 540);
}

#[test]
fn configs_size_limit() {
    let dir = tempfile::tempdir().unwrap();
    let out = smallworld(&["configs", "--n", "700", "--k", "4"], dir.path());
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("enumeration cap"));
}

#[test]
fn probe_all_close() {
    let dir = tempfile::tempdir().unwrap();
    let out = smallworld(
        &[
            "probe",
            "--class",
            "all-close",
            "--n",
            "200",
            "--k",
            "4",
            "--p",
            "0.3",
            "--trials",
            "20000",
            "--seed",
            "4",
        ],
        dir.path(),
    );
    assert!(out.status.success());
    let est = csv_column(&dir.path().join("probe.csv"), 2)[0];
    let se = csv_column(&dir.path().join("probe.csv"), 3)[0];
    assert!((est - 0.343).abs() <= 4.0 * se, "{est} ± {se}");

    let out = smallworld(
        &[
            "probe",
            "--class",
            "all-close",
            "--n",
            "200",
            "--k",
            "4",
            "--p",
            "1",
            "--trials",
            "1000",
        ],
        dir.path(),
    );
    assert!(out.status.success());
    assert_eq!(csv_column(&dir.path().join("probe.csv"), 2), vec![0.0]);
}

#[test]
fn probe_scaling_writes_fit() {
    let dir = tempfile::tempdir().unwrap();
    let out = smallworld(
        &[
            "probe", "--class", "all-far", "--k", "4", "--p", "1", "--n-list", "30,45,60",
            "--trials", "20000",
        ],
        dir.path(),
    );
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let fit: serde_json::Value =
        serde_json::from_slice(&fs::read(dir.path().join("probe_fit.json")).unwrap()).unwrap();
    assert!(fit["exponent"].as_f64().unwrap() < 0.0);
    assert_eq!(
        csv_column(&dir.path().join("probe.csv"), 0),
        vec![30.0, 45.0, 60.0]
    );
}

#[test]
fn probe_zero_hits_gives_guidance() {
    let dir = tempfile::tempdir().unwrap();
    let out = smallworld(
        &[
            "probe", "--class", "all-far", "--k", "4", "--p", "0", "--n-list", "30,45,60",
            "--trials", "100",
        ],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("raise --trials"));
}

#[test]
fn unknown_class_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let out = smallworld(&["probe", "--class", "some-far"], dir.path());
    assert_eq!(out.status.code(), Some(2));
}
