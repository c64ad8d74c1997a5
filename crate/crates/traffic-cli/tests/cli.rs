use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;
use tempfile::TempDir;
use traffic_cli::{run, Output, CSV_HEADER};

struct Files(TempDir);

impl Files {
    fn new() -> Self {
        Files(tempfile::tempdir().unwrap())
    }

    fn write(&self, name: &str, text: &str) -> String {
        let p: PathBuf = self.0.path().join(name);
        std::fs::write(&p, text).unwrap();
        p.to_string_lossy().into_owned()
    }
}

fn traffic(args: &[&str]) -> Output {
    run(std::iter::once("traffic").chain(args.iter().copied()), None)
}

fn record(out: &Output) -> Value {
    assert_ne!(out.code, 0, "expected a failure, got {out:?}");
    let line = out.stderr.lines().next().unwrap();
    serde_json::from_str(line).unwrap()
}

const STAR: &str = "# two opposing pads on a center\ne 0 1 x\ne 1 0 x\ne 0 2 x\ne 2 0 x\n";
const C2: &str = "e 0 1 x\ne 1 0 x\n";

#[test]
fn star_at_half_proportion() {
    let f = Files::new();
    let g = f.write("dt.tg", STAR);
    let out = traffic(&["ltd", "--graph", &g, "--regime", "x=proportional:0.5"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(out.stdout.lines().next().unwrap(), "28/27 ≈ 1.037037");
}

#[test]
fn one_congruent_pad_averages_beta_with_its_conjugate() {
    let f = Files::new();
    let g = f.write("cong.tg", "e 0 1 x\ne 0 1 x\n");
    let out = traffic(&["ltd", "--graph", &g, "--beta", "x=1/2+i"]);
    assert_eq!(out.stdout.lines().next().unwrap(), "1/2 ≈ 0.500000");
    let out = traffic(&["ltd", "--graph", &g, "--beta", "y=1"]);
    assert_eq!(record(&out)["error"], "usage");
}

#[test]
fn haar_anti_directed_pad() {
    let f = Files::new();
    let g = f.write("pad.tg", "e 0 1 o\ne 0 1 o\n");
    let out = traffic(&["ltd", "--graph", &g, "--haar"]);
    assert_eq!(
        out.stdout,
        "1 ≈ 1.000000\northogonal cactus with cycles of length 2\n"
    );
}

#[test]
fn fixed_width_estimate() {
    let f = Files::new();
    let g = f.write("dt.tg", STAR);
    let out = traffic(&[
        "ltd",
        "--graph",
        &g,
        "--regime",
        "x=fixed:1",
        "--grid",
        "10,20",
    ]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let lines: Vec<&str> = out.stdout.lines().collect();
    assert_eq!(lines[1..], ["n,A_n", "10,16", "20,36"]);
}

#[test]
fn markov_second_moment() {
    let out = traffic(&["moments", "--poly", "1*x - 1*row(x) ", "--order", "2"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(out.stdout, "m,exact,approx\n1,0,0.000000\n2,2,2.000000\n");
}

#[test]
fn estimate_csv_is_deterministic_across_threads() {
    let f = Files::new();
    let g = f.write("c2.tg", C2);
    let args = [
        "estimate",
        "--graph",
        &g,
        "--ensemble",
        "wigner",
        "--n",
        "20,40",
        "--samples",
        "30",
        "--seed",
        "7",
    ];
    let one = traffic(&[&args[..], &["--threads", "1"]].concat());
    let four = traffic(&[&args[..], &["--threads", "4"]].concat());
    let env = run(
        std::iter::once("traffic").chain(args.iter().copied()),
        Some("3".into()),
    );
    assert_eq!(one.code, 0, "{}", one.stderr);
    assert_eq!(one.stdout, four.stdout);
    assert_eq!(one.stdout, env.stdout);
    let lines: Vec<&str> = one.stdout.lines().collect();
    assert_eq!(lines[0], CSV_HEADER);
    assert_eq!(lines.len(), 3);
    let row: Vec<&str> = lines[2].split(',').collect();
    assert_eq!(row[..2], ["40", "30"]);
    assert_eq!(row[5], "1");
    let other_seed = traffic(&[
        "estimate",
        "--graph",
        &g,
        "--n",
        "20",
        "--samples",
        "30",
        "--seed",
        "8",
    ]);
    assert_ne!(other_seed.stdout.lines().nth(1), one.stdout.lines().nth(1));
}

#[test]
fn config_file_fills_missing_flags() {
    let f = Files::new();
    let g = f.write("c2.tg", C2);
    let cfg = f.write(
        "run.cfg",
        "# shared\nseed = 7\nsamples = 30\nn = 20\nthreads = 2\n",
    );
    let from_cfg = traffic(&["estimate", "--graph", &g, "--config", &cfg]);
    let from_flags = traffic(&[
        "estimate",
        "--graph",
        &g,
        "--seed",
        "7",
        "--samples",
        "30",
        "--n",
        "20",
    ]);
    assert_eq!(from_cfg.code, 0, "{}", from_cfg.stderr);
    assert_eq!(from_cfg.stdout, from_flags.stdout);
    let overridden = traffic(&[
        "estimate",
        "--graph",
        &g,
        "--config",
        &cfg,
        "--samples",
        "31",
    ]);
    assert!(overridden
        .stdout
        .lines()
        .nth(1)
        .unwrap()
        .starts_with("20,31,"));
    let bad = f.write("bad.cfg", "colour = red\n");
    assert_eq!(
        record(&traffic(&["moments", "--poly", "x", "--config", &bad]))["error"],
        "input"
    );
}

#[test]
fn concentration_reports_a_slope() {
    let f = Files::new();
    let g = f.write("c2.tg", C2);
    let out = traffic(&[
        "concentration",
        "--graph",
        &g,
        "--n",
        "10,20,40",
        "--samples",
        "40",
        "--seed",
        "3",
    ]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(out.stdout.lines().count(), 4);
    assert!(out.stderr.starts_with("slope "), "{}", out.stderr);
    assert!(out.stderr.contains("-m(#L+1) = -1"));
    assert_eq!(
        record(&traffic(&["concentration", "--graph", &g, "--order", "3"]))["error"],
        "usage"
    );
}

#[test]
fn independence_corpus_report() {
    let f = Files::new();
    let corpus = f.write(
        "corpus.tg",
        "e 0 1 x\ne 1 0 x\n---\n# parallel pads\ne 0 1 x\ne 1 0 x\ne 0 1 y\ne 1 0 y\n---\ne 0 1 y\ne 1 0 y\ne 1 2 x\ne 2 1 x\n",
    );
    let wigner = traffic(&["independence", "--corpus", &corpus]);
    assert_eq!(wigner.code, 0, "{}", wigner.stderr);
    let report: Value = serde_json::from_str(&wigner.stdout).unwrap();
    assert_eq!(
        (report["checked"].as_u64(), report["passed"].as_u64()),
        (Some(3), Some(3))
    );
    assert_eq!(report["verdicts"][1]["free_product"], false);
    assert!(report["verdicts"][1]["graph"]
        .as_str()
        .unwrap()
        .contains("e 0 1 y"));

    let banded = traffic(&[
        "independence",
        "--corpus",
        &corpus,
        "--regime",
        "x=proportional:1/2",
        "--regime",
        "y=proportional:1/2",
        "--violations-only",
    ]);
    assert_eq!(banded.code, 2);
    let report: Value = serde_json::from_str(&banded.stdout).unwrap();
    let failing = report["verdicts"].as_array().unwrap();
    assert_eq!(failing.len(), 1);
    assert_eq!(failing[0]["value"]["re"], "28/27");
    assert_eq!(failing[0]["expected"]["re"], "1");
}

#[test]
fn double_tree_audit() {
    let out = traffic(&["independence", "--double-trees", "4", "--labels", "x,y"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let report: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(report["checked"], 1 + 4 + 21 + 170);
    assert_eq!(
        record(&traffic(&["independence", "--double-trees", "9"]))["error"],
        "guard"
    );
}

#[test]
fn freeness_word() {
    let out = traffic(&[
        "independence",
        "--word",
        "x,y,x,y",
        "--n",
        "60",
        "--samples",
        "20",
        "--seed",
        "5",
    ]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["free_prediction"]["re"], "0");
    assert_eq!(v["traffic_prediction"]["re"], "0");
    assert_eq!(v["estimates"][0]["n"], 60);
}

#[test]
fn error_records() {
    let f = Files::new();
    let missing = traffic(&["ltd", "--graph", "/no/such/file.tg"]);
    assert_eq!(record(&missing)["error"], "input");

    let broken = f.write("broken.tg", "e 0 1 x\nq 1 2\n");
    let rec = record(&traffic(&["ltd", "--graph", &broken]));
    assert_eq!(rec["error"], "input");
    assert!(rec["message"].as_str().unwrap().starts_with("2:"));

    let g = f.write("c2.tg", C2);
    assert_eq!(
        record(&traffic(&["ltd", "--graph", &g, "--regime", "x=wide"]))["error"],
        "usage"
    );
    assert_eq!(
        record(&traffic(&[
            "ltd",
            "--graph",
            &g,
            "--regime",
            "x=proportional:3/2"
        ]))["error"],
        "domain"
    );

    let path: String = (0..11)
        .map(|v| format!("e {v} {w} x\ne {v} {w} x\n", w = v + 1))
        .collect();
    let long = f.write("long.tg", &path);
    assert_eq!(
        record(&traffic(&["ltd", "--graph", &long, "--beta", "x=i"]))["error"],
        "guard"
    );
    assert_eq!(
        record(&traffic(&["moments", "--poly", "x", "--order", "40"]))["error"],
        "guard"
    );
    assert_eq!(
        record(&traffic(&["moments", "--poly", "x +"]))["error"],
        "input"
    );

    let usage = traffic(&["estimate"]);
    assert_eq!(usage.code, 64);
    assert_eq!(record(&usage)["error"], "usage");
}

#[test]
fn binary_exit_status() {
    let bin = env!("CARGO_BIN_EXE_traffic");
    let ok = Command::new(bin)
        .args(["moments", "--poly", "x", "--order", "2"])
        .output()
        .unwrap();
    assert!(ok.status.success());
    assert_eq!(
        String::from_utf8(ok.stdout).unwrap(),
        "m,exact,approx\n1,0,0.000000\n2,1,1.000000\n"
    );
    let bad = Command::new(bin)
        .args(["ltd", "--graph", "/no/such/file.tg"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(1));
    let rec: Value = serde_json::from_slice(&bad.stderr).unwrap();
    assert_eq!(rec["error"], "input");
    let threads = Command::new(bin)
        .args(["selftest"])
        .env("TRAFFIC_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(threads.status.code(), Some(1));
}
