//! End-to-end tests of the command-line interface: subcommand output,
//! exit codes, file handling, and stdout determinism.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_fptcolor"))
}

fn run(args: &[&str], dir: &Path) -> Output {
    bin()
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

struct TempDir(PathBuf);

impl TempDir {
    fn new(tag: &str) -> Self {
        let dir = std::env::temp_dir().join(format!("fptcolor-cli-{tag}-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        TempDir(dir)
    }

    fn path(&self) -> &Path {
        &self.0
    }

    fn write(&self, name: &str, content: &str) -> PathBuf {
        let p = self.0.join(name);
        std::fs::write(&p, content).unwrap();
        p
    }
}

impl Drop for TempDir {
    fn drop(&mut self) {
        let _ = std::fs::remove_dir_all(&self.0);
    }
}

const P4: &str = "p edge 4 3\ne 1 2\ne 2 3\ne 3 4\n";
const FIG: &str = "p edge 7 12\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\ne 5 1\ne 6 1\ne 6 2\ne 7 1\ne 7 2\ne 7 3\n";

#[test]
fn recognize_accepts_and_rejects() {
    let dir = TempDir::new("recognize");
    dir.write("fig.col", FIG);
    let out = run(&["recognize", "--graph", "fig.col"], dir.path());
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("ACCEPT\nconstruction:"), "{text}");

    dir.write("p4.col", P4);
    let out = run(&["recognize", "--graph", "p4.col"], dir.path());
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("REJECT witness: P4 1 2 3 4"), "{text}");
}

#[test]
fn solve_list_trivial_yes() {
    let dir = TempDir::new("list");
    dir.write("k1.col", "p edge 1 0\n");
    dir.write("l.txt", "1: 1\n");
    let out = run(
        &["solve-list", "--graph", "k1.col", "--lists", "l.txt", "--k", "1"],
        dir.path(),
    );
    assert!(out.status.success());
    assert_eq!(stdout(&out), "STATUS YES\n1 1\n");
}

#[test]
fn solve_equitable_kernel_shortcut() {
    let dir = TempDir::new("kernel");
    // star on 10 vertices; removing leaf 2 keeps the universal center, so
    // the size rule applies: n=10 > r(k+2)=6
    let mut star = String::from("p edge 10 9\n");
    for v in 2..=10 {
        star.push_str(&format!("e 1 {v}\n"));
    }
    dir.write("big.col", &star);
    dir.write("m.txt", "2\n");
    let out = run(
        &[
            "solve-equitable",
            "--graph",
            "big.col",
            "--r",
            "2",
            "--modulator",
            "m.txt",
        ],
        dir.path(),
    );
    assert!(out.status.success());
    assert_eq!(stdout(&out), "STATUS NO (kernel)\n");
}

#[test]
fn solve_equitable_threshold_path_and_fpt_path() {
    let dir = TempDir::new("equitable");
    dir.write("fig.col", FIG);
    let out = run(
        &["solve-equitable", "--graph", "fig.col", "--r", "4"],
        dir.path(),
    );
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("STATUS YES\n"));

    let out = run(
        &["solve-equitable", "--graph", "fig.col", "--r", "3"],
        dir.path(),
    );
    assert!(out.status.success());
    assert_eq!(stdout(&out), "STATUS NO\n");

    // C4 needs a modulator; auto requires a budget
    dir.write("c4.col", "p edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n");
    let out = run(
        &[
            "solve-equitable",
            "--graph",
            "c4.col",
            "--r",
            "2",
            "--modulator",
            "auto",
            "--k",
            "1",
        ],
        dir.path(),
    );
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout(&out).starts_with("STATUS YES\n"));
}

#[test]
fn solve_pre_auto_modulator() {
    let dir = TempDir::new("pre");
    // K4 minus an edge: distance 1 to clique
    dir.write(
        "g.col",
        "p edge 4 5\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\n",
    );
    dir.write("pre.txt", "1 1\n");
    let out = run(
        &[
            "solve-pre",
            "--graph",
            "g.col",
            "--modulator",
            "auto",
            "--k",
            "1",
            "--precolor",
            "pre.txt",
            "--r",
            "3",
        ],
        dir.path(),
    );
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = stdout(&out);
    assert!(text.starts_with("STATUS YES\n1 1\n"), "{text}");
}

#[test]
fn reduce_writes_instance_files_that_solve() {
    let dir = TempDir::new("reduce");
    dir.write("p3.col", "p edge 3 2\ne 1 2\ne 2 3\n");
    let out = run(
        &["reduce", "--graph", "p3.col", "--k", "2", "--out-prefix", "red"],
        dir.path(),
    );
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("WROTE "));
    // P3 has an independent set of size 2, so the reduced instance is a YES
    let out = run(
        &[
            "solve-list",
            "--graph",
            "red.col",
            "--lists",
            "red.lists",
            "--k",
            "3",
        ],
        dir.path(),
    );
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("STATUS YES\n"));
}

#[test]
fn gen_round_trip_feeds_solvers() {
    let dir = TempDir::new("gen");
    let out = run(
        &[
            "gen",
            "threshold",
            "--n",
            "9",
            "--seed",
            "5",
            "--connected",
            "-o",
            "t.col",
        ],
        dir.path(),
    );
    assert!(out.status.success());
    let out = run(
        &[
            "gen",
            "perturbed",
            "--base",
            "t.col",
            "--d",
            "2",
            "--prob",
            "0.5",
            "--seed",
            "3",
            "-o",
            "p.col",
            "--modulator-out",
            "m.txt",
        ],
        dir.path(),
    );
    assert!(out.status.success());
    let out = run(
        &[
            "solve-equitable",
            "--graph",
            "p.col",
            "--r",
            "11",
            "--modulator",
            "m.txt",
        ],
        dir.path(),
    );
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("STATUS YES\n"));
}

#[test]
fn modulator_subcommand_output() {
    let dir = TempDir::new("modulator");
    dir.write("p4.col", P4);
    let out = run(
        &["modulator", "--graph", "p4.col", "--class", "threshold", "--k", "1"],
        dir.path(),
    );
    assert!(out.status.success());
    let text = stdout(&out);
    // exactly one vertex line, reusable as a modulator file
    assert_eq!(text.lines().count(), 1);
    let v: usize = text.trim().parse().unwrap();
    assert!((1..=4).contains(&v));

    dir.write("twok2.col", "p edge 4 2\ne 1 2\ne 3 4\n");
    let out = run(
        &["modulator", "--graph", "twok2.col", "--class", "clique", "--k", "1"],
        dir.path(),
    );
    assert!(out.status.success());
    assert_eq!(stdout(&out), "NONE\n");
}

#[test]
fn gen_explicit_sequence() {
    let dir = TempDir::new("genseq");
    let out = run(
        &["gen", "threshold", "--seq", "IIUIUIU", "-o", "fig.col"],
        dir.path(),
    );
    assert!(out.status.success());
    let out = run(&["recognize", "--graph", "fig.col"], dir.path());
    assert!(stdout(&out).starts_with("ACCEPT"));
    let body = std::fs::read_to_string(dir.path().join("fig.col")).unwrap();
    assert!(body.starts_with("p edge 7 12\n"));
}

#[test]
fn bench_empty_config_emits_empty_stream() {
    let dir = TempDir::new("benchempty");
    let out = run(&["bench", "--family", "threshold"], dir.path());
    assert!(out.status.success());
    assert_eq!(stdout(&out), "");
}

#[test]
fn oracle_subcommands_run() {
    let dir = TempDir::new("oracle");
    dir.write("k3.col", "p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
    let out = run(
        &["oracle", "equitable", "--graph", "k3.col", "--r", "3"],
        dir.path(),
    );
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("STATUS YES\n"));

    let out = run(
        &["oracle", "independent-set", "--graph", "k3.col", "--k", "2"],
        dir.path(),
    );
    assert!(out.status.success());
    assert_eq!(stdout(&out), "STATUS NO\n");
}

#[test]
fn exit_codes() {
    let dir = TempDir::new("codes");
    // usage error: unknown flag
    let out = run(&["recognize", "--nope", "x"], dir.path());
    assert_eq!(out.status.code(), Some(1));
    // usage error: auto without budget
    dir.write("k2.col", "p edge 2 1\ne 1 2\n");
    dir.write("pre.txt", "1 1\n");
    let out = run(
        &[
            "solve-pre",
            "--graph",
            "k2.col",
            "--modulator",
            "auto",
            "--precolor",
            "pre.txt",
            "--r",
            "2",
        ],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(1));
    // input error: missing file
    let out = run(&["recognize", "--graph", "missing.col"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    // input error: malformed DIMACS
    dir.write("bad.col", "p edge 2 1\ne 1 5\n");
    let out = run(&["recognize", "--graph", "bad.col"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    // decided NO still exits 0
    dir.write("k3.col", "p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
    dir.write("empty.txt", "");
    let out = run(
        &[
            "solve-pre",
            "--graph",
            "k3.col",
            "--modulator",
            "empty.txt",
            "--precolor",
            "empty.txt",
            "--r",
            "2",
        ],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "STATUS NO\n");
}

#[test]
fn identical_invocations_give_identical_stdout() {
    let dir = TempDir::new("determinism");
    dir.write("fig.col", FIG);
    let args = ["solve-equitable", "--graph", "fig.col", "--r", "5"];
    let a = stdout(&run(&args, dir.path()));
    let b = stdout(&run(&args, dir.path()));
    assert_eq!(a, b);
    assert!(a.starts_with("STATUS YES\n"));

    // bench reports are stable apart from wall-clock fields
    let bench_args = [
        "bench",
        "--family",
        "equitable",
        "--n",
        "12,16",
        "--k",
        "2",
        "--seeds",
        "1,2",
        "--out-dir",
        "bench-out",
    ];
    let a = stdout(&run(&bench_args, dir.path()));
    let b = stdout(&run(&bench_args, dir.path()));
    let strip = |s: &str| -> Vec<String> {
        s.lines()
            .map(|line| {
                let v: serde_json::Value = serde_json::from_str(line).unwrap();
                let mut v = v;
                v.as_object_mut().unwrap().remove("wall_ms");
                v.to_string()
            })
            .collect()
    };
    assert_eq!(strip(&a), strip(&b));
    assert_eq!(a.lines().count(), 4);
}

#[test]
fn bench_reports_are_valid_json_and_solutions_verify() {
    let dir = TempDir::new("bench");
    let out = run(
        &[
            "bench",
            "--family",
            "threshold",
            "--n",
            "20,40",
            "--seeds",
            "7",
            "--r-mode",
            "n",
            "--out-dir",
            "runs",
        ],
        dir.path(),
    );
    assert!(out.status.success());
    for line in stdout(&out).lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["family"], "threshold");
        assert_eq!(v["status"], "YES");
        let path = v["solution_path"].as_str().unwrap();
        let body = std::fs::read_to_string(dir.path().join(path)).unwrap();
        assert!(body.starts_with("STATUS YES\n"));
    }
}
