use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn scratch(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("dioexp-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    fs::write(&path, body).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dioexp")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn value<'a>(report: &'a str, key: &str) -> &'a str {
    report
        .lines()
        .find_map(|l| l.strip_prefix(key).and_then(|r| r.strip_prefix(" = ")))
        .unwrap_or_else(|| panic!("no key {key} in\n{report}"))
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn estimate_golden_ratio() {
    let m = scratch("golden.mat", "1 phi\n");
    let o = run(&["estimate", "--matrix", path(&m), "--max-norm", "100000", "--method", "exhaustive"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let beta: f64 = value(&out, "beta_hat").parse().unwrap();
    assert!((beta - 1.0).abs() < 0.1, "{beta}");
    assert_eq!(value(&out, "exit_code"), "0");
}

#[test]
fn estimate_rational_kernel_is_infinite() {
    let m = scratch("rk.mat", "1 1/2\n");
    let o = run(&["estimate", "--matrix", path(&m), "--max-norm", "1000"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(value(&stdout(&o), "beta_hat"), "+inf");
}

#[test]
fn malformed_matrix_exits_two() {
    let m = scratch("bad.mat", "1 x\n");
    let o = run(&["estimate", "--matrix", path(&m), "--max-norm", "100"]);
    assert_eq!(o.status.code(), Some(2));
    let missing = run(&["estimate", "--matrix", "/nonexistent/file.mat", "--max-norm", "100"]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn pencil_generic_and_constructed() {
    let generic = scratch("gen.fam", "1 1\n1 0\n\n0 1\n\n1 1\n");
    let o = run(&["pencil", "--family", path(&generic), "--height", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!((value(&out, "lower"), value(&out, "upper")), ("1", "1"));

    let constructed =
        scratch("pen.fam", "2 2\n1 0 1 1\n0 1 1 1\n\n1 0 2 3\n0 1 2 3\n\n1 0 5 -1\n0 1 5 -1\n");
    let out = stdout(&run(&["pencil", "--family", path(&constructed), "--height", "1"]));
    assert_eq!(value(&out, "lower"), "2");
    assert_eq!(value(&out, "witness_r"), "1");
    assert_ne!(value(&out, "witness_W_basis"), "none");
}

#[test]
fn pencil_height_zero_and_budget() {
    let f = scratch("pen2.fam", "2 2\n1 0 1 1\n0 1 1 1\n\n1 0 2 3\n0 1 2 3\n");
    assert_eq!(run(&["pencil", "--family", path(&f), "--height", "0"]).status.code(), Some(2));
    let o = run(&["pencil", "--family", path(&f), "--height", "100000"]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(value(&stdout(&o), "exit_code"), "3");
}

#[test]
fn nilpotent_closed_and_calibrated() {
    let out = stdout(&run(&["nilpotent", "--group", "heisenberg:3", "--k", "3"]));
    assert_eq!(value(&out, "beta_closed"), "4/9");

    let o = run(&["nilpotent", "--group", "ut:4", "--k", "3", "--via-pencils"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(value(&out, "beta_via_pencils"), "7/11");
    assert_eq!(value(&out, "calibration"), "match");
}

#[test]
fn nilpotent_threshold_message() {
    let o = run(&["nilpotent", "--group", "heisenberg:3", "--k", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("k >= 2m"));
    assert_eq!(run(&["nilpotent", "--group", "nonsense", "--k", "3"]).status.code(), Some(2));
}

#[test]
fn flow_on_rational_kernel_decays() {
    let m = scratch("rk-flow.mat", "1 1/2\n");
    let csv = std::env::temp_dir().join(format!("dioexp-cli-{}/trace.csv", std::process::id()));
    let o = run(&["flow", "--matrix", path(&m), "--t-max", "8", "--csv", path(&csv)]);
    assert_eq!(o.status.code(), Some(0));
    let trace = fs::read_to_string(&csv).unwrap();
    let mut lines = trace.lines();
    assert!(lines.next().unwrap().starts_with("t,log_systole"));
    let rows: Vec<(f64, f64, String)> = lines
        .map(|l| {
            let f: Vec<&str> = l.split(',').collect();
            (f[0].parse().unwrap(), f[1].parse().unwrap(), f[2].to_string())
        })
        .collect();
    // Once the kernel vector is shortest it stays shortest and contracts at rate 1.
    let tail: Vec<_> = rows.iter().filter(|r| r.0 >= 1.0).collect();
    assert!(tail.len() >= 3);
    for w in tail.windows(2) {
        assert_eq!(w[0].2, "1 -2");
        let slope = (w[1].1 - w[0].1) / (w[1].0 - w[0].0);
        assert!((slope + 1.0).abs() < 1e-9, "{slope}");
    }
    assert_eq!(value(&stdout(&o), "final_witness"), "[1 -2]");
}

#[test]
fn check_submodular_builtins() {
    let o = run(&["check-submodular", "--builtin", "cyclic"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("invariant minimizer found"));
    assert_eq!(run(&["check-submodular", "--builtin", "planted"]).status.code(), Some(2));
}

#[test]
fn ball_heisenberg_is_diophantine() {
    let o = run(&["ball", "--heisenberg", "--n-max", "12", "--beta", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(value(&stdout(&o), "diophantine"), "true");
}

#[test]
fn reports_are_deterministic_and_echo_config() {
    let out_a = std::env::temp_dir().join(format!("dioexp-cli-{}/a.txt", std::process::id()));
    let out_b = std::env::temp_dir().join(format!("dioexp-cli-{}/b.txt", std::process::id()));
    for out in [&out_a, &out_b] {
        let o = run(&["--seed", "7", "--out", path(out), "nilpotent", "--group", "free:2:3", "--k", "2", "--via-pencils"]);
        assert_eq!(o.status.code(), Some(0));
    }
    let (a, b) = (fs::read(&out_a).unwrap(), fs::read(&out_b).unwrap());
    assert_eq!(a, b);
    let text = String::from_utf8(a).unwrap();
    assert_eq!(value(&text, "config.seed"), "7");
    assert_eq!(value(&text, "config.precision_bits"), "128");
    assert!(!value(&text, "version").is_empty());
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["estimate"]).status.code(), Some(2));
    assert_eq!(run(&["--precision-bits", "8", "ball", "--heisenberg"]).status.code(), Some(2));
}
