use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_phi-stieltjes"))
        .args(args)
        .env_remove("PHI_STIELTJES_OUT_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

/// Column `name` of a CSV table as numbers.
fn column(csv: &str, name: &str) -> Vec<f64> {
    let mut lines = csv.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    let j = header.iter().position(|h| *h == name).unwrap();
    lines
        .map(|l| l.split(',').nth(j).unwrap().parse().unwrap())
        .collect()
}

#[test]
fn eval_direct_at_one() {
    let o = run(&["eval", "--x", "1", "--method", "direct"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert_eq!(s.lines().next().unwrap(), "x,phi,log_phi");
    assert_eq!(column(&s, "phi"), vec![2.0]);
}

#[test]
fn eval_all_methods_agree() {
    let o = run(&["eval", "--x", "0.5,1,5", "--method", "all"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    for col in ["residual_series", "residual_stieltjes"] {
        assert!(column(&s, col).iter().all(|r| *r <= 1e-8), "{col}: {s}");
    }
}

#[test]
fn eval_rejects_bad_points() {
    let o = run(&["eval", "--x", "-1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
    assert!(!o.stderr.is_empty());
    assert_eq!(run(&["eval"]).status.code(), Some(2));
    assert_eq!(
        run(&[
            "eval",
            "--x",
            "1",
            "--method",
            "stieltjes",
            "--tol",
            "1e-15"
        ])
        .status
        .code(),
        Some(2)
    );
}

#[test]
fn eval_rows_are_sorted() {
    let s = stdout(&run(&["eval", "--x", "3,1,2,1"]));
    assert_eq!(column(&s, "x"), vec![1.0, 2.0, 3.0]);
}

#[test]
fn density_examples() {
    let s = stdout(&run(&[
        "density", "--which", "h", "--from", "0", "--to", "0",
    ]));
    let v = column(&s, "value");
    assert_eq!(v.len(), 1);
    assert!((v[0] - 0.561_459_483_566_885_2).abs() < 1e-15);

    let s = stdout(&run(&[
        "density", "--which", "phi", "--from", "2", "--to", "3", "--step", "0.5",
    ]));
    assert_eq!(column(&s, "s"), vec![2.0, 2.5, 3.0]);
    let v = column(&s, "value");
    assert_eq!(v[0], 0.0);
    assert!((v[1] - 0.2).abs() < 1e-16);
    assert_eq!(v[2], 0.0);

    let s = stdout(&run(&[
        "density", "--which", "h", "--from", "1", "--to", "1",
    ]));
    assert_eq!(
        s,
        "s,value,log_value\n1.0000000000000000e0,0.0000000000000000e0,-inf\n"
    );
}

#[test]
fn density_includes_integers() {
    let s = stdout(&run(&[
        "density", "--which", "phi", "--from", "0.3", "--to", "2.5", "--step", "0.7",
    ]));
    let points = column(&s, "s");
    assert!(points.contains(&1.0) && points.contains(&2.0));
    assert!(points.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn density_rejects_negative_range() {
    assert_eq!(
        run(&["density", "--which", "h", "--from", "-1", "--to", "1"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn verify_identity() {
    let o = run(&[
        "verify", "--suite", "identity", "--xmax", "20", "--format", "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["passed"], true);
    assert!(v["checks"][0]["metric"].as_f64().unwrap() <= 1e-10);
}

#[test]
fn verify_pick_is_reproducible() {
    let args = [
        "verify", "--suite", "pick", "--count", "10000", "--seed", "7", "--format", "json",
    ];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let c = run(&[
        "verify", "--suite", "pick", "--count", "10000", "--seed", "8", "--format", "json",
    ]);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn verify_order_cap() {
    assert_eq!(
        run(&["verify", "--suite", "cm", "--order", "9"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn verify_lcm_and_corpus() {
    let o = run(&["verify", "--suite", "lcm"]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["verify", "--suite", "corpus", "--count", "1000"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 7);
}

#[test]
fn invert_examples() {
    let o = run(&["invert", "--x", "0.5"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    let want = 2.0 / std::f64::consts::PI.powi(2);
    assert!((column(&s, "extrapolated")[0] - want).abs() <= 1e-4);
    assert!(column(&s, "abs_diff")[0] <= 1e-4);

    let s = stdout(&run(&["invert", "--x", "1,2,3"]));
    assert_eq!(column(&s, "closed_form_h"), vec![0.0, 0.0, 0.0]);
    assert!(column(&s, "extrapolated").iter().all(|v| v.abs() < 1e-4));
}

#[test]
fn invert_strict_flags_the_atom() {
    assert_eq!(run(&["invert", "--x", "0"]).status.code(), Some(0));
    assert_eq!(
        run(&["invert", "--x", "0", "--strict"]).status.code(),
        Some(1)
    );
}

#[test]
fn output_file_and_directory_override() {
    let dir = tempfile::tempdir().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_phi-stieltjes"))
        .args(["eval", "--x", "2", "--out", "phi.csv"])
        .env("PHI_STIELTJES_OUT_DIR", dir.path())
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let written = std::fs::read_to_string(dir.path().join("phi.csv")).unwrap();
    assert_eq!(written, stdout(&run(&["eval", "--x", "2"])));
    assert!(!written.contains('\r'));
}

#[test]
fn json_tables_carry_schema_version() {
    let o = run(&["eval", "--x", "1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["rows"][0]["phi"], 2.0);
}
