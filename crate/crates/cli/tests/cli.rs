use std::process::{Command, Output};

const UNIT_AREA_RADIUS: &str = "0.5641895835477563";

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_maglap"))
        .args(args)
        .env_remove("MAGLAP_MAX_DIGITS")
        .output()
        .expect("spawn maglap")
}

fn csv_rows(out: &Output) -> Vec<Vec<String>> {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let mut r = csv::Reader::from_reader(out.stdout.as_slice());
    r.records()
        .map(|rec| rec.unwrap().iter().map(str::to_string).collect())
        .collect()
}

fn num(s: &str) -> f64 {
    s.parse().unwrap()
}

#[test]
fn branch_crossing_row() {
    let out = run(&[
        "branch",
        "--m",
        "1",
        "--l",
        "0",
        "--radius",
        "1",
        "--b-min",
        "2",
        "--b-max",
        "2",
        "--b-steps",
        "1",
    ]);
    let rows = csv_rows(&out);
    assert_eq!(rows.len(), 1);
    assert!((num(&rows[0][4]) - 6.0).abs() < 1e-9);
    let header = String::from_utf8_lossy(&out.stdout)
        .lines()
        .next()
        .unwrap()
        .to_string();
    assert_eq!(header, "m,l,B,R,lambda,lambda_over_B");
}

#[test]
fn branch_strong_field_ratio() {
    let out = run(&[
        "branch",
        "--m",
        "2",
        "--l",
        "1",
        "--radius",
        "1",
        "--b-min",
        "30",
        "--b-max",
        "30",
        "--b-steps",
        "1",
    ]);
    let q = num(&csv_rows(&out)[0][5]);
    assert!(q > 5.0 && q < 5.1, "{q}");
}

#[test]
fn invalid_arguments_exit_2() {
    let out = run(&[
        "branch", "--m", "1", "--l", "0", "--radius", "1", "--b-min", "-1", "--b-max", "2",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(
        run(&["spectrum", "--field", "0", "--count", "3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["branch", "--m", "1"]).status.code(), Some(2));
    assert_eq!(
        run(&["asympt", "--m", "1", "--l", "0", "--z-list", "0.5"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn spectrum_critical_row() {
    let rows = csv_rows(&run(&[
        "spectrum",
        "--radius",
        UNIT_AREA_RADIUS,
        "--field",
        "110.335",
        "--count",
        "11",
    ]));
    assert_eq!(rows.len(), 11);
    let ratio = num(&rows[10][5]);
    assert!((ratio - 1.0).abs() < 5e-4, "{ratio}");
}

#[test]
fn spectrum_below_field_is_empty() {
    let out = run(&[
        "spectrum",
        "--radius",
        "1",
        "--field",
        "10",
        "--threshold",
        "9",
    ]);
    assert!(csv_rows(&out).is_empty());
    assert_eq!(
        String::from_utf8_lossy(&out.stdout),
        "n,disk_index,m,l,lambda,polya_ratio\n"
    );
}

#[test]
fn spectrum_duplicated_disks() {
    let rows = csv_rows(&run(&[
        "spectrum", "--radius", "1", "--radius", "1", "--field", "5", "--count", "4",
    ]));
    assert_eq!(rows.len(), 4);
    assert_eq!(rows[0][4], rows[1][4]);
    assert_eq!(rows[2][4], rows[3][4]);
    assert_eq!((rows[0][1].as_str(), rows[1][1].as_str()), ("0", "1"));
}

#[test]
fn polya_critical_and_scan() {
    let rows = csv_rows(&run(&[
        "polya",
        "critical",
        "--radius",
        UNIT_AREA_RADIUS,
        "--bracket",
        "50",
        "200",
    ]));
    assert!((num(&rows[0][0]) - 110.335).abs() <= 0.01);
    assert_eq!(rows[0][1], "11");
    let rows = csv_rows(&run(&["polya", "scan", "--b-grid", "50,200"]));
    assert!(num(&rows[0][1]) > 1.0);
    assert!(num(&rows[1][1]) < 1.0);
}

#[test]
fn polya_bad_bracket_exit_4() {
    let out = run(&["polya", "critical", "--bracket", "150", "200"]);
    assert_eq!(
        out.status.code(),
        Some(4),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
}

#[test]
fn riesz_counting_ratio_bounded() {
    let rows = csv_rows(&run(&[
        "riesz",
        "--gamma",
        "0",
        "--field",
        "200",
        "--lambda-max",
        "1200",
    ]));
    assert!(!rows.is_empty());
    for r in &rows {
        assert!(num(&r[2]) <= 2.0);
        assert_eq!(num(&r[3]), 2.0);
    }
}

#[test]
fn asympt_deviation_shrinks() {
    let rows = csv_rows(&run(&[
        "asympt", "--m", "1", "--l", "0", "--z-list", "15,30",
    ]));
    let d15 = (num(&rows[0][3]) - 1.0).abs();
    let d30 = (num(&rows[1][3]) - 1.0).abs();
    assert!(d30 < d15);
}

#[test]
fn oracle_check_single_config() {
    let rows = csv_rows(&run(&[
        "oracle-check",
        "--l",
        "-2",
        "--field",
        "10",
        "--radius",
        "1",
    ]));
    assert_eq!(rows.len(), 2);
    for r in &rows {
        assert!(num(&r[6]) <= 1e-4);
    }
}

#[test]
fn json_output_and_sidecar_manifest() {
    let dir = tempfile::tempdir().unwrap();
    let csv_path = dir.path().join("b.csv");
    let args = [
        "branch",
        "--m",
        "1",
        "--l",
        "-1",
        "--b-min",
        "1",
        "--b-max",
        "5",
        "--b-steps",
        "5",
        "--out",
    ];
    let out = run(&[&args[..], &[csv_path.to_str().unwrap()]].concat());
    assert!(out.status.success());
    let manifest: serde_json::Value =
        serde_json::from_slice(&std::fs::read(dir.path().join("b.csv.manifest.json")).unwrap())
            .unwrap();
    assert_eq!(manifest["command"], "branch");
    assert_eq!(manifest["parameters"]["l"], "-1");
    assert!(manifest["timestamp"].as_str().unwrap().contains('T'));

    let first = std::fs::read(&csv_path).unwrap();
    let again = run(&[&args[..], &[csv_path.to_str().unwrap()]].concat());
    assert!(again.status.success());
    assert_eq!(
        first,
        std::fs::read(&csv_path).unwrap(),
        "numeric payload must be reproducible"
    );

    let json = run(&[
        "branch",
        "--m",
        "1",
        "--l",
        "-1",
        "--b-min",
        "1",
        "--b-max",
        "5",
        "--b-steps",
        "5",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&json.stdout).unwrap();
    assert_eq!(v["manifest"]["command"], "branch");
    assert_eq!(v["rows"].as_array().unwrap().len(), 5);
    assert_eq!(v["columns"][4], "lambda");
}

#[test]
fn max_digits_environment_is_honoured() {
    let out = Command::new(env!("CARGO_BIN_EXE_maglap"))
        .args([
            "branch",
            "--m",
            "1",
            "--l",
            "0",
            "--b-min",
            "2",
            "--b-max",
            "2",
            "--b-steps",
            "1",
        ])
        .env("MAGLAP_MAX_DIGITS", "not-a-number")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
