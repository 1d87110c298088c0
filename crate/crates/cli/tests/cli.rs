use std::process::{Command, Output};

use boole_core::{BooleTable, LaurentPoly, Rat, VerifyReport};

fn boole(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_boole")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn verify_all_passes_every_family() {
    let out = boole(&["verify", "--all", "--N-max", "6"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let text = stdout(&out);
    assert!(text.contains("8/8 identity families passed"), "{text}");
    assert_eq!(text.lines().filter(|l| l.contains(" PASS ")).count(), 8);
}

#[test]
fn boole_numbers_as_csv() {
    let out = boole(&["numbers", "--family", "boole", "--n-max", "3", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(&rows[..3], ["0,1/2", "1,-1/4*l", "2,1/4*l"]);
}

#[test]
fn triangle_rows_as_json() {
    let out = boole(&["triangle", "--N-max", "2", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["rows"][2], serde_json::json!(["1+l", "-1-3*l", "2*l"]));
    assert_eq!(v["rows"][0], serde_json::json!(["l^-1"]));
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["numbers", "--x", "1/0"][..],
        &["numbers", "--lambda", "0"],
        &["verify", "--N-max", "8", "--order", "9"],
        &["verify", "--k-max", "0"],
        &["series", "--r", "0"],
        &["all", "--format", "csv"],
        &["frobnicate"],
    ] {
        let out = boole(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn bad_thread_count_is_a_usage_error() {
    let out = Command::new(env!("CARGO_BIN_EXE_boole"))
        .args(["numbers", "--n-max", "2"])
        .env("BOOLE_KERNEL_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(env!("CARGO_BIN_EXE_boole"))
        .args(["verify", "--N-max", "3", "--n-max", "5"])
        .env("BOOLE_KERNEL_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn json_tables_roundtrip() {
    let out = boole(&["numbers", "--n-max", "8", "--r", "2", "--format", "json"]);
    let text = stdout(&out);
    let table: BooleTable = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string_pretty(&table).unwrap() + "\n", text);

    let out = boole(&["verify", "--N-max", "3", "--format", "json", "--lambda=-2/3"]);
    let reports: Vec<VerifyReport> = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(reports.len(), 8);
    assert!(reports.iter().all(|r| r.passed));
}

fn csv_values(args: &[&str]) -> Vec<String> {
    let out = boole(args);
    assert!(out.status.success(), "{args:?}");
    stdout(&out).lines().map(|l| l.rsplit(',').next().unwrap().to_string()).collect()
}

#[test]
fn pinned_lambda_matches_symbolic_evaluation() {
    for q in ["1", "-1/2", "3/7"] {
        let qr: Rat = q.parse().unwrap();
        for extra in [&["--family", "boole"][..], &["--family", "boole", "--r", "3"], &["--family", "boole-poly", "--x", "2/5"]] {
            let mut sym = vec!["numbers", "--n-max", "7", "--format", "csv"];
            sym.extend_from_slice(extra);
            let mut fixed = sym.clone();
            let lam = format!("--lambda={q}");
            fixed.push(&lam);
            let expected: Vec<String> = csv_values(&sym)
                .iter()
                .map(|s| s.parse::<LaurentPoly>().unwrap().eval(&qr).unwrap().to_string())
                .collect();
            assert_eq!(csv_values(&fixed), expected, "λ={q} {extra:?}");
        }
        let sym = csv_values(&["triangle", "--N-max", "5", "--format", "csv"]);
        let fixed = csv_values(&["triangle", "--N-max", "5", "--format", "csv", &format!("--lambda={q}")]);
        let expected: Vec<String> =
            sym.iter().map(|s| s.parse::<LaurentPoly>().unwrap().eval(&qr).unwrap().to_string()).collect();
        assert_eq!(fixed, expected, "triangle λ={q}");
        let sym = csv_values(&["series", "--order", "9", "--r", "2", "--derivative", "1", "--format", "csv"]);
        let fixed = csv_values(&["series", "--order", "9", "--r", "2", "--derivative", "1", "--format", "csv", &format!("--lambda={q}")]);
        let expected: Vec<String> =
            sym.iter().map(|s| s.parse::<LaurentPoly>().unwrap().eval(&qr).unwrap().to_string()).collect();
        assert_eq!(fixed, expected, "series λ={q}");
    }
}

#[test]
fn out_flag_writes_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("stirling.csv");
    let out = boole(&["numbers", "--family", "stirling2", "--n-max", "4", "--format", "csv", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.lines().any(|l| l == "4,2,7"), "{text}");
}

#[test]
fn all_emits_table_triangle_and_reports() {
    let out = boole(&["all", "--N-max", "3", "--n-max", "5", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["boole"]["values"][0], serde_json::json!({"min_exp": 0, "coeffs": ["1/2"]}));
    assert_eq!(v["triangle"]["rows"][2][1], "-1-3*l");
    assert_eq!(v["reports"].as_array().unwrap().len(), 8);
}
