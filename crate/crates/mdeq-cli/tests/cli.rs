//! End-to-end tests of the binary: exit-code contract, JSON report shapes,
//! file outputs, and determinism of exact-mode reports.

use std::process::Command;

fn mdeq(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_mdeq"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

fn json(stdout: &str) -> serde_json::Value {
    serde_json::from_str(stdout).expect("stdout is a JSON report")
}

#[test]
fn eisenstein_series_report() {
    let (code, stdout, _) = mdeq(&["eisenstein", "--k", "6", "--order", "1"]);
    assert_eq!(code, 0);
    let v = json(&stdout);
    assert_eq!(v["series"]["denom"], 1);
    assert_eq!(v["series"]["coeffs"][0], "1");
    assert_eq!(v["series"]["coeffs"][1], "-504");

    let (code, _, stderr) = mdeq(&["eisenstein", "--k", "8"]);
    assert_eq!(code, 10);
    assert!(stderr.contains("unsupported"));
}

#[test]
fn apparent_cusp_verdicts() {
    // apparent family: exit 0
    let (code, stdout, _) = mdeq(&["apparent-cusp", "--q3", "23/36,-8/9,-3/4"]);
    assert_eq!(code, 0);
    let v = json(&stdout);
    assert_eq!(v["kappa_inf"], "1/2");
    assert_eq!(v["obstruction"], "0");
    assert_eq!(v["apparent"], true);

    // non-apparent: exit 1 with the exact obstruction value
    let (code, stdout, _) = mdeq(&["apparent-cusp", "--e4", "-1"]);
    assert_eq!(code, 1);
    let v = json(&stdout);
    assert_eq!(v["obstruction"], "60");

    // fractional exponent difference: apparent automatically
    let (code, stdout, _) = mdeq(&["apparent-cusp", "--e4", "-1/4"]);
    assert_eq!(code, 0);
    let v = json(&stdout);
    assert_eq!(v["kappa_inf"], "1/4");
    assert!(v["obstruction"].is_null());

    // rejected potential (oscillatory exponents): indeterminate
    let (code, stdout, _) = mdeq(&["apparent-cusp", "--e4", "1"]);
    assert_eq!(code, 2);
    assert!(json(&stdout)["rejected"].is_string());

    // malformed rational: usage error
    let (code, _, _) = mdeq(&["apparent-cusp", "--e4", "x/y"]);
    assert_eq!(code, 10);
}

#[test]
fn apparent_cusp_from_series_file() {
    let dir = std::env::temp_dir().join("mdeq-cli-test-potential");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("potential.json");
    // first write the series via the eisenstein command, then scale by hand:
    // Q/pi^2 = -E_4 corresponds to flipping every coefficient sign
    let (code, stdout, _) = mdeq(&["eisenstein", "--k", "4", "--order", "10"]);
    assert_eq!(code, 0);
    let mut v = json(&stdout);
    let coeffs: Vec<String> = v["series"]["coeffs"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| {
            let s = c.as_str().unwrap();
            if let Some(rest) = s.strip_prefix('-') {
                rest.to_string()
            } else {
                format!("-{s}")
            }
        })
        .collect();
    v["series"]["coeffs"] = serde_json::json!(coeffs);
    std::fs::write(&path, serde_json::to_string(&v["series"]).unwrap()).unwrap();
    let (code, stdout, _) = mdeq(&[
        "apparent-cusp",
        "--potential",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 1);
    assert_eq!(json(&stdout)["obstruction"], "60");
}

#[test]
fn apparent_poly_report() {
    let (code, stdout, _) = mdeq(&["apparent-poly", "--family", "q2", "--kappa", "2"]);
    assert_eq!(code, 0);
    let v = json(&stdout);
    assert_eq!(v["degree"], 2);
    assert_eq!(v["predicted"][0], "71/36");
    assert_eq!(v["predicted"][1], "119/36");
    assert!(v["max_residual"].as_f64().unwrap() < 1e-6);

    let (code, _, _) = mdeq(&["apparent-poly", "--family", "q9", "--kappa", "2"]);
    assert_eq!(code, 10);
}

#[test]
fn sphere_apparent_report() {
    let (code, stdout, _) = mdeq(&[
        "sphere-apparent",
        "--alphas",
        "1/2,1/2,7/2",
        "--points",
        "2",
        "--orders",
        "1",
    ]);
    assert_eq!(code, 0);
    let v = json(&stdout);
    assert_eq!(v["bezout_bound"], 2);
    assert_eq!(v["count_with_multiplicity"], 2);
    assert!(v["polynomials"][0].as_str().unwrap().contains("s1^2"));

    // gaussian point: polynomial only, no rational solve
    let (code, stdout, _) = mdeq(&[
        "sphere-apparent",
        "--alphas",
        "1/2,1/2,7/2",
        "--points",
        "1/2:3/2",
        "--orders",
        "1",
    ]);
    assert_eq!(code, 0);
    assert!(json(&stdout)["eliminated"].is_null());

    // integral alpha rejected
    let (code, _, _) = mdeq(&[
        "sphere-apparent",
        "--alphas",
        "1,1/2,7/2",
        "--points",
        "2",
        "--orders",
        "1",
    ]);
    assert_eq!(code, 10);
}

#[test]
fn metric_exists_verdicts() {
    let (code, stdout, _) = mdeq(&[
        "metric-exists",
        "--alphas",
        "1/2,1/3,1/5",
        "--parity",
        "even",
    ]);
    assert_eq!(code, 0);
    let v = json(&stdout);
    assert_eq!(v["verdict"], "Exists");
    assert!(v["trace_value"].as_f64().unwrap() < 1.0);

    // boundary: alpha_1 + alpha_2 + alpha_3 integral
    let (code, stdout, _) = mdeq(&[
        "metric-exists",
        "--alphas",
        "1/2,1/3,7/6",
        "--parity",
        "even",
    ]);
    assert_eq!(code, 2);
    assert_eq!(json(&stdout)["verdict"], "Boundary");

    // modular interval classification
    let (code, _, _) = mdeq(&[
        "metric-exists",
        "--modular",
        "--kappas",
        "3/2,1/2",
        "--rinf",
        "1/4",
    ]);
    assert_eq!(code, 0);
    let (code, _, _) = mdeq(&[
        "metric-exists",
        "--modular",
        "--kappas",
        "3/2,1/2",
        "--rinf",
        "1/24",
    ]);
    assert_eq!(code, 1);
    let (code, stdout, _) = mdeq(&[
        "metric-exists",
        "--modular",
        "--kappas",
        "3/2,1/2",
        "--rinf",
        "5/12",
    ]);
    assert_eq!(code, 2);
    assert!(json(&stdout)["character_condition"].is_string());

    // hypothesis violation: kappa_i integral
    let (code, _, _) = mdeq(&[
        "metric-exists",
        "--modular",
        "--kappas",
        "2,1/2",
        "--rinf",
        "1/4",
    ]);
    assert_eq!(code, 10);
}

#[test]
fn cover_check_verdicts() {
    let (code, stdout, _) = mdeq(&["cover-check", "--theorem", "1.4", "--params", "2,2,3"]);
    assert_eq!(code, 0);
    let v = json(&stdout);
    assert_eq!(v["degree"], 3);
    assert_eq!(v["product_type"][0], 3);
    assert_eq!(v["transitive"], true);
    assert_eq!(v["genus"], 0);

    // triangle failure: falsified
    let (code, stdout, _) = mdeq(&["cover-check", "--theorem", "1.4", "--params", "1,1,3"]);
    assert_eq!(code, 1);
    assert!(json(&stdout)["rejected"].is_string());

    let (code, _, _) = mdeq(&["cover-check", "--theorem", "1.5", "--params", "3,1"]);
    assert_eq!(code, 0);
    let (code, _, _) = mdeq(&["cover-check", "--theorem", "1.7", "--params", "3,2,-"]);
    assert_eq!(code, 0);
    let (code, _, _) = mdeq(&["cover-check", "--theorem", "9.9", "--params", "1"]);
    assert_eq!(code, 10);
}

#[test]
fn weight_neg2_closed_form() {
    let (code, stdout, _) = mdeq(&["weight-neg2", "--n", "3"]);
    assert_eq!(code, 0);
    let v = json(&stdout);
    assert_eq!(v["c"], "50331648");
    assert_eq!(v["scaled_poly"][0], "-1536");
    assert_eq!(v["scaled_poly"][1], "1");
    assert_eq!(v["translation_antisymmetry"], true);
    assert!(v["inversion_residual"].as_f64().unwrap() < 1e-8);

    let (code, _, _) = mdeq(&["weight-neg2", "--n", "4"]);
    assert_eq!(code, 10);

    // a reduced truncation order is flagged as insufficient, not solved
    let (code, stdout, _) = mdeq(&["weight-neg2", "--n", "9", "--order", "20"]);
    assert_eq!(code, 2);
    assert!(json(&stdout)["truncation_insufficient"]
        .as_str()
        .unwrap()
        .contains("need at least"));
}

#[test]
fn verify_suite_with_outputs() {
    let dir = std::env::temp_dir().join("mdeq-cli-test-verify");
    std::fs::create_dir_all(&dir).unwrap();
    let json_path = dir.join("report.json");
    let csv_path = dir.join("report.csv");
    let (code, stdout, _) = mdeq(&[
        "verify",
        "--suite",
        "schwarzian",
        "--order",
        "20",
        "--json",
        json_path.to_str().unwrap(),
        "--csv",
        csv_path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let v = json(&stdout);
    assert_eq!(v["pass"], true);
    let file: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&json_path).unwrap()).unwrap();
    assert_eq!(file["pass"], true);
    let csv = std::fs::read_to_string(&csv_path).unwrap();
    assert!(csv.starts_with("id,name,pass,elapsed_ms"));
    assert!(csv.contains("schwarzian-tables"));

    let (code, _, _) = mdeq(&["verify", "--suite", "nope"]);
    assert_eq!(code, 10);
    let (code, _, _) = mdeq(&["verify", "--suite", ""]);
    assert_eq!(code, 10);

    // a reduced order profile surfaces as a failing table suite with the
    // truncation flag in the details
    let (code, stdout, _) = mdeq(&["verify", "--suite", "weight-neg2-table", "--order", "20"]);
    assert_eq!(code, 1);
    let v = json(&stdout);
    assert_eq!(v["pass"], false);
    let details = serde_json::to_string(&v["results"][0]["details"]).unwrap();
    assert!(details.contains("truncation order too small"));
}

#[test]
fn exact_reports_are_deterministic() {
    let (c1, out1, _) = mdeq(&["eisenstein", "--k", "4", "--order", "8"]);
    let (c2, out2, _) = mdeq(&["eisenstein", "--k", "4", "--order", "8"]);
    assert_eq!(c1, 0);
    assert_eq!(c2, 0);
    assert_eq!(out1, out2, "identical JSON byte streams in exact mode");

    let (_, w1, _) = mdeq(&["weight-neg2", "--n", "1", "--order", "40"]);
    let (_, w2, _) = mdeq(&["weight-neg2", "--n", "1", "--order", "40"]);
    assert_eq!(w1, w2);
}
