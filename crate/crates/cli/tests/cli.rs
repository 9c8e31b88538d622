use std::process::{Command, Output};

fn fslp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fslp"))
        .args(args)
        .env_remove("FSLP_CONFIG")
        .output()
        .expect("run fslp")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

const TABLE1_CSV: &str = "\
alpha,eigen_count,I0_lo,I0_hi,Ilast_lo,Ilast_hi,oracle_agrees
0.78,0,,,,,true
0.80,2,3.82549,7.22593,3.82549,7.22593,true
0.82,2,3.70445,7.04252,3.70445,7.04252,true
0.84,2,3.60076,6.88842,3.60076,6.88842,true
0.86,4,3.51148,6.75866,10.0058,13.253,true
0.88,4,3.43428,6.64934,9.86441,13.0795,true
0.90,8,3.36728,6.55734,22.5076,25.6977,true
0.92,10,3.309,6.48013,28.678,31.8492,true
0.94,18,3.25822,6.41567,53.7774,56.9349,true
0.96,32,3.21392,6.36226,97.6639,100.812,true
0.98,84,3.17528,6.31849,260.918,264.062,true
0.981,90,3.17348,6.31653,279.762,282.905,true
0.983,104,3.16993,6.31268,323.731,326.873,true
0.985,124,3.16642,6.30891,386.55,389.693,true
0.987,148,3.16296,6.30522,461.934,465.076,true
0.989,182,3.15955,6.30162,568.733,571.875,true
0.9895,194,3.1587,6.30073,606.428,609.57,true
0.9898,200,3.15819,6.3002,625.275,628.417,true
";

#[test]
fn table1_rows_for_selected_alphas() {
    let o = fslp(&["table1", "--format", "csv", "--alpha", "0.90", "--alpha", "0.78"]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(
        stdout(&o),
        "alpha,eigen_count,I0_lo,I0_hi,Ilast_lo,Ilast_hi,oracle_agrees\n\
         0.90,8,3.36728,6.55734,22.5076,25.6977,true\n\
         0.78,0,,,,,true\n"
    );
}

#[test]
fn table1_default_run_reproduces_all_rows() {
    let o = fslp(&["table1", "--format", "csv"]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(stdout(&o), TABLE1_CSV);
}

#[test]
fn table1_csv_round_trips_through_a_csv_reader() {
    let o = fslp(&["table1", "--format", "csv", "--alpha", "0.86,0.90,0.78"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let headers = reader.headers().unwrap().clone();
    let records: Vec<csv::StringRecord> = reader.records().map(|r| r.unwrap()).collect();
    assert_eq!(records.len(), 3);
    assert_eq!(&records[1][1], "8");
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(&headers).unwrap();
    for r in &records {
        writer.write_record(r).unwrap();
    }
    assert_eq!(String::from_utf8(writer.into_inner().unwrap()).unwrap(), text);
}

#[test]
fn table1_precision_flag_changes_digits() {
    let o = fslp(&["table1", "--format", "csv", "--precision", "3", "--alpha", "0.90"]);
    assert!(stdout(&o).ends_with("0.90,8,3.37,6.56,22.5,25.7,true\n"), "{}", stdout(&o));
}

#[test]
fn table1_rejects_alpha_outside_range() {
    for bad in ["1.2", "0.5", "abc"] {
        let o = fslp(&["table1", "--alpha", bad]);
        assert_eq!(o.status.code(), Some(2), "alpha {bad}");
        assert!(o.stdout.is_empty());
    }
}

#[test]
fn eig_alpha_0_9_has_eight_eigenvalues() {
    let o = fslp(&["eig", "--alpha", "0.9", "--format", "json"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["n_star"], 4);
    assert_eq!(v["eigen_count"], 8);
    assert_eq!(v["oracle_count"], 8);
    assert_eq!(v["oracle_agrees"], true);
    let eigs = v["eigenvalues"].as_array().unwrap();
    assert_eq!(eigs.len(), 8);
    let lambdas: Vec<f64> = eigs.iter().map(|e| e["lambda"].as_f64().unwrap()).collect();
    assert!(lambdas.windows(2).all(|w| w[0] < w[1]));
    for (i, e) in eigs.iter().enumerate() {
        assert_eq!(e["bracket"].as_u64().unwrap() as usize, i / 2);
        assert!(e["residual"].as_f64().unwrap() <= 1e-10);
    }
}

#[test]
fn eig_csv_lists_eigenvalues_and_respects_max_brackets() {
    let o = fslp(&["eig", "--alpha", "0.9", "--format", "csv", "--max-brackets", "1"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,bracket,lambda,rho,residual");
    assert_eq!(lines.len(), 3);
    assert!(stderr(&o).contains("warning"));
    let quiet = fslp(&["--quiet", "eig", "--alpha", "0.9", "--format", "csv", "--max-brackets", "1"]);
    assert!(quiet.stderr.is_empty());
}

#[test]
fn eig_rejects_nonpositive_tol() {
    assert_eq!(fslp(&["eig", "--alpha", "0.9", "--tol", "0"]).status.code(), Some(2));
}

#[test]
fn ml_examples() {
    let o = fslp(&["ml", "--delta", "1", "--theta", "1", "--z", "1", "--format", "csv"]);
    assert_eq!(stdout(&o), "delta,theta,z,value,branch\n1.0,1.0,1.0,2.718281828459045,series\n");

    let o = fslp(&["ml", "--delta", "1.8", "--theta", "2", "--z", "-50", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["branch"], "decomposition");

    let o = fslp(&["ml", "--delta", "1.8", "--theta", "2", "--z", "-5", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["branch"], "series");
    let got = v["value"].as_f64().unwrap();
    assert!((got - 0.2691686722423308).abs() <= 1e-14, "{got}");
}

#[test]
fn ml_rejects_bad_parameters() {
    let o = fslp(&["ml", "--delta", "-1", "--theta", "1", "--z", "0"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn fss_fe1_skips_the_singular_endpoint() {
    let o = fslp(&["fss", "--equation", "fe1", "--alpha", "0.8", "--grid", "0:1:5", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "t,y1,y2");
    assert_eq!(lines.len(), 5);
    assert!(lines[1].starts_with("0.25,"));
    assert!(stderr(&o).contains("t = 0.0"));
}

#[test]
fn fss_fe2_psi_endpoints() {
    let o = fslp(&["fss", "--equation", "fe2", "--alpha", "0.8", "--grid", "0:1:11", "--format", "csv"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 12);
    assert_eq!(lines[1], "0.0,0.0");
    let last: f64 = lines[11].split(',').nth(1).unwrap().parse().unwrap();
    // 1 / (0.6 Γ(0.8)²)
    assert!((last - 1.2296213383242614).abs() <= 1e-12, "{last}");
}

#[test]
fn fss_fe3_requires_lambda() {
    let o = fslp(&["fss", "--equation", "fe3", "--alpha", "0.9", "--grid", "0:1:3"]);
    assert_eq!(o.status.code(), Some(2));
    let o = fslp(&["fss", "--equation", "fe3", "--alpha", "0.9", "--lambda", "10", "--grid", "0:1:3", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 2);
}

#[test]
fn fss_exit_codes() {
    // every row fails
    let o = fslp(&["fss", "--equation", "fe1", "--alpha", "0.8", "--grid", "0:0:2"]);
    assert_eq!(o.status.code(), Some(2));
    // malformed grid
    let o = fslp(&["fss", "--equation", "fe1", "--alpha", "0.8", "--grid", "0:1:1"]);
    assert_eq!(o.status.code(), Some(2));
    let o = fslp(&["fss", "--equation", "fe1", "--alpha", "0.8", "--grid", "0:1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn computational_failure_exits_with_one() {
    // a quadrature budget of one panel cannot converge
    let dir = std::env::temp_dir().join(format!("fslp-cfg-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("tight.toml");
    std::fs::write(&path, "max_subdivisions = 1\nabs_tol = 1e-300\nrel_tol = 1e-300\n").unwrap();
    let o = fslp(&["--config", path.to_str().unwrap(), "eig", "--alpha", "0.9"]);
    assert_eq!(o.status.code(), Some(1), "{}", stderr(&o));
}

#[test]
fn config_file_settings_and_flag_precedence() {
    let dir = std::env::temp_dir().join(format!("fslp-cfg2-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("c.toml");
    std::fs::write(&path, "precision = 4\nformat = \"csv\"\n").unwrap();
    let p = path.to_str().unwrap();
    let o = fslp(&["--config", p, "ml", "--delta", "1", "--theta", "1", "--z", "1"]);
    assert_eq!(stdout(&o), "delta,theta,z,value,branch\n1,1,1,2.718,series\n");
    let o = fslp(&["--config", p, "--precision", "6", "ml", "--delta", "1", "--theta", "1", "--z", "1"]);
    assert!(stdout(&o).contains("2.71828,series"));

    let o = Command::new(env!("CARGO_BIN_EXE_fslp"))
        .args(["ml", "--delta", "1", "--theta", "1", "--z", "1"])
        .env("FSLP_CONFIG", p)
        .output()
        .unwrap();
    assert!(stdout(&o).contains("2.718,series"));

    std::fs::write(&path, "bogus = 1\n").unwrap();
    let o = fslp(&["--config", p, "ml", "--delta", "1", "--theta", "1", "--z", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("bogus"));
}

#[test]
fn unknown_subcommand_is_a_usage_error() {
    assert_eq!(fslp(&["frobnicate"]).status.code(), Some(2));
}
