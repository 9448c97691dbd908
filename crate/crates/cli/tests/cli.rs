//! End-to-end tests of the command-line binary.
//!
//! Each test spawns the compiled binary, so the assertions cover argument
//! parsing, exit codes, stream routing, and the exact output encoding —
//! everything a shell pipeline would observe.

use std::io::Write as _;
use std::process::{Command, Output};

use lattice_interp::{bernoulli_kernel, PeriodicPoint, SmoothnessOrder};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lattice-interp"))
        .args(args)
        .output()
        .expect("binary should spawn")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout should be UTF-8")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("stderr should be UTF-8")
}

/// Parses CSV output into rows of string fields, dropping the header.
fn csv_rows(out: &Output) -> Vec<Vec<String>> {
    stdout(out)
        .lines()
        .skip(1)
        .map(|line| line.split(',').map(str::to_string).collect())
        .collect()
}

fn write_temp(content: &str) -> tempfile::NamedTempFile {
    let mut file = tempfile::NamedTempFile::new().expect("temp file");
    file.write_all(content.as_bytes()).expect("write temp file");
    file
}

// ---------------------------------------------------------------------------
// Round trips and numerical contracts.
// ---------------------------------------------------------------------------

#[test]
fn interpolation_at_a_node_reproduces_the_sample_to_the_last_digit() {
    let out = run(&["interp", "--m", "3", "--N", "8", "--builtin", "sin2pi", "--z", "0.375"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let rows = csv_rows(&out);
    assert_eq!(rows.len(), 1);
    // 0.375 is the binary-exact node 3/8, so the interpolant must return the
    // sample itself: identical 17-digit strings and a hard zero error.
    let expected = format!("{:.16e}", (2.0 * std::f64::consts::PI * 0.375).sin());
    assert_eq!(rows[0][1], expected);
    assert_eq!(rows[0][1], rows[0][2]);
    assert_eq!(rows[0][3], "0.0000000000000000e0");
}

#[test]
fn coefficients_at_a_node_form_an_exact_cardinal_vector() {
    let out = run(&["coeffs", "--m", "2", "--N", "4", "--z", "0.5"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let rows = csv_rows(&out);
    assert_eq!(rows.len(), 4);
    for row in &rows {
        // Node indices follow β ↔ β/N, so z = 0.5 on four nodes is node 2.
        let expected = if row[0] == "2" { "1.0000000000000000e0" } else { "0.0000000000000000e0" };
        assert_eq!(row[2], expected, "node {}", row[0]);
    }
}

#[test]
fn sample_files_round_trip_through_interpolation_at_the_nodes() {
    let file = write_temp("beta,value\n3,0.125\n1,-2.5\n2,7.0\n");
    let path = file.path().to_str().unwrap();
    // Node 2 of a 3-node lattice sits at 2/3; the file lists it out of order.
    let out = run(&["interp", "--m", "2", "--input", path, "--z", &format!("{}", 2.0 / 3.0)]);
    assert!(out.status.success(), "{}", stderr(&out));
    let rows = csv_rows(&out);
    assert_eq!(rows[0][1], "7.0000000000000000e0");
}

#[test]
fn builtin_bernoulli10_matches_the_scaled_order_five_kernel() {
    // The degree-10 builtin equals −10! times the order-5 kernel; comparing
    // the CLI's truth column against the library pins the polynomial down.
    let m5 = SmoothnessOrder::new(5).unwrap();
    let out = run(&["interp", "--m", "1", "--N", "4", "--builtin", "bernoulli10", "--grid", "8"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let rows = csv_rows(&out);
    assert_eq!(rows.len(), 9);
    for row in &rows {
        let z: f64 = row[0].parse().unwrap();
        let truth: f64 = row[2].parse().unwrap();
        let kernel = -3_628_800.0 * bernoulli_kernel(m5, PeriodicPoint::new(z).unwrap());
        assert!(
            (truth - kernel).abs() <= 1e-12,
            "z = {z}: builtin {truth} vs kernel {kernel}"
        );
    }
}

#[test]
fn quadrature_of_the_interpolant_tracks_the_rectangle_rule() {
    let out = run(&["quad", "--m", "2", "--N", "16", "--builtin", "bernoulli10"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let rows = csv_rows(&out);
    assert_eq!(rows.len(), 1);
    let diff: f64 = rows[0][2].parse().unwrap();
    assert!(diff <= 1e-8, "rectangle rule and quadrature disagree by {diff}");
}

#[test]
fn convergence_errors_shrink_and_orders_settle_near_two_m() {
    let out = run(&[
        "convergence", "--m", "2", "--N", "4,8,16", "--builtin", "sin2pi", "--grid", "64",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let rows = csv_rows(&out);
    assert_eq!(rows.len(), 3);
    assert!(rows[0][3].is_empty(), "first row has no order estimate");
    let errs: Vec<f64> = rows.iter().map(|r| r[1].parse().unwrap()).collect();
    let norms: Vec<f64> = rows.iter().map(|r| r[2].parse().unwrap()).collect();
    assert!(errs[0] > errs[1] && errs[1] > errs[2], "errors must fall: {errs:?}");
    assert!(norms[0] > norms[1] && norms[1] > norms[2], "norms must fall: {norms:?}");
    for row in &rows[1..] {
        let order: f64 = row[3].parse().unwrap();
        // A smooth target converges at rate 2m = 4; allow the preasymptotic
        // first step some slack.
        assert!((3.5..=4.6).contains(&order), "order {order} is out of range");
    }
}

#[test]
fn error_norm_grid_covers_both_endpoints_and_echoes_raw_points() {
    let out = run(&["error-norm", "--m", "1", "--N", "4", "--grid", "8"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let rows = csv_rows(&out);
    assert_eq!(rows.len(), 9, "K+1 points for --grid K");
    assert_eq!(rows[0][0], "0.0000000000000000e0");
    assert_eq!(rows[8][0], "1.0000000000000000e0", "z = 1 is echoed unreduced");
    // Midpoints of an m = 1 lattice attain the exact squared norm h/4.
    let mid: f64 = rows[1][1].parse().unwrap();
    assert!((mid - 0.0625).abs() <= 1e-13, "midpoint norm² {mid}");
}

// ---------------------------------------------------------------------------
// Determinism and output routing.
// ---------------------------------------------------------------------------

#[test]
fn repeated_runs_are_byte_identical() {
    let args = ["coeffs", "--m", "4", "--N", "12", "--z", "0.3141"];
    let first = run(&args);
    let second = run(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);

    let args_json = [
        "error-norm", "--m", "3", "--N", "7", "--grid", "13", "--format", "json-lines",
    ];
    let first = run(&args_json);
    let second = run(&args_json);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn output_file_receives_exactly_what_stdout_would() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("coeffs.csv");
    let to_stdout = run(&["coeffs", "--m", "2", "--N", "5", "--z", "0.2"]);
    let to_file = run(&[
        "coeffs", "--m", "2", "--N", "5", "--z", "0.2", "--output", path.to_str().unwrap(),
    ]);
    assert!(to_file.status.success());
    assert!(to_file.stdout.is_empty(), "--output must silence stdout");
    let written = std::fs::read(&path).unwrap();
    assert_eq!(written, to_stdout.stdout);
}

#[test]
fn json_lines_hold_one_ordered_object_per_row() {
    let out = run(&[
        "interp", "--m", "2", "--N", "4", "--builtin", "sin2pi", "--z", "0.25", "--format",
        "json-lines",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    // 0.25 is node 1 of four, so every field is exact and the line is stable.
    assert_eq!(
        stdout(&out),
        "{\"z\":0.25,\"P_phi\":1.0,\"phi_true\":1.0,\"abs_err\":0.0}\n"
    );
}

#[test]
fn beta_flag_restricts_output_to_one_node() {
    let out = run(&["coeffs", "--m", "2", "--N", "6", "--z", "0.05", "--beta", "4"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let rows = csv_rows(&out);
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0][0], "4");
}

#[test]
fn undersized_lattices_warn_but_still_compute() {
    let out = run(&["coeffs", "--m", "4", "--N", "3", "--z", "0.1"]);
    assert!(out.status.success());
    assert!(stderr(&out).contains("below the smoothness order"));
    assert_eq!(csv_rows(&out).len(), 3);

    let quiet = run(&["coeffs", "--m", "3", "--N", "3", "--z", "0.1"]);
    assert!(quiet.status.success());
    assert!(stderr(&quiet).is_empty(), "N = m must not warn");
}

// ---------------------------------------------------------------------------
// Exit codes.
// ---------------------------------------------------------------------------

#[test]
fn invalid_flag_values_exit_with_code_two() {
    for args in [
        vec!["coeffs", "--m", "0", "--N", "4", "--z", "0.5"],
        vec!["coeffs", "--m", "13", "--N", "4", "--z", "0.5"],
        vec!["coeffs", "--m", "2", "--N", "1", "--z", "0.5"],
        vec!["coeffs", "--m", "2", "--N", "4", "--z", "0.5", "--beta", "9"],
        vec!["coeffs", "--m", "2", "--N", "4", "--z", "0.5", "--format", "xml"],
        vec!["coeffs", "--m", "2", "--N", "4", "--z", "0.5", "--tol", "0"],
        vec!["coeffs", "--m", "2", "--N", "4", "--z", "0.5", "--max-terms", "2"],
        vec!["interp", "--m", "2", "--builtin", "sin2pi", "--z", "0.2"],
        vec!["interp", "--m", "2", "--N", "4", "--z", "0.2"],
        vec!["interp", "--m", "2", "--N", "4", "--builtin", "sin2pi"],
        vec!["interp", "--m", "2", "--N", "4", "--builtin", "sin2pi", "--z", "0.1", "--grid", "5"],
        vec!["error-norm", "--m", "2", "--N", "4", "--grid", "0"],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(2), "args {args:?}: {}", stderr(&out));
    }
}

#[test]
fn sample_file_problems_exit_with_code_three() {
    let missing = run(&["interp", "--m", "2", "--input", "/nonexistent.csv", "--z", "0.2"]);
    assert_eq!(missing.status.code(), Some(3));

    let duplicate = write_temp("beta,value\n1,1.0\n1,2.0\n");
    let out = run(&["interp", "--m", "2", "--input", duplicate.path().to_str().unwrap(), "--z", "0.2"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("line 3"), "{}", stderr(&out));

    let bad_value = write_temp("0.5\nxyz\n0.25\n");
    let out = run(&["quad", "--m", "2", "--input", bad_value.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("line 2"), "{}", stderr(&out));

    let three_rows = write_temp("0.5\n0.25\n0.125\n");
    let out = run(&[
        "interp", "--m", "2", "--N", "8", "--input", three_rows.path().to_str().unwrap(), "--z", "0.2",
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("3 rows"), "{}", stderr(&out));
}

#[test]
fn numeric_failures_exit_with_code_four_and_one_stderr_line() {
    let out = run(&[
        "error-norm", "--m", "1", "--N", "3", "--z", "0.21", "--tol", "1e-30", "--max-terms", "5",
    ]);
    assert_eq!(out.status.code(), Some(4));
    let err = stderr(&out);
    assert_eq!(err.lines().count(), 1, "stderr must be a single line: {err:?}");
    assert!(err.starts_with("error: "), "{err}");
}
