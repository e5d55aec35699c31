use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qudit-qec"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn compare_csv_header_and_ordering() {
    let o = run(&["compare", "--codes", "d18,five,seven", "--p", "0:0.026:0.0005"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(!text.contains('\r'));
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("p,d18,five,seven"));
    let rows: Vec<Vec<f64>> = lines
        .map(|l| l.split(',').map(|x| x.parse().unwrap()).collect())
        .collect();
    assert_eq!(rows.len(), 53);
    assert_eq!(rows[0], vec![0.0, 1.0, 1.0, 1.0]);
    for r in &rows[1..] {
        assert!(r[1] > r[2] && r[2] > r[3], "ordering at p = {}", r[0]);
    }
}

#[test]
fn compare_follows_invocation_order() {
    let o = run(&["compare", "--codes", "seven,d50", "--p", "0:0.001:0.001"]);
    assert_eq!(stdout(&o).lines().next(), Some("p,seven,d50"));
}

#[test]
fn output_is_deterministic() {
    let args = ["compare", "--codes", "d50,five", "--kappa", "4", "--p", "0:0.02:0.001"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn fidelity_value() {
    let o = run(&["fidelity", "--code", "d18", "--p", "0.1"]);
    assert_eq!(stdout(&o).trim(), "0.958441");
}

#[test]
fn threshold_report() {
    let o = run(&["threshold", "--code", "d50"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["code"], "d50");
    assert_eq!(v["kappa"], 1.0);
    assert_eq!(v["mu"], 0.0);
    assert!((v["threshold"].as_f64().unwrap() - 0.43).abs() < 0.01);
    let bound = v["validity_bound"].as_f64().unwrap();
    assert!(bound > 0.33 && bound < 0.34);
}

#[test]
fn correlated_polynomial_json() {
    let o = run(&["polynomial", "--code", "d18", "--channel", "correlated"]);
    let f = qudit_qec::RationalPolynomial::from_json(stdout(&o).trim()).unwrap();
    assert_eq!(f, qudit_qec::expected::d18_correlated());
}

#[test]
fn correctable_method_matches_reference_block_polynomial() {
    let o = run(&["polynomial", "--code", "five", "--method", "correctable"]);
    let f = qudit_qec::RationalPolynomial::from_json(stdout(&o).trim()).unwrap();
    assert_eq!(f, qudit_qec::expected::five_symmetric());
}

#[test]
fn term_table() {
    let o = run(&["polynomial", "--code", "d18", "--terms"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let terms = v.as_array().unwrap();
    assert_eq!(terms.len(), 36);
    assert_eq!(terms[0]["operator"], "w^0 X^0 Z^0");
}

#[test]
fn codes_table_lists_all_codes() {
    let text = stdout(&run(&["codes", "list"]));
    for name in ["d18", "d50", "five", "seven"] {
        assert!(text.lines().any(|l| l.starts_with(name)), "{name}");
    }
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["compare", "--codes", "d18", "--p", "0:1"]).status.code(), Some(2));
    assert_eq!(run(&["fidelity", "--code", "eleven", "--p", "0.1"]).status.code(), Some(2));
    assert_eq!(run(&["fidelity", "--code", "d18", "--p", "0.3", "--kappa", "4"]).status.code(), Some(3));
    assert_eq!(
        run(&["fidelity", "--code", "d18", "--p", "0.1", "--channel", "symmetric", "--kappa", "2"]).status.code(),
        Some(3)
    );
    assert_eq!(run(&["threshold", "--code", "seven", "--mu", "0.5"]).status.code(), Some(3));
}

#[test]
fn verify_reports_note_and_fails_on_block_references() {
    let o = run(&["verify"]);
    let text = stdout(&o);
    assert!(text.lines().any(|l| l.starts_with("NOTE") && l.contains("+175")));
    assert!(text.contains("d18    reference polynomial symmetric"));
    // the block-code reference polynomials omit degenerate corrections
    assert_eq!(o.status.code(), Some(1));
}
