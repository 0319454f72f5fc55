use std::process::{Command, Output};

fn knotfog(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_knotfog")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn invariants_table() {
    let o = knotfog(&["invariants", "trefoil"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("field       value\nexpression  trefoil\ngenus       [1, 1]\n"));
    assert!(out.contains("alexander   t^2 - t + 1\n"));
    assert!(out.contains("g1          [2, 2]\n"));
}

#[test]
fn invariants_json() {
    let o = knotfog(&["invariants", "ksat(kfam(1), kfam(2), 0, 0)", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["fog"]["lo"], 3);
    assert_eq!(v["fog"]["hi"], 3);
    assert!(v["fog"]["provenance"].as_array().unwrap().len() >= 2);
}

#[test]
fn output_is_deterministic() {
    for args in [&["invariants", "wh0(atom(J, genus=3)) # fig8", "--json"][..], &["family-table", "--n", "5"]] {
        let a = knotfog(args);
        let b = knotfog(args);
        assert_eq!(a.stdout, b.stdout);
        assert_eq!(a.status.code(), b.status.code());
    }
}

#[test]
fn parse_error_exits_2_with_position() {
    let o = knotfog(&["invariants", "wh0(kfam(3)"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("position 11"), "{err}");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(knotfog(&[]).status.code(), Some(2));
    assert_eq!(knotfog(&["bogus"]).status.code(), Some(2));
    assert_eq!(knotfog(&["family-table"]).status.code(), Some(2));
    assert_eq!(knotfog(&["family-table", "--n", "0"]).status.code(), Some(2));
    assert_eq!(knotfog(&["family-table", "--n", "-3"]).status.code(), Some(2));
    assert_eq!(knotfog(&["family-table", "--n", "x"]).status.code(), Some(2));
    assert_eq!(knotfog(&["--help"]).status.code(), Some(0));
}

#[test]
fn family_table_golden() {
    let o = knotfog(&["family-table", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "\
knot                   g       alexander  slice  g1_lo  g1_hi
wh0(kfam(1), clasp=+)  [1, 1]  1          yes    2      2
wh0(kfam(2), clasp=+)  [1, 1]  1          yes    3      3
wh0(kfam(3), clasp=+)  [1, 1]  1          yes    4      4
"
    );
}

#[test]
fn selftest_passes() {
    let o = knotfog(&["selftest"]);
    let out = stdout(&o);
    assert_eq!(o.status.code(), Some(0), "{out}");
    assert_eq!(out.lines().filter(|l| l.starts_with("[PASS]")).count(), 9);
    assert!(out.ends_with("9 passed, 0 failed\n"));
}
