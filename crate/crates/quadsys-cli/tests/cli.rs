//! End-to-end runs of the `quadsys` binary.

use std::process::{Command, Output};

use serde_json::Value;

fn quadsys(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quadsys")).args(args).env_remove("QUADSYS_PRIME").output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn envelope_d11_json() {
    let v = json(&quadsys(&["--format", "json", "envelope", "--system", "D11"]));
    assert_eq!(v["dim"], 10);
    assert_eq!(v["center_dim"], 2);
    assert_eq!(v["field"], "Q");
    assert_eq!(v["groebner"].as_array().unwrap().len(), 5);
    assert_eq!(v["groebner"][0], "b^2");
    assert_eq!(v["center"][1], "a^2b + aba + ba^2");
}

#[test]
fn b2_needs_extension() {
    let out = quadsys(&["envelope", "--system", "B2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--extend"));
    let v = json(&quadsys(&["--format", "json", "envelope", "--system", "B2", "--extend"]));
    assert_eq!(v["dim"], 13);
    assert_eq!(v["ideal_dims"].as_array().unwrap().len(), 4);
}

#[test]
fn bad_prime_is_a_usage_error() {
    let out = Command::new(env!("CARGO_BIN_EXE_quadsys"))
        .args(["table", "--op", "tetrad", "--degree", "7", "--partition", "7"])
        .env("QUADSYS_PRIME", "100")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(quadsys(&["--prime", "91", "table", "--op", "tetrad", "--degree", "7", "--partition", "7"]).status.code(), Some(2));
    assert_eq!(quadsys(&["envelope", "--system", "Q9"]).status.code(), Some(2));
}

#[test]
fn table_row() {
    let v = json(&quadsys(&["--format", "json", "table", "--op", "anti", "--degree", "7", "--partition", "4,3"]));
    let r = &v["rows"][0];
    let got: Vec<u64> =
        ["dim", "sym_rows", "sym_cols", "symm", "exp_rows", "exp_cols", "rank", "null", "new"].iter().map(|k| r[k].as_u64().unwrap()).collect();
    assert_eq!(got, [14, 42, 28, 16, 28, 14, 7, 21, 5]);
}

#[test]
fn special_is_deterministic() {
    let args = ["--format", "json", "special", "--op", "anti", "--multidegree", "a5,b2"];
    let a = quadsys(&args);
    let b = quadsys(&args);
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert_eq!((v["monomials"].as_u64(), v["rank"].as_u64(), v["nullity"].as_u64()), (Some(16), Some(11), Some(5)));
}
