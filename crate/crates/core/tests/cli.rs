use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn epi(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_epi"))
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .args(args)
        .output()
        .unwrap()
}

fn epi_json(args: &[&str]) -> (i32, Value) {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    let mut all = args.to_vec();
    let out_s = out.to_str().unwrap().to_owned();
    all.extend(["--out", &out_s]);
    let o = epi(&all);
    let text = std::fs::read_to_string(&out).unwrap_or_else(|_| panic!("no report: {}", String::from_utf8_lossy(&o.stderr)));
    (o.status.code().unwrap(), serde_json::from_str(&text).unwrap())
}

#[test]
fn check_examples() {
    let (code, r) = epi_json(&["check", "@n2", "data/identities/pinv_zero.id"]);
    assert_eq!(code, 0);
    assert_eq!(r["results"]["identities"][0]["holds"], true);

    let (code, r) = epi_json(&["check", "@z2", "data/identities/pinv_zero.id"]);
    assert_eq!(code, 1);
    let w = &r["results"]["identities"][0]["witness"];
    assert!(w.is_object());
    assert_ne!(w["lhs_value"], w["rhs_value"]);
    assert_eq!(r["witnesses"].as_array().unwrap().len(), 1);

    assert_eq!(epi(&["check", "@sl2", "data/identities/commutative.id"]).status.code(), Some(0));
}

#[test]
fn inspect_examples() {
    let (code, r) = epi_json(&["inspect", "@mono_i2_p2"]);
    assert_eq!(code, 0);
    // 0 = a, 1 = a^2, 2 = a^3
    assert_eq!(r["results"]["pseudoinverse"][0], 2);
    assert_eq!(r["results"]["omega"][0], 1);
    assert_eq!(r["results"]["group_elements"], serde_json::json!([1, 2]));

    let (_, r) = epi_json(&["inspect", "@sl2"]);
    assert_eq!(r["results"]["idempotents"], serde_json::json!([0, 1]));
    assert_eq!(r["results"]["pseudoinverse"], serde_json::json!([0, 1]));

    let (_, r) = epi_json(&["inspect", "@n3"]);
    assert_eq!(r["results"]["nil"], true);
    assert_eq!(r["results"]["nilpotency_index"], 3);
}

#[test]
fn verify_examples() {
    for f in ["data/chains/subcase_2_1.chain", "data/chains/subcase_2_3.chain", "@subcase_2_2", "@case1_p2_q3"] {
        assert_eq!(epi(&["verify", f]).status.code(), Some(0), "{f}");
    }
    let (code, r) = epi_json(&["verify", "data/chains/corrupted_subcase_2_1.chain"]);
    assert_eq!(code, 1);
    let bad: Vec<&Value> = r["results"]["chains"].as_array().unwrap().iter().filter(|c| c["verified"] == false).collect();
    assert_eq!(bad.len(), 1);
    assert_eq!(bad[0]["name"], "right-dbl-from-degEPI");
    assert_eq!(bad[0]["failing_step"], 3);
}

#[test]
fn lattice_examples() {
    let (code, r) = epi_json(&["lattice", "@M3"]);
    assert_eq!(code, 0);
    let els = r["results"]["elements"].as_array().unwrap();
    assert!(els.iter().all(|e| e["modular"] == true));
    for atom in &els[1..=3] {
        assert_eq!(atom["cancellable"], false);
        assert_eq!(atom["neutral"], false);
        assert!(atom["cancellable_witness"].is_array());
    }

    let (_, r) = epi_json(&["lattice", "data/lattices/chain4.lattice"]);
    assert!(r["results"]["elements"].as_array().unwrap().iter().all(|e| e["neutral"] == true && e["cancellable"] == true));

    let (_, r) = epi_json(&["lattice", "@N5"]);
    let bad: Vec<&Value> = r["results"]["elements"].as_array().unwrap().iter().filter(|e| e["modular"] == false).collect();
    assert_eq!(bad.len(), 1);
    assert_eq!(bad[0]["modular_witness"], serde_json::json!([1, 3]));

    let o = epi(&["lattice", "data/lattices/bowtie.lattice"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("bowtie.lattice") && err.contains("0 and 1"), "{err}");

    let (code, r) = epi_json(&["lattice", "--size", "6", "--dedupe"]);
    assert_eq!(code, 0);
    assert_eq!(r["results"]["lattices_per_size"], serde_json::json!([1, 1, 1, 2, 5, 15]));
}

#[test]
fn scan_examples() {
    let (code, r) = epi_json(&["scan", "2"]);
    assert_eq!(code, 0);
    assert_eq!(r["results"]["tables"], 8);

    let (code, r) = epi_json(&["scan", "3", "data/identities/commutative.id"]);
    assert_eq!(code, 0);
    assert_eq!(r["results"]["candidates"], 19683);
    assert!(r["results"]["invariants"].as_array().unwrap().iter().all(|i| i["failures"] == 0));

    let (code, r) = epi_json(&["scan", "3", "data/identities/nil_commutative.id"]);
    assert_eq!(code, 0);
    let ms = r["results"]["matches"].as_array().unwrap();
    assert_eq!(ms.len(), 9);
    assert!(ms.iter().all(|m| m["nil"] == true && m["commutative"] == true));

    let (_, r) = epi_json(&["scan", "3", "--dedupe"]);
    assert_eq!(r["results"]["models"], 24);
}

#[test]
fn input_errors_exit_two_and_name_the_input() {
    let o = epi(&["scan", "4"]);
    assert_eq!(o.status.code(), Some(2));
    let o = epi(&["inspect", "missing.cayley"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("missing.cayley"));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.id");
    std::fs::write(&bad, "x y = y x\nx y\n").unwrap();
    let o = epi(&["check", "@sl2", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("bad.id") && err.contains("line 2"), "{err}");

    assert_eq!(epi(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(epi(&["lattice"]).status.code(), Some(2));
}

#[test]
fn reports_are_deterministic() {
    let strip = |mut v: Value| {
        v.as_object_mut().unwrap().remove("timing_ms");
        v
    };
    let a = strip(epi_json(&["scan", "3", "--seed", "42"]).1);
    let b = strip(epi_json(&["scan", "3", "--seed", "42", "--jobs", "4"]).1);
    assert_eq!(a, b);
    let c = strip(epi_json(&["scan", "3", "--seed", "43"]).1);
    assert_eq!(c["settings"]["seed"], "43");
    assert_eq!(strip(epi_json(&["lattice", "@B3"]).1), strip(epi_json(&["lattice", "@B3"]).1));
    assert!(Path::new(env!("CARGO_BIN_EXE_epi")).exists());
}
