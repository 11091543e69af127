use std::process::{Command, Output};

use skewgroth::grothendieck::{g_skew_det, G_schur};
use skewgroth::noncomm::{expand_sG_double, expand_sg, Basis};
use skewgroth::serialize::{expansion_from_json, symfunc_from_json};
use skewgroth::{BetaPoly, Partition, SkewShape, SymFunc};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_skewgroth")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap().trim().to_string()
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().expect("exit code")
}

fn p(x: &[usize]) -> Partition {
    Partition::from_slice(x)
}

#[test]
fn expand_round_trips() {
    let out = stdout(&["expand", "G", "1", "--degree", "3"]);
    assert_eq!(symfunc_from_json(&out, 3).unwrap(), G_schur(&p(&[1]), 3));
    assert_eq!(stdout(&["expand", "g", "-"]), r#"[{"outer":[],"coeff":[[0,1,1]]}]"#);
    let out = stdout(&["expand", "g/", "2,1/1"]);
    let want = g_skew_det(&p(&[2, 1]), &p(&[1]));
    assert_eq!(symfunc_from_json(&out, 2).unwrap().terms(), want.terms());
}

#[test]
fn expand_latex_and_beta_value() {
    let tex = stdout(&["expand", "G", "1", "--degree", "3", "--latex"]);
    assert_eq!(tex, r"s_{(1)} + \beta s_{(1,1)} + \beta^{2} s_{(1,1,1)}");
    let out = stdout(&["expand", "G", "1", "--degree", "2", "--beta-rational", "-1/3"]);
    assert_eq!(out, r#"[{"outer":[1],"coeff":[[0,1,1]]},{"outer":[1,1],"coeff":[[0,-1,3]]}]"#);
}

#[test]
fn product_examples() {
    let out = stdout(&["product", "sG//", "--nu", "1", "--shape", "3,1/1", "--r", "4", "--s", "1"]);
    let e = expansion_from_json(&out).unwrap();
    assert_eq!(e, expand_sG_double(&p(&[1]), &p(&[3, 1]), &p(&[1]), 4, 1).unwrap());
    assert_eq!(e.validity_mod, Some(3));
    assert_eq!(e.terms.terms().len(), 5);

    let out = stdout(&["product", "sg", "--nu", "2", "--shape", "2,1/1", "--r", "3"]);
    let e = expansion_from_json(&out).unwrap();
    assert_eq!(e, expand_sg(&p(&[2]), &p(&[2, 1]), &p(&[1]), 3).unwrap());
    assert_eq!(e.terms.terms().len(), 9);

    let out = stdout(&["product", "sg", "--nu", "-", "--shape", "-/-"]);
    let e = expansion_from_json(&out).unwrap();
    assert_eq!(e.basis, Basis::Dual);
    assert_eq!(e.terms.coeff(&SkewShape::straight(p(&[]))), BetaPoly::one());
    assert_eq!(e.terms.terms().len(), 1);
}

#[test]
fn perp_examples() {
    let realize = |args: &[&str], d| expansion_from_json(&stdout(args)).unwrap().realize(d);
    let one = realize(&["perp", "sg", "--nu", "2,1", "--shape", "2,1"], 0);
    assert_eq!(one, SymFunc::one(0));
    let got = realize(&["perp", "sg", "--nu", "2,1", "--shape", "2,2"], 1);
    assert_eq!(got, SymFunc::schur(&p(&[1]), 1).sub(&SymFunc::constant(BetaPoly::beta_pow(1), 1)));
    let out = stdout(&["perp", "sg", "--nu", "-", "--shape", "3,1"]);
    assert_eq!(out, r#"{"basis":"g","validity_mod":null,"terms":[{"outer":[3,1],"inner":[],"coeff":[[0,1,1]]}]}"#);
    assert_eq!(code(&["perp", "sG", "--nu", "1", "--shape", "2,1/1"]), 0);
}

#[test]
fn verify_suites_pass() {
    for args in [
        &["verify", "duality", "--max", "5"][..],
        &["verify", "oracle", "--max", "4", "--vars", "3"],
        &["verify", "knuth", "--max", "4"],
    ] {
        let out = stdout(args);
        assert!(out.lines().last().unwrap().starts_with("PASS"), "{out}");
        assert!(!out.contains("FAIL"), "{out}");
    }
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["expand", "G", "x"]), 2);
    assert_eq!(code(&["expand", "G", "1,2"]), 2);
    assert_eq!(code(&["expand", "H", "1"]), 2);
    assert_eq!(code(&["expand", "G", "2/1"]), 2);
    assert_eq!(code(&["expand", "G", "1", "--beta-rational", "1/0"]), 2);
    assert_eq!(code(&["expand", "G//", "1/2"]), 3);
    assert_eq!(code(&["product", "sg", "--nu", "2", "--shape", "2,1/1", "--r", "1"]), 3);
    assert_eq!(code(&["product", "sG/", "--nu", "1", "--shape", "2,1/1,1", "--r", "2", "--s", "1"]), 3);
    assert_eq!(code(&["perp", "sg", "--nu", "1", "--shape", "1,1,1", "--r", "2"]), 3);
}
