use std::process::{Command, Output};

fn fmzv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fmzv")).args(args).env_remove("FMZV_MAX_WEIGHT").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn shuffle_product() {
    let o = fmzv(&["product", "--op", "shuffle", "x0", "x1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "x0x1 + x1x0\n");
    let o = fmzv(&["product", "--op", "stuffle", "y1", "y2"]);
    assert_eq!(stdout(&o), "y3 + y1 y2 + y2 y1\n");
}

#[test]
fn matrix_with_determinant() {
    let o = fmzv(&["matrix", "--N", "9", "--level", "1", "--det", "--two-adic"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "3,-15/2,189/16,-223/16\n0,-15/2,299/8,-889/16\n0,2,-291/16,455/16\n-2,12,-30,641/16\ndet = 4865/512\ntwo-adic certificate = true\n"
    );
}

#[test]
fn coefficients() {
    assert_eq!(stdout(&fmzv(&["coeffs", "--a", "0", "--b", "0", "--r", "1"])), "1\n");
}

#[test]
fn coproduct_and_derivation() {
    assert_eq!(stdout(&fmzv(&["coproduct", "--op", "gon", "x1x0"])), "x1x0⊗1 + x0⊗x1 + x1⊗x0 + 1⊗x1x0\n");
    assert_eq!(stdout(&fmzv(&["coproduct", "--op", "dec", "x0x1"])), "x0x1⊗1 + x0⊗x1 + 1⊗x0x1\n");
    let o = fmzv(&["derivation", "--r", "1", "--mode", "partial", "x0x0x1"]);
    assert_eq!(stdout(&o), "x0x0x1⊗1\n");
}

#[test]
fn reduce_euler_relation() {
    let o = fmzv(&["reduce", "--weight", "3", "x0x1x1 - x0x0x1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "0\n");
}

#[test]
fn odd_model_kernel() {
    let o = fmzv(&["oddmodel", "--kernel", "--weight", "5"]);
    assert_eq!(stdout(&o), "dim ker D_<5 = 1\ns5\n");
}

#[test]
fn json_documents_are_versioned_and_stable() {
    let args = ["--format", "json", "matrix", "--N", "10", "--level", "2", "--det"];
    let (a, b) = (fmzv(&args), fmzv(&args));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["det"], "-435419/64");
    assert_eq!(v["rows"][0], "(3,3,2,2)");
}

#[test]
fn usage_errors_exit_with_two() {
    let o = fmzv(&["product", "--op", "shuffle", "x0", "x3"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("position") && err.contains("expected"), "{err}");
    assert_eq!(fmzv(&["matrix", "--N", "9"]).status.code(), Some(2));
    assert_eq!(fmzv(&["dims", "--max-weight", "40"]).status.code(), Some(2));
}

#[test]
fn budget_comes_from_the_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_fmzv"))
        .args(["dims", "--max-weight", "5"])
        .env("FMZV_MAX_WEIGHT", "4")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verification_suites_pass() {
    for suite in ["c-lemma", "binomial", "euler", "level-one"] {
        let o = fmzv(&["verify", "--suite", suite]);
        assert_eq!(o.status.code(), Some(0), "{suite}: {}", stdout(&o));
        assert!(!stdout(&o).contains("FAIL"));
    }
}

#[test]
fn dims_table() {
    let o = fmzv(&["--format", "csv", "dims", "--max-weight", "6"]);
    assert_eq!(stdout(&o), "weight,dim_Zf,dim_Uf,expected\n0,1,1,1\n1,0,0,0\n2,1,1,1\n3,1,1,1\n4,1,1,1\n5,2,2,2\n6,2,2,2\n");
}
