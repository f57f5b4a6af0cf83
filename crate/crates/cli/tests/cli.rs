use rsq::export::matrix_from_str;
use rsq::{affine, rmatrix, Family};
use std::process::{Command, Output};

fn rsq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rsq")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn braid_check_passes() {
    let o = rsq(&["rmatrix", "verify", "--family", "B", "--rank", "2", "--checks", "braid"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("pass  braid"));
}

#[test]
fn invalid_family_is_a_usage_error() {
    let o = rsq(&["rmatrix", "build", "--family", "X", "--rank", "2"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn unknown_flag_and_unknown_check_are_usage_errors() {
    assert_eq!(code(&rsq(&["rmatrix", "verify", "--family", "B", "--rank", "2", "--bogus"])), 2);
    assert_eq!(code(&rsq(&["rmatrix", "verify", "--family", "B", "--rank", "2", "--checks", "nope"])), 2);
    assert_eq!(code(&rsq(&["rmatrix", "verify", "--family", "D", "--rank", "1"])), 2);
    assert_eq!(code(&rsq(&["affine", "build", "--family", "A", "--rank", "2", "--route", "b"])), 2);
}

#[test]
fn exported_matrices_round_trip() {
    let dir = std::env::temp_dir().join(format!("rsq-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let f = dir.join("r.json");
    let p = f.to_str().unwrap();
    let o = rsq(&["rmatrix", "build", "--family", "C", "--rank", "2", "--route", "factorized", "--out", p]);
    assert_eq!(code(&o), 0);
    let m = matrix_from_str(&std::fs::read_to_string(&f).unwrap()).unwrap();
    assert_eq!(m, rmatrix::rhat_explicit(Family::C, 2));

    let o = rsq(&["affine", "build", "--family", "D", "--rank", "3", "--out", p]);
    assert_eq!(code(&o), 0);
    let m = matrix_from_str(&std::fs::read_to_string(&f).unwrap()).unwrap();
    assert_eq!(m, affine::rhat_z(Family::D, 3));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn json_dumps_parse() {
    let o = rsq(&["rootdata", "dump", "--family", "B", "--rank", "3"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["positive_roots"].as_array().unwrap().len(), 9);
    assert_eq!(v["omega"][1][0], "s^2");

    let o = rsq(&["rep", "dump", "--family", "B", "--rank", "2", "--affine"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["dim"], 5);
    assert!(v["generators"]["e0"]["vars"].as_array().unwrap().len() > 2);

    let o = rsq(&["lyndon", "table", "--family", "D", "--rank", "4", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["order"].as_array().unwrap().len(), 12);
}

#[test]
fn lyndon_table_lists_words_and_pairs() {
    let o = rsq(&["lyndon", "table", "--family", "D", "--rank", "4"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.lines().any(|l| l.starts_with("beta_1_4") && l.contains("124")));
}

#[test]
fn pairing_constants_agree() {
    let o = rsq(&["pairing", "constants", "--family", "B", "--rank", "2", "--max-m", "2"]);
    assert_eq!(code(&o), 0);
    assert!(!stdout(&o).contains("MISMATCH"));
}

#[test]
fn affine_and_embed_checks_pass() {
    let o = rsq(&["affine", "verify", "--family", "B", "--rank", "2", "--checks", "intertwine,ybe,baxterize-match"]);
    assert_eq!(code(&o), 0);
    let o = rsq(&["embed", "verify", "--family", "B", "--rank", "2", "--checks", "dj,kappa,rootvec,twist"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("b obstruction"));
}

#[test]
fn certify_all_passes_and_is_deterministic() {
    let dir = std::env::temp_dir().join(format!("rsq-cert-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let (a, b) = (dir.join("a.json"), dir.join("b.json"));
    let o = rsq(&["certify-all", "--max-rank", "2", "--json", a.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let o = rsq(&["certify-all", "--max-rank", "2", "--json", b.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    std::fs::remove_dir_all(&dir).ok();
}
