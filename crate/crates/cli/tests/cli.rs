use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn aec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_aec")).args(args).output().expect("failed to launch aec")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn profile_csv_rows() {
    let o = aec(&["energy", "profile", path(&data("lbb.dfa")), "--max-len", "3", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "n,bits,witness");
    assert_eq!(lines[1], "0,0.000000000000,");
    assert_eq!(lines[2], "1,1.000000000000,a");
    assert_eq!(*lines.last().unwrap(), "3,3.169925001442,bbb");
}

#[test]
fn rate_of_lbb() {
    let o = aec(&["energy", "rate", path(&data("lbb.dfa"))]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1.584962500721\n");
}

#[test]
fn expected_and_margin() {
    let o = aec(&["energy", "expected", path(&data("lbb.dfa"))]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("stationary: 0 0 1/2 1/2"));
    assert!(stdout(&o).contains("1.292481250361"));
    let o = aec(&["energy", "margin", path(&data("lbb.dfa"))]);
    assert_eq!(stdout(&o), "0.292481250361\n");
}

#[test]
fn sim_m2_prints_certified_fraction() {
    let o = aec(&["qfa", "sim", path(&data("m2.qfa")), "--word", "s1 s2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "2/3 ≈ 0.666666666667\n");
}

#[test]
fn extract_m2_fails_with_mixed_subspace() {
    let o = aec(&["qfa", "extract", path(&data("m2.qfa"))]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).is_empty());
    assert!(stderr(&o).contains("not zero-error: mixed subspace"));
}

#[test]
fn extract_round_trips_a_dfa() {
    let dir = tempfile::tempdir().unwrap();
    let q = dir.path().join("lbb.qfa");
    let back = dir.path().join("back.dfa");
    assert_eq!(aec(&["qfa", "from-dfa", path(&data("lbb.dfa")), "-o", path(&q)]).status.code(), Some(0));
    assert_eq!(aec(&["qfa", "extract", path(&q), "-o", path(&back)]).status.code(), Some(0));
    let o = aec(&["dfa", "equiv", path(&data("lbb.dfa")), path(&back)]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "equivalent\n");
}

#[test]
fn max_error_of_m2_is_one_third() {
    let o = aec(&["qfa", "max-error", path(&data("m2.qfa")), "--lang", "lj", "2", "--max-len", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("max error = 1/3 ≈ 0.333333333333"));
    let o = aec(&["qfa", "max-error", path(&data("m2.qfa")), "--lang", "lbb", "--max-len", "3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("alphabet mismatch"));
}

#[test]
fn zero_error_check_reports_witness() {
    let o = aec(&["qfa", "zero-error", path(&data("m2.qfa")), "--max-len", "3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("not zero-error: word"));
}

#[test]
fn min_inflow_message_is_bound_qualified() {
    let o = aec(&["oracle", "thm5", "--j", "1", "--max-states", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "min inflow = 2 (bound j+1=2 attained; verified for ≤5 states)\n");
    let o = aec(&["oracle", "min-inflow", "--j", "2", "--max-states", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("holds vacuously"));
}

#[test]
fn oracle_guard_is_enforced() {
    let o = aec(&["oracle", "thm5", "--j", "1", "--max-states", "5", "--guard", "10"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(!stderr(&o).is_empty());
}

#[test]
fn rebalance_then_equiv() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("out.dfa");
    let o = aec(&["dfa", "rebalance", path(&data("big.dfa")), "-o", path(&out)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).is_empty());
    let o = aec(&["dfa", "equiv", path(&data("big.dfa")), path(&out)]);
    assert_eq!(o.status.code(), Some(0));
    let o = aec(&["dfa", "validate", path(&out)]);
    assert!(stdout(&o).contains("max same-symbol in-degree: 3"));
}

#[test]
fn inequivalent_machines_exit_one() {
    let o = aec(&["dfa", "equiv", path(&data("big.dfa")), path(&data("lbb.dfa"))]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("not equivalent: shortest counterexample"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(aec(&["dfa", "validate", "--bogus"]).status.code(), Some(2));
    assert_eq!(aec(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(aec(&["gen", "lbb", "--format", "csv"]).status.code(), Some(2));
    assert_eq!(aec(&["qfa", "max-error", path(&data("m2.qfa")), "--lang", "xyz", "--max-len", "2"]).status.code(), Some(2));
}

#[test]
fn missing_and_malformed_inputs_exit_one() {
    let o = aec(&["dfa", "validate", "/nonexistent/x.dfa"]);
    assert_eq!(o.status.code(), Some(1));
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.dfa");
    std::fs::write(&bad, "alphabet: a\nstates: 2\nstart: 0\naccept:\ntrans: 0 a 1\n").unwrap();
    let o = aec(&["dfa", "validate", path(&bad)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("bad.dfa"));
}

#[test]
fn failure_leaves_no_output_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("never.dfa");
    let o = aec(&["qfa", "extract", path(&data("m2.qfa")), "-o", path(&out)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(!out.exists());
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 0);
}

#[test]
fn output_is_byte_deterministic() {
    let runs = [
        vec!["oracle", "mc", "--len", "50", "--samples", "200", "--seed", "3"],
        vec!["energy", "profile", "--max-len", "6", "--format", "json"],
        vec!["dfa", "rebalance"],
    ];
    for args in runs {
        let mut full: Vec<&str> = args.clone();
        let file = data("big.dfa");
        full.insert(2, path(&file));
        let a = aec(&full);
        let b = aec(&full);
        let mut threaded = vec!["--threads", "3"];
        threaded.extend(&full);
        let c = aec(&threaded);
        assert_eq!(a.status.code(), Some(0), "{full:?}: {}", stderr(&a));
        assert_eq!(a.stdout, b.stdout);
        assert_eq!(a.stdout, c.stdout);
    }
}

#[test]
fn min_inflow_is_deterministic_across_thread_counts() {
    let a = aec(&["--threads", "1", "oracle", "thm5", "--j", "1", "--max-states", "4", "--format", "json"]);
    let b = aec(&["--threads", "4", "oracle", "thm5", "--j", "1", "--max-states", "4", "--format", "json"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn generators_produce_loadable_machines() {
    let dir = tempfile::tempdir().unwrap();
    let lj = dir.path().join("l3.dfa");
    let mj = dir.path().join("m3.qfa");
    assert_eq!(aec(&["gen", "lj", "--j", "3", "-o", path(&lj)]).status.code(), Some(0));
    assert_eq!(aec(&["qfa", "gen-mj", "--j", "3", "-o", path(&mj)]).status.code(), Some(0));
    assert_eq!(aec(&["dfa", "validate", path(&lj)]).status.code(), Some(0));
    let o = aec(&["qfa", "validate", path(&mj)]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let o = aec(&["qfa", "max-error", path(&mj), "--lang", "lj", "3", "--max-len", "4"]);
    assert!(stdout(&o).starts_with("max error = 2/5 ≈ 0.400000000000"));
}

#[test]
fn brute_force_energy_oracle_agrees() {
    let o = aec(&["oracle", "energy", path(&data("lbb.dfa")), "--len", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "E(6) = 7.924812503606 (all words enumerated; dynamic program agrees)\n");
}
