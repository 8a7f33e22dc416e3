use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_thinwidth")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

const FAT_TREFOIL: &str = "cup 0\ncup 2\ncup 1\ncap 2\nx+ 1\nx+ 1\nx+ 1\ncap 2\ncap 0\n";

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn two_cable_of_the_trefoil_is_tight() {
    let o = run(&["satellite", "trefoil", "--braid", "index 2; s+ 1", "--json"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["width"], 32);
    assert_eq!(v["bridge"], 4);
    assert_eq!(v["trunk"], 8);
    assert_eq!(v["canonical"]["width"], 32);
    for c in v["checks"].as_array().unwrap() {
        assert_eq!(c["bound"], c["value"], "{c}");
    }
}

#[test]
fn one_strand_pattern_echoes_the_companion() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("k.morse");
    let o = run(&["satellite", "figure-eight", "--braid", "index 1", "--out", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let catalog = run(&["search", "figure-eight", "--iters", "0", "--out", dir.path().join("j.morse").to_str().unwrap()]);
    assert_eq!(code(&catalog), 0);
    assert_eq!(fs::read_to_string(&out).unwrap(), fs::read_to_string(dir.path().join("j.morse")).unwrap());
}

#[test]
fn braid_file_and_foliation_output() {
    let dir = tempfile::tempdir().unwrap();
    let braid = write(dir.path(), "p.braid", "index 3\ns+ 1\ns- 2\n");
    let fol = dir.path().join("t.fol");
    let o = run(&["satellite", "trefoil", "--braid", &braid, "--site", "1", "--fol", fol.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("width   72"));
    assert!(!fs::read_to_string(fol).unwrap().is_empty());
}

#[test]
fn link_patterns_and_bad_sites_are_domain_errors() {
    assert_eq!(code(&run(&["satellite", "trefoil", "--braid", "index 2"])), 3);
    assert_eq!(code(&run(&["satellite", "trefoil", "--braid", "index 2; s+ 1", "--site", "2"])), 3);
    assert_eq!(code(&run(&["satellite", "unknot", "--braid", "index 2; s+ 1"])), 3);
    assert_eq!(code(&run(&["satellite", "unknot", "--braid", "index 2; s+ 1", "--allow-trivial"])), 0);
}

#[test]
fn malformed_input_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.morse", "cup x\n");
    let o = run(&["invariants", &bad]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 1"));
    let link = write(dir.path(), "link.morse", "cup 0\ncup 2\ncap 2\ncap 0\n");
    assert_eq!(code(&run(&["validate", &link])), 2);
    assert_eq!(code(&run(&["invariants", "no-such-knot"])), 2);
    assert_eq!(code(&run(&["satellite", "trefoil", "--braid", "index 2; s+ 5"])), 2);
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(code(&run(&["frobnicate"])), 1);
    assert_eq!(code(&run(&["satellite", "trefoil"])), 1);
    assert_eq!(code(&run(&["--help"])), 0);
}

#[test]
fn search_recovers_the_thin_trefoil() {
    let dir = tempfile::tempdir().unwrap();
    let fat = write(dir.path(), "fat.morse", FAT_TREFOIL);
    let trace = dir.path().join("trace.log");
    let o = run(&["search", &fat, "--seed", "1", "--iters", "5000", "--json", "--trace", trace.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["initial_width"], 18);
    assert_eq!(v["width"], 8);
    let log = fs::read_to_string(trace).unwrap();
    assert!(!log.is_empty());
    assert!(log.lines().all(|l| l.starts_with("iter ") && l.contains(" width ") && l.contains(" move ")));
}

#[test]
fn zero_iterations_echo_the_input() {
    let dir = tempfile::tempdir().unwrap();
    let fat = write(dir.path(), "fat.morse", FAT_TREFOIL);
    let out = dir.path().join("out.morse");
    let o = run(&["search", &fat, "--iters", "0", "--out", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert_eq!(fs::read_to_string(out).unwrap(), FAT_TREFOIL);
}

#[test]
fn search_below_the_satellite_floor_is_internal() {
    assert_eq!(code(&run(&["search", "trefoil", "--winding", "2", "--iters", "10"])), 4);
}

#[test]
fn sweep_finds_a_witness_and_writes_graphs() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&["sweep", "trefoil", "--braid", "index 2; s+ 1", "--dot-dir", dir.path().to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let witness = text.lines().last().unwrap();
    assert!(witness.starts_with("witness level") && witness.ends_with("4 endpoints, 8 points >= 8"), "{witness}");
    assert!(!text.contains("FAIL"));
    let dots = fs::read_dir(dir.path()).unwrap().count();
    assert_eq!(dots, text.lines().count() - 2);
    assert!(fs::read_to_string(dir.path().join("level_000.dot")).unwrap().starts_with("graph"));
}

#[test]
fn sweep_of_an_unknot_companion_has_no_witness() {
    let o = run(&["sweep", "unknot", "--allow-trivial", "--braid", "index 2; s+ 1"]);
    assert_eq!(code(&o), 3);
    assert!(String::from_utf8_lossy(&o.stderr).contains("three or more endpoints"));
}

#[test]
fn output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let fat = write(dir.path(), "fat.morse", FAT_TREFOIL);
    for args in [
        vec!["search", fat.as_str(), "--seed", "7", "--chains", "3", "--iters", "2000", "--json"],
        vec!["sweep", "figure-eight", "--braid", "index 3; s+ 1; s+ 2", "--json"],
        vec!["invariants", "trefoil"],
        vec!["catalog", "list", "--json"],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert_eq!(code(&a), 0, "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn search_leaves_the_canonical_cable_at_the_floor() {
    let dir = tempfile::tempdir().unwrap();
    let cable = dir.path().join("cable.morse");
    let o = run(&["satellite", "trefoil", "--braid", "index 2; s+ 1", "--out", cable.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let o = run(&["search", cable.to_str().unwrap(), "--winding", "2", "--iters", "3000", "--chains", "2", "--json"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["width"], 32);
}
