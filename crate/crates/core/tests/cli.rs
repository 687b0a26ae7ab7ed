use std::fs;
use std::process::{Command, Output};

fn folkman(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_folkman")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn arrows_on_c5() {
    let o = folkman(&["arrows", "Dhc", "2 2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "true");

    // C6 is bipartite: false, with the partition printed
    let o = folkman(&["arrows", "EhEG", "2,2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("false"));
}

#[test]
fn numbers_and_predicates() {
    assert_eq!(stdout(&folkman(&["omega", "C~"])).trim(), "4");
    assert_eq!(stdout(&folkman(&["alpha", "Dhc"])).trim(), "2");
    assert_eq!(folkman(&["plus-k", "C~", "5"]).status.code(), Some(0));
    // C5 plus any chord makes a triangle
    assert_eq!(folkman(&["plus-k", "Dhc", "3"]).status.code(), Some(0));
    assert_eq!(folkman(&["plus-k", "Dhc", "4"]).status.code(), Some(1));
}

#[test]
fn verify_witness() {
    assert_eq!(folkman(&["verify-witness", "C~", "2 2", "3"]).status.code(), Some(1));
    assert_eq!(folkman(&["verify-witness", "Dhc", "2 2", "3"]).status.code(), Some(0));
}

#[test]
fn errors_exit_with_two() {
    assert_eq!(folkman(&["arrows", "Dhc", "2 2", "--bogus"]).status.code(), Some(2));
    assert_eq!(folkman(&["omega", "D?"]).status.code(), Some(2));
    assert_eq!(folkman(&["bound", "value-at-m", "5"]).status.code(), Some(2));
    assert_eq!(folkman(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn canon_dedups_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c5.g6");
    // two labelings of C5 and one path
    let shifted = folkman::Graph::cycle(5).unwrap().permute(&[2, 0, 4, 1, 3]).to_graph6();
    fs::write(&path, format!("Dhc\n{shifted}\n{}\n", folkman::Graph::path(5).unwrap().to_graph6())).unwrap();
    let o = folkman(&["canon", path.to_str().unwrap(), "--dedup"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 2);
    let o = folkman(&["canon", path.to_str().unwrap()]);
    let lines: Vec<String> = stdout(&o).lines().map(String::from).collect();
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[0], lines[1]);
}

#[test]
fn extend_from_files() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("k6.g6");
    fs::write(&input, format!("{}\n", folkman::Graph::complete(6).unwrap().to_graph6())).unwrap();
    let output = dir.path().join("h4.g6");
    let o = folkman(&[
        "extend",
        "--spec",
        "4;8;8;2;3",
        "--input",
        input.to_str().unwrap(),
        "--algorithm",
        "1",
        "--output",
        output.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(fs::read_to_string(&output).unwrap().lines().count(), 1);
    assert!(dir.path().join("h4.g6.manifest").exists());
    // algorithm 2 without a second input is an error
    let o = folkman(&["extend", "--spec", "4;8;8;2;3", "--input", input.to_str().unwrap(), "--algorithm", "2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bound_subcommands() {
    assert_eq!(folkman(&["bound", "exists", "2 2 7", "8"]).status.code(), Some(0));
    assert_eq!(folkman(&["bound", "exists", "2 2 7", "7"]).status.code(), Some(1));
    let o = folkman(&["bound", "value-at-m", "2 3"]);
    assert!(stdout(&o).contains("= 7"));
    let o = folkman(&["bound", "same-m-p", "9", "7"]);
    assert_eq!(stdout(&o).lines().collect::<Vec<_>>(), vec!["(2, 2, 7)", "(3, 7)"]);
    assert_eq!(stdout(&folkman(&["bound", "alpha-bound", "2 2 7", "19"])).trim(), "alpha <= 3");
    let o = folkman(&["bound", "composite", "7 7", "--alpha", "6=3"]);
    assert!(stdout(&o).contains(">= 29"), "{}", stdout(&o));
    assert_eq!(stdout(&folkman(&["bound", "project", "2", "20", "6"])).trim(), "24");
    assert_eq!(folkman(&["bound", "project", "3", "20", "2"]).status.code(), Some(2));
    assert!(stdout(&folkman(&["bound", "registry"])).contains("R(3, 5) = 14"));
}

#[test]
fn pipeline_and_certificate() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("p.toml");
    fs::write(
        &cfg,
        "output_dir = \"out\"\n[[base]]\nid = \"h22_3_4\"\nkind = \"exhaustive\"\na = [2, 2]\nq = 3\nn = 4\nt = 4\n",
    )
    .unwrap();
    let cfg = cfg.to_str().unwrap();
    assert_eq!(folkman(&["pipeline", cfg, "--check"]).status.code(), Some(0));
    let o = folkman(&["pipeline", cfg]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("H(2, 2; 3; 4)"));
    let o = folkman(&["pipeline", cfg, "--kv"]);
    assert!(stdout(&o).contains("maximal = 0"));
    assert!(stdout(&o).contains("resumed = true"));

    let reports = dir.path().join("out");
    let o = folkman(&["bound", "certificate", "2 2", "3", "4", "--reports", reports.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains(">= 5"));
    let o = folkman(&["bound", "certificate", "2 2", "3", "5", "--reports", reports.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));

    let bad = dir.path().join("bad.toml");
    fs::write(&bad, "[[step]]\nid = \"x\"\nalgorithm = 1\ninput = \"nope\"\na = [4]\nq = 8\nn = 8\nr = 2\nt = 3\n").unwrap();
    assert_eq!(folkman(&["pipeline", bad.to_str().unwrap()]).status.code(), Some(2));
}
