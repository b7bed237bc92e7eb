use std::path::PathBuf;
use std::process::{Command, Output};

fn hopfpi(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopfpi"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("hopfpi-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn exponent_of_bahturin() {
    let o = hopfpi(&["exponent", "zoo:bahturin-m2"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("d = 4\n"));
}

#[test]
fn codimension_examples() {
    let o = hopfpi(&["codim", "zoo:point", "--n", "5"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("\nc = 1\n"));
    let o = hopfpi(&["codim", "zoo:nil3", "--n", "3"]);
    assert!(stdout(&o).contains("\nc = 0\n"));
    let o = hopfpi(&["codim", "zoo:ut2", "--n", "4", "--method", "both"]);
    assert!(stdout(&o).contains("\nc = 18\n"));
    assert!(stdout(&o).contains("agree"));
}

#[test]
fn every_zoo_model_passes_check() {
    for name in [
        "point", "nil3", "ut2", "ut3", "m2", "m2-transpose", "m2-ad", "m2-ad12", "bahturin-m2", "qq", "qq-swap",
        "m2-sum-swap",
    ] {
        let o = hopfpi(&["check", &format!("zoo:{name}")]);
        assert!(o.status.success(), "{name}: {}", stderr(&o));
        assert!(stdout(&o).ends_with("status: ok\n"));
    }
}

#[test]
fn output_is_identical_across_thread_counts() {
    let args = ["cochar", "zoo:bahturin-m2", "--n", "4"];
    let one = hopfpi(&[&args[..], &["--threads", "1"]].concat());
    let four = hopfpi(&[&args[..], &["--threads", "4"]].concat());
    let again = hopfpi(&args);
    assert!(one.status.success());
    assert_eq!(one.stdout, four.stdout);
    assert_eq!(one.stdout, again.stdout);
}

#[test]
fn exit_codes() {
    let o = hopfpi(&["exponent", "zoo:nope"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).starts_with("error[UNKNOWN_MODEL]"));

    let o = hopfpi(&["codim", "zoo:m2-ad", "--n", "5"]);
    assert_eq!(o.status.code(), Some(8));
    assert!(stderr(&o).starts_with("error[SIZE_LIMIT]"));

    let o = hopfpi(&["codim", "zoo:ut2", "--n", "3", "--limit-rows", "5"]);
    assert_eq!(o.status.code(), Some(8));

    let path = scratch("bad.model");
    std::fs::write(&path, "hopfpi-model v1\ndim 1\nconst 0 0 0 1\nop s automorphism\nrow 2\nend\n").unwrap();
    let o = hopfpi(&["check", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(4));
    assert!(stderr(&o).starts_with("error[RULE_VIOLATION]"));

    std::fs::write(&path, "hopfpi-model v1\ndim x\n").unwrap();
    let o = hopfpi(&["check", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("line 2, column 5"));

    let o = hopfpi(&["check", "/nonexistent/model"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn model_files_round_trip_through_the_cli() {
    let m = hopfpi_core::model::zoo_model("m2-transpose").unwrap();
    let path = scratch("m2t.model");
    std::fs::write(&path, m.to_text()).unwrap();
    let from_file = hopfpi(&["codim", path.to_str().unwrap(), "--n", "3"]);
    let from_zoo = hopfpi(&["codim", "zoo:m2-transpose", "--n", "3"]);
    assert!(from_file.status.success());
    assert_eq!(from_file.stdout, from_zoo.stdout);
}

#[test]
fn vanishing_reports() {
    let o = hopfpi(&["vanishing", "zoo:m2", "--n", "4"]);
    assert!(stdout(&o).contains("no constrained partitions"));
    let o = hopfpi(&["vanishing", "zoo:ut2", "--n", "5"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("(2,1,1,1): m = 0, e*_T annihilates: yes"));
    assert!(stdout(&o).ends_with("verdict: pass\n"));
}

#[test]
fn growth_writes_csv() {
    let path = scratch("growth.csv");
    let o = hopfpi(&["growth", "zoo:ut2", "--max-n", "5", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    let csv = std::fs::read_to_string(&path).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "n,c,colength,ratio,root,d,flags");
    assert_eq!(lines.len(), 6);
    assert!(lines[3].starts_with("3,6,4,3/1,1.817121,2,"));
    assert!(lines[5].starts_with("5,50,11,,"));
    assert!(stdout(&o).contains("finite window"));
}

#[test]
fn radical_and_decompose() {
    let o = hopfpi(&["radical", "zoo:bahturin-m2"]);
    assert!(stdout(&o).starts_with("dim J = 4\np = 2\nH-invariant: yes\n"));
    let o = hopfpi(&["decompose", "zoo:qq-swap"]);
    assert!(stdout(&o).contains("H-simple components: 1\n  B1 dim 2 = S1 + S2\n"));
}
