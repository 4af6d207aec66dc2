use std::fs;
use std::process::{Command, Output};

fn blocklab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_blocklab"))
        .args(args)
        .env_remove("BLOCKLAB_CACHE")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_prints_one_line() {
    let dir = tempfile::tempdir().unwrap();
    let spec = dir.path().join("a5.grp");
    fs::write(&spec, "name A5\ndegree 5\ngen (1 2 3 4 5)\ngen (3 4 5)\n").unwrap();
    let o = blocklab(&["verify", spec.to_str().unwrap(), "-p", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "A5 p=5 k0s=4 bound=4 EQUALITY [i✓ ii✓ iii✓]\n");
}

#[test]
fn verify_json_fields() {
    let o = blocklab(&["verify", "Sym(4)", "-p", "2", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["verdict"], "strict");
    assert_eq!(v["k0_sigma"], 4);
    assert_eq!(v["cond_ii"], false);
    assert_eq!(v["consistent"], true);
}

#[test]
fn table_and_blocks() {
    let o = blocklab(&["table", "Alt(5)"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("5 classes"));
    let o = blocklab(&["blocks", "Alt(5)", "-p", "5"]);
    assert!(stdout(&o).contains("k0s(B0) = 4"));
}

#[test]
fn cyclic_defect_reports_counts() {
    let o = blocklab(&["cyclic-defect", "PSL2(7)", "-p", "7", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["global"]["block_size"], 5);
    assert_eq!(v["local"]["block_size"], 5);
    assert_eq!(v["inertial_index"], 3);
}

#[test]
fn parse_errors_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let spec = dir.path().join("bad.grp");
    fs::write(&spec, "name X\ndegree 3\ngen (1 2 2)\n").unwrap();
    let o = blocklab(&["table", spec.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3, column 10"));
    assert_eq!(blocklab(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(blocklab(&["verify", "Frobenius(7,4)", "-p", "7"]).status.code(), Some(1));
}

#[test]
fn empty_corpus_sweep() {
    let dir = tempfile::tempdir().unwrap();
    let o = blocklab(&["sweep", "--corpus", dir.path().to_str().unwrap(), "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["instances"], 0);
}

#[test]
fn oversized_group_exits_three() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("a5.grp"), "name A5\nconstruct Alt(5)\n").unwrap();
    fs::write(dir.path().join("s8.grp"), "name S8\nconstruct Sym(8)\n").unwrap();
    let o = blocklab(&["sweep", "--corpus", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    let text = stdout(&o);
    assert!(text.contains("A5 p=5 k0s=4"));
    assert!(text.contains("S8 p=2 ERROR resource limit exceeded"));
}

#[test]
fn sweep_filters_and_cache() {
    let dir = tempfile::tempdir().unwrap();
    let cache = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("a5.grp"), "name A5\nconstruct Alt(5)\n").unwrap();
    fs::write(dir.path().join("s4.grp"), "name S4\nconstruct Sym(4)\n").unwrap();
    let corpus = dir.path().to_str().unwrap();
    let o = blocklab(&["sweep", "--corpus", corpus, "--prime", "2", "--max-order", "30"]);
    assert_eq!(stdout(&o).lines().count(), 2);
    assert!(stdout(&o).starts_with("S4 p=2"));
    let args = ["sweep", "--corpus", corpus, "--json", "--jobs", "2", "--cache", cache.path().to_str().unwrap()];
    let cold = blocklab(&args);
    let warm = blocklab(&args);
    assert_eq!(cold.stdout, warm.stdout);
    assert!(String::from_utf8_lossy(&warm.stderr).contains("2 hits, 0 misses"));
    assert_eq!(blocklab(&["sweep", "--corpus", corpus, "--json"]).stdout, cold.stdout);
}

#[test]
fn orbits_from_module_file() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("c3.mod");
    fs::write(&f, "p 5\ndim 2\nmat 0 1 4 4\n").unwrap();
    let o = blocklab(&["orbits", "--module", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("p=5 dim=2 |H|=3 orbits=9 nonzero=8"));
}
