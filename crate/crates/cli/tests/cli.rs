use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use tempfile::TempDir;

const EDGELESS_3: &str = r#"{"vertices":["1","2","3"],"edges":[]}"#;
const PATH_4: &str = r#"{"vertices":["1","2","3","4"],"edges":[["1","2"],["2","3"],["3","4"]]}"#;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_raag-paut"));
    c.env("RAAG_PAUT_LOG", "quiet");
    c
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn sil_pairs_and_slink() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "e3.json", EDGELESS_3);
    let o = run(&["sil-pairs", g.to_str().unwrap()]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "1 2: {3}\n1 3: {2}\n2 3: {1}\n");
    let p = write(&dir, "p4.json", PATH_4);
    let o = run(&["slink", p.to_str().unwrap(), "2"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("sst(2) = "));
}

#[test]
fn presentation_formats() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "e3.json", EDGELESS_3);
    let plain = stdout(&run(&["presentation", g.to_str().unwrap()]));
    assert!(plain.starts_with("# presentation: 6 generators, 9 relators"));
    assert_eq!(plain.matches("sil-iii:").count(), 6);
    let cas = stdout(&run(&["presentation", "--format", "cas", g.to_str().unwrap()]));
    assert!(cas.contains("FreeGroup(") && cas.contains("G := F / rels;;"));
}

#[test]
fn arrow_diagram_dot() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "e3.json", EDGELESS_3);
    let dot = dir.path().join("a.dot");
    let o = run(&["arrow-diagram", g.to_str().unwrap(), "--dot", dot.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("6 vertices, 3 edges, 6 arrows, 3 dual pairs"));
    let text = fs::read_to_string(&dot).unwrap();
    assert!(text.contains("->"));
}

#[test]
fn rho_commands() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "e3.json", EDGELESS_3);
    let o = run(&["rho", g.to_str().unwrap()]);
    assert_eq!(stdout(&o).lines().count(), 6);
    let o = run(&["rho-eval", g.to_str().unwrap(), "--word", "c[1|{2}] c[1|{2}]^-1"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(stdout(&o).trim(), "[1] (1, 1) (1, 1) (1, 1)");
    let o = run(&["verify-rho", g.to_str().unwrap()]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).matches(" pass").count(), 3);
}

#[test]
fn hat_commands() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "p4.json", PATH_4);
    let o = run(&["hat-gamma", p.to_str().unwrap()]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["phi"].as_array().unwrap().len() >= 2);
    assert!(run(&["verify-hat", p.to_str().unwrap()]).status.success());
    let g = write(&dir, "e3.json", EDGELESS_3);
    assert_eq!(run(&["hat-gamma", g.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn gadget_commands() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "e3.json", EDGELESS_3);
    let o = run(&["gadget", "embed", g.to_str().unwrap(), "--u", "1", "--v", "2", "--C", "{3}", "--w", "3"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).matches(" pass").count(), 6);
    let o = run(&["gadget", "embed", g.to_str().unwrap(), "--u", "1", "--v", "2", "--C", "{2}", "--w", "2"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&[
        "--format", "json", "gadget", "matrix", "--A", "[[1,2],[0,1]]", "--B", "[[1,0],[2,1]]", "--D", "[[1,0],[0,1]]",
        "--M", "[[0,1],[1,0]]",
    ]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("\"t\"") && !text.contains("false"));
}

#[test]
fn verify_exit_codes_and_determinism() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "e3.json", EDGELESS_3);
    let p = write(&dir, "p4.dot", "graph { 1 -- 2 -- 3 -- 4 }");
    let args = ["--format", "json", "verify", g.to_str().unwrap(), p.to_str().unwrap(), "--jobs", "2"];
    let a = run(&args);
    assert!(a.status.success());
    let strip = |o: &Output| {
        let mut v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        for r in v.as_array_mut().unwrap() {
            r.as_object_mut().unwrap().remove("millis");
            for c in r["checks"].as_array_mut().unwrap() {
                c.as_object_mut().unwrap().remove("millis");
            }
        }
        v
    };
    assert_eq!(strip(&a), strip(&run(&args)));
    let bad = write(&dir, "bad.json", r#"{"vertices":["1"],"edges":[["1","1"]]}"#);
    assert_eq!(run(&["verify", bad.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(run(&["verify", g.to_str().unwrap(), "--checks", "nope"]).status.code(), Some(2));
}

#[test]
fn corpus_and_apply() {
    let dir = TempDir::new().unwrap();
    let o = run(&["corpus", "--min-vertices", "3", "--max-vertices", "3"]);
    assert_eq!(stdout(&o).lines().count(), 8);
    let out = dir.path().join("c");
    let o = run(&["corpus", "--mode", "random", "--min-vertices", "5", "--max-vertices", "6", "--count", "5", "--seed", "3",
        "--connected", "--out-dir", out.to_str().unwrap()]);
    assert!(o.status.success());
    assert_eq!(fs::read_dir(&out).unwrap().count(), 5);
    let o = run(&["corpus", "--max-vertices", "4", "--connected", "--verify", "--checks", "kp-soundness,rho-relations"]);
    assert!(o.status.success());
    assert!(stdout(&o).ends_with("42 graphs, 0 failed checks\n"));
    assert_eq!(run(&["corpus", "--max-vertices", "7"]).status.code(), Some(2));
    let g = write(&dir, "e3.json", EDGELESS_3);
    let o = run(&["apply", g.to_str().unwrap(), "--auto", "c[1|{3}]", "--word", "3 2"]);
    assert_eq!(stdout(&o).trim(), "1^-1 3 1 2");
}
