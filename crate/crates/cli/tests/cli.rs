use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn sbrep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sbrep"))
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

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

struct Dir(TempDir);

impl Dir {
    fn new() -> Self {
        Dir(TempDir::new().unwrap())
    }

    fn file(&self, name: &str, text: &str) -> String {
        let p = self.0.path().join(name);
        fs::write(&p, text).unwrap();
        p.to_str().unwrap().to_string()
    }

    fn path(&self, name: &str) -> PathBuf {
        self.0.path().join(name)
    }
}

fn read(p: &Path) -> String {
    fs::read_to_string(p).unwrap()
}

const EXAMPLE_D: &str = "hc 4\nb 1 2 3\nb 2 3 4\nb 1 4\n";
const U24: &str = "hc 4\nb 1 2\nb 1 3\nb 1 4\nb 2 3\nb 2 4\nb 3 4\n";

fn oxley() -> String {
    let mut text = "hc 6\n".to_string();
    for a in 1..=6 {
        for b in a + 1..=6 {
            for c in b + 1..=6 {
                if [a, b, c] != [1, 2, 3] && [a, b, c] != [1, 3, 4] {
                    text += &format!("b {a} {b} {c}\n");
                }
            }
        }
    }
    text
}

#[test]
fn check_reports_axioms() {
    let d = Dir::new();
    let o = sbrep(&["check", &d.file("d.hc", EXAMPLE_D)]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.starts_with("PR=yes\nBR=no\nMT=no\n"), "{out}");
    assert!(out.contains("rank=3\nbases=3\n"));

    let o = sbrep(&["check", &d.file("ox.hc", &oxley())]);
    assert!(stdout(&o).starts_with("PR=yes\nBR=yes\nMT=no\n"), "{}", stdout(&o));

    let o = sbrep(&["check", &d.file("u.hc", U24)]);
    assert_eq!(
        stdout(&o),
        "PR=yes\nBR=yes\nMT=yes\nEP=yes\nDEP=yes\nSEP=yes\nrank=2\nbases=6\n"
    );
}

#[test]
fn check_guards_large_ground_sets() {
    let d = Dir::new();
    let f = d.file("big.hc", "hc 17\nb 1\n");
    let o = sbrep(&["check", &f]);
    assert_eq!(code(&o), 2);
    assert_eq!(code(&sbrep(&["check", "--force", &f])), 0);
}

#[test]
fn parse_errors_exit_two() {
    let d = Dir::new();
    for (name, text) in [
        ("a.hc", "hc 3\nb 1 4\n"),
        ("b.hc", "hc 3\nb 1 2\nb 1\n"),
        ("c.hc", "hx 3\nb 1\n"),
    ] {
        let o = sbrep(&["check", &d.file(name, text)]);
        assert_eq!(code(&o), 2, "{text}");
        assert!(stderr(&o).contains("error"));
    }
    assert_eq!(code(&sbrep(&["rank", &d.file("m.sb", "sb 1 2\n1 x\n")])), 2);
    assert_eq!(code(&sbrep(&["check", "/nonexistent/file.hc"])), 2);
    assert_eq!(code(&sbrep(&["frobnicate"])), 2);
}

#[test]
fn rank_of_matrices() {
    let d = Dir::new();
    let o = sbrep(&["rank", &d.file("a.sb", "sb 2 2\n1 1\n1 1\n")]);
    assert_eq!(stdout(&o), "rank=1\npermanent=v\n");
    let o = sbrep(&["rank", &d.file("b.sb", "sb 2 3\n1 0 v\n0 1 1\n")]);
    assert_eq!(stdout(&o), "rank=2\n");
    let o = sbrep(&["rank", &d.file("c.gf", "gf 3 2 2\n1 2\n2 1\n")]);
    assert_eq!(stdout(&o), "rank=1\ndeterminant=0\n");
}

#[test]
fn represent_writes_verified_matrices() {
    let d = Dir::new();
    let hc = d.file("two.hc", "hc 3\nb 1 2\nb 1 3\n");
    let out = d.path("two.sb");
    let o = sbrep(&["represent", &hc, "--out", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let text = read(&out);
    assert!(text.starts_with("sb 4 3\n"), "{text}");
    let o = sbrep(&["verify", out.to_str().unwrap(), &hc]);
    assert_eq!((code(&o), stdout(&o)), (0, "verified\n".to_string()));

    let u23 = d.file("u23.hc", "hc 3\nb 1 2\nb 1 3\nb 2 3\n");
    let o = sbrep(&["represent", "--from", "circuits", &u23]);
    assert_eq!(stdout(&o), "sb 3 3\n1 v 0\n0 1 v\nv 0 1\n");

    let empty = d.file("e.hc", "hc 3\nb\n");
    let o = sbrep(&["represent", &empty]);
    assert_eq!(stdout(&o), "sb 1 3\nv v v\n");

    let o = sbrep(&["represent", "--from", "circuits", &d.file("d.hc", EXAMPLE_D)]);
    assert_eq!(code(&o), 2);
}

#[test]
fn verify_mismatch_exits_one() {
    let d = Dir::new();
    let hc = d.file("u23.hc", "hc 3\nb 1 2\nb 1 3\nb 2 3\n");
    let id = d.file("id.sb", "sb 3 3\n1 0 0\n0 1 0\n0 0 1\n");
    let o = sbrep(&["verify", &id, &hc]);
    assert_eq!(code(&o), 1);
    assert!(stderr(&o).contains("{1,2,3}"), "{}", stderr(&o));
    let narrow = d.file("n.sb", "sb 1 2\n1 1\n");
    assert_eq!(code(&sbrep(&["verify", &narrow, &hc])), 2);
}

#[test]
fn examples_write_self_consistent_files() {
    let d = Dir::new();
    let dir = d.path("out");
    let dir_s = dir.to_str().unwrap();
    for args in [vec!["fano"], vec!["nonfano"], vec!["mk4"], vec!["w3"], vec!["k4"], vec!["u", "2", "4"]] {
        let mut full = vec!["examples"];
        full.extend(&args);
        full.extend(["--out", dir_s]);
        let o = sbrep(&full);
        assert_eq!(code(&o), 0, "{args:?}: {}", stderr(&o));
    }
    assert!(read(&dir.join("fano.a7.gf")).starts_with("gf 2 3 7\n"));
    assert!(read(&dir.join("fano.boolean.sb")).starts_with("sb 5 7\n"));
    assert_eq!(read(&dir.join("u-2-4.matrix.sb")), "sb 3 4\n0 1 1 1\n1 0 1 1\n1 1 0 1\n");
    for (m, h) in [
        ("fano.boolean.sb", "fano.hc"),
        ("fano.a7.gf", "fano.hc"),
        ("nonfano.a7.gf", "nonfano.hc"),
        ("mk4.matrix.sb", "mk4.hc"),
        ("k4.incidence.sb", "k4.hc"),
    ] {
        let o = sbrep(&["verify", dir.join(m).to_str().unwrap(), dir.join(h).to_str().unwrap()]);
        assert_eq!(code(&o), 0, "{m}");
    }
    let o = sbrep(&["verify", dir.join("fano.a7.gf").to_str().unwrap(), dir.join("nonfano.hc").to_str().unwrap()]);
    assert_eq!(code(&o), 1);
    let o = sbrep(&["graphic", dir.join("k4.graph").to_str().unwrap()]);
    assert_eq!(stdout(&o), read(&dir.join("k4.hc")));
    assert!(stderr(&o).contains("yes"));
    assert_eq!(code(&sbrep(&["examples", "dodecahedron", "--out", dir_s])), 2);
}

#[test]
fn boolean_from_field_and_direct_sum() {
    let d = Dir::new();
    let gf = d.file("a.gf", "gf 2 3 7\n1 0 0 1 1 0 1\n0 1 0 1 0 1 1\n0 0 1 0 1 1 1\n");
    let out = d.path("b.sb");
    let o = sbrep(&["boolean-from-field", &gf, "--reduce", "--out", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert!(!read(&out).contains('v'));
    let o = sbrep(&["rank", out.to_str().unwrap()]);
    assert!(stdout(&o).starts_with("rank=3\n"));

    let a = d.file("x.sb", "sb 1 2\n1 1\n");
    let b = d.file("y.sb", "sb 2 1\n1\n0\n");
    let o = sbrep(&["direct-sum", &a, &b]);
    assert_eq!(stdout(&o), "sb 3 3\n1 1 0\n0 0 1\n0 0 0\n");
    let ghost = d.file("g.sb", "sb 1 1\nv\n");
    assert_eq!(code(&sbrep(&["direct-sum", &a, &ghost])), 2);
    assert_eq!(code(&sbrep(&["direct-sum", &a])), 2);
}

#[test]
fn dual_and_minor() {
    let d = Dir::new();
    let f = d.file("d.hc", EXAMPLE_D);
    let o = sbrep(&["dual", &f]);
    assert_eq!(stdout(&o), "hc 4\nb 1\nb 2 3\nb 4\n");
    let o = sbrep(&["minor", &f, "--delete", "4", "--contract", "1"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert_eq!(stdout(&o), "hc 2\nb 1 2\n");
    assert!(stderr(&o).contains("original 2 3"));
    assert_eq!(code(&sbrep(&["minor", &f, "--delete", "1", "--contract", "1"])), 2);
    assert_eq!(code(&sbrep(&["minor", &f, "--delete", "9"])), 2);
}

#[test]
fn minrows_finds_small_matrices() {
    let d = Dir::new();
    let o = sbrep(&["minrows", &d.file("two.hc", "hc 3\nb 1 2\nb 1 3\n")]);
    let out = stdout(&o);
    assert!(out.starts_with("m=2\nsb 2 3\n"), "{out}");
    let o = sbrep(&["minrows", "--alphabet", "bool", &d.file("u23.hc", "hc 3\nb 1 2\nb 1 3\nb 2 3\n")]);
    assert!(stdout(&o).starts_with("m=2\n"));
    let o = sbrep(&["minrows", &d.file("u11.hc", "hc 1\nb 1\n")]);
    assert_eq!(stdout(&o), "m=1\nsb 1 1\n1\n");
    let o = sbrep(&["minrows", "--cap", "1", &d.file("u23b.hc", "hc 3\nb 1 2\nb 1 3\nb 2 3\n")]);
    assert_eq!(stdout(&o), "none within cap\n");
    assert_eq!(code(&sbrep(&["minrows", "--cap", "5", &d.file("u11b.hc", "hc 1\nb 1\n")])), 2);
    assert_eq!(code(&sbrep(&["minrows", &d.file("big.hc", "hc 6\nb 1\n")])), 2);
}
