//! Runs the `oddcut` binary against small files and checks stdout, stderr
//! and exit status.

use std::path::{Path, PathBuf};
use std::process::Command;

use tempfile::TempDir;

struct Run {
    stdout: String,
    stderr: String,
    code: i32,
}

struct Files(TempDir);

impl Files {
    fn new() -> Self {
        Files(tempfile::tempdir().unwrap())
    }

    fn put(&self, name: &str, text: &str) -> PathBuf {
        let path = self.0.path().join(name);
        std::fs::write(&path, text).unwrap();
        path
    }
}

fn oddcut(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_oddcut")).args(args).output().unwrap();
    Run {
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
        code: out.status.code().unwrap(),
    }
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

const SIX: &str = "p bmatch 6 6 tsp
v 1
v 2
v 3
v 4
v 5
v 6
e 1 1 2
e 2 2 3
e 3 1 3
e 4 1 4
e 5 2 5
e 6 3 6
";

const SIX_X: &str = "x 1 1/2\nx 2 0.5\nx 3 1/2\nx 4 1\nx 5 1\nx 6 1\n";

#[test]
fn six_vertex_example_reports_the_blossom() {
    let f = Files::new();
    let inst = f.put("six.txt", SIX);
    let x = f.put("six.x", SIX_X);
    let r = oddcut(&["separate", path(&inst), path(&x), "--oracle-check", "--count-maxflows"]);
    assert_eq!(r.code, 1, "{}", r.stderr);
    assert_eq!(
        r.stdout,
        "BLOSSOM W={1,2,3} F={4,5,6} lhs=9/2 rhs=4 violation=1/2 beta=0\nMAXFLOWS 6\n"
    );
    assert_eq!(r.stderr, "ORACLE ok\n");
}

#[test]
fn same_example_as_capacitated_file() {
    let f = Files::new();
    let text = "p bmatch 6 6 cap\nv 1 2\nv 2 2\nv 3 2\nv 4 2\nv 5 2\nv 6 2\n\
        e 1 1 2 1\ne 2 2 3 1\ne 3 1 3 1\ne 4 1 4 1\ne 5 2 5 1\ne 6 3 6 1\n";
    let inst = f.put("six.txt", text);
    let x = f.put("six.x", SIX_X);
    let r = oddcut(&["separate", path(&inst), path(&x), "--mode", "cap"]);
    assert_eq!(r.code, 1);
    assert!(r.stdout.starts_with("BLOSSOM W={1,2,3} F={4,5,6} "), "{}", r.stdout);
}

#[test]
fn integral_matching_is_feasible() {
    let f = Files::new();
    let inst = f.put("i.txt", "p bmatch 4 3 cap\nv 0 1\nv 1 1\nv 2 1\nv 3 1\ne 0 0 1 1\ne 1 1 2 1\ne 2 2 3 1\n");
    let x = f.put("i.x", "x 0 1\nx 2 1\n");
    let r = oddcut(&["separate", path(&inst), path(&x), "--oracle-check"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stdout.starts_with("FEASIBLE beta="), "{}", r.stdout);
    assert_eq!(r.stderr, "ORACLE ok\n");
}

#[test]
fn single_edge_has_minimum_beta_one() {
    let f = Files::new();
    let inst = f.put("k2.txt", "p bmatch 2 1 cap\nv 0 1\nv 1 1\ne 0 0 1 1\n");
    let x = f.put("k2.x", "x 0 0.6\n");
    let r = oddcut(&["separate", path(&inst), path(&x)]);
    assert_eq!(r.code, 0);
    assert_eq!(r.stdout, "FEASIBLE beta=1\n");
}

#[test]
fn uncapacitated_triangle() {
    let f = Files::new();
    let inst = f.put("t.txt", "p bmatch 3 3 uncap\nv 1 1\nv 2 1\nv 3 1\ne 0 1 2\ne 1 2 3\ne 2 1 3\n");
    let x = f.put("t.x", "x 0 1/2\nx 1 1/2\nx 2 1/2\n");
    let r = oddcut(&["separate", path(&inst), path(&x), "--oracle-check"]);
    assert_eq!(r.code, 1);
    assert_eq!(r.stdout, "BLOSSOM W={1,2,3} F={} lhs=3/2 rhs=1 violation=1/2 beta=0\n");
}

#[test]
fn linear_violations_are_reported_first() {
    let f = Files::new();
    let inst = f.put("l.txt", "p bmatch 3 2 cap\nv 0 1\nv 1 1\nv 2 1\ne 7 0 1 1\ne 8 1 2 1\n");
    let x = f.put("l.x", "x 7 3/2\nx 8 1/2\n");
    let r = oddcut(&["separate", path(&inst), path(&x), "--count-maxflows"]);
    assert_eq!(r.code, 1);
    assert_eq!(
        r.stdout,
        "DEGREE i=0 lhs=3/2 b=1 violation=1/2\nDEGREE i=1 lhs=2 b=1 violation=1\nBOUND e=7 x=3/2 u=1 violation=1/2\nMAXFLOWS 0\n"
    );
}

#[test]
fn malformed_point_line_is_an_input_error() {
    let f = Files::new();
    let inst = f.put("six.txt", SIX);
    let x = f.put("bad.x", "x 1 1/2\nx 2 half\n");
    let r = oddcut(&["separate", path(&inst), path(&x)]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("line 2"), "{}", r.stderr);
}

#[test]
fn input_errors_exit_with_two() {
    let f = Files::new();
    let inst = f.put("six.txt", SIX);
    let x = f.put("six.x", SIX_X);
    let r = oddcut(&["separate", path(&inst), path(&x), "--mode", "cap"]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("mode mismatch"), "{}", r.stderr);

    let bad = f.put("bad.txt", "p bmatch 2 1 cap\nv 0 1\nv 1 1\ne 0 0 5 1\n");
    let r = oddcut(&["separate", path(&bad), path(&x)]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("line 4"), "{}", r.stderr);

    let r = oddcut(&["separate", "/nonexistent/file", path(&x)]);
    assert_eq!(r.code, 2);
    let r = oddcut(&["separate", path(&inst)]);
    assert_eq!(r.code, 2);
}

#[test]
fn count_maxflows_matches_vertex_count() {
    let f = Files::new();
    let inst = f.put("p.txt", "p bmatch 5 4 cap\nv 0 2\nv 1 2\nv 2 2\nv 3 2\nv 4 2\ne 0 0 1 1\ne 1 1 2 1\ne 2 2 3 1\ne 3 3 4 1\n");
    let x = f.put("p.x", "x 0 1/3\nx 2 1\n");
    let r = oddcut(&["separate", path(&inst), path(&x), "--count-maxflows"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.ends_with("MAXFLOWS 5\n"), "{}", r.stdout);
}

#[test]
fn gomory_hu_examples() {
    let f = Files::new();
    let k2 = f.put("k2.g", "e 0 a b 7/3\n");
    let r = oddcut(&["gomory-hu", path(&k2), "--count-maxflows", "--oracle-check"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.stdout, "t a b 7/3\npi a a\npi b b\nMAXFLOWS 1\n");
    assert_eq!(r.stderr, "ORACLE ok\n");

    let path3 = f.put("p.g", "e 0 a b 2\ne 1 b c 1\n");
    let r = oddcut(&["gomory-hu", path(&path3)]);
    assert_eq!(r.code, 0);
    let mut values: Vec<&str> = r
        .stdout
        .lines()
        .filter(|l| l.starts_with("t "))
        .map(|l| l.rsplit(' ').next().unwrap())
        .collect();
    values.sort();
    assert_eq!(values, vec!["1", "2"]);

    let tri = f.put("t.g", "e 0 a b 1\ne 1 b c 1\ne 2 a c 1\n");
    let r = oddcut(&["gomory-hu", path(&tri), "-X", "a,b", "--oracle-check"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.starts_with("t a b 2\n"), "{}", r.stdout);
    assert_eq!(r.stdout.lines().filter(|l| l.starts_with("t ")).count(), 1);
    assert!(r.stdout.contains("pi c "));
}

#[test]
fn gomory_hu_errors() {
    let f = Files::new();
    let g = f.put("g.g", "e 0 a b 1\ne 1 b c x\n");
    let r = oddcut(&["gomory-hu", path(&g)]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("line 2"), "{}", r.stderr);
    let g = f.put("h.g", "e 0 a b 1\n");
    let r = oddcut(&["gomory-hu", path(&g), "-X", "a,z"]);
    assert_eq!(r.code, 2);
    let empty = f.put("e.g", "");
    let r = oddcut(&["gomory-hu", path(&empty)]);
    assert_eq!(r.code, 2);
}

#[test]
fn tcut_examples() {
    let f = Files::new();
    let k2 = f.put("k2.g", "e 0 a b 5\n");
    let r = oddcut(&["tcut", path(&k2), "-T", "a,b", "--oracle-check"]);
    assert_eq!((r.code, r.stdout.as_str()), (0, "TCUT U={a} value=5\n"));

    let p3 = f.put("p3.g", "e 0 a b 1\ne 1 b c 5\n");
    let r = oddcut(&["tcut", path(&p3), "-T", "a,c", "--oracle-check"]);
    assert_eq!((r.code, r.stdout.as_str()), (0, "TCUT U={a} value=1\n"));

    let p4 = f.put("p4.g", "e 0 a b 3\ne 1 b c 1\ne 2 c d 3\n");
    let r = oddcut(&["tcut", path(&p4), "-T", "a,b,c,d", "--oracle-check", "--count-maxflows"]);
    assert_eq!(r.code, 0);
    assert!(
        r.stdout.starts_with("TCUT U={a} value=3\n") || r.stdout.starts_with("TCUT U={d} value=3\n"),
        "{}",
        r.stdout
    );
    assert!(r.stdout.ends_with("MAXFLOWS 3\n"));
    assert_eq!(r.stderr, "ORACLE ok\n");
}

#[test]
fn tcut_rejects_odd_terminal_sets() {
    let f = Files::new();
    let p3 = f.put("p3.g", "e 0 a b 1\ne 1 b c 5\n");
    let r = oddcut(&["tcut", path(&p3), "-T", "a,b,c"]);
    assert_eq!(r.code, 2);
    let r = oddcut(&["tcut", path(&p3)]);
    assert_eq!(r.code, 2);
}
