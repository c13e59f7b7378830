//! End-to-end tests of the `ppart` binary: golden stdout, exit codes and
//! byte-identical JSON output.

use std::path::PathBuf;
use std::process::{Command, Output};

fn ppart(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ppart"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("stdout is utf-8")
}

fn write_poset(name: &str, contents: &str) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, contents).expect("tmp dir is writable");
    path
}

#[test]
fn expand_golden() {
    let out = ppart(&["expand", "p", "1,1,2", "--to", "M"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "2*M[1,1,2] + 1*M[2,2]\n");

    let out = ppart(&["expand", "p", "1,2,1", "--to", "F"]);
    assert_eq!(stdout(&out), "-2*F[1,1,2] + 2*F[1,3]\n");

    let out = ppart(&["expand", "p", "e", "--to", "M"]);
    assert_eq!(stdout(&out), "1*M[e]\n");

    let out = ppart(&["expand", "p", "1,1,2", "--to", "M", "--format", "latex"]);
    assert_eq!(stdout(&out), "2M_{112} + M_{22}\n");
}

#[test]
fn expand_exit_codes() {
    // parse error
    let out = ppart(&["expand", "p", "1,x", "--to", "M"]);
    assert_eq!(out.status.code(), Some(2));
    // degree over the default cap
    let out = ppart(&["expand", "p", "4,4", "--to", "M"]);
    assert_eq!(out.status.code(), Some(1));
    // raising the cap admits it
    let out = ppart(&["expand", "p", "4,4", "--to", "M", "--max-degree", "8"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "2*M[4,4] + 1*M[8]\n");
    // unknown basis
    let out = ppart(&["expand", "x", "1", "--to", "M"]);
    assert_eq!(out.status.code(), Some(2));
    // missing arguments (clap usage error)
    let out = ppart(&["expand"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn json_output_is_byte_identical_across_runs() {
    let args = ["verify", "matrices", "3", "--format", "json"];
    let first = ppart(&args);
    let second = ppart(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    assert!(stdout(&first).starts_with("{\"command\":\"verify matrices 3\","));
    assert!(stdout(&first).contains("\"status\":\"ok\""));

    let args = ["expand", "pr", "2,1", "--to", "M", "--format", "json"];
    let first = ppart(&args);
    let second = ppart(&args);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn verify_suites_and_exit_codes() {
    let out = ppart(&["verify", "all", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("verify all 3: ok"));

    let out = ppart(&["verify", "refinement", "4"]);
    assert_eq!(out.status.code(), Some(0));

    let out = ppart(&["verify", "bogus", "3"]);
    assert_eq!(out.status.code(), Some(2));

    let out = ppart(&["verify", "all", "99"]);
    assert_eq!(out.status.code(), Some(2));

    // degree 10 already needs more chains than the expansion cap admits
    let out = ppart(&["verify", "product", "10"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn matrices_golden() {
    let out = ppart(&["matrices", "R", "1,2,1", "1,3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), ". 1 .\n2 . 1\n\n. . 1\n2 1 .\n\ncount: 2\n");

    let out = ppart(&["matrices", "Rsym", "2,1,1", "4"]);
    assert_eq!(stdout(&out), "2 1 1\n\ncount: 1\n");

    let out = ppart(&["matrices", "Q", "1,2,1", "1,3", "--format", "json"]);
    assert_eq!(
        stdout(&out),
        "{\"alpha\":[1,2,1],\"beta\":[1,3],\"count\":2,\"kind\":\"Q\",\"matrices\":[[[0,1,0],[2,0,1]],[[0,0,1],[2,1,0]]]}\n"
    );

    // size mismatch
    let out = ppart(&["matrices", "R", "1,2", "1,3"]);
    assert_eq!(out.status.code(), Some(2));
    // Rsym rejects non-partitions
    let out = ppart(&["matrices", "Rsym", "1,2", "2,1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn poset_subcommands() {
    let path = write_poset(
        "wedge.poset",
        "elements: 1_1, 1_2, 2_1\ncovers: 1_1<2_1; 1_2<2_1\ndualized: false\n",
    );
    let path_str = path.to_str().unwrap();

    let out = ppart(&["poset", "extensions", path_str]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "1_1 1_2 2_1\n1_2 1_1 2_1\ncount: 2\n");

    let out = ppart(&["poset", "lowersets", path_str]);
    assert_eq!(
        stdout(&out),
        "e\n1_1\n1_2\n1_1 1_2\n1_1 1_2 2_1\ncount: 5\n"
    );

    // both covers are label descents, so the assignments are strict: the
    // top element takes 2 and both minima take 1
    let out = ppart(&["poset", "kpartitions", path_str, "--vars", "2"]);
    assert_eq!(stdout(&out), "1_1->1 1_2->1 2_1->2\ncount: 1\n");

    let out = ppart(&["poset", "ktruncate", path_str, "--vars", "2"]);
    assert_eq!(out.status.code(), Some(0));

    // the truncation read back at full weight matches the chain sum
    let out = ppart(&["poset", "ktruncate", path_str, "--format", "json"]);
    assert!(stdout(&out).starts_with("{\"command\":\"ktruncate\",\"polynomial\""));
}

#[test]
fn poset_error_paths() {
    let empty = write_poset("empty.poset", "");
    let out = ppart(&["poset", "extensions", empty.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    let cycle = write_poset(
        "cycle.poset",
        "elements: 1_1, 1_2\ncovers: 1_1<1_2; 1_2<1_1\n",
    );
    let out = ppart(&["poset", "extensions", cycle.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    let big_elements: Vec<String> = (1..=11).map(|i| format!("1_{i}")).collect();
    let big = write_poset(
        "big.poset",
        &format!("elements: {}\n", big_elements.join(", ")),
    );
    let out = ppart(&["poset", "extensions", big.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let out = ppart(&[
        "poset",
        "lowersets",
        big.to_str().unwrap(),
        "--max-elements",
        "12",
    ]);
    assert_eq!(out.status.code(), Some(0));

    let out = ppart(&["poset", "bogus", empty.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    let out = ppart(&["poset", "extensions", "/nonexistent/path.poset"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn paper_examples_passes() {
    let out = ppart(&["paper-examples"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("paper-examples: ok"));
    assert!(text.contains("PASS p[1,2,1] fundamental expansion"));

    let first = ppart(&["paper-examples", "--format", "json"]);
    let second = ppart(&["paper-examples", "--format", "json"]);
    assert_eq!(first.stdout, second.stdout);
}
