//! End-to-end runs of the `nsgraph` binary: every exit code path, the
//! documented report shapes, and byte-determinism of the output.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn write(dir: &Path, name: &str, content: &str) -> PathBuf {
    let path = dir.join(name);
    fs::write(&path, content).unwrap();
    path
}

fn nsgraph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nsgraph"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn stderr(output: &Output) -> String {
    String::from_utf8_lossy(&output.stderr).into_owned()
}

fn code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

const CYCLE_FAMILY: &str = "[family] kind=cycle size=\"2*n+5\"\n[vertex x] terms=[\"n\"] threshold=0\n[vertex y] terms=[\"n+1\"]\n";

const INFINITE_FAMILY: &str = "[family] kind=infinite_path\n[vertex x] terms=[\"n\"]\n[vertex y] terms=[\"n+1\"]\n[vertex z] terms=[\"2*n+2\"]\n[vertex w] terms=[\"n+5\"]\n[vertex c] terms=[\"41\"]\n";

const COMPLETE_PREFIXED: &str = "[family] kind=complete size=\"n\" threshold=3 prefix=[3, 3, 3]\n[vertex x] terms=[\"0\"]\n[vertex y] terms=[\"1\"]\n";

#[test]
fn summary_prints_exact_symbolic_values() {
    let dir = tempfile::tempdir().unwrap();
    let fam = write(dir.path(), "cyc.fam", CYCLE_FAMILY);
    let out = nsgraph(&["--family", fam.to_str().unwrap(), "summary"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("r = HN{t=0; c=1; [1]}"), "{text}");
    assert!(text.contains("R = HN{t=0; c=1; [n+2]}"), "{text}");
    assert!(text.contains("D = HN{t=0; c=1; [n+2]}"), "{text}");
    assert!(text.contains("R <= D <= 2R: true"), "{text}");
    assert!(text.contains("anchor: 0"), "{text}");
}

#[test]
fn output_is_byte_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let fam = write(dir.path(), "cyc.fam", CYCLE_FAMILY);
    let first = nsgraph(&["--family", fam.to_str().unwrap(), "summary"]);
    let second = nsgraph(&["--family", fam.to_str().unwrap(), "summary"]);
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(code(&first), code(&second));
}

#[test]
fn edges_on_the_infinite_path() {
    let dir = tempfile::tempdir().unwrap();
    let fam = write(dir.path(), "inf.fam", INFINITE_FAMILY);
    let fam = fam.to_str().unwrap();
    let out = nsgraph(&["--family", fam, "edge", "x", "y"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("EDGE"));
    let out = nsgraph(&["--family", fam, "edge", "x", "z"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("NOT AN EDGE"));
}

#[test]
fn eulerian_is_anchor_sensitive() {
    let dir = tempfile::tempdir().unwrap();
    let fam = write(dir.path(), "kn.fam", COMPLETE_PREFIXED);
    let fam = fam.to_str().unwrap();
    let even_sizes = nsgraph(&["--family", fam, "--anchor", "0", "eulerian"]);
    assert_eq!(code(&even_sizes), 1);
    let odd_sizes = nsgraph(&["--family", fam, "--anchor", "1", "eulerian"]);
    assert_eq!(code(&odd_sizes), 0);
    assert!(stdout(&odd_sizes).contains("EULERIAN"));
}

#[test]
fn distance_degree_eq_galaxy_identify() {
    let dir = tempfile::tempdir().unwrap();
    let fam = write(dir.path(), "inf.fam", INFINITE_FAMILY);
    let fam = fam.to_str().unwrap();

    let out = nsgraph(&["--family", fam, "distance", "x", "w"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("distance = HN{t=0; c=1; [5]}"));

    let out = nsgraph(&["--family", fam, "eq", "x", "y"]);
    assert_eq!(code(&out), 1);
    let out = nsgraph(&["--family", fam, "eq", "x", "x"]);
    assert_eq!(code(&out), 0);

    let out = nsgraph(&["--family", fam, "galaxy", "x", "w"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("LIMITEDLY DISTANT"));
    let out = nsgraph(&["--family", fam, "galaxy", "x", "z"]);
    assert_eq!(code(&out), 1);

    let out = nsgraph(&["--family", fam, "identify", "x"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("NOT STANDARD"));
    let out = nsgraph(&["--family", fam, "identify", "c"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("STANDARD VERTEX 41"));

    // degree needs a hyperfinite family
    let out = nsgraph(&["--family", fam, "degree", "x"]);
    assert_eq!(code(&out), 2);

    let dir2 = tempfile::tempdir().unwrap();
    let cyc = write(dir2.path(), "cyc.fam", CYCLE_FAMILY);
    let out = nsgraph(&["--family", cyc.to_str().unwrap(), "degree", "x"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("degree = HN{t=0; c=1; [2]}"));
}

#[test]
fn hamiltonian_and_color() {
    let dir = tempfile::tempdir().unwrap();
    let complete = write(
        dir.path(),
        "k.fam",
        "[family] kind=complete size=\"n+3\"\n",
    );
    let complete = complete.to_str().unwrap();
    let out = nsgraph(&["--family", complete, "hamiltonian", "--criterion", "dirac"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("CRITERION HOLDS"));
    let out = nsgraph(&["--family", complete, "color"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("WEAK COLORING"));
    assert!(stdout(&out).contains("palette = HN{t=0; c=1; [n+3]}"));

    let path = write(dir.path(), "p.fam", "[family] kind=path size=\"n+4\"\n");
    let path = path.to_str().unwrap();
    let out = nsgraph(&["--family", path, "hamiltonian", "--criterion", "ore"]);
    assert_eq!(code(&out), 1);
    let out = nsgraph(&["--family", path, "color"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("STRONG COLORING"));
    assert!(stdout(&out).contains("k = 1"));
}

#[test]
fn check_covers_decided_sampled_and_inconclusive() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "k5.g", "5 10\n0 1\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n");
    let constant = write(
        dir.path(),
        "k5.fam",
        "[family] kind=constant graph=\"k5.g\"\n",
    );
    let out = nsgraph(&[
        "--family",
        constant.to_str().unwrap(),
        "check",
        "eulerian()",
    ]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("mode: decided"));
    assert!(stdout(&out).contains("decision: true"));

    let cyc = write(dir.path(), "cyc.fam", CYCLE_FAMILY);
    let out = nsgraph(&[
        "--family",
        cyc.to_str().unwrap(),
        "check",
        "forall v:V exists b:E (v in b)",
    ]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("mode: sampled"));

    // alternating parity of complete sizes mixes the samples
    let kn = write(dir.path(), "kn.fam", COMPLETE_PREFIXED);
    let out = nsgraph(&["--family", kn.to_str().unwrap(), "check", "eulerian()"]);
    assert_eq!(code(&out), 3);
    assert!(stdout(&out).contains("INCONCLUSIVE"));

    // --samples controls how many indices the sampled mode looks at
    let out = nsgraph(&[
        "--family",
        cyc.to_str().unwrap(),
        "--samples",
        "3",
        "check",
        "connected()",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).matches("n=").count(), 3);

    // a sort error is a usage-level failure
    let out = nsgraph(&[
        "--family",
        cyc.to_str().unwrap(),
        "check",
        "forall b:E (deg_even(b))",
    ]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("sort error"));
}

#[test]
fn validation_failures_exit_2() {
    let dir = tempfile::tempdir().unwrap();

    let empty = write(dir.path(), "empty.fam", "");
    let out = nsgraph(&["--family", empty.to_str().unwrap(), "summary"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("missing [family]"));

    let bad_selector = write(
        dir.path(),
        "oob.fam",
        "[family] kind=path size=\"n+3\"\n[vertex x] terms=[\"n+10\"]\n",
    );
    let out = nsgraph(&["--family", bad_selector.to_str().unwrap(), "summary"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("selector 'x'"), "{}", stderr(&out));

    let cyc = write(dir.path(), "cyc.fam", CYCLE_FAMILY);
    let out = nsgraph(&["--family", cyc.to_str().unwrap(), "eq", "x", "nosuch"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("unknown selector 'nosuch'"));

    let out = nsgraph(&["--family", "/nonexistent/family.fam", "summary"]);
    assert_eq!(code(&out), 2);

    // malformed line numbers are reported
    let broken = write(
        dir.path(),
        "broken.fam",
        "[family] kind=cycle size=\"2*n+5\"\n[vertex x] terms=[\"n+\"]\n",
    );
    let out = nsgraph(&["--family", broken.to_str().unwrap(), "summary"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains(":2:"), "{}", stderr(&out));

    // clap usage errors also exit 2
    let out = nsgraph(&["--family", cyc.to_str().unwrap(), "nonsense"]);
    assert_eq!(code(&out), 2);
}
