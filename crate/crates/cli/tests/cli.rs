use std::path::Path;

use assert_cmd::Command;
use magic_core::analysis::{is_aperiodic, Family};
use magic_core::automata::parse_automaton;
use magic_core::verify::VerificationReport;
use magic_core::{min_dfa_size, Nfa};
use tempfile::TempDir;

fn magic() -> Command {
    let mut cmd = Command::cargo_bin("magic").unwrap();
    cmd.env_remove("MAGIC_MAX_SUBSETS");
    cmd
}

fn stdout(args: &[&str]) -> String {
    let out = magic().args(args).output().unwrap();
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    magic().args(args).output().unwrap().status.code().unwrap()
}

fn read_nfa(path: &Path) -> Nfa {
    Nfa::from_text(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

const EVEN_AS: &str = "type: dfa\nstates: 2\nalphabet: a\ninitial: 0\naccepting: 0\n0 a -> 1\n1 a -> 0\n";

#[test]
fn gen_infix_closed_file() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("a2.nfa");
    let mnfa = dir.path().join("a1.nfa");
    magic()
        .args([
            "gen",
            "--family",
            "infix-closed",
            "--n",
            "4",
            "--alpha",
            "6",
            "--output",
        ])
        .arg(&out)
        .arg("--mnfa")
        .arg(&mnfa)
        .assert()
        .success();
    let a2 = read_nfa(&out);
    assert_eq!(a2.state_count(), 4);
    assert_eq!(a2.alphabet().symbols().join(" "), "a b c d # $");
    assert_eq!(min_dfa_size(&a2).unwrap(), 6);
    assert!(read_nfa(&mnfa).is_multi_entry());
}

#[test]
fn gen_out_of_range() {
    let out = magic()
        .args(["gen", "--family", "finite", "--n", "4", "--alpha", "8"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("[5, 7]"));
    // a generator without a multi-entry automaton
    assert_eq!(
        code(&[
            "gen",
            "--family",
            "general",
            "--n",
            "3",
            "--alpha",
            "5",
            "--mnfa",
            "/dev/null"
        ]),
        2
    );
}

#[test]
fn gen_boundary() {
    let text = stdout(&["gen", "--family", "general", "--n", "3", "--alpha", "8"]);
    let nfa = Nfa::from_text(&text).unwrap();
    assert_eq!(nfa.state_count(), 3);
    assert_eq!(min_dfa_size(&nfa).unwrap(), 8);
}

#[test]
fn verify_general_grid() {
    let dir = TempDir::new().unwrap();
    let csv = dir.path().join("g.csv");
    let out = magic()
        .args([
            "verify", "--family", "general", "--n", "3..6", "--alpha", "all", "--csv",
        ])
        .arg(&csv)
        .output()
        .unwrap();
    assert!(out.status.success());
    let reports: Vec<VerificationReport> = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(reports.len(), (3..=6).map(|n| (1usize << n) - n + 1).sum::<usize>());
    assert!(reports.iter().all(|r| r.pass && r.timing.is_none()));
    assert_eq!(
        String::from_utf8_lossy(&out.stderr).trim(),
        format!("PASS {0}/{0}", reports.len())
    );
    let csv = std::fs::read_to_string(csv).unwrap();
    assert_eq!(csv.lines().count(), reports.len() + 1);
}

#[test]
fn verify_infix_closed_grid() {
    let out = stdout(&["verify", "--family", "infix-closed", "--n", "2..=8"]);
    let reports: Vec<VerificationReport> = serde_json::from_str(&out).unwrap();
    assert!(!reports.is_empty());
    for r in &reports {
        assert!(r.pass);
        assert_eq!(r.fooling_bound, Some(r.spec.n as usize));
    }
}

#[test]
fn verify_finite_list() {
    let out = stdout(&[
        "verify", "--family", "finite", "--n", "5,3", "--alpha", "all", "--timing",
    ]);
    let reports: Vec<VerificationReport> = serde_json::from_str(&out).unwrap();
    assert_eq!(reports.first().unwrap().spec.n, 3);
    assert!(reports.iter().any(|r| r.spec.generator == "finite-exponential"));
    assert!(reports.iter().all(|r| r.timing.is_some()));
    // 8 has no construction at n=4
    assert_eq!(code(&["verify", "--family", "finite", "--n", "4", "--alpha", "8"]), 2);
}

#[test]
fn spectrum_prefix_free() {
    let out = stdout(&[
        "spectrum",
        "--family",
        "prefix-free",
        "--n",
        "3",
        "--sigma",
        "2",
        "--exhaustive",
    ]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let achieved: Vec<u64> = v["achieved"]
        .as_object()
        .unwrap()
        .keys()
        .map(|k| k.parse().unwrap())
        .collect();
    assert!(!achieved.is_empty());
    assert!(achieved.iter().all(|a| (4..=5).contains(a)));
}

#[test]
fn spectrum_witnesses_are_aperiodic() {
    let out = stdout(&[
        "spectrum",
        "--family",
        "star-free",
        "--n",
        "3",
        "--sigma",
        "2",
        "--exhaustive",
    ]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    for (alpha, w) in v["achieved"].as_object().unwrap() {
        let nfa = Nfa::from_text(w.as_str().unwrap()).unwrap();
        let d = magic_core::minimize(&magic_core::determinize(&nfa).unwrap());
        assert_eq!(d.state_count().to_string(), *alpha);
        assert!(is_aperiodic(&d).unwrap());
    }
}

#[test]
fn check_verdicts() {
    let dir = TempDir::new().unwrap();
    let mandl = write(
        &dir,
        "mandl4.nfa",
        &stdout(&["gen", "--family", "finite", "--n", "4", "--alpha", "7"]),
    );
    assert_eq!(stdout(&["check", "--property", "aperiodic", &mandl]), "true\n");
    assert_eq!(stdout(&["check", "--property", "finite", &mandl]), "true\n");

    let even = write(&dir, "aa-star.dfa", EVEN_AS);
    assert_eq!(stdout(&["check", "--property", "star", &even]), "true\n");
    let out = magic()
        .args(["check", "--property", "aperiodic", &even])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("false\ncycle of length 2 under a:"), "{text}");
    let out = magic().args(["check", "--property", "finite", &even]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("v = a a"));

    let a2 = write(
        &dir,
        "a2_4_6.nfa",
        &stdout(&["gen", "--family", "infix-closed", "--n", "4", "--alpha", "6"]),
    );
    assert_eq!(stdout(&["check", "--property", "infix-closed", &a2]), "true\n");
    assert_eq!(code(&["check", "--property", "suffix-free", &a2]), 1);
    assert!(stdout(&["check", "--property", "lemma1", &a2]).starts_with("true\n"));
}

#[test]
fn check_fooling_sets() {
    let dir = TempDir::new().unwrap();
    let even = write(&dir, "even.dfa", EVEN_AS);
    write(&dir, "even.dfa.fool", "λ|λ\na|a\n");
    assert_eq!(
        stdout(&["check", "--property", "fooling-set", &even]),
        "true\nnondeterministic state lower bound 2\n"
    );
    let bad = write(&dir, "bad.fool", "λ|λ\na a|λ\n");
    let out = magic()
        .args(["check", "--property", "fooling-set", &even, "--fooling-set", &bad])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "false\npairs 0 and 1 violate the fooling condition\n"
    );
    // missing sidecar
    let other = write(&dir, "other.dfa", EVEN_AS);
    assert_eq!(code(&["check", "--property", "fooling-set", &other]), 2);
}

#[test]
fn check_errors() {
    let dir = TempDir::new().unwrap();
    let broken = write(
        &dir,
        "broken.dfa",
        "type: dfa\nstates: 1\nalphabet: a\ninitial: 0\naccepting:\n",
    );
    assert_eq!(code(&["check", "--property", "star", &broken]), 2);
    let even = write(&dir, "even.dfa", EVEN_AS);
    assert_eq!(code(&["check", "--property", "no-such-thing", &even]), 2);
    // a DFA is read as an NFA and determinized again
    assert_eq!(
        stdout(&["check", "--property", "lemma1", &even]),
        "true\n1 permutation cycles checked\n"
    );
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(code(&["gen", "--family", "finite"]), 2);
    assert_eq!(code(&["verify", "--family", "nope", "--n", "3"]), 2);
    assert_eq!(code(&["verify", "--family", "general", "--n", "6..3"]), 2);
    assert_eq!(code(&["frobnicate"]), 2);
}

#[test]
fn resource_caps_exit_3() {
    let args = ["gen", "--family", "general", "--n", "8", "--alpha", "200"];
    assert_eq!(
        magic()
            .args(args)
            .env("MAGIC_MAX_SUBSETS", "10")
            .output()
            .unwrap()
            .status
            .code(),
        Some(3)
    );
    // the flag beats the environment
    magic()
        .args(args)
        .args(["--max-subsets", "1000"])
        .env("MAGIC_MAX_SUBSETS", "10")
        .assert()
        .success();
    assert_eq!(
        code(&[
            "spectrum",
            "--family",
            "finite",
            "--n",
            "5",
            "--sigma",
            "3",
            "--exhaustive"
        ]),
        3
    );
}

#[test]
fn config_file_and_overrides() {
    let dir = TempDir::new().unwrap();
    let cfg = write(&dir, "gen.toml", "family = \"general\"\nn = 3\nalpha = 8\n");
    let from_file = stdout(&["--config", &cfg, "gen"]);
    assert_eq!(
        from_file,
        stdout(&["gen", "--family", "general", "--n", "3", "--alpha", "8"])
    );
    let overridden = stdout(&["--config", &cfg, "gen", "--alpha", "5"]);
    assert_eq!(min_dfa_size(&Nfa::from_text(&overridden).unwrap()).unwrap(), 5);

    let vcfg = write(&dir, "verify.toml", "family = \"infix-closed\"\nn = [2, 3]\n");
    let reports: Vec<VerificationReport> = serde_json::from_str(&stdout(&["verify", "--config", &vcfg])).unwrap();
    assert_eq!(reports.iter().map(|r| r.spec.n).max(), Some(3));
    let bad = write(&dir, "bad.toml", "family = [");
    assert_eq!(code(&["--config", &bad, "gen"]), 2);
}

#[test]
fn outputs_are_reproducible() {
    for args in [
        &["verify", "--family", "general", "--n", "3..5"][..],
        &["verify", "--family", "finite", "--n", "3,5,7"],
        &[
            "spectrum",
            "--family",
            "suffix-closed",
            "--n",
            "4",
            "--samples",
            "2000",
            "--seed",
            "7",
        ],
        &["gen", "--family", "infix-closed", "--n", "6", "--alpha", "20"],
    ] {
        assert_eq!(stdout(args), stdout(args), "{args:?}");
    }
}

#[test]
fn bounds_table() {
    let text = stdout(&["bounds", "--n", "4"]);
    assert_eq!(text.lines().count(), 10);
    assert!(text.lines().any(|l| l.starts_with("finite") && l.ends_with("[5, 7]")));
    let json: serde_json::Value = serde_json::from_str(&stdout(&["bounds", "--format", "json", "--n", "5"])).unwrap();
    let general = &json.as_array().unwrap()[0];
    assert_eq!(general["family"], "general");
    assert_eq!(general["interval"], serde_json::json!([5, 32]));
}

#[test]
fn parse_round_trip_of_generated_files() {
    let text = stdout(&["gen", "--family", "suffix-closed", "--n", "3", "--alpha", "3"]);
    let parsed = parse_automaton(&text).unwrap();
    assert_eq!(parsed.to_text(), text);
    let d = magic_core::minimize(&magic_core::determinize(&Nfa::from_text(&text).unwrap()).unwrap());
    assert!(magic_core::analysis::is_in_family(&d, Family::SuffixClosed).unwrap());
}
