//! End-to-end checks of the `efdepth` binary: output bytes, exit codes, and
//! the stdin/stdout plumbing the subcommands promise.

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn efdepth(args: &[&str], stdin: Option<&[u8]>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_efdepth"));
    cmd.args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    let mut child = cmd.spawn().expect("spawn efdepth");
    if let Some(bytes) = stdin {
        child
            .stdin
            .as_mut()
            .unwrap()
            .write_all(bytes)
            .expect("write stdin");
    }
    drop(child.stdin.take());
    child.wait_with_output().expect("wait for efdepth")
}

fn stdout_str(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn tmp(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name)
}

#[test]
fn gen_emits_known_graph6() {
    let out = efdepth(&["gen", "path(3)"], None);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout_str(&out), "Bg\n");
}

#[test]
fn gen_bundle_lists_all_members() {
    let out = efdepth(&["gen", "thm1_2(1)"], None);
    assert_eq!(code(&out), 0);
    let text = stdout_str(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 4);
    assert!(lines[0].starts_with("pattern "));
    assert!(lines[1].starts_with("positive "));
    assert!(lines[2].starts_with("negative "));
    assert_eq!(lines[3], "rounds 2");
}

#[test]
fn gen_output_round_trips_byte_identically() {
    let g6 = tmp("roundtrip.g6");
    let el = tmp("roundtrip.edges");
    assert_eq!(
        code(&efdepth(
            &["gen", "cycle(5)", "-o", g6.to_str().unwrap()],
            None
        )),
        0
    );
    assert_eq!(
        code(&efdepth(
            &[
                "gen",
                "cycle(5)",
                "--format",
                "edgelist",
                "-o",
                el.to_str().unwrap()
            ],
            None
        )),
        0
    );
    // feed each file back through eval (which decodes and re-encodes
    // internally) by comparing winners on identical inputs
    let from_g6 = efdepth(
        &["ef", "--left", g6.to_str().unwrap(), "--right", el.to_str().unwrap(), "--rounds", "4"],
        None,
    );
    assert_eq!(code(&from_g6), 0);
    assert_eq!(stdout_str(&from_g6).trim(), "duplicator");
    // and the bytes themselves are stable across a second gen
    let again = tmp("roundtrip2.g6");
    efdepth(&["gen", "cycle(5)", "-o", again.to_str().unwrap()], None);
    assert_eq!(std::fs::read(&g6).unwrap(), std::fs::read(&again).unwrap());
}

#[test]
fn ef_reports_winners_and_budget() {
    let k2 = tmp("k2.g6");
    let e2 = tmp("e2.g6");
    efdepth(&["gen", "complete(2)", "-o", k2.to_str().unwrap()], None);
    efdepth(&["gen", "empty(2)", "-o", e2.to_str().unwrap()], None);

    let out = efdepth(
        &["ef", "--left", k2.to_str().unwrap(), "--right", e2.to_str().unwrap(), "--rounds", "2"],
        None,
    );
    assert_eq!(code(&out), 0);
    assert_eq!(stdout_str(&out).trim(), "spoiler");

    let broke = efdepth(
        &[
            "ef",
            "--left",
            k2.to_str().unwrap(),
            "--right",
            e2.to_str().unwrap(),
            "--rounds",
            "2",
            "--budget",
            "1",
        ],
        None,
    );
    assert_eq!(code(&broke), 4);
}

#[test]
fn ef_writes_a_strategy_table() {
    let k2 = tmp("strat_k2.g6");
    let e2 = tmp("strat_e2.g6");
    let table = tmp("strategy.json");
    efdepth(&["gen", "complete(2)", "-o", k2.to_str().unwrap()], None);
    efdepth(&["gen", "empty(2)", "-o", e2.to_str().unwrap()], None);
    let out = efdepth(
        &[
            "ef",
            "--left",
            k2.to_str().unwrap(),
            "--right",
            e2.to_str().unwrap(),
            "--rounds",
            "2",
            "--strategy",
            table.to_str().unwrap(),
        ],
        None,
    );
    assert_eq!(code(&out), 0);
    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&table).unwrap()).unwrap();
    assert_eq!(json["winner"], "spoiler");
    assert!(!json["moves"].as_object().unwrap().is_empty());
}

#[test]
fn eval_exit_codes_follow_truth() {
    let k2 = tmp("eval_k2.g6");
    efdepth(&["gen", "complete(2)", "-o", k2.to_str().unwrap()], None);
    let yes = efdepth(
        &["eval", "--formula", "Ex.Ey.x~y", "--graph", k2.to_str().unwrap()],
        None,
    );
    assert_eq!(code(&yes), 0);
    assert_eq!(stdout_str(&yes).trim(), "true");
    let no = efdepth(
        &["eval", "--formula", "Ex.Ey.(x!~y & x!=y)", "--graph", k2.to_str().unwrap()],
        None,
    );
    assert_eq!(code(&no), 1);
    assert_eq!(stdout_str(&no).trim(), "false");
}

#[test]
fn synth_pipes_into_depth() {
    let h = tmp("empty0.g6");
    efdepth(&["gen", "empty(0)", "-o", h.to_str().unwrap()], None);
    let synth = efdepth(&["synth", "--target", h.to_str().unwrap()], None);
    assert_eq!(code(&synth), 0);
    let depth = efdepth(&["depth", "--formula", "-"], Some(&synth.stdout));
    assert_eq!(code(&depth), 0);
    assert_eq!(stdout_str(&depth).trim(), "3");
}

#[test]
fn graphs_readable_from_stdin() {
    let out = efdepth(&["eval", "--formula", "Ex.Ey.x~y", "--graph", "-"], Some(b"A_\n"));
    assert_eq!(code(&out), 0);
    assert_eq!(stdout_str(&out).trim(), "true");
}

#[test]
fn bound_matches_the_table() {
    let c5 = tmp("bound_c5.g6");
    efdepth(&["gen", "cycle(5)", "-o", c5.to_str().unwrap()], None);
    let out = efdepth(
        &["bound", "--pattern", c5.to_str().unwrap(), "--complement"],
        None,
    );
    assert_eq!(code(&out), 0);
    assert_eq!(stdout_str(&out).trim(), "3");
}

#[test]
fn certify_lower_emits_verified_json() {
    let pat = tmp("cl_pattern.g6");
    let pos = tmp("cl_pos.g6");
    let neg = tmp("cl_neg.g6");
    let cert = tmp("cl_cert.json");
    for (role, path) in [("pattern", &pat), ("positive", &pos), ("negative", &neg)] {
        efdepth(
            &["gen", "thm2(1,2,(2,2))", "--role", role, "-o", path.to_str().unwrap()],
            None,
        );
    }
    let out = efdepth(
        &[
            "certify-lower",
            "--pattern",
            pat.to_str().unwrap(),
            "--left",
            pos.to_str().unwrap(),
            "--right",
            neg.to_str().unwrap(),
            "--rounds",
            "3",
            "-o",
            cert.to_str().unwrap(),
        ],
        None,
    );
    assert_eq!(code(&out), 0, "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&cert).unwrap()).unwrap();
    assert_eq!(json["kind"], "lower");
    assert_eq!(json["claimed_bound"], 4);
    assert_eq!(json["verified"], true);
    assert!(json.get("formula").is_none(), "absent fields are omitted");
}

#[test]
fn certify_lower_rejection_exits_3() {
    let k2 = tmp("rej_k2.g6");
    efdepth(&["gen", "complete(2)", "-o", k2.to_str().unwrap()], None);
    // pattern present in the negative host
    let out = efdepth(
        &[
            "certify-lower",
            "--pattern",
            k2.to_str().unwrap(),
            "--left",
            k2.to_str().unwrap(),
            "--right",
            k2.to_str().unwrap(),
            "--rounds",
            "1",
        ],
        None,
    );
    assert_eq!(code(&out), 3);
}

#[test]
fn certify_upper_verifies_and_rejects() {
    let pat = tmp("cu_pattern.g6");
    efdepth(&["gen", "thm1_2(1)", "--role", "pattern", "-o", pat.to_str().unwrap()], None);
    let h = tmp("cu_empty.g6");
    efdepth(&["gen", "empty(0)", "-o", h.to_str().unwrap()], None);
    let synth = efdepth(&["synth", "--target", h.to_str().unwrap()], None);
    let formula_file = tmp("cu_formula.txt");
    std::fs::write(&formula_file, &synth.stdout).unwrap();

    let ok = efdepth(
        &[
            "certify-upper",
            "--pattern",
            pat.to_str().unwrap(),
            "--formula",
            formula_file.to_str().unwrap(),
            "--max-n",
            "5",
        ],
        None,
    );
    assert_eq!(code(&ok), 0, "stderr: {}", String::from_utf8_lossy(&ok.stderr));
    let json: serde_json::Value = serde_json::from_str(&stdout_str(&ok)).unwrap();
    assert_eq!(json["verified"], true);
    assert_eq!(json["depth"], 3);

    // an edge sentence does not express "contains P3 + K1"
    let bad = efdepth(
        &[
            "certify-upper",
            "--pattern",
            pat.to_str().unwrap(),
            "--formula",
            "Ex.Ey.x~y",
            "--max-n",
            "4",
        ],
        None,
    );
    assert_eq!(code(&bad), 3);
    let err = String::from_utf8_lossy(&bad.stderr);
    assert!(err.contains("counterexample graph:"), "{err}");
}

#[test]
fn verify_policy_ok_and_mismatch() {
    let ok = efdepth(
        &["verify-policy", "--name", "thm1_2", "--instance", "thm1_2(1)"],
        None,
    );
    assert_eq!(code(&ok), 0);
    assert_eq!(stdout_str(&ok).trim(), "ok");

    let mismatch = efdepth(
        &["verify-policy", "--name", "thm2", "--instance", "thm1_2(1)"],
        None,
    );
    assert_eq!(code(&mismatch), 2);
}

#[test]
fn distinguish_prints_a_separator_or_exits_1() {
    let k2 = tmp("dist_k2.g6");
    let e2 = tmp("dist_e2.g6");
    efdepth(&["gen", "complete(2)", "-o", k2.to_str().unwrap()], None);
    efdepth(&["gen", "empty(2)", "-o", e2.to_str().unwrap()], None);
    let out = efdepth(
        &[
            "distinguish",
            "--left",
            k2.to_str().unwrap(),
            "--right",
            e2.to_str().unwrap(),
            "--rounds",
            "2",
        ],
        None,
    );
    assert_eq!(code(&out), 0);
    // the emitted sentence must evaluate true on the left input
    let check = efdepth(
        &["eval", "--formula", stdout_str(&out).trim(), "--graph", k2.to_str().unwrap()],
        None,
    );
    assert_eq!(code(&check), 0);

    let none = efdepth(
        &[
            "distinguish",
            "--left",
            k2.to_str().unwrap(),
            "--right",
            k2.to_str().unwrap(),
            "--rounds",
            "3",
        ],
        None,
    );
    assert_eq!(code(&none), 1);
}

#[test]
fn search_pair_budget_exhaustion_exits_4() {
    let pat = tmp("spb_pattern.g6");
    efdepth(&["gen", "thm1_2(1)", "--role", "pattern", "-o", pat.to_str().unwrap()], None);
    let out = efdepth(
        &[
            "search-pair",
            "--pattern",
            pat.to_str().unwrap(),
            "--rounds",
            "2",
            "--max-n",
            "5",
            "--budget",
            "1",
        ],
        None,
    );
    assert_eq!(code(&out), 4);
    assert_eq!(stdout_str(&out).trim(), "none");
}

#[test]
fn search_pair_finds_an_edge_witness() {
    let k2 = tmp("sp_k2.g6");
    efdepth(&["gen", "complete(2)", "-o", k2.to_str().unwrap()], None);
    let out = efdepth(
        &[
            "search-pair",
            "--pattern",
            k2.to_str().unwrap(),
            "--rounds",
            "1",
            "--max-n",
            "3",
        ],
        None,
    );
    assert_eq!(code(&out), 0);
    let json: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(json["claimed_bound"], 2);
}

#[test]
fn play_follows_piped_moves() {
    let k2 = tmp("play_k2.g6");
    efdepth(&["gen", "complete(2)", "-o", k2.to_str().unwrap()], None);
    let out = efdepth(
        &[
            "play",
            "--left",
            k2.to_str().unwrap(),
            "--right",
            k2.to_str().unwrap(),
            "--rounds",
            "2",
            "--as",
            "spoiler",
        ],
        Some(b"L0\nR1\n"),
    );
    assert_eq!(code(&out), 0);
    let text = stdout_str(&out);
    assert!(text.contains("winner: duplicator"), "{text}");
}

#[test]
fn usage_errors_exit_2() {
    let out = efdepth(&["no-such-subcommand"], None);
    assert_eq!(code(&out), 2);
    let bad_spec = efdepth(&["gen", "heptagram(9)"], None);
    assert_eq!(code(&bad_spec), 2);
}

#[test]
fn suite_core_exits_zero_when_all_rows_pass() {
    let certs = tmp("suite_certs");
    let out = efdepth(
        &["suite", "--level", "core", "--cert-dir", certs.to_str().unwrap()],
        None,
    );
    assert_eq!(code(&out), 0, "suite output:\n{}", stdout_str(&out));
    let text = stdout_str(&out);
    assert!(text.contains("suite: PASS"), "{text}");
    assert!(!text.contains("FAIL"), "{text}");
    // certificates landed on disk
    let count = std::fs::read_dir(&certs).unwrap().count();
    assert!(count >= 8, "expected certificate files, found {count}");
}
