//! End-to-end tests against the compiled binary: verb behavior, output
//! formats, exit codes, the stdin protocol, and the solve → verify pipe.

use std::io::Write;
use std::process::{Command, Stdio};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

struct Run {
    status: i32,
    stdout: String,
    stderr: String,
}

fn plactic_with(args: &[&str], stdin: Option<&str>, envs: &[(&str, &str)]) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_plactic"));
    cmd.args(args)
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .stdin(if stdin.is_some() {
            Stdio::piped()
        } else {
            Stdio::null()
        });
    for (key, value) in envs {
        cmd.env(key, value);
    }
    let mut child = cmd.spawn().expect("spawn plactic");
    if let Some(text) = stdin {
        child
            .stdin
            .take()
            .expect("piped stdin")
            .write_all(text.as_bytes())
            .expect("write stdin");
    }
    let out = child.wait_with_output().expect("wait for plactic");
    Run {
        status: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).expect("utf-8 stdout"),
        stderr: String::from_utf8(out.stderr).expect("utf-8 stderr"),
    }
}

fn plactic(args: &[&str]) -> Run {
    plactic_with(args, None, &[])
}

fn json(text: &str) -> serde_json::Value {
    serde_json::from_str(text.trim()).expect("valid JSON output")
}

#[test]
fn normalize_prints_the_row_reading() {
    let run = plactic(&["normalize", "32143122"]);
    assert_eq!(run.status, 0, "stderr: {}", run.stderr);
    assert_eq!(run.stdout, "34231122\n");
}

#[test]
fn normalize_output_is_a_fixed_point() {
    let first = plactic(&["normalize", "4233112"]);
    let normalized = first.stdout.trim().to_string();
    let second = plactic(&["normalize", &normalized]);
    assert_eq!(second.stdout.trim(), normalized);
}

#[test]
fn normalize_handles_many_words_and_json() {
    let run = plactic(&["normalize", "212", "221", "--output", "json"]);
    assert_eq!(run.status, 0);
    let lines: Vec<&str> = run.stdout.lines().collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(json(lines[0])["normal_form"], "2 1 2");
    assert_eq!(json(lines[1])["input"], "2 2 1");
    assert_eq!(json(lines[1])["normal_form"], "2 1 2");
}

#[test]
fn normalize_batches_from_stdin_skipping_comments() {
    let run = plactic_with(
        &["normalize", "-"],
        Some("# column reading of the example\n32143122\n\n  221\n"),
        &[],
    );
    assert_eq!(run.status, 0, "stderr: {}", run.stderr);
    assert_eq!(run.stdout, "34231122\n212\n");
}

#[test]
fn normalize_preserves_letters_above_nine() {
    let run = plactic(&["normalize", "10 2 10"]);
    assert_eq!(run.status, 0);
    assert_eq!(run.stdout, "10 2 10\n");
}

#[test]
fn multiply_from_arguments_and_stdin() {
    let run = plactic(&["multiply", "2", "1"]);
    assert_eq!(run.stdout, "21\n");

    let run = plactic_with(&["multiply", "-", "-"], Some("32\n1\n"), &[]);
    assert_eq!(run.status, 0);
    assert_eq!(run.stdout, "321\n");

    let run = plactic(&["multiply", "2", "1", "--output", "json"]);
    let value = json(&run.stdout);
    assert_eq!(value["left"], "2");
    assert_eq!(value["right"], "1");
    assert_eq!(value["product"], "2 1");
}

#[test]
fn equal_uses_the_exit_code() {
    let run = plactic(&["equal", "212", "221"]);
    assert_eq!(run.status, 0);
    assert_eq!(run.stdout, "equal\n");

    let run = plactic(&["equal", "12", "21"]);
    assert_eq!(run.status, 1);
    assert_eq!(run.stdout, "unequal\n");

    let run = plactic(&["equal", "12", "21", "--output", "json"]);
    assert_eq!(run.status, 1);
    assert_eq!(json(&run.stdout)["equal"], false);
}

#[test]
fn parse_errors_exit_2_with_a_diagnostic() {
    let run = plactic(&["equal", "12", "x1"]);
    assert_eq!(run.status, 2);
    assert!(run.stdout.is_empty());
    assert!(run.stderr.contains("plactic:"), "stderr: {}", run.stderr);

    let run = plactic(&["normalize", "0"]);
    assert_eq!(run.status, 2);
    assert!(run.stderr.contains("positive"), "stderr: {}", run.stderr);
}

#[test]
fn content_text_and_json() {
    let run = plactic(&["content", "34231122"]);
    assert_eq!(run.stdout, "1:2 2:3 3:2 4:1\n");

    let run = plactic(&["content", "34231122", "--output", "json"]);
    let value = json(&run.stdout);
    assert_eq!(value["counts"]["1"], 2);
    assert_eq!(value["counts"]["2"], 3);
    assert_eq!(value["counts"]["3"], 2);
    assert_eq!(value["counts"]["4"], 1);
    assert_eq!(value["rank"], 4);
    assert_eq!(value["total"], 8);

    let run = plactic(&["content", ""]);
    assert_eq!(run.stdout, "(empty)\n");
}

#[test]
fn tableau_prints_top_row_first() {
    let run = plactic(&["tableau", "32143122"]);
    assert_eq!(run.status, 0);
    assert_eq!(run.stdout, "3 4\n2 3\n1 1 2 2\n");

    let run = plactic(&["tableau", "32143122", "--output", "json"]);
    let value = json(&run.stdout);
    assert_eq!(value["rows"], serde_json::json!([[1, 1, 2, 2], [2, 3], [3, 4]]));
    assert_eq!(value["row_reading"], "3 4 2 3 1 1 2 2");
    assert_eq!(value["column_reading"], "3 2 1 4 3 1 2 2");
}

#[test]
fn involute_at_explicit_and_default_rank() {
    let run = plactic(&["involute", "32341", "--rank", "4"]);
    assert_eq!(run.status, 0);
    assert_eq!(run.stdout, "41232\n");

    // The largest letter is 4, so the default rank gives the same image.
    let run = plactic(&["involute", "32341"]);
    assert_eq!(run.stdout, "41232\n");

    let run = plactic(&["involute", "432123", "--rank", "4", "--output", "json"]);
    let value = json(&run.stdout);
    assert_eq!(value["rank"], 4);
    assert_eq!(value["result"], "2 3 4 3 2 1");
}

#[test]
fn involute_rejects_a_rank_below_the_letters() {
    let run = plactic(&["involute", "32341", "--rank", "3"]);
    assert_eq!(run.status, 2);
    assert!(run.stderr.contains("--rank 3"), "stderr: {}", run.stderr);
}

#[test]
fn involute_complements_large_alphabets() {
    let run = plactic(&["involute", "10 2 10"]);
    assert_eq!(run.status, 0);
    assert_eq!(run.stdout, "191\n");
}

#[test]
fn solve_left_emits_the_witness_schema() {
    let run = plactic(&["solve-left", "1", "2", "--rank", "2"]);
    assert_eq!(run.status, 0, "stderr: {}", run.stderr);
    let value = json(&run.stdout);
    assert_eq!(value["equation"], "left");
    assert_eq!(value["left"], "2 2");
    assert_eq!(value["right"], "2 1");
    assert_eq!(value["common"], "2 1 2");
    assert_eq!(value["rank"], 2);
}

#[test]
fn solve_left_text_output() {
    let run = plactic(&["solve-left", "1", "2", "--rank", "2", "--output", "text"]);
    assert_eq!(
        run.stdout,
        "equation: left\nleft: 22\nright: 21\ncommon: 212\nrank: 2\n"
    );
}

#[test]
fn solve_mixed_swaps_the_inputs() {
    let run = plactic(&["solve-mixed", "21", "12"]);
    let value = json(&run.stdout);
    assert_eq!(value["equation"], "mixed");
    assert_eq!(value["left"], "1 2");
    assert_eq!(value["right"], "2 1");
    assert_eq!(value["common"], "2 1 1 2");
}

#[test]
fn solvers_pipe_into_verify() {
    for verb in ["solve-left", "solve-right", "solve-mixed"] {
        let solved = plactic(&[verb, "1", "2", "--rank", "2"]);
        assert_eq!(solved.status, 0, "{verb} stderr: {}", solved.stderr);
        let verified = plactic_with(&["verify", "1", "2"], Some(&solved.stdout), &[]);
        assert_eq!(
            verified.status, 0,
            "{verb} verify failed: {} / {}",
            verified.stdout, verified.stderr
        );
        assert_eq!(verified.stdout, "verified\n");
    }
}

#[test]
fn fuzzed_solver_outputs_all_verify() {
    let mut rng = StdRng::seed_from_u64(0xc11_f022);
    for _ in 0..20 {
        let len_u = rng.random_range(0..=6);
        let len_v = rng.random_range(0..=6);
        let word = |rng: &mut StdRng, len: usize| {
            (0..len)
                .map(|_| rng.random_range(1..=4u32).to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        let u = word(&mut rng, len_u);
        let v = word(&mut rng, len_v);
        for verb in ["solve-left", "solve-right"] {
            let solved = plactic(&[verb, &u, &v]);
            assert_eq!(solved.status, 0, "{verb} {u:?} {v:?}: {}", solved.stderr);
            let verified = plactic_with(&["verify", &u, &v], Some(&solved.stdout), &[]);
            assert_eq!(
                verified.status, 0,
                "{verb} on u={u:?}, v={v:?} produced a witness that failed: {}",
                solved.stdout
            );
        }
    }
}

#[test]
fn verify_rejects_a_tampered_witness() {
    let solved = plactic(&["solve-left", "1", "2", "--rank", "2"]);
    let mut value = json(&solved.stdout);
    value["left"] = serde_json::json!("2 2 2");
    let verified = plactic_with(&["verify", "1", "2"], Some(&value.to_string()), &[]);
    assert_eq!(verified.status, 1);
    assert_eq!(verified.stdout, "not verified\n");

    let verified = plactic_with(
        &["verify", "1", "2", "--output", "json"],
        Some(&value.to_string()),
        &[],
    );
    assert_eq!(verified.status, 1);
    assert_eq!(json(&verified.stdout)["verified"], false);
}

#[test]
fn verify_reads_the_witness_from_a_file() {
    let solved = plactic(&["solve-right", "12", "31", "--rank", "3"]);
    let path = std::env::temp_dir().join(format!("plactic-witness-{}.json", std::process::id()));
    std::fs::write(&path, &solved.stdout).expect("write witness file");
    let verified = plactic_with(
        &["verify", "-", "-", path.to_str().unwrap()],
        Some("12\n31\n"),
        &[],
    );
    std::fs::remove_file(&path).ok();
    assert_eq!(
        verified.status, 0,
        "stdout: {} stderr: {}",
        verified.stdout, verified.stderr
    );
}

#[test]
fn verify_rejects_malformed_witnesses() {
    let run = plactic_with(&["verify", "1", "2"], Some("not json"), &[]);
    assert_eq!(run.status, 2);
    assert!(run.stderr.contains("JSON"), "stderr: {}", run.stderr);

    let run = plactic_with(
        &["verify", "1", "2"],
        Some(r#"{"equation":"sideways","left":"1","right":"1","common":"1"}"#),
        &[],
    );
    assert_eq!(run.status, 2);
    assert!(run.stderr.contains("sideways"), "stderr: {}", run.stderr);
}

#[test]
fn class_lists_the_knuth_class() {
    let run = plactic(&["class", "212"]);
    assert_eq!(run.status, 0);
    assert_eq!(run.stdout, "212\n221\n");

    // The listing always contains the normal form.
    let normalized = plactic(&["normalize", "212"]).stdout;
    assert!(run.stdout.lines().any(|l| l == normalized.trim()));

    let run = plactic(&["class", "212", "--output", "json"]);
    let value = json(&run.stdout);
    assert_eq!(value["size"], 2);
    assert_eq!(value["class"], serde_json::json!(["2 1 2", "2 2 1"]));
}

#[test]
fn class_budget_env_var_is_honored() {
    let run = plactic_with(&["class", "212"], None, &[("PLACTIC_CLASS_BUDGET", "1")]);
    assert_eq!(run.status, 2);
    assert!(run.stderr.contains("budget"), "stderr: {}", run.stderr);

    let run = plactic_with(&["class", "212"], None, &[("PLACTIC_CLASS_BUDGET", "50")]);
    assert_eq!(run.status, 0);

    let run = plactic_with(&["class", "212"], None, &[("PLACTIC_CLASS_BUDGET", "zero")]);
    assert_eq!(run.status, 2);
    assert!(
        run.stderr.contains("PLACTIC_CLASS_BUDGET"),
        "stderr: {}",
        run.stderr
    );
}

#[test]
fn two_word_verbs_take_one_stdin_line_each() {
    let run = plactic_with(&["equal", "-", "-"], Some("# pair\n212\n221\n"), &[]);
    assert_eq!(run.status, 0);
    assert_eq!(run.stdout, "equal\n");

    let run = plactic_with(&["solve-left", "-", "2"], Some("1\n"), &[]);
    assert_eq!(run.status, 0);
    assert_eq!(json(&run.stdout)["left"], "2 2");
}

#[test]
fn missing_stdin_words_are_an_error() {
    let run = plactic_with(&["multiply", "-", "-"], Some("21\n"), &[]);
    assert_eq!(run.status, 2);
    assert!(
        run.stderr.contains("standard input"),
        "stderr: {}",
        run.stderr
    );
}
