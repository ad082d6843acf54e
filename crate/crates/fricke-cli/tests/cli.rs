//! End-to-end tests of the fricke binary: documented outputs, exit codes,
//! and the invariant that parsing the JSON output and re-rendering text
//! reproduces the text output byte for byte.

use fricke_cli::{
    render_class, render_identities, render_isogeny, render_monster, render_split, render_ss,
    render_star, render_verify, ClassOut, IsogenyOut, MonsterOut, ReportOut, SplitOut, SsOut,
    StarOut, StepOut,
};
use std::process::Command;

fn run(args: &[&str]) -> (String, String, i32) {
    run_env(args, &[])
}

fn run_env(args: &[&str], env: &[(&str, &str)]) -> (String, String, i32) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_fricke"));
    cmd.args(args);
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("binary runs");
    (
        String::from_utf8(out.stdout).expect("utf8 stdout"),
        String::from_utf8(out.stderr).expect("utf8 stderr"),
        out.status.code().expect("exit code"),
    )
}

#[test]
fn ss_documented_outputs() {
    for (p, want) in [(23u64, "x(x+4)(x+20)"), (5, "x"), (2, "x"), (3, "x")] {
        let (out, err, code) = run(&["ss", "--prime", &p.to_string()]);
        assert_eq!(out, format!("{want}\n"), "ss at {p}");
        assert_eq!(err, "");
        assert_eq!(code, 0);
    }
}

#[test]
fn star_documented_outputs() {
    let cases = [
        (5u64, 11u64, "Y(Y+3)(Y+4)(Y+7)"),
        (7, 13, "(Y+1)(Y+5)(Y+12)(Y^2+10Y+5)"),
        (3, 5, "Y(Y+2)"),
    ];
    for (n, p, want) in cases {
        let (out, _, code) = run(&[
            "star",
            "--level",
            &n.to_string(),
            "--prime",
            &p.to_string(),
        ]);
        assert_eq!(out, format!("{want}\n"), "star at level {n}, prime {p}");
        assert_eq!(code, 0);
    }
}

#[test]
fn both_methods_render_identically() {
    for (n, p) in [(2u64, 31u64), (3, 41), (5, 43), (7, 47)] {
        let base = ["star", "--level", &n.to_string(), "--prime", &p.to_string()];
        let (roots, _, _) = run(&[&base[..], &["--method", "roots"]].concat());
        let (theorem, _, _) = run(&[&base[..], &["--method", "theorem"]].concat());
        assert_eq!(roots, theorem, "methods disagree at level {n}, prime {p}");
    }
}

#[test]
fn usage_and_domain_errors_exit_2() {
    let cases: &[&[&str]] = &[
        &["ss", "--prime", "4"],
        &["ss", "--prime", "1"],
        &["star", "--level", "6", "--prime", "11"],
        &["star", "--level", "5", "--prime", "5"],
        &["star", "--level", "5", "--prime", "3"],
        &["split", "--level", "5", "--bound", "3"],
        &["monster", "--bound", "1"],
        &["isogeny", "--level", "2", "--prime", "101", "--trials", "0"],
        &["verify", "--level", "9", "--from", "5", "--to", "7"],
        &["class-verify", "--disc", "-99"],
        &["class-verify", "--disc", "-100", "--alt"],
        &["ss"],
        &["nonsense"],
    ];
    for args in cases {
        let (out, err, code) = run(args);
        assert_eq!(code, 2, "args {args:?} gave stdout {out:?} stderr {err:?}");
        assert_eq!(out, "", "usage errors must keep stdout clean: {args:?}");
        assert!(!err.is_empty(), "missing diagnostic for {args:?}");
    }
}

#[test]
fn excluded_prime_message_names_the_restriction() {
    let (_, err, code) = run(&["star", "--level", "5", "--prime", "5"]);
    assert_eq!(code, 2);
    assert!(
        err.contains("differ from the level"),
        "unhelpful message: {err}"
    );
}

#[test]
fn verify_streams_lines_and_summary() {
    let (out, _, code) = run(&["verify", "--level", "7", "--from", "5", "--to", "7"]);
    assert_eq!(
        out,
        "congruence7@p=5/direct: pass\ncongruence7@p=7: skipped\nsummary: 1 pass, 0 fail, 1 skipped\n"
    );
    assert_eq!(code, 0);
}

#[test]
fn verify_all_levels_covers_each() {
    let (out, _, code) = run(&["verify", "--level", "all", "--from", "5", "--to", "30"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    // 8 primes in [5, 30] at each of the four levels, plus the summary.
    assert_eq!(lines.len(), 4 * 8 + 1);
    for n in [2, 3, 5, 7] {
        assert!(lines.iter().any(|l| l.starts_with(&format!("congruence{n}@p=11"))));
    }
    assert!(lines.last().unwrap().starts_with("summary: "));
}

#[test]
fn json_and_text_round_trip_byte_for_byte() {
    // Parsing the JSON output and re-rendering text must reproduce the text
    // output exactly, for every subcommand.
    let ss_args = vec!["ss", "--prime", "23"];
    let star_args = vec!["star", "--level", "7", "--prime", "13"];
    let verify_args = vec!["verify", "--level", "7", "--from", "5", "--to", "60"];
    let split_args = vec!["split", "--level", "5", "--bound", "300"];
    let monster_args = vec!["monster", "--bound", "300"];
    let class_args = vec!["class-verify", "--disc", "-100"];
    let identities_args = vec!["identities"];
    let isogeny_args = vec![
        "isogeny", "--level", "2", "--prime", "101", "--trials", "10", "--seed", "1",
    ];

    let rerender = |args: &[&str]| -> (String, String) {
        let (text, _, _) = run(args);
        let mut jargs = args.to_vec();
        jargs.push("--json");
        let (json, _, _) = run(&jargs);
        (text, json)
    };

    let (text, json) = rerender(&ss_args);
    let p: SsOut = serde_json::from_str(&json).unwrap();
    assert_eq!(text, render_ss(&p) + "\n");

    let (text, json) = rerender(&star_args);
    let p: StarOut = serde_json::from_str(&json).unwrap();
    assert_eq!(text, render_star(&p) + "\n");

    let (text, json) = rerender(&verify_args);
    let p: Vec<ReportOut> = serde_json::from_str(&json).unwrap();
    assert_eq!(text, render_verify(&p) + "\n");

    let (text, json) = rerender(&split_args);
    let p: SplitOut = serde_json::from_str(&json).unwrap();
    assert_eq!(text, render_split(&p) + "\n");

    let (text, json) = rerender(&monster_args);
    let p: MonsterOut = serde_json::from_str(&json).unwrap();
    assert_eq!(text, render_monster(&p) + "\n");

    let (text, json) = rerender(&class_args);
    let p: ClassOut = serde_json::from_str(&json).unwrap();
    assert_eq!(text, render_class(&p) + "\n");

    let (text, json) = rerender(&identities_args);
    let p: Vec<StepOut> = serde_json::from_str(&json).unwrap();
    assert_eq!(text, render_identities(&p) + "\n");

    let (text, json) = rerender(&isogeny_args);
    let p: IsogenyOut = serde_json::from_str(&json).unwrap();
    assert_eq!(text, render_isogeny(&p) + "\n");
}

#[test]
fn randomized_commands_echo_their_seed() {
    let (json, _, _) = run(&[
        "isogeny", "--level", "3", "--prime", "101", "--trials", "5", "--seed", "42", "--json",
    ]);
    let p: IsogenyOut = serde_json::from_str(&json).unwrap();
    assert_eq!(p.seed, 42);
    assert_eq!(p.trials, 5);
    assert_eq!(p.report.verdict, "pass");

    let (json, _, _) = run(&["star", "--level", "2", "--prime", "11", "--json"]);
    let p: StarOut = serde_json::from_str(&json).unwrap();
    assert_eq!(p.seed, 0, "default seed must be echoed");
}

#[test]
fn results_do_not_depend_on_seed_or_threads() {
    let (a, _, _) = run(&["verify", "--level", "5", "--from", "5", "--to", "120"]);
    let (b, _, _) = run_env(
        &["verify", "--level", "5", "--from", "5", "--to", "120"],
        &[("FRICKE_THREADS", "3")],
    );
    assert_eq!(a, b, "worker count changed the output");

    let (c, _, _) = run(&["ss", "--prime", "97", "--seed", "123"]);
    let (d, _, _) = run(&["ss", "--prime", "97", "--seed", "7"]);
    assert_eq!(c, d, "factoring seed changed the canonical output");
}

#[test]
fn class_pipeline_reports_each_step() {
    let (out, _, code) = run(&["class-verify", "--disc", "-196"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[0].starts_with("quartic-level7-resultant: pass"));
    assert!(lines[1].starts_with("f196-class196-power: pass"));
    assert_eq!(lines[2], "class pipeline for discriminant -196: pass");
}

#[test]
fn split_annotations_name_the_groups() {
    let (five, _, _) = run(&["split", "--level", "5", "--bound", "300"]);
    assert!(five.contains("Harada-Norton group HN"));
    let (seven, _, _) = run(&["split", "--level", "7", "--bound", "300"]);
    assert!(seven.contains("order of the Held group"));
    let (two, _, _) = run(&["split", "--level", "2", "--bound", "100"]);
    assert!(!two.contains("group"), "levels 2 and 3 carry no annotation");
}
