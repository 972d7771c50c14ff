//! End-to-end checks of the `podc` binary: output formats, exit codes,
//! environment overrides, and error paths.

use std::process::{Command, Output};

fn podc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_podc"))
        .args(args)
        .env_remove("PODC_FORMAT")
        .env_remove("PODC_MAX_ENUM_N")
        .env_remove("PODC_ORDER")
        .output()
        .expect("binary runs")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

fn stderr_of(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).unwrap()
}

#[test]
fn count_series_method_matches_enumeration() {
    let by_enum = podc(&["count", "--family", "o3", "--n", "0..12"]);
    let by_series = podc(&["count", "--family", "o3", "--n", "0..12", "--method", "series"]);
    assert_eq!(by_enum.status.code(), Some(0));
    // Same numbers, different header.
    let tail = |s: String| s.lines().skip(1).map(String::from).collect::<Vec<_>>();
    assert_eq!(tail(stdout_of(&by_enum)), tail(stdout_of(&by_series)));
}

#[test]
fn count_json_uses_decimal_strings() {
    let out = podc(&[
        "count", "--family", "pod", "--n", "4..5", "--format", "json", "--method", "both",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(doc["family"], "pod");
    assert_eq!(doc["rows"][0]["enumeration"], "3");
    assert_eq!(doc["rows"][0]["series"], "3");
    assert_eq!(doc["rows"][0]["match"], true);
    assert_eq!(doc["rows"][1]["n"], 5);
}

#[test]
fn count_csv_has_a_header_row() {
    let out = podc(&["count", "--family", "c", "--n", "0..3", "--format", "csv"]);
    let text = stdout_of(&out);
    assert_eq!(text.lines().next(), Some("n,c"));
    assert_eq!(text.lines().count(), 5);
}

#[test]
fn enumerate_lists_partitions_in_order() {
    let out = podc(&["enumerate", "--n", "4"]);
    assert_eq!(stdout_of(&out), "4\n3,1\n2,2\n2,1,1\n1,1,1,1\n");
    let out = podc(&["enumerate", "--n", "4", "--family", "pod"]);
    assert_eq!(stdout_of(&out), "4\n3,1\n2,2\n");
    let out = podc(&["enumerate", "--n", "0"]);
    assert_eq!(stdout_of(&out), "-\n");
}

#[test]
fn enumerate_json_counts_members() {
    let out = podc(&["enumerate", "--n", "5", "--family", "podgt2", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(doc["count"], 1);
    assert_eq!(doc["partitions"][0][0], 5);
}

#[test]
fn enumeration_bound_is_refused_with_a_named_bound() {
    let out = podc(&["enumerate", "--n", "61"]);
    assert_eq!(out.status.code(), Some(2));
    let msg = stderr_of(&out);
    assert!(msg.contains("61") && msg.contains("60"), "{msg}");
    // Raising the bound lifts the refusal.
    let out = podc(&["enumerate", "--n", "61", "--max-enum-n", "61", "--family", "podgt2"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn series_plain_prints_a_table() {
    let out = podc(&["series", "--name", "pod", "--order", "5"]);
    assert_eq!(
        stdout_of(&out),
        "n\tcoefficient\n0\t1\n1\t1\n2\t1\n3\t2\n4\t3\n5\t4\n"
    );
}

#[test]
fn series_rejects_unknown_names_listing_the_valid_ones() {
    let out = podc(&["series", "--name", "nope"]);
    assert_eq!(out.status.code(), Some(2));
    let msg = stderr_of(&out);
    assert!(msg.contains("lambda_closed"), "{msg}");
}

#[test]
fn lambda_closed_constant_term_is_one() {
    let out = podc(&["series", "--name", "lambda_closed", "--order", "0", "--format", "json"]);
    assert_eq!(stdout_of(&out), "{\"order\":0,\"coeffs\":[\"1\"]}\n");
}

#[test]
fn format_env_variable_is_honored() {
    let output = Command::new(env!("CARGO_BIN_EXE_podc"))
        .args(["series", "--name", "o2", "--order", "4"])
        .env("PODC_FORMAT", "json")
        .env_remove("PODC_MAX_ENUM_N")
        .env_remove("PODC_ORDER")
        .output()
        .expect("binary runs");
    assert_eq!(
        String::from_utf8(output.stdout).unwrap(),
        "{\"order\":4,\"coeffs\":[\"0\",\"0\",\"0\",\"0\",\"1\"]}\n"
    );
}

#[test]
fn map_split_prints_both_components() {
    let out = podc(&["map", "--apply", "split", "--partition", "12,12,11,11,11,8,3"]);
    assert_eq!(
        stdout_of(&out),
        "input:    12,12,11,11,11,8,3\nop:       split\nalpha:    12,12,11,8,3\nbeta:     11,11\n"
    );
}

#[test]
fn map_phi_rejects_odd_multiplicities() {
    let out = podc(&["map", "--apply", "phi", "--partition", "5,3,3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("part 5"), "{}", stderr_of(&out));
}

#[test]
fn map_backward_requires_a_source() {
    let out = podc(&[
        "map", "--theorem", "3.1", "--partition", "6,4", "--direction", "backward",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("--source"));
    // And validates the source against the theorem.
    let out = podc(&[
        "map", "--theorem", "3.1", "--partition", "6,4", "--direction", "backward", "--source",
        "o3(n+2)",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn map_range_guard_names_the_theorem() {
    let out = podc(&["map", "--theorem", "3.2", "--partition", "1,1"]);
    assert_eq!(out.status.code(), Some(2));
    let msg = stderr_of(&out);
    assert!(msg.contains("3.2") && msg.contains("n > 2"), "{msg}");
}

#[test]
fn verify_identity_series_exits_zero() {
    let out = podc(&[
        "verify", "--identity", "1.1", "--max-n", "200", "--method", "series",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).contains("result:   PASS"));
}

#[test]
fn verify_identity_json_report() {
    let out = podc(&[
        "verify", "--identity", "1.2", "--max-n", "20", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(doc["passed"], true);
    assert_eq!(doc["range"][0], 5);
    assert_eq!(doc["range"][1], 20);
    assert!(doc["below_range"].as_array().unwrap().len() == 5);
}

#[test]
fn verify_bijection_single_level() {
    let out = podc(&["verify", "--bijection", "3.1", "--n", "20"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.contains("cardinality"), "{text}");
    assert!(text.contains("result:   PASS"));
}

#[test]
fn verify_bijection_range_guard() {
    let out = podc(&["verify", "--bijection", "3.2", "--n", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("n > 2"));
}

#[test]
fn verify_proof_chain_summary() {
    let out = podc(&["verify", "--proof-chain", "--order", "120"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.contains("ok    andrews-bachraoui-1"));
    assert!(text.contains("ok    theorem-displays"));
}

#[test]
fn verify_cross_check_csv() {
    let out = podc(&[
        "verify", "--cross-check", "o1", "--max-n", "15", "--format", "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.starts_with("subject,range_lo,range_hi,checked,failures,passed,wall_ms"));
    assert!(text.contains(",true,"));
}

#[test]
fn verify_oeis_against_the_committed_fixture() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/data/pod.bfile");
    let out = podc(&["verify", "--oeis", "pod", "--bfile", path]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).contains("checked:  61"));
}

#[test]
fn verify_oeis_mismatched_offset_fails_with_exit_one() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/data/pod.bfile");
    let out = podc(&[
        "verify", "--oeis", "pod", "--bfile", path, "--offset", "1",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout_of(&out).contains("result:   FAIL"));
}

#[test]
fn verify_requires_exactly_one_subject() {
    let out = podc(&["verify", "--identity", "1.1", "--proof-chain"]);
    assert_eq!(out.status.code(), Some(2));
    let out = podc(&["verify"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn help_exits_zero() {
    let out = podc(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    for sub in ["count", "enumerate", "map", "verify", "series"] {
        assert!(text.contains(sub), "help missing {sub}");
    }
}
