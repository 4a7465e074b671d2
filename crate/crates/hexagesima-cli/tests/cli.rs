//! Black-box CLI tests: exit codes, output formats, and determinism.

use std::process::{Command, Output};

fn hexagesima(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hexagesima"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = hexagesima(args);
    assert!(out.status.success(), "{args:?} failed: {out:?}");
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    serde_json::from_str(&stdout(args)).expect("valid JSON")
}

#[test]
fn exit_code_matrix() {
    // (arguments, expected exit code): 0 success, 1 domain, 2 usage.
    let matrix: &[(&[&str], i32)] = &[
        (&["orbits", "--rank", "60", "--count-only"], 0),
        (&["orbits", "--rank", "0"], 1),
        (&["orbits", "--rank", "abc"], 2),
        (&["orbits", "--bogus-flag"], 2),
        (&["divisors"], 0),
        (&["abacus", "eval", "6:27:49"], 0),
        (&["abacus", "eval", "6:60:49"], 1),
        (&["abacus", "add", "59:59:59:59:59:59", "1"], 1),
        (&["divide", "--parts", "24"], 0),
        (&["divide", "--parts", "360"], 1),
        (&["table", "--half", "--n", "30"], 0),
        (&["table", "--n", "0"], 1),
        (&["table", "--half", "--full", "--n", "5"], 2),
        (&["table"], 2),
        (&["nearest", "--half", "--n", "30"], 0),
        (&["growth", "--stage", "6"], 0),
        (&["growth", "--stage", "0"], 1),
        (&["render", "--kind", "orbits", "--max-rank", "2"], 0),
        (&["render", "--kind", "orbits"], 1),
        (&["render", "--kind", "nonsense"], 2),
        (&["limit", "--ranks", "1,3"], 0),
        (&["limit", "--ranks", "0"], 1),
        (&["no-such-subcommand"], 2),
    ];
    for (args, expected) in matrix {
        let out = hexagesima(args);
        assert_eq!(
            out.status.code(),
            Some(*expected),
            "{args:?}: stdout={} stderr={}",
            String::from_utf8_lossy(&out.stdout),
            String::from_utf8_lossy(&out.stderr)
        );
        if *expected == 1 {
            assert!(!out.stderr.is_empty(), "{args:?} should explain on stderr");
        }
    }
}

#[test]
fn count_only_prints_the_bare_number() {
    assert_eq!(stdout(&["orbits", "--rank", "60", "--count-only"]), "360\n");
}

#[test]
fn abacus_eval_prints_the_decimal_value() {
    assert_eq!(stdout(&["abacus", "eval", "6:27:49"]), "23269\n");
    // Prime notation reads the same numeral.
    assert_eq!(stdout(&["abacus", "eval", "6 ' ' 27 ' ' 49 '"]), "23269\n");
}

#[test]
fn abacus_encode_inverts_eval() {
    assert_eq!(stdout(&["abacus", "encode", "23269"]), "6:27:49\n");
}

#[test]
fn abacus_add_reports_the_carry_trace() {
    let out = stdout(&["abacus", "add", "59", "1"]);
    assert!(out.starts_with("sum: 1:0 (decimal 60)\n"), "{out}");
    assert!(out.contains("place 0: 60 tokens, sixty reduce to one carry token"));

    let payload = json(&["abacus", "add", "59", "1", "--json"]);
    assert_eq!(payload["schema"], "hexagesima/v1");
    assert_eq!(payload["sum"], "1:0");
    assert_eq!(payload["trace"][0]["place"], 0);
    assert_eq!(payload["trace"][0]["before"], 60);
    assert_eq!(payload["trace"][0]["carry_out"], true);
}

#[test]
fn abacus_layout_fills_a_prefix_of_slots() {
    let out = stdout(&["abacus", "layout", "49"]);
    assert!(
        out.starts_with("digit 49: 49 of 60 slots filled\n"),
        "{out}"
    );
    let filled = out.matches('#').count();
    assert_eq!(filled, 49);
    let payload = json(&["abacus", "layout", "49", "--json"]);
    assert_eq!(payload["slots"].as_array().unwrap().len(), 60);
}

#[test]
fn table_text_has_the_classical_columns() {
    let out = stdout(&["table", "--half", "--n", "30"]);
    let header = out.lines().next().unwrap();
    for column in [
        "Value in degrees",
        "Absolute error",
        "Relative error",
        "Covered arc",
    ] {
        assert!(header.contains(column), "missing {column}");
    }
    assert_eq!(out.lines().count(), 31);
}

#[test]
fn table_json_reparses_with_thirty_rows() {
    let payload = json(&["table", "--half", "--n", "30", "--json"]);
    assert_eq!(payload["schema"], "hexagesima/v1");
    assert_eq!(payload["mode"], "half");
    let rows = payload["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 30);
    assert_eq!(rows[0]["value_deg"], 1.10252169);
}

#[test]
fn circle_table_replicates_the_wedge() {
    let payload = json(&["table", "--n", "60", "--circle", "--json"]);
    assert_eq!(payload["count"], 360);
    assert_eq!(payload["angles_deg"].as_array().unwrap().len(), 360);
    assert_eq!(payload["min_deg"], 0.833883984);
    assert_eq!(payload["max_deg"], 1.10252169);
}

#[test]
fn nearest_names_row_seventeen() {
    let out = stdout(&["nearest", "--half", "--n", "30"]);
    assert!(out.starts_with("angle 17:"), "{out}");
    assert!(out.contains("neighbor angle 16:"), "{out}");
    assert!(out.contains("neighbor angle 18:"), "{out}");
    let payload = json(&["nearest", "--half", "--n", "30", "--json"]);
    assert_eq!(payload["index"], 17);
    let error = payload["abs_error_deg"].as_f64().unwrap();
    assert!((error - 0.001639548).abs() < 1e-7);
    assert_eq!(payload["neighbors"][0]["index"], 16);
    assert_eq!(payload["neighbors"][1]["index"], 18);
}

#[test]
fn growth_reports_square_and_increment() {
    let out = stdout(&["growth", "--stage", "6"]);
    assert_eq!(
        out,
        "stage 6: 36 unit triangles per wedge triangle (increment 11)\n"
    );
}

#[test]
fn divide_lists_boundaries_and_reparses() {
    let payload = json(&["divide", "--parts", "12", "--json"]);
    assert_eq!(payload["sector_deg"], 30.0);
    let boundaries = payload["boundary_angles_deg"].as_array().unwrap();
    assert_eq!(boundaries.len(), 12);
    assert_eq!(boundaries[1], 30.0);
    // The 360 refusal names the obstruction.
    let out = hexagesima(&["divide", "--parts", "360"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("trisection"));
}

#[test]
fn render_writes_svg_files_with_exact_disc_counts() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("orbits.svg");
    let out = hexagesima(&[
        "render",
        "--kind",
        "orbits",
        "--max-rank",
        "2",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let svg = std::fs::read_to_string(&path).unwrap();
    assert_eq!(svg.matches("<circle ").count(), 19);

    // A directory target picks the <kind>-<params>.svg convention.
    let out = hexagesima(&[
        "render",
        "--kind",
        "star",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(dir.path().join("star.svg").exists());
}

#[test]
fn outputs_are_byte_deterministic() {
    for args in [
        &["table", "--half", "--n", "30", "--json"] as &[&str],
        &["render", "--kind", "calendar"],
        &["limit", "--ranks", "1,3,10"],
        &["divisors", "--json"],
    ] {
        let first = hexagesima(args);
        let second = hexagesima(args);
        assert_eq!(first.stdout, second.stdout, "{args:?} output drifted");
    }
}

#[test]
fn json_outputs_reparse_under_the_schema() {
    for args in [
        &["orbits", "--rank", "4", "--json"] as &[&str],
        &["divisors", "--json"],
        &["abacus", "eval", "6:27:49", "--json"],
        &["divide", "--parts", "6", "--json"],
        &["table", "--n", "3", "--json"],
        &["nearest", "--n", "3", "--json"],
        &["growth", "--stage", "2", "--json"],
    ] {
        let payload = json(args);
        assert_eq!(payload["schema"], "hexagesima/v1", "{args:?}");
    }
}
