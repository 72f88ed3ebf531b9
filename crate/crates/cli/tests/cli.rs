use std::process::{Command, Output};

fn airpockets(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_airpockets"))
        .args(args)
        .env_remove("AIRPOCKETS_ORDER")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let out = airpockets(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    stdout(&out)
}

#[test]
fn count_with_check() {
    let text = ok(&["count", "peakless", "5", "1", "--check"]);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("15"));
    assert!(lines.next().unwrap().starts_with("engines agree"));
}

#[test]
fn count_single_entries() {
    assert_eq!(ok(&["count", "uuless", "4", "0"]).trim(), "9");
    assert_eq!(ok(&["count", "peakless", "0", "0"]).trim(), "1");
    assert_eq!(
        ok(&["count", "uuless", "4", "0", "--check"]).lines().next(),
        Some("9")
    );
    assert_eq!(
        ok(&["count", "valleyless", "6", "--check"]).lines().next(),
        Some("73 67 49 30 16 6 1")
    );
}

#[test]
fn triangle_outputs() {
    let text = ok(&["triangle", "none", "3"]);
    let row1: Vec<&str> = text.lines().nth(1).unwrap().split_whitespace().collect();
    assert_eq!(row1, ["1", "1", "0"]);

    let g = ok(&["triangle", "uuless", "5", "--reindex-g", "--format", "csv"]);
    assert_eq!(
        g.lines().collect::<Vec<_>>(),
        ["1", "1,1", "1,2,1", "2,4,3,1", "4,9,8,4,1"]
    );

    let json = ok(&["triangle", "peakless", "4", "--format", "json", "--riordan"]);
    let doc: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(doc["rows"][3].to_string(), "[2,3,3,1]");
    assert_eq!(doc["riordan"]["g"].to_string(), "[1,1,1,2]");
    assert_eq!(doc["riordan"]["f"].to_string(), "[0,1,1,1]");
}

#[test]
fn formats_carry_identical_values() {
    let table = ok(&["triangle", "valleyless", "6"]);
    let csv = ok(&["triangle", "valleyless", "6", "--format", "csv"]);
    let bfile = ok(&["triangle", "valleyless", "6", "--format", "bfile"]);
    let json = ok(&["triangle", "valleyless", "6", "--format", "json"]);
    let from_table: Vec<String> = table
        .lines()
        .enumerate()
        .flat_map(|(n, l)| {
            l.split_whitespace()
                .take(n + 1)
                .map(String::from)
                .collect::<Vec<_>>()
        })
        .collect();
    let from_csv: Vec<String> = csv
        .lines()
        .flat_map(|l| l.split(','))
        .map(String::from)
        .collect();
    let from_bfile: Vec<String> = bfile
        .lines()
        .map(|l| l.split(' ').nth(1).unwrap().to_string())
        .collect();
    let doc: serde_json::Value = serde_json::from_str(&json).unwrap();
    let from_json: Vec<String> = doc["rows"]
        .as_array()
        .unwrap()
        .iter()
        .flat_map(|r| r.as_array().unwrap().clone())
        .map(|v| v.to_string())
        .collect();
    assert_eq!(from_table, from_csv);
    assert_eq!(from_table, from_bfile);
    assert_eq!(from_table, from_json);
}

#[test]
fn series_examples() {
    assert_eq!(
        ok(&["series", "total1", "peakless", "9"]).trim(),
        "1 2 4 9 22 56 146 388 1048 2869"
    );
    assert_eq!(
        ok(&["series", "aseq", "peakless", "10"]).trim(),
        "1 1 0 1 0 1 -1 2 -3 6 -10"
    );
    assert_eq!(ok(&["series", "catalan", "4"]).trim(), "1 1 2 5 14");
    assert_eq!(
        ok(&["series", "total0", "uuless", "9"]).trim(),
        "1 1 2 4 9 20 47 112 274 679"
    );
    assert_eq!(
        ok(&["series", "total0", "valleyless", "9"]).trim(),
        "1 1 2 5 12 29 73 190 505 1363"
    );
    assert_eq!(
        ok(&["series", "total0", "none", "9"]).trim(),
        "1 1 2 5 13 36 105 317 982 3105"
    );
    let bfile = ok(&["series", "catalan", "3", "--format", "bfile"]);
    assert_eq!(bfile, "0 1\n1 1\n2 2\n3 5\n");
}

#[test]
fn series_order_floor_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_airpockets"))
        .args(["series", "total1", "valleyless", "9"])
        .env("AIRPOCKETS_ORDER", "3")
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "1 2 5 13 34 90 242 660 1821 5073");
    let bad = Command::new(env!("CARGO_BIN_EXE_airpockets"))
        .args(["series", "catalan", "3"])
        .env("AIRPOCKETS_ORDER", "many")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(64));
}

#[test]
fn bijection_examples() {
    assert_eq!(
        ok(&["bijection", "psi", "UUHDHUHUHD3HH"]).trim(),
        "UUUUUUDDDUDDUUDDUDDDUDUD"
    );
    assert_eq!(
        ok(&["bijection", "chi", "UHUHD2UDUHUHHUD3H"]).trim(),
        "UUHDDUDUUUDHDDH"
    );
    assert_eq!(ok(&["bijection", "phi", ""]).trim(), "H");
}

#[test]
fn bijection_trace_ends_with_image() {
    let text = ok(&["bijection", "chi", "UHUHD2UDUHUHHUD3H", "--trace"]);
    let lines: Vec<&str> = text.lines().collect();
    assert!(lines.len() > 2);
    assert!(lines.iter().any(|l| l.contains("case (vi)")));
    assert_eq!(*lines.last().unwrap(), "UUHDDUDUUUDHDDH");
}

#[test]
fn bijection_domain_violation() {
    let out = airpockets(&["bijection", "psi", "UD"]);
    assert_eq!(out.status.code(), Some(64));
    assert!(!out.stderr.is_empty());
}

#[test]
fn verify_bijections_to_nine() {
    let text = ok(&["verify", "--suite", "bijections", "--nmax", "9"]);
    assert!(text.contains("505=505"));
    assert!(text.contains("679=679"));
    assert!(text.lines().filter(|l| l.starts_with("PASS")).count() == 3);
}

#[test]
fn verify_other_suites() {
    for suite in ["systems", "triangles", "riordan"] {
        let text = ok(&["verify", "--suite", suite, "--nmax", "8"]);
        assert!(!text.contains("FAIL"), "{suite}: {text}");
        assert!(text.lines().last().unwrap().ends_with("0 failed"));
    }
}

#[test]
fn render_examples() {
    assert_eq!(ok(&["render", "UHD"]), " _\n/ \\\nheights: 1 1 0\n");
    let text = ok(&["render", "UUHDHUHUHD3HH"]);
    assert_eq!(text.lines().count(), 5);
    assert_eq!(
        text.lines().last(),
        Some("heights: 1 2 2 1 1 2 2 3 3 0 0 0")
    );
    let empty = airpockets(&["render", ""]);
    assert!(empty.status.success());
    assert!(empty.stdout.is_empty());
}

#[test]
fn exit_codes() {
    assert_eq!(
        airpockets(&["count", "sideways", "3"]).status.code(),
        Some(64)
    );
    assert_eq!(airpockets(&["render", "UX"]).status.code(), Some(64));
    assert_eq!(
        airpockets(&["count", "none", "3", "--method", "series"])
            .status
            .code(),
        Some(64)
    );
    assert_eq!(
        airpockets(&["series", "catalan", "peakless", "3"])
            .status
            .code(),
        Some(64)
    );
    assert_eq!(airpockets(&["--help"]).status.code(), Some(0));
    assert_eq!(airpockets(&["--version"]).status.code(), Some(0));
    assert_eq!(airpockets(&[]).status.code(), Some(64));
}
