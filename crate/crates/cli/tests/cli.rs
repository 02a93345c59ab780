use std::io::Write;

use assert_cmd::Command;
use serde_json::Value;

use framestab::FrameReport;

fn framestab() -> Command {
    Command::cargo_bin("framestab").unwrap()
}

fn stdout_of(args: &[&str]) -> String {
    let out = framestab().args(args).assert().success().get_output().stdout.clone();
    String::from_utf8(out).unwrap()
}

fn stderr_of_failure(args: &[&str]) -> String {
    let out = framestab().args(args).assert().failure().code(1).get_output().stderr.clone();
    String::from_utf8(out).unwrap()
}

#[test]
fn catalog_list_and_show() {
    let text = stdout_of(&["catalog", "list"]);
    for id in ["z4-len8-1", "z4-leech-standard", "bin-moonshine-d", "bin-even-n"] {
        assert!(text.contains(id), "{id}");
    }
    let rows: Value = serde_json::from_str(&stdout_of(&["catalog", "list", "--json"])).unwrap();
    assert_eq!(rows.as_array().unwrap().len(), text.lines().count());
    assert_eq!(rows[0]["kind"], "z4");
    assert_eq!(
        stdout_of(&["catalog", "show", "z4-len8-4"]),
        "3111 3111\n1111 2000\n1320 1100\n1010 1032\n"
    );
    assert!(stderr_of_failure(&["catalog", "show", "z4-len8-9"]).contains("z4-len8-9"));
}

#[test]
fn analyze_from_file_and_catalog() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "# octacode\n3111 3111\n1111 2000\n1320 1100\n1010 1032").unwrap();
    let path = file.path().to_str().unwrap();
    let json: Value = serde_json::from_str(&stdout_of(&["analyze", "-i", path, "--json"])).unwrap();
    assert_eq!(json["k1"], 4);
    assert_eq!(json["k2"], 0);
    assert_eq!(json["type_ii"], true);
    assert_eq!(json["min_euclidean_weight"], 8);
    assert_eq!(json["extremal"], true);

    let text = stdout_of(&["analyze", "-i", "z4-len8-2"]);
    assert!(text.contains("shape: 4^2*2^4"), "{text}");
}

#[test]
fn frame_reports() {
    let text = stdout_of(&["frame", "-i", "z4-len8-1", "--variant", "lattice", "-q"]);
    assert!(text.contains("2^(1+14)"), "{text}");

    let out = stdout_of(&["frame", "-i", "z4-len8-4", "--variant", "lattice", "--json", "-q"]);
    let report: FrameReport = serde_json::from_str(&out).unwrap();
    assert_eq!(report.stab_order, "176160768");
    assert_eq!((report.dims.p, report.pointwise.a, report.pointwise.b), (9, 4, 5));
    assert_eq!(serde_json::to_string_pretty(&report).unwrap(), out.trim_end());

    let out = stdout_of(&["frame", "-i", "z4-len8-4", "--variant", "orbifold", "--enumerate-h", "--json", "-q"]);
    let json: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(json["h_count"], "15");
    assert_eq!(json["cross_check"]["h_direct"], "15");
    assert_eq!(json["cross_check"]["h_index"], "15");
}

#[test]
fn quiet_silences_progress() {
    let args = ["frame", "-i", "z4-len8-2", "--variant", "lattice"];
    let loud = framestab().args(args).assert().success().get_output().stderr.clone();
    assert!(!loud.is_empty());
    framestab().args(args).arg("-q").assert().success().stderr("");
}

#[test]
fn aut_output() {
    let text = stdout_of(&["aut", "-i", "bin-rm-2-4", "--binary", "-q"]);
    assert!(text.contains("order: 322560"), "{text}");
    let json: Value = serde_json::from_str(&stdout_of(&["aut", "-i", "z4-len8-3", "--json", "-q"])).unwrap();
    assert_eq!(json["order"], "6144");
    assert_eq!(json["kernel_order"], "16");
    assert_eq!(json["image_order"], "384");
}

#[test]
fn errors() {
    let err = stderr_of_failure(&["frame", "-i", "z4-len8-1", "--variant", "orbifold"]);
    assert!(err.contains("minimum weight of C0 is 2"), "{err}");
    assert!(stderr_of_failure(&["aut", "-i", "z4-len8-1", "--binary"]).contains("error:"));
    assert!(stderr_of_failure(&["analyze", "-i", "bin-golay"]).contains("error:"));
    assert!(stderr_of_failure(&["analyze", "-i", "no-such-code"]).contains("no-such-code"));

    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "0123\n01x3").unwrap();
    let err = stderr_of_failure(&["analyze", "-i", file.path().to_str().unwrap()]);
    assert!(err.contains("line 2, column 3"), "{err}");

    let err = stderr_of_failure(&["aut", "-i", "bin-golay", "--binary", "--aut-budget", "3", "-q"]);
    assert!(err.contains("budget"), "{err}");
    let out = framestab()
        .args(["aut", "-i", "bin-golay", "--binary", "-q"])
        .env("FRAMESTAB_AUT_BUDGET", "3")
        .assert()
        .failure();
    assert!(String::from_utf8_lossy(&out.get_output().stderr).contains("budget"));

    framestab().args(["frame", "-i", "z4-len8-1", "--variant", "nope"]).assert().failure().code(2);
}
