use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

use arcspline::io::parse_polyarc;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn arcspline(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_arcspline"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("arcspline-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn field(text: &str, key: &str) -> f64 {
    text.lines()
        .find_map(|l| l.strip_prefix(key))
        .unwrap_or_else(|| panic!("no {key} in\n{text}"))
        .trim()
        .parse()
        .unwrap()
}

#[test]
fn info_on_the_unit_circle() {
    let out = arcspline(&["info", fixture("circle.json").to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!((field(&text, "length:") - std::f64::consts::TAU).abs() < 1e-12);
    assert!((field(&text, "area:") - std::f64::consts::PI).abs() < 1e-12);
    assert!((field(&text, "energy (EI = 1):") - std::f64::consts::PI).abs() < 1e-12);
    assert!(text.contains("segments: 2 (closed)"));
}

#[test]
fn info_reads_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_arcspline"))
        .args(["info", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(br#"[{"x": 0, "y": 0}, {"x": 3, "y": 4}]"#)
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    assert_eq!(field(&stdout(&out), "length:"), 5.0);
}

#[test]
fn smoothing_a_straight_polyline() {
    let file = fixture("collinear.json");
    for obj in ["length", "area", "energy"] {
        let out = arcspline(&["smooth", file.to_str().unwrap(), "--objective", obj, "--degrees"]);
        assert!(out.status.success(), "{obj}");
        let text = stdout(&out);
        let row: Vec<&str> = text.lines().nth(1).unwrap().split_whitespace().collect();
        let theta0: f64 = row[1].parse().unwrap();
        let length: f64 = row[2].parse().unwrap();
        assert!(theta0.abs() <= 0.6, "{obj}: {theta0}");
        assert!((length - 4.0).abs() < 1e-6, "{obj}: {length}");
        assert!(text.contains("reductions: 15"));
    }
}

#[test]
fn smooth_writes_the_optimal_spline() {
    let doc = scratch("smooth.json");
    let svg = scratch("smooth.svg");
    let out = arcspline(&[
        "smooth",
        fixture("zigzag.json").to_str().unwrap(),
        "--objective",
        "length",
        "-o",
        doc.to_str().unwrap(),
        "--svg",
        svg.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let spline = parse_polyarc(&fs::read_to_string(&doc).unwrap()).unwrap();
    assert_eq!(spline.segment_count(), 4);
    assert!(spline.g1_defect().unwrap() < 1e-9);
    assert!(fs::read_to_string(&svg).unwrap().contains("<path"));
    let row: Vec<String> = stdout(&out)
        .lines()
        .nth(1)
        .unwrap()
        .split_whitespace()
        .map(String::from)
        .collect();
    let length: f64 = row[2].parse().unwrap();
    assert!((length - spline.total_length().unwrap()).abs() < 1e-5);
}

#[test]
fn spline_round_trips_through_info() {
    let doc = scratch("spline.json");
    let out = arcspline(&[
        "spline",
        fixture("zigzag.json").to_str().unwrap(),
        "--theta0",
        "-20",
        "--degrees",
        "-o",
        doc.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let report = stdout(&out);
    assert!(field(&report, "g1 defect:") < 1e-9);
    let text = fs::read_to_string(&doc).unwrap();
    assert!(text.contains(r#""angle_unit": "degrees""#));
    assert!(text.contains(r#""units": "mm""#));
    let info = arcspline(&["info", doc.to_str().unwrap()]);
    assert!(info.status.success());
}

#[test]
fn family_draws_every_member() {
    let out = arcspline(&[
        "family",
        fixture("chord.json").to_str().unwrap(),
        "--from",
        "-270",
        "--to",
        "270",
        "--step",
        "30",
        "--degrees",
    ]);
    assert!(out.status.success());
    let svg = stdout(&out);
    assert_eq!(svg.matches("<path").count(), 19);
    assert!(svg.contains("scale(1,-1)"));
    assert!(String::from_utf8_lossy(&out.stderr).contains("19 curves"));
}

#[test]
fn sample_prints_points() {
    let out = arcspline(&["sample", fixture("circle.json").to_str().unwrap(), "-n", "5"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let pts: Vec<(f64, f64)> = text
        .lines()
        .map(|l| {
            let mut it = l.split_whitespace().map(|v| v.parse::<f64>().unwrap());
            (it.next().unwrap(), it.next().unwrap())
        })
        .collect();
    assert!(pts.len() >= 9);
    for (x, y) in pts {
        assert!((x.hypot(y) - 1.0).abs() < 1e-12);
    }
}

#[test]
fn output_is_deterministic() {
    let zigzag = fixture("zigzag.json");
    let args = ["smooth", zigzag.to_str().unwrap(), "--objective", "area"];
    let a = arcspline(&args);
    let b = arcspline(&args);
    assert_eq!(a.stdout, b.stdout);
    let fam = [
        "family",
        zigzag.to_str().unwrap(),
        "--from",
        "-1",
        "--to",
        "1",
        "--step",
        "0.25",
    ];
    assert_eq!(arcspline(&fam).stdout, arcspline(&fam).stdout);
}

#[test]
fn exit_codes() {
    assert_eq!(arcspline(&["--help"]).status.code(), Some(0));
    assert_eq!(arcspline(&["bogus"]).status.code(), Some(1));
    assert_eq!(arcspline(&["info", "/nonexistent/file.json"]).status.code(), Some(1));
    let bad = arcspline(&["info", fixture("bad_theta.json").to_str().unwrap()]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("point 0"));
    let bad_objective = arcspline(&[
        "smooth",
        fixture("zigzag.json").to_str().unwrap(),
        "--objective",
        "curvature",
    ]);
    assert_eq!(bad_objective.status.code(), Some(1));

    // a two-vertex closed loop whose only family member at 0 is a full circle
    let loop_file = scratch("loop.json");
    fs::write(
        &loop_file,
        r#"{"closed": true, "points": [{"x": 0, "y": 0}, {"x": 1, "y": 0}]}"#,
    )
    .unwrap();
    let full = arcspline(&["spline", loop_file.to_str().unwrap(), "--theta0", "0"]);
    assert_eq!(full.status.code(), Some(1));
    let narrow = arcspline(&[
        "smooth",
        loop_file.to_str().unwrap(),
        "--objective",
        "length",
        "--lo",
        "-0.001",
        "--up",
        "0.001",
        "--tol",
        "0.01",
        "--scan-step",
        "0",
    ]);
    assert_eq!(
        narrow.status.code(),
        Some(2),
        "{}",
        String::from_utf8_lossy(&narrow.stderr)
    );
}
