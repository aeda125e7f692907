use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use pga2d::isometry::{Motor, Versor};
use pga2d::{Line, Point};

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn pga2d(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pga2d")).args(args).output().unwrap()
}

fn run_source(source: &str, extra: &[&str]) -> (Output, tempfile::TempDir) {
    let dir = tempfile::tempdir().unwrap();
    let script = dir.path().join("s.pga");
    std::fs::write(&script, source).unwrap();
    let mut args = vec!["run", script.to_str().unwrap()];
    args.extend_from_slice(extra);
    (pga2d(&args), dir)
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

/// Parses the numbers in `motor(s, x, y, z)`.
fn parse_motor(line: &str) -> Motor {
    let inner = line.split_once("motor(").unwrap().1.trim_end_matches(')');
    let v: Vec<f64> = inner.split(", ").map(|t| t.parse().unwrap()).collect();
    Motor::new(v[0], v[1], v[2], v[3]).unwrap()
}

fn value_of<'a>(text: &'a str, name: &str) -> &'a str {
    let prefix = format!("{name} = ");
    text.lines().find_map(|l| l.strip_prefix(prefix.as_str())).unwrap()
}

#[test]
fn distance_example() {
    let (out, _dir) = run_source("point A 0 0\npoint B 3 4\ndist d A B\nprint d\n", &[]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "d = 5.000000\n");
}

#[test]
fn axes_meet_at_origin() {
    let (out, _dir) = run_source("line m 1 0 0\nline n 0 1 0\nmeet P m n\nprint P\n", &[]);
    assert_eq!(stdout(&out), "P = (0.000000, 0.000000)\n");
}

#[test]
fn printed_motors_reproduce_the_targets() {
    for (name, a2, m2) in [
        ("rotation", (0.0, 1.0), [0.0, -1.0, 1.0]),
        ("translation", (2.0, 3.0), [0.0, 1.0, -3.0]),
    ] {
        let out = pga2d(&["run", data(&format!("{name}.pga")).to_str().unwrap()]);
        assert!(out.status.success(), "{name}");
        let text = stdout(&out);
        let g = parse_motor(value_of(&text, "g"));
        let a = if name == "rotation" {
            Point::at(1.0, 0.0)
        } else {
            Point::at(0.0, 0.0)
        };
        let m = if name == "rotation" {
            Line::new(-1.0, 0.0, 1.0).unwrap()
        } else {
            Line::new(0.0, 1.0, 0.0).unwrap()
        };
        let (x, y) = g.apply_point(&a).unwrap().cartesian(1e-9).unwrap();
        assert!((x - a2.0).abs() < 1e-6 && (y - a2.1).abs() < 1e-6, "{name}: ({x}, {y})");
        let img = g.apply_line(&m).unwrap().normalize(1e-9).unwrap();
        for (got, want) in img.coords().iter().zip(m2) {
            assert!((got - want).abs() < 1e-6, "{name}: {:?}", img.coords());
        }
    }
}

#[test]
fn golden_text_and_svg() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["rotation", "translation", "distance_345"] {
        let svg = dir.path().join(format!("{name}.svg"));
        let out = pga2d(&[
            "run",
            data(&format!("{name}.pga")).to_str().unwrap(),
            "--svg",
            svg.to_str().unwrap(),
        ]);
        assert!(out.status.success(), "{name}: {}", stderr(&out));
        assert_eq!(
            stdout(&out),
            std::fs::read_to_string(data(&format!("{name}.out"))).unwrap(),
            "{name}"
        );
        assert_eq!(
            std::fs::read(&svg).unwrap(),
            std::fs::read(data(&format!("{name}.svg"))).unwrap(),
            "{name}"
        );
    }
}

#[test]
fn svg_verb_writes_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("fig.svg");
    let source = format!("point A 0 0\npoint B 3 4\njoin m A B\nsvg {}\n", svg.display());
    let (out, _d) = run_source(&source, &[]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = std::fs::read_to_string(&svg).unwrap();
    assert_eq!(text.matches("<circle").count(), 2);
}

#[test]
fn parse_errors_exit_with_one() {
    let (out, _dir) = run_source("point A 0 0\nmeet P\n", &[]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("line 2"), "{}", stderr(&out));

    let (out, _dir) = run_source("point A 0 zero\n", &[]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("'zero'"), "{}", stderr(&out));

    let out = pga2d(&["run", "/nonexistent/script.pga"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn evaluation_errors_exit_with_two() {
    let (out, _dir) = run_source("point A 1 1\npoint B 1 1\njoin m A B\nprint m\n", &[]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 3"), "{}", stderr(&out));
}

#[test]
fn nothing_to_render() {
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("x.svg");
    let (out, _d) = run_source("line m 0 0 1\n", &["--svg", svg.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("nothing to render"));
}

#[test]
fn unwritable_svg_path() {
    let (out, _d) = run_source("point A 0 0\n", &["--svg", "/nonexistent/dir/x.svg"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("/nonexistent/dir/x.svg"));
}

#[test]
fn tables_match_fixture() {
    let out = pga2d(&["tables"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), std::fs::read_to_string(data("tables.txt")).unwrap());
}
