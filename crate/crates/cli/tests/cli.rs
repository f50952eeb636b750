use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

use qild::geometry::normalize_direction;
use qild::mpoly::MultiPoly;
use qild::qild::{QilDecomposition, QilFactor};
use qild::text::{parse_poly, parse_poly_in, parse_univariate};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

fn qild(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_qild"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    {
        let mut pipe = child.stdin.take().unwrap();
        pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    }
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

/// Rebuilds the decomposition from JSON output and multiplies it out.
fn reexpand(json: &Value, names: &[String]) -> MultiPoly {
    let ints = |v: &Value| -> Vec<i64> {
        v.as_array()
            .unwrap()
            .iter()
            .map(|x| x.as_i64().unwrap())
            .collect()
    };
    let content = parse_poly(json["content"].as_str().unwrap())
        .unwrap()
        .0
        .as_constant()
        .unwrap();
    let factors = json["factors"]
        .as_array()
        .unwrap()
        .iter()
        .map(|f| QilFactor {
            ty: normalize_direction(&ints(&f["type"])).unwrap(),
            poly: parse_univariate(f["poly"].as_str().unwrap()).unwrap(),
        })
        .collect();
    let d = QilDecomposition {
        content,
        monomial: ints(&json["monomial"]),
        p0: parse_poly_in(json["p0"].as_str().unwrap(), names).unwrap(),
        factors,
    };
    assert_eq!(json["nvars"].as_u64().unwrap() as usize, names.len());
    d.expand().unwrap()
}

fn positional(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

#[test]
fn four_variable_sample_as_json() {
    let path = data("four_variable.txt");
    let out = qild(
        &["--algorithm", "newton", "--json", path.to_str().unwrap()],
        None,
    );
    assert!(out.status.success(), "{}", stderr(&out));
    let json: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["monomial"], serde_json::json!([8, 12, 12, 0]));
    assert_eq!(json["p0"], "q*x1*x3+x2^2*x3+x2^2*x4");
    assert_eq!(
        json["factors"][0]["type"],
        serde_json::json!([-4, 8, -6, 7])
    );
    assert_eq!(json["factors"][0]["poly"], "7*q*y^2-2*y+2*q");
    assert_eq!(json["factors"][1]["type"], serde_json::json!([2, -4, 3, 5]));
    assert_eq!(json["factors"][1]["poly"], "3*q^2*y^3+9*y+1");

    let src = std::fs::read_to_string(&path).unwrap();
    let input = parse_poly(&src).unwrap().0;
    assert_eq!(reexpand(&json, &positional(4)), input);
}

#[test]
fn algorithms_emit_identical_json() {
    let path = data("four_variable.txt");
    let run = |alg: &str, extra: &[&str]| {
        let mut args = vec!["--json", "--algorithm", alg];
        args.extend_from_slice(extra);
        let out = qild(&args, None);
        assert!(out.status.success(), "{}", stderr(&out));
        stdout(&out)
    };
    let file = [path.to_str().unwrap()];
    assert_eq!(run("newton", &file), run("bivariate", &file));
    assert_eq!(run("newton", &file), run("oracle", &file));
    for seed in ["1", "2", "3", "4", "5", "6"] {
        let gen = ["--generate", "3,2,2,1", "--seed", seed];
        let a = run("newton", &gen);
        assert_eq!(a, run("bivariate", &gen), "seed {seed}");
        let src = stdout(&qild(
            &["--generate", "3,2,2,1", "--seed", seed, "--generate-only"],
            None,
        ));
        let input = parse_poly(&src).unwrap().0;
        let json: Value = serde_json::from_str(&a).unwrap();
        assert_eq!(reexpand(&json, &positional(3)), input, "seed {seed}");
    }
}

#[test]
fn constant_input() {
    let out = qild(&[], Some("5"));
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("content: 5"), "{text}");
    assert!(text.contains("factors: []"), "{text}");
}

#[test]
fn linearity_only() {
    let out = qild(&["--linearity-only"], Some("x1*x2 - q"));
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "q-integer-linear: true");

    let path = data("four_variable.txt");
    let out = qild(&["--linearity-only", path.to_str().unwrap()], None);
    let text = stdout(&out);
    assert!(text.contains("q-integer-linear: false"), "{text}");
    assert!(text.contains("witness: non-unique minimum of x4"), "{text}");
}

#[test]
fn named_variables_and_verification() {
    let path = data("named.txt");
    let out = qild(&["--verify", "--json", path.to_str().unwrap()], None);
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(stderr(&out).contains("verify: ok"));
    let json: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let names = vec!["a".to_string(), "b".to_string()];
    let src = std::fs::read_to_string(&path).unwrap();
    assert_eq!(
        reexpand(&json, &names),
        parse_poly_in(&src, &names).unwrap()
    );

    let out = qild(&["--vars", "b,a", "--json"], Some("a^2*b + q*a*b^2"));
    let json: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["monomial"], serde_json::json!([2, 1]));
    assert_eq!(json["factors"][0]["poly"], "y+q");
    assert_eq!(json["factors"][0]["type"], serde_json::json!([-1, 1]));
}

#[test]
fn exit_codes() {
    let out = qild(&[], Some("x1 + * x2"));
    assert_eq!(out.status.code(), Some(1));
    assert!(
        stderr(&out).contains("line 1, column 6"),
        "{}",
        stderr(&out)
    );

    let out = qild(&[data("bad.txt").to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(1));

    let out = qild(&[], Some("x1 - x1"));
    assert_eq!(out.status.code(), Some(2));

    let out = qild(&["--vars", "x1"], Some("x1 + x2"));
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bench_reports_timings() {
    let out = qild(&["--bench", "3"], Some("x1^2*x2^2 - q^2"));
    assert!(out.status.success());
    assert!(stderr(&out).contains("bench: 3 runs"), "{}", stderr(&out));
}
