//! End-to-end checks of the installed binary: flag parsing, JSON shape
//! and canonical round-tripping, error codes, and verify reproducibility.

use std::process::{Command, Output};

fn holorect(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_holorect"))
        .args(args)
        .env_remove("HOLORECT_TOL")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

#[test]
fn integrate_reciprocal_over_square() {
    let out = holorect(&["integrate", "--fn", "1/z", "--rect", "-1,1,-1,1", "--json"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let doc: serde_json::Value = serde_json::from_str(text.trim()).unwrap();
    let im = doc["value"]["im"].as_f64().unwrap();
    let re = doc["value"]["re"].as_f64().unwrap();
    assert!((im - 2.0 * std::f64::consts::PI).abs() < 1e-8, "im = {im}");
    assert!(re.abs() < 1e-8);
    assert!(doc["k"].as_u64().unwrap() >= 16);
    assert!(doc["est_error"].as_f64().unwrap() >= 0.0);
}

#[test]
fn json_output_round_trips_byte_identically() {
    for args in [
        vec!["integrate", "--fn", "exp(z)*z^2", "--rect", "-1,1.5,-0.5,2", "--json"],
        vec!["winding", "--rect", "0,1,0,1", "--point", "0.5,0.5", "--oracle", "--json"],
        vec!["series", "--fn", "exp(z)", "--order", "4", "--json"],
        vec!["roots", "--fn", "z^2-1", "--rect", "-2,2,-2,2", "--value", "0,0", "--min-size", "0.01", "--json"],
    ] {
        let out = holorect(&args);
        assert!(out.status.success(), "{args:?}: {:?}", out);
        let text = stdout(&out);
        let line = text.trim();
        let parsed: serde_json::Value = serde_json::from_str(line).unwrap();
        // the library's canonical writer must agree with its own output
        let rewritten = holorect_canonical(&parsed);
        assert_eq!(line, rewritten, "non-canonical JSON for {args:?}");
    }
}

// mirrors jsonfmt::canonical for the round-trip check without exposing the
// private module: numbers at 12 significant digits, insertion order
fn holorect_canonical(v: &serde_json::Value) -> String {
    fn fmt_f64(x: f64) -> String {
        if x == 0.0 {
            return "0".into();
        }
        let sci = format!("{:.11e}", x);
        let (mant, exp) = sci.split_once('e').unwrap();
        let exp: i32 = exp.parse().unwrap();
        let trim = |s: String| {
            if s.contains('.') {
                s.trim_end_matches('0').trim_end_matches('.').to_string()
            } else {
                s
            }
        };
        if (-4..12).contains(&exp) {
            let decimals = (11 - exp).max(0) as usize;
            trim(format!("{x:.decimals$}"))
        } else {
            format!("{}e{}", trim(mant.to_string()), exp)
        }
    }
    match v {
        serde_json::Value::Null => "null".into(),
        serde_json::Value::Bool(b) => b.to_string(),
        serde_json::Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                i.to_string()
            } else if let Some(u) = n.as_u64() {
                u.to_string()
            } else {
                fmt_f64(n.as_f64().unwrap())
            }
        }
        serde_json::Value::String(s) => serde_json::to_string(s).unwrap(),
        serde_json::Value::Array(items) => {
            let inner: Vec<String> = items.iter().map(holorect_canonical).collect();
            format!("[{}]", inner.join(","))
        }
        serde_json::Value::Object(map) => {
            let inner: Vec<String> = map
                .iter()
                .map(|(k, val)| {
                    format!(
                        "{}:{}",
                        serde_json::to_string(k).unwrap(),
                        holorect_canonical(val)
                    )
                })
                .collect();
            format!("{{{}}}", inner.join(","))
        }
    }
}

#[test]
fn winding_of_rectangle_circuit() {
    let out = holorect(&["winding", "--rect", "0,1,0,1", "--point", "0.5,0.5"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("winding = 1"));
}

#[test]
fn winding_of_expression_loop_with_oracle() {
    let w = 3.0 * std::f64::consts::TAU;
    let expr = format!("cos({w:?}*t)+i*sin({w:?}*t)");
    let out = holorect(&["winding", "--loop", &expr, "--point", "0,0", "--oracle", "--json"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(doc["winding"].as_i64().unwrap(), 3);
    assert_eq!(doc["oracle"].as_i64().unwrap(), 3);
}

#[test]
fn singularity_on_contour_maps_to_exit_1_with_code() {
    let out = holorect(&["integrate", "--fn", "1/z", "--segment", "0,0,1,0"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(
        err.starts_with("E_SINGULARITY_ON_CONTOUR:"),
        "stderr was: {err}"
    );
}

#[test]
fn usage_errors_exit_2() {
    let out = holorect(&["integrate", "--fn", "1/z"]);
    assert_eq!(out.status.code(), Some(2));
    let out = holorect(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn eval_and_derivative_reconstruct_from_the_boundary() {
    let out = holorect(&["eval", "--fn", "exp(z)", "--at", "0,0", "--rect", "-1,1,-1,1", "--json"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert!((doc["value"]["re"].as_f64().unwrap() - 1.0).abs() < 1e-6);

    let out = holorect(&["derivative", "--fn", "z^3", "--at", "2,0", "--rect", "-3,3,-3,3", "--json"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert!((doc["value"]["re"].as_f64().unwrap() - 12.0).abs() < 1e-6);
}

#[test]
fn cover_emits_cells_and_svg() {
    let dir = std::env::temp_dir().join("holorect_cover_test");
    std::fs::create_dir_all(&dir).unwrap();
    let svg_path = dir.join("cover.svg");
    let out = holorect(&[
        "cover",
        "--rect",
        "0,1,0,1",
        "--max-diameter",
        "0.3",
        "--svg",
        svg_path.to_str().unwrap(),
        "--json",
    ]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(doc["count"].as_u64().unwrap(), 16);
    let svg = std::fs::read_to_string(&svg_path).unwrap();
    assert!(svg.starts_with("<svg"));
    assert_eq!(svg.matches("<rect").count(), 17); // outline + 16 cells
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn roots_locates_and_draws() {
    let dir = std::env::temp_dir().join("holorect_roots_test");
    std::fs::create_dir_all(&dir).unwrap();
    let svg_path = dir.join("roots.svg");
    let out = holorect(&[
        "roots",
        "--fn",
        "z^2-1",
        "--rect",
        "-2,2,-2,2",
        "--value",
        "0,0",
        "--min-size",
        "0.01",
        "--svg",
        svg_path.to_str().unwrap(),
        "--json",
    ]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(doc["total"].as_i64().unwrap(), 2);
    assert_eq!(doc["boxes"].as_array().unwrap().len(), 2);
    assert!(std::fs::read_to_string(&svg_path)
        .unwrap()
        .contains("data-winding=\"1\""));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn verify_is_byte_reproducible() {
    let first = holorect(&["verify", "--seed", "42"]);
    assert_eq!(first.status.code(), Some(0), "{:?}", first);
    let second = holorect(&["verify", "--seed", "42"]);
    assert_eq!(first.stdout, second.stdout, "verify reports differ");
    let text = stdout(&first);
    assert!(text.contains("10/10 criteria passed"));
    assert!(text.contains("11 PASS determinism"));
}

#[test]
fn tolerance_env_is_honored() {
    let out = Command::new(env!("CARGO_BIN_EXE_holorect"))
        .args(["integrate", "--fn", "z^2", "--rect", "0,1,0,1", "--json"])
        .env("HOLORECT_TOL", "1e-6")
        .output()
        .unwrap();
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert!(doc["value"]["re"].as_f64().unwrap().abs() < 1e-5);
}
