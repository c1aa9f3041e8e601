//! Canonical JSON emission: keys in insertion order, numerals at 12
//! significant digits, no whitespace. Parsing an emitted document and
//! re-emitting it reproduces the bytes exactly.

use serde_json::Value;

/// %.12g-style rendering: fixed notation for moderate exponents,
/// scientific otherwise, trailing zeros stripped.
pub fn fmt_f64(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        // domain types exclude non-finite values; nothing better to emit
        return "null".into();
    }
    let sci = format!("{:.11e}", x);
    let (mant, exp) = sci.split_once('e').expect("scientific format");
    let exp: i32 = exp.parse().expect("exponent");
    if (-4..12).contains(&exp) {
        let decimals = (11 - exp).max(0) as usize;
        trim_zeros(format!("{x:.decimals$}"))
    } else {
        format!("{}e{}", trim_zeros(mant.to_string()), exp)
    }
}

fn trim_zeros(s: String) -> String {
    if !s.contains('.') {
        return s;
    }
    s.trim_end_matches('0').trim_end_matches('.').to_string()
}

pub fn canonical(v: &Value) -> String {
    let mut out = String::new();
    write_value(v, &mut out);
    out
}

fn write_value(v: &Value, out: &mut String) {
    match v {
        Value::Null => out.push_str("null"),
        Value::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                out.push_str(&i.to_string());
            } else if let Some(u) = n.as_u64() {
                out.push_str(&u.to_string());
            } else {
                out.push_str(&fmt_f64(n.as_f64().expect("number fits f64")));
            }
        }
        Value::String(s) => {
            out.push_str(&serde_json::to_string(s).expect("string encodes"));
        }
        Value::Array(items) => {
            out.push('[');
            for (i, item) in items.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                write_value(item, out);
            }
            out.push(']');
        }
        Value::Object(map) => {
            out.push('{');
            for (i, (k, val)) in map.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                out.push_str(&serde_json::to_string(k).expect("key encodes"));
                out.push(':');
                write_value(val, out);
            }
            out.push('}');
        }
    }
}

pub fn complex_value(z: crate::complex::Complex) -> Value {
    serde_json::json!({ "re": z.re, "im": z.im })
}

pub fn rectangle_value(r: &crate::geometry::Rectangle) -> Value {
    serde_json::json!({
        "re_lo": r.re_lo(),
        "re_hi": r.re_hi(),
        "im_lo": r.im_lo(),
        "im_hi": r.im_hi(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn formatting_examples() {
        assert_eq!(fmt_f64(0.0), "0");
        assert_eq!(fmt_f64(-0.0), "0");
        assert_eq!(fmt_f64(2.0), "2");
        assert_eq!(fmt_f64(-2.5), "-2.5");
        assert_eq!(fmt_f64(std::f64::consts::TAU), "6.28318530718");
        assert_eq!(fmt_f64(1e-5), "1e-5");
        assert_eq!(fmt_f64(1e-4), "0.0001");
        assert_eq!(fmt_f64(1.5e15), "1.5e15");
    }

    proptest! {
        /// Emitted canonical JSON re-parses and re-emits byte-identically.
        #[test]
        fn canonical_round_trip(re in -1e6f64..1e6, im in -1e12f64..1e12, k in 0u64..1_000_000) {
            let doc = serde_json::json!({
                "value": { "re": re, "im": im },
                "k": k,
                "est_error": im.abs() * 1e-13,
            });
            let emitted = canonical(&doc);
            let parsed: serde_json::Value = serde_json::from_str(&emitted).unwrap();
            prop_assert_eq!(canonical(&parsed), emitted);
        }
    }
}
