//! Output in JSON (bit-exact dyadic endpoints) and human-readable text.

use std::fmt::Write as _;

use serde_json::{json, Map, Value};

use crate::arith::{Dyadic, RealInterval};
use crate::solver::{Diagnostics, SolveResult};
use crate::validate::SolutionBox;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

pub fn dyadic_json(d: &Dyadic) -> Value {
    json!({ "mantissa": d.mantissa().to_string(), "exponent": d.exponent() })
}

pub fn interval_json(iv: &RealInterval) -> Value {
    json!({ "lo": dyadic_json(iv.lo()), "hi": dyadic_json(iv.hi()) })
}

fn solution_json(s: &SolutionBox) -> Value {
    let (mx, my) = s.multiplicities();
    json!({
        "x": interval_json(s.x_interval()),
        "y": interval_json(s.y_interval()),
        "multiplicity": { "x": mx, "y": my },
        "on_boundary": s.on_boundary(),
    })
}

fn diagnostics_json(d: &Diagnostics) -> Value {
    let mut m = Map::new();
    m.insert("x_roots".into(), d.x_roots.into());
    m.insert("y_roots".into(), d.y_roots.into());
    m.insert("candidates".into(), d.candidates.into());
    m.insert("excluded".into(), d.excluded.into());
    m.insert("certified".into(), d.certified.into());
    m.insert("refinement_rounds".into(), d.refinement_rounds.into());
    if let Some(t) = &d.timings {
        m.insert(
            "timings_ms".into(),
            json!({
                "project": t.project.as_secs_f64() * 1e3,
                "separate": t.separate.as_secs_f64() * 1e3,
                "validate": t.validate.as_secs_f64() * 1e3,
            }),
        );
    }
    Value::Object(m)
}

pub fn to_json(result: &SolveResult) -> Value {
    json!({
        "solutions": result.solutions.iter().map(solution_json).collect::<Vec<_>>(),
        "diagnostics": diagnostics_json(&result.diagnostics),
    })
}

pub fn emit_json(result: &SolveResult) -> String {
    let mut s = serde_json::to_string_pretty(&to_json(result)).expect("serializable");
    s.push('\n');
    s
}

/// Midpoint with as many decimals as the width supports, and the half-width.
fn decimal(iv: &RealInterval) -> String {
    let mid = iv.midpoint();
    if iv.is_point() {
        let digits = (-mid.exponent()).max(0) as usize;
        return format!("{} ± 0", mid.to_decimal(digits));
    }
    let r = iv.radius();
    let bits = -(r.exponent() + r.mantissa().bits() as i64);
    let digits = ((bits.max(0) as f64) * std::f64::consts::LOG10_2).ceil() as usize + 1;
    format!("{} ± {:.2e}", mid.to_decimal(digits), r.to_f64())
}

pub fn emit_text(result: &SolveResult, diagnostics: bool) -> String {
    let mut out = String::new();
    let n = result.solutions.len();
    let _ = writeln!(out, "{n} real solution{}", if n == 1 { "" } else { "s" });
    for s in &result.solutions {
        let (mx, my) = s.multiplicities();
        let _ = write!(
            out,
            "x = {}, y = {}  (multiplicity {mx}, {my})",
            decimal(s.x_interval()),
            decimal(s.y_interval())
        );
        if s.on_boundary() {
            out.push_str("  [on boundary]");
        }
        out.push('\n');
    }
    if diagnostics {
        let d = &result.diagnostics;
        let _ = writeln!(
            out,
            "roots: {} on x, {} on y; candidates: {}, excluded: {}, certified: {}; refinement rounds: {}",
            d.x_roots, d.y_roots, d.candidates, d.excluded, d.certified, d.refinement_rounds
        );
        if let Some(t) = &d.timings {
            let _ = writeln!(
                out,
                "time: project {:.3} ms, separate {:.3} ms, validate {:.3} ms",
                t.project.as_secs_f64() * 1e3,
                t.separate.as_secs_f64() * 1e3,
                t.validate.as_secs_f64() * 1e3
            );
        }
    }
    out
}

pub fn emit(result: &SolveResult, format: Format, diagnostics: bool) -> String {
    match format {
        Format::Json => emit_json(result),
        Format::Text => emit_text(result, diagnostics),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::BivariatePolynomial;
    use crate::solver::{solve, SolveOptions, SystemSpec};

    fn solve_terms(f: &[(usize, usize, i64)], g: &[(usize, usize, i64)], width: i64) -> SolveResult {
        let spec = SystemSpec::new(BivariatePolynomial::from_i64_terms(f), BivariatePolynomial::from_i64_terms(g))
            .with_target_width(Dyadic::pow2(width));
        solve(&spec, &SolveOptions::default()).unwrap()
    }

    #[test]
    fn empty_solution_set() {
        let res = solve_terms(&[(2, 0, 1), (0, 2, 1), (0, 0, 1)], &[(1, 0, 1)], -10);
        let v = to_json(&res);
        assert_eq!(v["solutions"], json!([]));
        assert!(emit_text(&res, false).starts_with("0 real solutions"));
    }

    #[test]
    fn exact_point() {
        let res = solve_terms(&[(1, 1, 1), (0, 0, -1)], &[(1, 0, 1), (0, 1, -1)], -10);
        let v = to_json(&res);
        let one = json!({"mantissa": "1", "exponent": 0});
        assert_eq!(v["solutions"][1]["x"], json!({"lo": one, "hi": one}));
        assert!(emit_text(&res, false).contains("x = 1 ± 0, y = 1 ± 0"));
    }

    #[test]
    fn sqrt_two_endpoints() {
        let res = solve_terms(&[(2, 0, 1), (0, 0, -2)], &[(0, 1, 1)], -20);
        let v = to_json(&res);
        let x = &v["solutions"][1]["x"];
        for end in ["lo", "hi"] {
            assert!(x[end]["exponent"].as_i64().unwrap() <= -20);
        }
        let text = emit_text(&res, true);
        assert!(text.contains("x = 1.414213"), "{text}");
        assert!(text.contains("candidates: 2"));
    }
}
