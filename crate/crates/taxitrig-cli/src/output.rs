//! Value formatting and table emission.
//!
//! Exact-mode values print as reduced fractions; float-mode `eval`/`deriv`
//! output uses 17 significant digits so the printed value round-trips.
//! Table output (CSV and JSON) uses the shortest round-trip float form,
//! which is byte-deterministic for fixed inputs.

use std::io::Write;

use serde_json::{json, Value};
use taxitrig::deriv::{classify_differentiability, DerivResult, Differentiability};
use taxitrig::functions::EvalResult;
use taxitrig::scalar::Scalar;
use taxitrig::series::Series;
use taxitrig::Angle;

/// Render a scalar with 17 significant digits in float mode, as a reduced
/// fraction in exact mode.
pub fn format_value(s: &Scalar) -> String {
    match s {
        Scalar::Exact(_) => s.to_string(),
        Scalar::Float(v) => format_f64_17(*v),
    }
}

fn format_f64_17(v: f64) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    let exp = v.abs().log10().floor() as i32;
    if (-4..=16).contains(&exp) {
        let decimals = (16 - exp).max(0) as usize;
        format!("{v:.decimals$}")
    } else {
        format!("{v:.16e}")
    }
}

pub fn format_eval(result: &EvalResult) -> String {
    match result {
        EvalResult::Finite(v) => format_value(v),
        EvalResult::Pole => "POLE".to_string(),
    }
}

pub fn format_deriv(result: &DerivResult) -> String {
    match result {
        DerivResult::Finite(v) => format_value(v),
        DerivResult::Corner { left, right } => {
            format!("CORNER {} {}", format_value(left), format_value(right))
        }
        DerivResult::Pole => "POLE".to_string(),
    }
}

/// Shortest stable rendering for table cells: fractions in exact mode,
/// round-trip floats in float mode.
fn table_cell(s: &Scalar) -> String {
    s.to_string()
}

fn row_flag(series: &Series, theta: &Scalar) -> &'static str {
    let a = Angle::reduce(theta.clone()).expect("finite table theta");
    match classify_differentiability(series.function, &a) {
        Differentiability::Pole => "pole",
        Differentiability::Corner => "corner-adjacent",
        Differentiability::Smooth => "ok",
    }
}

/// CSV with header `theta,value,flag`; poles keep their row with an empty
/// value so the grid stays intact. LF line endings.
pub fn write_csv<W: Write>(mut w: W, series: &Series) -> std::io::Result<()> {
    writeln!(w, "theta,value,flag")?;
    for p in &series.points {
        let value = p.value.as_ref().map(table_cell).unwrap_or_default();
        writeln!(w, "{},{},{}", table_cell(&p.theta), value, row_flag(series, &p.theta))?;
    }
    Ok(())
}

fn scalar_json(s: &Scalar) -> Value {
    match s {
        Scalar::Exact(_) => Value::String(s.to_string()),
        Scalar::Float(v) => json!(v),
    }
}

/// JSON mirror of the series: `function`, `points` as `[theta, value|null]`
/// pairs, `segment_breaks`, and `asymptotes`.
pub fn write_json<W: Write>(mut w: W, series: &Series) -> std::io::Result<()> {
    let points: Vec<Value> = series
        .points
        .iter()
        .map(|p| {
            let value = p.value.as_ref().map(scalar_json).unwrap_or(Value::Null);
            Value::Array(vec![scalar_json(&p.theta), value])
        })
        .collect();
    let doc = json!({
        "function": series.function.name(),
        "points": points,
        "segment_breaks": series.segment_breaks.iter().map(scalar_json).collect::<Vec<_>>(),
        "asymptotes": series.asymptotes.iter().map(scalar_json).collect::<Vec<_>>(),
    });
    writeln!(w, "{doc}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use taxitrig::scalar::Backend;
    use taxitrig::TrigFunction;

    #[test]
    fn seventeen_significant_digits() {
        assert_eq!(format_f64_17(2.0), "2.0000000000000000");
        assert_eq!(format_f64_17(0.5), "0.50000000000000000");
        assert_eq!(format_f64_17(0.0), "0");
        assert_eq!(format_f64_17(-1.5e20), "-1.5000000000000000e20");
    }

    #[test]
    fn csv_keeps_pole_rows() {
        let s = Series::sample_grid(
            TrigFunction::Tan,
            &Backend::Exact.int(0),
            &Backend::Exact.int(4),
            &Backend::Exact.int(1),
        );
        let mut buf = Vec::new();
        write_csv(&mut buf, &s).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text, "theta,value,flag\n0,0,ok\n1,1,ok\n2,,pole\n3,-1,ok\n");
    }

    #[test]
    fn json_uses_null_for_poles() {
        let s = Series::sample_grid(
            TrigFunction::Tan,
            &Backend::Exact.int(0),
            &Backend::Exact.int(4),
            &Backend::Exact.int(2),
        );
        let mut buf = Vec::new();
        write_json(&mut buf, &s).unwrap();
        let doc: serde_json::Value = serde_json::from_slice(&buf).unwrap();
        assert_eq!(doc["function"], "tan");
        assert_eq!(doc["points"][1][1], serde_json::Value::Null);
        assert_eq!(doc["asymptotes"][0], "2");
    }
}
