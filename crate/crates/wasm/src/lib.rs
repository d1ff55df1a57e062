//! Browser bindings for the demo page. Every export returns a JSON string;
//! failures come back as `{"error": "..."}`.

use oddprime_core::arith::{isqrt, tau_sum_oracle};
use oddprime_core::hyperbola::{divisor_summatory_with, hyperbola_partition};
use oddprime_core::polyring::{oracle::residue_parity_oracle, residue_class_parity};
use oddprime_core::{Config, Interval, WorkCounters};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

const MAX_GRID_MODULUS: u64 = 64;
const MAX_PIECES_SPAN: u64 = 20_000;

fn respond(result: Result<Value, String>) -> String {
    result.unwrap_or_else(|e| json!({ "error": e })).to_string()
}

fn parse(label: &str, s: &str) -> Result<u64, String> {
    s.trim().parse().map_err(|_| format!("{label}: `{s}` is not a nonnegative integer"))
}

/// `D(x)` with its work counters, checked against the `√x` loop when cheap.
pub fn divisor_sum_json(x: &str) -> Result<Value, String> {
    let x = parse("x", x)?;
    let mut work = WorkCounters::default();
    let value = divisor_summatory_with(x, &Config::default(), &mut work).map_err(|e| e.to_string())?;
    let check = if x <= 1 << 40 { Some(tau_sum_oracle(x).map_err(|e| e.to_string())?) } else { None };
    Ok(json!({
        "x": x,
        "value": value.to_string(),
        "blocks": work.blocks,
        "sqrt_x": isqrt(x),
        "oracle": check.map(|v| v.to_string()),
        "agrees": check.map(|v| v == value),
    }))
}

/// Pieces of `[lo, hi]` on which `n ↦ ⌊x/n⌋` is linear.
pub fn partition_json(x: &str, lo: &str, hi: &str) -> Result<Value, String> {
    let (x, lo, hi) = (parse("x", x)?, parse("lo", lo)?, parse("hi", hi)?);
    if hi.saturating_sub(lo) > MAX_PIECES_SPAN {
        return Err(format!("span limited to {MAX_PIECES_SPAN} for plotting"));
    }
    let cfg = Config { small_n_exponent: 0.3, ..Config::default() };
    let pieces = hyperbola_partition(x, lo, hi, &cfg).map_err(|e| e.to_string())?;
    let pieces: Vec<Value> = pieces
        .iter()
        .map(|p| json!({ "n0": p.n0, "step": p.step, "count": p.count, "v0": p.v0, "slope": p.slope }))
        .collect();
    Ok(json!({ "x": x, "lo": lo, "hi": hi, "pieces": pieces }))
}

/// Prime-count parities in every class mod `q` for `q = 1..=q_max`.
pub fn residue_grid_json(a: &str, b: &str, q_max: &str) -> Result<Value, String> {
    let (a, b, q_max) = (parse("a", a)?, parse("b", b)?, parse("q", q_max)?);
    if q_max == 0 || q_max > MAX_GRID_MODULUS {
        return Err(format!("q must be in 1..={MAX_GRID_MODULUS}"));
    }
    let interval = Interval::new(a, b).map_err(|e| e.to_string())?;
    let cfg = Config::default();
    let mut work = WorkCounters::default();
    let mut rows = Vec::new();
    for q in 1..=q_max {
        let bits = residue_class_parity(interval, q, &cfg, &mut work).map_err(|e| e.to_string())?;
        let agrees = b - a <= 1_000_000 && bits == residue_parity_oracle(interval, q);
        rows.push(json!({ "q": q, "bits": bits, "agrees": agrees }));
    }
    Ok(json!({ "a": a, "b": b, "rows": rows, "ring_muls": work.ring_muls }))
}

#[wasm_bindgen]
pub fn divisor_sum(x: &str) -> String {
    respond(divisor_sum_json(x))
}

#[wasm_bindgen]
pub fn partition(x: &str, lo: &str, hi: &str) -> String {
    respond(partition_json(x, lo, hi))
}

#[wasm_bindgen]
pub fn residue_grid(a: &str, b: &str, q_max: &str) -> String {
    respond(residue_grid_json(a, b, q_max))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisor_sum_reports_agreement() {
        let v: Value = serde_json::from_str(&divisor_sum("10")).unwrap();
        assert_eq!(v["value"], "27");
        assert_eq!(v["agrees"], true);
        let v: Value = serde_json::from_str(&divisor_sum("ten")).unwrap();
        assert!(v["error"].is_string());
    }

    #[test]
    fn partition_covers_range() {
        let v = partition_json("100000000", "1000", "3000").unwrap();
        let covered: u64 = v["pieces"].as_array().unwrap().iter().map(|p| p["count"].as_u64().unwrap()).sum();
        assert_eq!(covered, 2001);
        assert!(partition_json("100", "1", "100000").is_err());
    }

    #[test]
    fn grid_matches_sieve() {
        let v = residue_grid_json("10", "30", "6").unwrap();
        let rows = v["rows"].as_array().unwrap();
        assert_eq!(rows.len(), 6);
        assert!(rows.iter().all(|r| r["agrees"] == true));
        assert_eq!(rows[3]["bits"], json!([false, true, false, true]));
    }
}
