//! wasm-bindgen bindings used by `www/index.html`.

use qchar_core::character::{chi_closed_numeric, chi_polynomial};
use qchar_core::{MultiPoly, Rational};
use wasm_bindgen::prelude::*;

/// Largest rank and order the page accepts; keeps the UI responsive.
pub const MAX_RANK: usize = 6;
pub const MAX_M: usize = 8;

fn check_bounds(rank: usize, m: usize) -> Result<(), String> {
    if rank == 0 || rank > MAX_RANK {
        return Err(format!("N must be between 1 and {MAX_RANK}"));
    }
    if m > MAX_M {
        return Err(format!("m must be at most {MAX_M}"));
    }
    Ok(())
}

fn poly(rank: usize, m: usize) -> Result<MultiPoly, String> {
    check_bounds(rank, m)?;
    chi_polynomial(m, rank).map(|r| r.poly).map_err(|e| e.to_string())
}

fn parse_point(text: &str) -> Result<Vec<Rational>, String> {
    text.split(',')
        .map(|s| s.trim().parse::<Rational>().map_err(|e| format!("{s:?}: {e}")))
        .collect()
}

pub fn chi_text_impl(rank: usize, m: usize) -> Result<String, String> {
    poly(rank, m).map(|p| p.to_string())
}

/// `[polynomial value, closed-form value or error]`.
pub fn evaluate_impl(lambda: &str, m: usize) -> Result<[String; 2], String> {
    let pt = parse_point(lambda)?;
    let value = poly(pt.len(), m)?.eval(&pt).map_err(|e| e.to_string())?;
    let closed = match chi_closed_numeric(m, &pt) {
        Ok(v) => v.to_string(),
        Err(e) => format!("undefined ({e})"),
    };
    Ok([value.to_string(), closed])
}

/// Samples `chi` along `l1` in `[from, to]` with the other weights fixed.
pub fn curve_impl(m: usize, rest: &str, from: f64, to: f64, samples: usize) -> Result<Vec<f64>, String> {
    let mut tail = if rest.trim().is_empty() { Vec::new() } else { parse_point(rest)? };
    let rank = tail.len() + 1;
    let p = poly(rank, m)?;
    let samples = samples.clamp(2, 2000);
    tail.insert(0, Rational::zero());
    let mut out = Vec::with_capacity(samples);
    for k in 0..samples {
        let x = from + (to - from) * k as f64 / (samples - 1) as f64;
        // exact evaluation at a dyadic approximation of x
        tail[0] = Rational::new((x * 1024.0).round() as i64, 1024);
        out.push(p.eval(&tail).map_err(|e| e.to_string())?.to_f64());
    }
    Ok(out)
}

#[wasm_bindgen]
pub fn chi_text(rank: usize, m: usize) -> Result<String, JsError> {
    chi_text_impl(rank, m).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn evaluate(lambda: &str, m: usize) -> Result<Vec<String>, JsError> {
    evaluate_impl(lambda, m)
        .map(Vec::from)
        .map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn curve(m: usize, rest: &str, from: f64, to: f64, samples: usize) -> Result<Vec<f64>, JsError> {
    curve_impl(m, rest, from, to, samples).map_err(|e| JsError::new(&e))
}
