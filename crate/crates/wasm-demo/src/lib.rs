//! Browser bindings for the demo page in `www/`.
//!
//! Every export takes plain strings (space or comma separated complex
//! literals) and returns JSON, so the page needs no generated glue beyond
//! what `wasm-bindgen` emits.

use esym_core::{
    build_table, from_roots, ComplexRing, ExactComplex, FloatComplex, Mode, Poly1, Wrap64Complex,
};
use serde_json::json;
use wasm_bindgen::prelude::*;

fn tokens(text: &str) -> Vec<&str> {
    // Commas inside "(a,b)" belong to the literal.
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut start = None;
    for (i, c) in text.char_indices() {
        let sep = depth == 0 && (c == ',' || c.is_whitespace());
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            _ => {}
        }
        match (sep, start) {
            (true, Some(s)) => {
                out.push(&text[s..i]);
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push(&text[s..]);
    }
    out
}

fn parse_list<S: ComplexRing>(text: &str) -> Result<Vec<S>, String> {
    tokens(text)
        .into_iter()
        .map(|t| S::parse_literal(t).map_err(|e| e.to_string()))
        .collect()
}

fn parse_mode(mode: &str) -> Result<Mode, String> {
    mode.parse().map_err(|e: esym_core::EsymError| e.to_string())
}

fn table_json<S: ComplexRing>(values: &str) -> Result<String, String> {
    let xs = parse_list::<S>(values)?;
    let table = build_table(&xs).map_err(|e| e.to_string())?;
    let rows: Vec<Vec<String>> = table
        .rows()
        .map(|row| row.iter().map(ComplexRing::literal).collect())
        .collect();
    Ok(json!({ "mode": S::MODE.as_str(), "rows": rows }).to_string())
}

pub fn eps_table_json(values: &str, mode: &str) -> Result<String, String> {
    match parse_mode(mode)? {
        Mode::Exact => table_json::<ExactComplex>(values),
        Mode::Wrap64 => table_json::<Wrap64Complex>(values),
        Mode::Float => table_json::<FloatComplex>(values),
    }
}

fn poly_json<S: ComplexRing>(p: &Poly1<S>) -> String {
    let coeffs: Vec<String> = p.coeffs().iter().map(ComplexRing::literal).collect();
    json!({ "coeffs": coeffs, "pretty": p.pretty() }).to_string()
}

/// Monic polynomial through `roots` with `lambda` adjoined, in exact mode.
pub fn insert_zero_json(roots: &str, lambda: &str) -> Result<String, String> {
    let roots = parse_list::<ExactComplex>(roots)?;
    let lambda = ExactComplex::parse_literal(lambda).map_err(|e| e.to_string())?;
    Ok(poly_json(&from_roots(&roots).insert_zero(&lambda)))
}

/// `log10(1 + |f(z)|)` on a `width × height` grid over the given window,
/// row-major from the top-left corner, where `f` has the given zeroes.
pub fn modulus_field(
    roots: &str,
    re_min: f64,
    re_max: f64,
    im_min: f64,
    im_max: f64,
    width: usize,
    height: usize,
) -> Result<Vec<f64>, String> {
    let roots = parse_list::<FloatComplex>(roots)?;
    let f = from_roots(&roots);
    let step = |lo: f64, hi: f64, i: usize, n: usize| {
        if n <= 1 {
            lo
        } else {
            lo + (hi - lo) * i as f64 / (n - 1) as f64
        }
    };
    let mut out = Vec::with_capacity(width * height);
    for row in 0..height {
        let im = step(im_max, im_min, row, height);
        for col in 0..width {
            let z = FloatComplex::new(step(re_min, re_max, col, width), im);
            out.push(f.eval(&z).abs().ln_1p() / std::f64::consts::LN_10);
        }
    }
    Ok(out)
}

#[wasm_bindgen]
pub fn eps_table(values: &str, mode: &str) -> Result<String, JsValue> {
    eps_table_json(values, mode).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn insert_zero(roots: &str, lambda: &str) -> Result<String, JsValue> {
    insert_zero_json(roots, lambda).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn modulus_grid(
    roots: &str,
    re_min: f64,
    re_max: f64,
    im_min: f64,
    im_max: f64,
    width: usize,
    height: usize,
) -> Result<Vec<f64>, JsValue> {
    modulus_field(roots, re_min, re_max, im_min, im_max, width, height)
        .map_err(|e| JsValue::from_str(&e))
}
