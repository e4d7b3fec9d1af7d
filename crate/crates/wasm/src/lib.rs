//! WebAssembly bindings for the browser demo in `www/`: a sequence bitmap, a
//! measure profile and a finite-field histogram.

use autoseq::algebra::{FieldCtx, Fp, UniPoly};
use autoseq::ff::{count_along_polynomial, DigitFunction, DigitKind, DEFAULT_ENUMERATION_CAP};
use autoseq::io::profile_csv;
use autoseq::measures::{
    correlation2_profile, linear_complexity, max_order_complexity, well_distribution_profile,
};
use autoseq::seq::SequenceHandle;
use wasm_bindgen::prelude::*;

/// Largest prefix the demo will compute.
pub const MAX_COUNT: usize = 1 << 16;

fn handle(sequence: &str, transform: &str) -> Result<SequenceHandle, String> {
    let mut h = SequenceHandle::parse(sequence.trim()).map_err(|e| e.to_string())?;
    for t in transform.split_whitespace() {
        h = h.apply_transform(t).map_err(|e| e.to_string())?;
    }
    Ok(h)
}

fn check_count(count: usize) -> Result<(), String> {
    if count == 0 || count > MAX_COUNT {
        return Err(format!("count must be in 1..={MAX_COUNT}"));
    }
    Ok(())
}

/// Row-major symbols of a `cols x rows` grid.
pub fn bitmap_symbols(
    sequence: &str,
    transform: &str,
    cols: usize,
    rows: usize,
) -> Result<Vec<u8>, String> {
    check_count(cols * rows)?;
    handle(sequence, transform)?
        .prefix(cols * rows)
        .map_err(|e| e.to_string())
}

/// `N,value` CSV of linear, maxorder, welldist or correlation (k = 2) over F_2.
pub fn profile_text(
    sequence: &str,
    transform: &str,
    measure: &str,
    count: usize,
) -> Result<String, String> {
    check_count(count)?;
    let s = handle(sequence, transform)?
        .prefix(count)
        .map_err(|e| e.to_string())?;
    let values: Vec<u64> = match measure {
        "linear" => {
            let fp = Fp::new(2).expect("2 is prime");
            linear_complexity(&s, fp)
                .map_err(|e| e.to_string())?
                .profile
                .into_iter()
                .map(|v| v as u64)
                .collect()
        }
        "maxorder" => max_order_complexity(&s)
            .profile
            .into_iter()
            .map(|v| v as u64)
            .collect(),
        "welldist" => well_distribution_profile(&s).map_err(|e| e.to_string())?,
        "correlation" => correlation2_profile(&s).map_err(|e| e.to_string())?,
        other => return Err(format!("unknown measure '{other}'")),
    };
    let rows: Vec<(usize, u64)> = values
        .into_iter()
        .enumerate()
        .map(|(i, v)| (i + 1, v))
        .collect();
    Ok(profile_csv(&rows, &[]))
}

/// `c,count,expected,bound` CSV of T or R along `f` over F_{p^r}.
pub fn histogram_text(p: u32, r: usize, kind: &str, poly: &str) -> Result<String, String> {
    let kind: DigitKind = kind.parse().map_err(|e: autoseq::Error| e.to_string())?;
    let ctx = FieldCtx::new(p, r).map_err(|e| e.to_string())?;
    let f = UniPoly::parse(&ctx, poly).map_err(|e| e.to_string())?;
    let func = DigitFunction::new(ctx, kind).map_err(|e| e.to_string())?;
    let cap = DEFAULT_ENUMERATION_CAP.min(1 << 20);
    Ok(count_along_polynomial(&func, &f, cap)
        .map_err(|e| e.to_string())?
        .to_csv())
}

#[wasm_bindgen]
pub fn bitmap(
    sequence: &str,
    transform: &str,
    cols: usize,
    rows: usize,
) -> Result<Vec<u8>, JsValue> {
    bitmap_symbols(sequence, transform, cols, rows).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn profile(
    sequence: &str,
    transform: &str,
    measure: &str,
    count: usize,
) -> Result<String, JsValue> {
    profile_text(sequence, transform, measure, count).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn histogram(p: u32, r: usize, kind: &str, poly: &str) -> Result<String, JsValue> {
    histogram_text(p, r, kind, poly).map_err(|e| JsValue::from_str(&e))
}
