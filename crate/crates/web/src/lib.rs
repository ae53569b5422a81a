//! Browser bindings for the static demo page in `www/`.
//!
//! Each export takes plain strings and numbers and returns a string, so the
//! page needs no framework. The `*_impl` functions carry the logic and are
//! tested natively.

use farey_axis::ladder::raw_and_calibrated_window;
use farey_axis::{enumerate_classes, find_rung, is_standard, translation_length, MatrixPSL2Z};
use serde_json::json;
use wasm_bindgen::prelude::*;

/// Largest trace the page may ask the spectrum for.
pub const MAX_TRACE: u32 = 400;

fn parse(matrix: &str) -> Result<MatrixPSL2Z, String> {
    matrix.trim().parse::<MatrixPSL2Z>().map_err(|e| e.to_string())
}

pub fn length_impl(matrix: &str) -> Result<String, String> {
    let m = parse(matrix)?;
    let e = |e: farey_axis::Error| e.to_string();
    let res = translation_length(&m).map_err(e)?;
    let (raw, _) = raw_and_calibrated_window(&m).map_err(e)?;
    let value = json!({
        "matrix": m,
        "trace": m.trace().to_string(),
        "standard": is_standard(&m).map_err(e)?,
        "rung": find_rung(&m).map_err(e)?,
        "window_types": raw.types,
        "calibrated_types": res.window.types,
        "length": res.length,
        "axis": res.axis,
        "moves": res.moves,
    });
    serde_json::to_string_pretty(&value).map_err(|e| e.to_string())
}

pub fn axis_svg_impl(matrix: &str, periods: u32) -> Result<String, String> {
    let m = parse(matrix)?;
    farey_axis::svg::render_axis_svg(&m, periods as usize).map_err(|e| e.to_string())
}

pub fn spectrum_impl(max_trace: u32) -> Result<String, String> {
    if max_trace > MAX_TRACE {
        return Err(format!("the page is limited to traces up to {MAX_TRACE}"));
    }
    let classes = enumerate_classes(max_trace.into()).map_err(|e| e.to_string())?;
    let mut csv = String::from("trace,normal_form,translation_length,ratio\n");
    for c in classes {
        let form: Vec<String> = c.normal_form.iter().map(u64::to_string).collect();
        csv.push_str(&format!("{},{},{},{:.12}\n", c.trace, form.join("-"), c.length, c.ratio));
    }
    Ok(csv)
}

/// Translation length report for a matrix written `a,b,c,d`.
#[wasm_bindgen]
pub fn length_json(matrix: &str) -> Result<String, JsError> {
    length_impl(matrix).map_err(|e| JsError::new(&e))
}

/// SVG drawing of up to three periods of the invariant ladder and its axis.
#[wasm_bindgen]
pub fn axis_svg(matrix: &str, periods: u32) -> Result<String, JsError> {
    axis_svg_impl(matrix, periods).map_err(|e| JsError::new(&e))
}

/// CSV of all conjugacy classes up to `max_trace`.
#[wasm_bindgen]
pub fn spectrum_csv(max_trace: u32) -> Result<String, JsError> {
    spectrum_impl(max_trace).map_err(|e| JsError::new(&e))
}
