//! Browser bindings for the demo page in `www/`. Every export returns a flat
//! `Float64Array` so the page can plot without parsing.

use wasm_bindgen::prelude::*;

mod demo;

pub use demo::{chsh_pair, correlation_curves, reconstruction, schmidt_weights};

fn js(r: Result<Vec<f64>, String>) -> Result<Vec<f64>, JsError> {
    r.map_err(|e| JsError::new(&e))
}

/// Rows `(δ, quantum, triangle, discretized model)` for `δ ∈ [0, π)`.
#[wasm_bindgen(js_name = correlationCurves)]
pub fn correlation_curves_js(points: u32, atoms: u32) -> Result<Vec<f64>, JsError> {
    js(correlation_curves(points as usize, atoms as usize))
}

/// Rows `(θ, F, F_N)` for `pieces` equal intervals starting at +1.
#[wasm_bindgen(js_name = reconstruction)]
pub fn reconstruction_js(pieces: u32, window: u32, points: u32) -> Result<Vec<f64>, JsError> {
    js(reconstruction(
        pieces as usize,
        window as usize,
        points as usize,
    ))
}

/// Rows `(n, σ_quantum, σ_model)` for `n ∈ [−N, N]`.
#[wasm_bindgen(js_name = schmidtWeights)]
pub fn schmidt_weights_js(window: u32, atoms: u32) -> Result<Vec<f64>, JsError> {
    js(schmidt_weights(window as usize, atoms as usize))
}

/// `[S_quantum, S_model]` at the four given angles.
#[wasm_bindgen(js_name = chsh)]
pub fn chsh_js(a: f64, a2: f64, b: f64, b2: f64, atoms: u32) -> Result<Vec<f64>, JsError> {
    js(chsh_pair([a, a2, b, b2], atoms as usize))
}
