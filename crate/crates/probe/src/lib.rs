use wasm_bindgen::prelude::*;

#[wasm_bindgen]
pub fn probe_add(a: f64, b: f64) -> f64 { a + b }
