//! JSON-in-a-string bindings for the browser page in `www/`.

use nakayama::report::{to_json, AnalysisReport, ModuleReport, Survey};
use nakayama::{parse_sequence, Indec};
use wasm_bindgen::prelude::*;

fn to_js(e: nakayama::Error) -> JsValue {
    JsValue::from_str(&e.to_string())
}

pub fn analyze_json(seq: &str) -> nakayama::Result<String> {
    let a = parse_sequence(seq)?;
    Ok(to_json(&AnalysisReport::build(&a)?))
}

pub fn module_json(seq: &str, module: &str) -> nakayama::Result<String> {
    let a = parse_sequence(seq)?;
    let x: Indec = module.parse()?;
    Ok(to_json(&ModuleReport::build(&a, x)?))
}

pub fn survey_json(n: usize, max_loewy: usize) -> nakayama::Result<String> {
    Ok(to_json(&Survey::build(n, max_loewy)?))
}

#[wasm_bindgen]
pub fn analyze(seq: &str) -> Result<String, JsValue> {
    analyze_json(seq).map_err(to_js)
}

#[wasm_bindgen]
pub fn module(seq: &str, module: &str) -> Result<String, JsValue> {
    module_json(seq, module).map_err(to_js)
}

/// Bounds are capped so a page interaction stays responsive.
#[wasm_bindgen]
pub fn survey(n: u32, max_loewy: u32) -> Result<String, JsValue> {
    if n > 5 || max_loewy > 12 {
        return Err(JsValue::from_str(
            "demo survey is limited to n <= 5 and max Loewy <= 12",
        ));
    }
    survey_json(n as usize, max_loewy as usize).map_err(to_js)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_entry_points() {
        assert!(analyze_json("5,6,6").unwrap().contains("\"2:3\""));
        assert!(module_json("2,2,3", "1:1")
            .unwrap()
            .contains("\"proj_dim\": 3"));
        assert!(survey_json(1, 3).unwrap().contains("\"rows\""));
        assert!(analyze_json("1,2").is_err());
        assert!(module_json("5,6,6", "2:7").is_err());
    }
}
