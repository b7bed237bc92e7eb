//! Browser bindings. Every entry point takes a model as `zoo:<name>` or as
//! model text and returns a JSON string; failures come back as
//! `CODE: message`.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use hopfpi_core::invariants::{cocharacter_multiplicities, growth_report, pi_exponent};
use hopfpi_core::model::{resolve, Model, ZOO_NAMES};
use hopfpi_core::Error;

/// Keeps the page responsive; the structured image is cheap up to here.
pub const MAX_N: usize = 6;

#[derive(Serialize)]
struct ExponentJson {
    model: String,
    d: usize,
    nilpotent: bool,
    radical_dim: usize,
    nilpotency_index: usize,
    component_dims: Vec<usize>,
    witness: Vec<usize>,
    product: Option<String>,
}

#[derive(Serialize)]
struct GrowthRowJson {
    n: usize,
    c: u64,
    colength: u64,
    ratio: Option<String>,
    root: f64,
    sandwich: &'static str,
    root_nondecreasing: Option<bool>,
}

#[derive(Serialize)]
struct GrowthJson {
    model: String,
    d: Option<usize>,
    band: u32,
    rows: Vec<GrowthRowJson>,
    stopped: Option<String>,
}

#[derive(Serialize)]
struct PartJson {
    partition: String,
    multiplicity: u64,
    degree: u128,
}

#[derive(Serialize)]
struct CocharacterJson {
    model: String,
    n: usize,
    codimension: u64,
    colength: u64,
    certificate: &'static str,
    multiplicities: Vec<PartJson>,
}

fn describe(e: &Error) -> String {
    format!("{}: {e}", e.code())
}

fn load(model: &str) -> Result<Model, String> {
    let model = model.trim();
    resolve(model, |text| Ok(text.to_string())).map_err(|e| describe(&e))
}

fn check_n(n: usize) -> Result<(), String> {
    if n == 0 || n > MAX_N {
        return Err(format!("INVALID_ARGUMENT: n must be in 1..={MAX_N}"));
    }
    Ok(())
}

fn to_json<T: Serialize>(v: &T) -> Result<String, String> {
    serde_json::to_string(v).map_err(|e| e.to_string())
}

pub fn exponent_json(model: &str) -> Result<String, String> {
    let m = load(model)?;
    let act = m.action().map_err(|e| describe(&e))?;
    let r = pi_exponent(&m.algebra, &act).map_err(|e| describe(&e))?;
    to_json(&ExponentJson {
        model: m.name.clone(),
        d: r.d,
        nilpotent: r.nilpotent,
        radical_dim: r.radical_dim,
        nilpotency_index: r.nilpotency_index,
        component_dims: r.group_dims,
        witness: r.witness.iter().map(|i| i + 1).collect(),
        product: r.certificate.map(|c| m.algebra.format_element(&c)),
    })
}

pub fn growth_json(model: &str, max_n: usize) -> Result<String, String> {
    check_n(max_n)?;
    let m = load(model)?;
    let act = m.action().map_err(|e| describe(&e))?;
    let r = growth_report(&m.algebra, &act, max_n);
    let rows = r
        .rows
        .iter()
        .map(|row| GrowthRowJson {
            n: row.n,
            c: row.c,
            colength: row.colength,
            ratio: row.ratio.as_ref().map(|q| format!("{}/{}", q.numer(), q.denom())),
            root: row.root(),
            sandwich: row.sandwich.tag(),
            root_nondecreasing: row.root_nondecreasing,
        })
        .collect();
    to_json(&GrowthJson {
        model: m.name.clone(),
        d: r.d,
        band: r.band,
        rows,
        stopped: r.stopped.as_ref().map(describe),
    })
}

pub fn cocharacter_json(model: &str, n: usize) -> Result<String, String> {
    check_n(n)?;
    let m = load(model)?;
    let act = m.action().map_err(|e| describe(&e))?;
    let r = cocharacter_multiplicities(&m.algebra, &act, n).map_err(|e| describe(&e))?;
    let multiplicities = r
        .multiplicities
        .iter()
        .filter(|(_, k)| *k > 0)
        .map(|(lambda, k)| PartJson {
            partition: lambda.to_string(),
            multiplicity: *k,
            degree: lambda.dim_irreducible(),
        })
        .collect();
    to_json(&CocharacterJson {
        model: m.name.clone(),
        n,
        codimension: r.codimension,
        colength: r.colength,
        certificate: r.certificate.tag(),
        multiplicities,
    })
}

pub fn zoo_json() -> String {
    serde_json::to_string(ZOO_NAMES).unwrap_or_default()
}

#[wasm_bindgen]
pub fn exponent(model: &str) -> Result<String, String> {
    exponent_json(model)
}

#[wasm_bindgen]
pub fn growth(model: &str, max_n: usize) -> Result<String, String> {
    growth_json(model, max_n)
}

#[wasm_bindgen]
pub fn cocharacter(model: &str, n: usize) -> Result<String, String> {
    cocharacter_json(model, n)
}

#[wasm_bindgen]
pub fn zoo() -> String {
    zoo_json()
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    fn parse(s: &str) -> Value {
        serde_json::from_str(s).unwrap()
    }

    #[test]
    fn exponent_of_zoo_and_text() {
        let v = parse(&exponent_json("zoo:bahturin-m2").unwrap());
        assert_eq!(v["d"], 4);
        assert_eq!(v["radical_dim"], 4);
        let text = hopfpi_core::model::zoo_model("ut2").unwrap().to_text();
        let v = parse(&exponent_json(&text).unwrap());
        assert_eq!(v["d"], 2);
        assert_eq!(v["product"], "e12");
    }

    #[test]
    fn growth_rows() {
        let v = parse(&growth_json("zoo:ut2", 4).unwrap());
        let cs: Vec<u64> = v["rows"].as_array().unwrap().iter().map(|r| r["c"].as_u64().unwrap()).collect();
        assert_eq!(cs, vec![1, 2, 6, 18]);
        assert_eq!(v["rows"][0]["ratio"], "2/1");
    }

    #[test]
    fn cocharacter_rows() {
        let v = parse(&cocharacter_json("zoo:ut2", 2).unwrap());
        assert_eq!(v["codimension"], 2);
        assert_eq!(v["multiplicities"].as_array().unwrap().len(), 2);
    }

    #[test]
    fn errors_carry_codes() {
        assert!(exponent_json("zoo:nope").unwrap_err().starts_with("UNKNOWN_MODEL"));
        assert!(exponent_json("garbage").unwrap_err().starts_with("PARSE_ERROR"));
        assert!(growth_json("zoo:ut2", 0).unwrap_err().starts_with("INVALID_ARGUMENT"));
        assert!(cocharacter_json("zoo:ut2", MAX_N + 1).is_err());
        assert!(zoo_json().contains("qq-swap"));
    }
}
