//! WebAssembly bindings for the demo page in `www/`.
//!
//! Every export returns a JSON string; failures come back as `{"error":"..."}` so the page
//! needs no exception handling.

use hypergroup_core::constructions::{
    right_coset_hypergroup, s_family, s_family_class, utumi, utumi_simplicity_criterion, SFamilyClass,
    SFamilySizes, UtumiInput,
};
use hypergroup_core::format::{multistructure_to_json, parse_classes};
use hypergroup_core::groups::{cyclic_group, stabilizer_subgroup, symmetric_group};
use hypergroup_core::simplicity::{is_simple, reflets};
use hypergroup_core::{Error, Hypergroup, Multistructure};
use serde::Serialize;
use serde_json::value::RawValue;
use wasm_bindgen::prelude::wasm_bindgen;

const SIMPLICITY_CAP: usize = 10;
const GROUP_CAP: usize = 120;

fn respond<T: Serialize>(result: Result<T, Error>) -> String {
    match result {
        Ok(value) => serde_json::to_string(&value).unwrap_or_else(|e| error_json(&e.to_string())),
        Err(e) => error_json(&e.to_string()),
    }
}

fn error_json(msg: &str) -> String {
    serde_json::json!({ "error": msg }).to_string()
}

fn raw(m: &Multistructure) -> Box<RawValue> {
    RawValue::from_string(multistructure_to_json(m)).expect("valid JSON")
}

#[derive(Serialize)]
struct SFamilyView {
    class: &'static str,
    hypergroup: bool,
    structure: Box<RawValue>,
}

/// Classifies `S(n, p1, ...)` from whitespace- or comma-separated block sizes.
#[wasm_bindgen]
pub fn explore_s_family(sizes: &str) -> String {
    respond((|| {
        let sizes = sizes
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad size {t:?}"))))
            .collect::<Result<Vec<usize>, _>>()?;
        let sizes = SFamilySizes::new(sizes)?;
        let m = s_family(&sizes);
        let class = match s_family_class(&sizes).class {
            SFamilyClass::DHypergroup => "coset hypergroup",
            SFamilyClass::HypergroupNotD => "hypergroup, not a coset hypergroup",
            SFamilyClass::EmptyProduct => "has an empty product",
            SFamilyClass::NotAssociative => "not associative",
        };
        Ok(SFamilyView {
            class,
            hypergroup: m.verify_axioms().is_hypergroup(),
            structure: raw(&m),
        })
    })())
}

#[derive(Serialize)]
struct UtumiView {
    hypergroup: bool,
    cogroup: Option<bool>,
    sum_criterion: Option<bool>,
    simple: Option<bool>,
    structure: Box<RawValue>,
}

/// Builds `x.y = x + class(y)` over `Z/n` for a class literal such as `{0}|{1,4,7}|{2,3,5,6}`.
#[wasm_bindgen]
pub fn build_utumi(n: usize, classes: &str, zero: usize) -> String {
    respond((|| {
        let g = cyclic_group(n)?;
        let base = Hypergroup::new(g.as_multistructure()?)?;
        let partition = parse_classes(classes, g.names())?;
        let input = UtumiInput::new(base, partition, zero)?;
        let m = utumi(&input);
        let structure = raw(&m);
        Ok(match Hypergroup::new(m) {
            Ok(h) => UtumiView {
                hypergroup: true,
                cogroup: Some(h.is_cogroup()),
                sum_criterion: Some(utumi_simplicity_criterion(&input)?),
                simple: if n <= SIMPLICITY_CAP { Some(is_simple(&h, SIMPLICITY_CAP)?) } else { None },
                structure,
            },
            Err(_) => UtumiView {
                hypergroup: false,
                cogroup: None,
                sum_criterion: None,
                simple: None,
                structure,
            },
        })
    })())
}

#[derive(Serialize)]
struct CosetView {
    simple: bool,
    structure: Box<RawValue>,
    reflets: Vec<Box<RawValue>>,
}

/// The hypergroup `Sym(m)/Stab(point)` with its reflets.
#[wasm_bindgen]
pub fn stabilizer_reflets(m: usize, point: usize) -> String {
    respond((|| {
        let g = symmetric_group(m, GROUP_CAP)?;
        let h = right_coset_hypergroup(&g, &stabilizer_subgroup(&g, point)?)?;
        let list = reflets(&h, SIMPLICITY_CAP)?;
        Ok(CosetView {
            simple: is_simple(&h, SIMPLICITY_CAP)?,
            structure: raw(&h),
            reflets: list.iter().map(|q| raw(q)).collect(),
        })
    })())
}
