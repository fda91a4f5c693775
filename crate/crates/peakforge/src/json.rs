//! JSON encodings of elements, Hilbert reports and echelon bases.

use std::str::FromStr;

use peakforge_core::combinatorics::ColoredPart;
use peakforge_core::peak::{HilbertReport, Prediction};
use peakforge_core::{
    ColoredComposition, Composition, Field, FqsymBasis, FqsymElement, GradedSubspace, LinComb, MrBasis, MrElement,
    Permutation, SymBasis, SymElement,
};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

pub const SCHEMA: &str = "peakforge/1";

#[derive(Debug, thiserror::Error)]
pub enum JsonError {
    #[error("schema {0:?} is not {SCHEMA}")]
    Schema(String),
    #[error("expected a {expected} element, found {found:?}")]
    Algebra { expected: &'static str, found: String },
    #[error("unknown basis {0:?}")]
    Basis(String),
    #[error("bad key {0}")]
    Key(Value),
    #[error("bad coefficient {0:?}")]
    Coeff(String),
    #[error(transparent)]
    Syntax(#[from] serde_json::Error),
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct TermJson {
    pub key: Value,
    pub coeff: String,
}

/// `{"schema":"peakforge/1","algebra":"mr","basis":"R","terms":[{"key":[[1,1],[1,0]],"coeff":"q"}]}`
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct ElementJson {
    pub schema: String,
    pub algebra: String,
    pub basis: String,
    pub terms: Vec<TermJson>,
}

pub fn composition_key(i: &Composition) -> Value {
    json!(i.parts())
}

pub fn colored_key(j: &ColoredComposition) -> Value {
    Value::Array(j.parts().iter().map(|p| json!([p.size, p.color])).collect())
}

pub fn permutation_key(p: &Permutation) -> Value {
    json!(p.word())
}

fn element<K, F: Field>(algebra: &str, basis: &str, terms: &LinComb<K, F>, key: impl Fn(&K) -> Value) -> ElementJson
where
    K: Ord + Clone,
{
    ElementJson {
        schema: SCHEMA.into(),
        algebra: algebra.into(),
        basis: basis.into(),
        terms: terms.iter().map(|(k, c)| TermJson { key: key(k), coeff: c.to_string() }).collect(),
    }
}

pub fn sym_to_json<F: Field>(f: &SymElement<F>) -> ElementJson {
    element("sym", f.basis().symbol(), f.terms(), composition_key)
}

pub fn mr_to_json<F: Field>(f: &MrElement<F>) -> ElementJson {
    element("mr", f.basis().symbol(), f.terms(), colored_key)
}

pub fn fqsym_to_json<F: Field>(f: &FqsymElement<F>) -> ElementJson {
    element("fqsym", f.basis().symbol(), f.terms(), permutation_key)
}

fn check_header(e: &ElementJson, algebra: &'static str) -> Result<(), JsonError> {
    if e.schema != SCHEMA {
        return Err(JsonError::Schema(e.schema.clone()));
    }
    if e.algebra != algebra {
        return Err(JsonError::Algebra { expected: algebra, found: e.algebra.clone() });
    }
    Ok(())
}

fn parse_terms<K: Ord + Clone, F: Field + FromStr>(
    e: &ElementJson,
    key: impl Fn(&Value) -> Option<K>,
) -> Result<LinComb<K, F>, JsonError> {
    let mut out = LinComb::zero();
    for t in &e.terms {
        let k = key(&t.key).ok_or_else(|| JsonError::Key(t.key.clone()))?;
        let c = t.coeff.parse::<F>().map_err(|_| JsonError::Coeff(t.coeff.clone()))?;
        out.add_term(k, c);
    }
    Ok(out)
}

fn usizes(v: &Value) -> Option<Vec<usize>> {
    v.as_array()?.iter().map(|x| x.as_u64().map(|x| x as usize)).collect()
}

pub fn sym_from_json<F: Field + FromStr>(e: &ElementJson) -> Result<SymElement<F>, JsonError> {
    check_header(e, "sym")?;
    let basis = match e.basis.as_str() {
        "S" => SymBasis::S,
        "L" => SymBasis::Lambda,
        "R" => SymBasis::R,
        other => return Err(JsonError::Basis(other.into())),
    };
    let terms = parse_terms(e, |v| Composition::new(usizes(v)?).ok())?;
    Ok(SymElement::from_terms(basis, terms))
}

pub fn mr_from_json<F: Field + FromStr>(e: &ElementJson) -> Result<MrElement<F>, JsonError> {
    check_header(e, "mr")?;
    let basis = match e.basis.as_str() {
        "S" => MrBasis::S,
        "R" => MrBasis::R,
        other => return Err(JsonError::Basis(other.into())),
    };
    let terms = parse_terms(e, |v| {
        let parts = v
            .as_array()?
            .iter()
            .map(|p| {
                let p = usizes(p)?;
                match p[..] {
                    [size, color] if color < 2 => Some(ColoredPart::new(size, color as u8)),
                    _ => None,
                }
            })
            .collect::<Option<Vec<_>>>()?;
        ColoredComposition::new(parts, 2).ok()
    })?;
    Ok(MrElement::from_terms(basis, terms))
}

pub fn fqsym_from_json<F: Field + FromStr>(e: &ElementJson) -> Result<FqsymElement<F>, JsonError> {
    check_header(e, "fqsym")?;
    let basis = match e.basis.as_str() {
        "G" => FqsymBasis::G,
        "F" => FqsymBasis::F,
        "M" => FqsymBasis::M,
        other => return Err(JsonError::Basis(other.into())),
    };
    let terms = parse_terms(e, |v| Permutation::new(usizes(v)?).ok())?;
    Ok(FqsymElement::from_terms(basis, terms))
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct PredictionJson {
    pub source: String,
    pub values: Vec<i64>,
    #[serde(rename = "match")]
    pub matches: bool,
}

/// `{"schema":…,"algebra":"Qring","r":3,"dims":[…],"predicted":{…},"match":true,"candidates":[…]}`
#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct HilbertJson {
    pub schema: &'static str,
    pub algebra: &'static str,
    pub r: usize,
    pub dims: Vec<usize>,
    pub predicted: PredictionJson,
    #[serde(rename = "match")]
    pub matches: bool,
    pub candidates: Vec<PredictionJson>,
}

fn prediction(p: &Prediction, dims: &[usize]) -> PredictionJson {
    PredictionJson { source: p.source.clone(), values: p.values.clone(), matches: p.matches(dims) }
}

pub fn hilbert_json(report: &HilbertReport) -> HilbertJson {
    let all: Vec<PredictionJson> = report.predictions.iter().map(|p| prediction(p, &report.dims)).collect();
    HilbertJson {
        schema: SCHEMA,
        algebra: report.algebra.tag(),
        r: report.r,
        dims: report.dims.clone(),
        predicted: all[0].clone(),
        matches: report.matches(),
        candidates: all[1..].to_vec(),
    }
}

/// Echelon rows as arrays of `[key, coefficient]` pairs.
pub fn echelon_json<K: Ord + Clone, F: Field>(sub: &GradedSubspace<K, F>, key: impl Fn(&K) -> Value) -> Value {
    Value::Array(
        sub.basis()
            .iter()
            .map(|row| Value::Array(row.iter().map(|(k, c)| json!([key(k), c.to_string()])).collect()))
            .collect(),
    )
}
