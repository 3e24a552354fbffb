//! Text and JSON forms of computed characters.

use qchar_core::{MultiPoly, Rational};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exps: Vec<u32>,
    pub coeff: String,
}

/// `{"N": .., "m": .., "engine": .., "coeffs": [..]}`, terms in canonical
/// order. Also the on-disk cache format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChiJson {
    #[serde(rename = "N")]
    pub rank: usize,
    pub m: usize,
    pub engine: String,
    pub coeffs: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HcJson {
    #[serde(rename = "N")]
    pub rank: usize,
    pub n: usize,
    pub engine: String,
    pub coeffs: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvalJson {
    #[serde(rename = "N")]
    pub rank: usize,
    pub m: usize,
    pub engine: String,
    pub lambda: Vec<String>,
    pub value: String,
}

pub fn terms_json(p: &MultiPoly) -> Vec<TermJson> {
    p.terms()
        .map(|(mono, c)| TermJson {
            exps: mono.exps().to_vec(),
            coeff: c.to_string(),
        })
        .collect()
}

pub fn chi_json(rank: usize, m: usize, engine: &str, p: &MultiPoly) -> ChiJson {
    ChiJson {
        rank,
        m,
        engine: engine.to_string(),
        coeffs: terms_json(p),
    }
}

/// Rebuilds the polynomial from its JSON form. `None` if the payload is
/// malformed.
pub fn poly_from_json(doc: &ChiJson) -> Option<MultiPoly> {
    let mut terms = Vec::with_capacity(doc.coeffs.len());
    for t in &doc.coeffs {
        if t.exps.len() != doc.rank {
            return None;
        }
        let c: Rational = t.coeff.parse().ok()?;
        terms.push((t.exps.clone(), c));
    }
    Some(MultiPoly::from_terms(doc.rank, terms))
}

pub fn to_json_line<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("plain data serializes")
}
