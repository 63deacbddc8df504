//! JSON interchange: complex and sequence inputs, and analysis reports.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::complexes::{
    circuit_exchange_holds, f_vector, h_vector, is_complete_intersection, is_cone, is_matroid, parallel_classes,
    series_classes, tutte_h, SimplicialComplex,
};
use crate::error::{Error, Result};
use crate::osequences::{first_half, is_differentiable, is_flawless, is_o_sequence, PurityOracle};
use crate::sequence::IntSequence;
use crate::stanley::{brown_colbourn_check, stanley_check, standard_alphas};

/// `{"n": 6, "facets": [...]}` or `{"n": 6, "circuits": [...]}`, 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexInput {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub facets: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub circuits: Option<Vec<Vec<usize>>>,
}

impl ComplexInput {
    pub fn build(&self) -> Result<SimplicialComplex> {
        match (&self.facets, &self.circuits) {
            (Some(f), None) => SimplicialComplex::from_facets(self.n, f),
            (None, Some(c)) => SimplicialComplex::from_circuits(self.n, c),
            _ => Err(Error::InvalidInput("give exactly one of \"facets\" and \"circuits\"".into())),
        }
    }
}

impl From<&SimplicialComplex> for ComplexInput {
    fn from(c: &SimplicialComplex) -> Self {
        ComplexInput {
            n: c.ground_size(),
            facets: Some(c.facets()),
            circuits: None,
        }
    }
}

/// `{"h": [1, 7, 9, 12]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SequenceInput {
    pub h: IntSequence,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Input {
    Complex(SimplicialComplex),
    Sequence(IntSequence),
}

/// Parses either input schema, told apart by the presence of `"h"`.
pub fn parse_input(text: &str) -> Result<Input> {
    let value: Value = serde_json::from_str(text).map_err(|e| Error::InvalidInput(e.to_string()))?;
    if value.get("h").is_some() {
        let s: SequenceInput = serde_json::from_value(value).map_err(|e| Error::InvalidInput(e.to_string()))?;
        return Ok(Input::Sequence(s.h));
    }
    let c: ComplexInput = serde_json::from_value(value).map_err(|e| Error::InvalidInput(e.to_string()))?;
    c.build().map(Input::Complex)
}

pub fn parse_complex(text: &str) -> Result<SimplicialComplex> {
    match parse_input(text)? {
        Input::Complex(c) => Ok(c),
        Input::Sequence(_) => Err(Error::InvalidInput("expected a complex, got a sequence".into())),
    }
}

pub fn parse_sequence(text: &str) -> Result<IntSequence> {
    match parse_input(text)? {
        Input::Sequence(h) => Ok(h),
        Input::Complex(_) => Err(Error::InvalidInput("expected a sequence, got a complex".into())),
    }
}

/// Everything the tool knows about a complex. Matroid-only fields are null
/// for other complexes.
pub fn complex_report(c: &SimplicialComplex, oracle: &PurityOracle) -> Result<Value> {
    let matroid = is_matroid(c);
    let h = h_vector(c);
    let mut report = json!({
        "n": c.ground_size(),
        "facets": c.facets(),
        "circuits": c.circuits(),
        "loops": c.loops(),
        "f": f_vector(c),
        "h": h,
        "matroid": matroid,
        "circuit_exchange": circuit_exchange_holds(c),
        "pure": c.is_pure(),
        "cone": is_cone(c),
        "complete_intersection": matroid && is_complete_intersection(c),
    });
    let extra = if matroid {
        let tutte = tutte_h(c)?;
        json!({
            "series_classes": series_classes(c),
            "parallel_classes": parallel_classes(c),
            "tutte_h": tutte,
            "tutte_agrees": tutte.nonzero_part() == h.nonzero_part(),
            "brown_colbourn": brown_colbourn_check(&h, &standard_alphas())?,
            "stanley": stanley_check(c, oracle)?,
        })
    } else {
        json!({
            "series_classes": null,
            "parallel_classes": null,
            "tutte_h": null,
            "tutte_agrees": null,
            "brown_colbourn": null,
            "stanley": null,
        })
    };
    let (Value::Object(base), Value::Object(more)) = (&mut report, extra) else {
        unreachable!("both reports are objects")
    };
    base.extend(more);
    Ok(report)
}

/// O-sequence, differentiability, flawlessness and purity of `h`.
pub fn sequence_report(h: &IntSequence, oracle: &PurityOracle) -> Value {
    let o_sequence = is_o_sequence(h);
    json!({
        "h": h,
        "o_sequence": o_sequence,
        "differentiable": o_sequence && is_differentiable(h),
        "flawless": o_sequence && is_flawless(h),
        "first_half_differentiable": o_sequence && is_differentiable(&first_half(h)),
        "purity": oracle.decide(h),
    })
}
