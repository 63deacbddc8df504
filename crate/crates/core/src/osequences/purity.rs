//! Layered purity decision for O-sequences.
//!
//! Layers, first match wins:
//! 1. socle degree at most 1 (always pure);
//! 2. necessary conditions: O-sequence, flawless, differentiable first half;
//! 3. closed forms: socle degree 2, and the shape `(1, r, r, t)`;
//! 4. differentiable sequences are pure, with an explicit witness;
//! 5. exhaustive witness search under a node budget.
//!
//! Every "pure" verdict carries a witness whose closure has been checked.

use std::collections::HashMap;
use std::sync::Mutex;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::json;

use super::macaulay::{first_difference, first_half, is_differentiable, is_flawless, is_o_sequence, lex_segment_ideal};
use super::monomial::{downward_closure, monomials_of_degree, Monomial, Witness};
use super::search::{pure_witness_search, SearchOutcome, DEFAULT_CAP_NODES};
use crate::error::{Error, Result};
use crate::sequence::{binomial, IntSequence};
use crate::verdict::Verdict;

/// Three-valued purity answer. Serializes as `true`, `false` or `"undecided"`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Purity {
    Pure,
    NotPure,
    Undecided,
}

impl Serialize for Purity {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Purity::Pure => s.serialize_bool(true),
            Purity::NotPure => s.serialize_bool(false),
            Purity::Undecided => s.serialize_str("undecided"),
        }
    }
}

impl<'de> Deserialize<'de> for Purity {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        match serde_json::Value::deserialize(d)? {
            serde_json::Value::Bool(true) => Ok(Purity::Pure),
            serde_json::Value::Bool(false) => Ok(Purity::NotPure),
            serde_json::Value::String(s) if s == "undecided" => Ok(Purity::Undecided),
            other => Err(serde::de::Error::custom(format!("bad purity value {other}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DecidedBy {
    SocleDegreeLe1,
    OSequence,
    Flawless,
    FirstHalfDifferentiable,
    ClosedFormE2,
    ClosedForm1rrt,
    Differentiable,
    Search,
    Cap,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PurityVerdict {
    pub h: IntSequence,
    pub pure: Purity,
    pub decided_by: DecidedBy,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nodes: Option<u64>,
}

impl PurityVerdict {
    fn new(h: &[i64], pure: Purity, decided_by: DecidedBy) -> Self {
        PurityVerdict {
            h: h.into(),
            pure,
            decided_by,
            witness: None,
            nodes: None,
        }
    }

    fn pure_with(h: &[i64], decided_by: DecidedBy, w: Witness) -> Self {
        debug_assert!(w.realizes(&h.into()), "witness for {h:?} does not realize it");
        PurityVerdict {
            witness: Some(w),
            ..PurityVerdict::new(h, Purity::Pure, decided_by)
        }
    }

    pub fn is_pure(&self) -> bool {
        self.pure == Purity::Pure
    }
}

/// Pairs variables (`y1y2`, `y3y4`, ..., `y_m^2` when `m` is odd), then adds
/// further quadrics in lex order until there are `a`.
fn e2_witness(m: usize, a: usize) -> Witness {
    let mut maxima = Vec::new();
    for i in (0..m).step_by(2) {
        let mut exps = vec![0u32; m];
        exps[i] += 1;
        exps[(i + 1).min(m - 1)] += 1;
        maxima.push(Monomial::new(exps));
    }
    for q in monomials_of_degree(m, 2) {
        if maxima.len() >= a {
            break;
        }
        if !maxima.contains(&q) {
            maxima.push(q);
        }
    }
    Witness { r: m, maxima }
}

/// Cone construction: if `L` is the lex order ideal of `Δh` in `r - 1`
/// variables, then `{ m * y_r^k : m ∈ L, deg m + k <= e }` is pure with rank
/// vector `h`.
pub fn differentiable_witness(h: &[i64]) -> Result<Witness> {
    if !is_differentiable(h) {
        return Err(Error::Precondition(format!("{h:?} is not differentiable")));
    }
    let e = h.iter().rposition(|&x| x != 0).unwrap_or(0);
    let h = &h[..=e];
    let r = if e == 0 { 0 } else { h[1] as usize };
    if r == 0 {
        return Ok(Witness { r: 0, maxima: vec![Monomial::one(0)] });
    }
    let lex = lex_segment_ideal(&first_difference(h))?;
    let tops: Vec<Monomial> = lex
        .monomials()
        .iter()
        .map(|m| {
            let mut v = m.extended(r).exponents().to_vec();
            v[r - 1] += (e - m.degree()) as u32;
            Monomial::new(v)
        })
        .collect();
    Ok(downward_closure(r, &tops)?.witness())
}

/// `(1, r, r, t)` with `ceil(r/3) <= t <= r`: split the variables into `t`
/// consecutive blocks of sizes 1 to 3 and take `y_a^3`, `y_a^2 y_b` or
/// `y_a y_b y_c` per block.
fn rrt_witness(r: usize, t: usize) -> Witness {
    let mut sizes = vec![1usize; t];
    let mut extra = r - t;
    for s in sizes.iter_mut() {
        let add = extra.min(2);
        *s += add;
        extra -= add;
    }
    let mut maxima = Vec::new();
    let mut v = 0;
    for s in sizes {
        let mut exps = vec![0u32; r];
        match s {
            1 => exps[v] = 3,
            2 => {
                exps[v] = 2;
                exps[v + 1] = 1;
            }
            _ => {
                exps[v] = 1;
                exps[v + 1] = 1;
                exps[v + 2] = 1;
            }
        }
        maxima.push(Monomial::new(exps));
        v += s;
    }
    Witness { r, maxima }
}

fn search_verdict(h: &[i64], cap: u64) -> PurityVerdict {
    let report = pure_witness_search(h, cap);
    let mut v = match report.outcome {
        SearchOutcome::Found(w) => PurityVerdict::pure_with(h, DecidedBy::Search, w),
        SearchOutcome::Exhausted => PurityVerdict::new(h, Purity::NotPure, DecidedBy::Search),
        SearchOutcome::CapHit => PurityVerdict::new(h, Purity::Undecided, DecidedBy::Cap),
    };
    v.nodes = Some(report.nodes);
    v
}

/// Decides whether `h` is the rank vector of a pure order ideal. Trailing
/// zeros are ignored. Never answers wrongly: an exhausted budget yields
/// [`Purity::Undecided`].
pub fn is_pure_o_sequence(h: &[i64], cap_nodes: u64) -> PurityVerdict {
    if h.first() != Some(&1) || h.iter().any(|&x| x < 0) {
        return PurityVerdict::new(h, Purity::NotPure, DecidedBy::OSequence);
    }
    let e = h.iter().rposition(|&x| x != 0).unwrap_or(0);
    let t = &h[..=e];
    if e == 0 {
        return PurityVerdict::pure_with(t, DecidedBy::SocleDegreeLe1, Witness { r: 0, maxima: vec![Monomial::one(0)] });
    }
    let r = t[1] as usize;
    if !is_o_sequence(t) {
        return PurityVerdict::new(t, Purity::NotPure, DecidedBy::OSequence);
    }
    if e == 1 {
        let maxima = (1..=r).map(|i| Monomial::power(r, i, 1)).collect();
        return PurityVerdict::pure_with(t, DecidedBy::SocleDegreeLe1, Witness { r, maxima });
    }
    if !is_flawless(t) {
        return PurityVerdict::new(t, Purity::NotPure, DecidedBy::Flawless);
    }
    if !is_differentiable(&first_half(t)) {
        return PurityVerdict::new(t, Purity::NotPure, DecidedBy::FirstHalfDifferentiable);
    }
    if e == 2 {
        let a = t[2];
        let pure = (r as i64 + 1) / 2 <= a && a <= binomial(r as i64 + 1, 2);
        return if pure {
            PurityVerdict::pure_with(t, DecidedBy::ClosedFormE2, e2_witness(r, a as usize))
        } else {
            PurityVerdict::new(t, Purity::NotPure, DecidedBy::ClosedFormE2)
        };
    }
    if is_differentiable(t) {
        let w = differentiable_witness(t).expect("differentiable input");
        return PurityVerdict::pure_with(t, DecidedBy::Differentiable, w);
    }
    if e == 3 && t[1] == t[2] {
        let last = t[3];
        let pure = (r as i64 + 2) / 3 <= last && last <= r as i64;
        return if pure {
            PurityVerdict::pure_with(t, DecidedBy::ClosedForm1rrt, rrt_witness(r, last as usize))
        } else {
            PurityVerdict::new(t, Purity::NotPure, DecidedBy::ClosedForm1rrt)
        };
    }
    search_verdict(t, cap_nodes)
}

/// Memoizing front end to [`is_pure_o_sequence`], shareable across threads.
/// Verdicts depend only on the sequence and the budget, so caching does not
/// affect results.
pub struct PurityOracle {
    cap_nodes: u64,
    cache: Mutex<HashMap<Vec<i64>, PurityVerdict>>,
}

impl Default for PurityOracle {
    fn default() -> Self {
        PurityOracle::new(DEFAULT_CAP_NODES)
    }
}

impl PurityOracle {
    pub fn new(cap_nodes: u64) -> Self {
        PurityOracle {
            cap_nodes,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn cap_nodes(&self) -> u64 {
        self.cap_nodes
    }

    pub fn decide(&self, h: &[i64]) -> PurityVerdict {
        let key: Vec<i64> = IntSequence::from(h).nonzero_part().into_inner();
        if let Some(v) = self.cache.lock().unwrap().get(&key) {
            return v.clone();
        }
        let v = is_pure_o_sequence(&key, self.cap_nodes);
        self.cache.lock().unwrap().insert(key, v.clone());
        v
    }

    pub fn purity(&self, h: &[i64]) -> Purity {
        self.decide(h).pure
    }
}

/// Checks every sequence strictly between `low` and `high`, which differ only
/// at `index`, for purity. Both ends must be pure.
pub fn icp_interval_test(low: &[i64], high: &[i64], index: usize, oracle: &PurityOracle) -> Result<Verdict> {
    if low.len() != high.len() {
        return Err(Error::LengthMismatch(format!("{} vs {}", low.len(), high.len())));
    }
    if index >= low.len() {
        return Err(Error::Precondition(format!("index {index} past the end")));
    }
    if (0..low.len()).any(|j| j != index && low[j] != high[j]) {
        return Err(Error::Precondition("sequences differ away from the index".into()));
    }
    if low[index] > high[index] {
        return Err(Error::Precondition("low exceeds high at the index".into()));
    }
    for end in [low, high] {
        match oracle.purity(end) {
            Purity::Pure => {}
            Purity::NotPure => return Err(Error::Precondition(format!("{end:?} is not pure"))),
            Purity::Undecided => {
                return Ok(Verdict::undecided("icp_interval").with("undecided_endpoint", end));
            }
        }
    }
    let mut undecided = Vec::new();
    let mut seq = low.to_vec();
    for beta in low[index] + 1..high[index] {
        seq[index] = beta;
        match oracle.purity(&seq) {
            Purity::Pure => {}
            Purity::NotPure => {
                return Ok(Verdict::fail(
                    "icp_interval",
                    json!({"low": low, "high": high, "index": index, "beta": beta, "sequence": seq}),
                ));
            }
            Purity::Undecided => undecided.push(beta),
        }
    }
    let checked = (high[index] - low[index] - 1).max(0);
    if undecided.is_empty() {
        Ok(Verdict::pass("icp_interval").with("checked", checked))
    } else {
        Ok(Verdict::undecided("icp_interval").with("undecided_beta", undecided))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn verdict(h: &[i64]) -> PurityVerdict {
        is_pure_o_sequence(h, DEFAULT_CAP_NODES)
    }

    #[test]
    fn non_differentiable_sum_sequences() {
        let v = verdict(&[1, 3, 6]);
        assert!(v.is_pure());
        let v = verdict(&[1, 6, 6, 6]);
        assert!(v.is_pure());
        assert!(v.witness.unwrap().realizes(&IntSequence::from([1, 6, 6, 6])));
        let v = verdict(&[1, 7, 9, 12]);
        assert_eq!(v.pure, Purity::NotPure);
        assert_eq!(v.decided_by, DecidedBy::Search);
    }

    #[test]
    fn layers() {
        assert_eq!(verdict(&[1, 3, 1]).decided_by, DecidedBy::ClosedFormE2);
        assert_eq!(verdict(&[1, 3, 1]).pure, Purity::NotPure);
        assert_eq!(verdict(&[1]).decided_by, DecidedBy::SocleDegreeLe1);
        assert_eq!(verdict(&[1, 2, 4]).decided_by, DecidedBy::OSequence);
        assert_eq!(verdict(&[1, 4, 3, 4]).decided_by, DecidedBy::Flawless);
        assert_eq!(verdict(&[1, 3, 6, 7]).decided_by, DecidedBy::Differentiable);
        assert_eq!(verdict(&[1, 3, 3, 1]).decided_by, DecidedBy::ClosedForm1rrt);
        assert!(verdict(&[1, 3, 3, 1, 0, 0]).is_pure());
        assert_eq!(verdict(&[2, 3]).pure, Purity::NotPure);
    }

    #[test]
    fn witnesses_realize() {
        for h in [
            vec![1, 5, 3],
            vec![1, 5, 15],
            vec![1, 4, 10, 20],
            vec![1, 2, 3, 4, 2],
            vec![1, 6, 6, 2],
            vec![1, 7, 7, 7],
            vec![1, 1, 1, 1, 1],
        ] {
            let v = verdict(&h);
            assert!(v.is_pure(), "{h:?}");
            assert!(v.witness.unwrap().realizes(&IntSequence::new(h.clone())), "{h:?}");
        }
    }

    #[test]
    fn json_shape() {
        let v = verdict(&[1, 2, 1]);
        let s = serde_json::to_string(&v).unwrap();
        assert_eq!(s, r#"{"h":[1,2,1],"pure":true,"decided_by":"closed_form_e2","witness":{"r":2,"maxima":[[1,1]]}}"#);
        let back: PurityVerdict = serde_json::from_str(&s).unwrap();
        assert_eq!(back, v);
        let u = PurityVerdict::new(&[1], Purity::Undecided, DecidedBy::Cap);
        assert!(serde_json::to_string(&u).unwrap().contains(r#""pure":"undecided""#));
    }

    #[test]
    fn icp_intervals() {
        let oracle = PurityOracle::default();
        let v = icp_interval_test(&[1, 3, 3, 1], &[1, 3, 3, 3], 3, &oracle).unwrap();
        assert!(v.passed());
        assert!(icp_interval_test(&[1, 3, 3, 1], &[1, 3, 3, 1], 3, &oracle).unwrap().passed());
        assert!(icp_interval_test(&[1, 3, 3, 1], &[1, 3, 4, 3], 3, &oracle).is_err());
        assert!(icp_interval_test(&[1, 3, 1], &[1, 3, 3], 2, &oracle).is_err());
    }

    #[test]
    fn oracle_caches_nonzero_part() {
        let o = PurityOracle::default();
        assert_eq!(o.decide(&[1, 2, 1, 0]), o.decide(&[1, 2, 1]));
    }
}
