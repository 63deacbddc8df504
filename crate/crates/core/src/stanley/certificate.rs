//! Rank-3 certificates, the general Stanley check, and the set ℵ.
//!
//! A certificate is the case tree of the rank-3 argument. Each node records
//! the case taken, the h-vector (nonzero part) and a witness whose closure is
//! a pure order ideal with exactly that rank vector. Inductive nodes also keep
//! the chosen vertex and the certificates of its deletion and link.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use serde_json::json;

use super::ccc::{ccc_hypotheses, ccc_inequalities};
use super::constructions::{ci_witness, exceptional_witness, init_ge3_witness};
use super::inequalities::link_deletion_inequalities;
use crate::complexes::{
    bits, ci_degrees, deletion, h_vector, is_complete_intersection, is_cone, is_matroid, link, strip_coloops,
    SimplicialComplex, Subset,
};
use crate::error::{Error, Result};
use crate::osequences::{shifted_sum, Purity, PurityOracle, Witness};
use crate::sequence::{binomial, IntSequence};
use crate::verdict::{Outcome, Verdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CaseTag {
    ConeReduction,
    CompleteIntersection,
    #[serde(rename = "dim_le_1")]
    DimLe1,
    #[serde(rename = "init_ge_3")]
    InitGe3,
    ExceptionalJoin,
    InductiveVertex,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StanleyCertificate {
    pub case: CaseTag,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertex: Option<usize>,
    pub h: IntSequence,
    pub witness: Witness,
    #[serde(default)]
    pub children: Vec<StanleyCertificate>,
}

impl StanleyCertificate {
    /// Every witness realizes its node's h-vector, and inductive nodes satisfy
    /// the shifted-sum identity with their children.
    pub fn verify(&self) -> bool {
        if !self.witness.realizes(&self.h) {
            return false;
        }
        let identity = match (self.case, self.children.as_slice()) {
            (CaseTag::InductiveVertex, [del, lk]) => {
                let e = self.h.len();
                shifted_sum(&del.h.padded(e), &lk.h.padded(e - 1)).map(|s| s == self.h) == Ok(true)
            }
            (CaseTag::InductiveVertex, _) => false,
            (CaseTag::ConeReduction, [child]) => child.h == self.h,
            _ => true,
        };
        identity && self.children.iter().all(StanleyCertificate::verify)
    }

    pub fn node_count(&self) -> usize {
        1 + self.children.iter().map(StanleyCertificate::node_count).sum::<usize>()
    }

    /// Nodes in depth-first order.
    pub fn nodes(&self) -> Vec<&StanleyCertificate> {
        let mut out = vec![self];
        for c in &self.children {
            out.extend(c.nodes());
        }
        out
    }
}

fn decided_witness(h: &IntSequence, oracle: &PurityOracle, what: &str) -> Result<Witness> {
    let d = oracle.decide(h);
    match d.pure {
        Purity::Pure => Ok(d.witness.expect("pure verdicts carry a witness")),
        Purity::NotPure => Err(Error::CaseAnalysisViolated(format!("{what}: h = {h} is not pure"))),
        Purity::Undecided => Err(Error::Undecided(format!("{what}: h = {h}"))),
    }
}

/// The pair `{a, b}` when the proper circuits are `{a, b}` together with every
/// 3-subset of the remaining vertices, and at least 4 vertices remain.
fn exceptional_pair(c: &SimplicialComplex) -> Option<Subset> {
    let circuits = c.proper_circuit_masks();
    let pairs: Vec<Subset> = circuits.iter().copied().filter(|k| k.count_ones() == 2).collect();
    let [pair] = pairs.as_slice() else {
        return None;
    };
    let rest = c.vertex_mask() & !pair;
    let m = rest.count_ones() as i64;
    if m < 4 {
        return None;
    }
    let others: Vec<Subset> = circuits.iter().copied().filter(|k| k != pair).collect();
    let all_cubes = others.iter().all(|&k| k.count_ones() == 3 && k & !rest == 0);
    (all_cubes && others.len() as i64 == binomial(m, 3)).then_some(*pair)
}

fn build(c: &SimplicialComplex, oracle: &PurityOracle) -> Result<StanleyCertificate> {
    let h = h_vector(c).nonzero_part();
    let leaf = |case, witness| StanleyCertificate {
        case,
        vertex: None,
        h: h.clone(),
        witness,
        children: Vec::new(),
    };
    if is_cone(c) {
        let child = build(&strip_coloops(c), oracle)?;
        return Ok(StanleyCertificate {
            case: CaseTag::ConeReduction,
            vertex: None,
            h: h.clone(),
            witness: child.witness.clone(),
            children: vec![child],
        });
    }
    if is_complete_intersection(c) {
        let w = ci_witness(&ci_degrees(c)?)?.witness();
        return Ok(leaf(CaseTag::CompleteIntersection, w));
    }
    if c.rank() <= 2 {
        return Ok(leaf(CaseTag::DimLe1, decided_witness(&h, oracle, "rank <= 2")?));
    }
    if c.init_degree().unwrap_or(0) >= 3 {
        let w = init_ge3_witness(h[1] as usize, h.get(3))?.witness();
        return Ok(leaf(CaseTag::InitGe3, w));
    }
    // init = 2: smallest vertex on a 2-circuit whose deletion and link are not cones
    let on_pairs = c
        .proper_circuit_masks()
        .iter()
        .filter(|k| k.count_ones() == 2)
        .fold(0u64, |acc, k| acc | k);
    for v in bits(on_pairs).map(|i| i + 1) {
        let del = deletion(c, v)?.complex;
        let lk = link(c, v)?;
        if is_cone(&del) || is_cone(&lk) {
            continue;
        }
        let (hd, hl) = (h_vector(&del).nonzero_part(), h_vector(&lk).nonzero_part());
        if !link_deletion_inequalities(c, v)?.passed() || !ccc_inequalities(&hd, &hl)? {
            return Err(Error::CaseAnalysisViolated(format!(
                "vertex {v}: deletion {hd} and link {hl} break the shifted-sum hypotheses"
            )));
        }
        let children = vec![build(&del, oracle)?, build(&lk, oracle)?];
        let witness = decided_witness(&h, oracle, "inductive vertex")?;
        return Ok(StanleyCertificate {
            case: CaseTag::InductiveVertex,
            vertex: Some(v),
            h,
            witness,
            children,
        });
    }
    if exceptional_pair(c).is_some() {
        let r = c.vertex_mask().count_ones() as i64 - 3;
        let expected = IntSequence::from([1, r, binomial(r, 2) + r - 1, binomial(r, 2)]);
        if h != expected {
            return Err(Error::CaseAnalysisViolated(format!("exceptional join with h = {h}, expected {expected}")));
        }
        return Ok(leaf(CaseTag::ExceptionalJoin, exceptional_witness(r as usize)?.witness()));
    }
    Err(Error::CaseAnalysisViolated(format!(
        "no vertex on a 2-circuit with non-cone deletion and link, facets {:?}",
        c.facets()
    )))
}

/// Builds the rank-3 case tree for a matroid of rank at most 3. Loops are
/// ignored; they change neither h-vectors nor the case analysis.
pub fn rank3_certificate(c: &SimplicialComplex, oracle: &PurityOracle) -> Result<StanleyCertificate> {
    if !is_matroid(c) {
        return Err(Error::NotMatroid);
    }
    if c.rank() > 3 {
        return Err(Error::OutOfScope(format!("rank {} > 3", c.rank())));
    }
    let cert = build(c, oracle)?;
    if !cert.verify() {
        return Err(Error::CaseAnalysisViolated("certificate failed verification".into()));
    }
    Ok(cert)
}

/// Purity of the h-vector of a matroid, with a witness when pure.
pub fn stanley_check(c: &SimplicialComplex, oracle: &PurityOracle) -> Result<Verdict> {
    if !is_matroid(c) {
        return Err(Error::NotMatroid);
    }
    let h = h_vector(c).nonzero_part();
    if is_complete_intersection(c) {
        let w = ci_witness(&ci_degrees(c)?)?.witness();
        return Ok(Verdict::pass("ci_witness").with("h", &h).with("witness", &w));
    }
    let d = oracle.decide(&h);
    Ok(match d.pure {
        Purity::Pure => Verdict::pass("purity").with("h", &h).with("decided_by", d.decided_by).with("witness", &d.witness),
        Purity::NotPure => Verdict::fail(
            "purity",
            json!({"n": c.ground_size(), "facets": c.facets(), "h": h, "decided_by": d.decided_by}),
        ),
        Purity::Undecided => Verdict::undecided("purity").with("h", &h),
    })
}

/// Largest number of vertices [`aleph_membership`] accepts.
pub const ALEPH_MAX_VERTICES: u32 = 10;

type AlephMemo = HashMap<Vec<Subset>, (Outcome, Option<usize>)>;

fn aleph(c: &SimplicialComplex, oracle: &PurityOracle, memo: &mut AlephMemo) -> Result<(Outcome, Option<usize>)> {
    let key = c.facet_masks().to_vec();
    if let Some(hit) = memo.get(&key) {
        return Ok(*hit);
    }
    let result = if is_cone(c) {
        (Outcome::Fail, None)
    } else if is_complete_intersection(c) {
        (Outcome::Pass, None)
    } else {
        let mut best = (Outcome::Fail, None);
        for v in bits(c.vertex_mask()).map(|i| i + 1) {
            let del = deletion(c, v)?.complex;
            let lk = link(c, v)?;
            let (hd, hl) = (h_vector(&del).nonzero_part(), h_vector(&lk).nonzero_part());
            if hl.len() + 1 != hd.len() {
                continue;
            }
            let hyp = ccc_hypotheses(&hd, &hl, oracle)?;
            if hyp == Outcome::Fail {
                continue;
            }
            let (a, _) = aleph(&del, oracle, memo)?;
            let (b, _) = aleph(&lk, oracle, memo)?;
            let outcome = match (hyp, a, b) {
                (_, Outcome::Fail, _) | (_, _, Outcome::Fail) => Outcome::Fail,
                (Outcome::Pass, Outcome::Pass, Outcome::Pass) => Outcome::Pass,
                _ => Outcome::Undecided,
            };
            if outcome == Outcome::Pass {
                best = (Outcome::Pass, Some(v));
                break;
            }
            if outcome == Outcome::Undecided {
                best = (Outcome::Undecided, None);
            }
        }
        best
    };
    memo.insert(key, result);
    Ok(result)
}

/// Membership in the inductively defined set ℵ: not a cone, and either a
/// complete intersection or some vertex has deletion and link in ℵ whose
/// h-vectors satisfy the shifted-sum hypotheses. Exhaustive over vertices, so
/// limited to small complexes.
pub fn aleph_membership(c: &SimplicialComplex, oracle: &PurityOracle) -> Result<Verdict> {
    if !is_matroid(c) {
        return Err(Error::NotMatroid);
    }
    let nv = c.vertex_mask().count_ones();
    if nv > ALEPH_MAX_VERTICES {
        return Err(Error::Precondition(format!("{nv} vertices > {ALEPH_MAX_VERTICES}")));
    }
    let (outcome, vertex) = aleph(c, oracle, &mut AlephMemo::new())?;
    let v = match outcome {
        Outcome::Pass => Verdict::pass("aleph_membership"),
        Outcome::Fail => Verdict::fail("aleph_membership", json!({"n": c.ground_size(), "facets": c.facets()})),
        Outcome::Undecided => Verdict::undecided("aleph_membership"),
    };
    Ok(match vertex {
        Some(x) => v.with("vertex", x),
        None => v,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::cone;

    fn complex(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
        let f: Vec<Vec<usize>> = facets.iter().map(|x| x.to_vec()).collect();
        SimplicialComplex::from_facets(n, &f).unwrap()
    }

    fn octahedron() -> SimplicialComplex {
        SimplicialComplex::from_circuits(6, &[vec![1, 2], vec![3, 4], vec![5, 6]]).unwrap()
    }

    fn uniform(n: usize, k: usize) -> SimplicialComplex {
        let masks = (0..(1u64 << n)).filter(|m| m.count_ones() as usize == k).collect();
        SimplicialComplex::from_facet_masks(n, masks)
    }

    fn exceptional() -> SimplicialComplex {
        let mut circ = vec![vec![1, 2]];
        for a in 3..=6 {
            for b in a + 1..=6 {
                for c in b + 1..=6 {
                    circ.push(vec![a, b, c]);
                }
            }
        }
        SimplicialComplex::from_circuits(6, &circ).unwrap()
    }

    #[test]
    fn leaf_cases() {
        let o = PurityOracle::default();
        let cert = rank3_certificate(&octahedron(), &o).unwrap();
        assert_eq!(cert.case, CaseTag::CompleteIntersection);
        assert_eq!(cert.h, IntSequence::from([1, 3, 3, 1]));

        let u36 = rank3_certificate(&uniform(6, 3), &o).unwrap();
        assert_eq!(u36.case, CaseTag::InitGe3);
        assert_eq!(u36.h, IntSequence::from([1, 3, 6, 10]));

        let exc = rank3_certificate(&exceptional(), &o).unwrap();
        assert_eq!(exc.case, CaseTag::ExceptionalJoin);
        assert_eq!(exc.h, IntSequence::from([1, 3, 5, 3]));

        let c4 = complex(4, &[&[1, 2], &[2, 3], &[3, 4], &[1, 4]]);
        let c = rank3_certificate(&c4, &o).unwrap();
        assert_eq!(c.case, CaseTag::CompleteIntersection);
        let k4 = uniform(4, 2);
        assert_eq!(rank3_certificate(&k4, &o).unwrap().case, CaseTag::DimLe1);

        let coned = rank3_certificate(&cone(&k4).unwrap(), &o).unwrap();
        assert_eq!(coned.case, CaseTag::ConeReduction);
        assert!(coned.verify());
    }

    #[test]
    fn inductive_case_and_json() {
        let o = PurityOracle::default();
        // U(3,4) on {1,2,3,4} with 5 parallel to 1
        let c = SimplicialComplex::from_circuits(5, &[vec![1, 5], vec![1, 2, 3, 4], vec![2, 3, 4, 5]]).unwrap();
        assert!(is_matroid(&c));
        let cert = rank3_certificate(&c, &o).unwrap();
        assert_eq!(cert.case, CaseTag::InductiveVertex);
        assert_eq!(cert.vertex, Some(1));
        assert_eq!(cert.h, IntSequence::from([1, 2, 2, 2]));
        assert_eq!(cert.node_count(), 3);
        assert!(cert.verify());
        assert_eq!(serde_json::to_value(CaseTag::DimLe1).unwrap(), json!("dim_le_1"));
        assert_eq!(serde_json::to_value(CaseTag::InitGe3).unwrap(), json!("init_ge_3"));
        let json = serde_json::to_value(&cert).unwrap();
        assert!(json.get("case").is_some() && json.get("h").is_some() && json.get("witness").is_some());
    }

    #[test]
    fn scope_errors() {
        let o = PurityOracle::default();
        let ex = SimplicialComplex::from_circuits(6, &[vec![1, 2, 5, 6], vec![1, 2, 3, 4], vec![3, 4, 5, 6]]).unwrap();
        assert!(matches!(rank3_certificate(&ex, &o), Err(Error::OutOfScope(_))));
        let edges = complex(4, &[&[1, 2], &[3, 4]]);
        assert_eq!(rank3_certificate(&edges, &o), Err(Error::NotMatroid));
    }

    #[test]
    fn stanley_checks() {
        let o = PurityOracle::default();
        let ex = SimplicialComplex::from_circuits(6, &[vec![1, 2, 5, 6], vec![1, 2, 3, 4], vec![3, 4, 5, 6]]).unwrap();
        let v = stanley_check(&ex, &o).unwrap();
        assert!(v.passed());
        assert_eq!(v.detail["h"], json!([1, 2, 3, 4, 2]));
        assert_eq!(stanley_check(&octahedron(), &o).unwrap().method, "ci_witness");
        let simplex = complex(3, &[&[1, 2, 3]]);
        assert_eq!(stanley_check(&simplex, &o).unwrap().detail["h"], json!([1]));
    }

    #[test]
    fn aleph_small() {
        let o = PurityOracle::default();
        assert!(aleph_membership(&octahedron(), &o).unwrap().passed());
        let cone4 = cone(&uniform(4, 2)).unwrap();
        assert!(aleph_membership(&cone4, &o).unwrap().failed());
        // every vertex of K5 has Δh(link)_1 = 2 > Δh(deletion)_1 = 1
        assert!(aleph_membership(&uniform(5, 2), &o).unwrap().failed());
        let parallel = SimplicialComplex::from_circuits(5, &[vec![1, 5], vec![1, 2, 3, 4], vec![2, 3, 4, 5]]).unwrap();
        let v = aleph_membership(&parallel, &o).unwrap();
        assert!(v.passed());
        assert_eq!(v.detail["vertex"], json!(1));
    }
}
