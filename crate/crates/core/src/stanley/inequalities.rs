//! Inequalities satisfied by matroid h-vectors, and the structural lemmas of
//! the rank-3 argument, as checkable verdicts.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::json;

use crate::complexes::{
    bits, ci_degrees, coloops, deletion, h_vector, is_complete_intersection, is_cone, is_matroid, link,
    SimplicialComplex,
};
use crate::error::{Error, Result};
use crate::osequences::{first_difference, is_o_sequence};
use crate::sequence::IntSequence;
use crate::verdict::Verdict;

/// `(-1)^j Σ_{i<=j} (-α)^i h_i`.
pub fn brown_colbourn_value(h: &[i64], alpha: &BigRational, j: usize) -> BigRational {
    let mut acc = BigRational::zero();
    let mut power = BigRational::one();
    let neg_alpha = -alpha.clone();
    for &hi in h.iter().take(j + 1) {
        acc += &power * BigRational::from_integer(BigInt::from(hi));
        power *= &neg_alpha;
    }
    if j % 2 == 1 {
        -acc
    } else {
        acc
    }
}

/// Brown–Colbourn inequalities on the nonzero part of `h`: every value is
/// nonnegative, and positive when `α > 1`. Exact arithmetic.
pub fn brown_colbourn_check(h: &[i64], alphas: &[BigRational]) -> Result<Verdict> {
    let one = BigRational::one();
    if let Some(a) = alphas.iter().find(|a| **a < one) {
        return Err(Error::Precondition(format!("alpha = {a} < 1")));
    }
    let t = IntSequence::from(h).nonzero_part();
    let mut checked = 0usize;
    for alpha in alphas {
        for j in 0..t.len() {
            let value = brown_colbourn_value(&t, alpha, j);
            let ok = if *alpha > one { value.is_positive() } else { !value.is_negative() };
            checked += 1;
            if !ok {
                return Ok(Verdict::fail(
                    "brown_colbourn",
                    json!({"h": t, "alpha": alpha.to_string(), "j": j, "value": value.to_string()}),
                ));
            }
        }
    }
    Ok(Verdict::pass("brown_colbourn").with("checked", checked))
}

/// The three alphas used by the sweeps.
pub fn standard_alphas() -> Vec<BigRational> {
    ["1", "3/2", "2"].iter().map(|s| s.parse().unwrap()).collect()
}

fn require_matroid(c: &SimplicialComplex) -> Result<()> {
    if is_matroid(c) {
        Ok(())
    } else {
        Err(Error::NotMatroid)
    }
}

fn element_bit(c: &SimplicialComplex, v: usize) -> Result<u64> {
    if v == 0 || v > c.ground_size() {
        return Err(Error::ElementOutOfRange { element: v, n: c.ground_size() });
    }
    Ok(1 << (v - 1))
}

/// For a 2-dimensional non-cone matroid and a vertex `v` on a 2-element
/// circuit: `h(link)_i <= h(del)_i` and `Δh(link)_i <= Δh(del)_i` for
/// `i <= 2`. Cones are rejected: `{1,2}` joined with three parallel points
/// breaks the second inequality at `i = 2`.
pub fn link_deletion_inequalities(c: &SimplicialComplex, v: usize) -> Result<Verdict> {
    require_matroid(c)?;
    if c.rank() != 3 {
        return Err(Error::Precondition(format!("rank {} is not 3", c.rank())));
    }
    if is_cone(c) {
        return Err(Error::Precondition("input is a cone".into()));
    }
    let bit = element_bit(c, v)?;
    if !c.proper_circuit_masks().iter().any(|&k| k.count_ones() == 2 && k & bit != 0) {
        return Err(Error::Precondition(format!("vertex {v} lies on no 2-element circuit")));
    }
    let hl = h_vector(&link(c, v)?);
    let hd = h_vector(&deletion(c, v)?.complex);
    let (dl, dd) = (first_difference(&hl), first_difference(&hd));
    for i in 0..=2 {
        if hl.get(i) > hd.get(i) || dl.get(i) > dd.get(i) {
            return Ok(Verdict::fail(
                "link_deletion_inequalities",
                json!({"n": c.ground_size(), "facets": c.facets(), "vertex": v, "i": i, "h_link": hl, "h_deletion": hd}),
            ));
        }
    }
    Ok(Verdict::pass("link_deletion_inequalities")
        .with("h_link", &hl)
        .with("h_deletion", &hd))
}

/// For a non-cone matroid and a vertex `v`, `link(v)` is not a cone.
pub fn link_not_cone(c: &SimplicialComplex, v: usize) -> Result<Verdict> {
    require_matroid(c)?;
    if is_cone(c) {
        return Err(Error::Precondition("input is a cone".into()));
    }
    let bit = element_bit(c, v)?;
    if c.vertex_mask() & bit == 0 {
        return Err(Error::Precondition(format!("{v} is not a vertex")));
    }
    let l = link(c, v)?;
    if is_cone(&l) {
        Ok(Verdict::fail(
            "link_not_cone",
            json!({"n": c.ground_size(), "facets": c.facets(), "vertex": v, "link_coloops": coloops(&l)}),
        ))
    } else {
        Ok(Verdict::pass("link_not_cone"))
    }
}

/// Names for the complete intersections that can arise when every deletion is
/// a cone.
fn ci_shape(degrees: &[i64]) -> String {
    match degrees {
        [2] => "two_points".into(),
        [3] => "triangle_boundary".into(),
        [2, 2] => "four_cycle".into(),
        [4] => "tetrahedron_boundary".into(),
        [2, 3] => "bipyramid_over_triangle".into(),
        [2, 2, 2] => "octahedron_boundary".into(),
        [] => "simplex".into(),
        other => format!("complete_intersection{other:?}"),
    }
}

/// For a non-cone matroid of dimension at most 2 whose single-vertex
/// deletions are all cones, the complex is a complete intersection. Passes
/// vacuously when some deletion is not a cone.
pub fn deletion_all_cones_implies_ci(c: &SimplicialComplex) -> Result<Verdict> {
    require_matroid(c)?;
    if c.dim() > 2 {
        return Err(Error::Precondition(format!("dimension {} > 2", c.dim())));
    }
    if is_cone(c) {
        return Err(Error::Precondition("input is a cone".into()));
    }
    for v in bits(c.vertex_mask()) {
        if !is_cone(&deletion(c, v + 1)?.complex) {
            return Ok(Verdict::pass("deletion_all_cones_implies_ci").with("vacuous_at_vertex", v + 1));
        }
    }
    if is_complete_intersection(c) {
        let degrees = ci_degrees(c)?;
        Ok(Verdict::pass("deletion_all_cones_implies_ci").with("shape", ci_shape(&degrees)))
    } else {
        Ok(Verdict::fail(
            "deletion_all_cones_implies_ci",
            json!({"n": c.ground_size(), "facets": c.facets()}),
        ))
    }
}

/// Largest `p` with `h_0 <= h_1 <= ... <= h_p`.
pub fn nondecreasing_prefix(h: &[i64]) -> usize {
    let mut p = 0;
    while p + 1 < h.len() && h[p + 1] >= h[p] {
        p += 1;
    }
    p
}

/// `h` is differentiable through its nondecreasing prefix.
pub fn differentiable_while_nondecreasing(h: &[i64]) -> bool {
    let p = nondecreasing_prefix(h);
    is_o_sequence(&first_difference(&h[..=p]))
}

/// Assumption (a): a matroid h-vector is differentiable for as long as it is
/// nondecreasing. A probe, not a theorem.
pub fn assumption_a_check(c: &SimplicialComplex) -> Result<Verdict> {
    require_matroid(c)?;
    let h = h_vector(c).nonzero_part();
    let p = nondecreasing_prefix(&h);
    if differentiable_while_nondecreasing(&h) {
        Ok(Verdict::pass("assumption_a").with("prefix", p))
    } else {
        Ok(Verdict::fail(
            "assumption_a",
            json!({"n": c.ground_size(), "facets": c.facets(), "h": h, "prefix": p}),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> BigRational {
        s.parse().unwrap()
    }

    fn complex(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
        let f: Vec<Vec<usize>> = facets.iter().map(|x| x.to_vec()).collect();
        SimplicialComplex::from_facets(n, &f).unwrap()
    }

    fn octahedron() -> SimplicialComplex {
        SimplicialComplex::from_circuits(6, &[vec![1, 2], vec![3, 4], vec![5, 6]]).unwrap()
    }

    fn paired_circuits() -> SimplicialComplex {
        SimplicialComplex::from_circuits(6, &[vec![1, 2, 5, 6], vec![1, 2, 3, 4], vec![3, 4, 5, 6]]).unwrap()
    }

    #[test]
    fn brown_colbourn_values() {
        let h = [1, 2, 3, 4, 2];
        assert_eq!(brown_colbourn_value(&h, &q("1"), 4), q("0"));
        assert_eq!(brown_colbourn_value(&h, &q("2"), 4), q("9"));
        assert!(brown_colbourn_check(&h, &standard_alphas()).unwrap().passed());
        assert!(brown_colbourn_check(&[1, 0, 0], &standard_alphas()).unwrap().passed());
        assert!(brown_colbourn_check(&[1, 3, 1], &[q("1")]).unwrap().failed());
        assert!(brown_colbourn_check(&h, &[q("1/2")]).is_err());
    }

    #[test]
    fn link_deletion_on_parallel_pairs() {
        // circuits {1,2}, {3,4}, {5,6}: parallel classes of size 2, s = 3
        let v = link_deletion_inequalities(&octahedron(), 1).unwrap();
        assert!(v.passed());
        assert_eq!(v.detail["h_link"], json!([1, 2, 1]));
        assert_eq!(v.detail["h_deletion"], json!([1, 2, 1, 0]));
        let tri = SimplicialComplex::from_circuits(5, &[vec![1, 2, 3, 4, 5]]).unwrap();
        assert!(link_deletion_inequalities(&tri, 1).is_err());
        assert!(link_deletion_inequalities(&complex(3, &[&[1, 2]]), 1).is_err());
        let cone = complex(5, &[&[1, 2, 3], &[1, 2, 4], &[1, 2, 5]]);
        assert!(link_deletion_inequalities(&cone, 3).is_err());
        let (hl, hd) = (h_vector(&link(&cone, 3).unwrap()), h_vector(&deletion(&cone, 3).unwrap().complex));
        assert!(first_difference(&hl)[2] > first_difference(&hd)[2]);
    }

    #[test]
    fn links_of_non_cones() {
        let c4 = complex(4, &[&[1, 2], &[2, 3], &[3, 4], &[1, 4]]);
        for v in 1..=4 {
            assert!(link_not_cone(&c4, v).unwrap().passed());
        }
        for v in 1..=6 {
            let l = link(&octahedron(), v).unwrap();
            assert_eq!(l.facet_masks().len(), 4);
            assert!(link_not_cone(&octahedron(), v).unwrap().passed());
        }
        let cone = complex(3, &[&[1, 3], &[2, 3]]);
        assert!(link_not_cone(&cone, 1).is_err());
    }

    #[test]
    fn all_cone_deletions() {
        let v = deletion_all_cones_implies_ci(&octahedron()).unwrap();
        assert_eq!(v.detail["shape"], json!("octahedron_boundary"));
        let c4 = complex(4, &[&[1, 2], &[2, 3], &[3, 4], &[1, 4]]);
        assert_eq!(deletion_all_cones_implies_ci(&c4).unwrap().detail["shape"], json!("four_cycle"));
        assert!(deletion_all_cones_implies_ci(&paired_circuits()).is_err());
    }

    #[test]
    fn assumption_a() {
        let v = assumption_a_check(&paired_circuits()).unwrap();
        assert!(v.passed());
        assert_eq!(v.detail["prefix"], json!(3));
        let simplex = complex(3, &[&[1, 2, 3]]);
        assert!(assumption_a_check(&simplex).unwrap().passed());
        assert_eq!(nondecreasing_prefix(&[1, 7, 9, 12]), 3);
        assert!(!differentiable_while_nondecreasing(&[1, 7, 9, 12]));
    }
}
