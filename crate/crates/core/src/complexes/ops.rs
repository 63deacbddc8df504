//! Deletion, link, cone, join and skeleta. Results live over the same ground
//! set as their input; removed elements become loops.

use super::complex::{bits, maximal_sets, SimplicialComplex, Subset};
use super::matroid::coloop_mask;
use crate::error::{Error, Result};

fn check_element(c: &SimplicialComplex, v: usize) -> Result<Subset> {
    if v == 0 || v > c.ground_size() {
        return Err(Error::ElementOutOfRange {
            element: v,
            n: c.ground_size(),
        });
    }
    Ok(1 << (v - 1))
}

/// Output of [`deletion`]; `lowered_dimension` is set when `v` was a coloop.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Deletion {
    pub complex: SimplicialComplex,
    pub lowered_dimension: bool,
}

/// Restriction to `V - {v}`.
pub fn deletion(c: &SimplicialComplex, v: usize) -> Result<Deletion> {
    let bit = check_element(c, v)?;
    let facets = maximal_sets(c.facet_masks().iter().map(|&f| f & !bit).collect());
    Ok(Deletion {
        complex: SimplicialComplex::from_facet_masks(c.ground_size(), facets),
        lowered_dimension: coloop_mask(c) & bit != 0,
    })
}

/// Faces `G` with `v ∉ G` and `G ∪ {v}` a face.
pub fn link(c: &SimplicialComplex, v: usize) -> Result<SimplicialComplex> {
    let bit = check_element(c, v)?;
    if c.loop_mask() & bit != 0 {
        return Err(Error::LinkOfLoop(v));
    }
    let facets: Vec<Subset> = c
        .facet_masks()
        .iter()
        .filter(|&&f| f & bit != 0)
        .map(|&f| f & !bit)
        .collect();
    Ok(SimplicialComplex::from_facet_masks(c.ground_size(), facets))
}

/// Join; the second complex is relabeled to `n1+1..n1+n2`.
pub fn join(a: &SimplicialComplex, b: &SimplicialComplex) -> Result<SimplicialComplex> {
    let n = a.ground_size() + b.ground_size();
    if n > super::complex::MAX_GROUND {
        return Err(Error::GroundTooLarge(n));
    }
    let shift = a.ground_size();
    let mut facets = Vec::with_capacity(a.facet_masks().len() * b.facet_masks().len());
    for &f in a.facet_masks() {
        for &g in b.facet_masks() {
            facets.push(f | (g << shift));
        }
    }
    Ok(SimplicialComplex::from_facet_masks(n, facets))
}

/// Cone with apex `n + 1`.
pub fn cone(c: &SimplicialComplex) -> Result<SimplicialComplex> {
    let point = SimplicialComplex::from_facet_masks(1, vec![1]);
    join(c, &point)
}

/// Faces of dimension at most `i` (cardinality at most `i + 1`).
pub fn skeleton(c: &SimplicialComplex, i: isize) -> Result<SimplicialComplex> {
    if i < -1 || i > c.dim() {
        return Err(Error::DimensionOutOfRange { dim: i, max: c.dim() });
    }
    let k = (i + 1) as u32;
    let mut out = Vec::new();
    for &f in c.facet_masks() {
        if f.count_ones() <= k {
            out.push(f);
        } else {
            k_subsets_of(f, k, &mut out);
        }
    }
    Ok(SimplicialComplex::from_facet_masks(c.ground_size(), maximal_sets(out)))
}

fn k_subsets_of(set: Subset, k: u32, out: &mut Vec<Subset>) {
    let elems: Vec<usize> = bits(set).collect();
    fn rec(elems: &[usize], k: u32, start: usize, acc: Subset, out: &mut Vec<Subset>) {
        if k == 0 {
            out.push(acc);
            return;
        }
        for j in start..elems.len() {
            if elems.len() - j < k as usize {
                break;
            }
            rec(elems, k - 1, j + 1, acc | (1 << elems[j]), out);
        }
    }
    rec(&elems, k, 0, 0, out);
}

/// Removes coloops: the restriction to the non-coloop elements. The nonzero
/// part of the h-vector is unchanged.
pub fn strip_coloops(c: &SimplicialComplex) -> SimplicialComplex {
    let cl = coloop_mask(c);
    let facets = c.facet_masks().iter().map(|&f| f & !cl).collect();
    SimplicialComplex::from_facet_masks(c.ground_size(), facets)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::matroid::{coloops, is_matroid};
    use crate::complexes::vectors::h_vector;
    use crate::complexes::{ci_degrees, is_complete_intersection};
    use crate::sequence::IntSequence;

    fn complex(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
        let f: Vec<Vec<usize>> = facets.iter().map(|x| x.to_vec()).collect();
        SimplicialComplex::from_facets(n, &f).unwrap()
    }

    fn four_cycle() -> SimplicialComplex {
        complex(4, &[&[1, 2], &[2, 3], &[3, 4], &[1, 4]])
    }

    fn tetra_boundary() -> SimplicialComplex {
        complex(4, &[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4]])
    }

    #[test]
    fn deletion_of_four_cycle() {
        let d = deletion(&four_cycle(), 1).unwrap();
        assert_eq!(d.complex.facets(), vec![vec![2, 3], vec![3, 4]]);
        assert_eq!(d.complex.loops(), vec![1]);
        assert!(!d.lowered_dimension);
        assert!(matches!(
            deletion(&four_cycle(), 5),
            Err(Error::ElementOutOfRange { .. })
        ));
    }

    #[test]
    fn deleting_coloop_is_flagged() {
        let c = cone(&four_cycle()).unwrap();
        let d = deletion(&c, 5).unwrap();
        assert!(d.lowered_dimension);
        assert_eq!(d.complex.dim(), 1);
        // deleting a non-apex keeps the cone
        let d = deletion(&c, 2).unwrap();
        assert!(coloops(&d.complex).contains(&5));
    }

    #[test]
    fn link_of_four_cycle() {
        let l = link(&four_cycle(), 1).unwrap();
        assert_eq!(l.facets(), vec![vec![2], vec![4]]);
        assert_eq!(l.loops(), vec![1, 3]);
        let simplex = complex(3, &[&[1, 2, 3]]);
        assert_eq!(link(&simplex, 2).unwrap().facets(), vec![vec![1, 3]]);
        let with_loop = complex(3, &[&[1, 2]]);
        assert_eq!(link(&with_loop, 3), Err(Error::LinkOfLoop(3)));
    }

    #[test]
    fn link_and_deletion_stay_matroids() {
        let ex = SimplicialComplex::from_circuits(
            6,
            &[vec![1, 2, 5, 6], vec![1, 2, 3, 4], vec![3, 4, 5, 6]],
        )
        .unwrap();
        for v in 1..=6 {
            assert!(is_matroid(&deletion(&ex, v).unwrap().complex));
            assert!(is_matroid(&link(&ex, v).unwrap()));
        }
    }

    #[test]
    fn cone_and_join() {
        let c = cone(&four_cycle()).unwrap();
        assert_eq!(coloops(&c), vec![5]);
        assert_eq!(h_vector(&c).nonzero_part(), h_vector(&four_cycle()).nonzero_part());

        let tri = complex(3, &[&[1, 2], &[1, 3], &[2, 3]]);
        let j = join(&tri, &tri).unwrap();
        assert!(is_complete_intersection(&j));
        assert_eq!(ci_degrees(&j).unwrap(), IntSequence::from([3, 3]));
    }

    #[test]
    fn skeleta() {
        let k4 = skeleton(&tetra_boundary(), 1).unwrap();
        assert_eq!(k4.facet_masks().len(), 6);
        assert!(k4.facet_masks().iter().all(|f| f.count_ones() == 2));
        assert_eq!(skeleton(&four_cycle(), 1).unwrap(), four_cycle());
        let void = skeleton(&four_cycle(), -1).unwrap();
        assert_eq!(void.facet_masks(), &[0]);
        assert!(skeleton(&four_cycle(), 2).is_err());
        assert!(skeleton(&four_cycle(), -2).is_err());
    }

    #[test]
    fn strip_coloops_keeps_nonzero_h() {
        let c = cone(&cone(&four_cycle()).unwrap()).unwrap();
        let s = strip_coloops(&c);
        assert_eq!(s.rank(), 2);
        assert_eq!(h_vector(&s), IntSequence::from([1, 2, 1]));
    }
}
