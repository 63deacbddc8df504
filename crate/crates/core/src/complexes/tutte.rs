//! `T(x, 1)` by deletion–contraction.

use std::collections::HashMap;

use super::complex::{SimplicialComplex, Subset};
use super::matroid::is_matroid;
use crate::error::{Error, Result};
use crate::sequence::IntSequence;

type Memo = HashMap<(Subset, Vec<Subset>), Vec<i64>>;

fn add_into(acc: &mut Vec<i64>, other: &[i64], shift: usize) {
    if acc.len() < other.len() + shift {
        acc.resize(other.len() + shift, 0);
    }
    for (i, &c) in other.iter().enumerate() {
        acc[i + shift] += c;
    }
}

/// Coefficients of `T(x,1)` by power of `x`.
fn tutte_x1(bases: Vec<Subset>, elems: Subset, memo: &mut Memo) -> Vec<i64> {
    if elems == 0 {
        return vec![1];
    }
    let key = (elems, bases);
    if let Some(p) = memo.get(&key) {
        return p.clone();
    }
    let (elems, bases) = (key.0, &key.1);
    let e = 1u64 << elems.trailing_zeros();
    let rest = elems & !e;
    let with: Vec<Subset> = bases.iter().filter(|&&b| b & e != 0).map(|&b| b & !e).collect();
    let without: Vec<Subset> = bases.iter().copied().filter(|&b| b & e == 0).collect();
    let mut out = Vec::new();
    if with.is_empty() {
        // loop: T(M) = y T(M\e), y = 1
        add_into(&mut out, &tutte_x1(without, rest, memo), 0);
    } else if without.is_empty() {
        // coloop: T(M) = x T(M/e)
        add_into(&mut out, &tutte_x1(with, rest, memo), 1);
    } else {
        add_into(&mut out, &tutte_x1(without, rest, memo), 0);
        add_into(&mut out, &tutte_x1(with, rest, memo), 0);
    }
    memo.insert(key, out.clone());
    out
}

/// `(h_0, ..., h_d)` read off `T(x,1) = h_0 x^d + ... + h_d`, `d` the rank.
pub fn tutte_h(c: &SimplicialComplex) -> Result<IntSequence> {
    if !is_matroid(c) {
        return Err(Error::NotMatroid);
    }
    let d = c.rank();
    let ground = super::complex::ground_mask(c.ground_size());
    let poly = tutte_x1(c.facet_masks().to_vec(), ground, &mut Memo::new());
    Ok((0..=d).map(|i| poly.get(d - i).copied().unwrap_or(0)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::h_vector;

    /// Deletion–contraction written out on explicit small matroids.
    #[test]
    fn four_cycle_by_hand() {
        // U_{2,2} ⊕ ... : the 4-cycle is the parallel-pair sum {1,3} ⊕ {2,4};
        // T = (x + 1)^2 over the two parallel pairs evaluated at y = 1:
        // each pair U_{1,2} has T = x + y -> x + 1, product x^2 + 2x + 1.
        let c = SimplicialComplex::from_facets(4, &[vec![1, 2], vec![2, 3], vec![3, 4], vec![1, 4]])
            .unwrap();
        assert_eq!(tutte_h(&c).unwrap(), IntSequence::from([1, 2, 1]));
    }

    #[test]
    fn free_matroid_pads_with_zeros() {
        let c = SimplicialComplex::from_facets(3, &[vec![1, 2, 3]]).unwrap();
        assert_eq!(tutte_h(&c).unwrap(), IntSequence::from([1, 0, 0, 0]));
        assert_eq!(h_vector(&c), IntSequence::from([1, 0, 0, 0]));
    }

    #[test]
    fn paired_circuits_and_non_matroid() {
        let ex = SimplicialComplex::from_circuits(
            6,
            &[vec![1, 2, 5, 6], vec![1, 2, 3, 4], vec![3, 4, 5, 6]],
        )
        .unwrap();
        assert_eq!(tutte_h(&ex).unwrap(), IntSequence::from([1, 2, 3, 4, 2]));
        let edges = SimplicialComplex::from_facets(4, &[vec![1, 2], vec![3, 4]]).unwrap();
        assert_eq!(tutte_h(&edges), Err(Error::NotMatroid));
    }

    #[test]
    fn loops_do_not_matter() {
        let c = SimplicialComplex::from_facets(5, &[vec![1, 2], vec![2, 3], vec![1, 3]]).unwrap();
        assert_eq!(tutte_h(&c).unwrap(), IntSequence::from([1, 1, 1]));
    }
}
