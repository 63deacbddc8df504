//! Matroid recognition and the structural decompositions used by the rank-3
//! case analysis.

use std::collections::{BTreeMap, HashSet};

use serde::{Deserialize, Serialize};

use super::complex::{bits, maximal_sets, to_labels, SimplicialComplex, Subset};
use crate::error::{Error, Result};
use crate::sequence::IntSequence;

/// Basis exchange over the facets: for facets `A != B` and `x ∈ A \ B` there
/// is `y ∈ B \ A` with `A - x + y` a facet.
pub fn is_matroid(c: &SimplicialComplex) -> bool {
    if !c.is_pure() {
        return false;
    }
    let facets = c.facet_masks();
    let set: HashSet<Subset> = facets.iter().copied().collect();
    facets.iter().all(|&a| {
        facets.iter().all(|&b| {
            bits(a & !b).all(|x| {
                let without = a & !(1 << x);
                bits(b & !a).any(|y| set.contains(&(without | (1 << y))))
            })
        })
    })
}

/// Restriction purity: `c|W` is pure for every `W ⊆ {1..n}`. Exponential in
/// the number of vertices; an independent check on [`is_matroid`].
pub fn is_matroid_by_restriction(c: &SimplicialComplex) -> bool {
    let vertices = c.vertex_mask();
    let facets = c.facet_masks();
    // iterate submasks of the vertex set
    let mut w = vertices;
    loop {
        let restricted = maximal_sets(facets.iter().map(|&f| f & w).collect());
        let r = restricted[0].count_ones();
        if restricted.iter().any(|f| f.count_ones() != r) {
            return false;
        }
        if w == 0 {
            return true;
        }
        w = (w - 1) & vertices;
    }
}

/// Circuit exchange: for distinct circuits `M, N` and `v ∈ M ∩ N`, the set
/// `(M ∪ N) - v` contains a circuit.
pub fn circuit_exchange_holds(c: &SimplicialComplex) -> bool {
    let circuits = c.circuit_masks();
    for (i, &m) in circuits.iter().enumerate() {
        for &n in &circuits[i + 1..] {
            for v in bits(m & n) {
                let rest = (m | n) & !(1 << v);
                if !circuits.iter().any(|&k| k & rest == k) {
                    return false;
                }
            }
        }
    }
    true
}

/// Elements contained in every facet.
pub fn coloop_mask(c: &SimplicialComplex) -> Subset {
    c.facet_masks().iter().fold(u64::MAX, |acc, f| acc & f)
}

pub fn coloops(c: &SimplicialComplex) -> Vec<usize> {
    to_labels(coloop_mask(c))
}

pub fn is_cone(c: &SimplicialComplex) -> bool {
    coloop_mask(c) != 0
}

/// Disjoint nonempty blocks of 1-based elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GroundPartition {
    pub blocks: Vec<Vec<usize>>,
}

impl GroundPartition {
    fn from_masks(mut masks: Vec<Subset>) -> Self {
        masks.sort_by_key(|m| m.trailing_zeros());
        GroundPartition {
            blocks: masks.into_iter().map(to_labels).collect(),
        }
    }

    /// Block sizes, in block order.
    pub fn sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }
}

/// Vertices grouped by identical circuit membership.
pub fn series_classes(c: &SimplicialComplex) -> GroundPartition {
    let circuits = c.circuit_masks();
    let mut groups: BTreeMap<Vec<bool>, Subset> = BTreeMap::new();
    for v in bits(c.vertex_mask()) {
        let pattern: Vec<bool> = circuits.iter().map(|k| k & (1 << v) != 0).collect();
        *groups.entry(pattern).or_default() |= 1 << v;
    }
    GroundPartition::from_masks(groups.into_values().collect())
}

/// Classes of the equivalence generated by 2-element circuits, over the
/// vertices; vertices on no 2-element circuit are singletons.
pub fn parallel_classes(c: &SimplicialComplex) -> GroundPartition {
    let n = c.ground_size();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let next = p[y];
            p[y] = r;
            y = next;
        }
        r
    }
    for k in c.circuit_masks() {
        if k.count_ones() == 2 {
            let mut it = bits(k);
            let (a, b) = (it.next().unwrap(), it.next().unwrap());
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent[ra.max(rb)] = ra.min(rb);
        }
    }
    let mut groups: BTreeMap<usize, Subset> = BTreeMap::new();
    for v in bits(c.vertex_mask()) {
        let r = find(&mut parent, v);
        *groups.entry(r).or_default() |= 1 << v;
    }
    GroundPartition::from_masks(groups.into_values().collect())
}

/// Non-loop circuits have pairwise disjoint supports. Loops are linear
/// generators and never obstruct.
pub fn is_complete_intersection(c: &SimplicialComplex) -> bool {
    let circuits = c.proper_circuit_masks();
    let mut seen = 0u64;
    for k in circuits {
        if seen & k != 0 {
            return false;
        }
        seen |= k;
    }
    true
}

/// Cardinalities of the non-loop circuits, sorted.
pub fn ci_degrees(c: &SimplicialComplex) -> Result<IntSequence> {
    if !is_complete_intersection(c) {
        return Err(Error::NotCompleteIntersection);
    }
    let mut d: Vec<i64> = c
        .proper_circuit_masks()
        .iter()
        .map(|k| k.count_ones() as i64)
        .collect();
    d.sort_unstable();
    Ok(IntSequence::new(d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complex(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
        let f: Vec<Vec<usize>> = facets.iter().map(|x| x.to_vec()).collect();
        SimplicialComplex::from_facets(n, &f).unwrap()
    }

    fn four_cycle() -> SimplicialComplex {
        complex(4, &[&[1, 2], &[2, 3], &[3, 4], &[1, 4]])
    }

    fn paired_circuits() -> SimplicialComplex {
        SimplicialComplex::from_circuits(6, &[vec![1, 2, 5, 6], vec![1, 2, 3, 4], vec![3, 4, 5, 6]])
            .unwrap()
    }

    fn octahedron() -> SimplicialComplex {
        SimplicialComplex::from_circuits(6, &[vec![1, 2], vec![3, 4], vec![5, 6]]).unwrap()
    }

    #[test]
    fn recognizers_on_examples() {
        for c in [four_cycle(), paired_circuits(), octahedron()] {
            assert!(is_matroid(&c));
            assert!(is_matroid_by_restriction(&c));
            assert!(circuit_exchange_holds(&c));
        }
        // 1 and 3 are parallel and 2 is a coloop
        let path = complex(3, &[&[1, 2], &[2, 3]]);
        assert!(is_matroid(&path));
        assert!(is_matroid_by_restriction(&path));
        assert!(circuit_exchange_holds(&path));
        // restriction to {1,2,3} has facets {1,2},{3}
        let edges = complex(4, &[&[1, 2], &[3, 4]]);
        assert!(!is_matroid(&edges));
        assert!(!is_matroid_by_restriction(&edges));
        assert!(!circuit_exchange_holds(&edges));
        let impure = complex(3, &[&[1, 2], &[3]]);
        assert!(!impure.is_pure());
        assert!(!is_matroid(&impure));
    }

    #[test]
    fn disjoint_circuits_exchange_vacuously() {
        let c = SimplicialComplex::from_circuits(6, &[vec![1, 2, 3], vec![4, 5, 6]]).unwrap();
        assert!(circuit_exchange_holds(&c));
    }

    #[test]
    fn coloop_detection() {
        let cone = complex(5, &[&[1, 2, 5], &[2, 3, 5], &[3, 4, 5], &[1, 4, 5]]);
        assert_eq!(coloops(&cone), vec![5]);
        assert!(coloops(&four_cycle()).is_empty());
        assert!(!is_cone(&paired_circuits()));
    }

    #[test]
    fn series_and_parallel() {
        assert_eq!(series_classes(&four_cycle()).blocks, vec![vec![1, 3], vec![2, 4]]);
        let simplex = complex(3, &[&[1, 2, 3]]);
        assert_eq!(series_classes(&simplex).blocks, vec![vec![1, 2, 3]]);
        assert_eq!(
            series_classes(&octahedron()).blocks,
            vec![vec![1, 2], vec![3, 4], vec![5, 6]]
        );

        let triple = SimplicialComplex::from_circuits(3, &[vec![1, 2], vec![1, 3], vec![2, 3]]).unwrap();
        assert_eq!(parallel_classes(&triple).blocks, vec![vec![1, 2, 3]]);
        assert_eq!(parallel_classes(&paired_circuits()).sizes(), vec![1; 6]);

        // (x1x2) + all squarefree cubics on {3,4,5,6}
        let mut circ = vec![vec![1, 2]];
        for a in 3..=6 {
            for b in a + 1..=6 {
                for c in b + 1..=6 {
                    circ.push(vec![a, b, c]);
                }
            }
        }
        let exc = SimplicialComplex::from_circuits(6, &circ).unwrap();
        assert_eq!(
            parallel_classes(&exc).blocks,
            vec![vec![1, 2], vec![3], vec![4], vec![5], vec![6]]
        );
    }

    #[test]
    fn complete_intersections() {
        assert!(is_complete_intersection(&four_cycle()));
        assert_eq!(ci_degrees(&four_cycle()).unwrap(), IntSequence::from([2, 2]));
        assert!(!is_complete_intersection(&paired_circuits()));
        assert_eq!(ci_degrees(&paired_circuits()), Err(Error::NotCompleteIntersection));
        let simplex = complex(3, &[&[1, 2, 3]]);
        assert!(is_complete_intersection(&simplex));
        assert!(ci_degrees(&simplex).unwrap().is_empty());
    }
}
