use std::collections::{BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A subset of the ground set `{1..n}`; bit `i` stands for element `i + 1`.
pub type Subset = u64;

pub const MAX_GROUND: usize = 64;

/// Iterates the 0-based bit positions of `mask` in increasing order.
pub fn bits(mask: Subset) -> impl Iterator<Item = usize> {
    let mut m = mask;
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}

/// 1-based element labels of `mask`.
pub fn to_labels(mask: Subset) -> Vec<usize> {
    bits(mask).map(|i| i + 1).collect()
}

pub fn ground_mask(n: usize) -> Subset {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Bitmask of 1-based `labels`, validated against `n`.
pub fn mask_of(n: usize, labels: &[usize]) -> Result<Subset> {
    let mut m = 0;
    for &x in labels {
        if x == 0 || x > n {
            return Err(Error::ElementOutOfRange { element: x, n });
        }
        m |= 1u64 << (x - 1);
    }
    Ok(m)
}

/// Keeps the inclusion-maximal members, sorted and deduplicated.
pub fn maximal_sets(mut sets: Vec<Subset>) -> Vec<Subset> {
    sets.sort_unstable_by_key(|s| std::cmp::Reverse(s.count_ones()));
    sets.dedup();
    let mut kept: Vec<Subset> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|&k| k & s == s) {
            kept.push(s);
        }
    }
    kept.sort_unstable();
    kept
}

/// Keeps the inclusion-minimal members, sorted and deduplicated.
pub fn minimal_sets(mut sets: Vec<Subset>) -> Vec<Subset> {
    sets.sort_unstable_by_key(|s| s.count_ones());
    sets.dedup();
    let mut kept: Vec<Subset> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|&k| k & s == k) {
            kept.push(s);
        }
    }
    kept.sort_unstable();
    kept
}

/// A simplicial complex on the ground set `{1..n}`, stored by its facets.
///
/// Ground elements that lie in no facet are loops. The complex `{∅}` is the
/// single empty facet.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<Subset>,
}

impl SimplicialComplex {
    pub fn from_facets(n: usize, facets: &[Vec<usize>]) -> Result<Self> {
        if n > MAX_GROUND {
            return Err(Error::GroundTooLarge(n));
        }
        if facets.is_empty() {
            return Err(Error::EmptyFamily);
        }
        let masks = facets
            .iter()
            .map(|f| mask_of(n, f))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_facet_masks(n, masks))
    }

    /// Builds from bitmasks; non-maximal members are dropped.
    ///
    /// Panics if `masks` is empty or a mask leaves the ground set.
    pub fn from_facet_masks(n: usize, masks: Vec<Subset>) -> Self {
        assert!(n <= MAX_GROUND, "ground set too large");
        assert!(!masks.is_empty(), "empty complex family");
        assert!(
            masks.iter().all(|&m| m & !ground_mask(n) == 0),
            "facet outside ground set"
        );
        SimplicialComplex {
            n,
            facets: maximal_sets(masks),
        }
    }

    /// The complex whose faces are the subsets of `{1..n}` containing no
    /// member of `circuits`.
    pub fn from_circuits(n: usize, circuits: &[Vec<usize>]) -> Result<Self> {
        if n > MAX_GROUND {
            return Err(Error::GroundTooLarge(n));
        }
        let masks = circuits
            .iter()
            .map(|c| mask_of(n, c))
            .collect::<Result<Vec<_>>>()?;
        for (i, &a) in masks.iter().enumerate() {
            for (j, &b) in masks.iter().enumerate() {
                if i != j && a & b == a {
                    return Err(Error::NotAntichain(to_labels(b), to_labels(a)));
                }
            }
        }
        Ok(Self::from_circuit_masks(n, &masks))
    }

    /// Inverse of [`circuit_masks`](Self::circuit_masks). The input is assumed
    /// to be an antichain.
    pub fn from_circuit_masks(n: usize, circuits: &[Subset]) -> Self {
        let loops = circuits
            .iter()
            .filter(|c| c.count_ones() == 1)
            .fold(0, |acc, c| acc | c);
        let mut facets = Vec::new();
        // depth-first growth of independent sets; a set is recorded when no
        // further element (of any index) can be added
        let mut stack = vec![(0u64, 0usize)];
        while let Some((set, next)) = stack.pop() {
            let mut extended = false;
            for x in 0..n {
                let bit = 1u64 << x;
                if set & bit != 0 || loops & bit != 0 {
                    continue;
                }
                let grown = set | bit;
                if circuits.iter().any(|&c| c & grown == c) {
                    continue;
                }
                extended = true;
                if x >= next {
                    stack.push((grown, x + 1));
                }
            }
            if !extended {
                facets.push(set);
            }
        }
        SimplicialComplex::from_facet_masks(n, facets)
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn facet_masks(&self) -> &[Subset] {
        &self.facets
    }

    /// Facets as sorted lists of 1-based labels.
    pub fn facets(&self) -> Vec<Vec<usize>> {
        self.facets.iter().map(|&f| to_labels(f)).collect()
    }

    pub fn vertex_mask(&self) -> Subset {
        self.facets.iter().fold(0, |acc, f| acc | f)
    }

    pub fn loop_mask(&self) -> Subset {
        ground_mask(self.n) & !self.vertex_mask()
    }

    pub fn loops(&self) -> Vec<usize> {
        to_labels(self.loop_mask())
    }

    pub fn is_vertex(&self, v: usize) -> bool {
        v >= 1 && v <= self.n && self.vertex_mask() & (1 << (v - 1)) != 0
    }

    /// Cardinality of the largest facet (`dim + 1`).
    pub fn rank(&self) -> usize {
        self.facets.iter().map(|f| f.count_ones() as usize).max().unwrap_or(0)
    }

    pub fn dim(&self) -> isize {
        self.rank() as isize - 1
    }

    pub fn is_face(&self, s: Subset) -> bool {
        self.facets.iter().any(|&f| f & s == s)
    }

    pub fn is_pure(&self) -> bool {
        let r = self.facets[0].count_ones();
        self.facets.iter().all(|f| f.count_ones() == r)
    }

    /// All faces, including the empty face.
    pub fn faces(&self) -> BTreeSet<Subset> {
        let mut out = HashSet::new();
        for &f in &self.facets {
            // enumerate submasks of f
            let mut s = f;
            loop {
                out.insert(s);
                if s == 0 {
                    break;
                }
                s = (s - 1) & f;
            }
        }
        out.into_iter().collect()
    }

    /// Minimal non-faces within `{1..n}`, as bitmasks. Loops appear as
    /// singletons.
    pub fn circuit_masks(&self) -> Vec<Subset> {
        let faces = self.faces();
        let face_set: HashSet<Subset> = faces.iter().copied().collect();
        let ground = ground_mask(self.n);
        let mut out = BTreeSet::new();
        for &f in &faces {
            for x in bits(ground & !f) {
                let s = f | (1 << x);
                if face_set.contains(&s) {
                    continue;
                }
                if bits(s).all(|y| face_set.contains(&(s & !(1 << y)))) {
                    out.insert(s);
                }
            }
        }
        out.into_iter().collect()
    }

    pub fn circuits(&self) -> Vec<Vec<usize>> {
        self.circuit_masks().into_iter().map(to_labels).collect()
    }

    /// Non-loop circuits.
    pub fn proper_circuit_masks(&self) -> Vec<Subset> {
        self.circuit_masks()
            .into_iter()
            .filter(|c| c.count_ones() > 1)
            .collect()
    }

    /// Smallest cardinality of a circuit that is not a loop.
    pub fn init_degree(&self) -> Option<usize> {
        self.proper_circuit_masks()
            .iter()
            .map(|c| c.count_ones() as usize)
            .min()
    }

    /// Same complex over a new ground size `m >= n`; extra elements are loops.
    pub fn with_ground_size(&self, m: usize) -> Self {
        assert!(m >= self.n && m <= MAX_GROUND);
        SimplicialComplex {
            n: m,
            facets: self.facets.clone(),
        }
    }

    /// Applies `perm` (0-based: element `i` goes to `perm[i]`).
    pub fn relabeled(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n);
        let facets = self
            .facets
            .iter()
            .map(|&f| bits(f).fold(0u64, |acc, i| acc | (1 << perm[i])))
            .collect();
        SimplicialComplex::from_facet_masks(self.n, facets)
    }
}

/// JSON-friendly facet description.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacetListing {
    pub n: usize,
    pub facets: Vec<Vec<usize>>,
}

impl From<&SimplicialComplex> for FacetListing {
    fn from(c: &SimplicialComplex) -> Self {
        FacetListing {
            n: c.ground_size(),
            facets: c.facets(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_circuits(c: &SimplicialComplex) -> Vec<Subset> {
        let n = c.ground_size();
        let nonfaces: Vec<Subset> = (0..(1u64 << n)).filter(|&s| !c.is_face(s)).collect();
        minimal_sets(nonfaces)
    }

    fn brute_from_circuits(n: usize, circuits: &[Subset]) -> Vec<Subset> {
        let faces: Vec<Subset> = (0..(1u64 << n))
            .filter(|&s| !circuits.iter().any(|&c| c & s == c))
            .collect();
        maximal_sets(faces)
    }

    fn four_cycle() -> SimplicialComplex {
        SimplicialComplex::from_facets(4, &[vec![1, 2], vec![2, 3], vec![3, 4], vec![1, 4]]).unwrap()
    }

    #[test]
    fn facets_are_maximal() {
        let c = SimplicialComplex::from_facets(3, &[vec![1, 2], vec![1, 3], vec![2, 3]]).unwrap();
        assert_eq!(c.facet_masks().len(), 3);
        assert!(c.loops().is_empty());

        let c = SimplicialComplex::from_facets(4, &[vec![1, 2], vec![2], vec![3, 4]]).unwrap();
        assert_eq!(c.facets(), vec![vec![1, 2], vec![3, 4]]);
        assert!(c.loops().is_empty());

        let c = SimplicialComplex::from_facets(5, &[vec![1, 2], vec![3, 4]]).unwrap();
        assert_eq!(c.loops(), vec![5]);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(SimplicialComplex::from_facets(3, &[]), Err(Error::EmptyFamily));
        assert!(matches!(
            SimplicialComplex::from_facets(3, &[vec![4]]),
            Err(Error::ElementOutOfRange { element: 4, n: 3 })
        ));
        assert!(matches!(
            SimplicialComplex::from_circuits(3, &[vec![1, 2], vec![1, 2, 3]]),
            Err(Error::NotAntichain(..))
        ));
    }

    #[test]
    fn four_cycle_circuits() {
        let c = four_cycle();
        assert_eq!(c.circuits(), vec![vec![1, 3], vec![2, 4]]);
        assert_eq!(c.circuit_masks(), brute_circuits(&c));
    }

    #[test]
    fn simplex_has_no_circuits() {
        let c = SimplicialComplex::from_facets(3, &[vec![1, 2, 3]]).unwrap();
        assert!(c.circuits().is_empty());
        let d = SimplicialComplex::from_circuits(3, &[]).unwrap();
        assert_eq!(c, d);
    }

    #[test]
    fn from_circuits_matches_brute_force() {
        let c = SimplicialComplex::from_circuits(4, &[vec![1, 3], vec![2, 4]]).unwrap();
        assert_eq!(c, four_cycle());

        let circuits = vec![vec![1, 2, 5, 6], vec![1, 2, 3, 4], vec![3, 4, 5, 6]];
        let c = SimplicialComplex::from_circuits(6, &circuits).unwrap();
        let masks: Vec<Subset> = circuits.iter().map(|x| mask_of(6, x).unwrap()).collect();
        assert_eq!(c.facet_masks(), brute_from_circuits(6, &masks).as_slice());
        assert_eq!(c.facet_masks().len(), 12);
        assert!(c.facet_masks().iter().all(|f| f.count_ones() == 4));
        assert_eq!(c.circuits(), {
            let mut v = circuits.clone();
            v.sort_by_key(|x| mask_of(6, x).unwrap());
            v
        });
    }

    #[test]
    fn loops_become_singleton_circuits() {
        let c = SimplicialComplex::from_facets(3, &[vec![1, 2]]).unwrap();
        assert_eq!(c.circuits(), vec![vec![3]]);
        let back = SimplicialComplex::from_circuits(3, &[vec![3]]).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn empty_face_complex() {
        let c = SimplicialComplex::from_facet_masks(2, vec![0]);
        assert_eq!(c.dim(), -1);
        assert_eq!(c.circuits(), vec![vec![1], vec![2]]);
        assert_eq!(SimplicialComplex::from_circuits(2, &[vec![1], vec![2]]).unwrap(), c);
    }

    #[test]
    fn circuits_round_trip_random() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let n = rng.gen_range(1..=7);
            let k = rng.gen_range(1..=5);
            let masks: Vec<Subset> = (0..k).map(|_| rng.gen_range(0..(1u64 << n))).collect();
            let c = SimplicialComplex::from_facet_masks(n, masks);
            let circ = c.circuit_masks();
            assert_eq!(circ, brute_circuits(&c));
            assert_eq!(SimplicialComplex::from_circuit_masks(n, &circ), c);
        }
    }
}
