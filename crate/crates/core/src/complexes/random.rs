//! Seeded random complexes for recognizer cross-checks.

use rand::Rng;

use super::complex::{SimplicialComplex, Subset};

/// A complex on `n` elements generated by 1..=`max_facets` random subsets.
pub fn random_complex<R: Rng>(rng: &mut R, n: usize, max_facets: usize) -> SimplicialComplex {
    let k = rng.gen_range(1..=max_facets.max(1));
    let masks: Vec<Subset> = (0..k).map(|_| rng.gen_range(0..(1u64 << n))).collect();
    SimplicialComplex::from_facet_masks(n, masks)
}

/// A pure complex: random `size`-subsets of `{1..n}`.
pub fn random_pure_complex<R: Rng>(rng: &mut R, n: usize, size: usize, max_facets: usize) -> SimplicialComplex {
    let ksets: Vec<Subset> = (0..(1u64 << n))
        .filter(|s| s.count_ones() as usize == size)
        .collect();
    let k = rng.gen_range(1..=max_facets.max(1));
    let masks: Vec<Subset> = (0..k).map(|_| ksets[rng.gen_range(0..ksets.len())]).collect();
    SimplicialComplex::from_facet_masks(n, masks)
}
