//! Exhaustive enumeration of loopless matroids on `{1..n}`.
//!
//! Every loopless matroid `M` on `n` elements either has `n` as a coloop
//! (`M = M\n ⊕ coloop`) or is a single-element extension of the loopless
//! matroid `M\n` of the same rank. Extensions are found by backtracking over
//! the new bases `T + n`, deciding candidate sets one at a time and pruning as
//! soon as some exchange requirement can no longer be met. The labeled mode
//! produces each matroid exactly once because `M ↦ M\n` is a function; the
//! up-to-isomorphism mode keeps one canonical representative per class at
//! every level.

use std::collections::BTreeSet;

use rayon::prelude::*;

use super::canon::canonical_form;
use super::complex::{bits, SimplicialComplex, Subset};
use crate::error::{Error, Result};

pub const DEFAULT_MAX_N: usize = 8;
/// Status tables are indexed by subset; this bounds their size.
pub const HARD_MAX_N: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EnumerationMode {
    Labeled,
    UpToIsomorphism,
}

#[derive(Clone, Copy, Debug)]
pub struct EnumerationConfig {
    pub max_n: usize,
}

impl Default for EnumerationConfig {
    fn default() -> Self {
        EnumerationConfig { max_n: DEFAULT_MAX_N }
    }
}

const NO: u8 = 0;
const YES: u8 = 1;
const OPEN: u8 = 2;

struct Extender {
    status: Vec<u8>,
    included: Vec<Subset>,
    candidates: Vec<Subset>,
    out: Vec<Vec<Subset>>,
    added: usize,
}

impl Extender {
    /// Is the requirement for `(b1, b2, x)` still satisfiable?
    fn satisfiable(&self, b1: Subset, b2: Subset, x: usize) -> bool {
        let base = b1 & !(1 << x);
        bits(b2 & !b1).any(|y| self.status[(base | (1 << y)) as usize] != NO)
    }

    fn check_included(&self, s: Subset) -> bool {
        self.included.iter().all(|&b| {
            bits(s & !b).all(|x| self.satisfiable(s, b, x))
                && bits(b & !s).all(|x| self.satisfiable(b, s, x))
        })
    }

    fn check_excluded(&self, s: Subset) -> bool {
        for &b1 in &self.included {
            let diff = b1 & !s;
            if diff.count_ones() != 1 {
                continue;
            }
            let x = diff.trailing_zeros() as usize;
            let y_bit = s & !b1;
            for &b2 in &self.included {
                if b2 & y_bit != 0 && b2 & diff == 0 && !self.satisfiable(b1, b2, x) {
                    return false;
                }
            }
        }
        true
    }

    fn run(&mut self, i: usize) {
        if i == self.candidates.len() {
            if self.added > 0 {
                let mut f = self.included.clone();
                f.sort_unstable();
                self.out.push(f);
            }
            return;
        }
        let s = self.candidates[i];
        self.status[s as usize] = YES;
        self.included.push(s);
        self.added += 1;
        if self.check_included(s) {
            self.run(i + 1);
        }
        self.added -= 1;
        self.included.pop();
        self.status[s as usize] = NO;
        if self.check_excluded(s) {
            self.run(i + 1);
        }
        self.status[s as usize] = OPEN;
    }
}

/// All loopless matroids on `m + 1` elements whose deletion of the last
/// element is `parent` (a loopless matroid on `m` elements), with the last
/// element not a coloop.
pub fn non_coloop_extensions(parent: &SimplicialComplex) -> Vec<SimplicialComplex> {
    let m = parent.ground_size();
    let n = m + 1;
    assert!(n <= HARD_MAX_N);
    let k = parent.rank();
    if k == 0 {
        return Vec::new();
    }
    let new_bit = 1u64 << m;
    let mut status = vec![NO; 1 << n];
    for &b in parent.facet_masks() {
        status[b as usize] = YES;
    }
    // T + new for every independent (k-1)-set T of the parent
    let mut candidates = Vec::new();
    for t in 0..(1u64 << m) {
        if t.count_ones() as usize == k - 1 && parent.facet_masks().iter().any(|&b| b & t == t) {
            candidates.push(t | new_bit);
            status[(t | new_bit) as usize] = OPEN;
        }
    }
    let mut ext = Extender {
        status,
        included: parent.facet_masks().to_vec(),
        candidates,
        out: Vec::new(),
        added: 0,
    };
    ext.run(0);
    ext.out
        .into_iter()
        .map(|f| SimplicialComplex::from_facet_masks(n, f))
        .collect()
}

/// `parent ⊕ coloop` on `m + 1` elements.
pub fn coloop_extension(parent: &SimplicialComplex) -> SimplicialComplex {
    let m = parent.ground_size();
    let bit = 1u64 << m;
    SimplicialComplex::from_facet_masks(m + 1, parent.facet_masks().iter().map(|&b| b | bit).collect())
}

fn extensions_of(level_same: &[SimplicialComplex], level_lower: &[SimplicialComplex]) -> Vec<SimplicialComplex> {
    let mut out: Vec<SimplicialComplex> = level_same
        .par_iter()
        .map(non_coloop_extensions)
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    out.extend(level_lower.iter().map(coloop_extension));
    out
}

fn dedup_isomorphic(items: Vec<SimplicialComplex>) -> Vec<SimplicialComplex> {
    let n = items.first().map_or(0, |c| c.ground_size());
    let forms: BTreeSet<Vec<Subset>> = items
        .par_iter()
        .map(|c| canonical_form(c).0)
        .collect::<Vec<_>>()
        .into_iter()
        .collect();
    forms
        .into_iter()
        .map(|f| SimplicialComplex::from_facet_masks(n, f))
        .collect()
}

/// Loopless matroids of rank `rank` on `{1..n}`.
///
/// Labeled mode yields each labeled matroid exactly once; isomorphism mode
/// yields canonical representatives sorted by canonical form. The output
/// order is deterministic.
pub fn enumerate_matroids(n: usize, rank: usize, mode: EnumerationMode) -> Result<Vec<SimplicialComplex>> {
    enumerate_matroids_with(n, rank, mode, &EnumerationConfig::default())
}

pub fn enumerate_matroids_with(
    n: usize,
    rank: usize,
    mode: EnumerationMode,
    config: &EnumerationConfig,
) -> Result<Vec<SimplicialComplex>> {
    let cap = config.max_n.min(HARD_MAX_N);
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    if rank > n {
        return Err(Error::RankTooLarge { rank, n });
    }
    // levels[j] = matroids of rank j on the current ground size
    let mut levels: Vec<Vec<SimplicialComplex>> = vec![Vec::new(); rank + 1];
    levels[0].push(SimplicialComplex::from_facet_masks(0, vec![0]));
    for m in 1..=n {
        let mut next = vec![Vec::new(); rank + 1];
        for j in 0..=rank.min(m) {
            let lower: &[SimplicialComplex] = if j > 0 { &levels[j - 1] } else { &[] };
            let mut ext = extensions_of(&levels[j], lower);
            if mode == EnumerationMode::UpToIsomorphism {
                ext = dedup_isomorphic(ext);
            }
            next[j] = ext;
        }
        levels = next;
    }
    Ok(std::mem::take(&mut levels[rank]))
}

/// Loopless matroids of every rank `<= max_rank` on `{1..n}`.
pub fn enumerate_up_to_rank(
    n: usize,
    max_rank: usize,
    mode: EnumerationMode,
    config: &EnumerationConfig,
) -> Result<Vec<SimplicialComplex>> {
    let mut out = Vec::new();
    for k in 0..=max_rank.min(n) {
        out.extend(enumerate_matroids_with(n, k, mode, config)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::matroid::{is_matroid, is_matroid_by_restriction};

    /// Every loopless pure family of k-subsets on n elements accepted by the
    /// restriction-purity oracle.
    fn brute_force(n: usize, k: usize) -> BTreeSet<Vec<Subset>> {
        let ksets: Vec<Subset> = (0..(1u64 << n)).filter(|s| s.count_ones() as usize == k).collect();
        let full = (1u64 << n) - 1;
        let mut out = BTreeSet::new();
        for fam in 1u64..(1u64 << ksets.len()) {
            let facets: Vec<Subset> = bits(fam).map(|i| ksets[i]).collect();
            if facets.iter().fold(0, |a, f| a | f) != full {
                continue;
            }
            let c = SimplicialComplex::from_facet_masks(n, facets.clone());
            if is_matroid_by_restriction(&c) {
                out.insert(c.facet_masks().to_vec());
            }
        }
        out
    }

    #[test]
    fn labeled_matches_brute_force() {
        for n in 1..=5 {
            for k in 1..=n {
                let got: BTreeSet<Vec<Subset>> = enumerate_matroids(n, k, EnumerationMode::Labeled)
                    .unwrap()
                    .iter()
                    .map(|c| c.facet_masks().to_vec())
                    .collect();
                let count = enumerate_matroids(n, k, EnumerationMode::Labeled).unwrap().len();
                assert_eq!(count, got.len(), "duplicates at n={n} k={k}");
                assert_eq!(got, brute_force(n, k), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn small_cases() {
        let tri = enumerate_matroids(3, 2, EnumerationMode::Labeled).unwrap();
        assert_eq!(tri.len(), 4);
        let full = enumerate_matroids(4, 4, EnumerationMode::Labeled).unwrap();
        assert_eq!(full.len(), 1);
        assert_eq!(full[0].facet_masks(), &[0b1111]);
        assert!(enumerate_matroids(3, 0, EnumerationMode::Labeled).unwrap().is_empty());
        assert_eq!(enumerate_matroids(0, 0, EnumerationMode::Labeled).unwrap().len(), 1);
    }

    #[test]
    fn caps_and_errors() {
        assert!(matches!(
            enumerate_matroids(9, 3, EnumerationMode::Labeled),
            Err(Error::CapExceeded { n: 9, cap: 8 })
        ));
        assert!(matches!(
            enumerate_matroids(3, 4, EnumerationMode::Labeled),
            Err(Error::RankTooLarge { .. })
        ));
    }

    #[test]
    fn isomorphism_mode_matches_labeled_dedup() {
        for n in 1..=6 {
            for k in 1..=n.min(3) {
                let labeled = enumerate_matroids(n, k, EnumerationMode::Labeled).unwrap();
                assert!(labeled.iter().all(is_matroid));
                let forms: BTreeSet<Vec<Subset>> = labeled.iter().map(|c| canonical_form(c).0).collect();
                let iso = enumerate_matroids(n, k, EnumerationMode::UpToIsomorphism).unwrap();
                let iso_forms: Vec<Vec<Subset>> = iso.iter().map(|c| c.facet_masks().to_vec()).collect();
                assert_eq!(iso_forms, forms.into_iter().collect::<Vec<_>>(), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn isomorphism_mode_matches_brute_force_classes() {
        let n = 4;
        for k in 1..=4 {
            let brute: BTreeSet<Vec<Subset>> = brute_force(n, k)
                .into_iter()
                .map(|f| canonical_form(&SimplicialComplex::from_facet_masks(n, f)).0)
                .collect();
            let iso = enumerate_matroids(n, k, EnumerationMode::UpToIsomorphism).unwrap();
            assert_eq!(iso.len(), brute.len());
        }
    }
}
