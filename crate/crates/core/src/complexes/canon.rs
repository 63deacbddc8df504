//! Canonical forms of set systems under ground-set permutations.
//!
//! Elements are first split into ordered, isomorphism-invariant colour
//! classes. The canonical form is the lexicographically least sorted
//! facet-mask list over the relabelings that send each colour class onto its
//! block of positions. Isomorphic inputs get equal forms; the form need not be
//! the least image over all permutations.

use std::collections::BTreeMap;

use super::complex::{bits, SimplicialComplex, Subset};

/// Isomorphism-invariant colour classes, refined until stable. Returns a
/// colour index per element; colours are ordered.
fn refined_colours(n: usize, facets: &[Subset]) -> Vec<usize> {
    let mut pair = vec![vec![0u32; n]; n];
    let mut single = vec![0u32; n];
    for &f in facets {
        for a in bits(f) {
            single[a] += 1;
            for b in bits(f) {
                if a != b {
                    pair[a][b] += 1;
                }
            }
        }
    }
    let mut colour: Vec<usize> = rank_keys(&single.iter().map(|&s| vec![s as u64]).collect::<Vec<_>>());
    loop {
        let keys: Vec<Vec<u64>> = (0..n)
            .map(|a| {
                let mut nb: Vec<u64> = (0..n)
                    .filter(|&b| b != a)
                    .map(|b| ((colour[b] as u64) << 32) | pair[a][b] as u64)
                    .collect();
                nb.sort_unstable();
                let mut key = vec![colour[a] as u64];
                key.extend(nb);
                key
            })
            .collect();
        let next = rank_keys(&keys);
        let classes = |c: &[usize]| c.iter().max().map_or(0, |m| m + 1);
        if classes(&next) == classes(&colour) {
            return next;
        }
        colour = next;
    }
}

fn rank_keys<K: Ord + Clone>(keys: &[K]) -> Vec<usize> {
    let mut sorted: Vec<K> = keys.to_vec();
    sorted.sort();
    sorted.dedup();
    let index: BTreeMap<K, usize> = sorted.into_iter().enumerate().map(|(i, k)| (k, i)).collect();
    keys.iter().map(|k| index[k]).collect()
}

/// Canonical facet list and a relabeling achieving it (`perm[i]` is the new
/// position of element `i`).
pub fn canonical_form(c: &SimplicialComplex) -> (Vec<Subset>, Vec<usize>) {
    let n = c.ground_size();
    let facets = c.facet_masks();
    if n == 0 {
        return (facets.to_vec(), Vec::new());
    }
    let colour = refined_colours(n, facets);
    // positions are handed out colour block by colour block
    let mut block_start = vec![0usize; n + 1];
    for &col in &colour {
        block_start[col + 1] += 1;
    }
    for i in 0..n {
        block_start[i + 1] += block_start[i];
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&e| colour[e]);

    struct State<'a> {
        facets: &'a [Subset],
        colour: &'a [usize],
        block_start: &'a [usize],
        order: &'a [usize],
        perm: Vec<usize>,
        used: Vec<bool>,
        best: Option<(Vec<Subset>, Vec<usize>)>,
        scratch: Vec<Subset>,
    }

    fn rec(s: &mut State<'_>, depth: usize) {
        if depth == s.order.len() {
            s.scratch.clear();
            for &f in s.facets {
                s.scratch.push(bits(f).fold(0u64, |acc, i| acc | (1 << s.perm[i])));
            }
            s.scratch.sort_unstable();
            let better = match &s.best {
                None => true,
                Some((b, _)) => s.scratch < *b,
            };
            if better {
                s.best = Some((s.scratch.clone(), s.perm.clone()));
            }
            return;
        }
        let e = s.order[depth];
        let col = s.colour[e];
        for p in s.block_start[col]..s.block_start[col + 1] {
            if !s.used[p] {
                s.used[p] = true;
                s.perm[e] = p;
                rec(s, depth + 1);
                s.used[p] = false;
            }
        }
    }

    let mut state = State {
        facets,
        colour: &colour,
        block_start: &block_start,
        order: &order,
        perm: vec![0; n],
        used: vec![false; n],
        best: None,
        scratch: Vec::with_capacity(facets.len()),
    };
    rec(&mut state, 0);
    state.best.expect("at least one relabeling")
}

/// The canonical representative of the isomorphism class of `c`.
pub fn canonical_complex(c: &SimplicialComplex) -> SimplicialComplex {
    let (_, perm) = canonical_form(c);
    c.relabeled(&perm)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for p in all_perms(n - 1) {
            for pos in 0..n {
                let mut q: Vec<usize> = p.clone();
                q.insert(pos, n - 1);
                out.push(q);
            }
        }
        out
    }

    fn brute_isomorphic(a: &SimplicialComplex, b: &SimplicialComplex) -> bool {
        a.ground_size() == b.ground_size()
            && all_perms(a.ground_size()).iter().any(|p| a.relabeled(p) == *b)
    }

    #[test]
    fn forms_separate_exactly_the_isomorphism_classes() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let mut pool = Vec::new();
        for _ in 0..120 {
            let n = rng.gen_range(1..=5);
            let k = rng.gen_range(1..=4);
            let masks: Vec<Subset> = (0..k).map(|_| rng.gen_range(0..(1u64 << n))).collect();
            let c = SimplicialComplex::from_facet_masks(n, masks);
            let (form, perm) = canonical_form(&c);
            assert_eq!(c.relabeled(&perm).facet_masks(), form.as_slice());
            // a random relabeling has the same form
            let mut p: Vec<usize> = (0..n).collect();
            for i in (1..n).rev() {
                p.swap(i, rng.gen_range(0..=i));
            }
            assert_eq!(canonical_form(&c.relabeled(&p)).0, form);
            pool.push((c, form));
        }
        for (a, fa) in &pool {
            for (b, fb) in &pool {
                if a.ground_size() == b.ground_size() {
                    assert_eq!(fa == fb, brute_isomorphic(a, b));
                }
            }
        }
    }

    #[test]
    fn invariant_under_relabeling() {
        let c = SimplicialComplex::from_facets(5, &[vec![1, 2, 3], vec![1, 4], vec![4, 5]]).unwrap();
        let d = c.relabeled(&[4, 2, 0, 3, 1]);
        assert_eq!(canonical_form(&c).0, canonical_form(&d).0);
        assert_eq!(canonical_complex(&c), canonical_complex(&d));
    }
}
