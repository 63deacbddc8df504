//! Exhaustive search for a pure order ideal with a prescribed rank vector.
//!
//! A pure order ideal with rank vector `h = (1, r, ..., h_e)` is the closure
//! of its `h_e` maximal monomials, all of degree `e`, and uses exactly `r`
//! variables. The search picks maximal monomials in increasing index order
//! (lex-descending monomials) and tracks, per degree, the union of their
//! divisors as a bitset. Branches die when a degree overshoots its target or
//! can no longer reach it, and when the chosen index set is not the least in
//! its orbit under permutations of the variables (an orderly rule: prefixes of
//! orbit-least sets are orbit-least, so no class is lost).

use std::collections::HashMap;

use super::monomial::{monomials_of_degree, Monomial, Witness};

/// Default node budget for a single search.
pub const DEFAULT_CAP_NODES: u64 = 20_000_000;

/// Full symmetric group on the variables up to this many variables;
/// transpositions only above it.
const FULL_GROUP_MAX_R: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(Witness),
    Exhausted,
    CapHit,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchReport {
    pub outcome: SearchOutcome,
    pub nodes: u64,
}

struct Layout {
    // per degree 1..e-1: (word offset, word count)
    spans: Vec<(usize, usize)>,
    words: usize,
}

struct Searcher<'a> {
    target: &'a [i64],
    take: usize,
    layout: Layout,
    div: Vec<u64>,
    suffix: Vec<u64>,
    max_div: Vec<u32>,
    perms: Vec<Vec<u32>>,
    n: usize,
    chosen: Vec<u32>,
    levels: Vec<Vec<u64>>,
    nodes: u64,
    cap: u64,
    scratch: Vec<u32>,
}

enum Flow {
    Continue,
    Found,
    Stop,
}

fn popcount(words: &[u64]) -> u32 {
    words.iter().map(|w| w.count_ones()).sum()
}

impl Searcher<'_> {
    fn row(v: &[u64], j: usize, words: usize) -> &[u64] {
        &v[j * words..(j + 1) * words]
    }

    fn is_orbit_least(&mut self) -> bool {
        let k = self.chosen.len();
        for p in &self.perms {
            self.scratch.clear();
            self.scratch.extend(self.chosen.iter().map(|&j| p[j as usize]));
            self.scratch.sort_unstable();
            if self.scratch[..k] < self.chosen[..] {
                return false;
            }
        }
        true
    }

    fn dfs(&mut self, depth: usize, start: usize) -> Flow {
        if depth == self.take {
            return Flow::Found;
        }
        let remaining_after = self.take - depth - 1;
        let w = self.layout.words;
        for j in start..=(self.n - (self.take - depth)) {
            self.nodes += 1;
            if self.nodes > self.cap {
                return Flow::Stop;
            }
            let (lo, hi) = self.levels.split_at_mut(depth + 1);
            let cur = &lo[depth];
            let next = &mut hi[0];
            let dj = Self::row(&self.div, j, w);
            for t in 0..w {
                next[t] = cur[t] | dj[t];
            }
            let mut ok = true;
            let suffix = Self::row(&self.suffix, j + 1, w);
            for (i, &(off, len)) in self.layout.spans.iter().enumerate() {
                let goal = self.target[i + 1];
                let have = popcount(&next[off..off + len]) as i64;
                if have > goal {
                    ok = false;
                    break;
                }
                let reachable: u32 = (off..off + len).map(|t| (suffix[t] & !next[t]).count_ones()).sum();
                let gain = reachable.min(remaining_after as u32 * self.max_div[i]) as i64;
                if have + gain < goal {
                    ok = false;
                    break;
                }
            }
            if !ok {
                continue;
            }
            self.chosen.push(j as u32);
            if self.is_orbit_least() {
                match self.dfs(depth + 1, j + 1) {
                    Flow::Continue => {}
                    other => return other,
                }
            }
            self.chosen.pop();
        }
        Flow::Continue
    }
}

fn permutations(r: usize) -> Vec<Vec<usize>> {
    if r > FULL_GROUP_MAX_R {
        let mut out = Vec::new();
        for a in 0..r {
            for b in a + 1..r {
                let mut p: Vec<usize> = (0..r).collect();
                p.swap(a, b);
                out.push(p);
            }
        }
        return out;
    }
    let mut out = vec![Vec::new()];
    for n in 1..=r {
        let mut next = Vec::new();
        for p in &out {
            for pos in 0..n {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                next.push(q);
            }
        }
        out = next;
    }
    out.retain(|p| p.iter().enumerate().any(|(i, &x)| i != x));
    out
}

fn divisors_of_degree(m: &Monomial, d: usize) -> Vec<Monomial> {
    let e = m.exponents();
    let mut out = Vec::new();
    let mut cur = vec![0u32; e.len()];
    fn rec(i: usize, left: u32, e: &[u32], cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i == e.len() {
            if left == 0 {
                out.push(Monomial::new(cur.clone()));
            }
            return;
        }
        let rest: u32 = e[i + 1..].iter().sum();
        for x in 0..=e[i].min(left) {
            if left - x > rest {
                continue;
            }
            cur[i] = x;
            rec(i + 1, left - x, e, cur, out);
        }
        cur[i] = 0;
    }
    rec(0, d as u32, e, &mut cur, &mut out);
    out
}

/// Searches for the maximal monomials of a pure order ideal with rank vector
/// `h` (trailing zeros ignored), visiting at most `cap_nodes` nodes.
/// Traversal order is fixed, so the outcome is reproducible.
pub fn pure_witness_search(h: &[i64], cap_nodes: u64) -> SearchReport {
    let report = |outcome| SearchReport { outcome, nodes: 0 };
    if h.first() != Some(&1) || h.iter().any(|&x| x < 0) {
        return report(SearchOutcome::Exhausted);
    }
    let e = h.iter().rposition(|&x| x != 0).unwrap_or(0);
    let target = &h[..=e];
    let r = if e == 0 { 0 } else { target[1] as usize };
    if e == 0 {
        return report(SearchOutcome::Found(Witness { r: 0, maxima: vec![Monomial::one(0)] }));
    }
    if r == 0 {
        return report(SearchOutcome::Exhausted);
    }
    let candidates = monomials_of_degree(r, e);
    let n = candidates.len();
    let take = target[e] as usize;
    if take > n {
        return report(SearchOutcome::Exhausted);
    }
    let mut spans = Vec::new();
    let mut words = 0;
    let mut index: Vec<HashMap<Monomial, usize>> = Vec::new();
    for d in 1..e {
        let ms = monomials_of_degree(r, d);
        if target[d] as usize > ms.len() {
            return report(SearchOutcome::Exhausted);
        }
        let len = ms.len().div_ceil(64);
        spans.push((words, len));
        words += len;
        index.push(ms.into_iter().enumerate().map(|(i, m)| (m, i)).collect());
    }
    let words = words.max(1);
    let mut div = vec![0u64; n * words];
    let mut max_div = vec![0u32; e.saturating_sub(1)];
    for (j, m) in candidates.iter().enumerate() {
        for d in 1..e {
            let (off, _) = spans[d - 1];
            let mut c = 0;
            for q in divisors_of_degree(m, d) {
                let i = index[d - 1][&q];
                div[j * words + off + i / 64] |= 1 << (i % 64);
                c += 1;
            }
            max_div[d - 1] = max_div[d - 1].max(c);
        }
    }
    let mut suffix = vec![0u64; (n + 1) * words];
    for j in (0..n).rev() {
        for t in 0..words {
            suffix[j * words + t] = suffix[(j + 1) * words + t] | div[j * words + t];
        }
    }
    let cand_index: HashMap<&Monomial, u32> = candidates.iter().enumerate().map(|(i, m)| (m, i as u32)).collect();
    let perms: Vec<Vec<u32>> = permutations(r)
        .into_iter()
        .map(|p| {
            candidates
                .iter()
                .map(|m| {
                    let mut img = vec![0u32; r];
                    for (v, &x) in m.exponents().iter().enumerate() {
                        img[p[v]] = x;
                    }
                    cand_index[&Monomial::new(img)]
                })
                .collect()
        })
        .collect();
    let mut s = Searcher {
        target,
        take,
        layout: Layout { spans, words },
        div,
        suffix,
        max_div,
        perms,
        n,
        chosen: Vec::with_capacity(take),
        levels: vec![vec![0u64; words]; take + 1],
        nodes: 0,
        cap: cap_nodes,
        scratch: Vec::with_capacity(take),
    };
    let flow = s.dfs(0, 0);
    let outcome = match flow {
        Flow::Found => {
            let maxima = s.chosen.iter().map(|&j| candidates[j as usize].clone()).collect();
            SearchOutcome::Found(Witness { r, maxima })
        }
        Flow::Stop => SearchOutcome::CapHit,
        Flow::Continue => SearchOutcome::Exhausted,
    };
    SearchReport { outcome, nodes: s.nodes }
}
