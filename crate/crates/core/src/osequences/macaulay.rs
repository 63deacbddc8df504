//! Macaulay bounds, O-sequences, first differences and shifted sums.

use std::collections::HashSet;

use super::monomial::{monomials_of_degree, Monomial, OrderIdeal};
use crate::error::{Error, Result};
use crate::sequence::{binomial, IntSequence};

/// The `i`-th Macaulay representation `value = C(a_i,i) + ... + C(a_j,j)`,
/// returned as pairs `(a_k, k)` with `k` descending.
pub fn macaulay_representation(value: i64, i: usize) -> Vec<(i64, usize)> {
    assert!(i >= 1, "Macaulay representation needs i >= 1");
    let mut out = Vec::new();
    let mut rest = value;
    let mut k = i;
    while rest > 0 && k >= 1 {
        // largest a with C(a, k) <= rest
        let mut a = k as i64;
        while binomial(a + 1, k as i64) <= rest {
            a += 1;
        }
        out.push((a, k));
        rest -= binomial(a, k as i64);
        k -= 1;
    }
    out
}

/// `value^<i>`: the largest possible next entry of an O-sequence whose
/// degree-`i` entry is `value`.
pub fn macaulay_next_bound(value: i64, i: usize) -> i64 {
    if value <= 0 {
        return 0;
    }
    macaulay_representation(value, i)
        .into_iter()
        .map(|(a, k)| binomial(a + 1, k as i64 + 1))
        .sum()
}

/// `h_0 = 1`, all entries nonnegative, and `h_{i+1} <= h_i^<i>` for `i >= 1`.
pub fn is_o_sequence(h: &[i64]) -> bool {
    if h.first() != Some(&1) || h.iter().any(|&x| x < 0) {
        return false;
    }
    (1..h.len().saturating_sub(1)).all(|i| h[i + 1] <= macaulay_next_bound(h[i], i))
}

/// Per degree `i`, the last `h_i` monomials of degree `i` in lex order over
/// `h_1` variables. Fails unless the result is an order ideal.
pub fn lex_segment_ideal(h: &[i64]) -> Result<OrderIdeal> {
    let bad = || Error::NotOSequence(h.to_vec());
    if h.first() != Some(&1) || h.iter().any(|&x| x < 0) {
        return Err(bad());
    }
    let r = h.get(1).copied().unwrap_or(0) as usize;
    let mut chosen: Vec<Monomial> = vec![Monomial::one(r)];
    let mut previous: HashSet<Monomial> = chosen.iter().cloned().collect();
    for (d, &count) in h.iter().enumerate().skip(1) {
        let all = monomials_of_degree(r, d);
        let count = count as usize;
        if count > all.len() {
            return Err(bad());
        }
        let segment = &all[all.len() - count..];
        if !segment.iter().all(|m| m.lower_neighbours().all(|n| previous.contains(&n))) {
            return Err(bad());
        }
        previous = segment.iter().cloned().collect();
        chosen.extend_from_slice(segment);
    }
    let ideal = super::monomial::downward_closure(r, &chosen)?;
    debug_assert_eq!(ideal.len(), chosen.len());
    Ok(ideal)
}

/// `(h_0, h_1 - h_0, h_2 - h_1, ...)`.
pub fn first_difference(h: &[i64]) -> IntSequence {
    (0..h.len())
        .map(|i| if i == 0 { h[0] } else { h[i] - h[i - 1] })
        .collect()
}

/// The first difference is an O-sequence.
pub fn is_differentiable(h: &[i64]) -> bool {
    is_o_sequence(&first_difference(h))
}

/// `(h_0, ..., h_{ceil(e/2)})` for the socle degree `e` of `h`.
pub fn first_half(h: &[i64]) -> IntSequence {
    let e = h.iter().rposition(|&x| x != 0).unwrap_or(0);
    h[..=e.div_ceil(2).min(h.len().saturating_sub(1))].into()
}

/// `h_i <= h_{e-i}` for `i <= e/2`, `e` the socle degree.
pub fn is_flawless(h: &[i64]) -> bool {
    let Some(e) = h.iter().rposition(|&x| x != 0) else {
        return true;
    };
    (0..=e / 2).all(|i| h[i] <= h[e - i])
}

/// `h''_i = h_i + h2_{i-1}`; `h2` must be one entry shorter than `h`.
pub fn shifted_sum(h: &[i64], h2: &[i64]) -> Result<IntSequence> {
    if h.is_empty() || h2.len() + 1 != h.len() {
        return Err(Error::LengthMismatch(format!(
            "shifted sum needs len(h2) = len(h) - 1, got {} and {}",
            h.len(),
            h2.len()
        )));
    }
    Ok((0..h.len())
        .map(|i| h[i] + if i > 0 { h2[i - 1] } else { 0 })
        .collect())
}

/// Largest `b` for which `prefix` followed by `b` is differentiable, if the
/// prefix itself is.
pub fn max_differentiable_extension(prefix: &[i64]) -> Option<i64> {
    if prefix.len() < 2 || !is_differentiable(prefix) {
        return None;
    }
    let delta = first_difference(prefix);
    let i = prefix.len() - 1;
    Some(prefix[i] + macaulay_next_bound(delta[i], i))
}

/// Smallest `b` for which `prefix` followed by `b` is differentiable.
pub fn min_differentiable_extension(prefix: &[i64]) -> Option<i64> {
    if prefix.len() < 2 || !is_differentiable(prefix) {
        return None;
    }
    Some(prefix[prefix.len() - 1])
}

/// All O-sequences with socle degree exactly `e` and `1 <= h_1 <= max_h1`
/// (just `(1)` for `e = 0`), in lexicographic order.
pub fn o_sequences(max_h1: i64, e: usize) -> Vec<IntSequence> {
    fn rec(cur: &mut Vec<i64>, e: usize, out: &mut Vec<IntSequence>) {
        let i = cur.len() - 1;
        if i == e {
            out.push(IntSequence::new(cur.clone()));
            return;
        }
        for next in 1..=macaulay_next_bound(cur[i], i) {
            cur.push(next);
            rec(cur, e, out);
            cur.pop();
        }
    }
    if e == 0 {
        return vec![IntSequence::from([1])];
    }
    let mut out = Vec::new();
    for h1 in 1..=max_h1 {
        rec(&mut vec![1, h1], e, &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bounds() {
        assert_eq!(macaulay_next_bound(2, 1), 3);
        assert_eq!(macaulay_next_bound(6, 2), 10);
        assert_eq!(macaulay_next_bound(0, 5), 0);
        assert_eq!(macaulay_next_bound(2, 2), 2);
        assert_eq!(macaulay_next_bound(3, 2), 4);
        assert_eq!(macaulay_representation(5, 2), vec![(3, 2), (2, 1)]);
    }

    #[test]
    fn o_sequence_checks() {
        assert!(is_o_sequence(&[1, 3, 6, 10]));
        assert!(!is_o_sequence(&[1, 2, 4]));
        assert!(is_o_sequence(&[1, 7, 9, 12]));
        assert!(!is_o_sequence(&[2, 1]));
        assert!(!is_o_sequence(&[1, 0, 1]));
        assert!(is_o_sequence(&[1]));
        assert!(!is_o_sequence(&[]));
    }

    #[test]
    fn lex_segments() {
        let x = lex_segment_ideal(&[1, 2, 2]).unwrap();
        let deg2: Vec<String> = x.monomials().iter().filter(|m| m.degree() == 2).map(|m| m.to_string()).collect();
        assert_eq!(deg2, vec!["y2^2", "y1*y2"]);
        assert_eq!(lex_segment_ideal(&[1, 1, 1]).unwrap().len(), 3);
        assert_eq!(lex_segment_ideal(&[1, 3, 6]).unwrap().rank_vector(), IntSequence::from([1, 3, 6]));
        assert!(lex_segment_ideal(&[1, 2, 4]).is_err());
    }

    #[test]
    fn differences() {
        assert_eq!(first_difference(&[1, 7, 9, 12]), IntSequence::from([1, 6, 2, 3]));
        assert!(!is_differentiable(&[1, 7, 9, 12]));
        assert!(is_differentiable(&[1, 3, 6, 10]));
        assert!(is_differentiable(&[1, 1]));
        assert!(!is_differentiable(&[1, 2, 1]));
        assert_eq!(first_half(&[1, 2, 3, 4, 2]), IntSequence::from([1, 2, 3]));
        assert_eq!(first_half(&[1, 7, 9, 12]), IntSequence::from([1, 7, 9]));
    }

    #[test]
    fn flawless() {
        assert!(!is_flawless(&[1, 4, 2, 4]));
        assert!(is_flawless(&[1, 2, 3, 2]));
        assert!(is_flawless(&[1, 3, 3, 1, 0]));
    }

    #[test]
    fn shifted_sums() {
        assert_eq!(shifted_sum(&[1, 6, 6, 6], &[1, 3, 6]).unwrap(), IntSequence::from([1, 7, 9, 12]));
        assert_eq!(shifted_sum(&[1, 1, 1], &[1, 1]).unwrap(), IntSequence::from([1, 2, 2]));
        assert!(matches!(shifted_sum(&[1, 1, 1], &[1]), Err(Error::LengthMismatch(_))));
    }

    #[test]
    fn enumerated_sequences() {
        let two = o_sequences(2, 2);
        assert_eq!(
            two,
            vec![IntSequence::from([1, 1, 1]), IntSequence::from([1, 2, 1]), IntSequence::from([1, 2, 2]), IntSequence::from([1, 2, 3])]
        );
        assert!(o_sequences(4, 3).iter().all(|h| is_o_sequence(h)));
        assert_eq!(o_sequences(3, 0).len(), 1);
    }

    #[test]
    fn differentiable_extensions() {
        // (1, r-1, a, b) with r = 4, a = 6: delta (1,2,3,b-6), 3^<2> = 4
        assert_eq!(max_differentiable_extension(&[1, 3, 6]), Some(10));
        assert_eq!(min_differentiable_extension(&[1, 3, 6]), Some(6));
        assert_eq!(max_differentiable_extension(&[1, 3, 2]), None);
    }
}
