//! f-vectors, h-vectors and the binomial transform between them.

use super::complex::SimplicialComplex;
use crate::sequence::{binomial, IntSequence};

/// Entry `j` counts faces of cardinality `j` (so entry 0 is `f_{-1} = 1`).
pub fn f_vector(c: &SimplicialComplex) -> IntSequence {
    let mut f = vec![0i64; c.rank() + 1];
    for face in c.faces() {
        f[face.count_ones() as usize] += 1;
    }
    IntSequence::new(f)
}

/// `h_j = Σ_{i≤j} (-1)^{j-i} C(d-i, j-i) f_{i-1}` with `d = len(f) - 1`.
pub fn h_from_f(f: &IntSequence) -> IntSequence {
    let d = f.len() as i64 - 1;
    (0..=d)
        .map(|j| {
            (0..=j)
                .map(|i| {
                    let sign = if (j - i) % 2 == 0 { 1 } else { -1 };
                    sign * binomial(d - i, j - i) * f[i as usize]
                })
                .sum()
        })
        .collect()
}

/// `f_{j-1} = Σ_{i≤j} C(d-i, j-i) h_i` with `d = len(h) - 1`.
pub fn f_from_h(h: &IntSequence) -> IntSequence {
    let d = h.len() as i64 - 1;
    (0..=d)
        .map(|j| (0..=j).map(|i| binomial(d - i, j - i) * h[i as usize]).sum())
        .collect()
}

/// `(h_0, ..., h_d)` with `d = dim + 1`; trailing zeros are kept. Loops do not
/// contribute.
pub fn h_vector(c: &SimplicialComplex) -> IntSequence {
    h_from_f(&f_vector(c))
}
