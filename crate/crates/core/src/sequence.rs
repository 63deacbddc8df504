//! Finite integer sequences (f-vectors, h-vectors, O-sequences).

use std::fmt;
use std::ops::{Deref, Index};

use serde::{Deserialize, Serialize};

/// A finite integer sequence indexed from 0.
///
/// Entries are signed: h-vectors of arbitrary (non Cohen-Macaulay) complexes
/// and first differences may be negative. Reading past the end yields 0.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntSequence(Vec<i64>);

impl IntSequence {
    pub fn new(entries: Vec<i64>) -> Self {
        IntSequence(entries)
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<i64> {
        self.0
    }

    /// Entry `i`, or 0 past the end.
    pub fn get(&self, i: usize) -> i64 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Index of the last entry; `None` for the empty sequence.
    pub fn last_index(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    /// Socle degree: index of the last nonzero entry.
    pub fn socle_degree(&self) -> Option<usize> {
        self.0.iter().rposition(|&x| x != 0)
    }

    /// The sequence with trailing zeros removed.
    pub fn nonzero_part(&self) -> IntSequence {
        match self.socle_degree() {
            Some(e) => IntSequence(self.0[..=e].to_vec()),
            None => IntSequence(Vec::new()),
        }
    }

    /// Pads with zeros (never truncates) to `len` entries.
    pub fn padded(&self, len: usize) -> IntSequence {
        let mut v = self.0.clone();
        if v.len() < len {
            v.resize(len, 0);
        }
        IntSequence(v)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }
}

impl Deref for IntSequence {
    type Target = [i64];
    fn deref(&self) -> &[i64] {
        &self.0
    }
}

impl Index<usize> for IntSequence {
    type Output = i64;
    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl From<Vec<i64>> for IntSequence {
    fn from(v: Vec<i64>) -> Self {
        IntSequence(v)
    }
}

impl From<&[i64]> for IntSequence {
    fn from(v: &[i64]) -> Self {
        IntSequence(v.to_vec())
    }
}

impl<const N: usize> From<[i64; N]> for IntSequence {
    fn from(v: [i64; N]) -> Self {
        IntSequence(v.to_vec())
    }
}

impl FromIterator<i64> for IntSequence {
    fn from_iter<T: IntoIterator<Item = i64>>(iter: T) -> Self {
        IntSequence(iter.into_iter().collect())
    }
}

impl fmt::Display for IntSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as i128 / (i + 1) as i128;
    }
    acc as i64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_edges() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(-1, 0), 0);
        assert_eq!(binomial(4, -1), 0);
        assert_eq!(binomial(60, 30), 118264581564861424);
    }

    #[test]
    fn nonzero_part_and_socle() {
        let h = IntSequence::from([1, 2, 1, 0, 0]);
        assert_eq!(h.socle_degree(), Some(2));
        assert_eq!(h.nonzero_part(), IntSequence::from([1, 2, 1]));
        assert_eq!(h.get(10), 0);
        assert_eq!(IntSequence::from([0, 0]).nonzero_part().len(), 0);
        assert_eq!(h.to_string(), "(1,2,1,0,0)");
    }
}
