//! Monomials in `y_1..y_r` and finite monomial order ideals.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sequence::IntSequence;

/// An exponent vector. The derived order is lexicographic with
/// `y_1 > y_2 > ... > y_r`, so larger monomials in lex order compare greater.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(r: usize) -> Self {
        Monomial(vec![0; r])
    }

    /// `y_i^k`, with `i` 1-based.
    pub fn power(r: usize, i: usize, k: u32) -> Self {
        let mut m = Monomial::one(r);
        m.0[i - 1] = k;
        m
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn num_vars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn times(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Multiplies by `y_i` (0-based index).
    pub fn times_var(&self, i: usize) -> Monomial {
        let mut m = self.clone();
        m.0[i] += 1;
        m
    }

    /// Divisors of degree one less.
    pub fn lower_neighbours(&self) -> impl Iterator<Item = Monomial> + '_ {
        (0..self.0.len()).filter(|&i| self.0[i] > 0).map(move |i| {
            let mut m = self.clone();
            m.0[i] -= 1;
            m
        })
    }

    /// Pads with zero exponents to `r` variables.
    pub fn extended(&self, r: usize) -> Monomial {
        let mut v = self.0.clone();
        v.resize(r.max(v.len()), 0);
        Monomial(v)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "y{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// All degree-`d` monomials in `r` variables, lex-descending (`y_1^d` first).
pub fn monomials_of_degree(r: usize, d: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; r];
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        let r = cur.len();
        if i + 1 == r {
            cur[i] = left;
            out.push(Monomial(cur.clone()));
            cur[i] = 0;
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e;
            rec(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    if r == 0 {
        if d == 0 {
            out.push(Monomial(Vec::new()));
        }
        return out;
    }
    rec(0, d as u32, &mut cur, &mut out);
    out
}

/// A finite set of monomials over `r` variables. Values built by this crate
/// are downward closed; [`OrderIdeal::is_downward_closed`] checks it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrderIdeal {
    r: usize,
    monomials: BTreeSet<Monomial>,
}

/// Compact description of a pure order ideal: its variable count and its
/// maximal monomials.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Witness {
    pub r: usize,
    pub maxima: Vec<Monomial>,
}

impl OrderIdeal {
    /// `{1}` over `r` variables.
    pub fn unit(r: usize) -> Self {
        OrderIdeal {
            r,
            monomials: BTreeSet::from([Monomial::one(r)]),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.r
    }

    pub fn monomials(&self) -> &BTreeSet<Monomial> {
        &self.monomials
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.monomials.contains(m)
    }

    /// Entry `i` counts monomials of degree `i`.
    pub fn rank_vector(&self) -> IntSequence {
        let top = self.monomials.iter().map(Monomial::degree).max().unwrap_or(0);
        let mut h = vec![0i64; top + 1];
        for m in &self.monomials {
            h[m.degree()] += 1;
        }
        IntSequence::new(h)
    }

    /// Members not dividing any other member.
    pub fn maxima(&self) -> Vec<Monomial> {
        self.monomials
            .iter()
            .filter(|m| (0..self.r).all(|i| !self.monomials.contains(&m.times_var(i))))
            .cloned()
            .collect()
    }

    /// All maximal monomials share one degree.
    pub fn is_pure(&self) -> bool {
        let maxima = self.maxima();
        maxima.windows(2).all(|w| w[0].degree() == w[1].degree())
    }

    pub fn is_downward_closed(&self) -> bool {
        self.monomials.iter().all(|m| {
            m.num_vars() == self.r && m.lower_neighbours().all(|d| self.monomials.contains(&d))
        })
    }

    pub fn witness(&self) -> Witness {
        let mut maxima = self.maxima();
        maxima.sort_by(|a, b| b.cmp(a));
        Witness { r: self.r, maxima }
    }
}

/// The smallest order ideal containing `maxima`.
pub fn downward_closure(r: usize, maxima: &[Monomial]) -> Result<OrderIdeal> {
    if maxima.is_empty() {
        return Err(Error::InvalidInput("downward closure of an empty set".into()));
    }
    if let Some(m) = maxima.iter().find(|m| m.num_vars() != r) {
        return Err(Error::InvalidInput(format!(
            "monomial {m} has {} exponents, expected {r}",
            m.num_vars()
        )));
    }
    let mut set: BTreeSet<Monomial> = BTreeSet::new();
    let mut stack: Vec<Monomial> = maxima.to_vec();
    while let Some(m) = stack.pop() {
        if set.contains(&m) {
            continue;
        }
        stack.extend(m.lower_neighbours().filter(|d| !set.contains(d)));
        set.insert(m);
    }
    Ok(OrderIdeal { r, monomials: set })
}

impl Witness {
    pub fn closure(&self) -> Result<OrderIdeal> {
        if self.maxima.is_empty() {
            return Ok(OrderIdeal::unit(self.r));
        }
        downward_closure(self.r, &self.maxima)
    }

    /// The closure is pure and its rank vector is `h` (trailing zeros of `h`
    /// ignored).
    pub fn realizes(&self, h: &IntSequence) -> bool {
        match self.closure() {
            Ok(x) => x.is_pure() && x.rank_vector() == h.nonzero_part(),
            Err(_) => false,
        }
    }
}
