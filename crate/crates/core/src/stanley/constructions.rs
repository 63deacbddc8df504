//! Explicit pure order ideals used by the shifted-sum theorem and the rank-3
//! case analysis.

use crate::error::{Error, Result};
use crate::osequences::{downward_closure, monomials_of_degree, Monomial, OrderIdeal};
use crate::sequence::binomial;

/// Pure order ideal generated by the maximal monomials `M_1..M_b` of `w`
/// (socle degree 3, variables `y_1..y_{r-1}`) together with `y_r * N_j` for
/// the maximal monomials `N_1..N_c` of `w2` (socle degree 2, `r' <= r - 1`
/// variables). Its rank vector is `(1, r, a_1, b + c)` with `a_1 >= a + r'`;
/// that inequality is checked.
pub fn shifted_sum_construction(w: &OrderIdeal, w2: &OrderIdeal) -> Result<OrderIdeal> {
    let hw = w.rank_vector();
    let hw2 = w2.rank_vector();
    if hw.len() != 4 || !w.is_pure() {
        return Err(Error::Precondition("W must be pure of socle degree 3".into()));
    }
    if hw2.len() != 3 || !w2.is_pure() {
        return Err(Error::Precondition("W2 must be pure of socle degree 2".into()));
    }
    let rm1 = w.num_vars();
    if hw[1] as usize != rm1 {
        return Err(Error::Precondition("W must use all of its variables".into()));
    }
    if w2.num_vars() > rm1 {
        return Err(Error::Precondition(format!(
            "W2 has {} variables, more than the {rm1} of W",
            w2.num_vars()
        )));
    }
    let r = rm1 + 1;
    let mut maxima: Vec<Monomial> = w.maxima().iter().map(|m| m.extended(r)).collect();
    for n in w2.maxima() {
        let mut exps = n.extended(r).exponents().to_vec();
        exps[r - 1] += 1;
        maxima.push(Monomial::new(exps));
    }
    let out = downward_closure(r, &maxima)?;
    let h = out.rank_vector();
    let (a, r_prime) = (hw[2], hw2[1]);
    if h.len() != 4 || h[1] != r as i64 || h[3] != hw[3] + hw2[2] || h[2] < a + r_prime || !out.is_pure() {
        return Err(Error::CaseAnalysisViolated(format!(
            "W'' has rank vector {h}, expected (1,{r},>= {},{})",
            a + r_prime,
            hw[3] + hw2[2]
        )));
    }
    Ok(out)
}

/// Complete-intersection witness: the single maximal monomial
/// `y_1^{d_1-1} ... y_t^{d_t-1}`.
pub fn ci_witness(degrees: &[i64]) -> Result<OrderIdeal> {
    if let Some(d) = degrees.iter().find(|&&d| d < 2) {
        return Err(Error::Precondition(format!("degree {d} < 2")));
    }
    let top = Monomial::new(degrees.iter().map(|&d| (d - 1) as u32).collect());
    downward_closure(degrees.len(), &[top])
}

/// Maxima `y_r^3` and `y_r * M` for every quadric `M` in `y_1..y_{r-1}`;
/// rank vector `(1, r, C(r+1,2), C(r,2)+1)`.
pub fn bcbc_witness(r: usize) -> Result<OrderIdeal> {
    if r < 2 {
        return Err(Error::Precondition(format!("r = {r} < 2")));
    }
    let mut maxima = vec![Monomial::power(r, r, 3)];
    for m in monomials_of_degree(r - 1, 2) {
        let mut exps = m.extended(r).exponents().to_vec();
        exps[r - 1] += 1;
        maxima.push(Monomial::new(exps));
    }
    downward_closure(r, &maxima)
}

/// Maxima `y_i * M` for every squarefree quadric `M = y_i y_j` (`i < j`);
/// rank vector `(1, r, C(r,2)+r-1, C(r,2))`. The degree-2 layer is every
/// quadric except `y_r^2`.
pub fn exceptional_witness(r: usize) -> Result<OrderIdeal> {
    if r < 3 {
        return Err(Error::Precondition(format!("r = {r} < 3")));
    }
    let mut maxima = Vec::new();
    for i in 0..r {
        for j in i + 1..r {
            let mut exps = vec![0u32; r];
            exps[i] = 2;
            exps[j] = 1;
            maxima.push(Monomial::new(exps));
        }
    }
    downward_closure(r, &maxima)
}

/// A pure order ideal with rank vector `(1, r, C(r+1,2), h3)` for any
/// `C(r,2)+1 <= h3 <= C(r+2,3)`: the [`bcbc_witness`] maxima plus further
/// cubes in lex order. Every quadric already lies in the bcbc ideal, so each
/// added cube raises only the top entry.
pub fn init_ge3_witness(r: usize, h3: i64) -> Result<OrderIdeal> {
    let low = binomial(r as i64, 2) + 1;
    let high = binomial(r as i64 + 2, 3);
    if h3 < low || h3 > high {
        return Err(Error::CaseAnalysisViolated(format!(
            "h_3 = {h3} outside [{low}, {high}] for r = {r}"
        )));
    }
    let base = bcbc_witness(r)?;
    let mut maxima = base.maxima();
    for cube in monomials_of_degree(r, 3) {
        if maxima.len() as i64 >= h3 {
            break;
        }
        if !maxima.contains(&cube) {
            maxima.push(cube);
        }
    }
    downward_closure(r, &maxima)
}
