//! The shifted-sum conjecture: hypotheses, tester, and assumption (b).

use serde_json::json;

use super::inequalities::differentiable_while_nondecreasing;
use crate::error::{Error, Result};
use crate::osequences::{first_difference, is_differentiable, shifted_sum, Purity, PurityOracle};
use crate::sequence::IntSequence;
use crate::verdict::{Outcome, Verdict};

/// Nonzero parts of `h` and `h2`, checking that `h2` has socle degree one less
/// than `h`.
fn aligned(h: &[i64], h2: &[i64]) -> Result<(IntSequence, IntSequence)> {
    let a = IntSequence::from(h).nonzero_part();
    let b = IntSequence::from(h2).nonzero_part();
    if a.len() < 2 || b.len() + 1 != a.len() {
        return Err(Error::LengthMismatch(format!(
            "need socle degree of h2 = socle degree of h - 1, got h = {a}, h2 = {b}"
        )));
    }
    Ok((a, b))
}

/// The inequality part of the hypotheses: `(Δh′)_i <= (Δh)_i` for
/// `i <= ceil(e/2)` and `h′_i <= h_i` for `i <= e - 1`. Indices past the end
/// of `Δh′` are skipped.
pub fn ccc_inequalities(h: &[i64], h2: &[i64]) -> Result<bool> {
    let (a, b) = aligned(h, h2)?;
    let e = a.len() - 1;
    let (da, db) = (first_difference(&a), first_difference(&b));
    let delta_ok = (0..=e.div_ceil(2).min(e - 1)).all(|i| db[i] <= da[i]);
    let entries_ok = (0..e).all(|i| b[i] <= a[i]);
    Ok(delta_ok && entries_ok)
}

/// Full hypotheses: the inequalities plus purity of both sequences.
pub fn ccc_hypotheses(h: &[i64], h2: &[i64], oracle: &PurityOracle) -> Result<Outcome> {
    if !ccc_inequalities(h, h2)? {
        return Ok(Outcome::Fail);
    }
    let both = [oracle.purity(h), oracle.purity(h2)];
    Ok(if both.contains(&Purity::NotPure) {
        Outcome::Fail
    } else if both.contains(&Purity::Undecided) {
        Outcome::Undecided
    } else {
        Outcome::Pass
    })
}

/// Least `a` with `(1, r, a, t)` differentiable.
pub fn least_differentiable_a0(r: i64, t: i64) -> Option<i64> {
    (r..=t).find(|&a| is_differentiable(&[1, r, a, t]))
}

/// Decides purity of the shifted sum of `h` and `h2`, which must satisfy the
/// hypotheses. For socle degree at most 3 a pass is expected; beyond it the
/// verdict is a probe of the open conjecture.
pub fn ccc_test(h: &[i64], h2: &[i64], oracle: &PurityOracle) -> Result<Verdict> {
    let (a, b) = aligned(h, h2)?;
    match ccc_hypotheses(&a, &b, oracle)? {
        Outcome::Pass => {}
        Outcome::Fail => return Err(Error::Precondition(format!("hypotheses fail for {a} and {b}"))),
        Outcome::Undecided => {
            return Ok(Verdict::undecided("ccc").with("h", &a).with("h2", &b).with("reason", "input purity undecided"))
        }
    }
    let e = a.len() - 1;
    let sum = shifted_sum(&a, &b)?;
    let scope = if e <= 3 { "theorem" } else { "open" };
    let decided = oracle.decide(&sum);
    let mut v = match decided.pure {
        Purity::Pure => Verdict::pass("ccc").with("witness", &decided.witness),
        Purity::NotPure => Verdict::fail(
            "ccc",
            json!({"h": a, "h2": b, "shifted_sum": sum, "scope": scope, "decided_by": decided.decided_by}),
        ),
        Purity::Undecided => Verdict::undecided("ccc").with("nodes", decided.nodes),
    };
    v = v
        .with("h", &a)
        .with("h2", &b)
        .with("shifted_sum", &sum)
        .with("scope", scope)
        .with("decided_by", decided.decided_by);
    if e == 3 {
        v = v.with("a0", least_differentiable_a0(sum[1], sum[3]));
    }
    Ok(v)
}

/// Assumption (b): if the shifted sum of two pure O-sequences is
/// differentiable through its nondecreasing prefix, it is pure. Passes
/// vacuously when the premise fails.
pub fn assumption_b_check(h: &[i64], h2: &[i64], oracle: &PurityOracle) -> Result<Verdict> {
    let (a, b) = aligned(h, h2)?;
    for x in [&a, &b] {
        match oracle.purity(x) {
            Purity::Pure => {}
            Purity::NotPure => return Err(Error::Precondition(format!("{x} is not pure"))),
            Purity::Undecided => return Ok(Verdict::undecided("assumption_b").with("undecided_input", x)),
        }
    }
    let sum = shifted_sum(&a, &b)?;
    if !differentiable_while_nondecreasing(&sum) {
        return Ok(Verdict::pass("assumption_b").with("premise", false).with("shifted_sum", &sum));
    }
    let d = oracle.decide(&sum);
    Ok(match d.pure {
        Purity::Pure => Verdict::pass("assumption_b").with("premise", true).with("shifted_sum", &sum),
        Purity::NotPure => Verdict::fail("assumption_b", json!({"h": a, "h2": b, "shifted_sum": sum})),
        Purity::Undecided => Verdict::undecided("assumption_b").with("shifted_sum", &sum),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn non_differentiable_pair_violates_hypotheses() {
        let o = PurityOracle::default();
        assert!(!ccc_inequalities(&[1, 6, 6, 6], &[1, 3, 6]).unwrap());
        assert_eq!(ccc_hypotheses(&[1, 6, 6, 6], &[1, 3, 6], &o).unwrap(), Outcome::Fail);
        assert!(ccc_test(&[1, 6, 6, 6], &[1, 3, 6], &o).is_err());
    }

    #[test]
    fn small_pairs() {
        let o = PurityOracle::default();
        // Δh = (1,1,0,0), Δh' = (1,0,0): hypotheses hold
        assert!(ccc_inequalities(&[1, 2, 2, 2], &[1, 1, 1]).unwrap());
        let v = ccc_test(&[1, 2, 2, 2], &[1, 1, 1], &o).unwrap();
        assert!(v.passed());
        assert_eq!(v.detail["shifted_sum"], json!([1, 3, 3, 3]));
        assert!(ccc_test(&[1, 3], &[1], &o).unwrap().passed());
        assert!(ccc_inequalities(&[1, 2, 1], &[0]).is_err());
        assert!(ccc_inequalities(&[1, 2, 1], &[1, 1, 1]).is_err());
    }

    #[test]
    fn a0_values() {
        assert_eq!(least_differentiable_a0(3, 4), Some(4));
        assert_eq!(least_differentiable_a0(4, 12), Some(8));
    }

    #[test]
    fn assumption_b_on_non_differentiable_pair_is_vacuous() {
        let o = PurityOracle::default();
        let v = assumption_b_check(&[1, 6, 6, 6], &[1, 3, 6], &o).unwrap();
        assert!(v.passed());
        assert_eq!(v.detail["premise"], json!(false));
        assert!(assumption_b_check(&[1, 3, 1], &[1, 1], &o).is_err());
    }
}
