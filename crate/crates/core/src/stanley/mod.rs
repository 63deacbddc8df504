//! Stanley's conjecture for matroid h-vectors: inequalities, constructions,
//! the shifted-sum tester and rank-3 certificates.

mod ccc;
mod certificate;
mod constructions;
mod inequalities;

pub use ccc::{assumption_b_check, ccc_hypotheses, ccc_inequalities, ccc_test, least_differentiable_a0};
pub use certificate::{
    aleph_membership, rank3_certificate, stanley_check, CaseTag, StanleyCertificate, ALEPH_MAX_VERTICES,
};
pub use constructions::{bcbc_witness, ci_witness, exceptional_witness, init_ge3_witness, shifted_sum_construction};
pub use inequalities::{
    assumption_a_check, brown_colbourn_check, brown_colbourn_value, deletion_all_cones_implies_ci,
    differentiable_while_nondecreasing, link_deletion_inequalities, link_not_cone, nondecreasing_prefix,
    standard_alphas,
};
