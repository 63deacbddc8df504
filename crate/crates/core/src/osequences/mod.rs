//! Monomial order ideals and (pure) O-sequences.

mod macaulay;
mod monomial;
mod purity;
mod search;

pub use macaulay::{
    first_difference, first_half, is_differentiable, is_flawless, is_o_sequence, lex_segment_ideal,
    macaulay_next_bound, macaulay_representation, max_differentiable_extension, min_differentiable_extension,
    o_sequences, shifted_sum,
};
pub use monomial::{downward_closure, monomials_of_degree, Monomial, OrderIdeal, Witness};
pub use purity::{
    differentiable_witness, icp_interval_test, is_pure_o_sequence, DecidedBy, Purity, PurityOracle, PurityVerdict,
};
pub use search::{pure_witness_search, SearchOutcome, SearchReport, DEFAULT_CAP_NODES};
