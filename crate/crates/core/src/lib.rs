//! Matroid h-vectors and pure O-sequences.
//!
//! The crate is split into three layers:
//!
//! * [`complexes`]: simplicial complexes on at most 64 ground elements,
//!   matroid recognition, link/deletion/cone machinery, f- and h-vectors,
//!   `T(x,1)` and exhaustive matroid enumeration.
//! * [`osequences`]: monomial order ideals, Macaulay bounds, differentiability,
//!   and a layered decision procedure for pure O-sequences backed by an
//!   exhaustive witness search.
//! * [`stanley`]: the inequality suites, the explicit order-ideal
//!   constructions, the shifted-sum conjecture tester and the rank-3
//!   certificate builder.
//!
//! [`sweep`] drives the exhaustive checks used by the command line tool and
//! the acceptance suite; [`io`] holds the JSON interchange schemas.

pub mod complexes;
pub mod error;
pub mod io;
pub mod osequences;
pub mod sequence;
pub mod stanley;
pub mod sweep;
pub mod verdict;

pub use error::{Error, Result};
pub use sequence::IntSequence;
pub use verdict::{Outcome, Verdict};
