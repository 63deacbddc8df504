use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("empty complex family")]
    EmptyFamily,
    #[error("element {element} out of range 1..={n}")]
    ElementOutOfRange { element: usize, n: usize },
    #[error("ground set of {0} elements exceeds the 64-element limit")]
    GroundTooLarge(usize),
    #[error("circuit family is not an antichain: {0:?} contains {1:?}")]
    NotAntichain(Vec<usize>, Vec<usize>),
    #[error("link of a loop (element {0})")]
    LinkOfLoop(usize),
    #[error("dimension {dim} out of range -1..={max}")]
    DimensionOutOfRange { dim: isize, max: isize },
    #[error("not a complete intersection")]
    NotCompleteIntersection,
    #[error("not a matroid")]
    NotMatroid,
    #[error("enumeration cap exceeded: n = {n} > {cap}; raise the cap explicitly (cost grows super-exponentially) or use up-to-isomorphism mode")]
    CapExceeded { n: usize, cap: usize },
    #[error("rank {rank} exceeds ground size {n}")]
    RankTooLarge { rank: usize, n: usize },
    #[error("not an O-sequence: {0:?}")]
    NotOSequence(Vec<i64>),
    #[error("length mismatch: {0}")]
    LengthMismatch(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("out of theorem scope: {0}")]
    OutOfScope(String),
    #[error("rank-3 case analysis violated: {0}")]
    CaseAnalysisViolated(String),
    #[error("undecided within the search budget: {0}")]
    Undecided(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
