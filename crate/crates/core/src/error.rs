use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("order matrix is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("{names} names supplied for {n} elements")]
    NameCount { names: usize, n: usize },
    #[error("reflexivity fails at element {0}")]
    ReflexivityViolation(usize),
    #[error("antisymmetry fails: {0} <= {1} and {1} <= {0}")]
    AntisymmetryViolation(usize, usize),
    #[error("transitivity fails: {0} <= {1} <= {2} but not {0} <= {2}")]
    TransitivityViolation(usize, usize, usize),
    #[error("cover ({0}, {1}) references an element out of range")]
    CoverOutOfRange(usize, usize),
    #[error("poset is not a lattice")]
    NotALattice,
    #[error("poset is not a meet-semilattice (needs all pairwise meets and a top)")]
    NotAMeetSemilattice,
    #[error("lattice is not distributive")]
    NotDistributive,
    #[error("bad parameters for family `{family}`: {reason}")]
    BadParams { family: String, reason: String },
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("subset is not a member of the completion")]
    ForeignMember,
    #[error("unknown theorem id `{0}`")]
    UnknownTheoremId(String),
    #[error("size {n} exceeds the cap {cap} for {kind}")]
    CapExceeded { kind: String, n: usize, cap: usize },
    #[error("precondition unmet: {0}")]
    PreconditionUnmet(String),
    #[error("malformed input: {0}")]
    Input(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Input(e.to_string())
    }
}
