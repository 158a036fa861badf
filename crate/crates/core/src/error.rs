use thiserror::Error;

use crate::root_datum::Weight;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown root system type `{0}`")]
    UnknownType(String),
    #[error("invalid lattice: {0}")]
    InvalidLattice(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("operands belong to different root data or groups")]
    DatumMismatch,
    #[error("weight {0} is not dominant")]
    NotDominant(Weight),
    #[error("weight {0} does not lie in the chosen lattice")]
    NotInLattice(Weight),
    #[error("weight {0} has the wrong rank (expected {1})")]
    RankMismatch(Weight, usize),
    #[error("finite Weyl group of order {0} exceeds the enumeration cap {1}")]
    WeylGroupTooLarge(u64, usize),
    #[error("resource budget exceeded: {what} (limit {limit}, requested {requested})")]
    Budget {
        what: &'static str,
        limit: usize,
        requested: usize,
    },
    #[error("unknown verification suite `{0}`")]
    UnknownSuite(String),
}

impl Error {
    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}
