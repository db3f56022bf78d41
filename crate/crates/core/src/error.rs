use thiserror::Error;

use crate::rootsys::{Family, RootVec, Weight};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rank {rank} for type {family}")]
    InvalidRank { family: Family, rank: usize },

    #[error("unknown Lie type `{0}`")]
    UnknownType(String),

    #[error("{0:?} is not a root")]
    NotARoot(RootVec),

    #[error("node index {index} out of range 1..={rank}")]
    NodeOutOfRange { index: usize, rank: usize },

    #[error("fundamental weight {0} is not minuscule")]
    NotMinuscule(usize),

    #[error("weight {0:?} is not in the orbit")]
    NotInOrbit(Weight),

    #[error("root {0:?} lies in the Levi part of the parabolic")]
    InParabolic(RootVec),

    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("wedge degree {k} out of range 1..={max}")]
    WedgeDegree { k: usize, max: usize },

    #[error("asymptotic data outside the admissible set")]
    OutsideAsymptoticSet,

    #[error("point outside the fundamental alcove")]
    OutsideAlcove,

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
