//! Error type shared by all modules.

use std::fmt;

use crate::typevec::TypeVec;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// `sub_basis(j)` on a type with no `j`-gon component.
    MissingComponent { ty: TypeVec, index: u32 },
    /// Binary series operation on operands with different truncations.
    TruncationMismatch,
    /// Series division requires a zero constant term.
    NonzeroConstantTerm,
    /// Exact division by S1 left a nonzero remainder at some face level.
    NotDivisible { face_level: u32 },
    /// Series inversion requires constant term 1.
    ConstantTermNotOne,
    /// The Geode recurrence exceeded its expansion budget.
    NonTermination { budget: u64 },
    /// A strategy or substitution referenced a gon index outside the truncation.
    GonIndexOutOfRange { index: u32, max_gon: u32 },
    /// The two-shape alternating sum requires distinct shape indices.
    EqualShapeIndices { index: u32 },
    /// A summand of a binomial identity has a zero binomial in its denominator.
    DegenerateTerm { summand: usize },
    /// Zero-sum Geode evaluation requires the substituted weights to sum to zero.
    NonzeroWeightSum,
    /// A sequence request needs more terms than the truncation can supply.
    InsufficientTruncation { needed_faces: u32, max_faces: u32 },
    /// Malformed text form of a type vector or slice pattern.
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::MissingComponent { ty, index } => {
                write!(f, "type {ty} has no {index}-gon component to decrement")
            }
            Error::TruncationMismatch => write!(f, "operands have different truncations"),
            Error::NonzeroConstantTerm => write!(f, "series has a nonzero constant term"),
            Error::NotDivisible { face_level } => {
                write!(
                    f,
                    "not divisible by S1: nonzero remainder at face level {face_level}"
                )
            }
            Error::ConstantTermNotOne => write!(f, "series constant term is not 1"),
            Error::NonTermination { budget } => {
                write!(
                    f,
                    "Geode recurrence exceeded its budget of {budget} expansions"
                )
            }
            Error::GonIndexOutOfRange { index, max_gon } => {
                write!(f, "gon index {index} exceeds truncation bound {max_gon}")
            }
            Error::EqualShapeIndices { index } => {
                write!(f, "shape indices must be distinct (both are {index})")
            }
            Error::DegenerateTerm { summand } => {
                write!(f, "zero binomial in the denominator of summand {summand}")
            }
            Error::NonzeroWeightSum => write!(f, "substituted weights must sum to zero"),
            Error::InsufficientTruncation {
                needed_faces,
                max_faces,
            } => {
                write!(
                    f,
                    "request needs face level {needed_faces} but truncation stops at {max_faces}"
                )
            }
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
