//! Connes' cyclic category `Λ` and cyclic sets.
//!
//! Objects are the cyclically ordered sets `T_n` (`n + 1` objects `v₀, …, vₙ`
//! and elementary edges `eᵢ: vᵢ → vᵢ₊₁`). A [`LambdaArrow`] `T_m → T_n` is a
//! degree-1 functor, stored as a base object and a leg length for each
//! elementary edge. Cyclic sets are presheaves on `Λ`; here they are
//! truncated at a dimension bound and stored as explicit levels with an
//! action closure, see [`TruncatedCyclicSet`].

mod arrow;
mod cyclic_set;

pub use arrow::LambdaArrow;
pub use cyclic_set::{cyclic_nerve_triv, CyclicOperators, TruncatedCyclicSet};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum CyclicError {
    #[error("invalid Λ arrow: {0}")]
    InvalidArrow(String),
    #[error("cannot compose: expected an arrow into T_{expected}, got one into T_{found}")]
    IndexMismatch { expected: usize, found: usize },
    #[error("{0:?} is not a weakly monotone map")]
    NotMonotone(Vec<usize>),
    #[error("level {level} exceeds the truncation bound {bound}")]
    LevelOutOfRange { level: usize, bound: usize },
    #[error("element {index} does not exist at level {level}")]
    NoSuchElement { level: usize, index: usize },
    #[error("level {level} lists an element twice")]
    DuplicateElement { level: usize },
    #[error("expected {expected} levels, found {found}")]
    LevelCount { expected: usize, found: usize },
    #[error("acting by {arrow} leaves level {level}")]
    NotClosed { level: usize, arrow: String },
    #[error("identity fails: {0}")]
    IdentityFailed(String),
    #[error("needs dimension bound at least {0}")]
    DimensionTooSmall(usize),
}
