use crate::half::HalfInt;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("angular momentum must be non-negative, got j = {j}")]
    NegativeJ { j: HalfInt },

    #[error("{m} is not a valid projection of j = {j}")]
    InvalidProjection { j: HalfInt, m: HalfInt },

    #[error("triangle inequality violated for ({a}, {b}, {c})")]
    TriangleViolation { a: HalfInt, b: HalfInt, c: HalfInt },

    #[error("tensor rank {lambda} out of range 0..={max}")]
    RankOutOfRange { lambda: u32, max: u32 },

    #[error("order mu = {mu} out of range for rank {lambda}")]
    OrderOutOfRange { lambda: u32, mu: i32 },

    #[error("operators act on different spins: {left} vs {right}")]
    SpinMismatch { left: HalfInt, right: HalfInt },

    #[error("grid exactness degree {have} below the {need} required for exact reconstruction")]
    GridTooCoarse { have: u32, need: u32 },

    #[error("not a density matrix: {reason}")]
    InvalidDensity { reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
