use thiserror::Error;

use crate::space::Point;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("n must be a positive integer")]
    ZeroN,

    #[error("n = {n} gives |Ω_n| = n·10^k beyond the supported capacity of 2^63 points")]
    CapacityExceeded { n: u64 },

    #[error("|Ω_{n}| = {size} points exceeds the cap of {cap}")]
    PointCapExceeded { n: u64, size: u64, cap: u64 },

    #[error("point ({}, {}) lies outside Ω_{n}", point.x, point.y)]
    PointOutOfRange { n: u64, point: Point },

    #[error("{n} is neither a whole nor a one-half Guinness number")]
    NotGuinness { n: u64 },

    #[error("G_{n} has {digits} digits, more than the budget of {budget}")]
    BudgetExceeded { n: u64, digits: u64, budget: u64 },

    #[error("invalid range: lower bound {lo} is above upper bound {hi}")]
    InvalidRange { lo: u64, hi: u64 },

    #[error("invalid decimal digit {found:?} at position {position}")]
    InvalidDigit { found: char, position: usize },

    #[error("empty decimal string")]
    EmptyNumber,

    #[error("chunk width must be between 1 and 18, got {0}")]
    InvalidChunkWidth(u32),

    #[error("need at least {needed} samples, got {got}")]
    InsufficientSample { needed: usize, got: usize },

    #[error("a {width}x{height} image exceeds the pixel budget of {budget}")]
    ImageTooLarge {
        width: u64,
        height: u64,
        budget: u64,
    },

    #[error("{0} must be positive")]
    NonPositive(&'static str),
}
