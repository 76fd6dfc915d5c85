use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("q must be a positive integer, got {0}")]
    InvalidQ(i64),

    #[error("expected {expected} coefficients a_2..a_q, got {got}")]
    WrongCoefficientCount { expected: usize, got: usize },

    #[error("coefficient a_{index} = {value} must be at least 1")]
    CoefficientBelowOne { index: usize, value: i64 },

    #[error("last coefficient a_q = {0} must be at least 2")]
    LastCoefficientTooSmall(i64),

    #[error("{name} must be a positive integer")]
    NotPositive { name: &'static str },

    #[error("order k = {k} is below q = {q}; the truncation would cut into the a-terms")]
    OrderBelowQ { k: usize, q: usize },

    #[error("need at least {need} terms, window has {have}")]
    WindowTooShort { need: usize, have: usize },

    #[error("window has order {got}, rectangle requires order {expected}")]
    OrderMismatch { expected: usize, got: usize },

    #[error("leading coefficient must be -1, got {0}")]
    LeadingCoefficient(BigInt),

    #[error("need Taylor coefficients up to degree {need}, got {have} coefficients")]
    InsufficientCoefficients { need: usize, have: usize },

    #[error("rectangle rows have differing lengths")]
    RaggedRows,

    #[error("coefficient list is empty")]
    EmptyCoefficients,

    #[error("series denominator must have constant term 1 or -1, got {0}")]
    NonUnitDenominator(BigInt),

    #[error("row {row} is entirely zero; its last nonzero position is undefined")]
    UndefinedProfile { row: usize },

    #[error("schemes disagree at R[{t},{s}]: {g_value} (G recursion) vs {t_value} (T recursion)")]
    SchemeMismatch {
        t: usize,
        s: usize,
        g_value: BigInt,
        t_value: BigInt,
    },

    #[error("invalid family spec JSON: {0}")]
    SpecJson(String),
}
