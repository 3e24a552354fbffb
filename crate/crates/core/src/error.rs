use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid rational literal `{0}`")]
pub struct ParseRationalError(pub String);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("variable count mismatch: {left} vs {right}")]
    VarCountMismatch { left: usize, right: usize },
    #[error("evaluation point has {got} coordinates, expected {expected}")]
    PointLength { expected: usize, got: usize },
    #[error("truncation order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("index 0 is not a valid signed index")]
    ZeroIndex,
    #[error("index {index} out of range for q({rank})")]
    OutOfRange { index: i32, rank: usize },
    #[error("rank must be at least 1")]
    ZeroRank,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PbwError {
    #[error("Harish-Chandra projection needs weight-zero input, word {word} has weight {weight:?}")]
    NonZeroWeight { word: String, weight: Vec<i32> },
    #[error("odd part of chi(c_{n}) for q({rank}) does not vanish: {detail}")]
    OddPartNonZero { n: usize, rank: usize, detail: String },
    #[error("c_{0} is only meaningful for odd n")]
    EvenOrder(usize),
    #[error(transparent)]
    Structure(#[from] StructureError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharacterError {
    #[error(
        "closed form is singular: lambda_{i}(lambda_{i}-1) = lambda_{j}(lambda_{j}-1) = {value}"
    )]
    Singular { i: usize, j: usize, value: String },
    #[error("engines disagree for m={m}, N={rank}: {detail}")]
    EngineDisagreement { m: usize, rank: usize, detail: String },
    #[error("series expansion has constant term {0}, expected 1")]
    BadConstantTerm(String),
    #[error("rank must be at least 1")]
    ZeroRank,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NatRepError {
    #[error("path budget exceeded for n={n}, N={rank} (limits: n <= 9, N <= 4)")]
    BudgetExceeded { n: usize, rank: usize },
    #[error("rho(c_{n}) for N={rank} is not scalar:\n{dump}")]
    NotScalar { n: usize, rank: usize, dump: String },
    #[error("rho(c_{n}) for N={rank} acts by {found}, expected {expected}:\n{dump}")]
    ScalarMismatch {
        n: usize,
        rank: usize,
        found: String,
        expected: String,
        dump: String,
    },
    #[error(transparent)]
    Character(#[from] CharacterError),
}
