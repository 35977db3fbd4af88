use thiserror::Error;

use crate::qfield::QuadNum;

/// A coincidence of separation-point orbits found while inducing.
///
/// `point` is the shared boundary; `side` tells which induction hit it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Connection {
    pub side: Side,
    pub point: QuadNum,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Right,
    Left,
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Side::Right => f.write_str("right"),
            Side::Left => f.write_str("left"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("radicand {0} is not square-free")]
    NonSquareFreeRadicand(i64),
    #[error("radicand {0} must be at least 1")]
    NegativeRadicand(i64),
    #[error("elements of Q[sqrt({left})] and Q[sqrt({right})] cannot be combined")]
    RadicandMismatch { left: i64, right: i64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} does not have integral coefficients")]
    NonIntegralCoefficients(QuadNum),
    #[error("column {column}: {message}")]
    Parse { column: usize, message: String },

    #[error("alphabet is empty")]
    EmptyAlphabet,
    #[error("alphabet mismatch: {0}")]
    AlphabetMismatch(String),
    #[error("length of letter {letter} is not positive")]
    NonPositiveLength { letter: char },
    #[error("point {point} lies outside the domain [{lo}, {hi})")]
    OutOfDomain { point: QuadNum, lo: QuadNum, hi: QuadNum },
    #[error("semi-interval [{lo}, {hi}) is empty or not contained in the domain")]
    BadInterval { lo: QuadNum, hi: QuadNum },
    #[error("the permutation is decomposable, so the language depends on the starting point")]
    DecomposablePermutation,
    #[error("word {0} is not in the language")]
    WordNotInLanguage(String),
    #[error("not a coding morphism for the return words: {0}")]
    NotACodingMorphism(String),
    #[error("every candidate sum of translation values vanishes")]
    DegenerateTransformation,

    #[error("{side} induction hits a connection at {point} (step {step})", side = connection.side, point = connection.point)]
    ConnectionDetected { step: usize, connection: Connection },
    #[error("[{lo}, {hi}) is not admissible")]
    NotAdmissible { lo: QuadNum, hi: QuadNum },
    #[error("iteration cap of {cap} exceeded")]
    CapExceeded { cap: u64 },
    #[error("induction graph exceeds {budget} vertices")]
    VertexBudgetExceeded { budget: usize },
    #[error("not regular: {0}")]
    NotRegular(String),
    #[error("no primitive power found up to exponent {0}")]
    NoPrimitivePower(u32),
}

pub type Result<T> = std::result::Result<T, Error>;
