use thiserror::Error;

use crate::series::Var;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot combine a series in {left} with a series in {right}")]
    VarMismatch { left: Var, right: Var },

    #[error("series has zero constant term and cannot be inverted")]
    NotInvertible,

    #[error("{op} requires a zero constant term")]
    NonzeroConstant { op: &'static str },

    #[error("{op} needs {needed} leading zero coefficients")]
    Valuation { op: &'static str, needed: usize },

    #[error("series known to order {available}, but order {needed} was requested")]
    Truncated { needed: usize, available: usize },

    #[error("coefficient {index} is not an integer: {value}")]
    NotInteger { index: usize, value: String },

    #[error("{what} = {requested} exceeds the limit {limit}")]
    Guard {
        what: &'static str,
        requested: u64,
        limit: u64,
    },

    #[error("{0}")]
    Domain(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
