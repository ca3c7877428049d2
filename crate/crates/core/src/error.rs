use thiserror::Error;

use crate::fraction::Fraction;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("denominator must be positive, got {0}")]
    NonPositiveDenominator(i64),
    #[error("{num}/{den} lies outside [0, 1]")]
    OutsideUnitInterval { num: i64, den: i64 },
    #[error("cannot parse {0:?} as a fraction h/k")]
    Parse(String),
    #[error("{text:?} is not reduced; write {reduced} instead")]
    NotReduced { text: String, reduced: Fraction },
    #[error("integer overflow")]
    Overflow,
    #[error("matrix determinant is {0}, expected +1 or -1")]
    NotUnimodular(i64),
    #[error("image {num}/{den} of {source_fraction} is not a fraction in [0, 1]")]
    DomainViolation {
        source_fraction: Fraction,
        num: i64,
        den: i64,
    },
    #[error("invalid parameters n = {n}, m = {m}: {reason}")]
    InvalidParameters {
        n: i64,
        m: i64,
        reason: &'static str,
    },
    #[error("{fraction} does not belong to {sequence}")]
    NotMember {
        fraction: Fraction,
        sequence: String,
    },
    #[error("{0} is an endpoint of the sequence")]
    Endpoint(Fraction),
    #[error("order {n} exceeds the enumeration bound {bound}")]
    SizeBound { n: i64, bound: i64 },
    #[error("formula variants for {what} disagree: {values:?}")]
    FormulaMismatch {
        what: &'static str,
        values: Vec<i64>,
    },
    #[error("map {map} requires {requirement}, got n = {n}, m = {m}")]
    ConstraintViolated {
        map: &'static str,
        requirement: &'static str,
        n: i64,
        m: i64,
    },
    #[error("unknown map id {0:?}")]
    UnknownMap(String),
    #[error("{0}")]
    Unsupported(&'static str),
}
