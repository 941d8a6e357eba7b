//! Exact scalars for the web calculus: Laurent polynomials in `q` with
//! arbitrary-precision integer coefficients, rational functions in `q`,
//! balanced quantum integers and binomials, and linear algebra over Q(q).

mod laurent;
pub mod linalg;
mod qnum;
mod ratfunc;
mod upoly;

pub use laurent::LaurentPoly;
pub use linalg::{in_span, nullspace, rank, rank_at, Echelon, NotInSpan};
pub use qnum::{qbinom, qint};
pub use ratfunc::RatFunc;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QError {
    #[error("cannot evaluate at q = 0")]
    ZeroEvaluationPoint,
    #[error("exponent {0} is out of range for evaluation")]
    ExponentOverflow(i64),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("rational function has a pole at q = {0}")]
    PoleAt(String),
    #[error("cannot parse Laurent polynomial from {0:?}")]
    Parse(String),
}

/// `q - q^-1`
pub fn q_minus_qinv() -> LaurentPoly {
    LaurentPoly::from_terms([(1, 1), (-1, -1)])
}
