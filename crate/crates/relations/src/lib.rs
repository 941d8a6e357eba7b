//! Square-switch (SS, SS′) and Kekulé (APR, AQR) relation spaces between
//! polygon webs, the dual functionals cutting out APR, and the dGT-inductive
//! kernel check.

mod combination;
mod diagnostics;
mod dual;
pub mod golden;
mod inductive;
pub mod linear;
mod spaces;

pub use combination::Combination;
pub use diagnostics::{breadth, circumference, circumference_of, is_hexagonal};
pub use dual::{apr_complement, dgt_empty_pullback, pair, pair_websum, DualFunctional};
pub use inductive::{verify_kernel_inductive, Failure, InductiveReport, Witness};
pub use spaces::{
    apr_span, aqr_by_rotation, aqr_span, known_relations, span, ss_prime_span, ss_span, RelationLabel,
    RelationSpace,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RelationError {
    #[error("square-switch relations need k = 2, got k = {0}")]
    NotSquare(usize),
    #[error("functional and combination live on different flows or levels")]
    PairingMismatch,
    #[error("unknown relation family {0:?}")]
    UnknownLabel(String),
}
