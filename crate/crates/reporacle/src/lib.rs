//! Ground truth for the web calculus: the fundamental representations of
//! `U_q(sl_n)` in the Gel'fand-Tsetlin basis, the elementary intertwiners
//! between their tensor products, and exact evaluation of polygon webs.

mod closed;
mod irrep;
mod kernel;
mod maps;
mod matrix;
mod polygon;
mod square;
mod tensor;

pub use closed::{bigon, circle};
pub use irrep::{build_irrep, dim, dual_action, hopf_violations, off0, Action, Generator, Irrep};
pub use kernel::{kernel_rank, IdentifiedKernel, KernelReport};
pub use maps::{
    copairing, crossing, d_map, d_matrix, flow_vertex, pairing, tau, tau_diag, vin, vin_sparse, vout, vout_sparse,
    FlowKind, Side, Sparse3, TagConvention,
};
pub use matrix::Matrix;
pub use polygon::{rep_polygon, rep_web, rep_websum};
pub use square::{commuting_square_check, empty_block, gt_project, gt_restrict, SquareEntry, SquareReport};
pub use tensor::{EquivarianceViolation, EquivariantTensor, Factor, RepObject, DEFAULT_BUDGET};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("fundamental index {a} is out of range for n = {n}")]
    IndexOutOfRange { n: u32, a: i64 },
    #[error("vertex labels {a} + {b} + {c} must be nonnegative and sum to n = {n}")]
    VertexLabels { n: u32, a: i64, b: i64, c: i64 },
    #[error("needs {needed} tensor entries, budget is {budget}")]
    BudgetExceeded { needed: usize, budget: usize },
    #[error("not admissible: {0}")]
    NotAdmissible(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error(transparent)]
    Branch(#[from] branching::BranchError),
}
