//! Polygon webs `P^n_{a,b}{l}` and `Q^n_{a,b}{l}`, their boundary words, the
//! identifications between them, and formal linear combinations.

mod flows;
mod web;
mod websum;

pub use flows::{boundary_label, rotl, rotr, BoundarySignature, FlowPair, Orientation};
pub use web::{l_range, make_web, make_web_raw, rotate_p_to_q, rotate_q_to_p, web_eq, Family, PolygonWeb, Web};
pub use websum::{format_combination, WebSum};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolygonError {
    #[error("flow vectors have different lengths ({a} and {b})")]
    LengthMismatch { a: usize, b: usize },
    #[error("boundary mismatch: expected {expected}, found {found}")]
    BoundaryMismatch { expected: String, found: String },
    #[error("level mismatch: {0} vs {1}")]
    LevelMismatch(u32, u32),
}

/// Parses `"0,1,2"` into a flow vector; the empty string is the empty vector.
pub fn parse_flow_vector(s: &str) -> Result<Vec<i64>, std::num::ParseIntError> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(|x| x.trim().parse()).collect()
}
