use polygons::{boundary_label, BoundarySignature, FlowPair, WebSum};

/// Number of terms of a relation.
pub fn breadth(x: &WebSum) -> usize {
    x.len()
}

/// Longest cyclic alternating in/out sequence of edges with labels in `1..n`.
///
/// That is the number of maximal runs of equal orientation, read cyclically
/// after dropping trivial edges; a single run gives 0.
pub fn circumference_of(n: u32, boundary: &BoundarySignature) -> usize {
    let n = i64::from(n);
    let orient: Vec<_> = boundary
        .edges()
        .iter()
        .filter(|(x, _)| (1..n).contains(x))
        .map(|(_, o)| *o)
        .collect();
    let len = orient.len();
    // cyclic orientation changes = number of runs (or 0 for a single run)
    (0..len).filter(|&i| orient[i] != orient[(i + 1) % len]).count()
}

pub fn circumference(n: u32, flows: &FlowPair) -> usize {
    circumference_of(n, &boundary_label(flows))
}

pub fn is_hexagonal(n: u32, flows: &FlowPair) -> bool {
    circumference(n, flows) >= 6
}
