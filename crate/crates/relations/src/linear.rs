use std::collections::BTreeSet;

use polygons::{Family, PolygonWeb, WebSum};
use qalgebra::{in_span, rank, NotInSpan, RatFunc};

use crate::combination::Combination;

/// Coordinates of web sums over the union of their slots.
pub fn columns(sums: &[&WebSum]) -> (Vec<PolygonWeb>, Vec<Vec<RatFunc>>) {
    let slots: Vec<PolygonWeb> = sums
        .iter()
        .flat_map(|s| s.terms().map(|(w, _)| w.clone()))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let cols = sums
        .iter()
        .map(|s| slots.iter().map(|w| RatFunc::from(s.coeff(w))).collect())
        .collect();
    (slots, cols)
}

pub fn span_rank(cols: &[Vec<RatFunc>]) -> usize {
    if cols.is_empty() {
        0
    } else {
        rank(cols)
    }
}

/// Coefficients `c` with `v = Σ c_i basis_i`, exactly over ℚ(q).
pub fn express(v: &WebSum, basis: &[WebSum]) -> Result<Vec<RatFunc>, NotInSpan> {
    let mut all: Vec<&WebSum> = basis.iter().collect();
    all.push(v);
    let (_, mut cols) = columns(&all);
    let target = cols.pop().expect("v was pushed");
    in_span(&target, &cols)
}

/// Coordinates of formal combinations, before any web identification.
pub fn raw_columns(xs: &[&Combination]) -> (Vec<(Family, i64)>, Vec<Vec<RatFunc>>) {
    let slots: Vec<(Family, i64)> = xs
        .iter()
        .flat_map(|x| x.terms().map(|(f, l, _)| (f, l)))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let cols = xs
        .iter()
        .map(|x| slots.iter().map(|&(f, l)| RatFunc::from(x.coeff(f, l))).collect())
        .collect();
    (slots, cols)
}

pub fn raw_rank(xs: &[&Combination]) -> usize {
    span_rank(&raw_columns(xs).1)
}

/// Like [`express`] but in the free span of the P and Q symbols.
pub fn express_raw(v: &Combination, basis: &[Combination]) -> Result<Vec<RatFunc>, NotInSpan> {
    let mut all: Vec<&Combination> = basis.iter().collect();
    all.push(v);
    let (_, mut cols) = raw_columns(&all);
    let target = cols.pop().expect("v was pushed");
    in_span(&target, &cols)
}
