//! Gaussian elimination over Q(q).
//!
//! Matrices are given as lists of columns, since the callers think in terms of
//! "is this vector a combination of those".  Elimination streams over rows and
//! keeps a reduced row echelon form, so tall sparse systems stay cheap.

use num_rational::BigRational;
use num_traits::Zero;

use crate::RatFunc;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("vector is not in the span: residual is nonzero at row {row}")]
pub struct NotInSpan {
    /// A coordinate at which no combination of the basis can match the vector.
    pub row: usize,
}

/// Incremental reduced row echelon form over Q(q).
#[derive(Debug, Clone)]
pub struct Echelon {
    ncols: usize,
    rows: Vec<Vec<RatFunc>>,
    pivots: Vec<usize>,
    /// Source row index that introduced each pivot.
    origin: Vec<usize>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Self {
            ncols,
            rows: Vec::new(),
            pivots: Vec::new(),
            origin: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// The reduced rows, in pivot insertion order.
    pub fn rows(&self) -> &[Vec<RatFunc>] {
        &self.rows
    }

    /// Reduce `row` against the current form; returns true if it added a pivot.
    pub fn insert(&mut self, mut row: Vec<RatFunc>, origin: usize) -> bool {
        assert_eq!(row.len(), self.ncols, "row length mismatch");
        if self.rows.len() == self.ncols || row.iter().all(RatFunc::is_zero) {
            return false;
        }
        for (r, &p) in self.rows.iter().zip(&self.pivots) {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (x, y) in row.iter_mut().zip(r) {
                if !y.is_zero() {
                    *x = &*x - &(&f * y);
                }
            }
        }
        let Some(p) = row.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = row[p].inv().expect("pivot is nonzero");
        for x in row.iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        for r in self.rows.iter_mut() {
            if r[p].is_zero() {
                continue;
            }
            let f = r[p].clone();
            for (x, y) in r.iter_mut().zip(&row) {
                if !y.is_zero() {
                    *x = &*x - &(&f * y);
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.rows.insert(at, row);
        self.pivots.insert(at, p);
        self.origin.insert(at, origin);
        true
    }

    /// Basis of the right null space of everything inserted so far.
    pub fn nullspace(&self) -> Vec<Vec<RatFunc>> {
        let mut out = Vec::new();
        for free in (0..self.ncols).filter(|c| !self.pivots.contains(c)) {
            let mut v = vec![RatFunc::zero(); self.ncols];
            v[free] = RatFunc::one();
            for (r, &p) in self.rows.iter().zip(&self.pivots) {
                v[p] = -&r[free];
            }
            out.push(v);
        }
        out
    }
}

fn rows_of(columns: &[Vec<RatFunc>]) -> impl Iterator<Item = (usize, Vec<RatFunc>)> + '_ {
    let nrows = columns.first().map_or(0, Vec::len);
    for c in columns {
        assert_eq!(c.len(), nrows, "all columns must have the same length");
    }
    (0..nrows).map(move |i| (i, columns.iter().map(|c| c[i].clone()).collect()))
}

/// Basis of `{x : sum_i x_i columns[i] = 0}`.
pub fn nullspace(columns: &[Vec<RatFunc>]) -> Vec<Vec<RatFunc>> {
    let mut ech = Echelon::new(columns.len());
    for (i, row) in rows_of(columns) {
        ech.insert(row, i);
        if ech.rank() == columns.len() {
            break;
        }
    }
    ech.nullspace()
}

/// Rank of the matrix with the given columns.
pub fn rank(columns: &[Vec<RatFunc>]) -> usize {
    columns.len() - nullspace(columns).len()
}

/// Coefficients `c` with `v = sum_i c_i basis[i]`, or the row where that fails.
pub fn in_span(v: &[RatFunc], basis: &[Vec<RatFunc>]) -> Result<Vec<RatFunc>, NotInSpan> {
    if basis.is_empty() {
        return match v.iter().position(|x| !x.is_zero()) {
            Some(row) => Err(NotInSpan { row }),
            None => Ok(Vec::new()),
        };
    }
    let nb = basis.len();
    assert_eq!(v.len(), basis[0].len(), "vector length mismatch");
    let mut ech = Echelon::new(nb + 1);
    for (i, mut row) in rows_of(basis) {
        row.push(v[i].clone());
        ech.insert(row, i);
    }
    if let Some(k) = ech.pivots.iter().position(|&p| p == nb) {
        return Err(NotInSpan {
            row: ech.origin[k],
        });
    }
    let mut coeffs = vec![RatFunc::zero(); nb];
    for (r, &p) in ech.rows.iter().zip(&ech.pivots) {
        coeffs[p] = r[nb].clone();
    }
    Ok(coeffs)
}

/// Rank after substituting `q = q0`; never exceeds the generic rank.
pub fn rank_at(columns: &[Vec<RatFunc>], q0: &BigRational) -> Result<usize, crate::QError> {
    let ncols = columns.len();
    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    for (_, row) in rows_of(columns) {
        let mut row = row
            .iter()
            .map(|x| x.eval_at(q0))
            .collect::<Result<Vec<_>, _>>()?;
        for (r, &p) in rows.iter().zip(&pivots) {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone() / &r[p];
            for (x, y) in row.iter_mut().zip(r) {
                *x -= &f * y;
            }
        }
        if let Some(p) = row.iter().position(|x| !x.is_zero()) {
            rows.push(row);
            pivots.push(p);
            if rows.len() == ncols {
                break;
            }
        }
    }
    Ok(rows.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::LaurentPoly;

    fn rf(s: &str) -> RatFunc {
        RatFunc::from(s.parse::<LaurentPoly>().unwrap())
    }

    #[test]
    fn nullspace_of_dependent_columns() {
        let c0 = vec![rf("1"), rf("q")];
        let c1 = vec![rf("q"), rf("q^2")];
        let ns = nullspace(&[c0, c1]);
        assert_eq!(ns.len(), 1);
        assert_eq!(ns[0], vec![-rf("q"), rf("1")]);
    }

    #[test]
    fn span_membership() {
        let b0 = vec![rf("1"), rf("0"), rf("q")];
        let b1 = vec![rf("0"), rf("1"), rf("1")];
        let v = vec![rf("2"), rf("q^-1"), rf("2q + q^-1")];
        let c = in_span(&v, &[b0.clone(), b1.clone()]).unwrap();
        assert_eq!(c, vec![rf("2"), rf("q^-1")]);
        let w = vec![rf("2"), rf("q^-1"), rf("2q")];
        assert_eq!(in_span(&w, &[b0, b1]), Err(NotInSpan { row: 2 }));
    }
}
