use std::fmt;

use polygons::{BoundarySignature, Orientation};
use qalgebra::LaurentPoly;
use serde::Serialize;

use crate::irrep::{dim, factor_action, Action, Generator};
use crate::matrix::Matrix;
use crate::OracleError;

/// One tensor factor: `V_a` or its dual.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Factor {
    pub a: u32,
    pub dual: bool,
}

impl Factor {
    pub fn plain(a: u32) -> Self {
        Self { a, dual: false }
    }

    pub fn dual(a: u32) -> Self {
        Self { a, dual: true }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.a, if self.dual { "*" } else { "" })
    }
}

/// A tensor word of fundamental representations and their duals.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct RepObject(Vec<Factor>);

impl RepObject {
    pub fn new(factors: Vec<Factor>) -> Self {
        Self(factors)
    }

    pub fn unit() -> Self {
        Self(Vec::new())
    }

    pub fn factors(&self) -> &[Factor] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn dims(&self, n: u32) -> Vec<usize> {
        self.0.iter().map(|f| dim(n, i64::from(f.a))).collect()
    }

    pub fn dim(&self, n: u32) -> usize {
        self.dims(n).iter().product()
    }

    pub fn concat(&self, other: &RepObject) -> RepObject {
        RepObject(self.0.iter().chain(&other.0).copied().collect())
    }

    /// Boundary word of a web: incoming edges are duals.
    pub fn from_boundary(n: u32, boundary: &BoundarySignature) -> Result<Self, OracleError> {
        boundary
            .edges()
            .iter()
            .map(|&(x, o)| {
                if x < 0 || x > i64::from(n) {
                    return Err(OracleError::IndexOutOfRange { n, a: x });
                }
                Ok(Factor {
                    a: x as u32,
                    dual: o == Orientation::In,
                })
            })
            .collect::<Result<Vec<_>, _>>()
            .map(RepObject)
    }
}

impl fmt::Display for RepObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0.iter().map(Factor::to_string).collect();
        write!(f, "{}", parts.join("⊗"))
    }
}

pub const DEFAULT_BUDGET: usize = 100_000;

pub(crate) fn check_budget(needed: usize, budget: usize) -> Result<(), OracleError> {
    if needed > budget {
        Err(OracleError::BudgetExceeded { needed, budget })
    } else {
        Ok(())
    }
}

/// A morphism `source → target` of `U_q(sl_n)`-modules, stored as a dense
/// matrix whose rows and columns run over the multi-indices of the words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivariantTensor {
    n: u32,
    source: RepObject,
    target: RepObject,
    matrix: Matrix,
}

/// A generator whose two sides disagree, and where.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquivarianceViolation {
    pub generator: String,
    pub row: usize,
    pub col: usize,
}

impl EquivariantTensor {
    pub fn new(n: u32, source: RepObject, target: RepObject, matrix: Matrix) -> Result<Self, OracleError> {
        let (r, c) = (target.dim(n), source.dim(n));
        if (matrix.rows(), matrix.cols()) != (r, c) {
            return Err(OracleError::ShapeMismatch(format!(
                "{source} → {target} needs {r}x{c}, got {}x{}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        Ok(Self {
            n,
            source,
            target,
            matrix,
        })
    }

    pub fn zeros(n: u32, source: RepObject, target: RepObject, budget: usize) -> Result<Self, OracleError> {
        let (r, c) = (target.dim(n), source.dim(n));
        check_budget(r * c, budget)?;
        Ok(Self {
            n,
            source,
            target,
            matrix: Matrix::zeros(r, c),
        })
    }

    pub fn identity(n: u32, obj: RepObject) -> Self {
        let d = obj.dim(n);
        Self {
            n,
            source: obj.clone(),
            target: obj,
            matrix: Matrix::identity(d),
        }
    }

    /// The scalar `c` as an endomorphism of the unit object.
    pub fn scalar(n: u32, c: LaurentPoly) -> Self {
        Self {
            n,
            source: RepObject::unit(),
            target: RepObject::unit(),
            matrix: Matrix::diagonal(vec![c]),
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn source(&self) -> &RepObject {
        &self.source
    }

    pub fn target(&self) -> &RepObject {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn len(&self) -> usize {
        self.matrix.data().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    /// Entry at target multi-index `t` and source multi-index `s`.
    pub fn get(&self, t: &[usize], s: &[usize]) -> &LaurentPoly {
        let row = flatten(&self.target.dims(self.n), t);
        let col = flatten(&self.source.dims(self.n), s);
        self.matrix.get(row, col)
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &EquivariantTensor) -> Result<Self, OracleError> {
        if self.n != inner.n || self.source != inner.target {
            return Err(OracleError::ShapeMismatch(format!(
                "cannot compose {} → {} after {} → {}",
                self.source, self.target, inner.source, inner.target
            )));
        }
        Ok(Self {
            n: self.n,
            source: inner.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.mul(&inner.matrix),
        })
    }

    /// `self ⊗ other`, words concatenated.
    pub fn tensor(&self, other: &EquivariantTensor) -> Result<Self, OracleError> {
        if self.n != other.n {
            return Err(OracleError::ShapeMismatch("levels differ".into()));
        }
        Ok(Self {
            n: self.n,
            source: self.source.concat(&other.source),
            target: self.target.concat(&other.target),
            matrix: self.matrix.kron(&other.matrix),
        })
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        Self {
            matrix: self.matrix.scale(c),
            ..self.clone()
        }
    }

    pub fn add(&self, other: &EquivariantTensor) -> Result<Self, OracleError> {
        if self.n != other.n || self.source != other.source || self.target != other.target {
            return Err(OracleError::ShapeMismatch("summands live in different spaces".into()));
        }
        Ok(Self {
            matrix: self.matrix.add(&other.matrix),
            ..self.clone()
        })
    }

    /// `c` with `self = c · other`, if there is one.
    pub fn ratio(&self, other: &EquivariantTensor) -> Option<qalgebra::RatFunc> {
        if self.source != other.source || self.target != other.target {
            return None;
        }
        self.matrix.ratio(&other.matrix)
    }

    /// Places where `ρ_target(Z) ∘ T ≠ T ∘ ρ_source(Z)`, at most one per generator.
    pub fn equivariance_violations(&self) -> Result<Vec<EquivarianceViolation>, OracleError> {
        let n = self.n;
        let tgt = actions(n, &self.target)?;
        let src = actions(n, &self.source)?;
        let tdims = self.target.dims(n);
        let sdims = self.source.dims(n);
        let mut dims = tdims.clone();
        dims.extend(&sdims);
        let data = self.matrix.data();
        let mut out = Vec::new();
        for g in Generator::all(n) {
            let left = word_apply(data, &dims, 0, &tgt, g, false);
            let right = word_apply(data, &dims, tdims.len(), &src, g, true);
            let (left, right) = match g {
                // the unit object carries the counit
                Generator::E(_) | Generator::F(_) => (
                    left.unwrap_or_else(|| vec![LaurentPoly::zero(); data.len()]),
                    right.unwrap_or_else(|| vec![LaurentPoly::zero(); data.len()]),
                ),
                _ => (left.unwrap_or_else(|| data.to_vec()), right.unwrap_or_else(|| data.to_vec())),
            };
            if let Some(i) = (0..data.len()).find(|&i| left[i] != right[i]) {
                let c = self.matrix.cols();
                out.push(EquivarianceViolation {
                    generator: g.to_string(),
                    row: i / c.max(1),
                    col: i % c.max(1),
                });
            }
        }
        Ok(out)
    }

    pub fn is_equivariant(&self) -> Result<bool, OracleError> {
        Ok(self.equivariance_violations()?.is_empty())
    }
}

pub(crate) fn flatten(dims: &[usize], idx: &[usize]) -> usize {
    assert_eq!(dims.len(), idx.len(), "multi-index length mismatch");
    idx.iter().zip(dims).fold(0, |acc, (&i, &d)| {
        assert!(i < d, "index out of range");
        acc * d + i
    })
}

pub(crate) fn actions(n: u32, obj: &RepObject) -> Result<Vec<std::sync::Arc<Action>>, OracleError> {
    obj.factors().iter().map(|f| factor_action(n, f.a, f.dual)).collect()
}

/// `Σ_{r,c} m[r][c]` applied along `axis`: `out[.., r, ..] += m[r][c] · data[.., c, ..]`.
fn apply_axis(data: &[LaurentPoly], dims: &[usize], axis: usize, m: &Matrix, transpose: bool) -> Vec<LaurentPoly> {
    let inner: usize = dims[axis + 1..].iter().product();
    let d = dims[axis];
    let outer = data.len() / (d * inner).max(1);
    if m.is_diagonal() {
        let diag = m.diagonal_entries();
        let mut out = data.to_vec();
        for o in 0..outer {
            for (x, dx) in diag.iter().enumerate() {
                if dx.is_one() {
                    continue;
                }
                let base = (o * d + x) * inner;
                for v in &mut out[base..base + inner] {
                    if !v.is_zero() {
                        *v = &*v * dx;
                    }
                }
            }
        }
        return out;
    }
    let mut out = vec![LaurentPoly::zero(); data.len()];
    for (r, c, x) in m.nonzeros() {
        let (r, c) = if transpose { (c, r) } else { (r, c) };
        for o in 0..outer {
            let (dst, src) = ((o * d + r) * inner, (o * d + c) * inner);
            for i in 0..inner {
                let v = &data[src + i];
                if !v.is_zero() {
                    out[dst + i] += &(x * v);
                }
            }
        }
    }
    out
}

/// Coproduct action of `g` on the axes `offset..offset+word.len()`.
/// `Δ(E) = E ⊗ K + 1 ⊗ E`, `Δ(F) = F ⊗ 1 + K^-1 ⊗ F`, `Δ(K) = K ⊗ K`.
/// With `transpose` the factors act from the right (on a source word).
/// Returns `None` on an empty word, where the caller supplies the counit.
fn word_apply(
    data: &[LaurentPoly],
    dims: &[usize],
    offset: usize,
    word: &[std::sync::Arc<Action>],
    g: Generator,
    transpose: bool,
) -> Option<Vec<LaurentPoly>> {
    if word.is_empty() {
        return None;
    }
    let i = g.index();
    let m = word.len();
    match g {
        Generator::K(_) | Generator::KInv(_) => {
            let mut t = data.to_vec();
            for (p, act) in word.iter().enumerate() {
                t = apply_axis(&t, dims, offset + p, act.get(g), transpose);
            }
            Some(t)
        }
        Generator::E(_) | Generator::F(_) => {
            let mut total = vec![LaurentPoly::zero(); data.len()];
            for j in 0..m {
                let mut t = apply_axis(data, dims, offset + j, word[j].get(g), transpose);
                if t.iter().all(LaurentPoly::is_zero) {
                    continue;
                }
                let (range, kg) = match g {
                    Generator::E(_) => (j + 1..m, Generator::K(i)),
                    _ => (0..j, Generator::KInv(i)),
                };
                for p in range {
                    t = apply_axis(&t, dims, offset + p, word[p].get(kg), transpose);
                }
                for (x, y) in total.iter_mut().zip(&t) {
                    if !y.is_zero() {
                        *x += y;
                    }
                }
            }
            Some(total)
        }
    }
}
