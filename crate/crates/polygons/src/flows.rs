use std::fmt;

use serde::{Deserialize, Serialize};

use crate::PolygonError;

/// Orientation of a boundary edge: `In` is written `-`, `Out` is written `+`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Orientation {
    #[serde(rename = "-")]
    In,
    #[serde(rename = "+")]
    Out,
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Orientation::In => "-",
            Orientation::Out => "+",
        })
    }
}

/// Flow labels `(a, b)` around a polygon, indexed cyclically (`a_{k+1} = a_1`).
///
/// Both vectors have the same length `k`; `k = 0` describes closed loops.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FlowPair {
    a: Vec<i64>,
    b: Vec<i64>,
}

fn or_zero(x: Option<&i64>) -> i64 {
    x.copied().unwrap_or(0)
}

impl FlowPair {
    pub fn new(a: Vec<i64>, b: Vec<i64>) -> Result<Self, PolygonError> {
        if a.len() != b.len() {
            return Err(PolygonError::LengthMismatch {
                a: a.len(),
                b: b.len(),
            });
        }
        Ok(Self { a, b })
    }

    pub fn loops() -> Self {
        Self {
            a: Vec::new(),
            b: Vec::new(),
        }
    }

    pub fn k(&self) -> usize {
        self.a.len()
    }

    pub fn a(&self) -> &[i64] {
        &self.a
    }

    pub fn b(&self) -> &[i64] {
        &self.b
    }

    /// `a_i` with cyclic 1-based indexing.
    pub fn a_at(&self, i: usize) -> i64 {
        self.a[(i - 1) % self.k()]
    }

    pub fn b_at(&self, i: usize) -> i64 {
        self.b[(i - 1) % self.k()]
    }

    pub fn sum_a(&self) -> i64 {
        self.a.iter().sum()
    }

    pub fn sum_b(&self) -> i64 {
        self.b.iter().sum()
    }

    pub fn max_a(&self) -> i64 {
        or_zero(self.a.iter().max())
    }

    pub fn min_a(&self) -> i64 {
        or_zero(self.a.iter().min())
    }

    pub fn max_b(&self) -> i64 {
        or_zero(self.b.iter().max())
    }

    pub fn min_b(&self) -> i64 {
        or_zero(self.b.iter().min())
    }

    /// `Σb - max b`
    pub fn sumhat_b(&self) -> i64 {
        self.sum_b() - self.max_b()
    }

    /// `Σa - min a`
    pub fn sumtah_a(&self) -> i64 {
        self.sum_a() - self.min_a()
    }

    pub fn a_is_constant(&self) -> bool {
        self.k() > 0 && self.a.iter().all(|&x| x == self.a[0])
    }

    pub fn b_is_constant(&self) -> bool {
        self.k() > 0 && self.b.iter().all(|&x| x == self.b[0])
    }

    /// `a_i, a_{i+1} <= b_i <= n + a_i, n + a_{i+1}` for every `i`.
    pub fn is_admissible(&self, n: u32) -> bool {
        let n = i64::from(n);
        (1..=self.k()).all(|i| {
            let (ai, ai1, bi) = (self.a_at(i), self.a_at(i + 1), self.b_at(i));
            ai <= bi && ai1 <= bi && bi <= n + ai && bi <= n + ai1
        })
    }

    pub fn shifted(&self, c: i64) -> Self {
        Self {
            a: self.a.iter().map(|x| x + c).collect(),
            b: self.b.iter().map(|x| x + c).collect(),
        }
    }

    pub fn plus(&self, da: &[i64], db: &[i64]) -> Self {
        assert_eq!(da.len(), self.k());
        assert_eq!(db.len(), self.k());
        Self {
            a: self.a.iter().zip(da).map(|(x, y)| x + y).collect(),
            b: self.b.iter().zip(db).map(|(x, y)| x + y).collect(),
        }
    }
}

impl fmt::Display for FlowPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[i64]| v.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
        write!(f, "({}),({})", join(&self.a), join(&self.b))
    }
}

pub fn rotl(v: &[i64]) -> Vec<i64> {
    let mut out = v.to_vec();
    if !out.is_empty() {
        out.rotate_left(1);
    }
    out
}

pub fn rotr(v: &[i64]) -> Vec<i64> {
    let mut out = v.to_vec();
    if !out.is_empty() {
        out.rotate_right(1);
    }
    out
}

/// The cyclic boundary word of a polygon, read left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BoundarySignature(Vec<(i64, Orientation)>);

impl BoundarySignature {
    pub fn new(edges: Vec<(i64, Orientation)>) -> Self {
        Self(edges)
    }

    pub fn edges(&self) -> &[(i64, Orientation)] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn labels(&self) -> impl Iterator<Item = i64> + '_ {
        self.0.iter().map(|(x, _)| *x)
    }

    pub fn in_range(&self, n: u32) -> bool {
        self.labels().all(|x| (0..=i64::from(n)).contains(&x))
    }
}

impl fmt::Display for BoundarySignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, (x, o)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "({x},{o})")?;
        }
        write!(f, ")")
    }
}

/// `(b_k - a_1, -)(b_k - a_k, +) ... (b_1 - a_2, -)(b_1 - a_1, +)`.
pub fn boundary_label(flows: &FlowPair) -> BoundarySignature {
    let k = flows.k();
    let mut out = Vec::with_capacity(2 * k);
    for i in (1..=k).rev() {
        let bi = flows.b_at(i);
        out.push((bi - flows.a_at(i + 1), Orientation::In));
        out.push((bi - flows.a_at(i), Orientation::Out));
    }
    BoundarySignature(out)
}
