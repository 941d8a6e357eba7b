//! The diagrammatic Gel'fand–Tsetlin functor `dGT: Sym_n -> Mat(Sym_{n-1})`
//! evaluated on polygon webs by summing over reduction paths.
//!
//! A reduction path is encoded by a pattern `(a', b')`; the web it leaves
//! behind is the same polygon at level `n - 1` with flows `(a + a', b + b')`.
//! Matrix entries are indexed by the set `s` of boundary points the path
//! traverses, numbered `1..=2k` from the right end of the boundary word
//! (so `2i - 1` is the outgoing edge `b_i - a_i` and `2i` the incoming edge
//! `b_i - a_{i+1}`).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use polygons::{boundary_label, make_web, BoundarySignature, Family, FlowPair, PolygonError, PolygonWeb, Web, WebSum};
use qalgebra::LaurentPoly;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BranchError {
    #[error("pattern is for family {pattern}, web is {web}")]
    FamilyMismatch { pattern: Family, web: Family },
    #[error("pattern has length {pattern}, web has k = {k}")]
    LengthMismatch { pattern: usize, k: usize },
    #[error("pattern is not admissible")]
    NotAdmissible,
    #[error("dGT is undefined at level 0")]
    LevelZero,
    #[error(transparent)]
    Polygon(#[from] PolygonError),
}

/// A reduction path on a polygon, as the flow increments `(a', b')`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ReductionPattern {
    family: Family,
    a_prime: Vec<i64>,
    b_prime: Vec<i64>,
}

fn dot(u: &[i64], v: &[i64]) -> i64 {
    u.iter().zip(v).map(|(x, y)| x * y).sum()
}

fn cyc(v: &[i64], i: usize) -> i64 {
    v[i % v.len()]
}

impl ReductionPattern {
    pub fn new(family: Family, a_prime: Vec<i64>, b_prime: Vec<i64>) -> Result<Self, BranchError> {
        if a_prime.len() != b_prime.len() {
            return Err(BranchError::LengthMismatch {
                pattern: a_prime.len(),
                k: b_prime.len(),
            });
        }
        let p = Self {
            family,
            a_prime,
            b_prime,
        };
        if p.is_admissible() {
            Ok(p)
        } else {
            Err(BranchError::NotAdmissible)
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn a_prime(&self) -> &[i64] {
        &self.a_prime
    }

    pub fn b_prime(&self) -> &[i64] {
        &self.b_prime
    }

    pub fn k(&self) -> usize {
        self.a_prime.len()
    }

    /// `m(a', b') = Σa' - Σb'`
    pub fn m(&self) -> i64 {
        self.a_prime.iter().sum::<i64>() - self.b_prime.iter().sum::<i64>()
    }

    fn is_admissible(&self) -> bool {
        let (a, b) = (&self.a_prime, &self.b_prime);
        let k = self.k();
        let a_ok = a.iter().all(|x| matches!(x, 0 | 1));
        match self.family {
            Family::P => {
                a_ok && b.iter().all(|x| matches!(x, 0 | 1))
                    && (0..k).all(|i| b[i] <= a[i] && b[i] <= cyc(a, i + 1))
            }
            Family::Q => {
                a_ok && b.iter().all(|x| matches!(x, -1 | 0))
                    && (0..k).all(|i| a[i] * b[i] == 0 && cyc(a, i + 1) * b[i] == 0)
            }
        }
    }

    /// Boundary points (1-based, numbered from the right) traversed by the path.
    pub fn traversed(&self) -> BTreeSet<usize> {
        let (a, b) = (&self.a_prime, &self.b_prime);
        let k = self.k();
        let mut s = BTreeSet::new();
        for i in 0..k {
            let (odd, even) = match self.family {
                Family::P => (a[i] == 1 && b[i] == 0, cyc(a, i + 1) == 1 && b[i] == 0),
                Family::Q => (a[i] == 1 || b[i] == -1, cyc(a, i + 1) == 1 || b[i] == -1),
            };
            if odd {
                s.insert(2 * i + 1);
            }
            if even {
                s.insert(2 * i + 2);
            }
        }
        s
    }
}

/// Every admissible pattern of the given family and length, in lexicographic order.
pub fn admissible_patterns(family: Family, k: usize) -> Vec<ReductionPattern> {
    let b_vals: [i64; 2] = match family {
        Family::P => [0, 1],
        Family::Q => [-1, 0],
    };
    let mut out = Vec::new();
    for am in 0..(1u64 << k) {
        let a: Vec<i64> = (0..k).map(|i| ((am >> (k - 1 - i)) & 1) as i64).collect();
        for bm in 0..(1u64 << k) {
            let b: Vec<i64> = (0..k)
                .map(|i| b_vals[((bm >> (k - 1 - i)) & 1) as usize])
                .collect();
            if let Ok(p) = ReductionPattern::new(family, a.clone(), b) {
                out.push(p);
            }
        }
    }
    out
}

/// The monomial multiplying the `(a', b')` term of `dGT(w)`.
pub fn dgt_coefficient(w: &PolygonWeb, pat: &ReductionPattern) -> Result<LaurentPoly, BranchError> {
    if pat.family() != w.family() {
        return Err(BranchError::FamilyMismatch {
            pattern: pat.family(),
            web: w.family(),
        });
    }
    let f = w.flows();
    let k = f.k();
    if pat.k() != k || k == 0 {
        return Err(BranchError::LengthMismatch { pattern: pat.k(), k });
    }
    let (n, l) = (i64::from(w.n()), w.l());
    let (a, b) = (f.a(), f.b());
    let (ap, bp) = (pat.a_prime(), pat.b_prime());
    let rotl_a = polygons::rotl(a);
    let a_plus_rotl: Vec<i64> = a.iter().zip(&rotl_a).map(|(x, y)| x + y).collect();
    let sign = dot(bp, &a_plus_rotl);
    let (sum_ap, sum_bp): (i64, i64) = (ap.iter().sum(), bp.iter().sum());
    let e = match w.family() {
        Family::P => {
            l * (sum_bp - sum_ap + 1) + dot(&polygons::rotl(ap), b) - dot(bp, a) - a[0] - n * ap[0]
        }
        Family::Q => {
            l * (sum_ap - sum_bp - k as i64 + 1) + f.sum_b() + n * sum_bp + dot(bp, &rotl_a)
                - dot(ap, b)
                - a[0]
                - n * ap[0]
        }
    };
    Ok(LaurentPoly::signed_q_pow(sign, e))
}

/// Matrix entry of a dGT image: traversed points and the resulting boundary.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BranchKey {
    s: Vec<usize>,
    boundary: BoundarySignature,
}

impl BranchKey {
    /// Key for the points `s` of `source`; the traversed labels drop by one.
    pub fn new(source: &BoundarySignature, s: &BTreeSet<usize>) -> Self {
        let len = source.len();
        let edges = source
            .edges()
            .iter()
            .enumerate()
            .map(|(j, &(x, o))| {
                let p = len - j;
                (if s.contains(&p) { x - 1 } else { x }, o)
            })
            .collect();
        Self {
            s: s.iter().copied().collect(),
            boundary: BoundarySignature::new(edges),
        }
    }

    pub fn s(&self) -> &[usize] {
        &self.s
    }

    pub fn boundary(&self) -> &BoundarySignature {
        &self.boundary
    }

    /// Whether boundary point `p` (1-based, from the right) is traversed.
    pub fn contains(&self, p: usize) -> bool {
        self.s.binary_search(&p).is_ok()
    }
}

impl fmt::Display for BranchKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.s.iter().map(usize::to_string).collect();
        write!(f, "s=[{}]", parts.join(","))
    }
}

/// One reduction path's contribution to `dGT(w)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchTerm {
    /// `None` for the two loop terms (k = 0).
    pub pattern: Option<ReductionPattern>,
    pub key: BranchKey,
    pub coeff: LaurentPoly,
    pub target: Web,
}

/// All path contributions to `dGT(w)`, including those whose target is zero.
pub fn dgt_terms(w: &PolygonWeb) -> Result<Vec<BranchTerm>, BranchError> {
    if w.n() == 0 {
        return Err(BranchError::LevelZero);
    }
    let f = w.flows();
    let n1 = w.n() - 1;
    let source = w.boundary();
    if f.k() == 0 {
        // Q-loops are P-loops; the inner and outer paths both stay inside
        let key = BranchKey::new(&source, &BTreeSet::new());
        let l = w.l();
        let n = i64::from(w.n());
        return Ok(vec![
            BranchTerm {
                pattern: None,
                key: key.clone(),
                coeff: LaurentPoly::q_pow(l),
                target: make_web(Family::P, n1, f, l),
            },
            BranchTerm {
                pattern: None,
                key,
                coeff: LaurentPoly::q_pow(l - n),
                target: make_web(Family::P, n1, f, l - 1),
            },
        ]);
    }
    admissible_patterns(w.family(), f.k())
        .into_iter()
        .map(|pat| {
            let coeff = dgt_coefficient(w, &pat)?;
            let target_flows = f.plus(pat.a_prime(), pat.b_prime());
            let key = BranchKey::new(&source, &pat.traversed());
            debug_assert_eq!(key.boundary, boundary_label(&target_flows));
            Ok(BranchTerm {
                target: make_web(w.family(), n1, &target_flows, w.l()),
                key,
                coeff,
                pattern: Some(pat),
            })
        })
        .collect()
}

/// The matrix `dGT(x)`: for each entry, a combination of webs at level `n - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchImage {
    level: u32,
    entries: BTreeMap<BranchKey, WebSum>,
}

impl BranchImage {
    pub fn empty(level: u32) -> Self {
        Self {
            level,
            entries: BTreeMap::new(),
        }
    }

    /// Target level `n - 1`.
    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn entries(&self) -> impl Iterator<Item = (&BranchKey, &WebSum)> {
        self.entries.iter()
    }

    pub fn get(&self, key: &BranchKey) -> Option<&WebSum> {
        self.entries.get(key)
    }

    /// The entry at traversed set `s`, if nonzero.
    pub fn entry(&self, s: &[usize]) -> Option<&WebSum> {
        self.entries.iter().find(|(k, _)| k.s() == s).map(|(_, v)| v)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    fn add_term(&mut self, key: &BranchKey, w: &Web, c: &LaurentPoly) -> Result<(), BranchError> {
        if w.is_zero() || c.is_zero() {
            return Ok(());
        }
        let slot = self
            .entries
            .entry(key.clone())
            .or_insert_with(|| WebSum::zero(self.level, key.boundary().clone()));
        slot.add_web(w, c)?;
        if slot.is_zero() {
            self.entries.remove(key);
        }
        Ok(())
    }

    /// `self + c * other`, keywise.
    pub fn add_scaled(&mut self, c: &LaurentPoly, other: &BranchImage) -> Result<(), BranchError> {
        for (key, sum) in &other.entries {
            for (w, x) in sum.terms() {
                self.add_term(key, &Web::Polygon(w.clone()), &(c * x))?;
            }
        }
        Ok(())
    }
}

impl Serialize for BranchImage {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut m = serializer.serialize_map(Some(self.entries.len()))?;
        for (k, v) in &self.entries {
            m.serialize_entry(&k.to_string(), v)?;
        }
        m.end()
    }
}

pub fn dgt_web(w: &PolygonWeb) -> Result<BranchImage, BranchError> {
    let mut img = BranchImage::empty(w.n().saturating_sub(1));
    for t in dgt_terms(w)? {
        img.add_term(&t.key, &t.target, &t.coeff)?;
    }
    Ok(img)
}

/// `dGT` extended linearly to a combination of webs.
pub fn dgt(x: &WebSum) -> Result<BranchImage, BranchError> {
    if x.n() == 0 {
        return Err(BranchError::LevelZero);
    }
    let mut img = BranchImage::empty(x.n() - 1);
    for (w, c) in x.terms() {
        img.add_scaled(c, &dgt_web(w)?)?;
    }
    Ok(img)
}

/// `dGT` of the single web with given flows; zero webs have empty images.
pub fn dgt_of(family: Family, n: u32, flows: &FlowPair, l: i64) -> Result<BranchImage, BranchError> {
    match make_web(family, n, flows, l) {
        Web::Zero => Ok(BranchImage::empty(n.saturating_sub(1))),
        Web::Polygon(w) => dgt_web(&w),
    }
}
