use std::collections::{BTreeMap, BTreeSet};

use branching::{dgt_web, BranchKey};
use polygons::PolygonWeb;
use serde::Serialize;

use crate::irrep::off0;
use crate::matrix::Matrix;
use crate::polygon::{rep_polygon, rep_websum};
use crate::tensor::{EquivariantTensor, Factor, RepObject};
use crate::OracleError;

/// Restriction of `t` to level `n - 1`: factors at positions in `lowered`
/// (counted over target then source) keep their `i_{-1}` block and drop their
/// label by one, the others keep their `i_0` block. `None` when a block is empty.
pub fn gt_restrict(t: &EquivariantTensor, lowered: &BTreeSet<usize>) -> Option<EquivariantTensor> {
    let n = t.n();
    if n == 0 {
        return None;
    }
    let word = t.target().concat(t.source());
    let mut new_factors = Vec::with_capacity(word.len());
    let mut ranges = Vec::with_capacity(word.len());
    for (p, f) in word.factors().iter().enumerate() {
        let a = i64::from(f.a);
        let o = off0(n, a);
        let d = crate::irrep::dim(n, a);
        if lowered.contains(&p) {
            if f.a == 0 {
                return None;
            }
            new_factors.push(Factor { a: f.a - 1, dual: f.dual });
            ranges.push((0, o));
        } else {
            if f.a == n {
                return None;
            }
            new_factors.push(*f);
            ranges.push((o, d));
        }
    }
    let nt = t.target().len();
    let target = RepObject::new(new_factors[..nt].to_vec());
    let source = RepObject::new(new_factors[nt..].to_vec());
    let old_dims = word.dims(n);
    let new_dims: Vec<usize> = ranges.iter().map(|(lo, hi)| hi - lo).collect();
    let (rows, cols) = (target.dim(n - 1), source.dim(n - 1));
    let mut data = Vec::with_capacity(rows * cols);
    let mut idx = vec![0usize; new_dims.len()];
    let src = t.matrix().data();
    for _ in 0..rows * cols {
        let old: usize = idx
            .iter()
            .zip(&ranges)
            .zip(&old_dims)
            .fold(0, |acc, ((&i, &(lo, _)), &d)| acc * d + lo + i);
        data.push(src[old].clone());
        for p in (0..idx.len()).rev() {
            idx[p] += 1;
            if idx[p] < new_dims[p] {
                break;
            }
            idx[p] = 0;
        }
    }
    EquivariantTensor::new(n - 1, source, target, Matrix::from_data(rows, cols, data)).ok()
}

/// All nonempty blocks of the GT decomposition, keyed by the lowered positions.
pub fn gt_project(t: &EquivariantTensor) -> BTreeMap<Vec<usize>, EquivariantTensor> {
    let m = t.target().len() + t.source().len();
    let mut out = BTreeMap::new();
    for mask in 0u64..(1u64 << m) {
        let lowered: BTreeSet<usize> = (0..m).filter(|p| mask >> p & 1 == 1).collect();
        if let Some(r) = gt_restrict(t, &lowered) {
            out.insert(lowered.into_iter().collect(), r);
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SquareEntry {
    /// Traversed boundary points, numbered from the right starting at 1.
    pub s: Vec<usize>,
    pub matches: bool,
    /// `restricted / dGT-image` when they are proportional but unequal.
    pub unit: Option<String>,
    pub restricted_zero: bool,
    pub image_zero: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SquareReport {
    pub web: String,
    pub n: u32,
    pub entries: Vec<SquareEntry>,
}

impl SquareReport {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.matches)
    }

    pub fn mismatches(&self) -> impl Iterator<Item = &SquareEntry> {
        self.entries.iter().filter(|e| !e.matches)
    }
}

/// Checks `GT(Rep_n(w)) = Rep_{n-1}(dGT(w))` entry by entry, with unit 1.
pub fn commuting_square_check(w: &PolygonWeb, budget: usize) -> Result<SquareReport, OracleError> {
    let n = w.n();
    if n == 0 {
        return Err(OracleError::NotAdmissible(format!("{w} has no level below")));
    }
    let t = rep_polygon(w, budget)?;
    let img = dgt_web(w)?;
    let boundary = w.boundary();
    let m = boundary.len();
    let mut entries = Vec::new();
    let mut seen: BTreeSet<BranchKey> = BTreeSet::new();
    for (lowered, g) in gt_project(&t) {
        let points: BTreeSet<usize> = lowered.iter().map(|&p| m - p).collect();
        let key = BranchKey::new(&boundary, &points);
        let h = match img.get(&key) {
            Some(x) => rep_websum(x, budget)?,
            None => EquivariantTensor::zeros(n - 1, RepObject::unit(), g.target().clone(), budget)?,
        };
        seen.insert(key.clone());
        let matches = g == h;
        let unit = if matches {
            None
        } else {
            g.ratio(&h).map(|c| c.to_string())
        };
        entries.push(SquareEntry {
            s: key.s().to_vec(),
            matches,
            unit,
            restricted_zero: g.is_zero(),
            image_zero: h.is_zero(),
        });
    }
    // dGT entries whose boundary has no block at all
    for (key, x) in img.entries() {
        if !seen.contains(key) && !x.is_zero() {
            entries.push(SquareEntry {
                s: key.s().to_vec(),
                matches: false,
                unit: None,
                restricted_zero: true,
                image_zero: false,
            });
        }
    }
    Ok(SquareReport {
        web: w.to_string(),
        n,
        entries,
    })
}

/// The `s = ∅` block of the GT projection.
pub fn empty_block(t: &EquivariantTensor) -> Option<EquivariantTensor> {
    gt_restrict(t, &BTreeSet::new())
}
