use std::collections::HashSet;

use polygons::{l_range, make_web_raw, Family, FlowPair, PolygonWeb};
use qalgebra::{Echelon, LaurentPoly, RatFunc};
use serde::Serialize;

use crate::polygon::rep_polygon;
use crate::OracleError;

/// Null space of `Rep` restricted to the span of the given polygon families.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KernelReport {
    pub n: u32,
    pub flows: FlowPair,
    /// Column order: one `(family, l)` per admissible polygon.
    pub webs: Vec<(Family, i64)>,
    pub rank: usize,
    /// Coefficient vectors over `webs`, exact in `Q(q)`.
    #[serde(serialize_with = "ser_kernel")]
    pub kernel: Vec<Vec<RatFunc>>,
}

fn ser_kernel<S: serde::Serializer>(k: &[Vec<RatFunc>], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(k.len()))?;
    for v in k {
        let row: Vec<String> = v.iter().map(ToString::to_string).collect();
        seq.serialize_element(&row)?;
    }
    seq.end()
}

impl KernelReport {
    pub fn nullity(&self) -> usize {
        self.kernel.len()
    }

    /// The kernel after P = Q identification: each raw column is merged into
    /// its class representative and the projected kernel vectors are reduced
    /// to a basis.
    pub fn identified(&self) -> IdentifiedKernel {
        let mut webs: Vec<PolygonWeb> = Vec::new();
        let slot: Vec<usize> = self
            .webs
            .iter()
            .map(|&(f, l)| {
                let w = make_web_raw(f, self.n, &self.flows, l)
                    .polygon()
                    .expect("column webs are admissible")
                    .representative();
                match webs.iter().position(|v| *v == w) {
                    Some(i) => i,
                    None => {
                        webs.push(w);
                        webs.len() - 1
                    }
                }
            })
            .collect();
        let mut ech = Echelon::new(webs.len());
        for (i, v) in self.kernel.iter().enumerate() {
            let mut p = vec![RatFunc::zero(); webs.len()];
            for (c, &j) in v.iter().zip(&slot) {
                p[j] = &p[j] + c;
            }
            ech.insert(p, i);
        }
        IdentifiedKernel {
            basis: ech.rows().to_vec(),
            webs,
        }
    }
}

/// Kernel of `Rep` on the span of identified webs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentifiedKernel {
    pub webs: Vec<PolygonWeb>,
    #[serde(serialize_with = "ser_kernel")]
    pub basis: Vec<Vec<RatFunc>>,
}

impl IdentifiedKernel {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Rank of `Rep` on the formal span of `families` polygons with flows
/// `flows`, and a basis of its kernel. P and Q symbols are independent here,
/// so identified webs show up as kernel vectors.
pub fn kernel_rank(n: u32, flows: &FlowPair, families: &[Family], budget: usize) -> Result<KernelReport, OracleError> {
    if !flows.is_admissible(n) {
        return Err(OracleError::NotAdmissible(format!("{flows} at n = {n}")));
    }
    let mut webs = Vec::new();
    let mut tensors = Vec::new();
    for &fam in families {
        for l in l_range(fam, n, flows) {
            let Some(w) = make_web_raw(fam, n, flows, l).polygon().cloned() else {
                continue;
            };
            tensors.push(rep_polygon(&w, budget)?);
            webs.push((fam, l));
        }
    }
    let ncols = webs.len();
    let mut ech = Echelon::new(ncols);
    if let Some(first) = tensors.first() {
        let rows = first.len();
        let mut seen: HashSet<Vec<LaurentPoly>> = HashSet::new();
        for i in 0..rows {
            if ech.rank() == ncols {
                break;
            }
            let row: Vec<LaurentPoly> = tensors.iter().map(|t| t.matrix().data()[i].clone()).collect();
            if row.iter().all(LaurentPoly::is_zero) || !seen.insert(row.clone()) {
                continue;
            }
            ech.insert(row.iter().map(RatFunc::from).collect(), i);
        }
    }
    Ok(KernelReport {
        n,
        flows: flows.clone(),
        webs,
        rank: ech.rank(),
        kernel: ech.nullspace(),
    })
}
