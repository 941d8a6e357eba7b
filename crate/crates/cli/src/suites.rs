//! The `rep-check` suites. Each case is evaluated independently; results
//! come back in enumeration order whatever the thread count.

use polygons::{web_eq, Family, FlowPair, PolygonWeb, WebSum};
use qalgebra::{qbinom, rank, LaurentPoly, RatFunc};
use rayon::prelude::*;
use relations::{apr_span, aqr_span, ss_span, Combination};
use reporacle::{
    bigon, circle, commuting_square_check, crossing, flow_vertex, kernel_rank, EquivariantTensor, Factor,
    FlowKind, KernelReport, RepObject, TagConvention,
};
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::sweep::{canonical_flows, webs_on};
use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Case {
    pub key: String,
    pub passed: bool,
    pub detail: String,
    /// SHA-256 of the tensor the case is about, in place of its entries.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tensor: Option<String>,
}

pub fn tensor_hash(t: &EquivariantTensor) -> String {
    let mut h = Sha256::new();
    h.update(format!("{}|{}|{}|", t.n(), t.source(), t.target()).as_bytes());
    for x in t.matrix().data() {
        h.update(x.to_string().as_bytes());
        h.update(b";");
    }
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

fn sign(e: u32) -> LaurentPoly {
    LaurentPoly::signed_q_pow(i64::from(e), 0)
}

fn par_cases<T, F>(items: Vec<T>, f: F) -> Result<Vec<Case>, CliError>
where
    T: Send + Sync,
    F: Fn(&T) -> Result<Case, CliError> + Send + Sync,
{
    items.par_iter().map(f).collect()
}

/// Flows to sweep at level `n`: the explicit pair if given, otherwise every
/// canonical pair with `k` in `ks`.
pub fn flows_at(n: u32, explicit: Option<&FlowPair>, ks: &[usize], max_entry: i64) -> Vec<FlowPair> {
    match explicit {
        Some(f) if f.is_admissible(n) => vec![f.clone()],
        Some(_) => Vec::new(),
        None => ks.iter().flat_map(|&k| canonical_flows(n, k, max_entry)).collect(),
    }
}

/// Relations known to lie in the kernel on these flows, as raw combinations.
pub fn known_raw(n: u32, flows: &FlowPair) -> Vec<Combination> {
    let mut out: Vec<Combination> = apr_span(n, flows).raw().to_vec();
    out.extend(aqr_span(n, flows).raw().iter().cloned());
    if let Ok(ss) = ss_span(n, flows) {
        out.extend(ss.raw().iter().cloned());
    }
    out
}

/// Rank of `relations` together with every difference of two identified
/// webs, over the columns of `r`.
pub fn expected_raw_nullity(r: &KernelReport, relations: &[Combination]) -> usize {
    let webs: Vec<PolygonWeb> = r
        .webs
        .iter()
        .map(|&(f, l)| {
            polygons::make_web_raw(f, r.n, &r.flows, l)
                .polygon()
                .cloned()
                .expect("kernel columns are admissible")
        })
        .collect();
    let mut cols: Vec<Vec<RatFunc>> = relations
        .iter()
        .map(|c| r.webs.iter().map(|&(f, l)| RatFunc::from(c.coeff(f, l))).collect())
        .collect();
    for (i, u) in webs.iter().enumerate() {
        for (j, v) in webs.iter().enumerate().skip(i + 1) {
            if web_eq(u, v) {
                let mut d = vec![RatFunc::zero(); webs.len()];
                d[i] = RatFunc::one();
                d[j] = -RatFunc::one();
                cols.push(d);
            }
        }
    }
    rank(&cols)
}

/// Dimension of the span of `relations` in the identified web space on the
/// representatives `webs`.
pub fn identified_rank(webs: &[PolygonWeb], relations: &[WebSum]) -> usize {
    let cols: Vec<Vec<RatFunc>> = relations
        .iter()
        .map(|x| webs.iter().map(|w| RatFunc::from(x.coeff(w))).collect())
        .collect();
    rank(&cols)
}

/// One kernel case: the null space of Rep on all P and Q webs equals the
/// span of the known relations and the identifications, both raw and after
/// identification.
pub fn kernel_case(n: u32, flows: &FlowPair, budget: usize) -> Result<Case, CliError> {
    let r = kernel_rank(n, flows, &[Family::P, Family::Q], budget)?;
    let rels = known_raw(n, flows);
    let expected = expected_raw_nullity(&r, &rels);
    let ident = r.identified();
    let rel_sums: Vec<WebSum> = rels.iter().map(Combination::to_websum).collect();
    let rel_dim = identified_rank(&ident.webs, &rel_sums);
    Ok(Case {
        key: format!("n={n} {flows}"),
        passed: r.nullity() == expected && ident.dim() == rel_dim,
        detail: format!(
            "webs={} rank={} nullity={} expected={} identified_kernel={} relations={}",
            r.webs.len(),
            r.rank,
            r.nullity(),
            expected,
            ident.dim(),
            rel_dim
        ),
        tensor: None,
    })
}

pub fn kernel(
    ns: impl Iterator<Item = u32>,
    explicit: Option<&FlowPair>,
    max_k: usize,
    max_entry: i64,
    budget: usize,
) -> Result<Vec<Case>, CliError> {
    let ks: Vec<usize> = (0..=max_k).collect();
    let items: Vec<(u32, FlowPair)> = ns
        .flat_map(|n| flows_at(n, explicit, &ks, max_entry).into_iter().map(move |f| (n, f)))
        .collect();
    par_cases(items, |(n, f)| kernel_case(*n, f, budget))
}

fn id(n: u32, a: u32) -> EquivariantTensor {
    EquivariantTensor::identity(n, RepObject::new(vec![Factor::plain(a)]))
}

/// I = (-1)^{(n+1)a} H for the default tag convention.
pub fn ih(ns: impl Iterator<Item = u32>) -> Result<Vec<Case>, CliError> {
    let mut items = Vec::new();
    for n in ns {
        for a in 0..=n {
            for b in 0..=n - a {
                for c in 0..=n - a - b {
                    items.push((n, a, b, c));
                }
            }
        }
    }
    let conv = TagConvention::Plain;
    par_cases(items, |&(n, a, b, c)| {
        let m = |x, y| flow_vertex(n, FlowKind::Merge, x, y, conv);
        let h = m(a + b, c)?.compose(&m(a, b)?.tensor(&id(n, c))?)?;
        let i = m(a, b + c)?.compose(&id(n, a).tensor(&m(b, c)?)?)?;
        let want = h.scale(&sign((n + 1) * a));
        Ok(Case {
            key: format!("n={n} a={a} b={b} c={c}"),
            passed: i == want,
            detail: format!("I = {}·H", sign((n + 1) * a)),
            tensor: Some(tensor_hash(&i)),
        })
    })
}

/// Closed loops and bigons against q-binomials.
pub fn loops(ns: impl Iterator<Item = u32>) -> Result<Vec<Case>, CliError> {
    let mut items = Vec::new();
    for n in ns {
        for l in 0..=n {
            items.push((n, None, l));
        }
        for l in 0..=n {
            for k in 0..=l {
                items.push((n, Some(k), l));
            }
        }
    }
    par_cases(items, |&(n, k, l)| match k {
        None => {
            let v = circle(n, l)?;
            let want = qbinom(n.into(), l.into());
            Ok(Case {
                key: format!("circle n={n} l={l}"),
                passed: v == want,
                detail: v.to_string(),
                tensor: None,
            })
        }
        Some(k) => {
            let t = bigon(n, k, l, TagConvention::Plain)?;
            let want = qbinom(i64::from(n - k), i64::from(l - k));
            Ok(Case {
                key: format!("bigon n={n} k={k} l={l}"),
                passed: t == id(n, k).scale(&want),
                detail: format!("{want}·id"),
                tensor: Some(tensor_hash(&t)),
            })
        }
    })
}

/// Braid relation and equivariance of the crossing on `V_1^{⊗3}`.
pub fn braid(ns: impl Iterator<Item = u32>) -> Result<Vec<Case>, CliError> {
    let items: Vec<u32> = ns.filter(|&n| n >= 2).collect();
    par_cases(items, |&n| {
        let r = crossing(n)?;
        let one = id(n, 1);
        let r1 = r.tensor(&one)?;
        let r2 = one.tensor(&r)?;
        let lhs = r1.compose(&r2)?.compose(&r1)?;
        let rhs = r2.compose(&r1)?.compose(&r2)?;
        let equivariant = r.is_equivariant()?;
        Ok(Case {
            key: format!("n={n}"),
            passed: lhs == rhs && equivariant,
            detail: format!("braid={} equivariant={equivariant}", lhs == rhs),
            tensor: Some(tensor_hash(&r)),
        })
    })
}

/// The commuting square on every P and Q web of the swept flows. The global
/// unit is fixed to 1; any other ratio is reported as a mismatch.
pub fn square(
    ns: impl Iterator<Item = u32>,
    explicit: Option<&FlowPair>,
    max_k: usize,
    max_entry: i64,
    budget: usize,
) -> Result<Vec<Case>, CliError> {
    let ks: Vec<usize> = (0..=max_k).collect();
    let items: Vec<PolygonWeb> = ns
        .filter(|&n| n >= 1)
        .flat_map(|n| {
            flows_at(n, explicit, &ks, max_entry)
                .into_iter()
                .flat_map(move |f| webs_on(n, &f))
        })
        .collect();
    par_cases(items, |w| {
        let r = commuting_square_check(w, budget)?;
        let bad: Vec<String> = r
            .mismatches()
            .map(|e| format!("{:?} ratio {}", e.s, e.unit.as_deref().unwrap_or("none")))
            .collect();
        Ok(Case {
            key: w.to_string(),
            passed: r.passed(),
            detail: if bad.is_empty() {
                format!("{} entries, unit 1", r.entries.len())
            } else {
                bad.join("; ")
            },
            tensor: None,
        })
    })
}
