use std::fmt;

use polygons::{rotate_q_to_p, Family, FlowPair, WebSum};
use qalgebra::{qbinom, LaurentPoly};
use serde::{Serialize, Serializer};

use crate::combination::Combination;
use crate::linear::{columns, raw_rank, span_rank};
use crate::RelationError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RelationLabel {
    SS,
    SSPrime,
    APR,
    AQR,
}

impl fmt::Display for RelationLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RelationLabel::SS => "SS",
            RelationLabel::SSPrime => "SS'",
            RelationLabel::APR => "APR",
            RelationLabel::AQR => "AQR",
        })
    }
}

impl Serialize for RelationLabel {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl std::str::FromStr for RelationLabel {
    type Err = RelationError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "ss" => Ok(RelationLabel::SS),
            "ss'" | "ssprime" | "ss-prime" => Ok(RelationLabel::SSPrime),
            "apr" => Ok(RelationLabel::APR),
            "aqr" => Ok(RelationLabel::AQR),
            _ => Err(RelationError::UnknownLabel(s.to_owned())),
        }
    }
}

/// A spanning set of relations, in index order, both raw and as web sums.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationSpace {
    label: RelationLabel,
    n: u32,
    flows: FlowPair,
    raw: Vec<Combination>,
    elements: Vec<WebSum>,
}

impl RelationSpace {
    fn new(label: RelationLabel, n: u32, flows: &FlowPair, raw: Vec<Combination>) -> Self {
        let elements = raw.iter().map(Combination::to_websum).collect();
        Self {
            label,
            n,
            flows: flows.clone(),
            raw,
            elements,
        }
    }

    pub fn label(&self) -> RelationLabel {
        self.label
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn flows(&self) -> &FlowPair {
        &self.flows
    }

    pub fn raw(&self) -> &[Combination] {
        &self.raw
    }

    pub fn elements(&self) -> &[WebSum] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.raw.len()
    }

    pub fn is_empty(&self) -> bool {
        self.raw.is_empty()
    }

    /// Elements that survive identification.
    pub fn nonzero_elements(&self) -> impl Iterator<Item = &WebSum> {
        self.elements.iter().filter(|x| !x.is_zero())
    }

    /// Exact dimension of the span in the web space.
    pub fn rank(&self) -> usize {
        span_rank(&columns(&self.elements.iter().collect::<Vec<_>>()).1)
    }

    /// Dimension of the span of the formal combinations, P and Q symbols independent.
    pub fn raw_rank(&self) -> usize {
        raw_rank(&self.raw.iter().collect::<Vec<_>>())
    }
}

#[derive(Serialize)]
struct SpaceJson<'a> {
    label: RelationLabel,
    n: u32,
    a: &'a [i64],
    b: &'a [i64],
    elements: Vec<String>,
    raw: &'a [Combination],
}

impl Serialize for RelationSpace {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        SpaceJson {
            label: self.label,
            n: self.n,
            a: self.flows.a(),
            b: self.flows.b(),
            elements: self.elements.iter().map(WebSum::to_string).collect(),
            raw: &self.raw,
        }
        .serialize(s)
    }
}

fn sign(e: i64) -> LaurentPoly {
    LaurentPoly::signed_q_pow(e, 0)
}

fn require_square(flows: &FlowPair) -> Result<(), RelationError> {
    if flows.k() == 2 {
        Ok(())
    } else {
        Err(RelationError::NotSquare(flows.k()))
    }
}

/// Square-switch relations: each P-square (or Q-square when `n + Σa < Σb`)
/// as a q-binomial combination of the other family.
pub fn ss_span(n: u32, flows: &FlowPair) -> Result<RelationSpace, RelationError> {
    require_square(flows)?;
    let ni = i64::from(n);
    let (sa, sb) = (flows.sum_a(), flows.sum_b());
    let d = ni + sa - sb;
    let mut raw = Vec::new();
    if d >= 0 {
        for l in flows.max_b()..=flows.min_a() + ni {
            let mut c = Combination::new(n, flows.clone()).with(Family::P, l, LaurentPoly::one());
            for m in flows.max_a()..=flows.min_b() {
                c.add(Family::Q, m, &-qbinom(d, m + l - sb));
            }
            raw.push(c);
        }
    } else {
        for l in flows.max_a()..=flows.min_b() {
            let mut c = Combination::new(n, flows.clone()).with(Family::Q, l, LaurentPoly::one());
            for m in flows.max_b()..=ni + flows.min_a() {
                c.add(Family::P, m, &-qbinom(-d, m + l - sa - ni));
            }
            raw.push(c);
        }
    }
    Ok(RelationSpace::new(RelationLabel::SS, n, flows, raw))
}

/// The complement of APR (resp. AQR) inside SS. When `n + Σa = Σb` the
/// Kekulé space is empty and this is all of SS.
pub fn ss_prime_span(n: u32, flows: &FlowPair) -> Result<RelationSpace, RelationError> {
    require_square(flows)?;
    let ni = i64::from(n);
    let (sa, sb) = (flows.sum_a(), flows.sum_b());
    let d = ni + sa - sb;
    let mut raw = Vec::new();
    if d == 0 {
        let ss = ss_span(n, flows)?;
        return Ok(RelationSpace::new(RelationLabel::SSPrime, n, flows, ss.raw));
    }
    if d > 0 {
        for m in flows.max_a()..=flows.min_b() {
            let mut c = Combination::new(n, flows.clone()).with(Family::Q, m, LaurentPoly::one());
            for l in ni + sa - m..=ni + flows.min_a() {
                c.add(Family::P, l, &-(sign(m + l + ni + sa) * qbinom(m + l - 1 - sb, m + l - ni - sa)));
            }
            raw.push(c);
        }
    } else {
        for m in flows.max_b()..=flows.min_a() + ni {
            let mut c = Combination::new(n, flows.clone()).with(Family::P, m, LaurentPoly::one());
            for l in sb - m..=flows.min_b() {
                c.add(Family::Q, l, &-(sign(m + l + sb) * qbinom(m + l - ni - 1 - sa, m + l - sb)));
            }
            raw.push(c);
        }
    }
    Ok(RelationSpace::new(RelationLabel::SSPrime, n, flows, raw))
}

/// Kekulé relations among P-polygons, `d_j` for `j = Σb ..= Σa + n - 1`.
pub fn apr_span(n: u32, flows: &FlowPair) -> RelationSpace {
    let ni = i64::from(n);
    let (sa, sb) = (flows.sum_a(), flows.sum_b());
    let (max_b, min_a) = (flows.max_b(), flows.min_a());
    let mut raw = Vec::new();
    for j in sb..sa + ni {
        let mut c = Combination::new(n, flows.clone());
        for k in -flows.sumhat_b()..=-flows.sumtah_a() + 1 {
            let x = sign(j + k) * qbinom(j + k - max_b, j - sb) * qbinom(min_a + ni - j - k, sa + ni - 1 - j);
            c.add(Family::P, j + k, &x);
        }
        raw.push(c);
    }
    RelationSpace::new(RelationLabel::APR, n, flows, raw)
}

/// Kekulé relations among Q-polygons, transcribed from the closed formula.
/// Loops (`k = 0`) are P-loops, so there this is APR with Q labels.
pub fn aqr_span(n: u32, flows: &FlowPair) -> RelationSpace {
    let k = flows.k() as i64;
    if k == 0 {
        let raw = apr_span(n, flows)
            .raw
            .iter()
            .map(|c| c.relabel(Family::Q, flows.clone()))
            .collect();
        return RelationSpace::new(RelationLabel::AQR, n, flows, raw);
    }
    let ni = i64::from(n);
    let (sa, sb) = (flows.sum_a(), flows.sum_b());
    let (max_a, min_b) = (flows.max_a(), flows.min_b());
    let top = sb - ni * (k - 1) - 1;
    let mut raw = Vec::new();
    for j in sa..=top {
        let mut c = Combination::new(n, flows.clone());
        for kk in -flows.sumtah_a()..=-flows.sumhat_b() + ni * k + 1 {
            let x = sign(j + kk) * qbinom(j + kk - max_a, j - sa) * qbinom(min_b - j - kk, top - j);
            c.add(Family::Q, j + kk, &x);
        }
        raw.push(c);
    }
    RelationSpace::new(RelationLabel::AQR, n, flows, raw)
}

/// AQR obtained by rotating APR on the flows `(b - n, rotl a)`.
pub fn aqr_by_rotation(n: u32, flows: &FlowPair) -> RelationSpace {
    let rotated = rotate_q_to_p(flows, n);
    let raw = apr_span(n, &rotated)
        .raw
        .iter()
        .map(|c| c.relabel(Family::Q, flows.clone()))
        .collect();
    RelationSpace::new(RelationLabel::AQR, n, flows, raw)
}

pub fn span(label: RelationLabel, n: u32, flows: &FlowPair) -> Result<RelationSpace, RelationError> {
    match label {
        RelationLabel::SS => ss_span(n, flows),
        RelationLabel::SSPrime => ss_prime_span(n, flows),
        RelationLabel::APR => Ok(apr_span(n, flows)),
        RelationLabel::AQR => Ok(aqr_span(n, flows)),
    }
}

/// Every relation the theorems provide on these flows: SS (squares only), APR and AQR.
pub fn known_relations(n: u32, flows: &FlowPair) -> Vec<WebSum> {
    let mut out = Vec::new();
    if flows.k() == 2 {
        out.extend(ss_span(n, flows).expect("square").elements);
    }
    out.extend(apr_span(n, flows).elements);
    out.extend(aqr_span(n, flows).elements);
    out.retain(|x| !x.is_zero());
    out
}
