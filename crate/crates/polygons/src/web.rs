use std::collections::BTreeSet;
use std::fmt;
use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use crate::flows::{boundary_label, rotl, rotr, BoundarySignature, FlowPair};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    P,
    Q,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::P => "P",
            Family::Q => "Q",
        })
    }
}

/// A polygon web `P^n_{a,b}{l}` or `Q^n_{a,b}{l}`; only admissible ones exist.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PolygonWeb {
    family: Family,
    n: u32,
    #[serde(flatten)]
    flows: FlowPair,
    l: i64,
}

/// A web or the zero morphism.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Web {
    Zero,
    Polygon(PolygonWeb),
}

impl Web {
    pub fn polygon(&self) -> Option<&PolygonWeb> {
        match self {
            Web::Zero => None,
            Web::Polygon(w) => Some(w),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Web::Zero)
    }
}

/// Admissible internal labels. For loops both families range over `0..=n`.
pub fn l_range(family: Family, n: u32, flows: &FlowPair) -> RangeInclusive<i64> {
    let n = i64::from(n);
    match (family, flows.k()) {
        (_, 0) => 0..=n,
        (Family::P, _) => flows.max_b()..=flows.min_a() + n,
        (Family::Q, _) => flows.max_a()..=flows.min_b(),
    }
}

/// Builds the canonical web, or `Web::Zero` when flows or `l` are out of range.
pub fn make_web(family: Family, n: u32, flows: &FlowPair, l: i64) -> Web {
    if !flows.is_admissible(n) || !l_range(family, n, flows).contains(&l) {
        return Web::Zero;
    }
    let w = PolygonWeb {
        family,
        n,
        flows: flows.clone(),
        l,
    };
    Web::Polygon(w.canonical_form())
}

/// Like [`make_web`] but keeps the flows exactly as given.
pub fn make_web_raw(family: Family, n: u32, flows: &FlowPair, l: i64) -> Web {
    if !flows.is_admissible(n) || !l_range(family, n, flows).contains(&l) {
        return Web::Zero;
    }
    Web::Polygon(PolygonWeb {
        family,
        n,
        flows: flows.clone(),
        l,
    })
}

impl PolygonWeb {
    pub fn family(&self) -> Family {
        self.family
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn flows(&self) -> &FlowPair {
        &self.flows
    }

    pub fn l(&self) -> i64 {
        self.l
    }

    pub fn boundary(&self) -> BoundarySignature {
        boundary_label(&self.flows)
    }

    /// Shift of flows and `l` making `min a = 0`.
    pub fn canonical_shift(&self) -> i64 {
        if self.flows.k() == 0 {
            0
        } else {
            -self.flows.min_a()
        }
    }

    pub fn canonical_form(&self) -> PolygonWeb {
        let c = self.canonical_shift();
        PolygonWeb {
            family: self.family,
            n: self.n,
            flows: self.flows.shifted(c),
            l: self.l + c,
        }
    }

    fn sibling(&self, family: Family, l: i64) -> PolygonWeb {
        PolygonWeb {
            family,
            n: self.n,
            flows: self.flows.clone(),
            l,
        }
    }

    /// Webs equal to this one by the P = Q lemma, one step away.
    fn identified_neighbours(&self) -> Vec<PolygonWeb> {
        let f = &self.flows;
        let n = i64::from(self.n);
        let k = f.k();
        // (Q label, P label) pairs
        let mut pairs: Vec<(i64, i64)> = Vec::new();
        if k == 0 {
            pairs.extend((0..=n).map(|l| (l, l)));
        }
        if k == 2 {
            pairs.push((f.min_b(), f.max_b()));
            pairs.push((f.max_a(), f.min_a() + n));
        }
        if f.a_is_constant() {
            pairs.push((f.a()[0], f.a()[0] + n));
        }
        if f.b_is_constant() {
            pairs.push((f.b()[0], f.b()[0]));
        }
        let qr = l_range(Family::Q, self.n, f);
        let pr = l_range(Family::P, self.n, f);
        let mut out: Vec<PolygonWeb> = pairs
            .into_iter()
            .filter(|(lq, lp)| qr.contains(lq) && pr.contains(lp))
            .filter_map(|(lq, lp)| match self.family {
                Family::Q if self.l == lq => Some(self.sibling(Family::P, lp)),
                Family::P if self.l == lp => Some(self.sibling(Family::Q, lq)),
                _ => None,
            })
            .collect();
        // a bigon at either extreme of l has a 0-labelled edge, so both are the same strand
        let (lo, hi) = (*pr.start(), *pr.end());
        if k == 1 && self.family == Family::P && lo < hi && (self.l == lo || self.l == hi) {
            out.push(self.sibling(Family::P, lo + hi - self.l));
        }
        out
    }

    /// All webs identified with this one (canonical forms), including itself.
    pub fn identification_class(&self) -> BTreeSet<PolygonWeb> {
        let start = self.canonical_form();
        let mut seen = BTreeSet::new();
        let mut stack = vec![start];
        while let Some(w) = stack.pop() {
            if seen.insert(w.clone()) {
                stack.extend(w.identified_neighbours());
            }
        }
        seen
    }

    /// The unique slot used in linear combinations: the least member of the
    /// identification class, so P-webs win over Q-webs.
    pub fn representative(&self) -> PolygonWeb {
        self.identification_class()
            .into_iter()
            .next()
            .expect("class contains the web itself")
    }
}

impl fmt::Display for PolygonWeb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}_{}{{{}}}", self.family, self.n, self.flows, self.l)
    }
}

/// Equality of webs up to constant shifts and the P = Q lemma.
pub fn web_eq(u: &PolygonWeb, v: &PolygonWeb) -> bool {
    u.n == v.n && u.representative() == v.representative()
}

/// `(a, b) -> (b - n, rotl a)`: the flows of the P-web obtained by rotating a Q-web.
pub fn rotate_q_to_p(flows: &FlowPair, n: u32) -> FlowPair {
    let n = i64::from(n);
    let a: Vec<i64> = flows.b().iter().map(|x| x - n).collect();
    FlowPair::new(a, rotl(flows.a())).expect("equal lengths")
}

/// Inverse of [`rotate_q_to_p`].
pub fn rotate_p_to_q(flows: &FlowPair, n: u32) -> FlowPair {
    let n = i64::from(n);
    let b: Vec<i64> = flows.a().iter().map(|x| x + n).collect();
    FlowPair::new(rotr(flows.b()), b).expect("equal lengths")
}
