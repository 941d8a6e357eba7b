use std::collections::BTreeMap;

use branching::dgt_terms;
use polygons::{l_range, make_web, Family, FlowPair, WebSum};
use qalgebra::{qbinom, LaurentPoly};
use serde::Serialize;

use crate::combination::Combination;
use crate::RelationError;

/// A linear functional on the span of one family's webs, `Σ_l f(l)·F{l}*`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualFunctional {
    family: Family,
    n: u32,
    flows: FlowPair,
    j_star: i64,
    coeffs: BTreeMap<i64, LaurentPoly>,
}

impl DualFunctional {
    pub fn new(family: Family, n: u32, flows: FlowPair, j_star: i64) -> Self {
        Self {
            family,
            n,
            flows,
            j_star,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn flows(&self) -> &FlowPair {
        &self.flows
    }

    pub fn j_star(&self) -> i64 {
        self.j_star
    }

    /// `f(l)`; zero off the admissible range.
    pub fn coeff(&self, l: i64) -> LaurentPoly {
        self.coeffs.get(&l).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (i64, &LaurentPoly)> {
        self.coeffs.iter().map(|(l, c)| (*l, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Adds `c` to `f(l)` when `l` is admissible.
    pub fn add(&mut self, l: i64, c: &LaurentPoly) {
        if c.is_zero() || !l_range(self.family, self.n, &self.flows).contains(&l) {
            return;
        }
        let slot = self.coeffs.entry(l).or_default();
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&l);
        }
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::new(self.family, self.n, self.flows.clone(), self.j_star);
        for (l, x) in self.coeffs() {
            out.add(l, &(c * x));
        }
        out
    }
}

/// `e_{j*} = Σ_{k*=Σb}^{n+Σa} [n+Σa-Σb, k*-Σb] (P{k*+j*})*` for
/// `j* = -Σ̂b ..= -Σ̃a`, spanning the annihilator of APR.
pub fn apr_complement(n: u32, flows: &FlowPair) -> Vec<DualFunctional> {
    let ni = i64::from(n);
    let (sa, sb) = (flows.sum_a(), flows.sum_b());
    (-flows.sumhat_b()..=-flows.sumtah_a())
        .map(|js| {
            let mut e = DualFunctional::new(Family::P, n, flows.clone(), js);
            for ks in sb..=ni + sa {
                e.add(ks + js, &qbinom(ni + sa - sb, ks - sb));
            }
            e
        })
        .collect()
}

/// `Σ_l f(l)·x_{F{l}}` on a raw combination.
pub fn pair(f: &DualFunctional, x: &Combination) -> Result<LaurentPoly, RelationError> {
    if f.n != x.n() || &f.flows != x.flows() {
        return Err(RelationError::PairingMismatch);
    }
    Ok(f.coeffs().map(|(l, c)| c * &x.coeff(f.family, l)).sum())
}

/// Pairing against a web sum, reading the slot of each `F{l}`.
pub fn pair_websum(f: &DualFunctional, x: &WebSum) -> Result<LaurentPoly, RelationError> {
    if f.n != x.n() || &polygons::boundary_label(&f.flows) != x.boundary() {
        return Err(RelationError::PairingMismatch);
    }
    let mut total = LaurentPoly::zero();
    for (l, c) in f.coeffs() {
        if let Some(w) = make_web(f.family, f.n, &f.flows, l).polygon() {
            total += c * &x.coeff(w);
        }
    }
    Ok(total)
}

/// `g ∘ dGT_∅` as a functional at level `n`, for `g` at level `n - 1` on the
/// same flows. Computed from the path model term by term.
pub fn dgt_empty_pullback(g: &DualFunctional) -> DualFunctional {
    let n = g.n + 1;
    let mut out = DualFunctional::new(g.family, n, g.flows.clone(), g.j_star);
    for l in l_range(g.family, n, &g.flows) {
        let Some(w) = make_web(g.family, n, &g.flows, l).polygon().cloned() else {
            continue;
        };
        for t in dgt_terms(&w).expect("n >= 1") {
            if !t.key.s().is_empty() {
                continue;
            }
            let Some(tw) = t.target.polygon() else { continue };
            if tw.family() != g.family {
                continue;
            }
            // targets are canonical; g may sit at another shift
            let tshift = tw.flows().min_a() - g.flows.min_a();
            debug_assert_eq!(&tw.flows().shifted(-tshift), &g.flows);
            out.add(l, &(&t.coeff * &g.coeff(tw.l() - tshift)));
        }
    }
    out
}
