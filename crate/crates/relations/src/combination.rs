use std::collections::BTreeMap;
use std::fmt;

use polygons::{format_combination, l_range, make_web, Family, FlowPair, WebSum};
use qalgebra::LaurentPoly;
use serde::Serialize;

/// A linear combination of P- and Q-webs on fixed flows, before any
/// identification. Out-of-range webs are dropped on insertion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Combination {
    n: u32,
    flows: FlowPair,
    #[serde(serialize_with = "ser_terms")]
    terms: BTreeMap<(Family, i64), LaurentPoly>,
}

fn ser_terms<S: serde::Serializer>(
    terms: &BTreeMap<(Family, i64), LaurentPoly>,
    s: S,
) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(terms.len()))?;
    for ((fam, l), c) in terms {
        seq.serialize_element(&(fam, l, c))?;
    }
    seq.end()
}

impl Combination {
    pub fn new(n: u32, flows: FlowPair) -> Self {
        Self {
            n,
            flows,
            terms: BTreeMap::new(),
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn flows(&self) -> &FlowPair {
        &self.flows
    }

    /// Adds `c·F{l}`, ignoring webs outside the admissible range.
    pub fn add(&mut self, family: Family, l: i64, c: &LaurentPoly) {
        if c.is_zero() || !l_range(family, self.n, &self.flows).contains(&l) || !self.flows.is_admissible(self.n) {
            return;
        }
        let slot = self.terms.entry((family, l)).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(family, l));
        }
    }

    pub fn with(mut self, family: Family, l: i64, c: LaurentPoly) -> Self {
        self.add(family, l, &c);
        self
    }

    pub fn coeff(&self, family: Family, l: i64) -> LaurentPoly {
        self.terms.get(&(family, l)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Family, i64, &LaurentPoly)> {
        self.terms.iter().map(|(&(f, l), c)| (f, l, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The same combination with every web relabelled to `family`.
    pub fn relabel(&self, family: Family, flows: FlowPair) -> Combination {
        let mut out = Combination::new(self.n, flows);
        for (_, l, c) in self.terms() {
            out.add(family, l, c);
        }
        out
    }

    /// Image in the web space, where identified webs share a slot.
    pub fn to_websum(&self) -> WebSum {
        let mut out = WebSum::zero_for(self.n, &self.flows);
        for (f, l, c) in self.terms() {
            out.add_web(&make_web(f, self.n, &self.flows, l), c)
                .expect("one boundary for fixed flows");
        }
        out
    }
}

impl fmt::Display for Combination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_combination(
            self.terms().map(|(fam, l, c)| (format!("{fam}{{{l}}}"), c)),
        ))
    }
}
