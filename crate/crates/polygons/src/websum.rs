use std::collections::BTreeMap;
use std::fmt;

use qalgebra::LaurentPoly;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::flows::{boundary_label, BoundarySignature, FlowPair};
use crate::web::{make_web, Family, PolygonWeb, Web};
use crate::PolygonError;

/// A finite formal combination of polygon webs sharing one boundary.
///
/// Terms are keyed by [`PolygonWeb::representative`], so shift-equivalent and
/// P = Q identified webs collapse into one slot.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WebSum {
    n: u32,
    boundary: BoundarySignature,
    terms: BTreeMap<PolygonWeb, LaurentPoly>,
}

impl WebSum {
    pub fn zero(n: u32, boundary: BoundarySignature) -> Self {
        Self {
            n,
            boundary,
            terms: BTreeMap::new(),
        }
    }

    /// The zero sum on the boundary of `flows`.
    pub fn zero_for(n: u32, flows: &FlowPair) -> Self {
        Self::zero(n, boundary_label(flows))
    }

    /// `Σ c · family{l}` over fixed flows; out-of-range webs vanish.
    pub fn from_combination<I>(n: u32, flows: &FlowPair, it: I) -> Self
    where
        I: IntoIterator<Item = (Family, i64, LaurentPoly)>,
    {
        let mut out = Self::zero_for(n, flows);
        for (family, l, c) in it {
            out.add_web(&make_web(family, n, flows, l), &c)
                .expect("same flows give the same boundary");
        }
        out
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn boundary(&self) -> &BoundarySignature {
        &self.boundary
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PolygonWeb, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of the slot containing `w`.
    pub fn coeff(&self, w: &PolygonWeb) -> LaurentPoly {
        self.terms
            .get(&w.representative())
            .cloned()
            .unwrap_or_default()
    }

    pub fn add_web(&mut self, w: &Web, c: &LaurentPoly) -> Result<(), PolygonError> {
        match w {
            Web::Zero => Ok(()),
            Web::Polygon(p) => self.add_polygon(p, c),
        }
    }

    pub fn add_polygon(&mut self, w: &PolygonWeb, c: &LaurentPoly) -> Result<(), PolygonError> {
        if w.n() != self.n {
            return Err(PolygonError::LevelMismatch(self.n, w.n()));
        }
        let b = w.boundary();
        if b != self.boundary {
            return Err(PolygonError::BoundaryMismatch {
                expected: self.boundary.to_string(),
                found: b.to_string(),
            });
        }
        if c.is_zero() {
            return Ok(());
        }
        let key = w.representative();
        let slot = self.terms.entry(key.clone()).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
        Ok(())
    }

    fn check_compatible(&self, other: &Self) -> Result<(), PolygonError> {
        if self.n != other.n {
            return Err(PolygonError::LevelMismatch(self.n, other.n));
        }
        if self.boundary != other.boundary {
            return Err(PolygonError::BoundaryMismatch {
                expected: self.boundary.to_string(),
                found: other.boundary.to_string(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, PolygonError> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_polygon(w, c)?;
        }
        Ok(out)
    }

    pub fn add_scaled(&mut self, c: &LaurentPoly, other: &Self) -> Result<(), PolygonError> {
        self.check_compatible(other)?;
        for (w, x) in &other.terms {
            self.add_polygon(w, &(c * x))?;
        }
        Ok(())
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero(self.n, self.boundary.clone());
        if c.is_zero() {
            return out;
        }
        out.terms = self.terms.iter().map(|(w, x)| (w.clone(), c * x)).collect();
        out
    }

    /// The flows shared by every term (canonical), if there are terms.
    pub fn flows(&self) -> Option<&FlowPair> {
        self.terms.keys().next().map(PolygonWeb::flows)
    }
}

fn coeff_prefix(c: &LaurentPoly, first: bool) -> String {
    let minus_one = -LaurentPoly::one();
    if c.is_one() {
        if first { String::new() } else { " + ".into() }
    } else if *c == minus_one {
        if first { "-".into() } else { " - ".into() }
    } else if first {
        format!("({c})")
    } else {
        format!(" + ({c})")
    }
}

/// Renders `Σ c·x` as e.g. `-P{1} + (q^-1 + q)P{2}`; `0` when empty.
pub fn format_combination<'a, I>(terms: I) -> String
where
    I: IntoIterator<Item = (String, &'a LaurentPoly)>,
{
    let mut out = String::new();
    for (i, (x, c)) in terms.into_iter().enumerate() {
        out.push_str(&coeff_prefix(c, i == 0));
        out.push_str(&x);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Terms as `c·F{l}` in slot order, e.g. `-P{1} + P{2} - P{3} + P{4}`.
impl fmt::Display for WebSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = format_combination(
            self.terms
                .iter()
                .map(|(w, c)| (format!("{}{{{}}}", w.family(), w.l()), c)),
        );
        f.write_str(&s)
    }
}

#[derive(Serialize)]
struct TermJson<'a> {
    web: &'a PolygonWeb,
    coeff: &'a LaurentPoly,
}

impl Serialize for WebSum {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<TermJson<'_>> = self
            .terms
            .iter()
            .map(|(web, coeff)| TermJson { web, coeff })
            .collect();
        let mut s = serializer.serialize_struct("WebSum", 3)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("boundary", &self.boundary)?;
        s.serialize_field("terms", &terms)?;
        s.end()
    }
}
