use std::collections::BTreeMap;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::{MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::upoly::UPoly;
use crate::QError;

/// An element of Z[q, q^-1], stored as exponent -> nonzero coefficient.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * q^e`
    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Self { terms }
    }

    pub fn q_pow(e: i64) -> Self {
        Self::monomial(1, e)
    }

    /// `(-1)^s q^e`
    pub fn signed_q_pow(s: i64, e: i64) -> Self {
        Self::monomial(if s.rem_euclid(2) == 0 { 1 } else { -1 }, e)
    }

    pub fn from_terms<I, C>(it: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in it {
            p.add_term(e, c.into());
        }
        p
    }

    fn add_term(&mut self, e: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Returns `(c, e)` when the polynomial is a single term `c q^e`.
    pub fn as_monomial(&self) -> Option<(&BigInt, i64)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (c, *e))
        } else {
            None
        }
    }

    /// The involution q <-> q^-1.
    pub fn bar(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Multiply by q^e.
    pub fn shift(&self, e: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(x, c)| (x + e, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval_at(&self, q0: &BigRational) -> Result<BigRational, QError> {
        if q0.is_zero() {
            return Err(QError::ZeroEvaluationPoint);
        }
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let e = i32::try_from(*e).map_err(|_| QError::ExponentOverflow(*e))?;
            acc += q0.pow(e) * BigRational::from_integer(c.clone());
        }
        Ok(acc)
    }

    /// Exact quotient in Z[q, q^-1], if `other` divides `self`.
    pub fn div_exact(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if let Some((c, e)) = other.as_monomial() {
            let mut out = BTreeMap::new();
            for (x, a) in &self.terms {
                if !(a % c).is_zero() {
                    return None;
                }
                out.insert(x - e, a / c);
            }
            return Some(Self { terms: out });
        }
        let (sa, a) = UPoly::from_laurent(self);
        let (sb, b) = UPoly::from_laurent(other);
        let quot = a.div_exact(&b)?;
        Some(quot.to_laurent(sa - sb))
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl From<BigInt> for LaurentPoly {
    fn from(c: BigInt) -> Self {
        Self::constant(c)
    }
}

impl Zero for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
}

impl One for LaurentPoly {
    fn one() -> Self {
        LaurentPoly::one()
    }
}

impl<'a> Add<&'a LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl<'a> Add<&'a LaurentPoly> for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: &'a LaurentPoly) -> LaurentPoly {
        self += rhs;
        self
    }
}

impl<'a> AddAssign<&'a LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &'a LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl AddAssign for LaurentPoly {
    fn add_assign(&mut self, rhs: LaurentPoly) {
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
    }
}

impl<'a> Sub<&'a LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl<'a> Sub<&'a LaurentPoly> for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: &'a LaurentPoly) -> LaurentPoly {
        self -= rhs;
        self
    }
}

impl<'a> SubAssign<&'a LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &'a LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

impl SubAssign for LaurentPoly {
    fn sub_assign(&mut self, rhs: LaurentPoly) {
        for (e, c) in rhs.terms {
            self.add_term(e, -c);
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -(self.clone())
    }
}

impl<'a> Mul<&'a LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        if self.is_zero() || rhs.is_zero() {
            return out;
        }
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl<'a> Mul<&'a LaurentPoly> for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        &self * rhs
    }
}

impl<'a> MulAssign<&'a LaurentPoly> for LaurentPoly {
    fn mul_assign(&mut self, rhs: &'a LaurentPoly) {
        *self = &*self * rhs;
    }
}

impl MulAssign for LaurentPoly {
    fn mul_assign(&mut self, rhs: LaurentPoly) {
        *self = &*self * &rhs;
    }
}

impl Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        let mut acc = LaurentPoly::zero();
        for x in iter {
            acc += x;
        }
        acc
    }
}

impl<'a> Sum<&'a LaurentPoly> for LaurentPoly {
    fn sum<I: Iterator<Item = &'a LaurentPoly>>(iter: I) -> Self {
        let mut acc = LaurentPoly::zero();
        for x in iter {
            acc += x;
        }
        acc
    }
}

impl Product for LaurentPoly {
    fn product<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        let mut acc = LaurentPoly::one();
        for x in iter {
            acc *= x;
        }
        acc
    }
}

fn fmt_term(f: &mut fmt::Formatter<'_>, c: &BigInt, e: i64) -> fmt::Result {
    let mag = c.abs();
    match (mag.is_one(), e) {
        (_, 0) => write!(f, "{mag}"),
        (true, 1) => write!(f, "q"),
        (true, _) => write!(f, "q^{e}"),
        (false, 1) => write!(f, "{mag}q"),
        (false, _) => write!(f, "{mag}q^{e}"),
    }
}

/// Canonical form: ascending exponents, e.g. `q^-2 + 2 + q^2`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            match (i, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            fmt_term(f, c, *e)?;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

fn parse_term(s: &str) -> Result<(i64, BigInt), QError> {
    let bad = || QError::Parse(s.to_string());
    let s = s.trim();
    if s.is_empty() {
        return Err(bad());
    }
    let Some(qpos) = s.find('q') else {
        return Ok((0, s.parse::<BigInt>().map_err(|_| bad())?));
    };
    let (coef, rest) = s.split_at(qpos);
    let coef = coef.trim().trim_end_matches('*').trim();
    let c = if coef.is_empty() {
        BigInt::one()
    } else {
        coef.parse::<BigInt>().map_err(|_| bad())?
    };
    let rest = &rest[1..];
    let e = if rest.is_empty() {
        1
    } else {
        let ex = rest.strip_prefix('^').ok_or_else(bad)?;
        let ex = ex.trim_start_matches('{').trim_end_matches('}');
        ex.parse::<i64>().map_err(|_| bad())?
    };
    Ok((e, c))
}

impl FromStr for LaurentPoly {
    type Err = QError;

    /// Accepts the canonical form (and any term order), e.g. `q^-2 + 1 + q^2`, `-2q - 3`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(QError::Parse(s.to_string()));
        }
        let mut out = LaurentPoly::zero();
        let mut sign = 1i64;
        let mut cur = String::new();
        let mut prev: Option<char> = None;
        for ch in s.chars() {
            let is_op = (ch == '+' || ch == '-') && prev != Some('^');
            if is_op {
                if !cur.trim().is_empty() {
                    let (e, c) = parse_term(&cur)?;
                    out.add_term(e, c * sign);
                    cur.clear();
                    sign = 1;
                }
                if ch == '-' {
                    sign = -sign;
                }
            } else {
                cur.push(ch);
            }
            if !ch.is_whitespace() {
                prev = Some(ch);
            }
        }
        let (e, c) = parse_term(&cur)?;
        out.add_term(e, c * sign);
        Ok(out)
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            map.serialize_entry(&e.to_string(), &c.to_string())?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = LaurentPoly;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "a map from exponent strings to coefficient strings")
            }
            fn visit_map<M: MapAccess<'de>>(self, mut m: M) -> Result<LaurentPoly, M::Error> {
                let mut p = LaurentPoly::zero();
                while let Some((k, v)) = m.next_entry::<String, String>()? {
                    let e: i64 = k.parse().map_err(serde::de::Error::custom)?;
                    let c: BigInt = v.parse().map_err(serde::de::Error::custom)?;
                    p.add_term(e, c);
                }
                Ok(p)
            }
        }
        deserializer.deserialize_map(V)
    }
}
