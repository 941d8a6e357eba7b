//! Dense univariate polynomials over Z, used for gcds and exact division.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::LaurentPoly;

/// Coefficients in ascending degree, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct UPoly(pub(crate) Vec<BigInt>);

impl UPoly {
    fn trim(mut self) -> Self {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
        self
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn deg(&self) -> usize {
        self.0.len() - 1
    }

    fn lead(&self) -> &BigInt {
        self.0.last().expect("lead of zero polynomial")
    }

    /// Splits `p` as `q^shift * poly` with `poly(0) != 0`.
    pub(crate) fn from_laurent(p: &LaurentPoly) -> (i64, UPoly) {
        let Some(lo) = p.min_exp() else {
            return (0, UPoly(Vec::new()));
        };
        let hi = p.max_exp().unwrap_or(lo);
        let mut v = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (e, c) in p.terms() {
            v[(e - lo) as usize] = c.clone();
        }
        (lo, UPoly(v))
    }

    pub(crate) fn to_laurent(&self, shift: i64) -> LaurentPoly {
        LaurentPoly::from_terms(
            self.0
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i as i64 + shift, c.clone())),
        )
    }

    pub(crate) fn content(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    fn scale_div(&self, c: &BigInt) -> UPoly {
        UPoly(self.0.iter().map(|x| x / c).collect())
    }

    pub(crate) fn primitive(&self) -> UPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.content();
        if self.lead().is_negative() {
            c = -c;
        }
        self.scale_div(&c)
    }

    /// Sparse pseudo-remainder: repeatedly cancels the leading term of `self` by `b`.
    fn pseudo_rem(&self, b: &UPoly) -> UPoly {
        let mut r = self.clone();
        let lb = b.lead().clone();
        while !r.is_zero() && r.deg() >= b.deg() {
            let lr = r.lead().clone();
            let shift = r.deg() - b.deg();
            let g = lr.gcd(&lb);
            let (fr, fb) = (&lb / &g, &lr / &g);
            for x in r.0.iter_mut() {
                *x *= &fr;
            }
            for (i, c) in b.0.iter().enumerate() {
                r.0[i + shift] -= &fb * c;
            }
            r = r.trim();
        }
        r
    }

    /// Primitive gcd with positive leading coefficient.
    pub(crate) fn gcd(a: &UPoly, b: &UPoly) -> UPoly {
        let (mut x, mut y) = (a.primitive(), b.primitive());
        if x.is_zero() {
            return y;
        }
        if y.is_zero() {
            return x;
        }
        if x.deg() < y.deg() {
            std::mem::swap(&mut x, &mut y);
        }
        while !y.is_zero() {
            let r = x.pseudo_rem(&y);
            x = y;
            y = r.primitive();
        }
        x.primitive()
    }

    /// Exact division over Z; `None` if `b` does not divide `self` in Z[x].
    pub(crate) fn div_exact(&self, b: &UPoly) -> Option<UPoly> {
        if b.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(self.clone());
        }
        if self.deg() < b.deg() {
            return None;
        }
        let mut r = self.clone();
        let mut quot = vec![BigInt::zero(); self.deg() - b.deg() + 1];
        let lb = b.lead();
        while !r.is_zero() && r.deg() >= b.deg() {
            let (c, rem) = r.lead().div_rem(lb);
            if !rem.is_zero() {
                return None;
            }
            let shift = r.deg() - b.deg();
            for (i, bc) in b.0.iter().enumerate() {
                r.0[i + shift] -= &c * bc;
            }
            quot[shift] = c;
            r = r.trim();
        }
        if r.is_zero() {
            Some(UPoly(quot).trim())
        } else {
            None
        }
    }

    pub(crate) fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0[0].is_one()
    }
}
