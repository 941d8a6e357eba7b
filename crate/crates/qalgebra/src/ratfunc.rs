use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::upoly::UPoly;
use crate::{LaurentPoly, QError};

/// An element of Q(q) as a reduced quotient of Laurent polynomials.
///
/// The denominator is a polynomial with nonzero constant term and positive
/// leading coefficient; `num` and `den` share no nonunit factor over Q[q].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFunc {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, QError> {
        if den.is_zero() {
            return Err(QError::ZeroDenominator);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (sn, n) = UPoly::from_laurent(&num);
        let (sd, d) = UPoly::from_laurent(&den);
        if d.is_one() {
            return Self {
                num: num.shift(-sd),
                den: LaurentPoly::one(),
            };
        }
        let g = UPoly::gcd(&n, &d);
        let (mut n, mut d) = if g.is_one() {
            (n, d)
        } else {
            (
                n.div_exact(&g).expect("gcd divides numerator"),
                d.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        let mut c = n.content().gcd(&d.content());
        if d.0.last().is_some_and(|x| x.is_negative()) {
            c = -c;
        }
        if !c.is_one() {
            n = UPoly(n.0.iter().map(|x| x / &c).collect());
            d = UPoly(d.0.iter().map(|x| x / &c).collect());
        }
        Self {
            num: n.to_laurent(sn - sd),
            den: d.to_laurent(0),
        }
    }

    pub fn zero() -> Self {
        Self {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from(LaurentPoly::one())
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The Laurent polynomial this equals, if the denominator is trivial.
    pub fn as_laurent(&self) -> Option<&LaurentPoly> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::reduce(self.den.clone(), self.num.clone()))
        }
    }

    pub fn eval_at(&self, q0: &BigRational) -> Result<BigRational, QError> {
        let d = self.den.eval_at(q0)?;
        if d.is_zero() {
            return Err(QError::PoleAt(q0.to_string()));
        }
        Ok(self.num.eval_at(q0)? / d)
    }
}

impl From<LaurentPoly> for RatFunc {
    fn from(p: LaurentPoly) -> Self {
        Self {
            num: p,
            den: LaurentPoly::one(),
        }
    }
}

impl From<&LaurentPoly> for RatFunc {
    fn from(p: &LaurentPoly) -> Self {
        Self::from(p.clone())
    }
}

impl From<i64> for RatFunc {
    fn from(c: i64) -> Self {
        Self::from(LaurentPoly::constant(c))
    }
}

impl From<BigInt> for RatFunc {
    fn from(c: BigInt) -> Self {
        Self::from(LaurentPoly::constant(c))
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
}

impl One for RatFunc {
    fn one() -> Self {
        RatFunc::one()
    }
}

impl<'a> Add<&'a RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &'a RatFunc) -> RatFunc {
        if self.den == rhs.den {
            return RatFunc::reduce(&self.num + &rhs.num, self.den.clone());
        }
        RatFunc::reduce(
            &self.num * &rhs.den + &rhs.num * &self.den,
            &self.den * &rhs.den,
        )
    }
}

impl<'a> Sub<&'a RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &'a RatFunc) -> RatFunc {
        if self.den == rhs.den {
            return RatFunc::reduce(&self.num - &rhs.num, self.den.clone());
        }
        RatFunc::reduce(
            &self.num * &rhs.den - &rhs.num * &self.den,
            &self.den * &rhs.den,
        )
    }
}

impl<'a> Mul<&'a RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &'a RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc::from(&self.num * &rhs.num);
        }
        RatFunc::reduce(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl<'a> Div<&'a RatFunc> for &RatFunc {
    type Output = RatFunc;
    /// Panics on division by zero, like integer division.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &'a RatFunc) -> RatFunc {
        let inv = rhs.inv().expect("division by zero rational function");
        self * &inv
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: &'a RatFunc) -> RatFunc {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -(self.clone())
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}
