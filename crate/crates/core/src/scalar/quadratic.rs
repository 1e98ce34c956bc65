use super::{fmt_rational, Field, Q, Ring};
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Element `a + b·√r` of the quadratic field ℚ(√r), `r` squarefree.
///
/// Rational elements (`b = 0`) are compatible with every radicand, so `r` is
/// only fixed once an irrational part appears. Mixing two different radicands
/// is a programming error and panics.
#[derive(Clone)]
pub struct QuadElem {
    pub a: Q,
    pub b: Q,
    pub r: u32,
}

impl QuadElem {
    pub fn rational(a: Q) -> Self {
        QuadElem { a, b: Q::zero(), r: 0 }
    }

    pub fn new(a: Q, b: Q, r: u32) -> Self {
        assert!(r > 1, "radicand must exceed 1");
        QuadElem { a, b, r }
    }

    pub fn sqrt(r: u32) -> Self {
        QuadElem::new(Q::zero(), Q::one(), r)
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    fn radicand(&self, other: &Self) -> u32 {
        match (self.b.is_zero(), other.b.is_zero()) {
            (true, true) => self.r.max(other.r),
            (false, true) => self.r,
            (true, false) => other.r,
            (false, false) => {
                assert_eq!(self.r, other.r, "mixed quadratic fields");
                self.r
            }
        }
    }

    /// Galois conjugate `a - b√r`.
    pub fn conj(&self) -> Self {
        QuadElem { a: self.a.clone(), b: -self.b.clone(), r: self.r }
    }

    /// Field norm `a² - r b²`.
    pub fn norm(&self) -> Q {
        &self.a * &self.a - Q::from_integer(self.r.into()) * &self.b * &self.b
    }
}

impl PartialEq for QuadElem {
    fn eq(&self, other: &Self) -> bool {
        self.a == other.a && self.b == other.b && (self.b.is_zero() || self.r == other.r)
    }
}

impl Zero for QuadElem {
    fn zero() -> Self {
        QuadElem::rational(Q::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for QuadElem {
    fn one() -> Self {
        QuadElem::rational(Q::one())
    }
}

impl Add for QuadElem {
    type Output = QuadElem;
    fn add(self, rhs: Self) -> Self {
        let r = self.radicand(&rhs);
        QuadElem { a: self.a + rhs.a, b: self.b + rhs.b, r }
    }
}

impl Sub for QuadElem {
    type Output = QuadElem;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for QuadElem {
    type Output = QuadElem;
    fn neg(self) -> Self {
        QuadElem { a: -self.a, b: -self.b, r: self.r }
    }
}

impl Mul for QuadElem {
    type Output = QuadElem;
    fn mul(self, rhs: Self) -> Self {
        let r = self.radicand(&rhs);
        let rq = Q::from_integer(r.into());
        QuadElem {
            a: &self.a * &rhs.a + rq * &self.b * &rhs.b,
            b: &self.a * &rhs.b + &self.b * &rhs.a,
            r,
        }
    }
}

impl fmt::Display for QuadElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", fmt_rational(&self.a));
        }
        let surd = if self.b.is_one() {
            format!("sqrt({})", self.r)
        } else if self.b == -Q::one() {
            format!("-sqrt({})", self.r)
        } else {
            format!("{}*sqrt({})", fmt_rational(&self.b), self.r)
        };
        if self.a.is_zero() {
            write!(f, "{surd}")
        } else if let Some(rest) = surd.strip_prefix('-') {
            write!(f, "{} - {}", fmt_rational(&self.a), rest)
        } else {
            write!(f, "{} + {}", fmt_rational(&self.a), surd)
        }
    }
}

impl fmt::Debug for QuadElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuadElem({self})")
    }
}

impl Ring for QuadElem {
    fn from_rational(q: &Q) -> Self {
        QuadElem::rational(q.clone())
    }

    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        self.div(rhs)
    }
}

impl Field for QuadElem {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        let c = self.conj();
        Some(QuadElem { a: c.a / &n, b: c.b / &n, r: self.r })
    }
}
