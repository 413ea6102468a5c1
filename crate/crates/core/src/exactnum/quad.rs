use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::rational::{rational_sqrt, Rational};
use crate::error::{Error, Result};

/// An element `rat + surd * sqrt(radicand)` of a quadratic extension of the
/// rationals.
///
/// Values are kept normalized: when the radicand is the square of a rational
/// the root is folded into `rat`, `surd` becomes zero and the stored radicand
/// is reset to zero. A value with zero surd may still carry a non-square
/// radicand; it then records the field it lives in (useful for reporting),
/// but it is compatible with every other value.
#[derive(Clone, Debug)]
pub struct QuadExt {
    rat: Rational,
    surd: Rational,
    radicand: Rational,
}

impl QuadExt {
    /// Builds `x + y sqrt(d)`, collapsing perfect-square radicands.
    pub fn new(x: Rational, y: Rational, d: Rational) -> Self {
        match rational_sqrt(&d) {
            Some(s) => QuadExt {
                rat: x + y * s,
                surd: Rational::zero(),
                radicand: Rational::zero(),
            },
            None => QuadExt {
                rat: x,
                surd: y,
                radicand: d,
            },
        }
    }

    /// `sqrt(d)` itself.
    pub fn sqrt(d: &Rational) -> Self {
        Self::new(Rational::zero(), Rational::one(), d.clone())
    }

    pub fn from_rational(x: Rational) -> Self {
        QuadExt {
            rat: x,
            surd: Rational::zero(),
            radicand: Rational::zero(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(super::int(n))
    }

    pub fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn rat(&self) -> &Rational {
        &self.rat
    }

    pub fn surd(&self) -> &Rational {
        &self.surd
    }

    pub fn radicand(&self) -> &Rational {
        &self.radicand
    }

    pub fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.surd.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.rat.is_one() && self.surd.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.surd.is_zero()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then_some(&self.rat)
    }

    /// Same value, re-tagged with the radicand `d` when it is rational.
    pub fn in_field(mut self, d: &Rational) -> Self {
        if self.surd.is_zero() && rational_sqrt(d).is_none() {
            self.radicand = d.clone();
        }
        self
    }

    pub fn compatible(&self, other: &QuadExt) -> bool {
        self.surd.is_zero() || other.surd.is_zero() || self.radicand == other.radicand
    }

    fn joint_radicand(&self, other: &QuadExt) -> Result<Rational> {
        if !self.compatible(other) {
            return Err(Error::RadicandMismatch {
                left: self.radicand.to_string(),
                right: other.radicand.to_string(),
            });
        }
        let r = if !self.surd.is_zero() {
            &self.radicand
        } else if !other.surd.is_zero() || self.radicand.is_zero() {
            &other.radicand
        } else {
            &self.radicand
        };
        Ok(r.clone())
    }

    pub fn conj(&self) -> Self {
        QuadExt {
            rat: self.rat.clone(),
            surd: -&self.surd,
            radicand: self.radicand.clone(),
        }
    }

    /// Field norm `x^2 - y^2 d`.
    pub fn norm(&self) -> Rational {
        &self.rat * &self.rat - &self.surd * &self.surd * &self.radicand
    }

    pub fn try_add(&self, other: &QuadExt) -> Result<Self> {
        let radicand = self.joint_radicand(other)?;
        Ok(QuadExt {
            rat: &self.rat + &other.rat,
            surd: &self.surd + &other.surd,
            radicand,
        })
    }

    pub fn try_sub(&self, other: &QuadExt) -> Result<Self> {
        let radicand = self.joint_radicand(other)?;
        Ok(QuadExt {
            rat: &self.rat - &other.rat,
            surd: &self.surd - &other.surd,
            radicand,
        })
    }

    pub fn try_mul(&self, other: &QuadExt) -> Result<Self> {
        let radicand = self.joint_radicand(other)?;
        if self.surd.is_zero() {
            return Ok(QuadExt {
                rat: &self.rat * &other.rat,
                surd: &self.rat * &other.surd,
                radicand,
            });
        }
        if other.surd.is_zero() {
            return Ok(QuadExt {
                rat: &self.rat * &other.rat,
                surd: &self.surd * &other.rat,
                radicand,
            });
        }
        Ok(QuadExt {
            rat: &self.rat * &other.rat + &self.surd * &other.surd * &radicand,
            surd: &self.rat * &other.surd + &other.rat * &self.surd,
            radicand,
        })
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // nonzero: the radicand is not a square, so the norm cannot vanish
        let n = self.norm();
        Ok(QuadExt {
            rat: &self.rat / &n,
            surd: -&self.surd / &n,
            radicand: self.radicand.clone(),
        })
    }

    pub fn try_div(&self, other: &QuadExt) -> Result<Self> {
        self.try_mul(&other.inv()?)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        QuadExt {
            rat: &self.rat * k,
            surd: &self.surd * k,
            radicand: self.radicand.clone(),
        }
    }

    /// Integer power; negative exponents invert (and fail on zero).
    pub fn powi(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = QuadExt::one().in_field(&self.radicand);
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.try_mul(&sq)?;
            }
            e >>= 1;
            if e > 0 {
                sq = sq.try_mul(&sq)?;
            }
        }
        Ok(acc)
    }
}

impl PartialEq for QuadExt {
    fn eq(&self, other: &Self) -> bool {
        self.rat == other.rat
            && self.surd == other.surd
            && (self.surd.is_zero() || self.radicand == other.radicand)
    }
}

impl Eq for QuadExt {}

impl From<Rational> for QuadExt {
    fn from(x: Rational) -> Self {
        QuadExt::from_rational(x)
    }
}

impl From<&Rational> for QuadExt {
    fn from(x: &Rational) -> Self {
        QuadExt::from_rational(x.clone())
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.surd.is_zero() {
            return write!(f, "{}", self.rat);
        }
        let mag = self.surd.abs();
        let root = if mag.is_one() {
            format!("sqrt({})", self.radicand)
        } else {
            format!("{}*sqrt({})", mag, self.radicand)
        };
        match (self.rat.is_zero(), self.surd.is_negative()) {
            (true, false) => write!(f, "{root}"),
            (true, true) => write!(f, "-{root}"),
            (false, false) => write!(f, "{} + {root}", self.rat),
            (false, true) => write!(f, "{} - {root}", self.rat),
        }
    }
}

// Operator sugar for values known to share a field. Mixing two distinct
// non-square radicands through these panics; use the `try_*` forms when the
// inputs are not under local control.

impl Add for &QuadExt {
    type Output = QuadExt;
    fn add(self, rhs: &QuadExt) -> QuadExt {
        self.try_add(rhs).expect("QuadExt addition across fields")
    }
}

impl Sub for &QuadExt {
    type Output = QuadExt;
    fn sub(self, rhs: &QuadExt) -> QuadExt {
        self.try_sub(rhs)
            .expect("QuadExt subtraction across fields")
    }
}

impl Mul for &QuadExt {
    type Output = QuadExt;
    fn mul(self, rhs: &QuadExt) -> QuadExt {
        self.try_mul(rhs)
            .expect("QuadExt multiplication across fields")
    }
}

impl Add for QuadExt {
    type Output = QuadExt;
    fn add(self, rhs: QuadExt) -> QuadExt {
        &self + &rhs
    }
}

impl Sub for QuadExt {
    type Output = QuadExt;
    fn sub(self, rhs: QuadExt) -> QuadExt {
        &self - &rhs
    }
}

impl Mul for QuadExt {
    type Output = QuadExt;
    fn mul(self, rhs: QuadExt) -> QuadExt {
        &self * &rhs
    }
}

impl Mul<&Rational> for &QuadExt {
    type Output = QuadExt;
    fn mul(self, rhs: &Rational) -> QuadExt {
        self.scale(rhs)
    }
}

impl Neg for &QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt {
            rat: -&self.rat,
            surd: -&self.surd,
            radicand: self.radicand.clone(),
        }
    }
}

impl Neg for QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        -&self
    }
}
