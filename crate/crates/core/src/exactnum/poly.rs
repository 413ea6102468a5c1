use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_traits::{One, Signed};

use super::{QuadExt, Rational};
use crate::error::{Error, Result};

/// Dense univariate polynomial; `coeffs[k]` is the coefficient of `z^k`.
///
/// Trailing zeros are always trimmed, so the zero polynomial has no
/// coefficients and no degree.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Polynomial {
    coeffs: Vec<QuadExt>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<QuadExt>) -> Self {
        while coeffs.last().is_some_and(QuadExt::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_rationals<'a, I>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = &'a Rational>,
    {
        Self::new(coeffs.into_iter().map(QuadExt::from).collect())
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| QuadExt::from_int(c)).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: QuadExt) -> Self {
        Self::new(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(QuadExt::one())
    }

    /// The identity polynomial `z`.
    pub fn x() -> Self {
        Self::monomial(1, QuadExt::one())
    }

    pub fn monomial(k: usize, c: QuadExt) -> Self {
        let mut coeffs = vec![QuadExt::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// `prod (z - r)` over the given roots.
    pub fn from_roots<'a, I>(roots: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a QuadExt>,
    {
        roots.into_iter().try_fold(Self::one(), |acc, r| {
            acc.try_mul(&Self::new(vec![-r, QuadExt::one()]))
        })
    }

    pub fn coeffs(&self) -> &[QuadExt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<QuadExt> {
        self.coeffs
    }

    pub fn coeff(&self, k: usize) -> QuadExt {
        self.coeffs.get(k).cloned().unwrap_or_else(QuadExt::zero)
    }

    /// Coefficients padded with zeros to exactly `len` entries (truncating if longer).
    pub fn padded(&self, len: usize) -> Vec<QuadExt> {
        (0..len).map(|k| self.coeff(k)).collect()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&QuadExt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(QuadExt::is_one)
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs.iter().all(QuadExt::is_rational)
    }

    /// Rational coefficients, if every coefficient is rational.
    pub fn to_rationals(&self) -> Option<Vec<Rational>> {
        self.coeffs
            .iter()
            .map(|c| c.as_rational().cloned())
            .collect()
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &QuadExt) -> Result<QuadExt> {
        self.coeffs
            .iter()
            .rev()
            .try_fold(QuadExt::zero(), |acc, c| acc.try_mul(x)?.try_add(c))
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Self> {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|k| self.coeff(k).try_add(&other.coeff(k)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(coeffs))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Self> {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|k| self.coeff(k).try_sub(&other.coeff(k)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(coeffs))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Self> {
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero());
        }
        let mut coeffs = vec![QuadExt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].try_add(&a.try_mul(b)?)?;
            }
        }
        Ok(Self::new(coeffs))
    }

    pub fn try_scale(&self, k: &QuadExt) -> Result<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.try_mul(k))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(coeffs))
    }

    pub fn scale_rational(&self, k: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.scale(k)).collect())
    }

    pub fn pow(&self, e: u32) -> Result<Self> {
        (0..e).try_fold(Self::one(), |acc, _| acc.try_mul(self))
    }

    /// Multiplication by `z^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![QuadExt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.scale(&super::int(k as i64)))
                .collect(),
        )
    }

    /// Long division: `self = q * den + r` with `deg r < deg den`.
    pub fn divide(&self, den: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        let lead = den
            .leading()
            .ok_or_else(|| Error::Domain("polynomial division by zero polynomial".into()))?;
        let lead_inv = lead.inv()?;
        let dd = den.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![QuadExt::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dd].try_mul(&lead_inv)?;
            if c.is_zero() {
                continue;
            }
            for (i, d) in den.coeffs.iter().enumerate() {
                rem[k + i] = rem[k + i].try_sub(&c.try_mul(d)?)?;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs)
            .expect("polynomial addition across fields")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs)
            .expect("polynomial subtraction across fields")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs)
            .expect("polynomial multiplication across fields")
    }
}

/// Renders as `x^3 - 16*x`; irrational coefficients are parenthesized.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (neg, body) = match c.as_rational() {
                Some(r) => {
                    let mag = r.abs();
                    let body = if mag.is_one() && k > 0 {
                        String::new()
                    } else {
                        mag.to_string()
                    };
                    (r.is_negative(), body)
                }
                None => (false, format!("({c})")),
            };
            let sep = match (first, neg) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            let var = match k {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{k}"),
            };
            let star = if !body.is_empty() && !var.is_empty() {
                "*"
            } else {
                ""
            };
            write!(f, "{sep}{body}{star}{var}")?;
            first = false;
        }
        Ok(())
    }
}
