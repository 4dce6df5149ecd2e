//! Reduced fractions of polynomials: the entries of chart maps and the
//! verdict carrier for irregular lifts.

use super::gcd::gcd;
use super::{Coeff, Ctx, Polynomial};
use crate::error::Error;
use crate::Result;
use num_traits::Signed;

/// A fraction of polynomials, kept reduced: the gcd of numerator and
/// denominator is 1 and the denominator's leading coefficient (grevlex)
/// is positive.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero("zero denominator polynomial".into()));
        }
        if !num.context().same_as(den.context()) {
            return Err(Error::ContextMismatch("rational function".into()));
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: Polynomial, den: Polynomial) -> Self {
        if num.is_zero() {
            return RationalFunction { den: Polynomial::one(den.context()), num };
        }
        let g = gcd(&num, &den);
        let mut num = num.div_exact(&g).expect("gcd divides numerator");
        let mut den = den.div_exact(&g).expect("gcd divides denominator");
        // normalize: denominator primitive with positive leading coefficient
        let scale = den.rational_content();
        den = den.scale(&scale.clone().recip());
        num = num.scale(&scale.recip());
        debug_assert!(den.leading_term().unwrap().1.is_positive());
        RationalFunction { num, den }
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        let den = Polynomial::one(p.context());
        RationalFunction { num: p, den }
    }

    pub fn zero(ctx: &Ctx) -> Self {
        Self::from_polynomial(Polynomial::zero(ctx))
    }

    pub fn constant(ctx: &Ctx, c: Coeff) -> Self {
        Self::from_polynomial(Polynomial::constant(ctx, c))
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    pub fn context(&self) -> &Ctx {
        self.num.context()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// True when the denominator is the constant 1.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let num = self
            .num
            .checked_mul(&other.den)?
            .checked_add(&other.num.checked_mul(&self.den)?)?;
        Ok(Self::reduced(num, self.den.mul(&other.den)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        RationalFunction { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        let num = self.num.checked_mul(&other.num)?;
        Ok(Self::reduced(num, self.den.mul(&other.den)))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero(
                "division by the zero rational function".into(),
            ));
        }
        let num = self.num.checked_mul(&other.den)?;
        Ok(Self::reduced(num, self.den.mul(&other.num)))
    }

    pub fn power(&self, k: u32) -> Result<Self> {
        if k == 0 {
            return Ok(Self::from_polynomial(Polynomial::one(self.context())));
        }
        Ok(RationalFunction { num: self.num.power(k), den: self.den.power(k) })
    }

    /// The underlying polynomial when the denominator is 1.
    pub fn as_polynomial(&self) -> Option<&Polynomial> {
        if self.is_polynomial() {
            Some(&self.num)
        } else {
            None
        }
    }
}
