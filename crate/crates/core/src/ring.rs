//! The coefficient-ring interface shared by [`Rat`] and [`LaurentPoly`].

use std::fmt::{Debug, Display};

use crate::error::Result;
use crate::laurent::LaurentPoly;
use crate::rat::Rat;

/// A commutative ring containing ℚ, with a fallible product (Laurent
/// products can leave the supported exponent range).
pub trait Ring: Clone + PartialEq + Debug + Display + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_rat(c: Rat) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn try_mul(&self, rhs: &Self) -> Result<Self>;
    fn scale(&self, c: &Rat) -> Self;
    fn try_inv(&self) -> Result<Self>;

    /// False for values outside the polynomial subring (e.g. λ^{-1}).
    fn is_polynomial(&self) -> bool {
        true
    }

    fn from_int(n: i64) -> Self {
        Self::from_rat(Rat::from_int(n))
    }
}

impl Ring for Rat {
    fn zero() -> Self {
        Rat::zero()
    }
    fn one() -> Self {
        Rat::one()
    }
    fn from_rat(c: Rat) -> Self {
        c
    }
    fn is_zero(&self) -> bool {
        Rat::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn try_mul(&self, rhs: &Self) -> Result<Self> {
        Ok(self * rhs)
    }
    fn scale(&self, c: &Rat) -> Self {
        self * c
    }
    fn try_inv(&self) -> Result<Self> {
        self.recip()
    }
}

impl Ring for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn one() -> Self {
        LaurentPoly::one()
    }
    fn from_rat(c: Rat) -> Self {
        LaurentPoly::constant(c)
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn try_mul(&self, rhs: &Self) -> Result<Self> {
        LaurentPoly::try_mul(self, rhs)
    }
    fn scale(&self, c: &Rat) -> Self {
        LaurentPoly::scale(self, c)
    }
    fn try_inv(&self) -> Result<Self> {
        LaurentPoly::try_inv(self)
    }
    fn is_polynomial(&self) -> bool {
        LaurentPoly::is_polynomial(self)
    }
}
