//! Truncated formal power series in `t`.
//!
//! A [`Series`] is known modulo `t^order`. Binary operations on series of
//! different orders produce a result at the smaller order; differentiation
//! lowers the order by one instead of inventing an unknown top coefficient.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rat::Rat;
use crate::ring::Ring;

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
#[serde(try_from = "RawSeries<R>", bound(deserialize = "R: Ring + Deserialize<'de>"))]
pub struct Series<R> {
    order: usize,
    coeffs: Vec<R>,
}

#[derive(Deserialize)]
struct RawSeries<R> {
    order: usize,
    coeffs: Vec<R>,
}

impl<R: Ring> TryFrom<RawSeries<R>> for Series<R> {
    type Error = Error;

    fn try_from(raw: RawSeries<R>) -> Result<Self> {
        if raw.coeffs.len() != raw.order {
            return Err(Error::Parse(format!(
                "series of order {} carries {} coefficients",
                raw.order,
                raw.coeffs.len()
            )));
        }
        Series::new(raw.coeffs, raw.order)
    }
}

impl<R: Ring> Series<R> {
    /// Pads with zeros or truncates `coeffs` to exactly `order` terms.
    pub fn new(mut coeffs: Vec<R>, order: usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::OrderTooSmall { order, what: "a series needs order >= 1" });
        }
        coeffs.resize(order, R::zero());
        Ok(Series { order, coeffs })
    }

    pub fn zero(order: usize) -> Result<Self> {
        Self::new(Vec::new(), order)
    }

    pub fn constant(c: R, order: usize) -> Result<Self> {
        Self::new(vec![c], order)
    }

    pub fn one(order: usize) -> Result<Self> {
        Self::constant(R::one(), order)
    }

    /// The series `t`.
    pub fn t(order: usize) -> Result<Self> {
        Self::new(vec![R::zero(), R::one()], order)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    /// `[t^n]`, or `None` beyond the truncation order.
    pub fn coeff(&self, n: usize) -> Option<&R> {
        self.coeffs.get(n)
    }

    /// `n! · [t^n]`, the exponential-generating-function coefficient.
    pub fn egf_coeff(&self, n: usize) -> Option<R> {
        self.coeff(n).map(|c| c.scale(&Rat::factorial(n as u32)))
    }

    /// All `n! · [t^n]` for `n < order`.
    pub fn egf_coeffs(&self) -> Vec<R> {
        (0..self.order).map(|n| self.egf_coeff(n).unwrap()).collect()
    }

    pub fn truncate(&self, order: usize) -> Result<Self> {
        if order > self.order {
            return Err(Error::InvalidArgument(format!(
                "cannot extend a series known mod t^{} to order {order}",
                self.order
            )));
        }
        Self::new(self.coeffs[..order].to_vec(), order)
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Series<S> {
        Series { order: self.order, coeffs: self.coeffs.iter().map(f).collect() }
    }

    pub fn try_map<S: Ring>(&self, f: impl Fn(&R) -> Result<S>) -> Result<Series<S>> {
        let coeffs = self.coeffs.iter().map(f).collect::<Result<Vec<_>>>()?;
        Ok(Series { order: self.order, coeffs })
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(&R, &R) -> R) -> Self {
        let order = self.order.min(rhs.order);
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).take(order).map(|(a, b)| f(a, b)).collect();
        Series { order, coeffs }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.zip_with(rhs, R::add)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.zip_with(rhs, R::sub)
    }

    pub fn neg(&self) -> Self {
        self.map(R::neg)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        self.map(|a| a.scale(c))
    }

    /// Multiplies every coefficient by the ring element `c`.
    pub fn mul_scalar(&self, c: &R) -> Result<Self> {
        self.try_map(|a| a.try_mul(c))
    }

    /// Cauchy product, truncated to the smaller order.
    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        let order = self.order.min(rhs.order);
        let mut coeffs = vec![R::zero(); order];
        for (i, a) in self.coeffs.iter().take(order).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(order - i).enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].add(&a.try_mul(b)?);
            }
        }
        Ok(Series { order, coeffs })
    }

    pub fn pow(&self, exp: u32) -> Result<Self> {
        let mut acc = Self::one(self.order)?;
        for _ in 0..exp {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Multiplicative inverse; the constant term must be a unit.
    pub fn inv(&self) -> Result<Self> {
        let c0_inv = self.coeffs[0]
            .try_inv()
            .map_err(|_| Error::NotInvertible(format!("constant term {} is not a unit", self.coeffs[0])))?;
        let mut out: Vec<R> = Vec::with_capacity(self.order);
        out.push(c0_inv.clone());
        for n in 1..self.order {
            let mut acc = R::zero();
            for k in 1..=n {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                acc = acc.add(&self.coeffs[k].try_mul(&out[n - k])?);
            }
            out.push(acc.try_mul(&c0_inv)?.neg());
        }
        Ok(Series { order: self.order, coeffs: out })
    }

    /// Term-by-term derivative; the result is known to one order less.
    pub fn diff(&self) -> Result<Self> {
        if self.order < 2 {
            return Err(Error::OrderTooSmall { order: self.order, what: "differentiation needs order >= 2" });
        }
        let coeffs = (1..self.order).map(|n| self.coeffs[n].scale(&Rat::from_int(n as i64))).collect();
        Ok(Series { order: self.order - 1, coeffs })
    }

    /// `n`-fold derivative, order drops by `n`.
    pub fn diff_n(&self, n: usize) -> Result<Self> {
        (0..n).try_fold(self.clone(), |s, _| s.diff())
    }

    /// `exp(a)` for `a` with zero constant term, from `(exp a)' = a' exp a`:
    /// `n b_n = Σ_{k=1}^{n} k a_k b_{n-k}`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::InvalidArgument(format!(
                "exp needs a zero constant term, got {}",
                self.coeffs[0]
            )));
        }
        let mut out: Vec<R> = Vec::with_capacity(self.order);
        out.push(R::one());
        for n in 1..self.order {
            let mut acc = R::zero();
            for k in 1..=n {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                let term = self.coeffs[k].try_mul(&out[n - k])?.scale(&Rat::from_int(k as i64));
                acc = acc.add(&term);
            }
            out.push(acc.scale(&Rat::new(1, n as i64)?));
        }
        Ok(Series { order: self.order, coeffs: out })
    }

    /// `self(inner(t))` by Horner's rule; `inner` must have zero constant
    /// term so the truncation stays exact.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::InvalidArgument(
                "inner series of a composition must have zero constant term".into(),
            ));
        }
        let order = self.order.min(inner.order);
        let mut acc = Self::constant(self.coeffs[order - 1].clone(), order)?;
        for k in (0..order - 1).rev() {
            acc = acc.mul(inner)?;
            acc.coeffs[0] = acc.coeffs[0].add(&self.coeffs[k]);
        }
        Ok(acc)
    }
}

/// `log(1+t) = Σ_{k≥1} (-1)^{k+1} t^k / k` mod `t^order`.
pub fn log1p<R: Ring>(order: usize) -> Result<Series<R>> {
    let coeffs = (0..order)
        .map(|k| match k {
            0 => Ok(R::zero()),
            k => {
                let sign = if k % 2 == 1 { 1 } else { -1 };
                Rat::new(sign, k as i64).map(R::from_rat)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Series::new(coeffs, order)
}

/// `e^t - 1` mod `t^order`.
pub fn exp_minus_one<R: Ring>(order: usize) -> Result<Series<R>> {
    let mut coeffs = Vec::with_capacity(order);
    for k in 0..order {
        coeffs.push(match k {
            0 => R::zero(),
            k => R::from_rat(Rat::factorial(k as u32).recip()?),
        });
    }
    Series::new(coeffs, order)
}

/// `(1+t)^α = exp(α · log(1+t))` mod `t^order`; the coefficient of `t^n`
/// is `(α)_n / n!`. `α` must be a polynomial.
pub fn binom_pow<R: Ring>(alpha: &R, order: usize) -> Result<Series<R>> {
    if !alpha.is_polynomial() {
        return Err(Error::InvalidArgument(format!("binomial exponent {alpha} has a negative power of λ")));
    }
    log1p::<R>(order)?.mul_scalar(alpha)?.exp()
}

/// `a(e^t - 1)` at the order of `a`.
pub fn compose_exp_minus_one<R: Ring>(a: &Series<R>) -> Result<Series<R>> {
    a.compose(&exp_minus_one(a.order())?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::{falling_factorial, LaurentPoly};

    fn r(s: &str) -> Rat {
        s.parse().unwrap()
    }

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn rs(cs: &[&str], order: usize) -> Series<Rat> {
        Series::new(cs.iter().map(|c| r(c)).collect(), order).unwrap()
    }

    #[test]
    fn mul_examples() {
        assert_eq!(rs(&["1", "1"], 3).mul(&rs(&["1", "-1"], 3)).unwrap(), rs(&["1", "0", "-1"], 3));
        let e = rs(&["1", "1", "1/2"], 3);
        assert_eq!(e.mul(&e).unwrap(), rs(&["1", "2", "2"], 3));
        let a = rs(&["3", "-1/2", "7"], 3);
        assert_eq!(a.mul(&Series::one(3).unwrap()).unwrap(), a);
    }

    #[test]
    fn mixed_orders_truncate_to_minimum() {
        let a = rs(&["1", "1", "1"], 3);
        let b = rs(&["1", "1", "1", "1", "1"], 5);
        assert_eq!(a.mul(&b).unwrap().order(), 3);
        assert_eq!(a.add(&b).order(), 3);
    }

    #[test]
    fn inv_examples() {
        assert_eq!(rs(&["2", "1"], 3).inv().unwrap(), rs(&["1/2", "-1/4", "1/8"], 3));
        assert_eq!(Series::<Rat>::one(4).unwrap().inv().unwrap(), Series::one(4).unwrap());
        assert!(matches!(rs(&["0", "1", "1"], 3).inv(), Err(Error::NotInvertible(_))));
    }

    #[test]
    fn diff_examples() {
        let d = rs(&["1", "1", "1"], 3).diff().unwrap();
        assert_eq!(d, rs(&["1", "2"], 2));
        assert_eq!(rs(&["5"], 4).diff().unwrap(), Series::zero(3).unwrap());
        assert!(rs(&["5"], 1).diff().is_err());
    }

    #[test]
    fn derivative_of_boole_generating_function_at_zero() {
        let f = binom_pow(&LaurentPoly::lambda(), 4)
            .unwrap()
            .add(&Series::one(4).unwrap())
            .inv()
            .unwrap();
        assert_eq!(f.diff().unwrap().coeff(0).unwrap(), &lp("-1/4*l"));
    }

    #[test]
    fn log1p_examples() {
        assert_eq!(log1p::<Rat>(4).unwrap(), rs(&["0", "1", "-1/2", "1/3"], 4));
        assert!(log1p::<Rat>(1).unwrap().coeff(0).unwrap().is_zero());
        let back = log1p::<Rat>(10).unwrap().exp().unwrap();
        assert_eq!(back, rs(&["1", "1"], 10));
    }

    #[test]
    fn exp_examples() {
        assert_eq!(rs(&["0", "1"], 4).exp().unwrap(), rs(&["1", "1", "1/2", "1/6"], 4));
        assert_eq!(Series::<Rat>::zero(5).unwrap().exp().unwrap(), Series::one(5).unwrap());
        assert!(rs(&["1"], 3).exp().is_err());
        let p = log1p::<LaurentPoly>(5).unwrap().mul_scalar(&LaurentPoly::lambda()).unwrap().exp().unwrap();
        assert_eq!(p.coeff(2).unwrap(), &lp("-1/2*l+1/2*l^2"));
    }

    #[test]
    fn binom_pow_examples() {
        let p = binom_pow(&LaurentPoly::lambda(), 3).unwrap();
        assert_eq!(p.coeff(1).unwrap(), &LaurentPoly::lambda());
        assert_eq!(binom_pow(&Rat::from_int(2), 6).unwrap(), rs(&["1", "2", "1"], 6));
        assert!(binom_pow(&lp("l^-1"), 3).is_err());
    }

    #[test]
    fn binom_pow_negative_integer_matches_falling_factorial_expansion() {
        // (1+t)^{-N} = Σ (-1)^l (N+l-1)_l t^l / l!
        for n in 1..6i64 {
            let s = binom_pow(&Rat::from_int(-n), 9).unwrap();
            for l in 0..9i64 {
                let ff = falling_factorial(&LaurentPoly::from_int(n + l - 1), l).unwrap().coeff(0);
                let sign = if l % 2 == 0 { Rat::one() } else { Rat::from_int(-1) };
                let expect = sign * ff * Rat::factorial(l as u32).recip().unwrap();
                assert_eq!(s.coeff(l as usize).unwrap(), &expect, "N={n} l={l}");
            }
        }
    }

    #[test]
    fn compose_examples() {
        assert_eq!(
            compose_exp_minus_one(&rs(&["0", "1"], 4)).unwrap(),
            rs(&["0", "1", "1/2", "1/6"], 4)
        );
        assert_eq!(compose_exp_minus_one(&rs(&["0", "0", "1"], 4)).unwrap(), rs(&["0", "0", "1", "1"], 4));
        assert!(rs(&["1", "1"], 3).compose(&rs(&["1", "1"], 3)).is_err());
    }

    #[test]
    fn compose_log1p_is_identity() {
        let id = compose_exp_minus_one(&log1p::<Rat>(12).unwrap()).unwrap();
        assert_eq!(id, rs(&["0", "1"], 12));
    }

    #[test]
    fn laurent_products_propagate_underflow() {
        let s = Series::new(vec![lp("l^-1"), lp("l^-1")], 3).unwrap();
        assert!(matches!(s.mul(&s), Err(Error::ExponentUnderflow { .. })));
    }

    #[test]
    fn serde_schema() {
        let json = serde_json::to_string(&rs(&["1/2", "-1/4"], 2)).unwrap();
        assert_eq!(json, r#"{"order":2,"coeffs":["1/2","-1/4"]}"#);
        let back: Series<Rat> = serde_json::from_str(&json).unwrap();
        assert_eq!(back, rs(&["1/2", "-1/4"], 2));
        assert!(serde_json::from_str::<Series<Rat>>(r#"{"order":3,"coeffs":["1"]}"#).is_err());
    }
}
