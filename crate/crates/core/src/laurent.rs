//! Polynomials in λ that may carry a single λ^{-1} term.
//!
//! Coefficients are stored densely from `min_exp` upward and normalized
//! eagerly, so structural equality is mathematical equality.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rat::Rat;

/// Lowest power of λ a value may carry.
pub const MIN_EXPONENT: i32 = -1;

/// `Σ coeffs[i] · λ^(min_exp + i)`.
///
/// The zero polynomial is stored as `min_exp = 0` with no coefficients;
/// otherwise the first and last stored coefficients are nonzero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    min_exp: i32,
    coeffs: Vec<Rat>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { min_exp: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::normalized(0, vec![c])
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(Rat::from_int(n))
    }

    /// The indeterminate λ.
    pub fn lambda() -> Self {
        Self::normalized(1, vec![Rat::one()])
    }

    /// `c · λ^exp`.
    pub fn monomial(c: Rat, exp: i32) -> Result<Self> {
        Self::from_coeffs(exp, vec![c])
    }

    /// `a + b·λ`, the shape of every falling-factorial argument.
    pub fn linear(a: Rat, b: Rat) -> Self {
        Self::normalized(0, vec![a, b])
    }

    /// Builds and normalizes; rejects any nonzero term below λ^{-1}.
    pub fn from_coeffs(min_exp: i32, coeffs: Vec<Rat>) -> Result<Self> {
        let p = Self::normalized(min_exp, coeffs);
        if p.min_exp < MIN_EXPONENT {
            return Err(Error::ExponentUnderflow { exponent: p.min_exp as i64 });
        }
        Ok(p)
    }

    fn normalized(min_exp: i32, mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Rat::is_zero) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == coeffs.len() {
            return Self::zero();
        }
        coeffs.drain(..lead);
        LaurentPoly { min_exp: min_exp + lead as i32, coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_exp(&self) -> i32 {
        self.min_exp
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Highest power present, `None` for zero.
    pub fn degree(&self) -> Option<i32> {
        if self.is_zero() {
            None
        } else {
            Some(self.min_exp + self.coeffs.len() as i32 - 1)
        }
    }

    /// Coefficient of λ^exp.
    pub fn coeff(&self, exp: i32) -> Rat {
        let idx = exp - self.min_exp;
        if idx < 0 {
            return Rat::zero();
        }
        self.coeffs.get(idx as usize).cloned().unwrap_or_default()
    }

    /// True when no negative power is present.
    pub fn is_polynomial(&self) -> bool {
        self.is_zero() || self.min_exp >= 0
    }

    /// True when the value is a constant (including zero).
    pub fn is_constant(&self) -> bool {
        self.is_zero() || (self.min_exp == 0 && self.coeffs.len() == 1)
    }

    /// `Some((c, e))` if this is the single nonzero term `c·λ^e`.
    pub fn as_monomial(&self) -> Option<(&Rat, i32)> {
        match self.coeffs.as_slice() {
            [c] => Some((c, self.min_exp)),
            _ => None,
        }
    }

    /// Exact product; fails if the result would need λ^{-2} or lower.
    pub fn try_mul(&self, rhs: &LaurentPoly) -> Result<LaurentPoly> {
        if self.is_zero() || rhs.is_zero() {
            return Ok(Self::zero());
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Self::from_coeffs(self.min_exp + rhs.min_exp, out)
    }

    pub fn scale(&self, c: &Rat) -> LaurentPoly {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            min_exp: self.min_exp,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplies by λ^shift.
    pub fn shift(&self, shift: i32) -> Result<LaurentPoly> {
        if self.is_zero() {
            return Ok(Self::zero());
        }
        Self::from_coeffs(self.min_exp + shift, self.coeffs.clone())
    }

    pub fn pow(&self, exp: u32) -> Result<LaurentPoly> {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = acc.try_mul(self)?;
        }
        Ok(acc)
    }

    /// Evaluates at `λ = x`. A λ^{-1} term at `x = 0` is a division by zero.
    pub fn eval(&self, x: &Rat) -> Result<Rat> {
        if self.is_zero() {
            return Ok(Rat::zero());
        }
        if self.min_exp < 0 && x.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        Ok(acc * x.pow(self.min_exp)?)
    }

    /// Inverse of a monomial `c·λ^e` with `e ∈ {0, 1}`.
    pub fn try_inv(&self) -> Result<LaurentPoly> {
        match self.as_monomial() {
            Some((c, e)) if e == 0 || e == 1 => Self::monomial(c.recip()?, -e),
            _ => Err(Error::NotInvertible(format!("{self} is not a unit in this coefficient domain"))),
        }
    }
}

/// `(base)_n = base (base-1) ⋯ (base-n+1)`, with `(base)_0 = 1` and the
/// extension `(base)_{-1} = 1 / (base+1)`.
///
/// The `n = -1` case needs `base + 1` to be a monomial `c` or `c·λ`.
pub fn falling_factorial(base: &LaurentPoly, n: i64) -> Result<LaurentPoly> {
    match n {
        -1 => {
            let shifted = base + &LaurentPoly::one();
            if shifted.as_monomial().is_none() {
                return Err(Error::NonMonomialBase(shifted.to_string()));
            }
            shifted.try_inv()
        }
        n if n < -1 => Err(Error::InvalidArgument(format!("falling factorial subscript {n} < -1"))),
        n => {
            let mut acc = LaurentPoly::one();
            for i in 0..n {
                acc = acc.try_mul(&(base - &LaurentPoly::from_int(i)))?;
            }
            Ok(acc)
        }
    }
}

impl Default for LaurentPoly {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<Rat> for LaurentPoly {
    fn from(c: Rat) -> Self {
        Self::constant(c)
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let lo = self.min_exp.min(rhs.min_exp);
        let hi = self.degree().unwrap().max(rhs.degree().unwrap());
        let coeffs = (lo..=hi).map(|e| self.coeff(e) + rhs.coeff(e)).collect();
        LaurentPoly::normalized(lo, coeffs)
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            min_exp: self.min_exp,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

/// ASCII form with `l` standing for λ, terms in ascending power:
/// `-1-3*l`, `1/4*l`, `l^-1`, `2+l^2`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let exp = self.min_exp + i as i32;
            let var = match exp {
                0 => String::new(),
                1 => "l".to_string(),
                e => format!("l^{e}"),
            };
            let term = if var.is_empty() {
                c.to_string()
            } else if c.is_one() {
                var
            } else if *c == Rat::from_int(-1) {
                format!("-{var}")
            } else {
                format!("{c}*{var}")
            };
            if !first && !term.starts_with('-') {
                f.write_str("+")?;
            }
            f.write_str(&term)?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let bytes = s.as_bytes();
        let mut starts = vec![0];
        for i in 1..bytes.len() {
            if matches!(bytes[i], b'+' | b'-') && bytes[i - 1] != b'^' {
                starts.push(i);
            }
        }
        starts.push(bytes.len());
        let mut acc = LaurentPoly::zero();
        for w in starts.windows(2) {
            acc = &acc + &parse_term(&s[w[0]..w[1]])?;
        }
        Ok(acc)
    }
}

fn parse_term(term: &str) -> Result<LaurentPoly> {
    let bad = || Error::Parse(format!("bad term {term:?}"));
    let (negative, body) = match term.as_bytes().first() {
        Some(b'-') => (true, &term[1..]),
        Some(b'+') => (false, &term[1..]),
        _ => (false, term),
    };
    let (coeff, exp) = match body.split_once('l') {
        None => (body.parse::<Rat>().map_err(|_| bad())?, 0),
        Some((pre, post)) => {
            let coeff = match pre {
                "" => Rat::one(),
                p => p.strip_suffix('*').ok_or_else(bad)?.parse::<Rat>().map_err(|_| bad())?,
            };
            let exp = match post {
                "" => 1,
                p => p.strip_prefix('^').ok_or_else(bad)?.parse::<i32>().map_err(|_| bad())?,
            };
            (coeff, exp)
        }
    };
    LaurentPoly::monomial(if negative { -coeff } else { coeff }, exp)
}

#[derive(Serialize, Deserialize)]
struct RawLaurent {
    min_exp: i32,
    coeffs: Vec<Rat>,
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        RawLaurent { min_exp: self.min_exp, coeffs: self.coeffs.clone() }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = RawLaurent::deserialize(deserializer)?;
        LaurentPoly::from_coeffs(raw.min_exp, raw.coeffs).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn r(s: &str) -> Rat {
        s.parse().unwrap()
    }

    #[test]
    fn add_examples() {
        assert_eq!(lp("l") + lp("-l"), LaurentPoly::zero());
        assert_eq!(lp("1+l") + lp("2*l"), lp("1+3*l"));
        let sum = lp("l^-1") + lp("l");
        assert_eq!(sum.min_exp(), -1);
        assert_eq!(sum.coeffs(), &[Rat::one(), Rat::zero(), Rat::one()]);
    }

    #[test]
    fn mul_examples() {
        assert_eq!(lp("l").try_mul(&lp("l^-1")).unwrap(), LaurentPoly::one());
        assert_eq!(lp("1+l").try_mul(&lp("1+l")).unwrap(), lp("1+2*l+l^2"));
        assert_eq!(
            lp("l^-1").try_mul(&lp("l^-1")),
            Err(Error::ExponentUnderflow { exponent: -2 })
        );
    }

    #[test]
    fn eval_examples() {
        assert_eq!(lp("1/4*l").eval(&Rat::one()).unwrap(), r("1/4"));
        assert_eq!(lp("l^-1").eval(&Rat::from_int(2)).unwrap(), r("1/2"));
        assert_eq!(LaurentPoly::zero().eval(&Rat::from_int(7)).unwrap(), Rat::zero());
        assert_eq!(lp("l^-1+3").eval(&Rat::zero()), Err(Error::DivisionByZero));
        assert_eq!(lp("2+l^2").eval(&Rat::zero()).unwrap(), Rat::from_int(2));
    }

    #[test]
    fn falling_factorial_examples() {
        assert_eq!(falling_factorial(&lp("l+2"), 2).unwrap(), lp("2+3*l+l^2"));
        assert_eq!(falling_factorial(&lp("l"), 0).unwrap(), LaurentPoly::one());
        assert_eq!(falling_factorial(&lp("l-1"), -1).unwrap(), lp("l^-1"));
        assert_eq!(falling_factorial(&lp("3"), -1).unwrap(), lp("1/4"));
        assert!(matches!(falling_factorial(&lp("l"), -1), Err(Error::NonMonomialBase(_))));
        assert!(falling_factorial(&lp("l"), -2).is_err());
    }

    #[test]
    fn normalization_strips_fringe() {
        let p = LaurentPoly::from_coeffs(-1, vec![Rat::zero(), Rat::one(), Rat::zero()]).unwrap();
        assert_eq!(p.min_exp(), 0);
        assert_eq!(p.coeffs().len(), 1);
        assert!(LaurentPoly::from_coeffs(-3, vec![Rat::zero(), Rat::zero()]).unwrap().is_zero());
        assert!(LaurentPoly::from_coeffs(-2, vec![Rat::one()]).is_err());
    }

    #[test]
    fn display_and_parse() {
        for s in ["0", "1+l", "-1-3*l", "2*l", "-1/4*l", "l^-1", "-l^3", "1/2+l^-1"] {
            let p = lp(s);
            assert_eq!(lp(&p.to_string()), p, "{s}");
        }
        assert_eq!(lp("-1-3*l").to_string(), "-1-3*l");
        assert_eq!(lp("l^-1+l").to_string(), "l^-1+l");
        assert!("l^".parse::<LaurentPoly>().is_err());
        assert!("2l".parse::<LaurentPoly>().is_err());
        assert!("l^-2".parse::<LaurentPoly>().is_err());
    }

    #[test]
    fn inverse_of_units() {
        assert_eq!(lp("2").try_inv().unwrap(), lp("1/2"));
        assert_eq!(lp("-3*l").try_inv().unwrap(), lp("-1/3*l^-1"));
        assert!(lp("1+l").try_inv().is_err());
        assert!(lp("l^2").try_inv().is_err());
        assert!(LaurentPoly::zero().try_inv().is_err());
    }

    #[test]
    fn serde_schema() {
        let json = serde_json::to_string(&lp("1/2-l")).unwrap();
        assert_eq!(json, r#"{"min_exp":0,"coeffs":["1/2","-1"]}"#);
        let back: LaurentPoly = serde_json::from_str(&json).unwrap();
        assert_eq!(back, lp("1/2-l"));
        assert!(serde_json::from_str::<LaurentPoly>(r#"{"min_exp":-2,"coeffs":["1"]}"#).is_err());
    }
}
