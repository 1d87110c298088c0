//! Boole, higher-order Boole, Euler and Stirling number generators.
//!
//! Every family is read off a truncated generating function: the value at
//! index `n` is `n! · [t^n]` of the series.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::rat::Rat;
use crate::ring::Ring;
use crate::series::{binom_pow, exp_minus_one, log1p, Series};

pub const DEFAULT_N_MAX: usize = 16;

/// How λ enters a computation: as the indeterminate, or pinned to a
/// nonzero rational.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub enum LambdaMode {
    #[default]
    Symbolic,
    Fixed(Rat),
}

impl LambdaMode {
    /// λ = q; the generating function is undefined at λ = 0.
    pub fn fixed(q: Rat) -> Result<Self> {
        if q.is_zero() {
            return Err(Error::InvalidArgument("λ must be nonzero".into()));
        }
        Ok(LambdaMode::Fixed(q))
    }

    /// λ as an element of the Laurent ring: the indeterminate, or a constant.
    pub fn as_laurent(&self) -> LaurentPoly {
        match self {
            LambdaMode::Symbolic => LaurentPoly::lambda(),
            LambdaMode::Fixed(q) => LaurentPoly::constant(q.clone()),
        }
    }

    /// Maps a symbolic value into this mode (identity when symbolic).
    pub fn specialize(&self, p: &LaurentPoly) -> Result<LaurentPoly> {
        match self {
            LambdaMode::Symbolic => Ok(p.clone()),
            LambdaMode::Fixed(q) => Ok(LaurentPoly::constant(p.eval(q)?)),
        }
    }
}

impl fmt::Display for LambdaMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LambdaMode::Symbolic => f.write_str("symbolic"),
            LambdaMode::Fixed(q) => write!(f, "{q}"),
        }
    }
}

impl FromStr for LambdaMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "symbolic" => Ok(LambdaMode::Symbolic),
            other => LambdaMode::fixed(other.parse()?),
        }
    }
}

impl Serialize for LambdaMode {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for LambdaMode {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(deserializer)?.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Boole,
    BoolePolynomial,
    Euler,
    Stirling1,
    Stirling2,
}

/// Values of a table: polynomials in λ, or rationals at a fixed λ.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Values {
    Symbolic(Vec<LaurentPoly>),
    Fixed(Vec<Rat>),
}

impl Values {
    pub fn len(&self) -> usize {
        match self {
            Values::Symbolic(v) => v.len(),
            Values::Fixed(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Canonical ASCII rendering of entry `n` (`l` stands for λ).
    pub fn render(&self, n: usize) -> Option<String> {
        match self {
            Values::Symbolic(v) => v.get(n).map(ToString::to_string),
            Values::Fixed(v) => v.get(n).map(ToString::to_string),
        }
    }

    pub fn as_symbolic(&self) -> Option<&[LaurentPoly]> {
        match self {
            Values::Symbolic(v) => Some(v),
            Values::Fixed(_) => None,
        }
    }

    pub fn as_fixed(&self) -> Option<&[Rat]> {
        match self {
            Values::Fixed(v) => Some(v),
            Values::Symbolic(_) => None,
        }
    }
}

/// `Bl_0^{(r)} .. Bl_{n_max}^{(r)}`, optionally with a shift `(1+t)^x`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BooleTable {
    pub family: Family,
    pub n_max: usize,
    pub r: u32,
    pub mode: LambdaMode,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x: Option<Rat>,
    pub values: Values,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EulerTable {
    pub family: Family,
    pub n_max: usize,
    pub r: u32,
    pub values: Vec<Rat>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StirlingKind {
    /// Signed, generated by `(log(1+t))^k / k!`.
    First,
    /// Generated by `(e^t - 1)^k / k!`.
    Second,
}

/// `S(n, k)` for `0 ≤ k ≤ n ≤ n_max`; row `n` holds `n + 1` entries.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StirlingTriangle {
    pub family: Family,
    pub kind: StirlingKind,
    pub n_max: usize,
    pub values: Vec<Vec<Rat>>,
}

impl StirlingTriangle {
    /// `S(n, k)`, zero when `k > n`.
    pub fn get(&self, n: usize, k: usize) -> Rat {
        self.values.get(n).and_then(|row| row.get(k)).cloned().unwrap_or_default()
    }
}

/// `F(t; λ) = 1 / ((1+t)^λ + 1)` mod `t^order`.
pub fn boole_series<R: Ring>(lambda: &R, order: usize) -> Result<Series<R>> {
    if lambda.is_zero() {
        return Err(Error::InvalidArgument("λ must be nonzero".into()));
    }
    binom_pow(lambda, order)?.add(&Series::one(order)?).inv()
}

/// `Bl_n^{(r)}(λ)` for `n ≤ n_max`, for every order `r = 1..=r_max`.
/// Row `r - 1` of the result holds order `r`.
pub fn boole_power_values<R: Ring>(n_max: usize, r_max: u32, lambda: &R) -> Result<Vec<Vec<R>>> {
    let f = boole_series(lambda, n_max + 1)?;
    let mut power = f.clone();
    let mut out = Vec::with_capacity(r_max as usize);
    for r in 1..=r_max {
        if r > 1 {
            power = power.mul(&f)?;
        }
        out.push(power.egf_coeffs());
    }
    Ok(out)
}

/// `Bl_n^{(r)}(λ)` for `n ≤ n_max` over any coefficient ring.
pub fn boole_values<R: Ring>(n_max: usize, r: u32, lambda: &R) -> Result<Vec<R>> {
    if r == 0 {
        return Err(Error::InvalidArgument("order r must be >= 1".into()));
    }
    Ok(boole_series(lambda, n_max + 1)?.pow(r)?.egf_coeffs())
}

/// `Bl_n(x | λ) = n! [t^n] F(t; λ) (1+t)^x`.
pub fn boole_polynomial_values<R: Ring>(n_max: usize, x: &Rat, lambda: &R) -> Result<Vec<R>> {
    let order = n_max + 1;
    let shift = binom_pow(&R::from_rat(x.clone()), order)?;
    Ok(boole_series(lambda, order)?.mul(&shift)?.egf_coeffs())
}

/// Boole (`r = 1`) or higher-order Boole numbers.
pub fn boole_numbers(n_max: usize, r: u32, mode: &LambdaMode) -> Result<BooleTable> {
    let values = match mode {
        LambdaMode::Symbolic => Values::Symbolic(boole_values(n_max, r, &LaurentPoly::lambda())?),
        LambdaMode::Fixed(q) => Values::Fixed(boole_values(n_max, r, q)?),
    };
    Ok(BooleTable { family: Family::Boole, n_max, r, mode: mode.clone(), x: None, values })
}

/// Boole polynomials `Bl_n(x | λ)` at a rational `x`.
pub fn boole_polynomials(n_max: usize, x: &Rat, mode: &LambdaMode) -> Result<BooleTable> {
    let values = match mode {
        LambdaMode::Symbolic => Values::Symbolic(boole_polynomial_values(n_max, x, &LaurentPoly::lambda())?),
        LambdaMode::Fixed(q) => Values::Fixed(boole_polynomial_values(n_max, x, q)?),
    };
    Ok(BooleTable {
        family: Family::BoolePolynomial,
        n_max,
        r: 1,
        mode: mode.clone(),
        x: Some(x.clone()),
        values,
    })
}

/// `(2 / (e^t + 1))^r` mod `t^order`.
pub fn euler_series(order: usize, r: u32) -> Result<Series<Rat>> {
    let two = Rat::from_int(2);
    let base = exp_minus_one::<Rat>(order)?
        .add(&Series::constant(two.clone(), order)?)
        .inv()?
        .scale(&two);
    base.pow(r)
}

/// `E_n^{(r)}` for `n ≤ n_max`.
pub fn euler_numbers(n_max: usize, r: u32) -> Result<EulerTable> {
    if r == 0 {
        return Err(Error::InvalidArgument("order r must be >= 1".into()));
    }
    let values = euler_series(n_max + 1, r)?.egf_coeffs();
    Ok(EulerTable { family: Family::Euler, n_max, r, values })
}

fn stirling_from_series(base: Series<Rat>, kind: StirlingKind, family: Family) -> Result<StirlingTriangle> {
    let n_max = base.order() - 1;
    let mut values: Vec<Vec<Rat>> = (0..=n_max).map(|n| vec![Rat::zero(); n + 1]).collect();
    // power holds base^k / k!
    let mut power = Series::one(base.order())?;
    for k in 0..=n_max {
        if k > 0 {
            power = power.mul(&base)?.scale(&Rat::new(1, k as i64)?);
        }
        for (n, row) in values.iter_mut().enumerate().skip(k) {
            row[k] = power.egf_coeff(n).unwrap();
        }
    }
    Ok(StirlingTriangle { family, kind, n_max, values })
}

/// Stirling numbers of the second kind, `S₂(n,k) = n! [t^n] (e^t-1)^k / k!`.
pub fn stirling2(n_max: usize) -> Result<StirlingTriangle> {
    stirling_from_series(exp_minus_one(n_max + 1)?, StirlingKind::Second, Family::Stirling2)
}

/// Signed Stirling numbers of the first kind,
/// `S₁(n,k) = n! [t^n] (log(1+t))^k / k!`.
pub fn stirling1(n_max: usize) -> Result<StirlingTriangle> {
    stirling_from_series(log1p(n_max + 1)?, StirlingKind::First, Family::Stirling1)
}
