//! Bounded-grid verification of the Boole-number identities.
//!
//! Each check compares two exact values (Laurent polynomials in λ, or
//! constants when λ is pinned) and the report records the first index, in
//! iteration order, where they differ.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::ode::ATriangle;
use crate::rat::Rat;
use crate::series::{binom_pow, Series};
use crate::special::{
    boole_power_values, boole_series, euler_series, stirling1, stirling2, LambdaMode, StirlingTriangle,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum IdentityId {
    /// `F^(N)` equals the coefficient-triangle right-hand side.
    Ode,
    /// `Bl_{k+N}` through higher-order Boole numbers.
    Thm3,
    /// `λ^n E_n / 2 = Σ Bl_k S₂(n,k)`.
    Eq32,
    /// `2^{-i} λ^n E_n^{(i)} = Σ Bl_k^{(i)} S₂(n,k)`.
    Eq34,
    /// `Bl_n = ½ Σ E_k λ^k S₁(n,k)`.
    Eq36,
    /// `2^i Bl_n^{(i)} = Σ E_k^{(i)} λ^k S₁(n,k)`.
    Eq38,
    /// The Euler/Stirling form of `Thm3`.
    Thm4,
    /// `Bl_n(1) = (-1)^n n! / 2^{n+1}`.
    Changhee,
}

impl IdentityId {
    pub const ALL: [IdentityId; 8] = [
        IdentityId::Ode,
        IdentityId::Thm3,
        IdentityId::Eq32,
        IdentityId::Eq34,
        IdentityId::Eq36,
        IdentityId::Eq38,
        IdentityId::Thm4,
        IdentityId::Changhee,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityId::Ode => "ODE",
            IdentityId::Thm3 => "THM3",
            IdentityId::Eq32 => "EQ32",
            IdentityId::Eq34 => "EQ34",
            IdentityId::Eq36 => "EQ36",
            IdentityId::Eq38 => "EQ38",
            IdentityId::Thm4 => "THM4",
            IdentityId::Changhee => "CHANGHEE",
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown identity {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Counterexample {
    pub index: BTreeMap<String, i64>,
    pub lhs: LaurentPoly,
    pub rhs: LaurentPoly,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub identity: IdentityId,
    pub params: BTreeMap<String, i64>,
    /// Present only when λ was pinned to a rational.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<String>,
    pub passed: bool,
    pub counterexample: Option<Counterexample>,
}

impl VerifyReport {
    fn from_checks(identity: IdentityId, params: &[(&str, i64)], mode: &LambdaMode, checks: Vec<Check>) -> Self {
        let counterexample = checks.into_iter().find(|c| c.lhs != c.rhs).map(|c| Counterexample {
            index: c.index.into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
            lhs: c.lhs,
            rhs: c.rhs,
        });
        VerifyReport {
            identity,
            params: params.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
            lambda: match mode {
                LambdaMode::Symbolic => None,
                LambdaMode::Fixed(q) => Some(q.to_string()),
            },
            passed: counterexample.is_none(),
            counterexample,
        }
    }

    /// One-line terminal summary.
    pub fn summary_line(&self) -> String {
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let status = if self.passed { "PASS" } else { "FAIL" };
        let mut line = format!("{:<9} {:<4} {}", self.identity.name(), status, params.join(" "));
        if let Some(q) = &self.lambda {
            line.push_str(&format!(" lambda={q}"));
        }
        if let Some(c) = &self.counterexample {
            let idx: Vec<String> = c.index.iter().map(|(k, v)| format!("{k}={v}")).collect();
            line.push_str(&format!("  first failure at {}: lhs={} rhs={}", idx.join(","), c.lhs, c.rhs));
        }
        line
    }
}

struct Check {
    index: Vec<(&'static str, i64)>,
    lhs: LaurentPoly,
    rhs: LaurentPoly,
}

/// Merges per-parameter check lists (already in index order).
fn flatten(parts: Vec<Vec<Check>>) -> Vec<Check> {
    parts.into_iter().flatten().collect()
}

fn sign(n: i64) -> Rat {
    if n % 2 == 0 {
        Rat::one()
    } else {
        Rat::from_int(-1)
    }
}

fn two_pow(e: i32) -> Rat {
    Rat::from_int(2).pow(e).expect("2 is nonzero")
}

/// `(N + l - 1)_l` as an integer.
fn rising_weight(n: i64, l: i64) -> Rat {
    (0..l).fold(Rat::one(), |acc, i| acc * Rat::from_int(n + l - 1 - i))
}

/// Grid sizes for a full run. Defaults follow the acceptance grid.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteConfig {
    /// Largest ODE order `N` for the ODE, THM3 and THM4 grids.
    pub big_n_max: usize,
    pub k_max: usize,
    pub n_max: usize,
    pub i_max: usize,
    /// Series truncation order for the ODE check.
    pub order: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { big_n_max: 8, k_max: 8, n_max: 12, i_max: 4, order: 16 }
    }
}

/// Runs identity checks with λ symbolic or pinned.
#[derive(Clone, Debug, Default)]
pub struct Verifier {
    mode: LambdaMode,
}

impl Verifier {
    pub fn new(mode: LambdaMode) -> Self {
        Verifier { mode }
    }

    pub fn symbolic() -> Self {
        Self::new(LambdaMode::Symbolic)
    }

    pub fn mode(&self) -> &LambdaMode {
        &self.mode
    }

    fn lambda(&self) -> LaurentPoly {
        self.mode.as_laurent()
    }

    fn triangle_row(&self, n: usize) -> Result<Vec<LaurentPoly>> {
        let tri = ATriangle::by_recurrence(n.max(1))?;
        tri.row(n).unwrap().iter().map(|a| self.mode.specialize(a)).collect()
    }

    fn report(&self, id: IdentityId, params: &[(&str, i64)], checks: Vec<Check>) -> VerifyReport {
        VerifyReport::from_checks(id, params, &self.mode, checks)
    }

    fn ode_checks(&self, n: usize, order: usize) -> Result<Vec<Check>> {
        if order < n + 2 {
            return Err(Error::InvalidArgument(format!("ODE check needs order >= N+2, got N={n}, order={order}")));
        }
        let lambda = self.lambda();
        let f = boole_series(&lambda, order)?;
        let lhs = f.diff_n(n)?;
        let row = self.triangle_row(n)?;
        let mut combo = Series::zero(order)?;
        let mut power = f.clone();
        for (i, a) in row.iter().enumerate() {
            if i > 0 {
                power = power.mul(&f)?;
            }
            combo = combo.add(&power.mul_scalar(a)?);
        }
        let prefactor = lambda.scale(&sign(n as i64));
        let rhs = binom_pow(&LaurentPoly::from_int(-(n as i64)), order)?
            .mul(&combo)?
            .mul_scalar(&prefactor)?
            .truncate(order - n)?;
        Ok(lhs
            .coeffs()
            .iter()
            .zip(rhs.coeffs())
            .enumerate()
            .map(|(t, (l, r))| Check { index: vec![("N", n as i64), ("t", t as i64)], lhs: l.clone(), rhs: r.clone() })
            .collect())
    }

    /// `F^(N)` against the triangle right-hand side, mod `t^{order-N}`.
    pub fn verify_ode(&self, n: usize, order: usize) -> Result<VerifyReport> {
        let checks = self.ode_checks(n, order)?;
        Ok(self.report(IdentityId::Ode, &[("N", n as i64), ("order", order as i64)], checks))
    }

    /// [`Self::verify_ode`] for every `1 ≤ N ≤ n_max`.
    pub fn verify_ode_grid(&self, n_max: usize, order: usize) -> Result<VerifyReport> {
        let parts = (1..=n_max).into_par_iter().map(|n| self.ode_checks(n, order)).collect::<Result<Vec<_>>>()?;
        Ok(self.report(IdentityId::Ode, &[("N_max", n_max as i64), ("order", order as i64)], flatten(parts)))
    }

    /// The right-hand side shared by THM3 and THM4:
    /// `(-1)^N λ Σ_{i=1}^{N+1} a_{i-1}(N) Σ_{l=0}^{k} C(k,l) (-1)^l (N+l-1)_l inner(i, k-l)`.
    fn expansion_rhs(
        &self,
        row: &[LaurentPoly],
        n: usize,
        k: usize,
        inner: impl Fn(usize, usize) -> Result<LaurentPoly>,
    ) -> Result<LaurentPoly> {
        let mut total = LaurentPoly::zero();
        for (idx, a) in row.iter().enumerate() {
            let i = idx + 1;
            let mut sum_l = LaurentPoly::zero();
            for l in 0..=k {
                let w = Rat::binomial(k as u32, l as u32) * sign(l as i64) * rising_weight(n as i64, l as i64);
                sum_l = &sum_l + &inner(i, k - l)?.scale(&w);
            }
            total = &total + &a.try_mul(&sum_l)?;
        }
        total.try_mul(&self.lambda().scale(&sign(n as i64)))
    }

    fn thm3_checks(&self, n: usize, k_max: usize) -> Result<Vec<Check>> {
        if n < 1 {
            return Err(Error::InvalidArgument("THM3 needs N >= 1".into()));
        }
        let row = self.triangle_row(n)?;
        let bl = boole_power_values(k_max + n, n as u32 + 1, &self.lambda())?;
        (0..=k_max)
            .map(|k| {
                let rhs = self.expansion_rhs(&row, n, k, |i, m| Ok(bl[i - 1][m].clone()))?;
                Ok(Check { index: vec![("N", n as i64), ("k", k as i64)], lhs: bl[0][k + n].clone(), rhs })
            })
            .collect()
    }

    /// `Bl_{k+N}` through higher-order Boole numbers, for `k ≤ k_max`.
    pub fn verify_thm3(&self, n: usize, k_max: usize) -> Result<VerifyReport> {
        let checks = self.thm3_checks(n, k_max)?;
        Ok(self.report(IdentityId::Thm3, &[("N", n as i64), ("k_max", k_max as i64)], checks))
    }

    pub fn verify_thm3_grid(&self, n_max: usize, k_max: usize) -> Result<VerifyReport> {
        let parts = (1..=n_max).into_par_iter().map(|n| self.thm3_checks(n, k_max)).collect::<Result<Vec<_>>>()?;
        Ok(self.report(IdentityId::Thm3, &[("N_max", n_max as i64), ("k_max", k_max as i64)], flatten(parts)))
    }

    /// `Σ_{k ≤ n} c_k S(n,k)` for a value table `c`.
    fn stirling_sum(values: &[LaurentPoly], s: &StirlingTriangle, n: usize) -> LaurentPoly {
        (0..=n).fold(LaurentPoly::zero(), |acc, k| &acc + &values[k].scale(&s.get(n, k)))
    }

    /// `Σ_{k ≤ n} E_k λ^k S₁(n,k)` with the Euler values scaled by `c`.
    fn euler_stirling1_sum(&self, euler: &[Rat], s1: &StirlingTriangle, n: usize, c: &Rat) -> Result<LaurentPoly> {
        let lambda = self.lambda();
        let mut acc = LaurentPoly::zero();
        let mut lp = LaurentPoly::one();
        for (k, e) in euler.iter().enumerate().take(n + 1) {
            if k > 0 {
                lp = lp.try_mul(&lambda)?;
            }
            acc = &acc + &lp.scale(&(e * &s1.get(n, k)));
        }
        Ok(acc.scale(c))
    }

    fn eq34_checks(&self, i: usize, n_max: usize, s2: &StirlingTriangle) -> Result<Vec<Check>> {
        let lambda = self.lambda();
        let bl = boole_power_values(n_max, i as u32, &lambda)?.pop().unwrap();
        let euler = euler_series(n_max + 1, i as u32)?.egf_coeffs();
        let scale = two_pow(-(i as i32));
        (0..=n_max)
            .map(|n| {
                let lhs = lambda.pow(n as u32)?.scale(&(&euler[n] * &scale));
                let rhs = Self::stirling_sum(&bl, s2, n);
                Ok(Check { index: vec![("i", i as i64), ("n", n as i64)], lhs, rhs })
            })
            .collect()
    }

    /// `λ^n E_n / 2 = Σ_k Bl_k S₂(n,k)` for `n ≤ n_max`.
    pub fn verify_eq32(&self, n_max: usize) -> Result<VerifyReport> {
        let checks = self.eq34_checks(1, n_max, &stirling2(n_max)?)?;
        let checks = checks
            .into_iter()
            .map(|c| Check { index: vec![c.index[1]], ..c })
            .collect();
        Ok(self.report(IdentityId::Eq32, &[("n_max", n_max as i64)], checks))
    }

    /// `2^{-i} λ^n E_n^{(i)} = Σ_k Bl_k^{(i)} S₂(n,k)` for `1 ≤ i ≤ i_max`, `n ≤ n_max`.
    pub fn verify_eq34(&self, i_max: usize, n_max: usize) -> Result<VerifyReport> {
        let s2 = stirling2(n_max)?;
        let parts = (1..=i_max).into_par_iter().map(|i| self.eq34_checks(i, n_max, &s2)).collect::<Result<Vec<_>>>()?;
        Ok(self.report(IdentityId::Eq34, &[("i_max", i_max as i64), ("n_max", n_max as i64)], flatten(parts)))
    }

    fn eq38_checks(&self, i: usize, n_max: usize, s1: &StirlingTriangle) -> Result<Vec<Check>> {
        let bl = boole_power_values(n_max, i as u32, &self.lambda())?.pop().unwrap();
        let euler = euler_series(n_max + 1, i as u32)?.egf_coeffs();
        let scale = two_pow(i as i32);
        (0..=n_max)
            .map(|n| {
                let lhs = bl[n].scale(&scale);
                let rhs = self.euler_stirling1_sum(&euler, s1, n, &Rat::one())?;
                Ok(Check { index: vec![("i", i as i64), ("n", n as i64)], lhs, rhs })
            })
            .collect()
    }

    /// `Bl_n = ½ Σ_k E_k λ^k S₁(n,k)` for `n ≤ n_max`.
    pub fn verify_eq36(&self, n_max: usize) -> Result<VerifyReport> {
        let s1 = stirling1(n_max)?;
        let bl = boole_power_values(n_max, 1, &self.lambda())?.pop().unwrap();
        let euler = euler_series(n_max + 1, 1)?.egf_coeffs();
        let half = Rat::new(1, 2)?;
        let checks = (0..=n_max)
            .map(|n| {
                let rhs = self.euler_stirling1_sum(&euler, &s1, n, &half)?;
                Ok(Check { index: vec![("n", n as i64)], lhs: bl[n].clone(), rhs })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(self.report(IdentityId::Eq36, &[("n_max", n_max as i64)], checks))
    }

    /// `2^i Bl_n^{(i)} = Σ_k E_k^{(i)} λ^k S₁(n,k)` for `1 ≤ i ≤ i_max`, `n ≤ n_max`.
    pub fn verify_eq38(&self, i_max: usize, n_max: usize) -> Result<VerifyReport> {
        let s1 = stirling1(n_max)?;
        let parts = (1..=i_max).into_par_iter().map(|i| self.eq38_checks(i, n_max, &s1)).collect::<Result<Vec<_>>>()?;
        Ok(self.report(IdentityId::Eq38, &[("i_max", i_max as i64), ("n_max", n_max as i64)], flatten(parts)))
    }

    fn thm4_checks(&self, n: usize, k_max: usize) -> Result<Vec<Check>> {
        if n < 1 {
            return Err(Error::InvalidArgument("THM4 needs N >= 1".into()));
        }
        let row = self.triangle_row(n)?;
        let s1 = stirling1(k_max + n)?;
        let euler: Vec<Vec<Rat>> = (1..=n as u32 + 1)
            .map(|i| euler_series(k_max + n + 1, i).map(|s| s.egf_coeffs()))
            .collect::<Result<_>>()?;
        let half = Rat::new(1, 2)?;
        (0..=k_max)
            .map(|k| {
                let lhs = self.euler_stirling1_sum(&euler[0], &s1, k + n, &half)?;
                let rhs = self.expansion_rhs(&row, n, k, |i, m| {
                    self.euler_stirling1_sum(&euler[i - 1], &s1, m, &two_pow(-(i as i32)))
                })?;
                Ok(Check { index: vec![("N", n as i64), ("k", k as i64)], lhs, rhs })
            })
            .collect()
    }

    /// The Euler/Stirling form of [`Self::verify_thm3`].
    pub fn verify_thm4(&self, n: usize, k_max: usize) -> Result<VerifyReport> {
        let checks = self.thm4_checks(n, k_max)?;
        Ok(self.report(IdentityId::Thm4, &[("N", n as i64), ("k_max", k_max as i64)], checks))
    }

    pub fn verify_thm4_grid(&self, n_max: usize, k_max: usize) -> Result<VerifyReport> {
        let parts = (1..=n_max).into_par_iter().map(|n| self.thm4_checks(n, k_max)).collect::<Result<Vec<_>>>()?;
        Ok(self.report(IdentityId::Thm4, &[("N_max", n_max as i64), ("k_max", k_max as i64)], flatten(parts)))
    }

    /// `Bl_n(λ)` at `λ = 1` against `(-1)^n n! / 2^{n+1}`. Always computed
    /// from the symbolic table, whatever the verifier's mode.
    pub fn changhee_crosscheck(&self, n_max: usize) -> Result<VerifyReport> {
        let bl = boole_power_values(n_max, 1, &LaurentPoly::lambda())?.pop().unwrap();
        let checks = bl
            .iter()
            .enumerate()
            .map(|(n, p)| {
                let lhs = LaurentPoly::constant(p.eval(&Rat::one())?);
                let rhs = LaurentPoly::constant(sign(n as i64) * Rat::factorial(n as u32) * two_pow(-(n as i32 + 1)));
                Ok(Check { index: vec![("n", n as i64)], lhs, rhs })
            })
            .collect::<Result<Vec<_>>>()?;
        let report = self.report(IdentityId::Changhee, &[("n_max", n_max as i64)], checks);
        Ok(VerifyReport { lambda: None, ..report })
    }

    /// One identity over the suite grid.
    pub fn run_identity(&self, id: IdentityId, cfg: &SuiteConfig) -> Result<VerifyReport> {
        match id {
            IdentityId::Ode => self.verify_ode_grid(cfg.big_n_max, cfg.order),
            IdentityId::Thm3 => self.verify_thm3_grid(cfg.big_n_max, cfg.k_max),
            IdentityId::Eq32 => self.verify_eq32(cfg.n_max),
            IdentityId::Eq34 => self.verify_eq34(cfg.i_max, cfg.n_max),
            IdentityId::Eq36 => self.verify_eq36(cfg.n_max),
            IdentityId::Eq38 => self.verify_eq38(cfg.i_max, cfg.n_max),
            IdentityId::Thm4 => self.verify_thm4_grid(cfg.big_n_max, cfg.k_max),
            IdentityId::Changhee => self.changhee_crosscheck(cfg.n_max),
        }
    }

    /// All eight identity families, in [`IdentityId::ALL`] order.
    pub fn run_suite(&self, cfg: &SuiteConfig) -> Result<Vec<VerifyReport>> {
        IdentityId::ALL.into_par_iter().map(|id| self.run_identity(id, cfg)).collect()
    }
}
