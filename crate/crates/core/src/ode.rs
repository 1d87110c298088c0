//! The coefficient triangle `a_k(N; λ)` of the nonlinear ODEs
//!
//! ```text
//! F^(N) = (-1)^N λ / (1+t)^N · Σ_{i=1}^{N+1} a_{i-1}(N; λ) F^i,   F = 1/((1+t)^λ + 1)
//! ```
//!
//! [`ATriangle::by_recurrence`] is the authoritative constructor. The
//! nested-sum closed form ([`closed_form_entry`]) and the one-step unrolled
//! sum ([`one_step_unrolled`]) are independent routes to the same entries.

use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::laurent::{falling_factorial, LaurentPoly};
use crate::rat::Rat;

/// `a_k(N; λ)` for `0 ≤ k ≤ N ≤ n_max`; row `N` holds `N + 1` entries.
#[derive(Clone, Debug, PartialEq)]
pub struct ATriangle {
    rows: Vec<Vec<LaurentPoly>>,
}

impl ATriangle {
    /// Builds rows `0..=n_max` from the seeds `a_0(0) = 1/λ`, `a_0(1) = 1`,
    /// `a_1(1) = -1`.
    pub fn by_recurrence(n_max: usize) -> Result<Self> {
        if n_max < 1 {
            return Err(Error::InvalidArgument("triangle needs N_max >= 1".into()));
        }
        let mut tri = ATriangle {
            rows: vec![
                vec![LaurentPoly::monomial(Rat::one(), -1)?],
                vec![LaurentPoly::one(), LaurentPoly::from_int(-1)],
            ],
        };
        tri.extend_to(n_max)?;
        Ok(tri)
    }

    /// Appends rows up to `n_max`; existing rows are kept.
    pub fn extend_to(&mut self, n_max: usize) -> Result<()> {
        while self.n_max() < n_max {
            let next = next_row(self.rows.last().unwrap(), self.n_max())?;
            self.rows.push(next);
        }
        Ok(())
    }

    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn rows(&self) -> &[Vec<LaurentPoly>] {
        &self.rows
    }

    pub fn row(&self, n: usize) -> Option<&[LaurentPoly]> {
        self.rows.get(n).map(Vec::as_slice)
    }

    /// `a_k(n; λ)`.
    pub fn get(&self, k: usize, n: usize) -> Option<&LaurentPoly> {
        self.rows.get(n).and_then(|row| row.get(k))
    }

    /// The square matrix `(a_i(j; λ))_{0 ≤ i, j ≤ n_max}`: column `j` is row
    /// `j` of the triangle, and entries below the diagonal are zero.
    pub fn matrix_view(&self) -> Vec<Vec<LaurentPoly>> {
        let size = self.rows.len();
        (0..size)
            .map(|i| (0..size).map(|j| self.get(i, j).cloned().unwrap_or_default()).collect())
            .collect()
    }

    /// One line `N,k,a_k(N)` per entry, `l` standing for λ.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for (n, row) in self.rows.iter().enumerate() {
            for (k, a) in row.iter().enumerate() {
                out.push_str(&format!("{n},{k},{a}\n"));
            }
        }
        out
    }
}

/// Row `n + 1` from row `n`:
/// `a_0(n+1) = (n+λ) a_0(n)`, `a_{n+1}(n+1) = -(n+1) λ a_n(n)` and
/// `a_{i-1}(n+1) = -(i-1) λ a_{i-2}(n) + (n + iλ) a_{i-1}(n)` for `2 ≤ i ≤ n+1`.
fn next_row(row: &[LaurentPoly], n: usize) -> Result<Vec<LaurentPoly>> {
    let n_i = n as i64;
    let lambda = LaurentPoly::lambda();
    let mut next = Vec::with_capacity(n + 2);
    next.push(LaurentPoly::linear(Rat::from_int(n_i), Rat::one()).try_mul(&row[0])?);
    for i in 2..=n + 1 {
        let carried = row[i - 2].try_mul(&lambda)?.scale(&Rat::from_int(-(i as i64 - 1)));
        let kept = LaurentPoly::linear(Rat::from_int(n_i), Rat::from_int(i as i64)).try_mul(&row[i - 1])?;
        next.push(&carried + &kept);
    }
    next.push(row[n].try_mul(&lambda)?.scale(&Rat::from_int(-(n_i + 1))));
    Ok(next)
}

/// `a_0(n; λ) = (n + λ - 1)_{n-1}`; at `n = 0` this is `1/λ`.
pub fn first_column_closed_form(n: usize) -> Result<LaurentPoly> {
    let n = n as i64;
    falling_factorial(&LaurentPoly::linear(Rat::from_int(n - 1), Rat::one()), n - 1)
}

/// `a_n(n; λ) = (-1)^n λ^{n-1} n!` for `n ≥ 1`.
pub fn diagonal_closed_form(n: usize) -> Result<LaurentPoly> {
    if n == 0 {
        return Err(Error::IndexOutOfRange("diagonal closed form needs n >= 1".into()));
    }
    let sign = if n % 2 == 0 { Rat::one() } else { Rat::from_int(-1) };
    LaurentPoly::monomial(sign * Rat::factorial(n as u32), n as i32 - 1)
}

/// `a_j(N; λ)` for `1 ≤ j ≤ N - 1` from the j-fold nested sum of falling
/// factorials. With `M = N - 1`:
///
/// ```text
/// a_j(M+1) = (-1)^j j! λ^j Σ_{i_j + … + i_1 ≤ M-j+1}
///            (M + (j+1)λ)_{i_j} (M + jλ - i_j - 1)_{i_{j-1}} ⋯
///            (M + 2λ - i_j - … - i_2 - (j-1))_{i_1}
///            (M + λ - i_j - … - i_1 - j)_{M - i_j - … - i_1 - j}
/// ```
///
/// The innermost subscript reaches `-1` when the indices exhaust the
/// budget; that term is `(λ - 1)_{-1} = 1/λ`.
pub fn closed_form_entry(j: usize, n: usize) -> Result<LaurentPoly> {
    if j == 0 || j + 1 > n {
        return Err(Error::IndexOutOfRange(format!("closed form needs 1 <= j <= N-1, got j={j}, N={n}")));
    }
    let m = n as i64 - 1;
    let j_i = j as i64;
    let sum = nested_sum(j_i, j_i, m, 0, m - j_i + 1)?;
    let sign = if j % 2 == 0 { Rat::one() } else { Rat::from_int(-1) };
    sum.shift(j as i32).map(|p| p.scale(&(sign * Rat::factorial(j as u32))))
}

/// Sum over `i_level, …, i_1` given the indices already chosen sum to
/// `used` and at most `budget` more may be spent.
fn nested_sum(j: i64, level: i64, m: i64, used: i64, budget: i64) -> Result<LaurentPoly> {
    if level == 0 {
        let subscript = m - used - j;
        let arg = LaurentPoly::linear(Rat::from_int(m - used - j), Rat::one());
        if subscript == -1 && &arg + &LaurentPoly::one() != LaurentPoly::lambda() {
            return Err(Error::NonMonomialBase(arg.to_string()));
        }
        return falling_factorial(&arg, subscript);
    }
    let arg = LaurentPoly::linear(Rat::from_int(m - used - (j - level)), Rat::from_int(level + 1));
    let mut ff = LaurentPoly::one();
    let mut acc = LaurentPoly::zero();
    for i in 0..=budget {
        if i > 0 {
            ff = ff.try_mul(&(&arg - &LaurentPoly::from_int(i - 1)))?;
        }
        let inner = nested_sum(j, level - 1, m, used + i, budget - i)?;
        acc = &acc + &ff.try_mul(&inner)?;
    }
    Ok(acc)
}

/// The full triangle from closed forms alone: [`first_column_closed_form`],
/// [`diagonal_closed_form`] and [`closed_form_entry`]. Entries are computed
/// in parallel.
pub fn triangle_by_closed_form(n_max: usize) -> Result<ATriangle> {
    if n_max < 1 {
        return Err(Error::InvalidArgument("triangle needs N_max >= 1".into()));
    }
    let rows = (0..=n_max)
        .into_par_iter()
        .map(|n| {
            (0..=n)
                .into_par_iter()
                .map(|k| match k {
                    0 => first_column_closed_form(n),
                    k if k == n => diagonal_closed_form(n),
                    k => closed_form_entry(k, n),
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ATriangle { rows })
}

/// `a_k(n; λ)` for `1 ≤ k ≤ n - 1` from a single unrolled recurrence step,
/// reading the previous column from `tri`:
/// `a_k(N+1) = -kλ Σ_{i=0}^{N-k+1} (N + (k+1)λ)_i a_{k-1}(N - i)`, `N = n - 1`.
pub fn one_step_unrolled(tri: &ATriangle, k: usize, n: usize) -> Result<LaurentPoly> {
    if k == 0 || k >= n || n > tri.n_max() + 1 {
        return Err(Error::IndexOutOfRange(format!("unrolled sum needs 1 <= k <= N-1 within the triangle, got k={k}, N={n}")));
    }
    let big_n = n as i64 - 1;
    let k_i = k as i64;
    let arg = LaurentPoly::linear(Rat::from_int(big_n), Rat::from_int(k_i + 1));
    let mut ff = LaurentPoly::one();
    let mut acc = LaurentPoly::zero();
    for i in 0..=(big_n - k_i + 1) {
        if i > 0 {
            ff = ff.try_mul(&(&arg - &LaurentPoly::from_int(i - 1)))?;
        }
        let prev = tri
            .get(k - 1, (big_n - i) as usize)
            .ok_or_else(|| Error::IndexOutOfRange(format!("a_{}({})", k - 1, big_n - i)))?;
        acc = &acc + &ff.try_mul(prev)?;
    }
    acc.shift(1).map(|p| p.scale(&Rat::from_int(-k_i)))
}

#[derive(Serialize, Deserialize)]
struct RawTriangle {
    n_max: usize,
    rows: Vec<Vec<String>>,
    entries: Vec<Vec<LaurentPoly>>,
}

/// Serialized as `{"n_max", "rows", "entries"}`: `rows` holds the ASCII
/// strings, `entries` the structured Laurent polynomials.
impl Serialize for ATriangle {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        RawTriangle {
            n_max: self.n_max(),
            rows: self.rows.iter().map(|r| r.iter().map(ToString::to_string).collect()).collect(),
            entries: self.rows.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ATriangle {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = RawTriangle::deserialize(deserializer)?;
        if raw.entries.len() != raw.n_max + 1 || raw.entries.iter().enumerate().any(|(n, r)| r.len() != n + 1) {
            return Err(D::Error::custom("triangle entries do not match n_max"));
        }
        Ok(ATriangle { rows: raw.entries })
    }
}
