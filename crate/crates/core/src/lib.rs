//! Exact computation of Boole numbers and the coefficient triangle of the
//! nonlinear differential equations satisfied by their generating function
//! `F(t; λ) = 1 / ((1+t)^λ + 1)`.
//!
//! Everything is exact: coefficients are [`Rat`]s or Laurent polynomials in
//! λ ([`LaurentPoly`]), and generating functions are truncated power series
//! ([`Series`]) over either ring.

pub mod error;
pub mod laurent;
pub mod ode;
pub mod rat;
pub mod ring;
pub mod series;
pub mod special;
pub mod verify;

pub use error::{Error, Result};
pub use laurent::{falling_factorial, LaurentPoly};
pub use ode::{closed_form_entry, one_step_unrolled, triangle_by_closed_form, ATriangle};
pub use rat::Rat;
pub use ring::Ring;
pub use series::{binom_pow, compose_exp_minus_one, exp_minus_one, log1p, Series};
pub use special::{
    boole_numbers, boole_polynomials, euler_numbers, stirling1, stirling2, BooleTable, EulerTable, Family,
    LambdaMode, StirlingKind, StirlingTriangle, Values,
};
pub use verify::{Counterexample, IdentityId, SuiteConfig, Verifier, VerifyReport};
