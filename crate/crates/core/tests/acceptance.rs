//! Acceptance suite. Every criterion is an exact equality of canonical
//! rationals or Laurent polynomials; there is no numeric tolerance.
//!
//! Run with `cargo test -p boole-core --test acceptance -- --nocapture` to
//! see one PASS/FAIL line per criterion.

use boole_core::ode::{diagonal_closed_form, first_column_closed_form};
use boole_core::special::boole_values;
use boole_core::{
    binom_pow, closed_form_entry, falling_factorial, stirling1, stirling2, ATriangle, IdentityId, LaurentPoly, Rat,
    Series, Verifier, VerifyReport,
};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

type Outcome = Result<(), String>;

fn criterion(id: &str, title: &str, f: impl FnOnce() -> Outcome) {
    let start = std::time::Instant::now();
    let outcome = f();
    let secs = start.elapsed().as_secs_f64();
    match &outcome {
        Ok(()) => println!("[PASS] {id} {title} ({secs:.2}s)"),
        Err(msg) => println!("[FAIL] {id} {title} ({secs:.2}s): {msg}"),
    }
    if let Err(msg) = outcome {
        panic!("{id} failed: {msg}");
    }
}

fn expect_eq<T: PartialEq + std::fmt::Debug>(what: &str, got: &T, want: &T) -> Outcome {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, want {want:?}"))
    }
}

fn expect_pass(report: &VerifyReport) -> Outcome {
    if report.passed {
        Ok(())
    } else {
        Err(report.summary_line())
    }
}

fn lp(s: &str) -> LaurentPoly {
    s.parse().unwrap()
}

fn run_property<S: Strategy>(name: &str, strategy: S, test: impl Fn(S::Value) -> Result<(), TestCaseError>) -> Outcome
where
    S::Value: std::fmt::Debug,
{
    let mut runner = TestRunner::new(Config { cases: 1000, failure_persistence: None, ..Config::default() });
    runner.run(&strategy, test).map_err(|e| format!("{name}: {e}"))
}

#[test]
fn ac1_first_values() {
    criterion("AC1", "first-values reproduction", || {
        let lambda = LaurentPoly::lambda();
        let bl = boole_values(2, 1, &lambda).map_err(|e| e.to_string())?;
        expect_eq("Bl_0", &bl[0], &lp("1/2"))?;
        expect_eq("Bl_1", &bl[1], &lp("-1/4*l"))?;
        expect_eq("Bl_2", &bl[2], &lp("1/4*l"))?;
        for r in 1..=6u32 {
            let v = boole_values(0, r, &lambda).map_err(|e| e.to_string())?;
            let want = LaurentPoly::constant(Rat::from_int(2).pow(-(r as i32)).unwrap());
            expect_eq(&format!("Bl_0^({r})"), &v[0], &want)?;
        }
        Ok(())
    });
}

#[test]
fn ac2_triangle_golden_rows() {
    criterion("AC2", "triangle golden rows and boundary closed forms", || {
        let tri = ATriangle::by_recurrence(12).map_err(|e| e.to_string())?;
        expect_eq("row 1", &tri.row(1).unwrap().to_vec(), &vec![lp("1"), lp("-1")])?;
        expect_eq("row 2", &tri.row(2).unwrap().to_vec(), &vec![lp("1+l"), lp("-1-3*l"), lp("2*l")])?;
        for n in 1..=12usize {
            // (N+λ-1)_{N-1}, built independently of the library's closed-form helper
            let mut a0 = LaurentPoly::one();
            for i in 0..n as i64 - 1 {
                a0 = a0.try_mul(&LaurentPoly::linear(Rat::from_int(n as i64 - 1 - i), Rat::one())).unwrap();
            }
            let sign = if n % 2 == 0 { 1 } else { -1 };
            let diag = LaurentPoly::monomial(Rat::from_int(sign) * Rat::factorial(n as u32), n as i32 - 1).unwrap();
            expect_eq(&format!("a_0({n})"), tri.get(0, n).unwrap(), &a0)?;
            expect_eq(&format!("a_{n}({n})"), tri.get(n, n).unwrap(), &diag)?;
            expect_eq(&format!("closed a_0({n})"), &first_column_closed_form(n).unwrap(), &a0)?;
            expect_eq(&format!("closed a_{n}({n})"), &diagonal_closed_form(n).unwrap(), &diag)?;
        }
        Ok(())
    });
}

#[test]
fn ac3_closed_form_oracle_equivalence() {
    criterion("AC3", "closed-form nested sums equal the recurrence, N <= 12", || {
        let tri = ATriangle::by_recurrence(12).map_err(|e| e.to_string())?;
        for n in 2..=12 {
            for j in 1..n {
                let closed = closed_form_entry(j, n).map_err(|e| format!("a_{j}({n}): {e}"))?;
                expect_eq(&format!("a_{j}({n})"), &closed, tri.get(j, n).unwrap())?;
            }
        }
        Ok(())
    });
}

#[test]
fn ac4_ode_verification() {
    criterion("AC4", "ODE identity for N <= 8 at order 16", || {
        let v = Verifier::symbolic();
        for n in 1..=8 {
            expect_pass(&v.verify_ode(n, 16).map_err(|e| e.to_string())?)?;
        }
        Ok(())
    });
}

#[test]
fn ac5_boole_shift_expansion_grid() {
    criterion("AC5", "Bl_{k+N} expansion for N <= 6, k <= 8", || {
        let v = Verifier::symbolic();
        for n in 1..=6 {
            expect_pass(&v.verify_thm3(n, 8).map_err(|e| e.to_string())?)?;
        }
        Ok(())
    });
}

#[test]
fn ac6_stirling_bridges() {
    criterion("AC6", "Euler/Stirling bridges EQ32 EQ34 EQ36 EQ38", || {
        let v = Verifier::symbolic();
        expect_pass(&v.verify_eq32(12).map_err(|e| e.to_string())?)?;
        expect_pass(&v.verify_eq34(4, 10).map_err(|e| e.to_string())?)?;
        expect_pass(&v.verify_eq36(12).map_err(|e| e.to_string())?)?;
        expect_pass(&v.verify_eq38(4, 10).map_err(|e| e.to_string())?)?;
        Ok(())
    });
}

#[test]
fn ac7_euler_shift_expansion_grid() {
    criterion("AC7", "Euler/Stirling expansion for N <= 4, k <= 6", || {
        let v = Verifier::symbolic();
        for n in 1..=4 {
            let report = v.verify_thm4(n, 6).map_err(|e| e.to_string())?;
            expect_eq("identity", &report.identity, &IdentityId::Thm4)?;
            expect_pass(&report)?;
        }
        Ok(())
    });
}

#[test]
fn ac8_independent_oracles() {
    criterion("AC8", "Stirling orthogonality n,m <= 14 and lambda=1 closed form n <= 15", || {
        let s1 = stirling1(14).map_err(|e| e.to_string())?;
        let s2 = stirling2(14).map_err(|e| e.to_string())?;
        for n in 0..=14 {
            for m in 0..=14 {
                let sum = (0..=14).fold(Rat::zero(), |acc, k| acc + s1.get(n, k) * s2.get(k, m));
                let want = if n == m { Rat::one() } else { Rat::zero() };
                expect_eq(&format!("orthogonality ({n},{m})"), &sum, &want)?;
            }
        }
        let bl = boole_values(15, 1, &LaurentPoly::lambda()).map_err(|e| e.to_string())?;
        for (n, p) in bl.iter().enumerate() {
            let sign = if n % 2 == 0 { 1 } else { -1 };
            let want = Rat::from_int(sign) * Rat::factorial(n as u32) * Rat::from_int(2).pow(-(n as i32 + 1)).unwrap();
            expect_eq(&format!("Bl_{n}(1)"), &p.eval(&Rat::one()).unwrap(), &want)?;
        }
        expect_pass(&Verifier::symbolic().changhee_crosscheck(15).map_err(|e| e.to_string())?)
    });
}

fn small_rat() -> impl Strategy<Value = Rat> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| Rat::new(n, d).unwrap())
}

fn poly(min_exp: std::ops::RangeInclusive<i32>, terms: usize) -> impl Strategy<Value = LaurentPoly> {
    (min_exp, prop::collection::vec(small_rat(), 0..=terms))
        .prop_map(|(e, cs)| LaurentPoly::from_coeffs(e, cs).unwrap())
}

fn rat_series(order: usize) -> impl Strategy<Value = Series<Rat>> {
    prop::collection::vec(small_rat(), order).prop_map(move |cs| Series::new(cs, order).unwrap())
}

fn poly_series(order: usize) -> impl Strategy<Value = Series<LaurentPoly>> {
    prop::collection::vec(poly(0..=1, 3), order).prop_map(move |cs| Series::new(cs, order).unwrap())
}

#[test]
fn ac9_property_suites() {
    criterion("AC9", "ring axioms, inverse law, Leibniz rule, binomial additivity (1000 cases each)", || {
        run_property("Rat field axioms", (small_rat(), small_rat(), small_rat()), |(a, b, c)| {
            prop_assert_eq!((&a + &b) - &b, a.clone());
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            if !a.is_zero() {
                prop_assert_eq!(&a * &a.recip().unwrap(), Rat::one());
            }
            Ok(())
        })?;
        run_property("LaurentPoly additive axioms", (poly(-1..=2, 5), poly(-1..=2, 5), poly(-1..=2, 5)), |(p, q, r)| {
            prop_assert_eq!(&(&p + &q) - &q, p.clone());
            prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
            prop_assert_eq!(&p + &q, &q + &p);
            prop_assert!((&p - &p).is_zero());
            Ok(())
        })?;
        run_property("LaurentPoly ring axioms", (poly(-1..=2, 4), poly(0..=2, 4), poly(0..=2, 4)), |(p, q, r)| {
            let m = |a: &LaurentPoly, b: &LaurentPoly| a.try_mul(b).unwrap();
            prop_assert_eq!(m(&m(&p, &q), &r), m(&p, &m(&q, &r)));
            prop_assert_eq!(m(&p, &q), m(&q, &p));
            prop_assert_eq!(m(&p, &(&q + &r)), &m(&p, &q) + &m(&p, &r));
            prop_assert_eq!(m(&p, &LaurentPoly::one()), p.clone());
            Ok(())
        })?;
        run_property("series inverse law (Rat)", (1usize..=10).prop_flat_map(rat_series), |a| {
            prop_assume!(!a.coeffs()[0].is_zero());
            let prod = a.mul(&a.inv().unwrap()).unwrap();
            prop_assert_eq!(prod, Series::one(a.order()).unwrap());
            Ok(())
        })?;
        let unit_head = (1usize..=8, -3i64..=3)
            .prop_filter("nonzero unit", |(_, c)| *c != 0)
            .prop_flat_map(|(order, c)| {
                poly_series(order).prop_map(move |s| {
                    let mut cs = s.into_coeffs();
                    cs[0] = LaurentPoly::from_int(c);
                    Series::new(cs, order).unwrap()
                })
            });
        run_property("series inverse law (LaurentPoly)", unit_head, |a| {
            let prod = a.mul(&a.inv().unwrap()).unwrap();
            prop_assert_eq!(prod, Series::one(a.order()).unwrap());
            Ok(())
        })?;
        let pair = (2usize..=9).prop_flat_map(|o| (poly_series(o), poly_series(o)));
        run_property("Leibniz rule", pair, |(a, b)| {
            let lhs = a.mul(&b).unwrap().diff().unwrap();
            let rhs = a.diff().unwrap().mul(&b.truncate(a.order() - 1).unwrap()).unwrap().add(
                &a.truncate(a.order() - 1).unwrap().mul(&b.diff().unwrap()).unwrap(),
            );
            prop_assert_eq!(lhs, rhs);
            Ok(())
        })?;
        run_property("binom_pow additivity", (poly(0..=1, 2), poly(0..=1, 2), 1usize..=7), |(alpha, beta, order)| {
            let lhs = binom_pow(&alpha, order).unwrap().mul(&binom_pow(&beta, order).unwrap()).unwrap();
            let rhs = binom_pow(&(&alpha + &beta), order).unwrap();
            prop_assert_eq!(lhs, rhs);
            Ok(())
        })?;
        run_property("binom_pow falling-factorial form", (poly(0..=1, 2), 1usize..=7), |(alpha, order)| {
            let s = binom_pow(&alpha, order).unwrap();
            for n in 0..order {
                let ff = falling_factorial(&alpha, n as i64).unwrap().scale(&Rat::factorial(n as u32).recip().unwrap());
                prop_assert_eq!(s.coeff(n).unwrap(), &ff);
            }
            Ok(())
        })?;
        Ok(())
    });
}
