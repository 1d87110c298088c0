//! Text renderings of tables, triangles, series and reports.

use std::fmt::Write as _;

use boole_core::{
    ATriangle, BooleTable, EulerTable, LambdaMode, Rat, Ring, Series, StirlingKind, StirlingTriangle, Values,
    VerifyReport,
};
use serde::Serialize;

use crate::cli::Format;

pub fn json<T: Serialize + ?Sized>(value: &T) -> anyhow::Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn approx(r: &Rat) -> String {
    format!("(≈ {:.6e})", r.to_f64())
}

fn boole_title(t: &BooleTable) -> String {
    let mut title = match t.x {
        Some(ref x) => format!("Boole polynomials Bl_n(x|λ), x = {x}"),
        None if t.r == 1 => "Boole numbers Bl_n(λ)".to_string(),
        None => format!("Higher-order Boole numbers Bl_n^({})(λ)", t.r),
    };
    if let LambdaMode::Fixed(q) = &t.mode {
        title.push_str(&format!(", λ = {q}"));
    }
    title
}

pub fn boole_table(t: &BooleTable, format: Format) -> anyhow::Result<String> {
    let mut out = String::new();
    match format {
        Format::Json => return json(t),
        Format::Csv => {
            for n in 0..t.values.len() {
                writeln!(out, "{n},{}", t.values.render(n).unwrap())?;
            }
        }
        Format::Pretty => {
            writeln!(out, "{}  (l = λ)", boole_title(t))?;
            for n in 0..t.values.len() {
                let v = t.values.render(n).unwrap();
                match &t.values {
                    Values::Fixed(vals) => writeln!(out, "{n:>4}  {v}  {}", approx(&vals[n]))?,
                    Values::Symbolic(_) => writeln!(out, "{n:>4}  {v}")?,
                }
            }
        }
    }
    Ok(out)
}

pub fn euler_table(t: &EulerTable, format: Format) -> anyhow::Result<String> {
    let mut out = String::new();
    match format {
        Format::Json => return json(t),
        Format::Csv => {
            for (n, v) in t.values.iter().enumerate() {
                writeln!(out, "{n},{v}")?;
            }
        }
        Format::Pretty => {
            if t.r == 1 {
                writeln!(out, "Euler numbers E_n")?;
            } else {
                writeln!(out, "Higher-order Euler numbers E_n^({})", t.r)?;
            }
            for (n, v) in t.values.iter().enumerate() {
                writeln!(out, "{n:>4}  {v}  {}", approx(v))?;
            }
        }
    }
    Ok(out)
}

pub fn stirling_table(t: &StirlingTriangle, format: Format) -> anyhow::Result<String> {
    let mut out = String::new();
    match format {
        Format::Json => return json(t),
        Format::Csv => {
            for (n, row) in t.values.iter().enumerate() {
                for (k, v) in row.iter().enumerate() {
                    writeln!(out, "{n},{k},{v}")?;
                }
            }
        }
        Format::Pretty => {
            let title = match t.kind {
                StirlingKind::First => "Stirling numbers of the first kind S1(n,k) (signed)",
                StirlingKind::Second => "Stirling numbers of the second kind S2(n,k)",
            };
            writeln!(out, "{title}")?;
            for (n, row) in t.values.iter().enumerate() {
                let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
                writeln!(out, "{n:>4}  {}", cells.join(" "))?;
            }
        }
    }
    Ok(out)
}

/// The triangle with λ pinned to a rational.
#[derive(Serialize)]
pub struct FixedTriangle {
    pub n_max: usize,
    pub lambda: Rat,
    pub rows: Vec<Vec<Rat>>,
}

impl FixedTriangle {
    pub fn new(tri: &ATriangle, lambda: &Rat) -> anyhow::Result<Self> {
        let rows = tri
            .rows()
            .iter()
            .map(|row| row.iter().map(|a| a.eval(lambda)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        Ok(FixedTriangle { n_max: tri.n_max(), lambda: lambda.clone(), rows })
    }
}

fn pretty_rows<T: std::fmt::Display>(out: &mut String, rows: &[Vec<T>]) -> std::fmt::Result {
    for (n, row) in rows.iter().enumerate() {
        let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
        writeln!(out, "N={n:<3} [{}]", cells.join(", "))?;
    }
    Ok(())
}

pub fn triangle(tri: &ATriangle, format: Format, matrix: bool) -> anyhow::Result<String> {
    let mut out = String::new();
    match format {
        Format::Json => return json(tri),
        Format::Csv => out.push_str(&tri.to_csv()),
        Format::Pretty if matrix => {
            writeln!(out, "Matrix (a_i(j; λ)), rows i, columns j  (l = λ)")?;
            for (i, row) in tri.matrix_view().iter().enumerate() {
                let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
                writeln!(out, "i={i:<3} {}", cells.join(" | "))?;
            }
        }
        Format::Pretty => {
            writeln!(out, "Coefficient triangle a_k(N; λ), k = 0..N  (l = λ)")?;
            pretty_rows(&mut out, tri.rows())?;
        }
    }
    Ok(out)
}

pub fn fixed_triangle(tri: &FixedTriangle, format: Format) -> anyhow::Result<String> {
    let mut out = String::new();
    match format {
        Format::Json => return json(tri),
        Format::Csv => {
            for (n, row) in tri.rows.iter().enumerate() {
                for (k, v) in row.iter().enumerate() {
                    writeln!(out, "{n},{k},{v}")?;
                }
            }
        }
        Format::Pretty => {
            writeln!(out, "Coefficient triangle a_k(N; λ) at λ = {}", tri.lambda)?;
            pretty_rows(&mut out, &tri.rows)?;
        }
    }
    Ok(out)
}

pub fn series<R: Ring + Serialize>(s: &Series<R>, format: Format, title: &str) -> anyhow::Result<String> {
    let mut out = String::new();
    match format {
        Format::Json => return json(s),
        Format::Csv => {
            for (n, c) in s.coeffs().iter().enumerate() {
                writeln!(out, "{n},{c}")?;
            }
        }
        Format::Pretty => {
            writeln!(out, "{title} mod t^{}  (l = λ)", s.order())?;
            for (n, c) in s.coeffs().iter().enumerate() {
                writeln!(out, "t^{n:<3} {c}")?;
            }
        }
    }
    Ok(out)
}

pub fn reports(reports: &[VerifyReport], format: Format) -> anyhow::Result<String> {
    let mut out = String::new();
    match format {
        Format::Json => return json(reports),
        Format::Csv => {
            writeln!(out, "identity,passed,params,first_failure")?;
            for r in reports {
                let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
                let failure = r
                    .counterexample
                    .as_ref()
                    .map(|c| c.index.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(";"))
                    .unwrap_or_default();
                writeln!(out, "{},{},{},{}", r.identity, r.passed, params.join(";"), failure)?;
            }
        }
        Format::Pretty => {
            for r in reports {
                writeln!(out, "{}", r.summary_line())?;
            }
            let passed = reports.iter().filter(|r| r.passed).count();
            writeln!(out, "{passed}/{} identity families passed", reports.len())?;
        }
    }
    Ok(out)
}
