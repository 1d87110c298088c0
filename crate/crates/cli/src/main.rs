mod cli;
mod render;

use std::process::ExitCode;

use anyhow::{bail, Context};
use boole_core::special::boole_series;
use boole_core::{
    boole_numbers, boole_polynomials, euler_numbers, stirling1, stirling2, ATriangle, IdentityId, LambdaMode,
    LaurentPoly, SuiteConfig, Verifier, VerifyReport,
};
use clap::Parser;
use serde::Serialize;

use cli::{AllArgs, Cli, Command, FamilyArg, Format, GridArgs, NumbersArgs, Output, SeriesArgs, TriangleArgs, VerifyArgs};

const THREADS_ENV: &str = "BOOLE_KERNEL_THREADS";

/// Exit status 1 is reserved for identity failures.
const EXIT_IDENTITY_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match configure_threads().and_then(|()| run(cli)) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_IDENTITY_FAILURE),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn configure_threads() -> anyhow::Result<()> {
    let Ok(raw) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let n: usize = raw.trim().parse().with_context(|| format!("{THREADS_ENV}={raw:?} is not a thread count"))?;
    if n == 0 {
        bail!("{THREADS_ENV} must be at least 1");
    }
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    Ok(())
}

/// Returns `Ok(false)` when a verification ran and some identity failed.
fn run(cli: Cli) -> anyhow::Result<bool> {
    match cli.command {
        Command::Numbers(args) => numbers(&args).map(|()| true),
        Command::Triangle(args) => triangle(&args).map(|()| true),
        Command::Series(args) => series(&args).map(|()| true),
        Command::Verify(args) => verify(&args),
        Command::All(args) => all(&args),
    }
}

fn emit(output: &Output, text: &str) -> anyhow::Result<()> {
    match &output.out {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn numbers(args: &NumbersArgs) -> anyhow::Result<()> {
    if args.r == 0 {
        bail!("--r must be at least 1");
    }
    let f = args.output.format;
    let text = match args.family {
        FamilyArg::Boole => render::boole_table(&boole_numbers(args.n_max, args.r, &args.lambda)?, f)?,
        FamilyArg::BoolePoly => render::boole_table(&boole_polynomials(args.n_max, &args.x, &args.lambda)?, f)?,
        FamilyArg::Euler => render::euler_table(&euler_numbers(args.n_max, args.r)?, f)?,
        FamilyArg::Stirling1 => render::stirling_table(&stirling1(args.n_max)?, f)?,
        FamilyArg::Stirling2 => render::stirling_table(&stirling2(args.n_max)?, f)?,
    };
    emit(&args.output, &text)
}

fn build_triangle(big_n_max: usize) -> anyhow::Result<ATriangle> {
    if big_n_max < 1 {
        bail!("--N-max must be at least 1");
    }
    Ok(ATriangle::by_recurrence(big_n_max)?)
}

fn triangle_text(tri: &ATriangle, mode: &LambdaMode, format: Format, matrix: bool) -> anyhow::Result<String> {
    match mode {
        LambdaMode::Symbolic => render::triangle(tri, format, matrix),
        LambdaMode::Fixed(q) => render::fixed_triangle(&render::FixedTriangle::new(tri, q)?, format),
    }
}

fn triangle(args: &TriangleArgs) -> anyhow::Result<()> {
    let tri = build_triangle(args.big_n_max)?;
    let text = triangle_text(&tri, &args.lambda, args.output.format, args.matrix)?;
    emit(&args.output, &text)
}

fn series(args: &SeriesArgs) -> anyhow::Result<()> {
    if args.r == 0 {
        bail!("--r must be at least 1");
    }
    if args.order < args.derivative + 1 {
        bail!("--order must exceed --derivative");
    }
    let mut title = if args.r == 1 { "F(t; λ)".to_string() } else { format!("F(t; λ)^{}", args.r) };
    if args.derivative > 0 {
        title = format!("d^{}/dt^{} {title}", args.derivative, args.derivative);
    }
    let f = args.output.format;
    let text = match &args.lambda {
        LambdaMode::Symbolic => {
            let s = boole_series(&LaurentPoly::lambda(), args.order)?.pow(args.r)?.diff_n(args.derivative)?;
            render::series(&s, f, &title)?
        }
        LambdaMode::Fixed(q) => {
            let s = boole_series(q, args.order)?.pow(args.r)?.diff_n(args.derivative)?;
            render::series(&s, f, &format!("{title} at λ = {q}"))?
        }
    };
    emit(&args.output, &text)
}

fn suite_config(grid: &GridArgs, ids: &[IdentityId]) -> anyhow::Result<SuiteConfig> {
    for (name, v) in [
        ("--N-max", grid.big_n_max),
        ("--k-max", grid.k_max),
        ("--n-max", grid.n_max),
        ("--i-max", grid.i_max),
        ("--order", grid.order),
    ] {
        if v == 0 {
            bail!("{name} must be positive");
        }
    }
    if ids.contains(&IdentityId::Ode) && grid.order < grid.big_n_max + 2 {
        bail!("--order must be at least --N-max + 2 for the ODE check (got order {}, N-max {})", grid.order, grid.big_n_max);
    }
    Ok(SuiteConfig {
        big_n_max: grid.big_n_max,
        k_max: grid.k_max,
        n_max: grid.n_max,
        i_max: grid.i_max,
        order: grid.order,
    })
}

fn run_reports(grid: &GridArgs, ids: &[IdentityId]) -> anyhow::Result<Vec<VerifyReport>> {
    let cfg = suite_config(grid, ids)?;
    let verifier = Verifier::new(grid.lambda.clone());
    ids.iter().map(|&id| Ok(verifier.run_identity(id, &cfg)?)).collect()
}

fn verify(args: &VerifyArgs) -> anyhow::Result<bool> {
    let ids: Vec<IdentityId> =
        if args.all || args.identity.is_empty() { IdentityId::ALL.to_vec() } else { args.identity.clone() };
    let reports = run_reports(&args.grid, &ids)?;
    emit(&args.output, &render::reports(&reports, args.output.format)?)?;
    Ok(reports.iter().all(|r| r.passed))
}

#[derive(Serialize)]
struct AllOutput {
    boole: boole_core::BooleTable,
    triangle: serde_json::Value,
    reports: Vec<VerifyReport>,
}

fn all(args: &AllArgs) -> anyhow::Result<bool> {
    let format = args.output.format;
    if format == Format::Csv {
        bail!("csv output is per table; use the numbers, triangle or verify subcommands");
    }
    let grid = &args.grid;
    let ids = IdentityId::ALL.to_vec();
    suite_config(grid, &ids)?;
    let boole = boole_numbers(grid.n_max, 1, &grid.lambda)?;
    let tri = build_triangle(grid.big_n_max)?;
    let reports = run_reports(grid, &ids)?;
    let text = match format {
        Format::Json => {
            let triangle = match &grid.lambda {
                LambdaMode::Symbolic => serde_json::to_value(&tri)?,
                LambdaMode::Fixed(q) => serde_json::to_value(render::FixedTriangle::new(&tri, q)?)?,
            };
            render::json(&AllOutput { boole, triangle, reports: reports.clone() })?
        }
        _ => [
            render::boole_table(&boole, format)?,
            triangle_text(&tri, &grid.lambda, format, false)?,
            render::reports(&reports, format)?,
        ]
        .join("\n"),
    };
    emit(&args.output, &text)?;
    Ok(reports.iter().all(|r| r.passed))
}
