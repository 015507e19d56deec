//! Command-line front end. [`run`] parses arguments, writes to the given
//! streams and returns the process exit code: 0 on success, 1 on usage or
//! domain errors, 2 when `verify` finds a violation.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::arg_ratio::{arg_ratio_exact, ArgPair};
use crate::condition::cond_exact;
use crate::error::{Error, Result};
use crate::registry::{self, BoundSpec, Point, Target};
use crate::special::{bessel_i, global_config, struve_l, struve_m, FuncValue, Kind};
use crate::succ_ratio::best_bracket;
use crate::verify::{self, Grid, GridReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Text,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "struve", version, about = "Modified Struve function L_nu(x): values, certified bounds and verification")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate I_nu(x), L_nu(x) or M_nu(x)
    Eval {
        #[arg(long, value_parser = parse_kind)]
        kind: Kind,
        #[command(flatten)]
        at: At,
    },
    /// Bounds for L_nu(x)/L_{nu-1}(x), or a single registered bound
    Bracket {
        #[command(flatten)]
        at: At,
        #[arg(long)]
        bound: Option<String>,
        /// Second argument, for argument-ratio bounds
        #[arg(long, value_parser = finite)]
        y: Option<f64>,
    },
    /// Bounds for the condition number x L'_nu(x)/L_nu(x)
    Cond {
        #[command(flatten)]
        at: At,
    },
    /// Bounds for L_nu(x)/L_nu(y)
    Argratio {
        #[command(flatten)]
        at: At,
        #[arg(long, value_parser = finite)]
        y: f64,
    },
    /// Regenerate a relative-error table
    Table {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=6))]
        id: u8,
    },
    /// Certify registered bounds over the default grid
    Verify(VerifyArgs),
    /// Locate the argument where two bounds coincide
    Crossover {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long, value_parser = finite, allow_hyphen_values = true)]
        nu: f64,
        #[arg(long, value_parser = finite, default_value_t = verify::DEFAULT_X_RANGE.0)]
        xmin: f64,
        #[arg(long, value_parser = finite, default_value_t = verify::DEFAULT_X_RANGE.1)]
        xmax: f64,
    },
}

#[derive(Debug, Args)]
pub struct At {
    #[arg(long, value_parser = finite, allow_hyphen_values = true)]
    pub nu: f64,
    #[arg(long, value_parser = finite)]
    pub x: f64,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = true)]
pub struct VerifyArgs {
    /// Every registered bound plus the property suite
    #[arg(long, conflicts_with = "bound")]
    pub all: bool,
    #[arg(long)]
    pub bound: Option<String>,
    /// Also probe I_nu L_{nu-1} - I_{nu-1} L_nu > 0 for -1/2 <= nu < 1/2 (reported, never fails the run)
    #[arg(long)]
    pub experimental_eq14_extension: bool,
    #[arg(long, value_parser = finite, default_value_t = verify::DEFAULT_TOLERANCE)]
    pub tolerance: f64,
}

fn finite(s: &str) -> std::result::Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(format!("expected a finite number, got {s}"))
    }
}

fn parse_kind(s: &str) -> std::result::Result<Kind, String> {
    s.parse::<Kind>().map_err(|e| e.to_string())
}

/// Parse `args` (including the program name) and execute.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let fmt = cli.format;
    let text = match &cli.command {
        Command::Eval { kind, at } => eval(*kind, at, fmt)?,
        Command::Bracket { at, bound: None, .. } => bracket(at, fmt)?,
        Command::Bracket { at, bound: Some(id), y } => single_bound(id, at, *y, fmt)?,
        Command::Cond { at } => listing(Target::CondL, &Point::new(at.nu, at.x), fmt)?,
        Command::Argratio { at, y } => {
            ArgPair::new(at.x, *y)?;
            listing(Target::ArgRatioL, &Point::with_y(at.nu, at.x, *y), fmt)?
        }
        Command::Table { id } => {
            let t = verify::relative_error_table(verify::table_spec(*id)?)?;
            match fmt {
                Format::Text => t.to_text(),
                Format::Csv => t.to_csv(),
            }
        }
        Command::Verify(args) => {
            let (s, code) = run_verify(args, fmt)?;
            emit(out, &s)?;
            return Ok(code);
        }
        Command::Crossover { a, b, nu, xmin, xmax } => {
            let x = verify::crossover(a, b, *nu, (*xmin, *xmax))?;
            match fmt {
                Format::Text => format!("crossover of {a} and {b} at nu = {nu}: x* = {x:.4}\n"),
                Format::Csv => format!("bound_a,bound_b,nu,x_star\n{a},{b},{nu},{x}\n"),
            }
        }
    };
    emit(out, &text)?;
    Ok(0)
}

fn emit(out: &mut dyn Write, s: &str) -> Result<()> {
    out.write_all(s.as_bytes()).map_err(|e| Error::domain(format!("write failed: {e}")))
}

fn sci(v: f64) -> String {
    format!("{v:.16e}")
}

fn eval(kind: Kind, at: &At, fmt: Format) -> Result<String> {
    let cfg = global_config();
    let fv: FuncValue = match kind {
        Kind::I => bessel_i(at.nu, at.x, cfg)?,
        Kind::L => struve_l(at.nu, at.x, cfg)?,
        Kind::M => struve_m(at.nu, at.x, cfg)?,
    };
    Ok(match fmt {
        Format::Text => format!(
            "{kind}_nu(x) = {}  (nu = {}, x = {}, terms = {}, est_rel_error = {:.2e}{})\n",
            sci(fv.value),
            at.nu,
            at.x,
            fv.terms_used,
            fv.est_rel_error,
            if fv.cancellation { ", cancellation" } else { "" }
        ),
        Format::Csv => format!(
            "kind,nu,x,value,terms_used,est_rel_error,cancellation\n{kind},{},{},{},{},{},{}\n",
            at.nu, at.x, fv.value, fv.terms_used, fv.est_rel_error, fv.cancellation
        ),
    })
}

fn mark(spec: &BoundSpec, nu: f64) -> &'static str {
    if !spec.nu_validity.contains(nu) {
        "invalid"
    } else if spec.is_equality(nu) {
        "equality"
    } else {
        "valid"
    }
}

fn bracket(at: &At, fmt: Format) -> Result<String> {
    let best = best_bracket(at.nu, at.x)?;
    let p = Point::new(at.nu, at.x);
    let exact = registry::exact(Target::SuccRatioL, &p)?;
    let tag = |id: &str| match registry::lookup(id) {
        Ok(s) => mark(s, at.nu),
        Err(_) => "none",
    };
    Ok(match fmt {
        Format::Text => {
            let mut s = format!("L_nu(x)/L_(nu-1)(x) at nu = {}, x = {}\n", at.nu, at.x);
            s += &format!("  exact  {}\n", sci(exact));
            if best.lower_valid {
                s += &format!("  lower  {}  {} ({})\n", sci(best.lower), best.lower_id, tag(best.lower_id));
            }
            if best.upper_valid {
                s += &format!("  upper  {}  {} ({})\n", sci(best.upper), best.upper_id, tag(best.upper_id));
            }
            s
        }
        Format::Csv => {
            let mut s = String::from("side,bound_id,value,status\n");
            s += &format!("exact,,{exact},\n");
            if best.lower_valid {
                s += &format!("lower,{},{},{}\n", best.lower_id, best.lower, tag(best.lower_id));
            }
            if best.upper_valid {
                s += &format!("upper,{},{},{}\n", best.upper_id, best.upper, tag(best.upper_id));
            }
            s
        }
    })
}

fn single_bound(id: &str, at: &At, y: Option<f64>, fmt: Format) -> Result<String> {
    let spec = registry::lookup(id)?;
    let p = match (spec.target.needs_y(), y) {
        (true, Some(y)) => {
            ArgPair::new(at.x, y)?;
            Point::with_y(at.nu, at.x, y)
        }
        (true, None) => return Err(Error::domain(format!("{id} needs --y"))),
        (false, _) => Point::new(at.nu, at.x),
    };
    let value = spec.evaluate(&p)?;
    let exact = registry::exact(spec.target, &p)?;
    let status = mark(spec, at.nu);
    Ok(match fmt {
        Format::Text => format!(
            "{id} ({} bound on {}): {}  exact {}  [{status}]\n",
            spec.side,
            spec.target,
            sci(value),
            sci(exact)
        ),
        Format::Csv => format!("bound_id,side,target,value,exact,status\n{id},{},{},{value},{exact},{status}\n", spec.side, spec.target),
    })
}

fn listing(target: Target, p: &Point, fmt: Format) -> Result<String> {
    let exact = match target {
        Target::CondL => cond_exact(Kind::L, p.nu, p.x)?.value,
        Target::ArgRatioL => arg_ratio_exact(p.nu, ArgPair::new(p.x, p.y.unwrap_or(p.x))?)?,
        _ => registry::exact(target, p)?,
    };
    let mut rows = Vec::new();
    for spec in registry::bounds_for(target) {
        let status = mark(spec, p.nu);
        let value = if status == "invalid" { None } else { Some(spec.evaluate(p)?) };
        rows.push((spec, value, status));
    }
    Ok(match fmt {
        Format::Text => {
            let mut s = format!("{target} at nu = {}, x = {}", p.nu, p.x);
            if let Some(y) = p.y {
                s += &format!(", y = {y}");
            }
            s += &format!("\n  exact             {}\n", sci(exact));
            for (spec, v, status) in rows {
                let v = v.map(sci).unwrap_or_else(|| "-".into());
                s += &format!("  {:<16}  {:<5}  {:>24}  {status}\n", spec.id, spec.side.to_string(), v);
            }
            s
        }
        Format::Csv => {
            let mut s = String::from("bound_id,side,value,status\n");
            s += &format!("exact,,{exact},\n");
            for (spec, v, status) in rows {
                let v = v.map(|v| v.to_string()).unwrap_or_default();
                s += &format!("{},{},{v},{status}\n", spec.id, spec.side);
            }
            s
        }
    })
}

fn run_verify(args: &VerifyArgs, fmt: Format) -> Result<(String, i32)> {
    let grid = Grid::default_grid();
    let mut reports: Vec<GridReport> = if args.all {
        let mut r = verify::certify_all(&grid, args.tolerance);
        r.extend(verify::monotonicity_suite(&grid));
        r
    } else if let Some(id) = &args.bound {
        vec![verify::certify(id, &grid, args.tolerance)?]
    } else {
        Vec::new()
    };
    let failed = reports.iter().any(|r| !r.passed());
    let experimental = args.experimental_eq14_extension.then(|| verify::product_difference_extension(&grid));
    let mut s = String::new();
    match fmt {
        Format::Text => {
            for r in &reports {
                s += &r.summary_line();
                s.push('\n');
            }
            if let Some(r) = &experimental {
                s += &format!("experimental (not counted): {}\n", r.summary_line());
            }
            let total = reports.len();
            let bad = reports.iter().filter(|r| !r.passed()).count();
            s += &format!("{} of {total} reports passed\n", total - bad);
        }
        Format::Csv => {
            s += GridReport::CSV_HEADER;
            s.push('\n');
            reports.extend(experimental);
            for r in &reports {
                r.write_csv_rows(&mut s);
            }
        }
    }
    Ok((s, if failed { 2 } else { 0 }))
}

