//! Command-line front end. `run` takes the arguments and output streams so
//! that the binary and the tests share one entry point.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::class::{ClassId, ClassSpec};
use crate::error::Error;
use crate::output::{format_num, write_csv, write_json, OutputRecord};
use crate::regions::{region_boundary, rl_generator_boundary, BoundaryPoint};
use crate::solver::{table_for_specs, Variant, VariantPolicy, DEFAULT_TOL};
use crate::target::{Family, Target};
use crate::verify::{adjudicate_variant, sharpness_check, verify_grid, DEFAULT_SCAN_SAMPLES};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_PARAMETER: i32 = 2;
pub const EXIT_NO_ROOT: i32 = 3;
pub const EXIT_OTHER: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "starlike-radius", version, about = "Radii of starlikeness for the classes G1 and G2")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Radius for one class, b and target.
    Radius(RadiusArgs),
    /// Radii over a grid of b (or coefficient magnitudes) and targets.
    Table(TableArgs),
    /// Containment scans and sharpness checks; exits 1 if a gated check fails.
    Verify(VerifyArgs),
    /// Sharpness functional at the extremal function.
    Sharpness(RadiusArgs),
    /// Compare the competing G1 nephroid / RL equations.
    Adjudicate(AdjudicateArgs),
    /// Sample points on a target domain's boundary as theta,re,im.
    Boundary(BoundaryArgs),
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum VariantArg {
    Corrected,
    Printed,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Corrected => Variant::CenterCorrected,
            VariantArg::Printed => Variant::Printed,
        }
    }
}

#[derive(Args, Debug)]
struct Common {
    /// Root tolerance, in [1e-15, 1e-6].
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
    #[arg(long, value_enum, default_value_t = VariantArg::Corrected)]
    variant: VariantArg,
    /// Allow G2 targets outside the published theorem (marked EXTRAPOLATION).
    #[arg(long)]
    extended: bool,
}

impl Common {
    fn policy(&self) -> VariantPolicy {
        VariantPolicy::new(self.variant.into()).extended(self.extended)
    }
}

#[derive(Args, Debug)]
struct RadiusArgs {
    #[arg(long)]
    class: ClassId,
    #[arg(long)]
    target: Family,
    #[arg(long, allow_hyphen_values = true)]
    b: f64,
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long)]
    gamma: Option<f64>,
    #[command(flatten)]
    common: Common,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Args, Debug)]
struct TargetList {
    /// `all` or a comma-separated list of target names.
    #[arg(long, default_value = "all")]
    targets: String,
    /// Order for the starlike target.
    #[arg(long, default_value_t = 0.0)]
    alpha: f64,
    /// Order for the strongly starlike target.
    #[arg(long, default_value_t = 0.5)]
    gamma: f64,
}

#[derive(Args, Debug)]
struct TableArgs {
    #[arg(long)]
    class: ClassId,
    #[arg(long, allow_hyphen_values = true)]
    b_start: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    b_end: Option<f64>,
    #[arg(long, default_value_t = 11)]
    b_steps: usize,
    /// Comma-separated coefficient magnitudes (b1 or b'), instead of a b range.
    #[arg(long, conflicts_with_all = ["b_start", "b_end"])]
    mag_grid: Option<String>,
    #[command(flatten)]
    targets: TargetList,
    #[command(flatten)]
    common: Common,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long)]
    class: ClassId,
    /// Comma-separated b values; defaults to the 11-point grid.
    #[arg(long, allow_hyphen_values = true)]
    b: Option<String>,
    #[command(flatten)]
    targets: TargetList,
    #[command(flatten)]
    common: Common,
    #[arg(long, default_value_t = DEFAULT_SCAN_SAMPLES)]
    samples: usize,
}

#[derive(Args, Debug)]
struct AdjudicateArgs {
    #[arg(long, default_value = "g1")]
    class: ClassId,
    #[arg(long)]
    target: Family,
    #[arg(long, allow_hyphen_values = true)]
    b: f64,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
    #[arg(long, default_value_t = DEFAULT_SCAN_SAMPLES)]
    samples: usize,
}

#[derive(Args, Debug)]
struct BoundaryArgs {
    #[arg(long)]
    target: Family,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long)]
    gamma: Option<f64>,
    /// For rl: sample the generator's image instead of the inequality's
    /// boundary.
    #[arg(long)]
    generator: bool,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parameter(_) | Error::Domain(_) | Error::Unsupported(_) => EXIT_PARAMETER,
        Error::NoRoot { .. } => EXIT_NO_ROOT,
        _ => EXIT_OTHER,
    }
}

enum Failure {
    Lib(Error),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Io(e.into())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Io(e.into())
    }
}

type CmdResult = std::result::Result<i32, Failure>;

/// Runs the CLI with `args` (including the program name) and returns the
/// exit code.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARAMETER } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let res = match cli.command {
        Command::Radius(a) => cmd_radius(a, out),
        Command::Table(a) => cmd_table(a, out),
        Command::Verify(a) => cmd_verify(a, out),
        Command::Sharpness(a) => cmd_sharpness(a, out),
        Command::Adjudicate(a) => cmd_adjudicate(a, out),
        Command::Boundary(a) => cmd_boundary(a, out),
    };
    match res {
        Ok(code) => code,
        Err(Failure::Lib(e)) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_OTHER
        }
    }
}

fn emit(out: &mut dyn Write, format: Format, records: &[OutputRecord]) -> std::result::Result<(), Failure> {
    match format {
        Format::Csv => write_csv(out, records)?,
        Format::Json => write_json(out, records)?,
    }
    Ok(())
}

fn parse_list<T: std::str::FromStr<Err = Error>>(text: &str) -> crate::Result<Vec<T>> {
    text.split(',').map(|s| s.trim()).filter(|s| !s.is_empty()).map(str::parse).collect()
}

fn parse_reals(text: &str) -> crate::Result<Vec<f64>> {
    text.split(',')
        .map(|s| s.trim())
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<f64>().map_err(|_| Error::Parameter(format!("`{s}` is not a number"))))
        .collect()
}

fn resolve_targets(list: &TargetList, class_id: ClassId, policy: VariantPolicy) -> crate::Result<Vec<Target>> {
    if list.targets.eq_ignore_ascii_case("all") {
        let all = Target::all(list.alpha, list.gamma)?;
        return Ok(all.into_iter().filter(|t| policy.extended || t.in_paper_scope(class_id) || t.alpha().is_some()).collect());
    }
    parse_list::<Family>(&list.targets)?
        .into_iter()
        .map(|f| match f {
            Family::StarlikeOrder => Target::starlike(list.alpha),
            Family::StronglyStarlike => Target::strongly(list.gamma),
            other => Target::from_family(other, None, None),
        })
        .collect()
}

fn cmd_radius(a: RadiusArgs, out: &mut dyn Write) -> CmdResult {
    let spec = ClassSpec::new(a.class, a.b)?;
    let target = Target::from_family(a.target, a.alpha, a.gamma)?;
    let policy = a.common.policy();
    let cells = table_for_specs(&[spec], &[target], policy, a.common.tol);
    if let Err(e) = &cells[0].outcome {
        return Err(e.clone().into());
    }
    emit(out, a.format, &[OutputRecord::from_cell(&cells[0], policy.variant)])?;
    Ok(EXIT_OK)
}

fn cmd_table(a: TableArgs, out: &mut dyn Write) -> CmdResult {
    let policy = a.common.policy();
    let specs = match &a.mag_grid {
        Some(text) => {
            parse_reals(text)?.into_iter().map(|m| ClassSpec::from_coeff_mag(a.class, m)).collect::<crate::Result<Vec<_>>>()?
        }
        None => {
            let (lo, hi) = a.class.b_range();
            let start = a.b_start.unwrap_or(lo);
            let end = a.b_end.unwrap_or(hi);
            let grid = match a.b_steps {
                0 => return Err(Error::Parameter("b-steps must be positive".into()).into()),
                1 => vec![start],
                n => (0..n)
                    .map(|i| if i == n - 1 { end } else { start + (end - start) * i as f64 / (n - 1) as f64 })
                    .collect(),
            };
            let mut specs = grid.into_iter().map(|b| ClassSpec::new(a.class, b)).collect::<crate::Result<Vec<_>>>()?;
            specs.sort_by(|x, y| x.b().total_cmp(&y.b()));
            specs
        }
    };
    if specs.is_empty() {
        return Err(Error::Parameter("empty grid".into()).into());
    }
    let targets = resolve_targets(&a.targets, a.class, policy)?;
    let records: Vec<OutputRecord> = table_for_specs(&specs, &targets, policy, a.common.tol)
        .iter()
        .map(|c| OutputRecord::from_cell(c, policy.variant))
        .collect();
    emit(out, a.format, &records)?;
    let all_failed = !records.is_empty() && records.iter().all(OutputRecord::is_failure);
    Ok(if all_failed { EXIT_CHECK_FAILED } else { EXIT_OK })
}

fn cmd_verify(a: VerifyArgs, out: &mut dyn Write) -> CmdResult {
    let policy = a.common.policy();
    let bs = match &a.b {
        Some(text) => parse_reals(text)?,
        None => ClassSpec::standard_b_grid(a.class, 11),
    };
    let specs = bs.into_iter().map(|b| ClassSpec::new(a.class, b)).collect::<crate::Result<Vec<_>>>()?;
    let targets = resolve_targets(&a.targets, a.class, policy)?;
    let reports = verify_grid(&specs, &targets, policy, a.common.tol, a.samples);
    serde_json::to_writer_pretty(&mut *out, &reports)?;
    writeln!(out)?;
    Ok(if reports.iter().all(|r| r.passed) { EXIT_OK } else { EXIT_CHECK_FAILED })
}

fn cmd_sharpness(a: RadiusArgs, out: &mut dyn Write) -> CmdResult {
    let spec = ClassSpec::new(a.class, a.b)?;
    let target = Target::from_family(a.target, a.alpha, a.gamma)?;
    let rho = crate::solver::compute_radius(&spec, &target, a.common.policy(), a.common.tol)?.rho;
    match sharpness_check(&spec, &target, rho) {
        Ok(s) => {
            serde_json::to_writer_pretty(&mut *out, &s)?;
            writeln!(out)?;
            Ok(if s.ok || !s.gated { EXIT_OK } else { EXIT_CHECK_FAILED })
        }
        Err(Error::NotApplicable(note)) => {
            writeln!(out, "{}", serde_json::json!({ "applicable": false, "note": note }))?;
            Ok(EXIT_OK)
        }
        Err(e) => Err(e.into()),
    }
}

fn cmd_adjudicate(a: AdjudicateArgs, out: &mut dyn Write) -> CmdResult {
    let spec = ClassSpec::new(a.class, a.b)?;
    let target = Target::from_family(a.target, None, None)?;
    let report = adjudicate_variant(&spec, &target, a.tol, a.samples)?;
    serde_json::to_writer_pretty(&mut *out, &report)?;
    writeln!(out)?;
    Ok(if report.consistent.is_empty() { EXIT_CHECK_FAILED } else { EXIT_OK })
}

fn cmd_boundary(a: BoundaryArgs, out: &mut dyn Write) -> CmdResult {
    let target = Target::from_family(a.target, a.alpha, a.gamma)?;
    let points: Vec<BoundaryPoint> = if a.generator {
        if target != Target::RationalRL {
            return Err(Error::Parameter("--generator applies to rl only".into()).into());
        }
        rl_generator_boundary(a.n)?
    } else {
        region_boundary(&target, a.n)?
    };
    match a.format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["theta", "re", "im"])?;
            for p in &points {
                w.write_record([format_num(p.theta), format_num(p.w.re), format_num(p.w.im)])?;
            }
            w.flush()?;
        }
        Format::Json => {
            let rows: Vec<_> =
                points.iter().map(|p| serde_json::json!({ "theta": p.theta, "re": p.w.re, "im": p.w.im })).collect();
            serde_json::to_writer_pretty(&mut *out, &rows)?;
            writeln!(out)?;
        }
    }
    Ok(EXIT_OK)
}
