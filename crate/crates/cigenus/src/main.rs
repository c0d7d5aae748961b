use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use cigenus::bounds::{bound_report, compare, ModeSet};
use cigenus::gamma::{CurveInstance, SurfaceSpec};
use cigenus::optimize::{relaxed_profile, tight_profile};
use cigenus::report::{
    csv_string, profile_csv, render_compare, render_profile, render_rows, render_table, CompareEnvelope,
    ReportEnvelope, SweepEnvelope,
};
use cigenus::sweep::{run_sweep, SweepSpec};
use cigenus::verify::{self, Suite, VerifyConfig};
use cigenus::Error;

#[derive(Parser)]
#[command(name = "cigenus", version, about = "Genus bounds for curves on complete intersection surfaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Bounds for one instance.
    Bound(BoundArgs),
    /// The extremal profile for a fixed m.
    Profile(ProfileArgs),
    /// Bounds over a range of d.
    Sweep(SweepArgs),
    /// Run the cross-check suites.
    Verify(VerifyArgs),
    /// Compare against threefold bounds and a complete intersection baseline.
    Compare(CompareArgs),
}

#[derive(Args)]
struct InstanceArgs {
    /// Ambient projective dimension.
    #[arg(long)]
    n: u32,
    /// Surface degrees, comma separated (n - 2 of them).
    #[arg(long, value_delimiter = ',', required = true)]
    degrees: Vec<u64>,
    /// Curve degree.
    #[arg(long)]
    d: u64,
}

impl InstanceArgs {
    fn instance(&self) -> Result<CurveInstance, Error> {
        CurveInstance::new(SurfaceSpec::new(self.n, self.degrees.clone())?, self.d)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    All,
    ClosedForm,
    Relaxed,
    Tight,
}

fn mode_set(modes: &[ModeArg]) -> ModeSet {
    let mut set = ModeSet { closed_form: false, relaxed: false, tight: false };
    for m in modes {
        match m {
            ModeArg::All => set = ModeSet::ALL,
            ModeArg::ClosedForm => set.closed_form = true,
            ModeArg::Relaxed => set.relaxed = true,
            ModeArg::Tight => set.tight = true,
        }
    }
    set
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CompareFormat {
    Table,
    Json,
}

#[derive(Args)]
struct BoundArgs {
    #[command(flatten)]
    instance: InstanceArgs,
    #[arg(long, value_enum, default_value = "all")]
    mode: ModeArg,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
    /// Report even when d is below the proven range.
    #[arg(long)]
    force: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum ProfileMode {
    Relaxed,
    Tight,
}

#[derive(Args)]
struct ProfileArgs {
    #[command(flatten)]
    instance: InstanceArgs,
    /// Degree of the hypersurface through the section; defaults to m0.
    #[arg(long)]
    m: Option<u64>,
    #[arg(long, value_enum, default_value = "tight")]
    mode: ProfileMode,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long)]
    n: u32,
    #[arg(long, value_delimiter = ',', required = true)]
    degrees: Vec<u64>,
    #[arg(long)]
    d_start: u64,
    /// Inclusive.
    #[arg(long)]
    d_stop: u64,
    #[arg(long, default_value_t = 1)]
    d_step: u64,
    #[arg(long, value_enum, value_delimiter = ',', default_value = "all")]
    modes: Vec<ModeArg>,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    /// Write here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Hilbert,
    Identities,
    Consistency,
    Optimizer,
    All,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value = "all")]
    suite: SuiteArg,
    #[arg(long, default_value_t = 6)]
    max_n: u32,
    #[arg(long, default_value_t = 4)]
    max_degree: u64,
    #[arg(long, default_value_t = 20)]
    max_level: u64,
}

#[derive(Args)]
struct CompareArgs {
    #[arg(long)]
    n: u32,
    /// Threefold degrees, comma separated (n - 3 of them).
    #[arg(long, value_delimiter = ',', required = true)]
    threefold_degrees: Vec<u64>,
    #[arg(long)]
    d: u64,
    /// Degree of the extra hypersurface; defaults to ⌈d / ∏ threefold degrees⌉.
    #[arg(long)]
    m: Option<u64>,
    /// Silence the warning for instances below the proven range.
    #[arg(long)]
    force: bool,
    #[arg(long, value_enum, default_value = "table")]
    format: CompareFormat,
}

/// Process exit status with an optional message for stderr.
struct Exit {
    code: u8,
    message: String,
}

impl Exit {
    const CHECK_FAILED: u8 = 1;
    const INVALID: u8 = 2;
    const HYPOTHESIS: u8 = 3;
    const INFEASIBLE: u8 = 4;
    const OUTPUT: u8 = 5;

    fn new(code: u8, message: impl Into<String>) -> Self {
        Exit { code, message: message.into() }
    }
}

impl From<Error> for Exit {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidInput(_) | Error::BudgetExceeded { .. } => Exit::INVALID,
            Error::Infeasible { .. } => Exit::INFEASIBLE,
            Error::Internal(_) => Exit::CHECK_FAILED,
        };
        Exit::new(code, e.to_string())
    }
}

fn emit(text: &str) -> Result<(), Exit> {
    let mut out = io::stdout().lock();
    out.write_all(text.as_bytes()).map_err(|e| Exit::new(Exit::OUTPUT, format!("writing output: {e}")))
}

fn json<T: serde::Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("reports serialize");
    text.push('\n');
    text
}

fn elapsed_ms(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

fn hypothesis_gate(inst: &CurveInstance, threshold: u128, ok: bool, force: bool) -> Result<(), Exit> {
    if ok || force {
        return Ok(());
    }
    Err(Exit::new(
        Exit::HYPOTHESIS,
        format!(
            "hypothesis_ok=false: d = {} is below the threshold K·Σk = {threshold} for {}; pass --force to compute anyway",
            inst.d(),
            inst.surface()
        ),
    ))
}

fn failed_checks(checks: &[cigenus::check::Check]) -> Result<(), Exit> {
    match checks.iter().find(|c| c.is_failure()) {
        Some(c) => Err(Exit::new(Exit::CHECK_FAILED, format!("check failed: {c}"))),
        None => Ok(()),
    }
}

fn cmd_bound(args: BoundArgs) -> Result<(), Exit> {
    let start = Instant::now();
    let inst = args.instance.instance()?;
    let modes = mode_set(&[args.mode]);
    let report = bound_report(&inst, modes);
    hypothesis_gate(&inst, report.threshold, report.hypothesis_ok, args.force)?;
    let text = match args.format {
        Format::Table => render_table(&report),
        Format::Csv => csv_string(std::slice::from_ref(&report)),
        Format::Json => json(&ReportEnvelope::new(&report, modes, args.force, elapsed_ms(start))),
    };
    emit(&text)?;
    failed_checks(&report.checks)
}

fn cmd_profile(args: ProfileArgs) -> Result<(), Exit> {
    let inst = args.instance.instance()?;
    let m = args.m.unwrap_or(inst.m0());
    let profile = match args.mode {
        ProfileMode::Relaxed => relaxed_profile(&inst, m),
        ProfileMode::Tight => tight_profile(&inst, m),
    }?;
    let text = match args.format {
        Format::Table => render_profile(&inst, &profile),
        Format::Csv => profile_csv(&inst, &profile),
        Format::Json => json(&cigenus::report::profile_rows(&inst, &profile)),
    };
    emit(&text)
}

fn cmd_sweep(args: SweepArgs) -> Result<(), Exit> {
    let start = Instant::now();
    let spec = SweepSpec {
        n: args.n,
        degrees: args.degrees,
        d_start: args.d_start,
        d_stop: args.d_stop,
        d_step: args.d_step,
        modes: mode_set(&args.modes),
    };
    SurfaceSpec::new(spec.n, spec.degrees.clone())?;
    spec.degrees_of_curve()?;
    let sink = match &args.output {
        Some(path) => Some(
            File::create(path)
                .map_err(|e| Exit::new(Exit::OUTPUT, format!("cannot write {}: {e}", path.display())))?,
        ),
        None => None,
    };
    let reports = run_sweep(&spec)?;
    let text = match args.format {
        Format::Csv => csv_string(&reports),
        Format::Table => render_rows(&reports),
        Format::Json => json(&SweepEnvelope::new(&spec, &reports, elapsed_ms(start))),
    };
    match (sink, &args.output) {
        (Some(mut file), Some(path)) => file
            .write_all(text.as_bytes())
            .map_err(|e| Exit::new(Exit::OUTPUT, format!("cannot write {}: {e}", path.display())))?,
        _ => emit(&text)?,
    }
    failed_checks(&reports.iter().flat_map(|r| r.checks.clone()).collect::<Vec<_>>())
}

fn cmd_verify(args: VerifyArgs) -> Result<(), Exit> {
    let cfg = VerifyConfig { max_n: args.max_n, max_degree: args.max_degree, max_level: args.max_level };
    if cfg.max_n < 3 || cfg.max_degree == 0 {
        return Err(Exit::new(Exit::INVALID, "--max-n must be at least 3 and --max-degree at least 1"));
    }
    let suites: Vec<Suite> = match args.suite {
        SuiteArg::Hilbert => vec![Suite::Hilbert],
        SuiteArg::Identities => vec![Suite::Identities],
        SuiteArg::Consistency => vec![Suite::Consistency],
        SuiteArg::Optimizer => vec![Suite::Optimizer],
        SuiteArg::All => Suite::ALL.to_vec(),
    };
    let mut reports = Vec::new();
    for suite in suites {
        let report = verify::run(suite, &cfg);
        emit(&report.to_string())?;
        reports.push(report);
    }
    let summary: Vec<String> = verify::tally(&reports).iter().map(|(o, n)| format!("{n} {o}")).collect();
    emit(&format!("summary: {}\n", summary.join(", ")))?;
    if verify::all_passed(&reports) {
        Ok(())
    } else {
        Err(Exit::new(Exit::CHECK_FAILED, "asserted checks failed"))
    }
}

fn cmd_compare(args: CompareArgs) -> Result<(), Exit> {
    let start = Instant::now();
    let c = compare(args.n, &args.threefold_degrees, args.d, args.m)?;
    let r = &c.report;
    if !r.hypothesis_ok && !args.force {
        eprintln!(
            "cigenus: warning: hypothesis_ok=false: d = {} is below K·Σk = {} for {}; rows are outside the proven range",
            r.instance.d(),
            r.threshold,
            r.instance.surface()
        );
    }
    let text = match args.format {
        CompareFormat::Table => render_compare(&c),
        CompareFormat::Json => json(&CompareEnvelope::new(args.n, &c, elapsed_ms(start))),
    };
    emit(&text)?;
    failed_checks(&r.checks)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Bound(a) => cmd_bound(a),
        Command::Profile(a) => cmd_profile(a),
        Command::Sweep(a) => cmd_sweep(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Compare(a) => cmd_compare(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(exit) => {
            if !exit.message.is_empty() {
                eprintln!("cigenus: {}", exit.message);
            }
            ExitCode::from(exit.code)
        }
    }
}
