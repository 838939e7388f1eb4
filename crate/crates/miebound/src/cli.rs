//! Command-line front end.
//!
//! Four subcommands: `spectrum` prints the closed-form level table,
//! `wavefunction` samples one radial state on a grid, `verify` compares
//! closed-form levels against the grid eigensolver, and `table1` prints the
//! level table for every built-in molecule side by side.
//!
//! Exit codes separate the failure layers: 1 for bad invocations, 2 for
//! data problems (registry files, unknown molecules, I/O), 3 for
//! computation errors and verification failures. Output is deterministic
//! byte for byte: floats print in shortest round-trip form and all
//! iteration orders are fixed.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::error::Error;
use crate::molecules::Registry;
use crate::oracle::{self, OracleMethod, VerificationReport, VerifyOutcome};
use crate::spectrum::{self, EllRule, QuantumState};
use crate::units::{PhysQty, UnitSystem};
use crate::wavefunction::{self, RadialGrid, Spacing};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DATA: i32 = 2;
pub const EXIT_COMPUTE: i32 = 3;

const TABLE1_MOLECULES: [&str; 4] = ["N2", "CO", "NO", "CH"];
const TABLE1_NOTE: &str = "built-in molecule parameters are best-effort stand-ins; \
consult the source field of each registry entry before quantitative use";

#[derive(Parser)]
#[command(
    name = "miebound",
    version,
    about = "Bound states of diatomic molecules in a solvable Mie-type well"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the closed-form bound-level table
    Spectrum(SpectrumArgs),
    /// Sample one radial wavefunction on a grid
    Wavefunction(WavefunctionArgs),
    /// Cross-check closed-form levels against a grid eigensolver
    Verify(VerifyArgs),
    /// Level table for the built-in molecules, side by side in eV
    Table1(Table1Args),
}

#[derive(Args)]
struct ProblemArgs {
    /// Molecule name from the registry (case-insensitive)
    #[arg(long)]
    molecule: Option<String>,
    /// Reduced mass, in the system picked by --units
    #[arg(long, allow_negative_numbers = true)]
    mu: Option<f64>,
    /// Well strength V0 (the well is V0/2 deep at its minimum)
    #[arg(long = "V0", allow_negative_numbers = true)]
    v0: Option<f64>,
    /// Position of the well minimum
    #[arg(long, allow_negative_numbers = true)]
    a: Option<f64>,
    /// Unit system for inputs and printed results
    #[arg(long, value_enum, default_value_t = UnitsArg::Spectroscopic)]
    units: UnitsArg,
    /// Molecule table to use instead of the built-in one (TOML)
    #[arg(long)]
    registry: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum UnitsArg {
    /// eV, angstrom, amu
    #[value(name = "spectroscopic")]
    Spectroscopic,
    /// hbar = 1, mu = 1
    #[value(name = "atomic1mu")]
    Atomic1mu,
    /// hbar = 1, 2*mu = 1
    #[value(name = "atomic2mu")]
    Atomic2mu,
}

impl From<UnitsArg> for UnitSystem {
    fn from(arg: UnitsArg) -> UnitSystem {
        match arg {
            UnitsArg::Spectroscopic => UnitSystem::SpectroscopicEvAngstromAmu,
            UnitsArg::Atomic1mu => UnitSystem::AtomicHbar1Mu1,
            UnitsArg::Atomic2mu => UnitSystem::AtomicHbar1TwoMu1,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Human,
    Csv,
    Jsonl,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReferenceArg {
    /// Energies as they come, negative for bound states
    Raw,
    /// Shifted so the (n=0, l=0) level sits at zero
    FromGround,
    /// Shifted so the bottom of the well sits at zero
    FromWellBottom,
}

impl ReferenceArg {
    fn label(self) -> &'static str {
        match self {
            ReferenceArg::Raw => "raw",
            ReferenceArg::FromGround => "from-ground",
            ReferenceArg::FromWellBottom => "from-well-bottom",
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    /// Finite-difference matrix eigensolver
    #[value(name = "fd")]
    Fd,
    /// Numerov shooting with turning-point matching
    #[value(name = "numerov")]
    Numerov,
}

#[derive(Clone, Copy, ValueEnum)]
enum SpacingArg {
    Log,
    Uniform,
}

#[derive(Args)]
struct SpectrumArgs {
    #[command(flatten)]
    problem: ProblemArgs,
    /// Highest radial quantum number n
    #[arg(long = "n-max", allow_negative_numbers = true, default_value_t = 5)]
    n_max: i64,
    /// Cap on l (default: l runs up to n)
    #[arg(long = "ell-max", allow_negative_numbers = true)]
    ell_max: Option<i64>,
    #[arg(long, value_enum, default_value_t = FormatArg::Human)]
    format: FormatArg,
    /// Zero point for printed energies
    #[arg(long = "energy-reference", value_enum, default_value_t = ReferenceArg::Raw)]
    energy_reference: ReferenceArg,
}

#[derive(Args)]
struct WavefunctionArgs {
    #[command(flatten)]
    problem: ProblemArgs,
    /// Radial quantum number n
    #[arg(long, allow_negative_numbers = true, default_value_t = 0)]
    n: i64,
    /// Angular momentum l
    #[arg(long, allow_negative_numbers = true, default_value_t = 0)]
    ell: i64,
    /// Inner edge of the sampling window (default: sized automatically)
    #[arg(long = "r-min")]
    r_min: Option<f64>,
    /// Outer edge of the sampling window
    #[arg(long = "r-max")]
    r_max: Option<f64>,
    /// Number of grid points (odd)
    #[arg(long)]
    points: Option<usize>,
    /// Spacing of a manually specified window
    #[arg(long, value_enum, default_value_t = SpacingArg::Log)]
    spacing: SpacingArg,
    #[arg(long, value_enum, default_value_t = FormatArg::Human)]
    format: FormatArg,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    problem: ProblemArgs,
    /// Radial quantum number of the single state to check
    #[arg(long, allow_negative_numbers = true, default_value_t = 0)]
    n: i64,
    /// Angular momentum of the single state to check
    #[arg(long, allow_negative_numbers = true, default_value_t = 0)]
    ell: i64,
    /// Check every state with n up to this bound and l up to n
    #[arg(long = "n-max", allow_negative_numbers = true, conflicts_with_all = ["n", "ell"])]
    n_max: Option<i64>,
    /// Relative tolerance for the comparison
    #[arg(long, default_value_t = 1e-6)]
    tolerance: f64,
    #[arg(long, value_enum, default_value_t = MethodArg::Fd)]
    method: MethodArg,
    #[arg(long, value_enum, default_value_t = FormatArg::Human)]
    format: FormatArg,
}

#[derive(Args)]
struct Table1Args {
    /// Molecule table to use instead of the built-in one (TOML)
    #[arg(long)]
    registry: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    format: FormatArg,
}

#[derive(Debug)]
enum CliFailure {
    Usage(String),
    App(Error),
}

impl From<Error> for CliFailure {
    fn from(e: Error) -> Self {
        CliFailure::App(e)
    }
}

impl From<std::io::Error> for CliFailure {
    fn from(e: std::io::Error) -> Self {
        CliFailure::App(Error::Io(e))
    }
}

fn exit_code_for(error: &Error) -> i32 {
    match error {
        Error::RegistryParse { .. }
        | Error::InvalidMoleculeField { .. }
        | Error::UnknownMolecule { .. }
        | Error::Io(_) => EXIT_DATA,
        _ => EXIT_COMPUTE,
    }
}

/// Parse arguments from the process environment, run, and return the exit
/// code for `main` to pass on.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let result = match cli.command {
        Command::Spectrum(args) => run_spectrum(args),
        Command::Wavefunction(args) => run_wavefunction(args),
        Command::Verify(args) => run_verify(args),
        Command::Table1(args) => run_table1(args),
    };
    match result {
        Ok(code) => code,
        Err(CliFailure::Usage(msg)) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
        Err(CliFailure::App(e)) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}

struct Problem {
    mu: PhysQty,
    v0: PhysQty,
    a: PhysQty,
    system: UnitSystem,
    /// "molecule N2" or "manual parameters", for output headers.
    source: String,
}

fn load_registry(path: &Option<PathBuf>) -> Result<Registry, CliFailure> {
    match path {
        Some(p) => Ok(Registry::load_path(p)?),
        None => Ok(Registry::builtin()),
    }
}

fn resolve_problem(args: &ProblemArgs) -> Result<Problem, CliFailure> {
    let system: UnitSystem = args.units.into();
    if let Some(name) = &args.molecule {
        if args.mu.is_some() || args.v0.is_some() || args.a.is_some() {
            return Err(CliFailure::Usage(
                "--molecule already fixes mu, V0, and a; drop the manual values".to_string(),
            ));
        }
        let registry = load_registry(&args.registry)?;
        let spec = registry.get(name)?;
        return Ok(Problem {
            mu: spec.reduced_mass.convert(system)?,
            v0: spec.v0.convert(system)?,
            a: spec.a.convert(system)?,
            system,
            source: format!("molecule {}", spec.name),
        });
    }
    let (mu, v0, a) = match (args.mu, args.v0, args.a) {
        (Some(mu), Some(v0), Some(a)) => (mu, v0, a),
        _ => {
            return Err(CliFailure::Usage(
                "provide either --molecule or all of --mu, --V0, --a".to_string(),
            ))
        }
    };
    for (name, value) in [("mu", mu), ("V0", v0), ("a", a)] {
        if !value.is_finite() || value <= 0.0 {
            return Err(CliFailure::Usage(format!(
                "--{name} must be positive and finite, got {value}"
            )));
        }
    }
    Ok(Problem {
        mu: PhysQty::mass(mu, system)?,
        v0: PhysQty::energy(v0, system)?,
        a: PhysQty::length(a, system)?,
        system,
        source: "manual parameters".to_string(),
    })
}

fn checked_quantum_number(value: i64, name: &str) -> Result<u32, CliFailure> {
    if !(0..=200).contains(&value) {
        return Err(CliFailure::Usage(format!(
            "--{name} must be between 0 and 200, got {value}"
        )));
    }
    Ok(value as u32)
}

fn run_spectrum(args: SpectrumArgs) -> Result<i32, CliFailure> {
    let problem = resolve_problem(&args.problem)?;
    let n_max = checked_quantum_number(args.n_max, "n-max")?;
    let rule = match args.ell_max {
        None => EllRule::Triangle,
        Some(l) => EllRule::Capped(checked_quantum_number(l, "ell-max")?),
    };
    let levels = spectrum::spectrum_table(problem.mu, problem.v0, problem.a, n_max, rule)?;
    // The (0,0) level is always the first row, so both shifted references
    // are available without a second pass.
    let offset = match args.energy_reference {
        ReferenceArg::Raw => 0.0,
        ReferenceArg::FromGround => levels[0].energy.value(),
        ReferenceArg::FromWellBottom => -0.5 * problem.v0.value(),
    };

    let out = std::io::stdout();
    let mut w = std::io::BufWriter::new(out.lock());
    let unit = problem.system.energy_unit();
    match args.format {
        FormatArg::Human => {
            writeln!(
                w,
                "spectrum for {} [{}]",
                problem.source,
                problem.system.label()
            )?;
            writeln!(
                w,
                "mu = {}, V0 = {}, a = {}",
                problem.mu.value(),
                problem.v0.value(),
                problem.a.value()
            )?;
            writeln!(w, "energy reference: {}", args.energy_reference.label())?;
            writeln!(
                w,
                "{:>4} {:>4} {:>26}",
                "n",
                "l",
                format!("energy ({unit})")
            )?;
            for level in &levels {
                writeln!(
                    w,
                    "{:>4} {:>4} {:>26}",
                    level.state.n,
                    level.state.ell,
                    format!("{}", level.energy.value() - offset)
                )?;
            }
        }
        FormatArg::Csv => {
            writeln!(w, "# spectrum: {}", problem.source)?;
            writeln!(w, "# units: {}", problem.system.label())?;
            writeln!(
                w,
                "# mu = {}, V0 = {}, a = {}",
                problem.mu.value(),
                problem.v0.value(),
                problem.a.value()
            )?;
            writeln!(w, "# energy reference: {}", args.energy_reference.label())?;
            writeln!(w, "n,l,energy")?;
            for level in &levels {
                writeln!(
                    w,
                    "{},{},{}",
                    level.state.n,
                    level.state.ell,
                    level.energy.value() - offset
                )?;
            }
        }
        FormatArg::Jsonl => {
            let meta = json!({
                "kind": "spectrum",
                "source": problem.source,
                "units": problem.system.label(),
                "energy_unit": unit,
                "mu": problem.mu.value(),
                "v0": problem.v0.value(),
                "a": problem.a.value(),
                "energy_reference": args.energy_reference.label(),
            });
            writeln!(w, "{meta}")?;
            for level in &levels {
                let row = json!({
                    "n": level.state.n,
                    "l": level.state.ell,
                    "energy": level.energy.value() - offset,
                    "lambda": level.reduced.lambda,
                    "kappa": level.reduced.kappa,
                });
                writeln!(w, "{row}")?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn run_wavefunction(args: WavefunctionArgs) -> Result<i32, CliFailure> {
    let problem = resolve_problem(&args.problem)?;
    let n = checked_quantum_number(args.n, "n")?;
    let ell = checked_quantum_number(args.ell, "ell")?;
    let state = QuantumState::new(n, ell);
    let grid = match (args.r_min, args.r_max, args.points) {
        (None, None, None) => None,
        (Some(r_min), Some(r_max), Some(points)) => {
            let spacing = match args.spacing {
                SpacingArg::Log => Spacing::LogUniform,
                SpacingArg::Uniform => Spacing::Uniform,
            };
            Some(RadialGrid::new(r_min, r_max, points, spacing)?)
        }
        _ => {
            return Err(CliFailure::Usage(
                "give all of --r-min, --r-max, --points, or none of them".to_string(),
            ))
        }
    };
    let level = spectrum::bound_energy(problem.mu, problem.v0, problem.a, state)?;
    let f = wavefunction::radial_wavefunction(problem.mu, problem.v0, problem.a, state, grid)?;

    let out = std::io::stdout();
    let mut w = std::io::BufWriter::new(out.lock());
    match args.format {
        FormatArg::Human => {
            writeln!(
                w,
                "wavefunction for {} [{}], n = {}, l = {}",
                problem.source,
                problem.system.label(),
                n,
                ell
            )?;
            writeln!(
                w,
                "energy = {} {}, lambda = {}, kappa = {}",
                level.energy.value(),
                problem.system.energy_unit(),
                level.reduced.lambda,
                level.reduced.kappa
            )?;
            writeln!(
                w,
                "norm check = {}, coarse = {}",
                f.norm_check, f.coarse_warning
            )?;
            writeln!(w, "{:>26} {:>26} {:>26}", "r", "R(r)", "u(r)")?;
            for i in 0..f.r.len() {
                writeln!(
                    w,
                    "{:>26} {:>26} {:>26}",
                    format!("{}", f.r[i]),
                    format!("{}", f.values_r[i]),
                    format!("{}", f.values_u[i])
                )?;
            }
        }
        FormatArg::Csv => {
            writeln!(
                w,
                "# wavefunction: {} n = {} l = {}",
                problem.source, n, ell
            )?;
            writeln!(w, "# units: {}", problem.system.label())?;
            writeln!(w, "# energy = {}", level.energy.value())?;
            writeln!(
                w,
                "# lambda = {}, kappa = {}",
                level.reduced.lambda, level.reduced.kappa
            )?;
            writeln!(
                w,
                "# norm check = {}, coarse = {}",
                f.norm_check, f.coarse_warning
            )?;
            writeln!(w, "r,R,u")?;
            for i in 0..f.r.len() {
                writeln!(w, "{},{},{}", f.r[i], f.values_r[i], f.values_u[i])?;
            }
        }
        FormatArg::Jsonl => {
            let meta = json!({
                "kind": "wavefunction",
                "source": problem.source,
                "units": problem.system.label(),
                "n": n,
                "l": ell,
                "energy": level.energy.value(),
                "lambda": level.reduced.lambda,
                "kappa": level.reduced.kappa,
                "norm_check": f.norm_check,
                "coarse": f.coarse_warning,
                "points": f.r.len(),
            });
            writeln!(w, "{meta}")?;
            for i in 0..f.r.len() {
                let row = json!({ "r": f.r[i], "R": f.values_r[i], "u": f.values_u[i] });
                writeln!(w, "{row}")?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn verify_one(
    problem: &Problem,
    state: QuantumState,
    tolerance: f64,
    method: MethodArg,
) -> Result<VerificationReport, CliFailure> {
    let report = match method {
        MethodArg::Fd => oracle::verify_state(problem.mu, problem.v0, problem.a, state, tolerance)?,
        MethodArg::Numerov => {
            let mut cfg = oracle::recommended_config(
                problem.mu,
                problem.v0,
                problem.a,
                state.ell,
                state.n as usize + 1,
            )?;
            cfg.method = OracleMethod::NumerovShooting;
            oracle::verify_state_with(problem.mu, problem.v0, problem.a, state, tolerance, &cfg)?
        }
    };
    Ok(report)
}

fn option_text(value: Option<f64>) -> String {
    match value {
        Some(v) => format!("{v}"),
        None => "-".to_string(),
    }
}

fn run_verify(args: VerifyArgs) -> Result<i32, CliFailure> {
    let problem = resolve_problem(&args.problem)?;
    if !args.tolerance.is_finite() || args.tolerance <= 0.0 {
        return Err(CliFailure::Usage(format!(
            "--tolerance must be positive, got {}",
            args.tolerance
        )));
    }
    let states = match args.n_max {
        Some(n_max) => {
            let n_max = checked_quantum_number(n_max, "n-max")?;
            let mut list = Vec::new();
            for n in 0..=n_max {
                for ell in 0..=n {
                    list.push(QuantumState::new(n, ell));
                }
            }
            list
        }
        None => vec![QuantumState::new(
            checked_quantum_number(args.n, "n")?,
            checked_quantum_number(args.ell, "ell")?,
        )],
    };
    let mut reports = Vec::with_capacity(states.len());
    for state in states {
        reports.push(verify_one(&problem, state, args.tolerance, args.method)?);
    }

    let out = std::io::stdout();
    let mut w = std::io::BufWriter::new(out.lock());
    match args.format {
        FormatArg::Human => {
            writeln!(
                w,
                "verification for {} [{}], tolerance {}",
                problem.source,
                problem.system.label(),
                args.tolerance
            )?;
            writeln!(
                w,
                "{:>4} {:>4} {:>14} {:>24} {:>24} {:>14} {:>14}",
                "n", "l", "outcome", "closed", "oracle", "rel_delta", "estimate"
            )?;
            for r in &reports {
                writeln!(
                    w,
                    "{:>4} {:>4} {:>14} {:>24} {:>24} {:>14} {:>14}",
                    r.state.n,
                    r.state.ell,
                    r.outcome.label(),
                    format!("{}", r.e_closed),
                    option_text(r.e_oracle),
                    option_text(r.rel_delta),
                    option_text(r.convergence_estimate)
                )?;
            }
        }
        FormatArg::Csv => {
            writeln!(w, "# verify: {}", problem.source)?;
            writeln!(w, "# units: {}", problem.system.label())?;
            writeln!(w, "# tolerance = {}", args.tolerance)?;
            writeln!(
                w,
                "n,l,outcome,e_closed,e_oracle,abs_delta,rel_delta,convergence_estimate,converged"
            )?;
            for r in &reports {
                writeln!(
                    w,
                    "{},{},{},{},{},{},{},{},{}",
                    r.state.n,
                    r.state.ell,
                    r.outcome.label(),
                    r.e_closed,
                    option_text(r.e_oracle),
                    option_text(r.abs_delta),
                    option_text(r.rel_delta),
                    option_text(r.convergence_estimate),
                    r.converged
                )?;
            }
        }
        FormatArg::Jsonl => {
            let meta = json!({
                "kind": "verify",
                "source": problem.source,
                "units": problem.system.label(),
                "tolerance": args.tolerance,
            });
            writeln!(w, "{meta}")?;
            for r in &reports {
                writeln!(
                    w,
                    "{}",
                    serde_json::to_string(r).expect("report serializes")
                )?;
            }
        }
    }
    w.flush()?;

    // Exit 0 certifies every requested state, so a state the oracle could
    // not settle at this tolerance blocks success just like a disagreement;
    // the per-state labels still separate the two cases.
    let failures = reports
        .iter()
        .filter(|r| r.outcome == VerifyOutcome::Fail)
        .count();
    let unsettled = reports
        .iter()
        .filter(|r| r.outcome == VerifyOutcome::Inconclusive)
        .count();
    if failures > 0 || unsettled > 0 {
        eprintln!("{failures} verification failure(s), {unsettled} inconclusive");
        return Ok(EXIT_COMPUTE);
    }
    Ok(EXIT_OK)
}

fn run_table1(args: Table1Args) -> Result<i32, CliFailure> {
    let registry = load_registry(&args.registry)?;
    let mut columns = Vec::with_capacity(TABLE1_MOLECULES.len());
    for name in TABLE1_MOLECULES {
        let spec = registry.get(name)?.clone();
        columns.push(spec);
    }
    // 21 rows: every (n, l) with n <= 5 and l <= n, energies in eV.
    let mut rows: Vec<(u32, u32, Vec<f64>)> = Vec::new();
    for n in 0..=5u32 {
        for ell in 0..=n {
            let state = QuantumState::new(n, ell);
            let mut energies = Vec::with_capacity(columns.len());
            for spec in &columns {
                let level = spectrum::bound_energy(spec.reduced_mass, spec.v0, spec.a, state)?;
                energies.push(level.energy.value());
            }
            rows.push((n, ell, energies));
        }
    }

    let out = std::io::stdout();
    let mut w = std::io::BufWriter::new(out.lock());
    match args.format {
        FormatArg::Human => {
            writeln!(w, "bound levels in eV")?;
            writeln!(
                w,
                "{:>4} {:>4} {:>22} {:>22} {:>22} {:>22}",
                "n", "l", "N2", "CO", "NO", "CH"
            )?;
            for (n, ell, energies) in &rows {
                writeln!(
                    w,
                    "{:>4} {:>4} {:>22} {:>22} {:>22} {:>22}",
                    n,
                    ell,
                    format!("{}", energies[0]),
                    format!("{}", energies[1]),
                    format!("{}", energies[2]),
                    format!("{}", energies[3])
                )?;
            }
            writeln!(w, "note: {TABLE1_NOTE}")?;
        }
        FormatArg::Csv => {
            writeln!(w, "# bound levels in eV")?;
            writeln!(w, "n,l,N2,CO,NO,CH")?;
            for (n, ell, energies) in &rows {
                writeln!(
                    w,
                    "{},{},{},{},{},{}",
                    n, ell, energies[0], energies[1], energies[2], energies[3]
                )?;
            }
            writeln!(w, "# note: {TABLE1_NOTE}")?;
        }
        FormatArg::Jsonl => {
            let meta = json!({
                "kind": "table1",
                "energy_unit": "eV",
                "molecules": TABLE1_MOLECULES,
            });
            writeln!(w, "{meta}")?;
            for (n, ell, energies) in &rows {
                let row = json!({
                    "n": n,
                    "l": ell,
                    "N2": energies[0],
                    "CO": energies[1],
                    "NO": energies[2],
                    "CH": energies[3],
                });
                writeln!(w, "{row}")?;
            }
            writeln!(w, "{}", json!({ "note": TABLE1_NOTE }))?;
        }
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn argument_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn quantum_number_bounds_are_enforced() {
        assert!(checked_quantum_number(-1, "n-max").is_err());
        assert!(checked_quantum_number(201, "n-max").is_err());
        assert_eq!(checked_quantum_number(0, "n-max").unwrap(), 0);
        assert_eq!(checked_quantum_number(200, "n-max").unwrap(), 200);
    }

    #[test]
    fn data_errors_and_compute_errors_map_to_distinct_codes() {
        let data = Error::UnknownMolecule {
            name: "X".to_string(),
            suggestions: vec![],
        };
        let compute = Error::domain("test", "broken".to_string());
        assert_eq!(exit_code_for(&data), EXIT_DATA);
        assert_eq!(exit_code_for(&compute), EXIT_COMPUTE);
    }
}
