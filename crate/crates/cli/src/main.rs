//! Command-line front end for the multiplier-ring workbench.
//!
//! Subcommands read algebra, coalgebra, and homomorphism specs as JSON —
//! from a file, or from stdin when the path is `-` — run the
//! exact-arithmetic pipeline, and print either a plain-text report or
//! machine-readable JSON (`--json`). All output is deterministic: the same
//! input produces byte-identical bytes on every run.
//!
//! Exit codes: 0 on success; 1 when the input cannot be parsed or violates
//! a validated invariant (the diagnostic names it, e.g. the failing
//! associativity triple); 2 when a cross-check fails — an exhaustive
//! enumeration disagreeing with the solver, or a `--verify` re-check
//! finding a defect.

mod reports;

use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use mring::algebra::FiniteAlgebra;
use mring::coalgebra;
use mring::error::{Error, Result};
use mring::homs::extend_hom;
use mring::multiplier::{
    compute_left_multipliers, compute_multiplier_algebra, compute_right_multipliers,
    multiplier_pair_space,
};
use mring::oracle::{
    enumerate_left_multipliers, enumerate_multiplier_pairs, enumerate_right_multipliers,
    enumerate_unit,
};
use mring::scalar::Field;
use mring::fixtures;
use mring::spec_io::{AlgebraSpec, CoalgebraSpec, HomSpec};
use mring::units::find_unit;

use reports::{
    AnalyzeReport, ClosureReport, CoFrobeniusCliReport, ExtendReport, MultipliersReport,
    OracleFixtureResult, OracleReport, UnitsReport,
};

#[derive(Parser)]
#[command(
    name = "mring",
    version,
    about = "Exact-arithmetic workbench for multiplier rings of non-unital algebras",
    after_help = "Spec files are JSON; pass '-' to read a spec from stdin. \
                  Exit codes: 0 success, 1 invalid input, 2 failed cross-check."
)]
struct Cli {
    /// Emit machine-readable JSON instead of a plain-text report.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full pipeline on an algebra spec: non-degeneracy,
    /// idempotency, units, L(A)/R(A)/M(A), strict closure, firmness.
    Analyze {
        /// Path to an algebra spec (`-` for stdin).
        spec: String,
        /// Re-verify the computed multipliers post hoc: the commutation and
        /// linearity laws, essentiality of the embedded ideal, and the
        /// pullback description of M(A). Exits 2 if any re-check fails.
        #[arg(long)]
        verify: bool,
    },
    /// Compute L(A), R(A), and M(A) with the canonical multiplier basis.
    Multipliers {
        /// Path to an algebra spec (`-` for stdin).
        spec: String,
    },
    /// Decide unit and local-unit existence, with explicit certificates.
    Units {
        /// Path to an algebra spec (`-` for stdin).
        spec: String,
    },
    /// Compute the strict closure of the embedded copy inside M(A) and the
    /// density verdicts.
    Closure {
        /// Path to an algebra spec (`-` for stdin).
        spec: String,
    },
    /// Extend a non-degenerate hom A → M(B) to the unique unital hom
    /// M(A) → M(B); refuses degenerate homs.
    Extend {
        /// Path to the source algebra spec A.
        #[arg(long)]
        source: String,
        /// Path to the target algebra spec B (the hom lands in M(B)).
        #[arg(long)]
        target: String,
        /// Path to the hom spec: one (λ, ρ) image per basis element of A.
        #[arg(long)]
        hom: String,
    },
    /// Coalgebra tools: convolution duals and co-Frobenius witnesses.
    Coalg {
        #[command(subcommand)]
        command: CoalgCommand,
    },
    /// Print a built-in example as a spec file (always JSON, pipeable into
    /// the other subcommands).
    Fixture {
        /// example_1_16, matrix_units_N, finite_functions_N,
        /// upper_triangular_N, staircase_N, zero_product_N; coalgebras:
        /// grouplike_N, comatrix_N.
        name: String,
        /// Scalar field tag: Q, Qi, or GF:p.
        #[arg(long, default_value = "Q")]
        field: String,
    },
    /// Cross-check the solvers against exhaustive enumeration over a small
    /// prime field. Exits 2 on any mismatch.
    Oracle {
        /// Scalar field tag; must be a prime field small enough to
        /// enumerate, e.g. GF:2.
        #[arg(long, default_value = "GF:2")]
        field: String,
        /// Skip battery fixtures above this dimension.
        #[arg(long, default_value_t = 3)]
        max_dim: usize,
    },
}

#[derive(Subcommand)]
enum CoalgCommand {
    /// Print the convolution algebra on the dual space as an algebra spec
    /// (always JSON, pipeable into the algebra subcommands).
    Dual {
        /// Path to a coalgebra spec (`-` for stdin).
        spec: String,
    },
    /// Search for an injective right C*-linear map C → C* and, when one is
    /// found, report the structure it transports.
    Cofrobenius {
        /// Path to a coalgebra spec (`-` for stdin).
        spec: String,
    },
}

fn read_input(path: &str) -> Result<String> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::Parse(format!("cannot read stdin: {e}")))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("cannot read '{path}': {e}")))
    }
}

fn load_algebra(path: &str) -> Result<FiniteAlgebra> {
    AlgebraSpec::from_json(&read_input(path)?)?.to_algebra()
}

fn emit<T: serde::Serialize>(json: bool, report: &T, human: impl FnOnce(&T) -> String) {
    if json {
        print!("{}", reports::to_json(report));
    } else {
        print!("{}", human(report));
    }
}

fn run(cli: &Cli) -> Result<ExitCode> {
    match &cli.command {
        Command::Analyze { spec, verify } => {
            let a = load_algebra(spec)?;
            let report = AnalyzeReport::new(&a, *verify)?;
            let failed_check = report
                .verification
                .as_ref()
                .is_some_and(|v| !v.all_hold());
            emit(cli.json, &report, AnalyzeReport::human);
            Ok(if failed_check {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            })
        }
        Command::Multipliers { spec } => {
            let a = load_algebra(spec)?;
            let report = MultipliersReport::new(&a)?;
            emit(cli.json, &report, MultipliersReport::human);
            Ok(ExitCode::SUCCESS)
        }
        Command::Units { spec } => {
            let a = load_algebra(spec)?;
            let report = UnitsReport::new(&a);
            emit(cli.json, &report, UnitsReport::human);
            Ok(ExitCode::SUCCESS)
        }
        Command::Closure { spec } => {
            let a = load_algebra(spec)?;
            let report = ClosureReport::new(&a)?;
            emit(cli.json, &report, ClosureReport::human);
            Ok(ExitCode::SUCCESS)
        }
        Command::Extend { source, target, hom } => {
            let a = load_algebra(source)?;
            let b = load_algebra(target)?;
            let mb = compute_multiplier_algebra(&b)?;
            let gamma = HomSpec::from_json(&read_input(hom)?)?.to_hom(&a, &mb)?;
            let ext = extend_hom(&gamma)?;
            let report = ExtendReport::new(&gamma, &ext);
            emit(cli.json, &report, ExtendReport::human);
            Ok(ExitCode::SUCCESS)
        }
        Command::Coalg { command } => match command {
            CoalgCommand::Dual { spec } => {
                let c = CoalgebraSpec::from_json(&read_input(spec)?)?.to_coalgebra()?;
                let dual = coalgebra::dual_algebra(&c)?;
                print!("{}", AlgebraSpec::from_algebra(&dual).to_json());
                Ok(ExitCode::SUCCESS)
            }
            CoalgCommand::Cofrobenius { spec } => {
                let c = CoalgebraSpec::from_json(&read_input(spec)?)?.to_coalgebra()?;
                let report = CoFrobeniusCliReport::new(&c)?;
                emit(cli.json, &report, CoFrobeniusCliReport::human);
                Ok(ExitCode::SUCCESS)
            }
        },
        Command::Fixture { name, field } => {
            let f = Field::parse(field)?;
            if name.starts_with("grouplike_") || name.starts_with("comatrix_") {
                let c = coalgebra::coalgebra_by_name(name, f)?;
                print!("{}", CoalgebraSpec::from_coalgebra(&c).to_json());
            } else {
                let a = fixtures::by_name(name, f)?;
                print!("{}", AlgebraSpec::from_algebra(&a).to_json());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Oracle { field, max_dim } => {
            let f = Field::parse(field)?;
            if !matches!(f, Field::Fp(_)) {
                return Err(Error::Parse(format!(
                    "enumeration needs a finite prime field tag like GF:2, got '{field}'"
                )));
            }
            let mut results = Vec::new();
            for (name, a) in fixtures::oracle_battery(f) {
                if a.dim() > *max_dim {
                    continue;
                }
                let left = enumerate_left_multipliers(&a)?;
                let right = enumerate_right_multipliers(&a)?;
                let pairs = enumerate_multiplier_pairs(&a)?;
                results.push(OracleFixtureResult {
                    name,
                    dim: a.dim(),
                    left_count: left.count.to_string(),
                    right_count: right.count.to_string(),
                    pair_count: pairs.count.to_string(),
                    left_matches: left.matches(&compute_left_multipliers(&a)),
                    right_matches: right.matches(&compute_right_multipliers(&a)),
                    pairs_match: pairs.matches(&multiplier_pair_space(&a)),
                    unit_matches: enumerate_unit(&a)? == find_unit(&a),
                });
            }
            let all_match = results.iter().all(OracleFixtureResult::all_match);
            let report = OracleReport {
                field: f.tag(),
                max_dim: *max_dim,
                fixtures: results,
                all_match,
            };
            emit(cli.json, &report, OracleReport::human);
            Ok(if all_match {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version displays are successful outcomes; anything
            // else is invalid usage.
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            // An internal cross-check failure is a defect of the workbench,
            // not of the input: report it on the oracle-mismatch code.
            match e {
                Error::PropositionViolation(_) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}
