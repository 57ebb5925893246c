//! The `czs` command line: optimize, verify, classify, enumerate, ghz.
//!
//! [`run`] takes the arguments and output streams explicitly so the whole
//! command line can be exercised from tests. Exit codes: `0` success, `1`
//! usage or domain error, `2` verification failure.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use thiserror::Error;

use crate::algebra::{Coeff, MultiPoly, RingScalar};
use crate::circuit::{check_topology, parse_circuit, serialize_circuit, Circuit, CircuitError, Topology};
use crate::entangle::{
    catalecticant3, classify3, classify_phi4, delta3, delta3_generic, ghz_circuit, invariants4, invariants4_generic,
    phi_state, phi_state_symbolic, quartics, quartics_generic, root_config_with, tabulated_solution_5q, EntangleError,
    ParamSpec, Report,
};
use crate::group::{GroupError, PairSet};
use crate::optimizer::{optimize, OptimizeError, DEFAULT_BUDGET};
use crate::sim::{enumerate_group, equivalent, SimError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: CircuitError },
    #[error(transparent)]
    Optimize(#[from] OptimizeError),
    #[error(transparent)]
    Sim(#[from] SimError),
    #[error(transparent)]
    Entangle(#[from] EntangleError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("{0}")]
    Usage(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("cannot write output: {0}")]
    Output(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Verification(_) => EXIT_VERIFY,
            _ => EXIT_DOMAIN,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "czs", version, about = "Optimize c-Z/SWAP circuits and classify the states they prepare")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Shorten a c-Z/SWAP circuit and re-verify the result.
    Optimize {
        file: PathBuf,
        #[arg(long, default_value = "complete")]
        topology: Topology,
        /// Search budget (expanded words) for the line topology.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
        /// Provably minimal result by breadth-first search (k ≤ 5).
        #[arg(long)]
        exact: bool,
    },
    /// Check that two circuits implement the same unitary.
    Verify { left: PathBuf, right: PathBuf },
    /// Classify `Z_E ⊗ (a|0⟩ + b|1⟩)` for a pair set `E`.
    Classify {
        #[arg(long, value_parser = clap::value_parser!(u8).range(3..=5))]
        qubits: u8,
        /// Pairs such as `01,12`; empty for none.
        #[arg(long, default_value = "")]
        pairs: String,
        /// `random`, or a file with one `a b` line per qubit.
        #[arg(long, default_value = "random")]
        params: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Treat the parameters as indeterminates (k ≤ 4).
        #[arg(long)]
        symbolic: bool,
    },
    /// Enumerate the group generated by c-Z and SWAP gates.
    Enumerate {
        #[arg(long)]
        qubits: usize,
        #[arg(long, default_value = "complete")]
        topology: Topology,
    },
    /// Print a circuit preparing GHZ_k from |0…0⟩.
    Ghz {
        #[arg(long)]
        qubits: usize,
    },
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_DOMAIN } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ =
                if e.use_stderr() { err.write_all(rendered.as_bytes()) } else { out.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    match execute(&cli.command, out) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

pub fn execute(cmd: &Command, out: &mut dyn Write) -> Result<(), CliError> {
    match cmd {
        Command::Optimize { file, topology, budget, exact } => optimize_file(file, *topology, *budget, *exact, out),
        Command::Verify { left, right } => verify(left, right, out),
        Command::Classify { qubits, pairs, params, seed, symbolic } => {
            classify(usize::from(*qubits), pairs, params, *seed, *symbolic, out)
        }
        Command::Enumerate { qubits, topology } => {
            let table = enumerate_group(*qubits, *topology)?;
            writeln!(out, "qubits: {qubits}")?;
            writeln!(out, "topology: {topology}")?;
            writeln!(out, "order: {}", table.order())?;
            writeln!(out, "diameter: {}", table.diameter())?;
            Ok(())
        }
        Command::Ghz { qubits } => {
            out.write_all(serialize_circuit(&ghz_circuit(*qubits)?).as_bytes())?;
            Ok(())
        }
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_owned(), source })
}

fn read_circuit(path: &Path) -> Result<Circuit, CliError> {
    parse_circuit(&read_file(path)?).map_err(|source| CliError::Parse { path: path.to_owned(), source })
}

fn optimize_file(
    path: &Path,
    topology: Topology,
    budget: usize,
    exact: bool,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let input = read_circuit(path)?;
    let result = optimize(&input, topology, budget, exact)?;
    if !equivalent(&input, &result)? {
        return Err(CliError::Verification("optimized circuit differs from the input".into()));
    }
    if let Some(v) = check_topology(&result, topology).first() {
        return Err(CliError::Verification(format!("optimized circuit violates the {topology} topology: {v}")));
    }
    out.write_all(serialize_circuit(&result).as_bytes())?;
    writeln!(out, "# verified: equivalent to the input ({} -> {} gates)", input.len(), result.len())?;
    Ok(())
}

fn verify(left: &Path, right: &Path, out: &mut dyn Write) -> Result<(), CliError> {
    let (a, b) = (read_circuit(left)?, read_circuit(right)?);
    if equivalent(&a, &b)? {
        writeln!(out, "equivalent")?;
        Ok(())
    } else {
        writeln!(out, "not equivalent")?;
        Err(CliError::Verification(format!("{} and {} differ", left.display(), right.display())))
    }
}

fn zero_word(zero: bool) -> &'static str {
    if zero {
        "zero"
    } else {
        "nonzero"
    }
}

fn classify(
    k: usize,
    pairs: &str,
    params: &str,
    seed: u64,
    symbolic: bool,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let e = PairSet::parse(k, pairs)?;
    if symbolic {
        return classify_symbolic(&e, out);
    }
    let spec = match params {
        "random" => ParamSpec::seeded(k, seed),
        file => ParamSpec::parse(&read_file(Path::new(file))?)?,
    };
    write!(out, "{}", classify_report(&e, &spec)?)?;
    Ok(())
}

/// The classification report for `Z_E ⊗ (a|0⟩ + b|1⟩)` with concrete
/// parameters on 3, 4 or 5 qubits.
pub fn classify_report(e: &PairSet, spec: &ParamSpec) -> Result<Report, CliError> {
    let k = e.k();
    if spec.k() != k {
        return Err(EntangleError::ParamCountMismatch { pairs: k, params: spec.k() }.into());
    }
    let mut report = Report::new(format!("{k}-qubit state Z_E ⊗ (a|0⟩ + b|1⟩)"));
    report.push("E", e).push("params", spec);
    match k {
        3 => {
            let state = phi_state(e, spec)?;
            report
                .push("Delta", delta3(&state)?)
                .push("catalecticant", zero_word(catalecticant3(&state)?.is_zero()))
                .push("class", classify3(&state)?);
        }
        4 => {
            let c = classify_phi4(e, spec)?;
            let state = phi_state(e, spec)?;
            let inv = invariants4(&state)?;
            let lmn = inv.l.clone() * &inv.m * &inv.n;
            report
                .push("case", c.case)
                .push("B", &inv.b)
                .push("L", &inv.l)
                .push("M", &inv.m)
                .push("N", &inv.n)
                .push("Dxy", &inv.dxy)
                .push("L·M·N", zero_word(lmn.is_zero()));
            for (i, q) in quartics(&state)?.iter().enumerate() {
                report.push(format!("Q{} discriminant", i + 1), zero_word(q.discriminant().is_zero()));
            }
            for (i, r) in c.roots.iter().enumerate() {
                report.push(format!("Q{} roots", i + 1), r);
            }
            for check in &c.covariants {
                report.push(format!("covariant {}", check.name), zero_word(check.is_zero));
            }
            report.push("matches expectation", if c.matches() { "yes" } else { "no" });
        }
        5 => match tabulated_solution_5q(e, spec) {
            Ok(s) => {
                report
                    .push("class", s.class)
                    .push("relabelling", &s.sigma)
                    .push("solution source", s.source)
                    .push("solution", &s.solution)
                    .push("hyperdeterminant", "zero (verified non-trivial solution)");
                if let Some(issue) = &s.table_issue {
                    report.push("table entry", issue);
                }
            }
            Err(EntangleError::NoNontrivialSolution { class }) => {
                report
                    .push("class", class)
                    .push("solution", "none found by the table or the fallback search")
                    .push("hyperdeterminant", "undecided");
            }
            Err(other) => return Err(other.into()),
        },
        _ => return Err(EntangleError::QubitsOutOfRange { k, min: 3, max: 5 }.into()),
    }
    Ok(report)
}

/// Generic behaviour over the parameters: every quantity is a polynomial in
/// `a_q0, a_q1` and "zero" means identically zero.
fn classify_symbolic(e: &PairSet, out: &mut dyn Write) -> Result<(), CliError> {
    let k = e.k();
    let amps: Vec<MultiPoly<RingScalar>> = phi_state_symbolic(e);
    let names = ["a", "b", "c", "d"];
    let mut report = Report::new(format!("{k}-qubit state Z_E ⊗ (a|0⟩ + b|1⟩), symbolic parameters"));
    report.push("E", e);
    match k {
        3 => {
            let delta = delta3_generic(&amps);
            report.push("Delta", delta.display_with(&names));
            report.push("Delta identically", zero_word(delta.is_zero()));
        }
        4 => {
            let inv = invariants4_generic(&amps);
            let lmn = inv.l.mul_ref(&inv.m).mul_ref(&inv.n);
            report.push("B", inv.b.display_with(&names)).push("L·M·N identically", zero_word(lmn.is_zero()));
            for (i, q) in quartics_generic(&inv).iter().enumerate() {
                let config = root_config_with(q, Coeff::is_zero)?;
                report
                    .push(format!("Q{} discriminant identically", i + 1), zero_word(q.discriminant().is_zero()))
                    .push(format!("Q{} generic roots", i + 1), config);
            }
        }
        _ => return Err(CliError::Usage("--symbolic supports 3 or 4 qubits".into())),
    }
    write!(out, "{report}")?;
    Ok(())
}
