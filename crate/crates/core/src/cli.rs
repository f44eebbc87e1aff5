//! Command-line front end.
//!
//! [`run`] never touches the process streams, so it can be driven from tests.

use std::cmp::Ordering;
use std::ffi::OsString;

use clap::{Parser, Subcommand};
use rand::rngs::StdRng;
use rand::SeedableRng;
use thiserror::Error;

use crate::formula::{self, con_star_equation, Formula, FormulaError, Style};
use crate::notation::{self, PredicateError, PredicateExpr, Presentation, DEFAULT_FUEL};
use crate::ordinal::{
    enumerate_terms, parse_ordinal, Ordinal, OrdinalError, DEFAULT_ENUMERATION_CAP,
};
use crate::theory::{self, catalog_lookup, Catalog, Engine, TheoryError, TheoryExpr};
use crate::worm::{Worm, WormError};

#[derive(Debug, Parser)]
#[command(
    name = "ordlab",
    version,
    about = "Ordinal notations, worms and iterated reflection"
)]
struct Cli {
    /// Print formulas with ASCII connectives
    #[arg(long, global = true)]
    ascii: bool,
    /// Upper bound for notation-lab windows and chains
    #[arg(long, global = true, value_name = "N", default_value_t = DEFAULT_FUEL)]
    fuel: u64,
    /// Upper bound for `ord enum`
    #[arg(long, global = true, value_name = "N", default_value_t = DEFAULT_ENUMERATION_CAP)]
    max_nodes: usize,
    /// Seed for sampling subcommands
    #[arg(long, global = true, value_name = "S", default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Ordinal terms below Γ₀
    #[command(subcommand)]
    Ord(OrdCommand),
    /// Worms of the reflection calculus
    #[command(subcommand)]
    Worm(WormCommand),
    /// Iterated reflection theories
    #[command(subcommand)]
    Theory(TheoryCommand),
    /// The ω-model reflection dilator
    #[command(subcommand)]
    Dilator(DilatorCommand),
    /// Presentations of ω gated on a predicate
    #[command(subcommand)]
    Notation(NotationCommand),
    /// Consistency-style formula templates
    #[command(subcommand)]
    Formula(FormulaCommand),
}

#[derive(Debug, Subcommand)]
enum OrdCommand {
    /// Compare two ordinals: LT, EQ or GT
    Cmp { a: String, b: String },
    /// a + b
    Add { a: String, b: String },
    /// a · n for a natural n
    Mul { a: String, n: u64 },
    /// Print the canonical form
    Normalize { a: String },
    /// φ(a, b)
    Phi { a: String, b: String },
    /// The least φ_a value above b, advanced gamma more steps
    NextPhi {
        a: String,
        b: String,
        gamma: Option<String>,
    },
    /// List canonical terms with at most N atoms
    Enum {
        n: Option<usize>,
        /// Print a seeded random sample of this many terms
        #[arg(long, value_name = "K")]
        sample: Option<usize>,
    },
}

#[derive(Debug, Subcommand)]
enum WormCommand {
    /// The ordinal o(w)
    O { worm: String },
    /// Compare two worms by their ordinals
    Cmp { a: String, b: String },
    /// The canonical worm of an ordinal below ε₀
    OfOrdinal { a: String },
    /// The theory a worm denotes
    ToTheory { worm: String },
}

#[derive(Debug, Subcommand)]
enum TheoryCommand {
    /// The Π_k proof-theoretic ordinal
    PiOrdinal { theory: String, k: u32 },
    /// Reduce to a single level-k reflection stack
    Reduce {
        theory: String,
        k: u32,
        /// Also list the rules applied
        #[arg(long)]
        trace: bool,
    },
    /// The α-th stage of the consistency progression over a theory
    Stage { theory: String, alpha: String },
    /// List the shipped catalog, or look up one entry
    Catalog { name: Option<String> },
}

#[derive(Debug, Subcommand)]
enum DilatorCommand {
    /// φ⁺_{1+α}(β)
    Eval { alpha: String, beta: String },
}

#[derive(Debug, Subcommand)]
enum NotationCommand {
    /// Compare a and b in the presentation gated on P: LT, EQ or GT
    Kreisel { predicate: String, a: u64, b: u64 },
    /// Report on the prefix 0..=N
    Audit { predicate: String, n: u64 },
    /// A descending chain from the least counterexample, or "none"
    Descend {
        predicate: String,
        fuel: Option<u64>,
    },
}

#[derive(Debug, Subcommand)]
enum FormulaCommand {
    /// Slow consistency of PHI ("true" for none)
    Slowcon {
        phi: String,
    },
    /// The SV operator applied to PHI
    Sv {
        phi: String,
    },
    /// The SV★ combination of PHI and PSI
    Svstar {
        phi: String,
        psi: String,
    },
    /// PHI ∨ (PSI ∧ THETA)
    Rosser {
        phi: String,
        psi: String,
        theta: String,
    },
    /// The Con★ fixed-point equation
    Constar {
        alpha: String,
        theory: String,
    },
}

#[derive(Debug, Error)]
enum CliError {
    #[error(transparent)]
    Ordinal(#[from] OrdinalError),
    #[error(transparent)]
    Worm(#[from] WormError),
    #[error(transparent)]
    Theory(#[from] TheoryError),
    #[error(transparent)]
    Predicate(#[from] PredicateError),
    #[error(transparent)]
    Formula(#[from] FormulaError),
    #[error("{what} {requested} exceeds the cap {cap}")]
    Cap {
        what: &'static str,
        requested: u64,
        cap: u64,
    },
}

impl CliError {
    fn kind(&self) -> &'static str {
        match self {
            CliError::Ordinal(_) => "ordinal",
            CliError::Worm(_) => "worm",
            CliError::Theory(_) => "theory",
            CliError::Predicate(_) => "predicate",
            CliError::Formula(_) => "formula",
            CliError::Cap { .. } => "cap",
        }
    }
}

/// Exit code and captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => {
            return Outcome {
                code: 2,
                stdout: String::new(),
                stderr: e.render().to_string(),
            }
        }
        Err(e) => {
            return Outcome {
                code: 0,
                stdout: e.render().to_string(),
                stderr: String::new(),
            }
        }
    };
    match dispatch(&cli) {
        Ok(mut stdout) => {
            if !stdout.ends_with('\n') {
                stdout.push('\n');
            }
            Outcome {
                code: 0,
                stdout,
                stderr: String::new(),
            }
        }
        Err(e) => Outcome {
            code: 1,
            stdout: String::new(),
            stderr: format!("error: {}: {}\n", e.kind(), e),
        },
    }
}

fn ordinal(text: &str) -> Result<Ordinal, CliError> {
    Ok(parse_ordinal(text)?)
}

fn worm(text: &str) -> Result<Worm, CliError> {
    Ok(text.parse()?)
}

/// Parenthesized text is a theory expression; anything else is a catalog name.
fn theory_arg(text: &str) -> Result<TheoryExpr, CliError> {
    let text = text.trim();
    if text.starts_with('(') {
        Ok(text.parse()?)
    } else {
        Ok(catalog_lookup(text)?)
    }
}

fn presentation(text: &str) -> Result<Presentation, CliError> {
    let predicate: PredicateExpr = text.parse()?;
    Ok(Presentation::kreisel(predicate))
}

fn formula_arg(text: &str) -> Result<Formula, CliError> {
    match text.trim() {
        "true" | "⊤" | "T" => Ok(Formula::Verum),
        name => Ok(Formula::hole(name)?),
    }
}

fn within_fuel(what: &'static str, requested: u64, fuel: u64) -> Result<(), CliError> {
    if requested > fuel {
        return Err(CliError::Cap {
            what,
            requested,
            cap: fuel,
        });
    }
    Ok(())
}

fn ordering(o: Ordering) -> &'static str {
    match o {
        Ordering::Less => "LT",
        Ordering::Equal => "EQ",
        Ordering::Greater => "GT",
    }
}

fn lines<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|item| item.to_string() + "\n")
        .collect()
}

fn dispatch(cli: &Cli) -> Result<String, CliError> {
    match &cli.command {
        Command::Ord(op) => ord(cli, op),
        Command::Worm(op) => worm_command(op),
        Command::Theory(op) => theory_command(op),
        Command::Dilator(DilatorCommand::Eval { alpha, beta }) => {
            Ok(theory::omega_model_dilator(&ordinal(alpha)?, &ordinal(beta)?).to_string())
        }
        Command::Notation(op) => notation_command(cli, op),
        Command::Formula(op) => formula_command(cli, op),
    }
}

fn ord(cli: &Cli, op: &OrdCommand) -> Result<String, CliError> {
    let out = match op {
        OrdCommand::Cmp { a, b } => ordering(ordinal(a)?.cmp(&ordinal(b)?)).to_string(),
        OrdCommand::Add { a, b } => ordinal(a)?
            .checked_add(&ordinal(b)?)
            .ok_or(OrdinalError::CoefficientOverflow)?
            .to_string(),
        OrdCommand::Mul { a, n } => ordinal(a)?
            .checked_mul_nat(*n)
            .ok_or(OrdinalError::CoefficientOverflow)?
            .to_string(),
        OrdCommand::Normalize { a } => ordinal(a)?.to_string(),
        OrdCommand::Phi { a, b } => Ordinal::veblen(&ordinal(a)?, &ordinal(b)?).to_string(),
        OrdCommand::NextPhi { a, b, gamma } => {
            let (a, b) = (ordinal(a)?, ordinal(b)?);
            match gamma {
                Some(g) => b.phi_plus_iter(&a, &ordinal(g)?).to_string(),
                None => b.next_phi_value(&a).to_string(),
            }
        }
        OrdCommand::Enum { n, sample } => {
            let terms = enumerate_terms(n.unwrap_or(cli.max_nodes), cli.max_nodes)?;
            match sample {
                None => lines(terms),
                Some(k) => {
                    let mut rng = StdRng::seed_from_u64(cli.seed);
                    let mut picked =
                        rand::seq::index::sample(&mut rng, terms.len(), (*k).min(terms.len()))
                            .into_vec();
                    picked.sort_unstable();
                    lines(picked.into_iter().map(|i| &terms[i]))
                }
            }
        }
    };
    Ok(out)
}

fn worm_command(op: &WormCommand) -> Result<String, CliError> {
    let out = match op {
        WormCommand::O { worm: w } => worm(w)?.ordinal().to_string(),
        WormCommand::Cmp { a, b } => ordering(worm(a)?.compare(&worm(b)?)).to_string(),
        WormCommand::OfOrdinal { a } => Worm::of_ordinal(&ordinal(a)?)?.to_string(),
        WormCommand::ToTheory { worm: w } => worm(w)?.theory().to_string(),
    };
    Ok(out)
}

fn theory_command(op: &TheoryCommand) -> Result<String, CliError> {
    let engine = Engine::shipped();
    let out = match op {
        TheoryCommand::PiOrdinal { theory, k } => {
            engine.pi_ordinal(&theory_arg(theory)?, *k)?.to_string()
        }
        TheoryCommand::Reduce { theory, k, trace } => {
            let reduction = engine.reduce(&theory_arg(theory)?, *k)?;
            let mut out = reduction.theory.to_string() + "\n";
            if *trace {
                out += &lines(reduction.steps.iter().map(|s| format!("step: {s}")));
            }
            out
        }
        TheoryCommand::Stage { theory, alpha } => {
            theory::progression_stage(&theory_arg(theory)?, &ordinal(alpha)?)?.to_string()
        }
        TheoryCommand::Catalog { name: Some(name) } => catalog_lookup(name)?.to_string(),
        TheoryCommand::Catalog { name: None } => lines(
            Catalog::shipped()
                .entries()
                .iter()
                .map(|(name, t)| format!("{name} = {t}")),
        ),
    };
    Ok(out)
}

fn notation_command(cli: &Cli, op: &NotationCommand) -> Result<String, CliError> {
    let out = match op {
        NotationCommand::Kreisel { predicate, a, b } => {
            within_fuel("argument", *a.max(b), cli.fuel)?;
            let p = presentation(predicate)?;
            let o = if a == b {
                Ordering::Equal
            } else if p.less(*a, *b) {
                Ordering::Less
            } else {
                Ordering::Greater
            };
            ordering(o).to_string()
        }
        NotationCommand::Audit { predicate, n } => {
            within_fuel("window", *n, cli.fuel)?;
            notation::audit(&presentation(predicate)?, *n).to_string()
        }
        NotationCommand::Descend { predicate, fuel } => {
            let fuel = fuel.unwrap_or(cli.fuel);
            within_fuel("fuel", fuel, cli.fuel)?;
            match notation::find_descending(&presentation(predicate)?, fuel) {
                Some(chain) => chain
                    .iter()
                    .map(u64::to_string)
                    .collect::<Vec<_>>()
                    .join(" "),
                None => "none".to_string(),
            }
        }
    };
    Ok(out)
}

fn formula_command(cli: &Cli, op: &FormulaCommand) -> Result<String, CliError> {
    let style = if cli.ascii {
        Style::Ascii
    } else {
        Style::Unicode
    };
    let f = match op {
        FormulaCommand::Slowcon { phi } => formula::slowcon(&formula_arg(phi)?)?,
        FormulaCommand::Sv { phi } => formula::sv(&formula_arg(phi)?)?,
        FormulaCommand::Svstar { phi, psi } => {
            formula::sv_star(&formula_arg(phi)?, &formula_arg(psi)?)?
        }
        FormulaCommand::Rosser { phi, psi, theta } => formula::rosser_combination(
            &formula_arg(phi)?,
            &formula_arg(psi)?,
            &formula_arg(theta)?,
        ),
        FormulaCommand::Constar { alpha, theory } => {
            return Ok(con_star_equation(alpha, theory, style)?)
        }
    };
    Ok(f.pretty(style))
}
