//! `superwalk`: command-line access to the tableau, character, Markov and
//! simulation routines of `superwalk-core`.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use superwalk_core::{AlgebraKind, Budget, Error};

#[derive(Parser, Debug)]
#[command(name = "superwalk", version, about = "Pitman transforms, characters and conditioned walks for gl(n), gl(m,n) and q(n)")]
pub struct Cli {
    #[command(flatten)]
    pub config: Config,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum KindName {
    Empty,
    Hook,
    Strict,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// Options shared by every command; each can also be set through a
/// `SUPERWALK_*` environment variable.
#[derive(Args, Debug, Clone)]
pub struct Config {
    /// Algebra: empty = gl(n), hook = gl(m,n), strict = q(n) [default: empty]
    #[arg(long, global = true, value_enum, env = "SUPERWALK_KIND")]
    pub kind: Option<KindName>,

    /// Number of unbarred letters [default: 3]
    #[arg(long, global = true, env = "SUPERWALK_N")]
    pub n: Option<usize>,

    /// Number of barred letters (hook kind only)
    #[arg(long, global = true, env = "SUPERWALK_M")]
    pub m: Option<usize>,

    /// Step probabilities as comma-separated rationals, barred letters first
    #[arg(long, global = true, env = "SUPERWALK_P", allow_hyphen_values = true)]
    pub p: Option<String>,

    #[arg(long, global = true, default_value_t = 1, env = "SUPERWALK_SEED")]
    pub seed: u64,

    /// Largest number of boxes for exhaustive enumerations
    #[arg(long, global = true, default_value_t = 8, env = "SUPERWALK_BUDGET")]
    pub budget: usize,

    /// Largest number of enumeration nodes
    #[arg(long, global = true, default_value_t = 1_000_000, env = "SUPERWALK_MAX_NODES")]
    pub max_nodes: usize,

    /// Write to this file (atomically) instead of standard output
    #[arg(long, short, global = true, env = "SUPERWALK_OUTPUT")]
    pub output: Option<PathBuf>,

    /// Output format where both are supported
    #[arg(long, global = true, value_enum, env = "SUPERWALK_FORMAT")]
    pub format: Option<Format>,
}

impl Config {
    pub fn algebra(&self) -> Result<AlgebraKind, Error> {
        let n = self.n.unwrap_or(3);
        match self.kind.unwrap_or(KindName::Empty) {
            KindName::Empty => AlgebraKind::empty(n),
            KindName::Strict => AlgebraKind::strict(n),
            KindName::Hook => {
                let m = self.m.ok_or_else(|| Error::InvalidInput("--kind hook requires --m".into()))?;
                AlgebraKind::hook(m, n)
            }
        }
    }

    /// The algebra when any of `--kind`, `--n`, `--m` was given.
    pub fn explicit_algebra(&self) -> Result<Option<AlgebraKind>, Error> {
        if self.kind.is_none() && self.n.is_none() && self.m.is_none() {
            return Ok(None);
        }
        if self.kind.is_none() && self.m.is_some() {
            return Err(Error::InvalidInput("--m requires --kind hook".into()));
        }
        self.algebra().map(Some)
    }

    pub fn budget(&self) -> Budget {
        Budget { max_boxes: self.budget, max_nodes: self.max_nodes }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Insertion tableau and recording tableau of a word
    Rsk(commands::WordArgs),
    /// Shapes of the insertion tableaux of every prefix, one JSON line each
    Pitman(commands::WordArgs),
    /// Evaluate a character at the probability vector
    Char(commands::CharArgs),
    /// Decompose a tensor product of two irreducible characters
    Multiplicity(commands::MultiplicityArgs),
    /// Probability of staying in the cone: closed form and truncated sequence
    ExitProb(commands::ExitProbArgs),
    /// Monte Carlo estimates with standard errors
    Simulate(commands::SimulateArgs),
    /// Exact trend experiments along the drift direction
    Llt(commands::LltArgs),
    /// Run an exhaustive identity suite
    Verify(commands::VerifyArgs),
}

/// 0 ok, 1 internal check failed, 2 bad input, 3 budget exceeded.
pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::InvalidInput(_)
        | Error::ConditionViolated(_)
        | Error::Singular(_)
        | Error::FormulaNotApplicable(_)
        | Error::UndefinedKernel(_) => 2,
        Error::Budget { .. } | Error::SamplingFailure { .. } => 3,
        Error::NotHarmonic(_) | Error::Consistency(_) => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("superwalk: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
