use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cliquesat::structure::DEFAULT_PACKING_CAP;
use cliquesat::CliquePattern;

use crate::CliError;

#[derive(Parser, Debug)]
#[command(name = "cliquesat")]
#[command(
    about = "Saturation numbers of K_p ∪ (t-1)K_q by construction, certification and exhaustive search"
)]
#[command(version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Write the extremal construction K_{p-2} ∨ ((t-1)K_{q+1} ∪ I)
    Construct {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        pattern: PatternArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Decide whether a graph is saturated; exits 0 only if it is
    Check {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        pattern: PatternArgs,
        /// Print the embedding or non-edge that breaks saturation
        #[arg(long)]
        witness: bool,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long)]
        json: bool,
    },
    /// Compute the saturation number by exhaustive search
    Satnum {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        pattern: PatternArgs,
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long)]
        json: bool,
    },
    /// List one graph per class with m edges, padded to n vertices
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        /// Keep only graphs saturated for this pattern (give all of --p, --q, --t)
        #[command(flatten)]
        pattern: OptionalPatternArgs,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Allow more edges than the default guard
        #[arg(long)]
        allow_large: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Residue objects and structural checks of a saturated graph
    Analyze {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        pattern: PatternArgs,
        /// Packing to use for F, e.g. "1,2,3;4,5,6"
        #[arg(long)]
        packing: Option<String>,
        /// Largest number of packings enumerated per vertex
        #[arg(long, default_value_t = DEFAULT_PACKING_CAP)]
        cap: usize,
        #[arg(long)]
        json: bool,
    },
    /// Check that the search finds exactly the construction at the formula value
    VerifyTheorem {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        pattern: PatternArgs,
        #[command(flatten)]
        search: SearchArgs,
        /// Run even when n is at most the theorem's bound
        #[arg(long)]
        allow_below_bound: bool,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args, Debug, Clone, Copy)]
pub struct PatternArgs {
    #[arg(long)]
    pub p: usize,
    #[arg(long)]
    pub q: usize,
    #[arg(long)]
    pub t: usize,
}

impl PatternArgs {
    pub fn pattern(&self) -> Result<CliquePattern, CliError> {
        Ok(CliquePattern::new(self.p, self.q, self.t)?)
    }

    /// The pattern, after checking that `n` vertices can hold it.
    pub fn pattern_for(&self, n: usize) -> Result<CliquePattern, CliError> {
        let pat = self.pattern()?;
        if n < pat.order() {
            return Err(CliError::usage(format!(
                "n={n} is below the order {} of {pat}",
                pat.order()
            )));
        }
        Ok(pat)
    }
}

#[derive(Args, Debug, Clone, Copy)]
pub struct OptionalPatternArgs {
    #[arg(long)]
    pub p: Option<usize>,
    #[arg(long)]
    pub q: Option<usize>,
    #[arg(long)]
    pub t: Option<usize>,
}

impl OptionalPatternArgs {
    pub fn pattern_for(&self, n: usize) -> Result<Option<CliquePattern>, CliError> {
        match (self.p, self.q, self.t) {
            (None, None, None) => Ok(None),
            (Some(p), Some(q), Some(t)) => PatternArgs { p, q, t }.pattern_for(n).map(Some),
            _ => Err(CliError::usage("give all of --p, --q and --t, or none")),
        }
    }
}

#[derive(Args, Debug)]
pub struct InputArgs {
    /// Graph file; standard input when omitted
    #[arg(long)]
    pub input: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Graph6)]
    pub format: Format,
    /// Expected number of vertices
    #[arg(long)]
    pub n: Option<usize>,
}

#[derive(Args, Debug)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Graph6)]
    pub format: Format,
    /// Write here instead of standard output
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug)]
pub struct SearchArgs {
    /// Largest edge count to examine; defaults to the formula value
    #[arg(long)]
    pub budget: Option<usize>,
    #[arg(long, default_value_t = 1)]
    pub workers: usize,
    /// Search past the default edge guard
    #[arg(long)]
    pub allow_large: bool,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Graph6,
    Edgelist,
}
