use std::path::PathBuf;
use std::str::FromStr;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use magic_core::analysis::Family;
use magic_core::verify::LanguageClass;

#[derive(Debug, Parser)]
#[command(
    name = "magic",
    version,
    about = "Witness automata for deterministic blow-ups of NFAs"
)]
#[command(args_override_self = true)]
pub struct Cli {
    /// TOML file whose keys are long flag names of the chosen command;
    /// flags on the command line take precedence.
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate the witness NFA for one (family, n, alpha) cell.
    Gen(GenArgs),
    /// Generate and check a grid of cells, emitting a JSON report.
    Verify(VerifyArgs),
    /// Search small NFAs for the achievable DFA sizes within a family.
    Spectrum(SpectrumArgs),
    /// Run one checker on an automaton file.
    Check(CheckArgs),
    /// Print the intervals outside of which every alpha is trivially magic.
    Bounds(BoundsArgs),
}

#[derive(Debug, Args)]
pub struct Caps {
    /// Cap on subset states during determinization (default: MAGIC_MAX_SUBSETS or 1000000).
    #[arg(long, value_name = "N")]
    pub max_subsets: Option<usize>,

    /// Cap on transition monoid elements.
    #[arg(long, value_name = "N")]
    pub max_monoid: Option<usize>,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long, value_parser = parse_class)]
    pub family: LanguageClass,

    #[arg(long)]
    pub n: u32,

    #[arg(long)]
    pub alpha: u64,

    /// Where to write the automaton; stdout when absent.
    #[arg(long, short)]
    pub output: Option<PathBuf>,

    /// Also write the multi-entry automaton of the infix-closed construction.
    #[arg(long, value_name = "FILE")]
    pub mnfa: Option<PathBuf>,

    #[command(flatten)]
    pub caps: Caps,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_parser = parse_class)]
    pub family: LanguageClass,

    /// A single n, an inclusive range `3..6`, or a list `3,5,8`.
    #[arg(long, value_parser = parse_n_list)]
    pub n: NList,

    /// `all` for every constructive alpha, otherwise a list or inclusive range.
    #[arg(long, default_value = "all")]
    pub alpha: AlphaSelection,

    /// Where to write the JSON report; stdout when absent.
    #[arg(long, short)]
    pub output: Option<PathBuf>,

    /// Also write the CSV projection.
    #[arg(long, value_name = "FILE")]
    pub csv: Option<PathBuf>,

    /// Record wall-clock milliseconds per cell (makes reports non-reproducible).
    #[arg(long)]
    pub timing: bool,

    #[command(flatten)]
    pub caps: Caps,
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    #[arg(long, value_parser = parse_family)]
    pub family: Family,

    #[arg(long)]
    pub n: usize,

    #[arg(long, default_value_t = 2)]
    pub sigma: usize,

    /// Enumerate every automaton instead of sampling.
    #[arg(long, conflicts_with_all = ["seed", "samples"])]
    pub exhaustive: bool,

    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    #[arg(long, default_value_t = 100_000)]
    pub samples: u64,

    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Property {
    Family(Family),
    Aperiodic,
    Lemma1,
    FoolingSet,
}

impl FromStr for Property {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> anyhow::Result<Self> {
        Ok(match s {
            "aperiodic" => Property::Aperiodic,
            "lemma1" => Property::Lemma1,
            "fooling-set" => Property::FoolingSet,
            other => Property::Family(other.parse().with_context(|| {
                format!("unknown property {other:?}; expected a family name, aperiodic, lemma1 or fooling-set")
            })?),
        })
    }
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    /// A family name, `aperiodic`, `lemma1` or `fooling-set`.
    #[arg(long)]
    pub property: Property,

    /// Automaton in the text format.
    pub input: PathBuf,

    /// Pair file for `fooling-set`; defaults to the input path with a `.fool` extension.
    #[arg(long, value_name = "FILE")]
    pub fooling_set: Option<PathBuf>,

    #[command(flatten)]
    pub caps: Caps,
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    /// Evaluate the intervals at this n.
    #[arg(long)]
    pub n: Option<u32>,

    #[arg(long, value_enum, default_value_t = BoundsFormat::Text)]
    pub format: BoundsFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BoundsFormat {
    Text,
    Json,
}

fn parse_class(s: &str) -> anyhow::Result<LanguageClass> {
    Ok(s.parse()?)
}

fn parse_family(s: &str) -> anyhow::Result<Family> {
    Ok(s.parse()?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NList(pub Vec<u32>);

fn parse_n_list(s: &str) -> anyhow::Result<NList> {
    Ok(NList(
        parse_list(s)?
            .into_iter()
            .map(u32::try_from)
            .collect::<Result<_, _>>()?,
    ))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlphaSelection {
    All,
    List(Vec<u64>),
}

impl AlphaSelection {
    pub fn as_slice(&self) -> Option<&[u64]> {
        match self {
            AlphaSelection::All => None,
            AlphaSelection::List(v) => Some(v),
        }
    }
}

impl FromStr for AlphaSelection {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> anyhow::Result<Self> {
        if s == "all" {
            return Ok(AlphaSelection::All);
        }
        Ok(AlphaSelection::List(parse_list(s)?))
    }
}

/// `7`, `3..6`, `3..=6` (both inclusive) or comma-separated mixtures of those.
pub fn parse_list(s: &str) -> anyhow::Result<Vec<u64>> {
    let mut out = Vec::new();
    for part in s.split(',').map(str::trim) {
        if let Some((lo, hi)) = part.split_once("..") {
            let hi = hi.strip_prefix('=').unwrap_or(hi);
            let (lo, hi): (u64, u64) = (lo.trim().parse()?, hi.trim().parse()?);
            if lo > hi {
                bail!("empty range {part:?}");
            }
            out.extend(lo..=hi);
        } else {
            out.push(part.parse().with_context(|| format!("not a number: {part:?}"))?);
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}
