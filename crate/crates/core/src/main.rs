use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use posemi::enumerate::{Dedup, Shard};
use posemi::harness::commands::{self, EnumerateKind, GenerateKind, Target};
use posemi::harness::{CampaignConfig, Scope};
use posemi::{Caps, Result};

#[derive(Parser)]
#[command(
    name = "posemi",
    version,
    about = "Finite ordered semigroups: enumeration, ideals, verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write every structure of one order as JSON lines or files.
    Enumerate {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        order: usize,
        #[command(flatten)]
        universe: Universe,
        /// Write one file per structure into this directory.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the equivalence (or implication) on every structure up to an order.
    Verify {
        #[arg(value_enum)]
        scope: ScopeArg,
        #[arg(long, default_value_t = 3)]
        max_order: usize,
        #[command(flatten)]
        universe: Universe,
        /// Check a single structure file instead of enumerating.
        #[arg(long, conflicts_with_all = ["max_order", "dedup", "shard"])]
        file: Option<PathBuf>,
        /// Print the counterexample triples behind each false condition.
        #[arg(long)]
        witnesses: bool,
    },
    /// Print which ideal (or element) kinds a subset (or element) has.
    Classify {
        #[arg(long)]
        file: PathBuf,
        #[command(flatten)]
        target: TargetArgs,
    },
    /// Compute a generated ideal or element and compare it with brute force.
    Generate {
        #[arg(long)]
        file: PathBuf,
        #[command(flatten)]
        target: TargetArgs,
        #[arg(long, value_enum)]
        kind: GenKindArg,
    },
    /// Find (x, y) with a <= x a a y, or report none.
    Witness {
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        element: String,
    },
}

#[derive(Args)]
struct Universe {
    #[arg(long, value_enum, default_value_t = DedupArg::None)]
    dedup: DedupArg,
    /// Only this share of the search, as INDEX/TOTAL.
    #[arg(long)]
    shard: Option<Shard>,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct TargetArgs {
    /// Comma-separated element names or indices.
    #[arg(long)]
    subset: Option<String>,
    #[arg(long)]
    element: Option<String>,
}

impl TargetArgs {
    fn into_target(self) -> Target {
        match (self.subset, self.element) {
            (Some(s), _) => Target::Subset(s),
            (None, Some(e)) => Target::Element(e),
            (None, None) => unreachable!("clap requires one of the group"),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Semigroup,
    Ordered,
    Le,
}

#[derive(Clone, Copy, ValueEnum)]
enum ScopeArg {
    Theorem1,
    Theorem2,
    Remark,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DedupArg {
    None,
    Iso,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKindArg {
    Left,
    Right,
    Quasi,
}

impl From<DedupArg> for Dedup {
    fn from(d: DedupArg) -> Dedup {
        match d {
            DedupArg::None => Dedup::None,
            DedupArg::Iso => Dedup::UpToIso,
        }
    }
}

fn run(cli: Cli, out: &mut dyn Write) -> Result<i32> {
    let caps = Caps::from_env();
    match cli.command {
        Command::Enumerate {
            kind,
            order,
            universe,
            out: dir,
        } => {
            let kind = match kind {
                KindArg::Semigroup => EnumerateKind::Semigroup,
                KindArg::Ordered => EnumerateKind::Ordered,
                KindArg::Le => EnumerateKind::Le,
            };
            commands::enumerate(
                kind,
                order,
                universe.dedup.into(),
                universe.shard,
                dir.as_deref(),
                out,
                &caps,
            )
        }
        Command::Verify {
            scope,
            max_order,
            universe,
            file,
            witnesses,
        } => {
            let scope = match scope {
                ScopeArg::Theorem1 => Scope::Theorem1,
                ScopeArg::Theorem2 => Scope::Theorem2,
                ScopeArg::Remark => Scope::Remark,
            };
            let cfg = CampaignConfig {
                scope,
                max_order,
                dedup: universe.dedup.into(),
                shard: universe.shard,
            };
            commands::verify(&cfg, file.as_deref(), witnesses, out, &caps)
        }
        Command::Classify { file, target } => commands::classify(&file, &target.into_target(), out),
        Command::Generate { file, target, kind } => {
            let kind = match kind {
                GenKindArg::Left => GenerateKind::Left,
                GenKindArg::Right => GenerateKind::Right,
                GenKindArg::Quasi => GenerateKind::Quasi,
            };
            commands::generate(&file, &target.into_target(), kind, out, &caps)
        }
        Command::Witness { file, element } => commands::witness(&file, &element, out),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(code) => {
            let _ = out.flush();
            ExitCode::from(code as u8)
        }
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
