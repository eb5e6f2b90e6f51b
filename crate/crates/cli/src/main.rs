use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use pq_cli::{run, Command, RunConfig};
use pq_core::lie::VERIFIERS;
use pq_core::poset::PosetKind;

#[derive(Parser)]
#[command(name = "pq", version, about = "Verify p-subgroup complex computations")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    /// Group spec, e.g. "Sym(6)" or "PSL(3,4):frob(1):graph".
    #[arg(long, global = true)]
    group: Option<String>,
    /// The SCNL subgroup H, by name or spec.
    #[arg(long = "H", global = true)]
    h: Option<String>,
    /// The subgroup G_df, by name or spec.
    #[arg(long = "Gdf", global = true)]
    gdf: Option<String>,
    /// The prime p
    #[arg(long, global = true)]
    p: Option<u64>,
    /// A second prime, for cross-characteristic checks
    #[arg(long, global = true)]
    r: Option<u64>,
    /// Poset: quillen (A_p, the default), brown (S_p) or bouc (B_p)
    #[arg(long, global = true, value_enum)]
    kind: Option<Kind>,
    /// Include the slow instances in `suite`.
    #[arg(long, global = true)]
    slow: bool,
    /// Cache directory; defaults to $PQ_CACHE_DIR, then a temp dir
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Maximum number of group elements to enumerate
    #[arg(long, global = true)]
    element_cap: Option<usize>,
    /// Maximum number of poset members
    #[arg(long, global = true)]
    poset_cap: Option<usize>,
    /// Maximum number of simplices in an order complex
    #[arg(long, global = true)]
    simplex_cap: Option<usize>,
    /// Report timing_ms as 0 so identical runs give identical bytes.
    #[arg(long, global = true)]
    no_timing: bool,
}

#[derive(Subcommand)]
enum Cmd {
    /// Order, degree and tags of a catalog group.
    Group,
    /// Size and Euler characteristic of A_p, S_p or B_p.
    Poset,
    /// Face counts of the order complex.
    Complex,
    /// Reduced integral homology of the order complex.
    Homology,
    /// Run one verifier.
    Verify {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(VERIFIERS))]
        id: String,
    },
    /// Run the fixed suite of verifications.
    Suite,
    /// List catalog groups, reference values and verifiers.
    List,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Quillen,
    Brown,
    Bouc,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (command, verifier) = match cli.command {
        Cmd::Group => (Command::Group, None),
        Cmd::Poset => (Command::Poset, None),
        Cmd::Complex => (Command::Complex, None),
        Cmd::Homology => (Command::Homology, None),
        Cmd::Verify { id } => (Command::Verify, Some(id)),
        Cmd::Suite => (Command::Suite, None),
        Cmd::List => (Command::List, None),
    };
    let mut config = RunConfig::new(command);
    config.verifier = verifier;
    config.group = cli.group;
    config.h = cli.h;
    config.gdf = cli.gdf;
    config.p = cli.p;
    config.r = cli.r;
    config.kind = cli.kind.map(|k| match k {
        Kind::Quillen => PosetKind::Quillen,
        Kind::Brown => PosetKind::Brown,
        Kind::Bouc => PosetKind::Bouc,
    });
    config.slow = cli.slow;
    config.cache_dir = cli.cache_dir;
    config.out = cli.out.clone();
    config.no_timing = cli.no_timing;
    if let Some(c) = cli.element_cap {
        config.limits.elements = c;
    }
    if let Some(c) = cli.poset_cap {
        config.limits.poset = c;
    }
    if let Some(c) = cli.simplex_cap {
        config.limits.simplices = c;
    }
    let outcome = run(&config);
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, format!("{}\n", outcome.json)) {
                eprintln!("cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => println!("{}", outcome.json),
    }
    ExitCode::from(outcome.exit_code as u8)
}
