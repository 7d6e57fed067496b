use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use mckay::cli::{self, Format, LoadedGraph, Source, DEFAULT_TERMS, TERMS_ENV_VAR};
use mckay::GroupKind;

/// Exact Poincaré series for tensor multiplicities of finite SU(2) subgroups
/// and walk generating functions on affine Dynkin diagrams.
#[derive(Parser)]
#[command(name = "mckay", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SourceArgs {
    /// Catalog group: C<n>, D<n>, T, O, I, or S4 (case-insensitive)
    #[arg(long, conflicts_with_all = ["graph", "chartable"])]
    group: Option<String>,
    /// Graph JSON file
    #[arg(long, conflicts_with = "chartable")]
    graph: Option<PathBuf>,
    /// Character-table CSV file
    #[arg(long)]
    chartable: Option<PathBuf>,
    /// Irrep label selecting V (with --chartable; overrides a #V= directive)
    #[arg(long)]
    v: Option<String>,
}

impl SourceArgs {
    fn resolve(&self) -> mckay::Result<Source> {
        if let Some(spec) = &self.group {
            return Ok(Source::Group(GroupKind::parse(spec)?));
        }
        if let Some(path) = &self.graph {
            return Ok(Source::GraphFile(path.display().to_string()));
        }
        if let Some(path) = &self.chartable {
            return Ok(Source::CharTable {
                path: path.display().to_string(),
                v_label: self.v.clone(),
            });
        }
        Err(mckay::Error::InvalidParameter(
            "no input: pass --group, --graph, or --chartable".into(),
        ))
    }
}

#[derive(Subcommand)]
enum Command {
    /// Poincaré series of one node: reduced fraction, determinant pair,
    /// and expansion coefficients
    Series {
        #[command(flatten)]
        source: SourceArgs,
        /// Node label (e.g. 0, "(3,1)", 2')
        #[arg(long)]
        node: String,
        /// Number of expansion coefficients (default: $MCKAY_TERMS_DEFAULT or 20)
        #[arg(long)]
        terms: Option<usize>,
        /// Output format: json or text
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Level-by-level multiplicities and centralizer dimensions
    Bratteli {
        #[command(flatten)]
        source: SourceArgs,
        /// Number of levels beyond level 0
        #[arg(long)]
        levels: usize,
        /// Output format: json, text, or dot
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Run a verification suite across the catalog
    Verify {
        /// all, chebyshev, steinberg, closedform, molien, or oracle
        #[arg(long, default_value = "all")]
        suite: String,
        /// Numeric tolerance for residual checks
        #[arg(long, default_value_t = 1e-9)]
        tolerance: f64,
        /// Output format: json or text
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Export a catalog group as a graph (json/dot) or a catalog entry (json)
    Export {
        /// Catalog group: C<n>, D<n>, T, O, I, or S4
        #[arg(long)]
        group: String,
        /// graph or catalog
        #[arg(long, default_value = "graph")]
        what: String,
        /// Output format: json or dot
        #[arg(long, default_value = "json")]
        format: String,
    },
}

fn default_terms() -> usize {
    std::env::var(TERMS_ENV_VAR)
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_TERMS)
}

fn load(source: &SourceArgs) -> mckay::Result<LoadedGraph> {
    let loaded = cli::load_source(&source.resolve()?)?;
    for warning in &loaded.warnings {
        eprintln!("warning: {warning}");
    }
    Ok(loaded)
}

fn run(command: Command) -> mckay::Result<bool> {
    match command {
        Command::Series {
            source,
            node,
            terms,
            format,
        } => {
            let loaded = load(&source)?;
            let terms = terms.unwrap_or_else(default_terms);
            print!(
                "{}",
                cli::cmd_series(&loaded, &node, terms, Format::parse(&format)?)?
            );
            Ok(true)
        }
        Command::Bratteli {
            source,
            levels,
            format,
        } => {
            let loaded = load(&source)?;
            print!(
                "{}",
                cli::cmd_bratteli(&loaded, levels, Format::parse(&format)?)?
            );
            Ok(true)
        }
        Command::Verify {
            suite,
            tolerance,
            format,
        } => {
            let (out, passed) = cli::cmd_verify(&suite, tolerance, Format::parse(&format)?)?;
            print!("{out}");
            Ok(passed)
        }
        Command::Export {
            group,
            what,
            format,
        } => {
            let kind = GroupKind::parse(&group)?;
            let out = cli::cmd_export(kind, &what, Format::parse(&format)?)?;
            println!("{out}");
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        // 0: success, 1: verification failure, 2: usage/validation error
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
