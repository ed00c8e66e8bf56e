//! `flowcensus`: catalogs of spherical maps and codimension-one flows.
//!
//! Exit status is 0 on success, 2 for usage and range errors and 1 when an
//! invariant check or file operation fails.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use flowcensus_core::catalog::{
    bifurcation_catalog, census_report, export, map_catalog, resolve, Catalog, CatalogError,
    CatalogKind, ExportFormat,
};
use flowcensus_core::generate::GenerateError;
use flowcensus_core::marks::{CensusError, MarkError};
use flowcensus_core::Equivalence;

#[derive(Parser)]
#[command(
    name = "flowcensus",
    version,
    about = "Enumerate spherical maps and codimension-one gradient flows"
)]
struct Cli {
    /// Count only orientation-preserving equivalences (mirror images stay distinct).
    #[arg(long, global = true)]
    no_reflections: bool,
    /// Worker threads; 0 uses every available core.
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    /// Output file. Defaults: maps-e<N>.json, <kind>-n<N>.json,
    /// census-report.json; export writes to stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    SaddleNode,
    SaddleConnection,
}

#[derive(Subcommand)]
enum Command {
    /// Catalog every map with the given number of edges (1 to 5).
    Maps {
        #[arg(long)]
        edges: usize,
    },
    /// Catalog flows with one saddle-node or one saddle connection.
    Bifurcations {
        #[arg(long, value_enum)]
        kind: Kind,
        /// Saddles: 1 to 4 for saddle-node, 2 to 4 for saddle-connection.
        #[arg(long)]
        saddles: usize,
    },
    /// Run every census up to four saddles and compare with published counts.
    VerifyPaper,
    /// Export entries as json, dot or diagram-json.
    Export {
        /// A catalog file or a single code token.
        input: String,
        /// Select one entry of a catalog file by code.
        #[arg(long)]
        code: Option<String>,
        #[arg(long, default_value = "json")]
        format: String,
    },
}

enum Failure {
    Usage(String),
    Internal(String),
}

impl From<CatalogError> for Failure {
    fn from(e: CatalogError) -> Self {
        let usage = matches!(
            e,
            CatalogError::UnknownCode(_)
                | CatalogError::UnsupportedFormat(_)
                | CatalogError::NotMarked(_)
                | CatalogError::Generate(GenerateError::EdgeCountOutOfRange(_))
                | CatalogError::Census(CensusError::Generate(GenerateError::EdgeCountOutOfRange(
                    _
                )))
                | CatalogError::Census(CensusError::Mark(MarkError::SaddleCountOutOfRange { .. }))
        );
        if usage {
            Failure::Usage(e.to_string())
        } else {
            Failure::Internal(e.to_string())
        }
    }
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Internal(format!("{}: {e}", path.display())))
}

fn print_catalog(cat: &Catalog) {
    println!("{} entries", cat.entries.len());
    if cat.kind == CatalogKind::Maps {
        let mut histogram: BTreeMap<&[usize], usize> = BTreeMap::new();
        for e in &cat.entries {
            *histogram.entry(&e.degree_sequence).or_insert(0) += 1;
        }
        println!("degree sequence          count");
        for (seq, count) in histogram {
            println!("{:<24} {count:>5}", format!("{seq:?}"));
        }
    } else {
        let mut by_kind: BTreeMap<String, usize> = BTreeMap::new();
        for e in &cat.entries {
            let key = e.mark.map_or("-".into(), |m| m.kind.token().to_string());
            *by_kind.entry(key).or_insert(0) += 1;
        }
        for (kind, count) in by_kind {
            println!("{kind:<8} {count:>5}");
        }
        for e in &cat.entries {
            let s = &e.singular_point_summary;
            println!(
                "{}  points {} (sources {}, sinks {}, saddles {}, saddle-nodes {}){}",
                e.code,
                s.total(),
                s.sources,
                s.sinks,
                s.saddles,
                s.saddle_node_sources + s.saddle_node_sinks,
                e.label
                    .as_ref()
                    .map_or(String::new(), |l| format!("  [{l}]"))
            );
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let eq = if cli.no_reflections {
        Equivalence::Oriented
    } else {
        Equivalence::Unoriented
    };
    match cli.command {
        Command::Maps { edges } => {
            let cat = map_catalog(edges, eq, cli.jobs)?;
            let path = cli
                .out
                .unwrap_or_else(|| format!("maps-e{edges}.json").into());
            write_file(&path, &cat.to_json())?;
            print_catalog(&cat);
        }
        Command::Bifurcations { kind, saddles } => {
            let (kind, name) = match kind {
                Kind::SaddleNode => (CatalogKind::SaddleNode, "saddle-node"),
                Kind::SaddleConnection => (CatalogKind::SaddleConnection, "saddle-connection"),
            };
            let cat = bifurcation_catalog(kind, saddles, eq, cli.jobs)?;
            let path = cli
                .out
                .unwrap_or_else(|| format!("{name}-n{saddles}.json").into());
            write_file(&path, &cat.to_json())?;
            print_catalog(&cat);
        }
        Command::VerifyPaper => {
            let report = census_report(eq, cli.jobs)?;
            let path = cli.out.unwrap_or_else(|| "census-report.json".into());
            write_file(&path, &report.to_json())?;
            print!("{}", report.to_table());
        }
        Command::Export {
            input,
            code,
            format,
        } => {
            let format: ExportFormat = format.parse()?;
            let (entries, eq) = if Path::new(&input).is_file() {
                let text = fs::read_to_string(&input)
                    .map_err(|e| Failure::Internal(format!("{input}: {e}")))?;
                let cat = Catalog::from_json(&text).map_err(|e| Failure::Usage(e.to_string()))?;
                let eq = cat.equivalence;
                match code {
                    Some(token) => (vec![resolve(&token, Some(&cat), eq)?], eq),
                    None => (cat.entries, eq),
                }
            } else {
                if code.is_some() {
                    return Err(Failure::Usage(format!("{input} is not a catalog file")));
                }
                (vec![resolve(&input, None, eq)?], eq)
            };
            let text = export(&entries, format, eq)?;
            match cli.out {
                Some(path) => write_file(&path, &text)?,
                None => print!("{text}"),
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
