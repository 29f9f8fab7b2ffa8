//! `idealgraph` command-line tool.
//!
//! Exit status: 0 when every check passes, 1 on a mathematical disagreement
//! or fixture failure, 2 on a usage or input error.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use idealgraph::export::ExportFormat;

#[derive(Debug, Parser)]
#[command(name = "idealgraph", version, about = "Z_n-intersection graphs of ideals of Z_m")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Structural,
    ClosedForm,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide planarity, outerplanarity and the ring property for one pair.
    Classify {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value_t = Mode::Both)]
        mode: Mode,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Export the graph as DOT, JSON or an edge list.
    Graph {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        n: u64,
        #[arg(long, value_parser = parse_format)]
        format: ExportFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Cross-check structure against the closed form for every pair up to a bound.
    Sweep {
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        max_m: u64,
        #[arg(long, default_value_t = 500)]
        oracle_bound: u64,
        #[arg(long, value_parser = clap::value_parser!(u16).range(1..))]
        jobs: Option<u16>,
        /// Line-oriented JSON report, one record per pair plus a summary.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write the five figure graphs with their classifications.
    Figures {
        #[arg(long, default_value_t = 2)]
        p1: u64,
        #[arg(long, default_value_t = 3)]
        p2: u64,
        #[arg(long, default_value_t = 5)]
        p3: u64,
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
    },
    /// Compare subgroup-intersection adjacency with the lcm rule on every vertex pair.
    Oracle {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        n: u64,
    },
}

fn parse_format(s: &str) -> Result<ExportFormat, String> {
    s.parse().map_err(|e: idealgraph::export::ExportError| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Classify { m, n, mode, format } => commands::classify(m, n, mode, format),
        Command::Graph { m, n, format, out } => commands::graph(m, n, format, out.as_deref()),
        Command::Sweep {
            max_m,
            oracle_bound,
            jobs,
            out,
        } => commands::sweep(max_m, oracle_bound, jobs.map(usize::from), out.as_deref()),
        Command::Figures { p1, p2, p3, out_dir } => commands::figures(p1, p2, p3, &out_dir),
        Command::Oracle { m, n } => commands::oracle(m, n),
    };
    match result {
        Ok(commands::Status::Ok) => ExitCode::SUCCESS,
        Ok(commands::Status::Disagreement) => ExitCode::from(1),
        Err(commands::CliError::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
