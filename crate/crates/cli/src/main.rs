use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use pairdom_cli::commands;
use pairdom_cli::input::{display_path, parse_pds, read_text, GraphSource};
use pairdom_cli::scan::{scan_text, write_csv, ScanRow, Summary};
use pairdom_cli::CliError;

/// Exact paired domination on small graphs.
///
/// Exit codes: 0 success, 1 failed check or bound violation, 2 bad input,
/// 3 isolated vertex, 4 certificate verdict false, 5 certify on a graph
/// that is not connected cubic.
#[derive(Parser)]
#[command(name = "pairdom", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Source {
    /// Named graph: petersen, k4, k33, prism, cube, cycleN, pathN, starN, completeN.
    #[arg(long)]
    name: Option<String>,
    /// Graph in graph6 format.
    #[arg(long)]
    g6: Option<String>,
    /// File whose first non-blank line is a graph6 record (`-` for stdin).
    #[arg(long)]
    file: Option<String>,
}

impl Source {
    fn resolve(self) -> GraphSource {
        GraphSource {
            name: self.name,
            g6: self.g6,
            file: self.file,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print γ_pr and a minimum paired dominating set.
    Solve {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        json: bool,
    },
    /// Check a given paired dominating set, or run all consistency checks.
    Verify {
        #[command(flatten)]
        source: Source,
        /// Matching edges of the set to check, e.g. `0-1,2-3`.
        #[arg(long)]
        pds: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Print the weight certificate of a connected cubic graph as JSON.
    Certify {
        #[command(flatten)]
        source: Source,
    },
    /// Scan a file of graph6 lines and write one CSV record per graph.
    Scan {
        /// Input corpus; standard input if omitted or `-`.
        #[arg(long)]
        file: Option<String>,
        /// Worker threads.
        #[arg(long, default_value_t = default_jobs())]
        jobs: usize,
        /// CSV destination. Without it the CSV goes to stdout and the
        /// summary to stderr.
        #[arg(long)]
        out: Option<String>,
        /// Write 0 in the `ms` column so output is reproducible.
        #[arg(long)]
        no_timing: bool,
        /// Print the summary as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Print random connected cubic graphs in graph6 format.
    Generate {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn default_jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn scan(
    file: Option<String>,
    jobs: usize,
    out: Option<String>,
    no_timing: bool,
    json: bool,
) -> Result<(), CliError> {
    let path = file.unwrap_or_else(|| "-".into());
    let text = read_text(&path)?;
    let rows = scan_text(&text, display_path(&path), jobs, !no_timing)?;
    for row in &rows {
        if let ScanRow::Error { id, message } = row {
            eprintln!("{id}: {message}");
        }
    }
    let summary = Summary::of(&rows);
    let stdout = io::stdout();
    let mut summary_out: Box<dyn Write> = match &out {
        Some(p) => {
            let mut w = BufWriter::new(File::create(p)?);
            write_csv(&rows, &mut w)?;
            w.flush()?;
            Box::new(stdout.lock())
        }
        None => {
            let mut w = stdout.lock();
            write_csv(&rows, &mut w)?;
            Box::new(io::stderr())
        }
    };
    if json {
        writeln!(
            summary_out,
            "{}",
            serde_json::to_string(&summary).expect("plain data")
        )?;
    } else {
        summary.write(&mut summary_out)?;
    }
    if summary.unexpected_violations > 0 {
        return Err(CliError::Failed(format!(
            "{} connected cubic graph(s) other than Petersen exceed 4n/7",
            summary.unexpected_violations
        )));
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), CliError> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Solve { source, json } => {
            commands::solve(&source.resolve().load()?, json, &mut out)
        }
        Command::Verify { source, pds, json } => {
            let input = source.resolve().load()?;
            let pds = pds.as_deref().map(parse_pds).transpose()?;
            commands::verify(&input, pds.as_ref(), json, &mut out)
        }
        Command::Certify { source } => commands::certify(&source.resolve().load()?, &mut out),
        Command::Scan {
            file,
            jobs,
            out: csv,
            no_timing,
            json,
        } => {
            drop(out);
            scan(file, jobs, csv, no_timing, json)
        }
        Command::Generate { n, count, seed } => {
            let mut out = BufWriter::new(out);
            let res = commands::generate(n, count, seed, &mut out, &mut io::stderr());
            out.flush()?;
            res
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            e.to_exit()
        }
    }
}
