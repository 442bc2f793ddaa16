use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use foulkes_cli::output::{cmd_enumerate, cmd_export, cmd_from_theta, cmd_to_theta, parse_coords, parse_params};
use foulkes_cli::{cmd_verify, Caps, CommandError, Format, Suite, Table};

#[derive(Parser)]
#[command(name = "foulkes")]
#[command(about = "Exact verification and export for the characters of S_n that depend only on cycle count")]
#[command(version)]
struct Cli {
    /// Worker threads (default: all cores)
    #[arg(long, env = "FOULKES_THREADS", global = true, value_parser = clap::value_parser!(u16).range(1..))]
    threads: Option<u16>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite; exit 1 if any check fails
    Verify {
        #[arg(value_enum)]
        suite_name: Option<Suite>,

        #[arg(long, value_enum, conflicts_with = "suite_name")]
        suite: Option<Suite>,

        /// Largest n (default: per suite)
        #[arg(long, conflicts_with = "n")]
        n_max: Option<usize>,

        /// Run a single n only
        #[arg(long)]
        n: Option<usize>,

        /// Override every brute-force cap
        #[arg(long)]
        cap_brute: Option<usize>,

        #[arg(long, value_enum, default_value = "text")]
        format: ReportFormat,

        /// Per-check wall-clock times on stderr
        #[arg(long)]
        timings: bool,
    },

    /// Stream the fundamental domain as JSON lines
    Enumerate {
        #[arg(long)]
        n: usize,
    },

    /// Convert between parameters a and phi-coordinates
    Param {
        #[command(subcommand)]
        direction: Direction,
    },

    /// Write a basis, character table or structure-constant tensor
    Export {
        #[arg(long, value_enum)]
        table: Table,

        #[arg(long)]
        n: usize,

        #[arg(long, value_enum, default_value = "json")]
        format: Format,

        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum Direction {
    /// theta_a from a, e.g. --a 0,1,0
    ToTheta {
        #[arg(long)]
        n: Option<usize>,

        #[arg(long, allow_hyphen_values = true)]
        a: String,
    },
    /// a from phi-coordinates, e.g. --coords 1,1,1
    FromTheta {
        #[arg(long)]
        n: Option<usize>,

        #[arg(long, allow_hyphen_values = true)]
        coords: String,
    },
}

fn fail(e: CommandError) -> ExitCode {
    eprintln!("error: {}", e.message());
    ExitCode::from(e.exit_code())
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn emit(text: &str) -> ExitCode {
    let mut out = io::stdout().lock();
    if out.write_all(text.as_bytes()).and_then(|_| out.flush()).is_err() {
        return ExitCode::from(2);
    }
    ExitCode::SUCCESS
}

fn verify(
    suite: Option<Suite>,
    n_max: Option<usize>,
    n: Option<usize>,
    cap_brute: Option<usize>,
    format: ReportFormat,
    timings: bool,
) -> ExitCode {
    let Some(suite) = suite else {
        return usage("a suite is required: properties-a-h, theorem-1, theorem-2, theorem-3, theorem-4, prop-gcd, lemma-special or all");
    };
    let caps = match cap_brute {
        Some(cap) => {
            let d = Caps::default();
            eprintln!(
                "warning: brute-force caps overridden to n <= {cap} (defaults: product {}, inner product {}, permutation modules {}, domain search {}, sigma minimality {})",
                d.product, d.inner, d.permutation, d.search, d.minimality
            );
            Caps::uniform(cap)
        }
        None => Caps::default(),
    };
    let reports = match n {
        Some(n) => suite
            .expand()
            .into_iter()
            .map(|s| {
                let checks = foulkes_cli::suites::checks(s, n.max(s.n_min()), n, caps);
                foulkes_cli::VerificationReport::run(s.name(), n, n, checks)
            })
            .collect(),
        None => cmd_verify(suite, n_max, caps),
    };
    let mut text = String::new();
    for r in &reports {
        match format {
            ReportFormat::Text => text.push_str(&r.render_text()),
            ReportFormat::Json => {
                text.push_str(&r.to_json());
                text.push('\n');
            }
        }
        if timings {
            eprint!("{}", r.render_timings());
        }
    }
    let code = emit(&text);
    if code != ExitCode::SUCCESS {
        return code;
    }
    if reports.iter().all(|r| r.all_passed()) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(cli: Cli) -> ExitCode {
    match cli.command {
        Command::Verify { suite_name, suite, n_max, n, cap_brute, format, timings } => {
            verify(suite_name.or(suite), n_max, n, cap_brute, format, timings)
        }
        Command::Enumerate { n } => {
            let mut out = BufWriter::new(io::stdout().lock());
            let count = match cmd_enumerate(n, &mut out) {
                Ok(count) => count,
                Err(e) => return fail(e),
            };
            if out.flush().is_err() {
                return ExitCode::from(2);
            }
            eprintln!("count: {count}");
            ExitCode::SUCCESS
        }
        Command::Param { direction } => {
            let record = match direction {
                Direction::ToTheta { n, a } => parse_params(&a, n).map(|a| cmd_to_theta(&a)),
                Direction::FromTheta { n, coords } => parse_coords(&coords, n).and_then(|t| cmd_from_theta(&t)),
            };
            match record {
                Ok(v) => emit(&format!("{v}\n")),
                Err(e) => fail(e),
            }
        }
        Command::Export { table, n, format, output } => {
            let text = match cmd_export(table, n, format) {
                Ok(t) => t,
                Err(e) => return fail(e),
            };
            match output {
                Some(path) => match std::fs::write(&path, text) {
                    Ok(()) => ExitCode::SUCCESS,
                    Err(e) => usage(format!("cannot write {}: {e}", path.display())),
                },
                None => emit(&text),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(threads as usize).build_global() {
            return usage(format!("cannot configure {threads} threads: {e}"));
        }
    }
    run(cli)
}
