use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use qtcat_cli::commands::{self, Format, Outcome, Suite};
use qtcat_cli::record::{Cache, Kind};

#[derive(Parser)]
#[command(name = "qtcat", version, about = "Exact q,t-Catalan and nested q,t-Catalan series")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one series or report.
    Compute {
        #[arg(value_enum)]
        kind: Kind,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        m: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Directory of cached `{kind}-{n}-{m}.json` records.
        #[arg(long, env = "QTCAT_CACHE_DIR")]
        cache_dir: Option<PathBuf>,
    },
    /// Run a verification suite. Theorem checks set the exit status;
    /// conjecture checks only report.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        #[arg(long, default_value_t = 1)]
        m_max: usize,
    },
    /// Emit the nested series for n = 2..=n-max, labelled by table index.
    Table {
        #[arg(long, default_value_t = 1)]
        m: usize,
        #[arg(long, default_value_t = 5)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn run(cli: Cli) -> anyhow::Result<Outcome> {
    match cli.command {
        Command::Compute { kind, n, m, format, cache_dir } => {
            let cache = cache_dir.map(Cache::new);
            commands::compute(kind, n, m, format, cache.as_ref())
        }
        Command::Verify { suite, n_max, m_max } => commands::verify(suite, n_max, m_max),
        Command::Table { m, n_max, format } => commands::table(m, n_max, format),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(outcome) => {
            println!("{}", outcome.output);
            ExitCode::from(outcome.exit_code)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
