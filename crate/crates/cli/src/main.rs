use std::process::ExitCode;

use clap::{Parser, Subcommand};
use dyckmax_cli::{
    cmd_paths, cmd_series, cmd_table, verify, Fault, Format, Kind, Limits, VerifyConfig, Via,
    EXIT_USAGE,
};

/// Left-to-right maxima in Dyck paths: exact counts, series and asymptotics.
#[derive(Debug, Parser)]
#[command(name = "dyckmax", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Coefficients c_1..c_N of the total strict or weak maxima series.
    Series {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long, default_value_t = 10)]
        order: u64,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
        #[arg(long, value_enum, default_value_t = Via::Exact)]
        via: Via,
    },
    /// Exact totals and means next to their asymptotic estimates.
    Table {
        #[arg(long, default_value_t = 20)]
        n_max: u64,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Cross-check enumeration, generating functions and closed forms.
    Verify {
        #[arg(long, default_value_t = 10)]
        n_max_oracle: u32,
        #[arg(long, default_value_t = 50)]
        order: usize,
        #[arg(long, value_enum, hide = true)]
        inject_fault: Option<Fault>,
    },
    /// Enumerate Dyck paths of one semi-length.
    Paths {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        list: bool,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let limits = Limits::from_env();
    let result = match cli.command {
        Command::Series {
            kind,
            order,
            format,
            via,
        } => cmd_series(kind, order, via, format, &limits).map(|s| (s, 0)),
        Command::Table { n_max, format } => cmd_table(n_max, format, &limits).map(|s| (s, 0)),
        Command::Verify {
            n_max_oracle,
            order,
            inject_fault,
        } => verify(
            &VerifyConfig {
                n_max_oracle,
                order,
                fault: inject_fault,
            },
            &limits,
        )
        .map(|r| (r.to_string(), r.exit_code())),
        Command::Paths { n, list, format } => cmd_paths(n, list, format, &limits).map(|s| (s, 0)),
    };
    match result {
        Ok((text, code)) => {
            print!("{text}");
            ExitCode::from(code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE as u8)
        }
    }
}
