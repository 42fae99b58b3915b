use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use circulant_t2::catalog::{self, CommandOutput, Format};
use circulant_t2::families::FamilyParams;

/// Circulant graphs, Adam's and Type-2 isomorphism, and Type-2 families.
///
/// Exit status: 0 related or success, 1 not related or empty orbit, 2 usage error.
#[derive(Parser)]
#[command(name = "circulant-t2", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Output {
    /// Emit catalog records as JSON
    #[arg(long, conflicts_with = "dot")]
    json: bool,
    /// Emit Graphviz DOT
    #[arg(long)]
    dot: bool,
}

impl Output {
    fn format(&self) -> Format {
        match (self.json, self.dot) {
            (true, _) => Format::Json,
            (_, true) => Format::Dot,
            _ => Format::Text,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the Type-2 family orbit for i = 1..p
    Family {
        #[arg(short)]
        p: u64,
        #[arg(short)]
        n: u64,
        #[arg(short)]
        x: u64,
        #[arg(short, default_value_t = 0)]
        y: u64,
        /// Starting member; the orbit is always printed from i = 1
        #[arg(short, default_value_t = 1)]
        i: u64,
        /// Multipliers p_j replacing the default {1}, comma-separated
        #[arg(long, value_delimiter = ',')]
        extras: Option<Vec<u64>>,
        /// Print half-form jumps instead of full symmetric sets
        #[arg(long)]
        half: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Classify two circulant graphs: identical, Adam's, Type-2, or neither
    Check {
        #[arg(short)]
        n: u64,
        a: String,
        b: String,
        #[arg(short)]
        r: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// List the Type-2 group T2_{n,r}(C_n(R))
    T2 {
        #[arg(short)]
        n: u64,
        set: String,
        #[arg(short)]
        r: u64,
        #[command(flatten)]
        out: Output,
    },
    /// Regenerate the annexure tables, or diff them against a golden file
    Annexure {
        /// Write the tables here instead of stdout
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long, value_name = "GOLDEN")]
        diff: Option<PathBuf>,
    },
    /// Write C_n(R) as an undirected DOT graph
    ExportDot {
        #[arg(short)]
        n: u64,
        set: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn run(command: Command) -> Result<CommandOutput, String> {
    let err = |e: circulant_t2::Error| e.to_string();
    match command {
        Command::Family {
            p,
            n,
            x,
            y,
            i,
            extras,
            half,
            out,
        } => {
            let mut params = FamilyParams::new(p, n, x, y, i).map_err(err)?;
            if let Some(extras) = extras {
                params = params.with_extras(extras).map_err(err)?;
            }
            catalog::cmd_family(&params, out.format(), half).map_err(err)
        }
        Command::Check { n, a, b, r, json } => {
            let format = if json { Format::Json } else { Format::Text };
            catalog::cmd_check(n, &a, &b, r, format).map_err(err)
        }
        Command::T2 { n, set, r, out } => catalog::cmd_t2(n, &set, r, out.format()).map_err(err),
        Command::Annexure { output, diff } => {
            let golden = match &diff {
                Some(path) => {
                    Some(fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?)
                }
                None => None,
            };
            let result = catalog::cmd_annexure(golden.as_deref()).map_err(err)?;
            write_or_print(result, output.filter(|_| diff.is_none()))
        }
        Command::ExportDot { n, set, output } => {
            write_or_print(catalog::cmd_export_dot(n, &set).map_err(err)?, output)
        }
    }
}

fn write_or_print(result: CommandOutput, path: Option<PathBuf>) -> Result<CommandOutput, String> {
    match path {
        Some(path) => {
            fs::write(&path, &result.text).map_err(|e| format!("{}: {e}", path.display()))?;
            Ok(CommandOutput {
                text: String::new(),
                code: result.code,
            })
        }
        None => Ok(result),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(out.code)
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
