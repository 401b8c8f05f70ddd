use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use swtower::cli::{parse_family, run_command, CliCommand, OutputFormat, SuiteSource};

/// Exact computer algebra for symmetric, Hecke, cross-product and affine
/// Hecke towers: normal forms, relation suites, operator checks and
/// localization identities.
#[derive(Parser)]
#[command(name = "swtower", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ContextArgs {
    /// Algebra family: sym | hecke | cross | crossLaurent | dAHA | affineHecke
    #[arg(long)]
    algebra: String,
    /// Rank of the tower
    #[arg(long = "n")]
    n: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Print the canonical normal form of an element expression
    Nf {
        #[command(flatten)]
        ctx: ContextArgs,
        expr: String,
    },
    /// Multiply two elements and print the normal form of the product
    Mul {
        #[command(flatten)]
        ctx: ContextArgs,
        lhs: String,
        rhs: String,
    },
    /// Check one inline equation `<lhs> == <rhs>`
    Eval {
        #[command(flatten)]
        ctx: ContextArgs,
        equation: String,
    },
    /// Run a relation suite: a built-in presentation or a suite file
    Suite {
        /// Built-in suite name (sym, braid, hecke, cross, affineSym,
        /// semiAffineSym, degAHA, affineBraid, affineHecke)
        #[arg(long, conflicts_with = "file")]
        name: Option<String>,
        /// Suite file path
        #[arg(long)]
        file: Option<String>,
        /// Output format: text | json
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Classical Schur-Weyl desk check: image vs commutant dimensions
    Swdim {
        /// Number of tensor factors
        #[arg(long = "n")]
        n: usize,
        /// Dimension of the vector space
        #[arg(long = "N")]
        dim: usize,
    },
    /// Verify the localization identities and inverse compositions
    Locverify {
        /// Output format: text | json
        #[arg(long, default_value = "text")]
        format: String,
    },
}

fn build(cli: Cli) -> Result<CliCommand, swtower::Error> {
    Ok(match cli.command {
        Command::Nf { ctx, expr } => {
            CliCommand::NormalForm { family: parse_family(&ctx.algebra)?, n: ctx.n, expr }
        }
        Command::Mul { ctx, lhs, rhs } => {
            CliCommand::Mul { family: parse_family(&ctx.algebra)?, n: ctx.n, lhs, rhs }
        }
        Command::Eval { ctx, equation } => {
            CliCommand::Eval { family: parse_family(&ctx.algebra)?, n: ctx.n, equation }
        }
        Command::Suite { name, file, format } => {
            let source = match (name, file) {
                (Some(n), None) => SuiteSource::Builtin(n),
                (None, Some(f)) => SuiteSource::File(f),
                _ => {
                    return Err(swtower::Error::Usage(
                        "suite needs exactly one of --name or --file".into(),
                    ))
                }
            };
            CliCommand::Suite { source, format: OutputFormat::parse(&format)? }
        }
        Command::Swdim { n, dim } => CliCommand::SwDim { n, dim },
        Command::Locverify { format } => {
            CliCommand::LocVerify { format: OutputFormat::parse(&format)? }
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cmd = match build(cli) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    match run_command(&cmd) {
        Ok(out) => {
            print!("{}", out.stdout);
            ExitCode::from(out.exit_code.clamp(0, 255) as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
