use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use seqlab::commands;
use seqlab::{BinetRequest, Format, OutputDocument};

/// Exit status when a verification ran but did not pass.
const VERIFICATION_FAILED: u8 = 3;

#[derive(Parser)]
#[command(
    name = "seqlab",
    version,
    about = "Exact tools for C-finite sequences and k-bonacci numbers"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print u_0 .. u_(count-1) of the order-h k-bonacci sequence
    Terms {
        #[arg(allow_negative_numbers = true)]
        h: i64,
        #[arg(allow_negative_numbers = true)]
        count: i64,
    },
    /// Generating function of the coefficientwise product of F and G
    Hadamard {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Derive and verify the sum-of-squares identity for order h (2..=8)
    Sumsq {
        #[arg(allow_negative_numbers = true)]
        h: i64,
    },
    /// Roots and Binet coefficients for order h (2..=12), optionally evaluated at n
    Binet {
        #[arg(allow_negative_numbers = true)]
        h: i64,
        /// A term index, or "table" for n = 0..30
        n: Option<BinetRequest>,
    },
    /// Compare a b-file against the order-h sequence
    CheckBfile {
        path: PathBuf,
        #[arg(allow_negative_numbers = true)]
        h: i64,
        /// Compare file index n against sequence index n + shift
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        shift: i64,
    },
    /// Check the Tetranacci sum-of-squares evaluation up to n_max
    VerifySchumacher {
        #[arg(default_value_t = 200, allow_negative_numbers = true)]
        n_max: i64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let payload = match cli.command {
        Command::Terms { h, count } => commands::terms(h, count),
        Command::Hadamard { f, g } => commands::hadamard(&f, &g),
        Command::Sumsq { h } => commands::sumsq(h),
        Command::Binet { h, n } => commands::binet(h, n.unwrap_or(BinetRequest::None)),
        Command::CheckBfile { path, h, shift } => commands::check_bfile_path(&path, h, shift),
        Command::VerifySchumacher { n_max } => commands::verify_schumacher(n_max),
    };
    match payload {
        Ok(p) => {
            let doc = OutputDocument::new(cli.format, p);
            print!("{}", doc.render());
            if doc.success() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(VERIFICATION_FAILED)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
