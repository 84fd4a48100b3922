//! Thin command-line front end; all computation and rendering lives in
//! [`hydromoments::cli`]. Exit codes: 0 success, 1 verification
//! failure, 2 usage or domain error.

use clap::{Parser, Subcommand};

use hydromoments::cli::{cmd_moment, cmd_state, cmd_table, cmd_verify, parse_fault, OutputFormat};

#[derive(Parser)]
#[command(
    name = "hydromoments",
    version,
    about = "Exact hydrogenic radial moments, ladder-built eigenstates, and an identity verifier"
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value = "plain")]
    format: OutputFormat,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one exact radial moment <n,l| r^m |n,l>
    Moment {
        /// Principal quantum number (n >= 1)
        #[arg(long)]
        n: u32,
        /// Orbital quantum number (0 <= l < n)
        #[arg(long)]
        l: u32,
        /// Power of r; negative powers exist down to -2l-2
        #[arg(long, allow_negative_numbers = true)]
        m: i64,
    },
    /// Tabulate moments for a range of powers
    Table {
        /// Principal quantum number (n >= 1)
        #[arg(long)]
        n: u32,
        /// Orbital quantum number (0 <= l < n)
        #[arg(long)]
        l: u32,
        /// First power, inclusive
        #[arg(long, allow_negative_numbers = true)]
        from: i64,
        /// Last power, inclusive
        #[arg(long, allow_negative_numbers = true)]
        to: i64,
    },
    /// Dump a ladder-built eigenstate
    State {
        /// Principal quantum number (n >= 1)
        #[arg(long)]
        n: u32,
        /// Orbital quantum number (0 <= l < n)
        #[arg(long)]
        l: u32,
        /// Also dump the l-channel Hamiltonian and ladder operators
        #[arg(long)]
        show_operators: bool,
    },
    /// Run the identity verification suite
    Verify {
        /// Largest principal quantum number to sweep (>= 1)
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(1..))]
        nmax: u32,
        /// Perturb one moment as a negative control: n,l,m[,delta]
        #[arg(long, value_name = "N,L,M[,DELTA]")]
        inject_fault: Option<String>,
    },
}

fn main() {
    let cli = Cli::parse();
    let format = cli.format;
    match cli.command {
        Command::Moment { n, l, m } => finish(cmd_moment(n, l, m, format)),
        Command::Table { n, l, from, to } => {
            if from > to {
                usage_error(&format!("--from must be <= --to (got {from} > {to})"));
            }
            finish(cmd_table(n, l, from, to, format));
        }
        Command::State {
            n,
            l,
            show_operators,
        } => finish(cmd_state(n, l, show_operators, format)),
        Command::Verify { nmax, inject_fault } => {
            let fault = inject_fault.map(|spec| match parse_fault(&spec) {
                Ok(f) => f,
                Err(msg) => usage_error(&msg),
            });
            let (text, passed) = cmd_verify(nmax, fault.as_ref(), format);
            println!("{text}");
            std::process::exit(if passed { 0 } else { 1 });
        }
    }
}

fn finish(outcome: hydromoments::Result<String>) -> ! {
    match outcome {
        Ok(text) => {
            println!("{text}");
            std::process::exit(0);
        }
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(2);
        }
    }
}

fn usage_error(msg: &str) -> ! {
    eprintln!("{msg}");
    std::process::exit(2);
}
