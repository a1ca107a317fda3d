//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when the input cannot be read or parsed, 2 for
//! invalid options.

use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use monoquad::oracle::{exhaustive_c4_row, CancelToken};
use monoquad::pruning::c4_capacity;
use monoquad::{benchmark_system, parse_system, render_result, solve, Format, SolveOptions};

#[derive(Parser, Debug)]
#[command(
    name = "monoquad",
    version,
    about = "Find an optimal monomial quadratization of a polynomial ODE system",
    args_conflicts_with_subcommands = true
)]
struct Cli {
    /// System file (`name' = expression` per line); `-` or omitted reads stdin
    input: Option<String>,

    /// Use a built-in system instead of a file, e.g. `cubic_cycle:6` or `rf`
    #[arg(long, value_name = "NAME[:N]", conflicts_with = "input")]
    benchmark: Option<String>,

    /// Build the linear-size Laurent monomial quadratization (not optimized)
    #[arg(long)]
    laurent: bool,

    /// Disable the pruning rule based on the quadratic upper bound
    #[arg(long)]
    no_prune_quadratic: bool,

    /// Disable the pruning rule based on C4*-free pseudographs
    #[arg(long)]
    no_prune_c4: bool,

    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,

    /// Print search statistics (always included in structured output)
    #[arg(long)]
    stats: bool,

    /// Only search for quadratizations of at most this order
    #[arg(long, value_name = "N", conflicts_with = "laurent")]
    max_order: Option<usize>,

    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Recompute the table of C(n, m) by exhaustive search
    #[command(name = "c4-table", hide = true)]
    C4Table {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OutputFormat {
    Text,
    Structured,
}

fn c4_table(max_n: usize) -> ExitCode {
    let cancel = CancelToken::new();
    println!("n\tm=0..n\t(exhaustive)");
    for n in 1..=max_n {
        match exhaustive_c4_row(n, &cancel) {
            Ok(row) => {
                let cells: Vec<String> = row.iter().map(usize::to_string).collect();
                let matches = row.iter().enumerate().all(|(m, &c)| c == c4_capacity(n, m));
                println!("{}\t{}\t{}", n, cells.join(" "), if matches { "ok" } else { "MISMATCH" });
            }
            Err(e) => {
                eprintln!("error: {}", e);
                return ExitCode::from(2);
            }
        }
    }
    ExitCode::SUCCESS
}

fn read_input(path: Option<&str>) -> std::io::Result<String> {
    let mut text = String::new();
    match path {
        None | Some("-") => {
            std::io::stdin().read_to_string(&mut text)?;
        }
        Some(p) => text = std::fs::read_to_string(p)?,
    }
    Ok(text)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(Command::C4Table { max_n }) = cli.command {
        return c4_table(max_n);
    }

    let system = if let Some(spec) = &cli.benchmark {
        let (name, n) = match spec.split_once(':') {
            Some((name, n)) => match n.parse::<usize>() {
                Ok(n) => (name, n),
                Err(_) => {
                    eprintln!("error: invalid benchmark size `{}`", n);
                    return ExitCode::from(2);
                }
            },
            None => (spec.as_str(), 0),
        };
        match benchmark_system(name, n) {
            Ok(s) => s,
            Err(e) => {
                eprintln!("error: {}", e);
                return ExitCode::from(2);
            }
        }
    } else {
        let text = match read_input(cli.input.as_deref()) {
            Ok(t) => t,
            Err(e) => {
                eprintln!("error: cannot read input: {}", e);
                return ExitCode::from(1);
            }
        };
        match parse_system(&text) {
            Ok(s) => s,
            Err(e) => {
                eprintln!("error: {}", e);
                return ExitCode::from(1);
            }
        }
    };

    let options = SolveOptions {
        enable_rule_quadratic: !cli.no_prune_quadratic,
        enable_rule_c4: !cli.no_prune_c4,
        laurent_mode: cli.laurent,
        max_order_cap: cli.max_order,
        collect_stats: true,
    };
    let solution = solve(&system, &options);
    let format = match cli.format {
        OutputFormat::Text => Format::Text,
        OutputFormat::Structured => Format::Structured,
    };
    print!("{}", render_result(&solution, format, cli.stats));
    ExitCode::SUCCESS
}
