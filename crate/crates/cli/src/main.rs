mod analyze;
mod formula;
mod output;
mod scan;
mod tiles;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use lefschetz::tilings::DEFAULT_NODE_BUDGET;
use lefschetz::{AciParams, Result};

use crate::output::Output;

#[derive(Parser, Debug)]
#[command(
    name = "lefschetz",
    version,
    about = "Weak Lefschetz property of monomial almost complete intersections in three variables"
)]
struct Cli {
    /// Field characteristic (0 or a prime); repeat for several.
    #[arg(long = "char", global = true, value_name = "P")]
    characteristic: Vec<u64>,

    /// Print a JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Node budget for tiling enumeration.
    #[arg(long, global = true, env = "WLP_NODE_BUDGET", default_value_t = DEFAULT_NODE_BUDGET)]
    budget: u64,

    /// Largest Z matrix whose permanent is computed.
    #[arg(long, global = true, default_value_t = 28)]
    permanent_cap: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Full report for one sextuple.
    Analyze(Sextuple),
    /// Exhaustive search over sextuples.
    Scan(scan::ScanArgs),
    /// Count, sign, list or draw the lozenge tilings of the hexagon.
    Tilings(tiles::TilingArgs),
    /// Evaluate a closed formula.
    Formula(formula::FormulaArgs),
}

/// `a b c alpha beta gamma`.
#[derive(Args, Debug, Clone)]
pub struct Sextuple {
    #[arg(num_args = 6, value_names = ["A", "B", "C", "ALPHA", "BETA", "GAMMA"], allow_negative_numbers = true, required = true)]
    values: Vec<i64>,
}

impl Sextuple {
    pub fn params(&self) -> Result<AciParams> {
        AciParams::from_slice(&self.values)
    }
}

/// Settings shared by all subcommands.
pub struct Settings {
    pub characteristics: Vec<u64>,
    pub json: bool,
    pub budget: u64,
    pub permanent_cap: usize,
}

fn run(cli: Cli) -> Result<Output> {
    let mut characteristics = cli.characteristic.clone();
    if characteristics.is_empty() {
        characteristics.push(0);
    }
    characteristics.sort_unstable();
    characteristics.dedup();
    let settings = Settings {
        characteristics,
        json: cli.json,
        budget: cli.budget,
        permanent_cap: cli.permanent_cap,
    };
    match &cli.command {
        Command::Analyze(s) => analyze::run(&s.params()?, &settings),
        Command::Scan(args) => scan::run(args, &settings),
        Command::Tilings(args) => tiles::run(args, &settings),
        Command::Formula(args) => formula::run(args, &settings),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let json = cli.json;
    match run(cli) {
        Ok(out) => {
            out.print(json);
            ExitCode::SUCCESS
        }
        Err(e) => {
            output::print_error(&e, json);
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_global_flags_after_subcommand() {
        let cli = Cli::try_parse_from([
            "lefschetz", "analyze", "4", "6", "6", "1", "1", "3", "--char", "11", "--json",
        ])
        .unwrap();
        assert_eq!(cli.characteristic, vec![11]);
        assert!(cli.json);
    }

    #[test]
    fn wrong_arity_is_rejected() {
        assert!(Cli::try_parse_from(["lefschetz", "analyze", "1", "2"]).is_err());
    }

    #[test]
    fn invalid_sextuple_maps_to_exit_one() {
        let s = Sextuple { values: vec![1, 1, 1, 1, 0, 0] };
        assert_eq!(s.params().unwrap_err().exit_code(), 1);
    }

    #[test]
    fn exit_codes() {
        use lefschetz::Error;
        assert_eq!(Error::BudgetExceeded { nodes: 1 }.exit_code(), 2);
        assert_eq!(Error::Invariant(String::new()).exit_code(), 3);
    }
}
