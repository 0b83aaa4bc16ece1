//! `coxweight`: command-line front end.
//!
//! Exit codes: 0 success, 1 a criterion or table check failed, 2 usage or
//! invalid input, 3 malformed data file.

mod commands;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use coxweight::posets::DEFAULT_SEED_CAP;

#[derive(Parser)]
#[command(name = "coxweight", version, about = "Weights, monodromy polynomials and Coxeter polynomials of posets")]
struct Cli {
    /// Print a single JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Write cyclotomic factors as F2^2*F5 instead of Φ2^2·Φ5.
    #[arg(long, global = true)]
    ascii: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants, products and factorizations of Weights.
    Weight {
        #[command(subcommand)]
        action: WeightCommand,
    },
    /// Generate posets and compute their Coxeter polynomials.
    Poset {
        #[command(subcommand)]
        action: PosetCommand,
    },
    /// Compare a poset family with a Weight family for a range of n.
    Criterion {
        /// tamari, dyck or green-cyclic
        posets: String,
        /// catalan or cyclic-quiver
        weights: String,
        #[command(flatten)]
        range: RangeArgs,
        #[arg(long, default_value_t = DEFAULT_SEED_CAP)]
        seed_cap: usize,
    },
    /// List the members of a Weight family.
    Family {
        /// catalan, asm, west, tamari-interval or cyclic-quiver
        family: String,
        #[command(flatten)]
        range: RangeArgs,
    },
    /// Operations on the table of named Weights.
    Tables {
        #[command(subcommand)]
        action: TablesCommand,
    },
}

#[derive(Subcommand)]
enum WeightCommand {
    /// Everything known about one Weight, e.g. `2,3,4;10`.
    Info { spec: String },
    /// Canonical product of two Weights.
    Product { a: String, b: String },
    /// All factorizations into prime Weights.
    Factor { spec: String },
}

#[derive(Subcommand)]
enum PosetCommand {
    /// Print the poset in the JSON file format.
    Gen(PosetTarget),
    /// Coxeter polynomial of the poset.
    Coxpoly(PosetTarget),
}

#[derive(Args)]
struct PosetTarget {
    /// chain, tamari, dyck, green-cyclic or file
    family: String,
    /// Index n, or a path when the family is `file`.
    target: String,
    #[arg(long, default_value_t = DEFAULT_SEED_CAP)]
    seed_cap: usize,
}

#[derive(Subcommand)]
enum TablesCommand {
    /// Check every row of the named Weight table.
    Verify,
}

/// Range of indices, given positionally or with `--n-min`/`--n-max`.
#[derive(Args)]
struct RangeArgs {
    #[arg(value_name = "N_MIN")]
    first: Option<usize>,
    #[arg(value_name = "N_MAX")]
    last: Option<usize>,
    #[arg(long, conflicts_with = "first")]
    n_min: Option<usize>,
    #[arg(long, conflicts_with = "last")]
    n_max: Option<usize>,
}

impl RangeArgs {
    fn resolve(&self, default_min: usize) -> Result<(usize, usize), commands::Failure> {
        let lo = self.n_min.or(self.first).unwrap_or(default_min);
        let hi = self.n_max.or(self.last).unwrap_or(lo.max(default_min) + 4);
        if lo > hi {
            return Err(commands::Failure::usage(format!("empty range {lo}..={hi}")));
        }
        Ok((lo, hi))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let opts = commands::Options { json: cli.json, ascii: cli.ascii };
    let result = match &cli.command {
        Command::Weight { action } => match action {
            WeightCommand::Info { spec } => commands::weight_info(spec, opts),
            WeightCommand::Product { a, b } => commands::weight_product(a, b, opts),
            WeightCommand::Factor { spec } => commands::weight_factor(spec, opts),
        },
        Command::Poset { action } => match action {
            PosetCommand::Gen(t) => commands::poset_gen(&t.family, &t.target, t.seed_cap),
            PosetCommand::Coxpoly(t) => commands::poset_coxpoly(&t.family, &t.target, t.seed_cap, opts),
        },
        Command::Criterion { posets, weights, range, seed_cap } => {
            commands::criterion(posets, weights, |min| range.resolve(min), *seed_cap, opts)
        }
        Command::Family { family, range } => {
            commands::family(family, |min| range.resolve(min), opts)
        }
        Command::Tables { action: TablesCommand::Verify } => commands::tables_verify(opts),
    };
    match result {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(out.code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
