//! `symideal`: batch verification and exploration of symmetric ideals.

mod commands;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use symideal::tanisaki::TanisakiMode;

#[derive(Parser)]
#[command(name = "symideal", version, about = "Verify computations with S_n-symmetric ideals")]
pub struct Cli {
    /// Number of variables.
    #[arg(long, global = true)]
    pub n: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Seed for randomized parameters.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads.
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
pub enum Command {
    /// Specht and higher Specht polynomials of a shape.
    Specht {
        /// Partition such as 2,1.
        #[arg(long)]
        lambda: Option<String>,
        /// Tableau with rows separated by '/', e.g. 9,3,6,4/2,1,8/5,7.
        #[arg(long)]
        tableau: Option<String>,
    },
    /// Tanisaki ideal of a shape: generators, basis, colength, module.
    Tanisaki {
        #[arg(long)]
        lambda: String,
        #[arg(long, default_value_t = TanisakiMode::SubsetElementary)]
        mode: TanisakiMode,
    },
    /// Verify every row of the classification of symmetric ideals of colength at most 2n.
    Table1,
    /// Verify the membership relations and the inclusion chain for every shape.
    Lemmas,
    /// Equivariant tangent space dimension at a symmetric ideal.
    Tangent {
        #[command(flatten)]
        source: IdealSource,
        #[arg(long, value_enum, default_value_t = Method::ModISquared)]
        method: Method,
        /// Degrees beyond the bound checked by the degreewise method.
        #[arg(long, default_value_t = 0)]
        extra_degrees: usize,
        /// Count all homomorphisms, not only equivariant ones.
        #[arg(long)]
        full: bool,
        /// Fail unless the dimension equals this value.
        #[arg(long)]
        expect: Option<usize>,
    },
    /// Isotypic decomposition of the quotient.
    Decompose {
        #[command(flatten)]
        source: IdealSource,
    },
    /// Associated graded ideal of an orbit or of a given ideal.
    Gr {
        #[command(flatten)]
        source: IdealSource,
        /// Coordinates of a point whose orbit is taken, e.g. 0,1,1/2.
        #[arg(long, allow_hyphen_values = true)]
        point: Option<String>,
        /// Take the orbit of a point of this type and compare with the Tanisaki ideal.
        #[arg(long)]
        lambda: Option<String>,
    },
}

#[derive(Args, Default)]
pub struct IdealSource {
    /// Generators separated by ';', e.g. "x1+x2+x3; x1*x2".
    #[arg(long)]
    pub gens: Option<String>,
    /// JSON file with fields `n` and `generators`.
    #[arg(long)]
    pub ideal: Option<PathBuf>,
    /// Row label of the classification table, e.g. 2(a).
    #[arg(long)]
    pub row: Option<String>,
    /// Exponent for rows 1 and 2.
    #[arg(long)]
    pub d: Option<u32>,
    /// Parameter a:b for one-parameter rows.
    #[arg(long, allow_hyphen_values = true)]
    pub param: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    ModISquared,
    Degreewise,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let name = match &cli.command {
        Command::Specht { .. } => "specht",
        Command::Tanisaki { .. } => "tanisaki",
        Command::Table1 => "table1",
        Command::Lemmas => "lemmas",
        Command::Tangent { .. } => "tangent",
        Command::Decompose { .. } => "decompose",
        Command::Gr { .. } => "gr",
    };
    let report = match commands::run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    let rendered = match cli.format {
        Format::Json => report.render_json(name),
        Format::Text => report.render_text(name),
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &rendered),
        None => std::io::stdout().write_all(rendered.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write report: {e}");
        return ExitCode::from(2);
    }
    if report.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
