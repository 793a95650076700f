use std::process::ExitCode;

use clap::{Parser, Subcommand};
use qhomology::render::{DisplayUnit, Format, RenderOptions};
use qhomology::BaseField;
use qhomology_cli::{
    cmd_check, cmd_example, cmd_table, cmd_validate, read_spec_file, CliError, Outcome,
};

#[derive(Parser)]
#[command(
    name = "qh",
    version,
    about = "Exact quantum homology of convex symplectic manifolds"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, default_value = "text", value_parser = parse_format)]
    format: Format,
    /// Print s-exponents as multiples of a named unit, e.g. `δ=1/10`.
    #[arg(long, global = true)]
    unit: Option<DisplayUnit>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a built-in manifold document to standard output.
    Example {
        /// blowup_b4 or blowup_dtstar
        name: String,
        #[arg(long)]
        delta: String,
        #[arg(long, allow_negative_numbers = true)]
        genus: Option<i64>,
        #[arg(long, default_value = "Q")]
        field: BaseField,
    },
    /// Load a document and check the GW table constraints.
    Validate { file: String },
    /// Print the full basis product table of ∗₁, ∗₂ or ∗₃.
    Table {
        file: String,
        #[arg(long)]
        kind: u8,
    },
    /// Run the axiom suite and the nondegeneracy checks.
    Check {
        file: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        scalars: usize,
        /// Inversion floor p/q (negative); defaults to ν(f) − 10·ω_min per series.
        #[arg(long, allow_hyphen_values = true)]
        floor: Option<String>,
    },
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse()
        .map_err(|e: qhomology::field::CoefficientParseError| e.0)
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    let opts = RenderOptions {
        format: cli.format,
        display_unit: cli.unit,
    };
    match cli.command {
        Command::Example {
            name,
            delta,
            genus,
            field,
        } => Ok(Outcome {
            stdout: cmd_example(&name, &delta, genus, field)?,
            code: 0,
        }),
        Command::Validate { file } => cmd_validate(&read_spec_file(&file)?, &opts),
        Command::Table { file, kind } => cmd_table(&read_spec_file(&file)?, kind, &opts),
        Command::Check {
            file,
            seed,
            scalars,
            floor,
        } => cmd_check(
            &read_spec_file(&file)?,
            seed,
            scalars,
            floor.as_deref(),
            &opts,
        ),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{}", out.stdout);
            ExitCode::from(out.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
