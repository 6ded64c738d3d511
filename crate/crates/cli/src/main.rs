use std::path::PathBuf;
use std::process::ExitCode;

use cayley_cli::checks::{Check, Object, Verifier};
use cayley_core::cayley::OnePs;
use cayley_core::fixtures::Fixtures;
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "cayley",
    version,
    about = "Exact checks on the Cayley Grassmannian"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Largest k sampled by the Hilbert and series checks.
    #[arg(long, global = true)]
    kmax: Option<i64>,

    /// Generic one-parameter subgroup `A,B`; codimensions are read off its sign pattern.
    #[arg(long, global = true, default_value = "1,2", value_parser = parse_chamber)]
    chamber: (i64, i64),
}

#[derive(Subcommand)]
enum Command {
    /// Compare computed data with the reference fixtures.
    Verify {
        #[arg(value_enum, default_value_t = Check::All)]
        check: Check,
    },
    /// Print a computed object.
    Dump {
        #[arg(value_enum)]
        object: Object,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

fn parse_chamber(s: &str) -> Result<(i64, i64), String> {
    let (a, b) = s.split_once(',').ok_or("expected A,B")?;
    let p = |t: &str| t.trim().parse::<i64>().map_err(|e| e.to_string());
    Ok((p(a)?, p(b)?))
}

fn emit(out: &Option<PathBuf>, text: &str) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, text),
        None => {
            print!("{text}");
            if !text.ends_with('\n') {
                println!();
            }
            Ok(())
        }
    }
}

fn fail(msg: impl std::fmt::Display, code: u8) -> ExitCode {
    eprintln!("cayley: {msg}");
    ExitCode::from(code)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let chamber = OnePs::new(cli.chamber.0, cli.chamber.1);
    if let Err(e) = chamber.betti_profile() {
        return fail(e, 2);
    }
    let fixtures = match Fixtures::load() {
        Ok(f) => f,
        Err(e) => return fail(e, 2),
    };
    let verifier = Verifier::new(chamber, fixtures, cli.kmax);

    let (text, code) = match cli.command {
        Command::Verify { check } => {
            let report = verifier.report(check);
            let text = match cli.format {
                Format::Text => report.to_text(),
                Format::Json => report.to_json(),
                Format::Csv => report.to_csv(),
            };
            (text, report.exit_code() as u8)
        }
        Command::Dump { object } => {
            let text = match cli.format {
                Format::Csv => verifier.dump_csv(object),
                _ => verifier
                    .dump_json(object)
                    .map(|v| serde_json::to_string_pretty(&v).expect("serializable")),
            };
            match text {
                Ok(t) => (t, 0),
                Err(e) => return fail(e, 1),
            }
        }
    };
    if let Err(e) = emit(&cli.out, &text) {
        return fail(e, 2);
    }
    ExitCode::from(code)
}
