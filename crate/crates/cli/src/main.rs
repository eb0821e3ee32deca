use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use koszulkt::koszul::Fault;
use koszulkt::ktheory::k_groups;
use koszulkt::verify::{describe, run_verification, VerifyConfig};
use koszulkt::{CartanDatum, Error, Limits};

mod render;

const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_CAP: u8 = 3;

/// Koszul resolutions and K-theory of compact semisimple Lie groups.
#[derive(Parser, Debug)]
#[command(name = "koszulkt", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Rank, Cartan matrix, root count, Weyl group order, fundamental dimensions.
    Describe(Common),
    /// Run the full verification suite; exit 1 if any check fails.
    Verify {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        degrees: Degrees,
        #[arg(long, value_enum, hide = true)]
        inject_fault: Option<FaultArg>,
    },
    /// Even and odd K-groups as free modules over the representation ring.
    Ktheory(Common),
}

#[derive(Args, Debug)]
struct Common {
    /// Cartan type such as A2, G2 or A1xB3.
    #[arg(value_name = "TYPE")]
    type_string: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct Degrees {
    #[arg(long, default_value_t = 4)]
    max_y_degree: u32,
    #[arg(long, default_value_t = 5)]
    homotopy_degree: u32,
    #[arg(long, default_value_t = 3)]
    injectivity_degree: u32,
    #[arg(long, default_value_t = 3)]
    window_cap: u32,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum FaultArg {
    DSign,
}

enum Failure {
    Engine(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Engine(e)
    }
}

fn load(type_string: &str) -> Result<CartanDatum, Error> {
    Ok(CartanDatum::from_type_str(type_string)?.with_limits(Limits::from_env()))
}

fn emit(common: &Common, text: String) -> Result<(), Failure> {
    match &common.out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Describe(common) => {
            let datum = load(&common.type_string)?;
            let d = describe(&datum);
            let text = match common.format {
                Format::Json => json(&d),
                Format::Text => render::description(&d),
            };
            emit(&common, text)?;
            Ok(0)
        }
        Command::Ktheory(common) => {
            let datum = load(&common.type_string)?;
            let report = k_groups(&datum);
            let text = match common.format {
                Format::Json => json(&report),
                Format::Text => render::report(&report),
            };
            emit(&common, text)?;
            Ok(0)
        }
        Command::Verify { common, degrees, inject_fault } => {
            let datum = load(&common.type_string)?;
            let cfg = VerifyConfig {
                max_y_degree: degrees.max_y_degree,
                homotopy_degree: degrees.homotopy_degree,
                injectivity_degree: degrees.injectivity_degree,
                window_cap: degrees.window_cap,
                fault: inject_fault.map(|FaultArg::DSign| Fault::DSign),
                ..VerifyConfig::default()
            };
            let report = run_verification(&datum, &cfg)?;
            let text = match common.format {
                Format::Json => json(&report),
                Format::Text => render::report(&report),
            };
            emit(&common, text)?;
            match report.checks.first_failure() {
                Some(name) => {
                    eprintln!("koszulkt: check failed: {name}");
                    Ok(EXIT_CHECK_FAILED)
                }
                None => Ok(0),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Engine(e)) if e.is_cap() => {
            eprintln!("koszulkt: {e}");
            ExitCode::from(EXIT_CAP)
        }
        Err(Failure::Engine(e)) => {
            eprintln!("koszulkt: {e}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("koszulkt: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
