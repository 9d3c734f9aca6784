use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use flagpart::io::{self, RestrictedPoset};
use flagpart::partitions::{enumerate_partitions, generating_polynomial};
use flagpart::schur::{flagged_schur, flagged_schur_slide_expansion};
use flagpart::slide::{expand_flagged, expand_general, slide_product_bump, slide_product_poset};
use flagpart::verify::{self, Suite};
use flagpart::{Error, Flag, PartitionShape, SlideExpansion, WeakComposition};

const EXIT_PARSE: u8 = 2;
const EXIT_PRECONDITION: u8 = 3;
const EXIT_VERIFY: u8 = 4;

#[derive(Parser)]
#[command(name = "flagpart", version, about = "Restricted poset partitions and slide expansions")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Poset,
    Bump,
}

#[derive(Subcommand)]
enum Command {
    /// Slide expansion of the generating polynomial of a restricted poset.
    Expand {
        file: PathBuf,
        /// Signed expansion of the brute-force polynomial; works for any
        /// restriction, not only flags.
        #[arg(long)]
        general: bool,
        /// Compare the expansion with the enumerated polynomial.
        #[arg(long)]
        check: bool,
    },
    /// Slide expansion of the product of two slide polynomials.
    Product {
        /// First index, comma separated (empty string for the constant 1).
        a: String,
        b: String,
        #[arg(long, value_enum, default_value_t = Method::Poset)]
        method: Method,
        /// Cross-check against the other method and the monomial product.
        #[arg(long)]
        check: bool,
    },
    /// Slide expansion of a flagged Schur polynomial.
    Schur {
        #[arg(long)]
        shape: String,
        #[arg(long)]
        flag: String,
        #[arg(long)]
        check: bool,
    },
    /// List every partition of a restricted poset.
    Enumerate { file: PathBuf },
    /// Run a property suite.
    Verify {
        #[arg(value_parser = parse_suite)]
        suite: Suite,
        #[arg(long)]
        size: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

enum Failure {
    Lib(Error),
    Io(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn read_input(path: &PathBuf) -> Result<RestrictedPoset, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    Ok(io::parse_restricted_poset(&text)?)
}

fn emit_expansion(format: Format, e: &SlideExpansion) {
    match format {
        Format::Text => print!("{}", io::expansion_text(e)),
        Format::Json => println!("{}", io::expansion_json(e)),
    }
}

fn check_against(e: &SlideExpansion, oracle: &flagpart::IntPolynomial) -> Result<(), Failure> {
    let n = oracle.nvars().max(e.max_len());
    if e.to_polynomial(n)? == *oracle {
        Ok(())
    } else {
        Err(Failure::Check(format!("expansion {e} does not match the enumerated polynomial")))
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let format = cli.format;
    match cli.command {
        Command::Expand { file, general, check } => {
            let input = read_input(&file)?;
            let oracle = generating_polynomial(&input.poset, &input.rho)?;
            let e = if general {
                expand_general(&oracle)
            } else {
                expand_flagged(&input.poset, &input.rho)?
            };
            if check {
                check_against(&e, &oracle)?;
            }
            emit_expansion(format, &e);
        }
        Command::Product { a, b, method, check } => {
            let a = WeakComposition::new(io::parse_list(&a)?);
            let b = WeakComposition::new(io::parse_list(&b)?);
            let e = match method {
                Method::Poset => slide_product_poset(&a, &b)?,
                Method::Bump => slide_product_bump(&a, &b)?,
            };
            if check {
                let other = match method {
                    Method::Poset => slide_product_bump(&a, &b)?,
                    Method::Bump => slide_product_poset(&a, &b)?,
                };
                let n = a.support_len().max(b.support_len());
                let fa = flagpart::slide::slide_monomials(&a, n)?;
                let fb = flagpart::slide::slide_monomials(&b, n)?;
                let direct = expand_general(&(&fa * &fb));
                if other != e || direct != e {
                    return Err(Failure::Check(format!(
                        "product methods disagree: {e} / {other} / {direct}"
                    )));
                }
            }
            emit_expansion(format, &e);
        }
        Command::Schur { shape, flag, check } => {
            let shape = PartitionShape::new(io::parse_list(&shape)?)?;
            let flag = Flag::new(io::parse_list(&flag)?)?;
            let e = flagged_schur_slide_expansion(&shape, &flag)?;
            if check {
                check_against(&e, &flagged_schur(&shape, &flag)?)?;
            }
            emit_expansion(format, &e);
        }
        Command::Enumerate { file } => {
            let input = read_input(&file)?;
            let parts = enumerate_partitions(&input.poset, &input.rho)?;
            match format {
                Format::Text => {
                    for f in &parts {
                        let v: Vec<String> = f.values().iter().map(|x| x.to_string()).collect();
                        println!("{}", v.join(" "));
                    }
                }
                Format::Json => println!(
                    "{}",
                    json!({ "schema": io::SCHEMA_VERSION, "partitions": parts })
                ),
            }
        }
        Command::Verify { suite, size, seed } => {
            let size = size.unwrap_or(suite.default_size());
            let report = verify::run(suite, size, seed);
            match format {
                Format::Text => {
                    println!(
                        "{}: {} checks, {} violations",
                        report.suite, report.checked, report.violation_count
                    );
                    for v in &report.violations {
                        println!("violation: {v}");
                    }
                }
                Format::Json => println!(
                    "{}",
                    json!({
                        "schema": io::SCHEMA_VERSION,
                        "suite": report.suite.name(),
                        "size": size,
                        "seed": seed,
                        "checked": report.checked,
                        "violations": report.violation_count,
                        "witnesses": report.violations,
                    })
                ),
            }
            if !report.passed() {
                return Err(Failure::Check(format!("{} violations", report.violation_count)));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            let (code, msg) = match failure {
                Failure::Lib(e @ Error::Parse(_)) | Failure::Lib(e @ Error::Cycle(_)) => {
                    (EXIT_PARSE, e.to_string())
                }
                Failure::Lib(e @ Error::OutOfRange { .. }) => (EXIT_PARSE, e.to_string()),
                Failure::Lib(e) => (EXIT_PRECONDITION, e.to_string()),
                Failure::Io(msg) => (EXIT_PARSE, msg),
                Failure::Check(msg) => (EXIT_VERIFY, msg),
            };
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
