//! `gausscheck`: command-line front end for content-ideal computations.
//!
//! Exit codes: 0 success / true verdict, 1 false verdict or failed
//! verification, 2 usage or input error, 3 resource limit.

mod commands;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gaussian_content::Error;
use serde_json::json;

pub const SCHEMA: &str = "gausscheck.report/1";

#[derive(Parser, Debug)]
#[command(name = "gausscheck", version, about = "Content ideals, Gaussian polynomials and Groebner bases over QQ and GF(p)")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum OrderArg {
    Grevlex,
    Lex,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    /// Invertibility on claimed domains without `--degree`, generic coefficients otherwise.
    Auto,
    Generic,
    Domain,
}

#[derive(Args, Debug, Clone)]
pub struct RingArg {
    /// Ring, e.g. "GF(2)[s,t]/(s^2, s*t, t^2)" or "QQ[x,y] domain".
    #[arg(long)]
    pub ring: String,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Reduced Groebner basis of an ideal (preimage in the polynomial ring).
    Gb {
        #[command(flatten)]
        ring: RingArg,
        #[arg(long)]
        ideal: String,
        #[arg(long, value_enum, default_value_t = OrderArg::Grevlex)]
        order: OrderArg,
    },
    /// Normal form of an element modulo an ideal.
    Nf {
        #[command(flatten)]
        ring: RingArg,
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        elem: String,
    },
    /// Ideal membership.
    Member {
        #[command(flatten)]
        ring: RingArg,
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        elem: String,
    },
    /// Ideal equality.
    Equal {
        #[command(flatten)]
        ring: RingArg,
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        other: String,
    },
    /// Colon ideal (I : J).
    Colon {
        #[command(flatten)]
        ring: RingArg,
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        by: String,
    },
    /// Content ideal of a polynomial in X; with --with, compare c(fg) and c(f)c(g).
    Content {
        #[command(flatten)]
        ring: RingArg,
        #[arg(long)]
        poly: String,
        #[arg(long)]
        with: Option<String>,
    },
    /// Gaussian test.
    Gaussian {
        #[command(flatten)]
        ring: RingArg,
        #[arg(long)]
        poly: String,
        /// Degree bound for the generic test (default: deg f).
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
    },
    /// Invertibility of an ideal of a claimed domain.
    Invertible {
        #[command(flatten)]
        ring: RingArg,
        #[arg(long)]
        ideal: String,
    },
    /// nu(c(f)^(2^m)) at a rational point, m = 0..mmax.
    Nu {
        #[command(flatten)]
        ring: RingArg,
        #[arg(long)]
        poly: String,
        /// Generators of the maximal ideal, e.g. "x, y" or "1 - x, y".
        #[arg(long)]
        at: String,
        #[arg(long, default_value_t = 3)]
        mmax: usize,
    },
    /// Dedekind-Mertens exponent identity and radical equality.
    Dm {
        #[command(flatten)]
        ring: RingArg,
        #[arg(long)]
        poly: String,
        #[arg(long)]
        with: String,
    },
    /// Run the fixed verification catalog.
    VerifyPaper {
        /// Replace the ring of the extension-failure check.
        #[arg(long)]
        example1_ring: Option<String>,
    },
}

impl Command {
    fn verb(&self) -> &'static str {
        match self {
            Command::Gb { .. } => "gb",
            Command::Nf { .. } => "nf",
            Command::Member { .. } => "member",
            Command::Equal { .. } => "equal",
            Command::Colon { .. } => "colon",
            Command::Content { .. } => "content",
            Command::Gaussian { .. } => "gaussian",
            Command::Invertible { .. } => "invertible",
            Command::Nu { .. } => "nu",
            Command::Dm { .. } => "dm",
            Command::VerifyPaper { .. } => "verify-paper",
        }
    }
}

/// Result of a command: optional verdict, a text rendering and a JSON payload.
pub struct Outcome {
    pub verdict: Option<bool>,
    pub text: String,
    pub result: serde_json::Value,
}

fn error_kind(e: &Error) -> (&'static str, u8) {
    match e {
        Error::Parse { .. } => ("parse", 2),
        Error::ResourceLimit { .. } => ("resource-limit", 3),
        Error::Unsupported(_) => ("unsupported", 2),
        Error::TrivialRing => ("trivial-ring", 2),
        Error::RingMismatch(_) => ("ring-mismatch", 2),
        Error::InvalidArgument(_) | Error::DivisionByZero => ("invalid-argument", 2),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let verb = cli.command.verb();
    let outcome = commands::run(&cli.command);
    let elapsed_ms = start.elapsed().as_millis();
    let (code, status) = match &outcome {
        Ok(o) if o.verdict == Some(false) => (1, "fail"),
        Ok(_) => (0, "pass"),
        Err(e) => (error_kind(e).1, "error"),
    };
    match (cli.format, outcome) {
        (Format::Text, Ok(o)) => print!("{}", o.text),
        (Format::Text, Err(e)) => eprintln!("gausscheck {verb}: {e}"),
        (Format::Json, res) => {
            let mut report = json!({ "schema": SCHEMA, "command": verb, "status": status, "elapsed_ms": elapsed_ms });
            match res {
                Ok(o) => {
                    report["verdict"] = json!(o.verdict);
                    report["result"] = o.result;
                }
                Err(e) => report["error"] = json!({ "kind": error_kind(&e).0, "message": e.to_string() }),
            }
            println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
        }
    }
    ExitCode::from(code)
}
