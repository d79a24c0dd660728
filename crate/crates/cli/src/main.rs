//! `sgact` — batch front end over the semigroup-actions library.
//!
//! One command per invocation:
//!
//! ```text
//! sgact analyze --input s.json            structural flags, covers, identities
//! sgact action  --input pres.json         expansivity report with certificates
//! sgact witness --input pres.json         right-invertibility certificate
//! sgact rees    --input spec.json         Rees construction and criteria
//! sgact union   --input spec.json         disjoint union and its left identity
//! sgact laurent --input elem.json         unit-circle verdict, truncated inverse
//! sgact family  --input spec.json         named family constructor
//! ```
//!
//! Flags: `--input PATH` (`-` for stdin, or inline JSON starting with
//! `{`), `--format json|text`, `--budget N`, `--seed N`, `--verify`.
//! With `--verify` the input is a previously emitted report document
//! and the embedded certificates are rechecked without redoing the
//! decision. Exit status: 0 decided, 2 unknown outcome, 1 input or
//! verification errors.

mod reports;

use std::io::Read;
use std::process::ExitCode;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

pub struct Request {
    pub command: String,
    pub input: Option<String>,
    pub format: Format,
    pub budget: usize,
    pub seed: u64,
    pub verify: bool,
}

fn usage() -> &'static str {
    "usage: sgact <analyze|action|witness|rees|union|laurent|family> \
     [--input PATH|'{json}'|-] [--format json|text] [--budget N] [--seed N] [--verify]"
}

fn parse_args(mut args: impl Iterator<Item = String>) -> Result<Request, String> {
    let command = args.next().ok_or_else(|| usage().to_string())?;
    let mut request = Request {
        command,
        input: None,
        format: Format::Json,
        budget: 100_000,
        seed: 0,
        verify: false,
    };
    while let Some(flag) = args.next() {
        match flag.as_str() {
            "--input" => {
                request.input = Some(args.next().ok_or("--input needs a value")?);
            }
            "--format" => {
                request.format = match args.next().as_deref() {
                    Some("json") => Format::Json,
                    Some("text") => Format::Text,
                    other => return Err(format!("unknown format {other:?}")),
                };
            }
            "--budget" => {
                request.budget = args
                    .next()
                    .and_then(|v| v.parse().ok())
                    .filter(|&v| v > 0)
                    .ok_or("--budget needs a positive integer")?;
            }
            "--seed" => {
                request.seed = args
                    .next()
                    .and_then(|v| v.parse().ok())
                    .ok_or("--seed needs an integer")?;
            }
            "--verify" => request.verify = true,
            other => return Err(format!("unknown flag {other:?}\n{}", usage())),
        }
    }
    Ok(request)
}

fn read_input(request: &Request) -> Result<String, String> {
    match request.input.as_deref() {
        None => Err("missing --input".to_string()),
        Some("-") => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| format!("reading stdin: {e}"))?;
            Ok(buf)
        }
        Some(inline) if inline.trim_start().starts_with('{') => Ok(inline.to_string()),
        Some(path) => std::fs::read_to_string(path).map_err(|e| format!("reading {path}: {e}")),
    }
}

fn main() -> ExitCode {
    let request = match parse_args(std::env::args().skip(1)) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("{e}");
            return ExitCode::from(1);
        }
    };
    let input = match read_input(&request) {
        Ok(text) => text,
        Err(e) => {
            eprintln!("{e}");
            return ExitCode::from(1);
        }
    };
    match reports::run(&request, &input) {
        Ok(outcome) => {
            println!("{}", outcome.body);
            ExitCode::from(if outcome.unknown { 2 } else { 0 })
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(1)
        }
    }
}
