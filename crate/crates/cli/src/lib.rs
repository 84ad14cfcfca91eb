//! The `lierad` command line tool.
//!
//! Exit codes: 0 success, 1 invalid algebra, 2 parse or usage error,
//! 3 theorem violation or internal inconsistency.

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};

use clap::{Parser, Subcommand};
use lierad_core::format::{parse_algebra, render_algebra};
use lierad_core::oracle::verify_theorems;
use lierad_core::{catalog, profile, report, LieAlgebra};

pub const EXIT_OK: u8 = 0;
pub const EXIT_INVALID: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_VIOLATION: u8 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "lierad",
    version,
    about = "Series and radicals of Lie algebras over Q"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the three series, the radicals and the structural flags.
    Analyze {
        /// Algebra file, or `-` for standard input.
        path: String,
        #[arg(long)]
        json: bool,
    },
    /// Check the structural theorems on randomly sampled ideals.
    Verify {
        /// Algebra file, or `-` for standard input.
        path: String,
        #[arg(long, default_value_t = 50, value_parser = clap::value_parser!(u64).range(1..))]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// List built-in algebras, or export one in the file format.
    Catalog { name: Option<String> },
}

/// Runs the tool with `args` (including the program name) and returns the
/// exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Analyze { path, json } => analyze(&path, json, stdin, out),
        Command::Verify {
            path,
            samples,
            seed,
            json,
        } => verify(&path, samples as usize, seed, json, stdin, out),
        Command::Catalog { name } => catalog_cmd(name.as_deref(), out),
    };
    match result {
        Ok(code) => code,
        Err(Failure { code, message }) => {
            let _ = writeln!(err, "lierad: {message}");
            code
        }
    }
}

struct Failure {
    code: u8,
    message: String,
}

fn fail(code: u8, message: impl Into<String>) -> Failure {
    Failure {
        code,
        message: message.into(),
    }
}

fn io_failure(e: std::io::Error) -> Failure {
    fail(EXIT_USAGE, format!("write failed: {e}"))
}

fn load(path: &str, stdin: &mut dyn Read) -> Result<LieAlgebra, Failure> {
    let text = if path == "-" {
        let mut s = String::new();
        stdin
            .read_to_string(&mut s)
            .map_err(|e| fail(EXIT_USAGE, format!("reading standard input: {e}")))?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| fail(EXIT_USAGE, format!("{path}: {e}")))?
    };
    parse_algebra(&text).map_err(|e| {
        let code = if e.is_invalid_algebra() {
            EXIT_INVALID
        } else {
            EXIT_USAGE
        };
        fail(code, format!("{path}: {e}"))
    })
}

fn analyze(
    path: &str,
    json: bool,
    stdin: &mut dyn Read,
    out: &mut dyn Write,
) -> Result<u8, Failure> {
    let l = load(path, stdin)?;
    let p = profile(&l).map_err(|e| fail(EXIT_VIOLATION, e.to_string()))?;
    let text = if json {
        report::to_json_string(&report::profile_json(&l, &p))
    } else {
        report::profile_text(&l, &p)
    };
    out.write_all(text.as_bytes()).map_err(io_failure)?;
    Ok(EXIT_OK)
}

fn verify(
    path: &str,
    samples: usize,
    seed: u64,
    json: bool,
    stdin: &mut dyn Read,
    out: &mut dyn Write,
) -> Result<u8, Failure> {
    let l = load(path, stdin)?;
    let r = verify_theorems(&l, samples, seed);
    let text = if json {
        report::to_json_string(&report::theorem_json(&l, &r))
    } else {
        report::theorem_text(&l, &r)
    };
    out.write_all(text.as_bytes()).map_err(io_failure)?;
    Ok(if r.all_hold() {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    })
}

fn catalog_cmd(name: Option<&str>, out: &mut dyn Write) -> Result<u8, Failure> {
    let text = match name {
        None => catalog::all()
            .iter()
            .map(|e| {
                format!(
                    "{:<14} dim {}  {}\n",
                    e.name,
                    e.algebra.dim(),
                    e.description
                )
            })
            .collect::<String>(),
        Some(name) => {
            let e = catalog::get(name).map_err(|e| fail(EXIT_USAGE, e.to_string()))?;
            format!(
                "# {}: {}\n{}",
                e.name,
                e.description,
                render_algebra(&e.algebra)
            )
        }
    };
    out.write_all(text.as_bytes()).map_err(io_failure)?;
    Ok(EXIT_OK)
}
