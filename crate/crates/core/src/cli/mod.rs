//! Command-line front end: JSON in, JSON out.
//!
//! Every run prints one envelope `{"ok", "error", "result"}`. Exit codes are
//! 0 on success, 1 on a domain error and 2 on malformed input or flags.

mod json;

use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::charpoly::{char_polynomial, is_characteristic, reduce_degenerate};
use crate::classify::{
    affine_spectrum, almost_equivalent, realize, search_certificate, simple_spectrum_form, verify_equivalence,
};
use crate::construction::{euclidean_factor_dim, example_4d, example_5d};
use crate::symmat::DEFAULT_TOL;
use json::{
    certificate_json, manifold_json, parse_certificate, parse_manifold, parse_parabola, parse_payload, round_value,
    rows_json, Failure, Parsed,
};

#[derive(Debug, Parser)]
#[command(name = "flatcausal", version, about = "Characteristic parabolas of flat causal manifolds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Read the JSON payload from this file instead of stdin.
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    /// Relative tolerance for rank and positivity decisions.
    #[arg(long, global = true, default_value_t = DEFAULT_TOL)]
    tol: f64,
    /// Pretty-print the output.
    #[arg(long, global = true)]
    pretty: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Validate manifold data and report its signature.
    ValidateManifold,
    /// Characteristic parabola of manifold data.
    Charpoly,
    /// Decide whether a parabola is characteristic in dimension n.
    ValidateParabola {
        #[arg(long)]
        n: usize,
    },
    /// Manifold data realizing a characteristic parabola.
    Realize {
        #[arg(long)]
        n: usize,
    },
    /// Split off the constant block of a parabola with singular C.
    Reduce,
    /// Signature (n, m, r, k) of manifold data.
    Signature,
    /// Affine spectral invariant of a parabola.
    Invariants,
    /// Simple-spectrum normal form of manifold data.
    SimpleForm,
    /// Real equivalence of two parabolas {"P1", "P2"}.
    Compare {
        #[arg(long)]
        n: usize,
    },
    /// Check a certificate {"P1", "P2", "certificate"}.
    Certify {
        #[arg(long)]
        n: usize,
    },
    /// Search integral certificates with bounded entries.
    SearchCert {
        #[arg(long, default_value_t = 2)]
        bound: u32,
    },
    /// Emit one of the built-in manifolds.
    Example {
        #[arg(long, value_enum)]
        name: ExampleName,
        #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
        t: f64,
        #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
        r: f64,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ExampleName {
    Dim4,
    Dim5,
}

/// Runs the command line `args` (including the program name) and returns
/// the exit code.
pub fn run<I, S>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let sink: &mut dyn Write = if code == 0 { stdout } else { stderr };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    if !(cli.tol.is_finite() && cli.tol > 0.0) {
        let _ = writeln!(stderr, "error: --tol must be a positive finite number");
        return 2;
    }
    let outcome = execute(&cli, stdin);
    let (envelope, code) = match outcome {
        Ok(result) => (json!({"ok": true, "error": null, "result": round_value(result)}), 0),
        Err(Failure::Malformed(msg)) => (error_envelope("InvalidInput", &msg), 2),
        Err(Failure::Domain(e)) => (error_envelope(e.code(), &e.to_string()), 1),
    };
    let text = if cli.pretty {
        serde_json::to_string_pretty(&envelope)
    } else {
        serde_json::to_string(&envelope)
    }
    .expect("envelopes serialize");
    let _ = writeln!(stdout, "{text}");
    code
}

fn error_envelope(code: &str, message: &str) -> Value {
    json!({"ok": false, "error": {"code": code, "message": message}, "result": null})
}

fn read_input(cli: &Cli, stdin: &mut dyn Read) -> Parsed<Value> {
    let mut text = String::new();
    let read = match &cli.input {
        Some(path) => std::fs::read_to_string(path).map(|t| text = t),
        None => stdin.read_to_string(&mut text).map(|_| ()),
    };
    read.map_err(|e| Failure::Malformed(format!("cannot read input: {e}")))?;
    parse_payload(&text)
}

fn pair(v: &Value, tol: f64) -> Parsed<(crate::MatrixParabola, crate::MatrixParabola)> {
    let get = |k: &str| {
        v.get(k)
            .ok_or_else(|| Failure::Malformed(format!("missing field \"{k}\"")))
    };
    Ok((parse_parabola(get("P1")?, tol)?, parse_parabola(get("P2")?, tol)?))
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("results serialize")
}

fn execute(cli: &Cli, stdin: &mut dyn Read) -> Parsed<Value> {
    let tol = cli.tol;
    if let Command::Example { name, t, r } = cli.command {
        let data = match name {
            ExampleName::Dim4 => example_4d(),
            ExampleName::Dim5 => example_5d(t, r)?,
        };
        return Ok(manifold_json(&data));
    }
    let input = read_input(cli, stdin)?;
    Ok(match cli.command {
        Command::ValidateManifold => {
            let data = parse_manifold(&input)?;
            json!({
                "valid": true,
                "signature": to_value(&data.signature()),
                "euclidean_dim": euclidean_factor_dim(&data),
            })
        }
        Command::Charpoly => to_value(&char_polynomial(&parse_manifold(&input)?)),
        Command::ValidateParabola { n } => to_value(&is_characteristic(&parse_parabola(&input, tol)?, n, tol)?),
        Command::Realize { n } => manifold_json(&realize(&parse_parabola(&input, tol)?, n, tol)?),
        Command::Reduce => {
            let red = reduce_degenerate(&parse_parabola(&input, tol)?, tol)?;
            json!({
                "k": red.k,
                "X": rows_json(&red.x),
                "constant_block": to_value(&red.constant_block),
                "reduced": to_value(&red.reduced),
            })
        }
        Command::Signature => to_value(&parse_manifold(&input)?.signature()),
        Command::Invariants => to_value(&affine_spectrum(&parse_parabola(&input, tol)?, tol)?),
        Command::SimpleForm => to_value(&simple_spectrum_form(&parse_manifold(&input)?, tol)?),
        Command::Compare { n } => {
            let (p1, p2) = pair(&input, tol)?;
            to_value(&almost_equivalent(&p1, &p2, n, tol)?)
        }
        Command::Certify { n } => {
            let (p1, p2) = pair(&input, tol)?;
            let cert = match input.get("certificate") {
                Some(c) => parse_certificate(c)?,
                None => return Err(Failure::Malformed("missing field \"certificate\"".into())),
            };
            json!({"equivalent": verify_equivalence(&p1, &p2, &cert, n, tol)?})
        }
        Command::SearchCert { bound } => {
            let (p1, p2) = pair(&input, tol)?;
            let found = search_certificate(&p1, &p2, bound, tol)?;
            json!({"certificate": found.as_ref().map(certificate_json)})
        }
        Command::Example { .. } => unreachable!("handled above"),
    })
}
