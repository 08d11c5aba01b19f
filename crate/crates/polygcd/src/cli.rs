//! Command-line front end.
//!
//! Subcommands expose the gcd algorithms, the coprimality test, the
//! coefficient bounds, the resultant, the swell profiler, and the benchmark
//! harness. Output is deterministic: identical invocations produce
//! byte-identical stdout, and the only nondeterministic information (bench
//! timing) goes to stderr.
//!
//! Exit codes: 0 success (including "coprime"), 1 parse or usage error,
//! 2 domain error, 3 "not coprime".

use std::io::{BufRead, Write};

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use num_integer::Integer;
use num_traits::Zero;
use serde_json::json;

use crate::arith::{is_prime, Int};
use crate::bench;
use crate::bounds::{bound_aux, full_report};
use crate::gcdalgs::{
    coprime_detect, gcd_aux_prime, gcd_big_prime, gcd_multi_aux, gcd_oracle, swell_profile,
    GcdTrace, PrimeAttempt,
};
use crate::modpoly::{euclid_gcd_mod, reduce_poly};
use crate::parser::{format_poly, parse_poly};
use crate::polyz::IntPoly;
use crate::sylvester::resultant;
use crate::Error;

#[derive(Parser)]
#[command(
    name = "polygcd",
    about = "Exact gcd computation for integer polynomials in one variable"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the gcd of two polynomials.
    Gcd {
        /// First polynomial, e.g. "x^2+2x+1"; "-" reads a line from stdin.
        f: String,
        /// Second polynomial; "-" reads a line from stdin.
        g: String,
        #[arg(long, value_enum, default_value_t = Algorithm::MultiAux)]
        algorithm: Algorithm,
        /// Print one line per prime attempt after the result.
        #[arg(long)]
        trace: bool,
        /// Machine-readable output with the full trace and bounds.
        #[arg(long)]
        json: bool,
    },
    /// Decide whether two polynomials are coprime using only small primes.
    Coprime {
        f: String,
        g: String,
        #[arg(long)]
        json: bool,
    },
    /// Print the coefficient bounds and the prime budget, computed on the
    /// primitive parts.
    Bounds {
        f: String,
        g: String,
        /// Also print the modular gcd degree and the sharpened bound for
        /// this auxiliary prime.
        #[arg(long)]
        aux: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Print the resultant of two polynomials, at least one nonconstant.
    Resultant { f: String, g: String },
    /// Tabulate coefficient growth of the rational remainder sequence.
    Swell { f: String, g: String },
    /// Compare all algorithms over a corpus of input pairs.
    Bench {
        /// "knuth" or "constructed(d_deg, cofactor_deg, coeff_bound, count, seed)".
        #[arg(long, default_value = "knuth")]
        corpus: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Algorithm {
    BigPrime,
    Aux,
    MultiAux,
    Oracle,
}

impl Algorithm {
    fn name(self) -> &'static str {
        match self {
            Algorithm::BigPrime => "big-prime",
            Algorithm::Aux => "aux",
            Algorithm::MultiAux => "multi-aux",
            Algorithm::Oracle => "oracle",
        }
    }
}

/// Parses `args` (including the program name) and executes the subcommand,
/// returning the process exit code.
pub fn run(
    args: &[String],
    stdin: &mut dyn BufRead,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    0
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    1
                }
            }
        }
    };
    match dispatch(cli.command, stdin, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e);
            match e {
                Error::Parse { .. } => 1,
                _ => 2,
            }
        }
    }
}

fn dispatch(
    command: Command,
    stdin: &mut dyn BufRead,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, Error> {
    match command {
        Command::Gcd {
            f,
            g,
            algorithm,
            trace,
            json,
        } => {
            let f = read_poly(&f, stdin)?;
            let g = read_poly(&g, stdin)?;
            cmd_gcd(&f, &g, algorithm, trace, json, out)
        }
        Command::Coprime { f, g, json } => {
            let f = read_poly(&f, stdin)?;
            let g = read_poly(&g, stdin)?;
            cmd_coprime(&f, &g, json, out)
        }
        Command::Bounds { f, g, aux, json } => {
            let f = read_poly(&f, stdin)?;
            let g = read_poly(&g, stdin)?;
            cmd_bounds(&f, &g, aux.as_deref(), json, out)
        }
        Command::Resultant { f, g } => {
            let f = read_poly(&f, stdin)?;
            let g = read_poly(&g, stdin)?;
            let _ = writeln!(out, "{}", resultant(&f, &g)?);
            Ok(0)
        }
        Command::Swell { f, g } => {
            let f = read_poly(&f, stdin)?;
            let g = read_poly(&g, stdin)?;
            let profile = swell_profile(&f, &g)?;
            let _ = writeln!(out, "step degree bits");
            for step in &profile.steps {
                let _ = writeln!(
                    out,
                    "{} {} {}",
                    step.step,
                    step.degree
                        .map_or_else(|| "-".to_string(), |d| d.to_string()),
                    step.max_bits
                );
            }
            Ok(0)
        }
        Command::Bench { corpus, json } => {
            let start = std::time::Instant::now();
            let report = bench::run_corpus(&corpus)?;
            if json {
                let _ = writeln!(out, "{}", bench::emit_json(&report));
            } else {
                let _ = write!(out, "{}", bench::emit_markdown(&report));
            }
            let _ = writeln!(err, "# timing: {} ms", start.elapsed().as_millis());
            Ok(0)
        }
    }
}

/// Resolves a positional polynomial argument; `-` consumes the next stdin
/// line.
fn read_poly(text: &str, stdin: &mut dyn BufRead) -> Result<IntPoly, Error> {
    if text == "-" {
        let mut line = String::new();
        let read = stdin.read_line(&mut line).map_err(|e| Error::Parse {
            position: 0,
            message: format!("stdin: {e}"),
        })?;
        if read == 0 {
            return Err(Error::Parse {
                position: 0,
                message: "expected a polynomial on stdin".to_string(),
            });
        }
        parse_poly(line.trim())
    } else {
        parse_poly(text)
    }
}

fn cmd_gcd(
    f: &IntPoly,
    g: &IntPoly,
    algorithm: Algorithm,
    trace_flag: bool,
    json: bool,
    out: &mut dyn Write,
) -> Result<i32, Error> {
    let (d, trace) = match algorithm {
        Algorithm::BigPrime => {
            let (d, t) = gcd_big_prime(f, g)?;
            (d, Some(t))
        }
        Algorithm::Aux => {
            let (d, t) = gcd_aux_prime(f, g)?;
            (d, Some(t))
        }
        Algorithm::MultiAux => {
            let (d, t) = gcd_multi_aux(f, g)?;
            (d, Some(t))
        }
        Algorithm::Oracle => (gcd_oracle(f, g)?, None),
    };
    if json {
        let bounds = trace
            .as_ref()
            .and_then(|t| t.bounds_used.as_ref())
            .map_or(serde_json::Value::Null, |b| {
                json!({
                    "nf": b.nf.to_string(),
                    "ng": b.ng.to_string(),
                    "nfg": b.nfg.to_string(),
                    "afg": b.afg.to_string(),
                    "k": b.k,
                    "m": b.m_bound.as_ref().map(|m| m.to_string()),
                })
            });
        let value = json!({
            "result": format_poly(&d),
            "algorithm": algorithm.name(),
            "trace": trace_json(trace.as_ref()),
            "bounds": bounds,
        });
        let _ = writeln!(out, "{}", value);
    } else {
        let _ = writeln!(out, "{}", format_poly(&d));
        if trace_flag {
            if let Some(t) = &trace {
                for attempt in &t.attempts {
                    let _ = writeln!(out, "{}", attempt_line(attempt));
                }
            }
        }
    }
    Ok(0)
}

fn attempt_line(attempt: &PrimeAttempt) -> String {
    format!(
        "prime={} role={} e_degree={} action={}",
        attempt.prime,
        attempt.role.as_str(),
        attempt
            .e_degree
            .map_or_else(|| "-".to_string(), |d| d.to_string()),
        attempt.action.as_str()
    )
}

fn trace_json(trace: Option<&GcdTrace>) -> serde_json::Value {
    let attempts: Vec<serde_json::Value> = trace
        .map(|t| {
            t.attempts
                .iter()
                .map(|a| {
                    json!({
                        "prime": a.prime.to_string(),
                        "role": a.role.as_str(),
                        "e_degree": a.e_degree,
                        "action": a.action.as_str(),
                    })
                })
                .collect()
        })
        .unwrap_or_default();
    serde_json::Value::Array(attempts)
}

fn cmd_coprime(f: &IntPoly, g: &IntPoly, json: bool, out: &mut dyn Write) -> Result<i32, Error> {
    let (answer, trace) = coprime_detect(f, g)?;
    let (reason, witness) = if answer {
        match trace.attempts.last() {
            Some(a) => (format!("witness prime {}", a.prime), Some(a.prime.clone())),
            None => ("constant input".to_string(), None),
        }
    } else if trace.attempts.is_empty() {
        ("shared content".to_string(), None)
    } else {
        (format!("{} primes exhausted", trace.attempts.len()), None)
    };
    if json {
        let value = json!({
            "coprime": answer,
            "reason": reason,
            "witness": witness.map(|w| w.to_string()),
            "trace": trace_json(Some(&trace)),
        });
        let _ = writeln!(out, "{}", value);
    } else {
        let verdict = if answer { "coprime" } else { "not coprime" };
        let _ = writeln!(out, "{} ({})", verdict, reason);
    }
    Ok(if answer { 0 } else { 3 })
}

fn cmd_bounds(
    f: &IntPoly,
    g: &IntPoly,
    aux: Option<&str>,
    json: bool,
    out: &mut dyn Write,
) -> Result<i32, Error> {
    let f1 = f.primitive_part()?;
    let g1 = g.primitive_part()?;
    let report = full_report(&f1, &g1)?;
    let mut aux_info: Option<(Int, usize, Int)> = None;
    if let Some(text) = aux {
        let q: Int = text.parse().map_err(|_| Error::Parse {
            position: 0,
            message: "auxiliary prime must be an integer".to_string(),
        })?;
        let w = f1.leading_coeff()?.gcd(&g1.leading_coeff()?);
        if !is_prime(&q) || (&w % &q).is_zero() {
            return Err(Error::BadAuxiliaryPrime);
        }
        let eq = euclid_gcd_mod(&reduce_poly(&f1, &q)?, &reduce_poly(&g1, &q)?)?;
        let s = eq.degree().expect("gcd of nonzero polynomials is nonzero");
        let m = bound_aux(&f1, &g1, s)?;
        aux_info = Some((q, s, m));
    }
    if json {
        let value = json!({
            "bounds": {
                "nf": report.nf.to_string(),
                "ng": report.ng.to_string(),
                "nfg": report.nfg.to_string(),
                "afg": report.afg.to_string(),
                "k": report.k,
                "s": aux_info.as_ref().map(|(_, s, _)| *s),
                "m": aux_info.as_ref().map(|(_, _, m)| m.to_string()),
            }
        });
        let _ = writeln!(out, "{}", value);
    } else {
        let _ = writeln!(out, "N_f = {}", report.nf);
        let _ = writeln!(out, "N_g = {}", report.ng);
        let _ = writeln!(out, "N_{{f,g}} = {}", report.nfg);
        let _ = writeln!(out, "A_{{f,g}} = {}", report.afg);
        let _ = writeln!(out, "k = {}", report.k);
        if let Some((q, s, m)) = &aux_info {
            let _ = writeln!(out, "s({},f,g) = {}", q, s);
            let _ = writeln!(out, "M_{{{},f,g}} = {}", q, m);
        }
    }
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Cursor;

    fn run_cli(args: &[&str], stdin: &str) -> (i32, String, String) {
        let args: Vec<String> = std::iter::once("polygcd".to_string())
            .chain(args.iter().map(|s| s.to_string()))
            .collect();
        let mut input = Cursor::new(stdin.as_bytes().to_vec());
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(&args, &mut input, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn gcd_defaults() {
        let (code, out, _) = run_cli(
            &["gcd", "x^8+x^6-3x^4-3x^3+8x^2+2x-5", "3x^6+5x^4-4x^2-9x+21"],
            "",
        );
        assert_eq!(code, 0);
        assert_eq!(out, "1\n");
    }

    #[test]
    fn gcd_with_trace() {
        let (code, out, _) = run_cli(
            &["gcd", "12x^2+24x+12", "8x+8", "--algorithm", "big-prime", "--trace"],
            "",
        );
        assert_eq!(code, 0);
        assert_eq!(out, "4x+4\nprime=7 role=main e_degree=1 action=accepted\n");
    }

    #[test]
    fn stdin_polynomials() {
        let (code, out, _) = run_cli(&["gcd", "-", "-"], "12x^2+24x+12\n8x+8\n");
        assert_eq!(code, 0);
        assert_eq!(out, "4x+4\n");
        let (code, _, err) = run_cli(&["gcd", "-", "x"], "");
        assert_eq!(code, 1);
        assert!(err.contains("stdin"));
    }

    #[test]
    fn exit_codes() {
        let (code, _, err) = run_cli(&["gcd", "x^", "x"], "");
        assert_eq!(code, 1);
        assert!(err.contains("position 2"));
        let (code, _, err) = run_cli(&["gcd", "0", "0"], "");
        assert_eq!(code, 2);
        assert!(err.contains("zero"));
        let (code, _, _) = run_cli(&["coprime", "12x^2+24x+12", "8x+8"], "");
        assert_eq!(code, 3);
        let (code, _, _) = run_cli(&["nonsense"], "");
        assert_eq!(code, 1);
        let (code, out, _) = run_cli(&["--help"], "");
        assert_eq!(code, 0);
        assert!(out.contains("gcd"));
    }

    #[test]
    fn coprime_output() {
        let (code, out, _) = run_cli(
            &["coprime", "x^8+x^6-3x^4-3x^3+8x^2+2x-5", "3x^6+5x^4-4x^2-9x+21"],
            "",
        );
        assert_eq!(code, 0);
        assert_eq!(out, "coprime (witness prime 3)\n");
        let (code, out, _) = run_cli(&["coprime", "x^2+2x+1", "x+1"], "");
        assert_eq!(code, 3);
        assert_eq!(out, "not coprime (4 primes exhausted)\n");
        let (code, out, _) = run_cli(&["coprime", "12x^2+24x+12", "8x+8"], "");
        assert_eq!(code, 3);
        assert_eq!(out, "not coprime (shared content)\n");
    }

    #[test]
    fn bounds_output() {
        let (code, out, _) = run_cli(
            &["bounds", "x^8+x^6-3x^4-3x^3+8x^2+2x-5", "3x^6+5x^4-4x^2-9x+21"],
            "",
        );
        assert_eq!(code, 0);
        assert!(out.starts_with("N_f = 1361\nN_g = 766\nN_{f,g} = 511\nA_{f,g} = "));
        assert!(out.ends_with("k = 30\n"));
        let (code, out, _) = run_cli(
            &[
                "bounds",
                "x^8+x^6-3x^4-3x^3+8x^2+2x-5",
                "3x^6+5x^4-4x^2-9x+21",
                "--aux",
                "3",
            ],
            "",
        );
        assert_eq!(code, 0);
        assert!(out.contains("s(3,f,g) = 0\nM_{3,f,g} = 8\n"));
        let (code, _, _) = run_cli(&["bounds", "x", "x+1", "--aux", "4"], "");
        assert_eq!(code, 2);
        let (code, _, _) = run_cli(&["bounds", "x", "x+1", "--aux", "abc"], "");
        assert_eq!(code, 1);
    }
}
