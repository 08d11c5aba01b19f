//! Reproducible comparison harness: for each pair in a corpus, runs every
//! algorithm and reports prime counts, the largest prime touched, and the
//! largest coefficient bit-length encountered. No timing appears in the
//! output so reports are byte-reproducible across machines.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::arith::Int;
use crate::gcdalgs::{
    gcd_aux_prime, gcd_big_prime, gcd_multi_aux, gcd_oracle_metered, swell_profile, GcdTrace,
    PrimeRole,
};
use crate::polyz::IntPoly;
use crate::Error;

/// One pair-algorithm measurement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchRow {
    pub pair: String,
    pub algorithm: &'static str,
    /// Degree of the computed gcd; absent for the swell profiler, which
    /// computes remainders rather than a gcd.
    pub result_degree: Option<usize>,
    pub aux_primes: usize,
    pub main_primes: usize,
    pub largest_prime: Option<Int>,
    /// Modular rows: the larger of the result height and the largest prime,
    /// in bits. Oracle row: largest pseudo-remainder coefficient. Swell row:
    /// largest rational numerator or denominator.
    pub max_bits: u64,
}

/// Per-algorithm lower medians over all pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchMedian {
    pub algorithm: &'static str,
    pub aux_primes: usize,
    pub main_primes: usize,
    pub max_bits: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchReport {
    pub corpus: String,
    pub rows: Vec<BenchRow>,
    pub medians: Vec<BenchMedian>,
}

const ALGORITHMS: [&str; 5] = ["big-prime", "aux", "multi-aux", "oracle", "swell"];

/// Runs every algorithm over the named corpus.
///
/// Corpora: `knuth` (the classic degree 8 / degree 6 coprime pair) or
/// `constructed(d_deg, cofactor_deg, coeff_bound, count, seed)` which builds
/// `count` pairs sharing a random factor of degree `d_deg`.
pub fn run_corpus(descriptor: &str) -> Result<BenchReport, Error> {
    let pairs = corpus_pairs(descriptor)?;
    let mut rows = Vec::new();
    for (label, f, g) in &pairs {
        rows.push(modular_row(label, "big-prime", gcd_big_prime(f, g)?));
        rows.push(modular_row(label, "aux", gcd_aux_prime(f, g)?));
        rows.push(modular_row(label, "multi-aux", gcd_multi_aux(f, g)?));
        let (d, oracle_bits) = gcd_oracle_metered(f, g)?;
        rows.push(BenchRow {
            pair: label.clone(),
            algorithm: "oracle",
            result_degree: d.degree(),
            aux_primes: 0,
            main_primes: 0,
            largest_prime: None,
            max_bits: oracle_bits,
        });
        let (hi, lo) = if f.degree() >= g.degree() { (f, g) } else { (g, f) };
        let profile = swell_profile(hi, lo)?;
        rows.push(BenchRow {
            pair: label.clone(),
            algorithm: "swell",
            result_degree: None,
            aux_primes: 0,
            main_primes: 0,
            largest_prime: None,
            max_bits: profile.max_bits(),
        });
    }
    let medians = ALGORITHMS
        .iter()
        .map(|&algorithm| {
            let selected: Vec<&BenchRow> =
                rows.iter().filter(|r| r.algorithm == algorithm).collect();
            BenchMedian {
                algorithm,
                aux_primes: lower_median(selected.iter().map(|r| r.aux_primes as u64)) as usize,
                main_primes: lower_median(selected.iter().map(|r| r.main_primes as u64)) as usize,
                max_bits: lower_median(selected.iter().map(|r| r.max_bits)),
            }
        })
        .collect();
    Ok(BenchReport {
        corpus: descriptor.to_string(),
        rows,
        medians,
    })
}

fn modular_row(label: &str, algorithm: &'static str, run: (IntPoly, GcdTrace)) -> BenchRow {
    let (d, trace) = run;
    let largest_prime = trace.attempts.iter().map(|a| a.prime.clone()).max();
    let prime_bits = largest_prime.as_ref().map_or(0, |p| p.bits());
    let aux_primes = trace
        .attempts
        .iter()
        .filter(|a| a.role == PrimeRole::Auxiliary)
        .count();
    BenchRow {
        pair: label.to_string(),
        algorithm,
        result_degree: d.degree(),
        aux_primes,
        main_primes: trace.total_main_primes,
        largest_prime,
        max_bits: d.height().bits().max(prime_bits),
    }
}

fn lower_median(values: impl Iterator<Item = u64>) -> u64 {
    let mut values: Vec<u64> = values.collect();
    if values.is_empty() {
        return 0;
    }
    values.sort_unstable();
    values[(values.len() - 1) / 2]
}

fn corpus_pairs(descriptor: &str) -> Result<Vec<(String, IntPoly, IntPoly)>, Error> {
    if descriptor == "knuth" {
        let f = IntPoly::from_i64(&[-5, 2, 8, -3, -3, 0, 1, 0, 1]);
        let g = IntPoly::from_i64(&[21, -9, -4, 0, 5, 0, 3]);
        return Ok(vec![("knuth".to_string(), f, g)]);
    }
    if let Some(args) = descriptor
        .strip_prefix("constructed(")
        .and_then(|rest| rest.strip_suffix(')'))
    {
        let fields: Vec<&str> = args.split(',').map(str::trim).collect();
        if fields.len() != 5 {
            return Err(corpus_error(
                "constructed corpus takes (d_deg, cofactor_deg, coeff_bound, count, seed)",
            ));
        }
        let parse = |text: &str| -> Result<u64, Error> {
            text.parse()
                .map_err(|_| corpus_error("corpus parameters must be nonnegative integers"))
        };
        let d_deg = parse(fields[0])? as usize;
        let cofactor_deg = parse(fields[1])? as usize;
        let coeff_bound = parse(fields[2])? as i64;
        let count = parse(fields[3])? as usize;
        let seed = parse(fields[4])?;
        if coeff_bound < 1 || count < 1 || d_deg > 64 || cofactor_deg > 64 || count > 10_000 {
            return Err(corpus_error("corpus parameters out of range"));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut pairs = Vec::with_capacity(count);
        for i in 1..=count {
            let d = random_poly(&mut rng, d_deg, coeff_bound);
            let u = random_poly(&mut rng, cofactor_deg, coeff_bound);
            let v = random_poly(&mut rng, cofactor_deg, coeff_bound);
            pairs.push((format!("pair-{i}"), d.mul(&u), d.mul(&v)));
        }
        return Ok(pairs);
    }
    Err(corpus_error("unknown corpus"))
}

fn corpus_error(message: &str) -> Error {
    Error::Parse {
        position: 0,
        message: message.to_string(),
    }
}

/// Uniform coefficients in `[-bound, bound]` with a nonzero leading
/// coefficient, so the degree is exact.
fn random_poly(rng: &mut ChaCha8Rng, degree: usize, bound: i64) -> IntPoly {
    let mut coeffs: Vec<Int> = (0..=degree)
        .map(|_| Int::from(rng.random_range(-bound..=bound)))
        .collect();
    while coeffs[degree].is_zero() {
        coeffs[degree] = Int::from(rng.random_range(-bound..=bound));
    }
    IntPoly::from_coeffs(coeffs)
}

/// Markdown report: one table of rows, one table of per-algorithm medians.
pub fn emit_markdown(report: &BenchReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("# bench corpus: {}\n\n", report.corpus));
    out.push_str("| pair | algorithm | result_degree | aux_primes | main_primes | largest_prime | max_bits |\n");
    out.push_str("|---|---|---|---|---|---|---|\n");
    for row in &report.rows {
        out.push_str(&format!(
            "| {} | {} | {} | {} | {} | {} | {} |\n",
            row.pair,
            row.algorithm,
            row.result_degree
                .map_or_else(|| "-".to_string(), |d| d.to_string()),
            row.aux_primes,
            row.main_primes,
            row.largest_prime
                .as_ref()
                .map_or_else(|| "-".to_string(), |p| p.to_string()),
            row.max_bits,
        ));
    }
    out.push_str("\n## medians\n\n");
    out.push_str("| algorithm | aux_primes | main_primes | max_bits |\n");
    out.push_str("|---|---|---|---|\n");
    for median in &report.medians {
        out.push_str(&format!(
            "| {} | {} | {} | {} |\n",
            median.algorithm, median.aux_primes, median.main_primes, median.max_bits,
        ));
    }
    out
}

/// JSON report with the same content as the Markdown table; big integers are
/// decimal strings.
pub fn emit_json(report: &BenchReport) -> String {
    let rows: Vec<serde_json::Value> = report
        .rows
        .iter()
        .map(|row| {
            json!({
                "pair": row.pair,
                "algorithm": row.algorithm,
                "result_degree": row.result_degree,
                "aux_primes": row.aux_primes,
                "main_primes": row.main_primes,
                "largest_prime": row.largest_prime.as_ref().map(|p| p.to_string()),
                "max_bits": row.max_bits,
            })
        })
        .collect();
    let medians: Vec<serde_json::Value> = report
        .medians
        .iter()
        .map(|median| {
            json!({
                "algorithm": median.algorithm,
                "aux_primes": median.aux_primes,
                "main_primes": median.main_primes,
                "max_bits": median.max_bits,
            })
        })
        .collect();
    json!({
        "corpus": report.corpus,
        "rows": rows,
        "medians": medians,
    })
    .to_string()
}
