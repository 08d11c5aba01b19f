//! Gcd computation for integer polynomials through modular images: the
//! big-prime algorithm, two refinements that shrink the main prime with
//! auxiliary-prime degree estimates, a coprimality test with a bounded prime
//! budget, an independent classical oracle, and a coefficient-growth profiler
//! for the naive rational remainder sequence.

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::arith::{is_prime, next_prime, next_prime_coprime, Int};
use crate::bounds::{bound_aux, full_report, BoundReport};
use crate::modpoly::{euclid_gcd_mod, reduce_int, reduce_poly, ModPoly};
use crate::polyz::IntPoly;
use crate::reconstruct::reconstruct_poly;
use crate::Error;

/// How a recorded prime was used.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrimeRole {
    /// Small prime used only to measure a modular gcd degree.
    Auxiliary,
    /// Prime above the coefficient-bound threshold used for reconstruction.
    Main,
}

impl PrimeRole {
    pub fn as_str(self) -> &'static str {
        match self {
            PrimeRole::Auxiliary => "auxiliary",
            PrimeRole::Main => "main",
        }
    }
}

/// Outcome of one prime attempt.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrimeAction {
    /// The reconstruction at this prime was verified and returned.
    Accepted,
    /// The modular gcd degree reached the current cutoff, so reconstruction
    /// was skipped (or, for the degree-matched variant, missed the known
    /// divisor degree).
    RejectedByD,
    /// The reconstructed candidate failed the trial division.
    RejectedByDivision,
    /// An auxiliary prime produced a degree-zero modular gcd, proving the
    /// primitive parts coprime.
    CoprimeWitness,
    /// An auxiliary prime contributed a degree measurement.
    DegreeEstimate,
}

impl PrimeAction {
    pub fn as_str(self) -> &'static str {
        match self {
            PrimeAction::Accepted => "accepted",
            PrimeAction::RejectedByD => "rejected-by-D",
            PrimeAction::RejectedByDivision => "rejected-by-division",
            PrimeAction::CoprimeWitness => "coprime-witness",
            PrimeAction::DegreeEstimate => "degree-estimate",
        }
    }
}

/// One prime tried by an algorithm run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeAttempt {
    pub prime: Int,
    pub role: PrimeRole,
    /// Degree of the modular gcd at this prime; `None` when it was never
    /// computed.
    pub e_degree: Option<usize>,
    pub action: PrimeAction,
}

/// Audit record of a single algorithm run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GcdTrace {
    pub attempts: Vec<PrimeAttempt>,
    /// Degree-cutoff values over time: the initial cutoff followed by every
    /// tightening discovered through failed divisions. The degree-matched
    /// variant stores the single value one above the established divisor
    /// degree.
    pub d_cutoff_history: Vec<usize>,
    /// Bounds computed for the primitive parts, when the run got that far.
    pub bounds_used: Option<BoundReport>,
    pub total_main_primes: usize,
}

impl GcdTrace {
    fn new() -> Self {
        GcdTrace {
            attempts: Vec::new(),
            d_cutoff_history: Vec::new(),
            bounds_used: None,
            total_main_primes: 0,
        }
    }

    fn record(&mut self, prime: Int, role: PrimeRole, e_degree: Option<usize>, action: PrimeAction) {
        self.attempts.push(PrimeAttempt {
            prime,
            role,
            e_degree,
            action,
        });
    }
}

/// One step of the naive rational remainder sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SwellStep {
    pub step: usize,
    /// Degree of the remainder; `None` when the division was exact.
    pub degree: Option<usize>,
    /// Largest bit-length over the reduced numerators and denominators of
    /// the remainder's coefficients.
    pub max_bits: u64,
}

/// Per-step coefficient-size measurements of the rational Euclidean
/// remainder sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SwellProfile {
    pub steps: Vec<SwellStep>,
}

impl SwellProfile {
    /// Largest coefficient bit-length over all steps.
    pub fn max_bits(&self) -> u64 {
        self.steps.iter().map(|s| s.max_bits).max().unwrap_or(0)
    }
}

/// Contents, primitive parts and their leading-coefficient gcd, shared by
/// every algorithm entry point.
struct Prep {
    r: Int,
    f1: IntPoly,
    g1: IntPoly,
    w: Int,
}

fn prepare(f: &IntPoly, g: &IntPoly) -> Result<Prep, Error> {
    let cf = f.content()?;
    let cg = g.content()?;
    let r = cf.gcd(&cg);
    let f1 = f.primitive_part()?;
    let g1 = g.primitive_part()?;
    let w = f1.leading_coeff()?.gcd(&g1.leading_coeff()?);
    Ok(Prep { r, f1, g1, w })
}

/// With a nonzero constant on either side the gcd is the positive gcd of the
/// contents; no modular work applies.
fn constant_shortcut(prep: &Prep) -> Option<IntPoly> {
    if prep.f1.degree() == Some(0) || prep.g1.degree() == Some(0) {
        Some(IntPoly::constant(prep.r.clone()))
    } else {
        None
    }
}

enum Acceptance {
    /// Verify each candidate by trial division, tightening the degree cutoff
    /// on failure.
    DivisionCheck,
    /// Accept exactly the degree established by the auxiliary scan; the lift
    /// is then provably exact and needs no division.
    ExactDegree(usize),
}

/// Draws main primes from `next_main`, rejects them by degree, reconstructs
/// and returns the primitive candidate divisor once one is accepted.
///
/// The stream receives the previously tried value, seeded with the doubled
/// coefficient bound, and must return a prime above it for the run to be
/// provably correct; the iteration cap guards against misbehaving streams.
fn run_main_loop(
    f1: &IntPoly,
    g1: &IntPoly,
    w: &Int,
    threshold: Int,
    mut d_cutoff: usize,
    acceptance: Acceptance,
    cap: usize,
    trace: &mut GcdTrace,
    next_main: &mut dyn FnMut(&Int) -> Int,
) -> Result<IntPoly, Error> {
    let mut last = threshold;
    for _ in 0..cap {
        let p = next_main(&last);
        last = p.clone();
        if (w % &p).is_zero() {
            continue;
        }
        let fp = reduce_poly(f1, &p)?;
        let gp = reduce_poly(g1, &p)?;
        if fp.is_zero() || gp.is_zero() {
            continue;
        }
        let e = euclid_gcd_mod(&fp, &gp)?;
        let e_deg = e.degree().expect("gcd of nonzero polynomials is nonzero");
        trace.total_main_primes += 1;
        match acceptance {
            Acceptance::DivisionCheck => {
                if d_cutoff <= e_deg {
                    trace.record(p, PrimeRole::Main, Some(e_deg), PrimeAction::RejectedByD);
                    continue;
                }
                let d = lift_candidate(&e, w)?;
                if f1.divide_exact(&d)?.is_some() && g1.divide_exact(&d)?.is_some() {
                    trace.record(p, PrimeRole::Main, Some(e_deg), PrimeAction::Accepted);
                    return Ok(d);
                }
                d_cutoff = e_deg;
                trace.d_cutoff_history.push(e_deg);
                trace.record(
                    p,
                    PrimeRole::Main,
                    Some(e_deg),
                    PrimeAction::RejectedByDivision,
                );
            }
            Acceptance::ExactDegree(s) => {
                if e_deg == s {
                    let d = lift_candidate(&e, w)?;
                    trace.record(p, PrimeRole::Main, Some(e_deg), PrimeAction::Accepted);
                    return Ok(d);
                }
                trace.record(p, PrimeRole::Main, Some(e_deg), PrimeAction::RejectedByD);
            }
        }
    }
    Err(Error::RetryCapExceeded)
}

/// Scales the monic modular gcd so its leading residue is `w`, lifts it
/// through the symmetric range and takes the primitive part.
fn lift_candidate(e: &ModPoly, w: &Int) -> Result<IntPoly, Error> {
    let t = reduce_int(w, e.modulus())?;
    let scaled = crate::modpoly::scale_mod(e, &t);
    reconstruct_poly(&scaled)?.primitive_part()
}

/// Gcd by a single main prime above the pair coefficient bound, retrying
/// with larger primes until the reconstructed candidate divides both inputs.
pub fn gcd_big_prime(f: &IntPoly, g: &IntPoly) -> Result<(IntPoly, GcdTrace), Error> {
    gcd_big_prime_with_stream(f, g, &mut |last: &Int| next_prime(last))
}

/// Variant of [`gcd_big_prime`] drawing candidate main primes from a
/// caller-supplied stream. Streams that yield primes below the honest
/// threshold exercise the cutoff bookkeeping at the cost of extra retries.
pub fn gcd_big_prime_with_stream(
    f: &IntPoly,
    g: &IntPoly,
    next_main: &mut dyn FnMut(&Int) -> Int,
) -> Result<(IntPoly, GcdTrace), Error> {
    let prep = prepare(f, g)?;
    let mut trace = GcdTrace::new();
    if let Some(c) = constant_shortcut(&prep) {
        return Ok((c, trace));
    }
    let report = full_report(&prep.f1, &prep.g1)?;
    let threshold = Int::from(2) * &report.nfg;
    let cap = 10 * (report.k as usize + 1);
    let d_init = degree_cutoff_start(&prep);
    trace.d_cutoff_history.push(d_init);
    trace.bounds_used = Some(report);
    let d = run_main_loop(
        &prep.f1,
        &prep.g1,
        &prep.w,
        threshold,
        d_init,
        Acceptance::DivisionCheck,
        cap,
        &mut trace,
        next_main,
    )?;
    Ok((d.scale(&prep.r), trace))
}

fn degree_cutoff_start(prep: &Prep) -> usize {
    let n = prep.f1.degree().expect("nonconstant");
    let m = prep.g1.degree().expect("nonconstant");
    n.min(m) + 1
}

/// Gcd with one auxiliary prime: the modular gcd degree at the smallest
/// prime not dividing the leading-coefficient gcd sharpens the coefficient
/// bound, so the main prime is much smaller than in [`gcd_big_prime`].
pub fn gcd_aux_prime(f: &IntPoly, g: &IntPoly) -> Result<(IntPoly, GcdTrace), Error> {
    gcd_aux_inner(f, g, None)
}

/// Variant of [`gcd_aux_prime`] with a caller-chosen auxiliary prime, which
/// must be prime and must not divide the gcd of the leading coefficients of
/// the primitive parts.
pub fn gcd_aux_prime_with(f: &IntPoly, g: &IntPoly, q: &Int) -> Result<(IntPoly, GcdTrace), Error> {
    gcd_aux_inner(f, g, Some(q))
}

fn gcd_aux_inner(
    f: &IntPoly,
    g: &IntPoly,
    q: Option<&Int>,
) -> Result<(IntPoly, GcdTrace), Error> {
    let prep = prepare(f, g)?;
    if let Some(q) = q {
        if !is_prime(q) || (&prep.w % q).is_zero() {
            return Err(Error::BadAuxiliaryPrime);
        }
    }
    let mut trace = GcdTrace::new();
    if let Some(c) = constant_shortcut(&prep) {
        return Ok((c, trace));
    }
    let q = match q {
        Some(q) => q.clone(),
        None => next_prime_coprime(&Int::one(), &prep.w),
    };
    let fq = reduce_poly(&prep.f1, &q)?;
    let gq = reduce_poly(&prep.g1, &q)?;
    let eq = euclid_gcd_mod(&fq, &gq)?;
    let s = eq.degree().expect("gcd of nonzero polynomials is nonzero");
    trace.record(
        q,
        PrimeRole::Auxiliary,
        Some(s),
        PrimeAction::DegreeEstimate,
    );
    let m_bound = bound_aux(&prep.f1, &prep.g1, s)?;
    let mut report = full_report(&prep.f1, &prep.g1)?;
    report.s_deg = Some(s);
    report.m_bound = Some(m_bound.clone());
    let threshold = Int::from(2) * &m_bound;
    let cap = 10 * (report.k as usize + 1);
    let d_init = degree_cutoff_start(&prep);
    trace.d_cutoff_history.push(d_init);
    trace.bounds_used = Some(report);
    let d = run_main_loop(
        &prep.f1,
        &prep.g1,
        &prep.w,
        threshold,
        d_init,
        Acceptance::DivisionCheck,
        cap,
        &mut trace,
        &mut |last: &Int| next_prime(last),
    )?;
    Ok((d.scale(&prep.r), trace))
}

/// Gcd with a full auxiliary scan: up to k+1 small primes establish the
/// exact divisor degree (k derived from the cofactor-resultant bound), a
/// degree-zero witness settles the answer outright, and the main prime is
/// accepted exactly when its modular gcd matches the established degree.
pub fn gcd_multi_aux(f: &IntPoly, g: &IntPoly) -> Result<(IntPoly, GcdTrace), Error> {
    let prep = prepare(f, g)?;
    let mut trace = GcdTrace::new();
    if let Some(c) = constant_shortcut(&prep) {
        return Ok((c, trace));
    }
    let mut report = full_report(&prep.f1, &prep.g1)?;
    let k = report.k;
    let mut s = prep
        .f1
        .degree()
        .unwrap()
        .min(prep.g1.degree().unwrap());
    let mut shortcut = None;
    let mut q = Int::one();
    let mut i = 0;
    while i < k + 1 {
        q = next_prime_coprime(&q, &prep.w);
        let fq = reduce_poly(&prep.f1, &q)?;
        let gq = reduce_poly(&prep.g1, &q)?;
        if fq.is_zero() || gq.is_zero() {
            continue;
        }
        let e = euclid_gcd_mod(&fq, &gq)?;
        let deg = e.degree().expect("gcd of nonzero polynomials is nonzero");
        if deg <= s {
            s = deg;
        }
        if deg == 0 {
            trace.record(
                q.clone(),
                PrimeRole::Auxiliary,
                Some(0),
                PrimeAction::CoprimeWitness,
            );
            shortcut = Some(IntPoly::one());
            break;
        }
        trace.record(
            q.clone(),
            PrimeRole::Auxiliary,
            Some(deg),
            PrimeAction::DegreeEstimate,
        );
        i += 1;
    }
    report.s_deg = Some(s);
    trace.d_cutoff_history.push(s + 1);
    let d = match shortcut {
        Some(d) => {
            trace.bounds_used = Some(report);
            d
        }
        None => {
            let m_bound = bound_aux(&prep.f1, &prep.g1, s)?;
            report.m_bound = Some(m_bound.clone());
            let threshold = Int::from(2) * &m_bound;
            let cap = 10 * (k as usize + 1);
            trace.bounds_used = Some(report);
            run_main_loop(
                &prep.f1,
                &prep.g1,
                &prep.w,
                threshold,
                0,
                Acceptance::ExactDegree(s),
                cap,
                &mut trace,
                &mut |last: &Int| next_prime(last),
            )?
        }
    };
    Ok((d.scale(&prep.r), trace))
}

/// Decides coprimality with small primes only: a shared content answers
/// immediately, otherwise up to k+1 primes not dividing the gcd of the
/// original leading coefficients are scanned for a degree-zero modular gcd.
pub fn coprime_detect(f: &IntPoly, g: &IntPoly) -> Result<(bool, GcdTrace), Error> {
    let cf = f.content()?;
    let cg = g.content()?;
    let r = cf.gcd(&cg);
    let mut trace = GcdTrace::new();
    if !r.is_one() {
        return Ok((false, trace));
    }
    let w = f.leading_coeff()?.gcd(&g.leading_coeff()?);
    if f.degree() == Some(0) || g.degree() == Some(0) {
        return Ok((true, trace));
    }
    let f1 = f.primitive_part()?;
    let g1 = g.primitive_part()?;
    let report = full_report(&f1, &g1)?;
    let k = report.k;
    trace.bounds_used = Some(report);
    let mut q = Int::one();
    let mut i = 0;
    while i < k + 1 {
        q = next_prime_coprime(&q, &w);
        let fq = reduce_poly(&f1, &q)?;
        let gq = reduce_poly(&g1, &q)?;
        if fq.is_zero() || gq.is_zero() {
            continue;
        }
        let e = euclid_gcd_mod(&fq, &gq)?;
        let deg = e.degree().expect("gcd of nonzero polynomials is nonzero");
        if deg == 0 {
            trace.record(
                q.clone(),
                PrimeRole::Auxiliary,
                Some(0),
                PrimeAction::CoprimeWitness,
            );
            return Ok((true, trace));
        }
        trace.record(
            q.clone(),
            PrimeRole::Auxiliary,
            Some(deg),
            PrimeAction::DegreeEstimate,
        );
        i += 1;
    }
    Ok((false, trace))
}

/// Multiplies `g` by `x^k`.
fn shift(g: &IntPoly, k: usize) -> IntPoly {
    let mut coeffs = vec![Int::zero(); k];
    coeffs.extend_from_slice(g.coeffs());
    IntPoly::from_coeffs(coeffs)
}

/// Scalar-free remainder: repeatedly scales by the divisor's leading
/// coefficient and cancels the top term, so all arithmetic stays in Z[x].
/// The result is a scalar multiple of the true remainder.
fn pseudo_rem(f: &IntPoly, g: &IntPoly) -> IntPoly {
    let m = g.degree().expect("nonzero divisor");
    let g_lead = g.leading_coeff().expect("nonzero divisor");
    let mut rem = f.clone();
    while let Some(rd) = rem.degree() {
        if rd < m {
            break;
        }
        let r_lead = rem.leading_coeff().expect("nonzero");
        rem = rem.scale(&g_lead).sub(&shift(g, rd - m).scale(&r_lead));
    }
    rem
}

/// Classical gcd over Z[x] by the primitive remainder sequence; independent
/// of all modular machinery and used as ground truth in tests.
pub fn gcd_oracle(f: &IntPoly, g: &IntPoly) -> Result<IntPoly, Error> {
    Ok(gcd_oracle_metered(f, g)?.0)
}

/// As [`gcd_oracle`], additionally reporting the largest coefficient
/// bit-length among the raw pseudo-remainders.
pub(crate) fn gcd_oracle_metered(f: &IntPoly, g: &IntPoly) -> Result<(IntPoly, u64), Error> {
    let prep = prepare(f, g)?;
    let (mut a, mut b) = if prep.f1.degree() >= prep.g1.degree() {
        (prep.f1, prep.g1)
    } else {
        (prep.g1, prep.f1)
    };
    let mut max_bits = 0;
    while !b.is_zero() {
        let rem = pseudo_rem(&a, &b);
        max_bits = max_bits.max(rem.height().bits());
        a = b;
        b = if rem.is_zero() {
            IntPoly::zero()
        } else {
            rem.primitive_part()?
        };
    }
    Ok((a.scale(&prep.r), max_bits))
}

/// Runs the naive Euclidean remainder sequence over the rationals, recording
/// the degree and the largest numerator/denominator bit-length of every
/// remainder. Stops once a remainder is zero or constant.
pub fn swell_profile(f: &IntPoly, g: &IntPoly) -> Result<SwellProfile, Error> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.degree() < g.degree() {
        return Err(Error::DegreeOrder);
    }
    let mut a = to_rational(f);
    let mut b = to_rational(g);
    let mut steps = Vec::new();
    let mut index = 0;
    loop {
        index += 1;
        let rem = rational_rem(&a, &b);
        let degree = rem.len().checked_sub(1);
        steps.push(SwellStep {
            step: index,
            degree,
            max_bits: rational_max_bits(&rem),
        });
        match degree {
            None | Some(0) => break,
            _ => {
                a = b;
                b = rem;
            }
        }
    }
    Ok(SwellProfile { steps })
}

type RationalPoly = Vec<Ratio<Int>>;

fn to_rational(f: &IntPoly) -> RationalPoly {
    f.coeffs()
        .iter()
        .map(|c| Ratio::from_integer(c.clone()))
        .collect()
}

fn rational_rem(f: &RationalPoly, g: &RationalPoly) -> RationalPoly {
    let m = g.len() - 1;
    let g_lead = g.last().expect("nonzero divisor");
    let mut rem = f.clone();
    loop {
        while rem.last().is_some_and(Zero::is_zero) {
            rem.pop();
        }
        if rem.len() <= m {
            return rem;
        }
        let c = rem.last().expect("nonzero") / g_lead;
        let shift = rem.len() - 1 - m;
        for (j, b) in g.iter().enumerate() {
            let sub = &c * b;
            rem[shift + j] -= sub;
        }
    }
}

fn rational_max_bits(f: &RationalPoly) -> u64 {
    f.iter()
        .map(|c| c.numer().abs().bits().max(c.denom().bits()))
        .max()
        .unwrap_or(0)
}
