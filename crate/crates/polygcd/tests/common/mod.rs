//! Deterministic randomized suites shared by the property and acceptance
//! test targets. Each suite returns the number of checked cases.

use num_integer::Integer;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use polygcd::arith::{next_prime, Int};
use polygcd::bounds::{bound_pair, bound_single};
use polygcd::gcdalgs::{
    coprime_detect, gcd_aux_prime, gcd_big_prime, gcd_multi_aux, gcd_oracle, GcdTrace,
    PrimeAction, PrimeRole,
};
use polygcd::modpoly::{euclid_gcd_mod, reduce_poly};
use polygcd::polyz::IntPoly;
use polygcd::reconstruct::reconstruct_poly;
use polygcd::sylvester::resultant;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform coefficients in `[-bound, bound]`, leading coefficient nonzero,
/// so the degree is exact.
pub fn poly_exact_degree(rng: &mut ChaCha8Rng, degree: usize, bound: i64) -> IntPoly {
    let mut coeffs: Vec<Int> = (0..=degree)
        .map(|_| Int::from(rng.random_range(-bound..=bound)))
        .collect();
    while coeffs[degree].is_zero() {
        coeffs[degree] = Int::from(rng.random_range(-bound..=bound));
    }
    IntPoly::from_coeffs(coeffs)
}

/// Samples a polynomial whose exact degree is uniform in `[lo, hi]`.
pub fn poly_degree_in(rng: &mut ChaCha8Rng, lo: usize, hi: usize, bound: i64) -> IntPoly {
    let degree = rng.random_range(lo..=hi);
    poly_exact_degree(rng, degree, bound)
}

/// Any polynomial up to `max_degree` with at least one nonzero coefficient.
pub fn poly_nonzero(rng: &mut ChaCha8Rng, max_degree: usize, bound: i64) -> IntPoly {
    loop {
        let len = rng.random_range(1..=max_degree + 1);
        let coeffs: Vec<Int> = (0..len)
            .map(|_| Int::from(rng.random_range(-bound..=bound)))
            .collect();
        let f = IntPoly::from_coeffs(coeffs);
        if !f.is_zero() {
            return f;
        }
    }
}

fn knuth_pair() -> (IntPoly, IntPoly) {
    (
        IntPoly::from_i64(&[-5, 2, 8, -3, -3, 0, 1, 0, 1]),
        IntPoly::from_i64(&[21, -9, -4, 0, 5, 0, 3]),
    )
}

/// Divisor coefficients of constructed factorizations stay within the
/// single-input bound, and the scalar fold used by reconstruction stays
/// within the pair bound.
pub fn suite_divisor_coefficient_bounds() -> usize {
    let mut rng = rng(101);
    let mut cases = 0;
    while cases < 1000 {
        let d = poly_degree_in(&mut rng, 0, 3, 9);
        let u = poly_degree_in(&mut rng, 0, 3, 9);
        let v = poly_degree_in(&mut rng, 0, 3, 9);
        let f = d.mul(&u);
        let g = d.mul(&v);
        if f.degree() == Some(0) || g.degree() == Some(0) {
            continue;
        }
        let nf = bound_single(&f).unwrap();
        for h in [&d, &u] {
            for c in h.coeffs() {
                assert!(c.abs() <= nf, "divisor coefficient exceeds single bound");
            }
        }
        let ng = bound_single(&g).unwrap();
        for h in [&d, &v] {
            for c in h.coeffs() {
                assert!(c.abs() <= ng, "divisor coefficient exceeds single bound");
            }
        }
        let nfg = bound_pair(&f, &g).unwrap();
        let w = f
            .leading_coeff()
            .unwrap()
            .abs()
            .gcd(&g.leading_coeff().unwrap().abs());
        let fold = &w / d.leading_coeff().unwrap().abs();
        for c in d.coeffs() {
            assert!(c.abs() <= nfg, "common divisor exceeds pair bound");
            assert!(c.abs() * &fold <= nfg, "folded divisor exceeds pair bound");
        }
        cases += 1;
    }
    cases
}

/// The resultant vanishes exactly when the gcd is nonconstant.
pub fn suite_resultant_coprimality() -> usize {
    let mut rng = rng(202);
    let mut cases = 0;
    while cases < 1000 {
        let (f, g) = if rng.random_bool(0.5) {
            let d = poly_degree_in(&mut rng, 1, 2, 5);
            let u = poly_degree_in(&mut rng, 1, 3, 5);
            let v = poly_degree_in(&mut rng, 1, 3, 5);
            (d.mul(&u), d.mul(&v))
        } else {
            (
                poly_degree_in(&mut rng, 1, 4, 9),
                poly_degree_in(&mut rng, 1, 4, 9),
            )
        };
        let res = resultant(&f, &g).unwrap();
        let d0 = gcd_oracle(&f, &g).unwrap();
        assert_eq!(
            res.is_zero(),
            d0.degree().unwrap() >= 1,
            "resultant zero must coincide with a nonconstant gcd"
        );
        cases += 1;
    }
    cases
}

/// At every prime up to 100 dividing neither the leading-coefficient gcd
/// nor the cofactor resultant, the modular gcd degree equals the true gcd
/// degree.
pub fn suite_modular_degree_equality() -> usize {
    let small_primes: Vec<Int> = [
        2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83,
        89, 97,
    ]
    .iter()
    .map(|&p| Int::from(p))
    .collect();
    let mut rng = rng(303);
    let mut checks = 0;
    let mut triples = 0;
    while triples < 200 {
        let d = poly_degree_in(&mut rng, 1, 3, 9);
        let u = poly_degree_in(&mut rng, 1, 3, 9);
        let v = poly_degree_in(&mut rng, 1, 3, 9);
        let f1 = d.mul(&u).primitive_part().unwrap();
        let g1 = d.mul(&v).primitive_part().unwrap();
        let gcd = gcd_oracle(&f1, &g1).unwrap();
        let s = gcd.degree().unwrap();
        let cf = f1.divide_exact(&gcd).unwrap().unwrap();
        let cg = g1.divide_exact(&gcd).unwrap().unwrap();
        if cf.degree() == Some(0) && cg.degree() == Some(0) {
            continue;
        }
        let res = resultant(&cf, &cg).unwrap();
        assert!(!res.is_zero(), "cofactors of the gcd must be coprime");
        let w = f1
            .leading_coeff()
            .unwrap()
            .gcd(&g1.leading_coeff().unwrap());
        for p in &small_primes {
            if (&w % p).is_zero() || (&res % p).is_zero() {
                continue;
            }
            let e = euclid_gcd_mod(
                &reduce_poly(&f1, p).unwrap(),
                &reduce_poly(&g1, p).unwrap(),
            )
            .unwrap();
            assert_eq!(e.degree(), Some(s), "modular gcd degree mismatch at {p}");
            checks += 1;
        }
        triples += 1;
    }
    assert!(checks >= 1000);
    checks
}

/// Reduction followed by the symmetric lift is the identity once the prime
/// exceeds twice the height.
pub fn suite_reconstruction_round_trip() -> usize {
    let mut rng = rng(404);
    let mut cases = 0;
    for _ in 0..1000 {
        let f = poly_nonzero(&mut rng, 8, 50);
        let mut p = next_prime(&(Int::from(2) * f.height()));
        for _ in 0..4 {
            let lifted = reconstruct_poly(&reduce_poly(&f, &p).unwrap()).unwrap();
            assert_eq!(lifted, f, "round trip failed at {p}");
            p = next_prime(&p);
        }
        cases += 1;
    }
    cases
}

fn mixed_pair(rng: &mut ChaCha8Rng, allow_constant: bool) -> (IntPoly, IntPoly) {
    let styles = if allow_constant { 4 } else { 3 };
    match rng.random_range(0..styles) {
        0 => (
            poly_degree_in(rng, 1, 5, 9),
            poly_degree_in(rng, 1, 5, 9),
        ),
        1 => {
            let d = poly_degree_in(rng, 1, 2, 6);
            let u = poly_degree_in(rng, 0, 3, 6);
            let v = poly_degree_in(rng, 0, 3, 6);
            (d.mul(&u), d.mul(&v))
        }
        2 => {
            let c = Int::from(rng.random_range(1..=6_i64));
            let e = Int::from(rng.random_range(1..=6_i64));
            (
                poly_degree_in(rng, 1, 4, 9).scale(&c),
                poly_degree_in(rng, 1, 4, 9).scale(&e),
            )
        }
        _ => (
            IntPoly::constant(Int::from(rng.random_range(1..=20_i64))),
            poly_degree_in(rng, 0, 4, 9),
        ),
    }
}

/// Every modular algorithm agrees with the classical oracle, the result
/// divides both inputs, carries the content gcd, and the coprimality test
/// answers exactly "gcd = 1".
pub fn suite_algorithm_agreement() -> usize {
    let mut rng = rng(505);
    let mut cases = 0;
    while cases < 1000 {
        let (f, g) = mixed_pair(&mut rng, true);
        let d0 = gcd_oracle(&f, &g).unwrap();
        assert_eq!(gcd_big_prime(&f, &g).unwrap().0, d0);
        assert_eq!(gcd_aux_prime(&f, &g).unwrap().0, d0);
        assert_eq!(gcd_multi_aux(&f, &g).unwrap().0, d0);
        assert!(f.divide_exact(&d0).unwrap().is_some());
        assert!(g.divide_exact(&d0).unwrap().is_some());
        assert!(d0.leading_coeff().unwrap().is_positive());
        assert_eq!(
            d0.content().unwrap(),
            f.content().unwrap().gcd(&g.content().unwrap())
        );
        let (answer, _) = coprime_detect(&f, &g).unwrap();
        assert_eq!(answer, d0 == IntPoly::one());
        cases += 1;
    }
    cases
}

fn assert_budget(trace: &GcdTrace) {
    let bounds = trace.bounds_used.as_ref().expect("nonconstant inputs");
    let accepted = trace
        .attempts
        .iter()
        .filter(|a| a.action == PrimeAction::Accepted)
        .count();
    let rejected_main = trace.total_main_primes - accepted;
    assert!(
        rejected_main as u64 <= bounds.k,
        "rejected {rejected_main} main primes with budget {}",
        bounds.k
    );
    let aux = trace
        .attempts
        .iter()
        .filter(|a| a.role == PrimeRole::Auxiliary)
        .count();
    assert!(aux as u64 <= bounds.k + 1);
}

/// No run ever rejects more main primes than the primorial budget `k`
/// allows, and the classic pair stays within its printed cycle count.
pub fn suite_prime_budget() -> usize {
    let mut rng = rng(606);
    let mut cases = 0;
    while cases < 1000 {
        let (f, g) = mixed_pair(&mut rng, false);
        if f.degree() == Some(0) || g.degree() == Some(0) {
            continue;
        }
        assert_budget(&gcd_big_prime(&f, &g).unwrap().1);
        assert_budget(&gcd_aux_prime(&f, &g).unwrap().1);
        assert_budget(&gcd_multi_aux(&f, &g).unwrap().1);
        cases += 1;
    }
    let (kf, kg) = knuth_pair();
    for trace in [
        gcd_big_prime(&kf, &kg).unwrap().1,
        gcd_aux_prime(&kf, &kg).unwrap().1,
        gcd_multi_aux(&kf, &kg).unwrap().1,
    ] {
        assert!(trace.attempts.len() <= 31);
    }
    cases
}
