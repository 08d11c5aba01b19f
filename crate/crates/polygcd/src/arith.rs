//! Arbitrary-precision integer utilities: gcd, primality, prime enumeration,
//! primorials, and certified integer square-root ceilings.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::Error;

/// Signed arbitrary-precision integer used throughout the crate.
pub type Int = BigInt;

/// Miller-Rabin witnesses that make the test deterministic for all inputs
/// below 3\,317\,044\,064\,679\,887\,385\,961\,981.
const MR_WITNESSES: [u32; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Extra fixed witnesses applied above the proven threshold. Not a proof of
/// primality out there, but deterministic and far beyond any prime this
/// library selects on its own.
const MR_EXTRA_WITNESSES: [u32; 13] = [41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97];

/// Positive gcd of two integers.
pub fn int_gcd(a: &Int, b: &Int) -> Result<Int, Error> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::GcdBothZero);
    }
    Ok(a.gcd(b))
}

/// Deterministic primality test. Returns false for anything below 2.
pub fn is_prime(n: &Int) -> bool {
    let two = Int::from(2);
    if *n < two {
        return false;
    }
    for &w in &MR_WITNESSES {
        let w = Int::from(w);
        if *n == w {
            return true;
        }
        if (n % &w).is_zero() {
            return false;
        }
    }

    // n is odd here, so n - 1 has at least one factor of two.
    let n_minus_1: Int = n - Int::one();
    let r = n_minus_1.trailing_zeros().expect("nonzero");
    let d: Int = &n_minus_1 >> r;

    let proven_below: Int = "3317044064679887385961981".parse().expect("literal");
    let mut witnesses: Vec<Int> = MR_WITNESSES.iter().map(|&w| Int::from(w)).collect();
    if *n >= proven_below {
        witnesses.extend(MR_EXTRA_WITNESSES.iter().map(|&w| Int::from(w)));
    }

    'witness: for a in witnesses {
        if a >= *n {
            continue;
        }
        let mut x = a.modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 0..r - 1 {
            x = x.modpow(&two, n);
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Smallest prime strictly greater than `n`.
pub fn next_prime(n: &Int) -> Int {
    let two = Int::from(2);
    if *n < two {
        return two;
    }
    let mut candidate: Int = n + Int::one();
    if candidate.is_even() {
        candidate += 1;
    }
    while !is_prime(&candidate) {
        candidate += 2;
    }
    candidate
}

/// Smallest prime strictly greater than `n` that does not divide `w`.
pub fn next_prime_coprime(n: &Int, w: &Int) -> Int {
    debug_assert!(*w >= Int::one());
    let mut p = next_prime(n);
    while (w % &p).is_zero() {
        p = next_prime(&p);
    }
    p
}

/// Largest `k` such that the product of the first `k` primes is at most `a`.
/// Returns 0 when `a` is below 2.
pub fn primorial_k(a: &Int) -> u64 {
    debug_assert!(*a >= Int::one());
    let mut k = 0;
    let mut product = Int::one();
    let mut p = Int::from(2);
    loop {
        let grown = &product * &p;
        if grown > *a {
            return k;
        }
        product = grown;
        k += 1;
        p = next_prime(&p);
    }
}

/// Product of the first `k` primes.
pub fn primorial(k: u64) -> Int {
    let mut product = Int::one();
    let mut p = Int::from(2);
    for _ in 0..k {
        product *= &p;
        p = next_prime(&p);
    }
    product
}

/// Smallest integer `s` with `s*s >= n`. Requires `n >= 0`.
pub fn ceil_sqrt(n: &Int) -> Int {
    debug_assert!(!n.is_negative());
    let floor = n.sqrt();
    if &floor * &floor == *n {
        floor
    } else {
        floor + 1
    }
}

/// Ceiling of `a / b` for `a >= 0`, `b > 0`.
pub(crate) fn ceil_div(a: &Int, b: &Int) -> Int {
    debug_assert!(!a.is_negative() && b.is_positive());
    let (q, r) = a.div_rem(b);
    if r.is_zero() {
        q
    } else {
        q + 1
    }
}
