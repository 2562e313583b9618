//! Integer-side helpers: primality, valuations, factorization by trial
//! division, and squarefreeness checks with an explicit verification bound.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// Default bound on |m| up to which `is_squarefree` will certify an answer.
pub const DEFAULT_SQUAREFREE_BOUND: u64 = 1_000_000_000_000;

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn powmod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, m);
        }
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for u64 (the base set below is exact for all
/// 64-bit integers).
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d & 1 == 0 {
        d >>= 1;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Checks p for primality, mapping failure to `Error::NotPrime`.
pub fn ensure_prime(p: u64) -> Result<()> {
    if is_prime_u64(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// p-adic valuation of a nonzero integer; `None` encodes +infinity (n = 0).
pub fn int_valuation(n: &BigInt, p: u64) -> Option<u64> {
    if n.is_zero() {
        return None;
    }
    let p = BigInt::from(p);
    let mut n = n.clone();
    let mut v = 0u64;
    loop {
        let (q, r) = n.div_rem(&p);
        if r.is_zero() {
            v += 1;
            n = q;
        } else {
            return Some(v);
        }
    }
}

/// Distinct prime factors of |n| found by trial division, plus the unfactored
/// cofactor (1 when the factorization is complete). Primes are probed up to
/// `limit`; a remaining cofactor that passes the u64 primality test is also
/// taken as a prime.
pub fn trial_factor(n: &BigInt, limit: u64) -> (Vec<u64>, BigInt) {
    let mut n = n.abs();
    let mut primes = Vec::new();
    if n.is_zero() {
        return (primes, n);
    }
    let mut p = 2u64;
    while p <= limit {
        let bp = BigInt::from(p);
        if (&n % &bp).is_zero() {
            primes.push(p);
            while (&n % &bp).is_zero() {
                n /= &bp;
            }
        }
        // Stop early once the cofactor cannot have a factor <= p.
        if BigInt::from(p) * BigInt::from(p) > n {
            break;
        }
        p = if p == 2 { 3 } else { p + 2 };
    }
    if n > BigInt::from(1u32) {
        if let Ok(small) = u64::try_from(&n) {
            if is_prime_u64(small) {
                primes.push(small);
                n = BigInt::from(1u32);
            }
        }
    }
    primes.sort_unstable();
    (primes, n)
}

fn integer_sqrt(n: &BigInt) -> BigInt {
    n.sqrt()
}

/// Whether no prime square divides m. Only certified for |m| up to `bound`
/// (trial division up to the cube root plus a perfect-square test on the
/// cofactor); larger inputs produce an explicit error rather than a guess.
pub fn is_squarefree(m: &BigInt, bound: u64) -> Result<bool> {
    if m.is_zero() {
        return Ok(false);
    }
    let a = m.abs();
    if a > BigInt::from(bound) {
        return Err(Error::SquarefreeUnverifiable(m.clone(), bound));
    }
    let mut n = a;
    let mut p = 2u64;
    loop {
        let bp = BigInt::from(p);
        if &bp * &bp * &bp > n {
            break;
        }
        if (&n % &bp).is_zero() {
            n /= &bp;
            if (&n % &bp).is_zero() {
                return Ok(false);
            }
        }
        p = if p == 2 { 3 } else { p + 2 };
    }
    // n now has no prime factor below its cube root, so it is 1, a prime,
    // a product of two distinct primes, or a prime square.
    let r = integer_sqrt(&n);
    Ok(&r * &r != n || n == BigInt::from(1u32))
}

/// Extended gcd on i128: returns (g, x, y) with a*x + b*y = g.
pub fn extended_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = extended_gcd(b, a.rem_euclid(b));
        (g, y, x - (a / b) * y)
    }
}

/// Modular inverse of a mod m (m > 1, gcd(a, m) = 1).
pub fn inv_mod_u64(a: u64, m: u64) -> u64 {
    let (g, x, _) = extended_gcd(a as i128, m as i128);
    debug_assert_eq!(g, 1, "inverse of non-unit");
    x.rem_euclid(m as i128) as u64
}

/// Moebius function of a small positive integer.
pub fn moebius(n: u64) -> i64 {
    let mut n = n;
    let mut mu = 1i64;
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            mu = -mu;
        }
        p = if p == 2 { 3 } else { p + 2 };
    }
    if n > 1 {
        mu = -mu;
    }
    mu
}
