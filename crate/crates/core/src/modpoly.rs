//! Polynomials over the prime field F_p, p < 2^63.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::arith::{ensure_prime, inv_mod_u64};
use crate::error::Result;
use crate::intpoly::IntPoly;

/// Dense polynomial over F_p; `coeffs[i]` in [0, p) is the coefficient of
/// x^i, top coefficient nonzero unless zero polynomial.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ModPoly {
    p: u64,
    coeffs: Vec<u64>,
}

impl ModPoly {
    /// Construction validates primality of p once; arithmetic then stays on
    /// the unchecked internal path.
    pub fn new(p: u64, coeffs: Vec<u64>) -> Result<Self> {
        ensure_prime(p)?;
        Ok(Self::raw(p, coeffs.into_iter().map(|c| c % p).collect()))
    }

    pub(crate) fn raw(p: u64, mut coeffs: Vec<u64>) -> Self {
        debug_assert!(coeffs.iter().all(|&c| c < p));
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { p, coeffs }
    }

    /// Reduction of an integer polynomial mod p.
    pub fn from_intpoly(p: u64, f: &IntPoly) -> Result<Self> {
        ensure_prime(p)?;
        let bp = BigInt::from(p);
        Ok(Self::raw(
            p,
            f.coeffs()
                .iter()
                .map(|c| c.mod_floor(&bp).to_u64().unwrap())
                .collect(),
        ))
    }

    pub fn zero(p: u64) -> Self {
        Self {
            p,
            coeffs: Vec::new(),
        }
    }

    pub fn one(p: u64) -> Self {
        Self::raw(p, vec![1])
    }

    pub fn constant(p: u64, c: u64) -> Self {
        Self::raw(p, vec![c % p])
    }

    pub fn x(p: u64) -> Self {
        Self::raw(p, vec![0, 1])
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<u64> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Some(1)
    }

    fn mulmod(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.p, other.p);
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::raw(
            self.p,
            (0..n)
                .map(|i| {
                    let s = self.coeff(i) + other.coeff(i);
                    if s >= self.p {
                        s - self.p
                    } else {
                        s
                    }
                })
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.p, other.p);
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::raw(
            self.p,
            (0..n)
                .map(|i| {
                    let (a, b) = (self.coeff(i), other.coeff(i));
                    if a >= b {
                        a - b
                    } else {
                        a + self.p - b
                    }
                })
                .collect(),
        )
    }

    pub fn neg(&self) -> Self {
        Self::raw(
            self.p,
            self.coeffs
                .iter()
                .map(|&c| if c == 0 { 0 } else { self.p - c })
                .collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.p, other.p);
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.p);
        }
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                let t = (out[i + j] as u128 + a as u128 * b as u128) % self.p as u128;
                out[i + j] = t as u64;
            }
        }
        Self::raw(self.p, out)
    }

    pub fn scale(&self, c: u64) -> Self {
        let c = c % self.p;
        Self::raw(
            self.p,
            self.coeffs.iter().map(|&a| self.mulmod(a, c)).collect(),
        )
    }

    pub fn make_monic(&self) -> (u64, Self) {
        match self.leading() {
            None | Some(1) => (1, self.clone()),
            Some(lc) => (lc, self.scale(inv_mod_u64(lc, self.p))),
        }
    }

    pub fn divrem(&self, b: &Self) -> (Self, Self) {
        debug_assert_eq!(self.p, b.p);
        assert!(!b.is_zero(), "division by zero polynomial");
        let db = b.degree().unwrap();
        let lead_inv = inv_mod_u64(b.leading().unwrap(), self.p);
        let mut rem = self.coeffs.clone();
        if rem.len() <= db {
            return (Self::zero(self.p), self.clone());
        }
        let mut quot = vec![0u64; rem.len() - db];
        for i in (db..rem.len()).rev() {
            let q = self.mulmod(rem[i], lead_inv);
            rem[i] = 0;
            if q == 0 {
                continue;
            }
            for (j, &bc) in b.coeffs.iter().enumerate().take(db) {
                let t = self.mulmod(bc, q);
                let cur = rem[i - db + j];
                rem[i - db + j] = if cur >= t { cur - t } else { cur + self.p - t };
            }
            quot[i - db] = q;
        }
        rem.truncate(db);
        (Self::raw(self.p, quot), Self::raw(self.p, rem))
    }

    pub fn rem(&self, b: &Self) -> Self {
        self.divrem(b).1
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.rem(self).is_zero()
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.make_monic().1
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero(self.p);
        }
        Self::raw(
            self.p,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| self.mulmod(c, i as u64 % self.p))
                .collect(),
        )
    }

    /// self^exp mod modulus, exponent given by its big-endian bits.
    pub fn pow_mod(&self, exp: &num_bigint::BigUint, modulus: &Self) -> Self {
        let mut acc = Self::one(self.p);
        let base = self.rem(modulus);
        let bits = exp.bits();
        for i in (0..bits).rev() {
            acc = acc.mul(&acc).rem(modulus);
            if exp.bit(i) {
                acc = acc.mul(&base).rem(modulus);
            }
        }
        acc
    }

    pub fn eval(&self, x: u64) -> u64 {
        let mut acc = 0u64;
        for &c in self.coeffs.iter().rev() {
            acc = (self.mulmod(acc, x) + c) % self.p;
        }
        acc
    }

    /// Lift with coefficients in [0, p).
    pub fn lift_nonneg(&self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Lift with coefficients in (-p/2, p/2]; reproduces the usual compact
    /// representatives, e.g. x^2+x-1 rather than x^2+x+2 for p = 3.
    pub fn lift_symmetric(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .map(|&c| {
                    if 2 * c > self.p {
                        BigInt::from(c) - BigInt::from(self.p)
                    } else {
                        BigInt::from(c)
                    }
                })
                .collect(),
        )
    }

    /// Strictly for canonical ordering of factor lists: degree first, then
    /// coefficient lists from the top down.
    pub(crate) fn cmp_canonical(&self, other: &Self) -> std::cmp::Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl fmt::Display for ModPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.lift_nonneg())
    }
}

impl fmt::Debug for ModPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ModPoly({} mod {})", self.lift_nonneg(), self.p)
    }
}
