//! Factorization of univariate polynomials over F_p and over F_phi, plus the
//! count of monic irreducibles of a given degree.
//!
//! Squarefree decomposition, then distinct-degree splitting, then
//! Cantor-Zassenhaus equal-degree splitting (trace map in characteristic 2).
//! The splitting randomness is seedable and defaults to a fixed seed; output
//! order is canonical (degree, then coefficient lists) regardless of seed.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::moebius;
use crate::error::{Error, Result};
use crate::extfield::{ExtField, ExtPoly};
use crate::modpoly::ModPoly;

/// Seed used when the caller does not supply one.
pub const DEFAULT_FACTOR_SEED: u64 = 0x0e5a11;

/// Factorization of a polynomial over F_p into monic irreducibles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModFactorization {
    /// Leading unit so that unit * prod(factor^exp) reproduces the input.
    pub unit: u64,
    pub factors: Vec<(ModPoly, u32)>,
}

/// Factorization over F_phi; the unit is returned separately.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtFactorization {
    pub unit: crate::extfield::ExtElem,
    pub factors: Vec<(ExtPoly, u32)>,
}

pub fn factor_mod_p(f: &ModPoly) -> Result<ModFactorization> {
    factor_mod_p_seeded(f, DEFAULT_FACTOR_SEED)
}

pub fn factor_mod_p_seeded(f: &ModPoly, seed: u64) -> Result<ModFactorization> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let p = f.modulus();
    let field = ExtField::prime_field(p)?;
    let lifted = ExtPoly::raw(
        field.clone(),
        f.coeffs()
            .iter()
            .map(|&c| ModPoly::constant(p, c))
            .collect(),
    );
    let ext = factor_over_ext_seeded(&lifted, seed)?;
    let unit = ext.unit.value().coeff(0);
    let factors = ext
        .factors
        .into_iter()
        .map(|(g, e)| {
            let coeffs = (0..=g.degree().unwrap_or(0))
                .map(|i| g.coeff(i).value().coeff(0))
                .collect();
            (ModPoly::raw(p, coeffs), e)
        })
        .collect();
    Ok(ModFactorization { unit, factors })
}

pub fn factor_over_ext(g: &ExtPoly) -> Result<ExtFactorization> {
    factor_over_ext_seeded(g, DEFAULT_FACTOR_SEED)
}

pub fn factor_over_ext_seeded(g: &ExtPoly, seed: u64) -> Result<ExtFactorization> {
    if g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (unit, monic) = g.make_monic();
    let mut factors: Vec<(ExtPoly, u32)> = Vec::new();
    if monic.degree() == Some(0) {
        return Ok(ExtFactorization { unit, factors });
    }
    for (part, mult) in squarefree_decomposition(&monic) {
        for (deg, product) in distinct_degree_split(&part) {
            for irred in equal_degree_split(&product, deg, &mut rng) {
                factors.push((irred, mult));
            }
        }
    }
    factors.sort_by(|a, b| a.0.cmp_canonical(&b.0));
    Ok(ExtFactorization { unit, factors })
}

/// Monic squarefree parts with multiplicities; prod part^mult = f.
fn squarefree_decomposition(f: &ExtPoly) -> Vec<(ExtPoly, u32)> {
    let field = f.field().clone();
    let p = field.p();
    let mut out = Vec::new();
    let deriv = f.derivative();
    if deriv.is_zero() {
        // f = g^p; pull out the p-th root and recurse.
        let root = pth_root(f);
        for (g, m) in squarefree_decomposition(&root) {
            out.push((g, m * p as u32));
        }
        return out;
    }
    let mut c = f.gcd(&deriv);
    let mut w = f.divrem(&c).0;
    let mut i = 1u32;
    while w.degree() != Some(0) {
        let y = w.gcd(&c);
        let z = w.divrem(&y).0;
        if z.degree().is_some_and(|d| d > 0) {
            out.push((z, i));
        }
        i += 1;
        c = c.divrem(&y).0;
        w = y;
    }
    if c.degree().is_some_and(|d| d > 0) {
        let root = pth_root(&c);
        for (g, m) in squarefree_decomposition(&root) {
            out.push((g, m * p as u32));
        }
    }
    out
}

/// For f with vanishing derivative (all exponents divisible by p), the unique
/// g with g^p = f. Coefficient-wise inverse Frobenius is the power q/p.
fn pth_root(f: &ExtPoly) -> ExtPoly {
    let field = f.field().clone();
    let p = field.p() as usize;
    let inv_frob = field.order() / BigUint::from(field.p());
    let deg = f.degree().unwrap();
    debug_assert_eq!(deg % p, 0);
    let coeffs = (0..=deg / p)
        .map(|i| frob_power(&f.coeff(i * p), &inv_frob).value().clone())
        .collect();
    ExtPoly::raw(field, coeffs)
}

fn frob_power(e: &crate::extfield::ExtElem, exp: &BigUint) -> crate::extfield::ExtElem {
    let field = e.field().clone();
    if e.is_zero() {
        return field.zero();
    }
    let mut acc = field.one();
    let base = e.clone();
    for i in (0..exp.bits()).rev() {
        acc = acc.mul(&acc);
        if exp.bit(i) {
            acc = acc.mul(&base);
        }
    }
    acc
}

/// Splits a monic squarefree f into (d, product of all irreducible factors of
/// degree d).
fn distinct_degree_split(f: &ExtPoly) -> Vec<(usize, ExtPoly)> {
    let field = f.field().clone();
    let q = field.order();
    let y = ExtPoly::y(field.clone());
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut h = y.clone();
    let mut d = 0usize;
    while rest.degree().map_or(0, |n| n) >= 2 * (d + 1) {
        d += 1;
        h = h.pow_mod(&q, &rest);
        let g = rest.gcd(&h.sub(&y));
        if g.degree().is_some_and(|n| n > 0) {
            out.push((d, g.clone()));
            rest = rest.divrem(&g).0;
            h = h.rem(&rest);
        }
    }
    if rest.degree().is_some_and(|n| n > 0) {
        out.push((rest.degree().unwrap(), rest));
    }
    out
}

/// Cantor-Zassenhaus split of a monic squarefree product of degree-d
/// irreducibles into the irreducibles themselves.
fn equal_degree_split(f: &ExtPoly, d: usize, rng: &mut ChaCha8Rng) -> Vec<ExtPoly> {
    let n = f.degree().unwrap();
    if n == d {
        return vec![f.clone()];
    }
    let field = f.field().clone();
    let q = field.order();
    loop {
        let a = random_poly(&field, n, rng);
        if a.degree().is_none_or(|da| da < 1) {
            continue;
        }
        let g = f.gcd(&a);
        let candidate = if g.degree().is_some_and(|dg| dg > 0 && dg < n) {
            Some(g)
        } else if field.p() == 2 {
            // Trace over F_2: sum of a^(2^i) for i < k*d.
            let k = field.ext_degree();
            let mut tr = ExtPoly::zero(field.clone());
            let mut cur = a.rem(f);
            for _ in 0..k * d {
                tr = tr.add(&cur);
                cur = cur.mul(&cur).rem(f);
            }
            let g = f.gcd(&tr);
            g.degree().filter(|&dg| dg > 0 && dg < n).map(|_| g)
        } else {
            let exp = (q.pow(d as u32) - BigUint::one()) / BigUint::from(2u32);
            let b = a.pow_mod(&exp, f);
            let g = f.gcd(&b.sub(&ExtPoly::one(field.clone())));
            g.degree().filter(|&dg| dg > 0 && dg < n).map(|_| g)
        };
        if let Some(g) = candidate {
            let rest = f.divrem(&g).0;
            let mut out = equal_degree_split(&g, d, rng);
            out.extend(equal_degree_split(&rest, d, rng));
            return out;
        }
    }
}

fn random_poly(field: &ExtField, max_deg: usize, rng: &mut ChaCha8Rng) -> ExtPoly {
    let p = field.p();
    let k = field.ext_degree();
    let coeffs = (0..max_deg)
        .map(|_| ModPoly::raw(p, (0..k).map(|_| rng.gen_range(0..p)).collect()))
        .collect();
    ExtPoly::raw(field.clone(), coeffs)
}

/// Number of monic irreducible polynomials of degree f over F_p, by the
/// necklace-counting formula sum_{d | f} mu(d) p^(f/d) / f.
pub fn count_monic_irreducibles(p: u64, f: u32) -> Result<BigUint> {
    crate::arith::ensure_prime(p)?;
    if f == 0 {
        return Err(Error::OutOfRange("degree must be positive".into()));
    }
    let mut sum = BigInt::zero();
    for d in 1..=f {
        if f.is_multiple_of(d) {
            let mu = moebius(d as u64);
            if mu != 0 {
                let term = BigInt::from(p).pow(f / d);
                sum += BigInt::from(mu) * term;
            }
        }
    }
    let (q, r) = sum.div_rem(&BigInt::from(f));
    debug_assert!(r.is_zero());
    debug_assert!(!q.is_negative());
    Ok(q.to_biguint().unwrap())
}
