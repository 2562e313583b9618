//! The residue field `F_phi = F_p[x]/(phibar)` and polynomials over it.
//!
//! Elements are polynomials of degree < deg(phibar); the defining modulus is
//! checked irreducible on construction. Residual polynomials of Newton
//! polygon sides live in `F_phi[y]`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::arith::inv_mod_u64;
use crate::error::{Error, Result};
use crate::modpoly::ModPoly;

/// `F_p[x]/(phibar)` with phibar monic irreducible over F_p.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExtField {
    modulus: ModPoly,
}

impl ExtField {
    pub fn new(modulus: ModPoly) -> Result<Self> {
        if !modulus.is_monic() || modulus.degree() == Some(0) {
            return Err(Error::ReducibleModulus {
                p: modulus.modulus(),
                modulus: modulus.to_string(),
            });
        }
        if !is_irreducible(&modulus) {
            return Err(Error::ReducibleModulus {
                p: modulus.modulus(),
                modulus: modulus.to_string(),
            });
        }
        Ok(Self { modulus })
    }

    /// The prime field itself, presented as `F_p[x]/(x)`.
    pub fn prime_field(p: u64) -> Result<Self> {
        Ok(Self {
            modulus: ModPoly::new(p, vec![0, 1])?,
        })
    }

    pub fn p(&self) -> u64 {
        self.modulus.modulus()
    }

    pub fn modulus(&self) -> &ModPoly {
        &self.modulus
    }

    pub fn ext_degree(&self) -> usize {
        self.modulus.degree().unwrap()
    }

    /// Field order p^k.
    pub fn order(&self) -> BigUint {
        BigUint::from(self.p()).pow(self.ext_degree() as u32)
    }

    pub fn reduce(&self, value: &ModPoly) -> ExtElem {
        ExtElem {
            field: self.clone(),
            value: value.rem(&self.modulus),
        }
    }

    pub fn zero(&self) -> ExtElem {
        self.reduce(&ModPoly::zero(self.p()))
    }

    pub fn one(&self) -> ExtElem {
        self.reduce(&ModPoly::one(self.p()))
    }

    pub fn from_u64(&self, c: u64) -> ExtElem {
        self.reduce(&ModPoly::constant(self.p(), c))
    }

    /// The class of x.
    pub fn gen(&self) -> ExtElem {
        self.reduce(&ModPoly::x(self.p()))
    }

    /// All field elements, in canonical order. Only sensible for small fields
    /// (used by test oracles doing exhaustive root searches).
    pub fn elements(&self) -> Vec<ExtElem> {
        let p = self.p();
        let k = self.ext_degree();
        let mut out = Vec::new();
        let total = (p as u128).pow(k as u32);
        for idx in 0..total {
            let mut digits = Vec::with_capacity(k);
            let mut n = idx;
            for _ in 0..k {
                digits.push((n % p as u128) as u64);
                n /= p as u128;
            }
            out.push(self.reduce(&ModPoly::raw(p, digits)));
        }
        out
    }
}

impl fmt::Debug for ExtField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}[x]/({})", self.p(), self.modulus)
    }
}

/// Monic irreducibility over F_p by Rabin's test: `x^(p^n) = x mod f`, and
/// `x^(p^(n/q)) - x` coprime to f for every prime q | n.
pub fn is_irreducible(f: &ModPoly) -> bool {
    let n = match f.degree() {
        Some(n) if n >= 1 => n,
        _ => return false,
    };
    if n == 1 {
        return true;
    }
    let p = f.modulus();
    let x = ModPoly::x(p);
    let q_to = |e: usize| BigUint::from(p).pow(e as u32);
    if x.pow_mod(&q_to(n), f) != x.rem(f) {
        return false;
    }
    let mut m = n;
    let mut prime_divs = Vec::new();
    let mut d = 2;
    while d * d <= m {
        if m % d == 0 {
            prime_divs.push(d);
            while m % d == 0 {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        prime_divs.push(m);
    }
    for q in prime_divs {
        let h = x.pow_mod(&q_to(n / q), f).sub(&x.rem(f));
        if f.gcd(&h).degree() != Some(0) {
            return false;
        }
    }
    true
}

/// An element of F_phi, carrying its field for mismatch detection.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExtElem {
    field: ExtField,
    value: ModPoly,
}

impl ExtElem {
    pub fn field(&self) -> &ExtField {
        &self.field
    }

    pub fn value(&self) -> &ModPoly {
        &self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.field, other.field, "mixed extension fields");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check(other);
        Self {
            field: self.field.clone(),
            value: self.value.add(&other.value),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check(other);
        Self {
            field: self.field.clone(),
            value: self.value.sub(&other.value),
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            field: self.field.clone(),
            value: self.value.neg(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check(other);
        self.field.reduce(&self.value.mul(&other.value))
    }

    /// Multiplicative inverse by extended Euclid in `F_p[x]`.
    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        let p = self.field.p();
        // Extended Euclid on (value, modulus).
        let (mut r0, mut r1) = (self.value.clone(), self.field.modulus.clone());
        let (mut s0, mut s1) = (ModPoly::one(p), ModPoly::zero(p));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let s = s0.sub(&q.mul(&s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        // r0 is a nonzero constant gcd.
        let c = inv_mod_u64(r0.leading().unwrap(), p);
        self.field.reduce(&s0.scale(c))
    }
}

impl fmt::Display for ExtElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl fmt::Debug for ExtElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExtElem({} in {:?})", self.value, self.field)
    }
}

/// Polynomial in y over F_phi; all coefficients share one field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExtPoly {
    field: ExtField,
    coeffs: Vec<ModPoly>, // each reduced mod phibar
}

impl ExtPoly {
    /// Builds from explicit elements, rejecting coefficients from different
    /// fields.
    pub fn new(field: ExtField, coeffs: Vec<ExtElem>) -> Result<Self> {
        for c in &coeffs {
            if c.field != field {
                return Err(Error::FieldMismatch);
            }
        }
        Ok(Self::raw(
            field,
            coeffs.into_iter().map(|c| c.value).collect(),
        ))
    }

    pub(crate) fn raw(field: ExtField, mut coeffs: Vec<ModPoly>) -> Self {
        while coeffs.last().is_some_and(ModPoly::is_zero) {
            coeffs.pop();
        }
        Self { field, coeffs }
    }

    pub fn zero(field: ExtField) -> Self {
        Self {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: ExtField) -> Self {
        let one = ModPoly::one(field.p());
        Self::raw(field, vec![one])
    }

    pub fn constant(elem: ExtElem) -> Self {
        Self::raw(elem.field, vec![elem.value])
    }

    /// The variable y.
    pub fn y(field: ExtField) -> Self {
        let p = field.p();
        Self::raw(field, vec![ModPoly::zero(p), ModPoly::one(p)])
    }

    pub fn field(&self) -> &ExtField {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> ExtElem {
        ExtElem {
            field: self.field.clone(),
            value: self
                .coeffs
                .get(i)
                .cloned()
                .unwrap_or_else(|| ModPoly::zero(self.field.p())),
        }
    }

    pub fn coeffs(&self) -> Vec<ExtElem> {
        (0..self.coeffs.len()).map(|i| self.coeff(i)).collect()
    }

    pub fn leading(&self) -> Option<ExtElem> {
        self.degree().map(|d| self.coeff(d))
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs
            .last()
            .is_some_and(|c| c.degree() == Some(0) && c.coeff(0) == 1)
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.field, other.field);
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = ModPoly::zero(self.field.p());
        let get = |v: &Vec<ModPoly>, i: usize| v.get(i).cloned().unwrap_or_else(|| zero.clone());
        Self::raw(
            self.field.clone(),
            (0..n)
                .map(|i| get(&self.coeffs, i).add(&get(&other.coeffs, i)))
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.field, other.field);
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = ModPoly::zero(self.field.p());
        let get = |v: &Vec<ModPoly>, i: usize| v.get(i).cloned().unwrap_or_else(|| zero.clone());
        Self::raw(
            self.field.clone(),
            (0..n)
                .map(|i| get(&self.coeffs, i).sub(&get(&other.coeffs, i)))
                .collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.field, other.field);
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.field.clone());
        }
        let phibar = &self.field.modulus;
        let mut out =
            vec![ModPoly::zero(self.field.p()); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b).rem(phibar));
            }
        }
        Self::raw(self.field.clone(), out)
    }

    pub fn scale(&self, c: &ExtElem) -> Self {
        debug_assert_eq!(self.field, c.field);
        let phibar = &self.field.modulus;
        Self::raw(
            self.field.clone(),
            self.coeffs
                .iter()
                .map(|a| a.mul(&c.value).rem(phibar))
                .collect(),
        )
    }

    pub fn make_monic(&self) -> (ExtElem, Self) {
        match self.leading() {
            None => (self.field.one(), self.clone()),
            Some(lc) if lc == self.field.one() => (lc, self.clone()),
            Some(lc) => {
                let inv = lc.inv();
                (lc, self.scale(&inv))
            }
        }
    }

    pub fn divrem(&self, b: &Self) -> (Self, Self) {
        debug_assert_eq!(self.field, b.field);
        assert!(!b.is_zero(), "division by zero polynomial");
        let db = b.degree().unwrap();
        if self.coeffs.len() <= db {
            return (Self::zero(self.field.clone()), self.clone());
        }
        let lead_inv = b.leading().unwrap().inv();
        let phibar = &self.field.modulus;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![ModPoly::zero(self.field.p()); rem.len() - db];
        for i in (db..rem.len()).rev() {
            let q = std::mem::replace(&mut rem[i], ModPoly::zero(self.field.p()))
                .mul(&lead_inv.value)
                .rem(phibar);
            if q.is_zero() {
                continue;
            }
            for (j, bc) in b.coeffs.iter().enumerate().take(db) {
                let t = bc.mul(&q).rem(phibar);
                rem[i - db + j] = rem[i - db + j].sub(&t);
            }
            quot[i - db] = q;
        }
        rem.truncate(db);
        (
            Self::raw(self.field.clone(), quot),
            Self::raw(self.field.clone(), rem),
        )
    }

    pub fn rem(&self, b: &Self) -> Self {
        self.divrem(b).1
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
            return Self::zero(self.field.clone());
        }
        Self::raw(
            self.field.clone(),
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.scale(i as u64 % self.field.p()))
                .collect(),
        )
    }

    pub fn pow_mod(&self, exp: &BigUint, modulus: &Self) -> Self {
        let mut acc = Self::one(self.field.clone());
        let base = self.rem(modulus);
        if exp.is_one() {
            return base;
        }
        let bits = exp.bits();
        for i in (0..bits).rev() {
            acc = acc.mul(&acc).rem(modulus);
            if exp.bit(i) {
                acc = acc.mul(&base).rem(modulus);
            }
        }
        acc
    }

    pub fn eval(&self, at: &ExtElem) -> ExtElem {
        debug_assert_eq!(self.field, at.field);
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(at).add(&ExtElem {
                field: self.field.clone(),
                value: c.clone(),
            });
        }
        acc
    }

    /// Squarefree over F_phi; in characteristic p a vanishing derivative
    /// signals a perfect p-th power, which is never squarefree for degree >= 1.
    pub fn is_squarefree(&self) -> bool {
        match self.degree() {
            None | Some(0) => true,
            Some(_) => {
                let d = self.derivative();
                if d.is_zero() {
                    return false;
                }
                self.gcd(&d).degree() == Some(0)
            }
        }
    }

    pub(crate) fn cmp_canonical(&self, other: &Self) -> Ordering {
        self.coeffs.len().cmp(&other.coeffs.len()).then_with(|| {
            for i in (0..self.coeffs.len().max(other.coeffs.len())).rev() {
                let zero = ModPoly::zero(self.field.p());
                let a = self.coeffs.get(i).unwrap_or(&zero).clone();
                let b = other.coeffs.get(i).unwrap_or(&zero).clone();
                let c = a.cmp_canonical(&b);
                if c != Ordering::Equal {
                    return c;
                }
            }
            Ordering::Equal
        })
    }
}

impl fmt::Display for ExtPoly {
    /// Prints in y with bracketed residue coefficients: `[x+1]y^2+[x]y+[1]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            let is_one = c.degree() == Some(0) && c.coeff(0) == 1;
            if !is_one || i == 0 {
                write!(f, "[{c}]")?;
            }
            match i {
                0 => {}
                1 => write!(f, "y")?,
                _ => write!(f, "y^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ExtPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExtPoly({} over {:?})", self, self.field)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f4() -> ExtField {
        ExtField::new(ModPoly::new(2, vec![1, 1, 1]).unwrap()).unwrap()
    }

    #[test]
    fn rejects_reducible_modulus() {
        // x^2+1 = (x+1)^2 over F_2
        let m = ModPoly::new(2, vec![1, 0, 1]).unwrap();
        assert!(matches!(
            ExtField::new(m),
            Err(Error::ReducibleModulus { .. })
        ));
    }

    #[test]
    fn irreducibility_against_enumeration() {
        // Over F_2 and F_3, compare Rabin's test to exhaustive root/divisor search
        // for degrees <= 4.
        for p in [2u64, 3] {
            let polys = all_monic(p, 4);
            for f in &polys {
                if f.degree().unwrap() < 1 {
                    continue;
                }
                let brute = brute_irreducible(f, &polys);
                assert_eq!(is_irreducible(f), brute, "p={p} f={f}");
            }
        }
    }

    fn all_monic(p: u64, max_deg: usize) -> Vec<ModPoly> {
        let mut out = Vec::new();
        for d in 0..=max_deg {
            let count = (p as u128).pow(d as u32);
            for idx in 0..count {
                let mut coeffs = Vec::with_capacity(d + 1);
                let mut n = idx;
                for _ in 0..d {
                    coeffs.push((n % p as u128) as u64);
                    n /= p as u128;
                }
                coeffs.push(1);
                out.push(ModPoly::raw(p, coeffs));
            }
        }
        out
    }

    fn brute_irreducible(f: &ModPoly, all: &[ModPoly]) -> bool {
        let d = f.degree().unwrap();
        if d == 0 {
            return false;
        }
        !all.iter().any(|g| {
            let dg = g.degree().unwrap_or(0);
            dg >= 1 && dg < d && g.divides(f)
        })
    }

    #[test]
    fn f4_arithmetic() {
        let k = f4();
        let x = k.gen();
        // x^2 = x + 1 in F_4
        assert_eq!(x.mul(&x), x.add(&k.one()));
        // every nonzero element has an inverse
        for e in k.elements() {
            if e.is_zero() {
                continue;
            }
            assert_eq!(e.mul(&e.inv()), k.one());
        }
    }

    #[test]
    fn mixed_field_rejected() {
        let k = f4();
        let k2 = ExtField::prime_field(2).unwrap();
        let e = k2.one();
        assert_eq!(ExtPoly::new(k, vec![e]).unwrap_err(), Error::FieldMismatch);
    }

    #[test]
    fn ext_poly_divrem_roundtrip() {
        let k = f4();
        let x = k.gen();
        // (y+1)(y+x) recomposed
        let a = ExtPoly::new(k.clone(), vec![k.one(), k.one()]).unwrap();
        let b = ExtPoly::new(k.clone(), vec![x.clone(), k.one()]).unwrap();
        let prod = a.mul(&b);
        let (q, r) = prod.divrem(&a);
        assert!(r.is_zero());
        assert_eq!(q, b);
        assert_eq!(prod.degree(), Some(2));
    }

    #[test]
    fn squarefree_detection() {
        let k = ExtField::prime_field(2).unwrap();
        // y^2 + 1 = (y+1)^2 over F_2: derivative vanishes
        let f = ExtPoly::new(k.clone(), vec![k.one(), k.zero(), k.one()]).unwrap();
        assert!(!f.is_squarefree());
        // y^2 + y + 1 is irreducible hence squarefree
        let g = ExtPoly::new(k.clone(), vec![k.one(), k.one(), k.one()]).unwrap();
        assert!(g.is_squarefree());
    }
}
