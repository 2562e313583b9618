//! phi-expansions of integer polynomials, p-adic valuations of polynomials,
//! binomial coefficient valuations, and admissibility of non-canonical
//! expansions.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::extfield::{ExtField, ExtPoly};
use crate::intpoly::IntPoly;
use crate::modpoly::ModPoly;
use crate::polygon::{lower_envelope, NewtonPolygon, PolygonPoint, Valuation};

/// Canonical base-phi representation F = sum a_i phi^i with deg a_i < deg phi.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiExpansion {
    base: IntPoly,
    phi: IntPoly,
    terms: Vec<IntPoly>,
}

impl PhiExpansion {
    pub fn base(&self) -> &IntPoly {
        &self.base
    }

    pub fn phi(&self) -> &IntPoly {
        &self.phi
    }

    pub fn terms(&self) -> &[IntPoly] {
        &self.terms
    }

    /// The points (i, v_p(a_i)) feeding the Newton polygon.
    pub fn points(&self, p: u64) -> Vec<PolygonPoint> {
        self.terms
            .iter()
            .enumerate()
            .map(|(i, a)| PolygonPoint::new(i as i64, poly_valuation(a, p)))
            .collect()
    }

    /// Newton polygon of the expansion with respect to p.
    pub fn polygon(&self, p: u64) -> Result<NewtonPolygon> {
        lower_envelope(&self.points(p))
    }
}

/// Expands F in base phi by remainder-first Euclidean division.
pub fn phi_expand(f: &IntPoly, phi: &IntPoly) -> Result<PhiExpansion> {
    if !phi.is_monic() || phi.degree() == Some(0) {
        return Err(Error::NonMonicDivisor);
    }
    let mut terms = Vec::new();
    let mut q = f.clone();
    loop {
        let (q2, r) = q.divrem(phi)?;
        terms.push(r);
        q = q2;
        if q.is_zero() {
            break;
        }
    }
    Ok(PhiExpansion {
        base: f.clone(),
        phi: phi.clone(),
        terms,
    })
}

/// Minimum p-adic valuation over the nonzero coefficients; the zero
/// polynomial gets the +infinity sentinel.
pub fn poly_valuation(a: &IntPoly, p: u64) -> Valuation {
    let mut best: Option<u64> = None;
    for c in a.coeffs() {
        if let Some(v) = crate::arith::int_valuation(c, p) {
            best = Some(best.map_or(v, |b| b.min(v)));
            if best == Some(0) {
                break;
            }
        }
    }
    match best {
        Some(v) => Valuation::Finite(v as i64),
        None => Valuation::Infinity,
    }
}

/// v_p(C(p^r, j)) = r - v_p(j) for 1 <= j <= p^r - 1.
pub fn binom_valuation(p: u64, r: u32, j: &BigUint) -> Result<u64> {
    crate::arith::ensure_prime(p)?;
    if r == 0 {
        return Err(Error::OutOfRange("r must be positive".into()));
    }
    let top = BigUint::from(p).pow(r);
    if j.is_zero() || *j >= top {
        return Err(Error::OutOfRange(format!(
            "j must lie in 1..p^r-1, got {j}"
        )));
    }
    let vj = crate::arith::int_valuation(&BigInt::from(j.clone()), p).unwrap();
    Ok(r as u64 - vj)
}

/// A representation F = sum A'_i phi^i whose terms need not have degree
/// < deg phi.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralExpansion {
    base: IntPoly,
    phi: IntPoly,
    terms: Vec<IntPoly>,
    canonical: bool,
}

impl GeneralExpansion {
    /// Validates that the terms really reconstruct F.
    pub fn new(base: IntPoly, phi: IntPoly, terms: Vec<IntPoly>) -> Result<Self> {
        if !phi.is_monic() || phi.degree() == Some(0) {
            return Err(Error::NonMonicDivisor);
        }
        let mut acc = IntPoly::zero();
        for a in terms.iter().rev() {
            acc = acc.mul(&phi).add(a);
        }
        if acc != base {
            return Err(Error::BadExpansion);
        }
        let dphi = phi.degree().unwrap();
        let canonical = terms.iter().all(|a| a.degree().is_none_or(|d| d < dphi));
        Ok(Self {
            base,
            phi,
            terms,
            canonical,
        })
    }

    pub fn from_canonical(e: &PhiExpansion) -> Self {
        Self {
            base: e.base.clone(),
            phi: e.phi.clone(),
            terms: e.terms.to_vec(),
            canonical: true,
        }
    }

    pub fn is_canonical(&self) -> bool {
        self.canonical
    }

    pub fn terms(&self) -> &[IntPoly] {
        &self.terms
    }

    pub fn points(&self, p: u64) -> Vec<PolygonPoint> {
        self.terms
            .iter()
            .enumerate()
            .map(|(i, a)| PolygonPoint::new(i as i64, poly_valuation(a, p)))
            .collect()
    }
}

/// Outcome of checking a general expansion against the admissibility
/// condition: residue coefficients nonzero at every vertex of its polygon.
#[derive(Clone, Debug)]
pub struct AdmissibilityReport {
    pub admissible: bool,
    /// Polygon N' computed from the expansion's own valuations.
    pub polygon: NewtonPolygon,
    /// Residual polynomials of the principal sides of N', side by side.
    pub residuals: Vec<ExtPoly>,
}

/// Computes the polygon from a (possibly non-canonical) expansion and flags
/// whether it is admissible. For admissible expansions the polygon and the
/// residual data match the canonical ones.
pub fn admissibility_check(e: &GeneralExpansion, p: u64) -> Result<AdmissibilityReport> {
    crate::arith::ensure_prime(p)?;
    let points = e.points(p);
    let polygon = lower_envelope(&points)?;
    let phibar = ModPoly::from_intpoly(p, &e.phi)?;
    let field = ExtField::new(phibar)?;

    let residue = |i: usize, val: i64| -> ExtPoly {
        residue_coefficient(&field, &e.terms[i], p, val)
            .map(ExtPoly::constant)
            .unwrap_or_else(|| ExtPoly::zero(field.clone()))
    };

    let mut admissible = true;
    for &(x, y) in polygon.vertices() {
        let c = residue_coefficient(&field, &e.terms[x as usize], p, y);
        if c.is_none_or(|c| c.is_zero()) {
            admissible = false;
        }
    }

    let mut residuals = Vec::new();
    for side in polygon.principal_part().sides() {
        let d = side.degree_d();
        let e_ram = side.ram_e();
        let mut coeffs = Vec::with_capacity(d as usize + 1);
        for idx in 0..=d {
            let x = side.x0() + idx * e_ram;
            let line_val = side.y0() - idx * side.h();
            let i = x as usize;
            let c = if i < e.terms.len() {
                match poly_valuation(&e.terms[i], p) {
                    Valuation::Finite(v) if v == line_val => residue(i, line_val),
                    _ => ExtPoly::zero(field.clone()),
                }
            } else {
                ExtPoly::zero(field.clone())
            };
            coeffs.push(c.coeff(0));
        }
        residuals.push(ExtPoly::new(field.clone(), coeffs)?);
    }
    Ok(AdmissibilityReport {
        admissible,
        polygon,
        residuals,
    })
}

/// (a / p^val) reduced mod (p, phi): None if val exceeds v_p(a) structure
/// (zero polynomial), Some(residue) otherwise. The residue can still be zero
/// when phibar divides the reduction.
pub(crate) fn residue_coefficient(
    field: &ExtField,
    a: &IntPoly,
    p: u64,
    val: i64,
) -> Option<crate::extfield::ExtElem> {
    if a.is_zero() {
        return None;
    }
    let pk = BigInt::from(p).pow(val as u32);
    let mut reduced = Vec::with_capacity(a.coeffs().len());
    for c in a.coeffs() {
        let (q, r) = c.div_rem(&pk);
        if !r.is_zero() {
            return None; // point lies above the claimed valuation
        }
        reduced.push(q);
    }
    let scaled = IntPoly::new(reduced);
    let modp = ModPoly::from_intpoly(p, &scaled).ok()?;
    Some(field.reduce(&modp))
}
