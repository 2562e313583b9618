//! Dedekind's index criterion, p-regularity, Ore's index bound, factorization
//! shapes of p in the ring of integers, guaranteed prime extraction from
//! residual data, and common-index-divisor certification.
//!
//! For a monic F and a prime p the pipeline is: factor F mod p, take the
//! phi-expansion for each irreducible factor, build the principal Newton
//! polygon, read residual polynomials off its sides, and factor them over
//! F_phi. A side contributes primes with ramification index e(S) and residue
//! degree deg(phi) * deg(psi) for each residual factor psi. Exponent-one
//! residual factors yield primes unconditionally; when every residual is
//! squarefree the whole factorization and the p-index are exact.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::extfield::{ExtElem, ExtField, ExtPoly};
use crate::factor::{self, count_monic_irreducibles, DEFAULT_FACTOR_SEED};
use crate::intpoly::IntPoly;
use crate::modpoly::ModPoly;
use crate::phi::{phi_expand, PhiExpansion};
use crate::polygon::{residual_on_side, NewtonPolygon, Side};

/// Multiset of (ramification index, residue degree) pairs of primes above p.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeShape {
    pub p: u64,
    /// Sorted (e, f) entries, one per prime ideal.
    pub entries: Vec<(u64, u64)>,
    /// True when the entries provably exhaust the factorization of p
    /// (p-regular case, or the certain entries already sum to deg F).
    pub complete: bool,
}

impl PrimeShape {
    /// Sum of e*f over the entries; deg F when complete.
    pub fn degree_sum(&self) -> u64 {
        self.entries.iter().map(|(e, f)| e * f).sum()
    }

    /// Number of entries with residue degree f.
    pub fn count_with_residue_degree(&self, f: u64) -> u64 {
        self.entries.iter().filter(|&&(_, g)| g == f).count() as u64
    }
}

/// Ore's lower bound on v_p of the index, with exactness flag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexReport {
    pub p: u64,
    /// sum of ind_phi(F) over the irreducible factors of F mod p.
    pub lower_bound: u64,
    /// True iff F is p-regular, in which case the bound is the exact
    /// valuation of the index.
    pub exact: bool,
    /// Per-factor breakdown (phi, ind_phi).
    pub per_phi: Vec<(IntPoly, u64)>,
}

/// Certificate that p divides the index of every generator: more primes of
/// residue degree f than there are monic irreducibles of degree f.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexDivisorWitness {
    pub p: u64,
    pub f: u64,
    /// Count of certified distinct primes with residue degree f (a lower
    /// bound when the shape is incomplete).
    pub primes_found: u64,
    /// N_f, the number of monic irreducibles of degree f over F_p.
    pub irreducible_count: BigUint,
}

/// Everything the engine learned about one side of one phi-polygon.
#[derive(Clone, Debug)]
pub struct SideAnalysis {
    pub side: Side,
    pub residual: ExtPoly,
    pub unit: ExtElem,
    /// Monic irreducible residual factors with exponents, canonically sorted.
    pub factors: Vec<(ExtPoly, u32)>,
    pub squarefree: bool,
}

/// Everything the engine learned about one irreducible factor of F mod p.
#[derive(Clone, Debug)]
pub struct PhiAnalysis {
    /// Symmetric lift of the mod-p factor.
    pub phi: IntPoly,
    pub multiplicity: u32,
    pub expansion: PhiExpansion,
    pub polygon: NewtonPolygon,
    pub principal: NewtonPolygon,
    pub sides: Vec<SideAnalysis>,
    /// ind_phi(F).
    pub index: u64,
}

/// Full per-prime report.
#[derive(Clone, Debug)]
pub struct PrimeAnalysis {
    pub p: u64,
    pub dedekind_pass: bool,
    pub phis: Vec<PhiAnalysis>,
    pub regular: bool,
    pub index: IndexReport,
    /// Complete factorization shape, present iff p-regular.
    pub shape: Option<PrimeShape>,
    /// Primes certified without regularity (exponent-one residual factors).
    pub guaranteed: PrimeShape,
    pub witness: Option<IndexDivisorWitness>,
}

/// Dedekind's criterion: true iff p does not divide the index of `Z[x]/(F)`.
/// Uses lifts with coefficients in [0, p) for M(x) = (F - prod phi_i^l_i)/p.
pub fn dedekind_test(f: &IntPoly, p: u64) -> Result<bool> {
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    let fbar = ModPoly::from_intpoly(p, f)?;
    let factors = factor::factor_mod_p(&fbar)?;
    let mut w = IntPoly::constant(num_bigint::BigInt::from(1));
    for (phibar, l) in &factors.factors {
        w = w.mul(&phibar.lift_nonneg().pow(*l));
    }
    let diff = f.sub(&w);
    // Every coefficient of F - W is divisible by p since they agree mod p.
    let m = IntPoly::new(
        diff.coeffs()
            .iter()
            .map(|c| c / num_bigint::BigInt::from(p))
            .collect(),
    );
    let mbar = ModPoly::from_intpoly(p, &m)?;
    for (phibar, l) in &factors.factors {
        if *l >= 2 && phibar.divides(&mbar) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Runs the full Newton-polygon pipeline for one prime.
pub fn analyze_prime(f: &IntPoly, p: u64) -> Result<PrimeAnalysis> {
    analyze_prime_seeded(f, p, DEFAULT_FACTOR_SEED)
}

pub fn analyze_prime_seeded(f: &IntPoly, p: u64, seed: u64) -> Result<PrimeAnalysis> {
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    let deg_f = f.degree().unwrap() as u64;
    let fbar = ModPoly::from_intpoly(p, f)?;
    let factors = factor::factor_mod_p_seeded(&fbar, seed)?;

    let mut phis = Vec::new();
    let mut regular = true;
    let mut lower_bound = 0u64;
    let mut per_phi = Vec::new();

    for (phibar, multiplicity) in &factors.factors {
        let phi = phibar.lift_symmetric();
        let deg_phi = phi.degree().unwrap() as u64;
        let field = ExtField::new(phibar.clone())?;
        let expansion = phi_expand(f, &phi)?;
        let polygon = expansion.polygon(p)?;
        let principal = polygon.principal_part();
        let index = principal.lattice_points_below().len() as u64 * deg_phi;
        lower_bound += index;
        per_phi.push((phi.clone(), index));

        let mut sides = Vec::new();
        for side in principal.sides() {
            let residual = residual_on_side(&expansion, &field, p, &side)?;
            let fx = factor::factor_over_ext_seeded(&residual, seed)?;
            let squarefree = fx.factors.iter().all(|(_, e)| *e == 1);
            if !squarefree {
                regular = false;
            }
            sides.push(SideAnalysis {
                side,
                residual,
                unit: fx.unit,
                factors: fx.factors,
                squarefree,
            });
        }
        phis.push(PhiAnalysis {
            phi,
            multiplicity: *multiplicity,
            expansion,
            polygon,
            principal,
            sides,
            index,
        });
    }

    // Primes read off the residual factorizations. A factor of multiplicity
    // one is the classic unramified case and provides its prime directly
    // (its lone side, when present, carries the same (1, deg phi) datum).
    // With regularity every residual factor provides one; without it only
    // exponent-one factors do. A factor of multiplicity >= 2 whose lift
    // divides F over Z (the expansion starts with a_0 = 0) is outside the
    // certified domain: it contributes nothing and voids exactness.
    let mut complete_entries = Vec::new();
    let mut certain_entries = Vec::new();
    for pa in &phis {
        let deg_phi = pa.phi.degree().unwrap() as u64;
        if pa.multiplicity == 1 {
            complete_entries.push((1, deg_phi));
            certain_entries.push((1, deg_phi));
            continue;
        }
        if pa.principal.vertices()[0].0 != 0 {
            regular = false;
            continue;
        }
        for sa in &pa.sides {
            let e = sa.side.ram_e() as u64;
            for (psi, exp) in &sa.factors {
                let fdeg = deg_phi * psi.degree().unwrap() as u64;
                complete_entries.push((e, fdeg));
                if *exp == 1 {
                    certain_entries.push((e, fdeg));
                }
            }
        }
    }
    complete_entries.sort_unstable();
    certain_entries.sort_unstable();

    let shape = if regular {
        debug_assert_eq!(
            complete_entries.iter().map(|(e, f)| e * f).sum::<u64>(),
            deg_f
        );
        Some(PrimeShape {
            p,
            entries: complete_entries,
            complete: true,
        })
    } else {
        None
    };
    let guaranteed_sum: u64 = certain_entries.iter().map(|(e, f)| e * f).sum();
    let guaranteed = PrimeShape {
        p,
        entries: certain_entries,
        complete: guaranteed_sum == deg_f,
    };

    let witness_source = shape.as_ref().unwrap_or(&guaranteed);
    let witness = find_witness(witness_source)?;

    let dedekind_pass = dedekind_test(f, p)?;
    let index = IndexReport {
        p,
        lower_bound,
        exact: regular,
        per_phi,
    };

    Ok(PrimeAnalysis {
        p,
        dedekind_pass,
        phis,
        regular,
        index,
        shape,
        guaranteed,
        witness,
    })
}

/// Smallest residue degree f with more certified primes than monic
/// irreducibles of degree f.
fn find_witness(shape: &PrimeShape) -> Result<Option<IndexDivisorWitness>> {
    let mut degrees: Vec<u64> = shape.entries.iter().map(|&(_, f)| f).collect();
    degrees.sort_unstable();
    degrees.dedup();
    for f in degrees {
        let found = shape.count_with_residue_degree(f);
        let nf = count_monic_irreducibles(shape.p, f as u32)?;
        if BigUint::from(found) > nf {
            return Ok(Some(IndexDivisorWitness {
                p: shape.p,
                f,
                primes_found: found,
                irreducible_count: nf,
            }));
        }
    }
    Ok(None)
}

/// Squarefreeness verdict for one residual polynomial.
#[derive(Clone, Debug)]
pub struct SideRegularity {
    pub phi: IntPoly,
    pub side: Side,
    pub residual: ExtPoly,
    pub squarefree: bool,
}

/// p-regularity with the per-side evidence.
#[derive(Clone, Debug)]
pub struct RegularityReport {
    pub regular: bool,
    pub sides: Vec<SideRegularity>,
}

/// True iff every residual polynomial of every side of every factor is
/// squarefree; then Ore's bound is an equality.
pub fn is_p_regular(f: &IntPoly, p: u64) -> Result<RegularityReport> {
    let analysis = analyze_prime(f, p)?;
    let sides = analysis
        .phis
        .iter()
        .flat_map(|pa| {
            pa.sides.iter().map(|sa| SideRegularity {
                phi: pa.phi.clone(),
                side: sa.side,
                residual: sa.residual.clone(),
                squarefree: sa.squarefree,
            })
        })
        .collect();
    Ok(RegularityReport {
        regular: analysis.regular,
        sides,
    })
}

/// Ore's index bound: sum of phi-indices, exact under p-regularity.
pub fn ore_index(f: &IntPoly, p: u64) -> Result<IndexReport> {
    Ok(analyze_prime(f, p)?.index)
}

/// Complete factorization shape of p; an error names the offending factor
/// and side when F is not p-regular.
pub fn factorization_shape(f: &IntPoly, p: u64) -> Result<PrimeShape> {
    let analysis = analyze_prime(f, p)?;
    if let Some(shape) = analysis.shape {
        return Ok(shape);
    }
    if let Some((phi, side)) = analysis.phis.iter().find_map(|pa| {
        pa.sides
            .iter()
            .find(|sa| !sa.squarefree)
            .map(|sa| (pa.phi.clone(), sa.side))
    }) {
        return Err(Error::Irregular {
            p,
            phi: phi.to_string(),
            x0: side.x0(),
            y0: side.y0(),
            x1: side.x1(),
            y1: side.y1(),
        });
    }
    // A repeated mod-p factor lifts to an exact rational divisor of F.
    let pa = analysis
        .phis
        .iter()
        .find(|pa| pa.multiplicity >= 2 && pa.principal.vertices()[0].0 != 0)
        .expect("non-regular analysis without witness side must be degenerate");
    Err(Error::Unsupported(format!(
        "{} divides the input exactly; the factorization of {p} is not certified",
        pa.phi
    )))
}

/// Primes certified regardless of regularity (exponent-one residual
/// factors); `complete` is set when they already exhaust deg F.
pub fn guaranteed_primes(f: &IntPoly, p: u64) -> Result<PrimeShape> {
    Ok(analyze_prime(f, p)?.guaranteed)
}

/// Sufficient-direction certification: a witness proves p divides the index
/// of every generator; absence of a witness proves nothing.
pub fn common_index_divisor(f: &IntPoly, p: u64) -> Result<Option<IndexDivisorWitness>> {
    Ok(analyze_prime(f, p)?.witness)
}
