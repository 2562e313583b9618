//! Versioned, serialization-ready report records.
//!
//! Every numeric value is rendered as an exact decimal string: coefficients
//! and counts routinely exceed native word sizes, and the JSON output must be
//! byte-stable. Field order is fixed by struct order.

use serde::Serialize;

use crate::monogenity::{FallbackReport, Verdict, VerdictKind};
use crate::ore::{IndexDivisorWitness, PrimeAnalysis, PrimeShape};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema_version: &'static str,
    pub input: InputReport,
    pub warnings: Vec<String>,
    pub primes: Vec<PrimeReport>,
    pub verdict: VerdictReport,
}

#[derive(Clone, Debug, Serialize)]
pub struct InputReport {
    pub polynomial: String,
    pub degree: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct FactorEntry {
    pub polynomial: String,
    pub exponent: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SideReport {
    pub from: (String, String),
    pub to: (String, String),
    pub length: String,
    pub height: String,
    pub ram_e: String,
    pub h: String,
    pub degree: String,
    pub slope: String,
    pub residual: String,
    /// Residual coefficients t_0..t_d as residue strings.
    pub residual_coefficients: Vec<String>,
    pub residual_unit: String,
    pub residual_factors: Vec<FactorEntry>,
    pub squarefree: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct PhiReport {
    pub phi: String,
    pub multiplicity: String,
    pub polygon_vertices: Vec<(String, String)>,
    pub principal_vertices: Vec<(String, String)>,
    pub sides: Vec<SideReport>,
    pub index: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ShapeReport {
    pub entries: Vec<ShapeEntry>,
    pub complete: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ShapeEntry {
    pub ram_e: String,
    pub residue_f: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessReport {
    pub p: String,
    pub residue_degree: String,
    pub primes_found: String,
    pub irreducible_count: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct PrimeReport {
    pub p: String,
    pub index_free_by_dedekind: bool,
    pub mod_p_factors: Vec<FactorEntry>,
    pub phi_sections: Vec<PhiReport>,
    pub regular: bool,
    pub index_lower_bound: String,
    pub index_exact: bool,
    pub shape: Option<ShapeReport>,
    pub guaranteed: ShapeReport,
    pub witness: Option<WitnessReport>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CongruenceReport {
    pub m_mod_4: String,
    pub m_mod_9: String,
    pub u_even: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SubstitutionReport {
    pub numerator_exp: String,
    pub denominator_exp: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerdictReport {
    pub kind: String,
    pub reasons: Vec<String>,
    pub congruences: Option<CongruenceReport>,
    pub witnesses: Vec<WitnessReport>,
    pub substitution: Option<SubstitutionReport>,
}

fn vertices_to_strings(vs: &[(i64, i64)]) -> Vec<(String, String)> {
    vs.iter()
        .map(|&(x, y)| (x.to_string(), y.to_string()))
        .collect()
}

pub fn shape_report(shape: &PrimeShape) -> ShapeReport {
    ShapeReport {
        entries: shape
            .entries
            .iter()
            .map(|&(e, f)| ShapeEntry {
                ram_e: e.to_string(),
                residue_f: f.to_string(),
            })
            .collect(),
        complete: shape.complete,
    }
}

pub fn witness_report(w: &IndexDivisorWitness) -> WitnessReport {
    WitnessReport {
        p: w.p.to_string(),
        residue_degree: w.f.to_string(),
        primes_found: w.primes_found.to_string(),
        irreducible_count: w.irreducible_count.to_string(),
    }
}

pub fn prime_report(analysis: &PrimeAnalysis) -> PrimeReport {
    PrimeReport {
        p: analysis.p.to_string(),
        index_free_by_dedekind: analysis.dedekind_pass,
        mod_p_factors: analysis
            .phis
            .iter()
            .map(|pa| FactorEntry {
                polynomial: pa.phi.to_string(),
                exponent: pa.multiplicity.to_string(),
            })
            .collect(),
        phi_sections: analysis
            .phis
            .iter()
            .map(|pa| PhiReport {
                phi: pa.phi.to_string(),
                multiplicity: pa.multiplicity.to_string(),
                polygon_vertices: vertices_to_strings(pa.polygon.vertices()),
                principal_vertices: vertices_to_strings(pa.principal.vertices()),
                sides: pa
                    .sides
                    .iter()
                    .map(|sa| {
                        let s = &sa.side;
                        let d = s.data();
                        SideReport {
                            from: (s.x0().to_string(), s.y0().to_string()),
                            to: (s.x1().to_string(), s.y1().to_string()),
                            length: d.length.to_string(),
                            height: d.height.to_string(),
                            ram_e: d.ram_e.to_string(),
                            h: d.h.to_string(),
                            degree: d.degree.to_string(),
                            slope: format!("-{}/{}", d.h, d.ram_e),
                            residual: sa.residual.to_string(),
                            residual_coefficients: (0..=sa.residual.degree().unwrap_or(0))
                                .map(|i| sa.residual.coeff(i).to_string())
                                .collect(),
                            residual_unit: sa.unit.to_string(),
                            residual_factors: sa
                                .factors
                                .iter()
                                .map(|(g, e)| FactorEntry {
                                    polynomial: g.to_string(),
                                    exponent: e.to_string(),
                                })
                                .collect(),
                            squarefree: sa.squarefree,
                        }
                    })
                    .collect(),
                index: pa.index.to_string(),
            })
            .collect(),
        regular: analysis.regular,
        index_lower_bound: analysis.index.lower_bound.to_string(),
        index_exact: analysis.index.exact,
        shape: analysis.shape.as_ref().map(shape_report),
        guaranteed: shape_report(&analysis.guaranteed),
        witness: analysis.witness.as_ref().map(witness_report),
    }
}

pub fn verdict_kind_str(kind: VerdictKind) -> &'static str {
    match kind {
        VerdictKind::Monogenic => "monogenic",
        VerdictKind::NotMonogenic => "not-monogenic",
        VerdictKind::Undecided => "undecided",
    }
}

pub fn verdict_report(verdict: &Verdict) -> VerdictReport {
    VerdictReport {
        kind: verdict_kind_str(verdict.kind).to_string(),
        reasons: verdict
            .reasons
            .iter()
            .map(|r| r.tag().to_string())
            .collect(),
        congruences: Some(CongruenceReport {
            m_mod_4: verdict.congruences.m_mod_4.to_string(),
            m_mod_9: verdict.congruences.m_mod_9.to_string(),
            u_even: verdict.congruences.u_even,
        }),
        witnesses: verdict.witnesses.iter().map(witness_report).collect(),
        substitution: verdict.substitution.as_ref().map(|s| SubstitutionReport {
            numerator_exp: s.numerator_exp.to_string(),
            denominator_exp: s.denominator_exp.to_string(),
        }),
    }
}

pub fn fallback_prime_reports(report: &FallbackReport) -> Vec<PrimeReport> {
    report.analyses.iter().map(prime_report).collect()
}
