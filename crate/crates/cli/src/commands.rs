//! Command implementations shared by the binary and the integration tests.
//! Each command returns its payload; the binary layers I/O and exit codes on
//! top.

use std::fmt::Write as _;

use monogen::arith::{is_prime_u64, trial_factor, DEFAULT_SQUAREFREE_BOUND};
use monogen::error::Error as CoreError;
use monogen::extfield::is_irreducible;
use monogen::factor::DEFAULT_FACTOR_SEED;
use monogen::intpoly::IntPoly;
use monogen::modpoly::ModPoly;
use monogen::monogenity::{classify_with, ClassifyOptions, Verdict, VerdictKind};
use monogen::ore::analyze_prime_seeded;
use monogen::phi::phi_expand;
use monogen::report::{
    self, fallback_prime_reports, prime_report, InputReport, Report, VerdictReport,
};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::parse::parse_poly;
use crate::svg::render_polygon;

/// Exit code conventions: 2 rejected input, 3 not monogenic, 4 undecided.
pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NOT_MONOGENIC: i32 = 3;
pub const EXIT_UNDECIDED: i32 = 4;

#[derive(Debug)]
pub struct CommandError {
    pub exit_code: i32,
    pub message: String,
}

impl CommandError {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            exit_code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl std::fmt::Display for CommandError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.message)
    }
}

impl std::error::Error for CommandError {}

impl From<CoreError> for CommandError {
    fn from(e: CoreError) -> Self {
        CommandError::usage(e.to_string())
    }
}

pub fn squarefree_bound_from_env() -> u64 {
    std::env::var("MONOGEN_SQUAREFREE_BOUND")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_SQUAREFREE_BOUND)
}

fn parse_or_usage(text: &str) -> Result<IntPoly, CommandError> {
    parse_poly(text).map_err(|e| CommandError::usage(e.to_string()))
}

/// Defaults to {2, 3} plus the primes of the constant term; pushes a warning
/// when the constant term cannot be fully factored.
fn default_primes(f: &IntPoly, warnings: &mut Vec<String>) -> Vec<u64> {
    let mut primes = vec![2u64, 3];
    let constant = f.coeff(0);
    if !constant.is_zero() {
        let (found, rest) = trial_factor(&constant, 1_000_000);
        primes.extend(found);
        if rest.abs() > BigInt::from(1) {
            warnings.push(format!(
                "constant term has an unfactored part {rest}; primes dividing it were not analyzed"
            ));
        }
    }
    primes.sort_unstable();
    primes.dedup();
    primes
}

/// Spot-check irreducibility over Q: certified if F stays irreducible modulo
/// some small prime. Failure to certify is only a warning.
fn irreducibility_warning(f: &IntPoly) -> Option<String> {
    let deg = f.degree().unwrap_or(0);
    if deg <= 1 {
        return None;
    }
    const AUX: [u64; 15] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47];
    for q in AUX {
        if let Ok(fbar) = ModPoly::from_intpoly(q, f) {
            if fbar.degree() == Some(deg) && is_irreducible(&fbar) {
                return None;
            }
        }
    }
    Some(
        "irreducibility over Q was not verified by any auxiliary prime; \
         conclusions assume the input is irreducible"
            .to_string(),
    )
}

pub fn cmd_analyze(poly_text: &str, primes: &[u64], seed: u64) -> Result<Report, CommandError> {
    let f = parse_or_usage(poly_text)?;
    if !f.is_monic() {
        return Err(CommandError::usage(format!("polynomial {f} is not monic")));
    }
    if f.degree() == Some(0) {
        return Err(CommandError::usage("polynomial must be nonconstant"));
    }
    let mut warnings = Vec::new();
    let primes = if primes.is_empty() {
        default_primes(&f, &mut warnings)
    } else {
        for &p in primes {
            if !is_prime_u64(p) {
                return Err(CommandError::usage(format!("{p} is not prime")));
            }
        }
        let mut ps = primes.to_vec();
        ps.sort_unstable();
        ps.dedup();
        ps
    };
    if let Some(w) = irreducibility_warning(&f) {
        warnings.push(w);
    }

    let mut prime_sections = Vec::new();
    let mut witnesses = Vec::new();
    for &p in &primes {
        let analysis = analyze_prime_seeded(&f, p, seed)?;
        if let Some(w) = &analysis.witness {
            witnesses.push(report::witness_report(w));
        }
        prime_sections.push(prime_report(&analysis));
    }

    let verdict = VerdictReport {
        kind: if witnesses.is_empty() {
            "inconclusive".into()
        } else {
            "not-monogenic".into()
        },
        reasons: if witnesses.is_empty() {
            Vec::new()
        } else {
            vec!["engine-witness".into()]
        },
        congruences: None,
        witnesses,
        substitution: None,
    };

    Ok(Report {
        schema_version: report::SCHEMA_VERSION,
        input: InputReport {
            polynomial: f.to_string(),
            degree: f.degree().unwrap().to_string(),
        },
        warnings,
        primes: prime_sections,
        verdict,
    })
}

pub struct MonogenicOutcome {
    pub report: Report,
    pub verdict: Verdict,
    pub exit_code: i32,
}

pub fn cmd_monogenic(
    u: u32,
    v: u32,
    m: &BigInt,
    opts: &ClassifyOptions,
) -> Result<MonogenicOutcome, CommandError> {
    let verdict = classify_with(u, v, m, opts).map_err(|e| CommandError::usage(e.to_string()))?;
    let n = 2u32.pow(u) * 3u32.pow(v);
    let f = IntPoly::pure(n, m);
    let primes = verdict
        .fallback
        .as_ref()
        .map(fallback_prime_reports)
        .unwrap_or_default();
    let report = Report {
        schema_version: report::SCHEMA_VERSION,
        input: InputReport {
            polynomial: f.to_string(),
            degree: n.to_string(),
        },
        warnings: Vec::new(),
        primes,
        verdict: report::verdict_report(&verdict),
    };
    let exit_code = match verdict.kind {
        VerdictKind::Monogenic => EXIT_OK,
        VerdictKind::NotMonogenic => EXIT_NOT_MONOGENIC,
        VerdictKind::Undecided => EXIT_UNDECIDED,
    };
    Ok(MonogenicOutcome {
        report,
        verdict,
        exit_code,
    })
}

/// One CSV row per m in [from, to]; m = 0, +-1 and non-squarefree m keep
/// their row with only the reason column filled, so batch runs stay total.
pub fn cmd_sweep(
    u: u32,
    v: u32,
    from: i64,
    to: i64,
    opts: &ClassifyOptions,
) -> Result<String, CommandError> {
    let mut wtr = csv::WriterBuilder::new().from_writer(Vec::new());
    wtr.write_record([
        "m",
        "m_mod_4",
        "m_mod_9",
        "verdict",
        "theorem_tag",
        "witness_p",
        "witness_f",
        "P_f",
        "N_f",
        "reason",
    ])
    .map_err(io_error)?;

    for m in from..=to {
        let mb = BigInt::from(m);
        let m4 = mb.mod_floor(&BigInt::from(4)).to_string();
        let m9 = mb.mod_floor(&BigInt::from(9)).to_string();
        let mut row = vec![m.to_string(), m4, m9];
        if m == 0 || m == 1 || m == -1 {
            row.extend(["", "", "", "", "", "", "excluded"].map(String::from));
            wtr.write_record(&row).map_err(io_error)?;
            continue;
        }
        match classify_with(u, v, &mb, opts) {
            Ok(verdict) => {
                let kind = report::verdict_kind_str(verdict.kind).to_string();
                let tag = verdict
                    .reasons
                    .iter()
                    .map(|r| r.tag())
                    .collect::<Vec<_>>()
                    .join("+");
                let (wp, wf, pf, nf) = match verdict.witnesses.first() {
                    Some(w) => (
                        w.p.to_string(),
                        w.f.to_string(),
                        w.primes_found.to_string(),
                        w.irreducible_count.to_string(),
                    ),
                    None => (String::new(), String::new(), String::new(), String::new()),
                };
                row.extend([kind, tag, wp, wf, pf, nf, String::new()]);
            }
            Err(CoreError::NotSquarefree(_)) => {
                row.extend(["", "", "", "", "", "", "not-squarefree"].map(String::from));
            }
            Err(CoreError::SquarefreeUnverifiable(_, _)) => {
                row.extend(["", "", "", "", "", "", "unverifiable"].map(String::from));
            }
            Err(e) => return Err(CommandError::usage(e.to_string())),
        }
        wtr.write_record(&row).map_err(io_error)?;
    }
    let bytes = wtr
        .into_inner()
        .map_err(|e| io_error(csv::Error::from(e.into_error())))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn io_error(e: csv::Error) -> CommandError {
    CommandError {
        exit_code: 1,
        message: e.to_string(),
    }
}

pub fn cmd_polygon(poly_text: &str, phi_text: &str, p: u64) -> Result<String, CommandError> {
    let f = parse_or_usage(poly_text)?;
    let phi = parse_or_usage(phi_text)?;
    if !is_prime_u64(p) {
        return Err(CommandError::usage(format!("{p} is not prime")));
    }
    if !phi.is_monic() || phi.degree() == Some(0) {
        return Err(CommandError::usage(format!(
            "phi = {phi} must be monic and nonconstant"
        )));
    }
    let expansion = phi_expand(&f, &phi)?;
    let polygon = expansion
        .polygon(p)
        .map_err(|e| CommandError::usage(e.to_string()))?;
    let mut title = String::new();
    let _ = write!(title, "phi-polygon of {f} at p={p}, phi={phi}");
    Ok(render_polygon(&polygon.plot_record(), &title))
}

/// Compact plain-text rendering of a report for terminal use.
pub fn render_text(report: &Report) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "input: {} (degree {})",
        report.input.polynomial, report.input.degree
    );
    for w in &report.warnings {
        let _ = writeln!(s, "warning: {w}");
    }
    for pr in &report.primes {
        let _ = writeln!(s, "p = {}", pr.p);
        let factors: Vec<String> = pr
            .mod_p_factors
            .iter()
            .map(|fe| format!("({})^{}", fe.polynomial, fe.exponent))
            .collect();
        let _ = writeln!(s, "  factorization mod p: {}", factors.join(" "));
        let _ = writeln!(
            s,
            "  index-free by Dedekind: {}; p-regular: {}; v_p(index) {} {}",
            pr.index_free_by_dedekind,
            pr.regular,
            if pr.index_exact { "=" } else { ">=" },
            pr.index_lower_bound
        );
        for section in &pr.phi_sections {
            let verts: Vec<String> = section
                .principal_vertices
                .iter()
                .map(|(x, y)| format!("({x},{y})"))
                .collect();
            let _ = writeln!(
                s,
                "  phi = {} (multiplicity {}): principal polygon {}",
                section.phi,
                section.multiplicity,
                verts.join("-")
            );
            for side in &section.sides {
                let _ = writeln!(
                    s,
                    "    side ({},{})-({},{}) slope {}: residual {} = {}",
                    side.from.0,
                    side.from.1,
                    side.to.0,
                    side.to.1,
                    side.slope,
                    side.residual,
                    side.residual_factors
                        .iter()
                        .map(|fe| format!("({})^{}", fe.polynomial, fe.exponent))
                        .collect::<Vec<_>>()
                        .join(" ")
                );
            }
        }
        if let Some(shape) = &pr.shape {
            let entries: Vec<String> = shape
                .entries
                .iter()
                .map(|e| format!("(e={}, f={})", e.ram_e, e.residue_f))
                .collect();
            let _ = writeln!(s, "  factorization shape: {}", entries.join(" "));
        } else {
            let entries: Vec<String> = pr
                .guaranteed
                .entries
                .iter()
                .map(|e| format!("(e={}, f={})", e.ram_e, e.residue_f))
                .collect();
            let _ = writeln!(
                s,
                "  guaranteed primes only (incomplete): {}",
                if entries.is_empty() {
                    "none".into()
                } else {
                    entries.join(" ")
                }
            );
        }
        if let Some(w) = &pr.witness {
            let _ = writeln!(
                s,
                "  common index divisor: {} primes of residue degree {} exceed N_f = {}",
                w.primes_found, w.residue_degree, w.irreducible_count
            );
        }
    }
    let _ = writeln!(s, "verdict: {}", report.verdict.kind);
    if !report.verdict.reasons.is_empty() {
        let _ = writeln!(s, "  reasons: {}", report.verdict.reasons.join(", "));
    }
    for w in &report.verdict.witnesses {
        let _ = writeln!(
            s,
            "  witness: p={} f={} P_f={} N_f={}",
            w.p, w.residue_degree, w.primes_found, w.irreducible_count
        );
    }
    if let Some(sub) = &report.verdict.substitution {
        let _ = writeln!(
            s,
            "  generator: alpha^{} / a^{}",
            sub.numerator_exp, sub.denominator_exp
        );
    }
    s
}

pub fn default_seed() -> u64 {
    DEFAULT_FACTOR_SEED
}
