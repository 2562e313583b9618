//! Lower convex envelopes, principal parts, side data, residual polynomials,
//! the phi-index (lattice point count), and the closed-form polygon of
//! x^n - m at primes dividing n.
//!
//! Slopes are exact rationals compared by cross products; no floating point.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::extfield::{ExtField, ExtPoly};
use crate::intpoly::IntPoly;
use crate::modpoly::ModPoly;

/// Ordinate of a polygon point: a natural number or +infinity (the term is
/// zero and the point is absent for envelope purposes).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Valuation {
    Finite(i64),
    Infinity,
}

impl Valuation {
    pub fn finite(self) -> Option<i64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinity => None,
        }
    }
}

/// Input point (i, v_p(a_i)).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PolygonPoint {
    pub x: i64,
    pub y: Valuation,
}

impl PolygonPoint {
    pub fn new(x: i64, y: Valuation) -> Self {
        Self { x, y }
    }

    pub fn finite(x: i64, y: i64) -> Self {
        Self {
            x,
            y: Valuation::Finite(y),
        }
    }
}

/// One side of a polygon, from (x0, y0) to (x1, y1) with x0 < x1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Side {
    x0: i64,
    y0: i64,
    x1: i64,
    y1: i64,
}

/// The (l, H, e, h, d) data of a negative-slope side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SideData {
    pub length: i64,
    pub height: i64,
    pub ram_e: i64,
    pub h: i64,
    pub degree: i64,
}

impl Side {
    pub fn new(start: (i64, i64), end: (i64, i64)) -> Self {
        assert!(start.0 < end.0, "side must have positive length");
        Self {
            x0: start.0,
            y0: start.1,
            x1: end.0,
            y1: end.1,
        }
    }

    pub fn x0(&self) -> i64 {
        self.x0
    }
    pub fn y0(&self) -> i64 {
        self.y0
    }
    pub fn x1(&self) -> i64 {
        self.x1
    }
    pub fn y1(&self) -> i64 {
        self.y1
    }

    /// Projection onto the x-axis.
    pub fn length(&self) -> i64 {
        self.x1 - self.x0
    }

    /// Projection onto the y-axis (positive for negative slopes).
    pub fn height(&self) -> i64 {
        self.y0 - self.y1
    }

    pub fn is_negative_slope(&self) -> bool {
        self.y1 < self.y0
    }

    /// gcd(l, H): the number of integer lattice steps along the side.
    pub fn degree_d(&self) -> i64 {
        assert!(self.is_negative_slope());
        self.length().gcd(&self.height())
    }

    /// Ramification index e = l / d.
    pub fn ram_e(&self) -> i64 {
        self.length() / self.degree_d()
    }

    /// h = H / d; the slope is -h/e in lowest terms.
    pub fn h(&self) -> i64 {
        self.height() / self.degree_d()
    }

    pub fn data(&self) -> SideData {
        SideData {
            length: self.length(),
            height: self.height(),
            ram_e: self.ram_e(),
            h: self.h(),
            degree: self.degree_d(),
        }
    }

    /// Slope as a reduced fraction (numerator, denominator), denominator > 0.
    pub fn slope(&self) -> (i64, i64) {
        let num = self.y1 - self.y0;
        let den = self.x1 - self.x0;
        let g = num.gcd(&den);
        if g == 0 {
            (0, 1)
        } else {
            (num / g, den / g)
        }
    }
}

/// Lower convex envelope: a vertex chain with strictly increasing slopes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonPolygon {
    vertices: Vec<(i64, i64)>,
}

impl NewtonPolygon {
    pub fn from_vertices(vertices: Vec<(i64, i64)>) -> Self {
        assert!(!vertices.is_empty());
        Self { vertices }
    }

    pub fn vertices(&self) -> &[(i64, i64)] {
        &self.vertices
    }

    pub fn sides(&self) -> Vec<Side> {
        self.vertices
            .windows(2)
            .map(|w| Side::new(w[0], w[1]))
            .collect()
    }

    /// The subchain of strictly negative slopes (always a prefix).
    pub fn principal_part(&self) -> NewtonPolygon {
        let mut vertices = vec![self.vertices[0]];
        for w in self.vertices.windows(2) {
            if w[1].1 < w[0].1 {
                vertices.push(w[1]);
            } else {
                break;
            }
        }
        NewtonPolygon { vertices }
    }

    /// Exact height of the chain at integer abscissa x, as floor(value),
    /// for x within the abscissa span.
    fn floor_height_at(&self, x: i64) -> Option<i64> {
        for s in self.sides() {
            if s.x0 <= x && x <= s.x1 {
                // y0 + (x-x0)(y1-y0)/l, floored
                let num = (x - s.x0) * (s.y1 - s.y0);
                let l = s.length();
                return Some(s.y0 + num_integer::Integer::div_floor(&num, &l));
            }
        }
        if self.vertices.len() == 1 && self.vertices[0].0 == x {
            return Some(self.vertices[0].1);
        }
        None
    }

    /// Lattice points (i, y) with i >= 1, y >= 1, lying on or below the
    /// chain, within its abscissa span. These are the points the phi-index
    /// counts and the plot marks with crosses.
    pub fn lattice_points_below(&self) -> Vec<(i64, i64)> {
        let mut out = Vec::new();
        let (first, last) = match (self.vertices.first(), self.vertices.last()) {
            (Some(a), Some(b)) => (a.0, b.0),
            _ => return out,
        };
        for x in first.max(1)..=last {
            if let Some(hmax) = self.floor_height_at(x) {
                for y in 1..=hmax {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// Serialization-ready record for plotting.
    pub fn plot_record(&self) -> PlotRecord {
        let principal = self.principal_part();
        PlotRecord {
            vertices: self.vertices.clone(),
            sides: self
                .sides()
                .iter()
                .map(|s| PlotSide {
                    from: (s.x0, s.y0),
                    to: (s.x1, s.y1),
                    slope: format!("{}/{}", s.slope().0, s.slope().1),
                    data: s.is_negative_slope().then(|| s.data()),
                })
                .collect(),
            lattice_points: principal.lattice_points_below(),
        }
    }
}

/// Plot-ready polygon record consumed by the SVG emitter.
#[derive(Clone, Debug, Serialize)]
pub struct PlotRecord {
    pub vertices: Vec<(i64, i64)>,
    pub sides: Vec<PlotSide>,
    pub lattice_points: Vec<(i64, i64)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PlotSide {
    pub from: (i64, i64),
    pub to: (i64, i64),
    pub slope: String,
    pub data: Option<SideData>,
}

/// Lower boundary of the convex envelope of the finite points, by monotone
/// chain. Ties at one abscissa keep the minimum ordinate; collinear segments
/// merge into a single side.
pub fn lower_envelope(points: &[PolygonPoint]) -> Result<NewtonPolygon> {
    let mut finite: Vec<(i64, i64)> = points
        .iter()
        .filter_map(|p| p.y.finite().map(|y| (p.x, y)))
        .collect();
    if finite.is_empty() {
        return Err(Error::EmptyPolygon);
    }
    finite.sort();
    finite.dedup_by_key(|p| p.0); // after sort, first entry per x has min y

    let mut hull: Vec<(i64, i64)> = Vec::new();
    for p in finite {
        while hull.len() >= 2 {
            let a = hull[hull.len() - 2];
            let b = hull[hull.len() - 1];
            // pop b unless the turn a->b->p is strictly convex (slope increases)
            let lhs = (b.1 - a.1) as i128 * (p.0 - b.0) as i128;
            let rhs = (p.1 - b.1) as i128 * (b.0 - a.0) as i128;
            if lhs >= rhs {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }
    Ok(NewtonPolygon { vertices: hull })
}

/// Residual polynomial of F on a side S of the principal phi-polygon:
/// degree-d polynomial over F_phi whose coefficients are the residues of the
/// expansion terms at the lattice points of S.
#[derive(Clone, Debug)]
pub struct ResidualPoly {
    pub side: Side,
    pub poly: ExtPoly,
}

pub fn residual_polynomial(
    f: &IntPoly,
    phi: &IntPoly,
    p: u64,
    side: &Side,
) -> Result<ResidualPoly> {
    let expansion = crate::phi::phi_expand(f, phi)?;
    let polygon = expansion.polygon(p)?;
    let principal = polygon.principal_part();
    if !principal.sides().contains(side) {
        return Err(Error::NotASide {
            x0: side.x0,
            y0: side.y0,
            x1: side.x1,
            y1: side.y1,
        });
    }
    let field = ExtField::new(ModPoly::from_intpoly(p, phi)?)?;
    let poly = residual_on_side(&expansion, &field, p, side)?;
    Ok(ResidualPoly { side: *side, poly })
}

/// Residual computation shared by the public operation and the engine: the
/// side is trusted to belong to the principal polygon of the expansion.
pub(crate) fn residual_on_side(
    expansion: &crate::phi::PhiExpansion,
    field: &ExtField,
    p: u64,
    side: &Side,
) -> Result<ExtPoly> {
    let d = side.degree_d();
    let e = side.ram_e();
    let h = side.h();
    let terms = expansion.terms();
    let mut coeffs = Vec::with_capacity(d as usize + 1);
    for idx in 0..=d {
        let x = side.x0 + idx * e;
        let line_val = side.y0 - idx * h;
        let i = x as usize;
        let coeff = if i < terms.len() {
            match crate::phi::poly_valuation(&terms[i], p) {
                crate::polygon::Valuation::Finite(v) if v == line_val => {
                    crate::phi::residue_coefficient(field, &terms[i], p, line_val)
                        .unwrap_or_else(|| field.zero())
                }
                _ => field.zero(), // strictly above the side, or absent
            }
        } else {
            field.zero()
        };
        coeffs.push(coeff);
    }
    ExtPoly::new(field.clone(), coeffs)
}

/// ind_phi(F): deg(phi) times the number of lattice points with both
/// coordinates >= 1 lying on or below the principal phi-polygon. Counted
/// column by column with exact rational heights.
pub fn phi_index(f: &IntPoly, phi: &IntPoly, p: u64) -> Result<u64> {
    let fbar = ModPoly::from_intpoly(p, f)?;
    let phibar = ModPoly::from_intpoly(p, phi)?;
    if fbar.is_zero() || !phibar.divides(&fbar) {
        return Err(Error::PhiDoesNotDivide {
            phi: phi.to_string(),
            p,
        });
    }
    let expansion = crate::phi::phi_expand(f, phi)?;
    let principal = expansion.polygon(p)?.principal_part();
    let count = principal.lattice_points_below().len() as u64;
    Ok(count * phi.degree().unwrap() as u64)
}

/// One entry of the closed-form polygon of x^n - m: the polygon attached to
/// one irreducible factor phi of x^t - m mod p.
#[derive(Clone, Debug)]
pub struct PurePolygonEntry {
    /// Symmetric lift of the mod-p factor.
    pub phi: IntPoly,
    pub polygon: NewtonPolygon,
    /// Whether the left endpoint had to be computed from the expansion
    /// (the congruence v_p(m^(p-1) - 1) >= r + 1 held).
    pub left_from_expansion: bool,
}

/// Closed-form principal polygon of F = x^n - m at a prime p | n, p does not
/// divide m. Writing n = p^r t with p not dividing t, the polygon per factor
/// phi of x^t - m is the envelope of {(0, v)} and {(p^j, r - j)}; when
/// v_p(m^(p-1) - 1) > r the left ordinate V depends on phi and is read off
/// the actual expansion instead of assumed.
pub fn pure_polygon(n: u32, m: &BigInt, p: u64) -> Result<Vec<PurePolygonEntry>> {
    crate::arith::ensure_prime(p)?;
    if n == 0 || !(n as u64).is_multiple_of(p) {
        return Err(Error::Unsupported(format!("{p} does not divide n = {n}")));
    }
    if m.mod_floor(&BigInt::from(p)).is_zero() {
        return Err(Error::Unsupported(format!("{p} divides m = {m}")));
    }
    let mut r = 0u32;
    let mut t = n as u64;
    while t.is_multiple_of(p) {
        t /= p;
        r += 1;
    }

    // v_p(m^(p-1) - 1), computed mod p^(r+1): enough to decide the case and,
    // in case 1, to read the exact value.
    let pk = BigInt::from(p).pow(r + 1);
    let mbase = m.mod_floor(&pk);
    let c = mbase.modpow(&BigInt::from(p - 1), &pk);
    let diff = (c - BigInt::one()).mod_floor(&pk);
    let low_case = if diff.is_zero() {
        None // valuation >= r + 1
    } else {
        Some(crate::arith::int_valuation(&diff, p).unwrap() as i64)
    };

    let tm = IntPoly::pure(t as u32, m);
    let tm_bar = ModPoly::from_intpoly(p, &tm)?;
    let factors = crate::factor::factor_mod_p(&tm_bar)?;
    let f = IntPoly::pure(n, m);

    let mut out = Vec::new();
    for (phibar, _) in factors.factors {
        let phi = phibar.lift_symmetric();
        let mut points: Vec<PolygonPoint> = (0..=r)
            .map(|j| PolygonPoint::finite((p as i64).pow(j), (r - j) as i64))
            .collect();
        let from_expansion = match low_case {
            Some(v) => {
                points.push(PolygonPoint::finite(0, v));
                false
            }
            None => {
                let (_, a0) = f.divrem(&phi)?;
                if let Valuation::Finite(v) = crate::phi::poly_valuation(&a0, p) {
                    points.push(PolygonPoint::finite(0, v));
                }
                true
            }
        };
        out.push(PurePolygonEntry {
            phi,
            polygon: lower_envelope(&points)?,
            left_from_expansion: from_expansion,
        });
    }
    Ok(out)
}
