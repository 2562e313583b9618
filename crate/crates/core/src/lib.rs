//! Exact-arithmetic toolkit for deciding monogenity of pure number fields
//! defined by x^(2^u 3^v) - m, built on phi-adic Newton polygons.
//!
//! The layers, bottom up:
//!
//! - [`intpoly`]: dense polynomials over Z with big-integer coefficients,
//!   exact division by monic divisors, resultants and discriminants.
//! - [`modpoly`] / [`extfield`]: polynomials over F_p and over the residue
//!   fields `F_phi = F_p[x]/(phibar)`.
//! - [`factor`]: factorization into monic irreducibles over either, with
//!   canonical output order, plus the count of monic irreducibles N_f.
//! - [`phi`]: phi-expansions, polynomial valuations, binomial valuations,
//!   admissibility of non-canonical expansions.
//! - [`polygon`]: lower convex envelopes, side data, residual polynomials,
//!   the phi-index, and the closed-form polygon of x^n - m.
//! - [`ore`]: Dedekind's criterion, p-regularity, Ore's index bound,
//!   factorization shapes, guaranteed primes, common-index-divisor
//!   certificates.
//! - [`monogenity`]: the closed-form congruence classifier with engine
//!   fallback.
//! - [`report`]: versioned JSON-ready records (exact decimal strings).
//!
//! All values are immutable after construction and every operation is a pure
//! function, so the toolkit can be used concurrently without coordination.

pub mod arith;
pub mod error;
pub mod extfield;
pub mod factor;
pub mod intpoly;
pub mod modpoly;
pub mod monogenity;
pub mod ore;
pub mod phi;
pub mod polygon;
pub mod report;

pub use error::{Error, Result};
pub use extfield::{ExtElem, ExtField, ExtPoly};
pub use intpoly::IntPoly;
pub use modpoly::ModPoly;
pub use polygon::{lower_envelope, NewtonPolygon, PolygonPoint, Side, Valuation};
