//! Dense polynomials over Z with arbitrary-precision coefficients.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Polynomial over Z, stored dense in ascending order: `coeffs[i]` is the
/// coefficient of x^i. The zero polynomial is the empty vector; otherwise the
/// top coefficient is nonzero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }

    /// c * x^k.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// x^n - m, the pure polynomial.
    pub fn pure(n: u32, m: &BigInt) -> Self {
        let mut coeffs = vec![BigInt::zero(); n as usize + 1];
        coeffs[0] = -m.clone();
        coeffs[n as usize] = BigInt::one();
        Self::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        Self::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - other.coeff(i));
        }
        Self::new(out)
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::constant(BigInt::one());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Euclidean division by a monic divisor: A = B*Q + R with deg R < deg B.
    /// Monicity keeps everything in Z.
    pub fn divrem(&self, b: &Self) -> Result<(Self, Self)> {
        if !b.is_monic() {
            return Err(Error::NonMonicDivisor);
        }
        let db = b.degree().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= db {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - db];
        for i in (db..rem.len()).rev() {
            let q = std::mem::take(&mut rem[i]);
            if q.is_zero() {
                continue;
            }
            for (j, bc) in b.coeffs.iter().enumerate().take(db) {
                let delta = bc * &q;
                rem[i - db + j] -= delta;
            }
            quot[i - db] = q;
        }
        rem.truncate(db);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Resultant of self and other via a fraction-free (Bareiss) determinant
    /// of the Sylvester matrix. Exact, no rational arithmetic.
    pub fn resultant(&self, other: &Self) -> BigInt {
        let (n, m) = match (self.degree(), other.degree()) {
            (Some(n), Some(m)) => (n, m),
            // Res(f, 0) = 0 unless both are nonzero constants.
            _ => return BigInt::zero(),
        };
        if n == 0 && m == 0 {
            return BigInt::one();
        }
        if n == 0 {
            return self.coeffs[0].pow(m as u32);
        }
        if m == 0 {
            return other.coeffs[0].pow(n as u32);
        }
        let size = n + m;
        let mut mat = vec![vec![BigInt::zero(); size]; size];
        for row in 0..m {
            for (k, c) in self.coeffs.iter().rev().enumerate() {
                mat[row][row + k] = c.clone();
            }
        }
        for row in 0..n {
            for (k, c) in other.coeffs.iter().rev().enumerate() {
                mat[m + row][row + k] = c.clone();
            }
        }
        bareiss_det(mat)
    }

    /// disc(F) = (-1)^(n(n-1)/2) * Res(F, F') / lc(F).
    pub fn discriminant(&self) -> Result<BigInt> {
        let n = self
            .degree()
            .filter(|&n| n >= 1)
            .ok_or(Error::ConstantPolynomial)?;
        let res = self.resultant(&self.derivative());
        let signed = if (n * (n - 1) / 2) % 2 == 1 {
            -res
        } else {
            res
        };
        // Exact by the defining formula; lc divides the resultant.
        Ok(signed / self.leading().unwrap())
    }
}

/// Fraction-free Gaussian elimination; consumes the matrix, returns det.
fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = &t / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let det = std::mem::take(&mut m[n - 1][n - 1]);
    if sign < 0 {
        -det
    } else {
        det
    }
}

impl fmt::Display for IntPoly {
    /// Canonical form, highest degree first: `x^12-13`, `-x^2+3x-1`, `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            let unit_coeff = mag.is_one() && i > 0;
            if !unit_coeff {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}
