//! Parser for polynomial expressions like `x^12-13`, `-3x^2 + 2x - 1`.
//!
//! Grammar: `poly := [sign] term (sign term)*`, `term := int | int x | int
//! x^nat | x | x^nat`. Whitespace is ignored between tokens. Coefficients
//! are arbitrary-precision. Errors carry the byte offset of the offending
//! character.

use std::fmt;

use monogen::IntPoly;
use num_bigint::BigInt;
use num_traits::Zero;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "parse error at position {}: {}",
            self.position, self.message
        )
    }
}

impl std::error::Error for ParseError {}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek()?;
        self.pos += 1;
        Some(b)
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            position: self.pos,
            message: message.into(),
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            None
        } else {
            Some(std::str::from_utf8(&self.bytes[start..self.pos]).unwrap())
        }
    }
}

/// Parses the expression into an `IntPoly`; like terms are accumulated.
pub fn parse_poly(input: &str) -> Result<IntPoly, ParseError> {
    let mut cur = Cursor {
        bytes: input.as_bytes(),
        pos: 0,
    };
    let mut terms: Vec<(BigInt, usize)> = Vec::new();

    let mut first = true;
    loop {
        let sign = match cur.peek() {
            Some(b'+') => {
                cur.bump();
                1
            }
            Some(b'-') => {
                cur.bump();
                -1
            }
            None if first => return Err(cur.error("empty input")),
            None => return Err(cur.error("trailing operator")),
            Some(_) if first => 1,
            Some(c) => return Err(cur.error(format!("expected '+' or '-', found '{}'", c as char))),
        };
        first = false;

        let coeff_digits = cur.digits();
        let has_x = matches!(cur.peek(), Some(b'x') | Some(b'X'));
        if has_x {
            cur.bump();
        }
        if coeff_digits.is_none() && !has_x {
            return Err(cur.error("expected a coefficient or 'x'"));
        }
        let coeff: BigInt = match coeff_digits {
            Some(d) => d.parse().unwrap(),
            None => BigInt::from(1),
        };
        let exp = if has_x {
            if cur.peek() == Some(b'^') {
                cur.bump();
                let d = cur
                    .digits()
                    .ok_or_else(|| cur.error("expected an exponent"))?;
                d.parse::<usize>()
                    .map_err(|_| cur.error("exponent out of range"))?
            } else {
                1
            }
        } else {
            0
        };
        terms.push((BigInt::from(sign) * coeff, exp));

        if cur.peek().is_none() {
            break;
        }
    }

    let max_exp = terms.iter().map(|&(_, e)| e).max().unwrap_or(0);
    let mut coeffs = vec![BigInt::zero(); max_exp + 1];
    for (c, e) in terms {
        coeffs[e] += c;
    }
    Ok(IntPoly::new(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_forms() {
        assert_eq!(
            parse_poly("x^12-13").unwrap(),
            IntPoly::pure(12, &BigInt::from(13))
        );
        assert_eq!(
            parse_poly("x^2+x+1").unwrap(),
            IntPoly::from_i64(&[1, 1, 1])
        );
        assert_eq!(parse_poly("-x+2").unwrap(), IntPoly::from_i64(&[2, -1]));
        assert_eq!(parse_poly("0").unwrap(), IntPoly::zero());
        assert_eq!(parse_poly("7").unwrap(), IntPoly::from_i64(&[7]));
        assert_eq!(parse_poly("2x").unwrap(), IntPoly::from_i64(&[0, 2]));
        assert_eq!(
            parse_poly("x^3 - x^2 - 2x - 8").unwrap(),
            IntPoly::from_i64(&[-8, -2, -1, 1])
        );
    }

    #[test]
    fn whitespace_insensitive() {
        assert_eq!(
            parse_poly("  x ^ 12  -  13 ").unwrap(),
            parse_poly("x^12-13").unwrap()
        );
    }

    #[test]
    fn like_terms_accumulate() {
        assert_eq!(parse_poly("x+x").unwrap(), IntPoly::from_i64(&[0, 2]));
        assert_eq!(parse_poly("x^2-x^2").unwrap(), IntPoly::zero());
    }

    #[test]
    fn error_positions() {
        let e = parse_poly("x^").unwrap_err();
        assert_eq!(e.position, 2);
        let e = parse_poly("x^2 & 3").unwrap_err();
        assert_eq!(e.position, 4);
        let e = parse_poly("").unwrap_err();
        assert_eq!(e.position, 0);
        let e = parse_poly("3x^2+").unwrap_err();
        assert_eq!(e.position, 5);
    }

    #[test]
    fn big_coefficients() {
        let p = parse_poly("x^2-123456789012345678901234567890").unwrap();
        assert_eq!(
            p.coeff(0),
            "-123456789012345678901234567890".parse::<BigInt>().unwrap()
        );
    }

    #[test]
    fn print_parse_roundtrip_random() {
        use num_traits::One;
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0xca);
        for _ in 0..500 {
            let deg = rng.gen_range(0..=9usize);
            let mut coeffs: Vec<BigInt> = (0..deg)
                .map(|_| BigInt::from(rng.gen_range(-99i64..=99)))
                .collect();
            coeffs.push(if rng.gen_bool(0.5) {
                BigInt::one()
            } else {
                BigInt::from(rng.gen_range(1i64..=99))
            });
            let p = IntPoly::new(coeffs);
            let printed = p.to_string();
            assert_eq!(parse_poly(&printed).unwrap(), p, "printed: {printed}");
        }
    }
}
