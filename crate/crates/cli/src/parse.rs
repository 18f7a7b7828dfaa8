//! Parser for the ring-expression grammar.
//!
//! ```text
//! expr   := factor (("x" | "*") factor)*
//! factor := "Z" | "Z/" nat | "Z/" nat "[x]/(" poly ")"
//! poly   := ["+"|"-"] term (("+" | "-") term)*
//! term   := nat | [nat] "x" ["^" nat]
//! ```
//!
//! Whitespace is insignificant everywhere.  Polynomial coefficients may
//! be signed and repeated per degree; they are accumulated and reduced
//! modulo the coefficient modulus, and the reduced polynomial must stay
//! monic of degree at least one.  The parser returns the same canonical
//! [`RingExpr`] that pretty-printing produces, so expressions round-trip.

use pure_spectra::expr::RingExpr;
use thiserror::Error;

/// Whether the input failed the grammar or a semantic rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax,
    Semantic,
}

/// A parse failure, with the byte offset it was detected at.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("at byte {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
    pub kind: ParseErrorKind,
}

type PResult<T> = std::result::Result<T, ParseError>;

/// Largest accepted polynomial exponent; anything bigger is a typo or
/// would blow past the ring-order caps anyway.
const MAX_EXPONENT: usize = 64;

/// Parse `text` into a validated ring expression.
pub fn parse_ring_expr(text: &str) -> PResult<RingExpr> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let expr = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.syntax("expected end of input or a product separator"));
    }
    Ok(expr)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn syntax(&self, message: &str) -> ParseError {
        ParseError {
            offset: self.pos,
            message: message.to_owned(),
            kind: ParseErrorKind::Syntax,
        }
    }

    fn semantic(&self, offset: usize, message: String) -> ParseError {
        ParseError {
            offset,
            message,
            kind: ParseErrorKind::Semantic,
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek()?;
        self.pos += 1;
        Some(b)
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b) if b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, expected: u8) -> PResult<()> {
        self.skip_ws();
        if self.peek() == Some(expected) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.syntax(&format!("expected '{}'", expected as char)))
        }
    }

    fn nat(&mut self) -> PResult<u64> {
        self.skip_ws();
        if !matches!(self.peek(), Some(b) if b.is_ascii_digit()) {
            return Err(self.syntax("expected a number"));
        }
        let mut value: u64 = 0;
        while let Some(b) = self.peek() {
            if !b.is_ascii_digit() {
                break;
            }
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add(u64::from(b - b'0')))
                .ok_or_else(|| self.syntax("number is too large"))?;
            self.pos += 1;
        }
        Ok(value)
    }

    fn expr(&mut self) -> PResult<RingExpr> {
        let mut starts = vec![self.factor_start()?];
        let mut factors = vec![self.factor()?];
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'x') | Some(b'*') => {
                    self.pos += 1;
                    starts.push(self.factor_start()?);
                    factors.push(self.factor()?);
                }
                _ => break,
            }
        }
        if factors.len() == 1 {
            return Ok(factors.pop().expect("one factor"));
        }
        for (factor, &start) in factors.iter().zip(&starts) {
            if matches!(factor, RingExpr::SymZ) {
                return Err(self.semantic(
                    start,
                    "the symbolic ring Z cannot appear in a product".to_owned(),
                ));
            }
        }
        Ok(RingExpr::Product(factors))
    }

    /// Skip whitespace and report where the next factor begins.
    fn factor_start(&mut self) -> PResult<usize> {
        self.skip_ws();
        Ok(self.pos)
    }

    fn factor(&mut self) -> PResult<RingExpr> {
        self.skip_ws();
        if self.peek() != Some(b'Z') {
            return Err(self.syntax("expected 'Z'"));
        }
        self.pos += 1;
        self.skip_ws();
        if self.peek() != Some(b'/') {
            return Ok(RingExpr::SymZ);
        }
        self.pos += 1;
        self.skip_ws();
        let modulus_at = self.pos;
        let modulus = self.nat()?;
        if modulus < 2 {
            return Err(self.semantic(
                modulus_at,
                format!("modulus must be at least 2, found {modulus}"),
            ));
        }
        self.skip_ws();
        if self.peek() != Some(b'[') {
            return Ok(RingExpr::Zmod(modulus));
        }
        self.eat(b'[')?;
        self.eat(b'x')?;
        self.eat(b']')?;
        self.eat(b'/')?;
        self.eat(b'(')?;
        let poly_at = self.pos;
        let coeffs = self.poly(modulus)?;
        self.eat(b')')?;
        if coeffs.len() < 2 {
            return Err(self.semantic(poly_at, "polynomial must have degree at least 1".to_owned()));
        }
        if *coeffs.last().expect("nonempty") != 1 {
            return Err(self.semantic(
                poly_at,
                format!(
                    "polynomial must be monic modulo {modulus}, leading coefficient is {}",
                    coeffs.last().expect("nonempty")
                ),
            ));
        }
        Ok(RingExpr::PolyQuotient { modulus, coeffs })
    }

    /// Signed terms accumulated per degree and reduced modulo `n`;
    /// returns ascending coefficients up to the largest written degree.
    fn poly(&mut self, n: u64) -> PResult<Vec<u64>> {
        let mut acc: Vec<i128> = Vec::new();
        let mut sign: i128 = 1;
        self.skip_ws();
        if matches!(self.peek(), Some(b'+') | Some(b'-')) {
            sign = if self.bump() == Some(b'-') { -1 } else { 1 };
        }
        loop {
            let (coeff, degree) = self.term()?;
            if degree > MAX_EXPONENT {
                return Err(self.semantic(
                    self.pos,
                    format!("exponent {degree} exceeds the supported maximum {MAX_EXPONENT}"),
                ));
            }
            if acc.len() <= degree {
                acc.resize(degree + 1, 0);
            }
            acc[degree] += sign * i128::from(coeff);
            self.skip_ws();
            match self.peek() {
                Some(b'+') => {
                    sign = 1;
                    self.pos += 1;
                }
                Some(b'-') => {
                    sign = -1;
                    self.pos += 1;
                }
                _ => break,
            }
        }
        let top = acc.len() - 1;
        let n = i128::from(n);
        let reduced: Vec<u64> = acc.iter().map(|&c| (c.rem_euclid(n)) as u64).collect();
        if top > 0 && reduced[top] == 0 {
            return Err(self.semantic(
                self.pos,
                format!("leading term x^{top} vanishes modulo {n}"),
            ));
        }
        Ok(reduced)
    }

    /// One polynomial term: `nat`, `x`, `nat x`, `x^k`, or `nat x^k`.
    fn term(&mut self) -> PResult<(u64, usize)> {
        self.skip_ws();
        let coeff = match self.peek() {
            Some(b) if b.is_ascii_digit() => Some(self.nat()?),
            Some(b'x') => None,
            _ => return Err(self.syntax("expected a coefficient or 'x'")),
        };
        self.skip_ws();
        if self.peek() != Some(b'x') {
            return match coeff {
                Some(c) => Ok((c, 0)),
                None => Err(self.syntax("expected 'x'")),
            };
        }
        self.pos += 1;
        self.skip_ws();
        let degree = if self.peek() == Some(b'^') {
            self.pos += 1;
            let d = self.nat()?;
            usize::try_from(d).map_err(|_| self.syntax("exponent is too large"))?
        } else {
            1
        };
        Ok((coeff.unwrap_or(1), degree))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_grammar_examples() {
        assert_eq!(parse_ring_expr("Z/12").unwrap(), RingExpr::Zmod(12));
        assert_eq!(parse_ring_expr("Z").unwrap(), RingExpr::SymZ);
        assert_eq!(
            parse_ring_expr("Z/2 x Z/3").unwrap(),
            RingExpr::Product(vec![RingExpr::Zmod(2), RingExpr::Zmod(3)])
        );
        assert_eq!(
            parse_ring_expr("Z/2[x]/(x^2+x+1)").unwrap(),
            RingExpr::PolyQuotient {
                modulus: 2,
                coeffs: vec![1, 1, 1]
            }
        );
    }

    #[test]
    fn whitespace_and_the_star_alias_are_insignificant() {
        assert_eq!(
            parse_ring_expr("  Z / 4 *Z/ 9 ").unwrap(),
            RingExpr::Product(vec![RingExpr::Zmod(4), RingExpr::Zmod(9)])
        );
        assert_eq!(
            parse_ring_expr("Z/ 3 [ x ] / ( x ^ 2 + 1 )").unwrap(),
            RingExpr::PolyQuotient {
                modulus: 3,
                coeffs: vec![1, 0, 1]
            }
        );
    }

    #[test]
    fn signed_and_repeated_coefficients_reduce_modulo_n() {
        // x^2 - 1 = x^2 + 2 over Z/3.
        assert_eq!(
            parse_ring_expr("Z/3[x]/(x^2-1)").unwrap(),
            RingExpr::PolyQuotient {
                modulus: 3,
                coeffs: vec![2, 0, 1]
            }
        );
        // x^2 + 4x + x + 7 = x^2 + 2 over Z/5... 4x + x = 5x = 0.
        assert_eq!(
            parse_ring_expr("Z/5[x]/(x^2+4x+x+7)").unwrap(),
            RingExpr::PolyQuotient {
                modulus: 5,
                coeffs: vec![2, 0, 1]
            }
        );
    }

    #[test]
    fn rejections_carry_offsets_and_kinds() {
        let small = parse_ring_expr("Z/0").unwrap_err();
        assert_eq!(small.kind, ParseErrorKind::Semantic);
        assert_eq!(small.offset, 2);

        let sym_in_product = parse_ring_expr("Z/2 x Z").unwrap_err();
        assert_eq!(sym_in_product.kind, ParseErrorKind::Semantic);
        assert_eq!(sym_in_product.offset, 6);

        let trailing = parse_ring_expr("Z/2 y").unwrap_err();
        assert_eq!(trailing.kind, ParseErrorKind::Syntax);
        assert_eq!(trailing.offset, 4);

        let vanishing = parse_ring_expr("Z/2[x]/(2x^2+x+1)").unwrap_err();
        assert_eq!(vanishing.kind, ParseErrorKind::Semantic);
        assert!(vanishing.message.contains("vanishes"));

        let constant = parse_ring_expr("Z/2[x]/(1)").unwrap_err();
        assert!(constant.message.contains("degree at least 1"));

        let non_monic = parse_ring_expr("Z/4[x]/(2x^2+x+1)").unwrap_err();
        assert!(non_monic.message.contains("monic"));
    }
}
