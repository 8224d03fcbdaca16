use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::clifford::{Blade, Dim, Multivector};
use crate::mvpoly::{CliffordPolynomial, Variable};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unexpected {found}, expected {expected}")]
    Unexpected {
        found: String,
        expected: &'static str,
    },
    #[error("unknown identifier `{0}`")]
    UnknownIdentifier(String),
    #[error("blade generator e{index} out of range for m = {m}")]
    BladeOutOfRange { index: usize, m: usize },
    #[error("variable {name} out of range for m = {m}")]
    VariableOutOfRange { name: String, m: usize },
    #[error("blade generators must be strictly increasing")]
    UnsortedBlade,
    #[error("exponent must be a natural number literal")]
    BadExponent,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("number `{0}` has a leading zero")]
    LeadingZero(String),
    #[error("invalid dimension m = {0}")]
    InvalidDimension(usize),
}

/// A parse failure at a byte offset of the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {offset}: {kind}")]
pub struct ParseError {
    pub offset: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Num(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Num(s) => format!("number `{s}`"),
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::End => "end of input".to_string(),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Caret => "`^`".into(),
            Tok::Slash => "`/`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::LBracket => "`[`".into(),
            Tok::RBracket => "`]`".into(),
            Tok::Comma => "`,`".into(),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'^' => Tok::Caret,
            b'/' => Tok::Slash,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'[' => Tok::LBracket,
            b']' => Tok::RBracket,
            b',' => Tok::Comma,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Num(text[start..i].to_string())));
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                while i < bytes.len() && bytes[i].is_ascii_alphanumeric() {
                    i += 1;
                }
                out.push((start, Tok::Ident(text[start..i].to_string())));
                continue;
            }
            _ => {
                let ch = text[start..].chars().next().unwrap_or('?');
                return Err(ParseError {
                    offset: start,
                    kind: ParseErrorKind::Unexpected {
                        found: format!("character `{ch}`"),
                        expected: "an expression",
                    },
                });
            }
        };
        out.push((start, tok));
        i += 1;
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

fn natural(digits: &str, offset: usize) -> Result<BigInt, ParseError> {
    if digits.len() > 1 && digits.starts_with('0') {
        return Err(ParseError {
            offset,
            kind: ParseErrorKind::LeadingZero(digits.to_string()),
        });
    }
    Ok(digits.parse().expect("lexer yields ascii digits"))
}

fn small_index(digits: &str, offset: usize) -> Result<usize, ParseError> {
    let n = natural(digits, offset)?;
    // anything this large is out of range for every dimension
    Ok(usize::try_from(n).unwrap_or(usize::MAX))
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    dim: Dim,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].0
    }

    fn bump(&mut self) -> (usize, Tok) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    /// Consumes a number token, or reports what was found instead.
    fn number(&mut self, expected: &'static str) -> Result<(usize, String), ParseError> {
        match self.peek().clone() {
            Tok::Num(digits) => {
                let offset = self.offset();
                self.bump();
                Ok((offset, digits))
            }
            _ => Err(self.unexpected(expected)),
        }
    }

    fn unexpected(&self, expected: &'static str) -> ParseError {
        ParseError {
            offset: self.offset(),
            kind: ParseErrorKind::Unexpected {
                found: self.peek().describe(),
                expected,
            },
        }
    }

    fn expect(&mut self, tok: Tok, expected: &'static str) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.unexpected(expected))
        }
    }

    fn expr(&mut self) -> Result<CliffordPolynomial, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<CliffordPolynomial, ParseError> {
        let mut acc = self.unary()?;
        while *self.peek() == Tok::Star {
            self.bump();
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<CliffordPolynomial, ParseError> {
        match self.peek() {
            Tok::Minus => {
                self.bump();
                Ok(-self.unary()?)
            }
            Tok::Plus => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<CliffordPolynomial, ParseError> {
        let mut base = self.atom()?;
        while *self.peek() == Tok::Caret {
            self.bump();
            let (offset, tok) = self.bump();
            let Tok::Num(digits) = tok else {
                return Err(ParseError {
                    offset,
                    kind: ParseErrorKind::BadExponent,
                });
            };
            let exponent = u32::try_from(natural(&digits, offset)?).map_err(|_| ParseError {
                offset,
                kind: ParseErrorKind::BadExponent,
            })?;
            if *self.peek() == Tok::Slash {
                return Err(ParseError {
                    offset,
                    kind: ParseErrorKind::BadExponent,
                });
            }
            base = base.pow(exponent);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<CliffordPolynomial, ParseError> {
        if matches!(
            self.peek(),
            Tok::End
                | Tok::RParen
                | Tok::Plus
                | Tok::Star
                | Tok::Caret
                | Tok::Slash
                | Tok::LBracket
                | Tok::RBracket
                | Tok::Comma
        ) {
            return Err(self.unexpected("a number, variable, blade or `(`"));
        }
        let (offset, tok) = self.bump();
        match tok {
            Tok::Num(digits) => {
                let numer = natural(&digits, offset)?;
                let mut value = BigRational::from_integer(numer);
                if *self.peek() == Tok::Slash {
                    self.bump();
                    let (doff, ddigits) = self.number("a denominator")?;
                    let denom = natural(&ddigits, doff)?;
                    if denom.is_zero() {
                        return Err(ParseError {
                            offset: doff,
                            kind: ParseErrorKind::ZeroDenominator,
                        });
                    }
                    value /= BigRational::from_integer(denom);
                }
                Ok(CliffordPolynomial::scalar(self.dim, value))
            }
            Tok::LParen => {
                let inner = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(inner)
            }
            Tok::Ident(name) => self.identifier(&name, offset),
            _ => unreachable!("filtered above"),
        }
    }

    fn identifier(&mut self, name: &str, offset: usize) -> Result<CliffordPolynomial, ParseError> {
        let (head, digits) = name.split_at(1);
        let unknown = || ParseError {
            offset,
            kind: ParseErrorKind::UnknownIdentifier(name.to_string()),
        };
        if head == "e" && digits.is_empty() && *self.peek() == Tok::LBracket {
            let blade = self.bracket_blade(offset)?;
            return Ok(blade_poly(self.dim, blade));
        }
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(unknown());
        }
        let m = self.dim.get();
        match head {
            "e" => {
                let blade = compact_blade(digits, self.dim, offset)?;
                Ok(blade_poly(self.dim, blade))
            }
            "x" | "u" => {
                let j = small_index(digits, offset + 1)?;
                let v = match (head, j) {
                    ("x", 0) => Variable::X0,
                    (_, j) if j == 0 || j > m => {
                        return Err(ParseError {
                            offset,
                            kind: ParseErrorKind::VariableOutOfRange {
                                name: name.to_string(),
                                m,
                            },
                        })
                    }
                    ("x", j) => Variable::x(j),
                    _ => Variable::u(j),
                };
                Ok(CliffordPolynomial::var(self.dim, v).expect("index checked"))
            }
            _ => Err(unknown()),
        }
    }

    fn bracket_blade(&mut self, offset: usize) -> Result<Blade, ParseError> {
        self.expect(Tok::LBracket, "`[`")?;
        let mut indices = Vec::new();
        loop {
            let (noff, digits) = self.number("a generator index")?;
            indices.push((small_index(&digits, noff)?, noff));
            match self.peek() {
                Tok::Comma => {
                    self.bump();
                }
                Tok::RBracket => {
                    self.bump();
                    break;
                }
                _ => return Err(self.unexpected("`,` or `]`")),
            }
        }
        build_blade(&indices, self.dim, offset)
    }
}

fn blade_poly(dim: Dim, blade: Blade) -> CliffordPolynomial {
    CliffordPolynomial::constant(
        Multivector::blade(dim, blade, BigRational::one()).expect("blade validated"),
    )
}

fn compact_blade(digits: &str, dim: Dim, offset: usize) -> Result<Blade, ParseError> {
    let indices: Vec<(usize, usize)> = digits
        .bytes()
        .enumerate()
        .map(|(i, b)| ((b - b'0') as usize, offset + 1 + i))
        .collect();
    build_blade(&indices, dim, offset)
}

fn build_blade(indices: &[(usize, usize)], dim: Dim, offset: usize) -> Result<Blade, ParseError> {
    let mut prev = 0;
    for &(j, at) in indices {
        if j == 0 || j > dim.get() {
            return Err(ParseError {
                offset: at,
                kind: ParseErrorKind::BladeOutOfRange {
                    index: j,
                    m: dim.get(),
                },
            });
        }
        if j <= prev {
            return Err(ParseError {
                offset,
                kind: ParseErrorKind::UnsortedBlade,
            });
        }
        prev = j;
    }
    let gens: Vec<usize> = indices.iter().map(|(j, _)| *j).collect();
    Ok(Blade::from_generators(dim, &gens).expect("indices validated"))
}

/// Parses an expression into a polynomial over `R_{0,m}`.
pub fn parse_expr(text: &str, m: usize) -> Result<CliffordPolynomial, ParseError> {
    let dim = Dim::new(m).map_err(|_| ParseError {
        offset: 0,
        kind: ParseErrorKind::InvalidDimension(m),
    })?;
    let mut parser = Parser {
        toks: lex(text)?,
        pos: 0,
        dim,
    };
    let out = parser.expr()?;
    if *parser.peek() != Tok::End {
        return Err(parser.unexpected("an operator or end of input"));
    }
    Ok(out)
}

/// Parses a blade name: `1`, `e12` or `e[1,12]`.
pub fn parse_blade(text: &str, dim: Dim) -> Result<Blade, ParseError> {
    if text == "1" {
        return Ok(Blade::SCALAR);
    }
    let mut parser = Parser {
        toks: lex(text)?,
        pos: 0,
        dim,
    };
    let (offset, tok) = parser.bump();
    let blade = match tok {
        Tok::Ident(name) if name == "e" && *parser.peek() == Tok::LBracket => {
            parser.bracket_blade(offset)?
        }
        Tok::Ident(name)
            if name.len() > 1
                && name.starts_with('e')
                && name[1..].bytes().all(|b| b.is_ascii_digit()) =>
        {
            compact_blade(&name[1..], dim, offset)?
        }
        _ => {
            parser.pos = 0;
            return Err(parser.unexpected("a blade such as `1`, `e12` or `e[1,12]`"));
        }
    };
    if *parser.peek() != Tok::End {
        return Err(parser.unexpected("end of blade name"));
    }
    Ok(blade)
}

/// Parses `p`, `-p` or `p/q` exactly (no whitespace, `q > 0`).
pub fn parse_rational(text: &str) -> Result<BigRational, ParseError> {
    let bad = |offset: usize| ParseError {
        offset,
        kind: ParseErrorKind::Unexpected {
            found: format!("`{text}`"),
            expected: "a rational such as `3`, `-7/3` or `1/2`",
        },
    };
    let (negative, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text),
    };
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (body, None),
    };
    let digits_ok = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
    if !digits_ok(num) || !den.is_none_or(digits_ok) {
        return Err(bad(0));
    }
    let numer: BigInt = natural(num, usize::from(negative))?;
    let denom: BigInt = match den {
        Some(d) => natural(d, text.len() - d.len())?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(ParseError {
            offset: text.len() - den.map_or(0, str::len),
            kind: ParseErrorKind::ZeroDenominator,
        });
    }
    let value = BigRational::new(numer, denom);
    Ok(if negative { -value } else { value })
}
