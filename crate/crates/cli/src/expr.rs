//! Parser for generating-function expressions such as `z/(1-z-z^2-z^3-z^4)`.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | 'z' | '(' expr ')'
//! ```
//!
//! Whitespace is ignored; implicit multiplication is rejected.

use num_bigint::BigInt;
use seqlab_core::{BigRational, Polynomial, RationalFunction};
use thiserror::Error;

/// Largest accepted exponent; keeps `z^999999999` from exhausting memory.
pub const MAX_EXPONENT: u32 = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at position {pos}: {msg}")]
pub struct ParseError {
    /// Zero-based character offset into the input.
    pub pos: usize,
    pub msg: String,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ExprError {
    #[error(transparent)]
    Syntax(#[from] ParseError),
    #[error("not a power series: {0}")]
    Normalize(seqlab_core::Error),
}

/// Quotient of polynomials kept free of common factors.
#[derive(Debug, Clone)]
struct Frac {
    num: Polynomial,
    den: Polynomial,
}

impl Frac {
    fn poly(p: Polynomial) -> Self {
        Frac {
            num: p,
            den: Polynomial::one(),
        }
    }

    fn normalized(num: Polynomial, den: Polynomial) -> Self {
        if num.is_zero() {
            return Frac::poly(Polynomial::zero());
        }
        let g = num.gcd(&den).expect("den is nonzero");
        let num = num.divrem(&g).expect("nonzero gcd").0;
        let den = den.divrem(&g).expect("nonzero gcd").0;
        Frac { num, den }
    }

    fn add(&self, o: &Frac, sign: i64) -> Frac {
        let rhs = (&o.num * &self.den).scale(&BigRational::from_integer(sign.into()));
        Frac::normalized(&(&self.num * &o.den) + &rhs, &self.den * &o.den)
    }

    fn mul(&self, o: &Frac) -> Frac {
        Frac::normalized(&self.num * &o.num, &self.den * &o.den)
    }

    fn div(&self, o: &Frac) -> Option<Frac> {
        if o.num.is_zero() {
            return None;
        }
        Some(Frac::normalized(&self.num * &o.den, &self.den * &o.num))
    }

    fn neg(&self) -> Frac {
        Frac {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    fn pow(&self, e: u32) -> Frac {
        Frac {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }
}

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    idx: usize,
    src: &'a str,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        let chars = src
            .chars()
            .enumerate()
            .filter(|(_, c)| !c.is_whitespace())
            .collect();
        Parser { chars, idx: 0, src }
    }

    fn pos(&self) -> usize {
        self.chars
            .get(self.idx)
            .map_or_else(|| self.src.chars().count(), |&(p, _)| p)
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.idx).map(|&(_, c)| c)
    }

    fn bump(&mut self) {
        self.idx += 1;
    }

    fn fail<T>(&self, pos: usize, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            pos,
            msg: msg.into(),
        })
    }

    fn expr(&mut self) -> Result<Frac, ParseError> {
        let mut acc = self.term()?;
        while let Some(c @ ('+' | '-')) = self.peek() {
            self.bump();
            let rhs = self.term()?;
            acc = acc.add(&rhs, if c == '+' { 1 } else { -1 });
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Frac, ParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.bump();
                    acc = acc.mul(&self.unary()?);
                }
                Some('/') => {
                    self.bump();
                    let at = self.pos();
                    let rhs = self.unary()?;
                    acc = match acc.div(&rhs) {
                        Some(q) => q,
                        None => return self.fail(at, "division by zero"),
                    };
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Frac, ParseError> {
        match self.peek() {
            Some('-') => {
                self.bump();
                Ok(self.unary()?.neg())
            }
            Some('+') => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Frac, ParseError> {
        let base = self.atom()?;
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.bump();
        let at = self.pos();
        if self.peek() == Some('-') {
            return self.fail(at, "exponent must be a non-negative integer");
        }
        let e = self.integer()?;
        match e.try_into() {
            Ok(e) if e <= MAX_EXPONENT => Ok(base.pow(e)),
            _ => self.fail(at, format!("exponent exceeds {MAX_EXPONENT}")),
        }
    }

    fn atom(&mut self) -> Result<Frac, ParseError> {
        let at = self.pos();
        match self.peek() {
            Some('z') => {
                self.bump();
                let f = Frac::poly(Polynomial::z());
                self.reject_juxtaposition()?;
                Ok(f)
            }
            Some('(') => {
                self.bump();
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    return self.fail(self.pos(), "expected ')'");
                }
                self.bump();
                self.reject_juxtaposition()?;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                self.reject_juxtaposition()?;
                Ok(Frac::poly(Polynomial::constant(BigRational::from_integer(
                    n,
                ))))
            }
            Some(c) => self.fail(at, format!("unexpected '{c}'")),
            None => self.fail(at, "unexpected end of input"),
        }
    }

    fn reject_juxtaposition(&self) -> Result<(), ParseError> {
        match self.peek() {
            Some(c) if c == 'z' || c == '(' || c.is_ascii_digit() => self.fail(
                self.pos(),
                "implicit multiplication is not supported; use '*'",
            ),
            _ => Ok(()),
        }
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        let at = self.pos();
        let mut digits = String::new();
        // digits separated by whitespace would be two numbers
        let mut last = None;
        while let Some(&(p, c)) = self.chars.get(self.idx) {
            if !c.is_ascii_digit() || last.is_some_and(|l| p != l + 1) {
                break;
            }
            digits.push(c);
            last = Some(p);
            self.bump();
        }
        if digits.is_empty() {
            return self.fail(at, "expected an integer");
        }
        Ok(digits.parse().expect("ascii digits"))
    }
}

/// Parse `src` into a reduced rational generating function.
pub fn parse_gf(src: &str) -> Result<RationalFunction, ExprError> {
    let mut p = Parser::new(src);
    let f = p.expr()?;
    if let Some(c) = p.peek() {
        return Err(p
            .fail::<()>(p.pos(), format!("unexpected '{c}'"))
            .unwrap_err()
            .into());
    }
    RationalFunction::reduce(f.num, f.den).map_err(ExprError::Normalize)
}

/// Character offset of a syntax error, if that is what `e` is.
pub fn error_position(e: &ExprError) -> Option<usize> {
    match e {
        ExprError::Syntax(p) => Some(p.pos),
        ExprError::Normalize(_) => None,
    }
}
