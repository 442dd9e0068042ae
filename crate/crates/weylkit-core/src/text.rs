//! Text grammar shared by polynomials and algebra elements.
//!
//! The grammar is a small arithmetic-expression language:
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := factor ('*' factor)*
//! factor  := '-' factor | primary ('^' '-'? integer)?
//! primary := number | ident | LETTER '[' ints ']' | 'Y' '(' ints ')' | '(' expr ')'
//! number  := integer ('/' integer)?
//! ```
//!
//! Group-basis atoms (`T[...]`, `s[...]`, `r[...]`) and `Y(...)` monomials
//! are enabled per caller through [`ExprSemantics`]; plain polynomial
//! parsing only uses numbers and identifiers.

use crate::error::AlgError;
use crate::laurent::{LaurentPoly, VarList};
use crate::rational::Rational;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::One;

/// Hooks that give meaning to parsed atoms and operations.
pub trait ExprSemantics {
    type Value: Clone;

    fn number(&self, r: Rational) -> Result<Self::Value, AlgError>;
    fn ident(&self, name: &str) -> Result<Self::Value, AlgError>;
    /// Basis word like `T[1,2]`; indices are 1-based generator numbers.
    fn group_word(&self, word: &[usize]) -> Result<Self::Value, AlgError>;
    /// Monomial `Y(e1,...,er)` with signed exponents.
    fn y_monomial(&self, exps: &[i64]) -> Result<Self::Value, AlgError>;
    /// The letter that introduces a basis word, or `None` to disable.
    fn group_letter(&self) -> Option<char>;
    /// Whether `Y(...)` atoms are accepted.
    fn allows_y(&self) -> bool;

    fn add(&self, a: Self::Value, b: Self::Value) -> Result<Self::Value, AlgError>;
    fn sub(&self, a: Self::Value, b: Self::Value) -> Result<Self::Value, AlgError>;
    fn mul(&self, a: Self::Value, b: Self::Value) -> Result<Self::Value, AlgError>;
    fn neg(&self, a: Self::Value) -> Result<Self::Value, AlgError>;
    fn pow(&self, a: Self::Value, k: i64) -> Result<Self::Value, AlgError>;
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(Rational),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    LBrack,
    RBrack,
    Comma,
}

fn lex(input: &str) -> Result<Vec<Tok>, AlgError> {
    let mut toks = Vec::new();
    let bytes = input.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                toks.push(Tok::Plus);
                i += 1;
            }
            '-' => {
                toks.push(Tok::Minus);
                i += 1;
            }
            '*' => {
                toks.push(Tok::Star);
                i += 1;
            }
            '^' => {
                toks.push(Tok::Caret);
                i += 1;
            }
            '(' => {
                toks.push(Tok::LParen);
                i += 1;
            }
            ')' => {
                toks.push(Tok::RParen);
                i += 1;
            }
            '[' => {
                toks.push(Tok::LBrack);
                i += 1;
            }
            ']' => {
                toks.push(Tok::RBrack);
                i += 1;
            }
            ',' => {
                toks.push(Tok::Comma);
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let num: BigInt = input[start..i]
                    .parse()
                    .map_err(|_| AlgError::Parse(format!("bad integer at byte {start}")))?;
                let mut den = BigInt::one();
                if i < bytes.len() && bytes[i] == b'/' {
                    let dstart = i + 1;
                    let mut j = dstart;
                    while j < bytes.len() && bytes[j].is_ascii_digit() {
                        j += 1;
                    }
                    if j == dstart {
                        return Err(AlgError::Parse(format!(
                            "expected digits after '/' at byte {dstart}"
                        )));
                    }
                    den = input[dstart..j]
                        .parse()
                        .map_err(|_| AlgError::Parse(format!("bad integer at byte {dstart}")))?;
                    i = j;
                }
                if den == BigInt::from(0) {
                    return Err(AlgError::DivisionByZero);
                }
                toks.push(Tok::Num(Rational::new(num, den)));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len()
                    && ((bytes[i] as char).is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                toks.push(Tok::Ident(input[start..i].to_string()));
            }
            _ => {
                return Err(AlgError::Parse(format!(
                    "unexpected character `{c}` at byte {i}"
                )))
            }
        }
    }
    Ok(toks)
}

struct Parser<'a, S: ExprSemantics> {
    sem: &'a S,
    toks: Vec<Tok>,
    pos: usize,
}

impl<'a, S: ExprSemantics> Parser<'a, S> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, t: &Tok, what: &str) -> Result<(), AlgError> {
        match self.next() {
            Some(got) if got == *t => Ok(()),
            other => Err(AlgError::Parse(format!(
                "expected {what}, got {other:?} at token {}",
                self.pos
            ))),
        }
    }

    fn expr(&mut self) -> Result<S::Value, AlgError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    acc = self.sem.add(acc, rhs)?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    acc = self.sem.sub(acc, rhs)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<S::Value, AlgError> {
        let mut acc = self.factor()?;
        while matches!(self.peek(), Some(Tok::Star)) {
            self.pos += 1;
            let rhs = self.factor()?;
            acc = self.sem.mul(acc, rhs)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<S::Value, AlgError> {
        if matches!(self.peek(), Some(Tok::Minus)) {
            self.pos += 1;
            let inner = self.factor()?;
            return self.sem.neg(inner);
        }
        let base = self.primary()?;
        if matches!(self.peek(), Some(Tok::Caret)) {
            self.pos += 1;
            let mut sign = 1i64;
            if matches!(self.peek(), Some(Tok::Minus)) {
                self.pos += 1;
                sign = -1;
            }
            match self.next() {
                Some(Tok::Num(r)) if r.denom().is_one() => {
                    let k: i64 = r.numer().try_into().map_err(|_| {
                        AlgError::Parse("exponent too large".into())
                    })?;
                    return self.sem.pow(base, sign * k);
                }
                other => {
                    return Err(AlgError::Parse(format!(
                        "expected integer exponent, got {other:?}"
                    )))
                }
            }
        }
        Ok(base)
    }

    fn int_list_signed(&mut self, close: &Tok) -> Result<Vec<i64>, AlgError> {
        let mut out = Vec::new();
        if self.peek() == Some(close) {
            self.pos += 1;
            return Ok(out);
        }
        loop {
            let mut sign = 1i64;
            if matches!(self.peek(), Some(Tok::Minus)) {
                self.pos += 1;
                sign = -1;
            }
            match self.next() {
                Some(Tok::Num(r)) if r.denom().is_one() => {
                    let k: i64 = r.numer().try_into().map_err(|_| {
                        AlgError::Parse("index too large".into())
                    })?;
                    out.push(sign * k);
                }
                other => {
                    return Err(AlgError::Parse(format!(
                        "expected integer in list, got {other:?}"
                    )))
                }
            }
            match self.next() {
                Some(Tok::Comma) => continue,
                Some(ref t) if t == close => break,
                other => {
                    return Err(AlgError::Parse(format!(
                        "expected `,` or list close, got {other:?}"
                    )))
                }
            }
        }
        Ok(out)
    }

    fn primary(&mut self) -> Result<S::Value, AlgError> {
        match self.next() {
            Some(Tok::Num(r)) => self.sem.number(r),
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                self.expect(&Tok::RParen, "`)`")?;
                Ok(inner)
            }
            Some(Tok::Ident(name)) => {
                if self.sem.group_letter() == name.chars().next()
                    && name.len() == 1
                    && matches!(self.peek(), Some(Tok::LBrack))
                {
                    self.pos += 1;
                    let list = self.int_list_signed(&Tok::RBrack)?;
                    let mut word = Vec::with_capacity(list.len());
                    for k in list {
                        if k < 1 {
                            return Err(AlgError::Parse(
                                "generator indices are 1-based positive integers".into(),
                            ));
                        }
                        word.push((k - 1) as usize);
                    }
                    return self.sem.group_word(&word);
                }
                if name == "Y" && self.sem.allows_y() && matches!(self.peek(), Some(Tok::LParen)) {
                    self.pos += 1;
                    let exps = self.int_list_signed(&Tok::RParen)?;
                    return self.sem.y_monomial(&exps);
                }
                self.sem.ident(&name)
            }
            other => Err(AlgError::Parse(format!(
                "expected a value, got {other:?}"
            ))),
        }
    }
}

/// Parses an expression under the given semantics; the whole input must be
/// consumed.
pub fn parse_expr<S: ExprSemantics>(sem: &S, input: &str) -> Result<S::Value, AlgError> {
    let toks = lex(input)?;
    if toks.is_empty() {
        return Err(AlgError::Parse("empty input".into()));
    }
    let mut p = Parser { sem, toks, pos: 0 };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(AlgError::Parse(format!(
            "unexpected trailing input at token {}",
            p.pos
        )));
    }
    Ok(v)
}

struct PolySemantics {
    vars: VarList,
}

impl ExprSemantics for PolySemantics {
    type Value = LaurentPoly;

    fn number(&self, r: Rational) -> Result<LaurentPoly, AlgError> {
        Ok(LaurentPoly::constant(&self.vars, r))
    }

    fn ident(&self, name: &str) -> Result<LaurentPoly, AlgError> {
        LaurentPoly::var(&self.vars, name)
            .map_err(|_| AlgError::Parse(format!("unknown variable `{name}`")))
    }

    fn group_word(&self, _word: &[usize]) -> Result<LaurentPoly, AlgError> {
        Err(AlgError::Parse("basis words not allowed here".into()))
    }

    fn y_monomial(&self, _exps: &[i64]) -> Result<LaurentPoly, AlgError> {
        Err(AlgError::Parse("Y(...) not allowed here".into()))
    }

    fn group_letter(&self) -> Option<char> {
        None
    }

    fn allows_y(&self) -> bool {
        false
    }

    fn add(&self, a: LaurentPoly, b: LaurentPoly) -> Result<LaurentPoly, AlgError> {
        a.add(&b)
    }

    fn sub(&self, a: LaurentPoly, b: LaurentPoly) -> Result<LaurentPoly, AlgError> {
        a.sub(&b)
    }

    fn mul(&self, a: LaurentPoly, b: LaurentPoly) -> Result<LaurentPoly, AlgError> {
        a.mul(&b)
    }

    fn neg(&self, a: LaurentPoly) -> Result<LaurentPoly, AlgError> {
        Ok(a.neg())
    }

    fn pow(&self, a: LaurentPoly, k: i64) -> Result<LaurentPoly, AlgError> {
        if k >= 0 {
            a.pow(k as u32)
        } else {
            a.invert_monomial()?.pow((-k) as u32)
        }
    }
}

/// Parses a Laurent polynomial over the given variables from canonical or
/// free-form arithmetic text.
pub fn parse_poly(vars: &VarList, input: &str) -> Result<LaurentPoly, AlgError> {
    parse_expr(
        &PolySemantics {
            vars: vars.clone(),
        },
        input,
    )
}
