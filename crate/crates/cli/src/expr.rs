//! Surface syntax for polynomials.
//!
//! ```text
//! expr  := term (("+" | "-") term)*
//! term  := unary ("*" unary)*
//! unary := "-" unary | power
//! power := atom ("^" INT)?
//! atom  := NUM ("/" NUM)? | "X" | "Y" | "(" expr ")"
//!        | "comm" "(" expr "," expr ")" | "box" "(" expr ")" | "T" "(" INT ")"
//! ```
//!
//! A fraction literal is a single token, so `3/2^2` is `(3/2)^2`.

use std::fmt;

use freelnd::constants::{box_op, t_sequence};
use freelnd::ncalg::{NCPoly, Rational};
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    /// Nonnegative literal; negation is always explicit.
    Num(Rational),
    X,
    Y,
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Pow(Box<Expr>, u32),
    Comm(Box<Expr>, Box<Expr>),
    Box(Box<Expr>),
    T(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("{0} needs the ambient F; pass --f")]
    MissingF(&'static str),
    #[error("T(i) is defined for i >= 1")]
    TIndex,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(Rational),
    Int(String),
    Ident(String),
    Sym(char),
    End,
}

struct Lexer<'a> {
    src: &'a str,
    toks: Vec<(Tok, usize)>,
}

impl<'a> Lexer<'a> {
    fn run(src: &'a str) -> Result<Vec<(Tok, usize)>, ParseError> {
        let mut lx = Lexer { src, toks: Vec::new() };
        let bytes = src.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            let c = bytes[i] as char;
            if c.is_ascii_whitespace() {
                i += 1;
            } else if c.is_ascii_digit() {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let mut fraction = false;
                if i + 1 < bytes.len() && bytes[i] == b'/' && bytes[i + 1].is_ascii_digit() {
                    fraction = true;
                    i += 1;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                }
                let text = &src[start..i];
                let value: Rational = text.parse().map_err(|_| position(src, start, "invalid number or zero denominator"))?;
                let tok = if fraction { Tok::Num(value) } else { Tok::Int(text.to_string()) };
                lx.toks.push((tok, start));
            } else if c.is_ascii_alphabetic() {
                let start = i;
                while i < bytes.len() && (bytes[i] as char).is_ascii_alphanumeric() {
                    i += 1;
                }
                lx.toks.push((Tok::Ident(src[start..i].to_string()), start));
            } else if "+-*^(),".contains(c) {
                lx.toks.push((Tok::Sym(c), i));
                i += 1;
            } else {
                let ch = src[i..].chars().next().unwrap_or(c);
                return Err(position(src, i, &format!("unexpected character '{ch}'")));
            }
        }
        lx.toks.push((Tok::End, lx.src.len()));
        Ok(lx.toks)
    }
}

fn position(src: &str, offset: usize, message: &str) -> ParseError {
    let before = &src[..offset];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().unwrap_or("").chars().count() + 1;
    ParseError { line, column, message: message.to_string() }
}

struct Parser<'a> {
    src: &'a str,
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn err<T>(&self, message: &str) -> Result<T, ParseError> {
        Err(position(self.src, self.toks[self.pos].1, message))
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if *self.peek() == Tok::Sym(c) {
            self.bump();
            Ok(())
        } else {
            self.err(&format!("expected '{c}'"))
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Tok::Sym('+') => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Sym('-') => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        while *self.peek() == Tok::Sym('*') {
            self.bump();
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if *self.peek() == Tok::Sym('-') {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if *self.peek() != Tok::Sym('^') {
            return Ok(base);
        }
        self.bump();
        match self.peek().clone() {
            Tok::Int(s) => match s.parse::<u32>() {
                Ok(e) => {
                    self.bump();
                    Ok(Expr::Pow(Box::new(base), e))
                }
                Err(_) => self.err("exponent too large"),
            },
            _ => self.err("expected a nonnegative integer exponent"),
        }
    }

    fn int_arg(&mut self) -> Result<usize, ParseError> {
        match self.peek().clone() {
            Tok::Int(s) => match s.parse() {
                Ok(i) => {
                    self.bump();
                    Ok(i)
                }
                Err(_) => self.err("index too large"),
            },
            _ => self.err("expected an integer index"),
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek().clone() {
            Tok::Num(r) => {
                self.bump();
                Ok(Expr::Num(r))
            }
            Tok::Int(s) => {
                self.bump();
                Ok(Expr::Num(s.parse().expect("digits")))
            }
            Tok::Sym('(') => {
                self.bump();
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Tok::Ident(name) => match name.as_str() {
                "X" => {
                    self.bump();
                    Ok(Expr::X)
                }
                "Y" => {
                    self.bump();
                    Ok(Expr::Y)
                }
                "comm" => {
                    self.bump();
                    self.expect('(')?;
                    let a = self.expr()?;
                    self.expect(',')?;
                    let b = self.expr()?;
                    self.expect(')')?;
                    Ok(Expr::Comm(Box::new(a), Box::new(b)))
                }
                "box" => {
                    self.bump();
                    self.expect('(')?;
                    let a = self.expr()?;
                    self.expect(')')?;
                    Ok(Expr::Box(Box::new(a)))
                }
                "T" => {
                    self.bump();
                    self.expect('(')?;
                    let i = self.int_arg()?;
                    self.expect(')')?;
                    Ok(Expr::T(i))
                }
                _ => self.err(&format!("unknown identifier '{name}'")),
            },
            Tok::End => self.err("unexpected end of input"),
            _ => self.err("expected an operand"),
        }
    }
}

pub fn parse(src: &str) -> Result<Expr, ParseError> {
    let toks = Lexer::run(src)?;
    let mut p = Parser { src, toks, pos: 0 };
    let e = p.expr()?;
    match p.peek() {
        Tok::End => Ok(e),
        _ => p.err("unexpected trailing input"),
    }
}

// Binding levels used by the printer: sum 1, product 2, unary 3, power 4, atom 5.
fn level(e: &Expr) -> u8 {
    match e {
        Expr::Add(..) | Expr::Sub(..) => 1,
        Expr::Mul(..) => 2,
        Expr::Neg(_) => 3,
        Expr::Pow(..) => 4,
        Expr::Num(r) if !r.is_integer() => 4,
        _ => 5,
    }
}

fn write_at(f: &mut fmt::Formatter<'_>, e: &Expr, min: u8) -> fmt::Result {
    if level(e) < min {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Num(r) => write!(f, "{r}"),
            Expr::X => f.write_str("X"),
            Expr::Y => f.write_str("Y"),
            Expr::Add(a, b) | Expr::Sub(a, b) => {
                write_at(f, a, 1)?;
                f.write_str(if matches!(self, Expr::Add(..)) { " + " } else { " - " })?;
                write_at(f, b, 2)
            }
            Expr::Mul(a, b) => {
                write_at(f, a, 2)?;
                f.write_str("*")?;
                write_at(f, b, 3)
            }
            Expr::Neg(a) => {
                f.write_str("-")?;
                write_at(f, a, 3)
            }
            Expr::Pow(a, e) => {
                write_at(f, a, 5)?;
                write!(f, "^{e}")
            }
            Expr::Comm(a, b) => write!(f, "comm({a}, {b})"),
            Expr::Box(a) => write!(f, "box({a})"),
            Expr::T(i) => write!(f, "T({i})"),
        }
    }
}

/// Evaluates with `F` available to `box` and `T(i)`, `i >= 2`.
pub fn eval(e: &Expr, f: Option<&NCPoly>) -> Result<NCPoly, EvalError> {
    Ok(match e {
        Expr::Num(r) => NCPoly::constant(r.clone()),
        Expr::X => NCPoly::x(),
        Expr::Y => NCPoly::y(),
        Expr::Add(a, b) => &eval(a, f)? + &eval(b, f)?,
        Expr::Sub(a, b) => &eval(a, f)? - &eval(b, f)?,
        Expr::Mul(a, b) => &eval(a, f)? * &eval(b, f)?,
        Expr::Neg(a) => -&eval(a, f)?,
        Expr::Pow(a, k) => eval(a, f)?.pow(*k as usize),
        Expr::Comm(a, b) => eval(a, f)?.commutator(&eval(b, f)?),
        Expr::Box(a) => box_op(&eval(a, f)?, f.ok_or(EvalError::MissingF("box"))?),
        Expr::T(0) => return Err(EvalError::TIndex),
        Expr::T(1) => NCPoly::t1(),
        Expr::T(i) => t_sequence(*i, f.ok_or(EvalError::MissingF("T(i) for i >= 2"))?),
    })
}
