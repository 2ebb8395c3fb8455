//! Expressions for elements of R.
//!
//! ```text
//! expr     := "0" | [sign] term { sign term }
//! sign     := "+" | "-" | "−"
//! term     := [ integer "*" ] factor { "x" factor }
//! factor   := "d(" seg ")" | "z(" point ")" | "L(" seg "," seg ")" | "c(" point ")" | "1"
//! seg      := line_id "," rational "," rational
//! point    := line_id ":" rational
//! rational := ["-"] integer [ "/" positive-integer ]
//! ```
//!
//! Whitespace is ignored between tokens. `d` is δ(Δ), `c` a cuspidal
//! point, `z` the class 𝔷([p, ν_ρ p]), `L` the Langlands class of a linked
//! pair and `x` the product.

use crate::error::{Error, Result};
use crate::model::{LineSet, Multisegment, Point, RElem, Rational, Segment};
use crate::structure::{langlands_class, zelevinsky_class};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SegSpec {
    pub line: String,
    pub start: Rational,
    pub end: Rational,
    pub column: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSpec {
    pub line: String,
    pub e: Rational,
    pub column: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Factor {
    Delta(SegSpec),
    Cusp(PointSpec),
    Zelevinsky(PointSpec),
    Langlands(SegSpec, SegSpec),
    One,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coeff: i64,
    pub factors: Vec<Factor>,
}

/// Parse tree of an expression; resolve it against a line set with
/// [`ExprAst::eval`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExprAst {
    pub terms: Vec<Term>,
}

impl SegSpec {
    pub fn resolve(&self, lines: &LineSet) -> Result<Segment> {
        Segment::new(lines.get(&self.line)?.clone(), self.start, self.end)
    }
}

impl PointSpec {
    pub fn resolve(&self, lines: &LineSet) -> Result<Point> {
        Ok(Point::new(lines.get(&self.line)?.clone(), self.e))
    }
}

impl Factor {
    fn eval(&self, lines: &LineSet) -> Result<RElem> {
        Ok(match self {
            Factor::Delta(s) => RElem::delta(s.resolve(lines)?),
            Factor::Cusp(p) => RElem::basis(Multisegment::point(&p.resolve(lines)?)),
            Factor::Zelevinsky(p) => zelevinsky_class(&p.resolve(lines)?),
            Factor::Langlands(a, b) => langlands_class(&a.resolve(lines)?, &b.resolve(lines)?)?,
            Factor::One => RElem::one(),
        })
    }
}

impl ExprAst {
    pub fn eval(&self, lines: &LineSet) -> Result<RElem> {
        let mut total = RElem::zero();
        for term in &self.terms {
            let mut value = RElem::one().scale(term.coeff);
            for f in &term.factors {
                value = &value * &f.eval(lines)?;
            }
            total += &value;
        }
        Ok(total)
    }
}

/// Parses and evaluates `text`.
pub fn parse_expr(text: &str, lines: &LineSet) -> Result<RElem> {
    parse_ast(text)?.eval(lines)
}

pub fn parse_ast(text: &str) -> Result<ExprAst> {
    let mut p = Parser::new(text);
    let ast = p.expr()?;
    p.end()?;
    Ok(ast)
}

/// `rho,0,1`.
pub fn parse_segment(text: &str, lines: &LineSet) -> Result<Segment> {
    let mut p = Parser::new(text);
    let s = p.seg()?;
    p.end()?;
    s.resolve(lines)
}

/// `rho:1/2`.
pub fn parse_point(text: &str, lines: &LineSet) -> Result<Point> {
    let mut p = Parser::new(text);
    let pt = p.point()?;
    p.end()?;
    pt.resolve(lines)
}

/// Comma-separated points; an empty string is the empty list.
pub fn parse_points(text: &str, lines: &LineSet) -> Result<Vec<Point>> {
    let mut p = Parser::new(text);
    let mut out = Vec::new();
    if p.at_end() {
        return Ok(out);
    }
    loop {
        out.push(p.point()?.resolve(lines)?);
        if !p.eat(',') {
            break;
        }
    }
    p.end()?;
    Ok(out)
}

/// Support profile `points;points;…`, one component per tensor factor.
pub fn parse_profile(text: &str, lines: &LineSet) -> Result<Vec<Vec<Point>>> {
    text.split(';').map(|part| parse_points(part, lines)).collect()
}

pub(crate) fn parse_rational_str(text: &str) -> Option<Rational> {
    let mut p = Parser::new(text);
    let r = p.rational().ok()?;
    p.end().ok()?;
    Some(r)
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn new(text: &str) -> Self {
        Parser { chars: text.chars().collect(), pos: 0 }
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { column: self.pos + 1, message: message.into() })
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            match self.peek() {
                Some(found) => self.err(format!("expected `{c}`, found `{found}`")),
                None => self.err(format!("expected `{c}`, found end of input")),
            }
        }
    }

    fn end(&mut self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(c) => self.err(format!("unexpected `{c}`")),
        }
    }

    fn sign(&mut self) -> Option<i64> {
        match self.peek() {
            Some('+') => {
                self.pos += 1;
                Some(1)
            }
            Some('-' | '\u{2212}') => {
                self.pos += 1;
                Some(-1)
            }
            _ => None,
        }
    }

    fn expr(&mut self) -> Result<ExprAst> {
        if self.peek() == Some('0') {
            let save = self.pos;
            self.pos += 1;
            if self.at_end() {
                return Ok(ExprAst { terms: Vec::new() });
            }
            self.pos = save;
        }
        let mut terms = Vec::new();
        let mut sign = self.sign().unwrap_or(1);
        loop {
            let mut term = self.term()?;
            term.coeff *= sign;
            terms.push(term);
            match self.sign() {
                Some(s) => sign = s,
                None => break,
            }
        }
        Ok(ExprAst { terms })
    }

    fn term(&mut self) -> Result<Term> {
        let mut coeff = 1;
        let mut factors = Vec::new();
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let n = self.unsigned()?;
            if self.eat('*') {
                coeff = n;
            } else if n == 1 {
                factors.push(Factor::One);
            } else {
                return self.err("expected `*` after coefficient");
            }
        }
        if factors.is_empty() {
            factors.push(self.factor()?);
        }
        while self.eat('x') {
            factors.push(self.factor()?);
        }
        Ok(Term { coeff, factors })
    }

    fn factor(&mut self) -> Result<Factor> {
        let Some(c) = self.peek() else {
            return self.err("expected a factor, found end of input");
        };
        let head = self.pos;
        self.pos += 1;
        if c == '1' {
            return Ok(Factor::One);
        }
        if !matches!(c, 'd' | 'c' | 'z' | 'L') || !self.eat('(') {
            self.pos = head;
            return self.err("expected a factor: d(...), c(...), z(...), L(...) or 1");
        }
        let f = match c {
            'd' => Factor::Delta(self.seg()?),
            'c' => Factor::Cusp(self.point()?),
            'z' => Factor::Zelevinsky(self.point()?),
            _ => {
                let a = self.seg()?;
                self.expect(',')?;
                Factor::Langlands(a, self.seg()?)
            }
        };
        self.expect(')')?;
        Ok(f)
    }

    fn ident(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        match self.chars.get(self.pos) {
            Some(c) if c.is_ascii_alphabetic() || *c == '_' => self.pos += 1,
            _ => return self.err("expected a line id"),
        }
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_alphanumeric() || *c == '_' || *c == '\'') {
            self.pos += 1;
        }
        Ok(self.chars[start..self.pos].iter().collect())
    }

    fn seg(&mut self) -> Result<SegSpec> {
        self.skip_ws();
        let column = self.pos + 1;
        let line = self.ident()?;
        self.expect(',')?;
        let start = self.rational()?;
        self.expect(',')?;
        let end = self.rational()?;
        Ok(SegSpec { line, start, end, column })
    }

    fn point(&mut self) -> Result<PointSpec> {
        self.skip_ws();
        let column = self.pos + 1;
        let line = self.ident()?;
        self.expect(':')?;
        let e = self.rational()?;
        Ok(PointSpec { line, e, column })
    }

    fn unsigned(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(char::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        digits.parse().or_else(|_| {
            self.pos = start;
            self.err("integer out of range")
        })
    }

    fn rational(&mut self) -> Result<Rational> {
        let negative = matches!(self.peek(), Some('-' | '\u{2212}'));
        if negative {
            self.pos += 1;
        }
        let num = self.unsigned()?;
        let num = if negative { -num } else { num };
        if self.eat('/') {
            let den = self.unsigned()?;
            if den == 0 {
                return self.err("zero denominator");
            }
            return Ok(Rational::new(num, den));
        }
        Ok(Rational::from_integer(num))
    }
}
