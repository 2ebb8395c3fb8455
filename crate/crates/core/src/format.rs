//! Text rendering in the expression syntax accepted by the parser.
//!
//! A segment prints as `d(rho,0,1)`, a label as its segments joined by
//! ` x ` (the empty label is `1`), tensor factors are joined by ` (x) `.

use std::fmt::{self, Write};

use crate::model::{CuspSum, CuspWord, Multisegment, Point, RElem, Rational, Segment, TensorElem};

pub fn rational(r: &Rational) -> String {
    r.to_string()
}

pub fn point(p: &Point) -> String {
    format!("{}:{}", p.line(), p.exponent())
}

/// `rho,0,1`, the form taken by the `decide` and `tempered` commands.
pub fn segment_args(s: &Segment) -> String {
    format!("{},{},{}", s.line(), s.start(), s.end())
}

pub fn segment(s: &Segment) -> String {
    format!("d({})", segment_args(s))
}

pub fn label(m: &Multisegment) -> String {
    if m.is_empty() {
        return "1".to_string();
    }
    m.entries().iter().map(segment).collect::<Vec<_>>().join(" x ")
}

pub fn tuple(t: &[Multisegment]) -> String {
    t.iter().map(label).collect::<Vec<_>>().join(" (x) ")
}

/// `+ d(rho,0,0) x d(rho,1,1) − d(rho,0,1)`; the zero element is `0`.
pub fn relem_inline(x: &RElem) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (m, c) in x.terms() {
        if !out.is_empty() {
            out.push(' ');
        }
        out.push_str(if c < 0 { "\u{2212} " } else { "+ " });
        if c.abs() != 1 {
            write!(out, "{}*", c.abs()).unwrap();
        }
        out.push_str(&label(m));
    }
    out
}

/// One `coefficient label` line per term.
pub fn relem_lines(x: &RElem) -> Vec<String> {
    x.terms().map(|(m, c)| format!("{c} {}", label(m))).collect()
}

/// One `coefficient factor (x) factor …` line per term.
pub fn tensor_lines(t: &TensorElem) -> Vec<String> {
    t.terms().map(|(k, c)| format!("{c} {}", tuple(k))).collect()
}

/// `(1,0,1)` with bare exponents, or `(rho:1,sigma:0)` with line ids.
pub fn word(w: &CuspWord, bare: bool) -> String {
    let letters: Vec<String> =
        w.points().iter().map(|p| if bare { p.exponent().to_string() } else { point(p) }).collect();
    format!("({})", letters.join(","))
}

/// One `coefficient word` line per term; exponents are bare when every
/// letter lies on one line.
pub fn cusp_lines(s: &CuspSum) -> Vec<String> {
    let bare = s.single_line();
    s.terms().map(|(w, c)| format!("{c} {}", word(w, bare))).collect()
}

impl fmt::Display for Multisegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&label(self))
    }
}

impl fmt::Display for RElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&relem_inline(self))
    }
}

impl fmt::Display for TensorElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self.terms().map(|(k, c)| format!("{c}*[{}]", tuple(k))).collect();
        f.write_str(&terms.join(" + "))
    }
}

impl fmt::Display for CuspSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("0");
        }
        f.write_str(&cusp_lines(self).join(", "))
    }
}

impl fmt::Display for CuspWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&word(self, false))
    }
}
