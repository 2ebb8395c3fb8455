use std::fmt;

use super::line::{is_integer, nonneg_integer, Line, LineSet, Rational};
use crate::error::{Error, Result};

/// The twist ν_ρ^e ρ of a cuspidal line. Exponents are in ν_ρ units.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    line: Line,
    e: Rational,
}

impl Point {
    pub fn new(line: Line, e: Rational) -> Self {
        Point { line, e }
    }

    pub fn line(&self) -> &Line {
        &self.line
    }

    pub fn exponent(&self) -> Rational {
        self.e
    }

    /// n_ρ · s_ρ · e, the exponent of the central character in ν units
    /// weighted by block size.
    pub fn casselman_weight(&self) -> Rational {
        Rational::from_integer(self.line.size() as i64) * self.line.s() * self.e
    }

    pub fn dual(&self, lines: &LineSet) -> Result<Point> {
        Ok(Point::new(lines.dual_of(&self.line)?, -self.e))
    }

    pub fn twist(&self, t: Rational) -> Point {
        Point::new(self.line.clone(), self.e + t)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.e)
    }
}

/// A nonempty segment [ν_ρ^start ρ, ν_ρ^end ρ] on one line.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Segment {
    line: Line,
    start: Rational,
    end: Rational,
}

impl Segment {
    pub fn new(line: Line, start: Rational, end: Rational) -> Result<Self> {
        if nonneg_integer(&(end - start)).is_none() {
            return Err(Error::MalformedSegment { start: start.to_string(), end: end.to_string() });
        }
        Ok(Segment { line, start, end })
    }

    pub fn singleton(p: &Point) -> Self {
        Segment { line: p.line.clone(), start: p.e, end: p.e }
    }

    pub fn line(&self) -> &Line {
        &self.line
    }

    pub fn start(&self) -> Rational {
        self.start
    }

    pub fn end(&self) -> Rational {
        self.end
    }

    /// Number of points.
    pub fn len(&self) -> u64 {
        (self.end - self.start).to_integer() as u64 + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_singleton(&self) -> bool {
        self.start == self.end
    }

    pub fn degree(&self) -> u64 {
        self.len() * self.line.size() as u64
    }

    /// b(Δ), the lowest point.
    pub fn bottom(&self) -> Point {
        Point::new(self.line.clone(), self.start)
    }

    pub fn top(&self) -> Point {
        Point::new(self.line.clone(), self.end)
    }

    /// ⁻Δ: Δ without its lowest point; `None` for a singleton.
    pub fn minus(&self) -> Option<Segment> {
        self.sub(1, self.len())
    }

    /// Points in ascending order.
    pub fn points(&self) -> impl DoubleEndedIterator<Item = Point> + '_ {
        (0..self.len() as i64).map(move |i| Point::new(self.line.clone(), self.start + i))
    }

    /// Points from the top down; this is the cuspidal word of δ(Δ).
    pub fn descending_points(&self) -> impl Iterator<Item = Point> + '_ {
        self.points().rev()
    }

    /// The sub-interval made of the points with indices in `lo..hi`
    /// (counted from the bottom), or `None` when it is empty.
    pub(crate) fn sub(&self, lo: u64, hi: u64) -> Option<Segment> {
        if lo >= hi {
            return None;
        }
        Some(Segment { line: self.line.clone(), start: self.start + lo as i64, end: self.start + (hi as i64 - 1) })
    }

    pub fn contains(&self, p: &Point) -> bool {
        p.line == self.line && p.e >= self.start && p.e <= self.end && is_integer(&(p.e - self.start))
    }

    /// Whether every point of `other` is a point of `self`.
    pub fn contains_segment(&self, other: &Segment) -> bool {
        self.contains(&other.bottom()) && self.contains(&other.top())
    }

    fn same_grid(&self, other: &Segment) -> bool {
        self.line == other.line && is_integer(&(self.start - other.start))
    }

    fn check_line(&self, other: &Segment) -> Result<()> {
        if self.line != other.line {
            return Err(Error::CrossLine(self.to_string(), other.to_string()));
        }
        Ok(())
    }

    /// The set-union of the points when it is an unbroken interval.
    pub fn union(&self, other: &Segment) -> Result<Segment> {
        self.check_line(other)?;
        let joined = self.same_grid(other) && self.start.max(other.start) <= self.end.min(other.end) + 1;
        if !joined {
            return Err(Error::NotASegment(self.to_string(), other.to_string()));
        }
        Ok(Segment { line: self.line.clone(), start: self.start.min(other.start), end: self.end.max(other.end) })
    }

    /// The common points, `None` when there are none.
    pub fn intersection(&self, other: &Segment) -> Result<Option<Segment>> {
        self.check_line(other)?;
        if !self.same_grid(other) {
            return Ok(None);
        }
        let (start, end) = (self.start.max(other.start), self.end.min(other.end));
        Ok((start <= end).then(|| Segment { line: self.line.clone(), start, end }))
    }

    pub fn dual(&self, lines: &LineSet) -> Result<Segment> {
        Ok(Segment { line: lines.dual_of(&self.line)?, start: -self.end, end: -self.start })
    }

    pub fn is_unitary(&self, lines: &LineSet) -> Result<bool> {
        Ok(self.dual(lines)? == *self)
    }

    pub fn twist(&self, t: Rational) -> Segment {
        Segment { line: self.line.clone(), start: self.start + t, end: self.end + t }
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}:{}..{}:{}]", self.line, self.start, self.line, self.end)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rho() -> Line {
        Line::self_dual("rho", 1, Rational::from_integer(1)).unwrap()
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn seg(a: i64, b: i64) -> Segment {
        Segment::new(rho(), q(a, 1), q(b, 1)).unwrap()
    }

    #[test]
    fn endpoints() {
        let s = seg(0, 2);
        let exps: Vec<_> = s.points().map(|p| p.exponent()).collect();
        assert_eq!(exps, vec![q(0, 1), q(1, 1), q(2, 1)]);
        let down: Vec<_> = s.descending_points().map(|p| p.exponent()).collect();
        assert_eq!(down, vec![q(2, 1), q(1, 1), q(0, 1)]);

        let half = Segment::new(rho(), q(-1, 2), q(1, 2)).unwrap();
        assert_eq!(half.len(), 2);
        let exps: Vec<_> = half.points().map(|p| p.exponent()).collect();
        assert_eq!(exps, vec![q(-1, 2), q(1, 2)]);

        assert!(matches!(Segment::new(rho(), q(0, 1), q(1, 2)), Err(Error::MalformedSegment { .. })));
        assert!(matches!(Segment::new(rho(), q(1, 1), q(0, 1)), Err(Error::MalformedSegment { .. })));
    }

    #[test]
    fn parts() {
        let s = seg(0, 2);
        assert_eq!(s.bottom().exponent(), q(0, 1));
        assert_eq!(s.minus(), Some(seg(1, 2)));
        assert_eq!(seg(3, 3).minus(), None);

        assert_eq!(seg(0, 1).union(&seg(1, 2)).unwrap(), seg(0, 2));
        assert_eq!(seg(0, 1).intersection(&seg(1, 2)).unwrap(), Some(seg(1, 1)));
        assert_eq!(seg(0, 0).union(&seg(1, 1)).unwrap(), seg(0, 1));
        assert_eq!(seg(0, 0).intersection(&seg(1, 1)).unwrap(), None);
        assert!(matches!(seg(0, 0).union(&seg(2, 2)), Err(Error::NotASegment(..))));

        let half = Segment::new(rho(), q(1, 2), q(1, 2)).unwrap();
        assert!(seg(0, 1).union(&half).is_err());
        assert_eq!(seg(0, 1).intersection(&half).unwrap(), None);

        let other = Line::self_dual("sigma", 1, q(1, 1)).unwrap();
        let s2 = Segment::new(other, q(0, 1), q(0, 1)).unwrap();
        assert!(matches!(seg(0, 0).union(&s2), Err(Error::CrossLine(..))));
        assert!(matches!(seg(0, 0).intersection(&s2), Err(Error::CrossLine(..))));
    }

    #[test]
    fn dual_and_unitarity() {
        let lines = LineSet::new(vec![rho()]).unwrap();
        assert_eq!(seg(-1, 1).dual(&lines).unwrap(), seg(-1, 1));
        assert!(seg(-1, 1).is_unitary(&lines).unwrap());
        assert_eq!(seg(0, 1).dual(&lines).unwrap(), seg(-1, 0));
        assert!(!seg(0, 1).is_unitary(&lines).unwrap());
    }

    #[test]
    fn twist_shifts() {
        assert_eq!(seg(0, 1).twist(q(1, 2)), Segment::new(rho(), q(1, 2), q(3, 2)).unwrap());
        assert_eq!(seg(0, 1).twist(q(0, 1)), seg(0, 1));
    }

    #[test]
    fn degree_uses_block_size() {
        let big = Line::self_dual("tau", 3, q(1, 2)).unwrap();
        let s = Segment::new(big.clone(), q(0, 1), q(1, 1)).unwrap();
        assert_eq!(s.degree(), 6);
        assert_eq!(Point::new(big, q(2, 1)).casselman_weight(), q(3, 1));
    }
}
