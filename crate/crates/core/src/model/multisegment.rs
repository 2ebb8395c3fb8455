use std::cmp::Ordering;

use super::line::{LineSet, Rational};
use super::segment::{Point, Segment};
use crate::error::Result;

/// A multiset of nonempty segments, labelling the standard class
/// δ(Δ₁)×…×δ(Δ_k) in R. The empty multisegment is the unit 1.
///
/// Entries are kept sorted (line id, start, end). Labels order first by
/// degree, then lexicographically on the sorted entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Multisegment {
    degree: u64,
    entries: Vec<Segment>,
}

impl Multisegment {
    pub fn new(mut entries: Vec<Segment>) -> Self {
        entries.sort_unstable();
        let degree = entries.iter().map(Segment::degree).sum();
        Multisegment { degree, entries }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn singleton(seg: Segment) -> Self {
        Multisegment { degree: seg.degree(), entries: vec![seg] }
    }

    pub fn point(p: &Point) -> Self {
        Self::singleton(Segment::singleton(p))
    }

    pub fn entries(&self) -> &[Segment] {
        &self.entries
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    /// Number of segments.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The single cuspidal point when the label is one singleton segment.
    pub fn as_point(&self) -> Option<Point> {
        match self.entries.as_slice() {
            [s] if s.is_singleton() => Some(s.bottom()),
            _ => None,
        }
    }

    /// Multiset union of labels, i.e. the label of the product.
    pub fn concat(&self, other: &Multisegment) -> Multisegment {
        if other.is_empty() {
            return self.clone();
        }
        if self.is_empty() {
            return other.clone();
        }
        let mut entries = Vec::with_capacity(self.len() + other.len());
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(x), Some(y)) => {
                    if x <= y {
                        entries.push(a.next().unwrap().clone());
                    } else {
                        entries.push(b.next().unwrap().clone());
                    }
                }
                (Some(_), None) => entries.extend(a.by_ref().cloned()),
                (None, Some(_)) => entries.extend(b.by_ref().cloned()),
                (None, None) => break,
            }
        }
        Multisegment { degree: self.degree + other.degree, entries }
    }

    /// Cuspidal support: the sorted multiset union of all points.
    pub fn supp(&self) -> Vec<Point> {
        let mut pts: Vec<Point> = self.entries.iter().flat_map(|s| s.points().collect::<Vec<_>>()).collect();
        pts.sort_unstable();
        pts
    }

    pub fn dual(&self, lines: &LineSet) -> Result<Multisegment> {
        let entries = self.entries.iter().map(|s| s.dual(lines)).collect::<Result<Vec<_>>>()?;
        Ok(Multisegment::new(entries))
    }

    pub fn twist(&self, t: Rational) -> Multisegment {
        // A uniform shift preserves the entry order.
        Multisegment { degree: self.degree, entries: self.entries.iter().map(|s| s.twist(t)).collect() }
    }
}

impl FromIterator<Segment> for Multisegment {
    fn from_iter<I: IntoIterator<Item = Segment>>(iter: I) -> Self {
        Multisegment::new(iter.into_iter().collect())
    }
}

impl PartialOrd for Multisegment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Multisegment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree.cmp(&other.degree).then_with(|| self.entries.cmp(&other.entries))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::Line;

    fn seg(a: i64, b: i64) -> Segment {
        let rho = Line::self_dual("rho", 1, Rational::from_integer(1)).unwrap();
        Segment::new(rho, a.into(), b.into()).unwrap()
    }

    fn exps(pts: &[Point]) -> Vec<i64> {
        pts.iter().map(|p| p.exponent().to_integer()).collect()
    }

    #[test]
    fn canonical_form() {
        let a = Multisegment::new(vec![seg(1, 2), seg(0, 0), seg(0, 1)]);
        let b = Multisegment::new(vec![seg(0, 1), seg(1, 2), seg(0, 0)]);
        assert_eq!(a, b);
        assert_eq!(a.entries(), &[seg(0, 0), seg(0, 1), seg(1, 2)]);
        assert_eq!(Multisegment::new(a.entries().to_vec()), a);
        assert_eq!(a.degree(), 5);
        assert_eq!(Multisegment::empty().degree(), 0);
    }

    #[test]
    fn concat_is_union_of_labels() {
        let a = Multisegment::new(vec![seg(1, 2), seg(-1, 0)]);
        let b = Multisegment::new(vec![seg(0, 0), seg(1, 2)]);
        let c = a.concat(&b);
        assert_eq!(c, Multisegment::new(vec![seg(1, 2), seg(-1, 0), seg(0, 0), seg(1, 2)]));
        assert_eq!(c.degree(), a.degree() + b.degree());
        assert_eq!(a.concat(&Multisegment::empty()), a);
    }

    #[test]
    fn support() {
        assert_eq!(exps(&Multisegment::singleton(seg(0, 1)).supp()), vec![0, 1]);
        assert_eq!(exps(&Multisegment::new(vec![seg(0, 0), seg(0, 1)]).supp()), vec![0, 0, 1]);
        assert!(Multisegment::empty().supp().is_empty());
    }

    #[test]
    fn ordering_is_degree_first() {
        let small = Multisegment::singleton(seg(5, 5));
        let big = Multisegment::singleton(seg(-3, -2));
        assert!(small < big);
        assert!(Multisegment::empty() < small);
    }
}
