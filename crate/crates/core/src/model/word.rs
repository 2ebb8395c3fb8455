use std::collections::BTreeMap;
use std::ops::{Add, Sub};

use super::ring::add_term;
use super::segment::Point;

/// An ordered sequence of cuspidal points: one term of a minimal Jacquet
/// module.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct CuspWord(pub Vec<Point>);

impl CuspWord {
    pub fn points(&self) -> &[Point] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum of the block sizes of the letters.
    pub fn degree(&self) -> u64 {
        self.0.iter().map(|p| p.line().size() as u64).sum()
    }
}

impl FromIterator<Point> for CuspWord {
    fn from_iter<I: IntoIterator<Item = Point>>(iter: I) -> Self {
        CuspWord(iter.into_iter().collect())
    }
}

/// An integer combination of cuspidal words.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CuspSum {
    terms: BTreeMap<CuspWord, i64>,
}

impl CuspSum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, w: CuspWord, coeff: i64) {
        add_term(&mut self.terms, w, coeff);
    }

    pub fn terms(&self) -> impl Iterator<Item = (&CuspWord, i64)> {
        self.terms.iter().map(|(w, &c)| (w, c))
    }

    pub fn coeff(&self, w: &CuspWord) -> i64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of all coefficients.
    pub fn total(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn scale(&self, k: i64) -> CuspSum {
        let mut out = CuspSum::zero();
        for (w, c) in self.terms() {
            out.add_term(w.clone(), c * k);
        }
        out
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|&c| c >= 0)
    }

    /// Termwise `self ≤ other`.
    pub fn le(&self, other: &CuspSum) -> bool {
        (other - self).is_nonnegative()
    }

    /// Whether all letters of all words lie on one line.
    pub fn single_line(&self) -> bool {
        let mut lines = self.terms.keys().flat_map(|w| w.0.iter().map(Point::line));
        match lines.next() {
            None => true,
            Some(first) => lines.all(|l| l == first),
        }
    }
}

impl FromIterator<(CuspWord, i64)> for CuspSum {
    fn from_iter<I: IntoIterator<Item = (CuspWord, i64)>>(iter: I) -> Self {
        let mut out = CuspSum::zero();
        for (w, c) in iter {
            out.add_term(w, c);
        }
        out
    }
}

impl Add for &CuspSum {
    type Output = CuspSum;
    fn add(self, rhs: &CuspSum) -> CuspSum {
        let mut out = self.clone();
        for (w, c) in rhs.terms() {
            out.add_term(w.clone(), c);
        }
        out
    }
}

impl Sub for &CuspSum {
    type Output = CuspSum;
    fn sub(self, rhs: &CuspSum) -> CuspSum {
        self + &rhs.scale(-1)
    }
}
