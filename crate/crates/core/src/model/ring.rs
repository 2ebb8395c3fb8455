use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use super::line::{LineSet, Rational};
use super::multisegment::Multisegment;
use super::segment::Segment;
use crate::error::{Error, Result};

pub(crate) fn add_term<K: Ord>(terms: &mut BTreeMap<K, i64>, key: K, coeff: i64) {
    if coeff == 0 {
        return;
    }
    match terms.entry(key) {
        Entry::Vacant(v) => {
            v.insert(coeff);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += coeff;
            if *o.get() == 0 {
                o.remove();
            }
        }
    }
}

/// An element of R: a finite integer combination of standard labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct RElem {
    terms: BTreeMap<Multisegment, i64>,
}

impl RElem {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::basis(Multisegment::empty())
    }

    pub fn basis(label: Multisegment) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(label, 1);
        RElem { terms }
    }

    /// δ(Δ).
    pub fn delta(seg: Segment) -> Self {
        Self::basis(Multisegment::singleton(seg))
    }

    pub fn add_term(&mut self, label: Multisegment, coeff: i64) {
        add_term(&mut self.terms, label, coeff);
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Multisegment, i64)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn coeff(&self, label: &Multisegment) -> i64 {
        self.terms.get(label).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The single label when `self` is exactly one basis element.
    pub fn as_basis(&self) -> Option<&Multisegment> {
        match self.terms.iter().next() {
            Some((m, 1)) if self.terms.len() == 1 => Some(m),
            _ => None,
        }
    }

    pub fn scale(&self, k: i64) -> RElem {
        if k == 0 {
            return RElem::zero();
        }
        RElem { terms: self.terms.iter().map(|(m, &c)| (m.clone(), c * k)).collect() }
    }

    /// The component of degree `d`.
    pub fn homogeneous(&self, d: u64) -> RElem {
        RElem { terms: self.terms.iter().filter(|(m, _)| m.degree() == d).map(|(m, &c)| (m.clone(), c)).collect() }
    }

    /// Degrees that occur, ascending.
    pub fn degrees(&self) -> Vec<u64> {
        let mut d: Vec<u64> = self.terms.keys().map(Multisegment::degree).collect();
        d.dedup();
        d
    }

    pub fn dual(&self, lines: &LineSet) -> Result<RElem> {
        let mut out = RElem::zero();
        for (m, c) in self.terms() {
            out.add_term(m.dual(lines)?, c);
        }
        Ok(out)
    }

    pub fn twist(&self, t: Rational) -> RElem {
        RElem { terms: self.terms.iter().map(|(m, &c)| (m.twist(t), c)).collect() }
    }

    /// Whether every coefficient is positive.
    pub fn is_positive(&self) -> bool {
        self.terms.values().all(|&c| c > 0)
    }
}

impl From<Multisegment> for RElem {
    fn from(m: Multisegment) -> Self {
        RElem::basis(m)
    }
}

impl FromIterator<(Multisegment, i64)> for RElem {
    fn from_iter<I: IntoIterator<Item = (Multisegment, i64)>>(iter: I) -> Self {
        let mut out = RElem::zero();
        for (m, c) in iter {
            out.add_term(m, c);
        }
        out
    }
}

impl AddAssign<&RElem> for RElem {
    fn add_assign(&mut self, rhs: &RElem) {
        for (m, c) in rhs.terms() {
            self.add_term(m.clone(), c);
        }
    }
}

impl Add for &RElem {
    type Output = RElem;
    fn add(self, rhs: &RElem) -> RElem {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &RElem {
    type Output = RElem;
    fn sub(self, rhs: &RElem) -> RElem {
        let mut out = self.clone();
        for (m, c) in rhs.terms() {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Neg for &RElem {
    type Output = RElem;
    fn neg(self) -> RElem {
        self.scale(-1)
    }
}

/// Parabolic induction: bilinear extension of label concatenation.
impl Mul for &RElem {
    type Output = RElem;
    fn mul(self, rhs: &RElem) -> RElem {
        let mut out = RElem::zero();
        for (a, x) in self.terms() {
            for (b, y) in rhs.terms() {
                out.add_term(a.concat(b), x * y);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($t:ty, $($tr:ident :: $f:ident),*) => {$(
        impl $tr for $t {
            type Output = $t;
            fn $f(self, rhs: $t) -> $t {
                $tr::$f(&self, &rhs)
            }
        }
    )*};
}

forward_owned!(RElem, Add::add, Sub::sub, Mul::mul);

/// An element of R^{⊗r}.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TensorElem {
    arity: usize,
    terms: BTreeMap<Vec<Multisegment>, i64>,
}

impl TensorElem {
    pub fn zero(arity: usize) -> Self {
        assert!(arity >= 1, "tensor arity must be positive");
        TensorElem { arity, terms: BTreeMap::new() }
    }

    /// 1 ⊗ … ⊗ 1.
    pub fn one(arity: usize) -> Self {
        let mut t = Self::zero(arity);
        t.add_term(vec![Multisegment::empty(); arity], 1);
        t
    }

    /// `x` viewed as an element of arity 1.
    pub fn from_relem(x: &RElem) -> Self {
        let mut t = Self::zero(1);
        for (m, c) in x.terms() {
            t.add_term(vec![m.clone()], c);
        }
        t
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Panics if `tuple` has the wrong arity.
    pub fn add_term(&mut self, tuple: Vec<Multisegment>, coeff: i64) {
        assert_eq!(tuple.len(), self.arity, "tensor term of wrong arity");
        add_term(&mut self.terms, tuple, coeff);
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[Multisegment], i64)> {
        self.terms.iter().map(|(k, &c)| (k.as_slice(), c))
    }

    pub fn coeff(&self, tuple: &[Multisegment]) -> i64 {
        self.terms.get(tuple).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_positive(&self) -> bool {
        self.terms.values().all(|&c| c > 0)
    }

    /// Keeps the terms accepted by `keep`.
    pub fn retain(&self, mut keep: impl FnMut(&[Multisegment]) -> bool) -> TensorElem {
        TensorElem {
            arity: self.arity,
            terms: self.terms.iter().filter(|(k, _)| keep(k)).map(|(k, &c)| (k.clone(), c)).collect(),
        }
    }

    /// Componentwise product (a₁⊗…⊗a_r)(b₁⊗…⊗b_r) = a₁b₁⊗…⊗a_rb_r.
    pub fn product(&self, other: &TensorElem) -> Result<TensorElem> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch { expected: self.arity, found: other.arity });
        }
        let mut out = TensorElem::zero(self.arity);
        for (a, x) in self.terms() {
            for (b, y) in other.terms() {
                let tuple = a.iter().zip(b).map(|(p, q)| p.concat(q)).collect();
                add_term(&mut out.terms, tuple, x * y);
            }
        }
        Ok(out)
    }

    /// Sum over terms of factor `index`, as an element of R, for the terms
    /// whose other factors are all 1.
    pub fn project_to(&self, index: usize) -> RElem {
        self.terms()
            .filter(|(k, _)| k.iter().enumerate().all(|(i, m)| i == index || m.is_empty()))
            .map(|(k, c)| (k[index].clone(), c))
            .collect()
    }

    pub fn checked_add(&self, other: &TensorElem) -> Result<TensorElem> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch { expected: self.arity, found: other.arity });
        }
        let mut out = self.clone();
        for (k, c) in other.terms() {
            add_term(&mut out.terms, k.to_vec(), c);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &TensorElem) -> Result<TensorElem> {
        let neg = TensorElem { arity: other.arity, terms: other.terms.iter().map(|(k, &c)| (k.clone(), -c)).collect() };
        self.checked_add(&neg)
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

    fn d(a: i64, b: i64) -> RElem {
        RElem::delta(seg(a, b))
    }

    #[test]
    fn no_zero_coefficients() {
        let x = &d(0, 1) - &d(0, 1);
        assert!(x.is_zero());
        let mut y = RElem::zero();
        y.add_term(Multisegment::empty(), 0);
        assert!(y.is_zero());
    }

    #[test]
    fn product_of_basis_elements() {
        let p = &d(0, 0) * &d(1, 1);
        assert_eq!(p, RElem::basis(Multisegment::new(vec![seg(0, 0), seg(1, 1)])));
        let q = &d(0, 0).scale(2) * &d(1, 1).scale(3);
        assert_eq!(q.coeff(&Multisegment::new(vec![seg(0, 0), seg(1, 1)])), 6);
        assert_eq!(&RElem::one() * &d(0, 2), d(0, 2));
    }

    #[test]
    fn homogeneous_components() {
        let x = &(&d(0, 0) + &d(0, 1)) + &RElem::one().scale(4);
        assert_eq!(x.degrees(), vec![0, 1, 2]);
        assert_eq!(x.homogeneous(2), d(0, 1));
    }

    #[test]
    fn tensor_product_is_componentwise() {
        let a = Multisegment::singleton(seg(0, 0));
        let b = Multisegment::singleton(seg(1, 1));
        let mut x = TensorElem::zero(2);
        x.add_term(vec![a.clone(), Multisegment::empty()], 1);
        let mut y = TensorElem::zero(2);
        y.add_term(vec![b.clone(), a.clone()], 2);
        let p = x.product(&y).unwrap();
        assert_eq!(p.coeff(&[a.concat(&b), a.clone()]), 2);
        assert_eq!(p, y.product(&x).unwrap());
        assert!(x.product(&TensorElem::one(3)).is_err());
    }
}
