//! The Hopf structure of R: products, the comultiplication m*, iterated
//! Jacquet modules, minimal (cuspidal) Jacquet modules and the filtered
//! parts of m*.
//!
//! For a segment Δ = [ρ, ν_ρ^k ρ],
//!
//! ```text
//! m*(δ(Δ)) = Σ_{i=-1}^{k} δ([ν_ρ^{i+1}ρ, ν_ρ^k ρ]) ⊗ δ([ρ, ν_ρ^i ρ])
//! ```
//!
//! and m* is multiplicative, so on a label {Δ₁,…,Δ_k} it is obtained by
//! cutting every segment into an upper part (left factor) and a lower part
//! (right factor) independently.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::model::{CuspSum, CuspWord, Multisegment, Point, RElem, Segment, TensorElem};

/// m*(δ(Δ)): `len + 1` terms with coefficient 1, upper parts on the left.
pub fn mstar_segment(seg: &Segment) -> TensorElem {
    let n = seg.len();
    let mut out = TensorElem::zero(2);
    for cut in 0..=n {
        let left = seg.sub(cut, n).map(Multisegment::singleton).unwrap_or_default();
        let right = seg.sub(0, cut).map(Multisegment::singleton).unwrap_or_default();
        out.add_term(vec![left, right], 1);
    }
    out
}

/// The product in R (parabolic induction).
pub fn product(x: &RElem, y: &RElem) -> RElem {
    x * y
}

/// m* of a basis label, computed by enumerating one cut per segment.
pub fn mstar_label(label: &Multisegment) -> TensorElem {
    let entries = label.entries();
    let mut out = TensorElem::zero(2);
    let mut cuts = vec![0u64; entries.len()];
    loop {
        let mut left = Vec::with_capacity(entries.len());
        let mut right = Vec::with_capacity(entries.len());
        for (seg, &cut) in entries.iter().zip(&cuts) {
            left.extend(seg.sub(cut, seg.len()));
            right.extend(seg.sub(0, cut));
        }
        out.add_term(vec![Multisegment::new(left), Multisegment::new(right)], 1);

        // odometer over cut positions 0..=len
        let mut i = 0;
        loop {
            if i == entries.len() {
                return out;
            }
            if cuts[i] < entries[i].len() {
                cuts[i] += 1;
                break;
            }
            cuts[i] = 0;
            i += 1;
        }
    }
}

/// m*(x), extended linearly from labels.
pub fn mstar(x: &RElem) -> TensorElem {
    let mut out = TensorElem::zero(2);
    for (label, c) in x.terms() {
        for (tuple, k) in mstar_label(label).terms() {
            out.add_term(tuple.to_vec(), c * k);
        }
    }
    out
}

/// Applies m* to factor `index`, raising the arity by one.
pub fn expand_factor(t: &TensorElem, index: usize) -> TensorElem {
    assert!(index < t.arity(), "factor index out of range");
    let mut out = TensorElem::zero(t.arity() + 1);
    let mut cache: HashMap<&Multisegment, TensorElem> = HashMap::new();
    for (tuple, c) in t.terms() {
        let split = cache.entry(&tuple[index]).or_insert_with(|| mstar_label(&tuple[index]));
        for (pair, k) in split.terms() {
            let mut next = Vec::with_capacity(tuple.len() + 1);
            next.extend_from_slice(&tuple[..index]);
            next.extend_from_slice(pair);
            next.extend_from_slice(&tuple[index + 1..]);
            out.add_term(next, c * k);
        }
    }
    out
}

/// The Jacquet module of `x` for a standard parabolic with `r` blocks, as an
/// element of R^{⊗r}. Iterates m* on the rightmost factor.
pub fn comult_iterate(x: &RElem, r: usize) -> Result<TensorElem> {
    if r == 0 {
        return Err(Error::Precondition("iteration arity must be at least 1".into()));
    }
    let mut t = TensorElem::from_relem(x);
    while t.arity() < r {
        t = expand_factor(&t, t.arity() - 1);
    }
    Ok(t)
}

/// Like [`comult_iterate`] but always expands the leftmost factor.
pub fn comult_iterate_left(x: &RElem, r: usize) -> Result<TensorElem> {
    if r == 0 {
        return Err(Error::Precondition("iteration arity must be at least 1".into()));
    }
    let mut t = TensorElem::from_relem(x);
    while t.arity() < r {
        t = expand_factor(&t, 0);
    }
    Ok(t)
}

/// The minimal Jacquet module of `x`: every label contributes the shuffle
/// product of the descending words of its segments.
pub fn cuspidal_jacquet(x: &RElem) -> CuspSum {
    let mut out = CuspSum::zero();
    for (label, c) in x.terms() {
        for (w, k) in shuffle_words(label) {
            out.add_term(w, c * k);
        }
    }
    out
}

/// Shuffles of the descending words of the segments of `label`, with
/// multiplicity.
pub fn shuffle_words(label: &Multisegment) -> BTreeMap<CuspWord, i64> {
    let words: Vec<Vec<Point>> = label.entries().iter().map(|s| s.descending_points().collect()).collect();
    let total = words.iter().map(Vec::len).sum();
    let mut out = BTreeMap::new();
    let mut pos = vec![0usize; words.len()];
    let mut current = Vec::with_capacity(total);
    shuffle_into(&words, &mut pos, &mut current, total, &mut out);
    out
}

fn shuffle_into(
    words: &[Vec<Point>],
    pos: &mut [usize],
    current: &mut Vec<Point>,
    total: usize,
    out: &mut BTreeMap<CuspWord, i64>,
) {
    if current.len() == total {
        *out.entry(CuspWord(current.clone())).or_insert(0) += 1;
        return;
    }
    for i in 0..words.len() {
        if pos[i] < words[i].len() {
            current.push(words[i][pos[i]].clone());
            pos[i] += 1;
            shuffle_into(words, pos, current, total, out);
            pos[i] -= 1;
            current.pop();
        }
    }
}

/// The minimal Jacquet module computed by iterating m*: peel off one
/// cuspidal left factor at a time. Independent of [`cuspidal_jacquet`].
pub fn cuspidal_jacquet_iterated(x: &RElem) -> CuspSum {
    let mut memo = HashMap::new();
    let mut out = CuspSum::zero();
    for (label, c) in x.terms() {
        for (w, k) in iterate_label(label, &mut memo).terms() {
            out.add_term(w.clone(), c * k);
        }
    }
    out
}

fn iterate_label(label: &Multisegment, memo: &mut HashMap<Multisegment, CuspSum>) -> CuspSum {
    if label.is_empty() {
        let mut one = CuspSum::zero();
        one.add_term(CuspWord::default(), 1);
        return one;
    }
    if let Some(hit) = memo.get(label) {
        return hit.clone();
    }
    let mut out = CuspSum::zero();
    for (pair, c) in mstar_label(label).terms() {
        let Some(first) = pair[0].as_point() else { continue };
        for (rest, k) in iterate_label(&pair[1], memo).terms() {
            let mut w = Vec::with_capacity(rest.len() + 1);
            w.push(first.clone());
            w.extend_from_slice(rest.points());
            out.add_term(CuspWord(w), c * k);
        }
    }
    memo.insert(label.clone(), out.clone());
    out
}

/// Which part of a Jacquet module to keep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FilterSpec {
    /// Terms whose right factor is a single cuspidal point (m*_bottom).
    Bottom,
    /// Terms whose left label is exactly the given one (m*_{σ⊗−}).
    LeftEquals(Multisegment),
    /// Terms whose right label is exactly the given one (m*_{−⊗σ}).
    RightEquals(Multisegment),
    /// Terms whose factors have exactly the given cuspidal supports, with
    /// multiplicity. Each support is sorted by [`normalize_support`].
    SuppProfile(Vec<Vec<Point>>),
}

impl FilterSpec {
    pub fn supp_profile(profile: Vec<Vec<Point>>) -> Self {
        FilterSpec::SuppProfile(profile.into_iter().map(normalize_support).collect())
    }

    fn arity(&self) -> usize {
        match self {
            FilterSpec::SuppProfile(p) => p.len(),
            _ => 2,
        }
    }
}

pub fn normalize_support(mut pts: Vec<Point>) -> Vec<Point> {
    pts.sort_unstable();
    pts
}

/// Restricts a tensor element; coefficients are preserved.
pub fn filter(t: &TensorElem, spec: &FilterSpec) -> Result<TensorElem> {
    if t.arity() != spec.arity() {
        return Err(Error::ArityMismatch { expected: spec.arity(), found: t.arity() });
    }
    Ok(match spec {
        FilterSpec::Bottom => t.retain(|k| k[1].as_point().is_some()),
        FilterSpec::LeftEquals(label) => t.retain(|k| &k[0] == label),
        FilterSpec::RightEquals(label) => t.retain(|k| &k[1] == label),
        FilterSpec::SuppProfile(profile) => t.retain(|k| {
            k.iter().zip(profile).all(|(m, supp)| {
                // cheap reject on size before building the support
                m.entries().iter().map(|s| s.len() as usize).sum::<usize>() == supp.len() && &m.supp() == supp
            })
        }),
    })
}

/// Expands `x` to the arity the filter needs (m* for the two-factor
/// filters, the iterated Jacquet module for a support profile) and filters.
pub fn filter_relem(x: &RElem, spec: &FilterSpec) -> Result<TensorElem> {
    filter(&comult_iterate(x, spec.arity())?, spec)
}

/// m*_bottom(x).
pub fn mstar_bottom(x: &RElem) -> TensorElem {
    filter(&mstar(x), &FilterSpec::Bottom).expect("arity 2")
}
