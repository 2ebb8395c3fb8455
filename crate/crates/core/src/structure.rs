//! Irreducibility and composition series for products of two δ's, the
//! Zelevinsky class 𝔷([ρ, ν_ρρ]), tempered products and the classification
//! of square-integrable cuspidal supports.

use crate::criteria::linked;
use crate::error::{Error, Result};
use crate::model::{LineSet, Multisegment, Point, RElem, Segment};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairStatus {
    Irreducible,
    LengthTwo,
}

/// The decomposition of δ(Δ₁)×δ(Δ₂) in the Grothendieck group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairDecision {
    pub status: PairStatus,
    /// {Δ₁, Δ₂}.
    pub class_label: Multisegment,
    /// Class of L(Δ₁,Δ₂) when the product has length two.
    pub langlands_class: Option<RElem>,
    /// {Δ₁∪Δ₂, Δ₁∩Δ₂} (intersection dropped when empty) when the product
    /// has length two.
    pub other_summand: Option<Multisegment>,
}

impl PairDecision {
    pub fn is_irreducible(&self) -> bool {
        self.status == PairStatus::Irreducible
    }
}

/// Decides δ(Δ₁)×δ(Δ₂): irreducible unless the segments are linked, in
/// which case it is L(Δ₁,Δ₂) + δ(Δ₁∪Δ₂)×δ(Δ₁∩Δ₂).
pub fn decide_pair(a: &Segment, b: &Segment) -> PairDecision {
    let class_label = Multisegment::new(vec![a.clone(), b.clone()]);
    if !linked(a, b) {
        return PairDecision {
            status: PairStatus::Irreducible,
            class_label,
            langlands_class: None,
            other_summand: None,
        };
    }
    let union = a.union(b).expect("linked segments have a union");
    let inter = a.intersection(b).expect("same line");
    let other: Multisegment = std::iter::once(union).chain(inter).collect();
    let langlands = &RElem::basis(class_label.clone()) - &RElem::basis(other.clone());
    PairDecision {
        status: PairStatus::LengthTwo,
        class_label,
        langlands_class: Some(langlands),
        other_summand: Some(other),
    }
}

/// Class of L(Δ₁,Δ₂); fails when the segments are not linked.
pub fn langlands_class(a: &Segment, b: &Segment) -> Result<RElem> {
    decide_pair(a, b).langlands_class.ok_or_else(|| Error::NotLinked(a.to_string(), b.to_string()))
}

/// 𝔷([p, ν_ρ p]) = p × ν_ρ p − δ([p, ν_ρ p]).
pub fn zelevinsky_class(p: &Point) -> RElem {
    let lower = Segment::singleton(p);
    let upper = Segment::singleton(&p.twist(1.into()));
    let pair = RElem::basis(Multisegment::new(vec![lower.clone(), upper.clone()]));
    let joined = RElem::delta(lower.union(&upper).expect("adjacent points"));
    &pair - &joined
}

/// The label of a product of δ's of unitary segments, which is irreducible.
pub fn tempered_product_class(segments: &[Segment], lines: &LineSet) -> Result<Multisegment> {
    for s in segments {
        if !s.is_unitary(lines)? {
            return Err(Error::NotUnitary(s.to_string()));
        }
    }
    Ok(segments.iter().cloned().collect())
}

/// Result of classifying a cuspidal support.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SiClass {
    /// δ(Δ) is square integrable and is the only such representation with
    /// this support.
    SquareIntegrable(Segment),
    /// The support is a segment, but not a self-dual one: δ(Δ) is only
    /// essentially square integrable.
    EssentiallyOnly(Segment),
    /// No square-integrable representation has this support.
    None,
}

impl SiClass {
    pub fn segment(&self) -> Option<&Segment> {
        match self {
            SiClass::SquareIntegrable(s) => Some(s),
            _ => None,
        }
    }
}

/// Classifies the square-integrable representations with cuspidal support
/// `support`: there is one exactly when the support is a repetition-free
/// self-dual segment.
pub fn classify_square_integrable(support: &[Point], lines: &LineSet) -> Result<SiClass> {
    let mut pts = support.to_vec();
    pts.sort_unstable();
    let Some(first) = pts.first() else {
        return Err(Error::Empty("cuspidal support must be nonempty"));
    };
    if pts.iter().any(|p| p.line() != first.line()) {
        return Ok(SiClass::None);
    }
    let consecutive = pts.windows(2).all(|w| w[1].exponent() - w[0].exponent() == 1.into());
    if !consecutive {
        return Ok(SiClass::None);
    }
    let seg = Segment::new(first.line().clone(), first.exponent(), pts[pts.len() - 1].exponent())?;
    Ok(if seg.is_unitary(lines)? { SiClass::SquareIntegrable(seg) } else { SiClass::EssentiallyOnly(seg) })
}
