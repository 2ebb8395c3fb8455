//! Decision predicates: the Casselman square-integrability test on cuspidal
//! words, linkage of segments and the extraction ordering for families of
//! distinct unitary segments.

use crate::error::{Error, Result};
use crate::model::{CuspWord, LineSet, Rational, Segment};

/// Outcome of the Casselman test on one cuspidal word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CasselmanVerdict {
    /// Σ w_i = 0.
    pub sum_zero: bool,
    /// Every proper prefix sum is strictly positive.
    pub partials_positive: bool,
    pub square_integrable: bool,
    /// The test passes after subtracting the mean weight.
    pub essentially: bool,
    /// Σ a_i in ν_ρ units.
    pub raw_sum: Rational,
    /// Σ n_i s_i a_i.
    pub weighted_sum: Rational,
}

fn prefix_test(weights: &[Rational]) -> (bool, bool) {
    let mut acc = Rational::from_integer(0);
    let mut partials = true;
    for w in &weights[..weights.len() - 1] {
        acc += w;
        partials &= acc > Rational::from_integer(0);
    }
    let total: Rational = weights.iter().sum();
    (total == Rational::from_integer(0), partials)
}

/// Evaluates the criterion on the weights w_i = n_i · s_i · a_i of `word`.
pub fn casselman(word: &CuspWord) -> Result<CasselmanVerdict> {
    if word.is_empty() {
        return Err(Error::Empty("casselman needs a nonempty word"));
    }
    let weights: Vec<Rational> = word.points().iter().map(|p| p.casselman_weight()).collect();
    let (sum_zero, partials_positive) = prefix_test(&weights);

    let weighted_sum: Rational = weights.iter().sum();
    let mean = weighted_sum / Rational::from_integer(weights.len() as i64);
    let centered: Vec<Rational> = weights.iter().map(|w| w - mean).collect();
    let (_, centered_partials) = prefix_test(&centered);

    Ok(CasselmanVerdict {
        sum_zero,
        partials_positive,
        square_integrable: sum_zero && partials_positive,
        essentially: centered_partials,
        raw_sum: word.points().iter().map(|p| p.exponent()).sum(),
        weighted_sum,
    })
}

/// Δ₁ and Δ₂ are linked when their union is a segment different from both.
pub fn linked(a: &Segment, b: &Segment) -> bool {
    if a.line() != b.line() {
        return false;
    }
    match a.union(b) {
        Ok(u) => u != *a && u != *b,
        Err(_) => false,
    }
}

/// Neither end of any earlier segment lies in a later one.
pub fn satisfies_indexing(ordered: &[Segment]) -> bool {
    ordered.iter().enumerate().all(|(j, earlier)| {
        ordered[j + 1..].iter().all(|later| !later.contains(&earlier.bottom()) && !later.contains(&earlier.top()))
    })
}

/// Orders distinct unitary segments so that neither end of Δ_j lies in Δ_k
/// for j < k. Longest first is always a witness under the precondition;
/// otherwise small families are searched exhaustively.
pub fn ordering_for_extraction(segments: &[Segment], lines: &LineSet) -> Result<Vec<Segment>> {
    let mut ordered = segments.to_vec();
    ordered.sort_by(|x, y| y.len().cmp(&x.len()).then_with(|| x.cmp(y)));
    if satisfies_indexing(&ordered) {
        return Ok(ordered);
    }
    let precondition = {
        let mut sorted = segments.to_vec();
        sorted.sort();
        let distinct = sorted.windows(2).all(|w| w[0] != w[1]);
        let unitary = segments.iter().map(|s| s.is_unitary(lines)).collect::<Result<Vec<_>>>()?;
        distinct && unitary.into_iter().all(|u| u)
    };
    debug_assert!(!precondition, "length order must work for distinct unitary segments");
    if segments.len() <= 8 {
        let mut perm = ordered.clone();
        if search(&mut perm, 0) {
            return Ok(perm);
        }
    }
    Err(Error::NoOrdering)
}

fn search(perm: &mut Vec<Segment>, k: usize) -> bool {
    if k == perm.len() {
        return satisfies_indexing(perm);
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        if satisfies_indexing(&perm[..=k]) && search(perm, k + 1) {
            return true;
        }
        perm.swap(k, i);
    }
    false
}
