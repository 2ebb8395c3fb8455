use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_traits::Signed;

use crate::error::{Error, Result};

/// Exact exponent and coefficient arithmetic.
pub type Rational = num_rational::Ratio<i64>;

#[derive(Debug)]
struct LineInfo {
    id: String,
    size: u32,
    s: Rational,
    dual: String,
}

/// A unitary cuspidal representation ρ together with all its unramified
/// twists ν_ρ^e ρ.
///
/// Lines compare, order and hash by id only. Two lines with the same id are
/// assumed to carry the same data; [`LineSet`] enforces this for declared
/// lines.
#[derive(Clone, Debug)]
pub struct Line(Arc<LineInfo>);

impl Line {
    /// Declares a line with block size `size`, reducibility parameter `s`
    /// and the id of the line carrying its dual.
    pub fn new(id: impl Into<String>, size: u32, s: Rational, dual: impl Into<String>) -> Result<Self> {
        let id = id.into();
        if !is_identifier(&id) {
            return Err(Error::InvalidLine(format!("`{id}` is not an identifier")));
        }
        if size == 0 {
            return Err(Error::InvalidLine(format!("{id}: size must be positive")));
        }
        if !s.is_positive() {
            return Err(Error::InvalidLine(format!("{id}: s must be positive, got {s}")));
        }
        let dual = dual.into();
        if !is_identifier(&dual) {
            return Err(Error::InvalidLine(format!("{id}: dual `{dual}` is not an identifier")));
        }
        Ok(Line(Arc::new(LineInfo { id, size, s, dual })))
    }

    /// A self-dual line.
    pub fn self_dual(id: impl Into<String>, size: u32, s: Rational) -> Result<Self> {
        let id = id.into();
        let dual = id.clone();
        Self::new(id, size, s, dual)
    }

    pub fn id(&self) -> &str {
        &self.0.id
    }

    /// n_ρ, the rank of the block carrying ρ.
    pub fn size(&self) -> u32 {
        self.0.size
    }

    /// s_ρ, with ν_ρ = ν^{s_ρ}.
    pub fn s(&self) -> Rational {
        self.0.s
    }

    pub fn dual_id(&self) -> &str {
        &self.0.dual
    }

    pub fn is_self_dual(&self) -> bool {
        self.0.id == self.0.dual
    }
}

impl PartialEq for Line {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.id == other.0.id
    }
}

impl Eq for Line {}

impl Hash for Line {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.id.hash(state);
    }
}

impl PartialOrd for Line {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Line {
    fn cmp(&self, other: &Self) -> Ordering {
        if Arc::ptr_eq(&self.0, &other.0) {
            return Ordering::Equal;
        }
        self.0.id.cmp(&other.0.id)
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.id)
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
}

/// The declared cuspidal lines, closed under the dual involution.
#[derive(Clone, Debug)]
pub struct LineSet {
    order: Vec<Line>,
    by_id: BTreeMap<String, Line>,
}

impl LineSet {
    /// Validates uniqueness of ids, resolution of duals, the involution
    /// property and that duals agree on size and s.
    pub fn new(lines: Vec<Line>) -> Result<Self> {
        if lines.is_empty() {
            return Err(Error::Config("no lines declared".into()));
        }
        let mut by_id = BTreeMap::new();
        for line in &lines {
            if by_id.insert(line.id().to_string(), line.clone()).is_some() {
                return Err(Error::Config(format!("line `{}` declared twice", line.id())));
            }
        }
        for line in &lines {
            let dual = by_id.get(line.dual_id()).ok_or_else(|| {
                Error::Config(format!("line `{}`: dual `{}` is not declared", line.id(), line.dual_id()))
            })?;
            if dual.dual_id() != line.id() {
                return Err(Error::Config(format!(
                    "dual is not an involution: {} -> {} -> {}",
                    line.id(),
                    dual.id(),
                    dual.dual_id()
                )));
            }
            if dual.size() != line.size() || dual.s() != line.s() {
                return Err(Error::Config(format!(
                    "lines `{}` and `{}` are dual but differ in size or s",
                    line.id(),
                    dual.id()
                )));
            }
        }
        Ok(LineSet { order: lines, by_id })
    }

    /// One self-dual line `rho` with n = 1 and s = 1.
    pub fn standard() -> Self {
        let rho = Line::self_dual("rho", 1, Rational::from_integer(1)).expect("valid line");
        LineSet::new(vec![rho]).expect("valid line set")
    }

    pub fn get(&self, id: &str) -> Result<&Line> {
        self.by_id.get(id).ok_or_else(|| Error::UnknownLine(id.to_string()))
    }

    /// Lines in declaration order.
    pub fn lines(&self) -> &[Line] {
        &self.order
    }

    pub fn dual_of(&self, line: &Line) -> Result<Line> {
        match self.by_id.get(line.id()) {
            Some(known) => self.get(known.dual_id()).cloned(),
            None => Err(Error::UnknownLine(line.id().to_string())),
        }
    }
}

pub(crate) fn is_integer(r: &Rational) -> bool {
    r.is_integer()
}

pub(crate) fn nonneg_integer(r: &Rational) -> Option<u64> {
    if r.is_integer() && !r.is_negative() {
        Some(r.to_integer() as u64)
    } else {
        None
    }
}
