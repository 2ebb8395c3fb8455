//! Exhaustive verification of the engine's algebraic laws and of the
//! label-level computations behind the structure results, over finite
//! windows of instances.
//!
//! Every check enumerates its instances in a fixed order and reports the
//! failures it finds. Where two routes to the same quantity exist (shuffles
//! versus iterated m*, a filter cascade versus a support-profile scan) the
//! check compares them rather than re-running one route.

use std::fmt;
use std::time::{Duration, Instant};

use crate::cli::expr::parse_rational_str;
use crate::criteria::{casselman, linked, ordering_for_extraction};
use crate::error::{Error, Result};
use crate::format;
use crate::hopf::{
    comult_iterate, comult_iterate_left, cuspidal_jacquet, cuspidal_jacquet_iterated, expand_factor, filter, mstar,
    mstar_bottom, mstar_label, FilterSpec,
};
use crate::model::{CuspWord, Line, LineSet, Multisegment, Point, RElem, Rational, Segment, TensorElem};
use crate::structure::{classify_square_integrable, decide_pair, SiClass};

/// Largest cuspidal support tried by the square-integrability check.
pub const SI_MAX_SUPPORT: usize = 4;

/// A finite family of instances: every segment whose endpoints lie on the
/// grid `lo, lo + step, …` inside `[lo, hi]` with at most
/// `max_segment_points` points, and every label of at most `max_factors`
/// such segments.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceWindow {
    pub lines: Vec<Line>,
    pub lo: Rational,
    pub hi: Rational,
    pub step: Rational,
    pub max_segment_points: u64,
    pub max_factors: usize,
}

impl InstanceWindow {
    /// The first declared line, exponents in [−2, 2] on the half-integer
    /// grid, segments of at most 3 points, labels of at most 3 segments.
    pub fn standard(lines: &LineSet) -> Self {
        InstanceWindow {
            lines: vec![lines.lines()[0].clone()],
            lo: (-2).into(),
            hi: 2.into(),
            step: Rational::new(1, 2),
            max_segment_points: 3,
            max_factors: 3,
        }
    }

    /// Parses `key=value` pairs separated by commas, starting from
    /// [`InstanceWindow::standard`]. Keys: `lines` (ids joined by `+`),
    /// `range` (`lo..hi`), `step`, `points`, `factors`.
    pub fn parse(spec: &str, lines: &LineSet) -> Result<Self> {
        let mut w = Self::standard(lines);
        let bad = |msg: String| Error::Precondition(format!("window: {msg}"));
        for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, value) = part.split_once('=').ok_or_else(|| bad(format!("expected key=value, got `{part}`")))?;
            let value = value.trim();
            match key.trim() {
                "lines" => {
                    w.lines = value.split('+').map(|id| lines.get(id.trim()).cloned()).collect::<Result<_>>()?;
                }
                "range" => {
                    let (lo, hi) = value.split_once("..").ok_or_else(|| bad(format!("range `{value}`")))?;
                    w.lo = parse_rational_str(lo).ok_or_else(|| bad(format!("bad bound `{lo}`")))?;
                    w.hi = parse_rational_str(hi).ok_or_else(|| bad(format!("bad bound `{hi}`")))?;
                }
                "step" => w.step = parse_rational_str(value).ok_or_else(|| bad(format!("bad step `{value}`")))?,
                "points" => w.max_segment_points = value.parse().map_err(|_| bad(format!("bad points `{value}`")))?,
                "factors" => w.max_factors = value.parse().map_err(|_| bad(format!("bad factors `{value}`")))?,
                other => return Err(bad(format!("unknown key `{other}`"))),
            }
        }
        if w.lines.is_empty() || w.lo > w.hi || w.step <= 0.into() || w.max_segment_points == 0 {
            return Err(bad("empty or degenerate window".into()));
        }
        if !(Rational::from_integer(1) / w.step).is_integer() {
            return Err(bad("step must divide 1".into()));
        }
        Ok(w)
    }

    /// Grid exponents, ascending.
    pub fn exponents(&self) -> Vec<Rational> {
        let mut out = Vec::new();
        let mut e = self.lo;
        while e <= self.hi {
            out.push(e);
            e += self.step;
        }
        out
    }

    /// Grid points, ordered by line then exponent.
    pub fn points(&self) -> Vec<Point> {
        let mut out: Vec<Point> = self
            .lines
            .iter()
            .flat_map(|l| self.exponents().into_iter().map(move |e| Point::new(l.clone(), e)))
            .collect();
        out.sort();
        out
    }

    fn segments_up_to(&self, max_points: u64) -> Vec<Segment> {
        let mut out = Vec::new();
        for p in self.points() {
            for extra in 0..max_points {
                let end = p.exponent() + extra as i64;
                if end > self.hi {
                    break;
                }
                out.push(Segment::new(p.line().clone(), p.exponent(), end).expect("integer length"));
            }
        }
        out.sort();
        out
    }

    /// Segments of the window in (line, start, end) order.
    pub fn segments(&self) -> Vec<Segment> {
        self.segments_up_to(self.max_segment_points)
    }

    /// All labels of at most `max_factors` window segments, including the
    /// empty label, in canonical label order.
    pub fn labels(&self) -> Vec<Multisegment> {
        let segs = self.segments();
        let mut out = vec![Multisegment::empty()];
        let mut stack: Vec<(usize, Vec<Segment>)> = vec![(0, Vec::new())];
        while let Some((from, current)) = stack.pop() {
            if current.len() == self.max_factors {
                continue;
            }
            for (i, s) in segs.iter().enumerate().skip(from) {
                let mut next = current.clone();
                next.push(s.clone());
                out.push(Multisegment::new(next.clone()));
                stack.push((i, next));
            }
        }
        out.sort();
        out
    }

    /// Unitary segments with all points inside the range (ignoring
    /// `max_segment_points`).
    pub fn unitary_segments(&self, lines: &LineSet) -> Result<Vec<Segment>> {
        let all = self.segments_up_to(u64::MAX);
        let mut out = Vec::new();
        for s in all {
            if s.is_unitary(lines)? {
                out.push(s);
            }
        }
        Ok(out)
    }
}

impl fmt::Display for InstanceWindow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ids: Vec<&str> = self.lines.iter().map(Line::id).collect();
        write!(
            f,
            "lines={},range={}..{},step={},points={},factors={}",
            ids.join("+"),
            self.lo,
            self.hi,
            self.step,
            self.max_segment_points,
            self.max_factors
        )
    }
}

/// One failed instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub instance: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug)]
pub struct CheckReport {
    pub check_id: String,
    pub instances_run: usize,
    /// Instances skipped because the check does not apply to them.
    pub not_applicable: usize,
    pub failures: Vec<Failure>,
    pub elapsed: Duration,
}

impl CheckReport {
    fn new(check_id: &str) -> Self {
        CheckReport {
            check_id: check_id.to_string(),
            instances_run: 0,
            not_applicable: 0,
            failures: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn expect_eq<T: PartialEq + fmt::Display>(&mut self, instance: impl fmt::Display, expected: &T, actual: &T) {
        if expected != actual {
            self.fail(instance, expected, actual);
        }
    }

    fn expect(&mut self, instance: impl fmt::Display, what: &str, ok: bool) {
        if !ok {
            self.fail(instance, what, "violated");
        }
    }

    fn fail(&mut self, instance: impl fmt::Display, expected: impl fmt::Display, actual: impl fmt::Display) {
        self.failures.push(Failure {
            instance: instance.to_string(),
            expected: expected.to_string(),
            actual: actual.to_string(),
        });
    }

    fn merge(&mut self, other: CheckReport) {
        self.instances_run += other.instances_run;
        self.not_applicable += other.not_applicable;
        self.failures.extend(other.failures);
    }

    /// `PASS name: N instances, 0 failures` plus one indented line per
    /// failure.
    pub fn render(&self) -> Vec<String> {
        let mut out = vec![format!(
            "{} {}: {} instances, {} not applicable, {} failures",
            if self.passed() { "PASS" } else { "FAIL" },
            self.check_id,
            self.instances_run,
            self.not_applicable,
            self.failures.len()
        )];
        for f in &self.failures {
            out.push(format!("  {}: expected {}; actual {}", f.instance, f.expected, f.actual));
        }
        out
    }
}

fn timed(id: &str, body: impl FnOnce(&mut CheckReport) -> Result<()>) -> Result<CheckReport> {
    let start = Instant::now();
    let mut report = CheckReport::new(id);
    body(&mut report)?;
    report.elapsed = start.elapsed();
    Ok(report)
}

/// (m*⊗id)∘m* = (id⊗m*)∘m* on every label.
pub fn check_coassociativity(w: &InstanceWindow) -> Result<CheckReport> {
    timed("coassociativity", |r| {
        for label in w.labels() {
            r.instances_run += 1;
            let m = mstar_label(&label);
            let left = expand_factor(&m, 0);
            let right = expand_factor(&m, 1);
            r.expect_eq(&label, &left, &right);
        }
        Ok(())
    })
}

/// Projecting either factor of m*(x) to degree 0 recovers x.
pub fn check_counit(w: &InstanceWindow) -> Result<CheckReport> {
    timed("counit", |r| {
        for label in w.labels() {
            r.instances_run += 1;
            let x = RElem::basis(label.clone());
            let m = mstar(&x);
            r.expect_eq(format!("{label} (right)"), &x, &m.project_to(1));
            r.expect_eq(format!("{label} (left)"), &x, &m.project_to(0));
        }
        Ok(())
    })
}

fn label_pairs(w: &InstanceWindow) -> Vec<(Multisegment, Multisegment)> {
    let labels: Vec<Multisegment> = w.labels().into_iter().filter(|m| !m.is_empty()).collect();
    let mut out = Vec::new();
    for (i, a) in labels.iter().enumerate() {
        for b in &labels[i..] {
            if a.len() + b.len() <= w.max_factors {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    out
}

/// m*(x·y) = m*(x)·m*(y), comparing the direct cut enumeration with the
/// componentwise tensor product.
pub fn check_multiplicativity(w: &InstanceWindow) -> Result<CheckReport> {
    timed("multiplicativity", |r| {
        for (a, b) in label_pairs(w) {
            r.instances_run += 1;
            let direct = mstar_label(&a.concat(&b));
            let product = mstar_label(&a).product(&mstar_label(&b))?;
            r.expect_eq(format!("{a} * {b}"), &direct, &product);
        }
        Ok(())
    })
}

/// m* of a label has positive coefficients and splits its degree.
pub fn check_positivity(w: &InstanceWindow) -> Result<CheckReport> {
    timed("positivity", |r| {
        for label in w.labels() {
            r.instances_run += 1;
            let m = mstar_label(&label);
            r.expect(&label, "all coefficients positive", m.is_positive());
            let graded = m.terms().all(|(k, _)| k[0].degree() + k[1].degree() == label.degree());
            r.expect(&label, "degree splits across factors", graded);
        }
        Ok(())
    })
}

/// Shuffles of descending words agree with m* iterated to cuspidal level.
pub fn check_shuffle_equivalence(w: &InstanceWindow) -> Result<CheckReport> {
    timed("shuffle", |r| {
        for label in w.labels() {
            r.instances_run += 1;
            let x = RElem::basis(label.clone());
            r.expect_eq(&label, &cuspidal_jacquet_iterated(&x), &cuspidal_jacquet(&x));
        }
        Ok(())
    })
}

fn multinomial(parts: &[u64]) -> u128 {
    let mut acc: u128 = 1;
    let mut n: u128 = 0;
    for &k in parts {
        for i in 1..=k as u128 {
            n += 1;
            acc = acc * n / i;
        }
    }
    acc
}

/// The number of cuspidal words (with multiplicity) of a label is the
/// multinomial coefficient of its segment lengths, and every word has the
/// label's degree.
pub fn check_word_count(w: &InstanceWindow) -> Result<CheckReport> {
    timed("word-count", |r| {
        for label in w.labels() {
            r.instances_run += 1;
            let j = cuspidal_jacquet(&RElem::basis(label.clone()));
            let lengths: Vec<u64> = label.entries().iter().map(Segment::len).collect();
            let expected = multinomial(&lengths);
            let actual = j.total() as u128;
            r.expect_eq(&label, &expected.to_string(), &actual.to_string());
            r.expect(&label, "word degree equals label degree", j.terms().all(|(w, _)| w.degree() == label.degree()));
        }
        Ok(())
    })
}

/// Duality, twisting, canonical forms and commutativity on the window.
pub fn check_model_laws(w: &InstanceWindow, lines: &LineSet) -> Result<CheckReport> {
    timed("model-laws", |r| {
        let shifts = [Rational::new(1, 2), Rational::from_integer(1), Rational::new(-3, 2)];
        for label in w.labels() {
            r.instances_run += 1;
            r.expect_eq(&label, &label, &Multisegment::new(label.entries().to_vec()));
            let x = RElem::basis(label.clone());
            r.expect_eq(format!("dual dual {label}"), &x, &x.dual(lines)?.dual(lines)?);
            for &t in &shifts {
                r.expect_eq(format!("twist {t} {label}"), &x, &x.twist(t).twist(-t));
                r.expect_eq(format!("dual twist {t} {label}"), &x.twist(t).dual(lines)?, &x.dual(lines)?.twist(-t));
            }
        }
        for (a, b) in label_pairs(w) {
            r.instances_run += 1;
            let (x, y) = (RElem::basis(a.clone()), RElem::basis(b.clone()));
            r.expect_eq(format!("{a} * {b}"), &(&x * &y), &(&y * &x));
            let t = Rational::new(1, 2);
            r.expect_eq(format!("twist of {a} * {b}"), &(&x * &y).twist(t), &(&x.twist(t) * &y.twist(t)));
            r.expect(format!("{a} * {b}"), "degree additive", (a.concat(&b)).degree() == a.degree() + b.degree());
        }
        Ok(())
    })
}

/// Casselman on descending segment words and its invariance under
/// dual-and-reverse on all short window words.
pub fn check_casselman_laws(w: &InstanceWindow, lines: &LineSet) -> Result<CheckReport> {
    timed("casselman-laws", |r| {
        for s in w.segments() {
            r.instances_run += 1;
            let word: CuspWord = s.descending_points().collect();
            let v = casselman(&word)?;
            let unitary = s.is_unitary(lines)?;
            r.expect_eq(format!("square integrable {s}"), &unitary, &v.square_integrable);
            r.expect(&s, "descending word essentially square integrable", v.essentially);
        }
        let points = w.points();
        let mut words: Vec<Vec<Point>> = points.iter().map(|p| vec![p.clone()]).collect();
        let mut frontier = words.clone();
        for _ in 1..3 {
            frontier = frontier
                .iter()
                .flat_map(|wd| points.iter().map(move |p| [wd.as_slice(), std::slice::from_ref(p)].concat()))
                .collect();
            words.extend(frontier.iter().cloned());
        }
        for wd in words {
            r.instances_run += 1;
            let word = CuspWord(wd);
            let mirrored: CuspWord = word.points().iter().rev().map(|p| p.dual(lines)).collect::<Result<_>>()?;
            let (a, b) = (casselman(&word)?, casselman(&mirrored)?);
            r.expect_eq(format!("{word}"), &a.square_integrable, &b.square_integrable);
            r.expect_eq(format!("{word} (centered)"), &a.essentially, &b.essentially);
        }
        Ok(())
    })
}

/// Multiplicity of δ(Δ₁)⊗…⊗δ(Δ_n) in the Jacquet module of
/// δ(Δ₁)×…×δ(Δ_n) for distinct unitary segments.
pub fn check_multiplicity_one(segments: &[Segment], lines: &LineSet) -> Result<CheckReport> {
    let mut sorted = segments.to_vec();
    sorted.sort();
    if sorted.windows(2).any(|p| p[0] == p[1]) {
        return Err(Error::Precondition("segments must be pairwise distinct".into()));
    }
    let blocks: Vec<(Segment, usize)> = segments.iter().map(|s| (s.clone(), 1)).collect();
    check_multiplicity_one_blocks(&blocks, lines)
}

/// As [`check_multiplicity_one`] with blocks π_j = δ(Δ_j)^{m_j}.
pub fn check_multiplicity_one_blocks(blocks: &[(Segment, usize)], lines: &LineSet) -> Result<CheckReport> {
    if blocks.is_empty() {
        return Err(Error::Empty("multiplicity check needs at least one segment"));
    }
    let segs: Vec<Segment> = blocks.iter().map(|(s, _)| s.clone()).collect();
    for (s, m) in blocks {
        if !s.is_unitary(lines)? {
            return Err(Error::NotUnitary(s.to_string()));
        }
        if *m == 0 {
            return Err(Error::Precondition("block multiplicity must be positive".into()));
        }
    }
    let mut sorted = segs.clone();
    sorted.sort();
    if sorted.windows(2).any(|p| p[0] == p[1]) {
        return Err(Error::Precondition("block segments must be pairwise distinct".into()));
    }
    let order = ordering_for_extraction(&segs, lines)?;
    let block_label = |s: &Segment| -> Multisegment {
        let m = blocks.iter().find(|(b, _)| b == s).map(|(_, m)| *m).unwrap();
        Multisegment::new(vec![s.clone(); m])
    };
    let labels: Vec<Multisegment> = order.iter().map(block_label).collect();
    let whole: Multisegment = labels.iter().fold(Multisegment::empty(), |acc, l| acc.concat(l));
    let instance = format!("{whole}");

    timed("multiplicity-one", |r| {
        r.instances_run += 1;

        // filter cascade: peel off the blocks in extraction order
        let mut rest = RElem::basis(whole.clone());
        for l in &labels {
            let f = filter(&mstar(&rest), &FilterSpec::LeftEquals(l.clone()))?;
            rest = f.terms().map(|(k, c)| (k[1].clone(), c)).collect();
        }
        r.expect_eq(format!("{instance} (cascade)"), &RElem::one(), &rest);

        // one-shot: the support-profile part of the n-fold Jacquet module
        let profile: Vec<Vec<Point>> = labels.iter().map(Multisegment::supp).collect();
        let t = comult_iterate(&RElem::basis(whole.clone()), labels.len())?;
        let f = filter(&t, &FilterSpec::supp_profile(profile))?;
        r.expect_eq(format!("{instance} (support profile)"), &1, &f.coeff(&labels));
        Ok(())
    })
}

/// Every family (with repetition) of at most `max_factors` unitary window
/// segments.
pub fn check_multiplicity_one_window(w: &InstanceWindow, lines: &LineSet) -> Result<CheckReport> {
    let unitary = w.unitary_segments(lines)?;
    let mut total = CheckReport::new("multiplicity-one");
    let start = Instant::now();
    type Partial = (usize, Vec<(Segment, usize)>, usize);
    let mut stack: Vec<Partial> = vec![(0, Vec::new(), 0)];
    while let Some((from, blocks, size)) = stack.pop() {
        if !blocks.is_empty() {
            total.merge(check_multiplicity_one_blocks(&blocks, lines)?);
        }
        if size == w.max_factors {
            continue;
        }
        for (i, s) in unitary.iter().enumerate().skip(from) {
            for m in 1..=w.max_factors - size {
                let mut next = blocks.clone();
                next.push((s.clone(), m));
                stack.push((i + 1, next, size + m));
            }
        }
    }
    total.elapsed = start.elapsed();
    Ok(total)
}

/// For unitary Δ = [−a, a] and Δ_i = [−a−i, a+i], the part of the
/// three-block Jacquet module of δ(Δ₁)×…×δ(Δ_k) with supports
/// (ΣΓ_i, k·Δ, ΣΓ_i⁺) is exactly Λ = δ(Γ₁)…δ(Γ_k) ⊗ δ(Δ)^k ⊗ δ(Γ₁⁺)…δ(Γ_k⁺),
/// where Γ_i = [a+1, a+i].
pub fn check_lambda_equality(delta: &Segment, k: usize, lines: &LineSet) -> Result<CheckReport> {
    if !delta.is_unitary(lines)? {
        return Err(Error::NotUnitary(delta.to_string()));
    }
    if k == 0 {
        return Err(Error::Precondition("k must be at least 1".into()));
    }
    let line = delta.line().clone();
    let a = delta.end();
    let gammas: Vec<Segment> =
        (1..=k as i64).map(|i| Segment::new(line.clone(), a + 1, a + i)).collect::<Result<_>>()?;
    let gamma_duals: Vec<Segment> = gammas.iter().map(|g| g.dual(lines)).collect::<Result<_>>()?;
    let deltas: Vec<Segment> =
        (1..=k as i64).map(|i| Segment::new(line.clone(), -a - i, a + i)).collect::<Result<_>>()?;

    let upper: Multisegment = gammas.iter().cloned().collect();
    let middle = Multisegment::new(vec![delta.clone(); k]);
    let lower: Multisegment = gamma_duals.iter().cloned().collect();
    let mut lambda = TensorElem::zero(3);
    lambda.add_term(vec![upper.clone(), middle.clone(), lower.clone()], 1);

    let x = RElem::basis(deltas.iter().cloned().collect());
    let spec = FilterSpec::supp_profile(vec![upper.supp(), middle.supp(), lower.supp()]);
    let instance = format!("{} k={k}", format::segment(delta));

    timed("lambda", |r| {
        r.instances_run += 1;
        r.expect_eq(&instance, &lambda, &filter(&comult_iterate(&x, 3)?, &spec)?);
        r.expect_eq(format!("{instance} (left iteration)"), &lambda, &filter(&comult_iterate_left(&x, 3)?, &spec)?);
        Ok(())
    })
}

pub fn check_lambda_window(w: &InstanceWindow, lines: &LineSet) -> Result<CheckReport> {
    let mut total = CheckReport::new("lambda");
    let start = Instant::now();
    for s in w.unitary_segments(lines)? {
        for k in 1..=2 {
            total.merge(check_lambda_equality(&s, k, lines)?);
        }
    }
    total.elapsed = start.elapsed();
    Ok(total)
}

/// m*_bottom(δ(Δ₁)×δ(Δ₂)) = δ(Δ₁)δ(⁻Δ₂)⊗b(Δ₂) + δ(⁻Δ₁)δ(Δ₂)⊗b(Δ₁).
pub fn check_bottom_formulas(a: &Segment, b: &Segment) -> Result<CheckReport> {
    if a.line() != b.line() {
        return Err(Error::CrossLine(a.to_string(), b.to_string()));
    }
    timed("bottom", |r| {
        r.instances_run += 1;
        let mut expected = TensorElem::zero(2);
        for (kept, cut) in [(a, b), (b, a)] {
            let left: Multisegment = std::iter::once(kept.clone()).chain(cut.minus()).collect();
            expected.add_term(vec![left, Multisegment::point(&cut.bottom())], 1);
        }
        let x = RElem::basis(Multisegment::new(vec![a.clone(), b.clone()]));
        r.expect_eq(format!("{} x {}", format::segment(a), format::segment(b)), &expected, &mstar_bottom(&x));
        Ok(())
    })
}

pub fn check_bottom_window(w: &InstanceWindow) -> Result<CheckReport> {
    let mut total = CheckReport::new("bottom");
    let start = Instant::now();
    let segs = w.segments();
    for (i, a) in segs.iter().enumerate() {
        for b in &segs[i..] {
            if a.line() == b.line() {
                total.merge(check_bottom_formulas(a, b)?);
            } else {
                total.not_applicable += 1;
            }
        }
    }
    total.elapsed = start.elapsed();
    Ok(total)
}

/// For every linked pair: the Grothendieck identity, word-level containment
/// of the other summand, nonnegativity of the Langlands class on words, the
/// adjacent-disjoint case, and symmetry of the decision.
pub fn check_linked_pair_suite(w: &InstanceWindow) -> Result<CheckReport> {
    timed("linked-pairs", |r| {
        let segs = w.segments();
        for (i, a) in segs.iter().enumerate() {
            for b in &segs[i..] {
                if !linked(a, b) {
                    r.not_applicable += 1;
                    continue;
                }
                r.instances_run += 1;
                let name = format!("{} , {}", format::segment(a), format::segment(b));
                let d = decide_pair(a, b);
                let (Some(l), Some(other)) = (&d.langlands_class, &d.other_summand) else {
                    r.fail(&name, "length-two", "irreducible");
                    continue;
                };
                let standard = RElem::basis(d.class_label.clone());
                let other_el = RElem::basis(other.clone());
                r.expect_eq(format!("{name} (a)"), &standard, &(l + &other_el));

                let j_std = cuspidal_jacquet(&standard);
                let j_other = cuspidal_jacquet(&other_el);
                r.expect(format!("{name} (b)"), "other summand words contained in standard words", j_other.le(&j_std));
                let j_l = cuspidal_jacquet(l);
                r.expect(format!("{name} (c)"), "Langlands class words nonnegative", j_l.is_nonnegative());
                r.expect(format!("{name} (c)"), "Langlands class words nonzero", !j_l.is_empty());

                if a.intersection(b)?.is_none() {
                    let union = Multisegment::singleton(a.union(b)?);
                    r.expect_eq(format!("{name} (d)"), &union, other);
                }
                r.expect(format!("{name} (symmetry)"), "decision symmetric in its arguments", d == decide_pair(b, a));
            }
        }
        Ok(())
    })
}

fn point_multisets(points: &[Point], max_size: usize) -> Vec<Vec<Point>> {
    let mut out = Vec::new();
    let mut stack: Vec<(usize, Vec<Point>)> = vec![(0, Vec::new())];
    while let Some((from, current)) = stack.pop() {
        if current.len() == max_size {
            continue;
        }
        for (i, p) in points.iter().enumerate().skip(from) {
            let mut next = current.clone();
            next.push(p.clone());
            out.push(next.clone());
            stack.push((i, next));
        }
    }
    out.sort();
    out
}

/// The classifier against a definitional scan: X is the support of a
/// square-integrable δ(Δ) iff X equals the point set of some segment Δ and
/// X is closed under duality.
pub fn check_si_classifier(w: &InstanceWindow, lines: &LineSet, max_size: usize) -> Result<CheckReport> {
    timed("si-classifier", |r| {
        let points = w.points();
        let mut candidates = Vec::new();
        for line in &w.lines {
            for start in w.exponents() {
                for len in 0..max_size as i64 {
                    candidates.push(Segment::new(line.clone(), start, start + len)?);
                }
            }
        }
        for x in point_multisets(&points, max_size) {
            r.instances_run += 1;
            let name = format!("{{{}}}", x.iter().map(format::point).collect::<Vec<_>>().join(", "));
            let matching = candidates.iter().find(|s| s.points().collect::<Vec<_>>() == x);
            let oracle = match matching {
                None => SiClass::None,
                Some(s) => {
                    let mut dual: Vec<Point> = x.iter().map(|p| p.dual(lines)).collect::<Result<_>>()?;
                    dual.sort();
                    if dual == x {
                        SiClass::SquareIntegrable(s.clone())
                    } else {
                        SiClass::EssentiallyOnly(s.clone())
                    }
                }
            };
            let got = classify_square_integrable(&x, lines)?;
            if got != oracle {
                r.fail(&name, format!("{oracle:?}"), format!("{got:?}"));
            }
            let descending = CuspWord(x.iter().rev().cloned().collect());
            let v = casselman(&descending)?;
            match &got {
                SiClass::SquareIntegrable(_) => r.expect(&name, "Casselman square integrable", v.square_integrable),
                SiClass::EssentiallyOnly(_) => {
                    r.expect(&name, "Casselman essentially only", v.essentially && !v.square_integrable)
                }
                SiClass::None => {}
            }
        }
        Ok(())
    })
}

/// The named checks of the suite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Check {
    Coassociativity,
    Counit,
    Multiplicativity,
    Positivity,
    Shuffle,
    WordCount,
    ModelLaws,
    CasselmanLaws,
    MultiplicityOne,
    Lambda,
    Bottom,
    LinkedPairs,
    SiClassifier,
}

impl Check {
    pub const ALL: [Check; 13] = [
        Check::Coassociativity,
        Check::Counit,
        Check::Multiplicativity,
        Check::Positivity,
        Check::Shuffle,
        Check::WordCount,
        Check::ModelLaws,
        Check::CasselmanLaws,
        Check::MultiplicityOne,
        Check::Lambda,
        Check::Bottom,
        Check::LinkedPairs,
        Check::SiClassifier,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Coassociativity => "coassociativity",
            Check::Counit => "counit",
            Check::Multiplicativity => "multiplicativity",
            Check::Positivity => "positivity",
            Check::Shuffle => "shuffle",
            Check::WordCount => "word-count",
            Check::ModelLaws => "model-laws",
            Check::CasselmanLaws => "casselman-laws",
            Check::MultiplicityOne => "multiplicity-one",
            Check::Lambda => "lambda",
            Check::Bottom => "bottom",
            Check::LinkedPairs => "linked-pairs",
            Check::SiClassifier => "si-classifier",
        }
    }

    pub fn from_name(name: &str) -> Option<Check> {
        Check::ALL.into_iter().find(|c| c.name() == name)
    }

    /// Parses a comma-separated list; `all` selects every check.
    pub fn parse_list(list: &str) -> Result<Vec<Check>> {
        let mut out = Vec::new();
        for name in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            if name == "all" {
                out.extend(Check::ALL);
            } else {
                out.push(Check::from_name(name).ok_or_else(|| Error::Precondition(format!("unknown suite `{name}`")))?);
            }
        }
        out.dedup();
        if out.is_empty() {
            return Err(Error::Precondition("no suite selected".into()));
        }
        Ok(out)
    }

    pub fn run(self, w: &InstanceWindow, lines: &LineSet) -> Result<CheckReport> {
        match self {
            Check::Coassociativity => check_coassociativity(w),
            Check::Counit => check_counit(w),
            Check::Multiplicativity => check_multiplicativity(w),
            Check::Positivity => check_positivity(w),
            Check::Shuffle => check_shuffle_equivalence(w),
            Check::WordCount => check_word_count(w),
            Check::ModelLaws => check_model_laws(w, lines),
            Check::CasselmanLaws => check_casselman_laws(w, lines),
            Check::MultiplicityOne => check_multiplicity_one_window(w, lines),
            Check::Lambda => check_lambda_window(w, lines),
            Check::Bottom => check_bottom_window(w),
            Check::LinkedPairs => check_linked_pair_suite(w),
            Check::SiClassifier => check_si_classifier(w, lines, SI_MAX_SUPPORT),
        }
    }
}

/// Runs the checks concurrently; reports come back in the order given.
pub fn run_suite(checks: &[Check], w: &InstanceWindow, lines: &LineSet) -> Result<Vec<CheckReport>> {
    std::thread::scope(|scope| {
        let handles: Vec<_> = checks.iter().map(|&c| scope.spawn(move || c.run(w, lines))).collect();
        handles.into_iter().map(|h| h.join().expect("check panicked")).collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lines() -> LineSet {
        LineSet::standard()
    }

    fn rho() -> Line {
        lines().lines()[0].clone()
    }

    fn seg(a: Rational, b: Rational) -> Segment {
        Segment::new(rho(), a, b).unwrap()
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn small() -> InstanceWindow {
        InstanceWindow {
            step: 1.into(),
            lo: (-1).into(),
            hi: 1.into(),
            max_factors: 2,
            ..InstanceWindow::standard(&lines())
        }
    }

    #[test]
    fn window_enumeration() {
        let w = small();
        let segs = w.segments();
        // [-1..-1],[-1..0],[-1..1],[0..0],[0..1],[1..1]
        assert_eq!(segs.len(), 6);
        // 1 + 6 + 21
        assert_eq!(w.labels().len(), 28);
        assert_eq!(w.labels()[0], Multisegment::empty());

        let std = InstanceWindow::standard(&lines());
        assert_eq!(std.points().len(), 9);
        assert_eq!(std.segments().len(), 21);
        assert_eq!(std.unitary_segments(&lines()).unwrap().len(), 5);
    }

    #[test]
    fn window_parsing() {
        let w = InstanceWindow::parse("range=-1..1,step=1,factors=2", &lines()).unwrap();
        assert_eq!(w, small());
        assert_eq!(InstanceWindow::parse(&w.to_string(), &lines()).unwrap(), w);
        assert!(InstanceWindow::parse("range=2..1", &lines()).is_err());
        assert!(InstanceWindow::parse("lines=sigma", &lines()).is_err());
        assert!(InstanceWindow::parse("step=2/3", &lines()).is_err());
        assert!(InstanceWindow::parse("bogus=1", &lines()).is_err());
    }

    #[test]
    fn coassociativity_examples() {
        let one = |m: Multisegment| {
            let t = mstar_label(&m);
            assert_eq!(expand_factor(&t, 0), expand_factor(&t, 1));
        };
        one(Multisegment::singleton(seg(0.into(), 2.into())));
        one(Multisegment::new(vec![seg(0.into(), 1.into()), seg(1.into(), 1.into())]));
        let t = mstar_label(&Multisegment::empty());
        assert_eq!(expand_factor(&t, 0), TensorElem::one(3));
    }

    #[test]
    fn small_window_suite_passes() {
        let reports = run_suite(&Check::ALL, &small(), &lines()).unwrap();
        for r in &reports {
            assert!(r.passed(), "{:?}", r.render());
            assert!(r.instances_run > 0, "{}", r.check_id);
        }
    }

    #[test]
    fn multiplicity_one_examples() {
        let l = lines();
        let fams = [
            vec![seg((-1).into(), 1.into()), seg(0.into(), 0.into())],
            vec![seg(0.into(), 0.into())],
            vec![seg(q(-3, 2), q(3, 2)), seg(q(-1, 2), q(1, 2)), seg(0.into(), 0.into())],
        ];
        for f in fams {
            assert!(check_multiplicity_one(&f, &l).unwrap().passed());
        }
        let blocks = [(seg(q(-1, 2), q(1, 2)), 2), (seg(0.into(), 0.into()), 1)];
        assert!(check_multiplicity_one_blocks(&blocks, &l).unwrap().passed());

        assert!(check_multiplicity_one(&[seg(0.into(), 1.into())], &l).is_err());
        let dup = [seg(0.into(), 0.into()), seg(0.into(), 0.into())];
        assert!(check_multiplicity_one(&dup, &l).is_err());
    }

    #[test]
    fn lambda_examples() {
        let l = lines();
        for (s, k) in [(seg(q(-1, 2), q(1, 2)), 1), (seg(0.into(), 0.into()), 2), (seg(q(-1, 2), q(1, 2)), 2)] {
            assert!(check_lambda_equality(&s, k, &l).unwrap().passed());
        }
        assert!(check_lambda_equality(&seg(0.into(), 1.into()), 1, &l).is_err());
        assert!(check_lambda_equality(&seg(0.into(), 0.into()), 0, &l).is_err());
    }

    #[test]
    fn bottom_examples() {
        let s = |a: i64, b: i64| seg(a.into(), b.into());
        assert!(check_bottom_formulas(&s(0, 1), &s(2, 3)).unwrap().passed());
        assert!(check_bottom_formulas(&s(-1, 1), &s(0, 0)).unwrap().passed());

        let m = mstar_bottom(&RElem::basis(Multisegment::new(vec![s(0, 0), s(0, 0)])));
        let p = Multisegment::singleton(s(0, 0));
        assert_eq!(m.len(), 1);
        assert_eq!(m.coeff(&[p.clone(), p]), 2);
        assert!(check_bottom_formulas(&s(0, 0), &s(0, 0)).unwrap().passed());
    }

    #[test]
    fn failing_instances_are_reported() {
        let mut r = CheckReport::new("demo");
        r.expect_eq("x", &1, &2);
        assert!(!r.passed());
        assert_eq!(r.render()[1], "  x: expected 1; actual 2");
    }

    #[test]
    fn multinomials() {
        assert_eq!(multinomial(&[3, 3, 3]), 1680);
        assert_eq!(multinomial(&[2, 1]), 3);
        assert_eq!(multinomial(&[]), 1);
    }
}
