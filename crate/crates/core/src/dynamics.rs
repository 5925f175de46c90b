//! Dynamical-system-like classification of points of a finite space.
//!
//! Opens and closures come from the topology; `↑`, `x̂` and intervals come from
//! the specialization preorder.

use serde::Serialize;

use crate::order::{self, IntervalKind};
use crate::pointset::PointSet;
use crate::preorder::Preorder;
use crate::topology::{class_space, FiniteTopology};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct DynClass {
    pub recurrent: bool,
    pub proper: bool,
    pub non_wandering: bool,
    pub exceptional: bool,
    pub weakly_non_indifferent: bool,
    pub weakly_saddle_like: bool,
    pub weakly_hyperbolic_like: bool,
    pub non_indifferent: bool,
    pub saddle_like: bool,
    pub hyperbolic_like: bool,
}

struct Ctx<'a> {
    top: &'a FiniteTopology,
    pre: Preorder,
}

impl<'a> Ctx<'a> {
    fn new(top: &'a FiniteTopology) -> Self {
        Ctx { top, pre: top.specialization() }
    }

    fn derived(&self, x: usize) -> PointSet {
        self.top.derived(x)
    }

    fn is_td(&self, x: usize) -> bool {
        self.top.is_closed(self.derived(x))
    }

    fn is_recurrent(&self, x: usize) -> bool {
        self.top.is_closed(self.top.class_of(x)) || !self.top.is_closed(self.derived(x))
    }

    fn recurrent_set(&self) -> PointSet {
        (0..self.top.len()).filter(|&x| self.is_recurrent(x)).fold(PointSet::empty(self.top.len()), |a, x| a.with(x))
    }

    /// `(x, y] − {y}`
    fn punctured(&self, x: usize, y: usize) -> PointSet {
        order::interval(&self.pre, x, y, IntervalKind::HalfOpenLeft).without(y)
    }

    fn classify(&self, x: usize, recurrent: PointSet) -> DynClass {
        let top = self.top;
        let p = &self.pre;
        let up = p.up_row(x);
        let up_open = top.is_open(up);
        let above_classes = order::class_strict_up(p, x);
        let above_td = above_classes.iter().all(|y| self.is_td(y));
        let is_max = order::class_strict_up(p, x).is_empty();

        let weakly_non_indifferent = up_open && above_td && !up.without(x).is_empty();
        let weakly_saddle_like =
            !up_open || above_classes.iter().any(|y| top.closure(self.punctured(x, y)).contains(x));
        let strong = !above_classes.is_empty() && above_td;
        let non_indifferent = weakly_non_indifferent && strong;
        let saddle_like = weakly_saddle_like && strong;
        DynClass {
            recurrent: recurrent.contains(x),
            proper: self.is_td(x),
            non_wandering: top.interior(top.closure(recurrent)).contains(x),
            exceptional: !is_max && !self.is_td(x),
            weakly_non_indifferent,
            weakly_saddle_like,
            weakly_hyperbolic_like: weakly_non_indifferent || weakly_saddle_like,
            non_indifferent,
            saddle_like,
            hyperbolic_like: non_indifferent || saddle_like,
        }
    }
}

pub fn classify_point(top: &FiniteTopology, x: usize) -> DynClass {
    let c = Ctx::new(top);
    c.classify(x, c.recurrent_set())
}

pub fn classify(top: &FiniteTopology) -> Vec<DynClass> {
    let c = Ctx::new(top);
    let r = c.recurrent_set();
    (0..top.len()).map(|x| c.classify(x, r)).collect()
}

pub fn recurrent_points(top: &FiniteTopology) -> PointSet {
    Ctx::new(top).recurrent_set()
}

pub fn is_recurrent(top: &FiniteTopology, x: usize) -> bool {
    Ctx::new(top).is_recurrent(x)
}

/// `x ∈ int cl R` where `R` is the set of recurrent points.
pub fn is_non_wandering(top: &FiniteTopology, x: usize) -> bool {
    top.interior(top.closure(recurrent_points(top))).contains(x)
}

/// `min X ≠ X` is dense and some point is dense.
pub fn is_anosov_type(top: &FiniteTopology) -> bool {
    let n = top.len();
    let mins = (0..n).filter(|&x| top.is_closed(top.class_of(x))).fold(PointSet::empty(n), |a, x| a.with(x));
    mins != top.points() && top.closure(mins) == top.points() && (0..n).any(|x| top.point_closure(x) == top.points())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TransferReport {
    /// `R` of the space.
    pub recurrent: PointSet,
    /// `p⁻¹({x̂ : |x̂| > 1} ∪ R̂)`.
    pub lifted: PointSet,
    /// Every point recurrent.
    pub space_recurrent: bool,
    /// `x̂` recurrent in the class space for every point with `|x̂| = 1`.
    pub t0_classes_recurrent: bool,
    pub holds: bool,
    /// Least point in the symmetric difference of `recurrent` and `lifted`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<usize>,
}

pub fn recurrence_transfer_check(top: &FiniteTopology) -> TransferReport {
    let n = top.len();
    let (q, class_of) = class_space(top);
    let r = recurrent_points(top);
    let rq = recurrent_points(&q);
    let class_size = |c: usize| class_of.iter().filter(|&&k| k == c).count();
    let lifted = (0..n)
        .filter(|&x| class_size(class_of[x]) > 1 || rq.contains(class_of[x]))
        .fold(PointSet::empty(n), |a, x| a.with(x));
    let space_recurrent = r.is_full();
    let t0_classes_recurrent = (0..n).filter(|&x| class_size(class_of[x]) == 1).all(|x| rq.contains(class_of[x]));
    let diff = (r - lifted) | (lifted - r);
    TransferReport {
        recurrent: r,
        lifted,
        space_recurrent,
        t0_classes_recurrent,
        holds: diff.is_empty() && space_recurrent == t0_classes_recurrent,
        witness: diff.first(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "lemma", rename_all = "snake_case")]
pub enum SaddleViolation {
    /// `x ∈ cl(X − ↑x)`, `x ∉ int ↑x` and "`↑x` not open" disagree.
    Upset { x: usize },
    /// `x ∈ cl((x,y] − {y})`, `(x,y] − {y} ≠ ∅` and "`(x,y) ≠ ∅` or `|ŷ| > 1`" disagree.
    Interval { x: usize, y: usize },
}

/// Checks both three-way equivalences for every point and every pair `x < y`.
pub fn saddle_equivalences_check(top: &FiniteTopology) -> Result<(), SaddleViolation> {
    let n = top.len();
    let pre = top.specialization();
    let all = top.points();
    for x in 0..n {
        let up = pre.up_row(x);
        let a = top.closure(all - up).contains(x);
        let b = !top.interior(up).contains(x);
        let c = !top.is_open(up);
        if !(a == b && b == c) {
            return Err(SaddleViolation::Upset { x });
        }
    }
    for x in 0..n {
        for y in order::class_strict_up(&pre, x) {
            let punct = order::interval(&pre, x, y, IntervalKind::HalfOpenLeft).without(y);
            let a = top.closure(punct).contains(x);
            let b = !punct.is_empty();
            let c = !order::interval(&pre, x, y, IntervalKind::Open).is_empty() || order::cls(&pre, y).len() > 1;
            if !(a == b && b == c) {
                return Err(SaddleViolation::Interval { x, y });
            }
        }
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum RecurrenceOutcome {
    /// Some point is not recurrent; `point` is the least one.
    Vacuous { point: usize },
    /// Every point recurrent and none hyperbolic-like.
    Holds,
    /// Every point recurrent but `point` is hyperbolic-like.
    Violated { point: usize },
}

pub fn recurrent_vs_hyperbolic_check(top: &FiniteTopology) -> RecurrenceOutcome {
    let flags = classify(top);
    if let Some(x) = flags.iter().position(|f| !f.recurrent) {
        return RecurrenceOutcome::Vacuous { point: x };
    }
    match flags.iter().position(|f| f.hyperbolic_like) {
        Some(x) => RecurrenceOutcome::Violated { point: x },
        None => RecurrenceOutcome::Holds,
    }
}
