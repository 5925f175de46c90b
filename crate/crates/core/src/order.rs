//! Order analytics on preorders: up/down sets, heights, forests, intervals and
//! the small structural patterns the axiom characterizations refer to.
//!
//! Strictness is class-strict throughout: `x < y` means `x <= y` and not `y <= x`.

use serde::Serialize;

use crate::pointset::PointSet;
use crate::preorder::Preorder;

pub fn upset(pre: &Preorder, x: usize) -> PointSet {
    pre.up_row(x)
}

pub fn downset(pre: &Preorder, x: usize) -> PointSet {
    pre.down_row(x)
}

pub fn cls(pre: &Preorder, x: usize) -> PointSet {
    pre.up_row(x) & pre.down_row(x)
}

/// `↑x − {x}`.
pub fn strict_up(pre: &Preorder, x: usize) -> PointSet {
    pre.up_row(x).without(x)
}

/// `↓x − {x}`, the derived set of `x`.
pub fn strict_down(pre: &Preorder, x: usize) -> PointSet {
    pre.down_row(x).without(x)
}

/// `⇑x̂ = ↑x − x̂`.
pub fn class_strict_up(pre: &Preorder, x: usize) -> PointSet {
    pre.up_row(x) - pre.down_row(x)
}

/// `⇓x̂ = ↓x − x̂`.
pub fn class_strict_down(pre: &Preorder, x: usize) -> PointSet {
    pre.down_row(x) - pre.up_row(x)
}

pub fn upset_of(pre: &Preorder, a: PointSet) -> PointSet {
    a.iter().fold(PointSet::empty(pre.len()), |acc, x| acc | pre.up_row(x))
}

pub fn downset_of(pre: &Preorder, a: PointSet) -> PointSet {
    a.iter().fold(PointSet::empty(pre.len()), |acc, x| acc | pre.down_row(x))
}

pub fn is_upset(pre: &Preorder, a: PointSet) -> bool {
    upset_of(pre, a) == a
}

pub fn is_downset(pre: &Preorder, a: PointSet) -> bool {
    downset_of(pre, a) == a
}

/// Points whose class is minimal (`↓x = x̂`).
pub fn minimal(pre: &Preorder) -> PointSet {
    (0..pre.len())
        .filter(|&x| pre.down_row(x).is_subset(pre.up_row(x)))
        .fold(PointSet::empty(pre.len()), |a, x| a.with(x))
}

/// Points whose class is maximal (`↑x = x̂`).
pub fn maximal(pre: &Preorder) -> PointSet {
    (0..pre.len())
        .filter(|&x| pre.up_row(x).is_subset(pre.down_row(x)))
        .fold(PointSet::empty(pre.len()), |a, x| a.with(x))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HeightInfo {
    pub per_point: Vec<usize>,
    pub space_height: usize,
}

/// Heights count classes: the height of `x` is the length of the longest strictly
/// descending chain of classes starting at `x̂`.
pub fn height(pre: &Preorder) -> HeightInfo {
    let n = pre.len();
    let mut per_point = vec![0usize; n];
    // Processing points by the size of their class-strict downset visits every
    // class-strict predecessor first.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| class_strict_down(pre, x).len());
    for &x in &order {
        per_point[x] = class_strict_down(pre, x).iter().map(|y| per_point[y] + 1).max().unwrap_or(0);
    }
    let space_height = per_point.iter().copied().max().unwrap_or(0);
    HeightInfo { per_point, space_height }
}

/// Any two points of `a` are comparable.
pub fn is_pre_chain(pre: &Preorder, a: PointSet) -> bool {
    a.iter().all(|x| a.is_subset(pre.up_row(x) | pre.down_row(x)))
}

/// Least pair `(u, v)` in `a`, `u < v` as indices, of incomparable points.
pub fn incomparable_pair(pre: &Preorder, a: PointSet) -> Option<(usize, usize)> {
    for u in a {
        let bad = a - (pre.up_row(u) | pre.down_row(u));
        if let Some(v) = bad.iter().find(|&v| v > u) {
            return Some((u, v));
        }
    }
    None
}

/// Every upset `↑x` is a pre-chain.
pub fn is_downward_forest(pre: &Preorder) -> bool {
    fork(pre, pre.points()).is_none()
}

/// Every downset `↓x` is a pre-chain.
pub fn is_upward_forest(pre: &Preorder) -> bool {
    join(pre, pre.points()).is_none()
}

/// Least `(z, u, v)` with `z` in `a` and `u, v` incomparable members of `↑z ∩ a`.
pub fn fork(pre: &Preorder, a: PointSet) -> Option<(usize, usize, usize)> {
    a.iter().find_map(|z| incomparable_pair(pre, pre.up_row(z) & a).map(|(u, v)| (z, u, v)))
}

/// Least `(z, u, v)` with `z` in `a` and `u, v` incomparable members of `↓z ∩ a`.
pub fn join(pre: &Preorder, a: PointSet) -> Option<(usize, usize, usize)> {
    a.iter().find_map(|z| incomparable_pair(pre, pre.down_row(z) & a).map(|(u, v)| (z, u, v)))
}

/// `↓x ∩ ↓y ≠ ∅` for all `x, y` in `a`.
pub fn is_down_directed(pre: &Preorder, a: PointSet) -> bool {
    a.iter().all(|x| a.iter().all(|y| !(pre.down_row(x) & pre.down_row(y)).is_empty()))
}

/// `a = ↑a ∩ ↓a`.
pub fn is_convex(pre: &Preorder, a: PointSet) -> bool {
    upset_of(pre, a) & downset_of(pre, a) == a
}

/// `y < x` with `↓x ∩ ↑y = x̂ ⊔ ŷ`, i.e. `ŷ` is covered by `x̂`.
pub fn is_immediate_predecessor(pre: &Preorder, y: usize, x: usize) -> bool {
    pre.lt(y, x) && pre.down_row(x) & pre.up_row(y) == cls(pre, x) | cls(pre, y)
}

/// Every non-minimal point has an immediate predecessor.
pub fn is_down_discrete(pre: &Preorder) -> bool {
    lacks_predecessor(pre).is_none()
}

/// Least non-minimal point without an immediate predecessor.
pub fn lacks_predecessor(pre: &Preorder) -> Option<usize> {
    let mins = minimal(pre);
    (0..pre.len())
        .filter(|&x| !mins.contains(x))
        .find(|&x| !class_strict_down(pre, x).iter().any(|y| is_immediate_predecessor(pre, y, x)))
}

/// Least `(a, b, c, d)` of class representatives forming a min-S¹ pattern:
/// `a, b` incomparable, `c, d` incomparable, and `a, b < c, d`.
pub fn min_s1_witness(pre: &Preorder) -> Option<(usize, usize, usize, usize)> {
    let cp = pre.class_poset();
    let o = cp.order();
    let k = cp.len();
    let rep = |c: usize| cp.classes()[c].first().unwrap();
    let mut best: Option<(usize, usize, usize, usize)> = None;
    for a in 0..k {
        for b in a + 1..k {
            if o.comparable(a, b) {
                continue;
            }
            let above = o.up_row(a) & o.up_row(b);
            for c in above {
                for d in above.iter().filter(|&d| d > c) {
                    if o.comparable(c, d) {
                        continue;
                    }
                    let mut q = [rep(a), rep(b), rep(c), rep(d)];
                    if q[0] > q[1] {
                        q.swap(0, 1);
                    }
                    if q[2] > q[3] {
                        q.swap(2, 3);
                    }
                    let q = (q[0], q[1], q[2], q[3]);
                    if best.is_none_or(|b| q < b) {
                        best = Some(q);
                    }
                }
            }
        }
    }
    best
}

pub fn is_min_s1_free(pre: &Preorder) -> bool {
    min_s1_witness(pre).is_none()
}

/// Four points form a min-S¹ pattern in the class order.
pub fn is_min_s1(pre: &Preorder, a: usize, b: usize, c: usize, d: usize) -> bool {
    !pre.comparable(a, b) && !pre.comparable(c, d) && pre.lt(a, c) && pre.lt(a, d) && pre.lt(b, c) && pre.lt(b, d)
}

/// Least point `p` of a minimal class such that removing `p̂` leaves a downward forest.
pub fn bouquet_root(pre: &Preorder) -> Option<usize> {
    let mins = minimal(pre);
    let cp = pre.class_poset();
    cp.classes()
        .iter()
        .filter(|c| c.is_subset(mins))
        .find(|&&c| fork(pre, pre.points() - c).is_none())
        .and_then(|c| c.first())
}

/// Points above everything.
pub fn tops(pre: &Preorder) -> PointSet {
    let all = pre.points();
    (0..pre.len()).filter(|&x| pre.down_row(x) == all).fold(PointSet::empty(pre.len()), |a, x| a.with(x))
}

/// Points below everything.
pub fn bottoms(pre: &Preorder) -> PointSet {
    let all = pre.points();
    (0..pre.len()).filter(|&x| pre.up_row(x) == all).fold(PointSet::empty(pre.len()), |a, x| a.with(x))
}

pub fn has_top(pre: &Preorder) -> bool {
    !tops(pre).is_empty()
}

pub fn has_bottom(pre: &Preorder) -> bool {
    !bottoms(pre).is_empty()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IntervalKind {
    /// `[x, y]`
    Closed,
    /// `(x, y]`
    HalfOpenLeft,
    /// `[x, y)`
    HalfOpenRight,
    /// `(x, y)`
    Open,
}

pub fn interval(pre: &Preorder, x: usize, y: usize, kind: IntervalKind) -> PointSet {
    let lower = match kind {
        IntervalKind::Closed | IntervalKind::HalfOpenRight => pre.up_row(x),
        IntervalKind::HalfOpenLeft | IntervalKind::Open => class_strict_up(pre, x),
    };
    let upper = match kind {
        IntervalKind::Closed | IntervalKind::HalfOpenLeft => pre.down_row(y),
        IntervalKind::HalfOpenRight | IntervalKind::Open => class_strict_down(pre, y),
    };
    lower & upper
}
