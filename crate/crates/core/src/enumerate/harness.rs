//! Theorem catalog and exhaustive verification over all small labeled spaces.
//!
//! Claims are statements expected to hold on every finite space. Probes are
//! literal readings that are known or suspected to fail on finite spaces; they
//! are run separately and their counterexamples are reported, not suppressed.

use std::time::Instant;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use super::{enumerate_topologies, partitions, subtrees, MAX_ENUM_POINTS};
use crate::axioms::{AxiomId, Classifier, Mode};
use crate::decomp::{self, Decomposition};
use crate::dynamics::{self, RecurrenceOutcome, SaddleViolation};
use crate::error::Error;
use crate::order::{self, IntervalKind};
use crate::pointset::PointSet;
use crate::preorder::Preorder;
use crate::topology::{alexandrov, class_space, disjoint_union, specialization, FiniteTopology};

use AxiomId::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Arity {
    PerSpace,
    PerPoint,
    PerPair,
    PerDecomposition,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    /// Expected to hold on every finite space.
    Claim,
    /// A literal reading checked for the record.
    Probe,
}

#[derive(Clone, Copy)]
enum Check {
    Space(fn(&FiniteTopology) -> Result<(), Violation>),
    Pair(fn(&FiniteTopology, &FiniteTopology) -> Result<(), Violation>),
    Decomp(fn(&FiniteTopology, &Decomposition) -> Result<(), Violation>),
    /// Definitional and characterized forms agree.
    ModeEq(AxiomId),
    Implies(AxiomId, AxiomId),
    Iff(AxiomId, AxiomId),
    /// Holds on every space in both forms.
    Always(AxiomId),
}

#[derive(Clone, Copy)]
pub struct TheoremId {
    pub id: &'static str,
    pub description: &'static str,
    pub arity: Arity,
    pub kind: Kind,
    check: Check,
}

impl std::fmt::Debug for TheoremId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.id)
    }
}

impl PartialEq for TheoremId {
    fn eq(&self, other: &Self) -> bool {
        self.id == other.id
    }
}

impl Eq for TheoremId {}

impl Serialize for TheoremId {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.id)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Violation {
    point: Option<usize>,
    detail: String,
}

fn fail(detail: impl Into<String>) -> Result<(), Violation> {
    Err(Violation { point: None, detail: detail.into() })
}

fn fail_at(x: usize, detail: impl Into<String>) -> Result<(), Violation> {
    Err(Violation { point: Some(x), detail: detail.into() })
}

fn ensure(ok: bool, detail: impl FnOnce() -> String) -> Result<(), Violation> {
    if ok {
        Ok(())
    } else {
        fail(detail())
    }
}

fn ensure_at(ok: bool, x: usize, detail: impl FnOnce() -> String) -> Result<(), Violation> {
    if ok {
        Ok(())
    } else {
        fail_at(x, detail())
    }
}

/// A least input on which a theorem fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub space: FiniteTopology,
    /// Relation-matrix encoding of the specialization preorder of `space`.
    pub encoding: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub second: Option<FiniteTopology>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decomposition: Option<Decomposition>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub point: Option<usize>,
    pub detail: String,
}

impl Counterexample {
    fn new(space: FiniteTopology, v: Violation) -> Self {
        let encoding = space.specialization().encoding();
        Counterexample { space, encoding, second: None, decomposition: None, point: v.point, detail: v.detail }
    }

    /// Re-runs the theorem on the stored input and confirms the violation.
    pub fn replays(&self, theorem: &TheoremId) -> bool {
        let r = match (theorem.check, &self.second, &self.decomposition) {
            (Check::Pair(f), Some(y), None) => f(&self.space, y),
            (Check::Decomp(f), None, Some(d)) => f(&self.space, d),
            (Check::Pair(_), _, _) | (Check::Decomp(_), _, _) => return false,
            (_, None, None) => run_space(theorem.check, &self.space),
            _ => return false,
        };
        matches!(r, Err(v) if v.point == self.point)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Status {
    Verified { n_max: usize },
    Refuted { n_max: usize, counterexample: Box<Counterexample> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Finding {
    pub theorem: TheoremId,
    pub description: &'static str,
    pub kind: Kind,
    pub arity: Arity,
    #[serde(flatten)]
    pub status: Status,
    /// Spaces, pairs or (space, partition) inputs examined.
    pub spaces_checked: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl Finding {
    pub fn is_verified(&self) -> bool {
        matches!(self.status, Status::Verified { .. })
    }

    pub fn counterexample(&self) -> Option<&Counterexample> {
        match &self.status {
            Status::Refuted { counterexample, .. } => Some(counterexample),
            Status::Verified { .. } => None,
        }
    }

    pub fn replays(&self) -> bool {
        self.counterexample().is_some_and(|c| c.replays(&self.theorem))
    }
}

// ---- generic checks ----

fn run_space(check: Check, t: &FiniteTopology) -> Result<(), Violation> {
    match check {
        Check::Space(f) => f(t),
        Check::ModeEq(a) => mode_eq(t, a),
        Check::Implies(a, b) => implies(t, a, b),
        Check::Iff(a, b) => iff(t, a, b),
        Check::Always(a) => {
            let c = Classifier::new(t);
            for m in [Mode::Definitional, Mode::Characterized] {
                ensure(c.holds(a, m), || format!("{a} fails in {} form", m.name()))?;
            }
            Ok(())
        }
        Check::Pair(_) | Check::Decomp(_) => unreachable!("not a per-space check"),
    }
}

fn mode_eq(t: &FiniteTopology, a: AxiomId) -> Result<(), Violation> {
    let c = Classifier::new(t);
    let d = c.check_space(a, Mode::Definitional);
    let ch = c.check_space(a, Mode::Characterized);
    ensure(d.verdict == ch.verdict, || format!("space: def={} char={}", d.verdict, ch.verdict))?;
    for r in [&d, &ch] {
        ensure(r.witness.is_none() || c.replays(r), || format!("{} witness does not replay", r.mode.name()))?;
    }
    if a.is_point_level() {
        for x in 0..t.len() {
            let d = c.check_point(a, x, Mode::Definitional).expect("point-level");
            let ch = c.check_point(a, x, Mode::Characterized).expect("point-level");
            ensure_at(d.verdict == ch.verdict, x, || format!("def={} char={}", d.verdict, ch.verdict))?;
            for r in [&d, &ch] {
                ensure_at(r.witness.is_none() || c.replays(r), x, || {
                    format!("{} witness does not replay", r.mode.name())
                })?;
            }
        }
    }
    Ok(())
}

fn implies(t: &FiniteTopology, a: AxiomId, b: AxiomId) -> Result<(), Violation> {
    let c = Classifier::new(t);
    let m = Mode::Definitional;
    if a.is_point_level() && b.is_point_level() {
        for x in 0..t.len() {
            ensure_at(!c.holds_at(a, x, m) || c.holds_at(b, x, m), x, || format!("{a} holds, {b} fails"))?;
        }
    }
    ensure(!c.holds(a, m) || c.holds(b, m), || format!("{a} holds, {b} fails"))
}

fn iff(t: &FiniteTopology, a: AxiomId, b: AxiomId) -> Result<(), Violation> {
    let c = Classifier::new(t);
    let m = Mode::Definitional;
    if a.is_point_level() && b.is_point_level() {
        for x in 0..t.len() {
            let (p, q) = (c.holds_at(a, x, m), c.holds_at(b, x, m));
            ensure_at(p == q, x, || format!("{a}={p} {b}={q}"))?;
        }
    }
    let (p, q) = (c.holds(a, m), c.holds(b, m));
    ensure(p == q, || format!("{a}={p} {b}={q}"))
}

// ---- per-space claims ----

fn round_trip(t: &FiniteTopology) -> Result<(), Violation> {
    ensure(alexandrov(&specialization(t)) == *t, || "alexandrov(specialization(t)) differs from t".into())
}

fn closure_kernel_order(t: &FiniteTopology) -> Result<(), Violation> {
    let p = t.specialization();
    for a in PointSet::all_subsets(t.len()) {
        ensure(t.closure(a) == order::downset_of(&p, a), || format!("closure of {a} is not its downset"))?;
        ensure(t.kernel(a) == order::upset_of(&p, a), || format!("kernel of {a} is not its upset"))?;
    }
    Ok(())
}

fn lambda_closed_convex(t: &FiniteTopology) -> Result<(), Violation> {
    let p = t.specialization();
    for a in PointSet::all_subsets(t.len()) {
        ensure(t.is_lambda_closed(a) == order::is_convex(&p, a), || {
            format!("{a}: lambda-closed and convexity differ")
        })?;
    }
    Ok(())
}

fn class_space_t0(t: &FiniteTopology) -> Result<(), Violation> {
    let (q, _) = class_space(t);
    ensure(Classifier::new(&q).holds(T0, Mode::Definitional), || "class space is not T0".into())?;
    let (qq, map) = class_space(&q);
    ensure(qq == q && map.iter().enumerate().all(|(i, &c)| i == c), || "class space is not idempotent".into())
}

fn class_closure_preimage(t: &FiniteTopology) -> Result<(), Violation> {
    let (q, map) = class_space(t);
    for x in 0..t.len() {
        let cl = q.point_closure(map[x]);
        let pre = (0..t.len()).filter(|&y| cl.contains(map[y])).fold(PointSet::empty(t.len()), |a, y| a.with(y));
        ensure_at(pre == t.point_closure(x), x, || "closure does not lift from the class space".into())?;
    }
    Ok(())
}

fn derived_closed_iff_t0(t: &FiniteTopology) -> Result<(), Violation> {
    for x in 0..t.len() {
        let not_closed = !t.is_closed(t.derived(x));
        let big = t.class_of(x).len() > 1;
        ensure_at(not_closed == big, x, || format!("derived set not closed={not_closed}, |class|>1={big}"))?;
    }
    Ok(())
}

fn forest_iff_disjoint(t: &FiniteTopology) -> Result<(), Violation> {
    let p = t.specialization();
    let n = t.len();
    let disjoint = (0..n).all(|x| {
        (0..n)
            .all(|y| p.comparable(x, y) || order::class_strict_down(&p, x).is_disjoint(order::class_strict_down(&p, y)))
    });
    let forest = order::is_downward_forest(&p);
    ensure(forest == disjoint, || format!("forest={forest}, disjoint strict downsets={disjoint}"))
}

fn height_class_invariant(t: &FiniteTopology) -> Result<(), Violation> {
    let p = t.specialization();
    let cp = p.class_poset();
    let h = order::height(&p);
    let hq = order::height(cp.order());
    for x in 0..t.len() {
        ensure_at(h.per_point[x] == hq.per_point[cp.class_of(x)], x, || "height differs from class height".into())?;
    }
    ensure(h.space_height == hq.space_height, || "space height differs".into())
}

fn interval_containment(t: &FiniteTopology) -> Result<(), Violation> {
    let p = t.specialization();
    for x in 0..t.len() {
        for y in 0..t.len() {
            let open = order::interval(&p, x, y, IntervalKind::Open);
            let closed = order::interval(&p, x, y, IntervalKind::Closed);
            let bound = closed - (order::cls(&p, x) | order::cls(&p, y));
            ensure_at(open.is_subset(bound), x, || format!("(x,{y}) not inside [x,{y}] minus both classes"))?;
        }
    }
    Ok(())
}

fn sys_eq_s14_and_sq(t: &FiniteTopology) -> Result<(), Violation> {
    let c = Classifier::new(t);
    let m = Mode::Definitional;
    let (sys, s14, sq) = (c.holds(SYS, m), c.holds(S14, m), c.holds(SQ, m));
    ensure(sys == (s14 && sq), || format!("SYS={sys} S1/4={s14} SQ={sq}"))
}

/// Every connected component of the class poset is a chain.
fn components_are_chains(p: &Preorder) -> bool {
    (0..p.len()).all(|x| order::is_pre_chain(p, component(p, x)))
}

/// Connected component of `x` under comparability.
fn component(p: &Preorder, x: usize) -> PointSet {
    let mut comp = PointSet::singleton(p.len(), x);
    loop {
        let next = comp.iter().fold(comp, |a, y| a | p.up_row(y) | p.down_row(y));
        if next == comp {
            return comp;
        }
        comp = next;
    }
}

fn sq_sdelta_chains(t: &FiniteTopology) -> Result<(), Violation> {
    let c = Classifier::new(t);
    let m = Mode::Definitional;
    if c.holds(SQ, m) && c.holds(SDelta, m) {
        ensure(components_are_chains(&t.specialization()), || "SQ and Sdelta but a component is not a chain".into())?;
    }
    Ok(())
}

fn cr_or_nested_sq(t: &FiniteTopology) -> Result<(), Violation> {
    let c = Classifier::new(t);
    let m = Mode::Definitional;
    let hyp = c.holds(CR, m) || c.holds(Nested, m);
    ensure(!hyp || c.holds(SQ, m), || "CR or nested holds, SQ fails".into())
}

fn tys_items(t: &FiniteTopology) -> Result<(), Violation> {
    let c = Classifier::new(t);
    let m = Mode::Definitional;
    let p = t.specialization();
    let n = t.len();
    let tys = c.holds(TYS, m);
    let item2 = c.holds(T0, m)
        && (0..n).all(|x| (0..n).all(|y| x == y || order::strict_down(&p, x).is_disjoint(order::strict_down(&p, y))));
    let item3 = c.holds(T14, m) && order::is_downward_forest(&p);
    ensure(tys == item2 && tys == item3, || format!("TYS={tys} item2={item2} item3={item3}"))
}

fn tys_components(t: &FiniteTopology) -> Result<(), Violation> {
    if !Classifier::new(t).holds(TYS, Mode::Definitional) {
        return Ok(());
    }
    let p = t.specialization();
    for x in 0..t.len() {
        let comp = component(&p, x);
        ensure_at(comp.iter().any(|y| p.down_row(y) == comp), x, || "component is not a principal downset".into())?;
    }
    Ok(())
}

fn sys_items(t: &FiniteTopology) -> Result<(), Violation> {
    let p = t.specialization();
    let n = t.len();
    let sys = Classifier::new(t).holds(SYS, Mode::Definitional);
    let item2 = (0..n).all(|x| {
        (0..n)
            .all(|y| p.equivalent(x, y) || order::class_strict_down(&p, x).is_disjoint(order::class_strict_down(&p, y)))
    });
    let cp = p.class_poset();
    let item3 = order::is_downward_forest(cp.order()) && order::height(cp.order()).space_height <= 1;
    ensure(sys == item2 && sys == item3, || format!("SYS={sys} item2={item2} item3={item3}"))
}

fn space_pointwise(t: &FiniteTopology, a: AxiomId) -> Result<(), Violation> {
    let c = Classifier::new(t);
    let m = Mode::Definitional;
    let space = c.holds(a, m);
    let points = (0..t.len()).all(|x| c.holds_at(a, x, m));
    ensure(space == points, || format!("{a}: space={space} every point={points}"))
}

fn t14_space_pointwise(t: &FiniteTopology) -> Result<(), Violation> {
    space_pointwise(t, T14)
}

fn t12_space_pointwise(t: &FiniteTopology) -> Result<(), Violation> {
    space_pointwise(t, T12)
}

fn no_anosov(t: &FiniteTopology) -> Result<(), Violation> {
    ensure(!dynamics::is_anosov_type(t), || "space is of Anosov type".into())
}

fn recurrence_transfer(t: &FiniteTopology) -> Result<(), Violation> {
    let r = dynamics::recurrence_transfer_check(t);
    match r.witness {
        Some(x) => fail_at(x, "recurrent set differs from the lifted class-space set"),
        None => ensure(r.space_recurrent == r.t0_classes_recurrent, || {
            format!("space recurrent={} T0 classes recurrent={}", r.space_recurrent, r.t0_classes_recurrent)
        }),
    }
}

fn non_wandering_classes(t: &FiniteTopology) -> Result<(), Violation> {
    let all = (0..t.len()).all(|x| dynamics::is_non_wandering(t, x));
    let (q, map) = class_space(t);
    let rq = dynamics::recurrent_points(&q);
    let big = (0..q.len())
        .filter(|&c| map.iter().filter(|&&k| k == c).count() > 1)
        .fold(PointSet::empty(q.len()), |a, c| a.with(c));
    let dense = q.closure(rq | big) == q.points();
    ensure(all == dense, || format!("non-wandering={all} dense in class space={dense}"))
}

fn has_open_point(t: &FiniteTopology) -> bool {
    (0..t.len()).any(|x| t.is_open(PointSet::singleton(t.len(), x)))
}

fn whl_no_open_points(t: &FiniteTopology) -> Result<(), Violation> {
    let whl = dynamics::classify(t).iter().all(|f| f.weakly_hyperbolic_like);
    ensure(!whl || !has_open_point(t), || "weakly hyperbolic-like space with an open point".into())
}

fn td_no_open_points_whl(t: &FiniteTopology) -> Result<(), Violation> {
    if !Classifier::new(t).holds(TD, Mode::Definitional) || has_open_point(t) {
        return Ok(());
    }
    if let Some(x) = dynamics::classify(t).iter().position(|f| !f.weakly_hyperbolic_like) {
        return fail_at(x, "point is not weakly hyperbolic-like");
    }
    no_anosov(t)
}

fn saddle_upset(t: &FiniteTopology) -> Result<(), Violation> {
    match dynamics::saddle_equivalences_check(t) {
        Err(SaddleViolation::Upset { x }) => fail_at(x, "upset conditions disagree"),
        _ => Ok(()),
    }
}

fn saddle_interval(t: &FiniteTopology) -> Result<(), Violation> {
    match dynamics::saddle_equivalences_check(t) {
        Err(SaddleViolation::Interval { x, y }) => fail_at(x, format!("interval conditions disagree for y={y}")),
        _ => Ok(()),
    }
}

fn recurrent_no_hyperbolic(t: &FiniteTopology) -> Result<(), Violation> {
    match dynamics::recurrent_vs_hyperbolic_check(t) {
        RecurrenceOutcome::Violated { point } => fail_at(point, "recurrent space with a hyperbolic-like point"),
        _ => Ok(()),
    }
}

fn proper_iff(t: &FiniteTopology, literal: bool) -> Result<(), Violation> {
    let flags = dynamics::classify(t);
    for (x, f) in flags.iter().enumerate() {
        let closed = if literal { t.class_of(x) } else { PointSet::singleton(t.len(), x) };
        let rhs = !f.recurrent || t.is_closed(closed);
        ensure_at(f.proper == rhs, x, || format!("proper={} rhs={rhs}", f.proper))?;
    }
    Ok(())
}

fn proper_claim(t: &FiniteTopology) -> Result<(), Violation> {
    proper_iff(t, false)
}

fn proper_literal(t: &FiniteTopology) -> Result<(), Violation> {
    proper_iff(t, true)
}

fn no_exceptional_td(t: &FiniteTopology) -> Result<(), Violation> {
    if !Classifier::new(t).holds(TD, Mode::Definitional) {
        return Ok(());
    }
    match dynamics::classify(t).iter().position(|f| f.exceptional) {
        Some(x) => fail_at(x, "exceptional point in a TD space"),
        None => Ok(()),
    }
}

fn dynclass_invariants(t: &FiniteTopology) -> Result<(), Violation> {
    for (x, f) in dynamics::classify(t).iter().enumerate() {
        ensure_at(f.weakly_hyperbolic_like == (f.weakly_non_indifferent || f.weakly_saddle_like), x, || {
            "weakly hyperbolic-like flag inconsistent".into()
        })?;
        ensure_at(f.hyperbolic_like == (f.non_indifferent || f.saddle_like), x, || {
            "hyperbolic-like flag inconsistent".into()
        })?;
        ensure_at(!f.non_indifferent || f.weakly_non_indifferent, x, || "non-indifferent but not weakly".into())?;
        ensure_at(!f.saddle_like || f.weakly_saddle_like, x, || "saddle-like but not weakly".into())?;
        ensure_at(f.recurrent == dynamics::is_recurrent(t, x), x, || "recurrent flag inconsistent".into())?;
    }
    Ok(())
}

fn flow_converse(t: &FiniteTopology) -> Result<(), Violation> {
    let p = t.specialization();
    let mins = order::minimal(&p);
    let flags = dynamics::classify(t);
    let hyp = mins.iter().all(|x| !flags[x].weakly_hyperbolic_like);
    ensure(!hyp || flags.iter().all(|f| f.recurrent), || {
        "no weakly hyperbolic-like minimal point, not recurrent".into()
    })
}

fn sd_lemma_point(t: &FiniteTopology) -> Result<(), Violation> {
    let c = Classifier::new(t);
    for x in 0..t.len() {
        let lemma = c.holds_at(SD, x, Mode::Characterized);
        let td = c.holds_at(TD, x, Mode::Definitional);
        ensure_at(lemma == td, x, || format!("lemma reading={lemma} TD={td}"))?;
    }
    Ok(())
}

// ---- per-pair claims ----

fn union_closure(x: &FiniteTopology, y: &FiniteTopology) -> Result<(), Violation> {
    let u = disjoint_union(&[x.clone(), y.clone()]);
    let n = u.len();
    for (t, off) in [(x, 0), (y, x.len())] {
        for a in PointSet::all_subsets(t.len()) {
            ensure(u.closure(a.shifted(n, off)) == t.closure(a).shifted(n, off), || {
                format!("closure of {a} in summand at offset {off} differs")
            })?;
        }
    }
    Ok(())
}

fn union_invariance(x: &FiniteTopology, y: &FiniteTopology) -> Result<(), Violation> {
    let u = disjoint_union(&[x.clone(), y.clone()]);
    let (cx, cy, cu) = (Classifier::new(x), Classifier::new(y), Classifier::new(&u));
    for a in [TMinus1, T12, T13, T14] {
        for m in [Mode::Definitional, Mode::Characterized] {
            let (p, q, r) = (cx.holds(a, m), cy.holds(a, m), cu.holds(a, m));
            ensure(r == (p && q), || format!("{a} ({}): X={p} Y={q} union={r}", m.name()))?;
        }
    }
    Ok(())
}

// ---- per-decomposition claims ----

fn tau_f_union_closed(t: &FiniteTopology, d: &Decomposition) -> Result<(), Violation> {
    let fam = decomp::tau_f(t, d).family;
    let n = t.len();
    ensure(fam.contains(&PointSet::empty(n)) && fam.contains(&PointSet::full(n)), || {
        "missing empty or whole set".into()
    })?;
    for &u in &fam {
        for &v in &fam {
            ensure(fam.contains(&(u | v)), || format!("{u} | {v} not in the family"))?;
        }
    }
    for &u in t.opens() {
        for &v in t.opens() {
            ensure(d.saturate(u | v) == d.saturate(u) | d.saturate(v), || "saturation does not distribute".into())?;
        }
    }
    let intersections = fam.iter().all(|&u| fam.iter().all(|&v| fam.contains(&(u & v))));
    let r = decomp::tau_f(t, d);
    ensure(r.is_topology == intersections, || "topology flag disagrees with intersection closure".into())
}

fn lemma001(t: &FiniteTopology, d: &Decomposition) -> Result<(), Violation> {
    let l = decomp::lemma001_check(t, d);
    ensure(l.holds, || format!("contained={} closures saturated={}", l.contained, l.closures_saturated))
}

fn quotient_is_tau_f(t: &FiniteTopology, d: &Decomposition) -> Result<(), Violation> {
    let l = decomp::lemma001_check(t, d);
    if !l.contained {
        return Ok(());
    }
    let q = decomp::quotient(t, d);
    ensure(decomp::tau_f_on_blocks(t, d) == q.opens(), || "quotient differs from the saturated family".into())
}

fn quotient_class_partition(t: &FiniteTopology) -> Result<(), Violation> {
    let (q, map) = class_space(t);
    ensure(decomp::quotient(t, &Decomposition::from_labels(&map)) == q, || "quotient by classes differs".into())
}

// ---- catalog ----

const fn claim(id: &'static str, description: &'static str, arity: Arity, check: Check) -> TheoremId {
    TheoremId { id, description, arity, kind: Kind::Claim, check }
}

const fn probe(id: &'static str, description: &'static str, arity: Arity, check: Check) -> TheoremId {
    TheoremId { id, description, arity, kind: Kind::Probe, check }
}

const fn char_eq(id: &'static str, description: &'static str, a: AxiomId) -> TheoremId {
    claim(id, description, Arity::PerPoint, Check::ModeEq(a))
}

use Arity::{PerDecomposition, PerPair, PerPoint, PerSpace};

static CATALOG: &[TheoremId] = &[
    // spaces and orders
    claim("round_trip", "alexandrov(specialization(t)) = t", PerSpace, Check::Space(round_trip)),
    claim(
        "closure_kernel_order",
        "closure is the downset and kernel the upset of every subset",
        PerSpace,
        Check::Space(closure_kernel_order),
    ),
    claim(
        "lambda_closed_convex",
        "lambda-closed sets are exactly the order-convex sets",
        PerSpace,
        Check::Space(lambda_closed_convex),
    ),
    claim(
        "class_space_t0",
        "the class space is T0 and class_space is idempotent",
        PerSpace,
        Check::Space(class_space_t0),
    ),
    claim(
        "class_closure_preimage",
        "point closures are preimages of class-space closures",
        PerPoint,
        Check::Space(class_closure_preimage),
    ),
    claim(
        "derived_not_closed_iff_class",
        "the derived set of x is not closed iff |x̂| > 1",
        PerPoint,
        Check::Space(derived_closed_iff_t0),
    ),
    claim(
        "downward_forest_disjoint",
        "downward forest iff incomparable points have disjoint strict downsets",
        PerSpace,
        Check::Space(forest_iff_disjoint),
    ),
    claim(
        "height_class_invariant",
        "heights agree with heights in the class poset",
        PerPoint,
        Check::Space(height_class_invariant),
    ),
    claim("interval_containment", "(x,y) lies in [x,y] minus x̂ and ŷ", PerPoint, Check::Space(interval_containment)),
    claim(
        "disjoint_union_closure",
        "closure in a disjoint union restricts to the summand closure",
        PerPair,
        Check::Pair(union_closure),
    ),
    // definitional and characterized forms
    char_eq("T0_char", "T0: x̂ = {x}", T0),
    char_eq("Tm1_char", "T-1: classes of minimal points are closed", TMinus1),
    char_eq("TD_char", "TD: ⇓x closed, read through the order", TD),
    char_eq("T14_char", "T1/4: T0 and height at most 1", T14),
    char_eq("T13_char", "T1/3: T0 and every subset is a closed set minus a downset", T13),
    char_eq("T12_char", "T1/2: T0, height at most 1, height-1 points open", T12),
    char_eq("T1_char", "T1: the order is discrete", T1),
    char_eq("T2_char", "T2: the order is discrete", T2),
    char_eq("TYS_char", "TYS: T0, height at most 1, downward forest", TYS),
    char_eq("C0_char", "C0: minimal or |x̂| > 1", C0),
    char_eq("CD_char", "CD: the order reading of CD", CD),
    char_eq("CR_char", "CR: ↓x = x̂", CR),
    char_eq("CN_char", "CN: ↓x is down-directed", CN),
    char_eq("S0_char", "S0: class space T0", S0),
    char_eq("S14_char", "S1/4: height at most 1", S14),
    char_eq("S13_char", "S1/3: class-space form of T1/3", S13),
    char_eq("S12_char", "S1/2: height at most 1 and height-1 classes open", S12),
    char_eq("S1_char", "S1: class space T1", S1),
    char_eq("S2_char", "S2: class space T2", S2),
    char_eq("SYS_char", "SYS: class space a downward forest of height at most 1", SYS),
    char_eq("SYY_char", "SYY: height at most 1 and a bouquet root", SYY),
    char_eq("SY_char", "SY: height at most 1 and min-S1-free", SY),
    char_eq("SSD_char", "SSD: class space an upward forest of height at most 1", SSD),
    char_eq("Sdelta_char", "Sdelta: class space a down-discrete upward forest", SDelta),
    char_eq("SQ_char", "SQ: class space a downward forest", SQ),
    char_eq("nested_char", "nested: the order is a pre-chain", Nested),
    char_eq("wR0_char", "wR0: no bottom", WR0),
    char_eq("wC0_char", "wC0: no top", WC0),
    char_eq("lambda_space_char", "lambda-space: shells of lambda-closed sets lie in min X", LambdaSpace),
    char_eq("recurrent_char", "recurrent: minimal or |x̂| > 1", Recurrent),
    // implications and equalities
    claim("T1_implies_CR", "T1 implies CR", PerPoint, Check::Implies(T1, CR)),
    claim("CR_implies_C0", "CR implies C0", PerPoint, Check::Implies(CR, C0)),
    claim("C0_implies_CD", "C0 implies CD", PerPoint, Check::Implies(C0, CD)),
    claim("CR_implies_CN", "CR implies CN", PerPoint, Check::Implies(CR, CN)),
    claim("S1_implies_C0", "S1 implies C0", PerPoint, Check::Implies(S1, C0)),
    claim("S1_implies_recurrent", "S1 implies recurrent", PerPoint, Check::Implies(S1, Recurrent)),
    claim("S12_implies_lambda", "S1/2 implies lambda-space", PerSpace, Check::Implies(S12, LambdaSpace)),
    claim("lambda_implies_S14", "lambda-space implies S1/4", PerSpace, Check::Implies(LambdaSpace, S14)),
    claim("S12_implies_S13", "S1/2 implies S1/3", PerSpace, Check::Implies(S12, S13)),
    claim("S13_implies_S14", "S1/3 implies S1/4", PerSpace, Check::Implies(S13, S14)),
    claim("TYS_implies_T14", "TYS implies T1/4", PerSpace, Check::Implies(TYS, T14)),
    claim("SYS_eq_S14_and_SQ", "SYS = S1/4 and SQ", PerSpace, Check::Space(sys_eq_s14_and_sq)),
    claim(
        "SQ_Sdelta_chains",
        "SQ and Sdelta imply the class space is a disjoint union of chains",
        PerSpace,
        Check::Space(sq_sdelta_chains),
    ),
    claim("CR_or_nested_implies_SQ", "CR or nested implies SQ", PerSpace, Check::Space(cr_or_nested_sq)),
    claim("CR_iff_S1", "CR iff S1, pointwise", PerPoint, Check::Iff(CR, S1)),
    claim(
        "TYS_items",
        "TYS iff T0 with disjoint strict downsets iff T1/4 downward forest",
        PerSpace,
        Check::Space(tys_items),
    ),
    claim(
        "TYS_components",
        "in a TYS space every component is a principal downset",
        PerSpace,
        Check::Space(tys_components),
    ),
    claim(
        "SYS_items",
        "SYS iff disjoint strict class downsets iff class space a forest of height at most 1",
        PerSpace,
        Check::Space(sys_items),
    ),
    claim("T14_space_pointwise", "T1/4 space iff every point T1/4", PerSpace, Check::Space(t14_space_pointwise)),
    claim("T12_space_pointwise", "T1/2 space iff every point T1/2", PerSpace, Check::Space(t12_space_pointwise)),
    claim(
        "disjoint_union_invariance",
        "T-1, T1/2, T1/3, T1/4 hold on X ⊔ Y iff on both summands",
        PerPair,
        Check::Pair(union_invariance),
    ),
    // collapses on finite spaces
    claim("T13_iff_T12_finite", "T1/3 iff T1/2 on finite spaces", PerSpace, Check::Iff(T13, T12)),
    claim("T14_iff_T12_finite", "T1/4 iff T1/2 on finite spaces", PerPoint, Check::Iff(T14, T12)),
    claim("recurrent_eq_C0_finite", "recurrent iff C0 on finite spaces", PerPoint, Check::Iff(Recurrent, C0)),
    claim("CD_iff_C0_finite", "CD iff C0 on finite spaces", PerPoint, Check::Iff(CD, C0)),
    claim("TD_iff_T0_point_finite", "TD iff T0 at every point of a finite space", PerPoint, Check::Iff(TD, T0)),
    claim("qS2_finite", "every finite space is qS2", PerSpace, Check::Always(QS2)),
    claim("artinian_finite", "every finite space is artinian", PerSpace, Check::Always(Artinian)),
    claim("anti_compact_finite", "every finite space is anti-compact", PerSpace, Check::Always(AntiCompact)),
    claim("no_anosov_finite", "no finite space is of Anosov type", PerSpace, Check::Space(no_anosov)),
    // dynamics
    claim(
        "recurrence_transfer",
        "recurrent points lift from the class space",
        PerPoint,
        Check::Space(recurrence_transfer),
    ),
    claim(
        "non_wandering_classes",
        "non-wandering iff recurrent and non-T0 classes are dense in the class space",
        PerSpace,
        Check::Space(non_wandering_classes),
    ),
    claim(
        "whl_no_open_points",
        "a weakly hyperbolic-like space has no open points",
        PerSpace,
        Check::Space(whl_no_open_points),
    ),
    claim(
        "TD_no_open_points_whl",
        "a TD space without open points is weakly hyperbolic-like and not Anosov",
        PerSpace,
        Check::Space(td_no_open_points_whl),
    ),
    claim("saddle_upset", "x ∈ cl(X − ↑x) iff x ∉ int ↑x iff ↑x not open", PerPoint, Check::Space(saddle_upset)),
    claim(
        "saddle_interval",
        "for x < y: x ∈ cl((x,y] − {y}) iff (x,y] − {y} ≠ ∅ iff (x,y) ≠ ∅ or |ŷ| > 1",
        PerPoint,
        Check::Space(saddle_interval),
    ),
    claim(
        "recurrent_no_hyperbolic",
        "a recurrent space has no hyperbolic-like points",
        PerSpace,
        Check::Space(recurrent_no_hyperbolic),
    ),
    claim("proper_iff", "proper iff not recurrent or {x} closed", PerPoint, Check::Space(proper_claim)),
    claim("no_exceptional_in_TD", "TD spaces have no exceptional points", PerSpace, Check::Space(no_exceptional_td)),
    claim(
        "dynclass_invariants",
        "dynamical flags are mutually consistent",
        PerPoint,
        Check::Space(dynclass_invariants),
    ),
    // decompositions
    claim(
        "tau_f_union_closed",
        "τ_F contains ∅ and X, is union-closed, and is a topology iff intersection-closed",
        PerDecomposition,
        Check::Decomp(tau_f_union_closed),
    ),
    claim(
        "lemma001",
        "τ_F ⊆ τ iff closures of saturated sets are saturated, and then τ_F is a topology",
        PerDecomposition,
        Check::Decomp(lemma001),
    ),
    claim(
        "quotient_eq_tau_f",
        "when τ_F ⊆ τ the quotient topology is τ_F",
        PerDecomposition,
        Check::Decomp(quotient_is_tau_f),
    ),
    claim(
        "quotient_class_partition",
        "the quotient by the class partition is the class space",
        PerSpace,
        Check::Space(quotient_class_partition),
    ),
    // probes
    probe(
        "SD_lemma_literal",
        "SD: definitional form against the lemma reading (minimal or x ∉ cl ⇓x)",
        PerPoint,
        Check::ModeEq(SD),
    ),
    probe("SD_lemma_point", "lemma reading of SD against TD at each point", PerPoint, Check::Space(sd_lemma_point)),
    probe("proper_literal", "proper iff not recurrent or x̂ closed", PerPoint, Check::Space(proper_literal)),
    probe(
        "flow_converse",
        "no weakly hyperbolic-like minimal points implies recurrent",
        PerSpace,
        Check::Space(flow_converse),
    ),
];

pub fn theorems() -> &'static [TheoremId] {
    CATALOG
}

pub fn theorem(id: &str) -> Option<&'static TheoremId> {
    CATALOG.iter().find(|t| t.id == id)
}

// ---- drivers ----

type DecompBest = Best<(u64, Vec<usize>)>;

struct Best<K: Ord> {
    key: K,
    ce: Counterexample,
}

fn keep_min<K: Ord>(a: Option<Best<K>>, b: Option<Best<K>>) -> Option<Best<K>> {
    match (a, b) {
        (Some(a), Some(b)) => Some(if b.key < a.key { b } else { a }),
        (a, b) => a.or(b),
    }
}

fn search_spaces(n_max: usize, check: Check) -> (u64, Option<(usize, Counterexample)>) {
    let mut total = 0;
    for n in 0..=n_max {
        let parts: Vec<(u64, Option<Best<u64>>)> = subtrees(n)
            .expect("size checked")
            .into_par_iter()
            .map(|tree| {
                let mut count = 0;
                let mut best = None;
                for p in tree {
                    count += 1;
                    let t = alexandrov(&p);
                    if let Err(v) = run_space(check, &t) {
                        let key = p.encoding();
                        best = keep_min(best, Some(Best { key, ce: Counterexample::new(t, v) }));
                    }
                }
                (count, best)
            })
            .collect();
        let mut best = None;
        for (c, b) in parts {
            total += c;
            best = keep_min(best, b);
        }
        if let Some(b) = best {
            return (total, Some((n, b.ce)));
        }
    }
    (total, None)
}

fn search_pairs(
    n_max: usize,
    f: fn(&FiniteTopology, &FiniteTopology) -> Result<(), Violation>,
) -> (u64, Option<(usize, Counterexample)>) {
    let lists: Vec<Vec<FiniteTopology>> =
        (0..=n_max).map(|k| enumerate_topologies(k).expect("size checked").collect()).collect();
    let mut total = 0;
    for n in 0..=n_max {
        for a in 0..=n {
            let ys = &lists[n - a];
            let parts: Vec<Option<Best<(u64, u64)>>> = lists[a]
                .par_iter()
                .map(|x| {
                    let ex = x.specialization().encoding();
                    let mut best = None;
                    for y in ys {
                        if let Err(v) = f(x, y) {
                            let key = (ex, y.specialization().encoding());
                            let mut ce = Counterexample::new(x.clone(), v);
                            ce.second = Some(y.clone());
                            best = keep_min(best, Some(Best { key, ce }));
                        }
                    }
                    best
                })
                .collect();
            total += (lists[a].len() * ys.len()) as u64;
            if let Some(b) = parts.into_iter().fold(None, keep_min) {
                return (total, Some((n, b.ce)));
            }
        }
    }
    (total, None)
}

fn search_decomps(
    n_max: usize,
    f: fn(&FiniteTopology, &Decomposition) -> Result<(), Violation>,
) -> (u64, Option<(usize, Counterexample)>) {
    let mut total = 0;
    for n in 0..=n_max {
        let decs: Vec<Decomposition> = partitions(n).collect();
        let parts: Vec<(u64, Option<DecompBest>)> = subtrees(n)
            .expect("size checked")
            .into_par_iter()
            .map(|tree| {
                let mut count = 0;
                let mut best = None;
                for p in tree {
                    let t = alexandrov(&p);
                    for d in &decs {
                        count += 1;
                        if let Err(v) = f(&t, d) {
                            let key = (p.encoding(), d.labels().to_vec());
                            let mut ce = Counterexample::new(t.clone(), v);
                            ce.decomposition = Some(d.clone());
                            best = keep_min(best, Some(Best { key, ce }));
                        }
                    }
                }
                (count, best)
            })
            .collect();
        let mut best = None;
        for (c, b) in parts {
            total += c;
            best = keep_min(best, b);
        }
        if let Some(b) = best {
            return (total, Some((n, b.ce)));
        }
    }
    (total, None)
}

/// Checks `theorem` on every input with at most `n_max` points. Per-pair
/// theorems bound the total size of both summands.
pub fn verify(theorem: &TheoremId, n_max: usize) -> Result<Finding, Error> {
    if n_max > MAX_ENUM_POINTS {
        return Err(Error::SizeTooLarge(n_max));
    }
    let start = Instant::now();
    let (spaces_checked, found) = match theorem.check {
        Check::Pair(f) => search_pairs(n_max, f),
        Check::Decomp(f) => search_decomps(n_max, f),
        c => search_spaces(n_max, c),
    };
    let status = match found {
        None => Status::Verified { n_max },
        Some((n, counterexample)) => Status::Refuted { n_max: n, counterexample: Box::new(counterexample) },
    };
    Ok(Finding {
        theorem: *theorem,
        description: theorem.description,
        kind: theorem.kind,
        arity: theorem.arity,
        status,
        spaces_checked,
        elapsed_ms: Some(start.elapsed().as_millis() as u64),
    })
}

/// Verifies every catalog entry of the given kind, in catalog order.
pub fn verify_all(n_max: usize, kind: Kind) -> Result<Vec<Finding>, Error> {
    CATALOG.iter().filter(|t| t.kind == kind).map(|t| verify(t, n_max)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ImplicationEntry {
    pub antecedent: AxiomId,
    pub consequent: AxiomId,
    pub implies: bool,
    /// Least space satisfying the antecedent but not the consequent.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

/// Space-level implications between every ordered pair of distinct axioms,
/// read in `mode`, over all spaces with at most `n_max` points.
pub fn implication_matrix(n_max: usize, axioms: &[AxiomId], mode: Mode) -> Result<Vec<ImplicationEntry>, Error> {
    if n_max > MAX_ENUM_POINTS {
        return Err(Error::SizeTooLarge(n_max));
    }
    let k = axioms.len();
    let mut found: Vec<Option<Counterexample>> = vec![None; k * k];
    for n in 0..=n_max {
        let parts: Vec<Vec<Option<(u64, FiniteTopology)>>> = subtrees(n)?
            .into_par_iter()
            .map(|tree| {
                let mut best: Vec<Option<(u64, FiniteTopology)>> = vec![None; k * k];
                for p in tree {
                    let t = alexandrov(&p);
                    let c = Classifier::new(&t);
                    let v: Vec<bool> = axioms.iter().map(|&a| c.holds(a, mode)).collect();
                    let enc = p.encoding();
                    for i in 0..k {
                        for j in 0..k {
                            let slot = &mut best[i * k + j];
                            if i != j && v[i] && !v[j] && slot.as_ref().is_none_or(|(e, _)| enc < *e) {
                                *slot = Some((enc, t.clone()));
                            }
                        }
                    }
                }
                best
            })
            .collect();
        for (idx, slot) in found.iter_mut().enumerate() {
            if slot.is_some() {
                continue;
            }
            let least = parts.iter().filter_map(|b| b[idx].as_ref()).min_by_key(|(e, _)| *e);
            if let Some((_, t)) = least {
                let (a, b) = (axioms[idx / k], axioms[idx % k]);
                *slot = Some(Counterexample::new(
                    t.clone(),
                    Violation { point: None, detail: format!("{a} holds, {b} fails") },
                ));
            }
        }
    }
    let mut out = Vec::new();
    for i in 0..k {
        for j in 0..k {
            if i != j {
                let ce = found[i * k + j].take();
                out.push(ImplicationEntry {
                    antecedent: axioms[i],
                    consequent: axioms[j],
                    implies: ce.is_none(),
                    counterexample: ce,
                });
            }
        }
    }
    Ok(out)
}

type TauFWitness = (u64, Vec<usize>, FiniteTopology, Decomposition);

/// Least `(space, partition)` on exactly `n` points whose `τ_F` is not a topology.
pub fn tau_f_counterexample(n: usize) -> Result<Option<(FiniteTopology, Decomposition)>, Error> {
    let decs: Vec<Decomposition> = partitions(n).collect();
    let parts: Vec<Option<TauFWitness>> = subtrees(n)?
        .into_par_iter()
        .map(|tree| {
            let mut best: Option<TauFWitness> = None;
            for p in tree {
                let t = alexandrov(&p);
                for d in &decs {
                    if !decomp::tau_f(&t, d).is_topology {
                        let key = (p.encoding(), d.labels().to_vec());
                        if best.as_ref().is_none_or(|b| key < (b.0, b.1.clone())) {
                            best = Some((key.0, key.1, t.clone(), d.clone()));
                        }
                    }
                }
            }
            best
        })
        .collect();
    Ok(parts.into_iter().flatten().min_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1))).map(|b| (b.2, b.3)))
}
