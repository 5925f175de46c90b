//! Separation axioms in two independent forms.
//!
//! The definitional form reads only the open-set family and the closures it
//! induces. The characterized form reads only the specialization preorder.
//! Each check walks its candidate witnesses in lexicographic order and reports
//! the first violation; replay walks the same candidates looking for the given
//! witness, so a reported witness always replays through the predicate that
//! produced it.

use std::cell::OnceCell;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::Error;
use crate::order::{self, HeightInfo};
use crate::pointset::PointSet;
use crate::preorder::Preorder;
use crate::topology::{class_space, FiniteTopology};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AxiomId {
    T0,
    TMinus1,
    TD,
    T14,
    T13,
    T12,
    T1,
    T2,
    TYS,
    C0,
    CD,
    CR,
    CN,
    S0,
    S14,
    S13,
    S12,
    S1,
    S2,
    SD,
    QS2,
    SYS,
    SYY,
    SY,
    SSD,
    SDelta,
    SQ,
    Nested,
    WR0,
    WC0,
    LambdaSpace,
    Artinian,
    AntiCompact,
    Recurrent,
}

/// Where the characterized form comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CharSource {
    /// A characterization proved in the source text.
    Lemma,
    /// The definition rewritten through `cl = ↓` and `ker = ↑`.
    Translation,
    /// Always true on finite spaces.
    Finite,
}

impl AxiomId {
    pub const ALL: [AxiomId; 34] = [
        AxiomId::T0,
        AxiomId::TMinus1,
        AxiomId::TD,
        AxiomId::T14,
        AxiomId::T13,
        AxiomId::T12,
        AxiomId::T1,
        AxiomId::T2,
        AxiomId::TYS,
        AxiomId::C0,
        AxiomId::CD,
        AxiomId::CR,
        AxiomId::CN,
        AxiomId::S0,
        AxiomId::S14,
        AxiomId::S13,
        AxiomId::S12,
        AxiomId::S1,
        AxiomId::S2,
        AxiomId::SD,
        AxiomId::QS2,
        AxiomId::SYS,
        AxiomId::SYY,
        AxiomId::SY,
        AxiomId::SSD,
        AxiomId::SDelta,
        AxiomId::SQ,
        AxiomId::Nested,
        AxiomId::WR0,
        AxiomId::WC0,
        AxiomId::LambdaSpace,
        AxiomId::Artinian,
        AxiomId::AntiCompact,
        AxiomId::Recurrent,
    ];

    pub fn name(self) -> &'static str {
        use AxiomId::*;
        match self {
            T0 => "T0",
            TMinus1 => "T-1",
            TD => "TD",
            T14 => "T1/4",
            T13 => "T1/3",
            T12 => "T1/2",
            T1 => "T1",
            T2 => "T2",
            TYS => "TYS",
            C0 => "C0",
            CD => "CD",
            CR => "CR",
            CN => "CN",
            S0 => "S0",
            S14 => "S1/4",
            S13 => "S1/3",
            S12 => "S1/2",
            S1 => "S1",
            S2 => "S2",
            SD => "SD",
            QS2 => "qS2",
            SYS => "SYS",
            SYY => "SYY",
            SY => "SY",
            SSD => "SSD",
            SDelta => "Sdelta",
            SQ => "SQ",
            Nested => "nested",
            WR0 => "wR0",
            WC0 => "wC0",
            LambdaSpace => "lambda-space",
            Artinian => "artinian",
            AntiCompact => "anti-compact",
            Recurrent => "recurrent",
        }
    }

    pub fn is_point_level(self) -> bool {
        use AxiomId::*;
        !matches!(self, T13 | S13 | SYY | SQ | Nested | WR0 | WC0 | LambdaSpace | Artinian | AntiCompact)
    }

    pub fn char_source(self) -> CharSource {
        use AxiomId::*;
        match self {
            TD | T1 | T2 | Recurrent => CharSource::Translation,
            QS2 | Artinian | AntiCompact => CharSource::Finite,
            _ => CharSource::Lemma,
        }
    }

    /// The `T` axiom an `S` axiom reduces to on the class space.
    fn class_space_base(self) -> Option<AxiomId> {
        use AxiomId::*;
        match self {
            S0 => Some(T0),
            S14 => Some(T14),
            S13 => Some(T13),
            S12 => Some(T12),
            S1 => Some(T1),
            S2 => Some(T2),
            SYS => Some(TYS),
            _ => None,
        }
    }
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AxiomId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        AxiomId::ALL
            .iter()
            .copied()
            .find(|a| a.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown axiom {s:?}"))
    }
}

impl Serialize for AxiomId {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Mode {
    #[serde(rename = "def")]
    Definitional,
    #[serde(rename = "char")]
    Characterized,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Definitional => "def",
            Mode::Characterized => "char",
        }
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "def" | "definitional" => Ok(Mode::Definitional),
            "char" | "characterized" => Ok(Mode::Characterized),
            _ => Err(format!("unknown mode {s:?}")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    Point {
        x: usize,
    },
    Pair {
        x: usize,
        y: usize,
    },
    Triple {
        x: usize,
        y: usize,
        z: usize,
    },
    /// `low < mid < high`
    Chain {
        low: usize,
        mid: usize,
        high: usize,
    },
    /// `left` and `right` incomparable, both above `base`
    Fork {
        base: usize,
        left: usize,
        right: usize,
    },
    /// `left` and `right` incomparable, both below `top`
    Join {
        top: usize,
        left: usize,
        right: usize,
    },
    /// min-S¹ pattern `a, b < c, d`
    Quad {
        a: usize,
        b: usize,
        c: usize,
        d: usize,
    },
    Subset {
        set: PointSet,
    },
    SubsetPair {
        a: PointSet,
        b: PointSet,
    },
    OpenPair {
        u: PointSet,
        v: PointSet,
        x: usize,
        y: usize,
    },
    /// One violation for every candidate root.
    PerRoot {
        roots: Vec<RootWitness>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootWitness {
    pub root: usize,
    pub witness: Witness,
}

impl Witness {
    fn map(&self, f: &dyn Fn(usize) -> usize, g: &dyn Fn(PointSet) -> PointSet) -> Witness {
        use Witness::*;
        match self {
            Point { x } => Point { x: f(*x) },
            Pair { x, y } => Pair { x: f(*x), y: f(*y) },
            Triple { x, y, z } => Triple { x: f(*x), y: f(*y), z: f(*z) },
            Chain { low, mid, high } => Chain { low: f(*low), mid: f(*mid), high: f(*high) },
            Fork { base, left, right } => Fork { base: f(*base), left: f(*left), right: f(*right) },
            Join { top, left, right } => Join { top: f(*top), left: f(*left), right: f(*right) },
            Quad { a, b, c, d } => Quad { a: f(*a), b: f(*b), c: f(*c), d: f(*d) },
            Subset { set } => Subset { set: g(*set) },
            SubsetPair { a, b } => SubsetPair { a: g(*a), b: g(*b) },
            OpenPair { u, v, x, y } => OpenPair { u: g(*u), v: g(*v), x: f(*x), y: f(*y) },
            PerRoot { roots } => PerRoot {
                roots: roots.iter().map(|r| RootWitness { root: f(r.root), witness: r.witness.map(f, g) }).collect(),
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub axiom: AxiomId,
    pub mode: Mode,
    /// The point checked, or `None` for a space-level check.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub point: Option<usize>,
    pub verdict: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Scope {
    Point(usize),
    Space,
}

/// Either searches for the least violation or looks for a given one.
struct Search<'w> {
    target: Option<&'w Witness>,
    hit: Option<Witness>,
}

impl<'w> Search<'w> {
    fn find() -> Self {
        Search { target: None, hit: None }
    }

    fn replay(w: &'w Witness) -> Self {
        Search { target: Some(w), hit: None }
    }

    #[inline]
    fn done(&self) -> bool {
        self.hit.is_some()
    }

    /// Returns true once the search is finished.
    #[inline]
    fn offer(&mut self, w: Witness, violated: impl FnOnce() -> bool) -> bool {
        match self.target {
            None => {
                if violated() {
                    self.hit = Some(w);
                }
            }
            Some(t) => {
                if *t == w && violated() {
                    self.hit = Some(w);
                }
            }
        }
        self.done()
    }
}

/// Precomputed data for one space. Definitional checks read `top`, `cl`,
/// `der` and `tcls`; characterized checks read `pre`, `ht`, `mins` and `maxs`.
pub struct Classifier {
    n: usize,
    top: FiniteTopology,
    cl: Vec<PointSet>,
    der: Vec<PointSet>,
    tcls: Vec<PointSet>,
    pre: Preorder,
    ht: HeightInfo,
    mins: PointSet,
    maxs: PointSet,
    quotient: OnceCell<Box<Quotient>>,
}

struct Quotient {
    space: Classifier,
    class_of: Vec<usize>,
    reps: Vec<usize>,
}

impl Classifier {
    pub fn new(top: &FiniteTopology) -> Self {
        Self::from_parts(top.clone(), top.specialization())
    }

    fn from_parts(top: FiniteTopology, pre: Preorder) -> Self {
        let n = top.len();
        let cl: Vec<PointSet> = (0..n).map(|x| top.point_closure(x)).collect();
        let der = (0..n).map(|x| cl[x].without(x)).collect();
        let tcls = (0..n).map(|x| top.class_of(x)).collect();
        let ht = order::height(&pre);
        let mins = order::minimal(&pre);
        let maxs = order::maximal(&pre);
        Classifier { n, top, cl, der, tcls, pre, ht, mins, maxs, quotient: OnceCell::new() }
    }

    pub fn topology(&self) -> &FiniteTopology {
        &self.top
    }

    pub fn preorder(&self) -> &Preorder {
        &self.pre
    }

    fn quotient(&self) -> &Quotient {
        self.quotient.get_or_init(|| {
            let (qtop, class_of) = class_space(&self.top);
            let cp = self.pre.class_poset();
            debug_assert_eq!(cp.mapping(), &class_of[..]);
            let reps = cp.classes().iter().map(|c| c.first().unwrap()).collect();
            Box::new(Quotient { space: Classifier::from_parts(qtop, cp.order().clone()), class_of, reps })
        })
    }

    pub fn check_point(&self, axiom: AxiomId, x: usize, mode: Mode) -> Result<AxiomReport, Error> {
        if !axiom.is_point_level() {
            return Err(Error::NotPointLevel(axiom));
        }
        if x >= self.n {
            return Err(Error::PointOutOfRange { point: x, n: self.n });
        }
        let mut s = Search::find();
        self.run(axiom, mode, Scope::Point(x), &mut s);
        Ok(AxiomReport { axiom, mode, point: Some(x), verdict: s.hit.is_none(), witness: s.hit })
    }

    pub fn check_space(&self, axiom: AxiomId, mode: Mode) -> AxiomReport {
        let mut s = Search::find();
        self.run(axiom, mode, Scope::Space, &mut s);
        AxiomReport { axiom, mode, point: None, verdict: s.hit.is_none(), witness: s.hit }
    }

    pub fn holds(&self, axiom: AxiomId, mode: Mode) -> bool {
        self.check_space(axiom, mode).verdict
    }

    pub fn holds_at(&self, axiom: AxiomId, x: usize, mode: Mode) -> bool {
        self.check_point(axiom, x, mode).map(|r| r.verdict).unwrap_or(true)
    }

    /// True iff the report's witness is a genuine violation.
    pub fn replays(&self, report: &AxiomReport) -> bool {
        let Some(w) = &report.witness else { return false };
        let scope = match report.point {
            Some(x) if x < self.n => Scope::Point(x),
            Some(_) => return false,
            None => Scope::Space,
        };
        if report.point.is_some() && !report.axiom.is_point_level() {
            return false;
        }
        let mut s = Search::replay(w);
        self.run(report.axiom, report.mode, scope, &mut s);
        s.done()
    }

    fn run(&self, a: AxiomId, mode: Mode, scope: Scope, s: &mut Search) {
        if let Some(base) = a.class_space_base() {
            return self.delegate(base, mode, scope, s);
        }
        match (mode, scope) {
            (Mode::Definitional, Scope::Point(x)) => self.def_point(a, x, s),
            (Mode::Characterized, Scope::Point(x)) => self.char_point(a, x, s),
            (Mode::Definitional, Scope::Space) => self.def_space(a, s),
            (Mode::Characterized, Scope::Space) => self.char_space(a, s),
        }
    }

    /// Runs `base` on the class space and maps the witness back to representatives.
    fn delegate(&self, base: AxiomId, mode: Mode, scope: Scope, s: &mut Search) {
        let q = self.quotient();
        let to_class = |x: usize| q.class_of[x];
        let image = |a: PointSet| a.iter().fold(PointSet::empty(q.reps.len()), |acc, x| acc.with(q.class_of[x]));
        let to_point = |c: usize| q.reps[c];
        let preimage = |a: PointSet| {
            (0..self.n).filter(|&x| a.contains(q.class_of[x])).fold(PointSet::empty(self.n), |acc, x| acc.with(x))
        };
        let scope = match scope {
            Scope::Point(x) => Scope::Point(to_class(x)),
            Scope::Space => Scope::Space,
        };
        let mapped;
        let mut sub = match s.target {
            None => Search::find(),
            Some(t) => {
                mapped = t.map(&to_class, &image);
                Search::replay(&mapped)
            }
        };
        q.space.run(base, mode, scope, &mut sub);
        if let Some(w) = sub.hit {
            s.hit = Some(w.map(&to_point, &preimage));
        }
    }

    // ---- definitional ----

    fn is_open(&self, a: PointSet) -> bool {
        self.top.is_open(a)
    }

    fn is_closed(&self, a: PointSet) -> bool {
        self.top.is_closed(a)
    }

    fn single(&self, x: usize) -> PointSet {
        PointSet::singleton(self.n, x)
    }

    fn opens_containing(&self, x: usize) -> impl Iterator<Item = PointSet> + '_ {
        self.top.opens().iter().copied().filter(move |u| u.contains(x))
    }

    fn separated_by_opens(&self, x: usize, y: usize) -> bool {
        self.opens_containing(x).any(|u| self.opens_containing(y).any(|v| u.is_disjoint(v)))
    }

    /// Number of distinct classes meeting `a`.
    fn class_count_def(&self, a: PointSet) -> usize {
        let mut seen = PointSet::empty(self.n);
        let mut k = 0;
        for x in a {
            if !seen.contains(x) {
                seen = seen | self.tcls[x];
                k += 1;
            }
        }
        k
    }

    fn def_point(&self, a: AxiomId, x: usize, s: &mut Search) {
        use AxiomId::*;
        let n = self.n;
        let cl = &self.cl;
        let der = self.der[x];
        let point = Witness::Point { x };
        match a {
            T0 => {
                for y in (0..n).filter(|&y| y != x) {
                    let sep = || !self.top.opens().iter().any(|u| u.contains(x) != u.contains(y));
                    if s.offer(Witness::Pair { x, y }, sep) {
                        return;
                    }
                }
            }
            TMinus1 => {
                s.offer(point, || {
                    !self.is_closed(self.single(x)) && self.opens_containing(x).all(|u| cl[x].is_subset(u))
                });
            }
            TD => {
                s.offer(point, || !self.is_closed(der));
            }
            T14 => {
                s.offer(point, || !self.is_closed(self.single(x)) && self.top.kernel(self.single(x)) != self.single(x));
            }
            T12 => {
                s.offer(point, || !self.is_closed(self.single(x)) && !self.is_open(self.single(x)));
            }
            T1 => {
                s.offer(point, || !self.is_closed(self.single(x)));
            }
            T2 => {
                for y in (0..n).filter(|&y| y != x) {
                    if s.offer(Witness::Pair { x, y }, || !self.separated_by_opens(x, y)) {
                        return;
                    }
                }
            }
            TYS => {
                for y in (0..n).filter(|&y| y != x) {
                    let bad = || {
                        let i = cl[x] & cl[y];
                        !(i.is_empty() || i == self.single(x) || i == self.single(y))
                    };
                    if s.offer(Witness::Pair { x, y }, bad) {
                        return;
                    }
                }
            }
            C0 => {
                s.offer(point, || !der.is_empty() && der.iter().all(|y| cl[y].is_subset(der)));
            }
            CD => {
                s.offer(point, || !der.is_empty() && self.is_closed(der));
            }
            CR => {
                for y in der {
                    if s.offer(Witness::Pair { x, y }, || cl[y].is_subset(der)) {
                        return;
                    }
                }
            }
            CN => {
                for y in der {
                    for z in der.iter().filter(|&z| z > y) {
                        let bad = || cl[y].is_subset(der) && cl[z].is_subset(der) && cl[y].is_disjoint(cl[z]);
                        if s.offer(Witness::Triple { x, y, z }, bad) {
                            return;
                        }
                    }
                }
            }
            SD => {
                s.offer(point, || !self.is_closed(cl[x] - self.tcls[x]));
            }
            QS2 => {
                for y in (0..n).filter(|&y| !self.tcls[x].contains(y)) {
                    let bad =
                        || !(0..n).any(|z| cl[z].contains(x) && cl[z].contains(y)) && !self.separated_by_opens(x, y);
                    if s.offer(Witness::Pair { x, y }, bad) {
                        return;
                    }
                }
            }
            SY => {
                for y in (0..n).filter(|&y| !self.tcls[x].contains(y)) {
                    if s.offer(Witness::Pair { x, y }, || self.class_count_def(cl[x] & cl[y]) > 1) {
                        return;
                    }
                }
            }
            SSD => {
                s.offer(point, || {
                    let dx = cl[x] - self.tcls[x];
                    !self.is_closed(self.tcls[x]) && !(self.is_closed(dx) && (0..n).any(|y| self.tcls[y] == dx))
                });
            }
            SDelta => {
                s.offer(point, || {
                    let dx = cl[x] - self.tcls[x];
                    !self.is_closed(self.tcls[x]) && !(0..n).any(|y| cl[y] == dx)
                });
            }
            Recurrent => {
                s.offer(point, || !self.is_closed(self.tcls[x]) && self.is_closed(der));
            }
            _ => unreachable!("{a} has no point-level form"),
        }
    }

    fn def_space(&self, a: AxiomId, s: &mut Search) {
        use AxiomId::*;
        let n = self.n;
        match a {
            T14 | T13 | T12 => {
                for set in PointSet::all_subsets(n) {
                    if s.offer(Witness::Subset { set }, || !self.top.is_lambda_closed(set)) {
                        return;
                    }
                }
            }
            SYY => self.def_syy(s),
            SQ => {
                for x in 0..n {
                    for y in (0..n).filter(|&y| y != x && !(self.cl[x] & self.cl[y]).is_empty()) {
                        for &u in self.top.opens().iter().filter(|u| u.contains(x) && !u.contains(y)) {
                            for &v in self.top.opens().iter().filter(|v| v.contains(y) && !v.contains(x)) {
                                let bad = || !(self.cl[x] & self.cl[y]).is_empty();
                                if s.offer(Witness::OpenPair { u, v, x, y }, bad) {
                                    return;
                                }
                            }
                        }
                    }
                }
            }
            Nested => {
                let opens = self.top.opens();
                for (i, &u) in opens.iter().enumerate() {
                    for &v in &opens[i + 1..] {
                        if s.offer(Witness::SubsetPair { a: u, b: v }, || !u.is_subset(v) && !v.is_subset(u)) {
                            return;
                        }
                    }
                }
            }
            WR0 => {
                for x in 0..n {
                    if s.offer(Witness::Point { x }, || self.cl.iter().all(|c| c.contains(x))) {
                        return;
                    }
                }
            }
            WC0 => {
                for x in 0..n {
                    let in_all = || (0..n).all(|y| self.top.kernel(self.single(y)).contains(x));
                    if s.offer(Witness::Point { x }, in_all) {
                        return;
                    }
                }
            }
            LambdaSpace => {
                let closed: Vec<PointSet> =
                    PointSet::all_subsets(n).filter(|&a| self.top.is_lambda_closed(a)).collect();
                for (i, &a) in closed.iter().enumerate() {
                    for &b in &closed[i + 1..] {
                        if s.offer(Witness::SubsetPair { a, b }, || !self.top.is_lambda_closed(a | b)) {
                            return;
                        }
                    }
                }
            }
            Artinian | AntiCompact => {}
            _ => {
                for x in 0..n {
                    self.def_point(a, x, s);
                    if s.done() {
                        return;
                    }
                }
            }
        }
    }

    fn def_syy(&self, s: &mut Search) {
        let n = self.n;
        let reps: Vec<usize> = (0..n).filter(|&x| self.tcls[x].first() == Some(x)).collect();
        let violation = |p: usize, x: usize, y: usize| {
            if self.tcls[x].contains(y) {
                return false;
            }
            let i = self.cl[x] & self.cl[y];
            !(i.is_empty() || i == self.tcls[x] || i == self.tcls[y] || i == self.tcls[p])
        };
        match s.target {
            None => {
                let mut roots = Vec::new();
                for &p in &reps {
                    let first = (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).find(|&(x, y)| violation(p, x, y));
                    match first {
                        Some((x, y)) => roots.push(RootWitness { root: p, witness: Witness::Pair { x, y } }),
                        None => return,
                    }
                }
                if !roots.is_empty() {
                    s.hit = Some(Witness::PerRoot { roots });
                }
            }
            Some(Witness::PerRoot { roots }) => {
                let ok = !roots.is_empty()
                    && roots.iter().map(|r| r.root).eq(reps.iter().copied())
                    && roots.iter().all(|r| match r.witness {
                        Witness::Pair { x, y } => x < n && y < n && violation(r.root, x, y),
                        _ => false,
                    });
                if ok {
                    s.hit = s.target.cloned();
                }
            }
            Some(_) => {}
        }
    }

    // ---- characterized ----

    fn up(&self, x: usize) -> PointSet {
        self.pre.up_row(x)
    }

    fn down(&self, x: usize) -> PointSet {
        self.pre.down_row(x)
    }

    fn ocls(&self, x: usize) -> PointSet {
        order::cls(&self.pre, x)
    }

    fn class_count_char(&self, a: PointSet) -> usize {
        let mut seen = PointSet::empty(self.n);
        let mut k = 0;
        for x in a {
            if !seen.contains(x) {
                seen = seen | self.ocls(x);
                k += 1;
            }
        }
        k
    }

    fn char_point(&self, a: AxiomId, x: usize, s: &mut Search) {
        use AxiomId::*;
        let n = self.n;
        let p = &self.pre;
        let point = Witness::Point { x };
        let single = PointSet::singleton(n, x);
        let is_min = self.mins.contains(x);
        match a {
            T0 => {
                for y in (0..n).filter(|&y| y != x) {
                    if s.offer(Witness::Pair { x, y }, || p.equivalent(x, y)) {
                        return;
                    }
                }
            }
            TMinus1 => {
                s.offer(point, || is_min && self.ocls(x).len() > 1);
            }
            TD => {
                s.offer(point, || !order::is_downset(p, order::strict_down(p, x)));
            }
            T14 => {
                s.offer(point, || !(self.ocls(x) == single && (self.ht.per_point[x] == 0 || self.maxs.contains(x))));
            }
            T12 => {
                s.offer(point, || !(self.down(x) == single || self.up(x) == single));
            }
            T1 => {
                s.offer(point, || self.down(x) != single);
            }
            T2 => {
                for y in (0..n).filter(|&y| y != x) {
                    if s.offer(Witness::Pair { x, y }, || !(self.up(x) & self.up(y)).is_empty()) {
                        return;
                    }
                }
            }
            TYS => {
                s.offer(point, || {
                    let below_ok = order::strict_down(p, x).iter().all(|z| self.down(z) == PointSet::singleton(n, z));
                    let above_ok = order::strict_up(p, x).is_empty() || self.down(x) == single;
                    let related = self.up(x) | self.down(x);
                    let forks_ok = self.down(x).iter().all(|z| self.up(z).is_subset(related));
                    !(self.ocls(x) == single && below_ok && above_ok && forks_ok)
                });
            }
            C0 => {
                s.offer(point, || !(is_min || self.ocls(x).len() > 1));
            }
            CD => {
                s.offer(point, || !(is_min || order::downset_of(p, order::strict_down(p, x)).contains(x)));
            }
            CR => {
                s.offer(point, || !is_min);
            }
            CN => {
                let dx = self.down(x);
                for y in dx {
                    for z in dx.iter().filter(|&z| z > y) {
                        if s.offer(Witness::Triple { x, y, z }, || (self.down(y) & self.down(z)).is_empty()) {
                            return;
                        }
                    }
                }
            }
            SD => {
                s.offer(point, || !(is_min || !order::downset_of(p, order::strict_down(p, x)).contains(x)));
            }
            QS2 => {
                for y in (0..n).filter(|&y| !p.equivalent(x, y)) {
                    let bad = || {
                        let common = self.up(x) & self.up(y);
                        !common.is_empty() && !(0..n).any(|z| p.leq(x, z) && p.leq(y, z))
                    };
                    if s.offer(Witness::Pair { x, y }, bad) {
                        return;
                    }
                }
            }
            SY => {
                for y in (0..n).filter(|&y| !p.equivalent(x, y)) {
                    if s.offer(Witness::Pair { x, y }, || self.class_count_char(self.down(x) & self.down(y)) > 1) {
                        return;
                    }
                }
            }
            SSD => {
                s.offer(point, || {
                    let d = order::class_strict_down(p, x);
                    let one_class = d.first().is_some_and(|y| self.ocls(y) == d);
                    !is_min && !(one_class && self.ht.per_point[x] == 1)
                });
            }
            SDelta => {
                s.offer(point, || {
                    let d = order::class_strict_down(p, x);
                    !is_min && !d.iter().any(|y| self.down(y) == d)
                });
            }
            Recurrent => {
                s.offer(point, || {
                    !(order::is_downset(p, self.ocls(x)) || !order::is_downset(p, order::strict_down(p, x)))
                });
            }
            _ => unreachable!("{a} has no point-level form"),
        }
    }

    fn chains(&self, s: &mut Search) {
        let p = &self.pre;
        for low in 0..self.n {
            for mid in order::class_strict_up(p, low) {
                for high in 0..self.n {
                    if s.offer(Witness::Chain { low, mid, high }, || p.lt(low, mid) && p.lt(mid, high)) {
                        return;
                    }
                }
            }
        }
    }

    fn t0_pairs(&self, s: &mut Search) {
        for x in 0..self.n {
            self.char_point(AxiomId::T0, x, s);
            if s.done() {
                return;
            }
        }
    }

    fn forks(&self, s: &mut Search) {
        let p = &self.pre;
        for base in 0..self.n {
            let up = self.up(base);
            for left in up {
                for right in up.iter().filter(|&r| r > left) {
                    let bad = || p.leq(base, left) && p.leq(base, right) && !p.comparable(left, right);
                    if s.offer(Witness::Fork { base, left, right }, bad) {
                        return;
                    }
                }
            }
        }
    }

    fn joins(&self, s: &mut Search) {
        let p = &self.pre;
        for top in 0..self.n {
            let down = self.down(top);
            for left in down {
                for right in down.iter().filter(|&r| r > left) {
                    let bad = || p.leq(left, top) && p.leq(right, top) && !p.comparable(left, right);
                    if s.offer(Witness::Join { top, left, right }, bad) {
                        return;
                    }
                }
            }
        }
    }

    fn char_space(&self, a: AxiomId, s: &mut Search) {
        use AxiomId::*;
        let n = self.n;
        let p = &self.pre;
        macro_rules! step {
            ($e:expr) => {
                $e;
                if s.done() {
                    return;
                }
            };
        }
        match a {
            T14 => {
                step!(self.t0_pairs(s));
                self.chains(s);
            }
            T13 => {
                step!(self.t0_pairs(s));
                for set in PointSet::all_subsets(n) {
                    let bad = || {
                        let f = order::downset_of(p, set);
                        !(order::downset_of(p, f - set) & set).is_empty()
                    };
                    if s.offer(Witness::Subset { set }, bad) {
                        return;
                    }
                }
            }
            T12 => {
                step!(self.t0_pairs(s));
                step!(self.chains(s));
                for x in 0..n {
                    let bad = || self.ht.per_point[x] == 1 && self.up(x) != PointSet::singleton(n, x);
                    if s.offer(Witness::Point { x }, bad) {
                        return;
                    }
                }
            }
            TYS => {
                step!(self.t0_pairs(s));
                step!(self.chains(s));
                self.forks(s);
            }
            S14 => self.chains(s),
            S12 => {
                step!(self.chains(s));
                for x in 0..n {
                    let bad = || self.ht.per_point[x] == 1 && self.up(x) != self.ocls(x);
                    if s.offer(Witness::Point { x }, bad) {
                        return;
                    }
                }
            }
            SYS => {
                step!(self.chains(s));
                self.forks(s);
            }
            SYY => {
                step!(self.chains(s));
                self.char_syy_roots(s);
            }
            SY => {
                step!(self.chains(s));
                for a in 0..n {
                    for b in (a + 1..n).filter(|&b| !p.comparable(a, b)) {
                        let above = self.up(a) & self.up(b);
                        for c in above {
                            for d in above.iter().filter(|&d| d > c) {
                                if s.offer(Witness::Quad { a, b, c, d }, || order::is_min_s1(p, a, b, c, d)) {
                                    return;
                                }
                            }
                        }
                    }
                }
            }
            SSD => {
                step!(self.chains(s));
                self.joins(s);
            }
            SDelta => {
                step!(self.joins(s));
                for x in 0..n {
                    let bad = || {
                        !self.mins.contains(x)
                            && !order::class_strict_down(p, x).iter().any(|y| order::is_immediate_predecessor(p, y, x))
                    };
                    if s.offer(Witness::Point { x }, bad) {
                        return;
                    }
                }
            }
            SQ => self.forks(s),
            Nested => {
                for x in 0..n {
                    for y in x + 1..n {
                        if s.offer(Witness::Pair { x, y }, || !p.comparable(x, y)) {
                            return;
                        }
                    }
                }
            }
            WR0 => {
                for x in 0..n {
                    if s.offer(Witness::Point { x }, || self.up(x) == p.points()) {
                        return;
                    }
                }
            }
            WC0 => {
                for x in 0..n {
                    if s.offer(Witness::Point { x }, || self.down(x) == p.points()) {
                        return;
                    }
                }
            }
            LambdaSpace => {
                for set in PointSet::all_subsets(n) {
                    let bad = || order::is_convex(p, set) && !(order::downset_of(p, set) - set).is_subset(self.mins);
                    if s.offer(Witness::Subset { set }, bad) {
                        return;
                    }
                }
            }
            Artinian | AntiCompact => {}
            _ => {
                for x in 0..n {
                    self.char_point(a, x, s);
                    if s.done() {
                        return;
                    }
                }
            }
        }
    }

    fn char_syy_roots(&self, s: &mut Search) {
        let p = &self.pre;
        let roots: Vec<usize> = self.mins.iter().filter(|&x| self.ocls(x).first() == Some(x)).collect();
        let valid = |root: usize, w: &Witness| match *w {
            Witness::Fork { base, left, right } => {
                let rest = p.points() - self.ocls(root);
                [base, left, right].iter().all(|&z| rest.contains(z))
                    && p.leq(base, left)
                    && p.leq(base, right)
                    && !p.comparable(left, right)
            }
            _ => false,
        };
        match s.target {
            None => {
                let mut out = Vec::new();
                for &r in &roots {
                    match order::fork(p, p.points() - self.ocls(r)) {
                        Some((base, left, right)) => {
                            out.push(RootWitness { root: r, witness: Witness::Fork { base, left, right } })
                        }
                        None => return,
                    }
                }
                if !out.is_empty() {
                    s.hit = Some(Witness::PerRoot { roots: out });
                }
            }
            Some(Witness::PerRoot { roots: given }) => {
                let ok = !given.is_empty()
                    && given.iter().map(|r| r.root).eq(roots.iter().copied())
                    && given.iter().all(|r| valid(r.root, &r.witness));
                if ok {
                    s.hit = s.target.cloned();
                }
            }
            Some(_) => {}
        }
    }
}

pub fn check_point(top: &FiniteTopology, axiom: AxiomId, x: usize, mode: Mode) -> Result<AxiomReport, Error> {
    Classifier::new(top).check_point(axiom, x, mode)
}

pub fn check_space(top: &FiniteTopology, axiom: AxiomId, mode: Mode) -> AxiomReport {
    Classifier::new(top).check_space(axiom, mode)
}

/// Every catalog axiom in definitional mode.
pub fn axiom_vector(top: &FiniteTopology) -> BTreeMap<AxiomId, AxiomReport> {
    axiom_vector_in(top, Mode::Definitional)
}

pub fn axiom_vector_in(top: &FiniteTopology, mode: Mode) -> BTreeMap<AxiomId, AxiomReport> {
    let c = Classifier::new(top);
    AxiomId::ALL.iter().map(|&a| (a, c.check_space(a, mode))).collect()
}

pub fn witness_replays(top: &FiniteTopology, report: &AxiomReport) -> bool {
    Classifier::new(top).replays(report)
}
