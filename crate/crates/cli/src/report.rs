//! Report documents and DOT output.

use std::collections::BTreeMap;
use std::fmt::Write;

use fintop::axioms::{AxiomId, Classifier, Mode, Witness};
use fintop::decomp::{lemma001_check, quotient, tau_f, Lemma001, TauF};
use fintop::dynamics::{self, DynClass};
use fintop::{class_space, order, FiniteTopology, HeightInfo, PointSet};
use serde::Serialize;

use crate::doc::Space;

#[derive(Clone, Debug, Serialize)]
pub struct Verdict {
    pub verdict: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct AxiomEntry {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub def: Option<Verdict>,
    #[serde(rename = "char", skip_serializing_if = "Option::is_none")]
    pub char_: Option<Verdict>,
    /// Present when both forms were run.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub agree: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PointEntry {
    pub point: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub class: PointSet,
    pub height: usize,
    pub dynamics: DynClass,
    pub axioms: BTreeMap<&'static str, AxiomEntry>,
}

#[derive(Clone, Debug, Serialize)]
pub struct DynamicsSummary {
    pub recurrent: bool,
    pub recurrent_points: PointSet,
    pub hyperbolic_like: PointSet,
    pub weakly_hyperbolic_like: PointSet,
    pub non_wandering: bool,
    pub anosov_type: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassSpaceSummary {
    pub classes: Vec<PointSet>,
    /// Covering pairs `[lower, upper]` of class ids.
    pub covers: Vec<[usize; 2]>,
    pub opens: Vec<PointSet>,
}

#[derive(Clone, Debug, Serialize)]
pub struct DecompositionSummary {
    pub blocks: Vec<PointSet>,
    pub tau_f: TauF,
    pub lemma001: Lemma001,
    pub quotient: FiniteTopology,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassifyReport {
    pub points: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub opens: Vec<PointSet>,
    pub modes: Vec<Mode>,
    pub axioms: BTreeMap<&'static str, AxiomEntry>,
    pub per_point: Vec<PointEntry>,
    pub height: HeightInfo,
    pub class_space: ClassSpaceSummary,
    pub dynamics: DynamicsSummary,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decomposition: Option<DecompositionSummary>,
}

fn entry(modes: &[Mode], mut run: impl FnMut(Mode) -> Verdict) -> AxiomEntry {
    let mut e = AxiomEntry::default();
    for &m in modes {
        let v = run(m);
        match m {
            Mode::Definitional => e.def = Some(v),
            Mode::Characterized => e.char_ = Some(v),
        }
    }
    if let (Some(d), Some(c)) = (&e.def, &e.char_) {
        e.agree = Some(d.verdict == c.verdict);
    }
    e
}

fn set_of(n: usize, pred: impl Fn(usize) -> bool) -> PointSet {
    (0..n).filter(|&x| pred(x)).fold(PointSet::empty(n), |a, x| a.with(x))
}

pub fn classify(space: &Space, modes: &[Mode], axioms: &[AxiomId]) -> ClassifyReport {
    let top = &space.top;
    let n = top.len();
    let c = Classifier::new(top);
    let axiom_map = axioms
        .iter()
        .map(|&a| {
            (
                a.name(),
                entry(modes, |m| {
                    let r = c.check_space(a, m);
                    Verdict { verdict: r.verdict, witness: r.witness }
                }),
            )
        })
        .collect();
    let pre = c.preorder();
    let ht = order::height(pre);
    let flags = dynamics::classify(top);
    let per_point = (0..n)
        .map(|x| PointEntry {
            point: x,
            label: space.labels.as_ref().map(|l| l[x].clone()),
            class: order::cls(pre, x),
            height: ht.per_point[x],
            dynamics: flags[x],
            axioms: axioms
                .iter()
                .filter(|a| a.is_point_level())
                .map(|&a| {
                    (
                        a.name(),
                        entry(modes, |m| {
                            let r = c.check_point(a, x, m).expect("point-level axiom");
                            Verdict { verdict: r.verdict, witness: r.witness }
                        }),
                    )
                })
                .collect(),
        })
        .collect();
    let cp = pre.class_poset();
    let (q, _) = class_space(top);
    let dynamics = DynamicsSummary {
        recurrent: flags.iter().all(|f| f.recurrent),
        recurrent_points: set_of(n, |x| flags[x].recurrent),
        hyperbolic_like: set_of(n, |x| flags[x].hyperbolic_like),
        weakly_hyperbolic_like: set_of(n, |x| flags[x].weakly_hyperbolic_like),
        non_wandering: flags.iter().all(|f| f.non_wandering),
        anosov_type: dynamics::is_anosov_type(top),
    };
    let decomposition = space.decomposition.as_ref().map(|d| DecompositionSummary {
        blocks: d.blocks().to_vec(),
        tau_f: tau_f(top, d),
        lemma001: lemma001_check(top, d),
        quotient: quotient(top, d),
    });
    ClassifyReport {
        points: n,
        labels: space.labels.clone(),
        opens: top.opens().to_vec(),
        modes: modes.to_vec(),
        axioms: axiom_map,
        per_point,
        height: ht,
        class_space: ClassSpaceSummary {
            classes: cp.classes().to_vec(),
            covers: cp.covers().into_iter().map(|(a, b)| [a, b]).collect(),
            opens: q.opens().to_vec(),
        },
        dynamics,
        decomposition,
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Covering relation of the class poset as a Graphviz digraph, lower classes
/// pointing to the classes covering them.
pub fn hasse_dot(space: &Space) -> String {
    let cp = space.top.specialization().class_poset();
    let name = |x: usize| match &space.labels {
        Some(l) => l[x].clone(),
        None => x.to_string(),
    };
    let mut out = String::from("digraph hasse {\n  rankdir=BT;\n  node [shape=box];\n");
    for (i, c) in cp.classes().iter().enumerate() {
        let members: Vec<String> = c.iter().map(name).collect();
        let label = format!("{{{}}}", members.join(","));
        writeln!(out, "  c{i} [label=\"{}\"];", escape(&label)).unwrap();
    }
    for (a, b) in cp.covers() {
        writeln!(out, "  c{a} -> c{b};").unwrap();
    }
    out.push_str("}\n");
    out
}
