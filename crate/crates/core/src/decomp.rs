//! Decompositions of a finite space, the saturated family `τ_F` and quotients.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::Error;
use crate::pointset::PointSet;
use crate::topology::FiniteTopology;

/// A partition of the points into nonempty blocks, ordered by least member.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Decomposition {
    blocks: Vec<PointSet>,
    block_of: Vec<usize>,
}

impl Decomposition {
    pub fn new<I>(n: usize, blocks: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = PointSet>,
    {
        let mut seen = PointSet::empty(n);
        let mut list = Vec::new();
        for b in blocks {
            if b.universe() != n {
                return Err(Error::UniverseMismatch { expected: n, found: b.universe() });
            }
            if b.is_empty() {
                return Err(Error::EmptyBlock);
            }
            if let Some(x) = (seen & b).first() {
                return Err(Error::OverlappingBlocks(x));
            }
            seen = seen | b;
            list.push(b);
        }
        if let Some(x) = seen.complement().first() {
            return Err(Error::UncoveredPoint(x));
        }
        list.sort_by_key(|b| b.first());
        let mut block_of = vec![0; n];
        for (i, b) in list.iter().enumerate() {
            for x in *b {
                block_of[x] = i;
            }
        }
        Ok(Decomposition { blocks: list, block_of })
    }

    /// From a block id per point; ids need not be contiguous.
    pub fn from_labels(labels: &[usize]) -> Self {
        let n = labels.len();
        let mut blocks: Vec<(usize, PointSet)> = Vec::new();
        for (x, &l) in labels.iter().enumerate() {
            match blocks.iter_mut().find(|(k, _)| *k == l) {
                Some((_, b)) => b.insert(x),
                None => blocks.push((l, PointSet::singleton(n, x))),
            }
        }
        Self::new(n, blocks.into_iter().map(|(_, b)| b)).expect("labels define a partition")
    }

    pub fn singletons(n: usize) -> Self {
        Self::from_labels(&(0..n).collect::<Vec<_>>())
    }

    pub fn whole(n: usize) -> Self {
        Self::from_labels(&vec![0; n])
    }

    pub fn len(&self) -> usize {
        self.block_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.block_of.is_empty()
    }

    pub fn blocks(&self) -> &[PointSet] {
        &self.blocks
    }

    pub fn block_of(&self, x: usize) -> usize {
        self.block_of[x]
    }

    /// `F(A)`: the union of blocks meeting `a`.
    pub fn saturate(&self, a: PointSet) -> PointSet {
        let mut out = PointSet::empty(self.len());
        for x in a {
            out = out | self.blocks[self.block_of[x]];
        }
        out
    }

    pub fn is_saturated(&self, a: PointSet) -> bool {
        self.saturate(a) == a
    }

    /// All saturated subsets, ascending.
    pub fn saturated_sets(&self) -> impl Iterator<Item = PointSet> + '_ {
        let k = self.blocks.len();
        let mut out: Vec<PointSet> = (0..1u64 << k)
            .map(|m| {
                (0..k).filter(|i| m >> i & 1 == 1).fold(PointSet::empty(self.len()), |acc, i| acc | self.blocks[i])
            })
            .collect();
        out.sort_unstable();
        out.into_iter()
    }

    /// Block ids meeting `a`.
    pub fn image(&self, a: PointSet) -> PointSet {
        a.iter().fold(PointSet::empty(self.blocks.len()), |acc, x| acc.with(self.block_of[x]))
    }

    pub fn preimage(&self, ids: PointSet) -> PointSet {
        ids.iter().fold(PointSet::empty(self.len()), |acc, i| acc | self.blocks[i])
    }

    /// Restricted growth string: block ids per point.
    pub fn labels(&self) -> &[usize] {
        &self.block_of
    }
}

impl Serialize for Decomposition {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.blocks.iter())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TauF {
    /// `{F(U) : U open}`, ascending and deduplicated.
    pub family: Vec<PointSet>,
    pub is_topology: bool,
    /// Least pair of opens `(U, V)` with `F(U) ∩ F(V)` outside the family.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<(PointSet, PointSet)>,
}

pub fn tau_f(top: &FiniteTopology, dec: &Decomposition) -> TauF {
    let mut family: Vec<PointSet> = top.opens().iter().map(|&u| dec.saturate(u)).collect();
    family.sort_unstable();
    family.dedup();
    let members: HashSet<PointSet> = family.iter().copied().collect();
    let opens = top.opens();
    let mut witness = None;
    'outer: for (i, &u) in opens.iter().enumerate() {
        for &v in &opens[i + 1..] {
            if !members.contains(&(dec.saturate(u) & dec.saturate(v))) {
                witness = Some((u, v));
                break 'outer;
            }
        }
    }
    TauF { family, is_topology: witness.is_none(), witness }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Lemma001 {
    /// `τ_F ⊆ τ`
    pub contained: bool,
    /// Closure of every saturated set is saturated.
    pub closures_saturated: bool,
    /// Least open `U` with `F(U)` not open.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub open_witness: Option<PointSet>,
    /// Least saturated `A` whose closure is not saturated.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub saturated_witness: Option<PointSet>,
    pub tau_f_is_topology: bool,
    /// Both sides agree, and containment forces a topology.
    pub holds: bool,
}

pub fn lemma001_check(top: &FiniteTopology, dec: &Decomposition) -> Lemma001 {
    let open_witness = top.opens().iter().copied().find(|&u| !top.is_open(dec.saturate(u)));
    let saturated_witness = dec.saturated_sets().find(|&a| !dec.is_saturated(top.closure(a)));
    let contained = open_witness.is_none();
    let closures_saturated = saturated_witness.is_none();
    let tau_f_is_topology = tau_f(top, dec).is_topology;
    Lemma001 {
        contained,
        closures_saturated,
        open_witness,
        saturated_witness,
        tau_f_is_topology,
        holds: contained == closures_saturated && (!contained || tau_f_is_topology),
    }
}

/// The quotient topology on block ids: a set of blocks is open iff its union is open.
pub fn quotient(top: &FiniteTopology, dec: &Decomposition) -> FiniteTopology {
    let k = dec.blocks().len();
    let mut opens: Vec<PointSet> =
        top.opens().iter().filter(|&&u| dec.is_saturated(u)).map(|&u| dec.image(u)).collect();
    opens.sort_unstable();
    opens.dedup();
    FiniteTopology::from_sorted_unchecked(k, opens)
}

/// `τ_F` read as a family of block-id sets.
pub fn tau_f_on_blocks(top: &FiniteTopology, dec: &Decomposition) -> Vec<PointSet> {
    let mut out: Vec<PointSet> = tau_f(top, dec).family.iter().map(|&a| dec.image(a)).collect();
    out.sort_unstable();
    out.dedup();
    out
}
