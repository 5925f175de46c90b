//! Finite topological spaces given by their explicit open-set family.
//!
//! Every finite topology is Alexandrov: open sets are exactly the upsets of the
//! specialization preorder. The open family is nevertheless stored explicitly so
//! that definitional checks can be run against it without going through the order.

use std::collections::HashSet;

use crate::error::Error;
use crate::pointset::{PointSet, MAX_POINTS};
use crate::preorder::Preorder;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteTopology {
    n: usize,
    /// Sorted by bitmap value, deduplicated.
    opens: Vec<PointSet>,
    /// Closure of each singleton.
    point_closures: Vec<PointSet>,
}

impl std::fmt::Debug for FiniteTopology {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteTopology").field("n", &self.n).field("opens", &self.opens).finish()
    }
}

impl serde::Serialize for FiniteTopology {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("FiniteTopology", 2)?;
        st.serialize_field("points", &self.n)?;
        st.serialize_field("opens", &self.opens)?;
        st.end()
    }
}

/// Checks that `opens` is a topology on `n` points and returns it in canonical form.
pub fn validate_topology<I>(n: usize, opens: I) -> Result<FiniteTopology, Error>
where
    I: IntoIterator<Item = PointSet>,
{
    if n > MAX_POINTS {
        return Err(Error::TooManyPoints(n));
    }
    let mut family: Vec<PointSet> = Vec::new();
    for u in opens {
        if u.universe() != n {
            return Err(Error::UniverseMismatch { expected: n, found: u.universe() });
        }
        family.push(u);
    }
    family.sort_unstable();
    family.dedup();
    if family.binary_search(&PointSet::empty(n)).is_err() || family.binary_search(&PointSet::full(n)).is_err() {
        return Err(Error::MissingEmptyOrFull);
    }
    let members: HashSet<u64> = family.iter().map(|u| u.bits()).collect();
    for (i, &u) in family.iter().enumerate() {
        for &v in &family[i + 1..] {
            if !members.contains(&(u | v).bits()) {
                return Err(Error::NotClosedUnderUnion(u, v));
            }
            if !members.contains(&(u & v).bits()) {
                return Err(Error::NotClosedUnderIntersection(u, v));
            }
        }
    }
    Ok(FiniteTopology::from_sorted_unchecked(n, family))
}

impl FiniteTopology {
    pub(crate) fn from_sorted_unchecked(n: usize, opens: Vec<PointSet>) -> Self {
        debug_assert!(opens.windows(2).all(|w| w[0] < w[1]));
        let full = PointSet::full(n);
        let point_closures = (0..n)
            .map(|x| {
                let outside = opens.iter().filter(|u| !u.contains(x)).fold(PointSet::empty(n), |acc, &u| acc | u);
                full - outside
            })
            .collect();
        FiniteTopology { n, opens, point_closures }
    }

    pub fn discrete(n: usize) -> Self {
        alexandrov(&Preorder::discrete(n))
    }

    pub fn indiscrete(n: usize) -> Self {
        let mut opens = vec![PointSet::empty(n)];
        if n > 0 {
            opens.push(PointSet::full(n));
        }
        Self::from_sorted_unchecked(n, opens)
    }

    /// Point 1 open, point 0 closed.
    pub fn sierpinski() -> Self {
        validate_topology(2, [PointSet::empty(2), PointSet::singleton(2, 1), PointSet::full(2)]).unwrap()
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn opens(&self) -> &[PointSet] {
        &self.opens
    }

    pub fn points(&self) -> PointSet {
        PointSet::full(self.n)
    }

    pub fn is_open(&self, a: PointSet) -> bool {
        self.opens.binary_search(&a).is_ok()
    }

    pub fn is_closed(&self, a: PointSet) -> bool {
        self.is_open(a.complement())
    }

    /// Closed sets in ascending order of their open complements.
    pub fn closed_sets(&self) -> impl Iterator<Item = PointSet> + '_ {
        self.opens.iter().map(|u| u.complement())
    }

    /// Membership bitmap over all `2^n` subsets (bit `A` set iff `A` is open).
    /// Only meaningful for `n <= 7`.
    pub fn family_code(&self) -> u128 {
        assert!(self.n <= 7);
        self.opens.iter().fold(0u128, |acc, u| acc | 1u128 << u.bits())
    }

    pub fn closure(&self, a: PointSet) -> PointSet {
        a.iter().fold(PointSet::empty(self.n), |acc, x| acc | self.point_closures[x])
    }

    #[inline]
    pub fn point_closure(&self, x: usize) -> PointSet {
        self.point_closures[x]
    }

    pub fn kernel(&self, a: PointSet) -> PointSet {
        self.opens.iter().filter(|u| a.is_subset(**u)).fold(PointSet::full(self.n), |acc, &u| acc & u)
    }

    pub fn interior(&self, a: PointSet) -> PointSet {
        self.opens.iter().filter(|u| u.is_subset(a)).fold(PointSet::empty(self.n), |acc, &u| acc | u)
    }

    pub fn lambda_closure(&self, a: PointSet) -> PointSet {
        self.kernel(a) & self.closure(a)
    }

    pub fn is_lambda_closed(&self, a: PointSet) -> bool {
        self.lambda_closure(a) == a
    }

    pub fn shell(&self, a: PointSet) -> PointSet {
        self.closure(a) - a
    }

    /// Points with the same singleton closure as `x`.
    pub fn class_of(&self, x: usize) -> PointSet {
        let c = self.point_closures[x];
        c.iter().filter(|&y| self.point_closures[y] == c).fold(PointSet::empty(self.n), |acc, y| acc.with(y))
    }

    /// Limit points of `{x}`.
    pub fn derived(&self, x: usize) -> PointSet {
        self.point_closures[x].without(x)
    }

    pub fn specialization(&self) -> Preorder {
        specialization(self)
    }

    /// Relabels points by `perm[old] = new`.
    pub fn permuted(&self, perm: &[usize]) -> FiniteTopology {
        assert_eq!(perm.len(), self.n);
        let mut opens: Vec<PointSet> =
            self.opens.iter().map(|u| u.iter().fold(PointSet::empty(self.n), |acc, x| acc.with(perm[x]))).collect();
        opens.sort_unstable();
        Self::from_sorted_unchecked(self.n, opens)
    }
}

/// `x <= y` iff `x` lies in the closure of `{y}`.
pub fn specialization(top: &FiniteTopology) -> Preorder {
    let n = top.len();
    let mut up = vec![0u64; n];
    for y in 0..n {
        for x in top.point_closure(y) {
            up[x] |= 1 << y;
        }
    }
    Preorder::from_up_rows_unchecked(n, up)
}

/// All upsets of `pre`, in ascending bitmap order.
pub fn upsets(pre: &Preorder) -> Vec<PointSet> {
    let n = pre.len();
    let mut out = Vec::new();
    // Decide points in index order; including x forces its upset in, excluding
    // x forces its downset out.
    fn go(pre: &Preorder, x: usize, inc: u64, exc: u64, out: &mut Vec<PointSet>) {
        let n = pre.len();
        if x == n {
            out.push(PointSet::from_bits(n, inc).unwrap());
            return;
        }
        let bit = 1u64 << x;
        if inc & bit != 0 || exc & bit != 0 {
            go(pre, x + 1, inc, exc, out);
            return;
        }
        go(pre, x + 1, inc, exc | pre.down_row(x).bits(), out);
        go(pre, x + 1, inc | pre.up_row(x).bits(), exc, out);
    }
    go(pre, 0, 0, 0, &mut out);
    out.sort_unstable();
    debug_assert!(out.windows(2).all(|w| w[0] < w[1]));
    let _ = n;
    out
}

/// The topology whose open sets are the upsets of `pre`.
pub fn alexandrov(pre: &Preorder) -> FiniteTopology {
    FiniteTopology::from_sorted_unchecked(pre.len(), upsets(pre))
}

/// Quotient by the T0-identification. Returns the class topology and the
/// point-to-class mapping; class ids follow the order of least members.
pub fn class_space(top: &FiniteTopology) -> (FiniteTopology, Vec<usize>) {
    let n = top.len();
    let mut class_of = vec![usize::MAX; n];
    let mut k = 0;
    for x in 0..n {
        if class_of[x] == usize::MAX {
            for y in top.class_of(x) {
                class_of[y] = k;
            }
            k += 1;
        }
    }
    let mut opens: Vec<PointSet> =
        top.opens().iter().map(|u| u.iter().fold(PointSet::empty(k), |acc, x| acc.with(class_of[x]))).collect();
    opens.sort_unstable();
    opens.dedup();
    (FiniteTopology::from_sorted_unchecked(k, opens), class_of)
}

/// Disjoint union; summand `i` occupies the points after those of summands `0..i`.
pub fn disjoint_union(tops: &[FiniteTopology]) -> FiniteTopology {
    let n: usize = tops.iter().map(|t| t.len()).sum();
    assert!(n <= MAX_POINTS, "disjoint union has {n} points");
    let mut opens = vec![PointSet::empty(n)];
    let mut offset = 0;
    for t in tops {
        let mut next = Vec::with_capacity(opens.len() * t.opens().len());
        for &acc in &opens {
            for &u in t.opens() {
                next.push(acc | u.shifted(n, offset));
            }
        }
        opens = next;
        offset += t.len();
    }
    opens.sort_unstable();
    opens.dedup();
    FiniteTopology::from_sorted_unchecked(n, opens)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, xs: &[usize]) -> PointSet {
        PointSet::from_indices(n, xs.iter().copied())
    }

    /// The four-point space {a,b,c,d} = {0,1,2,3} with opens {}, {c}, {a,b}, {a,b,c}, X.
    pub(crate) fn four_point() -> FiniteTopology {
        validate_topology(4, [set(4, &[]), set(4, &[2]), set(4, &[0, 1]), set(4, &[0, 1, 2]), set(4, &[0, 1, 2, 3])])
            .unwrap()
    }

    fn chain3() -> FiniteTopology {
        alexandrov(&Preorder::chain(3))
    }

    // Oracle: intersection of every closed superset, computed by brute force
    // over all subsets.
    fn closure_oracle(t: &FiniteTopology, a: PointSet) -> PointSet {
        PointSet::all_subsets(t.len()).filter(|&f| t.is_closed(f) && a.is_subset(f)).fold(t.points(), |acc, f| acc & f)
    }

    #[test]
    fn validate_examples() {
        assert!(validate_topology(2, [set(2, &[]), set(2, &[1]), set(2, &[0, 1])]).is_ok());
        assert_eq!(four_point().opens().len(), 5);
        assert_eq!(
            validate_topology(2, [set(2, &[]), set(2, &[0]), set(2, &[1])]).unwrap_err(),
            Error::MissingEmptyOrFull
        );
        assert_eq!(
            validate_topology(3, [set(3, &[]), set(3, &[0]), set(3, &[1]), set(3, &[0, 1, 2])]).unwrap_err(),
            Error::NotClosedUnderUnion(set(3, &[0]), set(3, &[1]))
        );
        assert_eq!(
            validate_topology(3, [set(3, &[]), set(3, &[0, 1]), set(3, &[1, 2]), set(3, &[0, 1, 2])]).unwrap_err(),
            Error::NotClosedUnderIntersection(set(3, &[0, 1]), set(3, &[1, 2]))
        );
        assert!(matches!(validate_topology(3, [set(2, &[])]), Err(Error::UniverseMismatch { .. })));
    }

    #[test]
    fn canonical_order_and_dedup() {
        let t = validate_topology(2, [set(2, &[0, 1]), set(2, &[1]), set(2, &[]), set(2, &[1])]).unwrap();
        assert_eq!(t.opens(), &[set(2, &[]), set(2, &[1]), set(2, &[0, 1])]);
        assert_eq!(t, FiniteTopology::sierpinski());
    }

    #[test]
    fn closure_examples() {
        let s = FiniteTopology::sierpinski();
        assert_eq!(s.closure(set(2, &[1])), set(2, &[0, 1]));
        assert_eq!(four_point().closure(set(4, &[2])), closure_oracle(&four_point(), set(4, &[2])));
        assert_eq!(four_point().closure(set(4, &[2])), set(4, &[2, 3]));
        assert!(s.closure(PointSet::empty(2)).is_empty());
    }

    #[test]
    fn closure_matches_oracle_everywhere() {
        for t in [four_point(), chain3(), FiniteTopology::sierpinski(), FiniteTopology::indiscrete(3)] {
            for a in PointSet::all_subsets(t.len()) {
                assert_eq!(t.closure(a), closure_oracle(&t, a));
            }
        }
    }

    #[test]
    fn kernel_examples() {
        let s = FiniteTopology::sierpinski();
        assert_eq!(s.kernel(set(2, &[0])), set(2, &[0, 1]));
        assert_eq!(s.kernel(set(2, &[1])), set(2, &[1]));
        assert_eq!(four_point().kernel(set(4, &[3])), PointSet::full(4));
    }

    #[test]
    fn lambda_closure_examples() {
        let c = chain3();
        assert_eq!(c.lambda_closure(set(3, &[0, 2])), PointSet::full(3));
        assert_eq!(c.lambda_closure(set(3, &[2])), set(3, &[2]));
        assert_eq!(c.lambda_closure(PointSet::full(3)), PointSet::full(3));
    }

    #[test]
    fn shell_examples() {
        assert_eq!(FiniteTopology::sierpinski().shell(set(2, &[1])), set(2, &[0]));
        assert_eq!(chain3().shell(set(3, &[2])), set(3, &[0, 1]));
        assert!(chain3().shell(set(3, &[0, 1])).is_empty());
    }

    #[test]
    fn specialization_examples() {
        let s = FiniteTopology::sierpinski().specialization();
        assert!(s.leq(0, 1) && !s.leq(1, 0));
        assert_eq!(FiniteTopology::indiscrete(2).specialization(), Preorder::indiscrete(2));
        assert_eq!(FiniteTopology::discrete(4).specialization(), Preorder::discrete(4));
    }

    #[test]
    fn alexandrov_examples() {
        assert_eq!(FiniteTopology::discrete(3).opens().len(), 8);
        assert_eq!(alexandrov(&Preorder::chain(2)), FiniteTopology::sierpinski());
        assert_eq!(alexandrov(&Preorder::indiscrete(2)), FiniteTopology::indiscrete(2));
        assert_eq!(alexandrov(&Preorder::discrete(0)).opens().len(), 1);
    }

    #[test]
    fn class_space_examples() {
        let (q, map) = class_space(&FiniteTopology::indiscrete(2));
        assert_eq!(q.len(), 1);
        assert_eq!(map, vec![0, 0]);

        let (q, map) = class_space(&four_point());
        assert_eq!(map, vec![0, 0, 1, 2]);
        let order = q.specialization();
        // d < {a,b} and d < c
        assert!(order.lt(2, 0) && order.lt(2, 1));
        assert!(!order.comparable(0, 1));

        let (q, map) = class_space(&chain3());
        assert_eq!(q, chain3());
        assert_eq!(map, vec![0, 1, 2]);
    }

    #[test]
    fn class_closure_preimage() {
        let t = four_point();
        let (q, map) = class_space(&t);
        for x in 0..4 {
            let cl = q.point_closure(map[x]);
            let pre = (0..4).filter(|&y| cl.contains(map[y])).fold(PointSet::empty(4), |a, y| a.with(y));
            assert_eq!(pre, t.point_closure(x));
        }
    }

    #[test]
    fn disjoint_union_examples() {
        let u = disjoint_union(&[FiniteTopology::sierpinski(), FiniteTopology::discrete(1)]);
        assert_eq!(u.len(), 3);
        let o = u.specialization();
        assert!(o.lt(0, 1));
        assert!(!o.comparable(2, 0) && !o.comparable(2, 1));

        let s = FiniteTopology::sierpinski();
        assert_eq!(disjoint_union(std::slice::from_ref(&s)), s);
        assert_eq!(
            disjoint_union(&[FiniteTopology::discrete(1), FiniteTopology::discrete(1)]),
            FiniteTopology::discrete(2)
        );
        assert_eq!(disjoint_union(&[]), FiniteTopology::discrete(0));
    }
}
