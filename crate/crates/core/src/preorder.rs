//! Reflexive transitive relations on a finite point set and their T0-quotient.

use std::fmt;

use crate::error::Error;
use crate::pointset::{PointSet, MAX_POINTS};

/// A preorder stored as bitmask rows: `up[x]` is `{y | x <= y}` and `down[x]` is `{y | y <= x}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Preorder {
    n: usize,
    up: Vec<u64>,
    down: Vec<u64>,
}

impl Preorder {
    /// The identity relation (discrete order).
    pub fn discrete(n: usize) -> Self {
        let rows: Vec<u64> = (0..n).map(|x| 1 << x).collect();
        Preorder { n, up: rows.clone(), down: rows }
    }

    /// The total relation (one class).
    pub fn indiscrete(n: usize) -> Self {
        let full = crate::pointset::full_mask(n);
        Preorder { n, up: vec![full; n], down: vec![full; n] }
    }

    /// The chain `0 < 1 < .. < n-1`.
    pub fn chain(n: usize) -> Self {
        Self::closure_of(n, (1..n).map(|i| (i - 1, i))).expect("indices in range")
    }

    /// Builds a preorder from upset rows, rejecting relations that are not reflexive
    /// or not transitive.
    pub fn from_up_rows(n: usize, up: Vec<u64>) -> Result<Self, Error> {
        if n > MAX_POINTS {
            return Err(Error::TooManyPoints(n));
        }
        assert_eq!(up.len(), n);
        let full = crate::pointset::full_mask(n);
        for (x, &row) in up.iter().enumerate() {
            if row & !full != 0 {
                return Err(Error::PointOutOfRange { point: (64 - row.leading_zeros() - 1) as usize, n });
            }
            if row >> x & 1 == 0 {
                return Err(Error::NotReflexive(x));
            }
        }
        for x in 0..n {
            for y in PointSet::from_bits(n, up[x]).unwrap() {
                if up[y] & !up[x] != 0 {
                    let z = (up[y] & !up[x]).trailing_zeros() as usize;
                    return Err(Error::NotTransitive(x, y, z));
                }
            }
        }
        Ok(Self::from_up_rows_unchecked(n, up))
    }

    pub(crate) fn from_up_rows_unchecked(n: usize, up: Vec<u64>) -> Self {
        let mut down = vec![0u64; n];
        for (x, &row) in up.iter().enumerate() {
            let mut r = row;
            while r != 0 {
                let y = r.trailing_zeros() as usize;
                r &= r - 1;
                down[y] |= 1 << x;
            }
        }
        Preorder { n, up, down }
    }

    /// Reflexive-transitive closure of the given pairs `(x, y)` meaning `x <= y`.
    pub fn closure_of<I>(n: usize, pairs: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n > MAX_POINTS {
            return Err(Error::TooManyPoints(n));
        }
        let mut up: Vec<u64> = (0..n).map(|x| 1 << x).collect();
        for (x, y) in pairs {
            for p in [x, y] {
                if p >= n {
                    return Err(Error::PointOutOfRange { point: p, n });
                }
            }
            up[x] |= 1 << y;
        }
        // Warshall over bitmask rows.
        for k in 0..n {
            let row_k = up[k];
            for row in up.iter_mut() {
                if *row >> k & 1 == 1 {
                    *row |= row_k;
                }
            }
        }
        Ok(Self::from_up_rows_unchecked(n, up))
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x] >> y & 1 == 1
    }

    /// Class-strict order: `x <= y` and not `y <= x`.
    #[inline]
    pub fn lt(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) && !self.leq(y, x)
    }

    #[inline]
    pub fn equivalent(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) && self.leq(y, x)
    }

    #[inline]
    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    #[inline]
    pub fn up_row(&self, x: usize) -> PointSet {
        PointSet::from_bits(self.n, self.up[x]).unwrap()
    }

    #[inline]
    pub fn down_row(&self, x: usize) -> PointSet {
        PointSet::from_bits(self.n, self.down[x]).unwrap()
    }

    pub fn points(&self) -> PointSet {
        PointSet::full(self.n)
    }

    pub fn is_partial_order(&self) -> bool {
        (0..self.n).all(|x| self.up[x] & self.down[x] == 1 << x)
    }

    /// Matrix encoding: bit `x * n + y` is set iff `x <= y`. Used as the canonical
    /// integer key for witness minimality.
    pub fn encoding(&self) -> u64 {
        assert!(self.n <= 8, "matrix encoding only defined for n <= 8");
        let mut code = 0u64;
        for x in 0..self.n {
            code |= self.up[x] << (x * self.n);
        }
        code
    }

    /// Iterator over all related pairs `(x, y)` with `x <= y`.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |x| self.up_row(x).iter().map(move |y| (x, y)))
    }

    /// The induced preorder on `keep`, relabelled in ascending order.
    pub fn restrict(&self, keep: PointSet) -> (Preorder, Vec<usize>) {
        let old: Vec<usize> = keep.to_vec();
        let m = old.len();
        let up = old
            .iter()
            .map(|&x| old.iter().enumerate().filter(|&(_, &y)| self.leq(x, y)).fold(0u64, |acc, (j, _)| acc | 1 << j))
            .collect();
        (Self::from_up_rows_unchecked(m, up), old)
    }

    /// The T0-quotient.
    pub fn class_poset(&self) -> ClassPoset {
        ClassPoset::of(self)
    }
}

impl fmt::Debug for Preorder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Preorder({}; ", self.n)?;
        let mut first = true;
        for (x, y) in self.pairs().filter(|(x, y)| x != y) {
            if !first {
                write!(f, ", ")?;
            }
            first = false;
            write!(f, "{x}<={y}")?;
        }
        write!(f, ")")
    }
}

/// Classes of a preorder together with the induced partial order on class ids.
///
/// Class ids are assigned in order of each class's least member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassPoset {
    classes: Vec<PointSet>,
    class_of: Vec<usize>,
    order: Preorder,
}

impl ClassPoset {
    fn of(pre: &Preorder) -> Self {
        let n = pre.len();
        let mut class_of = vec![usize::MAX; n];
        let mut classes = Vec::new();
        for x in 0..n {
            if class_of[x] != usize::MAX {
                continue;
            }
            let cls = pre.up_row(x) & pre.down_row(x);
            for y in cls {
                class_of[y] = classes.len();
            }
            classes.push(cls);
        }
        let k = classes.len();
        let up = classes
            .iter()
            .map(|c| {
                let rep = c.first().unwrap();
                (0..k).filter(|&j| pre.leq(rep, classes[j].first().unwrap())).fold(0u64, |acc, j| acc | 1 << j)
            })
            .collect();
        let order = Preorder::from_up_rows_unchecked(k, up);
        debug_assert!(order.is_partial_order());
        ClassPoset { classes, class_of, order }
    }

    pub fn classes(&self) -> &[PointSet] {
        &self.classes
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn mapping(&self) -> &[usize] {
        &self.class_of
    }

    /// Partial order on class ids.
    pub fn order(&self) -> &Preorder {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Union of the given classes as a subset of the original points.
    pub fn preimage(&self, class_ids: PointSet) -> PointSet {
        let n = self.class_of.len();
        class_ids.iter().fold(PointSet::empty(n), |acc, c| acc | self.classes[c])
    }

    /// Set of class ids meeting `a`.
    pub fn image(&self, a: PointSet) -> PointSet {
        a.iter().fold(PointSet::empty(self.len()), |acc, x| acc.with(self.class_of[x]))
    }

    /// Covering pairs `(lower, upper)` of the class order.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let o = &self.order;
        let k = self.len();
        let mut out = Vec::new();
        for a in 0..k {
            for b in 0..k {
                if o.lt(a, b) && !(0..k).any(|c| o.lt(a, c) && o.lt(c, b)) {
                    out.push((a, b));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_of_covering_pairs() {
        let p = Preorder::closure_of(3, [(0, 1), (1, 2)]).unwrap();
        assert!(p.leq(0, 2));
        assert!(!p.leq(2, 0));
        assert_eq!(p, Preorder::chain(3));
    }

    #[test]
    fn rejects_non_transitive_rows() {
        // 0 <= 1, 1 <= 2 but not 0 <= 2
        let err = Preorder::from_up_rows(3, vec![0b011, 0b110, 0b100]).unwrap_err();
        assert_eq!(err, Error::NotTransitive(0, 1, 2));
        let err = Preorder::from_up_rows(2, vec![0b10, 0b10]).unwrap_err();
        assert_eq!(err, Error::NotReflexive(0));
    }

    #[test]
    fn class_poset_of_doubled_middle() {
        // 0 < {1,2} < 3
        let p = Preorder::closure_of(4, [(0, 1), (1, 2), (2, 1), (2, 3)]).unwrap();
        let cp = p.class_poset();
        assert_eq!(cp.len(), 3);
        assert_eq!(cp.classes()[1], PointSet::from_indices(4, [1, 2]));
        assert_eq!(cp.class_of(2), 1);
        assert!(cp.order().lt(0, 2));
        assert_eq!(cp.covers(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn restrict_relabels() {
        let p = Preorder::chain(4);
        let (r, map) = p.restrict(PointSet::from_indices(4, [1, 3]));
        assert_eq!(map, vec![1, 3]);
        assert_eq!(r, Preorder::chain(2));
    }

    #[test]
    fn encoding_is_row_major() {
        let p = Preorder::chain(2);
        // rows: 0 -> {0,1} = 0b11, 1 -> {1} = 0b10 shifted by 2
        assert_eq!(p.encoding(), 0b10_11);
    }
}
