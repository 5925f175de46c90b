//! Exhaustive enumeration of labeled finite topologies and the theorem harness.
//!
//! Topologies are produced from preorders: a preorder on `k + 1` points is a
//! preorder on the first `k` points plus a downset `D` and an upset `U` with
//! `D × U ⊆ ≤`, giving `d ≤ k` for `d ∈ D` and `k ≤ u` for `u ∈ U`. Each labeled
//! preorder arises exactly once, in a fixed depth-first order.

mod harness;

pub use harness::tau_f_counterexample;
pub use harness::{
    implication_matrix, theorem, theorems, verify, verify_all, Arity, Counterexample, Finding, ImplicationEntry, Kind,
    Status, TheoremId,
};

use rayon::prelude::*;

use crate::decomp::Decomposition;
use crate::error::Error;
use crate::preorder::Preorder;
use crate::topology::{alexandrov, FiniteTopology};

pub const MAX_ENUM_POINTS: usize = 7;
/// Largest size for the direct open-family search.
pub const MAX_DIRECT_POINTS: usize = 6;
/// Prefix depth used to split work between threads.
const SPLIT_DEPTH: usize = 4;

type Rows = [u64; MAX_ENUM_POINTS];

fn downsets_and_upsets(rows: &Rows, k: usize) -> (Vec<u64>, Vec<u64>) {
    let mut down = [0u64; MAX_ENUM_POINTS];
    for (x, &row) in rows.iter().enumerate().take(k) {
        let mut r = row;
        while r != 0 {
            let y = r.trailing_zeros() as usize;
            r &= r - 1;
            down[y] |= 1 << x;
        }
    }
    let mut downs = Vec::new();
    let mut ups = Vec::new();
    for s in 0..1u64 << k {
        let mut is_down = true;
        let mut is_up = true;
        let mut r = s;
        while r != 0 {
            let x = r.trailing_zeros() as usize;
            r &= r - 1;
            is_down &= down[x] & !s == 0;
            is_up &= rows[x] & !s == 0;
        }
        if is_down {
            downs.push(s);
        }
        if is_up {
            ups.push(s);
        }
    }
    (downs, ups)
}

/// All `(D, U)` extending a preorder on `k` points to `k + 1` points.
fn extensions(rows: &Rows, k: usize) -> Vec<(u64, u64)> {
    let (downs, ups) = downsets_and_upsets(rows, k);
    let mut out = Vec::new();
    for &d in &downs {
        // every member of D must lie below every member of U
        let mut common_up = u64::MAX;
        let mut r = d;
        while r != 0 {
            let x = r.trailing_zeros() as usize;
            r &= r - 1;
            common_up &= rows[x];
        }
        for &u in &ups {
            if u & !common_up == 0 {
                out.push((d, u));
            }
        }
    }
    out
}

fn extend(rows: &Rows, k: usize, (d, u): (u64, u64)) -> Rows {
    let mut next = *rows;
    next[k] = u | 1 << k;
    let mut r = d;
    while r != 0 {
        let x = r.trailing_zeros() as usize;
        r &= r - 1;
        next[x] |= 1 << k;
    }
    next
}

struct Frame {
    rows: Rows,
    k: usize,
    exts: Vec<(u64, u64)>,
    next: usize,
}

/// Depth-first stream of all preorders on `n` points extending a prefix.
pub struct Preorders {
    n: usize,
    stack: Vec<Frame>,
    pending: Option<Preorder>,
}

impl Preorders {
    fn from_prefix(n: usize, rows: Rows, k: usize) -> Self {
        if k == n {
            return Preorders { n, stack: Vec::new(), pending: Some(to_preorder(&rows, n)) };
        }
        let exts = extensions(&rows, k);
        Preorders { n, stack: vec![Frame { rows, k, exts, next: 0 }], pending: None }
    }
}

impl Iterator for Preorders {
    type Item = Preorder;

    fn next(&mut self) -> Option<Preorder> {
        if let Some(p) = self.pending.take() {
            return Some(p);
        }
        while let Some(f) = self.stack.last_mut() {
            if f.next == f.exts.len() {
                self.stack.pop();
                continue;
            }
            let e = f.exts[f.next];
            f.next += 1;
            let rows = extend(&f.rows, f.k, e);
            let k = f.k + 1;
            if k == self.n {
                return Some(to_preorder(&rows, self.n));
            }
            let exts = extensions(&rows, k);
            self.stack.push(Frame { rows, k, exts, next: 0 });
        }
        None
    }
}

fn to_preorder(rows: &Rows, n: usize) -> Preorder {
    Preorder::from_up_rows_unchecked(n, rows[..n].to_vec())
}

fn check_size(n: usize) -> Result<(), Error> {
    if n > MAX_ENUM_POINTS {
        Err(Error::SizeTooLarge(n))
    } else {
        Ok(())
    }
}

/// Every preorder on `n` points exactly once, in a fixed order.
pub fn enumerate_preorders(n: usize) -> Result<Preorders, Error> {
    check_size(n)?;
    Ok(Preorders::from_prefix(n, [0; MAX_ENUM_POINTS], 0))
}

/// Every labeled topology on `n` points exactly once, in preorder order.
pub fn enumerate_topologies(n: usize) -> Result<impl Iterator<Item = FiniteTopology>, Error> {
    Ok(enumerate_preorders(n)?.map(|p| alexandrov(&p)))
}

/// Independent subtrees covering all preorders on `n` points, in enumeration order.
pub fn subtrees(n: usize) -> Result<Vec<Preorders>, Error> {
    check_size(n)?;
    let depth = n.min(SPLIT_DEPTH);
    let mut prefixes = Vec::new();
    let mut stack = vec![([0u64; MAX_ENUM_POINTS], 0usize)];
    // depth-first with children pushed in reverse keeps enumeration order
    while let Some((rows, k)) = stack.pop() {
        if k == depth {
            prefixes.push(rows);
            continue;
        }
        for e in extensions(&rows, k).into_iter().rev() {
            stack.push((extend(&rows, k, e), k + 1));
        }
    }
    Ok(prefixes.into_iter().map(|rows| Preorders::from_prefix(n, rows, depth)).collect())
}

/// Applies `f` to every preorder on `n` points in parallel and returns the
/// results in enumeration order.
pub fn par_map_preorders<R, F>(n: usize, f: F) -> Result<Vec<R>, Error>
where
    R: Send,
    F: Fn(Preorder) -> R + Sync,
{
    let parts: Vec<Vec<R>> = subtrees(n)?.into_par_iter().map(|t| t.map(&f).collect()).collect();
    Ok(parts.into_iter().flatten().collect())
}

/// Number of labeled topologies on `n` points via preorder enumeration.
pub fn count_topologies(n: usize) -> Result<u64, Error> {
    Ok(subtrees(n)?.into_par_iter().map(|t| t.count() as u64).sum())
}

/// Membership code of an open family: bit `A` set iff subset `A` is open.
pub fn family_code(top: &FiniteTopology) -> u128 {
    top.family_code()
}

/// All topologies on `n` points found by a direct backtracking search over
/// subset families, as membership codes. Does not use preorders.
pub fn enumerate_topologies_direct(n: usize) -> Result<Vec<u128>, Error> {
    if n > MAX_DIRECT_POINTS {
        return Err(Error::SizeTooLarge(n));
    }
    let total = 1usize << n;
    let full = total - 1;
    let mut out = Vec::new();
    // Subsets are decided in ascending order. Intersections of a new member
    // with earlier members are smaller, hence already decided; unions are
    // larger and are recorded as forced.
    fn go(
        s: usize,
        total: usize,
        full: usize,
        included: u128,
        forced: u128,
        members: &mut Vec<usize>,
        out: &mut Vec<u128>,
    ) {
        if s == total {
            out.push(included);
            return;
        }
        let bit = 1u128 << s;
        let must = s == 0 || s == full || forced & bit != 0;
        // include s
        let mut ok = true;
        let mut new_forced = forced;
        for &t in members.iter() {
            if included & 1u128 << (s & t) == 0 {
                ok = false;
                break;
            }
            let u = s | t;
            if u != s {
                new_forced |= 1u128 << u;
            }
        }
        if ok {
            members.push(s);
            go(s + 1, total, full, included | bit, new_forced, members, out);
            members.pop();
        }
        if !must {
            go(s + 1, total, full, included, forced, members, out);
        }
    }
    let mut members = Vec::new();
    go(0, total, full, 0, 0, &mut members, &mut out);
    Ok(out)
}

/// Set partitions of `0..n` as restricted growth strings, in lexicographic order.
pub fn partitions(n: usize) -> impl Iterator<Item = Decomposition> {
    let mut current: Option<Vec<usize>> = Some(vec![0; n]);
    std::iter::from_fn(move || {
        let cur = current.take()?;
        // next restricted growth string
        let mut next = cur.clone();
        let mut i = n;
        let mut advanced = false;
        while i > 1 {
            i -= 1;
            let max_prefix = next[..i].iter().copied().max().unwrap_or(0);
            if next[i] <= max_prefix {
                next[i] += 1;
                for v in next.iter_mut().skip(i + 1) {
                    *v = 0;
                }
                advanced = true;
                break;
            }
        }
        if advanced {
            current = Some(next);
        }
        Some(Decomposition::from_labels(&cur))
    })
}

/// Least matrix encoding over all relabelings.
pub fn canonical_encoding(pre: &Preorder) -> u64 {
    let n = pre.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    permute(&mut perm, 0, &mut |p| {
        let mut code = 0u64;
        for x in 0..n {
            for y in 0..n {
                if pre.leq(x, y) {
                    code |= 1 << (p[x] * n + p[y]);
                }
            }
        }
        best = best.min(code);
    });
    best
}

fn permute(p: &mut Vec<usize>, i: usize, f: &mut dyn FnMut(&[usize])) {
    if i == p.len() {
        f(p);
        return;
    }
    for j in i..p.len() {
        p.swap(i, j);
        permute(p, i + 1, f);
        p.swap(i, j);
    }
}

/// One representative per homeomorphism class: the first member of each class
/// in enumeration order.
pub fn enumerate_up_to_isomorphism(n: usize) -> Result<Vec<FiniteTopology>, Error> {
    let coded = par_map_preorders(n, |p| (canonical_encoding(&p), p))?;
    let mut seen = std::collections::HashSet::new();
    Ok(coded.into_iter().filter(|(c, _)| seen.insert(*c)).map(|(_, p)| alexandrov(&p)).collect())
}
