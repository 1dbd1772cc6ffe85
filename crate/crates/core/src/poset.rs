//! Finite posets: construction from Hasse data, order ideals, antichains,
//! and the little predicates the lattice-theoretic criteria are built from.
//!
//! Elements are indexed `0..n` in a topological order (`x <= y` implies
//! `index(x) <= index(y)`); `n <= 64` so element subsets are single-word
//! bitmasks.

use std::fmt;
use thiserror::Error;

pub const MAX_ELEMENTS: usize = 64;

/// Default isomorphism-class enumeration caps; the CLI can override them.
pub const DEFAULT_POSET_CAP: usize = 7;
pub const DEFAULT_LATTICE_CAP: usize = 8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PosetError {
    #[error("cover relations contain a cycle through {0:?}")]
    CycleDetected(String),
    #[error("unknown element label {0:?}")]
    UnknownLabel(String),
    #[error("duplicate element label {0:?}")]
    DuplicateLabel(String),
    #[error("poset has {0} elements, maximum supported is {MAX_ELEMENTS}")]
    TooManyElements(usize),
    #[error("size {n} exceeds the enumeration cap {cap}")]
    SizeCapExceeded { n: usize, cap: usize },
}

/// A subset of the elements of a poset, as a bitmask over `0..n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Subset(pub u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn full(n: usize) -> Subset {
        debug_assert!(n <= MAX_ELEMENTS);
        if n == 64 {
            Subset(u64::MAX)
        } else {
            Subset((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Subset {
        Subset(1u64 << i)
    }

    pub fn from_iter(it: impl IntoIterator<Item = usize>) -> Subset {
        let mut s = Subset::EMPTY;
        for i in it {
            s = s.with(i);
        }
        s
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn with(self, i: usize) -> Subset {
        Subset(self.0 | 1 << i)
    }

    pub fn without(self, i: usize) -> Subset {
        Subset(self.0 & !(1 << i))
    }

    pub fn union(self, o: Subset) -> Subset {
        Subset(self.0 | o.0)
    }

    pub fn inter(self, o: Subset) -> Subset {
        Subset(self.0 & o.0)
    }

    pub fn minus(self, o: Subset) -> Subset {
        Subset(self.0 & !o.0)
    }

    pub fn is_subset_of(self, o: Subset) -> bool {
        self.0 & !o.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i)
            }
        })
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

/// A finite poset with elements in topological order.
#[derive(Clone, PartialEq, Eq)]
pub struct Poset {
    names: Vec<String>,
    /// up[x] = { y : x <= y }, including x.
    up: Vec<Subset>,
    /// down[x] = { y : y <= x }, including x.
    down: Vec<Subset>,
    /// Transitive reduction, sorted by (x, y).
    covers: Vec<(usize, usize)>,
    up_covers: Vec<Subset>,
    down_covers: Vec<Subset>,
}

impl Poset {
    /// Builds a poset from element labels and cover (or any generating)
    /// relations. Duplicate edges are tolerated, non-reduced input is
    /// re-reduced, and elements are re-indexed topologically while keeping
    /// their labels.
    pub fn from_covers<S: AsRef<str>>(
        names: &[S],
        covers: &[(S, S)],
    ) -> Result<Poset, PosetError> {
        let n = names.len();
        if n > MAX_ELEMENTS {
            return Err(PosetError::TooManyElements(n));
        }
        let labels: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, a) in labels.iter().enumerate() {
            if labels[..i].contains(a) {
                return Err(PosetError::DuplicateLabel(a.clone()));
            }
        }
        let index_of = |l: &str| -> Result<usize, PosetError> {
            labels
                .iter()
                .position(|x| x == l)
                .ok_or_else(|| PosetError::UnknownLabel(l.to_string()))
        };
        let mut edges = Vec::new();
        for (a, b) in covers {
            let e = (index_of(a.as_ref())?, index_of(b.as_ref())?);
            if !edges.contains(&e) {
                edges.push(e);
            }
        }
        Poset::from_edges(labels, &edges)
    }

    /// Same as `from_covers` but with element indices instead of labels.
    pub fn from_cover_indices<S: AsRef<str>>(
        names: &[S],
        covers: &[(usize, usize)],
    ) -> Result<Poset, PosetError> {
        let labels: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, a) in labels.iter().enumerate() {
            if labels[..i].contains(a) {
                return Err(PosetError::DuplicateLabel(a.clone()));
            }
        }
        let mut edges = Vec::new();
        for &(a, b) in covers {
            assert!(a < labels.len() && b < labels.len(), "cover index out of range");
            if !edges.contains(&(a, b)) {
                edges.push((a, b));
            }
        }
        Poset::from_edges(labels, &edges)
    }

    fn from_edges(labels: Vec<String>, edges: &[(usize, usize)]) -> Result<Poset, PosetError> {
        let n = labels.len();
        // Topological order by Kahn's algorithm, picking the least original
        // index first so re-labelling is deterministic.
        let mut order = Vec::with_capacity(n);
        let mut placed = vec![false; n];
        while order.len() < n {
            let mut advanced = false;
            for v in 0..n {
                if placed[v] {
                    continue;
                }
                if edges.iter().all(|&(a, b)| b != v || placed[a]) {
                    placed[v] = true;
                    order.push(v);
                    advanced = true;
                    break;
                }
            }
            if !advanced {
                let stuck = (0..n).find(|v| !placed[*v]).unwrap();
                return Err(PosetError::CycleDetected(labels[stuck].clone()));
            }
        }
        // new index of original element v
        let mut new_idx = vec![0usize; n];
        for (pos, &v) in order.iter().enumerate() {
            new_idx[v] = pos;
        }
        let names: Vec<String> = order.iter().map(|&v| labels[v].clone()).collect();
        // Reflexive-transitive closure on the re-indexed edges.
        let mut up = vec![Subset::EMPTY; n];
        for x in (0..n).rev() {
            let mut s = Subset::singleton(x);
            for &(a, b) in edges {
                if new_idx[a] == x {
                    s = s.union(up[new_idx[b]]);
                }
            }
            up[x] = s;
        }
        if (0..n).any(|x| {
            up[x]
                .iter()
                .any(|y| y != x && up[y].contains(x))
        }) {
            // only possible if edges relate equal-index elements after a cycle slipped through
            return Err(PosetError::CycleDetected(names[0].clone()));
        }
        Ok(Poset::from_up_masks(names, up))
    }

    /// Internal constructor from a closed order relation in topological index
    /// order. `up[x]` must contain `x`, be transitively closed, and satisfy
    /// `x <= y => x's index <= y's index`.
    pub(crate) fn from_up_masks(names: Vec<String>, up: Vec<Subset>) -> Poset {
        let n = names.len();
        debug_assert!((0..n).all(|x| up[x].contains(x)));
        let mut down = vec![Subset::EMPTY; n];
        for x in 0..n {
            for y in up[x].iter() {
                down[y] = down[y].with(x);
            }
        }
        // Transitive reduction: x covered by y iff x < y and no z strictly between.
        let mut covers = Vec::new();
        let mut up_covers = vec![Subset::EMPTY; n];
        let mut down_covers = vec![Subset::EMPTY; n];
        for x in 0..n {
            for y in up[x].iter() {
                if y == x {
                    continue;
                }
                let between = up[x].inter(down[y]).without(x).without(y);
                if between.is_empty() {
                    covers.push((x, y));
                    up_covers[x] = up_covers[x].with(y);
                    down_covers[y] = down_covers[y].with(x);
                }
            }
        }
        covers.sort_unstable();
        Poset { names, up, down, covers, up_covers, down_covers }
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.names.iter().position(|n| n == label)
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    pub fn up_set(&self, x: usize) -> Subset {
        self.up[x]
    }

    pub fn down_set(&self, x: usize) -> Subset {
        self.down[x]
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn upper_covers(&self, x: usize) -> Subset {
        self.up_covers[x]
    }

    pub fn lower_covers(&self, x: usize) -> Subset {
        self.down_covers[x]
    }

    pub fn maximal_elements(&self) -> Subset {
        Subset::from_iter((0..self.n()).filter(|&x| self.up_covers[x].is_empty()))
    }

    pub fn minimal_elements(&self) -> Subset {
        Subset::from_iter((0..self.n()).filter(|&x| self.down_covers[x].is_empty()))
    }

    /// Minimal elements of an arbitrary subset.
    pub fn minimal_of(&self, s: Subset) -> Subset {
        Subset::from_iter(s.iter().filter(|&x| s.inter(self.down[x]).without(x).is_empty()))
    }

    /// Length of the longest chain below each element (height 0 = minimal).
    pub fn heights(&self) -> Vec<usize> {
        let mut h = vec![0usize; self.n()];
        for y in 0..self.n() {
            for x in self.down_covers[y].iter() {
                h[y] = h[y].max(h[x] + 1);
            }
        }
        h
    }

    /// Downward closure of a subset.
    pub fn order_ideal_generated(&self, a: Subset) -> Subset {
        let mut s = Subset::EMPTY;
        for x in a.iter() {
            s = s.union(self.down[x]);
        }
        s
    }

    pub fn is_order_ideal(&self, s: Subset) -> bool {
        s.iter().all(|x| self.down[x].is_subset_of(s))
    }

    /// Every downward-closed subset, sorted by (cardinality, bitmask).
    ///
    /// Because indices are topological, ideals of the length-k prefix extend
    /// element by element, so this runs in O(#ideals * n).
    pub fn all_order_ideals(&self) -> Vec<Subset> {
        let mut ideals = vec![Subset::EMPTY];
        for k in 0..self.n() {
            let need = self.down[k].without(k);
            let mut next = Vec::with_capacity(ideals.len() * 2);
            for &i in &ideals {
                next.push(i);
                if need.is_subset_of(i) {
                    next.push(i.with(k));
                }
            }
            ideals = next;
        }
        ideals.sort_unstable_by_key(|s| (s.len(), s.0));
        ideals
    }

    pub fn is_antichain(&self, s: Subset) -> bool {
        let elems: Vec<usize> = s.iter().collect();
        for (i, &x) in elems.iter().enumerate() {
            for &y in &elems[i + 1..] {
                if self.comparable(x, y) {
                    return false;
                }
            }
        }
        true
    }

    /// All pairwise-incomparable subsets (including the empty one), sorted by
    /// (cardinality, bitmask). Count equals the number of order ideals.
    pub fn all_antichains(&self) -> Vec<Subset> {
        let mut out = Vec::new();
        // incomp[x] = elements > x in index that are incomparable to x
        let n = self.n();
        let incomp: Vec<Subset> = (0..n)
            .map(|x| {
                Subset::from_iter((x + 1..n).filter(|&y| !self.comparable(x, y)))
            })
            .collect();
        fn rec(cur: Subset, candidates: Subset, incomp: &[Subset], out: &mut Vec<Subset>) {
            out.push(cur);
            for x in candidates.iter() {
                let rest = candidates.inter(incomp[x]);
                rec(cur.with(x), rest, incomp, out);
            }
        }
        rec(Subset::EMPTY, Subset::full(n), &incomp, &mut out);
        out.sort_unstable_by_key(|s| (s.len(), s.0));
        out
    }

    /// Maximal elements of the ideal generated; inverse of the ideal/antichain
    /// bijection.
    pub fn maximal_of(&self, s: Subset) -> Subset {
        Subset::from_iter(s.iter().filter(|&x| s.inter(self.up[x]).without(x).is_empty()))
    }

    pub fn is_upward_linear(&self) -> bool {
        (0..self.n()).all(|x| self.up_covers[x].len() <= 1)
    }

    pub fn is_disjoint_union_of_chains(&self) -> bool {
        (0..self.n()).all(|x| self.up_covers[x].len() <= 1 && self.down_covers[x].len() <= 1)
    }

    /// The opposite poset. Element `x` becomes `n - 1 - x`, which keeps the
    /// index order topological; labels travel with their elements.
    pub fn opposite(&self) -> Poset {
        let n = self.n();
        let flip = |s: Subset| Subset::from_iter(s.iter().map(|i| n - 1 - i));
        let names = self.names.iter().rev().cloned().collect();
        let up = (0..n).map(|x| flip(self.down[n - 1 - x])).collect();
        Poset::from_up_masks(names, up)
    }

    /// Index of element `x` in `self.opposite()`.
    pub fn opposite_index(&self, x: usize) -> usize {
        self.n() - 1 - x
    }

    /// Induced subposet on a subset, in the inherited (topological) order.
    pub fn induced(&self, s: Subset) -> Poset {
        let elems: Vec<usize> = s.iter().collect();
        let names = elems.iter().map(|&x| self.names[x].clone()).collect();
        let up = elems
            .iter()
            .map(|&x| {
                Subset::from_iter(
                    elems
                        .iter()
                        .enumerate()
                        .filter(|&(_, &y)| self.leq(x, y))
                        .map(|(k, _)| k),
                )
            })
            .collect();
        Poset::from_up_masks(names, up)
    }

    /// Pretty subset with element names.
    pub fn subset_names(&self, s: Subset) -> String {
        let mut parts: Vec<&str> = s.iter().map(|x| self.name(x)).collect();
        parts.sort_unstable();
        format!("{{{}}}", parts.join(","))
    }
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poset({:?}; ", self.names)?;
        let cov: Vec<String> = self
            .covers
            .iter()
            .map(|&(a, b)| format!("{}<{}", self.names[a], self.names[b]))
            .collect();
        write!(f, "{})", cov.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin;

    #[test]
    fn two_chain_closure() {
        let p = Poset::from_covers(&["0", "1"], &[("0", "1")]).unwrap();
        let trues = (0..2)
            .flat_map(|x| (0..2).map(move |y| (x, y)))
            .filter(|&(x, y)| p.leq(x, y))
            .count();
        assert_eq!(trues, 3);
    }

    #[test]
    fn pentagon_covers() {
        let p = builtin::pentagon();
        assert_eq!(p.n(), 5);
        let top = p.index_of("5").unwrap();
        assert_eq!(p.lower_covers(top).len(), 2);
        let e3 = p.index_of("3").unwrap();
        let e4 = p.index_of("4").unwrap();
        assert_eq!(p.upper_covers(e3), Subset::singleton(e4));
    }

    #[test]
    fn cycle_detected() {
        let err = Poset::from_covers(&["0", "1"], &[("0", "1"), ("1", "0")]).unwrap_err();
        assert!(matches!(err, PosetError::CycleDetected(_)));
    }

    #[test]
    fn duplicate_edges_and_nonreduced_input_tolerated() {
        // (0,2) is implied by (0,1),(1,2); reduction must drop it.
        let p = Poset::from_covers(
            &["0", "1", "2"],
            &[("0", "1"), ("0", "1"), ("1", "2"), ("0", "2")],
        )
        .unwrap();
        assert_eq!(p.covers().len(), 2);
    }

    #[test]
    fn diamond_upper_covers() {
        let p = builtin::diamond();
        let m = p.index_of("1").unwrap();
        assert_eq!(p.upper_covers(m).len(), 2);
        let top = p.index_of("6").unwrap();
        assert!(p.upper_covers(top).is_empty());
    }

    #[test]
    fn ideal_generated_ul5() {
        let p = builtin::ul5();
        let e3 = p.index_of("3").unwrap();
        let gen = p.order_ideal_generated(Subset::singleton(e3));
        let expect = Subset::from_iter([p.index_of("2").unwrap(), e3]);
        assert_eq!(gen, expect);
        assert_eq!(p.order_ideal_generated(Subset::EMPTY), Subset::EMPTY);
        let all = p.order_ideal_generated(p.maximal_elements());
        assert_eq!(all, Subset::full(p.n()));
    }

    #[test]
    fn ideal_counts() {
        let chain2 = Poset::from_covers(&["a", "b"], &[("a", "b")]).unwrap();
        assert_eq!(chain2.all_order_ideals().len(), 3);
        let anti2 = Poset::from_covers::<&str>(&["a", "b"], &[]).unwrap();
        assert_eq!(anti2.all_order_ideals().len(), 4);
        assert_eq!(builtin::ul5().all_order_ideals().len(), 14);
    }

    #[test]
    fn antichain_counts_match_ideals() {
        let chain2 = Poset::from_covers(&["a", "b"], &[("a", "b")]).unwrap();
        assert_eq!(chain2.all_antichains().len(), 3);
        assert_eq!(builtin::ul5().all_antichains().len(), 14);
        let anti4 = Poset::from_covers::<&str>(&["a", "b", "c", "d"], &[]).unwrap();
        assert_eq!(anti4.all_antichains().len(), 16);
    }

    #[test]
    fn ideal_antichain_bijection() {
        let p = builtin::ul5();
        let ideals = p.all_order_ideals();
        let antichains = p.all_antichains();
        assert_eq!(ideals.len(), antichains.len());
        for &i in &ideals {
            let a = p.maximal_of(i);
            assert!(antichains.contains(&a));
            assert_eq!(p.order_ideal_generated(a), i);
        }
    }

    #[test]
    fn upward_linear_examples() {
        assert!(builtin::ul5().is_upward_linear());
        assert!(!builtin::diamond().is_upward_linear());
        let chains = Poset::from_covers(
            &["a", "b", "c", "d", "e"],
            &[("a", "b"), ("b", "c"), ("d", "e")],
        )
        .unwrap();
        assert!(chains.is_upward_linear());
        assert!(chains.is_disjoint_union_of_chains());
        assert!(!builtin::ul5().is_disjoint_union_of_chains());
        let anti = Poset::from_covers::<&str>(&["a", "b", "c"], &[]).unwrap();
        assert!(anti.is_disjoint_union_of_chains());
    }

    #[test]
    fn opposite_involution() {
        let p = builtin::ul5();
        let q = p.opposite().opposite();
        assert_eq!(p, q);
        let op = p.opposite();
        for x in 0..p.n() {
            for y in 0..p.n() {
                assert_eq!(p.leq(x, y), op.leq(p.opposite_index(y), p.opposite_index(x)));
            }
        }
    }
}
