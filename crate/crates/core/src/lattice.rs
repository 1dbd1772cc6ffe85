//! Lattices over a base poset: join/meet tables, distributivity, the
//! Birkhoff correspondence, and the strong/Boolean antichain criteria.

use crate::enumerate::{grow_classes, join_in, meet_in, GrowthMode};
use crate::poset::{Poset, PosetError, Subset};
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("not a lattice{}", witness_str(.witness))]
    NotALattice { witness: Option<(String, String)> },
    #[error("elements {0:?} and {1:?} are comparable, not an antichain")]
    NotAnAntichain(String, String),
    #[error("element {0:?} is not an element of the lattice")]
    NoSuchElement(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error(transparent)]
    Poset(#[from] PosetError),
}

fn witness_str(w: &Option<(String, String)>) -> String {
    match w {
        Some((a, b)) => format!(": pair ({a}, {b}) has no unique bound"),
        None => String::new(),
    }
}

/// A finite lattice: a poset with total join/meet tables, minimum `m` and
/// maximum `M`.
#[derive(Debug, Clone)]
pub struct Lattice {
    poset: Arc<Poset>,
    join: Vec<usize>,
    meet: Vec<usize>,
    bottom: usize,
    top: usize,
}

impl Lattice {
    /// Builds the join/meet tables, or reports a pair without a unique least
    /// upper or greatest lower bound.
    pub fn from_poset(poset: Arc<Poset>) -> Result<Lattice, LatticeError> {
        let n = poset.n();
        if n == 0 {
            return Err(LatticeError::NotALattice { witness: None });
        }
        let mut join = vec![0usize; n * n];
        let mut meet = vec![0usize; n * n];
        for x in 0..n {
            for y in x..n {
                let j = join_in(&poset, x, y).ok_or_else(|| LatticeError::NotALattice {
                    witness: Some((poset.name(x).into(), poset.name(y).into())),
                })?;
                let m = meet_in(&poset, x, y).ok_or_else(|| LatticeError::NotALattice {
                    witness: Some((poset.name(x).into(), poset.name(y).into())),
                })?;
                join[x * n + y] = j;
                join[y * n + x] = j;
                meet[x * n + y] = m;
                meet[y * n + x] = m;
            }
        }
        // topological indexing puts the minimum first and the maximum last
        let bottom = 0;
        let top = n - 1;
        debug_assert!((0..n).all(|x| poset.leq(bottom, x) && poset.leq(x, top)));
        Ok(Lattice { poset, join, meet, bottom, top })
    }

    pub fn poset(&self) -> &Arc<Poset> {
        &self.poset
    }

    pub fn n(&self) -> usize {
        self.poset.n()
    }

    pub fn name(&self, x: usize) -> &str {
        self.poset.name(x)
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join[x * self.n() + y]
    }

    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet[x * self.n() + y]
    }

    /// Iterated join; the empty join is the minimum.
    pub fn join_of_subset(&self, s: Subset) -> usize {
        s.iter().fold(self.bottom, |a, x| self.join(a, x))
    }

    /// Iterated meet; the empty meet is the maximum.
    pub fn meet_of_subset(&self, s: Subset) -> usize {
        s.iter().fold(self.top, |a, x| self.meet(a, x))
    }

    /// First triple violating `(x ∧ y) ∨ z = (x ∨ z) ∧ (y ∨ z)`, if any.
    pub fn distributivity_witness(&self) -> Option<(usize, usize, usize)> {
        let n = self.n();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let lhs = self.join(self.meet(x, y), z);
                    let rhs = self.meet(self.join(x, z), self.join(y, z));
                    if lhs != rhs {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    pub fn is_distributive(&self) -> bool {
        self.distributivity_witness().is_none()
    }

    pub fn join_irreducible_mask(&self) -> Subset {
        let n = self.n();
        Subset::from_iter((0..n).filter(|&y| {
            y != self.bottom
                && (0..n).all(|a| {
                    (0..n).all(|b| self.join(a, b) != y || a == y || b == y)
                })
        }))
    }

    /// The induced subposet of join-irreducible elements.
    pub fn join_irreducibles(&self) -> Poset {
        self.poset.induced(self.join_irreducible_mask())
    }

    pub fn antichain(&self, elems: &[usize]) -> Result<Antichain, LatticeError> {
        let mut sorted = elems.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        for (i, &x) in sorted.iter().enumerate() {
            if x >= self.n() {
                return Err(LatticeError::NoSuchElement(x.to_string()));
            }
            for &y in &sorted[i + 1..] {
                if self.poset.comparable(x, y) {
                    return Err(LatticeError::NotAnAntichain(
                        self.name(x).into(),
                        self.name(y).into(),
                    ));
                }
            }
        }
        Ok(Antichain { elems: sorted })
    }

    pub fn antichain_from_subset(&self, s: Subset) -> Result<Antichain, LatticeError> {
        self.antichain(&s.iter().collect::<Vec<_>>())
    }

    /// First pair of subsets with `∨S ≤ ∨S'` but `S ⊄ S'`, if any.
    pub fn strong_witness(&self, c: &Antichain) -> Option<(Subset, Subset)> {
        let l = c.len();
        for sm in 0..1u64 << l {
            let s = c.expand(sm);
            let js = self.join_of_subset(s);
            for tm in 0..1u64 << l {
                if sm & !tm == 0 {
                    continue; // S ⊆ S'
                }
                let t = c.expand(tm);
                if self.poset.leq(js, self.join_of_subset(t)) {
                    return Some((s, t));
                }
            }
        }
        None
    }

    pub fn is_strong_antichain(&self, c: &Antichain) -> bool {
        self.strong_witness(c).is_none()
    }

    /// First pair of subsets with `∨S ∧ ∨S' ≠ ∨(S ∩ S')`, if any. The result
    /// is cross-validated against the equivalent local criterion
    /// `∨S = ∧_{x ∈ C∖S} ∨(S ∪ {x})` over all `S` with `|S| ≤ |C| - 2`; a
    /// disagreement is an implementation bug, not a property of the input.
    pub fn boolean_witness(&self, c: &Antichain) -> Result<Option<(Subset, Subset)>, LatticeError> {
        let l = c.len();
        let mut witness = None;
        'outer: for sm in 0..1u64 << l {
            let s = c.expand(sm);
            let js = self.join_of_subset(s);
            for tm in 0..1u64 << l {
                let t = c.expand(tm);
                let lhs = self.meet(js, self.join_of_subset(t));
                let rhs = self.join_of_subset(s.inter(t));
                if lhs != rhs {
                    witness = Some((s, t));
                    break 'outer;
                }
            }
        }
        // local reformulation
        let mut local_ok = true;
        if l >= 2 {
            'sets: for sm in 0..1u64 << l {
                if (sm as u64).count_ones() as usize > l - 2 {
                    continue;
                }
                let s = c.expand(sm);
                let js = self.join_of_subset(s);
                let mut acc = self.top;
                for x in c.subset().minus(s).iter() {
                    acc = self.meet(acc, self.join_of_subset(s.with(x)));
                }
                if js != acc {
                    local_ok = false;
                    break 'sets;
                }
            }
        }
        if witness.is_none() != local_ok {
            return Err(LatticeError::InternalInconsistency(format!(
                "Boolean antichain criteria disagree on C={:?}",
                c.elems
            )));
        }
        Ok(witness)
    }

    pub fn is_boolean_antichain(&self, c: &Antichain) -> Result<bool, LatticeError> {
        Ok(self.boolean_witness(c)?.is_none())
    }

    /// Minimal elements outside the interval `[m, x]`; empty iff `x` is the
    /// maximum. This is the antichain whose module is the injective `I(x)`.
    pub fn antichain_of_injective(&self, x: usize) -> Antichain {
        let outside = Subset::full(self.n()).minus(self.poset.down_set(x));
        let min = self.poset.minimal_of(outside);
        Antichain { elems: min.iter().collect() }
    }

    /// Distributive with join-irreducibles a disjoint union of chains, i.e.
    /// isomorphic to the divisors of some natural number.
    pub fn is_divisor_lattice(&self) -> bool {
        self.is_distributive() && self.join_irreducibles().is_disjoint_union_of_chains()
    }

    /// Whether every cover `a ⋖ b` satisfies `|cov(a)| >= |cov(b)|`.
    pub fn cover_monotone(&self) -> bool {
        self.poset
            .covers()
            .iter()
            .all(|&(a, b)| self.poset.upper_covers(a).len() >= self.poset.upper_covers(b).len())
    }

    pub fn opposite(&self) -> Lattice {
        Lattice::from_poset(Arc::new(self.poset.opposite()))
            .expect("opposite of a lattice is a lattice")
    }

    /// All nonempty-or-empty antichains of the base poset, as `Antichain`s.
    pub fn all_antichains(&self) -> Vec<Antichain> {
        self.poset
            .all_antichains()
            .into_iter()
            .map(|s| Antichain { elems: s.iter().collect() })
            .collect()
    }
}

/// An antichain of a lattice with the fixed ascending-index ordering used
/// for boundary signs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Antichain {
    elems: Vec<usize>,
}

impl Antichain {
    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn elems(&self) -> &[usize] {
        &self.elems
    }

    pub fn subset(&self) -> Subset {
        Subset::from_iter(self.elems.iter().copied())
    }

    /// Maps a bitmask over positions 0..len to the corresponding element set.
    pub fn expand(&self, position_mask: u64) -> Subset {
        Subset::from_iter(
            self.elems
                .iter()
                .enumerate()
                .filter(|&(k, _)| position_mask >> k & 1 == 1)
                .map(|(_, &x)| x),
        )
    }
}

/// The distributive lattice of order ideals of a poset, ordered by
/// inclusion; elements are named by their member sets.
pub fn order_ideal_lattice(p: &Poset) -> Lattice {
    let ideals = p.all_order_ideals();
    let names: Vec<String> = ideals.iter().map(|&s| p.subset_names(s)).collect();
    let up: Vec<Subset> = ideals
        .iter()
        .map(|&i| {
            Subset::from_iter(
                ideals
                    .iter()
                    .enumerate()
                    .filter(|&(_, &j)| i.is_subset_of(j))
                    .map(|(k, _)| k),
            )
        })
        .collect();
    let poset = Poset::from_up_masks(names, up);
    Lattice::from_poset(Arc::new(poset)).expect("ideal lattice is a lattice")
}

/// One representative per lattice isomorphism class with `n` elements.
pub fn enumerate_lattices(n: usize, cap: usize) -> Result<Vec<Lattice>, LatticeError> {
    if n > cap {
        return Err(PosetError::SizeCapExceeded { n, cap }.into());
    }
    Ok(grow_classes(n, GrowthMode::MeetSemilattices)
        .into_iter()
        .filter_map(|p| Lattice::from_poset(Arc::new(p)).ok())
        .collect())
}
