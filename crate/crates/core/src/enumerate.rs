//! Exhaustive enumeration of posets up to isomorphism.
//!
//! Posets grow by adding a new maximal element whose strict down-set is an
//! order ideal of the smaller poset; since indices stay topological this
//! reaches every isomorphism class, and a canonical form deduplicates.
//! Restricting the intermediate states to meet-semilattices is sound for
//! lattice enumeration because every topological prefix of a lattice is an
//! order ideal of it, hence closed under meets.

use crate::iso::canonical_key;
use crate::poset::{Poset, PosetError, Subset};
use std::collections::HashSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GrowthMode {
    AllPosets,
    MeetSemilattices,
}

pub fn is_meet_semilattice(p: &Poset) -> bool {
    let n = p.n();
    for x in 0..n {
        for y in x + 1..n {
            if meet_in(p, x, y).is_none() {
                return false;
            }
        }
    }
    true
}

/// The greatest lower bound of a pair if it exists.
pub fn meet_in(p: &Poset, x: usize, y: usize) -> Option<usize> {
    let lb = p.down_set(x).inter(p.down_set(y));
    lb.iter().find(|&u| lb.is_subset_of(p.down_set(u)))
}

/// The least upper bound of a pair if it exists.
pub fn join_in(p: &Poset, x: usize, y: usize) -> Option<usize> {
    let ub = p.up_set(x).inter(p.up_set(y));
    ub.iter().find(|&u| ub.is_subset_of(p.up_set(u)))
}

fn extend_by_max_element(p: &Poset, ideal: Subset) -> Poset {
    let n = p.n();
    let mut names: Vec<String> = p.names().to_vec();
    names.push(fresh_name(&names, n));
    let mut up: Vec<Subset> = (0..n)
        .map(|x| {
            if ideal.contains(x) {
                p.up_set(x).with(n)
            } else {
                p.up_set(x)
            }
        })
        .collect();
    // elements above something in the ideal are also below the new maximum?
    // No: only the ideal itself lies below the new element. But closure needs
    // every x with x <= o for some o in the ideal -- ideals are downward
    // closed, so that is already the ideal.
    up.push(Subset::singleton(n));
    Poset::from_up_masks(names, up)
}

fn fresh_name(names: &[String], seed: usize) -> String {
    let mut k = seed;
    loop {
        let cand = k.to_string();
        if !names.contains(&cand) {
            return cand;
        }
        k += 1;
    }
}

/// One representative per isomorphism class at exactly `n` elements,
/// deterministically ordered by canonical key.
pub fn grow_classes(n: usize, mode: GrowthMode) -> Vec<Poset> {
    if n == 0 {
        return vec![Poset::from_covers::<&str>(&[], &[]).unwrap()];
    }
    let mut level = vec![Poset::from_covers(&["0"], &[]).unwrap()];
    for _ in 1..n {
        let mut seen: HashSet<Vec<u128>> = HashSet::new();
        let mut next: Vec<(Vec<u128>, Poset)> = Vec::new();
        for p in &level {
            for ideal in p.all_order_ideals() {
                let cand = extend_by_max_element(p, ideal);
                if mode == GrowthMode::MeetSemilattices {
                    let k = cand.n() - 1;
                    let ok = (0..k).all(|x| meet_in(&cand, x, k).is_some());
                    if !ok {
                        continue;
                    }
                }
                let key = canonical_key(&cand);
                if seen.insert(key.clone()) {
                    next.push((key, cand));
                }
            }
        }
        next.sort_by(|a, b| a.0.cmp(&b.0));
        level = next.into_iter().map(|(_, p)| p).collect();
    }
    level
}

/// One representative per poset isomorphism class, deterministic order.
pub fn enumerate_posets(n: usize, cap: usize) -> Result<Vec<Poset>, PosetError> {
    if n > cap {
        return Err(PosetError::SizeCapExceeded { n, cap });
    }
    Ok(grow_classes(n, GrowthMode::AllPosets))
}

/// Exactly the isomorphism classes of posets in which every element has at
/// most one upper cover; counts match unlabeled forests of rooted trees.
pub fn enumerate_upward_linear_posets(n: usize, cap: usize) -> Result<Vec<Poset>, PosetError> {
    Ok(enumerate_posets(n, cap)?
        .into_iter()
        .filter(|p| p.is_upward_linear())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::are_isomorphic;

    #[test]
    fn poset_class_counts() {
        let counts: Vec<usize> = (1..=5).map(|n| enumerate_posets(n, 7).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 16, 63]);
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            enumerate_posets(8, 7),
            Err(PosetError::SizeCapExceeded { n: 8, cap: 7 })
        ));
    }

    #[test]
    fn no_two_enumerated_posets_isomorphic() {
        for n in 1..=5 {
            let ps = enumerate_posets(n, 7).unwrap();
            for i in 0..ps.len() {
                for j in i + 1..ps.len() {
                    assert!(are_isomorphic(&ps[i], &ps[j]).is_none());
                }
            }
        }
    }

    #[test]
    fn upward_linear_counts() {
        let counts: Vec<usize> =
            (1..=6).map(|n| enumerate_upward_linear_posets(n, 7).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 9, 20, 48]);
    }

    #[test]
    fn transitive_reduction_roundtrip() {
        for n in 1..=5 {
            for p in enumerate_posets(n, 7).unwrap() {
                let names: Vec<String> = p.names().to_vec();
                let covers: Vec<(String, String)> = p
                    .covers()
                    .iter()
                    .map(|&(a, b)| (names[a].clone(), names[b].clone()))
                    .collect();
                let q = Poset::from_covers(&names, &covers).unwrap();
                assert!(are_isomorphic(&p, &q).is_some());
            }
        }
    }

    /// Independent oracle: all labeled posets on n points from the
    /// 3^(n choose 2) pairwise states, deduplicated by isomorphism search
    /// only (no canonical forms involved).
    fn brute_force_classes(n: usize) -> Vec<Poset> {
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        let mut reps: Vec<Poset> = Vec::new();
        let total = 3usize.pow(pairs.len() as u32);
        'outer: for code in 0..total {
            let mut rel = vec![false; n * n];
            for i in 0..n {
                rel[i * n + i] = true;
            }
            let mut c = code;
            for &(i, j) in &pairs {
                match c % 3 {
                    1 => rel[i * n + j] = true,
                    2 => rel[j * n + i] = true,
                    _ => {}
                }
                c /= 3;
            }
            // transitivity
            for a in 0..n {
                for b in 0..n {
                    if !rel[a * n + b] {
                        continue;
                    }
                    for d in 0..n {
                        if rel[b * n + d] && !rel[a * n + d] {
                            continue 'outer;
                        }
                    }
                }
            }
            let names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
            let covers: Vec<(usize, usize)> = (0..n)
                .flat_map(|a| (0..n).map(move |b| (a, b)))
                .filter(|&(a, b)| a != b && rel[a * n + b])
                .collect();
            let p = Poset::from_cover_indices(&names, &covers).unwrap();
            if reps.iter().all(|r| are_isomorphic(r, &p).is_none()) {
                reps.push(p);
            }
        }
        reps
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for n in 1..=4 {
            let brute = brute_force_classes(n);
            let fast = enumerate_posets(n, 7).unwrap();
            assert_eq!(brute.len(), fast.len(), "count mismatch at n={n}");
            for b in &brute {
                assert!(
                    fast.iter().any(|f| are_isomorphic(b, f).is_some()),
                    "missing class at n={n}: {b:?}"
                );
            }
        }
    }
}
