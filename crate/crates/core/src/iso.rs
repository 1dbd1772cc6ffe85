//! Poset isomorphism and canonical forms.
//!
//! Canonical forms are the lexicographically least relation string over all
//! relabelings compatible with an iterated degree refinement. No external
//! canonical-labeling dependency; adequate for the enumeration caps here.

use crate::poset::{Poset, Subset};

const SEP: u64 = u64::MAX;

/// Iterated neighbourhood refinement. Returns one invariant key per element;
/// equal keys mean "not separated by the refinement". Keys are comparable
/// across posets.
pub fn refine_keys(p: &Poset) -> Vec<Vec<u64>> {
    let n = p.n();
    let mut keys: Vec<Vec<u64>> = (0..n)
        .map(|x| {
            vec![
                p.down_set(x).len() as u64,
                p.up_set(x).len() as u64,
                p.lower_covers(x).len() as u64,
                p.upper_covers(x).len() as u64,
            ]
        })
        .collect();
    for _ in 0..n {
        let ids = ids_from_keys(&keys);
        let mut next: Vec<Vec<u64>> = Vec::with_capacity(n);
        for x in 0..n {
            let mut k = vec![ids[x] as u64, SEP];
            let mut lo: Vec<u64> = p.lower_covers(x).iter().map(|y| ids[y] as u64).collect();
            lo.sort_unstable();
            k.extend(lo);
            k.push(SEP);
            let mut hi: Vec<u64> = p.upper_covers(x).iter().map(|y| ids[y] as u64).collect();
            hi.sort_unstable();
            k.extend(hi);
            next.push(k);
        }
        keys = next;
    }
    keys
}

fn ids_from_keys(keys: &[Vec<u64>]) -> Vec<usize> {
    let mut sorted: Vec<&Vec<u64>> = keys.iter().collect();
    sorted.sort();
    sorted.dedup();
    keys.iter().map(|k| sorted.binary_search(&k).unwrap()).collect()
}

/// Canonical key: for each position k the 2k bits of order relations to the
/// previously placed elements, minimized over refinement-respecting
/// relabelings. Two posets are isomorphic iff their keys are equal.
pub fn canonical_key(p: &Poset) -> Vec<u128> {
    let n = p.n();
    if n == 0 {
        return Vec::new();
    }
    let keys = refine_keys(p);
    let ids = ids_from_keys(&keys);
    let n_classes = ids.iter().max().unwrap() + 1;
    // positions are allocated to classes in increasing class order
    let mut slot_class = Vec::with_capacity(n);
    for c in 0..n_classes {
        for _ in 0..ids.iter().filter(|&&i| i == c).count() {
            slot_class.push(c);
        }
    }

    struct Search<'a> {
        p: &'a Poset,
        ids: Vec<usize>,
        slot_class: Vec<usize>,
        best: Option<Vec<u128>>,
    }

    impl Search<'_> {
        fn word(&self, placed: &[usize], e: usize) -> u128 {
            let mut w = 0u128;
            for (j, &q) in placed.iter().enumerate() {
                if self.p.leq(q, e) {
                    w |= 1 << (2 * j);
                }
                if self.p.leq(e, q) {
                    w |= 1 << (2 * j + 1);
                }
            }
            w
        }

        fn rec(&mut self, placed: &mut Vec<usize>, used: Subset, words: &mut Vec<u128>) {
            let k = placed.len();
            if k == self.slot_class.len() {
                if self.best.as_ref().is_none_or(|b| words[..] < b[..]) {
                    self.best = Some(words.clone());
                }
                return;
            }
            // prefix pruning against the current best
            if let Some(b) = &self.best {
                if words[..] > b[..k] {
                    return;
                }
            }
            let c = self.slot_class[k];
            let mut cands: Vec<(u128, usize)> = (0..self.p.n())
                .filter(|&e| !used.contains(e) && self.ids[e] == c)
                .map(|e| (self.word(placed, e), e))
                .collect();
            cands.sort_unstable();
            let min_w = cands[0].0;
            for &(w, e) in cands.iter().take_while(|&&(w, _)| w == min_w) {
                placed.push(e);
                words.push(w);
                self.rec(placed, used.with(e), words);
                placed.pop();
                words.pop();
            }
        }
    }

    let mut s = Search { p, ids, slot_class, best: None };
    s.rec(&mut Vec::new(), Subset::EMPTY, &mut Vec::new());
    s.best.unwrap()
}

/// A label bijection preserving the order both ways, as a map from indices of
/// `p` to indices of `q`; deterministic (the lexicographically least one), or
/// `None` if the posets are not isomorphic.
pub fn are_isomorphic(p: &Poset, q: &Poset) -> Option<Vec<usize>> {
    if p.n() != q.n() {
        return None;
    }
    let n = p.n();
    if n == 0 {
        return Some(Vec::new());
    }
    if p.covers().len() != q.covers().len() {
        return None;
    }
    let kp = refine_keys(p);
    let kq = refine_keys(q);
    {
        let mut a: Vec<&Vec<u64>> = kp.iter().collect();
        let mut b: Vec<&Vec<u64>> = kq.iter().collect();
        a.sort();
        b.sort();
        if a != b {
            return None;
        }
    }

    fn rec(
        p: &Poset,
        q: &Poset,
        kp: &[Vec<u64>],
        kq: &[Vec<u64>],
        map: &mut Vec<usize>,
        used: Subset,
    ) -> bool {
        let x = map.len();
        if x == p.n() {
            return true;
        }
        for y in 0..q.n() {
            if used.contains(y) || kp[x] != kq[y] {
                continue;
            }
            let ok = map.iter().enumerate().all(|(x2, &y2)| {
                p.leq(x2, x) == q.leq(y2, y) && p.leq(x, x2) == q.leq(y, y2)
            });
            if ok {
                map.push(y);
                if rec(p, q, kp, kq, map, used.with(y)) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }

    let mut map = Vec::with_capacity(n);
    if rec(p, q, &kp, &kq, &mut map, Subset::EMPTY) {
        Some(map)
    } else {
        None
    }
}
