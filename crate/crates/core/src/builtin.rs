//! Built-in named posets used throughout the test suites and exposed via the
//! CLI `--example` flag, so no fixture files are needed.

use crate::poset::Poset;

/// The pentagon lattice N5: 1 < 2 < 5, 1 < 3 < 4 < 5.
pub fn pentagon() -> Poset {
    Poset::from_covers(
        &["1", "2", "3", "4", "5"],
        &[("1", "2"), ("1", "3"), ("3", "4"), ("2", "5"), ("4", "5")],
    )
    .unwrap()
}

/// The diamond B2, alias the divisor lattice of 6: 1 < 2,3 < 6.
pub fn diamond() -> Poset {
    Poset::from_covers(&["1", "2", "3", "6"], &[("1", "2"), ("1", "3"), ("2", "6"), ("3", "6")])
        .unwrap()
}

/// M3: 1 < 2,3,4 < 5. Modular, not distributive.
pub fn m3() -> Poset {
    Poset::from_covers(
        &["1", "2", "3", "4", "5"],
        &[("1", "2"), ("1", "3"), ("1", "4"), ("2", "5"), ("3", "5"), ("4", "5")],
    )
    .unwrap()
}

/// The hexagon lattice: 1 < 2 < 3,4 < 5 < 6. Distributive and self-opposite.
pub fn hex6() -> Poset {
    Poset::from_covers(
        &["1", "2", "3", "4", "5", "6"],
        &[("1", "2"), ("2", "3"), ("2", "4"), ("3", "5"), ("4", "5"), ("5", "6")],
    )
    .unwrap()
}

/// An 8-element poset that is not a lattice yet has every simple and
/// indecomposable injective module perfect.
pub fn p8() -> Poset {
    Poset::from_covers(
        &["0", "1", "2", "3", "4", "5", "6", "7"],
        &[
            ("0", "1"),
            ("0", "3"),
            ("1", "2"),
            ("1", "6"),
            ("2", "4"),
            ("3", "4"),
            ("3", "5"),
            ("4", "7"),
            ("5", "6"),
            ("6", "7"),
        ],
    )
    .unwrap()
}

/// A 5-element upward-linear poset with an isolated element:
/// 2 < 3 < 4, 1 < 4, and 5 isolated.
pub fn ul5() -> Poset {
    Poset::from_covers(&["1", "2", "3", "4", "5"], &[("2", "3"), ("3", "4"), ("1", "4")]).unwrap()
}

/// The chain with k elements, 1 < 2 < ... < k.
pub fn chain(k: usize) -> Poset {
    let names: Vec<String> = (1..=k).map(|i| i.to_string()).collect();
    let covers: Vec<(String, String)> =
        (1..k).map(|i| (i.to_string(), (i + 1).to_string())).collect();
    Poset::from_covers(&names, &covers).unwrap()
}

/// The Boolean lattice 2^k on subsets of {1..k}.
pub fn boolean(k: usize) -> Poset {
    assert!(k <= 5, "boolean lattice example limited to 2^5");
    let name = |mask: usize| -> String {
        if mask == 0 {
            "{}".to_string()
        } else {
            let elems: Vec<String> =
                (0..k).filter(|b| mask >> b & 1 == 1).map(|b| (b + 1).to_string()).collect();
            format!("{{{}}}", elems.join(""))
        }
    };
    let names: Vec<String> = (0..1usize << k).map(name).collect();
    let mut covers = Vec::new();
    for mask in 0..1usize << k {
        for b in 0..k {
            if mask >> b & 1 == 0 {
                covers.push((name(mask), name(mask | 1 << b)));
            }
        }
    }
    Poset::from_covers(&names, &covers).unwrap()
}

/// Looks up an example by its CLI name: `pentagon`, `b2`, `m3`, `hex6`,
/// `p8`, `ul5`, or `an:<k>` for the k-element chain.
pub fn by_name(name: &str) -> Option<Poset> {
    if let Some(k) = name.strip_prefix("an:") {
        let k: usize = k.parse().ok()?;
        if k == 0 || k > 32 {
            return None;
        }
        return Some(chain(k));
    }
    match name {
        "pentagon" => Some(pentagon()),
        "b2" | "diamond" => Some(diamond()),
        "m3" => Some(m3()),
        "hex6" => Some(hex6()),
        "p8" => Some(p8()),
        "ul5" => Some(ul5()),
        _ => None,
    }
}

pub const EXAMPLE_NAMES: &[&str] = &["pentagon", "b2", "m3", "hex6", "p8", "ul5", "an:<k>"];
