//! Small named posets used throughout tests, the acceptance suite and the CLI fixtures.

use crate::poset::FinitePoset;

/// The chain with `n` elements: `0`, `1` for two; `0 < m < 1` for three; `0 < m1 < .. < 1` beyond.
pub fn chain(n: usize) -> FinitePoset {
    let names: Vec<String> = match n {
        0 => vec![],
        1 => vec!["0".into()],
        2 => vec!["0".into(), "1".into()],
        3 => vec!["0".into(), "m".into(), "1".into()],
        _ => std::iter::once("0".to_string())
            .chain((1..n - 1).map(|i| format!("m{i}")))
            .chain(std::iter::once("1".to_string()))
            .collect(),
    };
    let covers: Vec<(String, String)> = names.windows(2).map(|w| (w[0].clone(), w[1].clone())).collect();
    FinitePoset::from_covers(&names, &covers).expect("chain")
}

/// The diamond `0 < a, b < 1`.
pub fn b2() -> FinitePoset {
    boolean(2)
}

/// The Boolean lattice on `k` atoms named `a`, `b`, ...; elements are named by their atoms,
/// with `0` for the empty set and `1` for the full set.
pub fn boolean(k: usize) -> FinitePoset {
    assert!(k <= 8, "boolean lattice too large");
    let n = 1usize << k;
    let label = |mask: usize| -> String {
        if mask == 0 {
            "0".into()
        } else if mask == n - 1 {
            "1".into()
        } else {
            (0..k)
                .filter(|b| mask >> b & 1 == 1)
                .map(|b| (b'a' + b as u8) as char)
                .collect()
        }
    };
    let names: Vec<String> = (0..n).map(label).collect();
    FinitePoset::from_relation(names, |i, j| i & j == i).expect("boolean lattice")
}

/// The five-element lattice of thick subcategories for the quiver `o -> o`: a bottom,
/// three pairwise incomparable middles `p0`, `p1`, `c`, and a top.
pub fn m3() -> FinitePoset {
    FinitePoset::from_covers(
        &["0", "p0", "p1", "c", "1"],
        &[
            ("0", "p0"),
            ("0", "p1"),
            ("0", "c"),
            ("p0", "1"),
            ("p1", "1"),
            ("c", "1"),
        ],
    )
    .expect("m3")
}

/// `0 < a, b, c`; `a, b < t2`; `a, b, c < t`; `t` and `t2` incomparable.
pub fn p6() -> FinitePoset {
    FinitePoset::from_covers(
        &["0", "a", "b", "c", "t2", "t"],
        &[
            ("0", "a"),
            ("0", "b"),
            ("0", "c"),
            ("a", "t2"),
            ("b", "t2"),
            ("a", "t"),
            ("b", "t"),
            ("c", "t"),
        ],
    )
    .expect("p6")
}

/// `0 < a, b, c`, one extra upper bound per pair (`ab`, `bc`, `ac`) and a common bound `t`
/// above all three. No pair has a join, while `a ∨ b ∨ c = t`, so closure under joins of
/// fewer than three elements differs from closure under joins of fewer than four.
pub fn p8() -> FinitePoset {
    FinitePoset::from_covers(
        &["0", "a", "b", "c", "ab", "bc", "ac", "t"],
        &[
            ("0", "a"),
            ("0", "b"),
            ("0", "c"),
            ("a", "ab"),
            ("b", "ab"),
            ("b", "bc"),
            ("c", "bc"),
            ("a", "ac"),
            ("c", "ac"),
            ("a", "t"),
            ("b", "t"),
            ("c", "t"),
        ],
    )
    .expect("p8")
}

/// `0` below an antichain of `k` atoms `a1 .. ak`.
pub fn antichain_with_bottom(k: usize) -> FinitePoset {
    let mut names = vec!["0".to_string()];
    names.extend((1..=k).map(|i| format!("a{i}")));
    let covers: Vec<(String, String)> = (1..=k).map(|i| ("0".to_string(), format!("a{i}"))).collect();
    FinitePoset::from_covers(&names, &covers).expect("antichain with bottom")
}

/// A plain antichain `a1 .. ak`.
pub fn antichain(k: usize) -> FinitePoset {
    let names: Vec<String> = (1..=k).map(|i| format!("a{i}")).collect();
    FinitePoset::from_covers::<String>(&names, &[]).expect("antichain")
}

/// Adds a fresh top element `top` above everything.
pub fn with_top(p: &FinitePoset, top: &str) -> FinitePoset {
    let mut names: Vec<String> = p.names().to_vec();
    names.push(top.to_string());
    let n = p.len();
    FinitePoset::from_relation(names, |i, j| j == n || (i < n && j < n && p.leq(i, j))).expect("with top")
}
