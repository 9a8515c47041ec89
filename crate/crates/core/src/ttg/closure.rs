use crate::frame::Arity;
use crate::poset::Subset;

use super::presentation::TTPresentation;

/// A set of objects closed under the ideal rules at some arity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TensorIdeal {
    pub carrier: Subset,
    pub arity: Arity,
    pub radical: bool,
}

/// Which closure rules to run. `localizing` alone is a localizing subcategory; adding
/// `tensor` makes it a tensor ideal and `radical` adds the power rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rules {
    pub tensor: bool,
    pub radical: bool,
}

impl Rules {
    pub const LOCALIZING: Rules = Rules {
        tensor: false,
        radical: false,
    };
    pub const IDEAL: Rules = Rules {
        tensor: true,
        radical: false,
    };
    pub const RADICAL: Rules = Rules {
        tensor: true,
        radical: true,
    };
}

/// Least fixpoint of the closure rules containing `seed`.
pub fn close(t: &TTPresentation, seed: &Subset, arity: Arity, rules: Rules) -> Subset {
    let n = t.len();
    let mut set = seed.clone();
    set.grow(n);
    set.insert(t.zero());
    loop {
        let before = set.count_ones(..);
        for x in 0..n {
            if set.contains(x) {
                set.insert(t.shift(x));
                set.insert(t.unshift(x));
                set.union_with(t.summands_of(x));
                if rules.tensor {
                    for y in 0..n {
                        set.insert(t.tensor(x, y));
                    }
                }
            } else if rules.radical && !t.powers(x).is_disjoint(&set) {
                set.insert(x);
            }
        }
        for &[x, y, z] in t.triangles() {
            if set.contains(x) && set.contains(z) {
                set.insert(y);
            }
        }
        for (members, &c) in t.coproducts() {
            if arity.admits(members.len()) && members.iter().all(|&m| set.contains(m)) {
                set.insert(c);
            }
        }
        if set.count_ones(..) == before {
            return set;
        }
    }
}

pub fn rad_closure(t: &TTPresentation, seed: &Subset, arity: Arity, radical: bool) -> TensorIdeal {
    let rules = if radical { Rules::RADICAL } else { Rules::IDEAL };
    TensorIdeal {
        carrier: close(t, seed, arity, rules),
        arity,
        radical,
    }
}

/// The first rule `set` breaks, checked independently of [`close`].
pub fn ideal_violation(t: &TTPresentation, set: &Subset, arity: Arity, rules: Rules) -> Option<String> {
    let n = t.len();
    if !set.contains(t.zero()) {
        return Some("zero is missing".into());
    }
    for x in set.ones() {
        if !set.contains(t.shift(x)) || !set.contains(t.unshift(x)) {
            return Some(format!("not closed under shift at {}", t.name(x)));
        }
        if let Some(a) = t.summands_of(x).ones().find(|&a| !set.contains(a)) {
            return Some(format!("summand {} of {} is missing", t.name(a), t.name(x)));
        }
        if rules.tensor {
            if let Some(y) = (0..n).find(|&y| !set.contains(t.tensor(x, y))) {
                return Some(format!("{} ⊗ {} is missing", t.name(x), t.name(y)));
            }
        }
    }
    for &[x, y, z] in t.triangles() {
        if set.contains(x) && set.contains(z) && !set.contains(y) {
            return Some(format!("triangle ({}, {}, {}) is not closed", t.name(x), t.name(y), t.name(z)));
        }
    }
    for (members, &c) in t.coproducts() {
        if arity.admits(members.len()) && members.iter().all(|&m| set.contains(m)) && !set.contains(c) {
            return Some(format!("coproduct {} is missing", t.name(c)));
        }
    }
    if rules.radical {
        for x in 0..n {
            if set.contains(x) {
                continue;
            }
            // walk the powers directly rather than using the cached sets
            let mut p = x;
            for _ in 0..=n {
                if set.contains(p) {
                    return Some(format!("a power of {} lies in the ideal", t.name(x)));
                }
                p = t.tensor(p, x);
            }
        }
    }
    None
}

/// Every closed set for `rules`, smallest first, generated by adding one object at a time.
pub fn closed_sets(t: &TTPresentation, arity: Arity, rules: Rules) -> Vec<Subset> {
    let n = t.len();
    let mut sets = vec![close(t, &t.empty_set(), arity, rules)];
    let mut seen: std::collections::HashSet<Subset> = sets.iter().cloned().collect();
    let mut k = 0;
    while k < sets.len() {
        let current = sets[k].clone();
        for x in 0..n {
            if current.contains(x) {
                continue;
            }
            let mut seed = current.clone();
            seed.insert(x);
            let next = close(t, &seed, arity, rules);
            if seen.insert(next.clone()) {
                sets.push(next);
            }
        }
        k += 1;
    }
    sets.sort_by_key(|s| (s.count_ones(..), s.ones().collect::<Vec<_>>()));
    sets
}
