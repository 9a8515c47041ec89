//! Exhaustive small posets and lattices up to isomorphism, and seeded random instances:
//! chains of sublattice inclusions and tensor-triangulated presentations.

use std::collections::HashMap;

use rand::seq::IteratorRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::frame::Frame;
use crate::poset::{find_isomorphism, subset_of, FinitePoset, Lattice, Subset};
use crate::refine::FrameMorphism;
use crate::stone::FiniteSpace;
use crate::ttg::models::{random_lattice, random_presentation};
use crate::ttg::TTPresentation;

pub const DEFAULT_SEED: u64 = 20_240_601;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn profile(p: &FinitePoset) -> Vec<(usize, usize)> {
    let mut v: Vec<(usize, usize)> = (0..p.len()).map(|i| (p.up(i).count_ones(..), p.down(i).count_ones(..))).collect();
    v.sort_unstable();
    v
}

/// Keeps one representative of each isomorphism class, in first-seen order.
pub fn dedup_isomorphic(candidates: impl IntoIterator<Item = FinitePoset>) -> Vec<FinitePoset> {
    let mut buckets: HashMap<Vec<(usize, usize)>, Vec<usize>> = HashMap::new();
    let mut out: Vec<FinitePoset> = Vec::new();
    for p in candidates {
        let key = profile(&p);
        let bucket = buckets.entry(key).or_default();
        if bucket.iter().any(|&i| find_isomorphism(&out[i], &p).is_some()) {
            continue;
        }
        bucket.push(out.len());
        out.push(p);
    }
    out
}

/// All orders on `0..n` refining the natural order on labels, as transitively closed
/// strict relations `rel[i][j]` (only `i < j`). Every finite poset appears at least once.
fn natural_orders(n: usize) -> Vec<Vec<Vec<bool>>> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for mask in 0u64..1 << pairs.len() {
        let mut rel = vec![vec![false; n]; n];
        for (b, &(i, j)) in pairs.iter().enumerate() {
            rel[i][j] = mask >> b & 1 == 1;
        }
        // labels are a linear extension, so closing in label order suffices
        for j in 0..n {
            for i in (0..j).rev() {
                if rel[i][j] {
                    continue;
                }
                rel[i][j] = (i + 1..j).any(|m| rel[i][m] && rel[m][j]);
            }
        }
        if seen.insert(rel.clone()) {
            out.push(rel);
        }
    }
    out
}

/// Posets with `n` elements named `p0, p1, ..`, one per isomorphism class.
pub fn posets(n: usize) -> Vec<FinitePoset> {
    let names: Vec<String> = (0..n).map(|i| format!("p{i}")).collect();
    dedup_isomorphic(
        natural_orders(n)
            .into_iter()
            .map(|rel| FinitePoset::from_relation(names.clone(), |i, j| i == j || rel[i][j]).expect("order")),
    )
}

/// Lattices with `n` elements up to isomorphism: a bottom `0`, a top `1`, and every poset
/// of `n - 2` middle elements `m0, ..` that yields a lattice.
pub fn lattices(n: usize) -> Vec<Lattice> {
    match n {
        0 => return Vec::new(),
        1 => return vec![crate::catalog::chain(1).as_lattice().expect("chain")],
        _ => {}
    }
    let m = n - 2;
    let mut names = vec!["0".to_string()];
    names.extend((0..m).map(|i| format!("m{i}")));
    names.push("1".to_string());
    let candidates = natural_orders(m).into_iter().filter_map(|rel| {
        let p = FinitePoset::from_relation(names.clone(), |i, j| {
            i == j || i == 0 || j == n - 1 || (i > 0 && j < n - 1 && j > 0 && i < n - 1 && rel[i - 1][j - 1])
        })
        .expect("bounded order");
        p.as_lattice().ok().map(|_| p)
    });
    dedup_isomorphic(candidates)
        .into_iter()
        .map(|p| p.as_lattice().expect("checked"))
        .collect()
}

pub fn distributive_lattices(n: usize) -> Vec<Lattice> {
    lattices(n).into_iter().filter(|l| l.is_distributive()).collect()
}

/// Every finite frame with between 1 and `max` elements, up to isomorphism.
pub fn frames_up_to(max: usize) -> Vec<Frame> {
    (1..=max)
        .flat_map(distributive_lattices)
        .map(|l| Frame::new(l).expect("distributive"))
        .collect()
}

/// Finite T0 spaces with up to `max` points: each poset with its up-sets as opens.
pub fn t0_spaces_up_to(max: usize) -> Vec<FiniteSpace> {
    let mut out = Vec::new();
    for n in 0..=max {
        for p in posets(n) {
            let opens: Vec<Subset> = p.down_sets().iter().map(|d| {
                let mut up = p.full_subset();
                up.difference_with(d);
                up
            }).collect();
            out.push(FiniteSpace::new(p.names().to_vec(), opens).expect("Alexandrov topology"));
        }
    }
    out
}

/// The sublattice of `l` generated by `seed` together with its bounds.
pub fn generated_sublattice(l: &Lattice, seed: &Subset) -> Subset {
    let mut set = seed.clone();
    set.insert(l.bottom());
    set.insert(l.top());
    loop {
        let members: Vec<usize> = set.ones().collect();
        let before = members.len();
        for &a in &members {
            for &b in &members {
                set.insert(l.join(a, b));
                set.insert(l.meet(a, b));
            }
        }
        if set.count_ones(..) == before {
            return set;
        }
    }
}

/// A sublattice as a frame, with the inclusion into `f`.
pub fn sublattice_inclusion(f: &Frame, sub: &Subset) -> FrameMorphism {
    let members: Vec<usize> = sub.ones().collect();
    let names = members.iter().map(|&i| f.name(i).to_string()).collect();
    let p = FinitePoset::from_relation(names, |a, b| f.leq(members[a], members[b])).expect("sub-order");
    let small = Frame::from_poset(&p).expect("sublattices of distributive lattices are distributive");
    FrameMorphism::new(small, f.clone(), members).expect("inclusion of a sublattice")
}

/// `F ⊆ G ⊆ H` with `H` the down-sets of a random poset and `G`, `F` generated by random
/// subsets; returns the inclusions `F -> G` and `G -> H`.
pub fn random_injective_chain(rng: &mut impl Rng, max: usize) -> (FrameMorphism, FrameMorphism) {
    let h = Frame::new(random_lattice(rng, max)).expect("distributive");
    let pick = |rng: &mut dyn rand::RngCore, n: usize| {
        let k = rng.gen_range(0..=n);
        subset_of(n, (0..n).choose_multiple(rng, k))
    };
    let g_set = generated_sublattice(h.lattice(), &pick(rng, h.len()));
    let psi = sublattice_inclusion(&h, &g_set);
    let g = psi.source().clone();
    let f_set = generated_sublattice(g.lattice(), &pick(rng, g.len()));
    let phi = sublattice_inclusion(&g, &f_set);
    (phi, psi)
}

/// `count` random presentations that pass validation, with how many candidates were drawn.
pub fn random_presentations(seed: u64, count: usize, max_objects: usize) -> (Vec<TTPresentation>, usize) {
    let mut r = rng(seed);
    let mut out = Vec::with_capacity(count);
    let mut drawn = 0;
    while out.len() < count {
        drawn += 1;
        if let Ok(t) = TTPresentation::new(random_presentation(&mut r, max_objects)) {
            out.push(t);
        }
    }
    (out, drawn)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_counts() {
        let lattice_counts: Vec<usize> = (1..=7).map(|n| lattices(n).len()).collect();
        assert_eq!(lattice_counts, [1, 1, 1, 2, 5, 15, 53]);
        let distributive: Vec<usize> = (1..=7).map(|n| distributive_lattices(n).len()).collect();
        assert_eq!(distributive, [1, 1, 1, 2, 3, 5, 8]);
        let poset_counts: Vec<usize> = (0..=5).map(|n| posets(n).len()).collect();
        assert_eq!(poset_counts, [1, 1, 2, 5, 16, 63]);
    }

    #[test]
    fn chains_are_injective() {
        let mut r = rng(DEFAULT_SEED);
        for _ in 0..20 {
            let (phi, psi) = random_injective_chain(&mut r, 8);
            assert!(phi.is_injective() && psi.is_injective());
            assert_eq!(phi.target(), psi.source());
        }
    }

    #[test]
    fn spaces() {
        assert_eq!(t0_spaces_up_to(3).len(), 1 + 1 + 2 + 5);
    }
}
