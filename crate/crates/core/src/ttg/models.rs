//! Ready-made presentations, and a seeded generator of small random ones.

use rand::Rng;

use crate::catalog;
use crate::poset::{down_set_lattice, FinitePoset, Lattice};

use super::presentation::{PresentationData, TTPresentation};

/// A distributive lattice as a presentation: tensor is meet, triangles `(X, X ∨ Z, Z)`, and
/// `A` a summand of `B` when `A <= B`. With `coproducts`, joins are declared for every pair
/// and every set of distinct objects.
pub fn lattice_data(l: &Lattice, coproducts: bool) -> PresentationData {
    let n = l.len();
    let mut data = PresentationData::new(l.names());
    data.unit = Some(l.top());
    data.zero = Some(l.bottom());
    for a in 0..n {
        for b in a..n {
            data.tensor.push((a, b, l.meet(a, b)));
            data.triangles.push([a, l.join(a, b), b]);
            if a != b {
                data.triangles.push([b, l.join(a, b), a]);
            }
        }
        for b in 0..n {
            if a != b && l.leq(a, b) {
                data.summands.push((a, b));
            }
        }
    }
    if coproducts {
        for members in coproduct_families(n) {
            let c = l.join_all(members.iter().copied());
            data.coproducts.push((members, c));
        }
    }
    data
}

/// Pairs (repeats allowed) and sets of at least two distinct objects.
fn coproduct_families(n: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = (0..n).map(|a| vec![a, a]).collect();
    for mask in 0u32..1 << n {
        if mask.count_ones() >= 2 {
            out.push((0..n).filter(|&i| mask >> i & 1 == 1).collect());
        }
    }
    out
}

/// Subsets of `{1, 2}` under intersection and union; objects `0`, `1`, `2`, `12`.
pub fn subs2() -> TTPresentation {
    let p = FinitePoset::from_covers(&["0", "1", "2", "12"], &[("0", "1"), ("0", "2"), ("1", "12"), ("2", "12")])
        .expect("diamond");
    TTPresentation::new(lattice_data(&p.as_lattice().expect("diamond"), true)).expect("valid")
}

/// Objects `0 < m < 1` with meet as tensor; its radical ideals form a 3-chain.
pub fn chain3() -> TTPresentation {
    TTPresentation::new(lattice_data(&catalog::chain(3).as_lattice().expect("chain"), true)).expect("valid")
}

/// One object besides zero.
pub fn one_object() -> TTPresentation {
    TTPresentation::new(lattice_data(&catalog::chain(2).as_lattice().expect("chain"), true)).expect("valid")
}

/// Only the zero object, which is also the unit.
pub fn trivial() -> TTPresentation {
    let mut data = PresentationData::new(&["0"]);
    data.unit = Some(0);
    data.zero = Some(0);
    TTPresentation::new(data).expect("valid")
}

/// `1, t, .., t^(m-1)` and `0 = t^m`, with `t^i ⊗ t^j = t^(i+j)`.
pub fn nilpotent_data(m: usize) -> PresentationData {
    assert!(m >= 1);
    let names: Vec<String> = std::iter::once("0".to_string()).chain((0..m).map(|i| format!("t{i}"))).collect();
    let mut data = PresentationData::new(&names);
    data.zero = Some(0);
    data.unit = Some(1);
    let obj = |e: usize| if e >= m { 0 } else { e + 1 };
    for i in 0..m {
        for j in i..m {
            data.tensor.push((i + 1, j + 1, obj(i + j)));
        }
    }
    data
}

/// `L × N` where `N` is `t^0, .., t^(m-1)` and `0 = t^m` with `t^i ⊗ t^j = t^(i+j)` and
/// `t^i ⊔ t^j = t^min(i,j)`. Tensor and coproducts act componentwise; triangles are
/// `(X, X ⊔ Z, Z)`.
pub fn product_data(l: &Lattice, m: usize) -> PresentationData {
    assert!(m >= 1);
    let pairs: Vec<(usize, usize)> = (0..l.len()).flat_map(|a| (0..=m).map(move |e| (a, e))).collect();
    let names: Vec<String> = pairs
        .iter()
        .map(|&(a, e)| if e == m { format!("{}.z", l.name(a)) } else { format!("{}.t{e}", l.name(a)) })
        .collect();
    let index = |a: usize, e: usize| pairs.iter().position(|&p| p == (a, e.min(m))).expect("pair");
    let mut data = PresentationData::new(&names);
    data.zero = Some(index(l.bottom(), m));
    data.unit = Some(index(l.top(), 0));
    let n = pairs.len();
    let tensor = |x: usize, y: usize| index(l.meet(pairs[x].0, pairs[y].0), pairs[x].1 + pairs[y].1);
    let join = |x: usize, y: usize| index(l.join(pairs[x].0, pairs[y].0), pairs[x].1.min(pairs[y].1));
    for x in 0..n {
        for y in x..n {
            data.tensor.push((x, y, tensor(x, y)));
            data.triangles.push([x, join(x, y), y]);
            if x != y {
                data.triangles.push([y, join(x, y), x]);
            }
        }
    }
    for members in coproduct_families(n) {
        let c = members[1..].iter().fold(members[0], |acc, &y| join(acc, y));
        data.coproducts.push((members, c));
    }
    data
}

fn tensor_row(data: &PresentationData) -> impl Fn(usize, usize) -> usize + '_ {
    move |a, b| {
        if Some(a) == data.unit {
            return b;
        }
        if Some(b) == data.unit {
            return a;
        }
        if Some(a) == data.zero || Some(b) == data.zero {
            return data.zero.expect("zero");
        }
        data.tensor
            .iter()
            .find(|&&(x, y, _)| (x, y) == (a, b) || (y, x) == (a, b))
            .map(|&(_, _, c)| c)
            .expect("total table")
    }
}

/// Adds `(X, Y, Z)` and all of its tensor translates.
fn add_tensor_closed_triangle(data: &mut PresentationData, tri: [usize; 3]) {
    let n = data.objects.len();
    let new: Vec<[usize; 3]> = {
        let tensor = tensor_row(data);
        (0..n).map(|w| [tensor(tri[0], w), tensor(tri[1], w), tensor(tri[2], w)]).collect()
    };
    for t in new {
        if !data.triangles.contains(&t) {
            data.triangles.push(t);
        }
    }
}

fn add_tensor_closed_summand(data: &mut PresentationData, a: usize, b: usize) {
    let n = data.objects.len();
    let new: Vec<(usize, usize)> = {
        let tensor = tensor_row(data);
        (0..n).map(|w| (tensor(a, w), tensor(b, w))).filter(|(x, y)| x != y).collect()
    };
    for s in new {
        if !data.summands.contains(&s) {
            data.summands.push(s);
        }
    }
}

/// A random distributive lattice of at most `max` elements, as down-sets of a random poset.
pub fn random_lattice(rng: &mut impl Rng, max: usize) -> Lattice {
    loop {
        let k = rng.gen_range(1..=3);
        let names: Vec<String> = (0..k).map(|i| ((b'a' + i as u8) as char).to_string()).collect();
        let edges: Vec<bool> = (0..k * k).map(|_| rng.gen_bool(0.4)).collect();
        // i < j only, then transitive closure, keeps it acyclic
        let mut rel = vec![vec![false; k]; k];
        for i in 0..k {
            rel[i][i] = true;
            for j in i + 1..k {
                rel[i][j] = edges[i * k + j];
            }
        }
        for m in 0..k {
            for i in 0..k {
                for j in 0..k {
                    if rel[i][m] && rel[m][j] {
                        rel[i][j] = true;
                    }
                }
            }
        }
        let p = FinitePoset::from_relation(names, |i, j| rel[i][j]).expect("acyclic");
        let l = down_set_lattice(&p);
        if l.len() <= max {
            return l.as_lattice().expect("down-sets form a lattice");
        }
    }
}

/// A small random presentation with every coproduct declared: a distributive lattice, or a
/// lattice times a nilpotent chain, plus random triangles and summands closed under
/// tensoring. At most `max_objects` objects (at least 4).
pub fn random_presentation(rng: &mut impl Rng, max_objects: usize) -> PresentationData {
    assert!(max_objects >= 4);
    let mut data = if rng.gen_bool(0.5) {
        let mut d = lattice_data(&random_lattice(rng, max_objects), true);
        if rng.gen_bool(0.5) {
            d.summands.clear();
        }
        d
    } else {
        let l = if rng.gen_bool(0.3) {
            catalog::chain(1).as_lattice().expect("chain")
        } else {
            random_lattice(rng, max_objects / 2)
        };
        let m = rng.gen_range(1..max_objects / l.len());
        product_data(&l, m)
    };
    let n = data.objects.len();
    for _ in 0..rng.gen_range(0..=2) {
        let tri = [rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n)];
        add_tensor_closed_triangle(&mut data, tri);
    }
    if rng.gen_bool(0.3) {
        let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
        add_tensor_closed_summand(&mut data, a, b);
    }
    data
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn models_validate() {
        assert_eq!(subs2().len(), 4);
        assert_eq!(chain3().len(), 3);
        assert_eq!(trivial().len(), 1);
        for m in 1..5 {
            TTPresentation::new(nilpotent_data(m)).unwrap();
        }
        let l = catalog::chain(2).as_lattice().unwrap();
        let t = TTPresentation::new(product_data(&l, 2)).unwrap();
        assert_eq!(t.len(), 6);
    }

    #[test]
    fn random_presentations_mostly_validate() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let valid = (0..50)
            .filter(|_| TTPresentation::new(random_presentation(&mut rng, 6)).is_ok())
            .count();
        assert!(valid >= 40, "{valid}");
    }
}
