//! Brute-force re-derivations checked against the library's algorithms.

use framekit::catalog;
use framekit::corpus::{self, frames_up_to, random_presentations, DEFAULT_SEED};
use framekit::frame::{k_compact_elements, k_ideals, Arity, Frame};
use framekit::poset::{subset_of, FinitePoset, Subset};
use framekit::refine::FrameMorphism;
use framekit::stone::{points, prime_elements, two_valued_morphisms};
use framekit::ttg::{
    close, enumerate_supports, ideal_violation, prime_tensor_ideals, rad_lattice, universal_morphism, Rules,
    TTPresentation,
};

const ARITIES: [Arity; 4] = [Arity::Finite(2), Arity::Finite(3), Arity::Finite(4), Arity::Omega];

fn all_subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..1 << n).map(move |m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
}

fn small(arity: Arity, size: usize) -> bool {
    match arity {
        Arity::Finite(k) => size < k,
        Arity::Omega => true,
    }
}

/// Non-empty, down-closed, closed under existing joins of admissible families.
fn ideal_by_definition(p: &FinitePoset, arity: Arity, set: &[usize]) -> bool {
    if set.is_empty() {
        return false;
    }
    let n = p.len();
    let inside = |x: usize| set.contains(&x);
    if set.iter().any(|&x| (0..n).any(|y| p.leq(y, x) && !inside(y))) {
        return false;
    }
    // a least upper bound, found from the order relation alone
    let join = |family: &[usize]| {
        let ub: Vec<usize> = (0..n).filter(|&u| family.iter().all(|&f| p.leq(f, u))).collect();
        ub.iter().copied().find(|&u| ub.iter().all(|&v| p.leq(u, v)))
    };
    all_subsets(set.len())
        .map(|ix| ix.iter().map(|&i| set[i]).collect::<Vec<_>>())
        .filter(|family| small(arity, family.len()))
        .all(|family| join(&family).is_none_or(inside))
}

fn posets_with_bottom() -> Vec<FinitePoset> {
    let mut out: Vec<FinitePoset> = (1..=5)
        .flat_map(corpus::posets)
        .filter(|p| p.bottom().is_some())
        .collect();
    out.extend([catalog::p6(), catalog::p8()]);
    out
}

#[test]
fn k_ideals_match_the_definition() {
    for p in posets_with_bottom() {
        for arity in ARITIES {
            let expected: Vec<Subset> = all_subsets(p.len())
                .filter(|s| ideal_by_definition(&p, arity, s))
                .map(|s| subset_of(p.len(), s))
                .collect();
            let mut got = k_ideals(&p, arity).unwrap().ideals().to_vec();
            let mut want = expected;
            let key = |s: &Subset| s.ones().collect::<Vec<_>>();
            got.sort_by_key(key);
            want.sort_by_key(key);
            assert_eq!(got, want, "{} at {arity}", p.names().join(","));
        }
    }
}

/// `c` is compact iff every family whose join is above `c` has a small subfamily doing the same.
fn compact_by_definition(f: &Frame, arity: Arity, c: usize) -> bool {
    let n = f.len();
    all_subsets(n).all(|family| {
        let join = f.join_all(family.iter().copied());
        if !f.leq(c, join) {
            return true;
        }
        all_subsets(family.len()).any(|ix| {
            small(arity, ix.len()) && f.leq(c, f.join_all(ix.iter().map(|&i| family[i])))
        })
    })
}

#[test]
fn compactness_matches_the_definition() {
    let mut frames = frames_up_to(5);
    for k in 2..=4 {
        frames.push(k_ideals(&catalog::b2(), Arity::Finite(k)).unwrap().frame().unwrap());
    }
    frames.push(Frame::from_poset(&catalog::boolean(3)).unwrap());
    for f in &frames {
        for arity in ARITIES {
            let expected = subset_of(f.len(), (0..f.len()).filter(|&c| compact_by_definition(f, arity, c)));
            assert_eq!(k_compact_elements(f, arity), expected, "{} at {arity}", f.names().join(","));
        }
    }
}

#[test]
fn points_match_two_valued_maps() {
    for f in frames_up_to(6) {
        let from_maps = two_valued_morphisms(&f);
        // the largest element sent to 0 is the prime of the point
        let mut primes: Vec<usize> = from_maps
            .iter()
            .map(|ones| {
                let zeros: Vec<usize> = (0..f.len()).filter(|&a| !ones.contains(a)).collect();
                f.join_all(zeros)
            })
            .collect();
        primes.sort_unstable();
        assert_eq!(primes, prime_elements(&f).ones().collect::<Vec<_>>());
        assert_eq!(points(&f).len(), from_maps.len());
    }
}

/// Intersection of every closed set containing `seed`.
fn closure_by_intersection(t: &TTPresentation, seed: &Subset, arity: Arity, rules: Rules) -> Subset {
    let n = t.len();
    let mut acc = subset_of(n, 0..n);
    for s in all_subsets(n) {
        let s = subset_of(n, s);
        if seed.is_subset(&s) && ideal_violation(t, &s, arity, rules).is_none() {
            acc.intersect_with(&s);
        }
    }
    acc
}

fn presentations() -> Vec<TTPresentation> {
    let mut ts = vec![
        framekit::ttg::models::subs2(),
        framekit::ttg::models::chain3(),
        framekit::ttg::models::trivial(),
        TTPresentation::new(framekit::ttg::models::nilpotent_data(3)).unwrap(),
    ];
    ts.extend(random_presentations(DEFAULT_SEED ^ 1, 30, 6).0);
    ts
}

#[test]
fn closures_match_intersections() {
    for t in presentations() {
        let n = t.len();
        for arity in [Arity::Finite(3), Arity::Omega] {
            for rules in [Rules::LOCALIZING, Rules::IDEAL, Rules::RADICAL] {
                for seed in all_subsets(n).step_by(3) {
                    let seed = subset_of(n, seed);
                    assert_eq!(close(&t, &seed, arity, rules), closure_by_intersection(&t, &seed, arity, rules));
                }
            }
        }
    }
}

#[test]
fn rad_lattice_lists_every_radical_ideal() {
    for t in presentations() {
        let n = t.len();
        let rad = rad_lattice(&t, Arity::Omega).unwrap();
        let mut expected: Vec<Subset> = all_subsets(n)
            .map(|s| subset_of(n, s))
            .filter(|s| ideal_violation(&t, s, Arity::Omega, Rules::RADICAL).is_none())
            .collect();
        let mut got = rad.ideals().to_vec();
        let key = |s: &Subset| s.ones().collect::<Vec<_>>();
        expected.sort_by_key(key);
        got.sort_by_key(key);
        assert_eq!(got, expected);
    }
}

#[test]
fn prime_ideals_by_subset_scan() {
    for t in presentations() {
        let n = t.len();
        let expected: Vec<Subset> = all_subsets(n)
            .map(|s| subset_of(n, s))
            .filter(|p| {
                !p.contains(t.unit())
                    && ideal_violation(&t, p, Arity::Omega, Rules::IDEAL).is_none()
                    && (0..n).all(|x| (0..n).all(|y| !p.contains(t.tensor(x, y)) || p.contains(x) || p.contains(y)))
            })
            .collect();
        let mut got = prime_tensor_ideals(&t, Arity::Omega);
        let mut want = expected;
        let key = |s: &Subset| s.ones().collect::<Vec<_>>();
        got.sort_by_key(key);
        want.sort_by_key(key);
        assert_eq!(got, want);
    }
}

/// Every map `Rad -> F`, kept when it is a frame morphism factoring the support.
fn factorizations_by_brute_force(t: &TTPresentation, d: &framekit::ttg::SupportDatum) -> usize {
    let rad = rad_lattice(t, Arity::Omega).unwrap();
    let (r, m) = (rad.len(), d.frame.len());
    let total = m.pow(r as u32);
    (0..total)
        .filter(|&code| {
            let map: Vec<usize> = (0..r).map(|i| code / m.pow(i as u32) % m).collect();
            (0..t.len()).all(|x| map[rad.principal(x)] == d.sigma[x])
                && FrameMorphism::new(rad.frame().clone(), d.frame.clone(), map).is_ok()
        })
        .count()
}

#[test]
fn universal_morphism_is_the_only_factorization() {
    let frames = frames_up_to(4);
    for t in presentations().iter().take(12) {
        for f in &frames {
            for d in enumerate_supports(t, f, Arity::Omega) {
                let u = universal_morphism(t, &d, Arity::Omega).unwrap();
                assert_eq!(factorizations_by_brute_force(t, &d), 1);
                assert_eq!(u.factorizing, 1);
            }
        }
    }
}

#[test]
fn supports_by_brute_force() {
    let f = Frame::from_poset(&catalog::b2()).unwrap();
    let t = framekit::ttg::models::subs2();
    let n = t.len();
    let total = f.len().pow(n as u32);
    let count = (0..total)
        .filter(|&code| {
            let sigma: Vec<usize> = (0..n).map(|i| code / f.len().pow(i as u32) % f.len()).collect();
            let d = framekit::ttg::SupportDatum { frame: f.clone(), sigma };
            framekit::ttg::validate_support(&t, &d, Arity::Omega).iter().all(|r| r.pass())
        })
        .count();
    assert_eq!(enumerate_supports(&t, &f, Arity::Omega).len(), count);
    // atoms to atoms either way round, or one atom to the top and the other to the bottom
    assert_eq!(count, 4);
}
