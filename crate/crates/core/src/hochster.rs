//! Prime ideals, the Hochster dual `Idl((compact F)^op)`, and the point bijection that
//! matches Thomason subsets of `pt(F)` with open subsets of `pt(F^∨)`.

use thiserror::Error;

use crate::frame::{k_compact_elements, k_ideals, Arity, Frame, FrameError, IdealLattice};
use crate::poset::{find_isomorphism, subset_of, Lattice, Subset};
use crate::stone::{omega, point_space, points, u_open, FiniteSpace, Point, StoneError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HochsterError {
    #[error(transparent)]
    Frame(#[from] FrameError),
    #[error(transparent)]
    Stone(#[from] StoneError),
    #[error("double dual is not isomorphic to the source: {0}")]
    InvolutionFailure(String),
    #[error("Thomason sets and dual opens disagree at {0}")]
    CorrespondenceFailure(String),
}

/// Ideals `I` (at arity `Omega`) with `1 ∉ I` and `a ∧ b ∈ I ⇒ a ∈ I or b ∈ I`.
pub fn prime_ideals(l: &Lattice) -> Result<Vec<Subset>, FrameError> {
    l.check_distributive()?;
    let il = k_ideals(l.poset(), Arity::Omega)?;
    Ok(il
        .ideals()
        .iter()
        .filter(|i| {
            !i.contains(l.top())
                && (0..l.len()).all(|a| (0..l.len()).all(|b| !i.contains(l.meet(a, b)) || i.contains(a) || i.contains(b)))
        })
        .cloned()
        .collect())
}

/// `F^∨ = Idl_Ω((compact F)^op)`, with the data needed to map points across.
#[derive(Debug, Clone)]
pub struct DualFrame {
    pub frame: Frame,
    /// Compact elements of the source, in element order; position `i` of the opposite
    /// sub-poset is `compacts[i]`.
    pub compacts: Vec<usize>,
    pub ideals: IdealLattice,
}

pub fn hochster_dual(f: &Frame) -> Result<DualFrame, FrameError> {
    let compact_set = k_compact_elements(f, Arity::Omega);
    let compacts: Vec<usize> = compact_set.ones().collect();
    let op = f.poset().restrict(&compact_set).opposite();
    let ideals = k_ideals(&op, Arity::Omega)?;
    let frame = ideals.frame()?;
    Ok(DualFrame {
        frame,
        compacts,
        ideals,
    })
}

/// Checks `F^∨∨ ≅ F` and returns the isomorphism found.
pub fn double_dual_check(f: &Frame) -> Result<Vec<usize>, HochsterError> {
    let once = hochster_dual(f)?;
    let twice = hochster_dual(&once.frame)?;
    find_isomorphism(twice.frame.poset(), f.poset()).ok_or_else(|| {
        HochsterError::InvolutionFailure(format!(
            "{} elements after two duals, {} before",
            twice.frame.len(),
            f.len()
        ))
    })
}

/// Points of `F` and `F^∨` matched through complements of prime filters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualPoints {
    pub source: Vec<Point>,
    pub dual: Vec<Point>,
    /// `image[i]` is the position in `dual` matched with `source[i]`.
    pub image: Vec<usize>,
    pub bijective: bool,
    /// `x <= y` in `pt(F)` iff `image(y) <= image(x)` in `pt(F^∨)`.
    pub reverses_specialization: bool,
}

/// A point `x` of `F` has prime filter `{c compact : c ≰ p_x}`; read in the opposite order
/// it is a prime ideal, that is a prime element of `F^∨`.
pub fn dual_point_bijection(f: &Frame, dual: &DualFrame) -> DualPoints {
    let source = points(f);
    let dual_points = points(&dual.frame);
    let m = dual.compacts.len();
    let image: Vec<usize> = source
        .iter()
        .map(|x| {
            let filter = subset_of(m, (0..m).filter(|&i| !f.leq(dual.compacts[i], x.prime)));
            dual.ideals
                .index_of(&filter)
                .and_then(|idx| dual_points.iter().position(|d| d.prime == idx))
                .unwrap_or(usize::MAX)
        })
        .collect();
    let mut hit: Vec<usize> = image.iter().copied().filter(|&i| i != usize::MAX).collect();
    hit.sort_unstable();
    hit.dedup();
    let bijective = hit.len() == source.len() && source.len() == dual_points.len();
    let reverses_specialization = bijective
        && (0..source.len()).all(|x| {
            (0..source.len()).all(|y| {
                f.leq(source[x].prime, source[y].prime)
                    == dual.frame.leq(dual_points[image[y]].prime, dual_points[image[x]].prime)
            })
        });
    DualPoints {
        source,
        dual: dual_points,
        image,
        bijective,
        reverses_specialization,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThomasonReport {
    /// Thomason subsets of `pt(F)`, sorted.
    pub thomason: Vec<Subset>,
    /// Opens of `pt(F^∨)` pulled back to `pt(F)` along the point bijection, sorted.
    pub dual_opens: Vec<Subset>,
}

fn sorted(mut sets: Vec<Subset>) -> Vec<Subset> {
    sets.sort_by_key(|s| (s.count_ones(..), s.ones().collect::<Vec<_>>()));
    sets.dedup();
    sets
}

/// Unions of closed sets whose complement is a compact open at `arity`, the empty union included.
pub fn thomason_sets(x: &FiniteSpace, arity: Arity) -> Result<Vec<Subset>, StoneError> {
    let om = omega(x)?;
    let compact = k_compact_elements(&om, arity);
    let generators: Vec<Subset> = compact.ones().map(|i| x.complement(&x.opens()[i])).collect();
    let mut sets = vec![subset_of(x.len(), [])];
    let mut k = 0;
    while k < sets.len() {
        for g in &generators {
            let mut u = sets[k].clone();
            u.union_with(g);
            if !sets.contains(&u) {
                sets.push(u);
            }
        }
        k += 1;
    }
    Ok(sorted(sets))
}

pub fn thomason_correspondence(f: &Frame, arity: Arity) -> Result<ThomasonReport, HochsterError> {
    let dual = hochster_dual(f)?;
    let bij = dual_point_bijection(f, &dual);
    if !bij.bijective {
        return Err(HochsterError::CorrespondenceFailure("the point map is not a bijection".into()));
    }
    let space = point_space(f);
    let thomason = thomason_sets(&space, arity)?;
    let n = bij.source.len();
    let dual_opens = sorted(
        (0..dual.frame.len())
            .map(|a| {
                let open = u_open(&dual.frame, &bij.dual, a);
                subset_of(n, (0..n).filter(|&x| open.contains(bij.image[x])))
            })
            .collect(),
    );
    if let Some(w) = thomason.iter().find(|t| !dual_opens.contains(t)) {
        return Err(HochsterError::CorrespondenceFailure(format!("Thomason set {}", space.label(w))));
    }
    if let Some(w) = dual_opens.iter().find(|o| !thomason.contains(o)) {
        return Err(HochsterError::CorrespondenceFailure(format!("dual open {}", space.label(w))));
    }
    Ok(ThomasonReport { thomason, dual_opens })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::poset::iso_check;
    use crate::stone::prime_elements;

    fn frame(p: crate::poset::FinitePoset) -> Frame {
        Frame::from_poset(&p).unwrap()
    }

    #[test]
    fn prime_ideals_of_small_lattices() {
        let b2 = catalog::b2();
        let l = b2.as_lattice().unwrap();
        let labels: Vec<String> = prime_ideals(&l).unwrap().iter().map(|i| b2.subset_label(i)).collect();
        assert_eq!(labels, ["{0,a}", "{0,b}"]);
        let c3 = catalog::chain(3);
        let labels: Vec<String> =
            prime_ideals(&c3.as_lattice().unwrap()).unwrap().iter().map(|i| c3.subset_label(i)).collect();
        assert_eq!(labels, ["{0}", "{0,m}"]);
        assert!(prime_ideals(&catalog::chain(1).as_lattice().unwrap()).unwrap().is_empty());
    }

    #[test]
    fn prime_ideals_are_prime_elements_of_the_ideal_frame() {
        for p in [catalog::b2(), catalog::chain(4), catalog::boolean(3)] {
            let l = p.as_lattice().unwrap();
            let il = k_ideals(&p, Arity::Omega).unwrap();
            let primes = prime_elements(&il.frame().unwrap());
            let expected: Vec<Subset> = primes.ones().map(|i| il.ideals()[i].clone()).collect();
            assert_eq!(prime_ideals(&l).unwrap(), expected);
        }
    }

    #[test]
    fn duals() {
        for p in [catalog::chain(3), catalog::b2()] {
            let f = frame(p.clone());
            assert!(iso_check(hochster_dual(&f).unwrap().frame.poset(), &p));
            assert!(double_dual_check(&f).is_ok());
        }
        let idl = k_ideals(&catalog::b2(), Arity::Finite(2)).unwrap().frame().unwrap();
        let d = hochster_dual(&idl).unwrap();
        assert!(d.frame.is_distributive());
        assert!(iso_check(d.frame.poset(), idl.poset().opposite().as_lattice().unwrap().poset()));
    }

    #[test]
    fn point_bijection() {
        let c3 = frame(catalog::chain(3));
        let d = hochster_dual(&c3).unwrap();
        let bij = dual_point_bijection(&c3, &d);
        assert!(bij.bijective && bij.reverses_specialization);
        // the generic point x_0 becomes the closed point of the dual
        let x0 = bij.source.iter().position(|x| c3.name(x.prime) == "0").unwrap();
        let y = bij.dual[bij.image[x0]];
        assert!(bij.dual.iter().all(|z| d.frame.leq(z.prime, y.prime)));

        let one = frame(catalog::chain(1));
        let bij = dual_point_bijection(&one, &hochster_dual(&one).unwrap());
        assert!(bij.source.is_empty() && bij.bijective);
    }

    #[test]
    fn thomason() {
        let c3 = frame(catalog::chain(3));
        let r = thomason_correspondence(&c3, Arity::Omega).unwrap();
        assert_eq!(r.thomason.iter().filter(|s| !s.is_clear()).count(), 2);
        let b2 = frame(catalog::b2());
        assert_eq!(thomason_correspondence(&b2, Arity::Omega).unwrap().thomason.len(), 4);
        let one = frame(catalog::chain(1));
        assert_eq!(thomason_correspondence(&one, Arity::Omega).unwrap().thomason.len(), 1);
    }
}
