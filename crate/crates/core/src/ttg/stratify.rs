use crate::frame::{Arity, Frame};
use crate::poset::{subset_of, FinitePoset, Subset};
use crate::refine::{pt_of_morphism, FrameMorphism};
use crate::stone::{is_spatial, point_space, points, u_open, Point};

use super::closure::{close, Rules};
use super::presentation::TTPresentation;
use super::rad::{rad_lattice, RadLattice};
use super::TtgError;

/// Extension `I ↦ rad_{k'}(I)` from the sub-presentation at arity `k` to the whole
/// presentation at `k'`, and restriction `J ↦ J ∩ sub`.
#[derive(Debug, Clone)]
pub struct ExtRes {
    pub small: RadLattice,
    pub large: RadLattice,
    /// Sub-objects in increasing order; object `i` of the sub-presentation is `members[i]`.
    pub members: Vec<usize>,
    pub extend: Vec<usize>,
    pub restrict: Vec<usize>,
    pub tensor_hypothesis: bool,
    /// Present when the tensor hypothesis holds.
    pub extension_is_morphism: Option<bool>,
    /// `Some(true)` when the large frame is spatial and so is the small one.
    pub spatiality_descends: Option<bool>,
}

impl ExtRes {
    pub fn extension_injective(&self) -> bool {
        let mut seen = self.extend.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len() == self.extend.len()
    }
}

pub fn ext_res(t: &TTPresentation, sub: &Subset, k: Arity, k2: Arity) -> Result<ExtRes, TtgError> {
    if !k.le(k2) {
        return Err(TtgError::HypothesisViolated(format!("arity {k} exceeds {k2}")));
    }
    let n = t.len();
    let generated = close(t, sub, k2, Rules::LOCALIZING);
    if let Some(x) = (0..n).find(|&x| !generated.contains(x)) {
        return Err(TtgError::HypothesisViolated(format!("{} is not generated by the sub-objects", t.name(x))));
    }
    let (small_t, members) = t.restrict(sub)?;
    let small = rad_lattice(&small_t, k)?;
    let large = rad_lattice(t, k2)?;
    let lift = |s: &Subset| subset_of(n, s.ones().map(|i| members[i]));
    let extend: Vec<usize> = small
        .ideals()
        .iter()
        .map(|i| {
            let carrier = close(t, &lift(i), k2, Rules::RADICAL);
            large.index_of(&carrier).expect("closure is enumerated")
        })
        .collect();
    let mut restrict = Vec::with_capacity(large.len());
    for j in large.ideals() {
        let carrier = subset_of(members.len(), (0..members.len()).filter(|&i| j.contains(members[i])));
        let idx = small.index_of(&carrier).ok_or_else(|| {
            TtgError::AdjunctionFailure(format!("{} ∩ sub-objects is not a radical ideal", t.label(j)))
        })?;
        restrict.push(idx);
    }

    let sf = small.frame();
    let lf = large.frame();
    for i in 0..small.len() {
        if restrict[extend[i]] != i {
            return Err(TtgError::AdjunctionFailure(format!(
                "restricting the extension of {} does not return it",
                sf.name(i)
            )));
        }
    }
    for j in 0..large.len() {
        if !lf.leq(extend[restrict[j]], j) {
            return Err(TtgError::AdjunctionFailure(format!("extension of the restriction of {} is larger", lf.name(j))));
        }
    }
    for a in 0..small.len() {
        for b in 0..small.len() {
            if extend[sf.join(a, b)] != lf.join(extend[a], extend[b]) {
                return Err(TtgError::AdjunctionFailure(format!(
                    "extension does not preserve the join of {} and {}",
                    sf.name(a),
                    sf.name(b)
                )));
            }
        }
    }
    for a in 0..large.len() {
        for b in 0..large.len() {
            if restrict[lf.meet(a, b)] != sf.meet(restrict[a], restrict[b]) {
                return Err(TtgError::AdjunctionFailure(format!(
                    "restriction does not preserve the meet of {} and {}",
                    lf.name(a),
                    lf.name(b)
                )));
            }
        }
    }

    let m = members.len();
    let tensor_hypothesis = (0..m).all(|x| {
        (0..m).all(|y| {
            let (gx, gy) = (members[x], members[y]);
            large.principal(t.tensor(gx, gy)) == lf.meet(large.principal(gx), large.principal(gy))
        })
    });
    let (extension_is_morphism, spatiality_descends) = if tensor_hypothesis {
        let morphism = FrameMorphism::new(sf.clone(), lf.clone(), extend.clone()).is_ok();
        let descends = !is_spatial(lf).is_spatial() || is_spatial(sf).is_spatial();
        (Some(morphism), Some(descends))
    } else {
        (None, None)
    };
    Ok(ExtRes {
        small,
        large,
        members,
        extend,
        restrict,
        tensor_hypothesis,
        extension_is_morphism,
        spatiality_descends,
    })
}

/// `{I ∈ Rad : I ⊇ S}` with the surjection `I ↦ I ∨ S` and the induced point map.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub frame: Frame,
    /// Rad index of each quotient element.
    pub elements: Vec<usize>,
    pub surjection: FrameMorphism,
    /// Points of the quotient, mapped into `pt(Rad)`.
    pub point_map: Vec<usize>,
    /// `pt(Rad) \ U(S)`, as indices into `points(Rad)`.
    pub complement: Subset,
    /// The image of `point_map` is exactly `complement`.
    pub image_is_complement: bool,
    pub complement_is_closed: bool,
}

pub fn quotient_frame(t: &TTPresentation, arity: Arity, s: &Subset) -> Result<Quotient, TtgError> {
    let rad = rad_lattice(t, arity)?;
    let si = rad.index_of(s).ok_or_else(|| TtgError::NotAnIdeal(t.label(s)))?;
    let f = rad.frame();
    let elements: Vec<usize> = f.up(si).ones().collect();
    let names: Vec<String> = elements.iter().map(|&i| f.name(i).to_string()).collect();
    let order = FinitePoset::from_relation(names, |a, b| f.leq(elements[a], elements[b]))
        .map_err(|e| TtgError::FrameFailure(e.to_string()))?;
    let frame = Frame::from_poset(&order).map_err(|e| TtgError::FrameFailure(e.to_string()))?;
    let map = (0..f.len())
        .map(|i| elements.iter().position(|&e| e == f.join(i, si)).expect("up-set is closed under joins"))
        .collect();
    let surjection =
        FrameMorphism::new(f.clone(), frame.clone(), map).map_err(|e| TtgError::NotAMorphism(e.to_string()))?;
    if !surjection.is_surjective() {
        return Err(TtgError::NotAMorphism("I ↦ I ∨ S is not surjective".into()));
    }
    let point_map = pt_of_morphism(&surjection);
    let ambient: Vec<Point> = points(f);
    let open = u_open(f, &ambient, si);
    let mut complement = subset_of(ambient.len(), 0..ambient.len());
    complement.difference_with(&open);
    let image = subset_of(ambient.len(), point_map.iter().copied());
    let image_is_complement = image == complement && point_map.len() == image.count_ones(..);
    let space = point_space(f);
    let complement_is_closed = space.is_open(&space.complement(&image));
    Ok(Quotient {
        frame,
        elements,
        surjection,
        point_map,
        complement,
        image_is_complement,
        complement_is_closed,
    })
}
