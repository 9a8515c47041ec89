//! Finite tensor-triangulated presentations: tables for tensor, shift, triangles, summands
//! and coproducts, with the radical ideal frame built from them, support data and their
//! universal morphism, prime ideals, and the maps relating different arities and quotients.

mod closure;
pub mod models;
mod parse;
mod presentation;
mod rad;
mod stratify;
mod support;

use thiserror::Error;

use crate::frame::FrameError;

pub use closure::{close, closed_sets, ideal_violation, rad_closure, Rules, TensorIdeal};
pub use parse::{parse_ttg, write_ttg};
pub use presentation::{validate_presentation, PresentationData, TTPresentation};
pub use rad::{
    coproduct_join_check, missing_coproduct, principal_compact_check, principal_compact_report, prime_report, prime_tensor_ideals,
    rad_lattice, spc, tensor_property_check, tensor_property_witness, PrimeReport, PrincipalCompactReport,
    RadLattice,
};
pub use stratify::{ext_res, quotient_frame, ExtRes, Quotient};
pub use support::{enumerate_supports, parse_support, universal_morphism, validate_support, AxiomResult, SupportDatum, SupportFile, UniversalMorphism};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TtgError {
    #[error("unknown object `{0}`")]
    UnknownObject(String),
    #[error("invalid presentation: {}", .0.join("; "))]
    ValidationFailure(Vec<String>),
    #[error("radical ideals do not form a frame: {0}")]
    FrameFailure(String),
    #[error("lemma failed: {0}")]
    LemmaFailure(String),
    #[error("support is not well defined: rad({0}) = rad({1}) but the values differ")]
    NotWellDefined(String, String),
    #[error("expected one factorizing morphism, found {0}")]
    NotUnique(usize),
    #[error("not a frame morphism: {0}")]
    NotAMorphism(String),
    #[error("invalid support: {0}")]
    SupportInvalid(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("extension and restriction disagree: {0}")]
    AdjunctionFailure(String),
    #[error("not a radical ideal: {0}")]
    NotAnIdeal(String),
    #[error(transparent)]
    Frame(#[from] FrameError),
}

#[cfg(test)]
mod tests {
    use super::models::*;
    use super::*;
    use crate::catalog;
    use crate::frame::Arity;
    use crate::poset::{iso_check, subset_of};
    use crate::stone::is_spatial;

    const OMEGA: Arity = Arity::Omega;

    fn set(t: &TTPresentation, names: &[&str]) -> crate::poset::Subset {
        t.resolve_all(names).unwrap()
    }

    #[test]
    fn closure_examples() {
        let t = subs2();
        let r = rad_closure(&t, &set(&t, &["1"]), OMEGA, true);
        assert_eq!(t.label(&r.carrier), "{0,1}");
        assert_eq!(rad_closure(&t, &set(&t, &["12"]), OMEGA, true).carrier, t.all_objects());
        assert_eq!(t.label(&rad_closure(&t, &set(&t, &["0"]), OMEGA, true).carrier), "{0}");
        assert_eq!(t.label(&rad_closure(&t, &set(&t, &["1", "2"]), Arity::Finite(2), true).carrier), "{0,1,2,12}");
    }

    #[test]
    fn radical_rule_uses_powers() {
        let t = TTPresentation::new(nilpotent_data(3)).unwrap();
        let zero = rad_closure(&t, &t.empty_set(), OMEGA, true);
        assert_eq!(t.label(&zero.carrier), "{0,t1,t2}");
        let plain = rad_closure(&t, &t.empty_set(), OMEGA, false);
        assert_eq!(t.label(&plain.carrier), "{0}");
        assert!(ideal_violation(&t, &plain.carrier, OMEGA, Rules::RADICAL).is_some());
        assert!(ideal_violation(&t, &zero.carrier, OMEGA, Rules::RADICAL).is_none());
    }

    #[test]
    fn rad_lattices() {
        let t = subs2();
        let rad = rad_lattice(&t, OMEGA).unwrap();
        assert!(iso_check(rad.frame().poset(), &catalog::b2()));
        assert_eq!(rad_lattice(&one_object(), OMEGA).unwrap().len(), 2);
        assert_eq!(rad_lattice(&trivial(), OMEGA).unwrap().len(), 1);
        assert!(iso_check(rad_lattice(&chain3(), OMEGA).unwrap().frame().poset(), &catalog::chain(3)));
    }

    #[test]
    fn checks_on_subs2() {
        let t = subs2();
        assert_eq!(tensor_property_check(&t, OMEGA).unwrap(), None);
        assert!(coproduct_join_check(&t, OMEGA).unwrap() > 0);
        let r = principal_compact_check(&t, OMEGA).unwrap();
        assert_eq!(r.compacts.len(), 4);
        // at arity 2 the triangles build joins that no small family of generators reaches
        let r = principal_compact_report(&t, Arity::Finite(2)).unwrap();
        assert!(!r.passed());
        assert!(matches!(principal_compact_check(&t, Arity::Finite(2)), Err(TtgError::HypothesisViolated(_))));
        assert!(principal_compact_check(&t, Arity::Finite(3)).unwrap().passed());
        let mut bare = lattice_data(&catalog::b2().as_lattice().unwrap(), false);
        bare.summands.clear();
        let bare = TTPresentation::new(bare).unwrap();
        assert!(matches!(principal_compact_check(&bare, OMEGA), Err(TtgError::HypothesisViolated(_))));
    }

    #[test]
    fn primes_and_spectrum() {
        let t = subs2();
        let report = prime_report(&t, OMEGA).unwrap();
        assert!(report.agree());
        let labels: Vec<String> = report.primes.iter().map(|p| t.label(p)).collect();
        assert_eq!(labels, ["{0,1}", "{0,2}"]);
        let x = spc(&t, OMEGA).unwrap();
        assert_eq!(x.len(), 2);
        assert_eq!(x.opens().len(), 4);
        assert!(spc(&trivial(), OMEGA).unwrap().is_empty());
        let s = spc(&chain3(), OMEGA).unwrap();
        assert_eq!((s.len(), s.opens().len()), (2, 3));
    }

    #[test]
    fn supports() {
        let t = subs2();
        let rad = rad_lattice(&t, OMEGA).unwrap();
        let b2 = crate::frame::Frame::from_poset(&catalog::b2()).unwrap();
        let d = SupportDatum::from_names(&t, b2.clone(), &[("0", "0"), ("1", "a"), ("2", "b"), ("12", "1")]).unwrap();
        assert!(validate_support(&t, &d, OMEGA).iter().all(|r| r.pass()));
        let u = universal_morphism(&t, &d, OMEGA).unwrap();
        assert!(u.morphism.is_injective() && u.morphism.is_surjective());

        let top = SupportDatum::from_names(&t, b2, &[("0", "1"), ("1", "1"), ("2", "1"), ("12", "1")]).unwrap();
        let results = validate_support(&t, &top, OMEGA);
        assert!(!results[0].pass() && results[0].axiom == "S1");
        assert!(matches!(universal_morphism(&t, &top, OMEGA), Err(TtgError::SupportInvalid(_))));

        let canonical = SupportDatum::canonical(&rad);
        let u = universal_morphism(&t, &canonical, OMEGA).unwrap();
        assert!(u.morphism.map().iter().enumerate().all(|(i, &j)| i == j));
    }

    #[test]
    fn quotients() {
        let t = subs2();
        let q = quotient_frame(&t, OMEGA, &set(&t, &["0"])).unwrap();
        assert_eq!(q.frame.len(), 4);
        assert!(q.image_is_complement && q.complement_is_closed);
        let q = quotient_frame(&t, OMEGA, &set(&t, &["0", "1"])).unwrap();
        assert!(iso_check(q.frame.poset(), &catalog::chain(2)));
        assert_eq!(q.point_map.len(), 1);
        assert!(q.image_is_complement);
        let q = quotient_frame(&t, OMEGA, &t.all_objects()).unwrap();
        assert_eq!((q.frame.len(), q.point_map.len()), (1, 0));
        assert!(matches!(quotient_frame(&t, OMEGA, &set(&t, &["1"])), Err(TtgError::NotAnIdeal(_))));
    }

    #[test]
    fn extension_and_restriction() {
        let t = subs2();
        let all = t.all_objects();
        let r = ext_res(&t, &all, Arity::Finite(3), OMEGA).unwrap();
        assert!(r.extension_injective());
        assert_eq!(r.extension_is_morphism, Some(true));
        let r = ext_res(&t, &all, OMEGA, OMEGA).unwrap();
        assert!(r.extend.iter().enumerate().all(|(i, &j)| i == j));
        assert!(is_spatial(r.large.frame()).is_spatial());
        // `12` generates through its summands; without them it does not
        assert!(ext_res(&t, &set(&t, &["0", "12"]), OMEGA, OMEGA).is_ok());
        let mut bare = lattice_data(&catalog::b2().as_lattice().unwrap(), false);
        bare.summands.clear();
        let bare = TTPresentation::new(bare).unwrap();
        let err = ext_res(&bare, &set(&bare, &["0", "1"]), OMEGA, OMEGA).unwrap_err();
        assert!(matches!(err, TtgError::HypothesisViolated(_)), "{err}");
        let sub = subset_of(t.len(), [t.index("0").unwrap(), t.index("1").unwrap()]);
        assert!(ext_res(&t, &sub, OMEGA, OMEGA).is_err());
    }
}
