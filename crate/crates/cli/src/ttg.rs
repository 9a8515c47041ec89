//! `ttg <file> <verb>`: radical ideals, spectra, supports, quotients and extension/restriction.

use std::path::Path;

use serde_json::json;

use framekit::frame::Arity;
use framekit::ttg::{
    coproduct_join_check, ext_res, prime_report, principal_compact_check, quotient_frame, rad_closure,
    rad_lattice, spc, tensor_property_check, universal_morphism, validate_support, RadLattice, TTPresentation,
    TtgError,
};

use crate::load::{self, display_name, ttg_error};
use crate::order::{listing, space_listing};
use crate::report::{Check, InputError, Report};

fn header(path: &Path, t: &TTPresentation, arity: Arity) -> Check {
    Check::info("input")
        .with("file", display_name(path))
        .with("objects", t.names().to_vec())
        .with("arity", arity.to_string())
}

/// A failed lemma is a failed check; a violated hypothesis means the check does not apply.
fn lemma(name: &str, result: Result<Check, TtgError>) -> Result<Check, InputError> {
    match result {
        Ok(c) => Ok(c),
        Err(TtgError::HypothesisViolated(h)) => Ok(Check::skipped(name, h)),
        Err(e @ (TtgError::LemmaFailure(_) | TtgError::FrameFailure(_))) => {
            Ok(Check::new(name, false).with("witness", e.to_string()))
        }
        Err(e) => Err(ttg_error(&e)),
    }
}

fn rad_or_fail(t: &TTPresentation, arity: Arity, r: &mut Report) -> Option<RadLattice> {
    match rad_lattice(t, arity) {
        Ok(rad) => {
            r.push(Check::new("frame", true).with("count", rad.len()));
            Some(rad)
        }
        Err(e) => {
            r.push(Check::new("frame", false).with("witness", e.to_string()));
            None
        }
    }
}

pub fn rad(path: &Path, arity: Arity) -> Result<Report, InputError> {
    let t = load::presentation(path)?;
    let mut r = Report::new("ttg rad");
    r.push(header(path, &t, arity));
    let Some(rad) = rad_or_fail(&t, arity, &mut r) else {
        return Ok(r);
    };
    r.push(Check::info("ideals").with(
        "carriers",
        rad.ideals().iter().map(|s| t.label(s)).collect::<Vec<_>>(),
    ));
    r.push(Check::info("principal").with(
        "objects",
        (0..t.len())
            .map(|x| json!({ "object": t.name(x), "rad": t.label(&rad.ideals()[rad.principal(x)]) }))
            .collect::<Vec<_>>(),
    ));
    r.push(lemma(
        "tensor_property",
        tensor_property_check(&t, arity).map(|w| {
            Check::new("tensor_property", w.is_none()).witness(w.map(|(a, b)| json!([t.name(a), t.name(b)])))
        }),
    )?);
    r.push(lemma(
        "coproduct_join",
        coproduct_join_check(&t, arity).map(|n| Check::new("coproduct_join", true).with("checked", n)),
    )?);
    r.push(lemma(
        "principal_compact",
        principal_compact_check(&t, arity).map(|p| Check::new("principal_compact", true).with("compacts", p.compacts.len())),
    )?);
    r.push(lemma(
        "primes",
        prime_report(&t, arity).map(|p| {
            Check::new("primes", p.agree())
                .with("prime_ideals", p.primes.iter().map(|s| t.label(s)).collect::<Vec<_>>())
                .with("prime_elements", p.prime_elements.iter().map(|s| t.label(s)).collect::<Vec<_>>())
        }),
    )?);
    Ok(r)
}

pub fn frame(path: &Path, arity: Arity) -> Result<Report, InputError> {
    let t = load::presentation(path)?;
    let mut r = Report::new("ttg frame");
    r.push(header(path, &t, arity));
    if let Some(rad) = rad_or_fail(&t, arity, &mut r) {
        r.push(listing(rad.frame().poset()));
    }
    Ok(r)
}

pub fn spectrum(path: &Path, arity: Arity) -> Result<Report, InputError> {
    let t = load::presentation(path)?;
    let mut r = Report::new("ttg spc");
    r.push(header(path, &t, arity));
    match spc(&t, arity) {
        Ok(x) => r.push(space_listing(&x)?),
        Err(e) => r.push(Check::new("frame", false).with("witness", e.to_string())),
    }
    Ok(r)
}

pub fn support(path: &Path, datum: &Path, arity: Arity) -> Result<Report, InputError> {
    let t = load::presentation(path)?;
    let d = load::support(datum, &t)?;
    let mut r = Report::new("ttg support");
    r.push(header(path, &t, arity).with("datum", display_name(datum)));
    let axioms = validate_support(&t, &d, arity);
    let valid = axioms.iter().all(|a| a.pass());
    for a in axioms {
        r.push(Check::new(a.axiom, a.pass()).witness(a.witness));
    }
    if !valid {
        return Ok(r);
    }
    r.push(match universal_morphism(&t, &d, arity) {
        Ok(u) => {
            let source = u.morphism.source();
            Check::new("universal_morphism", u.factorizing == 1)
                .with("factorizing", u.factorizing)
                .with(
                    "map",
                    (0..source.len())
                        .map(|i| json!([source.name(i), d.frame.name(u.morphism.apply(i))]))
                        .collect::<Vec<_>>(),
                )
        }
        Err(TtgError::HypothesisViolated(h)) => Check::skipped("universal_morphism", h),
        Err(e) => Check::new("universal_morphism", false).with("witness", e.to_string()),
    });
    Ok(r)
}

pub fn quotient(path: &Path, generators: &[String], arity: Arity) -> Result<Report, InputError> {
    let t = load::presentation(path)?;
    let seed = t.resolve_all(generators).map_err(|e| ttg_error(&e))?;
    let s = rad_closure(&t, &seed, arity, true).carrier;
    let mut r = Report::new("ttg quotient");
    r.push(header(path, &t, arity).with("ideal", t.label(&s)));
    match quotient_frame(&t, arity, &s) {
        Ok(q) => {
            let space = spc(&t, arity).map_err(|e| ttg_error(&e))?;
            r.push(listing(q.frame.poset()));
            r.push(Check::new("image_is_complement", q.image_is_complement).with("points", space.label(&q.complement)));
            r.push(Check::new("complement_is_closed", q.complement_is_closed));
        }
        Err(e @ TtgError::FrameFailure(_)) => r.push(Check::new("frame", false).with("witness", e.to_string())),
        Err(e) => return Err(ttg_error(&e)),
    }
    Ok(r)
}

pub fn extres(path: &Path, sub: &[String], k: Arity, k2: Arity) -> Result<Report, InputError> {
    let t = load::presentation(path)?;
    let sub = t.resolve_all(sub).map_err(|e| ttg_error(&e))?;
    let mut r = Report::new("ttg extres");
    r.push(header(path, &t, k).with("sub", t.label(&sub)).with("to", k2.to_string()));
    match ext_res(&t, &sub, k, k2) {
        Ok(e) => {
            r.push(Check::new("restrict_extend_identity", true).with("small", e.small.len()).with("large", e.large.len()));
            r.push(Check::new("extension_injective", e.extension_injective()));
            r.push(Check::info("tensor_hypothesis").with("holds", e.tensor_hypothesis));
            r.push(match e.extension_is_morphism {
                Some(b) => Check::new("extension_is_morphism", b),
                None => Check::skipped("extension_is_morphism", "tensor property fails on the sub-objects"),
            });
            r.push(match e.spatiality_descends {
                Some(b) => Check::new("spatiality_descends", b),
                None => Check::skipped("spatiality_descends", "tensor property fails on the sub-objects"),
            });
        }
        Err(TtgError::HypothesisViolated(h)) => r.push(Check::skipped("ext_res", h)),
        Err(e @ (TtgError::AdjunctionFailure(_) | TtgError::FrameFailure(_))) => {
            r.push(Check::new("restrict_extend_identity", false).with("witness", e.to_string()))
        }
        Err(e) => return Err(ttg_error(&e)),
    }
    Ok(r)
}
