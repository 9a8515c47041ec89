//! Seeded randomized searches.

use serde_json::json;

use framekit::corpus::{random_injective_chain, random_presentations, rng};
use framekit::frame::Arity;
use framekit::refine::{bij_points_check, RefineError};
use framekit::ttg::tensor_property_check;

use crate::load::ttg_error;
use crate::report::{Check, InputError, Report};

/// Largest presentation drawn by `search tensor`.
pub const MAX_OBJECTS: usize = 6;
/// Largest top frame drawn by `search bijpoints`.
pub const MAX_FRAME: usize = 8;

/// Looks for presentations whose radical ideals fail the tensor property at arity 3, 4 or
/// omega. Candidates are listed; finding none is not a failure.
pub fn tensor(count: usize, seed: u64) -> Result<Report, InputError> {
    let (presentations, drawn) = random_presentations(seed, count, MAX_OBJECTS);
    let mut candidates = Vec::new();
    for (i, t) in presentations.iter().enumerate() {
        for arity in [Arity::Finite(3), Arity::Finite(4), Arity::Omega] {
            if let Some((a, b)) = tensor_property_check(t, arity).map_err(|e| ttg_error(&e))? {
                candidates.push(json!({
                    "index": i,
                    "arity": arity.to_string(),
                    "objects": t.names().to_vec(),
                    "pair": [t.name(a), t.name(b)],
                }));
            }
        }
    }
    let mut r = Report::new("search tensor");
    r.push(
        Check::info("tensor_property")
            .with("seed", seed)
            .with("presentations", presentations.len())
            .with("drawn", drawn)
            .with("candidates", candidates),
    );
    Ok(r)
}

/// Random injective chains `F -> G -> H` of sublattice inclusions checked against the
/// point-bijection criterion.
pub fn bijpoints(count: usize, seed: u64) -> Result<Report, InputError> {
    let mut r_ng = rng(seed);
    let (mut checked, mut skipped) = (0usize, 0usize);
    let mut counterexamples = Vec::new();
    for i in 0..count {
        let (phi, psi) = random_injective_chain(&mut r_ng, MAX_FRAME);
        match bij_points_check(&phi, &psi) {
            Ok(_) => checked += 1,
            Err(RefineError::HypothesisViolated(_)) => skipped += 1,
            Err(e) => counterexamples.push(json!({ "index": i, "reason": e.to_string() })),
        }
    }
    let mut r = Report::new("search bijpoints");
    r.push(
        Check::new("bij_points", counterexamples.is_empty())
            .with("seed", seed)
            .with("checked", checked)
            .with("hypothesis_violated", skipped)
            .with("counterexamples", counterexamples),
    );
    Ok(r)
}
