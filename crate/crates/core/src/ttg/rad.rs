use crate::frame::{k_compact_elements, Arity, Frame};
use crate::poset::{FinitePoset, Subset};
use crate::stone::{point_space, prime_elements, FiniteSpace};

use super::closure::{close, closed_sets, Rules};
use super::presentation::TTPresentation;
use super::TtgError;

/// Radical ideals of a presentation at one arity, ordered by inclusion.
#[derive(Debug, Clone)]
pub struct RadLattice {
    arity: Arity,
    ideals: Vec<Subset>,
    frame: Frame,
    /// `principal[x]`: index of `rad(x)`.
    principal: Vec<usize>,
}

impl RadLattice {
    pub fn arity(&self) -> Arity {
        self.arity
    }

    pub fn ideals(&self) -> &[Subset] {
        &self.ideals
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    pub fn index_of(&self, carrier: &Subset) -> Option<usize> {
        self.ideals.iter().position(|s| s == carrier)
    }

    pub fn principal(&self, x: usize) -> usize {
        self.principal[x]
    }

    pub fn principals(&self) -> &[usize] {
        &self.principal
    }
}

pub fn rad_lattice(t: &TTPresentation, arity: Arity) -> Result<RadLattice, TtgError> {
    let ideals = closed_sets(t, arity, Rules::RADICAL);
    let names: Vec<String> = ideals.iter().map(|s| t.label(s)).collect();
    let order = FinitePoset::from_subsets(names, &ideals).map_err(|e| TtgError::FrameFailure(e.to_string()))?;
    let lattice = order.as_lattice().map_err(|e| TtgError::FrameFailure(e.to_string()))?;
    if let Some([a, b, c]) = lattice.distributivity_witness() {
        return Err(TtgError::FrameFailure(format!(
            "{} ∧ ({} ∨ {}) is not distributive",
            lattice.name(a),
            lattice.name(b),
            lattice.name(c)
        )));
    }
    let frame = Frame::new(lattice).map_err(|e| TtgError::FrameFailure(e.to_string()))?;
    let principal = (0..t.len())
        .map(|x| {
            let rad = close(t, &crate::poset::subset_of(t.len(), [x]), arity, Rules::RADICAL);
            ideals.iter().position(|s| *s == rad).expect("closure of a point is enumerated")
        })
        .collect();
    Ok(RadLattice {
        arity,
        ideals,
        frame,
        principal,
    })
}

/// First pair with `rad(X ⊗ Y) ≠ rad(X) ∧ rad(Y)`.
pub fn tensor_property_witness(t: &TTPresentation, rad: &RadLattice) -> Option<(usize, usize)> {
    let n = t.len();
    (0..n)
        .flat_map(|x| (x..n).map(move |y| (x, y)))
        .find(|&(x, y)| rad.principal(t.tensor(x, y)) != rad.frame.meet(rad.principal(x), rad.principal(y)))
}

pub fn tensor_property_check(t: &TTPresentation, arity: Arity) -> Result<Option<(usize, usize)>, TtgError> {
    Ok(tensor_property_witness(t, &rad_lattice(t, arity)?))
}

/// Checks `rad(∐M) = ∨ rad(m)` over declared coproducts with fewer than `k` members, and
/// returns how many were checked.
pub fn coproduct_join_check(t: &TTPresentation, arity: Arity) -> Result<usize, TtgError> {
    let rad = rad_lattice(t, arity)?;
    let mut checked = 0;
    for (members, &c) in t.coproducts() {
        if !arity.admits(members.len()) {
            continue;
        }
        let join = rad.frame.join_all(members.iter().map(|&m| rad.principal(m)));
        if join != rad.principal(c) {
            let names: Vec<&str> = members.iter().map(|&m| t.name(m)).collect();
            return Err(TtgError::LemmaFailure(format!(
                "rad({}) differs from the join of rad over [{}]",
                t.name(c),
                names.join(",")
            )));
        }
        checked += 1;
    }
    Ok(checked)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrincipalCompactReport {
    /// Indices of the compact elements of the Rad frame.
    pub compacts: Vec<usize>,
    /// Indices of the principal ideals, deduplicated.
    pub principals: Vec<usize>,
    pub compacts_are_principal: bool,
    /// A set `S` and object `X ∈ rad(S)` lying in no `rad(S')` with `S' ⊆ S` small.
    pub building_witness: Option<(Subset, usize)>,
}

impl PrincipalCompactReport {
    pub fn passed(&self) -> bool {
        self.compacts_are_principal && self.building_witness.is_none()
    }
}

/// Compact elements against principal ideals, plus the small-subset building property over
/// every subset of objects (exhaustive, so presentations stay small).
pub fn principal_compact_report(t: &TTPresentation, arity: Arity) -> Result<PrincipalCompactReport, TtgError> {
    let rad = rad_lattice(t, arity)?;
    let compacts: Vec<usize> = k_compact_elements(&rad.frame, arity).ones().collect();
    let mut principals = rad.principal.clone();
    principals.sort_unstable();
    principals.dedup();
    let compacts_are_principal = compacts == principals;

    let n = t.len();
    let mut building_witness = None;
    if let Some(max) = arity.max_size() {
        assert!(n <= 20, "exhaustive subset scan needs at most 20 objects");
        'outer: for mask in 0u32..1 << n {
            let s = crate::poset::subset_of(n, (0..n).filter(|&i| mask >> i & 1 == 1));
            let full = close(t, &s, arity, Rules::RADICAL);
            let mut reached = t.empty_set();
            let members: Vec<usize> = s.ones().collect();
            for size in 0..=max.min(members.len()) {
                for combo in combinations(&members, size) {
                    let seed = crate::poset::subset_of(n, combo);
                    reached.union_with(&close(t, &seed, arity, Rules::RADICAL));
                }
            }
            if let Some(x) = full.ones().find(|&x| !reached.contains(x)) {
                building_witness = Some((s, x));
                break 'outer;
            }
        }
    }
    Ok(PrincipalCompactReport {
        compacts,
        principals,
        compacts_are_principal,
        building_witness,
    })
}

/// A set of at least two distinct objects, small enough for `arity`, with no declared coproduct.
pub fn missing_coproduct(t: &TTPresentation, arity: Arity) -> Option<Subset> {
    let n = t.len();
    assert!(n <= 20, "exhaustive subset scan needs at most 20 objects");
    (0u32..1 << n)
        .filter(|mask| mask.count_ones() >= 2 && arity.admits(mask.count_ones() as usize))
        .map(|mask| (0..n).filter(|&i| mask >> i & 1 == 1).collect::<Vec<_>>())
        .find(|members| !t.coproducts().contains_key(members))
        .map(|members| crate::poset::subset_of(n, members))
}

/// Requires a declared coproduct for every small set of objects, as the lemma assumes.
pub fn principal_compact_check(t: &TTPresentation, arity: Arity) -> Result<PrincipalCompactReport, TtgError> {
    if !arity.admits(2) {
        return Err(TtgError::HypothesisViolated(
            "arity 2 admits no binary coproducts, while triangles still close ideals under finite sums".into(),
        ));
    }
    if let Some(s) = missing_coproduct(t, arity) {
        return Err(TtgError::HypothesisViolated(format!("no coproduct declared for {}", t.label(&s))));
    }
    let report = principal_compact_report(t, arity)?;
    if !report.compacts_are_principal {
        return Err(TtgError::LemmaFailure("compact elements are not the principal ideals".into()));
    }
    if let Some((s, x)) = &report.building_witness {
        return Err(TtgError::LemmaFailure(format!(
            "{} ∈ rad({}) needs a large generating family",
            t.name(*x),
            t.label(s)
        )));
    }
    Ok(report)
}

fn combinations(items: &[usize], size: usize) -> Vec<Vec<usize>> {
    if size == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (i, &first) in items.iter().enumerate() {
        for mut rest in combinations(&items[i + 1..], size - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeReport {
    /// Prime tensor ideals found from the definition among all tensor ideals.
    pub primes: Vec<Subset>,
    /// Prime elements of the Rad frame, as carriers.
    pub prime_elements: Vec<Subset>,
}

impl PrimeReport {
    pub fn agree(&self) -> bool {
        self.primes == self.prime_elements
    }
}

/// Proper tensor ideals `P` with `X ⊗ Y ∈ P ⇒ X ∈ P or Y ∈ P`, found among all (not
/// necessarily radical) tensor ideals.
pub fn prime_tensor_ideals(t: &TTPresentation, arity: Arity) -> Vec<Subset> {
    let n = t.len();
    closed_sets(t, arity, Rules::IDEAL)
        .into_iter()
        .filter(|p| {
            !p.contains(t.unit())
                && (0..n).all(|x| (0..n).all(|y| !p.contains(t.tensor(x, y)) || p.contains(x) || p.contains(y)))
        })
        .collect()
}

pub fn prime_report(t: &TTPresentation, arity: Arity) -> Result<PrimeReport, TtgError> {
    let rad = rad_lattice(t, arity)?;
    let prime_elements = prime_elements(&rad.frame).ones().map(|i| rad.ideals[i].clone()).collect();
    Ok(PrimeReport {
        primes: prime_tensor_ideals(t, arity),
        prime_elements,
    })
}

/// `pt(Rad)` with its topology.
pub fn spc(t: &TTPresentation, arity: Arity) -> Result<FiniteSpace, TtgError> {
    Ok(point_space(rad_lattice(t, arity)?.frame()))
}
