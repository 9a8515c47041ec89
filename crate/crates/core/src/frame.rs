//! Finite frames, join-arity parameterized compactness and coherence, the ideal
//! completion `Idl_k`, and the completion round trip between coherent frames and
//! their lattices of compact elements.
//!
//! Infinite regular cardinals collapse on finite data, so the arity is a finite
//! surrogate: `Arity::Finite(k)` means "joins of fewer than `k` elements" and
//! `Arity::Omega` means "all existing joins".

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::poset::{subset_of, FinitePoset, Lattice, PosetError, Subset};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FrameError {
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error("arity must be an integer >= 2 or `omega`, got `{0}`")]
    InvalidArity(String),
    #[error("poset has no least element")]
    NoBottom,
    #[error("not coherent at arity {arity}: {failure}")]
    NotCoherent { arity: Arity, failure: String },
    #[error("completion round trip failed: {0}")]
    RoundTripFailure(String),
    #[error("adjunction check failed: {0}")]
    AdjunctionFailure(String),
    #[error("ascent check failed: {0}")]
    AscentFailure(String),
    #[error("arities out of order: {0} > {1}")]
    ArityOrder(Arity, Arity),
}

/// Join arity: `Finite(k)` admits joins of fewer than `k` elements, `Omega` admits all.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Arity {
    Finite(usize),
    Omega,
}

impl Arity {
    pub fn finite(k: usize) -> Result<Self, FrameError> {
        if k < 2 {
            return Err(FrameError::InvalidArity(k.to_string()));
        }
        Ok(Arity::Finite(k))
    }

    /// Whether a family of `size` members is small enough.
    pub fn admits(self, size: usize) -> bool {
        match self {
            Arity::Finite(k) => size < k,
            Arity::Omega => true,
        }
    }

    /// Largest admissible family size, `None` when unbounded.
    pub fn max_size(self) -> Option<usize> {
        match self {
            Arity::Finite(k) => Some(k - 1),
            Arity::Omega => None,
        }
    }

    pub fn le(self, other: Arity) -> bool {
        match (self, other) {
            (_, Arity::Omega) => true,
            (Arity::Omega, Arity::Finite(_)) => false,
            (Arity::Finite(a), Arity::Finite(b)) => a <= b,
        }
    }
}

impl fmt::Display for Arity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Arity::Finite(k) => write!(f, "{k}"),
            Arity::Omega => f.write_str("omega"),
        }
    }
}

impl FromStr for Arity {
    type Err = FrameError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.eq_ignore_ascii_case("omega") {
            return Ok(Arity::Omega);
        }
        match s.parse::<usize>() {
            Ok(k) if k >= 2 => Ok(Arity::Finite(k)),
            _ => Err(FrameError::InvalidArity(s.to_string())),
        }
    }
}

/// A lattice certified distributive. Finite lattices are complete, so binary
/// distributivity is the whole infinite-join distributive law here.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Frame {
    lattice: Lattice,
}

impl std::ops::Deref for Frame {
    type Target = Lattice;
    fn deref(&self) -> &Lattice {
        &self.lattice
    }
}

impl Frame {
    pub fn new(lattice: Lattice) -> Result<Self, FrameError> {
        lattice.check_distributive()?;
        Ok(Frame { lattice })
    }

    pub fn from_poset(p: &FinitePoset) -> Result<Self, FrameError> {
        Frame::new(p.as_lattice()?)
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    /// The opposite lattice, which is again distributive.
    pub fn opposite(&self) -> Frame {
        Frame {
            lattice: self.lattice.opposite(),
        }
    }
}

/// A `k`-ideal: non-empty, down-closed, and closed under existing joins of fewer than `k` elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ideal {
    pub carrier: Subset,
    pub arity: Arity,
}

/// Checks the ideal conditions directly against the base poset.
pub fn is_k_ideal(p: &FinitePoset, arity: Arity, set: &Subset) -> bool {
    if set.is_clear() || !p.is_down_set(set) {
        return false;
    }
    p.antichains(set, arity.max_size()).iter().all(|a| match p.partial_join_of(a) {
        Some(j) => set.contains(j),
        None => true,
    })
}

/// The least `k`-ideal containing `seed`: alternately down-close and add existing joins of
/// small antichains until nothing changes.
pub fn ideal_closure(p: &FinitePoset, arity: Arity, seed: &Subset) -> Result<Subset, FrameError> {
    let bottom = p.bottom().ok_or(FrameError::NoBottom)?;
    let mut current = seed.clone();
    current.insert(bottom);
    loop {
        let mut next = p.down_closure(&current);
        for a in p.antichains(&next.clone(), arity.max_size()) {
            if let Some(j) = p.partial_join_of(&a) {
                next.insert(j);
            }
        }
        if next == current {
            return Ok(current);
        }
        current = next;
    }
}

/// The principal ideal `{b : b <= a}`, an ideal at every arity.
pub fn principal_ideal(p: &FinitePoset, a: &str, arity: Arity) -> Result<Ideal, FrameError> {
    let i = p.resolve(a)?;
    Ok(Ideal {
        carrier: p.down(i).clone(),
        arity,
    })
}

/// All `k`-ideals of a poset with a least element, ordered by inclusion.
#[derive(Debug, Clone)]
pub struct IdealLattice {
    base: FinitePoset,
    arity: Arity,
    ideals: Vec<Subset>,
    order: FinitePoset,
}

/// Outcome of joining a family of ideals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealJoin {
    /// Least ideal containing the union, by closure fixpoint.
    pub ideal: Subset,
    /// Index of `ideal` in the lattice.
    pub index: usize,
    /// `{a : a = ∨A, A ⊆ union, |A| < k}` computed in a single step.
    pub one_step: Subset,
    pub one_step_agrees: bool,
}

pub fn k_ideals(p: &FinitePoset, arity: Arity) -> Result<IdealLattice, FrameError> {
    p.bottom().ok_or(FrameError::NoBottom)?;
    let ideals: Vec<Subset> = p
        .down_sets()
        .into_iter()
        .filter(|s| is_k_ideal(p, arity, s))
        .collect();
    let names = ideals.iter().map(|s| p.subset_label(s)).collect();
    let order = FinitePoset::from_subsets(names, &ideals)?;
    Ok(IdealLattice {
        base: p.clone(),
        arity,
        ideals,
        order,
    })
}

impl IdealLattice {
    pub fn base(&self) -> &FinitePoset {
        &self.base
    }

    pub fn arity(&self) -> Arity {
        self.arity
    }

    pub fn ideals(&self) -> &[Subset] {
        &self.ideals
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    /// Ideals ordered by inclusion, each named by its members.
    pub fn order(&self) -> &FinitePoset {
        &self.order
    }

    pub fn ideal(&self, i: usize) -> Ideal {
        Ideal {
            carrier: self.ideals[i].clone(),
            arity: self.arity,
        }
    }

    pub fn index_of(&self, carrier: &Subset) -> Option<usize> {
        self.ideals.iter().position(|s| s == carrier)
    }

    /// Index of the principal ideal of base element `a`.
    pub fn principal(&self, a: usize) -> usize {
        self.index_of(self.base.down(a)).expect("principal ideals are ideals")
    }

    /// Meet is intersection; the empty family meets to the whole poset.
    pub fn meet(&self, members: &[usize]) -> usize {
        let mut s = self.base.full_subset();
        for &m in members {
            s.intersect_with(&self.ideals[m]);
        }
        self.index_of(&s).expect("ideals are closed under intersection")
    }

    pub fn join(&self, members: &[usize]) -> IdealJoin {
        let mut union = self.base.empty_subset();
        for &m in members {
            union.union_with(&self.ideals[m]);
        }
        let ideal = ideal_closure(&self.base, self.arity, &union).expect("base has a bottom");
        let index = self.index_of(&ideal).expect("closure is an ideal");
        let mut one_step = self.base.empty_subset();
        for a in self.base.antichains(&union, self.arity.max_size()) {
            if let Some(j) = self.base.partial_join_of(&a) {
                one_step.insert(j);
            }
        }
        let one_step_agrees = one_step == ideal;
        IdealJoin {
            ideal,
            index,
            one_step,
            one_step_agrees,
        }
    }

    /// The ideal lattice as a frame, when it is distributive.
    pub fn frame(&self) -> Result<Frame, FrameError> {
        Frame::from_poset(&self.order)
    }
}

/// Joins a family of ideals (given by index) in `il`.
pub fn ideal_join(il: &IdealLattice, members: &[usize]) -> IdealJoin {
    il.join(members)
}

/// Elements `a` such that every cover `a <= ∨A` (with the join existing) refines to a
/// sub-family of fewer than `k` members. Only antichains `A` are scanned: a family and
/// its maximal elements have the same upper bounds.
pub fn k_compact_in(p: &FinitePoset, arity: Arity) -> Subset {
    let n = p.len();
    let Some(max_small) = arity.max_size() else {
        return p.full_subset();
    };
    let mut not_compact = p.empty_subset();
    for a in p.antichains(&p.full_subset(), None) {
        let Some(j) = p.partial_join_of(&a) else { continue };
        if a.len() <= max_small {
            continue;
        }
        let mut covered = p.empty_subset();
        for b in sub_families(&a, max_small) {
            if let Some(jb) = p.partial_join_of(&b) {
                covered.union_with(p.down(jb));
            }
        }
        let mut bad = p.down(j).clone();
        bad.difference_with(&covered);
        not_compact.union_with(&bad);
    }
    subset_of(n, (0..n).filter(|&i| !not_compact.contains(i)))
}

/// All sub-families of `items` with at most `max` members.
fn sub_families(items: &[usize], max: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    let mut cur = Vec::new();
    fn rec(items: &[usize], from: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == max {
            return;
        }
        for k in from..items.len() {
            cur.push(items[k]);
            out.push(cur.clone());
            rec(items, k + 1, max, cur, out);
            cur.pop();
        }
    }
    rec(items, 0, max, &mut cur, &mut out);
    out
}

pub fn k_compact_elements(f: &Frame, arity: Arity) -> Subset {
    k_compact_in(f.poset(), arity)
}

/// Which coherence condition fails, with a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoherenceFailure {
    /// The element is not the join of the compacts below it.
    NotJoinOfCompacts { element: usize },
    TopNotCompact { top: usize },
    JoinNotCompact { members: Vec<usize>, join: usize },
    MeetNotCompact { a: usize, b: usize, meet: usize },
}

impl CoherenceFailure {
    pub fn condition(&self) -> &'static str {
        match self {
            CoherenceFailure::NotJoinOfCompacts { .. } => "C1",
            CoherenceFailure::TopNotCompact { .. } => "C2",
            CoherenceFailure::JoinNotCompact { .. } | CoherenceFailure::MeetNotCompact { .. } => "C3",
        }
    }

    pub fn describe(&self, p: &FinitePoset) -> String {
        match self {
            CoherenceFailure::NotJoinOfCompacts { element } => {
                format!("C1: `{}` is not a join of compact elements", p.name(*element))
            }
            CoherenceFailure::TopNotCompact { top } => format!("C2: top `{}` is not compact", p.name(*top)),
            CoherenceFailure::JoinNotCompact { members, join } => format!(
                "C3: join {} = `{}` of compacts is not compact",
                p.subset_label(&subset_of(p.len(), members.iter().copied())),
                p.name(*join)
            ),
            CoherenceFailure::MeetNotCompact { a, b, meet } => format!(
                "C3: meet of compacts `{}` and `{}` is `{}`, not compact",
                p.name(*a),
                p.name(*b),
                p.name(*meet)
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coherence {
    pub compacts: Subset,
    pub failure: Option<CoherenceFailure>,
}

impl Coherence {
    pub fn is_coherent(&self) -> bool {
        self.failure.is_none()
    }
}

/// Checks C1 (every element a join of compacts), C2 (top compact) and C3 (compacts closed
/// under small joins and binary meets), reporting the first failure.
pub fn is_k_coherent(f: &Frame, arity: Arity) -> Coherence {
    let compacts = k_compact_elements(f, arity);
    let failure = coherence_failure(f, arity, &compacts);
    Coherence { compacts, failure }
}

fn coherence_failure(f: &Frame, arity: Arity, compacts: &Subset) -> Option<CoherenceFailure> {
    for a in 0..f.len() {
        let below = f.down(a).intersection(compacts);
        if f.join_all(below) != a {
            return Some(CoherenceFailure::NotJoinOfCompacts { element: a });
        }
    }
    if !compacts.contains(f.top()) {
        return Some(CoherenceFailure::TopNotCompact { top: f.top() });
    }
    for members in f.antichains(compacts, arity.max_size()) {
        let join = f.join_all(members.iter().copied());
        if !compacts.contains(join) {
            return Some(CoherenceFailure::JoinNotCompact { members, join });
        }
    }
    for a in compacts.ones() {
        for b in compacts.ones() {
            let meet = f.meet(a, b);
            if !compacts.contains(meet) {
                return Some(CoherenceFailure::MeetNotCompact { a, b, meet });
            }
        }
    }
    None
}

/// The comparison map `a ↦ {b compact : b <= a}` from a coherent frame into the ideal
/// completion of its compact elements.
#[derive(Debug, Clone)]
pub struct PhiMap {
    pub compacts: Subset,
    /// Ideals of the compact sub-poset; carriers index into that sub-poset.
    pub target: IdealLattice,
    /// `map[a]` is the index in `target` of the image of `a`, `None` if the image is not an ideal.
    pub map: Vec<Option<usize>>,
}

impl PhiMap {
    pub fn is_well_defined(&self) -> bool {
        self.map.iter().all(Option::is_some)
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.map.iter().flatten().all(|i| seen.insert(*i))
    }

    pub fn is_surjective(&self) -> bool {
        let hit: std::collections::HashSet<usize> = self.map.iter().flatten().copied().collect();
        hit.len() == self.target.len()
    }

    pub fn is_order_preserving(&self, f: &Frame) -> bool {
        self.pairs(f).all(|(a, b, ia, ib)| !f.leq(a, b) || self.target.order().leq(ia, ib))
    }

    pub fn is_order_reflecting(&self, f: &Frame) -> bool {
        self.pairs(f).all(|(a, b, ia, ib)| !self.target.order().leq(ia, ib) || f.leq(a, b))
    }

    fn pairs<'a>(&'a self, f: &'a Frame) -> impl Iterator<Item = (usize, usize, usize, usize)> + 'a {
        (0..f.len()).flat_map(move |a| {
            (0..f.len()).filter_map(move |b| Some((a, b, self.map[a]?, self.map[b]?)))
        })
    }
}

pub fn phi_map(f: &Frame, arity: Arity) -> Result<PhiMap, FrameError> {
    let compacts = k_compact_elements(f, arity);
    let sub = f.poset().restrict(&compacts);
    let members: Vec<usize> = compacts.ones().collect();
    let target = k_ideals(&sub, arity)?;
    let map = (0..f.len())
        .map(|a| {
            let carrier = subset_of(sub.len(), (0..members.len()).filter(|&k| f.leq(members[k], a)));
            target.index_of(&carrier)
        })
        .collect();
    Ok(PhiMap {
        compacts,
        target,
        map,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiReport {
    pub label: String,
    pub coherent: bool,
    pub injective: bool,
    pub surjective: bool,
    pub order_preserving: bool,
    pub order_reflecting: bool,
}

impl PhiReport {
    pub fn passed(&self) -> bool {
        !self.coherent || (self.injective && self.surjective && self.order_preserving && self.order_reflecting)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompletionReport {
    pub arity: Arity,
    pub ideal_count: usize,
    /// Compacts of `Idl_k(L)` are exactly the principal ideals.
    pub compacts_are_principal: bool,
    /// `a ↦ ↓a` is an order isomorphism from `L` onto those compacts.
    pub principal_iso: bool,
    /// The comparison map on `L` itself (when coherent) and on `Idl_k(L)`.
    pub phi: Vec<PhiReport>,
}

impl CompletionReport {
    pub fn passed(&self) -> bool {
        self.compacts_are_principal && self.principal_iso && self.phi.iter().all(PhiReport::passed)
    }
}

fn phi_report(label: &str, f: &Frame, arity: Arity) -> Result<PhiReport, FrameError> {
    let coherence = is_k_coherent(f, arity);
    if !coherence.is_coherent() {
        return Ok(PhiReport {
            label: label.to_string(),
            coherent: false,
            injective: false,
            surjective: false,
            order_preserving: false,
            order_reflecting: false,
        });
    }
    let phi = phi_map(f, arity)?;
    Ok(PhiReport {
        label: label.to_string(),
        coherent: true,
        injective: phi.is_well_defined() && phi.is_injective(),
        surjective: phi.is_surjective(),
        order_preserving: phi.is_order_preserving(f),
        order_reflecting: phi.is_order_reflecting(f),
    })
}

/// Both directions of the completion equivalence at arity `k`: compacts of `Idl_k(L)` are
/// the principal ideals, and every coherent frame is the completion of its compacts.
pub fn completion_round_trip(l: &Lattice, arity: Arity) -> Result<CompletionReport, FrameError> {
    l.check_distributive()?;
    let il = k_ideals(l.poset(), arity)?;
    let idl = il.frame()?;
    let compacts = k_compact_elements(&idl, arity);
    let principal: Vec<usize> = (0..l.len()).map(|a| il.principal(a)).collect();
    let principal_set = subset_of(il.len(), principal.iter().copied());
    let compacts_are_principal = compacts == principal_set;
    let principal_iso = {
        let injective = principal_set.count_ones(..) == l.len();
        let order = (0..l.len())
            .all(|a| (0..l.len()).all(|b| l.leq(a, b) == il.order().leq(principal[a], principal[b])));
        injective && order
    };
    let mut phi = vec![phi_report("Idl_k(L)", &idl, arity)?];
    let own = Frame::new(l.clone())?;
    if is_k_coherent(&own, arity).is_coherent() {
        phi.push(phi_report("L", &own, arity)?);
    }
    let report = CompletionReport {
        arity,
        ideal_count: il.len(),
        compacts_are_principal,
        principal_iso,
        phi,
    };
    if !report.compacts_are_principal {
        let extra = compacts.symmetric_difference(&principal_set).next().unwrap();
        return Err(FrameError::RoundTripFailure(format!(
            "compact ideals differ from principal ideals at `{}`",
            il.order().name(extra)
        )));
    }
    if let Some(bad) = report.phi.iter().find(|p| !p.passed() || !p.coherent && p.label == "Idl_k(L)") {
        return Err(FrameError::RoundTripFailure(format!("comparison map on {} failed: {:?}", bad.label, bad)));
    }
    if !report.principal_iso {
        return Err(FrameError::RoundTripFailure("a ↦ ↓a is not an order isomorphism".into()));
    }
    Ok(report)
}

/// Unit/counit data for the completion adjunction between arities `k <= k'`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjunctionReport {
    pub unit_is_morphism: bool,
    pub counit_is_morphism: bool,
    /// `ε_M ∘ η_M = id` on every element of `M`.
    pub triangle_m: bool,
    /// `ε_{FL} ∘ F(η_L) = id` on every compact ideal of `L`.
    pub triangle_l: bool,
}

/// Preserves bottom, top, binary meets, and joins of antichains admitted by `arity`.
fn is_lattice_map(src: &Lattice, dst: &Lattice, map: &[usize], arity: Arity) -> bool {
    if map[src.bottom()] != dst.bottom() || map[src.top()] != dst.top() {
        return false;
    }
    let n = src.len();
    for a in 0..n {
        for b in 0..n {
            if map[src.meet(a, b)] != dst.meet(map[a], map[b]) {
                return false;
            }
        }
    }
    src.antichains(&src.full_subset(), arity.max_size()).iter().all(|fam| {
        map[src.join_all(fam.iter().copied())] == dst.join_all(fam.iter().map(|&x| map[x]))
    })
}

/// `compact_{k'}(Idl_k(L))` as a lattice, plus for each element of `L` its principal ideal's
/// position in that lattice (`None` if the principal ideal is not `k'`-compact).
struct Completion {
    ideals: IdealLattice,
    compacts: Vec<usize>,
    lattice: Lattice,
    unit: Vec<Option<usize>>,
}

fn completion(l: &Lattice, k: Arity, k2: Arity) -> Result<Completion, FrameError> {
    let ideals = k_ideals(l.poset(), k)?;
    let frame = ideals.frame()?;
    let compact_set = k_compact_elements(&frame, k2);
    let compacts: Vec<usize> = compact_set.ones().collect();
    let lattice = frame.poset().restrict(&compact_set).as_lattice().map_err(|e| {
        FrameError::AdjunctionFailure(format!("compact ideals do not form a lattice: {e}"))
    })?;
    let unit = (0..l.len())
        .map(|a| compacts.iter().position(|&c| c == ideals.principal(a)))
        .collect();
    Ok(Completion {
        ideals,
        compacts,
        lattice,
        unit,
    })
}

/// Checks the triangle identities for `a ↦ ↓a` and `I ↦ ∨I` between `k`-distributive `L`
/// and `k'`-distributive `M`.
pub fn adjunction_check(l: &Lattice, m: &Lattice, k: Arity, k2: Arity) -> Result<AdjunctionReport, FrameError> {
    if !k.le(k2) {
        return Err(FrameError::ArityOrder(k, k2));
    }
    l.check_distributive()?;
    m.check_distributive()?;

    let fl = completion(l, k, k2)?;
    let unit: Vec<usize> = fl
        .unit
        .iter()
        .enumerate()
        .map(|(a, u)| {
            u.ok_or_else(|| {
                FrameError::AdjunctionFailure(format!("principal ideal of `{}` is not compact", l.name(a)))
            })
        })
        .collect::<Result<_, _>>()?;
    let unit_is_morphism = is_lattice_map(l, &fl.lattice, &unit, k);

    let gm = completion(m, k, k2)?;
    let counit: Vec<usize> = gm
        .compacts
        .iter()
        .map(|&c| m.join_all(gm.ideals.ideals()[c].ones()))
        .collect();
    let counit_is_morphism = is_lattice_map(&gm.lattice, m, &counit, k2);

    let triangle_m = (0..m.len()).all(|a| gm.unit[a].map(|u| counit[u]) == Some(a));

    // F(η_L) sends a compact ideal I of L to the ideal of FL generated by {↓a : a ∈ I};
    // the counit at FL then takes its join inside FL.
    let flp = fl.lattice.poset();
    let triangle_l = (0..fl.compacts.len()).all(|i| {
        let carrier = &fl.ideals.ideals()[fl.compacts[i]];
        let generators = subset_of(flp.len(), carrier.ones().map(|a| unit[a]));
        let Ok(generated) = ideal_closure(flp, k, &generators) else {
            return false;
        };
        fl.lattice.join_all(generated.ones()) == i
    });

    let report = AdjunctionReport {
        unit_is_morphism,
        counit_is_morphism,
        triangle_m,
        triangle_l,
    };
    if !(unit_is_morphism && counit_is_morphism && triangle_m && triangle_l) {
        return Err(FrameError::AdjunctionFailure(format!("{report:?}")));
    }
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AscentReport {
    /// `k'`-compacts are exactly the joins of fewer than `k'` `k`-compacts.
    pub compacts_are_small_joins: bool,
    pub coherent_at_larger_arity: bool,
    /// `k`-compacts computed inside the `k'`-compacts agree with those of the frame.
    pub compacts_agree: bool,
}

pub fn ascent_check(f: &Frame, k: Arity, k2: Arity) -> Result<AscentReport, FrameError> {
    if !k.le(k2) {
        return Err(FrameError::ArityOrder(k, k2));
    }
    let small = is_k_coherent(f, k);
    if let Some(failure) = &small.failure {
        return Err(FrameError::NotCoherent {
            arity: k,
            failure: failure.describe(f.poset()),
        });
    }
    let large = is_k_coherent(f, k2);
    let mut joins = f.empty_subset();
    for fam in f.antichains(&small.compacts, k2.max_size()) {
        joins.insert(f.join_all(fam));
    }
    let compacts_are_small_joins = joins == large.compacts;

    let sub = f.poset().restrict(&large.compacts);
    let members: Vec<usize> = large.compacts.ones().collect();
    let inner = k_compact_in(&sub, k);
    let inner_in_f = subset_of(f.len(), inner.ones().map(|i| members[i]));
    let compacts_agree = inner_in_f == small.compacts;

    let report = AscentReport {
        compacts_are_small_joins,
        coherent_at_larger_arity: large.is_coherent(),
        compacts_agree,
    };
    if !(report.compacts_are_small_joins && report.coherent_at_larger_arity && report.compacts_agree) {
        return Err(FrameError::AscentFailure(format!("{report:?}")));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::poset::iso_check;

    fn labels(il: &IdealLattice) -> Vec<String> {
        il.order().names().to_vec()
    }

    #[test]
    fn arity_parsing() {
        assert_eq!("omega".parse::<Arity>().unwrap(), Arity::Omega);
        assert_eq!("3".parse::<Arity>().unwrap(), Arity::Finite(3));
        assert!("1".parse::<Arity>().is_err());
        assert!("x".parse::<Arity>().is_err());
        assert!(Arity::Finite(3).le(Arity::Omega));
        assert!(!Arity::Omega.le(Arity::Finite(9)));
        assert!(Arity::Finite(3).admits(2) && !Arity::Finite(3).admits(3));
    }

    #[test]
    fn principal_ideals() {
        let b2 = catalog::b2();
        let i = principal_ideal(&b2, "a", Arity::Omega).unwrap();
        assert_eq!(b2.subset_label(&i.carrier), "{0,a}");
        let c3 = catalog::chain(3);
        assert_eq!(principal_ideal(&c3, "1", Arity::Finite(2)).unwrap().carrier, c3.full_subset());
        let p6 = catalog::p6();
        let t2 = principal_ideal(&p6, "t2", Arity::Finite(3)).unwrap();
        assert_eq!(p6.subset_label(&t2.carrier), "{0,a,b,t2}");
        assert!(principal_ideal(&p6, "nope", Arity::Omega).is_err());
    }

    #[test]
    fn finite_lattice_ideals_are_principal_at_omega() {
        for p in [catalog::b2(), catalog::chain(4), catalog::m3(), catalog::boolean(3)] {
            let il = k_ideals(&p, Arity::Omega).unwrap();
            assert_eq!(il.len(), p.len());
            assert!(iso_check(il.order(), &p));
        }
    }

    #[test]
    fn b2_arity_two_has_five_ideals() {
        let il = k_ideals(&catalog::b2(), Arity::Finite(2)).unwrap();
        assert_eq!(labels(&il), ["{0}", "{0,a}", "{0,b}", "{0,a,b}", "{0,a,b,1}"]);
    }

    #[test]
    fn p6_ideal_stratification() {
        let p6 = catalog::p6();
        let abc = p6.resolve_all(&["0", "a", "b", "c"]).unwrap();
        // a ∨ c = t exists, so {0,a,b,c} is closed neither at arity 3 nor 4
        assert!(!is_k_ideal(&p6, Arity::Finite(3), &abc));
        assert!(!is_k_ideal(&p6, Arity::Finite(4), &abc));
        assert!(is_k_ideal(&p6, Arity::Finite(2), &abc));
        let i3 = k_ideals(&p6, Arity::Finite(3)).unwrap();
        let i4 = k_ideals(&p6, Arity::Finite(4)).unwrap();
        assert_eq!(i3.ideals(), i4.ideals());
        assert_eq!(i3.len(), 8);

        let p8 = catalog::p8();
        let abc = p8.resolve_all(&["0", "a", "b", "c"]).unwrap();
        assert!(is_k_ideal(&p8, Arity::Finite(3), &abc));
        assert!(!is_k_ideal(&p8, Arity::Finite(4), &abc));
        let i3 = k_ideals(&p8, Arity::Finite(3)).unwrap();
        let i4 = k_ideals(&p8, Arity::Finite(4)).unwrap();
        assert_ne!(i3.ideals(), i4.ideals());
    }

    #[test]
    fn no_bottom_is_rejected() {
        assert_eq!(
            k_ideals(&catalog::antichain(2), Arity::Omega).unwrap_err(),
            FrameError::NoBottom
        );
    }

    #[test]
    fn joins_of_ideals() {
        let b2 = catalog::b2();
        let il = k_ideals(&b2, Arity::Omega).unwrap();
        let a = il.principal(b2.resolve("a").unwrap());
        let b = il.principal(b2.resolve("b").unwrap());
        let j = ideal_join(&il, &[a, b]);
        assert_eq!(j.index, il.principal(b2.resolve("1").unwrap()));
        assert!(j.one_step_agrees);
        assert_eq!(ideal_join(&il, &[a]).index, a);

        let p6 = catalog::p6();
        let il = k_ideals(&p6, Arity::Finite(3)).unwrap();
        let gens: Vec<usize> = ["a", "b", "c"].iter().map(|x| il.principal(p6.resolve(x).unwrap())).collect();
        let j = ideal_join(&il, &gens);
        assert_eq!(p6.subset_label(&j.ideal), "{0,a,b,c,t}");
        assert!(j.one_step_agrees);
    }

    #[test]
    fn one_step_join_can_miss_the_fixpoint() {
        // a ∨ c and b ∨ c do not exist (x1, x2 compete with top) but ab ∨ c = top does,
        // so top enters the join of ↓a, ↓b, ↓c only in the second round
        let p = FinitePoset::from_covers(
            &["0", "a", "b", "c", "ab", "x1", "x2", "top"],
            &[
                ("0", "a"),
                ("0", "b"),
                ("0", "c"),
                ("a", "ab"),
                ("b", "ab"),
                ("a", "x1"),
                ("c", "x1"),
                ("b", "x2"),
                ("c", "x2"),
                ("ab", "top"),
                ("c", "top"),
            ],
        )
        .unwrap();
        let il = k_ideals(&p, Arity::Finite(2)).unwrap();
        let gens: Vec<usize> = ["a", "b", "c"].iter().map(|x| il.principal(p.resolve(x).unwrap())).collect();
        let j = ideal_join(&il, &gens);
        assert!(j.one_step_agrees, "arity 2 adds no joins");
        let il3 = k_ideals(&p, Arity::Finite(3)).unwrap();
        let gens: Vec<usize> = ["a", "b", "c"].iter().map(|x| il3.principal(p.resolve(x).unwrap())).collect();
        let j3 = ideal_join(&il3, &gens);
        assert_eq!(p.subset_label(&j3.ideal), "{0,a,b,c,ab,top}");
        assert_eq!(p.subset_label(&j3.one_step), "{0,a,b,c,ab}");
        assert!(!j3.one_step_agrees);
    }

    #[test]
    fn compact_elements() {
        for p in [catalog::b2(), catalog::chain(3), catalog::boolean(3)] {
            let f = Frame::from_poset(&p).unwrap();
            assert_eq!(k_compact_elements(&f, Arity::Omega), f.full_subset());
            assert!(k_compact_elements(&f, Arity::Finite(2)).contains(f.bottom()));
        }
        let il = k_ideals(&catalog::b2(), Arity::Finite(2)).unwrap();
        let f = il.frame().unwrap();
        let compacts = k_compact_elements(&f, Arity::Finite(2));
        let names: Vec<&str> = compacts.ones().map(|i| f.name(i)).collect();
        assert_eq!(names, ["{0}", "{0,a}", "{0,b}", "{0,a,b,1}"]);
    }

    #[test]
    fn coherence() {
        for p in [catalog::b2(), catalog::chain(3), catalog::m3()] {
            if let Ok(f) = Frame::from_poset(&p) {
                assert!(is_k_coherent(&f, Arity::Omega).is_coherent());
            }
        }
        let vee = k_ideals(&catalog::antichain_with_bottom(2), Arity::Finite(2)).unwrap();
        let f = vee.frame().unwrap();
        let c = is_k_coherent(&f, Arity::Finite(2));
        assert_eq!(c.failure, Some(CoherenceFailure::TopNotCompact { top: f.top() }));
        assert_eq!(c.failure.unwrap().condition(), "C2");

        let f = k_ideals(&catalog::b2(), Arity::Finite(2)).unwrap().frame().unwrap();
        assert!(is_k_coherent(&f, Arity::Finite(2)).is_coherent());
    }

    #[test]
    fn round_trips() {
        let c3 = catalog::chain(3).as_lattice().unwrap();
        let r = completion_round_trip(&c3, Arity::Omega).unwrap();
        assert!(r.passed());
        assert_eq!(r.phi.len(), 2);

        let b2 = catalog::b2().as_lattice().unwrap();
        let r = completion_round_trip(&b2, Arity::Omega).unwrap();
        assert_eq!(r.ideal_count, 4);

        let f = k_ideals(&catalog::b2(), Arity::Finite(2)).unwrap().frame().unwrap();
        let phi = phi_map(&f, Arity::Finite(2)).unwrap();
        assert!(phi.is_well_defined() && phi.is_injective() && phi.is_surjective());
        assert!(phi.is_order_preserving(&f) && phi.is_order_reflecting(&f));
        assert!(completion_round_trip(&b2, Arity::Finite(2)).unwrap().passed());

        let m3 = catalog::m3().as_lattice().unwrap();
        assert!(matches!(
            completion_round_trip(&m3, Arity::Omega),
            Err(FrameError::Poset(PosetError::NotDistributive(..)))
        ));
    }

    #[test]
    fn adjunction() {
        let c3 = catalog::chain(3).as_lattice().unwrap();
        assert!(adjunction_check(&c3, &c3, Arity::Omega, Arity::Omega).is_ok());
        let one = catalog::chain(1).as_lattice().unwrap();
        assert!(adjunction_check(&one, &one, Arity::Finite(2), Arity::Omega).is_ok());
        let b2 = catalog::b2().as_lattice().unwrap();
        let idl = k_ideals(&catalog::b2(), Arity::Finite(2)).unwrap().frame().unwrap();
        let r = adjunction_check(&b2, idl.lattice(), Arity::Finite(2), Arity::Finite(2)).unwrap();
        assert!(r.triangle_l && r.triangle_m);
        assert!(adjunction_check(&b2, idl.lattice(), Arity::Finite(2), Arity::Omega).is_ok());
        assert!(matches!(
            adjunction_check(&b2, &b2, Arity::Omega, Arity::Finite(2)),
            Err(FrameError::ArityOrder(..))
        ));
    }

    #[test]
    fn ascent() {
        let f = Frame::from_poset(&catalog::boolean(3)).unwrap();
        assert!(ascent_check(&f, Arity::Omega, Arity::Omega).is_ok());
        let idl = k_ideals(&catalog::b2(), Arity::Finite(2)).unwrap().frame().unwrap();
        assert!(ascent_check(&idl, Arity::Finite(2), Arity::Omega).unwrap().compacts_are_small_joins);
        assert!(ascent_check(&idl, Arity::Finite(2), Arity::Finite(3)).is_ok());
    }
}
