//! Points of finite frames, the spaces they form, frames of open sets, and the two
//! directions of the Stone adjunction.

use thiserror::Error;

use crate::frame::{is_k_coherent, k_compact_elements, Arity, Frame, FrameError};
use crate::poset::{find_isomorphism, subset_of, FinitePoset, PosetError, Subset};
use crate::text::{directives, ParseError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StoneError {
    #[error(transparent)]
    Frame(#[from] FrameError),
    #[error("invalid topology: {0}")]
    InvalidTopology(String),
    #[error("Stone round trip failed: {0}")]
    RoundTripFailure(String),
}

impl From<PosetError> for StoneError {
    fn from(e: PosetError) -> Self {
        StoneError::Frame(e.into())
    }
}

/// A point of a frame, identified with its prime element `p_x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub prime: usize,
}

impl Point {
    /// The two-valued map `a ↦ 0 if a <= p_x else 1`.
    pub fn value(self, f: &Frame, a: usize) -> bool {
        !f.leq(a, self.prime)
    }

    pub fn name(self, f: &Frame) -> String {
        format!("x_{}", f.name(self.prime))
    }
}

pub fn is_prime(f: &Frame, p: usize) -> bool {
    if p == f.top() {
        return false;
    }
    (0..f.len()).all(|a| (0..f.len()).all(|b| !f.leq(f.meet(a, b), p) || f.leq(a, p) || f.leq(b, p)))
}

pub fn prime_elements(f: &Frame) -> Subset {
    subset_of(f.len(), (0..f.len()).filter(|&p| is_prime(f, p)))
}

/// One point per prime element, in element order.
pub fn points(f: &Frame) -> Vec<Point> {
    prime_elements(f).ones().map(|prime| Point { prime }).collect()
}

/// Every map `F -> {0,1}` preserving bottom, top, binary joins and binary meets, by brute
/// force over all `2^|F|` assignments. Returned as the set of elements sent to 1.
pub fn two_valued_morphisms(f: &Frame) -> Vec<Subset> {
    let n = f.len();
    assert!(n <= 20, "brute-force point enumeration is limited to 20 elements");
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        let v = |a: usize| mask >> a & 1 == 1;
        if v(f.bottom()) || !v(f.top()) {
            continue;
        }
        let ok = (0..n).all(|a| {
            (0..n).all(|b| v(f.join(a, b)) == (v(a) || v(b)) && v(f.meet(a, b)) == (v(a) && v(b)))
        });
        if ok {
            out.push(subset_of(n, (0..n).filter(|&a| v(a))));
        }
    }
    out
}

/// A finite topological space given by its family of open sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteSpace {
    names: Vec<String>,
    opens: Vec<Subset>,
}

impl FiniteSpace {
    /// Validates that `opens` contains the empty and the full set and is closed under binary
    /// unions and intersections. Duplicates are dropped; opens are kept sorted by size.
    pub fn new(names: Vec<String>, opens: Vec<Subset>) -> Result<Self, StoneError> {
        let n = names.len();
        let mut seen = std::collections::HashSet::new();
        for name in &names {
            if !seen.insert(name.as_str()) {
                return Err(StoneError::InvalidTopology(format!("duplicate point `{name}`")));
            }
        }
        let mut opens = opens;
        if opens.iter().any(|o| o.len() != n) {
            return Err(StoneError::InvalidTopology("open set over the wrong point set".into()));
        }
        opens.sort_by_key(|s| (s.count_ones(..), s.ones().collect::<Vec<_>>()));
        opens.dedup();
        let space = FiniteSpace { names, opens };
        let empty = subset_of(n, []);
        if !space.is_open(&empty) {
            return Err(StoneError::InvalidTopology("the empty set is not open".into()));
        }
        if !space.is_open(&space.full()) {
            return Err(StoneError::InvalidTopology("the whole space is not open".into()));
        }
        for a in &space.opens {
            for b in &space.opens {
                let mut union = a.clone();
                union.union_with(b);
                let mut inter = a.clone();
                inter.intersect_with(b);
                for (set, what) in [(union, "union"), (inter, "intersection")] {
                    if !space.is_open(&set) {
                        return Err(StoneError::InvalidTopology(format!(
                            "{what} of {} and {} is not open",
                            space.label(a),
                            space.label(b)
                        )));
                    }
                }
            }
        }
        Ok(space)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn opens(&self) -> &[Subset] {
        &self.opens
    }

    pub fn full(&self) -> Subset {
        subset_of(self.len(), 0..self.len())
    }

    pub fn is_open(&self, set: &Subset) -> bool {
        self.opens.contains(set)
    }

    pub fn complement(&self, set: &Subset) -> Subset {
        let mut c = self.full();
        c.difference_with(set);
        c
    }

    pub fn closed_sets(&self) -> Vec<Subset> {
        let mut closed: Vec<Subset> = self.opens.iter().map(|o| self.complement(o)).collect();
        closed.sort_by_key(|s| (s.count_ones(..), s.ones().collect::<Vec<_>>()));
        closed
    }

    /// The smallest closed set containing `x`.
    pub fn closure(&self, x: usize) -> Subset {
        let mut cl = self.full();
        for o in &self.opens {
            if !o.contains(x) {
                cl.difference_with(o);
            }
        }
        cl
    }

    /// `x <= y` iff `y` lies in the closure of `x`; antisymmetric exactly when the space is T0.
    pub fn specialization(&self) -> Result<FinitePoset, PosetError> {
        let closures: Vec<Subset> = (0..self.len()).map(|x| self.closure(x)).collect();
        FinitePoset::from_relation(self.names.clone(), |x, y| closures[x].contains(y))
    }

    pub fn label(&self, set: &Subset) -> String {
        let parts: Vec<&str> = set.ones().map(|i| self.names[i].as_str()).collect();
        format!("{{{}}}", parts.join(","))
    }
}

/// `U(a)` as a set of positions in `pts`.
pub fn u_open(f: &Frame, pts: &[Point], a: usize) -> Subset {
    subset_of(pts.len(), (0..pts.len()).filter(|&i| pts[i].value(f, a)))
}

pub fn point_space(f: &Frame) -> FiniteSpace {
    let pts = points(f);
    let names = pts.iter().map(|p| p.name(f)).collect();
    let opens = (0..f.len()).map(|a| u_open(f, &pts, a)).collect();
    FiniteSpace::new(names, opens).expect("U(a) is a topology")
}

/// Enough points: for every `a ≰ b` some point has `x(a) = 1` and `x(b) = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spatiality {
    pub inseparable: Option<(usize, usize)>,
}

impl Spatiality {
    pub fn is_spatial(&self) -> bool {
        self.inseparable.is_none()
    }
}

pub fn is_spatial(f: &Frame) -> Spatiality {
    let pts = points(f);
    let inseparable = (0..f.len())
        .flat_map(|a| (0..f.len()).map(move |b| (a, b)))
        .find(|&(a, b)| !f.leq(a, b) && !pts.iter().any(|x| x.value(f, a) && !x.value(f, b)));
    Spatiality { inseparable }
}

/// The frame of opens, ordered by inclusion and named by their members.
pub fn omega(x: &FiniteSpace) -> Result<Frame, StoneError> {
    let names = x.opens.iter().map(|o| x.label(o)).collect();
    let order = FinitePoset::from_subsets(names, &x.opens)?;
    Ok(Frame::from_poset(&order)?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sobriety {
    /// An irreducible closed set without exactly one generic point.
    pub witness: Option<Subset>,
}

impl Sobriety {
    pub fn is_sober(&self) -> bool {
        self.witness.is_none()
    }
}

/// Non-empty and not the union of two proper closed subsets.
pub fn is_irreducible(v: &Subset, closed: &[Subset]) -> bool {
    if v.is_clear() {
        return false;
    }
    let proper: Vec<&Subset> = closed.iter().filter(|c| c.is_subset(v) && *c != v).collect();
    !proper.iter().any(|a| {
        proper.iter().any(|b| {
            let mut u = (*a).clone();
            u.union_with(b);
            u == *v
        })
    })
}

pub fn is_sober(x: &FiniteSpace) -> Sobriety {
    let closed = x.closed_sets();
    let witness = closed
        .iter()
        .filter(|v| is_irreducible(v, &closed))
        .find(|v| v.ones().filter(|&p| &x.closure(p) == *v).count() != 1)
        .cloned();
    Sobriety { witness }
}

/// Spectrality of the point space of a coherent frame at arity `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectralReport {
    pub sober: bool,
    /// Every open is a union of compact opens.
    pub sp1: bool,
    /// The whole space is compact.
    pub sp2: bool,
    /// Compact opens are closed under small unions and binary intersections.
    pub sp3: bool,
    /// Compact opens are exactly the `U(a)` with `a` compact in the frame.
    pub compacts_match: bool,
}

impl SpectralReport {
    pub fn passed(&self) -> bool {
        self.sober && self.sp1 && self.sp2 && self.sp3 && self.compacts_match
    }
}

pub fn spectral_check(x: &FiniteSpace, arity: Arity) -> Result<(SpectralReport, Vec<Subset>), StoneError> {
    let om = omega(x)?;
    let compact_idx = k_compact_elements(&om, arity);
    let compacts: Vec<Subset> = compact_idx.ones().map(|i| x.opens[i].clone()).collect();
    let sp1 = x.opens.iter().all(|o| {
        let mut u = subset_of(x.len(), []);
        for c in compacts.iter().filter(|c| c.is_subset(o)) {
            u.union_with(c);
        }
        &u == o
    });
    let sp2 = compacts.contains(&x.full());
    let mut sp3 = true;
    for fam in om.antichains(&compact_idx, arity.max_size()) {
        let mut u = subset_of(x.len(), []);
        for i in fam {
            u.union_with(&x.opens[i]);
        }
        sp3 &= compacts.contains(&u);
    }
    for a in &compacts {
        for b in &compacts {
            let mut m = a.clone();
            m.intersect_with(b);
            sp3 &= compacts.contains(&m);
        }
    }
    let report = SpectralReport {
        sober: is_sober(x).is_sober(),
        sp1,
        sp2,
        sp3,
        compacts_match: true,
    };
    Ok((report, compacts))
}

/// The unit `X -> pt(Ω(X))` sends a point to the largest open missing it. `omega` keeps
/// the open-set order, so open `i` is frame element `i`.
pub fn unit_map(x: &FiniteSpace) -> Vec<Point> {
    (0..x.len())
        .map(|p| {
            let missing = x.complement(&x.closure(p));
            let prime = x.opens.iter().position(|o| o == &missing).expect("complement of a closure is open");
            Point { prime }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct StoneReport {
    /// For a sober space: the unit is a homeomorphism. `None` if no space was given.
    pub unit_homeomorphism: Option<bool>,
    /// For a spatial frame: `a ↦ U(a)` is a frame isomorphism onto `Ω(pt F)`.
    pub counit_isomorphism: Option<bool>,
    /// For a coherent spatial frame: its point space is spectral.
    pub spectral: Option<SpectralReport>,
}

impl StoneReport {
    pub fn passed(&self) -> bool {
        self.unit_homeomorphism != Some(false)
            && self.counit_isomorphism != Some(false)
            && self.spectral.as_ref().is_none_or(SpectralReport::passed)
    }
}

pub fn unit_is_homeomorphism(x: &FiniteSpace) -> Result<bool, StoneError> {
    let om = omega(x)?;
    let pts = points(&om);
    let unit = unit_map(x);
    let mut seen: Vec<Point> = unit.clone();
    seen.sort();
    seen.dedup();
    let bijective = seen.len() == unit.len() && unit.len() == pts.len();
    // preimage of U(O) under the unit must be O itself
    let continuous_open =
        (0..om.len()).all(|o| subset_of(x.len(), (0..x.len()).filter(|&p| unit[p].value(&om, o))) == x.opens[o]);
    Ok(bijective && continuous_open)
}

pub fn counit_is_isomorphism(f: &Frame) -> bool {
    let pts = points(f);
    let space = point_space(f);
    let images: Vec<Subset> = (0..f.len()).map(|a| u_open(f, &pts, a)).collect();
    let injective = (0..f.len()).all(|a| (0..a).all(|b| images[a] != images[b]));
    let order = (0..f.len()).all(|a| (0..f.len()).all(|b| f.leq(a, b) == images[a].is_subset(&images[b])));
    let surjective = space.opens.iter().all(|o| images.contains(o));
    injective && order && surjective
}

/// Runs whichever parts apply: the unit for a sober `x`, the counit for a spatial `f`, and
/// spectrality of `point_space(f)` when `f` is also coherent at `arity`.
pub fn stone_round_trip(
    x: Option<&FiniteSpace>,
    f: Option<&Frame>,
    arity: Arity,
) -> Result<StoneReport, StoneError> {
    let mut report = StoneReport::default();
    if let Some(x) = x {
        if is_sober(x).is_sober() {
            report.unit_homeomorphism = Some(unit_is_homeomorphism(x)?);
        }
    }
    if let Some(f) = f {
        if is_spatial(f).is_spatial() {
            report.counit_isomorphism = Some(counit_is_isomorphism(f));
            let coherence = is_k_coherent(f, arity);
            if coherence.is_coherent() {
                let space = point_space(f);
                let (mut spectral, compact_opens) = spectral_check(&space, arity)?;
                let pts = points(f);
                let mut expected: Vec<Subset> = coherence.compacts.ones().map(|a| u_open(f, &pts, a)).collect();
                let mut actual = compact_opens;
                let key = |s: &Subset| (s.count_ones(..), s.ones().collect::<Vec<_>>());
                expected.sort_by_key(key);
                expected.dedup();
                actual.sort_by_key(key);
                spectral.compacts_match = expected == actual;
                report.spectral = Some(spectral);
            }
        }
    }
    if !report.passed() {
        return Err(StoneError::RoundTripFailure(format!("{report:?}")));
    }
    Ok(report)
}

/// `omega(point_space(F)) ≅ F`, checked by isomorphism search.
pub fn omega_of_points_is_iso(f: &Frame) -> bool {
    omega(&point_space(f)).is_ok_and(|g| find_isomorphism(g.poset(), f.poset()).is_some())
}

/// Parses the `.space` format: `point <name>` lines and `open <name>*` lines. Every open,
/// the empty and the full set included, must be listed.
pub fn parse_space(text: &str) -> Result<FiniteSpace, ParseError> {
    let mut names: Vec<String> = Vec::new();
    let mut raw_opens: Vec<(usize, Vec<String>)> = Vec::new();
    let mut last_line = 0;
    for d in directives(text) {
        last_line = d.line;
        match d.keyword {
            "point" => {
                d.expect_args(1)?;
                names.push(d.args[0].to_string());
            }
            "open" => raw_opens.push((d.line, d.args.iter().map(|s| s.to_string()).collect())),
            other => return Err(d.error(format!("unknown directive `{other}`"))),
        }
    }
    let mut opens = Vec::new();
    for (line, members) in raw_opens {
        let mut set = subset_of(names.len(), []);
        for m in members {
            let i = names
                .iter()
                .position(|n| *n == m)
                .ok_or_else(|| ParseError::new(line, format!("unknown point `{m}`")))?;
            set.insert(i);
        }
        opens.push(set);
    }
    FiniteSpace::new(names, opens).map_err(|e| ParseError::new(last_line, e.to_string()))
}

pub fn write_space(x: &FiniteSpace) -> String {
    let mut out = String::new();
    for n in &x.names {
        out.push_str(&format!("point {n}\n"));
    }
    for o in &x.opens {
        let members: Vec<&str> = o.ones().map(|i| x.names[i].as_str()).collect();
        if members.is_empty() {
            out.push_str("open\n");
        } else {
            out.push_str(&format!("open {}\n", members.join(" ")));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::poset::iso_check;

    fn frame(p: FinitePoset) -> Frame {
        Frame::from_poset(&p).unwrap()
    }

    fn names(f: &Frame, s: &Subset) -> Vec<String> {
        s.ones().map(|i| f.name(i).to_string()).collect()
    }

    pub(crate) fn sierpinski() -> FiniteSpace {
        parse_space("point x0\npoint xm\nopen\nopen x0\nopen x0 xm\n").unwrap()
    }

    #[test]
    fn primes() {
        let b2 = frame(catalog::b2());
        assert_eq!(names(&b2, &prime_elements(&b2)), ["a", "b"]);
        let c3 = frame(catalog::chain(3));
        assert_eq!(names(&c3, &prime_elements(&c3)), ["0", "m"]);
        let one = frame(catalog::chain(1));
        assert!(prime_elements(&one).is_clear());
    }

    #[test]
    fn points_match_two_valued_maps() {
        for (p, expected) in [(catalog::b2(), 2), (catalog::chain(3), 2), (catalog::boolean(3), 3)] {
            let f = frame(p);
            let pts = points(&f);
            assert_eq!(pts.len(), expected);
            let maps = two_valued_morphisms(&f);
            assert_eq!(maps.len(), pts.len());
            for x in &pts {
                let ones = subset_of(f.len(), (0..f.len()).filter(|&a| x.value(&f, a)));
                assert!(maps.contains(&ones));
            }
        }
    }

    #[test]
    fn point_spaces() {
        let b2 = frame(catalog::b2());
        let x = point_space(&b2);
        assert_eq!(x.names(), ["x_a", "x_b"]);
        assert_eq!(x.opens().len(), 4);
        let a = b2.resolve("a").unwrap();
        assert_eq!(x.label(&u_open(&b2, &points(&b2), a)), "{x_b}");

        let c3 = frame(catalog::chain(3));
        let s = point_space(&c3);
        let labels: Vec<String> = s.opens().iter().map(|o| s.label(o)).collect();
        assert_eq!(labels, ["{}", "{x_0}", "{x_0,x_m}"]);

        let one = point_space(&frame(catalog::chain(1)));
        assert!(one.is_empty());
        assert_eq!(one.opens().len(), 1);
    }

    #[test]
    fn spatial_frames() {
        for p in [catalog::b2(), catalog::chain(2), catalog::chain(3), catalog::boolean(3)] {
            assert!(is_spatial(&frame(p)).is_spatial());
        }
    }

    #[test]
    fn omega_of_small_spaces() {
        let discrete = parse_space("point p\npoint q\nopen\nopen p\nopen q\nopen p q\n").unwrap();
        assert!(iso_check(omega(&discrete).unwrap().poset(), &catalog::b2()));
        assert!(iso_check(omega(&sierpinski()).unwrap().poset(), &catalog::chain(3)));
        let indiscrete = parse_space("point p\npoint q\nopen\nopen p q\n").unwrap();
        assert!(iso_check(omega(&indiscrete).unwrap().poset(), &catalog::chain(2)));
    }

    #[test]
    fn invalid_topologies() {
        assert!(parse_space("point p\nopen p\n").is_err());
        assert!(parse_space("point p\npoint q\nopen\nopen p q\nopen p\nopen q\nopen r\n").is_err());
        let err = parse_space("point p\npoint q\npoint r\nopen\nopen p q r\nopen p\nopen q\n").unwrap_err();
        assert!(err.message.contains("union"), "{err}");
        assert!(parse_space("point p\nbogus\n").is_err());
    }

    #[test]
    fn sobriety() {
        assert!(is_sober(&sierpinski()).is_sober());
        let indiscrete = parse_space("point p\npoint q\nopen\nopen p q\n").unwrap();
        let s = is_sober(&indiscrete);
        assert_eq!(s.witness.map(|w| w.count_ones(..)), Some(2));
        let discrete = parse_space("point p\npoint q\nopen\nopen p\nopen q\nopen p q\n").unwrap();
        assert!(is_sober(&discrete).is_sober());
    }

    #[test]
    fn round_trips() {
        let r = stone_round_trip(Some(&sierpinski()), None, Arity::Omega).unwrap();
        assert_eq!(r.unit_homeomorphism, Some(true));
        let b2 = frame(catalog::b2());
        let r = stone_round_trip(None, Some(&b2), Arity::Omega).unwrap();
        assert_eq!(r.counit_isomorphism, Some(true));
        assert!(r.spectral.unwrap().passed());
        assert!(omega_of_points_is_iso(&b2));
    }

    #[test]
    fn space_file_round_trip() {
        let s = sierpinski();
        assert_eq!(parse_space(&write_space(&s)).unwrap(), s);
    }
}
