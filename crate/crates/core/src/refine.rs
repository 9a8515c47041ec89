//! Frame morphisms and what they do to points: specialization, honest and locally closed
//! points, height and dimension, and chains of injective morphisms whose point maps are
//! bijective while the topology refines.

use std::collections::HashSet;

use thiserror::Error;

use crate::frame::{is_k_coherent, Arity, Frame, FrameError};
use crate::poset::{subset_of, FinitePoset, Subset};
use crate::stone::{is_spatial, point_space, points, u_open, Point};
use crate::text::{directives, ParseError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RefineError {
    #[error(transparent)]
    Frame(#[from] FrameError),
    #[error("not a frame morphism: {0}")]
    NotAMorphism(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("proposition failed: {0}")]
    PropositionFailure(String),
    #[error("lemma failed at point {0}")]
    LemmaFailure(String),
    #[error("stage {index} failed: {reason}")]
    StageFailure { index: usize, reason: String },
}

/// A map of finite frames preserving bottom, top, binary joins and binary meets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrameMorphism {
    source: Frame,
    target: Frame,
    map: Vec<usize>,
}

impl FrameMorphism {
    pub fn new(source: Frame, target: Frame, map: Vec<usize>) -> Result<Self, RefineError> {
        if map.len() != source.len() || map.iter().any(|&b| b >= target.len()) {
            return Err(RefineError::NotAMorphism("map is not a total function".into()));
        }
        if let Some(why) = morphism_violation(&source, &target, &map) {
            return Err(RefineError::NotAMorphism(why));
        }
        Ok(FrameMorphism { source, target, map })
    }

    /// Builds a morphism from `(source element, target element)` name pairs, one per source element.
    pub fn from_names<S: AsRef<str>>(source: Frame, target: Frame, pairs: &[(S, S)]) -> Result<Self, RefineError> {
        let mut map = vec![usize::MAX; source.len()];
        for (a, b) in pairs {
            let i = source.resolve(a.as_ref()).map_err(FrameError::from)?;
            let j = target.resolve(b.as_ref()).map_err(FrameError::from)?;
            if map[i] != usize::MAX && map[i] != j {
                return Err(RefineError::NotAMorphism(format!("`{}` is mapped twice", a.as_ref())));
            }
            map[i] = j;
        }
        if let Some(i) = map.iter().position(|&j| j == usize::MAX) {
            return Err(RefineError::NotAMorphism(format!("`{}` has no image", source.name(i))));
        }
        FrameMorphism::new(source, target, map)
    }

    pub fn identity(f: &Frame) -> Self {
        FrameMorphism {
            source: f.clone(),
            target: f.clone(),
            map: (0..f.len()).collect(),
        }
    }

    pub fn source(&self) -> &Frame {
        &self.source
    }

    pub fn target(&self) -> &Frame {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &FrameMorphism) -> Result<FrameMorphism, RefineError> {
        if self.target != next.source {
            return Err(RefineError::HypothesisViolated("morphisms are not composable".into()));
        }
        Ok(FrameMorphism {
            source: self.source.clone(),
            target: next.target.clone(),
            map: self.map.iter().map(|&b| next.map[b]).collect(),
        })
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = HashSet::new();
        self.map.iter().all(|b| seen.insert(*b))
    }

    pub fn is_surjective(&self) -> bool {
        self.map.iter().collect::<HashSet<_>>().len() == self.target.len()
    }
}

fn morphism_violation(source: &Frame, target: &Frame, map: &[usize]) -> Option<String> {
    if map[source.bottom()] != target.bottom() {
        return Some("bottom is not preserved".into());
    }
    if map[source.top()] != target.top() {
        return Some("top is not preserved".into());
    }
    for a in 0..source.len() {
        for b in 0..source.len() {
            if map[source.join(a, b)] != target.join(map[a], map[b]) {
                return Some(format!("join of `{}` and `{}` is not preserved", source.name(a), source.name(b)));
            }
            if map[source.meet(a, b)] != target.meet(map[a], map[b]) {
                return Some(format!("meet of `{}` and `{}` is not preserved", source.name(a), source.name(b)));
            }
        }
    }
    None
}

/// Every frame morphism `source -> target` whose map satisfies `allowed(a, b)` for each
/// assignment `a ↦ b`, by backtracking along a linear extension with monotonicity pruning.
pub fn enumerate_morphisms(
    source: &Frame,
    target: &Frame,
    allowed: impl Fn(usize, usize) -> bool,
) -> Vec<FrameMorphism> {
    let order = source.linear_extension();
    let mut map = vec![usize::MAX; source.len()];
    let mut out = Vec::new();
    fn rec(
        k: usize,
        order: &[usize],
        source: &Frame,
        target: &Frame,
        allowed: &dyn Fn(usize, usize) -> bool,
        map: &mut Vec<usize>,
        out: &mut Vec<FrameMorphism>,
    ) {
        if k == order.len() {
            if morphism_violation(source, target, map).is_none() {
                out.push(FrameMorphism {
                    source: source.clone(),
                    target: target.clone(),
                    map: map.clone(),
                });
            }
            return;
        }
        let a = order[k];
        for b in 0..target.len() {
            if !allowed(a, b) {
                continue;
            }
            // everything earlier in the extension is either below `a` or incomparable
            let monotone = order[..k].iter().all(|&c| !source.leq(c, a) || target.leq(map[c], b));
            if !monotone {
                continue;
            }
            map[a] = b;
            let partial_ok = order[..k].iter().all(|&c| {
                let j = source.join(a, c);
                let m = source.meet(a, c);
                (map[j] == usize::MAX || map[j] == target.join(b, map[c]))
                    && (map[m] == usize::MAX || map[m] == target.meet(b, map[c]))
            });
            if partial_ok {
                rec(k + 1, order, source, target, allowed, map, out);
            }
            map[a] = usize::MAX;
        }
    }
    rec(0, &order, source, target, &allowed, &mut map, &mut out);
    out
}

/// The specialization order on `pt(F)`: `x <= y` iff `p_x <= p_y`. Checked against the
/// closure description `cl(x) = {y : x <= y}` in the point space.
pub fn specialization_order(f: &Frame) -> FinitePoset {
    let pts = points(f);
    let names = pts.iter().map(|x| x.name(f)).collect();
    let order = FinitePoset::from_relation(names, |i, j| f.leq(pts[i].prime, pts[j].prime))
        .expect("primes are partially ordered");
    let space = point_space(f);
    for i in 0..pts.len() {
        assert_eq!(&space.closure(i), order.up(i), "closure of a point is its up-set");
    }
    order
}

/// `pt(φ)` as positions: entry `i` is the position in `points(source)` of `x_i ∘ φ`, where
/// `x_i` runs over `points(target)`. Computed by `p_y = ∨{a : φ(a) <= p_x}`.
pub fn pt_of_morphism(phi: &FrameMorphism) -> Vec<usize> {
    let src = points(&phi.source);
    let tgt = points(&phi.target);
    let spec_src = specialization_order(&phi.source);
    let spec_tgt = specialization_order(&phi.target);
    let image: Vec<usize> = tgt
        .iter()
        .map(|x| {
            let p = phi
                .source
                .join_all((0..phi.source.len()).filter(|&a| phi.target.leq(phi.map[a], x.prime)));
            src.iter().position(|y| y.prime == p).expect("pullback of a point is a point")
        })
        .collect();
    for i in 0..tgt.len() {
        for j in 0..tgt.len() {
            assert!(!spec_tgt.leq(i, j) || spec_src.leq(image[i], image[j]), "pt(φ) preserves order");
        }
    }
    image
}

/// `x` is honest when `φ(p_y) = p_x` for `y = pt(φ)(x)`; `x` is a position in `points(target)`.
pub fn is_honest(phi: &FrameMorphism, x: usize) -> bool {
    let src = points(&phi.source);
    let tgt = points(&phi.target);
    let y = pt_of_morphism(phi)[x];
    phi.map[src[y].prime] == tgt[x].prime
}

/// A witness `a` such that `x` is maximal in `U(a)` under specialization.
pub fn is_locally_closed(f: &Frame, x: Point) -> Option<usize> {
    let pts = points(f);
    (0..f.len()).find(|&a| {
        x.value(f, a) && !pts.iter().any(|y| y.value(f, a) && f.lt(x.prime, y.prime))
    })
}

pub fn all_locally_closed(f: &Frame) -> bool {
    points(f).into_iter().all(|x| is_locally_closed(f, x).is_some())
}

/// For each point `x`: `a = ∧(x^{-1}(1) ∩ compacts)` and `U(a)` is the down-set of `x`.
pub fn downset_open_check(f: &Frame, arity: Arity) -> Result<Vec<(Point, usize)>, RefineError> {
    let coherence = is_k_coherent(f, arity);
    if let Some(failure) = &coherence.failure {
        return Err(RefineError::HypothesisViolated(failure.describe(f.poset())));
    }
    let pts = points(f);
    let mut out = Vec::new();
    for (i, &x) in pts.iter().enumerate() {
        let a = f.meet_all(coherence.compacts.ones().filter(|&c| x.value(f, c)));
        let below = subset_of(pts.len(), (0..pts.len()).filter(|&j| f.leq(pts[j].prime, pts[i].prime)));
        if u_open(f, &pts, a) != below {
            return Err(RefineError::LemmaFailure(x.name(f)));
        }
        out.push((x, a));
    }
    Ok(out)
}

/// Heights of `points(f)` under specialization, with `sup ∅ = 0`.
pub fn height(f: &Frame) -> Vec<usize> {
    let spec = specialization_order(f);
    let mut het = vec![0; spec.len()];
    for x in spec.linear_extension() {
        het[x] = (0..spec.len())
            .filter(|&y| spec.lt(y, x))
            .map(|y| het[y] + 1)
            .max()
            .unwrap_or(0);
    }
    het
}

/// Largest height in `U(a)`; `None` when `U(a)` is empty.
pub fn dimension(f: &Frame, a: usize) -> Option<usize> {
    let pts = points(f);
    let het = height(f);
    u_open(f, &pts, a).ones().map(|i| het[i]).max()
}

pub fn dimension_is_monotone(f: &Frame) -> bool {
    let dims: Vec<Option<usize>> = (0..f.len()).map(|a| dimension(f, a)).collect();
    (0..f.len()).all(|a| (0..f.len()).all(|b| !f.leq(a, b) || dims[a] <= dims[b]))
}

fn is_bijection(map: &[usize], codomain: usize) -> bool {
    map.len() == codomain && map.iter().collect::<HashSet<_>>().len() == codomain
}

fn is_injection(map: &[usize]) -> bool {
    map.iter().collect::<HashSet<_>>().len() == map.len()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BijPointsReport {
    pub phi_bijective: bool,
    pub psi_bijective: bool,
    pub composite_bijective: bool,
    /// Every point of `G` (and of `H` when `pt(ψ∘φ)` is injective) is locally closed
    /// whenever the relevant point map is injective.
    pub locally_closed_propagates: bool,
    /// Pre-images of maximal points are honest for each morphism with an injective point map.
    pub maximal_preimages_honest: bool,
}

fn maximal_preimages_honest(phi: &FrameMorphism) -> bool {
    let pt = pt_of_morphism(phi);
    if !is_injection(&pt) {
        return true;
    }
    let spec = specialization_order(&phi.source);
    (0..pt.len()).all(|x| {
        let maximal = !(0..spec.len()).any(|z| spec.lt(pt[x], z));
        !maximal || is_honest(phi, x)
    })
}

/// For injective `φ: F -> G`, `ψ: G -> H` of spatial frames with every point of `F` locally
/// closed: `pt(φ)` and `pt(ψ)` are bijective iff `pt(ψ∘φ)` is.
pub fn bij_points_check(phi: &FrameMorphism, psi: &FrameMorphism) -> Result<BijPointsReport, RefineError> {
    let composite = phi.then(psi)?;
    if !phi.is_injective() {
        return Err(RefineError::HypothesisViolated("φ is not injective".into()));
    }
    if !psi.is_injective() {
        return Err(RefineError::HypothesisViolated("ψ is not injective".into()));
    }
    for (label, f) in [("F", &phi.source), ("G", &phi.target), ("H", &psi.target)] {
        if !is_spatial(f).is_spatial() {
            return Err(RefineError::HypothesisViolated(format!("{label} is not spatial")));
        }
    }
    if !all_locally_closed(&phi.source) {
        return Err(RefineError::HypothesisViolated("some point of F is not locally closed".into()));
    }
    let pt_phi = pt_of_morphism(phi);
    let pt_psi = pt_of_morphism(psi);
    let pt_comp = pt_of_morphism(&composite);
    let n_f = points(&phi.source).len();
    let n_g = points(&phi.target).len();
    let phi_bijective = is_bijection(&pt_phi, n_f);
    let psi_bijective = is_bijection(&pt_psi, n_g);
    let composite_bijective = is_bijection(&pt_comp, n_f);

    let locally_closed_propagates = (!is_injection(&pt_phi) || all_locally_closed(&phi.target))
        && (!is_injection(&pt_comp) || all_locally_closed(&psi.target));
    let maximal_preimages_honest =
        maximal_preimages_honest(phi) && maximal_preimages_honest(psi) && maximal_preimages_honest(&composite);

    let report = BijPointsReport {
        phi_bijective,
        psi_bijective,
        composite_bijective,
        locally_closed_propagates,
        maximal_preimages_honest,
    };
    if (phi_bijective && psi_bijective) != composite_bijective
        || !locally_closed_propagates
        || !maximal_preimages_honest
    {
        return Err(RefineError::PropositionFailure(format!("{report:?}")));
    }
    Ok(report)
}

/// Composable frame morphisms `F_0 -> F_1 -> ... -> F_n`.
#[derive(Debug, Clone)]
pub struct StratChain {
    links: Vec<FrameMorphism>,
}

impl StratChain {
    pub fn new(links: Vec<FrameMorphism>) -> Result<Self, RefineError> {
        if links.is_empty() {
            return Err(RefineError::HypothesisViolated("a chain needs at least one morphism".into()));
        }
        for (i, w) in links.windows(2).enumerate() {
            if w[0].target != w[1].source {
                return Err(RefineError::HypothesisViolated(format!("links {i} and {} do not compose", i + 1)));
            }
        }
        Ok(StratChain { links })
    }

    pub fn links(&self) -> &[FrameMorphism] {
        &self.links
    }

    /// `F_0, ..., F_n`.
    pub fn frames(&self) -> Vec<&Frame> {
        std::iter::once(self.links[0].source()).chain(self.links.iter().map(|l| l.target())).collect()
    }

    /// The composite `F_i -> F_n`.
    pub fn to_top(&self, i: usize) -> FrameMorphism {
        let mut m = FrameMorphism::identity(self.frames()[i]);
        for link in &self.links[i..] {
            m = m.then(link).expect("chain is composable");
        }
        m
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StratReport {
    /// Whether each link's point map is bijective.
    pub stage_bijective: Vec<bool>,
    /// Stage `i`'s topology on `pt(F_n)`: preimages of the opens `U(a)`, `a ∈ F_i`.
    pub topologies: Vec<Vec<Subset>>,
    /// Indices `i` where the topology of stage `i + 1` strictly refines stage `i`.
    pub strict_refinements: Vec<usize>,
    /// `pt(F_n) -> pt(F_0)` is a homeomorphism.
    pub homeomorphism: bool,
}

pub fn strat_chain_check(chain: &StratChain) -> Result<StratReport, RefineError> {
    let frames = chain.frames();
    for (i, link) in chain.links.iter().enumerate() {
        if !link.is_injective() {
            return Err(RefineError::HypothesisViolated(format!("link {i} is not injective")));
        }
    }
    for (i, f) in frames.iter().enumerate() {
        if !is_spatial(f).is_spatial() {
            return Err(RefineError::HypothesisViolated(format!("frame {i} is not spatial")));
        }
    }
    if !all_locally_closed(frames[0]) {
        return Err(RefineError::HypothesisViolated("some point of the base frame is not locally closed".into()));
    }
    let n = frames.len() - 1;
    let top_points = points(frames[n]).len();
    let whole = chain.to_top(0);
    if !is_bijection(&pt_of_morphism(&whole), points(frames[0]).len()) {
        return Err(RefineError::HypothesisViolated("the composite point map is not bijective".into()));
    }

    let stage_bijective: Vec<bool> = chain
        .links
        .iter()
        .map(|l| is_bijection(&pt_of_morphism(l), points(l.source()).len()))
        .collect();
    if let Some(index) = stage_bijective.iter().position(|b| !b) {
        return Err(RefineError::StageFailure {
            index,
            reason: "point map is not bijective".into(),
        });
    }
    // split F_0 -> F_n at every inner stage and rerun the proposition on both halves
    for i in 1..n {
        let phi = StratChain::new(chain.links[..i].to_vec())?.to_top(0);
        let psi = chain.to_top(i);
        bij_points_check(&phi, &psi).map_err(|e| RefineError::StageFailure {
            index: i,
            reason: e.to_string(),
        })?;
    }

    let mut topologies = Vec::new();
    for i in 0..=n {
        let to_top = chain.to_top(i);
        let pt = pt_of_morphism(&to_top);
        let pts = points(frames[i]);
        let mut opens: Vec<Subset> = (0..frames[i].len())
            .map(|a| {
                let u = u_open(frames[i], &pts, a);
                subset_of(top_points, (0..top_points).filter(|&x| u.contains(pt[x])))
            })
            .collect();
        opens.sort_by_key(|s| (s.count_ones(..), s.ones().collect::<Vec<_>>()));
        opens.dedup();
        topologies.push(opens);
    }
    let mut strict_refinements = Vec::new();
    for i in 0..n {
        if let Some(lost) = topologies[i].iter().find(|o| !topologies[i + 1].contains(o)) {
            return Err(RefineError::StageFailure {
                index: i + 1,
                reason: format!("open set {lost:?} is lost"),
            });
        }
        if topologies[i].len() < topologies[i + 1].len() {
            strict_refinements.push(i);
        }
    }
    let homeomorphism = topologies[0] == topologies[n];
    Ok(StratReport {
        stage_bijective,
        topologies,
        strict_refinements,
        homeomorphism,
    })
}

/// A parsed `.frmmap` file: `source <file>`, `target <file>`, `map <a> <b>` lines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorphismFile {
    pub source: String,
    pub target: String,
    pub pairs: Vec<(String, String)>,
}

pub fn parse_frmmap(text: &str) -> Result<MorphismFile, ParseError> {
    let mut source = None;
    let mut target = None;
    let mut pairs = Vec::new();
    let mut last_line = 0;
    for d in directives(text) {
        last_line = d.line;
        match d.keyword {
            "source" | "target" => {
                d.expect_args(1)?;
                let slot = if d.keyword == "source" { &mut source } else { &mut target };
                if slot.replace(d.args[0].to_string()).is_some() {
                    return Err(d.error(format!("`{}` given twice", d.keyword)));
                }
            }
            "map" => {
                d.expect_args(2)?;
                pairs.push((d.args[0].to_string(), d.args[1].to_string()));
            }
            other => return Err(d.error(format!("unknown directive `{other}`"))),
        }
    }
    Ok(MorphismFile {
        source: source.ok_or_else(|| ParseError::new(last_line, "missing `source`"))?,
        target: target.ok_or_else(|| ParseError::new(last_line, "missing `target`"))?,
        pairs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn frame(p: FinitePoset) -> Frame {
        Frame::from_poset(&p).unwrap()
    }

    fn morphism(s: FinitePoset, t: FinitePoset, pairs: &[(&str, &str)]) -> FrameMorphism {
        FrameMorphism::from_names(frame(s), frame(t), pairs).unwrap()
    }

    fn c3_into_b2() -> FrameMorphism {
        morphism(catalog::chain(3), catalog::b2(), &[("0", "0"), ("m", "a"), ("1", "1")])
    }

    #[test]
    fn morphism_validation() {
        assert!(FrameMorphism::from_names(frame(catalog::chain(2)), frame(catalog::chain(3)), &[("0", "0"), ("1", "m")]).is_err());
        assert!(FrameMorphism::from_names(frame(catalog::chain(2)), frame(catalog::chain(3)), &[("0", "0")]).is_err());
        let ab = FrameMorphism::from_names(frame(catalog::b2()), frame(catalog::chain(2)), &[("0", "0"), ("a", "1"), ("b", "1"), ("1", "1")]);
        assert!(matches!(ab, Err(RefineError::NotAMorphism(_))), "meet of a and b");
    }

    #[test]
    fn enumeration_matches_points() {
        // morphisms into the two-element chain are exactly the points
        for p in [catalog::b2(), catalog::chain(3), catalog::boolean(3)] {
            let f = frame(p);
            let maps = enumerate_morphisms(&f, &frame(catalog::chain(2)), |_, _| true);
            assert_eq!(maps.len(), points(&f).len());
        }
        let b2 = frame(catalog::b2());
        assert_eq!(enumerate_morphisms(&b2, &b2, |_, _| true).len(), 4);
    }

    #[test]
    fn specialization() {
        let c3 = specialization_order(&frame(catalog::chain(3)));
        assert_eq!(c3.names(), ["x_0", "x_m"]);
        assert!(c3.leq(0, 1));
        let b2 = specialization_order(&frame(catalog::b2()));
        assert!(!b2.comparable(0, 1));
        let b3 = specialization_order(&frame(catalog::boolean(3)));
        assert!(b3.antichains(&b3.full_subset(), None).iter().any(|a| a.len() == 3));
    }

    #[test]
    fn point_maps() {
        let c3 = frame(catalog::chain(3));
        assert_eq!(pt_of_morphism(&FrameMorphism::identity(&c3)), vec![0, 1]);
        let inc = morphism(catalog::chain(2), catalog::chain(3), &[("0", "0"), ("1", "1")]);
        assert_eq!(pt_of_morphism(&inc), vec![0, 0]);
        assert!(is_honest(&inc, 0));
        assert!(!is_honest(&inc, 1));
        let collapse = morphism(catalog::chain(3), catalog::chain(2), &[("0", "0"), ("m", "1"), ("1", "1")]);
        let pt = pt_of_morphism(&collapse);
        assert_eq!(points(collapse.source())[pt[0]].prime, c3.resolve("0").unwrap());
    }

    #[test]
    fn locally_closed_points() {
        let c3 = frame(catalog::chain(3));
        let pts = points(&c3);
        assert_eq!(is_locally_closed(&c3, pts[0]), Some(c3.resolve("m").unwrap()));
        assert_eq!(is_locally_closed(&c3, pts[1]), Some(c3.resolve("1").unwrap()));
        assert!(all_locally_closed(&frame(catalog::boolean(3))));
    }

    #[test]
    fn downset_opens() {
        let c3 = frame(catalog::chain(3));
        let r = downset_open_check(&c3, Arity::Omega).unwrap();
        let names: Vec<&str> = r.iter().map(|(_, a)| c3.name(*a)).collect();
        assert_eq!(names, ["m", "1"]);
        let b2 = frame(catalog::b2());
        let r = downset_open_check(&b2, Arity::Omega).unwrap();
        let names: Vec<&str> = r.iter().map(|(_, a)| b2.name(*a)).collect();
        assert_eq!(names, ["b", "a"]);
    }

    #[test]
    fn heights_and_dimension() {
        let c3 = frame(catalog::chain(3));
        assert_eq!(height(&c3), vec![0, 1]);
        assert_eq!(dimension(&c3, c3.resolve("1").unwrap()), Some(1));
        assert_eq!(dimension(&c3, c3.resolve("m").unwrap()), Some(0));
        assert_eq!(dimension(&c3, c3.resolve("0").unwrap()), None);
        let b2 = frame(catalog::b2());
        assert_eq!(height(&b2), vec![0, 0]);
        assert_eq!(dimension(&b2, b2.top()), Some(0));
        assert!(dimension_is_monotone(&c3) && dimension_is_monotone(&b2));
    }

    #[test]
    fn bij_points() {
        let b2 = frame(catalog::b2());
        let id = FrameMorphism::identity(&b2);
        let r = bij_points_check(&id, &id).unwrap();
        assert!(r.phi_bijective && r.psi_bijective && r.composite_bijective);

        let r = bij_points_check(&c3_into_b2(), &id).unwrap();
        assert!(r.composite_bijective);

        let c2_c3 = morphism(catalog::chain(2), catalog::chain(3), &[("0", "0"), ("1", "1")]);
        let r = bij_points_check(&c2_c3, &FrameMorphism::identity(c2_c3.target())).unwrap();
        assert!(!r.phi_bijective && !r.composite_bijective);

        let collapse = morphism(catalog::chain(3), catalog::chain(2), &[("0", "0"), ("m", "1"), ("1", "1")]);
        assert!(matches!(
            bij_points_check(&FrameMorphism::identity(collapse.source()), &collapse),
            Err(RefineError::HypothesisViolated(_))
        ));
    }

    #[test]
    fn chains() {
        let b2 = frame(catalog::b2());
        let id = FrameMorphism::identity(&b2);
        let chain = StratChain::new(vec![c3_into_b2(), id.clone()]).unwrap();
        let r = strat_chain_check(&chain).unwrap();
        assert_eq!(r.stage_bijective, vec![true, true]);
        assert_eq!(r.strict_refinements, vec![0]);
        assert_eq!(r.topologies[0].len(), 3);
        assert_eq!(r.topologies[2].len(), 4);
        assert!(!r.homeomorphism);

        let constant = StratChain::new(vec![id.clone(), id.clone()]).unwrap();
        let r = strat_chain_check(&constant).unwrap();
        assert!(r.strict_refinements.is_empty() && r.homeomorphism);

        let collapse = morphism(catalog::chain(3), catalog::chain(2), &[("0", "0"), ("m", "1"), ("1", "1")]);
        let bad = StratChain::new(vec![collapse]).unwrap();
        assert!(matches!(strat_chain_check(&bad), Err(RefineError::HypothesisViolated(_))));
    }

    #[test]
    fn frmmap_files() {
        let m = parse_frmmap("source c3.poset\ntarget b2.poset\nmap 0 0\nmap m a\nmap 1 1\n").unwrap();
        assert_eq!(m.source, "c3.poset");
        assert_eq!(m.pairs.len(), 3);
        assert!(parse_frmmap("target x\n").is_err());
        assert!(parse_frmmap("source a\nsource b\ntarget c\n").is_err());
    }
}
