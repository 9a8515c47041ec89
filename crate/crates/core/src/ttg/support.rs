use crate::frame::{Arity, Frame};
use crate::refine::{enumerate_morphisms, FrameMorphism};
use crate::text::{directives, ParseError};

use super::presentation::TTPresentation;
use super::rad::{rad_lattice, tensor_property_witness, RadLattice};
use super::TtgError;

/// A frame with an element assigned to each object.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportDatum {
    pub frame: Frame,
    pub sigma: Vec<usize>,
}

impl SupportDatum {
    pub fn from_names<S: AsRef<str>>(t: &TTPresentation, frame: Frame, pairs: &[(S, S)]) -> Result<Self, TtgError> {
        let mut sigma = vec![usize::MAX; t.len()];
        for (x, a) in pairs {
            let i = t.index(x.as_ref())?;
            let j = frame
                .resolve(a.as_ref())
                .map_err(|_| TtgError::SupportInvalid(format!("unknown frame element `{}`", a.as_ref())))?;
            if sigma[i] != usize::MAX && sigma[i] != j {
                return Err(TtgError::SupportInvalid(format!("`{}` is assigned twice", x.as_ref())));
            }
            sigma[i] = j;
        }
        if let Some(i) = sigma.iter().position(|&j| j == usize::MAX) {
            return Err(TtgError::SupportInvalid(format!("no value for `{}`", t.name(i))));
        }
        Ok(SupportDatum { frame, sigma })
    }

    /// The support `X ↦ rad(X)` into the Rad frame.
    pub fn canonical(rad: &RadLattice) -> Self {
        SupportDatum {
            frame: rad.frame().clone(),
            sigma: rad.principals().to_vec(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomResult {
    pub axiom: &'static str,
    pub witness: Option<String>,
}

impl AxiomResult {
    pub fn pass(&self) -> bool {
        self.witness.is_none()
    }
}

/// The five support axioms, each with the first witness found.
pub fn validate_support(t: &TTPresentation, d: &SupportDatum, arity: Arity) -> Vec<AxiomResult> {
    let f = &d.frame;
    let s = &d.sigma;
    let n = t.len();
    let name = |x: usize| t.name(x);
    let el = |a: usize| f.name(a).to_string();

    let s1 = if s[t.zero()] != f.bottom() {
        Some(format!("σ({}) = {}", name(t.zero()), el(s[t.zero()])))
    } else if s[t.unit()] != f.top() {
        Some(format!("σ({}) = {}", name(t.unit()), el(s[t.unit()])))
    } else {
        None
    };
    let s2 = (0..n)
        .find(|&x| s[t.shift(x)] != s[x])
        .map(|x| format!("σ(Σ{}) ≠ σ({})", name(x), name(x)));
    let s3 = t
        .coproducts()
        .iter()
        .filter(|(m, _)| arity.admits(m.len()))
        .find(|(m, &c)| s[c] != f.join_all(m.iter().map(|&x| s[x])))
        .map(|(_, &c)| format!("σ({}) is not the join over its members", name(c)))
        .or_else(|| {
            // a declared summand `A` of `B` means `B ≅ A ⊔ A'`, so `σ(A) <= σ(B)`
            (0..n)
                .flat_map(|b| t.summands_of(b).ones().map(move |a| (a, b)))
                .find(|&(a, b)| !f.leq(s[a], s[b]))
                .map(|(a, b)| format!("σ({}) ≰ σ({}) for the summand {} of {}", name(a), name(b), name(a), name(b)))
        });
    let s4 = (0..n)
        .flat_map(|x| (x..n).map(move |y| (x, y)))
        .find(|&(x, y)| s[t.tensor(x, y)] != f.meet(s[x], s[y]))
        .map(|(x, y)| format!("σ({} ⊗ {}) ≠ σ({}) ∧ σ({})", name(x), name(y), name(x), name(y)));
    let s5 = t
        .triangles()
        .iter()
        .find(|&&[x, y, z]| !f.leq(s[y], f.join(s[x], s[z])))
        .map(|&[x, y, z]| format!("σ({}) ≰ σ({}) ∨ σ({})", name(y), name(x), name(z)));
    [("S1", s1), ("S2", s2), ("S3", s3), ("S4", s4), ("S5", s5)]
        .into_iter()
        .map(|(axiom, witness)| AxiomResult { axiom, witness })
        .collect()
}

#[derive(Debug, Clone)]
pub struct UniversalMorphism {
    pub morphism: FrameMorphism,
    /// Number of factorizing frame morphisms found by enumeration.
    pub factorizing: usize,
}

/// The unique frame morphism `φ : Rad → D.frame` with `φ(rad X) = σ(X)`.
pub fn universal_morphism(t: &TTPresentation, d: &SupportDatum, arity: Arity) -> Result<UniversalMorphism, TtgError> {
    if let Some(bad) = validate_support(t, d, arity).into_iter().find(|r| !r.pass()) {
        return Err(TtgError::SupportInvalid(format!("{}: {}", bad.axiom, bad.witness.unwrap_or_default())));
    }
    let rad = rad_lattice(t, arity)?;
    if let Some((x, y)) = tensor_property_witness(t, &rad) {
        return Err(TtgError::HypothesisViolated(format!(
            "tensor property fails at ({}, {})",
            t.name(x),
            t.name(y)
        )));
    }
    let n = t.len();
    for x in 0..n {
        for y in x + 1..n {
            if rad.principal(x) == rad.principal(y) && d.sigma[x] != d.sigma[y] {
                return Err(TtgError::NotWellDefined(t.name(x).to_string(), t.name(y).to_string()));
            }
        }
    }
    // every radical ideal is the join of the principal ideals of its members
    let map: Vec<usize> = rad
        .ideals()
        .iter()
        .map(|ideal| d.frame.join_all(ideal.ones().map(|x| d.sigma[x])))
        .collect();
    let morphism = FrameMorphism::new(rad.frame().clone(), d.frame.clone(), map)
        .map_err(|e| TtgError::NotAMorphism(e.to_string()))?;
    if let Some(x) = (0..n).find(|&x| morphism.apply(rad.principal(x)) != d.sigma[x]) {
        return Err(TtgError::NotAMorphism(format!("σ({}) does not factor", t.name(x))));
    }
    let required: Vec<Option<usize>> = (0..rad.len())
        .map(|i| (0..n).find(|&x| rad.principal(x) == i).map(|x| d.sigma[x]))
        .collect();
    let found = enumerate_morphisms(rad.frame(), &d.frame, |a, b| required[a].is_none_or(|r| r == b));
    if found.len() != 1 {
        return Err(TtgError::NotUnique(found.len()));
    }
    if found[0].map() != morphism.map() {
        return Err(TtgError::NotUnique(2));
    }
    Ok(UniversalMorphism {
        morphism,
        factorizing: found.len(),
    })
}

/// Every support datum on `frame`, by backtracking over object assignments with the unit,
/// zero, shift and tensor axioms as pruning, then a full axiom check.
pub fn enumerate_supports(t: &TTPresentation, frame: &Frame, arity: Arity) -> Vec<SupportDatum> {
    let n = t.len();
    let mut sigma = vec![usize::MAX; n];
    let mut out = Vec::new();
    fn consistent(t: &TTPresentation, f: &Frame, sigma: &[usize], x: usize) -> bool {
        let v = sigma[x];
        if x == t.zero() && v != f.bottom() || x == t.unit() && v != f.top() {
            return false;
        }
        for y in [t.shift(x), t.unshift(x)] {
            if sigma[y] != usize::MAX && sigma[y] != v {
                return false;
            }
        }
        (0..sigma.len()).all(|y| {
            let xy = t.tensor(x, y);
            sigma[y] == usize::MAX || sigma[xy] == usize::MAX || sigma[xy] == f.meet(v, sigma[y])
        }) && (0..sigma.len()).all(|y| {
            // `x` may be the product of two assigned objects
            sigma[y] == usize::MAX
                || (0..sigma.len()).all(|z| sigma[z] == usize::MAX || t.tensor(y, z) != x || v == f.meet(sigma[y], sigma[z]))
        })
    }
    fn rec(t: &TTPresentation, f: &Frame, arity: Arity, x: usize, sigma: &mut Vec<usize>, out: &mut Vec<SupportDatum>) {
        if x == sigma.len() {
            let d = SupportDatum {
                frame: f.clone(),
                sigma: sigma.clone(),
            };
            if validate_support(t, &d, arity).iter().all(AxiomResult::pass) {
                out.push(d);
            }
            return;
        }
        for v in 0..f.len() {
            sigma[x] = v;
            if consistent(t, f, sigma, x) {
                rec(t, f, arity, x + 1, sigma, out);
            }
        }
        sigma[x] = usize::MAX;
    }
    rec(t, frame, arity, 0, &mut sigma, &mut out);
    out
}

/// Contents of a support datum file: `frame <poset-file>` and `sigma <object> <element>` lines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportFile {
    pub frame: String,
    pub sigma: Vec<(String, String)>,
}

pub fn parse_support(text: &str) -> Result<SupportFile, ParseError> {
    let mut frame = None;
    let mut sigma = Vec::new();
    let mut last_line = 0;
    for d in directives(text) {
        last_line = d.line;
        match d.keyword {
            "frame" => {
                d.expect_args(1)?;
                if frame.replace(d.args[0].to_string()).is_some() {
                    return Err(d.error("`frame` given twice"));
                }
            }
            "sigma" => {
                d.expect_args(2)?;
                sigma.push((d.args[0].to_string(), d.args[1].to_string()));
            }
            other => return Err(d.error(format!("unknown directive `{other}`"))),
        }
    }
    Ok(SupportFile {
        frame: frame.ok_or_else(|| ParseError::new(last_line, "missing `frame`"))?,
        sigma,
    })
}
