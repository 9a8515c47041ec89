//! Subcommands on posets, frames, spaces and frame morphisms.

use std::path::{Path, PathBuf};

use serde_json::{json, Value};

use framekit::frame::{completion_round_trip, is_k_coherent, k_compact_elements, k_ideals, Arity, Frame};
use framekit::hochster::{double_dual_check, dual_point_bijection, hochster_dual, thomason_correspondence};
use framekit::poset::{down_set_lattice, hasse_dot_named, iso_check, FinitePoset, Subset};
use framekit::refine::{
    bij_points_check, dimension, dimension_is_monotone, downset_open_check, height, is_locally_closed,
    pt_of_morphism, specialization_order, strat_chain_check, StratChain,
};
use framekit::stone::{
    counit_is_isomorphism, is_sober, is_spatial, point_space, points, prime_elements, spectral_check,
    two_valued_morphisms, unit_is_homeomorphism, FiniteSpace,
};
use framekit::ttg::{rad_lattice, spc};

use crate::load::{self, display_name};
use crate::report::{Check, InputError, Report};

pub fn names(p: &FinitePoset, set: &Subset) -> Value {
    set.ones().map(|i| p.name(i)).collect::<Vec<_>>().into()
}

/// Elements in index order and covers as sorted `[lower, upper]` pairs.
pub fn listing(p: &FinitePoset) -> Check {
    let mut covers: Vec<(&str, &str)> = p.covers().into_iter().map(|(a, b)| (p.name(a), p.name(b))).collect();
    covers.sort_unstable();
    Check::info("order")
        .with("elements", p.names().to_vec())
        .with("covers", covers.iter().map(|(a, b)| json!([a, b])).collect::<Vec<_>>())
}

pub fn space_listing(x: &FiniteSpace) -> Result<Check, InputError> {
    let spec = x
        .specialization()
        .map_err(|e| InputError::new(e.kind(), e.to_string()))?;
    let mut covers: Vec<(&str, &str)> = spec.covers().into_iter().map(|(a, b)| (spec.name(a), spec.name(b))).collect();
    covers.sort_unstable();
    Ok(Check::info("space")
        .with("points", x.names().to_vec())
        .with("opens", x.opens().iter().map(|o| x.label(o)).collect::<Vec<_>>())
        .with("specialization", covers.iter().map(|(a, b)| json!([a, b])).collect::<Vec<_>>()))
}

pub fn check(path: &Path) -> Result<Report, InputError> {
    let p = load::poset(path)?;
    let mut r = Report::new("check");
    r.push(Check::info("input").with("file", display_name(path)).with("elements", p.len()));
    let lattice = match p.as_lattice() {
        Ok(l) => l,
        Err(e) => {
            let witness = match &e {
                framekit::poset::PosetError::NotALattice(a, b) => json!([a, b]),
                _ => json!([]),
            };
            r.push(Check::new("lattice", false).with("witness", witness).with("reason", e.to_string()));
            return Ok(r);
        }
    };
    r.push(Check::new("lattice", true));
    let witness = lattice.distributivity_witness();
    r.push(
        Check::new("distributive", witness.is_none())
            .witness(witness.map(|w| w.iter().map(|&i| lattice.name(i)).collect::<Vec<_>>())),
    );
    if witness.is_none() {
        let ji = lattice.join_irreducibles().map_err(|e| InputError::new(e.kind(), e.to_string()))?;
        r.push(
            Check::new("birkhoff", iso_check(&down_set_lattice(&ji), &p))
                .with("join_irreducibles", ji.names().to_vec()),
        );
    }
    Ok(r)
}

pub fn idl(path: &Path, arity: Arity) -> Result<Report, InputError> {
    let p = load::poset(path)?;
    let il = k_ideals(&p, arity).map_err(|e| load::frame_error(&e).in_file(display_name(path)))?;
    let mut r = Report::new("idl");
    r.push(Check::info("input").with("file", display_name(path)).with("arity", arity.to_string()));
    r.push(listing(il.order()).with("count", il.len()));
    match il.frame() {
        Ok(f) => {
            r.push(Check::new("frame", true));
            r.push(Check::info("compact").with("elements", names(f.poset(), &k_compact_elements(&f, arity))));
            if let Ok(l) = p.as_lattice() {
                if l.is_distributive() {
                    let round = completion_round_trip(&l, arity);
                    r.push(
                        Check::new("round_trip", round.is_ok())
                            .witness(round.err().map(|e| e.to_string())),
                    );
                }
            }
        }
        Err(e) => r.push(Check::new("frame", false).with("witness", e.to_string())),
    }
    Ok(r)
}

fn point_names(f: &Frame) -> Vec<String> {
    points(f).iter().map(|x| x.name(f)).collect()
}

pub fn points_cmd(path: &Path) -> Result<Report, InputError> {
    let f = load::frame(path)?;
    let mut r = Report::new("points");
    r.push(Check::info("points").with("primes", point_names(&f)));
    let spatial = is_spatial(&f);
    r.push(
        Check::new("spatial", spatial.is_spatial())
            .witness(spatial.inseparable.map(|(a, b)| json!([f.name(a), f.name(b)]))),
    );
    let maps = two_valued_morphisms(&f).len();
    r.push(
        Check::new("two_valued_maps", maps == prime_elements(&f).count_ones(..))
            .with("count", maps),
    );
    Ok(r)
}

pub fn space(path: &Path) -> Result<Report, InputError> {
    let f = load::frame(path)?;
    let x = point_space(&f);
    let mut r = Report::new("space");
    r.push(space_listing(&x)?);
    let sober = is_sober(&x);
    r.push(Check::new("sober", sober.is_sober()).witness(sober.witness.map(|w| x.label(&w))));
    let (spectral, _) = spectral_check(&x, Arity::Omega).map_err(|e| InputError::new("Stone", e.to_string()))?;
    r.push(Check::new("spectral", spectral.passed()).with("detail", format!("{spectral:?}")));
    r.push(Check::new("counit_isomorphism", counit_is_isomorphism(&f)));
    let unit = unit_is_homeomorphism(&x).map_err(|e| InputError::new("Stone", e.to_string()))?;
    r.push(Check::new("unit_homeomorphism", unit));
    Ok(r)
}

pub fn dual(path: &Path) -> Result<Report, InputError> {
    let f = load::frame(path)?;
    let mut r = Report::new("dual");
    let coherence = is_k_coherent(&f, Arity::Omega);
    r.push(Check::new("coherent", coherence.is_coherent()).witness(coherence.failure.map(|c| c.describe(f.poset()))));
    let d = hochster_dual(&f).map_err(|e| load::frame_error(&e))?;
    r.push(listing(d.frame.poset()).with("count", d.frame.len()));
    let double = double_dual_check(&f);
    r.push(Check::new("double_dual", double.is_ok()).witness(double.err().map(|e| e.to_string())));
    let bij = dual_point_bijection(&f, &d);
    r.push(
        Check::new("points", bij.bijective && bij.reverses_specialization)
            .with("source", bij.source.len())
            .with("dual", bij.dual.len())
            .with("bijective", bij.bijective)
            .with("reverses_specialization", bij.reverses_specialization),
    );
    let thomason = thomason_correspondence(&f, Arity::Omega);
    r.push(Check::new("thomason", thomason.is_ok()).witness(thomason.err().map(|e| e.to_string())));
    Ok(r)
}

pub fn dim(path: &Path) -> Result<Report, InputError> {
    let f = load::frame(path)?;
    let mut r = Report::new("dim");
    let pts = points(&f);
    let heights = height(&f);
    r.push(Check::info("height").with(
        "points",
        pts.iter()
            .zip(&heights)
            .map(|(x, h)| json!({ "point": x.name(&f), "height": h, "locally_closed": is_locally_closed(&f, *x).is_some() }))
            .collect::<Vec<_>>(),
    ));
    r.push(Check::info("dimension").with(
        "elements",
        (0..f.len())
            .map(|a| json!({ "element": f.name(a), "dim": dimension(&f, a) }))
            .collect::<Vec<_>>(),
    ));
    r.push(Check::new("monotone", dimension_is_monotone(&f)));
    let downset = downset_open_check(&f, Arity::Omega);
    r.push(Check::new("downset_open", downset.is_ok()).witness(downset.err().map(|e| e.to_string())));
    Ok(r)
}

pub fn refine(paths: &[PathBuf]) -> Result<Report, InputError> {
    let links = paths.iter().map(|p| load::morphism(p)).collect::<Result<Vec<_>, _>>()?;
    let mut r = Report::new("refine");
    for (p, m) in paths.iter().zip(&links) {
        let src = points(m.source());
        let pt = pt_of_morphism(m);
        r.push(
            Check::info("morphism")
                .with("file", display_name(p))
                .with("injective", m.is_injective())
                .with("surjective", m.is_surjective())
                .with(
                    "point_map",
                    point_names(m.target())
                        .into_iter()
                        .zip(&pt)
                        .map(|(x, &y)| json!([x, src[y].name(m.source())]))
                        .collect::<Vec<_>>(),
                ),
        );
    }
    let chain = StratChain::new(links.clone()).map_err(|e| InputError::new("HypothesisViolated", e.to_string()))?;
    if links.len() == 2 {
        let bij = bij_points_check(&links[0], &links[1]);
        r.push(match bij {
            Ok(b) => Check::new(
                "bij_points",
                b.locally_closed_propagates && b.maximal_preimages_honest,
            )
            .with("phi_bijective", b.phi_bijective)
            .with("psi_bijective", b.psi_bijective)
            .with("composite_bijective", b.composite_bijective),
            Err(framekit::refine::RefineError::HypothesisViolated(h)) => Check::skipped("bij_points", h),
            Err(e) => Check::new("bij_points", false).with("witness", e.to_string()),
        });
    }
    r.push(match strat_chain_check(&chain) {
        Ok(s) => {
            let top = *chain.frames().last().expect("non-empty chain");
            let top_points = point_names(top);
            Check::new("strat_chain", true)
                .with("stage_bijective", s.stage_bijective)
                .with("strict_refinements", s.strict_refinements)
                .with("homeomorphism", s.homeomorphism)
                .with(
                    "topologies",
                    s.topologies
                        .iter()
                        .map(|opens| {
                            opens
                                .iter()
                                .map(|o| o.ones().map(|i| top_points[i].clone()).collect::<Vec<_>>())
                                .collect::<Vec<_>>()
                        })
                        .collect::<Vec<_>>(),
                )
        }
        Err(framekit::refine::RefineError::HypothesisViolated(h)) => Check::skipped("strat_chain", h),
        Err(e) => Check::new("strat_chain", false).with("witness", e.to_string()),
    });
    Ok(r)
}

/// DOT for a `.poset` (Hasse diagram), `.space` (specialization order) or `.ttg` (Rad frame)
/// file; `spectrum` switches posets and presentations to the specialization order of points.
pub fn render(path: &Path, spectrum: bool, arity: Arity) -> Result<String, InputError> {
    let ext = path.extension().and_then(|e| e.to_str()).unwrap_or("");
    let graph = path.file_stem().map_or("graph".into(), |s| s.to_string_lossy().into_owned());
    let order = match (ext, spectrum) {
        ("space", _) => load::space(path)?
            .specialization()
            .map_err(|e| InputError::new(e.kind(), e.to_string()))?,
        ("ttg", false) => {
            let t = load::presentation(path)?;
            rad_lattice(&t, arity).map_err(|e| load::ttg_error(&e))?.frame().poset().clone()
        }
        ("ttg", true) => {
            let t = load::presentation(path)?;
            spc(&t, arity)
                .map_err(|e| load::ttg_error(&e))?
                .specialization()
                .map_err(|e| InputError::new(e.kind(), e.to_string()))?
        }
        (_, true) => specialization_order(&load::frame(path)?),
        (_, false) => load::poset(path)?,
    };
    Ok(hasse_dot_named(&order, &graph))
}
