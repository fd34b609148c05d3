//! Brute-force enumerators used as independent ground truth.
//!
//! Every enumerator walks the full candidate space in lexicographic table
//! order, keeps exactly the candidates its validator accepts, and refuses
//! to start on categories above a morphism-count ceiling. Nothing here is
//! clever; that is the point.

use std::sync::Arc;

use crate::distlaw::{validate_dist_law, Companion, DistLawData};
use crate::error::CatError;
use crate::fincat::{
    compose_functors, functor_power, validate_functor, validate_nat_trans, FinCategory,
    FunctorData, NatTransData,
};
use crate::monad::{
    validate_comonad, validate_monad, validate_monad_map_same_base, ComonadData, MonadData,
};

/// Default ceiling on the morphism count of categories fed to enumerators.
pub const DEFAULT_BOUND: usize = 24;

fn guard(c: &FinCategory, bound: usize) -> Result<(), CatError> {
    if c.morphisms.len() > bound {
        return Err(CatError::BoundExceeded {
            size: c.morphisms.len(),
            bound,
        });
    }
    Ok(())
}

/// Odometer over `choices[0] × choices[1] × ...` in lexicographic order.
/// The empty product yields exactly one (empty) assignment.
fn product(choices: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for slot in choices {
        let mut next = Vec::with_capacity(out.len() * slot.len().max(1));
        for prefix in &out {
            for &v in slot {
                let mut row = prefix.clone();
                row.push(v);
                next.push(row);
            }
        }
        out = next;
    }
    out
}

/// All functors `source -> target`, each exactly once, in lexicographic
/// order of (object table, morphism table).
pub fn enumerate_functors_between(
    source: &Arc<FinCategory>,
    target: &Arc<FinCategory>,
    bound: usize,
) -> Result<Vec<FunctorData>, CatError> {
    guard(source, bound)?;
    guard(target, bound)?;
    let obj_choices: Vec<Vec<usize>> = (0..source.objects)
        .map(|_| (0..target.objects).collect())
        .collect();
    let mut out = Vec::new();
    for object_map in product(&obj_choices) {
        // candidate images constrained to the correct hom-set; validation
        // still runs in full afterwards
        let mor_choices: Vec<Vec<usize>> = (0..source.morphisms.len())
            .map(|m| {
                target.hom(
                    object_map[source.morphisms[m].src],
                    object_map[source.morphisms[m].tgt],
                )
            })
            .collect();
        if mor_choices.iter().any(|c| c.is_empty()) {
            continue;
        }
        for morphism_map in product(&mor_choices) {
            let f = FunctorData {
                source: source.clone(),
                target: target.clone(),
                object_map: object_map.clone(),
                morphism_map,
            };
            if validate_functor(&f)?.ok {
                out.push(f);
            }
        }
    }
    Ok(out)
}

/// All endofunctors of `c`.
pub fn enumerate_functors(c: &Arc<FinCategory>, bound: usize) -> Result<Vec<FunctorData>, CatError> {
    enumerate_functors_between(c, c, bound)
}

/// All natural transformations `f ⇒ g`, in lexicographic component order.
pub fn enumerate_nat_trans(
    f: &FunctorData,
    g: &FunctorData,
    bound: usize,
) -> Result<Vec<NatTransData>, CatError> {
    if f.source != g.source || f.target != g.target {
        return Err(CatError::Boundary(
            "enumerate_nat_trans: functors are not parallel".into(),
        ));
    }
    guard(&f.source, bound)?;
    guard(&f.target, bound)?;
    let amb = &f.target;
    let choices: Vec<Vec<usize>> = (0..f.source.objects)
        .map(|x| amb.hom(f.object_map[x], g.object_map[x]))
        .collect();
    let mut out = Vec::new();
    if choices.iter().any(|c| c.is_empty()) {
        return Ok(out);
    }
    for components in product(&choices) {
        let t = NatTransData {
            source: f.clone(),
            target: g.clone(),
            components,
        };
        if validate_nat_trans(&t)?.ok {
            out.push(t);
        }
    }
    Ok(out)
}

/// All monads on `c`: every carrier endofunctor with every (μ, η) pair
/// passing the monad laws.
pub fn enumerate_monads(c: &Arc<FinCategory>, bound: usize) -> Result<Vec<MonadData>, CatError> {
    let mut out = Vec::new();
    for t in enumerate_functors(c, bound)? {
        let tt = compose_functors(&t, &t)?;
        let id = FunctorData::identity(c);
        for mu in enumerate_nat_trans(&tt, &t, bound)? {
            for eta in enumerate_nat_trans(&id, &t, bound)? {
                let m = MonadData {
                    functor: t.clone(),
                    mu: mu.clone(),
                    eta,
                };
                if validate_monad(&m)?.ok {
                    out.push(m);
                }
            }
        }
    }
    Ok(out)
}

/// All comonads on `c`.
pub fn enumerate_comonads(c: &Arc<FinCategory>, bound: usize) -> Result<Vec<ComonadData>, CatError> {
    let mut out = Vec::new();
    for g in enumerate_functors(c, bound)? {
        let gg = compose_functors(&g, &g)?;
        let id = FunctorData::identity(c);
        for delta in enumerate_nat_trans(&g, &gg, bound)? {
            for epsilon in enumerate_nat_trans(&g, &id, bound)? {
                let w = ComonadData {
                    functor: g.clone(),
                    delta: delta.clone(),
                    epsilon,
                };
                if validate_comonad(&w)?.ok {
                    out.push(w);
                }
            }
        }
    }
    Ok(out)
}

/// All distributive laws `l : T∘G ⇒ G∘T` for a fixed monad and companion.
pub fn enumerate_dist_laws(
    t: &MonadData,
    companion: &Companion,
    bound: usize,
) -> Result<Vec<DistLawData>, CatError> {
    let g = companion.functor();
    let tg = compose_functors(&t.functor, g)?;
    let gt = compose_functors(g, &t.functor)?;
    let mut out = Vec::new();
    for l in enumerate_nat_trans(&tg, &gt, bound)? {
        let d = DistLawData {
            monad: t.clone(),
            companion: companion.clone(),
            law: l,
        };
        if validate_dist_law(&d)?.ok {
            out.push(d);
        }
    }
    Ok(out)
}

/// All same-base monad maps `T ⇒ T'`.
pub fn enumerate_monad_maps_same_base(
    t: &MonadData,
    t_prime: &MonadData,
    bound: usize,
) -> Result<Vec<NatTransData>, CatError> {
    let mut out = Vec::new();
    for alpha in enumerate_nat_trans(&t.functor, &t_prime.functor, bound)? {
        if validate_monad_map_same_base(&alpha, t, t_prime)?.ok {
            out.push(alpha);
        }
    }
    Ok(out)
}

/// Endofunctor powers commute with addition of exponents.
pub fn check_power_additivity(t: &FunctorData, bound: usize) -> Result<crate::Report, CatError> {
    let mut report = crate::Report::ok();
    for a in 0..=bound {
        for b in 0..=bound {
            let lhs = functor_power(t, a + b)?;
            let rhs = compose_functors(&functor_power(t, a)?, &functor_power(t, b)?)?;
            if lhs != rhs {
                report.push("power-additivity", format!("a={a} b={b}"));
            }
            report.count("pairs", 1);
        }
    }
    Ok(report)
}

/// Interchange law for horizontal composition, swept over every pair of
/// vertically composable 2-cells between enumerated endofunctors.
pub fn check_interchange(c: &Arc<FinCategory>, bound: usize) -> Result<crate::Report, CatError> {
    use crate::fincat::{hcompose, vcompose, whisker_left, whisker_right};
    let functors = enumerate_functors(c, bound)?;
    let n = functors.len();
    // precomputed hom-table of 2-cells between every ordered functor pair
    let mut cells = vec![Vec::new(); n * n];
    for (i, f) in functors.iter().enumerate() {
        for (j, g) in functors.iter().enumerate() {
            cells[i * n + j] = enumerate_nat_trans(f, g, bound)?;
        }
    }
    // vertically composable chains t: F⇒G, s: G⇒H, as index triples
    let mut chains = Vec::new();
    for f in 0..n {
        for g in 0..n {
            if cells[f * n + g].is_empty() {
                continue;
            }
            for h in 0..n {
                if !cells[g * n + h].is_empty() {
                    chains.push((f, g, h));
                }
            }
        }
    }
    let mut report = crate::Report::ok();
    // (s2∘t2) ⋆ (s1∘t1) = (s2⋆s1) ∘ (t2⋆t1) for every pair of chains,
    // plus the two whiskering orders of each single horizontal composite
    for &(f1, g1, h1) in &chains {
        for &(f2, g2, h2) in &chains {
            for t1 in &cells[f1 * n + g1] {
                for s1 in &cells[g1 * n + h1] {
                    for t2 in &cells[f2 * n + g2] {
                        for s2 in &cells[g2 * n + h2] {
                            let lhs = hcompose(&vcompose(s2, t2)?, &vcompose(s1, t1)?)?;
                            let rhs = vcompose(&hcompose(s2, s1)?, &hcompose(t2, t1)?)?;
                            if lhs != rhs {
                                report.push("interchange", "quadruple of 2-cells".to_string());
                            }
                            report.count("quadruples", 1);
                            let w1 = vcompose(
                                &whisker_right(t2, &t1.target)?,
                                &whisker_left(&t2.source, t1)?,
                            )?;
                            let w2 = vcompose(
                                &whisker_left(&t2.target, t1)?,
                                &whisker_right(t2, &t1.source)?,
                            )?;
                            if w1 != w2 {
                                report.push("whisker-order", "pair of 2-cells".to_string());
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(report)
}
