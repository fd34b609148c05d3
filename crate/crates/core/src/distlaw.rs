//! Distributive laws `l : TG ⇒ GT` between a monad and an endofunctor or
//! comonad, both directions of the law/lift bijection, morphisms of laws
//! over a fixed companion, and the mixed pentagon theorems.
//!
//! The orientation `l : TG ⇒ GT` is fixed throughout; the pentagon reads
//! `Gμ ∘ lT ∘ Tl = l ∘ μG` and the unit law `l ∘ ηG = Gη`.

use serde::{Deserialize, Serialize};

use crate::error::CatError;
use crate::fincat::{
    compose, compose_functors, nat_trans_equal, validate_functor, validate_nat_trans, vcompose,
    whisker_left, whisker_right, FunctorData, MorId, NatTransData,
};
use crate::monad::{
    build_em, em_functor_from_map, enumerate_em_functors_over_u, map_from_em_functor, u_eps_h_f,
    validate_comonad, validate_monad, validate_monad_map_same_base, ComonadData, EMConstruction,
    MonadData,
};
use crate::report::Report;

/// The functor the monad distributes over: a bare endofunctor, or a
/// comonad when the lift is to carry a comonad structure too.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub enum Companion {
    Endofunctor(FunctorData),
    Comonad(ComonadData),
}

impl Companion {
    pub fn functor(&self) -> &FunctorData {
        match self {
            Companion::Endofunctor(f) => f,
            Companion::Comonad(w) => &w.functor,
        }
    }

    pub fn comonad(&self) -> Option<&ComonadData> {
        match self {
            Companion::Endofunctor(_) => None,
            Companion::Comonad(w) => Some(w),
        }
    }
}

/// A distributive law `l : T∘G ⇒ G∘T` bundled with its monad and
/// companion.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DistLawData {
    pub monad: MonadData,
    pub companion: Companion,
    pub law: NatTransData,
}

impl DistLawData {
    /// The identity law of a monad over the identity endofunctor.
    pub fn identity(t: &MonadData) -> Self {
        let g = FunctorData::identity(t.base());
        DistLawData {
            law: NatTransData::identity(&t.functor),
            companion: Companion::Endofunctor(g),
            monad: t.clone(),
        }
    }
}

fn componentwise(report: &mut Report, law: &str, lhs: &NatTransData, rhs: &NatTransData) {
    for x in 0..lhs.components.len() {
        if lhs.components[x] != rhs.components[x] {
            report.push(law, format!("object {x}"));
        }
    }
}

/// Pentagon and unit law, plus the comultiplication and counit
/// compatibility axioms when the companion is a comonad.
pub fn validate_dist_law(d: &DistLawData) -> Result<Report, CatError> {
    let t = &d.monad.functor;
    let g = d.companion.functor();
    if t.source != g.source || !g.is_endo() {
        return Err(CatError::CategoryMismatch(
            "distributive law needs monad and companion on one category".into(),
        ));
    }
    let tg = compose_functors(t, g)?;
    let gt = compose_functors(g, t)?;
    if d.law.source != tg || d.law.target != gt {
        return Err(CatError::Boundary("law must be a transformation TG ⇒ GT".into()));
    }

    let mut report = Report::ok();
    let monad_report = validate_monad(&d.monad)?;
    if !monad_report.ok {
        report.push("monad-laws", "carrier monad fails its laws".to_string());
    }
    if let Some(w) = d.companion.comonad() {
        if !validate_comonad(w)?.ok {
            report.push("comonad-laws", "companion comonad fails its laws".to_string());
        }
    }
    let nat = validate_nat_trans(&d.law)?;
    if !nat.ok {
        report.merge(nat);
        return Ok(report);
    }

    // pentagon: Gμ ∘ lT ∘ Tl = l ∘ μG  (TTG ⇒ GT)
    let t_l = whisker_left(t, &d.law)?; // TTG ⇒ TGT
    let l_t = whisker_right(&d.law, t)?; // TGT ⇒ GTT
    let g_mu = whisker_left(g, &d.monad.mu)?; // GTT ⇒ GT
    let lhs = vcompose(&g_mu, &vcompose(&l_t, &t_l)?)?;
    let mu_g = whisker_right(&d.monad.mu, g)?; // TTG ⇒ TG
    let rhs = vcompose(&d.law, &mu_g)?;
    componentwise(&mut report, "pentagon", &lhs, &rhs);

    // unit: l ∘ ηG = Gη  (G ⇒ GT)
    let eta_g = whisker_right(&d.monad.eta, g)?; // G ⇒ TG
    let lhs = vcompose(&d.law, &eta_g)?;
    let rhs = whisker_left(g, &d.monad.eta)?; // G ⇒ GT
    componentwise(&mut report, "unit", &lhs, &rhs);

    if let Some(w) = d.companion.comonad() {
        // counit: εT ∘ l = Tε  (TG ⇒ T)
        let eps_t = whisker_right(&w.epsilon, t)?; // GT ⇒ T
        let lhs = vcompose(&eps_t, &d.law)?;
        let rhs = whisker_left(t, &w.epsilon)?; // TG ⇒ T
        componentwise(&mut report, "counit-compatibility", &lhs, &rhs);

        // comultiplication: δT ∘ l = Gl ∘ lG ∘ Tδ  (TG ⇒ GGT)
        let delta_t = whisker_right(&w.delta, t)?; // GT ⇒ GGT
        let lhs = vcompose(&delta_t, &d.law)?;
        let t_delta = whisker_left(t, &w.delta)?; // TG ⇒ TGG
        let l_g = whisker_right(&d.law, g)?; // TGG ⇒ GTG
        let g_l = whisker_left(g, &d.law)?; // GTG ⇒ GGT
        let rhs = vcompose(&g_l, &vcompose(&l_g, &t_delta)?)?;
        componentwise(&mut report, "comultiplication-compatibility", &lhs, &rhs);
    }
    Ok(report)
}

/// The lift of the companion along a distributive law: the endofunctor
/// `G̃` on the EM category, plus the lifted comonad when the companion
/// carries one.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LiftedCompanion {
    pub endofunctor: FunctorData,
    pub comonad: Option<ComonadData>,
}

/// `G̃(M, ν) = (GM, G(ν)∘l_M)`, with `U∘G̃ = G∘U` exactly. For a comonad
/// companion the lifted `δ̃`, `ε̃` are emitted as well and validated.
pub fn lift_from_law(d: &DistLawData, em: &EMConstruction) -> Result<LiftedCompanion, CatError> {
    if em.monad != d.monad {
        return Err(CatError::Precondition(
            "lift_from_law: EM construction belongs to a different monad".into(),
        ));
    }
    if !validate_dist_law(d)?.ok {
        return Err(CatError::Precondition("lift_from_law: law axioms fail".into()));
    }
    let base = em.base();
    let g = d.companion.functor();
    let object_map: Vec<usize> = em
        .algebras
        .iter()
        .map(|a| {
            let carrier = g.object_map[a.carrier];
            let action = compose(base, g.morphism_map[a.action], d.law.components[a.carrier])?;
            em.algebra_index(carrier, action).ok_or_else(|| {
                CatError::Internal(format!(
                    "lifted image of algebra ({}, {}) is not an algebra",
                    a.carrier, a.action
                ))
            })
        })
        .collect::<Result<_, _>>()?;
    let morphism_map: Vec<MorId> = em
        .em_morphisms
        .iter()
        .map(|f| {
            em.em_morphism_index(
                object_map[f.src],
                object_map[f.tgt],
                g.morphism_map[f.underlying],
            )
            .ok_or_else(|| CatError::Internal("lifted morphism is not an algebra morphism".into()))
        })
        .collect::<Result<_, _>>()?;
    let lifted = FunctorData {
        source: em.em.clone(),
        target: em.em.clone(),
        object_map,
        morphism_map,
    };
    if !validate_functor(&lifted)?.ok {
        return Err(CatError::Internal("lifted endofunctor is not a functor".into()));
    }
    let ug = compose_functors(&em.forgetful, &lifted)?;
    let gu = compose_functors(g, &em.forgetful)?;
    if ug != gu {
        return Err(CatError::Internal("U∘G̃ differs from G∘U".into()));
    }

    let comonad = match d.companion.comonad() {
        None => None,
        Some(w) => {
            let gg_lift = compose_functors(&lifted, &lifted)?;
            let id_em = FunctorData::identity(&em.em);
            let delta_components: Vec<MorId> = em
                .algebras
                .iter()
                .enumerate()
                .map(|(ai, a)| {
                    em.em_morphism_index(
                        lifted.object_map[ai],
                        gg_lift.object_map[ai],
                        w.delta.components[a.carrier],
                    )
                    .ok_or_else(|| {
                        CatError::Internal("lifted comultiplication component missing".into())
                    })
                })
                .collect::<Result<_, _>>()?;
            let epsilon_components: Vec<MorId> = em
                .algebras
                .iter()
                .enumerate()
                .map(|(ai, a)| {
                    em.em_morphism_index(lifted.object_map[ai], ai, w.epsilon.components[a.carrier])
                        .ok_or_else(|| {
                            CatError::Internal("lifted counit component missing".into())
                        })
                })
                .collect::<Result<_, _>>()?;
            let lifted_comonad = ComonadData {
                functor: lifted.clone(),
                delta: NatTransData {
                    source: lifted.clone(),
                    target: gg_lift,
                    components: delta_components,
                },
                epsilon: NatTransData {
                    source: lifted.clone(),
                    target: id_em,
                    components: epsilon_components,
                },
            };
            if !validate_comonad(&lifted_comonad)?.ok {
                return Err(CatError::Internal("lifted comonad fails its laws".into()));
            }
            Some(lifted_comonad)
        }
    };

    Ok(LiftedCompanion {
        endofunctor: lifted,
        comonad,
    })
}

/// Recovers the law from a lift: `l_M = U(ε_{G̃FM}) ∘ TG(η_M)`.
pub fn law_from_lift(
    gtilde: &FunctorData,
    companion: &Companion,
    em: &EMConstruction,
) -> Result<DistLawData, CatError> {
    let g = companion.functor();
    let ug = compose_functors(&em.forgetful, gtilde)?;
    let gu = compose_functors(g, &em.forgetful)?;
    if ug != gu {
        return Err(CatError::Precondition("law_from_lift: U∘G̃ = G∘U fails".into()));
    }
    let base = em.base();
    let t = &em.monad.functor;
    let components: Vec<MorId> = (0..base.objects)
        .map(|x| {
            let tg_eta = t.morphism_map[g.morphism_map[em.monad.eta.components[x]]];
            let action = em.algebras[gtilde.object_map[em.free.object_map[x]]].action;
            compose(base, action, tg_eta)
        })
        .collect::<Result<_, _>>()?;
    let law = NatTransData {
        source: compose_functors(t, g)?,
        target: compose_functors(g, t)?,
        components,
    };
    let d = DistLawData {
        monad: em.monad.clone(),
        companion: companion.clone(),
        law,
    };
    if !validate_dist_law(&d)?.ok {
        return Err(CatError::Internal("recovered transformation is not a law".into()));
    }
    Ok(d)
}

/// All lifts of the companion: endofunctors `G̃` on the EM category with
/// `U∘G̃ = G∘U`, in deterministic order.
pub fn enumerate_lifts(
    companion: &Companion,
    em: &EMConstruction,
) -> Result<Vec<FunctorData>, CatError> {
    let g = companion.functor();
    let choices: Vec<Vec<usize>> = em
        .algebras
        .iter()
        .map(|a| {
            (0..em.algebras.len())
                .filter(|&bi| em.algebras[bi].carrier == g.object_map[a.carrier])
                .collect()
        })
        .collect();
    if choices.iter().any(|c| c.is_empty()) {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut idx = vec![0usize; choices.len()];
    loop {
        let object_map: Vec<usize> = idx.iter().enumerate().map(|(s, &i)| choices[s][i]).collect();
        let morphism_map: Option<Vec<MorId>> = em
            .em_morphisms
            .iter()
            .map(|f| {
                em.em_morphism_index(
                    object_map[f.src],
                    object_map[f.tgt],
                    g.morphism_map[f.underlying],
                )
            })
            .collect();
        if let Some(morphism_map) = morphism_map {
            let h = FunctorData {
                source: em.em.clone(),
                target: em.em.clone(),
                object_map,
                morphism_map,
            };
            if validate_functor(&h)?.ok {
                out.push(h);
            }
        }
        let mut pos = idx.len();
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < choices[pos].len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

/// Enumerates all laws and all lifts for one (monad, companion) pair and
/// checks that the two Beck maps are mutually inverse bijections.
pub fn check_beck_roundtrip(
    t: &MonadData,
    companion: &Companion,
    bound: usize,
) -> Result<Report, CatError> {
    let mut report = Report::ok();
    let em = build_em(t)?;
    let laws = crate::oracle::enumerate_dist_laws(t, companion, bound)?;
    let lifts = enumerate_lifts(companion, &em)?;
    report.count("laws", laws.len() as u64);
    report.count("lifts", lifts.len() as u64);
    if laws.len() != lifts.len() {
        report.push(
            "bijection-count",
            format!("{} laws vs {} lifts", laws.len(), lifts.len()),
        );
    }
    for d in &laws {
        let lifted = lift_from_law(d, &em)?;
        let back = law_from_lift(&lifted.endofunctor, companion, &em)?;
        if !nat_trans_equal(&d.law, &back.law)? {
            report.push("law-roundtrip", format!("components {:?}", d.law.components));
        }
    }
    for gt in &lifts {
        let d = law_from_lift(gt, companion, &em)?;
        let lifted = lift_from_law(&d, &em)?;
        if &lifted.endofunctor != gt {
            report.push("lift-roundtrip", format!("objects {:?}", gt.object_map));
        }
    }
    Ok(report)
}

/// A morphism of distributive laws over a shared companion: a same-base
/// monad map `α : T ⇒ T'` with `Gα ∘ l = l' ∘ αG`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DistrMorphism {
    pub source: DistLawData,
    pub target: DistLawData,
    pub alpha: NatTransData,
}

/// Validates the monad-map laws and the law-compatibility square.
pub fn validate_distr_morphism(m: &DistrMorphism) -> Result<Report, CatError> {
    if m.source.companion != m.target.companion {
        return Err(CatError::Boundary(
            "distributive law morphism needs a shared companion".into(),
        ));
    }
    if m.source.monad.base() != m.target.monad.base() {
        return Err(CatError::CategoryMismatch(
            "distributive law morphism needs both laws on one category".into(),
        ));
    }
    let mut report = Report::ok();
    let map_report = validate_monad_map_same_base(&m.alpha, &m.source.monad, &m.target.monad)?;
    report.merge(map_report);

    let g = m.source.companion.functor();
    // Gα ∘ l = l' ∘ αG  (TG ⇒ GT')
    let g_alpha = whisker_left(g, &m.alpha)?; // GT ⇒ GT'
    let lhs = vcompose(&g_alpha, &m.source.law)?;
    let alpha_g = whisker_right(&m.alpha, g)?; // TG ⇒ T'G
    let rhs = vcompose(&m.target.law, &alpha_g)?;
    componentwise(&mut report, "law-square", &lhs, &rhs);
    Ok(report)
}

/// `H^α` intertwines the lifts: `H^α ∘ G̃' = G̃ ∘ H^α` as functor tables.
pub fn check_halpha_equivariance(m: &DistrMorphism) -> Result<Report, CatError> {
    if !validate_distr_morphism(m)?.ok {
        return Err(CatError::Precondition(
            "check_halpha_equivariance: morphism axioms fail".into(),
        ));
    }
    let em_t = build_em(&m.source.monad)?;
    let em_t2 = build_em(&m.target.monad)?;
    let gt = lift_from_law(&m.source, &em_t)?.endofunctor;
    let gt2 = lift_from_law(&m.target, &em_t2)?.endofunctor;
    let h = em_functor_from_map(&m.alpha, &m.source.monad, &m.target.monad, &em_t, &em_t2)?;
    let lhs = compose_functors(&h, &gt2)?;
    let rhs = compose_functors(&gt, &h)?;
    let mut report = Report::ok();
    if lhs != rhs {
        report.push("equivariance", "H^α ∘ G̃' differs from G̃ ∘ H^α".to_string());
    }
    report.count("algebras", em_t2.algebras.len() as u64);
    Ok(report)
}

/// Mixed pentagon for a functor `H` with `UH = U'` and `G̃H = HG̃'`:
/// `G(UεHF') ∘ lT' ∘ Tl' = l' ∘ (UεHF')G`.
pub fn check_mixed_pentagon_h(
    d: &DistLawData,
    d_prime: &DistLawData,
    h: &FunctorData,
    em_t: &EMConstruction,
    em_t_prime: &EMConstruction,
) -> Result<Report, CatError> {
    if d.companion != d_prime.companion {
        return Err(CatError::Boundary("mixed pentagon needs a shared companion".into()));
    }
    let gt = lift_from_law(d, em_t)?.endofunctor;
    let gt_prime = lift_from_law(d_prime, em_t_prime)?.endofunctor;
    let lhs_eq = compose_functors(&gt, h)?;
    let rhs_eq = compose_functors(h, &gt_prime)?;
    if lhs_eq != rhs_eq {
        return Err(CatError::Precondition(
            "check_mixed_pentagon_h: H does not intertwine the lifts".into(),
        ));
    }
    let vertical = u_eps_h_f(h, em_t, em_t_prime)?; // TT' ⇒ T'
    let g = d.companion.functor();
    let t = &d.monad.functor;
    let t_prime = &d_prime.monad.functor;

    // Gv ∘ lT' ∘ Tl' = l' ∘ vG  (TT'G ⇒ GT')
    let t_l_prime = whisker_left(t, &d_prime.law)?; // TT'G ⇒ TGT'
    let l_tp = whisker_right(&d.law, t_prime)?; // TGT' ⇒ GTT'
    let g_v = whisker_left(g, &vertical)?; // GTT' ⇒ GT'
    let lhs = vcompose(&g_v, &vcompose(&l_tp, &t_l_prime)?)?;
    let v_g = whisker_right(&vertical, g)?; // TT'G ⇒ T'G
    let rhs = vcompose(&d_prime.law, &v_g)?;
    let mut report = Report::ok();
    componentwise(&mut report, "mixed-pentagon-H", &lhs, &rhs);
    Ok(report)
}

/// Mixed pentagon for a morphism of laws:
/// `G(μ'∘αT') ∘ lT' ∘ Tl' = l' ∘ (μ'∘αT')G`.
pub fn check_mixed_pentagon_alpha(m: &DistrMorphism) -> Result<Report, CatError> {
    if !validate_distr_morphism(m)?.ok {
        return Err(CatError::Precondition(
            "check_mixed_pentagon_alpha: morphism axioms fail".into(),
        ));
    }
    let g = m.source.companion.functor();
    let t = &m.source.monad.functor;
    let t_prime = &m.target.monad.functor;
    let alpha_tp = whisker_right(&m.alpha, t_prime)?; // TT' ⇒ T'T'
    let vertical = vcompose(&m.target.monad.mu, &alpha_tp)?; // TT' ⇒ T'

    let t_l_prime = whisker_left(t, &m.target.law)?;
    let l_tp = whisker_right(&m.source.law, t_prime)?;
    let g_v = whisker_left(g, &vertical)?;
    let lhs = vcompose(&g_v, &vcompose(&l_tp, &t_l_prime)?)?;
    let v_g = whisker_right(&vertical, g)?;
    let rhs = vcompose(&m.target.law, &v_g)?;
    let mut report = Report::ok();
    componentwise(&mut report, "mixed-pentagon-alpha", &lhs, &rhs);
    Ok(report)
}

/// When `H = H^α`, the vertical arrow of the H-form pentagon agrees with
/// the one of the α-form: `UεHF' = μ' ∘ αT'` componentwise.
pub fn check_vertical_agreement(
    alpha: &NatTransData,
    t: &MonadData,
    t_prime: &MonadData,
) -> Result<Report, CatError> {
    if !validate_monad_map_same_base(alpha, t, t_prime)?.ok {
        return Err(CatError::Precondition(
            "check_vertical_agreement: alpha is not a monad map".into(),
        ));
    }
    let em_t = build_em(t)?;
    let em_t2 = build_em(t_prime)?;
    let h = em_functor_from_map(alpha, t, t_prime, &em_t, &em_t2)?;
    let lhs = u_eps_h_f(&h, &em_t, &em_t2)?;
    let alpha_tp = whisker_right(alpha, &t_prime.functor)?;
    let rhs = vcompose(&t_prime.mu, &alpha_tp)?;
    let mut report = Report::ok();
    componentwise(&mut report, "vertical-agreement", &lhs, &rhs);
    report.count("objects", lhs.components.len() as u64);
    Ok(report)
}

/// `α ↦ H^α` is a contravariant functor: `α^{id} = id` for every monad
/// and `α^{H∘H'} = α^{H'} ∘ α^{H}` on every composable pair of functors
/// over the forgetfuls. Swept over all monads on the base.
pub fn check_contravariant_functoriality(
    base: &std::sync::Arc<crate::fincat::FinCategory>,
    bound: usize,
) -> Result<Report, CatError> {
    let mut report = Report::ok();
    let monads = crate::oracle::enumerate_monads(base, bound)?;
    let ems: Vec<EMConstruction> = monads.iter().map(build_em).collect::<Result<_, _>>()?;

    for (t, em) in monads.iter().zip(&ems) {
        let id_h = FunctorData::identity(&em.em);
        let alpha = map_from_em_functor(&id_h, em, em)?;
        if alpha != NatTransData::identity(&t.functor) {
            report.push("alpha-of-identity", format!("monad {:?}", t.functor.object_map));
        }
        report.count("identities", 1);
    }

    for (i, em_t) in ems.iter().enumerate() {
        for em_t1 in &ems {
            for h in enumerate_em_functors_over_u(em_t, em_t1)? {
                let alpha_h = map_from_em_functor(&h, em_t, em_t1)?;
                for em_t2 in &ems {
                    for h2 in enumerate_em_functors_over_u(em_t1, em_t2)? {
                        let alpha_h2 = map_from_em_functor(&h2, em_t1, em_t2)?;
                        let composite = compose_functors(&h, &h2)?;
                        let alpha_composite = map_from_em_functor(&composite, em_t, em_t2)?;
                        let expected = vcompose(&alpha_h2, &alpha_h)?;
                        if !nat_trans_equal(&alpha_composite, &expected)? {
                            report.push(
                                "contravariant-composition",
                                format!("monad {i}, H {:?}, H' {:?}", h.object_map, h2.object_map),
                            );
                        }
                        report.count("pairs", 1);
                    }
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::FinCategory;
    use crate::oracle::{enumerate_dist_laws, enumerate_monads, DEFAULT_BOUND};
    use std::sync::Arc;

    fn chain3() -> Arc<FinCategory> {
        Arc::new(FinCategory::chain(3))
    }

    fn z2() -> Arc<FinCategory> {
        Arc::new(FinCategory::z2())
    }

    fn z2_monad(c: &Arc<FinCategory>, m: MorId) -> MonadData {
        let id = FunctorData::identity(c);
        MonadData {
            functor: id.clone(),
            mu: NatTransData {
                source: id.clone(),
                target: id.clone(),
                components: vec![m],
            },
            eta: NatTransData {
                source: id.clone(),
                target: id.clone(),
                components: vec![m],
            },
        }
    }

    fn chain_closure_interior_law() -> DistLawData {
        let c = chain3();
        let t = MonadData::closure(&c, &[1, 1, 2]).unwrap();
        let w = ComonadData::interior(&c, &[0, 1, 1]).unwrap();
        let tg = compose_functors(&t.functor, &w.functor).unwrap();
        let gt = compose_functors(&w.functor, &t.functor).unwrap();
        let l = crate::fincat::forced_nat_trans(&tg, &gt).unwrap();
        DistLawData {
            monad: t,
            companion: Companion::Comonad(w),
            law: l,
        }
    }

    #[test]
    fn identity_law_is_valid() {
        let c = chain3();
        let d = DistLawData::identity(&MonadData::closure(&c, &[1, 1, 2]).unwrap());
        assert!(validate_dist_law(&d).unwrap().ok);
    }

    #[test]
    fn chain_closure_interior_law_is_valid() {
        let d = chain_closure_interior_law();
        assert!(validate_dist_law(&d).unwrap().ok);
    }

    #[test]
    fn z2_law_candidates_scan() {
        let c = z2();
        let t = z2_monad(&c, 1);
        let g = FunctorData::identity(&c);
        let mk = |comp| DistLawData {
            monad: t.clone(),
            companion: Companion::Endofunctor(g.clone()),
            law: NatTransData {
                source: g.clone(),
                target: g.clone(),
                components: vec![comp],
            },
        };
        assert!(validate_dist_law(&mk(0)).unwrap().ok);
        let report = validate_dist_law(&mk(1)).unwrap();
        assert!(!report.ok);
        assert!(report.violations.iter().any(|v| v.law == "unit"));
    }

    #[test]
    fn chain_law_count_is_one() {
        let d = chain_closure_interior_law();
        let laws = enumerate_dist_laws(&d.monad, &d.companion, DEFAULT_BOUND).unwrap();
        assert_eq!(laws.len(), 1);
    }

    #[test]
    fn lift_of_chain_law_sends_both_fixed_points_to_one() {
        let d = chain_closure_interior_law();
        let em = build_em(&d.monad).unwrap();
        let lifted = lift_from_law(&d, &em).unwrap();
        // algebras are the fixed points 1 and 2; the interior sends both to 1
        assert_eq!(em.algebras.len(), 2);
        assert_eq!(lifted.endofunctor.object_map, vec![0, 0]);
        assert!(lifted.comonad.is_some());
    }

    #[test]
    fn z2_lift_fixes_single_algebra() {
        let c = z2();
        let t = z2_monad(&c, 1);
        let g = FunctorData::identity(&c);
        let d = DistLawData {
            monad: t.clone(),
            companion: Companion::Endofunctor(g.clone()),
            law: NatTransData {
                source: g.clone(),
                target: g.clone(),
                components: vec![0],
            },
        };
        let em = build_em(&t).unwrap();
        let lifted = lift_from_law(&d, &em).unwrap();
        assert_eq!(lifted.endofunctor.object_map, vec![0]);
    }

    #[test]
    fn beck_roundtrip_identity_monad() {
        let c = chain3();
        let t = MonadData::identity(&c);
        let g = crate::fincat::functor_from_objects(&c, &c, vec![0, 1, 1]).unwrap();
        let report =
            check_beck_roundtrip(&t, &Companion::Endofunctor(g), DEFAULT_BOUND).unwrap();
        assert!(report.ok, "{:?}", report.violations);
    }

    #[test]
    fn beck_roundtrip_full_sweep_z2() {
        let c = z2();
        let monads = enumerate_monads(&c, DEFAULT_BOUND).unwrap();
        let functors = crate::oracle::enumerate_functors(&c, DEFAULT_BOUND).unwrap();
        for t in &monads {
            for g in &functors {
                let report = check_beck_roundtrip(
                    t,
                    &Companion::Endofunctor(g.clone()),
                    DEFAULT_BOUND,
                )
                .unwrap();
                assert!(report.ok, "{:?}", report.violations);
            }
        }
    }

    #[test]
    fn distr_morphism_on_chain_is_valid() {
        let c = chain3();
        let t = MonadData::identity(&c);
        let t2 = MonadData::closure(&c, &[1, 1, 2]).unwrap();
        let w = ComonadData::interior(&c, &[0, 1, 1]).unwrap();
        let companion = Companion::Comonad(w.clone());
        let laws_t = enumerate_dist_laws(&t, &companion, DEFAULT_BOUND).unwrap();
        let laws_t2 = enumerate_dist_laws(&t2, &companion, DEFAULT_BOUND).unwrap();
        assert_eq!(laws_t.len(), 1);
        assert_eq!(laws_t2.len(), 1);
        let alpha = crate::fincat::forced_nat_trans(&t.functor, &t2.functor).unwrap();
        let m = DistrMorphism {
            source: laws_t[0].clone(),
            target: laws_t2[0].clone(),
            alpha,
        };
        assert!(validate_distr_morphism(&m).unwrap().ok);
        assert!(check_halpha_equivariance(&m).unwrap().ok);
        assert!(check_mixed_pentagon_alpha(&m).unwrap().ok);
    }

    fn all_law_triples(c: &Arc<FinCategory>) -> Vec<DistLawData> {
        let monads = enumerate_monads(c, DEFAULT_BOUND).unwrap();
        let functors = crate::oracle::enumerate_functors(c, DEFAULT_BOUND).unwrap();
        let mut out = Vec::new();
        for t in &monads {
            for g in &functors {
                out.extend(
                    enumerate_dist_laws(t, &Companion::Endofunctor(g.clone()), DEFAULT_BOUND)
                        .unwrap(),
                );
            }
        }
        out
    }

    #[test]
    fn distr_is_a_category() {
        // identities are morphisms of laws, and valid morphisms compose
        for c in [chain3(), z2()] {
            let laws = all_law_triples(&c);
            for d in &laws {
                let id = DistrMorphism {
                    source: d.clone(),
                    target: d.clone(),
                    alpha: NatTransData::identity(&d.monad.functor),
                };
                assert!(validate_distr_morphism(&id).unwrap().ok);
            }
            for d1 in &laws {
                for d2 in &laws {
                    if d1.companion != d2.companion {
                        continue;
                    }
                    for a in crate::oracle::enumerate_monad_maps_same_base(
                        &d1.monad,
                        &d2.monad,
                        DEFAULT_BOUND,
                    )
                    .unwrap()
                    {
                        let m12 = DistrMorphism {
                            source: d1.clone(),
                            target: d2.clone(),
                            alpha: a.clone(),
                        };
                        if !validate_distr_morphism(&m12).unwrap().ok {
                            continue;
                        }
                        for d3 in &laws {
                            if d3.companion != d1.companion {
                                continue;
                            }
                            for b in crate::oracle::enumerate_monad_maps_same_base(
                                &d2.monad,
                                &d3.monad,
                                DEFAULT_BOUND,
                            )
                            .unwrap()
                            {
                                let m23 = DistrMorphism {
                                    source: d2.clone(),
                                    target: d3.clone(),
                                    alpha: b.clone(),
                                };
                                if !validate_distr_morphism(&m23).unwrap().ok {
                                    continue;
                                }
                                let composite = DistrMorphism {
                                    source: d1.clone(),
                                    target: d3.clone(),
                                    alpha: crate::fincat::vcompose(&b, &a).unwrap(),
                                };
                                assert!(
                                    validate_distr_morphism(&composite).unwrap().ok,
                                    "composite of law morphisms fails"
                                );
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn equivariance_transfer_both_ways() {
        // every valid morphism of laws induces an equivariant EM functor,
        // and every equivariant H over the forgetfuls projects to a
        // morphism of laws
        for c in [chain3(), z2()] {
            let laws = all_law_triples(&c);
            for d1 in &laws {
                let em1 = build_em(&d1.monad).unwrap();
                let gt1 = lift_from_law(d1, &em1).unwrap().endofunctor;
                for d2 in &laws {
                    if d1.companion != d2.companion {
                        continue;
                    }
                    let em2 = build_em(&d2.monad).unwrap();
                    let gt2 = lift_from_law(d2, &em2).unwrap().endofunctor;
                    for alpha in crate::oracle::enumerate_monad_maps_same_base(
                        &d1.monad,
                        &d2.monad,
                        DEFAULT_BOUND,
                    )
                    .unwrap()
                    {
                        let m = DistrMorphism {
                            source: d1.clone(),
                            target: d2.clone(),
                            alpha,
                        };
                        if validate_distr_morphism(&m).unwrap().ok {
                            assert!(check_halpha_equivariance(&m).unwrap().ok);
                        }
                    }
                    for h in enumerate_em_functors_over_u(&em1, &em2).unwrap() {
                        if compose_functors(&gt1, &h).unwrap()
                            != compose_functors(&h, &gt2).unwrap()
                        {
                            continue;
                        }
                        let alpha = map_from_em_functor(&h, &em1, &em2).unwrap();
                        let m = DistrMorphism {
                            source: d1.clone(),
                            target: d2.clone(),
                            alpha,
                        };
                        assert!(
                            validate_distr_morphism(&m).unwrap().ok,
                            "equivariant H fails to project to a law morphism"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn lift_enumeration_matches_generic_filter() {
        for c in [chain3(), z2()] {
            let monads = enumerate_monads(&c, DEFAULT_BOUND).unwrap();
            let functors = crate::oracle::enumerate_functors(&c, DEFAULT_BOUND).unwrap();
            for t in &monads {
                let em = build_em(t).unwrap();
                for g in &functors {
                    let companion = Companion::Endofunctor(g.clone());
                    let gu = compose_functors(g, &em.forgetful).unwrap();
                    let mut generic: Vec<FunctorData> =
                        crate::oracle::enumerate_functors(&em.em, DEFAULT_BOUND)
                            .unwrap()
                            .into_iter()
                            .filter(|h| {
                                compose_functors(&em.forgetful, h).unwrap() == gu
                            })
                            .collect();
                    let mut dedicated = enumerate_lifts(&companion, &em).unwrap();
                    let key = |f: &FunctorData| (f.object_map.clone(), f.morphism_map.clone());
                    generic.sort_by_key(key);
                    dedicated.sort_by_key(key);
                    assert_eq!(generic, dedicated);
                }
            }
        }
    }

    #[test]
    fn mixed_pentagon_h_reduces_to_pentagon_for_identity_h() {
        let d = chain_closure_interior_law();
        let em = build_em(&d.monad).unwrap();
        let h = FunctorData::identity(&em.em);
        let report = check_mixed_pentagon_h(&d, &d, &h, &em, &em).unwrap();
        assert!(report.ok, "{:?}", report.violations);
    }

    #[test]
    fn vertical_agreement_identity() {
        let c = chain3();
        let t = MonadData::closure(&c, &[1, 1, 2]).unwrap();
        let alpha = NatTransData::identity(&t.functor);
        let report = check_vertical_agreement(&alpha, &t, &t).unwrap();
        assert!(report.ok, "{:?}", report.violations);
    }

    #[test]
    fn contravariant_functoriality_z2() {
        let report = check_contravariant_functoriality(&z2(), DEFAULT_BOUND).unwrap();
        assert!(report.ok, "{:?}", report.violations);
    }
}
