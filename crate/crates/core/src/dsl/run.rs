//! Executes the checks of an elaborated document, in document order, with
//! deterministic witnesses and counts.

use std::collections::BTreeMap;

use serde::Serialize;

use super::ast::*;
use super::elab::{Diagnostic, Env, TransValue, Value};
use crate::distlaw::{
    check_beck_roundtrip, check_contravariant_functoriality, check_halpha_equivariance,
    check_mixed_pentagon_alpha, check_mixed_pentagon_h, check_vertical_agreement, enumerate_lifts,
    law_from_lift, lift_from_law, validate_dist_law, Companion, DistLawData, DistrMorphism,
};
use crate::error::CatError;
use crate::fincat::{
    compose, compose_functors, nat_trans_equal, validate_category, validate_functor,
    validate_nat_trans, FunctorData,
};
use crate::monad::{
    build_em, check_eps_identity, check_same_base_roundtrip, compose_monad_maps,
    em_lift_across, enumerate_em_functors_over, enumerate_em_functors_over_u, lift_transformation,
    map_from_em_across, project_transformation, validate_map_transformation, validate_monad,
    validate_monad_map_across, validate_monad_map_same_base, MonadData, MonadMapAcross,
};
use crate::oracle::{
    check_interchange, check_power_additivity, enumerate_dist_laws, enumerate_functors,
    enumerate_monads, enumerate_nat_trans,
};
use crate::pro::{
    braided_tower, check_cube, check_decomposition, check_ln_consistency, check_mixed_heptagon,
    check_multigon, check_power_lemma, check_yang_baxter, comonad_from_rep, compose_pair_maps,
    eval_word, generate_multigon, monad_from_rep, rep_from_comonad, rep_from_monad,
    validate_comonad_law, validate_equivariant_rep, validate_pair_map,
    validate_pair_transformation, validate_representation, word_arity, ComonadLaw,
};
use crate::report::Report;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub op: String,
    pub status: Status,
    pub witnesses: Vec<String>,
    pub counts: BTreeMap<String, u64>,
    /// source position of the check line
    pub line: usize,
    pub col: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunResult {
    pub checks: Vec<CheckResult>,
    pub diagnostics: Vec<(usize, usize, String)>,
}

impl RunResult {
    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.status == Status::Pass).count()
    }

    pub fn failed(&self) -> usize {
        self.checks.iter().filter(|c| c.status == Status::Fail).count()
    }

    pub fn errored(&self) -> usize {
        self.checks.iter().filter(|c| c.status == Status::Error).count()
    }

    /// 0 when everything passed, 1 on any failed check, 2 on parse or
    /// elaboration errors (including checks that could not run).
    pub fn exit_code(&self) -> i32 {
        if !self.diagnostics.is_empty() || self.errored() > 0 {
            2
        } else if self.failed() > 0 {
            1
        } else {
            0
        }
    }
}

enum Outcome {
    Report(Report),
    Fail(String),
    Pass(BTreeMap<String, u64>),
}

fn pass() -> Result<Outcome, String> {
    Ok(Outcome::Pass(BTreeMap::new()))
}

fn expect_count(what: &str, got: u64, expect: u64) -> Result<Outcome, String> {
    if got == expect {
        let mut counts = BTreeMap::new();
        counts.insert(what.to_string(), got);
        Ok(Outcome::Pass(counts))
    } else {
        Ok(Outcome::Fail(format!("expected {expect} {what}, got {got}")))
    }
}

struct Runner<'a> {
    env: &'a Env,
    bound: usize,
}

impl<'a> Runner<'a> {
    fn category(&self, name: &str) -> Result<std::sync::Arc<crate::fincat::FinCategory>, String> {
        match self.env.lookup(name, "category")? {
            Value::Category(c) => Ok(c.clone()),
            _ => unreachable!(),
        }
    }

    fn functor(&self, name: &str) -> Result<FunctorData, String> {
        match self.env.lookup(name, "any")? {
            Value::Functor(f) => Ok(f.clone()),
            Value::Monad(m) => Ok(m.functor.clone()),
            Value::Comonad(w) => Ok(w.functor.clone()),
            Value::Representation(r) => Ok(r.t.clone()),
            v => Err(format!("`{name}` is a {} but a functor is needed", v.kind())),
        }
    }

    fn nat_trans(&self, name: &str) -> Result<crate::fincat::NatTransData, String> {
        match self.env.lookup(name, "nattrans")? {
            Value::NatTrans(t) => Ok(t.clone()),
            _ => unreachable!(),
        }
    }

    fn monad(&self, name: &str) -> Result<MonadData, String> {
        match self.env.lookup(name, "monad")? {
            Value::Monad(m) => Ok(m.clone()),
            _ => unreachable!(),
        }
    }

    fn comonad(&self, name: &str) -> Result<crate::monad::ComonadData, String> {
        match self.env.lookup(name, "comonad")? {
            Value::Comonad(w) => Ok(w.clone()),
            _ => unreachable!(),
        }
    }

    fn companion(&self, name: &str) -> Result<Companion, String> {
        match self.env.lookup(name, "any")? {
            Value::Functor(f) => Ok(Companion::Endofunctor(f.clone())),
            Value::Comonad(w) => Ok(Companion::Comonad(w.clone())),
            v => Err(format!(
                "`{name}` is a {} but a functor or comonad is needed",
                v.kind()
            )),
        }
    }

    fn dist_law(&self, name: &str) -> Result<DistLawData, String> {
        match self.env.lookup(name, "distlaw")? {
            Value::DistLaw(d) => Ok(d.clone()),
            _ => unreachable!(),
        }
    }

    fn pro(&self, name: &str) -> Result<crate::pro::ProPresentation, String> {
        match self.env.lookup(name, "pro")? {
            Value::Pro(p) => Ok(p.clone()),
            _ => unreachable!(),
        }
    }

    fn representation(&self, name: &str) -> Result<crate::pro::ProRepresentation, String> {
        match self.env.lookup(name, "representation")? {
            Value::Representation(r) => Ok(r.clone()),
            _ => unreachable!(),
        }
    }

    fn monad_map(&self, name: &str) -> Result<MonadMapAcross, String> {
        match self.env.lookup(name, "monadmap")? {
            Value::MonadMap(m) => Ok(m.clone()),
            _ => unreachable!(),
        }
    }

    fn pair_map(&self, name: &str) -> Result<crate::pro::PairMapData, String> {
        match self.env.lookup(name, "pairmap")? {
            Value::PairMap(p) => Ok(p.clone()),
            _ => unreachable!(),
        }
    }

    fn transformation(&self, name: &str) -> Result<TransValue, String> {
        match self.env.lookup(name, "transformation")? {
            Value::Transformation(t) => Ok(t.clone()),
            _ => unreachable!(),
        }
    }

    fn lift(&self, name: &str) -> Result<super::elab::LiftValue, String> {
        match self.env.lookup(name, "lift")? {
            Value::Lift(l) => Ok(l.clone()),
            _ => unreachable!(),
        }
    }

    fn run(&self, check: &Check) -> Result<Outcome, String> {
        let e = |err: CatError| err.to_string();
        match check {
            Check::ValidateCategory(n) => {
                Ok(Outcome::Report(validate_category(self.category(n)?.as_ref()).map_err(e)?))
            }
            Check::Compose { cat, g, f, expect } => {
                let c = self.category(cat)?;
                let got = compose(&c, *g, *f).map_err(e)?;
                if got == *expect {
                    pass()
                } else {
                    Ok(Outcome::Fail(format!("expected morphism {expect}, got {got}")))
                }
            }
            Check::ValidateFunctor(n) => {
                Ok(Outcome::Report(validate_functor(&self.functor(n)?).map_err(e)?))
            }
            Check::ValidateNatTrans(n) => Ok(Outcome::Report(
                validate_nat_trans(&self.nat_trans(n)?).map_err(e)?,
            )),
            Check::NatTransEqual { a, b, expect } => {
                let got = nat_trans_equal(&self.nat_trans(a)?, &self.nat_trans(b)?).map_err(e)?;
                if got == *expect {
                    pass()
                } else {
                    Ok(Outcome::Fail(format!("expected {expect}, got {got}")))
                }
            }
            Check::Interchange(n) => Ok(Outcome::Report(
                check_interchange(&self.category(n)?, self.bound).map_err(e)?,
            )),
            Check::PowerAdditivity { functor, bound } => Ok(Outcome::Report(
                check_power_additivity(&self.functor(functor)?, *bound).map_err(e)?,
            )),
            Check::CountFunctors { cat, expect } => {
                let got = enumerate_functors(&self.category(cat)?, self.bound)
                    .map_err(e)?
                    .len() as u64;
                expect_count("functors", got, *expect)
            }
            Check::CountNatTrans { f, g, expect } => {
                let got = enumerate_nat_trans(&self.functor(f)?, &self.functor(g)?, self.bound)
                    .map_err(e)?
                    .len() as u64;
                expect_count("transformations", got, *expect)
            }
            Check::CountMonads { cat, expect } => {
                let got = enumerate_monads(&self.category(cat)?, self.bound)
                    .map_err(e)?
                    .len() as u64;
                expect_count("monads", got, *expect)
            }
            Check::CountLaws {
                monad,
                companion,
                expect,
            } => {
                let got = enumerate_dist_laws(
                    &self.monad(monad)?,
                    &self.companion(companion)?,
                    self.bound,
                )
                .map_err(e)?
                .len() as u64;
                expect_count("laws", got, *expect)
            }
            Check::ValidateMonad(n) => {
                Ok(Outcome::Report(validate_monad(&self.monad(n)?).map_err(e)?))
            }
            Check::ValidateComonad(n) => Ok(Outcome::Report(
                crate::monad::validate_comonad(&self.comonad(n)?).map_err(e)?,
            )),
            Check::EmCount { monad, expect } => {
                let em = build_em(&self.monad(monad)?).map_err(e)?;
                expect_count("algebras", em.algebras.len() as u64, *expect)
            }
            Check::ValidateMonadMap { alpha, from, to } => Ok(Outcome::Report(
                validate_monad_map_same_base(
                    &self.nat_trans(alpha)?,
                    &self.monad(from)?,
                    &self.monad(to)?,
                )
                .map_err(e)?,
            )),
            Check::MonadMapRoundtrip { from, to } => {
                let t = self.monad(from)?;
                let t2 = self.monad(to)?;
                let em_t = build_em(&t).map_err(e)?;
                let em_t2 = build_em(&t2).map_err(e)?;
                Ok(Outcome::Report(
                    check_same_base_roundtrip(&t, &t2, &em_t, &em_t2, self.bound).map_err(e)?,
                ))
            }
            Check::ValidateMonadMapAcross(n) => Ok(Outcome::Report(
                validate_monad_map_across(&self.monad_map(n)?).map_err(e)?,
            )),
            Check::ComposeMonadMaps { outer, inner } => {
                let composite =
                    compose_monad_maps(&self.monad_map(outer)?, &self.monad_map(inner)?)
                        .map_err(e)?;
                Ok(Outcome::Report(
                    validate_monad_map_across(&composite).map_err(e)?,
                ))
            }
            Check::AcrossRoundtrip(n) => {
                let map = self.monad_map(n)?;
                let em_s = build_em(&map.s).map_err(e)?;
                let em_t = build_em(&map.t).map_err(e)?;
                let mut report = Report::ok();
                let h = em_lift_across(&map, &em_s, &em_t).map_err(e)?;
                let back = map_from_em_across(&map.k, &h, &em_s, &em_t).map_err(e)?;
                if back.alpha.components != map.alpha.components {
                    report.push("alpha-roundtrip", "recovered map differs".to_string());
                }
                for h in enumerate_em_functors_over(&em_t, &em_s, &map.k).map_err(e)? {
                    let alpha = map_from_em_across(&map.k, &h, &em_s, &em_t).map_err(e)?;
                    let lifted = em_lift_across(&alpha, &em_s, &em_t).map_err(e)?;
                    if lifted != h {
                        report.push("functor-roundtrip", format!("objects {:?}", h.object_map));
                    }
                    report.count("functors", 1);
                }
                Ok(Outcome::Report(report))
            }
            Check::ValidateMapTransformation(n) => match self.transformation(n)? {
                TransValue::Map(t) => Ok(Outcome::Report(
                    validate_map_transformation(&t).map_err(e)?,
                )),
                TransValue::Pair(t) => Ok(Outcome::Report(
                    validate_pair_transformation(&t).map_err(e)?,
                )),
            },
            Check::TransformationRoundtrip(n) => {
                let t = match self.transformation(n)? {
                    TransValue::Map(t) => t,
                    TransValue::Pair(p) => {
                        // roundtrip the underlying transformation of monad maps
                        crate::monad::MapTransformation {
                            from: MonadMapAcross {
                                t: p.from.t_side.law.monad.clone(),
                                s: p.from.s_side.law.monad.clone(),
                                k: p.from.k.clone(),
                                alpha: p.from.alpha.clone(),
                                zeta: Some(p.from.zeta.clone()),
                            },
                            to: MonadMapAcross {
                                t: p.to.t_side.law.monad.clone(),
                                s: p.to.s_side.law.monad.clone(),
                                k: p.to.k.clone(),
                                alpha: p.to.alpha.clone(),
                                zeta: Some(p.to.zeta.clone()),
                            },
                            sigma: p.sigma.clone(),
                        }
                    }
                };
                let em_s = build_em(&t.from.s).map_err(e)?;
                let em_t = build_em(&t.from.t).map_err(e)?;
                let lifted = lift_transformation(&t, &em_s, &em_t).map_err(e)?;
                let back =
                    project_transformation(&lifted, &t.from, &t.to, &em_s, &em_t).map_err(e)?;
                let mut report = Report::ok();
                if back.sigma.components != t.sigma.components {
                    report.push("projection-roundtrip", "recovered sigma differs".to_string());
                }
                report.count("algebras", em_s.algebras.len() as u64);
                Ok(Outcome::Report(report))
            }
            Check::EpsIdentity { from, to } => {
                let t = self.monad(from)?;
                let t2 = self.monad(to)?;
                let em_t = build_em(&t).map_err(e)?;
                let em_t2 = build_em(&t2).map_err(e)?;
                let mut report = Report::ok();
                for h in enumerate_em_functors_over_u(&em_t, &em_t2).map_err(e)? {
                    report.merge(check_eps_identity(&h, &em_t, &em_t2).map_err(e)?);
                    report.count("functors", 1);
                }
                Ok(Outcome::Report(report))
            }
            Check::ValidateDistLaw(n) => Ok(Outcome::Report(
                validate_dist_law(&self.dist_law(n)?).map_err(e)?,
            )),
            Check::LiftFromLaw(n) => {
                let d = self.dist_law(n)?;
                let em = build_em(&d.monad).map_err(e)?;
                let lifted = lift_from_law(&d, &em).map_err(e)?;
                let mut counts = BTreeMap::new();
                counts.insert("algebras".to_string(), em.algebras.len() as u64);
                counts.insert(
                    "comonad_lifted".to_string(),
                    lifted.comonad.is_some() as u64,
                );
                Ok(Outcome::Pass(counts))
            }
            Check::LawFromLift(n) => {
                let lift = self.lift(n)?;
                let em = build_em(&lift.monad).map_err(e)?;
                let d = law_from_lift(&lift.functor, &lift.companion, &em).map_err(e)?;
                Ok(Outcome::Report(validate_dist_law(&d).map_err(e)?))
            }
            Check::BeckRoundtrip { monad, companion } => Ok(Outcome::Report(
                check_beck_roundtrip(&self.monad(monad)?, &self.companion(companion)?, self.bound)
                    .map_err(e)?,
            )),
            Check::ValidateDistrMorphism { alpha, from, to } => {
                let m = DistrMorphism {
                    source: self.dist_law(from)?,
                    target: self.dist_law(to)?,
                    alpha: self.nat_trans(alpha)?,
                };
                Ok(Outcome::Report(crate::distlaw::validate_distr_morphism(&m).map_err(e)?))
            }
            Check::HalphaEquivariance { alpha, from, to } => {
                let m = DistrMorphism {
                    source: self.dist_law(from)?,
                    target: self.dist_law(to)?,
                    alpha: self.nat_trans(alpha)?,
                };
                Ok(Outcome::Report(check_halpha_equivariance(&m).map_err(e)?))
            }
            Check::MixedPentagonH { law, law2 } => {
                let d = self.dist_law(law)?;
                let d2 = self.dist_law(law2)?;
                let em_t = build_em(&d.monad).map_err(e)?;
                let em_t2 = build_em(&d2.monad).map_err(e)?;
                let gt = lift_from_law(&d, &em_t).map_err(e)?.endofunctor;
                let gt2 = lift_from_law(&d2, &em_t2).map_err(e)?.endofunctor;
                let mut report = Report::ok();
                for h in enumerate_em_functors_over_u(&em_t, &em_t2).map_err(e)? {
                    let lhs = compose_functors(&gt, &h).map_err(e)?;
                    let rhs = compose_functors(&h, &gt2).map_err(e)?;
                    if lhs != rhs {
                        continue; // H does not satisfy the equivariance hypothesis
                    }
                    report.merge(check_mixed_pentagon_h(&d, &d2, &h, &em_t, &em_t2).map_err(e)?);
                    report.count("instances", 1);
                }
                Ok(Outcome::Report(report))
            }
            Check::MixedPentagonAlpha { alpha, from, to } => {
                let m = DistrMorphism {
                    source: self.dist_law(from)?,
                    target: self.dist_law(to)?,
                    alpha: self.nat_trans(alpha)?,
                };
                Ok(Outcome::Report(check_mixed_pentagon_alpha(&m).map_err(e)?))
            }
            Check::VerticalAgreement { alpha, from, to } => Ok(Outcome::Report(
                check_vertical_agreement(
                    &self.nat_trans(alpha)?,
                    &self.monad(from)?,
                    &self.monad(to)?,
                )
                .map_err(e)?,
            )),
            Check::Contravariant(n) => Ok(Outcome::Report(
                check_contravariant_functoriality(&self.category(n)?, self.bound).map_err(e)?,
            )),
            Check::WordArity {
                pro,
                word,
                dom,
                cod,
            } => {
                let p = self.pro(pro)?;
                let got = word_arity(word, &p).map_err(e)?;
                if got == (*dom, *cod) {
                    pass()
                } else {
                    Ok(Outcome::Fail(format!(
                        "expected {dom} -> {cod}, got {} -> {}",
                        got.0, got.1
                    )))
                }
            }
            Check::EvalWord { rep, lhs, rhs } => {
                let r = self.representation(rep)?;
                let a = eval_word(lhs, &r).map_err(e)?;
                let b = eval_word(rhs, &r).map_err(e)?;
                if nat_trans_equal(&a, &b).map_err(e)? {
                    pass()
                } else {
                    Ok(Outcome::Fail("the two words evaluate differently".into()))
                }
            }
            Check::ValidateRepresentation(n) => Ok(Outcome::Report(
                validate_representation(&self.representation(n)?).map_err(e)?,
            )),
            Check::Decomposition { law, bound } => Ok(Outcome::Report(
                check_decomposition(&self.dist_law(law)?, *bound).map_err(e)?,
            )),
            Check::LnConsistency { law, bound } => Ok(Outcome::Report(
                check_ln_consistency(&self.dist_law(law)?, *bound).map_err(e)?,
            )),
            Check::Multigon {
                rep,
                gen,
                law,
                edges,
            } => {
                let r = self.representation(rep)?;
                let d = self.dist_law(law)?;
                if &r.t != d.companion.functor() {
                    return Err(
                        "the representation must act on the law's companion functor".to_string()
                    );
                }
                let m = generate_multigon(&r, gen, &d.monad.functor, &d.law).map_err(e)?;
                if m.edge_count() as u64 != *edges {
                    return Ok(Outcome::Fail(format!(
                        "expected {edges} edges, generated {}",
                        m.edge_count()
                    )));
                }
                Ok(Outcome::Report(check_multigon(&m).map_err(e)?))
            }
            Check::EquivariantRep { rep, law } => {
                let r = self.representation(rep)?;
                let d = self.dist_law(law)?;
                if r.t != d.monad.functor {
                    return Err(
                        "the representation must act on the law's monad carrier".to_string()
                    );
                }
                Ok(Outcome::Report(validate_equivariant_rep(&r, &d).map_err(e)?))
            }
            Check::ValidatePairMap(n) => Ok(Outcome::Report(
                validate_pair_map(&self.pair_map(n)?).map_err(e)?,
            )),
            Check::PowerLemma {
                outer,
                inner,
                bound,
            } => Ok(Outcome::Report(
                check_power_lemma(&self.pair_map(outer)?, &self.pair_map(inner)?, *bound)
                    .map_err(e)?,
            )),
            Check::ComposePairMaps { outer, inner } => {
                let composite =
                    compose_pair_maps(&self.pair_map(outer)?, &self.pair_map(inner)?)
                        .map_err(e)?;
                Ok(Outcome::Report(validate_pair_map(&composite).map_err(e)?))
            }
            Check::MixedHeptagon { pairmap, gen } => Ok(Outcome::Report(
                check_mixed_heptagon(&self.pair_map(pairmap)?, gen).map_err(e)?,
            )),
            Check::ValidatePairTransformation(n) => match self.transformation(n)? {
                TransValue::Pair(t) => Ok(Outcome::Report(
                    validate_pair_transformation(&t).map_err(e)?,
                )),
                TransValue::Map(_) => {
                    Err(format!("`{n}` is a transformation of monad maps, not of pair maps"))
                }
            },
            Check::Cube(n) => match self.transformation(n)? {
                TransValue::Pair(t) => Ok(Outcome::Report(check_cube(&t).map_err(e)?)),
                TransValue::Map(_) => {
                    Err(format!("`{n}` is a transformation of monad maps, not of pair maps"))
                }
            },
            Check::YangBaxter { law, comonad } => Ok(Outcome::Report(
                check_yang_baxter(&self.nat_trans(law)?, &self.comonad(comonad)?).map_err(e)?,
            )),
            Check::BraidedTower {
                law,
                comonad,
                bound,
            } => {
                let l = self.nat_trans(law)?;
                let w = self.comonad(comonad)?;
                let mut report = Report::ok();
                for n in 1..=*bound {
                    let tower: ComonadLaw = braided_tower(&l, &w, n).map_err(e)?;
                    report.merge(validate_comonad_law(&tower).map_err(e)?);
                    report.count("towers", 1);
                }
                Ok(Outcome::Report(report))
            }
            Check::BuiltinPros => {
                let (monoid, counital) = crate::pro::builtin_pros();
                let mut report = Report::ok();
                if monoid.generators.len() != 2 || monoid.relations.len() != 3 {
                    report.push("monoid-shape", "expected 2 generators and 3 relations");
                }
                if counital.generators.len() != 2 || counital.relations.len() != 3 {
                    report.push(
                        "counital-shape",
                        "expected 2 generators and 3 relations",
                    );
                }
                // cross-validation against the monad and comonad validators
                // on the terminal category
                let one = std::sync::Arc::new(crate::fincat::FinCategory::chain(1));
                let m = MonadData::identity(&one);
                let rep = rep_from_monad(&m);
                if !validate_representation(&rep).map_err(e)?.ok {
                    report.push("monoid-roundtrip", "identity monad representation");
                }
                if monad_from_rep(&rep).map_err(e)? != m {
                    report.push("monoid-roundtrip", "monad does not survive the round trip");
                }
                let w = crate::monad::ComonadData::interior(&one, &[0]).map_err(e)?;
                let wrep = rep_from_comonad(&w);
                if !validate_representation(&wrep).map_err(e)?.ok {
                    report.push("counital-roundtrip", "identity comonad representation");
                }
                if comonad_from_rep(&wrep).map_err(e)? != w {
                    report.push(
                        "counital-roundtrip",
                        "comonad does not survive the round trip",
                    );
                }
                Ok(Outcome::Report(report))
            }
        }
    }
}

/// Enumerates all lifts for a law's companion, used by the CLI.
pub fn lifts_for_law(d: &DistLawData) -> Result<Vec<FunctorData>, CatError> {
    let em = build_em(&d.monad)?;
    enumerate_lifts(&d.companion, &em)
}

/// Runs every check of the document against an elaborated environment.
pub fn run_checks(doc: &Document, env: &Env, bound: usize) -> RunResult {
    let runner = Runner { env, bound };
    let mut checks = Vec::new();
    let mut index = 0usize;
    for (item, &(line, col)) in doc.items.iter().zip(&doc.spans) {
        let check = match item {
            Item::Check(c) => c,
            _ => continue,
        };
        index += 1;
        let name = format!("#{index} {}", check.op());
        let result = match runner.run(check) {
            Ok(Outcome::Report(report)) => {
                let status = if report.ok { Status::Pass } else { Status::Fail };
                CheckResult {
                    name,
                    op: check.op().to_string(),
                    status,
                    witnesses: report
                        .violations
                        .iter()
                        .map(|v| format!("{}: {}", v.law, v.witness))
                        .collect(),
                    counts: report.counts,
                    line,
                    col,
                }
            }
            Ok(Outcome::Pass(counts)) => CheckResult {
                name,
                op: check.op().to_string(),
                status: Status::Pass,
                witnesses: Vec::new(),
                counts,
                line,
                col,
            },
            Ok(Outcome::Fail(message)) => CheckResult {
                name,
                op: check.op().to_string(),
                status: Status::Fail,
                witnesses: vec![message],
                counts: BTreeMap::new(),
                line,
                col,
            },
            Err(message) => CheckResult {
                name,
                op: check.op().to_string(),
                status: Status::Error,
                witnesses: vec![message],
                counts: BTreeMap::new(),
                line,
                col,
            },
        };
        checks.push(result);
    }
    RunResult {
        checks,
        diagnostics: env
            .diagnostics
            .iter()
            .map(|d: &Diagnostic| (d.line, d.col, d.message.clone()))
            .collect(),
    }
}
