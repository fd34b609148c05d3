//! Elaboration: turns declarations into validated library values. A
//! declaration that fails validation poisons its name; later declarations
//! and checks that mention the name are aborted, everything else keeps
//! running.

use std::collections::BTreeMap;
use std::sync::Arc;

use super::ast::*;
use crate::distlaw::{validate_dist_law, Companion, DistLawData};
use crate::error::CatError;
use crate::fincat::{
    compose_functors, forced_nat_trans, functor_from_objects, functor_power, hcompose,
    validate_category, validate_functor, validate_nat_trans, vcompose, whisker_left,
    whisker_right, FinCategory, FunctorData, Mor, NatTransData,
};
use crate::monad::{
    validate_comonad, validate_map_transformation, validate_monad, validate_monad_map_across,
    ComonadData, MapTransformation, MonadData, MonadMapAcross,
};
use crate::oracle::enumerate_nat_trans;
use crate::pro::{
    counital_pro, monoid_pro, rep_from_comonad, rep_from_monad,
    validate_pair_map, validate_pair_transformation, validate_representation, PairMapData,
    PairTransformation, ProGenerator, ProPairData, ProPresentation, ProRepresentation,
};
use crate::report::Report;

#[derive(Clone, Debug)]
pub enum TransValue {
    Map(MapTransformation),
    Pair(PairTransformation),
}

#[derive(Clone, Debug)]
pub struct LiftValue {
    pub functor: FunctorData,
    pub companion: Companion,
    pub monad: MonadData,
}

#[derive(Clone, Debug)]
pub enum Value {
    Category(Arc<FinCategory>),
    Functor(FunctorData),
    NatTrans(NatTransData),
    Monad(MonadData),
    Comonad(ComonadData),
    DistLaw(DistLawData),
    Lift(LiftValue),
    MonadMap(MonadMapAcross),
    Pro(ProPresentation),
    Representation(ProRepresentation),
    PairMap(PairMapData),
    Transformation(TransValue),
}

impl Value {
    pub fn kind(&self) -> &'static str {
        match self {
            Value::Category(_) => "category",
            Value::Functor(_) => "functor",
            Value::NatTrans(_) => "nattrans",
            Value::Monad(_) => "monad",
            Value::Comonad(_) => "comonad",
            Value::DistLaw(_) => "distlaw",
            Value::Lift(_) => "lift",
            Value::MonadMap(_) => "monadmap",
            Value::Pro(_) => "pro",
            Value::Representation(_) => "representation",
            Value::PairMap(_) => "pairmap",
            Value::Transformation(_) => "transformation",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Diagnostic {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl std::fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.col, self.message)
    }
}

enum Entry {
    Ok(Value),
    /// name exists but its declaration failed; the string names the root cause
    Poisoned(String),
}

pub struct Env {
    entries: BTreeMap<String, Entry>,
    pub diagnostics: Vec<Diagnostic>,
}

/// Internal error during elaboration of one declaration: either a real
/// problem (reported) or a dependency on an already-failed name (aborted
/// silently).
enum ElabFail {
    Report(String),
    Dependency(String),
}

impl From<CatError> for ElabFail {
    fn from(e: CatError) -> Self {
        ElabFail::Report(e.to_string())
    }
}

type EResult<T> = Result<T, ElabFail>;

impl Env {
    pub fn names_of_kind(&self, kind: &str) -> Vec<String> {
        self.entries
            .iter()
            .filter_map(|(name, e)| match e {
                Entry::Ok(v) if v.kind() == kind => Some(name.clone()),
                _ => None,
            })
            .collect()
    }

    /// Looks a name up for a check: unresolved and poisoned names both
    /// surface as errors with candidate listings.
    pub fn lookup(&self, name: &str, kind: &str) -> Result<&Value, String> {
        match self.entries.get(name) {
            Some(Entry::Ok(v)) => {
                if v.kind() == kind || kind == "any" {
                    Ok(v)
                } else {
                    Err(format!(
                        "`{name}` is a {} but a {kind} is needed here",
                        v.kind()
                    ))
                }
            }
            Some(Entry::Poisoned(root)) => Err(format!(
                "`{name}` is unavailable: its declaration failed ({root})"
            )),
            None => {
                let mut candidates = self.names_of_kind(kind);
                candidates.sort();
                if candidates.is_empty() {
                    Err(format!("unresolved name `{name}` (no {kind} declared)"))
                } else {
                    Err(format!(
                        "unresolved name `{name}` (declared {kind}s: {})",
                        candidates.join(", ")
                    ))
                }
            }
        }
    }

    fn get(&self, name: &str, kind: &str) -> EResult<&Value> {
        match self.entries.get(name) {
            Some(Entry::Ok(v)) => {
                if v.kind() == kind || kind == "any" {
                    Ok(v)
                } else {
                    Err(ElabFail::Report(format!(
                        "`{name}` is a {} but a {kind} is needed here",
                        v.kind()
                    )))
                }
            }
            Some(Entry::Poisoned(root)) => Err(ElabFail::Dependency(root.clone())),
            None => {
                let mut candidates = self.names_of_kind(kind);
                candidates.sort();
                Err(ElabFail::Report(if candidates.is_empty() {
                    format!("unresolved name `{name}` (no {kind} declared)")
                } else {
                    format!(
                        "unresolved name `{name}` (declared {kind}s: {})",
                        candidates.join(", ")
                    )
                }))
            }
        }
    }

    fn category(&self, name: &str) -> EResult<Arc<FinCategory>> {
        match self.get(name, "category")? {
            Value::Category(c) => Ok(c.clone()),
            _ => unreachable!(),
        }
    }

    fn functor(&self, name: &str) -> EResult<FunctorData> {
        // monads, comonads and representations expose their carrier functor
        match self.entries.get(name) {
            Some(Entry::Ok(Value::Functor(f))) => Ok(f.clone()),
            Some(Entry::Ok(Value::Monad(m))) => Ok(m.functor.clone()),
            Some(Entry::Ok(Value::Comonad(w))) => Ok(w.functor.clone()),
            Some(Entry::Ok(Value::Representation(r))) => Ok(r.t.clone()),
            _ => match self.get(name, "functor")? {
                Value::Functor(f) => Ok(f.clone()),
                _ => unreachable!(),
            },
        }
    }

    fn nat_trans(&self, name: &str) -> EResult<NatTransData> {
        match self.get(name, "nattrans")? {
            Value::NatTrans(t) => Ok(t.clone()),
            _ => unreachable!(),
        }
    }

    fn monad(&self, name: &str) -> EResult<MonadData> {
        match self.get(name, "monad")? {
            Value::Monad(m) => Ok(m.clone()),
            _ => unreachable!(),
        }
    }

    fn comonad(&self, name: &str) -> EResult<ComonadData> {
        match self.get(name, "comonad")? {
            Value::Comonad(w) => Ok(w.clone()),
            _ => unreachable!(),
        }
    }

    fn companion(&self, name: &str) -> EResult<Companion> {
        match self.entries.get(name) {
            Some(Entry::Ok(Value::Comonad(w))) => Ok(Companion::Comonad(w.clone())),
            Some(Entry::Ok(Value::Functor(f))) => Ok(Companion::Endofunctor(f.clone())),
            Some(Entry::Ok(v)) => Err(ElabFail::Report(format!(
                "`{name}` is a {} but a functor or comonad is needed here",
                v.kind()
            ))),
            Some(Entry::Poisoned(root)) => Err(ElabFail::Dependency(root.clone())),
            None => {
                let mut candidates = self.names_of_kind("functor");
                candidates.extend(self.names_of_kind("comonad"));
                candidates.sort();
                Err(ElabFail::Report(format!(
                    "unresolved name `{name}` (declared functors and comonads: {})",
                    candidates.join(", ")
                )))
            }
        }
    }

    fn pro(&self, name: &str) -> EResult<ProPresentation> {
        match self.get(name, "pro")? {
            Value::Pro(p) => Ok(p.clone()),
            _ => unreachable!(),
        }
    }

    fn representation(&self, name: &str) -> EResult<ProRepresentation> {
        match self.get(name, "representation")? {
            Value::Representation(r) => Ok(r.clone()),
            _ => unreachable!(),
        }
    }

    fn dist_law(&self, name: &str) -> EResult<DistLawData> {
        match self.get(name, "distlaw")? {
            Value::DistLaw(d) => Ok(d.clone()),
            _ => unreachable!(),
        }
    }
}

fn need_ok(report: Report, what: &str) -> EResult<()> {
    if report.ok {
        Ok(())
    } else {
        let first = report
            .violations
            .first()
            .map(|v| format!("{} at {}", v.law, v.witness))
            .unwrap_or_default();
        Err(ElabFail::Report(format!("{what} fails validation: {first}")))
    }
}

fn elab_category(body: &CategoryBody) -> EResult<Arc<FinCategory>> {
    let cat = match body {
        CategoryBody::PosetChain(n) => FinCategory::chain(*n),
        CategoryBody::PosetTable(rows) => {
            let leq: Vec<Vec<bool>> = rows
                .iter()
                .map(|r| r.iter().map(|&v| v == 1).collect())
                .collect();
            FinCategory::from_poset(&leq)?
        }
        CategoryBody::MonoidZ2 => FinCategory::z2(),
        CategoryBody::MonoidTable(table) => FinCategory::from_monoid(table, 0)?,
        CategoryBody::Explicit {
            objects,
            morphisms,
            identity,
            compose,
        } => {
            let m = morphisms.len();
            let mut table = vec![None; m * m];
            if compose.len() != m {
                return Err(ElabFail::Report(format!(
                    "compose table has {} rows, expected {m}",
                    compose.len()
                )));
            }
            for (g, row) in compose.iter().enumerate() {
                if row.len() != m {
                    return Err(ElabFail::Report(format!(
                        "compose row {g} has {} entries, expected {m}",
                        row.len()
                    )));
                }
                for (f, &v) in row.iter().enumerate() {
                    if v >= 0 {
                        table[g * m + f] = Some(v as usize);
                    }
                }
            }
            FinCategory {
                objects: *objects,
                morphisms: morphisms.iter().map(|&(src, tgt)| Mor { src, tgt }).collect(),
                identity: identity.clone(),
                compose: table,
            }
        }
    };
    need_ok(validate_category(&cat)?, "category")?;
    Ok(Arc::new(cat))
}

fn elab_functor(env: &Env, body: &FunctorBody) -> EResult<FunctorData> {
    let f = match body {
        FunctorBody::Tables {
            source,
            target,
            objects,
            morphisms,
        } => {
            let src = env.category(source)?;
            let tgt = env.category(target)?;
            match morphisms {
                None => functor_from_objects(&src, &tgt, objects.clone())?,
                Some(m) => FunctorData {
                    source: src,
                    target: tgt,
                    object_map: objects.clone(),
                    morphism_map: m.clone(),
                },
            }
        }
        FunctorBody::Identity(c) => FunctorData::identity(&env.category(c)?),
        FunctorBody::Compose(f, g) => compose_functors(&env.functor(f)?, &env.functor(g)?)?,
        FunctorBody::Power(t, n) => functor_power(&env.functor(t)?, *n)?,
    };
    need_ok(validate_functor(&f)?, "functor")?;
    Ok(f)
}

fn elab_nat_trans(env: &Env, body: &NatTransBody) -> EResult<NatTransData> {
    let t = match body {
        NatTransBody::Components {
            source,
            target,
            components,
        } => NatTransData {
            source: env.functor(source)?,
            target: env.functor(target)?,
            components: components.clone(),
        },
        NatTransBody::Auto { source, target } => {
            let f = env.functor(source)?;
            let g = env.functor(target)?;
            match forced_nat_trans(&f, &g) {
                Ok(t) => t,
                // fall back to the unique valid candidate when hom-sets
                // are not singletons
                Err(_) => {
                    let all = enumerate_nat_trans(&f, &g, crate::oracle::DEFAULT_BOUND)?;
                    match all.len() {
                        1 => all.into_iter().next().unwrap(),
                        n => {
                            return Err(ElabFail::Report(format!(
                                "auto transformation: {n} valid candidates exist"
                            )))
                        }
                    }
                }
            }
        }
        NatTransBody::Id(f) => NatTransData::identity(&env.functor(f)?),
        NatTransBody::VCompose(a, b) => vcompose(&env.nat_trans(a)?, &env.nat_trans(b)?)?,
        NatTransBody::HCompose(a, b) => hcompose(&env.nat_trans(a)?, &env.nat_trans(b)?)?,
        NatTransBody::WhiskerLeft(f, a) => whisker_left(&env.functor(f)?, &env.nat_trans(a)?)?,
        NatTransBody::WhiskerRight(a, f) => whisker_right(&env.nat_trans(a)?, &env.functor(f)?)?,
    };
    need_ok(validate_nat_trans(&t)?, "transformation")?;
    Ok(t)
}

fn elab_monad(env: &Env, body: &MonadBody) -> EResult<MonadData> {
    let m = match body {
        MonadBody::Closure { cat, image } => {
            let c = env.category(cat)?;
            if image.len() != c.objects {
                return Err(ElabFail::Report(format!(
                    "closure table has {} entries but the category has {} objects",
                    image.len(),
                    c.objects
                )));
            }
            MonadData::closure(&c, image)?
        }
        MonadBody::IdentityOn { cat } => MonadData::identity(&env.category(cat)?),
        MonadBody::Parts { functor, mu, eta } => MonadData {
            functor: env.functor(functor)?,
            mu: env.nat_trans(mu)?,
            eta: env.nat_trans(eta)?,
        },
    };
    need_ok(validate_monad(&m)?, "monad")?;
    Ok(m)
}

fn elab_comonad(env: &Env, body: &ComonadBody) -> EResult<ComonadData> {
    let w = match body {
        ComonadBody::Interior { cat, image } => {
            let c = env.category(cat)?;
            if image.len() != c.objects {
                return Err(ElabFail::Report(format!(
                    "interior table has {} entries but the category has {} objects",
                    image.len(),
                    c.objects
                )));
            }
            ComonadData::interior(&c, image)?
        }
        ComonadBody::Parts {
            functor,
            delta,
            epsilon,
        } => ComonadData {
            functor: env.functor(functor)?,
            delta: env.nat_trans(delta)?,
            epsilon: env.nat_trans(epsilon)?,
        },
    };
    need_ok(validate_comonad(&w)?, "comonad")?;
    Ok(w)
}

fn elab_dist_law(
    env: &Env,
    monad: &str,
    companion: &str,
    law: &Option<String>,
) -> EResult<DistLawData> {
    let m = env.monad(monad)?;
    let comp = env.companion(companion)?;
    let l = match law {
        Some(name) => env.nat_trans(name)?,
        None => {
            // synthesize: the unique valid candidate, or report absence
            let tg = compose_functors(&m.functor, comp.functor())?;
            let gt = compose_functors(comp.functor(), &m.functor)?;
            let mut found = Vec::new();
            for cand in enumerate_nat_trans(&tg, &gt, crate::oracle::DEFAULT_BOUND)? {
                let d = DistLawData {
                    monad: m.clone(),
                    companion: comp.clone(),
                    law: cand,
                };
                if validate_dist_law(&d)?.ok {
                    found.push(d.law);
                }
            }
            match found.len() {
                1 => found.into_iter().next().unwrap(),
                0 => {
                    return Err(ElabFail::Report(
                        "no distributive law exists for this monad and companion".into(),
                    ))
                }
                n => {
                    return Err(ElabFail::Report(format!(
                        "{n} distributive laws exist; name one explicitly with `with`"
                    )))
                }
            }
        }
    };
    let d = DistLawData {
        monad: m,
        companion: comp,
        law: l,
    };
    need_ok(validate_dist_law(&d)?, "distributive law")?;
    Ok(d)
}

fn elab_lift(env: &Env, companion: &str, monad: &str, objects: &[usize]) -> EResult<LiftValue> {
    let m = env.monad(monad)?;
    let comp = env.companion(companion)?;
    let em = crate::monad::build_em(&m)?;
    if objects.len() != em.algebras.len() {
        return Err(ElabFail::Report(format!(
            "lift assigns {} algebras but the EM category has {}",
            objects.len(),
            em.algebras.len()
        )));
    }
    let g = comp.functor();
    let morphism_map: Vec<usize> = em
        .em_morphisms
        .iter()
        .enumerate()
        .map(|(i, f)| {
            if f.src >= objects.len() || f.tgt >= objects.len() {
                return Err(ElabFail::Report(format!("em morphism {i} out of range")));
            }
            em.em_morphism_index(
                objects[f.src],
                objects[f.tgt],
                g.morphism_map[f.underlying],
            )
            .ok_or_else(|| {
                ElabFail::Report(format!(
                    "no algebra morphism over G(f) for em morphism {i}; not a lift"
                ))
            })
        })
        .collect::<Result<_, _>>()?;
    let functor = FunctorData {
        source: em.em.clone(),
        target: em.em.clone(),
        object_map: objects.to_vec(),
        morphism_map,
    };
    need_ok(validate_functor(&functor)?, "lift")?;
    let ug = compose_functors(&em.forgetful, &functor)?;
    let gu = compose_functors(g, &em.forgetful)?;
    if ug != gu {
        return Err(ElabFail::Report("U∘G̃ differs from G∘U: not a lift".into()));
    }
    Ok(LiftValue {
        functor,
        companion: comp,
        monad: m,
    })
}

fn elab_monad_map(env: &Env, k: &str, alpha: &str, t: &str, s: &str) -> EResult<MonadMapAcross> {
    let map = MonadMapAcross {
        t: env.monad(t)?,
        s: env.monad(s)?,
        k: env.functor(k)?,
        alpha: env.nat_trans(alpha)?,
        zeta: None,
    };
    need_ok(validate_monad_map_across(&map)?, "monad map")?;
    Ok(map)
}

fn elab_pro(body: &ProBody) -> EResult<ProPresentation> {
    let p = match body {
        ProBody::Monoid => monoid_pro(),
        ProBody::Counital => counital_pro(),
        ProBody::Custom {
            generators,
            relations,
        } => ProPresentation {
            name: "custom".into(),
            generators: generators
                .iter()
                .map(|(name, dom, cod)| ProGenerator {
                    name: name.clone(),
                    dom: *dom,
                    cod: *cod,
                })
                .collect(),
            relations: relations.clone(),
        },
    };
    need_ok(p.validate()?, "pro presentation")?;
    Ok(p)
}

fn elab_representation(
    env: &Env,
    pro_name: &str,
    body: &RepBody,
) -> EResult<ProRepresentation> {
    let pro = env.pro(pro_name)?;
    let rep = match body {
        RepBody::FromMonad(m) => {
            if pro.name != "monoid" {
                return Err(ElabFail::Report(format!(
                    "monad shorthand needs the monoid pro, `{pro_name}` is `{}`",
                    pro.name
                )));
            }
            rep_from_monad(&env.monad(m)?)
        }
        RepBody::FromComonad(w) => {
            if pro.name != "counital" {
                return Err(ElabFail::Report(format!(
                    "comonad shorthand needs the counital pro, `{pro_name}` is `{}`",
                    pro.name
                )));
            }
            rep_from_comonad(&env.comonad(w)?)
        }
        RepBody::Explicit { functor, images } => {
            let t = env.functor(functor)?;
            let mut table = BTreeMap::new();
            for (g, nt) in images {
                table.insert(g.clone(), env.nat_trans(nt)?);
            }
            ProRepresentation {
                pro,
                t,
                images: table,
            }
        }
    };
    need_ok(validate_representation(&rep)?, "representation")?;
    Ok(rep)
}

#[allow(clippy::too_many_arguments)]
fn elab_pair_map(
    env: &Env,
    k: &str,
    zeta: &str,
    alpha: &str,
    t_rep: &str,
    t_law: &str,
    s_rep: &str,
    s_law: &str,
) -> EResult<PairMapData> {
    let p = PairMapData {
        k: env.functor(k)?,
        zeta: env.nat_trans(zeta)?,
        alpha: env.nat_trans(alpha)?,
        t_side: ProPairData {
            rep: env.representation(t_rep)?,
            law: env.dist_law(t_law)?,
        },
        s_side: ProPairData {
            rep: env.representation(s_rep)?,
            law: env.dist_law(s_law)?,
        },
    };
    need_ok(validate_pair_map(&p)?, "pair map")?;
    Ok(p)
}

fn elab_transformation(env: &Env, from: &str, to: &str, sigma: &str) -> EResult<TransValue> {
    let s = env.nat_trans(sigma)?;
    // the kind of the endpoints decides whether this is a transformation
    // of monad maps or of pair maps
    match (env.entries.get(from), env.entries.get(to)) {
        (Some(Entry::Ok(Value::MonadMap(a))), Some(Entry::Ok(Value::MonadMap(b)))) => {
            let t = MapTransformation {
                from: a.clone(),
                to: b.clone(),
                sigma: s,
            };
            need_ok(validate_map_transformation(&t)?, "map transformation")?;
            Ok(TransValue::Map(t))
        }
        (Some(Entry::Ok(Value::PairMap(a))), Some(Entry::Ok(Value::PairMap(b)))) => {
            let t = PairTransformation {
                from: a.clone(),
                to: b.clone(),
                sigma: s,
            };
            need_ok(validate_pair_transformation(&t)?, "pair transformation")?;
            Ok(TransValue::Pair(t))
        }
        (Some(Entry::Poisoned(root)), _) | (_, Some(Entry::Poisoned(root))) => {
            Err(ElabFail::Dependency(root.clone()))
        }
        _ => {
            env.get(from, "pairmap").map(|_| ())?;
            Err(ElabFail::Report(format!(
                "transformation endpoints `{from}` and `{to}` must both be monad maps or both pair maps"
            )))
        }
    }
}

/// Elaborates every declaration in order; failures are recorded as
/// positioned diagnostics and poison their names.
pub fn elaborate(doc: &Document) -> Env {
    let mut env = Env {
        entries: BTreeMap::new(),
        diagnostics: Vec::new(),
    };
    for (item, &(line, col)) in doc.items.iter().zip(&doc.spans) {
        let decl = match item {
            Item::Decl(d) => d,
            _ => continue,
        };
        let name = decl.name().to_string();
        if env.entries.contains_key(&name) {
            env.diagnostics.push(Diagnostic {
                line,
                col,
                message: format!("duplicate declaration of `{name}`"),
            });
            continue;
        }
        let result: EResult<Value> = match decl {
            Decl::Category { body, .. } => elab_category(body).map(Value::Category),
            Decl::Functor { body, .. } => elab_functor(&env, body).map(Value::Functor),
            Decl::NatTrans { body, .. } => elab_nat_trans(&env, body).map(Value::NatTrans),
            Decl::Monad { body, .. } => elab_monad(&env, body).map(Value::Monad),
            Decl::Comonad { body, .. } => elab_comonad(&env, body).map(Value::Comonad),
            Decl::DistLaw {
                monad,
                companion,
                law,
                ..
            } => elab_dist_law(&env, monad, companion, law).map(Value::DistLaw),
            Decl::Lift {
                companion,
                monad,
                objects,
                ..
            } => elab_lift(&env, companion, monad, objects).map(Value::Lift),
            Decl::MonadMap { k, alpha, t, s, .. } => {
                elab_monad_map(&env, k, alpha, t, s).map(Value::MonadMap)
            }
            Decl::Pro { body, .. } => elab_pro(body).map(Value::Pro),
            Decl::Representation { pro, body, .. } => {
                elab_representation(&env, pro, body).map(Value::Representation)
            }
            Decl::PairMap {
                k,
                zeta,
                alpha,
                t_rep,
                t_law,
                s_rep,
                s_law,
                ..
            } => elab_pair_map(&env, k, zeta, alpha, t_rep, t_law, s_rep, s_law)
                .map(Value::PairMap),
            Decl::Transformation {
                from, to, sigma, ..
            } => elab_transformation(&env, from, to, sigma).map(Value::Transformation),
        };
        match result {
            Ok(v) => {
                env.entries.insert(name, Entry::Ok(v));
            }
            Err(ElabFail::Report(message)) => {
                env.diagnostics.push(Diagnostic {
                    line,
                    col,
                    message: format!("{name}: {message}"),
                });
                env.entries.insert(name.clone(), Entry::Poisoned(name));
            }
            Err(ElabFail::Dependency(root)) => {
                // aborted because an earlier declaration already failed;
                // no new diagnostic, the root cause is already reported
                env.entries.insert(name, Entry::Poisoned(root));
            }
        }
    }
    env
}
