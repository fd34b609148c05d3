//! PRO presentations and their strict representations in endofunctor
//! categories, iterated distributive laws, multigon generation and
//! checking, maps of pairs with their heptagons and cubes, and strong
//! braidings with their law towers.
//!
//! A word in the free PRO is a tree over identities, generators,
//! sequential composition and parallel sum. Evaluation sends `+` to the
//! horizontal composite of the two images (left factor outermost); the
//! interchange law makes that order-independent and the evaluator asserts
//! it on every sum.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::distlaw::DistLawData;
use crate::error::CatError;
use crate::fincat::{
    compose_functors, functor_power, hcompose, nat_trans_equal, validate_nat_trans, vcompose,
    whisker_left, whisker_right, FunctorData, NatTransData,
};
use crate::monad::{validate_comonad, ComonadData, MonadData};
use crate::report::Report;

/// A generator `name : dom → cod` of a PRO.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProGenerator {
    pub name: String,
    pub dom: usize,
    pub cod: usize,
}

/// A word over the generators of a PRO.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ProWord {
    /// `id_n : n → n`
    Id(usize),
    Gen(String),
    /// Sequential composition `f ∘ g` (apply `g` first).
    Seq(Box<ProWord>, Box<ProWord>),
    /// Parallel sum `f + g` (`f` on the left).
    Par(Box<ProWord>, Box<ProWord>),
}

impl ProWord {
    pub fn gen(name: &str) -> Self {
        ProWord::Gen(name.to_string())
    }

    pub fn seq(f: ProWord, g: ProWord) -> Self {
        ProWord::Seq(Box::new(f), Box::new(g))
    }

    pub fn par(f: ProWord, g: ProWord) -> Self {
        ProWord::Par(Box::new(f), Box::new(g))
    }
}

/// A PRO by generators and relations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProPresentation {
    pub name: String,
    pub generators: Vec<ProGenerator>,
    pub relations: Vec<(ProWord, ProWord)>,
}

impl ProPresentation {
    pub fn generator(&self, name: &str) -> Option<&ProGenerator> {
        self.generators.iter().find(|g| g.name == name)
    }

    /// Checks that every relation is well-typed with equal arities on both
    /// sides.
    pub fn validate(&self) -> Result<Report, CatError> {
        let mut report = Report::ok();
        for (i, (lhs, rhs)) in self.relations.iter().enumerate() {
            let a = word_arity(lhs, self)?;
            let b = word_arity(rhs, self)?;
            if a != b {
                report.push("relation-arity", format!("relation {i}: {a:?} vs {b:?}"));
            }
        }
        Ok(report)
    }
}

/// The PRO for monoids: `mu : 2 → 1`, `eta : 0 → 1` with associativity
/// and the two unit relations. Its representations are exactly monads.
pub fn monoid_pro() -> ProPresentation {
    let mu = ProWord::gen("mu");
    let eta = ProWord::gen("eta");
    let id1 = ProWord::Id(1);
    ProPresentation {
        name: "monoid".into(),
        generators: vec![
            ProGenerator {
                name: "mu".into(),
                dom: 2,
                cod: 1,
            },
            ProGenerator {
                name: "eta".into(),
                dom: 0,
                cod: 1,
            },
        ],
        relations: vec![
            (
                ProWord::seq(mu.clone(), ProWord::par(mu.clone(), id1.clone())),
                ProWord::seq(mu.clone(), ProWord::par(id1.clone(), mu.clone())),
            ),
            (
                ProWord::seq(mu.clone(), ProWord::par(eta.clone(), id1.clone())),
                id1.clone(),
            ),
            (ProWord::seq(mu, ProWord::par(id1.clone(), eta)), id1),
        ],
    }
}

/// The PRO for counital coalgebras: `delta : 1 → 2`, `eps : 1 → 0` with
/// coassociativity and the two counit relations. Its representations are
/// exactly comonads.
pub fn counital_pro() -> ProPresentation {
    let delta = ProWord::gen("delta");
    let eps = ProWord::gen("eps");
    let id1 = ProWord::Id(1);
    ProPresentation {
        name: "counital".into(),
        generators: vec![
            ProGenerator {
                name: "delta".into(),
                dom: 1,
                cod: 2,
            },
            ProGenerator {
                name: "eps".into(),
                dom: 1,
                cod: 0,
            },
        ],
        relations: vec![
            (
                ProWord::seq(ProWord::par(delta.clone(), id1.clone()), delta.clone()),
                ProWord::seq(ProWord::par(id1.clone(), delta.clone()), delta.clone()),
            ),
            (
                ProWord::seq(ProWord::par(eps.clone(), id1.clone()), delta.clone()),
                id1.clone(),
            ),
            (ProWord::seq(ProWord::par(id1.clone(), eps), delta), id1),
        ],
    }
}

/// Both built-in PROs.
pub fn builtin_pros() -> (ProPresentation, ProPresentation) {
    (monoid_pro(), counital_pro())
}

/// Arity of a word, or a typing failure locating the ill-typed subterm.
pub fn word_arity(w: &ProWord, p: &ProPresentation) -> Result<(usize, usize), CatError> {
    match w {
        ProWord::Id(n) => Ok((*n, *n)),
        ProWord::Gen(name) => {
            let g = p
                .generator(name)
                .ok_or_else(|| CatError::UnknownGenerator(name.clone()))?;
            Ok((g.dom, g.cod))
        }
        ProWord::Seq(f, g) => {
            let (gn, gm) = word_arity(g, p)?;
            let (fn_, fm) = word_arity(f, p)?;
            if gm != fn_ {
                return Err(CatError::Arity(format!(
                    "composition mismatch: inner word has codomain {gm}, outer expects {fn_}"
                )));
            }
            Ok((gn, fm))
        }
        ProWord::Par(f, g) => {
            let (fn_, fm) = word_arity(f, p)?;
            let (gn, gm) = word_arity(g, p)?;
            Ok((fn_ + gn, fm + gm))
        }
    }
}

/// A strict representation of a PRO in an endofunctor category: the
/// generating endofunctor together with an image transformation
/// `T^n ⇒ T^m` per generator.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ProRepresentation {
    pub pro: ProPresentation,
    pub t: FunctorData,
    pub images: BTreeMap<String, NatTransData>,
}

impl ProRepresentation {
    pub fn image(&self, name: &str) -> Result<&NatTransData, CatError> {
        self.images
            .get(name)
            .ok_or_else(|| CatError::UnknownGenerator(name.to_string()))
    }
}

/// Evaluates a word under a representation. Identities land on identities
/// of powers, `∘` on vertical composition, `+` on the horizontal
/// composite of the two images.
pub fn eval_word(w: &ProWord, r: &ProRepresentation) -> Result<NatTransData, CatError> {
    match w {
        ProWord::Id(n) => Ok(NatTransData::identity(&functor_power(&r.t, *n)?)),
        ProWord::Gen(name) => Ok(r.image(name)?.clone()),
        ProWord::Seq(f, g) => {
            word_arity(w, &r.pro)?;
            vcompose(&eval_word(f, r)?, &eval_word(g, r)?)
        }
        // hcompose already asserts both whiskering orders agree
        ProWord::Par(f, g) => hcompose(&eval_word(f, r)?, &eval_word(g, r)?),
    }
}

/// Checks generator image arities and all relations of the presentation.
pub fn validate_representation(r: &ProRepresentation) -> Result<Report, CatError> {
    let mut report = r.pro.validate()?;
    for gen in &r.pro.generators {
        let image = match r.images.get(&gen.name) {
            Some(i) => i,
            None => {
                report.push("missing-image", gen.name.clone());
                continue;
            }
        };
        let dom = functor_power(&r.t, gen.dom)?;
        let cod = functor_power(&r.t, gen.cod)?;
        if image.source != dom || image.target != cod {
            report.push("image-arity", gen.name.clone());
            continue;
        }
        if !validate_nat_trans(image)?.ok {
            report.push("image-naturality", gen.name.clone());
        }
    }
    if !report.ok {
        return Ok(report);
    }
    for (i, (lhs, rhs)) in r.pro.relations.iter().enumerate() {
        let a = eval_word(lhs, r)?;
        let b = eval_word(rhs, r)?;
        if !nat_trans_equal(&a, &b)? {
            report.push("relation", format!("relation {i}"));
        }
    }
    Ok(report)
}

/// Packages a monad as a representation of the monoid PRO.
pub fn rep_from_monad(m: &MonadData) -> ProRepresentation {
    let mut images = BTreeMap::new();
    images.insert("mu".to_string(), m.mu.clone());
    images.insert("eta".to_string(), m.eta.clone());
    ProRepresentation {
        pro: monoid_pro(),
        t: m.functor.clone(),
        images,
    }
}

/// Reads a monad back off a monoid-PRO representation.
pub fn monad_from_rep(r: &ProRepresentation) -> Result<MonadData, CatError> {
    Ok(MonadData {
        functor: r.t.clone(),
        mu: r.image("mu")?.clone(),
        eta: r.image("eta")?.clone(),
    })
}

/// Packages a comonad as a representation of the counital PRO.
pub fn rep_from_comonad(w: &ComonadData) -> ProRepresentation {
    let mut images = BTreeMap::new();
    images.insert("delta".to_string(), w.delta.clone());
    images.insert("eps".to_string(), w.epsilon.clone());
    ProRepresentation {
        pro: counital_pro(),
        t: w.functor.clone(),
        images,
    }
}

/// Reads a comonad back off a counital-PRO representation.
pub fn comonad_from_rep(r: &ProRepresentation) -> Result<ComonadData, CatError> {
    Ok(ComonadData {
        functor: r.t.clone(),
        delta: r.image("delta")?.clone(),
        epsilon: r.image("eps")?.clone(),
    })
}

/// `l^{(n)} : T G^n ⇒ G^n T`, the companion-iterated law
/// `G^{n-1}l ∘ … ∘ GlG^{n-2} ∘ lG^{n-1}`; `l^{(0)}` is the identity of
/// `T` by convention.
pub fn iterate_companion(
    l: &NatTransData,
    t: &FunctorData,
    g: &FunctorData,
    n: usize,
) -> Result<NatTransData, CatError> {
    if n == 0 {
        return Ok(NatTransData::identity(t));
    }
    let mut acc: Option<NatTransData> = None;
    for i in 1..=n {
        // i-th edge: G^{i-1} l G^{n-i}
        let edge = whisker_left(
            &functor_power(g, i - 1)?,
            &whisker_right(l, &functor_power(g, n - i)?)?,
        )?;
        acc = Some(match acc {
            None => edge,
            Some(prev) => vcompose(&edge, &prev)?,
        });
    }
    Ok(acc.expect("n >= 1"))
}

/// `Λ^{(n)} : T^n G ⇒ G T^n`, the monad-iterated law
/// `lT^{n-1} ∘ … ∘ T^{n-2}lT ∘ T^{n-1}l`; `Λ^{(0)}` is the identity of
/// `G`.
pub fn iterate_primary(
    l: &NatTransData,
    t: &FunctorData,
    g: &FunctorData,
    n: usize,
) -> Result<NatTransData, CatError> {
    if n == 0 {
        return Ok(NatTransData::identity(g));
    }
    let mut acc: Option<NatTransData> = None;
    for i in 1..=n {
        // i-th edge: T^{n-i} l T^{i-1}
        let edge = whisker_left(
            &functor_power(t, n - i)?,
            &whisker_right(l, &functor_power(t, i - 1)?)?,
        )?;
        acc = Some(match acc {
            None => edge,
            Some(prev) => vcompose(&edge, &prev)?,
        });
    }
    Ok(acc.expect("n >= 1"))
}

/// The decomposition `l^{(n+m)} = G^n(l^{(m)}) ∘ l^{(n)}G^m` for all
/// `1 ≤ n, m ≤ bound`, together with the closed form of the one-step
/// recursion `l^{(n)} = G^{n-1}(l) ∘ l^{(n-1)}G`.
pub fn check_decomposition(d: &DistLawData, bound: usize) -> Result<Report, CatError> {
    let t = &d.monad.functor;
    let g = d.companion.functor();
    let l = &d.law;
    let mut report = Report::ok();
    for n in 1..=bound {
        for m in 1..=bound {
            let lhs = iterate_companion(l, t, g, n + m)?;
            let inner = whisker_right(&iterate_companion(l, t, g, n)?, &functor_power(g, m)?)?;
            let outer = whisker_left(&functor_power(g, n)?, &iterate_companion(l, t, g, m)?)?;
            let rhs = vcompose(&outer, &inner)?;
            if !nat_trans_equal(&lhs, &rhs)? {
                report.push("decomposition", format!("n={n} m={m}"));
            }
            report.count("pairs", 1);
        }
    }
    report.merge(check_ln_consistency(d, 2 * bound)?);
    Ok(report)
}

/// The closed form of the iterated law agrees with iterating the one-step
/// decomposition `l^{(n)} = G^{n-1}(l) ∘ l^{(n-1)}G` for every `n ≤ bound`.
pub fn check_ln_consistency(d: &DistLawData, bound: usize) -> Result<Report, CatError> {
    let t = &d.monad.functor;
    let g = d.companion.functor();
    let l = &d.law;
    let mut report = Report::ok();
    let mut step = iterate_companion(l, t, g, 1)?;
    for n in 2..=bound {
        let recursed = vcompose(
            &whisker_left(&functor_power(g, n - 1)?, l)?,
            &whisker_right(&step, g)?,
        )?;
        let closed = iterate_companion(l, t, g, n)?;
        if !nat_trans_equal(&recursed, &closed)? {
            report.push("one-step-iteration", format!("n={n}"));
        }
        report.count("powers", 1);
        step = recursed;
    }
    Ok(report)
}

/// One edge of a multigon diagram: a labelled whiskered transformation.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DiagramEdge {
    pub label: String,
    pub trans: NatTransData,
}

/// The (n+m+2)-gon a distributive law must satisfy for one PRO generator:
/// two directed edge-paths with a common source and target.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Multigon {
    pub generator: String,
    pub dom_arity: usize,
    pub cod_arity: usize,
    pub top: Vec<DiagramEdge>,
    pub bottom: Vec<DiagramEdge>,
}

impl Multigon {
    pub fn edge_count(&self) -> usize {
        self.top.len() + self.bottom.len()
    }
}

fn compose_path(path: &[DiagramEdge]) -> Result<NatTransData, CatError> {
    let mut acc = path[0].trans.clone();
    for edge in &path[1..] {
        acc = vcompose(&edge.trans, &acc)?;
    }
    Ok(acc)
}

/// Checks that the two paths of a multigon compose to the same
/// transformation.
pub fn check_multigon(m: &Multigon) -> Result<Report, CatError> {
    let top = compose_path(&m.top)?;
    let bottom = compose_path(&m.bottom)?;
    let mut report = Report::ok();
    if !nat_trans_equal(&top, &bottom)? {
        report.push("multigon", format!("generator {}", m.generator));
    }
    report.count("edges", m.edge_count() as u64);
    Ok(report)
}

/// The multigon of a companion-side generator `τ : G^n ⇒ G^m`: the top
/// path runs the law across G-powers and then the `τ`-leg, the bottom is
/// symmetric. Exactly `n + m + 2` edges.
pub fn generate_multigon(
    rep_g: &ProRepresentation,
    gen: &str,
    t: &FunctorData,
    l: &NatTransData,
) -> Result<Multigon, CatError> {
    let g = &rep_g.t;
    let shape = rep_g
        .pro
        .generator(gen)
        .ok_or_else(|| CatError::UnknownGenerator(gen.to_string()))?;
    let tau = rep_g.image(gen)?;
    let (n, m) = (shape.dom, shape.cod);

    let mut top = Vec::new();
    for i in 1..=n {
        top.push(DiagramEdge {
            label: format!("G^{}·l·G^{}", i - 1, n - i),
            trans: whisker_left(
                &functor_power(g, i - 1)?,
                &whisker_right(l, &functor_power(g, n - i)?)?,
            )?,
        });
    }
    top.push(DiagramEdge {
        label: format!("{gen}·T"),
        trans: whisker_right(tau, t)?,
    });

    let mut bottom = vec![DiagramEdge {
        label: format!("T·{gen}"),
        trans: whisker_left(t, tau)?,
    }];
    for i in 1..=m {
        bottom.push(DiagramEdge {
            label: format!("G^{}·l·G^{}", i - 1, m - i),
            trans: whisker_left(
                &functor_power(g, i - 1)?,
                &whisker_right(l, &functor_power(g, m - i)?)?,
            )?,
        });
    }
    Ok(Multigon {
        generator: gen.to_string(),
        dom_arity: n,
        cod_arity: m,
        top,
        bottom,
    })
}

/// The multigon of a primary-side generator `τ : T^n ⇒ T^m`: the law is
/// iterated across T-powers and the `τ`-legs whisker the companion.
pub fn generate_primary_multigon(
    rep_t: &ProRepresentation,
    gen: &str,
    g: &FunctorData,
    l: &NatTransData,
) -> Result<Multigon, CatError> {
    let t = &rep_t.t;
    let shape = rep_t
        .pro
        .generator(gen)
        .ok_or_else(|| CatError::UnknownGenerator(gen.to_string()))?;
    let tau = rep_t.image(gen)?;
    let (n, m) = (shape.dom, shape.cod);

    let mut top = Vec::new();
    for i in 1..=n {
        top.push(DiagramEdge {
            label: format!("T^{}·l·T^{}", n - i, i - 1),
            trans: whisker_left(
                &functor_power(t, n - i)?,
                &whisker_right(l, &functor_power(t, i - 1)?)?,
            )?,
        });
    }
    top.push(DiagramEdge {
        label: format!("G·{gen}"),
        trans: whisker_left(g, tau)?,
    });

    let mut bottom = vec![DiagramEdge {
        label: format!("{gen}·G"),
        trans: whisker_right(tau, g)?,
    }];
    for i in 1..=m {
        bottom.push(DiagramEdge {
            label: format!("T^{}·l·T^{}", m - i, i - 1),
            trans: whisker_left(
                &functor_power(t, m - i)?,
                &whisker_right(l, &functor_power(t, i - 1)?)?,
            )?,
        });
    }
    Ok(Multigon {
        generator: gen.to_string(),
        dom_arity: n,
        cod_arity: m,
        top,
        bottom,
    })
}

/// A representation of a PRO is equivariant over a law `l : TG ⇒ GT` iff
/// the primary multigon of every generator commutes. For the monoid PRO
/// the two multigons are exactly the pentagon and the unit triangle of
/// the distributive law.
pub fn validate_equivariant_rep_raw(
    rep_t: &ProRepresentation,
    g: &FunctorData,
    l: &NatTransData,
) -> Result<Report, CatError> {
    let mut report = Report::ok();
    for gen in &rep_t.pro.generators {
        let multigon = generate_primary_multigon(rep_t, &gen.name, g, l)?;
        let sub = check_multigon(&multigon)?;
        if !sub.ok {
            report.push("multigon", format!("generator {}", gen.name));
        }
        report.count("multigons", 1);
    }
    Ok(report)
}

/// Wrapper taking the bundled law.
pub fn validate_equivariant_rep(
    rep_t: &ProRepresentation,
    d: &DistLawData,
) -> Result<Report, CatError> {
    validate_equivariant_rep_raw(rep_t, d.companion.functor(), &d.law)
}

/// One side of a map of pairs: a PRO representation together with a
/// single-generator distributive law for the strict action.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ProPairData {
    pub rep: ProRepresentation,
    pub law: DistLawData,
}

impl ProPairData {
    pub fn action(&self) -> &FunctorData {
        self.law.companion.functor()
    }
}

/// A colax map of pairs `(K, ζ, α) : (T, l^T) → (S, l^S)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PairMapData {
    /// `K` from the category of the S-side to the category of the T-side.
    pub k: FunctorData,
    /// `ζ : K∘G_M ⇒ G_N∘K`
    pub zeta: NatTransData,
    /// `α : T∘K ⇒ K∘S`
    pub alpha: NatTransData,
    pub t_side: ProPairData,
    pub s_side: ProPairData,
}

impl PairMapData {
    /// The identity map of pairs on one side.
    pub fn identity(side: &ProPairData) -> Result<Self, CatError> {
        let base = &side.rep.t.source;
        let k = FunctorData::identity(base);
        let g = side.action().clone();
        Ok(PairMapData {
            zeta: NatTransData::identity(&g),
            alpha: NatTransData::identity(&side.rep.t),
            k,
            t_side: side.clone(),
            s_side: side.clone(),
        })
    }
}

/// `α^{(n)} : T^n K ⇒ K S^n`, the power
/// `αS^{n-1} ∘ … ∘ T^{n-2}αS ∘ T^{n-1}α`; `α^{(0)}` is the identity of
/// `K`.
pub fn alpha_power(
    alpha: &NatTransData,
    t: &FunctorData,
    s: &FunctorData,
    k: &FunctorData,
    n: usize,
) -> Result<NatTransData, CatError> {
    if n == 0 {
        return Ok(NatTransData::identity(k));
    }
    let mut acc: Option<NatTransData> = None;
    for i in 1..=n {
        // i-th step: T^{n-i} α S^{i-1}
        let edge = whisker_left(
            &functor_power(t, n - i)?,
            &whisker_right(alpha, &functor_power(s, i - 1)?)?,
        )?;
        acc = Some(match acc {
            None => edge,
            Some(prev) => vcompose(&edge, &prev)?,
        });
    }
    Ok(acc.expect("n >= 1"))
}

/// The hexagon and every generator multigon for a map of pairs, checked
/// exhaustively, on top of full validation of both sides.
pub fn validate_pair_map(p: &PairMapData) -> Result<Report, CatError> {
    let mut report = Report::ok();
    report.merge(validate_representation(&p.t_side.rep)?);
    report.merge(validate_representation(&p.s_side.rep)?);
    report.merge(crate::distlaw::validate_dist_law(&p.t_side.law)?);
    report.merge(crate::distlaw::validate_dist_law(&p.s_side.law)?);
    if !report.ok {
        return Ok(report);
    }
    report.merge(check_pair_map_coherence(p)?);
    Ok(report)
}

/// The coherence part alone: typing and naturality of `ζ` and `α`, the
/// hexagon, and the generator multigons. Both sides are assumed already
/// validated.
pub fn check_pair_map_coherence(p: &PairMapData) -> Result<Report, CatError> {
    if p.t_side.rep.pro != p.s_side.rep.pro {
        return Err(CatError::Boundary("pair map sides must share a PRO".into()));
    }
    let t = &p.t_side.rep.t;
    let s = &p.s_side.rep.t;
    let g_n = p.t_side.action();
    let g_m = p.s_side.action();
    if p.k.source != s.source || p.k.target != t.source {
        return Err(CatError::CategoryMismatch(
            "pair map: K must go from the S-side category to the T-side category".into(),
        ));
    }
    // typing of ζ and α
    let kg = compose_functors(&p.k, g_m)?;
    let gk = compose_functors(g_n, &p.k)?;
    if p.zeta.source != kg || p.zeta.target != gk {
        return Err(CatError::Boundary("zeta must be K∘G_M ⇒ G_N∘K".into()));
    }
    let tk = compose_functors(t, &p.k)?;
    let ks = compose_functors(&p.k, s)?;
    if p.alpha.source != tk || p.alpha.target != ks {
        return Err(CatError::Boundary("alpha must be T∘K ⇒ K∘S".into()));
    }

    let mut report = Report::ok();
    if !validate_nat_trans(&p.zeta)?.ok {
        report.push("zeta-naturality", String::new());
    }
    if !validate_nat_trans(&p.alpha)?.ok {
        report.push("alpha-naturality", String::new());
    }
    if !report.ok {
        return Ok(report);
    }

    let l_t = &p.t_side.law.law;
    let l_s = &p.s_side.law.law;

    // hexagon: G_N α ∘ l^T K ∘ Tζ = ζ S ∘ K l^S ∘ α G_M
    let t_zeta = whisker_left(t, &p.zeta)?; // TKG_M ⇒ TG_N K
    let lt_k = whisker_right(l_t, &p.k)?; // TG_N K ⇒ G_N TK
    let gn_alpha = whisker_left(g_n, &p.alpha)?; // G_N TK ⇒ G_N KS
    let lhs = vcompose(&gn_alpha, &vcompose(&lt_k, &t_zeta)?)?;
    let alpha_gm = whisker_right(&p.alpha, g_m)?; // TKG_M ⇒ KSG_M
    let k_ls = whisker_left(&p.k, l_s)?; // KSG_M ⇒ KG_M S
    let zeta_s = whisker_right(&p.zeta, s)?; // KG_M S ⇒ G_N KS
    let rhs = vcompose(&zeta_s, &vcompose(&k_ls, &alpha_gm)?)?;
    for x in 0..lhs.components.len() {
        if lhs.components[x] != rhs.components[x] {
            report.push("hexagon", format!("object {x}"));
        }
    }

    // generator multigons: Kτ^S ∘ α^{(n)} = α^{(p)} ∘ τ^T K
    for gen in p.t_side.rep.pro.generators.clone() {
        let tau_t = p.t_side.rep.image(&gen.name)?;
        let tau_s = p.s_side.rep.image(&gen.name)?;
        let a_n = alpha_power(&p.alpha, t, s, &p.k, gen.dom)?;
        let a_p = alpha_power(&p.alpha, t, s, &p.k, gen.cod)?;
        let k_tau = whisker_left(&p.k, tau_s)?; // KS^n ⇒ KS^p
        let lhs = vcompose(&k_tau, &a_n)?;
        let tau_k = whisker_right(tau_t, &p.k)?; // T^n K ⇒ T^p K
        let rhs = vcompose(&a_p, &tau_k)?;
        if !nat_trans_equal(&lhs, &rhs)? {
            report.push("pair-multigon", format!("generator {}", gen.name));
        }
        report.count("multigons", 1);
    }
    Ok(report)
}

/// `(L, ζ^L, β) ∘-style composite of maps of pairs:
/// `outer ∘ inner = (L∘K, ζ^L K ∘ Lζ^K, Lα ∘ βK)` where `outer = (K, α)`
/// and `inner = (L, β)`.
pub fn compose_pair_maps(
    outer: &PairMapData,
    inner: &PairMapData,
) -> Result<PairMapData, CatError> {
    if inner.s_side != outer.t_side {
        return Err(CatError::Boundary(
            "compose_pair_maps: inner map's S-side must be the outer map's T-side".into(),
        ));
    }
    let k = compose_functors(&inner.k, &outer.k)?;
    let zeta = vcompose(
        &whisker_right(&inner.zeta, &outer.k)?,
        &whisker_left(&inner.k, &outer.zeta)?,
    )?;
    let alpha = vcompose(
        &whisker_left(&inner.k, &outer.alpha)?,
        &whisker_right(&inner.alpha, &outer.k)?,
    )?;
    Ok(PairMapData {
        k,
        zeta,
        alpha,
        t_side: inner.t_side.clone(),
        s_side: outer.s_side.clone(),
    })
}

/// Power lemma: `Lα^{(n)} ∘ β^{(n)}K = (Lα ∘ βK)^{(n)}` for all
/// `1 ≤ n ≤ bound`.
pub fn check_power_lemma(
    outer: &PairMapData,
    inner: &PairMapData,
    bound: usize,
) -> Result<Report, CatError> {
    if inner.s_side != outer.t_side {
        return Err(CatError::Boundary(
            "check_power_lemma: maps do not compose".into(),
        ));
    }
    let composite = compose_pair_maps(outer, inner)?;
    let t = &outer.t_side.rep.t;
    let s = &outer.s_side.rep.t;
    let v = &inner.t_side.rep.t;
    let mut report = Report::ok();
    for n in 1..=bound {
        let a_n = alpha_power(&outer.alpha, t, s, &outer.k, n)?;
        let b_n = alpha_power(&inner.alpha, v, t, &inner.k, n)?;
        let lhs = vcompose(
            &whisker_left(&inner.k, &a_n)?,
            &whisker_right(&b_n, &outer.k)?,
        )?;
        let rhs = alpha_power(&composite.alpha, v, s, &composite.k, n)?;
        if !nat_trans_equal(&lhs, &rhs)? {
            report.push("power-lemma", format!("n={n}"));
        }
        report.count("powers", 1);
    }
    Ok(report)
}

/// Mixed heptagon for a generator `τ : n → p` with `n ≥ 1`:
/// the seven-sided diagram mixing `l^T` and `l^S` around the vertical
/// `Kτ^S ∘ αS^{n-1}`.
pub fn check_mixed_heptagon(p: &PairMapData, gen: &str) -> Result<Report, CatError> {
    if !validate_pair_map(p)?.ok {
        return Err(CatError::Precondition(
            "check_mixed_heptagon: pair map axioms fail".into(),
        ));
    }
    let shape = p
        .t_side
        .rep
        .pro
        .generator(gen)
        .ok_or_else(|| CatError::UnknownGenerator(gen.to_string()))?
        .clone();
    if shape.dom == 0 {
        return Err(CatError::Precondition(format!(
            "mixed heptagon needs a generator with domain arity >= 1, `{gen}` has 0"
        )));
    }
    let (n, pp) = (shape.dom, shape.cod);
    let t = &p.t_side.rep.t;
    let s = &p.s_side.rep.t;
    let g_n = p.t_side.action().clone();
    let g_m = p.s_side.action().clone();
    let l_t = &p.t_side.law.law;
    let l_s = &p.s_side.law.law;
    let tau_s = p.s_side.rep.image(gen)?;

    // vertical v = Kτ^S ∘ αS^{n-1} : TKS^{n-1} ⇒ KS^p
    let alpha_sn = whisker_right(&p.alpha, &functor_power(s, n - 1)?)?;
    let k_tau = whisker_left(&p.k, tau_s)?;
    let v = vcompose(&k_tau, &alpha_sn)?;

    // top: TK l^{S(n-1)} ; Tζ S^{n-1} ; l^T K S^{n-1} ; then G_N v
    let tk = compose_functors(t, &p.k)?;
    let e1 = whisker_left(&tk, &iterate_primary(l_s, s, &g_m, n - 1)?)?;
    let e2 = whisker_right(&whisker_left(t, &p.zeta)?, &functor_power(s, n - 1)?)?;
    let e3 = whisker_right(l_t, &compose_functors(&p.k, &functor_power(s, n - 1)?)?)?;
    let top = vcompose(
        &whisker_left(&g_n, &v)?,
        &vcompose(&e3, &vcompose(&e2, &e1)?)?,
    )?;

    // bottom: v G_M ; K l^{S(p)} ; ζ S^p
    let v_gm = whisker_right(&v, &g_m)?;
    let k_lsp = whisker_left(&p.k, &iterate_primary(l_s, s, &g_m, pp)?)?;
    let zeta_sp = whisker_right(&p.zeta, &functor_power(s, pp)?)?;
    let bottom = vcompose(&zeta_sp, &vcompose(&k_lsp, &v_gm)?)?;

    let mut report = Report::ok();
    if !nat_trans_equal(&top, &bottom)? {
        report.push("mixed-heptagon", format!("generator {gen}"));
    }
    report.count("edges", 7);
    Ok(report)
}

/// A transformation of maps of pairs.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PairTransformation {
    pub from: PairMapData,
    pub to: PairMapData,
    pub sigma: NatTransData,
}

/// Both squares of a transformation of maps of pairs: the monad-map
/// square `β ∘ Tσ = σS ∘ α` and the action square
/// `ζ^L ∘ σG_M = G_Nσ ∘ ζ^K`.
pub fn validate_pair_transformation(t: &PairTransformation) -> Result<Report, CatError> {
    if t.from.t_side != t.to.t_side || t.from.s_side != t.to.s_side {
        return Err(CatError::Boundary(
            "pair transformation: both maps must share their sides".into(),
        ));
    }
    if t.sigma.source != t.from.k || t.sigma.target != t.to.k {
        return Err(CatError::Boundary("sigma must be K ⇒ L".into()));
    }
    let mut report = Report::ok();
    if !validate_nat_trans(&t.sigma)?.ok {
        report.push("sigma-naturality", String::new());
        return Ok(report);
    }
    let tt = &t.from.t_side.rep.t;
    let s = &t.from.s_side.rep.t;
    let g_n = t.from.t_side.action();
    let g_m = t.from.s_side.action();

    // β ∘ Tσ = σS ∘ α
    let t_sigma = whisker_left(tt, &t.sigma)?;
    let lhs = vcompose(&t.to.alpha, &t_sigma)?;
    let sigma_s = whisker_right(&t.sigma, s)?;
    let rhs = vcompose(&sigma_s, &t.from.alpha)?;
    for x in 0..lhs.components.len() {
        if lhs.components[x] != rhs.components[x] {
            report.push("transformation-square", format!("object {x}"));
        }
    }

    // ζ^L ∘ σG_M = G_Nσ ∘ ζ^K
    let sigma_gm = whisker_right(&t.sigma, g_m)?;
    let lhs = vcompose(&t.to.zeta, &sigma_gm)?;
    let gn_sigma = whisker_left(g_n, &t.sigma)?;
    let rhs = vcompose(&gn_sigma, &t.from.zeta)?;
    for x in 0..lhs.components.len() {
        if lhs.components[x] != rhs.components[x] {
            report.push("equivariance-square", format!("object {x}"));
        }
    }
    Ok(report)
}

/// The cube over a transformation of maps of pairs: all six faces and
/// the outer equality, each checked exhaustively.
pub fn check_cube(t: &PairTransformation) -> Result<Report, CatError> {
    if !validate_pair_transformation(t)?.ok {
        return Err(CatError::Precondition(
            "check_cube: pair transformation squares fail".into(),
        ));
    }
    let mut report = Report::ok();
    let tt = &t.from.t_side.rep.t;
    let s = &t.from.s_side.rep.t;
    let g_n = t.from.t_side.action().clone();
    let g_m = t.from.s_side.action().clone();
    let l_t = &t.from.t_side.law.law;
    let l_s = &t.from.s_side.law.law;
    let (k, l) = (&t.from.k, &t.to.k);
    let (alpha, beta) = (&t.from.alpha, &t.to.alpha);
    let (zeta_k, zeta_l) = (&t.from.zeta, &t.to.zeta);
    let sigma = &t.sigma;

    let mut face = |name: &str, lhs: &NatTransData, rhs: &NatTransData| -> Result<(), CatError> {
        if !nat_trans_equal(lhs, rhs)? {
            report.push("cube-face", name.to_string());
        }
        report.count("faces", 1);
        Ok(())
    };

    // top: G_N Tσ ∘ l^T K ∘ Tζ^K = l^T L ∘ Tζ^L ∘ TσG_M
    let lhs = vcompose(
        &whisker_left(&g_n, &whisker_left(tt, sigma)?)?,
        &vcompose(&whisker_right(l_t, k)?, &whisker_left(tt, zeta_k)?)?,
    )?;
    let rhs = vcompose(
        &vcompose(&whisker_right(l_t, l)?, &whisker_left(tt, zeta_l)?)?,
        &whisker_right(&whisker_left(tt, sigma)?, &g_m)?,
    )?;
    face("top", &lhs, &rhs)?;

    // bottom: G_N σS ∘ ζ^K S ∘ K l^S = ζ^L S ∘ L l^S ∘ σSG_M
    let lhs = vcompose(
        &whisker_left(&g_n, &whisker_right(sigma, s)?)?,
        &vcompose(&whisker_right(zeta_k, s)?, &whisker_left(k, l_s)?)?,
    )?;
    let rhs = vcompose(
        &vcompose(&whisker_right(zeta_l, s)?, &whisker_left(l, l_s)?)?,
        &whisker_right(&whisker_right(sigma, s)?, &g_m)?,
    )?;
    face("bottom", &lhs, &rhs)?;

    // left: βG_M ∘ TσG_M = σSG_M ∘ αG_M
    let lhs = vcompose(
        &whisker_right(beta, &g_m)?,
        &whisker_right(&whisker_left(tt, sigma)?, &g_m)?,
    )?;
    let rhs = vcompose(
        &whisker_right(&whisker_right(sigma, s)?, &g_m)?,
        &whisker_right(alpha, &g_m)?,
    )?;
    face("left", &lhs, &rhs)?;

    // right: G_Nβ ∘ G_N Tσ = G_NσS ∘ G_Nα
    let lhs = vcompose(
        &whisker_left(&g_n, beta)?,
        &whisker_left(&g_n, &whisker_left(tt, sigma)?)?,
    )?;
    let rhs = vcompose(
        &whisker_left(&g_n, &whisker_right(sigma, s)?)?,
        &whisker_left(&g_n, alpha)?,
    )?;
    face("right", &lhs, &rhs)?;

    // back: hexagon for (K, α)
    let lhs = vcompose(
        &whisker_left(&g_n, alpha)?,
        &vcompose(&whisker_right(l_t, k)?, &whisker_left(tt, zeta_k)?)?,
    )?;
    let rhs = vcompose(
        &whisker_right(zeta_k, s)?,
        &vcompose(&whisker_left(k, l_s)?, &whisker_right(alpha, &g_m)?)?,
    )?;
    face("back", &lhs, &rhs)?;

    // front: hexagon for (L, β)
    let lhs = vcompose(
        &whisker_left(&g_n, beta)?,
        &vcompose(&whisker_right(l_t, l)?, &whisker_left(tt, zeta_l)?)?,
    )?;
    let rhs = vcompose(
        &whisker_right(zeta_l, s)?,
        &vcompose(&whisker_left(l, l_s)?, &whisker_right(beta, &g_m)?)?,
    )?;
    face("front", &lhs, &rhs)?;

    // outer equality: back then right vs left then front, TKG_M ⇒ G_N LS
    let lhs = vcompose(
        &whisker_left(&g_n, &whisker_right(sigma, s)?)?,
        &vcompose(
            &whisker_left(&g_n, alpha)?,
            &vcompose(&whisker_right(l_t, k)?, &whisker_left(tt, zeta_k)?)?,
        )?,
    )?;
    let rhs = vcompose(
        &vcompose(
            &whisker_right(zeta_l, s)?,
            &vcompose(&whisker_left(l, l_s)?, &whisker_right(beta, &g_m)?)?,
        )?,
        &whisker_right(&whisker_left(tt, sigma)?, &g_m)?,
    )?;
    face("outer", &lhs, &rhs)?;

    Ok(report)
}

/// A law between two comonads on the same carrier family, as produced by
/// the braiding tower: the `primary` comonad distributes over the
/// `companion` comonad along `law : P∘C ⇒ C∘P`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ComonadLaw {
    pub primary: ComonadData,
    pub companion: ComonadData,
    pub law: NatTransData,
}

/// The four compatibility diagrams of a comonad–comonad distributive law:
/// the companion-side pentagon and triangle plus their primary-side
/// mirrors. Each is a multigon of the counital PRO.
pub fn validate_comonad_law(cl: &ComonadLaw) -> Result<Report, CatError> {
    let mut report = Report::ok();
    if !validate_comonad(&cl.primary)?.ok {
        report.push("primary-comonad", String::new());
    }
    if !validate_comonad(&cl.companion)?.ok {
        report.push("companion-comonad", String::new());
    }
    if !validate_nat_trans(&cl.law)?.ok {
        report.push("law-naturality", String::new());
    }
    if !report.ok {
        return Ok(report);
    }
    let companion_rep = rep_from_comonad(&cl.companion);
    let primary_rep = rep_from_comonad(&cl.primary);
    for gen in ["delta", "eps"] {
        let m = generate_multigon(&companion_rep, gen, &cl.primary.functor, &cl.law)?;
        let sub = check_multigon(&m)?;
        if !sub.ok {
            report.push("companion-multigon", gen.to_string());
        }
        let m = generate_primary_multigon(&primary_rep, gen, &cl.companion.functor, &cl.law)?;
        let sub = check_multigon(&m)?;
        if !sub.ok {
            report.push("primary-multigon", gen.to_string());
        }
        report.count("multigons", 2);
    }
    Ok(report)
}

/// The quantum Yang–Baxter equation
/// `Gl ∘ lG ∘ Gl = lG ∘ Gl ∘ lG` for `l : GG ⇒ GG` over a comonad.
pub fn check_yang_baxter(l: &NatTransData, g: &ComonadData) -> Result<Report, CatError> {
    let gf = &g.functor;
    let gg = compose_functors(gf, gf)?;
    if l.source != gg || l.target != gg {
        return Err(CatError::Boundary("braiding must be GG ⇒ GG".into()));
    }
    if !validate_comonad(g)?.ok {
        return Err(CatError::Precondition("check_yang_baxter: comonad laws fail".into()));
    }
    let mut report = Report::ok();
    if !validate_nat_trans(l)?.ok {
        report.push("law-naturality", String::new());
        return Ok(report);
    }
    let g_l = whisker_left(gf, l)?;
    let l_g = whisker_right(l, gf)?;
    let lhs = vcompose(&g_l, &vcompose(&l_g, &g_l)?)?;
    let rhs = vcompose(&l_g, &vcompose(&g_l, &l_g)?)?;
    for x in 0..lhs.components.len() {
        if lhs.components[x] != rhs.components[x] {
            report.push("yang-baxter", format!("object {x}"));
        }
    }
    Ok(report)
}

/// True when `l : GG ⇒ GG` is a distributive law of the comonad over
/// itself and satisfies Yang–Baxter; such an `l` is a strong braiding.
pub fn is_strong_braiding(l: &NatTransData, g: &ComonadData) -> Result<bool, CatError> {
    let self_law = ComonadLaw {
        primary: g.clone(),
        companion: g.clone(),
        law: l.clone(),
    };
    Ok(validate_comonad_law(&self_law)?.ok && check_yang_baxter(l, g)?.ok)
}

/// The composite comonad on `A∘B` induced by a comonad–comonad law
/// `l : AB ⇒ BA`: `δ = A·l·B ∘ (δ_A ⋆ δ_B)` and `ε = ε_A ⋆ ε_B`.
pub fn composite_comonad(
    a: &ComonadData,
    b: &ComonadData,
    law: &NatTransData,
) -> Result<ComonadData, CatError> {
    let ab = compose_functors(&a.functor, &b.functor)?;
    let delta = vcompose(
        &whisker_left(&a.functor, &whisker_right(law, &b.functor)?)?,
        &hcompose(&a.delta, &b.delta)?,
    )?;
    let epsilon = hcompose(&a.epsilon, &b.epsilon)?;
    Ok(ComonadData {
        functor: ab,
        delta,
        epsilon,
    })
}

/// The tower of a strong braiding: `l^{(n)} : G∘G^n ⇒ G^n∘G` as a
/// distributive law from `G` to the inductively composed comonad on
/// `G^n`. Refused unless `l` is a strong braiding.
pub fn braided_tower(l: &NatTransData, g: &ComonadData, n: usize) -> Result<ComonadLaw, CatError> {
    if n == 0 {
        return Err(CatError::Precondition("braided_tower needs n >= 1".into()));
    }
    if !check_yang_baxter(l, g)?.ok {
        return Err(CatError::Precondition(
            "braided_tower: Yang-Baxter fails, tower refused".into(),
        ));
    }
    let self_law = ComonadLaw {
        primary: g.clone(),
        companion: g.clone(),
        law: l.clone(),
    };
    if !validate_comonad_law(&self_law)?.ok {
        return Err(CatError::Precondition(
            "braided_tower: l is not a distributive law of the comonad over itself".into(),
        ));
    }
    let gf = &g.functor;
    let mut companion = g.clone();
    for k in 1..n {
        // law between G and G^k is the k-iterated braiding
        let law_k = iterate_companion(l, gf, gf, k)?;
        companion = composite_comonad(g, &companion, &law_k)?;
    }
    Ok(ComonadLaw {
        primary: g.clone(),
        companion,
        law: iterate_companion(l, gf, gf, n)?,
    })
}
