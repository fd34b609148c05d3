//! Canonical re-emission of a parsed document. `parse ∘ emit ∘ parse`
//! equals `parse` on every document the parser accepts.

use std::fmt::Write;

use super::ast::*;
use crate::pro::ProWord;

fn word_text(w: &ProWord) -> String {
    // parenthesize fully except at the leaves; reparsing is then unambiguous
    match w {
        ProWord::Id(n) => format!("id {n}"),
        ProWord::Gen(name) => name.clone(),
        ProWord::Seq(f, g) => format!("({} . {})", word_text(f), word_text(g)),
        ProWord::Par(f, g) => format!("({} + {})", word_text(f), word_text(g)),
    }
}

fn list(items: &[usize]) -> String {
    let body: Vec<String> = items.iter().map(|n| n.to_string()).collect();
    format!("[{}]", body.join(", "))
}

fn nested<T: ToString>(rows: &[Vec<T>]) -> String {
    let body: Vec<String> = rows
        .iter()
        .map(|row| {
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            format!("[{}]", cells.join(", "))
        })
        .collect();
    format!("[{}]", body.join(", "))
}

fn decl_text(d: &Decl) -> String {
    match d {
        Decl::Category { name, body } => match body {
            CategoryBody::PosetChain(n) => format!("category {name} = poset chain {n}"),
            CategoryBody::PosetTable(t) => format!("category {name} = poset table {}", nested(t)),
            CategoryBody::MonoidZ2 => format!("category {name} = monoid z2"),
            CategoryBody::MonoidTable(t) => format!("category {name} = monoid table {}", nested(t)),
            CategoryBody::Explicit {
                objects,
                morphisms,
                identity,
                compose,
            } => {
                let mors: Vec<String> =
                    morphisms.iter().map(|(s, t)| format!("({s}, {t})")).collect();
                format!(
                    "category {name} = explicit objects {objects} morphisms [{}] identity {} compose {}",
                    mors.join(", "),
                    list(identity),
                    nested(compose)
                )
            }
        },
        Decl::Functor { name, body } => match body {
            FunctorBody::Tables {
                source,
                target,
                objects,
                morphisms,
            } => {
                let mut s = format!(
                    "functor {name} : {source} -> {target} = objects {}",
                    list(objects)
                );
                if let Some(m) = morphisms {
                    write!(s, " morphisms {}", list(m)).unwrap();
                }
                s
            }
            FunctorBody::Identity(c) => format!("functor {name} = identity {c}"),
            FunctorBody::Compose(f, g) => format!("functor {name} = compose {f} {g}"),
            FunctorBody::Power(t, n) => format!("functor {name} = power {t} {n}"),
        },
        Decl::NatTrans { name, body } => match body {
            NatTransBody::Components {
                source,
                target,
                components,
            } => format!(
                "nattrans {name} : {source} => {target} = {}",
                list(components)
            ),
            NatTransBody::Auto { source, target } => {
                format!("nattrans {name} : {source} => {target} = auto")
            }
            NatTransBody::Id(f) => format!("nattrans {name} = id {f}"),
            NatTransBody::VCompose(a, b) => format!("nattrans {name} = vcompose {a} {b}"),
            NatTransBody::HCompose(a, b) => format!("nattrans {name} = hcompose {a} {b}"),
            NatTransBody::WhiskerLeft(f, a) => format!("nattrans {name} = whisker_left {f} {a}"),
            NatTransBody::WhiskerRight(a, f) => {
                format!("nattrans {name} = whisker_right {a} {f}")
            }
        },
        Decl::Monad { name, body } => match body {
            MonadBody::Closure { cat, image } => {
                format!("monad {name} on {cat} = closure {}", list(image))
            }
            MonadBody::IdentityOn { cat } => format!("monad {name} on {cat} = identity"),
            MonadBody::Parts { functor, mu, eta } => {
                format!("monad {name} = ({functor}, {mu}, {eta})")
            }
        },
        Decl::Comonad { name, body } => match body {
            ComonadBody::Interior { cat, image } => {
                format!("comonad {name} on {cat} = interior {}", list(image))
            }
            ComonadBody::Parts {
                functor,
                delta,
                epsilon,
            } => format!("comonad {name} = ({functor}, {delta}, {epsilon})"),
        },
        Decl::DistLaw {
            name,
            monad,
            companion,
            law,
        } => match law {
            Some(l) => format!("distlaw {name} = {monad} over {companion} with {l}"),
            None => format!("distlaw {name} = {monad} over {companion}"),
        },
        Decl::Lift {
            name,
            companion,
            monad,
            objects,
        } => format!(
            "lift {name} = {companion} over {monad} objects {}",
            list(objects)
        ),
        Decl::MonadMap { name, k, alpha, t, s } => {
            format!("monadmap {name} = {k} with alpha {alpha} : {t} -> {s}")
        }
        Decl::Pro { name, body } => match body {
            ProBody::Monoid => format!("pro {name} = monoid"),
            ProBody::Counital => format!("pro {name} = counital"),
            ProBody::Custom {
                generators,
                relations,
            } => {
                let gens: Vec<String> = generators
                    .iter()
                    .map(|(g, d, c)| format!("{g}: {d} -> {c}"))
                    .collect();
                let rels: Vec<String> = relations
                    .iter()
                    .map(|(l, r)| format!("{} == {}", word_text(l), word_text(r)))
                    .collect();
                format!(
                    "pro {name} = generators [{}] relations [{}]",
                    gens.join(", "),
                    rels.join(", ")
                )
            }
        },
        Decl::Representation { name, pro, body } => match body {
            RepBody::FromMonad(m) => format!("representation {name} of {pro} = monad {m}"),
            RepBody::FromComonad(w) => format!("representation {name} of {pro} = comonad {w}"),
            RepBody::Explicit { functor, images } => {
                let imgs: Vec<String> =
                    images.iter().map(|(g, nt)| format!("{g}: {nt}")).collect();
                format!(
                    "representation {name} of {pro} = functor {functor} images [{}]",
                    imgs.join(", ")
                )
            }
        },
        Decl::PairMap {
            name,
            k,
            zeta,
            alpha,
            t_rep,
            t_law,
            s_rep,
            s_law,
        } => format!(
            "pairmap {name} = {k} with zeta {zeta} alpha {alpha} : ({t_rep}, {t_law}) -> ({s_rep}, {s_law})"
        ),
        Decl::Transformation {
            name,
            from,
            to,
            sigma,
        } => format!("transformation {name} : {from} => {to} = {sigma}"),
    }
}

fn check_text(c: &Check) -> String {
    match c {
        Check::ValidateCategory(n) => format!("check validate_category {n}"),
        Check::Compose { cat, g, f, expect } => format!("check compose {cat} {g} {f} = {expect}"),
        Check::ValidateFunctor(n) => format!("check validate_functor {n}"),
        Check::ValidateNatTrans(n) => format!("check validate_nat_trans {n}"),
        Check::NatTransEqual { a, b, expect } => {
            format!("check nat_trans_equal {a} {b} = {expect}")
        }
        Check::Interchange(n) => format!("check interchange {n}"),
        Check::PowerAdditivity { functor, bound } => {
            format!("check power_additivity {functor} bound {bound}")
        }
        Check::CountFunctors { cat, expect } => format!("check count_functors {cat} = {expect}"),
        Check::CountNatTrans { f, g, expect } => {
            format!("check count_nat_trans {f} {g} = {expect}")
        }
        Check::CountMonads { cat, expect } => format!("check count_monads {cat} = {expect}"),
        Check::CountLaws {
            monad,
            companion,
            expect,
        } => format!("check count_laws {monad} {companion} = {expect}"),
        Check::ValidateMonad(n) => format!("check validate_monad {n}"),
        Check::ValidateComonad(n) => format!("check validate_comonad {n}"),
        Check::EmCount { monad, expect } => format!("check em_count {monad} = {expect}"),
        Check::ValidateMonadMap { alpha, from, to } => {
            format!("check validate_monad_map {alpha} : {from} -> {to}")
        }
        Check::MonadMapRoundtrip { from, to } => {
            format!("check monad_map_roundtrip {from} {to}")
        }
        Check::ValidateMonadMapAcross(n) => format!("check validate_monad_map_across {n}"),
        Check::ComposeMonadMaps { outer, inner } => {
            format!("check compose_monad_maps {outer} {inner}")
        }
        Check::AcrossRoundtrip(n) => format!("check across_roundtrip {n}"),
        Check::ValidateMapTransformation(n) => format!("check validate_map_transformation {n}"),
        Check::TransformationRoundtrip(n) => format!("check transformation_roundtrip {n}"),
        Check::EpsIdentity { from, to } => format!("check eps_identity {from} {to}"),
        Check::ValidateDistLaw(n) => format!("check validate_dist_law {n}"),
        Check::LiftFromLaw(n) => format!("check lift_from_law {n}"),
        Check::LawFromLift(n) => format!("check law_from_lift {n}"),
        Check::BeckRoundtrip { monad, companion } => {
            format!("check beck_roundtrip {monad} {companion}")
        }
        Check::ValidateDistrMorphism { alpha, from, to } => {
            format!("check validate_distr_morphism {alpha} : {from} -> {to}")
        }
        Check::HalphaEquivariance { alpha, from, to } => {
            format!("check halpha_equivariance {alpha} : {from} -> {to}")
        }
        Check::MixedPentagonH { law, law2 } => format!("check mixed_pentagon_h {law} {law2}"),
        Check::MixedPentagonAlpha { alpha, from, to } => {
            format!("check mixed_pentagon_alpha {alpha} : {from} -> {to}")
        }
        Check::VerticalAgreement { alpha, from, to } => {
            format!("check vertical_agreement {alpha} : {from} -> {to}")
        }
        Check::Contravariant(n) => format!("check contravariant {n}"),
        Check::WordArity {
            pro,
            word,
            dom,
            cod,
        } => format!(
            "check word_arity {pro} : {} = {dom} -> {cod}",
            word_text(word)
        ),
        Check::EvalWord { rep, lhs, rhs } => format!(
            "check eval_word {rep} : {} == {}",
            word_text(lhs),
            word_text(rhs)
        ),
        Check::ValidateRepresentation(n) => format!("check validate_representation {n}"),
        Check::Decomposition { law, bound } => format!("check decomposition {law} bound {bound}"),
        Check::LnConsistency { law, bound } => {
            format!("check ln_consistency {law} bound {bound}")
        }
        Check::Multigon {
            rep,
            gen,
            law,
            edges,
        } => format!("check multigon {rep} {gen} {law} edges {edges}"),
        Check::EquivariantRep { rep, law } => format!("check equivariant_rep {rep} {law}"),
        Check::ValidatePairMap(n) => format!("check validate_pair_map {n}"),
        Check::PowerLemma {
            outer,
            inner,
            bound,
        } => format!("check power_lemma {outer} {inner} bound {bound}"),
        Check::ComposePairMaps { outer, inner } => {
            format!("check compose_pair_maps {outer} {inner}")
        }
        Check::MixedHeptagon { pairmap, gen } => {
            format!("check mixed_heptagon {pairmap} {gen}")
        }
        Check::ValidatePairTransformation(n) => {
            format!("check validate_pair_transformation {n}")
        }
        Check::Cube(n) => format!("check cube {n}"),
        Check::YangBaxter { law, comonad } => format!("check yang_baxter {law} over {comonad}"),
        Check::BraidedTower {
            law,
            comonad,
            bound,
        } => format!("check braided_tower {law} over {comonad} bound {bound}"),
        Check::BuiltinPros => "check builtin_pros".to_string(),
    }
}

/// Renders a document back to canonical source text.
pub fn emit_document(doc: &Document) -> String {
    let mut out = String::new();
    for item in &doc.items {
        let line = match item {
            Item::Option(OptionDecl::Bound(n)) => format!("option bound {n}"),
            Item::Option(OptionDecl::Format(FormatKind::Text)) => "option format text".into(),
            Item::Option(OptionDecl::Format(FormatKind::Json)) => "option format json".into(),
            Item::Decl(d) => decl_text(d),
            Item::Check(c) => check_text(c),
        };
        out.push_str(&line);
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::super::parser::parse_document;
    use super::*;

    #[test]
    fn emit_parse_fixpoint_on_a_mixed_document() {
        let text = "option bound 12\ncategory C3 = poset chain 3\nmonad T on C3 = closure [1, 1, 2]\ncomonad W on C3 = interior [0, 1, 1]\ndistlaw L = T over W\ncheck multigon R delta L edges 5\ncheck word_arity P : (eps + id 1) . delta = 1 -> 1\n";
        let first = parse_document(text).unwrap();
        let emitted = emit_document(&first);
        let second = parse_document(&emitted).unwrap();
        assert_eq!(first, second);
        assert_eq!(emitted, emit_document(&second));
    }
}
