//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line. Everything is exhaustive over the two desk-scale test
//! categories, the 3-chain poset and the group Z/2.

use std::sync::Arc;

use catlaw::distlaw::{
    check_beck_roundtrip, check_contravariant_functoriality, check_mixed_pentagon_alpha,
    check_mixed_pentagon_h, check_vertical_agreement, lift_from_law, validate_dist_law,
    validate_distr_morphism, Companion, DistLawData, DistrMorphism,
};
use catlaw::fincat::{
    compose_functors, validate_functor, FinCategory, FunctorData, NatTransData,
};
use catlaw::monad::{
    build_em, check_eps_identity, check_same_base_roundtrip, enumerate_em_functors_over_u,
    validate_monad, EMConstruction, MonadData,
};
use catlaw::oracle::{
    enumerate_comonads, enumerate_dist_laws, enumerate_functors, enumerate_monads,
    enumerate_nat_trans, DEFAULT_BOUND,
};
use catlaw::pro::{
    braided_tower, check_cube, check_ln_consistency, check_mixed_heptagon, check_multigon,
    check_pair_map_coherence, check_power_lemma, compose_pair_maps, generate_multigon,
    is_strong_braiding, rep_from_comonad, rep_from_monad, validate_comonad_law,
    validate_equivariant_rep_raw, validate_pair_transformation, PairMapData,
    PairTransformation, ProPairData,
};
use catlaw::Report;

fn test_categories() -> Vec<(&'static str, Arc<FinCategory>)> {
    vec![
        ("chain3", Arc::new(FinCategory::chain(3))),
        ("z2", Arc::new(FinCategory::z2())),
    ]
}

fn criterion(n: u32, what: &str, ok: bool, detail: String) {
    let verdict = if ok { "PASS" } else { "FAIL" };
    println!("criterion {n} ({what}): {verdict} [{detail}]");
    assert!(ok, "criterion {n} ({what}) failed: {detail}");
}

#[test]
fn criterion_1_beck_bijection() {
    let mut acc = Report::ok();
    let mut combos = 0u64;
    for (_, c) in test_categories() {
        let monads = enumerate_monads(&c, DEFAULT_BOUND).unwrap();
        let functors = enumerate_functors(&c, DEFAULT_BOUND).unwrap();
        for t in &monads {
            for g in &functors {
                let report =
                    check_beck_roundtrip(t, &Companion::Endofunctor(g.clone()), DEFAULT_BOUND)
                        .unwrap();
                acc.merge(report);
                combos += 1;
            }
        }
    }
    criterion(
        1,
        "Beck bijection, both roundtrips, all (T, G) pairs",
        acc.ok,
        format!("{combos} pairs, violations: {:?}", acc.violations),
    );
}

#[test]
fn criterion_2_oracle_equivalence() {
    let mut ok = true;
    let mut detail = String::new();

    for (name, c) in test_categories() {
        // functors: full raw universe of tables vs the enumerator
        let emitted = enumerate_functors(&c, DEFAULT_BOUND).unwrap();
        let mut accepted = Vec::new();
        let n_obj = c.objects;
        let n_mor = c.morphisms.len();
        let mut obj = vec![0usize; n_obj];
        'obj: loop {
            let mut mor = vec![0usize; n_mor];
            'mor: loop {
                let cand = FunctorData {
                    source: c.clone(),
                    target: c.clone(),
                    object_map: obj.clone(),
                    morphism_map: mor.clone(),
                };
                if validate_functor(&cand).unwrap().ok {
                    accepted.push(cand);
                }
                let mut pos = n_mor;
                loop {
                    if pos == 0 {
                        break 'mor;
                    }
                    pos -= 1;
                    mor[pos] += 1;
                    if mor[pos] < n_mor {
                        continue 'mor;
                    }
                    mor[pos] = 0;
                }
            }
            let mut pos = n_obj;
            loop {
                if pos == 0 {
                    break 'obj;
                }
                pos -= 1;
                obj[pos] += 1;
                if obj[pos] < n_obj {
                    continue 'obj;
                }
                obj[pos] = 0;
            }
        }
        if accepted != emitted {
            ok = false;
            detail = format!("{name}: functor accept-set differs from emit-set");
        }

        // monads: raw (mu, eta) tables over every valid carrier
        let monads_emitted = enumerate_monads(&c, DEFAULT_BOUND).unwrap();
        let mut monads_accepted = Vec::new();
        for t in &emitted {
            let tt = compose_functors(t, t).unwrap();
            let id = FunctorData::identity(&c);
            let mut mu = vec![0usize; n_obj];
            'mu: loop {
                let mut eta = vec![0usize; n_obj];
                'eta: loop {
                    let cand = MonadData {
                        functor: t.clone(),
                        mu: NatTransData {
                            source: tt.clone(),
                            target: t.clone(),
                            components: mu.clone(),
                        },
                        eta: NatTransData {
                            source: id.clone(),
                            target: t.clone(),
                            components: eta.clone(),
                        },
                    };
                    if validate_monad(&cand).unwrap().ok {
                        monads_accepted.push(cand);
                    }
                    let mut pos = n_obj;
                    loop {
                        if pos == 0 {
                            break 'eta;
                        }
                        pos -= 1;
                        eta[pos] += 1;
                        if eta[pos] < n_mor {
                            continue 'eta;
                        }
                        eta[pos] = 0;
                    }
                }
                let mut pos = n_obj;
                loop {
                    if pos == 0 {
                        break 'mu;
                    }
                    pos -= 1;
                    mu[pos] += 1;
                    if mu[pos] < n_mor {
                        continue 'mu;
                    }
                    mu[pos] = 0;
                }
            }
        }
        if monads_accepted != monads_emitted {
            ok = false;
            detail = format!("{name}: monad accept-set differs from emit-set");
        }

        // laws: raw component tables for every (monad, companion) pair,
        // with both endofunctor and comonad companions
        let comonads = enumerate_comonads(&c, DEFAULT_BOUND).unwrap();
        let mut companions: Vec<Companion> = emitted
            .iter()
            .map(|g| Companion::Endofunctor(g.clone()))
            .collect();
        companions.extend(comonads.iter().map(|w| Companion::Comonad(w.clone())));
        for t in &monads_emitted {
            for comp in &companions {
                let g = comp.functor();
                let tg = compose_functors(&t.functor, g).unwrap();
                let gt = compose_functors(g, &t.functor).unwrap();
                let laws_emitted = enumerate_dist_laws(t, comp, DEFAULT_BOUND).unwrap();
                let mut laws_accepted = Vec::new();
                let mut l = vec![0usize; n_obj];
                'law: loop {
                    let cand = DistLawData {
                        monad: t.clone(),
                        companion: comp.clone(),
                        law: NatTransData {
                            source: tg.clone(),
                            target: gt.clone(),
                            components: l.clone(),
                        },
                    };
                    if validate_dist_law(&cand).unwrap().ok {
                        laws_accepted.push(cand);
                    }
                    let mut pos = n_obj;
                    loop {
                        if pos == 0 {
                            break 'law;
                        }
                        pos -= 1;
                        l[pos] += 1;
                        if l[pos] < n_mor {
                            continue 'law;
                        }
                        l[pos] = 0;
                    }
                }
                if laws_accepted != laws_emitted {
                    ok = false;
                    detail = format!("{name}: law accept-set differs from emit-set");
                }
            }
        }
    }
    criterion(
        2,
        "oracle equivalence of accept-sets and emit-sets",
        ok,
        if detail.is_empty() { "exact equality".into() } else { detail },
    );
}

#[test]
fn criterion_3_em_counts() {
    let chain = Arc::new(FinCategory::chain(3));
    let closure = MonadData::closure(&chain, &[1, 1, 2]).unwrap();
    let em_closure = build_em(&closure).unwrap();

    let z2 = Arc::new(FinCategory::z2());
    let id = FunctorData::identity(&z2);
    let s = NatTransData {
        source: id.clone(),
        target: id.clone(),
        components: vec![1],
    };
    let s_monad = MonadData {
        functor: id,
        mu: s.clone(),
        eta: s,
    };
    let em_s = build_em(&s_monad).unwrap();

    // brute-force algebra counts, independent of build_em
    let brute = |m: &MonadData| -> usize {
        let c = m.base();
        let mut count = 0;
        for carrier in 0..c.objects {
            for action in 0..c.morphisms.len() {
                if c.src(action) != m.functor.object_map[carrier] || c.tgt(action) != carrier {
                    continue;
                }
                let unit_ok = catlaw::fincat::compose(c, action, m.eta.components[carrier])
                    .unwrap()
                    == c.identity[carrier];
                let assoc_ok = catlaw::fincat::compose(
                    c,
                    action,
                    m.functor.morphism_map[action],
                )
                .unwrap()
                    == catlaw::fincat::compose(c, action, m.mu.components[carrier]).unwrap();
                if unit_ok && assoc_ok {
                    count += 1;
                }
            }
        }
        count
    };

    let ok = em_closure.algebras.len() == 2
        && em_s.algebras.len() == 1
        && brute(&closure) == 2
        && brute(&s_monad) == 1;
    criterion(
        3,
        "EM object counts",
        ok,
        format!(
            "closure em = {}, z2 s-monad em = {}",
            em_closure.algebras.len(),
            em_s.algebras.len()
        ),
    );
}

#[test]
fn criterion_4_correspondence_suite() {
    let mut acc = Report::ok();
    for (_, c) in test_categories() {
        let monads = enumerate_monads(&c, DEFAULT_BOUND).unwrap();
        let ems: Vec<EMConstruction> = monads.iter().map(|m| build_em(m).unwrap()).collect();
        for (t, em_t) in monads.iter().zip(&ems) {
            for (t2, em_t2) in monads.iter().zip(&ems) {
                acc.merge(
                    check_same_base_roundtrip(t, t2, em_t, em_t2, DEFAULT_BOUND).unwrap(),
                );
            }
        }
        acc.merge(check_contravariant_functoriality(&c, DEFAULT_BOUND).unwrap());
    }
    criterion(
        4,
        "mutually inverse correspondence and contravariant functoriality",
        acc.ok,
        format!("counts: {:?}", acc.counts),
    );
}

/// All distributive laws on a category with plain endofunctor companions.
fn law_triples(c: &Arc<FinCategory>) -> Vec<DistLawData> {
    let monads = enumerate_monads(c, DEFAULT_BOUND).unwrap();
    let functors = enumerate_functors(c, DEFAULT_BOUND).unwrap();
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

/// All maps of pairs between monoid-PRO representations on one category.
/// Sides are validated once; candidates are filtered by the coherence
/// check (hexagon and multigons).
fn enumerate_pair_maps(c: &Arc<FinCategory>, laws: &[DistLawData]) -> Vec<PairMapData> {
    let functors = enumerate_functors(c, DEFAULT_BOUND).unwrap();
    let sides: Vec<ProPairData> = laws
        .iter()
        .map(|law| {
            let side = ProPairData {
                rep: rep_from_monad(&law.monad),
                law: law.clone(),
            };
            assert!(
                catlaw::pro::validate_representation(&side.rep).unwrap().ok
                    && validate_dist_law(&side.law).unwrap().ok
            );
            side
        })
        .collect();
    let mut out = Vec::new();
    for t_side in &sides {
        for s_side in &sides {
            for k in &functors {
                let kg = compose_functors(k, s_side.law.companion.functor()).unwrap();
                let gk = compose_functors(t_side.law.companion.functor(), k).unwrap();
                let tk = compose_functors(&t_side.law.monad.functor, k).unwrap();
                let ks = compose_functors(k, &s_side.law.monad.functor).unwrap();
                for zeta in enumerate_nat_trans(&kg, &gk, DEFAULT_BOUND).unwrap() {
                    for alpha in enumerate_nat_trans(&tk, &ks, DEFAULT_BOUND).unwrap() {
                        let p = PairMapData {
                            k: k.clone(),
                            zeta: zeta.clone(),
                            alpha,
                            t_side: t_side.clone(),
                            s_side: s_side.clone(),
                        };
                        if check_pair_map_coherence(&p).unwrap().ok {
                            out.push(p);
                        }
                    }
                }
            }
        }
    }
    out
}

#[test]
fn criterion_5_theorem_suites() {
    let mut acc = Report::ok();

    for (_, c) in test_categories() {
        let monads = enumerate_monads(&c, DEFAULT_BOUND).unwrap();
        let ems: Vec<EMConstruction> = monads.iter().map(|m| build_em(m).unwrap()).collect();
        let laws = law_triples(&c);

        // vertical agreement and the eps identity over every monad pair
        for (t, em_t) in monads.iter().zip(&ems) {
            for (t2, em_t2) in monads.iter().zip(&ems) {
                for alpha in
                    catlaw::oracle::enumerate_monad_maps_same_base(t, t2, DEFAULT_BOUND).unwrap()
                {
                    acc.merge(check_vertical_agreement(&alpha, t, t2).unwrap());
                    acc.count("vertical-agreement-instances", 1);
                }
                for h in enumerate_em_functors_over_u(em_t, em_t2).unwrap() {
                    acc.merge(check_eps_identity(&h, em_t, em_t2).unwrap());
                    acc.count("eps-identity-instances", 1);
                }
            }
        }

        // (D1M) over every pair of laws with a shared companion and every
        // equivariant H over the forgetfuls; (D1Ma) over every morphism of
        // laws
        for (i, d) in laws.iter().enumerate() {
            let em_t = &ems[monads.iter().position(|m| *m == d.monad).unwrap()];
            let gt = lift_from_law(d, em_t).unwrap().endofunctor;
            for d2 in &laws {
                if d.companion != d2.companion {
                    continue;
                }
                let em_t2 = &ems[monads.iter().position(|m| *m == d2.monad).unwrap()];
                let gt2 = lift_from_law(d2, em_t2).unwrap().endofunctor;
                for h in enumerate_em_functors_over_u(em_t, em_t2).unwrap() {
                    let lhs = compose_functors(&gt, &h).unwrap();
                    let rhs = compose_functors(&h, &gt2).unwrap();
                    if lhs != rhs {
                        continue;
                    }
                    acc.merge(check_mixed_pentagon_h(d, d2, &h, em_t, em_t2).unwrap());
                    acc.count("d1m-instances", 1);
                }
                for alpha in catlaw::oracle::enumerate_monad_maps_same_base(
                    &d.monad,
                    &d2.monad,
                    DEFAULT_BOUND,
                )
                .unwrap()
                {
                    let m = DistrMorphism {
                        source: d.clone(),
                        target: d2.clone(),
                        alpha,
                    };
                    if !validate_distr_morphism(&m).unwrap().ok {
                        continue;
                    }
                    acc.merge(check_mixed_pentagon_alpha(&m).unwrap());
                    acc.count("d1ma-instances", 1);
                }
            }
            let _ = i;
        }

        // pair maps: heptagon, composition, power lemma, cube
        let pair_maps = enumerate_pair_maps(&c, &laws);
        acc.count("pair-maps", pair_maps.len() as u64);
        for p in &pair_maps {
            for gen in &p.t_side.rep.pro.generators {
                if gen.dom == 0 {
                    continue;
                }
                acc.merge(check_mixed_heptagon(p, &gen.name).unwrap());
                acc.count("heptagon-instances", 1);
            }
        }
        // composites keep their (already validated) sides, so the
        // Proposition's content is the coherence of the composite data
        for outer in &pair_maps {
            for inner in &pair_maps {
                if inner.s_side != outer.t_side {
                    continue;
                }
                let composite = compose_pair_maps(outer, inner).unwrap();
                let report = check_pair_map_coherence(&composite).unwrap();
                if !report.ok {
                    acc.push("pair-composition", "composite fails validation".to_string());
                }
                acc.merge(check_power_lemma(outer, inner, 3).unwrap());
                acc.count("composition-instances", 1);
            }
        }
        for from in &pair_maps {
            for to in &pair_maps {
                if from.t_side != to.t_side || from.s_side != to.s_side {
                    continue;
                }
                for sigma in enumerate_nat_trans(&from.k, &to.k, DEFAULT_BOUND).unwrap() {
                    let tr = PairTransformation {
                        from: from.clone(),
                        to: to.clone(),
                        sigma,
                    };
                    if !validate_pair_transformation(&tr).unwrap().ok {
                        continue;
                    }
                    acc.merge(check_cube(&tr).unwrap());
                    acc.count("cube-instances", 1);
                }
            }
        }
    }

    criterion(
        5,
        "theorem suites at 100%",
        acc.ok,
        format!("counts: {:?}, violations: {:?}", acc.counts, acc.violations),
    );
}

#[test]
fn criterion_6_multigon_shapes() {
    let mut ok = true;
    let mut detail = String::new();
    let mut pentagon_seen = 0u64;
    let mut coincidences = 0u64;

    for (name, c) in test_categories() {
        // counital side: a pentagon for delta and a triangle for eps on
        // every enumerated comonad law
        let monads = enumerate_monads(&c, DEFAULT_BOUND).unwrap();
        let comonads = enumerate_comonads(&c, DEFAULT_BOUND).unwrap();
        for t in &monads {
            for w in &comonads {
                let rep_w = rep_from_comonad(w);
                for d in
                    enumerate_dist_laws(t, &Companion::Comonad(w.clone()), DEFAULT_BOUND).unwrap()
                {
                    let pentagon =
                        generate_multigon(&rep_w, "delta", &t.functor, &d.law).unwrap();
                    let triangle = generate_multigon(&rep_w, "eps", &t.functor, &d.law).unwrap();
                    if pentagon.edge_count() != 5 || triangle.edge_count() != 3 {
                        ok = false;
                        detail = format!(
                            "{name}: delta gave {} edges, eps gave {}",
                            pentagon.edge_count(),
                            triangle.edge_count()
                        );
                    }
                    if !check_multigon(&pentagon).unwrap().ok
                        || !check_multigon(&triangle).unwrap().ok
                    {
                        ok = false;
                        detail = format!("{name}: a valid law fails its own multigon");
                    }
                    pentagon_seen += 1;
                }
            }
        }

        // monoid side: the multigon checks coincide with the pentagon and
        // unit axioms on every raw candidate transformation
        let functors = enumerate_functors(&c, DEFAULT_BOUND).unwrap();
        for t in &monads {
            let rep_t = rep_from_monad(t);
            for g in &functors {
                let tg = compose_functors(&t.functor, g).unwrap();
                let gt = compose_functors(g, &t.functor).unwrap();
                for l in enumerate_nat_trans(&tg, &gt, DEFAULT_BOUND).unwrap() {
                    let via_multigons = validate_equivariant_rep_raw(&rep_t, g, &l).unwrap().ok;
                    let via_axioms = validate_dist_law(&DistLawData {
                        monad: t.clone(),
                        companion: Companion::Endofunctor(g.clone()),
                        law: l,
                    })
                    .unwrap()
                    .ok;
                    if via_multigons != via_axioms {
                        ok = false;
                        detail = format!("{name}: multigon and axiom checks disagree");
                    }
                    coincidences += 1;
                }
            }
        }
    }
    criterion(
        6,
        "multigon shapes and monoid coincidence",
        ok,
        if detail.is_empty() {
            format!("{pentagon_seen} comonad laws, {coincidences} candidates compared")
        } else {
            detail
        },
    );
}

#[test]
fn criterion_7_ln_consistency() {
    let mut acc = Report::ok();
    let mut laws = 0u64;
    for (_, c) in test_categories() {
        let monads = enumerate_monads(&c, DEFAULT_BOUND).unwrap();
        let functors = enumerate_functors(&c, DEFAULT_BOUND).unwrap();
        let comonads = enumerate_comonads(&c, DEFAULT_BOUND).unwrap();
        let mut companions: Vec<Companion> = functors
            .iter()
            .map(|g| Companion::Endofunctor(g.clone()))
            .collect();
        companions.extend(comonads.iter().map(|w| Companion::Comonad(w.clone())));
        for t in &monads {
            for comp in &companions {
                for d in enumerate_dist_laws(t, comp, DEFAULT_BOUND).unwrap() {
                    acc.merge(check_ln_consistency(&d, 4).unwrap());
                    laws += 1;
                }
            }
        }
    }
    criterion(
        7,
        "iterated law closed form for n <= 4",
        acc.ok,
        format!("{laws} laws checked"),
    );
}

#[test]
fn criterion_8_yang_baxter_towers() {
    let mut acc = Report::ok();
    let mut braidings = 0u64;
    for (_, c) in test_categories() {
        for w in enumerate_comonads(&c, DEFAULT_BOUND).unwrap() {
            let gg = compose_functors(&w.functor, &w.functor).unwrap();
            for l in enumerate_nat_trans(&gg, &gg, DEFAULT_BOUND).unwrap() {
                if !is_strong_braiding(&l, &w).unwrap() {
                    continue;
                }
                braidings += 1;
                for n in 1..=3 {
                    let tower = braided_tower(&l, &w, n).unwrap();
                    acc.merge(validate_comonad_law(&tower).unwrap());
                    acc.count("towers", 1);
                }
            }
        }
    }
    criterion(
        8,
        "strong braiding towers",
        acc.ok && braidings > 0,
        format!("{braidings} strong braidings, counts: {:?}", acc.counts),
    );
}
