//! Property tests for the kernel generators: every preorder and every
//! finite monoid yields a valid category, monotone maps are functors, and
//! functor powers add.

use std::sync::Arc;

use catlaw::fincat::{
    compose_functors, functor_from_objects, functor_power, validate_category, validate_functor,
    FinCategory,
};
use catlaw::monad::MonadData;
use catlaw::oracle::check_interchange;
use proptest::prelude::*;

/// Reflexive-transitive closure of an arbitrary relation: a preorder,
/// hence a thin category.
fn preorder_closure(mut rel: Vec<Vec<bool>>) -> Vec<Vec<bool>> {
    let n = rel.len();
    for (i, row) in rel.iter_mut().enumerate() {
        row[i] = true;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if rel[i][k] && rel[k][j] {
                    rel[i][j] = true;
                }
            }
        }
    }
    rel
}

fn arb_relation(n: usize) -> impl Strategy<Value = Vec<Vec<bool>>> {
    prop::collection::vec(prop::collection::vec(any::<bool>(), n), n)
}

fn arb_monotone_map(n: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0..n, n).prop_map(|mut v| {
        v.sort();
        v
    })
}

proptest! {
    #[test]
    fn preorders_are_categories(rel in (1usize..5).prop_flat_map(arb_relation)) {
        let closed = preorder_closure(rel);
        let c = FinCategory::from_poset(&closed).unwrap();
        prop_assert!(validate_category(&c).unwrap().ok);
    }

    #[test]
    fn cyclic_monoids_are_categories(n in 1usize..7) {
        let table: Vec<Vec<usize>> =
            (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        let c = FinCategory::from_monoid(&table, 0).unwrap();
        prop_assert!(validate_category(&c).unwrap().ok);
    }

    #[test]
    fn monotone_maps_are_functors(
        (n, map) in (1usize..5).prop_flat_map(|n| (Just(n), arb_monotone_map(n)))
    ) {
        let c = Arc::new(FinCategory::chain(n));
        let f = functor_from_objects(&c, &c, map).unwrap();
        prop_assert!(validate_functor(&f).unwrap().ok);
    }

    #[test]
    fn functor_powers_add(
        (n, map, a, b) in (1usize..5).prop_flat_map(|n| {
            (Just(n), arb_monotone_map(n), 0usize..5, 0usize..5)
        })
    ) {
        let c = Arc::new(FinCategory::chain(n));
        let t = functor_from_objects(&c, &c, map).unwrap();
        let lhs = functor_power(&t, a + b).unwrap();
        let rhs = compose_functors(&functor_power(&t, a).unwrap(), &functor_power(&t, b).unwrap())
            .unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn inflationary_idempotent_maps_are_monads(
        (n, map) in (1usize..5).prop_flat_map(|n| (Just(n), arb_monotone_map(n)))
    ) {
        // force inflationary and idempotent, then the monad laws must hold
        let inflationary: Vec<usize> = map.iter().enumerate().map(|(i, &v)| v.max(i)).collect();
        let mut image = inflationary.clone();
        loop {
            let next: Vec<usize> = image.iter().map(|&v| inflationary[v]).collect();
            if next == image {
                break;
            }
            image = next;
        }
        let c = Arc::new(FinCategory::chain(n));
        if let Ok(m) = MonadData::closure(&c, &image) {
            prop_assert!(catlaw::monad::validate_monad(&m).unwrap().ok);
        }
    }
}

#[test]
fn interchange_holds_on_the_three_chain() {
    let c = Arc::new(FinCategory::chain(3));
    let report = check_interchange(&c, 24).unwrap();
    assert!(report.ok, "{:?}", report.violations);
    assert!(report.counts["quadruples"] > 0);
}
