//! The three routes to c-vectors checked against each other on fixtures.

mod common;

use common::*;
use cvector_core::enumeration::{bfs_exchange, oracle_cvector_collections, verify_all};
use cvector_core::exceptional::{
    all_factorizations, hurwitz_orbit, is_cluster_classes, is_cvector_collection, mu_rev, ClassSeq,
    CollectionVerdict, Factorization,
};
use cvector_core::exchange::{is_sign_coherent, MutationWord};
use cvector_core::framework::{b_from_c, check_euler, framework_mutate, CTuple};
use cvector_core::roots::RootLatticeForms;

/// Walks every tree vertex up to `depth`, comparing the matrix route and
/// the framework route label by label.
fn covering_walk(rows: &[&[i64]], depth: usize) -> usize {
    let b = exchange(rows);
    let f = RootLatticeForms::from_exchange(&b);
    let n = b.rank();
    let mut frontier = vec![(b.initial_seed(), CTuple::base(n), None::<usize>)];
    let mut visited = 0;
    for _ in 0..depth {
        let mut next = Vec::new();
        for (seed, tuple, last) in &frontier {
            for k in (0..n).filter(|&k| Some(k) != *last) {
                let s = seed.mutate(k).unwrap();
                let t = framework_mutate(&f, tuple, k).unwrap();
                assert_eq!(s.c_vectors(), t.entries(), "labelled c-vectors differ");
                assert_eq!(b_from_c(&f, &t).unwrap(), s.top(), "recovered B differs");
                assert!(check_euler(&f, &t).passed());
                assert!(s.top_is_skew_symmetrizable());
                for c in s.c_vectors() {
                    assert!(is_sign_coherent(&c));
                    assert!(
                        f.real_root_certificate(&c).is_some(),
                        "{c:?} is not a real root"
                    );
                }
                visited += 1;
                next.push((s, t, Some(k)));
            }
        }
        frontier = next;
    }
    visited
}

#[test]
fn covering_property_on_tree_walks() {
    for rows in [A2, B2, C2, G2, A1XA1, A3, B3] {
        assert!(covering_walk(rows, 8) > 0);
    }
    covering_walk(KRONECKER3, 8);
    covering_walk(&[&[0, 2, 1], &[-2, 0, 2], &[-1, -2, 0]], 6);
    covering_walk(&[&[0, 1, 0], &[-3, 0, 2], &[0, -2, 0]], 6);
}

#[test]
fn dual_oracle_equality() {
    for (name, b) in finite_fixtures() {
        if name == "A5" {
            continue;
        }
        let f = RootLatticeForms::from_exchange(&b);
        let roots = f.real_roots(20);
        assert!(roots.is_complete(), "{name}");
        let graph = bfs_exchange(&b, 40).unwrap();
        assert!(graph.is_complete(), "{name}");
        let oracle = oracle_cvector_collections(&f, &roots).unwrap();
        assert_eq!(graph.c_sets(), oracle, "{name}");
        assert!(
            graph.is_regular(b.rank()) && graph.is_connected() && graph.is_involutive(),
            "{name}"
        );
    }
}

#[test]
fn verify_harness_on_fixtures() {
    for (name, b) in finite_fixtures() {
        let report = verify_all(&b, 40);
        assert!(report.complete, "{name}");
        assert!(report.passed(), "{name}: {report:?}");
    }
    let report = verify_all(&exchange(KRONECKER3), 6);
    assert!(!report.complete);
    assert!(report.passed(), "{report:?}");
}

#[test]
fn reversal_of_noncrossing_sequences_lands_in_clusters() {
    for (name, b) in finite_fixtures() {
        let f = RootLatticeForms::from_exchange(&b);
        let roots = f.real_roots(20);
        let graph = bfs_exchange(&b, 40).unwrap();
        for key in graph.c_sets() {
            for v in &key {
                assert!(is_sign_coherent(v));
            }
            let CollectionVerdict::Accepted { order } =
                is_cvector_collection(&f, &roots, &key).unwrap()
            else {
                panic!("{name}: {key:?} rejected");
            };
            let image = mu_rev(&f, &ClassSeq::new(order)).unwrap();
            assert!(
                is_cluster_classes(&f, &roots, &image).unwrap(),
                "{name}: {image:?}"
            );
        }
    }
}

#[test]
fn reversal_of_simples_gives_shifted_projectives() {
    let b = path(5);
    let f = RootLatticeForms::from_exchange(&b);
    let image = mu_rev(&f, &ClassSeq::simples(5)).unwrap();
    let mut projectives = cvector_core::exceptional::projective_classes(&f);
    projectives.reverse();
    let shifted: Vec<_> = projectives
        .iter()
        .map(|p| cvector_core::linalg::negated(p))
        .collect();
    assert_eq!(image.classes(), &shifted[..]);
}

#[test]
fn hurwitz_transitivity() {
    for (name, b) in finite_fixtures() {
        if name == "A5" {
            continue;
        }
        let f = RootLatticeForms::from_exchange(&b);
        let roots = f.real_roots(20);
        let all = all_factorizations(&f, &roots).unwrap();
        let orbit = hurwitz_orbit(&f, &roots, &Factorization::simple(&f)).unwrap();
        assert_eq!(orbit, all, "{name}");
    }
}

#[test]
fn non_source_ordered_input_agrees_after_relabeling() {
    let reversed = exchange(&[&[0, -1, 0], &[1, 0, -1], &[0, 1, 0]]);
    let order = reversed.source_order();
    let relabeled = reversed.relabeled(&order);
    let g1 = bfs_exchange(&reversed, 40).unwrap();
    let g2 = bfs_exchange(&relabeled, 40).unwrap();
    assert_eq!(g1.vertices().len(), g2.vertices().len());
    let f = RootLatticeForms::from_exchange(&reversed);
    let roots = f.real_roots(20);
    assert_eq!(g1.c_sets(), oracle_cvector_collections(&f, &roots).unwrap());
}

#[test]
fn words_reach_the_same_c_sets_as_bfs() {
    let b = exchange(A3);
    let graph = bfs_exchange(&b, 40).unwrap();
    let seed = b.initial_seed();
    for word in [
        vec![0, 1, 2, 0, 1, 2],
        vec![2, 1, 0, 2],
        vec![1, 0, 1, 0, 1],
    ] {
        let s = seed.apply_word(&MutationWord::new(word)).unwrap();
        let key = CTuple::new(s.c_vectors()).key();
        assert!(graph.c_sets().contains(&key));
    }
}
