//! Oracle tests for canonical forms, isomorphism testing, morphism
//! enumeration, and the bounded exhaustive generator.

use std::collections::BTreeSet;

use pfs_core::axioms::validate;
use pfs_core::enumerate::*;
use pfs_core::fixtures;
use pfs_core::structure_ops::{alpha, is_principal, size, unique_iso};

#[test]
fn canonical_form_is_idempotent_and_rank_based() {
    let nb = validate(&fixtures::path_n_bullet()).unwrap();
    let canon = canonical_form(&nb);
    // 1-faces in global order: f2 < f1 < f0 < p1, so f2 ↦ d1_0 … p1 ↦ d1_3.
    let h = canon.hypergraph();
    assert_eq!(
        h.level(1).iter().cloned().collect::<Vec<_>>(),
        vec!["d1_0", "d1_1", "d1_2", "d1_3"]
    );
    assert_eq!(h.gamma("d2_0").unwrap(), "d1_3");
    assert_eq!(
        h.delta("d2_0").unwrap(),
        &["d1_0", "d1_1", "d1_2"]
            .iter()
            .map(|s| s.to_string())
            .collect::<BTreeSet<_>>()
    );
    let again = canonical_form(&canon);
    assert_eq!(again.hypergraph(), canon.hypergraph());
}

#[test]
fn canonical_form_is_isomorphism_invariant() {
    // N written with scrambled names canonicalizes to the same tables.
    use pfs_core::hypergraph::PositiveHypergraph;
    let n = validate(&fixtures::path_n()).unwrap();
    let scrambled = validate(&PositiveHypergraph::from_tables(
        &[&["alpha", "bee", "sea", "dee"], &["z", "q", "aa"]],
        &[
            ("z", &["bee"], "dee"),
            ("q", &["sea"], "bee"),
            ("aa", &["alpha"], "sea"),
        ],
    ))
    .unwrap();
    assert_eq!(
        canonical_form(&n).hypergraph(),
        canonical_form(&scrambled).hypergraph()
    );
    assert!(iso_equal(&n, &scrambled));
    assert!(!iso_equal(&n, &alpha(1)));
}

#[test]
fn morphism_counts() {
    // Two ways to send a point into an edge.
    assert_eq!(enumerate_morphisms(&alpha(0), &alpha(1)).len(), 2);
    // No dimension-preserving map from an edge to a point.
    assert_eq!(enumerate_morphisms(&alpha(1), &alpha(0)).len(), 0);
    // Rigidity: a structure has exactly its identity endomorphism.
    for s in [
        alpha(2),
        validate(&fixtures::path_n()).unwrap(),
        validate(&fixtures::path_n_bullet()).unwrap(),
        validate(&fixtures::intro_s()).unwrap(),
    ] {
        let endos = enumerate_morphisms(&s, &s);
        assert_eq!(endos.len(), 1, "non-identity endomorphism on\n{}", s.hypergraph());
        let id: std::collections::BTreeMap<_, _> = s
            .hypergraph()
            .faces()
            .map(|f| (f.clone(), f.clone()))
            .collect();
        assert_eq!(endos[0].map, id);
    }
    // Three edge-images of an edge into the three-edge path.
    let n = validate(&fixtures::path_n()).unwrap();
    assert_eq!(enumerate_morphisms(&alpha(1), &n).len(), 3);
}

#[test]
fn tiny_catalogs() {
    let c = enumerate_pfs(&Bounds::new(0, 1)).unwrap();
    assert_eq!(c.entries.len(), 1);
    assert!(unique_iso(&c.entries[0], &alpha(0)).is_some());

    // Up to one dimension with at most two faces per level: only the
    // vertex and the single edge are valid.
    let c = enumerate_pfs(&Bounds::new(1, 2)).unwrap();
    assert_eq!(c.entries.len(), 2);
    assert!(c.entries.iter().any(|e| iso_equal(e, &alpha(0))));
    assert!(c.entries.iter().any(|e| iso_equal(e, &alpha(1))));
}

#[test]
fn catalog_entries_are_canonical_valid_and_distinct() {
    let c = enumerate_pfs(&Bounds::new(2, 3)).unwrap();
    let mut seen = BTreeSet::new();
    for e in &c.entries {
        assert_eq!(canonical_form(e).hypergraph(), e.hypergraph());
        assert!(e.dim() <= 2);
        assert!((0..=e.dim()).all(|k| e.hypergraph().level(k).len() <= 3));
        assert!(seen.insert(e.hypergraph().clone()));
    }
}

#[test]
fn layered_matches_naive_generator() {
    for bounds in [Bounds::new(1, 3), Bounds::new(2, 2)] {
        let layered = enumerate_pfs(&bounds).unwrap();
        let naive = naive_enumerate(&bounds);
        let a: Vec<_> = layered.entries.iter().map(|e| e.hypergraph()).collect();
        let b: Vec<_> = naive.iter().map(|e| e.hypergraph()).collect();
        assert_eq!(a, b, "generators disagree at {bounds:?}");
    }
}

#[test]
fn frozen_regression_counts() {
    // First-run reference values, kept as a change detector.
    let c22 = enumerate_pfs(&Bounds::new(2, 2)).unwrap();
    assert_eq!(c22.counts_by_dim(), vec![1, 1, 1], "dim ≤ 2, ≤ 2 faces/dim");
    let c23 = enumerate_pfs(&Bounds::new(2, 3)).unwrap();
    assert_eq!(
        c23.counts_by_dim(),
        vec![1, 2, 5],
        "dim ≤ 2, ≤ 3 faces/dim"
    );
    // The globes appear, and at each dimension exactly one entry is a globe.
    for d in 0..=2 {
        let globes = c23
            .entries
            .iter()
            .filter(|e| e.dim() == d && iso_equal(e, &alpha(d)))
            .count();
        assert_eq!(globes, 1);
    }
    // Principal entries of dimension 2: the globe, plus the 2-face whose
    // domain is a two-edge path (principal but not a globe).
    let principal2 = c23
        .entries
        .iter()
        .filter(|e| e.dim() == 2 && is_principal(e))
        .count();
    assert_eq!(principal2, 2);
    assert!(c23.entries.iter().all(|e| size(e).at(e.dim()) >= 1));
}

#[test]
fn budget_guard() {
    let bounds = Bounds::new(6, 6);
    match enumerate_pfs(&bounds) {
        Err(EnumError::BoundsTooLarge { estimate, budget }) => {
            assert!(estimate > budget);
            assert_eq!(budget, DEFAULT_BUDGET);
        }
        other => panic!("expected BoundsTooLarge, got {other:?}"),
    }
    assert!(enumerate_pfs_with_budget(&Bounds::new(1, 2), 1).is_err());
}

#[test]
fn morphism_count_is_isomorphism_invariant() {
    let n = validate(&fixtures::path_n()).unwrap();
    let canon = canonical_form(&n);
    let a1 = alpha(1);
    assert_eq!(
        enumerate_morphisms(&a1, &n).len(),
        enumerate_morphisms(&a1, &canon).len()
    );
    assert_eq!(
        enumerate_morphisms(&n, &a1).len(),
        enumerate_morphisms(&canon, &a1).len()
    );
}
