//! Oracle tests for the pivot decomposition, saddle detection, and the
//! recursive decomposition driver.

use std::collections::BTreeSet;

use pfs_core::axioms::{validate, validate_subset};
use pfs_core::decompose::*;
use pfs_core::fixtures;
use pfs_core::structure_ops::{alpha, codomain_subset, size, unique_iso};

fn set(items: &[&str]) -> BTreeSet<String> {
    items.iter().map(|s| s.to_string()).collect()
}

#[test]
fn p2_decomposition() {
    let p2 = validate(&fixtures::p2()).unwrap();
    let all = p2.hypergraph().face_set();
    assert_eq!(down(&p2, &all, "m").unwrap(), set(&["u", "m", "e1"]));
    assert_eq!(up(&p2, &all, "m").unwrap(), set(&["m", "v", "e2"]));
    assert_eq!(saddles_of(&p2), set(&["m"]));

    let tree = decompose_fully(&p2);
    assert_eq!(
        tree,
        CompositionTree::Node {
            level: 0,
            down: Box::new(CompositionTree::Leaf(set(&["u", "m", "e1"]))),
            up: Box::new(CompositionTree::Leaf(set(&["m", "v", "e2"]))),
        }
    );
    let rebuilt = evaluate(&p2, &tree);
    assert!(unique_iso(&rebuilt, &p2).is_some());
}

#[test]
fn alpha_is_indecomposable() {
    for n in 0..5 {
        let a = alpha(n);
        assert_eq!(saddles_of(&a), BTreeSet::new());
        assert_eq!(
            decompose_fully(&a),
            CompositionTree::Leaf(a.hypergraph().face_set())
        );
    }
    let nb = validate(&fixtures::path_n_bullet()).unwrap();
    assert_eq!(saddles_of(&nb), BTreeSet::new());
}

#[test]
fn alpha4_pivot_six() {
    let a4 = alpha(4);
    let all = a4.hypergraph().face_set();
    assert_eq!(down(&a4, &all, "6").unwrap(), all);
    assert_eq!(
        up(&a4, &all, "6").unwrap(),
        codomain_subset(a4.hypergraph(), 3)
    );
    // The whole structure comes back on one side: not a saddle.
    assert!(!is_saddle(&a4, &all, "6"));
}

#[test]
fn path_decomposition() {
    let n = validate(&fixtures::path_n()).unwrap();
    let all = n.hypergraph().face_set();
    assert_eq!(saddles_of(&n), set(&["x1", "x2"]));
    assert_eq!(
        down(&n, &all, "x1").unwrap(),
        set(&["x1", "x2", "x3", "f1", "f2"])
    );
    assert_eq!(up(&n, &all, "x1").unwrap(), set(&["x0", "x1", "f0"]));

    // Deterministic driver: the earlier vertex x2 splits first.
    let tree = decompose_fully(&n);
    assert_eq!(
        tree,
        CompositionTree::Node {
            level: 0,
            down: Box::new(CompositionTree::Leaf(set(&["x2", "x3", "f2"]))),
            up: Box::new(CompositionTree::Node {
                level: 0,
                down: Box::new(CompositionTree::Leaf(set(&["x1", "x2", "f1"]))),
                up: Box::new(CompositionTree::Leaf(set(&["x0", "x1", "f0"]))),
            }),
        }
    );
    assert!(unique_iso(&evaluate(&n, &tree), &n).is_some());
}

#[test]
fn pivot_errors() {
    let t = validate(&fixtures::intro_t()).unwrap();
    let all = t.hypergraph().face_set();
    // y2 ∈ ι(β): the up part would not be closed under δ.
    assert_eq!(
        down(&t, &all, "y2").err(),
        Some(DecompError::PivotInternal("y2".into()))
    );
    let sub = t.hypergraph().span(&set(&["b3"]));
    assert_eq!(
        up(&t, &sub, "y1").err(),
        Some(DecompError::PivotAbsent("y1".into()))
    );
    assert_eq!(
        down(&t, &all, "zz").err(),
        Some(DecompError::UnknownFace("zz".into()))
    );
}

#[test]
fn decomposition_invariants_on_fixtures() {
    // For every admissible pivot of every fixture: both parts validate,
    // X = down ∪ up, and the gluing boundary is down ∩ up.
    let shapes = [
        fixtures::intro_s(),
        fixtures::intro_t(),
        fixtures::path_n(),
        fixtures::path_n_bullet(),
        fixtures::p2(),
    ];
    for h in shapes {
        let x = validate(&h).unwrap();
        let all = h.face_set();
        let internal = h.iota_all();
        for a in h.faces().filter(|a| !internal.contains(*a)) {
            let d = decompose(&x, &all, a).unwrap();
            let down_s = validate_subset(&h, &d.down)
                .unwrap_or_else(|e| panic!("down part at {a} invalid:\n{e}"));
            let up_s = validate_subset(&h, &d.up)
                .unwrap_or_else(|e| panic!("up part at {a} invalid:\n{e}"));
            let union: BTreeSet<_> = d.down.union(&d.up).cloned().collect();
            assert_eq!(union, all, "pivot {a}: union is not X");
            let inter: BTreeSet<_> = d.down.intersection(&d.up).cloned().collect();
            let c_down = codomain_subset(down_s.hypergraph(), d.level);
            let d_up = pfs_core::structure_ops::domain_subset(up_s.hypergraph(), d.level);
            assert_eq!(c_down, inter, "pivot {a}: c of down is not the overlap");
            assert_eq!(d_up, inter, "pivot {a}: d of up is not the overlap");
        }
    }
}

#[test]
fn saddle_criterion_matches_definition() {
    // a is a saddle iff some codomain at the level above lands ≤⁺ a and
    // some other does not.
    let shapes = [
        fixtures::intro_s(),
        fixtures::intro_t(),
        fixtures::path_n(),
        fixtures::path_n_bullet(),
        fixtures::p2(),
    ];
    for h in shapes {
        let x = validate(&h).unwrap();
        let internal = h.iota_all();
        let saddles = saddles_of(&x);
        for a in h.faces().filter(|a| !internal.contains(*a)) {
            let l = h.dim_of(a).unwrap();
            let above: Vec<_> = h.level(l + 1).iter().collect();
            let some_le = above
                .iter()
                .any(|al| x.orders().le_plus(h.gamma(al).unwrap(), a).unwrap());
            let some_not_le = above
                .iter()
                .any(|al| !x.orders().le_plus(h.gamma(al).unwrap(), a).unwrap());
            assert_eq!(
                saddles.contains(a),
                some_le && some_not_le,
                "criterion mismatch at {a} in\n{h}"
            );
        }
    }
}

#[test]
fn evaluation_is_order_independent() {
    for h in [fixtures::path_n(), fixtures::p2(), fixtures::intro_s()] {
        let x = validate(&h).unwrap();
        let results = evaluate_all_orders(&x);
        assert!(!results.is_empty());
        for r in &results {
            assert!(
                unique_iso(r, &results[0]).is_some(),
                "saddle orders disagree on\n{h}"
            );
        }
        assert!(unique_iso(&results[0], &x).is_some());
    }
}

#[test]
fn round_trip_on_fixtures() {
    for h in [
        fixtures::intro_s(),
        fixtures::intro_t(),
        fixtures::path_n(),
        fixtures::path_n_bullet(),
        fixtures::p2(),
    ] {
        let x = validate(&h).unwrap();
        let tree = decompose_fully(&x);
        assert!(unique_iso(&evaluate(&x, &tree), &x).is_some());
        assert_eq!(tree.faces(), h.face_set());
    }
}

#[test]
fn size_arithmetic_of_composition() {
    use pfs_core::structure_ops::{special_pushout, Size};
    let a1 = alpha(1);
    let glued = special_pushout(&a1, &a1, 0).unwrap();
    assert_eq!(
        size(&glued),
        composed_size(&size(&a1), &size(&a1), 0)
    );
    assert_eq!(size(&glued), Size(vec![1, 2]));

    let a2 = alpha(2);
    let vert = special_pushout(&a2, &a2, 1).unwrap();
    assert_eq!(size(&vert), composed_size(&size(&a2), &size(&a2), 1));
}
