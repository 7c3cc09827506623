//! Oracle tests for the hypergraph layer, the orders, and the axiom
//! checkers, pinned against hand-computed values on the fixture shapes.

use std::collections::BTreeSet;

use pfs_core::axioms::{is_weak_pfs, validate};
use pfs_core::fixtures;
use pfs_core::hypergraph::{HgMorphism, PositiveHypergraph};
use pfs_core::orders::{extend_maximal_lower_path, find_upper_path, sort_level, Sign};
use pfs_core::structure_ops::alpha;

fn set(items: &[&str]) -> BTreeSet<String> {
    items.iter().map(|s| s.to_string()).collect()
}

#[test]
fn fixture_boundary_operators() {
    let s = fixtures::intro_s();
    assert_eq!(s.gamma("a1"), Some(&"x4".to_string()));
    assert_eq!(s.image("gg", &set(&["a1"])).unwrap(), set(&["s3"]));
    assert_eq!(s.image("dg", &set(&["a1"])).unwrap(), set(&["s7"]));
    assert_eq!(s.image("gd", &set(&["a1"])).unwrap(), set(&["s3", "s4", "s6"]));
    assert_eq!(s.image("dd", &set(&["a1"])).unwrap(), set(&["s4", "s6", "s7"]));
    assert_eq!(s.theta("a2").unwrap(), set(&["x6", "x7", "x8"]));

    let t = fixtures::intro_t();
    assert_eq!(t.iota_face("beta").unwrap(), set(&["y2", "y3"]));
    assert_eq!(t.image("gg", &set(&["beta"])).unwrap(), set(&["y0"]));
    assert_eq!(
        t.image("dd", &set(&["beta"])).unwrap(),
        set(&["y1", "y2", "y3", "y4", "y5", "y6"])
    );
    assert_eq!(t.image("gd", &set(&["beta"])).unwrap(), set(&["y0", "y2", "y3"]));
    assert_eq!(t.image("dg", &set(&["beta"])).unwrap(), set(&["y1", "y4", "y5", "y6"]));
}

#[test]
fn span_and_restrict() {
    let t = fixtures::intro_t();
    let span = t.span(&set(&["b2"]));
    assert_eq!(span, set(&["b2", "y2", "y3", "y6", "t1", "t3", "t4"]));
    assert!(t.is_closed(&span));
    let sub = t.restrict(&span);
    assert_eq!(sub.dim(), Some(2));
    assert_eq!(sub.face_count(), 7);

    let not_closed = set(&["beta"]);
    assert!(!t.is_closed(&not_closed));
}

#[test]
fn truncation_keeps_lower_levels() {
    let nb = fixtures::path_n_bullet();
    let trunc = nb.truncate(1);
    assert_eq!(trunc.dim(), Some(1));
    assert_eq!(
        trunc.face_set(),
        set(&["x0", "x1", "x2", "x3", "f0", "f1", "f2", "p1"])
    );
}

#[test]
fn one_step_orders_on_paths() {
    let n = validate(&fixtures::path_n()).unwrap();
    let o = n.orders();
    assert!(o.lhd_minus("f2", "f1").unwrap());
    assert!(!o.lhd_minus("f2", "f0").unwrap());
    assert!(o.lt_minus("f2", "f0").unwrap());
    assert!(!o.lt_minus("f0", "f2").unwrap());
    // Vertices: x3 <+ x2 <+ x1 <+ x0 via the edges.
    assert!(o.lt_plus("x3", "x0").unwrap());
    assert!(!o.lt_plus("x0", "x3").unwrap());

    let nb = validate(&fixtures::path_n_bullet()).unwrap();
    let o = nb.orders();
    assert!(o.lhd_plus("f1", "p1").unwrap()); // witness p2
    assert!(!o.perp(Sign::Minus, "f0", "p1").unwrap());
    assert!(o.perp(Sign::Plus, "f0", "p1").unwrap());
}

#[test]
fn global_order_sorting() {
    let nb = validate(&fixtures::path_n_bullet()).unwrap();
    assert_eq!(sort_level(&nb, 1), vec!["f2", "f1", "f0", "p1"]);

    let a4 = alpha(4);
    assert!(a4.orders().lhd_plus("7", "6").unwrap()); // witness 8
    assert_eq!(sort_level(&a4, 0), vec!["1", "0"]);
}

#[test]
fn upper_paths() {
    let a4 = alpha(4).hypergraph().clone();
    assert_eq!(
        find_upper_path(&a4, "1", "0", &set(&["2"])),
        Some(vec!["1".to_string(), "2".to_string(), "0".to_string()])
    );
    assert_eq!(find_upper_path(&a4, "0", "1", &set(&["2", "3"])), None);

    let nb = fixtures::path_n_bullet();
    assert_eq!(
        find_upper_path(&nb, "x3", "x0", &set(&["p1"])),
        Some(vec!["x3".to_string(), "p1".to_string(), "x0".to_string()])
    );
    // Through the long side instead.
    assert_eq!(
        find_upper_path(&nb, "x3", "x0", &set(&["f0", "f1", "f2"])),
        Some(vec![
            "x3".to_string(),
            "f2".to_string(),
            "f1".to_string(),
            "f0".to_string(),
            "x0".to_string()
        ])
    );
}

#[test]
fn maximal_lower_paths() {
    let p2 = fixtures::p2();
    let ext = extend_maximal_lower_path(&p2, &["e1".to_string()]).unwrap();
    assert_eq!(ext, vec!["e1".to_string(), "e2".to_string()]);
    let ext = extend_maximal_lower_path(&p2, &["e2".to_string()]).unwrap();
    assert_eq!(ext, vec!["e1".to_string(), "e2".to_string()]);

    let n = fixtures::path_n();
    let ext = extend_maximal_lower_path(&n, &["f1".to_string()]).unwrap();
    assert_eq!(
        ext,
        vec!["f2".to_string(), "f1".to_string(), "f0".to_string()]
    );
    // Not a lower path: f0 then f2.
    assert!(extend_maximal_lower_path(&n, &["f0".to_string(), "f2".to_string()]).is_err());
}

#[test]
fn fixtures_validate() {
    for h in [
        fixtures::intro_s(),
        fixtures::intro_t(),
        fixtures::path_n(),
        fixtures::path_n_bullet(),
        fixtures::p2(),
    ] {
        assert!(validate(&h).is_ok(), "fixture failed validation:\n{h}");
    }
}

#[test]
fn truncation_is_weak_but_can_lose_pencil_linearity() {
    // Cutting the 3-face off the 3-dimensional fixture removes the only
    // witness ordering the 2-face pencils, so only the weak axioms survive.
    let t2 = fixtures::intro_t().truncate(2);
    let (weak, report) = is_weak_pfs(&t2);
    assert!(weak);
    assert!(!report.pencil_linearity.is_empty());
    assert!(validate(&t2).is_err());
}

#[test]
fn parallel_edges_fail_pencil_linearity_only() {
    let h = PositiveHypergraph::from_tables(
        &[&["u", "v"], &["e", "f"]],
        &[("e", &["u"], "v"), ("f", &["u"], "v")],
    );
    let (weak, report) = is_weak_pfs(&h);
    assert!(weak);
    assert!(!report.pencil_linearity.is_empty());
}

#[test]
fn two_cycle_fails_strictness() {
    let h = PositiveHypergraph::from_tables(
        &[&["u", "v"], &["e", "f"]],
        &[("e", &["u"], "v"), ("f", &["v"], "u")],
    );
    let (weak, report) = is_weak_pfs(&h);
    assert!(!weak);
    assert!(!report.strictness.is_empty());
}

#[test]
fn disconnected_vertices_fail_zero_linearity() {
    let h = PositiveHypergraph::from_tables(&[&["u", "v"]], &[]);
    let (weak, report) = is_weak_pfs(&h);
    assert!(!weak);
    assert!(!report.strictness.is_empty());
}

#[test]
fn empty_hypergraph_fails_nonempty() {
    let h = PositiveHypergraph::build(Vec::new(), Vec::new(), Vec::new()).unwrap();
    let (weak, report) = is_weak_pfs(&h);
    assert!(!weak);
    assert!(!report.nonempty.is_empty());
}

#[test]
fn broken_globularity_is_reported() {
    // Same tables as the 2-dimensional fixture but a2's codomain swapped
    // to x5, breaking both globularity equations at a2.
    let h = PositiveHypergraph::from_tables(
        &[
            &["s0", "s1", "s2", "s3", "s4", "s5", "s6", "s7"],
            &["x0", "x1", "x2", "x3", "x4", "x5", "x6", "x7", "x8", "x9"],
            &["a0", "a1", "a2"],
        ],
        &[
            ("x0", &["s2"], "s0"),
            ("x1", &["s1"], "s0"),
            ("x2", &["s2"], "s1"),
            ("x3", &["s3"], "s2"),
            ("x4", &["s7"], "s3"),
            ("x5", &["s4"], "s3"),
            ("x6", &["s6"], "s4"),
            ("x7", &["s5"], "s4"),
            ("x8", &["s6"], "s5"),
            ("x9", &["s7"], "s6"),
            ("a0", &["x1", "x2"], "x0"),
            ("a1", &["x5", "x6", "x9"], "x4"),
            ("a2", &["x7", "x8"], "x5"),
        ],
    );
    let (_, report) = is_weak_pfs(&h);
    assert!(report
        .globularity
        .iter()
        .any(|v| v.faces.contains(&"a2".to_string())));
}

#[test]
fn morphism_validation() {
    let n = fixtures::path_n();
    assert!(HgMorphism::identity(&n).validate().is_ok());

    let span = n.span(&set(&["f1"]));
    let incl = HgMorphism::inclusion(&n, &span);
    assert!(incl.validate().is_ok());
    assert_eq!(incl.source.face_set(), set(&["f1", "x1", "x2"]));

    // Collapsing two vertices breaks the delta bijection on f1.
    let mut bad = HgMorphism::identity(&n);
    bad.map.insert("x2".to_string(), "x1".to_string());
    assert!(bad.validate().is_err());
}
