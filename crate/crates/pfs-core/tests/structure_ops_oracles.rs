//! Oracle tests for sizes, classification, domain/codomain operators,
//! distinguished faces, simple extensions, the α-generators, pushouts,
//! and globularization.

use std::collections::BTreeSet;

use pfs_core::axioms::validate;
use pfs_core::fixtures;
use pfs_core::structure_ops::*;

fn set(items: &[&str]) -> BTreeSet<String> {
    items.iter().map(|s| s.to_string()).collect()
}

#[test]
fn size_values_and_classification() {
    let a4 = alpha(4);
    assert_eq!(size(&a4).0, vec![1, 1, 1, 1, 1]);
    assert!(is_principal(&a4));
    assert!(is_normal(&a4));

    let n = validate(&fixtures::path_n()).unwrap();
    assert_eq!(size(&n).0, vec![1, 3]);
    assert!(is_normal(&n));
    assert!(!is_principal(&n));

    let s = validate(&fixtures::intro_s()).unwrap();
    assert_eq!(size(&s).0, vec![1, 3, 3]);
    assert!(!is_normal(&s));

    let nb = validate(&fixtures::path_n_bullet()).unwrap();
    assert_eq!(size(&nb).0, vec![1, 1, 1]);
    assert!(is_principal(&nb));
}

#[test]
fn size_order_is_reverse_lexicographic() {
    assert!(Size(vec![1, 2]) < Size(vec![1, 3]));
    assert!(Size(vec![2, 1]) < Size(vec![1, 2])); // higher dimension dominates
    assert!(Size(vec![5]) < Size(vec![1, 1]));
    assert_eq!(Size(vec![1, 1]), Size(vec![1, 1]));
}

#[test]
fn alpha_shapes() {
    for n in 0..5 {
        let a = alpha(n);
        assert_eq!(a.dim(), n);
        assert!(is_principal(&a));
        assert_eq!(size(&a).0, vec![1; n + 1]);
    }
    let a4 = alpha(4).hypergraph().clone();
    assert_eq!(a4.iota_face("8").unwrap(), set(&[]));
    assert_eq!(a4.image("dddd", &set(&["8"])).unwrap(), set(&["1"]));
    assert_eq!(a4.gamma_to("8", 0).unwrap(), "0");
}

#[test]
fn distinguished_faces() {
    let n = validate(&fixtures::path_n()).unwrap();
    assert_eq!(distinguished_p(&n, 0).unwrap(), "x0");
    assert_eq!(distinguished_p(&n, 1).unwrap(), "f0");

    let a4 = alpha(4);
    for l in 0..4 {
        assert_eq!(distinguished_p(&a4, l).unwrap(), (2 * l).to_string());
    }
    assert_eq!(distinguished_p(&a4, 4).unwrap(), "8");

    let s = validate(&fixtures::intro_s()).unwrap();
    assert_eq!(distinguished_p(&s, 0), Err(OpError::NotNormal));
}

#[test]
fn principal_spans() {
    let nb = validate(&fixtures::path_n_bullet()).unwrap();
    let span = principal_span(&nb, "f1");
    assert_eq!(span.hypergraph().face_set(), set(&["f1", "x1", "x2"]));

    let full = principal_span(&nb, "p2");
    assert_eq!(full.hypergraph(), nb.hypergraph()); // principal: the top spans everything
}

#[test]
fn domain_codomain_levels() {
    let nb = validate(&fixtures::path_n_bullet()).unwrap();
    let c1 = codomain_k(&nb, 1).unwrap();
    assert_eq!(c1.hypergraph().face_set(), set(&["p1", "x0", "x3"]));
    let d1 = domain_k(&nb, 1).unwrap();
    let n = validate(&fixtures::path_n()).unwrap();
    assert_eq!(d1.hypergraph(), n.hypergraph());

    let a4 = alpha(4);
    let d2 = domain_k(&a4, 2).unwrap();
    assert_eq!(d2.hypergraph().face_set(), set(&["0", "1", "2", "3", "5"]));
    assert!(unique_iso(&d2, &alpha(2)).is_some());
    let c2 = codomain_k(&a4, 2).unwrap();
    assert_eq!(c2.hypergraph(), alpha(2).hypergraph());

    // Top-level operators are the identity.
    assert_eq!(domain_k(&a4, 4).unwrap().hypergraph(), a4.hypergraph());
    assert_eq!(codomain_k(&a4, 4).unwrap().hypergraph(), a4.hypergraph());

    assert_eq!(
        domain_k(&a4, 5),
        Err(OpError::BadLevel { level: 5, dim: 4 })
    );
}

#[test]
fn simple_extensions() {
    let n = validate(&fixtures::path_n()).unwrap();
    let nb = simple_extension(&n).unwrap();
    let fixture = validate(&fixtures::path_n_bullet()).unwrap();
    assert!(unique_iso(&nb, &fixture).is_some());

    // A single vertex extends to the 1-globe.
    let v = validate(&fixtures::path_n().truncate(0).restrict(&set(&["x0"]))).unwrap();
    let ext = simple_extension(&v).unwrap();
    assert!(unique_iso(&ext, &alpha(1)).is_some());

    // Iterating from a point climbs the globes.
    let ext2 = simple_extension(&ext).unwrap();
    assert!(unique_iso(&ext2, &alpha(2)).is_some());

    let s = validate(&fixtures::intro_s()).unwrap();
    assert_eq!(simple_extension(&s).err(), Some(OpError::NotNormal));
}

#[test]
fn bullet_structure_facts() {
    // dN• ≅ N, cN• ≅ (dN)•, and a principal structure is (dN)• for N = dP.
    let n = validate(&fixtures::path_n()).unwrap();
    let nb = simple_extension(&n).unwrap();
    let d_nb = domain_k(&nb, 1).unwrap();
    assert!(unique_iso(&d_nb, &n).is_some());

    let c_nb = codomain_k(&nb, 1).unwrap();
    let dn = domain_k(&n, 0).unwrap();
    let dn_bullet = simple_extension(&dn).unwrap();
    assert!(unique_iso(&c_nb, &dn_bullet).is_some());

    let a2 = alpha(2);
    let da2 = domain_k(&a2, 1).unwrap();
    assert!(unique_iso(&simple_extension(&da2).unwrap(), &a2).is_some());
}

#[test]
fn special_pushouts() {
    let glued = special_pushout(&alpha(1), &alpha(1), 0).unwrap();
    assert_eq!(size(&glued).0, vec![1, 2]);
    let p2 = validate(&fixtures::p2()).unwrap();
    assert!(unique_iso(&glued, &p2).is_some());

    let same = alpha_comp(1, 0, 1).unwrap();
    assert_eq!(same.hypergraph(), glued.hypergraph());

    // Three edges in a row.
    let three = special_pushout(&glued, &alpha(1), 0).unwrap();
    assert_eq!(size(&three).0, vec![1, 3]);
    let n = validate(&fixtures::path_n()).unwrap();
    assert!(unique_iso(&three, &n).is_some());

    // Vertical composite of two 2-globes.
    let vert = alpha_comp(2, 1, 2).unwrap();
    assert_eq!(size(&vert).0, vec![1, 1, 2]);
    // Horizontal composite of two 2-globes.
    let horiz = alpha_comp(2, 0, 2).unwrap();
    assert_eq!(size(&horiz).0, vec![1, 2, 2]);

    let five = alpha_comp5(2, 0, 2, 1, 2).unwrap();
    assert_eq!(size(&five).0, vec![1, 2, 3]);

    assert!(alpha_comp(1, 1, 2).is_err());
    // Gluing a 3-path onto a single edge along the whole edge level
    // has mismatched boundaries.
    assert_eq!(
        special_pushout(&alpha(1), &n, 1).err(),
        Some(OpError::BoundaryMismatch(1))
    );
}

#[test]
fn globularization() {
    let nb = validate(&fixtures::path_n_bullet()).unwrap();

    // ⌊dim⌋ is the identity.
    assert_eq!(globularize(&nb, 2).unwrap().hypergraph(), nb.hypergraph());

    // ⌊1⌋N•: the three-edge domain collapses to one fresh edge parallel
    // to p1, and the interior vertices drop out.
    let g1 = globularize_full(&nb, 1).unwrap();
    let h = g1.structure.hypergraph();
    assert_eq!(h.level(0), &set(&["x0", "x3"]));
    assert_eq!(h.level(1).len(), 2);
    assert!(h.level(1).contains("p1"));
    let q1 = &g1.q[&1];
    assert_eq!(h.delta("p2").unwrap(), &set(&[q1.as_str()]));
    assert_eq!(h.delta(q1).unwrap(), &set(&["x3"]));
    assert_eq!(h.gamma(q1).unwrap(), "x0");
    assert!(unique_iso(&g1.structure, &alpha(2)).is_some());

    // ⌊0⌋N•: additionally the bottom collapses to a fresh source vertex.
    let g0 = globularize(&nb, 0).unwrap();
    assert!(unique_iso(&g0, &alpha(2)).is_some());

    // Globularizing a globe changes nothing up to isomorphism.
    for k in 0..3 {
        let g = globularize(&alpha(3), k).unwrap();
        assert!(unique_iso(&g, &alpha(3)).is_some());
    }

    let s = validate(&fixtures::intro_s()).unwrap();
    assert_eq!(globularize(&s, 0).err(), Some(OpError::NotPrincipal));
}
