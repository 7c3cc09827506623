//! Oracle tests for cells of the free ω-category, its laws, generator-
//! action maps, factorization, total composition, and the gluing-square
//! equation checker.

use std::collections::BTreeSet;

use pfs_core::axioms::validate;
use pfs_core::fixtures;
use pfs_core::omega::*;
use pfs_core::structure_ops::{alpha, simple_extension, OpError};

fn set(items: &[&str]) -> BTreeSet<String> {
    items.iter().map(|s| s.to_string()).collect()
}

#[test]
fn cell_enumeration_counts() {
    let a1 = alpha(1);
    // {0}, {1}, and the whole edge; {0,1} fails 0-face linearity.
    assert_eq!(cells(&a1, 1).len(), 3);
    assert_eq!(cells(&a1, 0).len(), 2);

    let nb = validate(&fixtures::path_n_bullet()).unwrap();
    let n_faces = fixtures::path_n().face_set();
    let whole = nb.hypergraph().face_set();
    let c_nb = set(&["p1", "x0", "x3"]);
    for cell in cells(&nb, 2) {
        assert!(
            cell.faces == whole || cell.faces == c_nb || cell.faces.is_subset(&n_faces),
            "unexpected cell {:?}",
            cell.faces
        );
    }
}

#[test]
fn cell_operations() {
    let p2 = validate(&fixtures::p2()).unwrap();
    let e1 = OmegaCell::new(set(&["u", "m", "e1"]), 1);
    let e2 = OmegaCell::new(set(&["m", "v", "e2"]), 1);
    let whole = cell_compose(&p2, &e1, &e2, 0).unwrap();
    assert_eq!(whole.faces, p2.hypergraph().face_set());
    assert!(cell_compose(&p2, &e2, &e1, 0).is_err());

    let a4 = alpha(4);
    let top = OmegaCell::new(a4.hypergraph().face_set(), 4);
    assert_eq!(cell_d(&a4, &top, 2).faces, set(&["5", "3", "2", "1", "0"]));

    let v = OmegaCell::new(set(&["0"]), 0);
    assert_eq!(cell_id(&v, 1), OmegaCell::new(set(&["0"]), 1));
}

#[test]
fn omega_laws_pass_on_examples() {
    let p2 = validate(&fixtures::p2()).unwrap();
    assert_eq!(check_omega_laws(&p2, 1), Vec::<String>::new());
    let nb = validate(&fixtures::path_n_bullet()).unwrap();
    assert_eq!(check_omega_laws(&nb, 2), Vec::<String>::new());
    assert_eq!(check_omega_laws(&alpha(2), 2), Vec::<String>::new());
}

#[test]
fn star_maps_and_factorization() {
    let a1 = alpha(1);
    let id = pfs_core::hypergraph::HgMorphism::identity(a1.hypergraph());
    let star = star_map(&id);
    assert_eq!(star, CtypeMap::identity(&a1));
    assert!(is_outer(&star));
    assert!(star.validate().is_ok());

    // Inclusion of one edge into the two-edge path.
    let p2 = validate(&fixtures::p2()).unwrap();
    let incl = pfs_core::hypergraph::HgMorphism {
        source: a1.hypergraph().clone(),
        target: p2.hypergraph().clone(),
        map: [("0", "m"), ("1", "u"), ("2", "e1")]
            .into_iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect(),
    };
    assert!(incl.validate().is_ok());
    let g = star_map(&incl);
    assert!(g.validate().is_ok());
    assert!(is_outer(&g));
    assert!(!is_inner(&g));

    // Total composition is inner and not outer (unless the shape is a globe).
    let tc = total_composition(&p2);
    assert!(tc.validate().is_ok());
    assert!(is_inner(&tc));
    assert_eq!(total_composition(&a1), CtypeMap::identity(&a1));

    // Factor an inner-then-outer composite and recover both parts.
    let (inner, outer) = factor(&g.then(&CtypeMap::identity(&p2)));
    assert!(is_inner(&inner));
    assert!(is_outer(&outer));
    assert_eq!(inner.then(&outer), g);

    let (tci, tco) = factor(&tc);
    assert!(is_inner(&tci));
    assert_eq!(tci.then(&tco), tc);
}

#[test]
fn star_map_is_functorial() {
    let p2 = validate(&fixtures::p2()).unwrap();
    let n = validate(&fixtures::path_n()).unwrap();
    let f = pfs_core::hypergraph::HgMorphism {
        source: alpha(1).hypergraph().clone(),
        target: p2.hypergraph().clone(),
        map: [("0", "m"), ("1", "u"), ("2", "e1")]
            .into_iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect(),
    };
    let g = pfs_core::hypergraph::HgMorphism {
        source: p2.hypergraph().clone(),
        target: n.hypergraph().clone(),
        map: [("u", "x2"), ("m", "x1"), ("v", "x0"), ("e1", "f1"), ("e2", "f0")]
            .into_iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect(),
    };
    assert!(f.validate().is_ok());
    assert!(g.validate().is_ok());
    assert_eq!(star_map(&f).then(&star_map(&g)), star_map(&f.then(&g)));
}

#[test]
fn total_composition_values() {
    let p2 = validate(&fixtures::p2()).unwrap();
    let tc = total_composition(&p2);
    assert_eq!(tc.action["0"], OmegaCell::new(set(&["v"]), 0));
    assert_eq!(tc.action["1"], OmegaCell::new(set(&["u"]), 0));
    assert_eq!(tc.action["2"], OmegaCell::new(p2.hypergraph().face_set(), 1));
}

#[test]
fn ctype_map_enumeration() {
    let a0 = alpha(0);
    let a1 = alpha(1);
    // A point maps to any 0-cell: two maps into the edge.
    assert_eq!(enumerate_ctype_maps(&a0, &a1).len(), 2);
    // The edge maps to a 1-cell with a free choice of source 0-cell? No:
    // both endpoints are determined by the chosen 1-cell (or a degenerate
    // point). Into the edge: the identity, and the two collapses.
    let maps = enumerate_ctype_maps(&a1, &a1);
    assert_eq!(maps.len(), 3);
    for m in &maps {
        assert!(m.validate().is_ok(), "{:?}", m.action);
    }
}

#[test]
fn harnik_equations_hold() {
    let nb = validate(&fixtures::path_n_bullet()).unwrap();
    assert_eq!(verify_harnik(&nb, 1).unwrap(), Vec::<String>::new());
    assert_eq!(verify_harnik(&nb, 0).unwrap(), Vec::<String>::new());
    for k in 0..3 {
        assert_eq!(verify_harnik(&alpha(3), k).unwrap(), Vec::<String>::new());
    }
    let s = validate(&fixtures::intro_s()).unwrap();
    assert_eq!(verify_harnik(&s, 0).err(), Some(OpError::NotPrincipal));
    assert_eq!(
        verify_harnik(&nb, 2).err(),
        Some(OpError::BadLevel { level: 2, dim: 2 })
    );
}

#[test]
fn harnik_structures_for_the_path_extension() {
    // P = N•, k = 0: the pre-composed structure is a fresh edge into the
    // collapsed source vertex, then the filled globe.
    let nb = validate(&fixtures::path_n_bullet()).unwrap();
    let m = harnik_maps(&nb, 0).unwrap();
    let d = &m.data;
    let h1 = d.pre1.hypergraph();
    assert_eq!(d.pre1.dim(), 2);
    assert_eq!(h1.level(0).len(), 3);
    assert_eq!(h1.level(1).len(), 3);
    assert_eq!(h1.level(2).len(), 1);
    assert_eq!(h1.gamma(&d.r_k1_pre1).unwrap(), &d.q_k);
    let h2 = d.pre2.hypergraph();
    assert_eq!(h2.gamma(&d.r_k1_pre2).unwrap(), &d.q_k);
    assert!(h2.delta(&d.r_k1_pre2).unwrap().contains(&d.r_k_pre2));
}

#[test]
fn principal_pushout_small_targets() {
    let p2 = validate(&fixtures::p2()).unwrap();
    let targets = [alpha(0), alpha(1), alpha(2), p2.clone()];
    assert_eq!(
        check_principal_pushout(&p2, &targets).unwrap(),
        Vec::<String>::new()
    );
    // Degenerate dimension-0 case.
    let v = validate(&fixtures::path_n().truncate(0).restrict(&set(&["x0"]))).unwrap();
    assert_eq!(
        check_principal_pushout(&v, &targets[..2]).unwrap(),
        Vec::<String>::new()
    );
    let s = validate(&fixtures::intro_s()).unwrap();
    assert_eq!(
        check_principal_pushout(&s, &targets).err(),
        Some(OpError::NotNormal)
    );
    let _ = simple_extension(&p2).unwrap();
}
