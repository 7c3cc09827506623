//! Oracle tests for computad presentations, labeled cells, indet cells,
//! unique descriptions, the terminal computad, and the bounded presheaf
//! round trip.

use std::collections::BTreeMap;

use pfs_core::axioms::validate;
use pfs_core::computad::*;
use pfs_core::enumerate::{enumerate_pfs, iso_equal, Bounds};
use pfs_core::fixtures;
use pfs_core::structure_ops::{alpha, special_pushout};

fn p2() -> pfs_core::axioms::FaceStructure {
    validate(&fixtures::p2()).unwrap()
}

fn p2_labels() -> BTreeMap<String, String> {
    let s = p2();
    s.hypergraph()
        .faces()
        .map(|f| {
            let lab = if s.hypergraph().dim_of(f) == Some(0) { "v" } else { "e" };
            (f.clone(), lab.to_string())
        })
        .collect()
}

#[test]
fn fixtures_validate() {
    assert_eq!(fixture_loop().validate(), Ok(()));
    assert_eq!(fixture_two_gen().validate(), Ok(()));
}

#[test]
fn cell_validation() {
    let g = fixture_loop();
    let cell = validate_cell(&g, &p2(), &p2_labels(), 1).unwrap();
    assert_eq!(cell.level, 1);

    // No 2-indets: the top face of the globe cannot be labeled.
    let a2 = alpha(2);
    let mut labels: BTreeMap<String, String> = BTreeMap::new();
    for f in a2.hypergraph().faces() {
        let lab = match a2.hypergraph().dim_of(f).unwrap() {
            0 => "v",
            _ => "e",
        };
        labels.insert(f.clone(), lab.to_string());
    }
    labels.remove("4");
    assert_eq!(
        validate_cell(&g, &a2, &labels, 2),
        Err(CellError::MissingLabel("4".into()))
    );

    // A mislabeled codomain is caught.
    let mut bad = p2_labels();
    bad.insert("e2".into(), "v".into());
    assert!(matches!(
        validate_cell(&g, &p2(), &bad, 1),
        Err(CellError::DimMismatch(_))
    ));
}

#[test]
fn cell_operations_in_the_loop_computad() {
    let g = fixture_loop();
    let e = indet_cell(&g, &"e".to_string()).unwrap();
    assert_eq!(e.shape.dim(), 1);

    // compose(e, e, 0) is the two-edge path with every edge labeled e.
    let ee = cell_compose(&g, &e, &e, 0).unwrap();
    assert!(iso_equal(&ee.shape, &p2()));
    let expected = validate_cell(&g, &p2(), &p2_labels(), 1).unwrap();
    assert!(cells_equal(&ee, &expected));

    // cell_domain of the composite at 0 is the v point.
    let d0 = cell_domain(&ee, 0).unwrap();
    assert_eq!(d0.shape.dim(), 0);
    assert_eq!(d0.labels.values().collect::<Vec<_>>(), vec!["v"]);

    // eta(G, e): the single-edge shape, edge ↦ e, endpoints ↦ v.
    let eta_e = eta(&g, &"e".to_string()).unwrap();
    assert!(iso_equal(&eta_e.shape, &alpha(1)));
    let c0 = cell_codomain(&eta_e, 0).unwrap();
    assert_eq!(c0.labels.values().collect::<Vec<_>>(), vec!["v"]);
    assert!(cells_equal(&eta_e, &e));
}

#[test]
fn hom_cell_counts() {
    let g = fixture_loop();
    assert_eq!(hom_cells(&g, &p2()).len(), 1);
    assert_eq!(hom_cells(&g, &alpha(2)).len(), 0);
    assert_eq!(hom_cells(&g, &alpha(1)).len(), 1);
    assert_eq!(hom_cells(&g, &alpha(0)).len(), 1);

    let t = fixture_two_gen();
    // The globe needs a 2-indet whose domain is a single edge; s's
    // domain is the two-edge composite.
    assert_eq!(hom_cells(&t, &alpha(2)).len(), 0);
    // The shape of eta(s) carries exactly the canonical labeling.
    let eta_s = eta(&t, &"s".to_string()).unwrap();
    let cells = hom_cells(&t, &eta_s.shape);
    assert_eq!(cells.len(), 1);
    assert!(cells_equal(&cells[0], &eta_s));
    // No two distinct cells over one shape share a labeling.
    for (i, a) in cells.iter().enumerate() {
        for b in &cells[i + 1..] {
            assert!(!cells_equal(a, b));
        }
    }
}

/// All cells whose construction uses at most `budget` binary
/// compositions, starting from the indet cells and their identities,
/// deduplicated up to cell equality (keeping the cheapest construction).
fn reachable_cells(p: &Computad, budget: usize) -> Vec<LabeledCell> {
    let mut cells: Vec<(LabeledCell, usize)> = Vec::new();
    let push = |cells: &mut Vec<(LabeledCell, usize)>, c: LabeledCell, cost: usize| {
        match cells.iter_mut().find(|(o, _)| cells_equal(o, &c)) {
            Some((_, old)) => *old = (*old).min(cost),
            None => cells.push((c, cost)),
        }
    };
    let max_dim = p.indets.values().map(|x| x.dim).max().unwrap_or(0);
    for x in p.indets.values() {
        let c = indet_cell(p, &x.name).unwrap();
        for n in c.level..=max_dim {
            push(&mut cells, cell_identity(&c, n).unwrap(), 0);
        }
    }
    loop {
        let snapshot = cells.clone();
        let before = cells.len();
        for (a, ca) in &snapshot {
            for (b, cb) in &snapshot {
                let cost = ca + cb + 1;
                if cost > budget {
                    continue;
                }
                for k in 0..a.level.max(b.level) {
                    if let Ok(c) = cell_compose(p, a, b, k) {
                        push(&mut cells, c, cost);
                    }
                }
            }
        }
        if cells.len() == before {
            break;
        }
    }
    cells.into_iter().map(|(c, _)| c).collect()
}

#[test]
fn unique_description_round_trip() {
    for p in [fixture_loop(), fixture_two_gen()] {
        let cells = reachable_cells(&p, 3);
        assert!(cells.len() > 4);
        for cell in &cells {
            let desc = describe(cell);
            assert!(cells_equal(&desc, cell), "describe changed the cell");
            let back = evaluate(&p, &desc).unwrap();
            assert!(
                cells_equal(&back, cell),
                "round trip failed on a cell of level {} with shape\n{}",
                cell.level,
                cell.shape.hypergraph()
            );
        }
    }
}

#[test]
fn terminal_computad_over_the_catalog() {
    let catalog = enumerate_pfs(&Bounds::new(2, 3)).unwrap();
    let t = terminal_computad(&catalog.entries);
    assert_eq!(t.validate(), Ok(()));

    for s in &catalog.entries {
        let cell = terminal_cell(s);
        assert!(validate_cell(&t, &cell.shape, &cell.labels, cell.level).is_ok());
        // Shape preservation: the terminal self-labeled cell's shape is
        // the structure itself.
        assert!(iso_equal(&bang(&cell), s));
    }

    // Terminal composition is the special pushout of the shapes.
    let a1 = alpha(1);
    let glued = cell_compose(&t, &terminal_cell(&a1), &terminal_cell(&a1), 0).unwrap();
    let pushout = special_pushout(&a1, &a1, 0).unwrap();
    assert!(iso_equal(&glued.shape, &pushout));
    assert!(cells_equal(&glued, &terminal_cell(&pushout)));

    // eta over a principal entry returns that structure self-labeled.
    for s in catalog.entries.iter().filter(|s| {
        pfs_core::structure_ops::is_principal(s) && s.dim() >= 1
    }) {
        let cell = eta(&t, &shape_key(s)).unwrap();
        assert!(cells_equal(&cell, &terminal_cell(s)));
    }
}

#[test]
fn bang_values() {
    let g = fixture_loop();
    let e = indet_cell(&g, &"e".to_string()).unwrap();
    let ee = cell_compose(&g, &e, &e, 0).unwrap();
    assert!(iso_equal(&bang(&ee), &p2()));
}

#[test]
fn presheaf_round_trip() {
    let g = fixture_loop();
    let catalog = enumerate_pfs(&Bounds::new(2, 3)).unwrap();
    let table = presheaf_of(&g, &catalog.entries);

    // The single element over the two-edge path.
    let p2_idx = catalog
        .entries
        .iter()
        .position(|s| iso_equal(s, &p2()))
        .unwrap();
    assert_eq!(table.sets[p2_idx].len(), 1);

    let realization = realize_presheaf(&table).unwrap();
    // Level-by-level equality against directly recomputed cell counts.
    for (n, count) in realization.level_counts().iter().enumerate() {
        let direct: usize = catalog
            .entries
            .iter()
            .filter(|s| s.dim() <= n)
            .map(|s| hom_cells(&g, s).len())
            .sum();
        assert_eq!(*count, direct, "level {n}");
    }

    // Breaking one fiber product is detected.
    let mut broken = table.clone();
    broken.sets[p2_idx].clear();
    assert!(matches!(
        realize_presheaf(&broken),
        Err(PresheafError::NotSpecialPullbackPreserving(_))
    ));
}
