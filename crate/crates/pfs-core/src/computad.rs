//! Finite positive-to-one computad presentations and their labeled
//! cells: validation, domain/codomain/identity/composition, indet cells,
//! unique descriptions, the terminal computad, cell enumeration over a
//! shape, and a bounded presheaf round trip.

use std::collections::{BTreeMap, BTreeSet};

use crate::axioms::{validate_subset, FaceStructure};
use crate::decompose::{decompose_fully, CompositionTree};
use crate::enumerate::canonical_form;
use crate::hypergraph::FaceId;
use crate::structure_ops::{
    alpha, codomain_subset, domain_subset, is_normal, is_principal, simple_extension,
    special_pushout_full, unique_iso,
};

pub type IndetId = String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CellError {
    #[error("face {0} has no label")]
    MissingLabel(FaceId),
    #[error("label of face {0} names an unknown indet")]
    UnknownIndet(FaceId),
    #[error("label of face {0} has the wrong dimension")]
    DimMismatch(FaceId),
    #[error("label of γ({0}) is not the codomain of the label of {0}")]
    CodMismatch(FaceId),
    #[error("the domain of face {0} does not match the label's domain cell")]
    DomMismatch(FaceId),
    #[error("not composable: {0}")]
    NotComposable(String),
    #[error("level {level} out of range for a cell of level {cell}")]
    BadLevel { level: usize, cell: usize },
    #[error("indet {0} is malformed: {1}")]
    BadIndet(IndetId, String),
}

/// An indeterminate: a generator of dimension `dim` with (for dim ≥ 1)
/// an indet codomain one dimension down and a non-identity domain cell.
#[derive(Debug, Clone, PartialEq)]
pub struct Indet {
    pub name: IndetId,
    pub dim: usize,
    pub cod: Option<IndetId>,
    pub dom: Option<LabeledCell>,
}

/// A finite positive-to-one computad presentation.
#[derive(Debug, Clone, PartialEq)]
pub struct Computad {
    pub indets: BTreeMap<IndetId, Indet>,
}

/// A cell: a shape with a dimension-preserving labeling of its faces by
/// indets, at a level ≥ the shape's dimension (strictly above for
/// identity cells).
#[derive(Debug, Clone, PartialEq)]
pub struct LabeledCell {
    pub shape: FaceStructure,
    pub level: usize,
    pub labels: BTreeMap<FaceId, IndetId>,
}

/// Cell equality: same level and the unique shape isomorphism carries
/// one labeling to the other. Sound because shape automorphisms are
/// trivial.
pub fn cells_equal(a: &LabeledCell, b: &LabeledCell) -> bool {
    if a.level != b.level {
        return false;
    }
    let Some(iso) = unique_iso(&a.shape, &b.shape) else {
        return false;
    };
    iso.iter().all(|(f, g)| a.labels.get(f) == b.labels.get(g))
}

impl Computad {
    pub fn indets_of_dim(&self, d: usize) -> impl Iterator<Item = &Indet> {
        self.indets.values().filter(move |x| x.dim == d)
    }

    /// Checks the presentation: shapes of domains are normal non-identity
    /// cells, codomains exist one dimension down, domain cells validate
    /// in the lower skeleton, and each attachment is parallel to its
    /// codomain indet (the codomain-of-codomain and domain-of-domain
    /// compatibility conditions).
    pub fn validate(&self) -> Result<(), CellError> {
        let max_dim = self.indets.values().map(|x| x.dim).max().unwrap_or(0);
        for n in 0..=max_dim {
            for x in self.indets_of_dim(n) {
                if n == 0 {
                    if x.cod.is_some() || x.dom.is_some() {
                        return Err(CellError::BadIndet(
                            x.name.clone(),
                            "a 0-indet has no boundary".into(),
                        ));
                    }
                    continue;
                }
                let cod = x.cod.as_ref().ok_or_else(|| {
                    CellError::BadIndet(x.name.clone(), "missing codomain".into())
                })?;
                let cod_ok = self.indets.get(cod).map(|y| y.dim) == Some(n - 1);
                if !cod_ok {
                    return Err(CellError::BadIndet(
                        x.name.clone(),
                        "codomain is not an indet one dimension down".into(),
                    ));
                }
                let dom = x.dom.as_ref().ok_or_else(|| {
                    CellError::BadIndet(x.name.clone(), "missing domain".into())
                })?;
                if dom.level != n - 1 || dom.shape.dim() != n - 1 {
                    return Err(CellError::BadIndet(
                        x.name.clone(),
                        "domain must be a non-identity cell one dimension down".into(),
                    ));
                }
                if !is_normal(&dom.shape) {
                    return Err(CellError::BadIndet(
                        x.name.clone(),
                        "domain shape must be normal".into(),
                    ));
                }
                validate_cell(self, &dom.shape, &dom.labels, dom.level)?;
                // Parallel to the codomain indet below the top level.
                if n >= 2 {
                    let y_cell = indet_cell(self, cod)?;
                    let dd = cell_domain(dom, n - 2)?;
                    let dy = cell_domain(&y_cell, n - 2)?;
                    if !cells_equal(&dd, &dy) {
                        return Err(CellError::BadIndet(
                            x.name.clone(),
                            "domain of the domain differs from the codomain's".into(),
                        ));
                    }
                    let cd = cell_codomain(dom, n - 2)?;
                    let cy = cell_codomain(&y_cell, n - 2)?;
                    if !cells_equal(&cd, &cy) {
                        return Err(CellError::BadIndet(
                            x.name.clone(),
                            "codomain of the domain differs from the codomain's".into(),
                        ));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Validates a labeling of a shape as a cell of the computad at the
/// given level: labels total, dimension-preserving, codomain-compatible
/// along γ, and with each face's domain matching its label's domain
/// cell.
pub fn validate_cell(
    p: &Computad,
    shape: &FaceStructure,
    labels: &BTreeMap<FaceId, IndetId>,
    level: usize,
) -> Result<LabeledCell, CellError> {
    if level < shape.dim() {
        return Err(CellError::BadLevel {
            level,
            cell: shape.dim(),
        });
    }
    let h = shape.hypergraph();
    for f in h.faces() {
        let x = labels.get(f).ok_or_else(|| CellError::MissingLabel(f.clone()))?;
        let indet = p
            .indets
            .get(x)
            .ok_or_else(|| CellError::UnknownIndet(f.clone()))?;
        if indet.dim != h.dim_of(f).unwrap() {
            return Err(CellError::DimMismatch(f.clone()));
        }
    }
    for f in h.faces() {
        let k = h.dim_of(f).unwrap();
        if k == 0 {
            continue;
        }
        let indet = &p.indets[&labels[f]];
        if labels[h.gamma(f).unwrap()] != *indet.cod.as_ref().unwrap() {
            return Err(CellError::CodMismatch(f.clone()));
        }
        // The domain of the span of f must be the label's domain cell.
        let span = h.span(std::iter::once(f));
        let piece = validate_subset(h, &span).expect("spans are valid substructures");
        let piece_cell = LabeledCell {
            shape: piece,
            level: k,
            labels: span
                .iter()
                .map(|g| (g.clone(), labels[g].clone()))
                .collect(),
        };
        let d = cell_domain(&piece_cell, k - 1)?;
        if !cells_equal(&d, indet.dom.as_ref().unwrap()) {
            return Err(CellError::DomMismatch(f.clone()));
        }
    }
    Ok(LabeledCell {
        shape: shape.clone(),
        level,
        labels: labels.clone(),
    })
}

fn boundary_cell(cell: &LabeledCell, k: usize, subset: BTreeSet<FaceId>) -> LabeledCell {
    let shape = validate_subset(cell.shape.hypergraph(), &subset)
        .expect("boundaries are valid substructures");
    let labels = subset
        .iter()
        .map(|f| (f.clone(), cell.labels[f].clone()))
        .collect();
    LabeledCell {
        shape,
        level: k,
        labels,
    }
}

/// d⁽ᵏ⁾ of a cell: the shape-level domain with the labeling restricted.
/// For k at or above the cell's level this is the cell itself.
pub fn cell_domain(cell: &LabeledCell, k: usize) -> Result<LabeledCell, CellError> {
    if k >= cell.level {
        return Ok(cell.clone());
    }
    if k >= cell.shape.dim() {
        let mut out = cell.clone();
        out.level = k;
        return Ok(out);
    }
    Ok(boundary_cell(
        cell,
        k,
        domain_subset(cell.shape.hypergraph(), k),
    ))
}

/// c⁽ᵏ⁾ of a cell, mirroring `cell_domain`.
pub fn cell_codomain(cell: &LabeledCell, k: usize) -> Result<LabeledCell, CellError> {
    if k >= cell.level {
        return Ok(cell.clone());
    }
    if k >= cell.shape.dim() {
        let mut out = cell.clone();
        out.level = k;
        return Ok(out);
    }
    Ok(boundary_cell(
        cell,
        k,
        codomain_subset(cell.shape.hypergraph(), k),
    ))
}

/// The identity on a cell, raised to level n ≥ the cell's level.
pub fn cell_identity(cell: &LabeledCell, n: usize) -> Result<LabeledCell, CellError> {
    if n < cell.level {
        return Err(CellError::BadLevel {
            level: n,
            cell: cell.level,
        });
    }
    let mut out = cell.clone();
    out.level = n;
    Ok(out)
}

/// Composition along level k: shapes glue by the special pushout and the
/// labelings merge along the boundary identification.
pub fn cell_compose(
    p: &Computad,
    a: &LabeledCell,
    b: &LabeledCell,
    k: usize,
) -> Result<LabeledCell, CellError> {
    let level = a.level.max(b.level);
    if k >= level {
        return Err(CellError::BadLevel { level: k, cell: level });
    }
    let ca = cell_codomain(a, k)?;
    let db = cell_domain(b, k)?;
    if !cells_equal(&ca, &db) {
        return Err(CellError::NotComposable(format!(
            "c^({k}) of the left cell differs from d^({k}) of the right cell"
        )));
    }
    // Identity cells at level k are units for the composition.
    if a.shape.dim() <= k {
        return cell_identity(b, level);
    }
    if b.shape.dim() <= k {
        return cell_identity(a, level);
    }
    let (glued, _emb_a, ren_b) = special_pushout_full(&a.shape, &b.shape, k)
        .map_err(|e| CellError::NotComposable(e.to_string()))?;
    let mut labels = a.labels.clone();
    for (f, name) in &ren_b {
        labels.insert(name.clone(), b.labels[f].clone());
    }
    let out = LabeledCell {
        shape: glued,
        level,
        labels,
    };
    debug_assert!(validate_cell(p, &out.shape, &out.labels, out.level).is_ok());
    Ok(out)
}

/// The canonical cell of an n-indet x: the simple extension of its
/// domain's shape, with the fresh top labeled x and the fresh face one
/// level down labeled cod(x).
pub fn eta(p: &Computad, x: &IndetId) -> Result<LabeledCell, CellError> {
    let indet = p
        .indets
        .get(x)
        .ok_or_else(|| CellError::UnknownIndet(x.clone()))?;
    if indet.dim == 0 {
        return indet_cell(p, x);
    }
    let dom = indet.dom.as_ref().unwrap();
    let t = &dom.shape;
    let bullet = simple_extension(t)
        .map_err(|e| CellError::BadIndet(x.clone(), format!("domain not extendable: {e}")))?;
    let hb = bullet.hypergraph();
    let n = indet.dim;
    let mut labels = dom.labels.clone();
    for f in hb.faces() {
        if labels.contains_key(f) {
            continue;
        }
        // Exactly two fresh faces exist: the top (dim n) and the new
        // codomain face (dim n−1).
        let d = hb.dim_of(f).unwrap();
        let lab = if d == n {
            x.clone()
        } else {
            debug_assert_eq!(d, n - 1);
            indet.cod.clone().unwrap()
        };
        labels.insert(f.clone(), lab);
    }
    validate_cell(p, &bullet, &labels, n)
}

/// An indet as a cell at its own level: a labeled point for dimension 0
/// and the canonical `eta` cell otherwise.
pub fn indet_cell(p: &Computad, x: &IndetId) -> Result<LabeledCell, CellError> {
    let indet = p
        .indets
        .get(x)
        .ok_or_else(|| CellError::UnknownIndet(x.clone()))?;
    if indet.dim == 0 {
        let point = alpha(0);
        let face = point.hypergraph().faces().next().unwrap().clone();
        Ok(LabeledCell {
            shape: point,
            level: 0,
            labels: [(face, x.clone())].into_iter().collect(),
        })
    } else {
        eta(p, x)
    }
}

/// The unique description of a cell: its shape in canonical form with
/// the labeling transported along the unique isomorphism.
pub fn describe(cell: &LabeledCell) -> LabeledCell {
    let canon = canonical_form(&cell.shape);
    let iso = unique_iso(&cell.shape, &canon).expect("canonical form is isomorphic");
    LabeledCell {
        shape: canon,
        level: cell.level,
        labels: cell
            .labels
            .iter()
            .map(|(f, x)| (iso[f].clone(), x.clone()))
            .collect(),
    }
}

/// The unique map to the terminal computad: a cell's underlying shape.
pub fn bang(cell: &LabeledCell) -> FaceStructure {
    canonical_form(&cell.shape)
}

/// Re-evaluates a description: decomposes the shape into principal
/// pieces, replaces each piece by the canonical cell of its top label,
/// and rebuilds by composition (with identities for degenerate levels).
/// Together with `describe` this realizes the unique-description round
/// trip.
pub fn evaluate(p: &Computad, desc: &LabeledCell) -> Result<LabeledCell, CellError> {
    if desc.shape.dim() < desc.level {
        let lower = LabeledCell {
            shape: desc.shape.clone(),
            level: desc.shape.dim(),
            labels: desc.labels.clone(),
        };
        return cell_identity(&evaluate(p, &lower)?, desc.level);
    }
    let tree = decompose_fully(&desc.shape);
    eval_tree(p, desc, &tree)
}

fn eval_tree(p: &Computad, desc: &LabeledCell, tree: &CompositionTree) -> Result<LabeledCell, CellError> {
    match tree {
        CompositionTree::Leaf(sub) => {
            let piece = validate_subset(desc.shape.hypergraph(), sub)
                .expect("decomposition pieces validate");
            if piece.dim() == 0 {
                return Ok(boundary_cell(desc, 0, sub.clone()));
            }
            debug_assert!(is_principal(&piece));
            let top = piece
                .hypergraph()
                .level(piece.dim())
                .iter()
                .next()
                .unwrap();
            let cell = eta(p, &desc.labels[top])?;
            // The canonical indet cell has the piece's shape.
            debug_assert!(unique_iso(&cell.shape, &piece).is_some());
            Ok(cell)
        }
        CompositionTree::Node { level, down, up } => {
            let d = eval_tree(p, desc, down)?;
            let u = eval_tree(p, desc, up)?;
            cell_compose(p, &d, &u, *level)
        }
    }
}

/// All cells of the computad over a fixed shape: every valid labeling.
/// Labels are assigned by increasing dimension; above dimension 0 the
/// boundary conditions restrict the candidates to indets whose codomain
/// and domain match data already assigned.
pub fn hom_cells(p: &Computad, shape: &FaceStructure) -> Vec<LabeledCell> {
    let h = shape.hypergraph();
    let mut faces: Vec<FaceId> = h.faces().cloned().collect();
    faces.sort_by_key(|f| (h.dim_of(f).unwrap(), f.clone()));
    let mut out = Vec::new();
    let mut labels: BTreeMap<FaceId, IndetId> = BTreeMap::new();
    assign(p, shape, &faces, 0, &mut labels, &mut out);
    out
}

fn assign(
    p: &Computad,
    shape: &FaceStructure,
    faces: &[FaceId],
    i: usize,
    labels: &mut BTreeMap<FaceId, IndetId>,
    out: &mut Vec<LabeledCell>,
) {
    if i == faces.len() {
        if let Ok(cell) = validate_cell(p, shape, labels, shape.dim()) {
            out.push(cell);
        }
        return;
    }
    let h = shape.hypergraph();
    let f = &faces[i];
    let k = h.dim_of(f).unwrap();
    let dom_here = if k >= 1 {
        let span = h.span(std::iter::once(f));
        let piece = validate_subset(h, &span).expect("spans validate");
        let mut piece_labels: BTreeMap<FaceId, IndetId> = BTreeMap::new();
        let mut ok = true;
        for g in &span {
            if g == f {
                continue;
            }
            match labels.get(g) {
                Some(x) => {
                    piece_labels.insert(g.clone(), x.clone());
                }
                None => ok = false,
            }
        }
        if !ok {
            None
        } else {
            let sub = domain_subset(piece.hypergraph(), k - 1);
            Some(boundary_cell(
                &LabeledCell {
                    shape: piece,
                    level: k,
                    labels: {
                        // The top face's own label is irrelevant for the
                        // domain; give it a placeholder.
                        let mut l = piece_labels.clone();
                        l.insert(f.clone(), String::new());
                        l
                    },
                },
                k - 1,
                sub,
            ))
        }
    } else {
        None
    };
    let candidates: Vec<IndetId> = p
        .indets_of_dim(k)
        .filter(|x| {
            if k == 0 {
                return true;
            }
            if labels.get(h.gamma(f).unwrap()) != x.cod.as_ref() {
                return false;
            }
            match &dom_here {
                Some(d) => cells_equal(d, x.dom.as_ref().unwrap()),
                None => true,
            }
        })
        .map(|x| x.name.clone())
        .collect();
    for x in candidates {
        labels.insert(f.clone(), x);
        assign(p, shape, faces, i + 1, labels, out);
        labels.remove(f);
    }
}

// ---------------------------------------------------------------------
// The terminal computad, materialized over a catalog of shapes.
// ---------------------------------------------------------------------

/// A stable identifier for a shape up to isomorphism.
pub fn shape_key(s: &FaceStructure) -> IndetId {
    canonical_form(s).hypergraph().to_string()
}

fn sub_structure(s: &FaceStructure, subset: &BTreeSet<FaceId>) -> FaceStructure {
    validate_subset(s.hypergraph(), subset).expect("closed subsets validate")
}

/// The self-labeling of a shape in the terminal computad: each face is
/// labeled by (the key of) its own span.
pub fn terminal_cell(s: &FaceStructure) -> LabeledCell {
    let h = s.hypergraph();
    let labels = h
        .faces()
        .map(|f| {
            let span = h.span(std::iter::once(f));
            (f.clone(), shape_key(&sub_structure(s, &span)))
        })
        .collect();
    LabeledCell {
        shape: s.clone(),
        level: s.dim(),
        labels,
    }
}

/// The terminal computad restricted to a catalog: one indet per
/// principal catalog entry, with domains and codomains self-labeled.
/// The catalog must be closed under d/c (any bounded exhaustive catalog
/// is).
pub fn terminal_computad(catalog: &[FaceStructure]) -> Computad {
    let mut indets = BTreeMap::new();
    for s in catalog.iter().filter(|s| is_principal(s)) {
        let n = s.dim();
        let name = shape_key(s);
        let (cod, dom) = if n == 0 {
            (None, None)
        } else {
            let h = s.hypergraph();
            let c = sub_structure(s, &codomain_subset(h, n - 1));
            let d = sub_structure(s, &domain_subset(h, n - 1));
            (Some(shape_key(&c)), Some(terminal_cell(&d)))
        };
        indets.insert(
            name.clone(),
            Indet {
                name,
                dim: n,
                cod,
                dom,
            },
        );
    }
    Computad { indets }
}

// ---------------------------------------------------------------------
// Fixture computads.
// ---------------------------------------------------------------------

/// The one-loop computad: one 0-indet `v` and one 1-indet `e` with both
/// endpoints at `v`.
pub fn fixture_loop() -> Computad {
    let point = alpha(0);
    let pf = point.hypergraph().faces().next().unwrap().clone();
    let v_cell = LabeledCell {
        shape: point,
        level: 0,
        labels: [(pf, "v".to_string())].into_iter().collect(),
    };
    let mut indets = BTreeMap::new();
    indets.insert(
        "v".to_string(),
        Indet {
            name: "v".into(),
            dim: 0,
            cod: None,
            dom: None,
        },
    );
    indets.insert(
        "e".to_string(),
        Indet {
            name: "e".into(),
            dim: 1,
            cod: Some("v".into()),
            dom: Some(v_cell),
        },
    );
    Computad { indets }
}

/// A two-generator 2-computad: the loop computad plus a 2-indet `s`
/// from the composite e·e to e.
pub fn fixture_two_gen() -> Computad {
    let mut p = fixture_loop();
    let p2 = crate::axioms::validate(&crate::fixtures::p2()).unwrap();
    let labels = p2
        .hypergraph()
        .faces()
        .map(|f| {
            let lab = if p2.hypergraph().dim_of(f) == Some(0) {
                "v"
            } else {
                "e"
            };
            (f.clone(), lab.to_string())
        })
        .collect();
    let dom = LabeledCell {
        shape: p2,
        level: 1,
        labels,
    };
    p.indets.insert(
        "s".to_string(),
        Indet {
            name: "s".into(),
            dim: 2,
            cod: Some("e".into()),
            dom: Some(dom),
        },
    );
    p
}

// ---------------------------------------------------------------------
// Bounded presheaf round trip.
// ---------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PresheafError {
    #[error("table does not preserve special pullbacks: {0}")]
    NotSpecialPullbackPreserving(String),
    #[error("shape missing from the table: {0}")]
    ShapeNotInTable(String),
}

/// A finite presheaf table over a catalog: for each canonical shape the
/// set of its elements, represented as labelings; restrictions act by
/// precomposition.
#[derive(Debug, Clone)]
pub struct PresheafTable {
    pub shapes: Vec<FaceStructure>,
    pub sets: Vec<Vec<BTreeMap<FaceId, IndetId>>>,
}

/// The presheaf of a computad over a catalog: S ↦ all cells over S.
pub fn presheaf_of(p: &Computad, catalog: &[FaceStructure]) -> PresheafTable {
    let shapes: Vec<FaceStructure> = catalog.to_vec();
    let sets = shapes
        .iter()
        .map(|s| hom_cells(p, s).into_iter().map(|c| c.labels).collect())
        .collect();
    PresheafTable { shapes, sets }
}

/// The realization of a presheaf table: per-level cell sets.
#[derive(Debug, Clone)]
pub struct Realization {
    /// For each level n, the cells as (shape index, element index).
    pub cells_by_level: Vec<Vec<(usize, usize)>>,
}

impl Realization {
    pub fn level_counts(&self) -> Vec<usize> {
        self.cells_by_level.iter().map(Vec::len).collect()
    }
}

fn find_shape(t: &PresheafTable, s: &FaceStructure) -> Option<usize> {
    t.shapes.iter().position(|c| unique_iso(c, s).is_some())
}

/// Builds cell sets from a presheaf table, checking that restrictions
/// land in the table and that every in-catalog special pushout has its
/// element set in bijection with the fiber product of the two legs'
/// element sets (the special-pullback condition).
pub fn realize_presheaf(t: &PresheafTable) -> Result<Realization, PresheafError> {
    // Restriction closure: every d/c of a table shape is a table shape
    // and every element restricts into its element set.
    for (i, s) in t.shapes.iter().enumerate() {
        let h = s.hypergraph();
        for k in 0..s.dim() {
            for sub in [domain_subset(h, k), codomain_subset(h, k)] {
                let piece = validate_subset(h, &sub).expect("boundaries validate");
                let j = find_shape(t, &piece)
                    .ok_or_else(|| PresheafError::ShapeNotInTable(shape_key(&piece)))?;
                let iso = unique_iso(&piece, &t.shapes[j]).unwrap();
                for elt in &t.sets[i] {
                    let restricted: BTreeMap<FaceId, IndetId> = sub
                        .iter()
                        .map(|f| (iso[f].clone(), elt[f].clone()))
                        .collect();
                    if !t.sets[j].contains(&restricted) {
                        return Err(PresheafError::NotSpecialPullbackPreserving(format!(
                            "a restriction of an element of shape {i} is missing at shape {j}"
                        )));
                    }
                }
            }
        }
    }

    // Special-pullback preservation on in-catalog pushouts.
    for (i, s) in t.shapes.iter().enumerate() {
        for (j, u) in t.shapes.iter().enumerate() {
            for k in 0..s.dim().min(u.dim()) {
                let Ok((glued, _emb, ren)) = special_pushout_full(s, u, k) else {
                    continue;
                };
                let Some(m) = find_shape(t, &glued) else {
                    continue; // pushout exceeds the catalog bound
                };
                let iso = unique_iso(&t.shapes[m], &glued).unwrap();
                // Pull each element of the pushout back along both legs.
                let mut pairs: BTreeSet<(usize, usize)> = BTreeSet::new();
                for elt in &t.sets[m] {
                    let on_glued: BTreeMap<&FaceId, &IndetId> =
                        iso.iter().map(|(a, b)| (b, &elt[a])).collect();
                    let left: BTreeMap<FaceId, IndetId> = s
                        .hypergraph()
                        .faces()
                        .map(|f| (f.clone(), on_glued[f].clone()))
                        .collect();
                    let right: BTreeMap<FaceId, IndetId> = u
                        .hypergraph()
                        .faces()
                        .map(|f| (f.clone(), on_glued[&ren[f]].clone()))
                        .collect();
                    let (Some(li), Some(ri)) = (
                        t.sets[i].iter().position(|e| *e == left),
                        t.sets[j].iter().position(|e| *e == right),
                    ) else {
                        return Err(PresheafError::NotSpecialPullbackPreserving(format!(
                            "a pushout element of shape {m} does not restrict into \
                             shapes {i} and {j}"
                        )));
                    };
                    if !pairs.insert((li, ri)) {
                        return Err(PresheafError::NotSpecialPullbackPreserving(format!(
                            "two pushout elements of shape {m} restrict identically"
                        )));
                    }
                }
                // Surjectivity onto the fiber product: compatible pairs.
                let boundary = validate_subset(
                    s.hypergraph(),
                    &codomain_subset(s.hypergraph(), k),
                )
                .expect("boundaries validate");
                let b_iso = unique_iso(
                    &boundary,
                    &validate_subset(u.hypergraph(), &domain_subset(u.hypergraph(), k))
                        .expect("boundaries validate"),
                )
                .expect("composable shapes share a boundary");
                let mut compatible = 0usize;
                for a in &t.sets[i] {
                    for b in &t.sets[j] {
                        if b_iso
                            .iter()
                            .all(|(x, y)| a[x] == b[y])
                        {
                            compatible += 1;
                        }
                    }
                }
                if compatible != pairs.len() {
                    return Err(PresheafError::NotSpecialPullbackPreserving(format!(
                        "shape {m}: {} pushout elements vs {} compatible pairs",
                        pairs.len(),
                        compatible
                    )));
                }
            }
        }
    }

    let max_dim = t.shapes.iter().map(FaceStructure::dim).max().unwrap_or(0);
    let mut cells_by_level = Vec::new();
    for n in 0..=max_dim {
        let mut cells = Vec::new();
        for (i, s) in t.shapes.iter().enumerate() {
            if s.dim() <= n {
                for e in 0..t.sets[i].len() {
                    cells.push((i, e));
                }
            }
        }
        cells_by_level.push(cells);
    }
    Ok(Realization { cells_by_level })
}
