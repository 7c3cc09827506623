//! The ↓a/↑a decomposition of a sub-face-structure at a pivot face,
//! saddle-face detection, and the recursive decomposition driver.

use std::collections::BTreeSet;

use crate::axioms::{validate_subset, FaceStructure};
use crate::hypergraph::FaceId;
use crate::orders::global_lt;
use crate::structure_ops::{size_of_hypergraph, special_pushout, Size};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DecompError {
    #[error("pivot `{0}` is internal (lies in ι of the ambient structure)")]
    PivotInternal(FaceId),
    #[error("pivot `{0}` is not a face of the structure being decomposed")]
    PivotAbsent(FaceId),
    #[error("unknown face `{0}`")]
    UnknownFace(FaceId),
}

fn check_pivot_face(ambient: &FaceStructure, a: &str) -> Result<usize, DecompError> {
    let h = ambient.hypergraph();
    let k = h
        .dim_of(a)
        .ok_or_else(|| DecompError::UnknownFace(a.to_string()))?;
    if h.iota_all().contains(a) {
        return Err(DecompError::PivotInternal(a.to_string()));
    }
    Ok(k)
}

fn check_pivot(
    ambient: &FaceStructure,
    x: &BTreeSet<FaceId>,
    a: &str,
) -> Result<usize, DecompError> {
    let k = check_pivot_face(ambient, a)?;
    if !x.contains(a) {
        return Err(DecompError::PivotAbsent(a.to_string()));
    }
    Ok(k)
}

fn level_of<'a>(
    ambient: &FaceStructure,
    x: &'a BTreeSet<FaceId>,
    l: usize,
) -> impl Iterator<Item = &'a FaceId> + 'a {
    let h = ambient.hypergraph().clone();
    x.iter().filter(move |f| h.dim_of(f) == Some(l))
}

/// X↓a: above the pivot's level keep faces whose iterated codomain is
/// ≤⁺ the pivot; at the pivot's level keep faces ≤⁺ the pivot or not hit
/// by γ from above; below keep everything.
pub fn down(
    ambient: &FaceStructure,
    x: &BTreeSet<FaceId>,
    a: &str,
) -> Result<BTreeSet<FaceId>, DecompError> {
    check_pivot(ambient, x, a)?;
    down_rel(ambient, x, a)
}

/// X↓a by the order formulas alone: the pivot must be a non-internal
/// face of the ambient structure, but need not belong to `x`. This is
/// the reading under which iterated decompositions at different pivots
/// commute even when one pivot falls outside an intermediate piece.
pub fn down_rel(
    ambient: &FaceStructure,
    x: &BTreeSet<FaceId>,
    a: &str,
) -> Result<BTreeSet<FaceId>, DecompError> {
    let k = check_pivot_face(ambient, a)?;
    let h = ambient.hypergraph();
    let o = ambient.orders();
    let gamma_above: BTreeSet<FaceId> = h.gamma_set(level_of(ambient, x, k + 1));
    let mut out = BTreeSet::new();
    for f in x {
        let l = h.dim_of(f).unwrap();
        let keep = if l > k {
            let g = h.gamma_to(f, k).unwrap();
            o.le_plus(&g, a).unwrap()
        } else if l == k {
            o.le_plus(f, a).unwrap() || !gamma_above.contains(f)
        } else {
            true
        };
        if keep {
            out.insert(f.clone());
        }
    }
    Ok(out)
}

/// X↑a: above the pivot's level keep faces whose iterated codomain is
/// not ≤⁺ the pivot; at the pivot's level keep faces not <⁺ the pivot or
/// not in δ from above; one level down drop ι(X↓a at level k+1); below
/// keep everything.
pub fn up(
    ambient: &FaceStructure,
    x: &BTreeSet<FaceId>,
    a: &str,
) -> Result<BTreeSet<FaceId>, DecompError> {
    check_pivot(ambient, x, a)?;
    up_rel(ambient, x, a)
}

/// X↑a by the order formulas alone; see [`down_rel`] for the membership
/// convention.
pub fn up_rel(
    ambient: &FaceStructure,
    x: &BTreeSet<FaceId>,
    a: &str,
) -> Result<BTreeSet<FaceId>, DecompError> {
    let k = check_pivot_face(ambient, a)?;
    let h = ambient.hypergraph();
    let o = ambient.orders();
    let delta_above: BTreeSet<FaceId> = h.delta_set(level_of(ambient, x, k + 1));
    let down_part = down_rel(ambient, x, a)?;
    let internal = if k >= 1 {
        h.iota_set(level_of(ambient, &down_part, k + 1))
            .expect("faces of dimension >= 2")
    } else {
        BTreeSet::new()
    };
    let mut out = BTreeSet::new();
    for f in x {
        let l = h.dim_of(f).unwrap();
        let keep = if l > k {
            let g = h.gamma_to(f, k).unwrap();
            !o.le_plus(&g, a).unwrap()
        } else if l == k {
            !o.lt_plus(f, a).unwrap() || !delta_above.contains(f)
        } else if k >= 1 && l == k - 1 {
            !internal.contains(f)
        } else {
            true
        };
        if keep {
            out.insert(f.clone());
        }
    }
    Ok(out)
}

/// A decomposition of X at a pivot: X = down ∪ up, glued along the level
/// of the pivot. Both parts validate as structures in their own right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub pivot: FaceId,
    pub level: usize,
    pub down: BTreeSet<FaceId>,
    pub up: BTreeSet<FaceId>,
}

pub fn decompose(
    ambient: &FaceStructure,
    x: &BTreeSet<FaceId>,
    a: &str,
) -> Result<Decomposition, DecompError> {
    let level = check_pivot(ambient, x, a)?;
    Ok(Decomposition {
        pivot: a.to_string(),
        level,
        down: down(ambient, x, a)?,
        up: up(ambient, x, a)?,
    })
}

fn subset_size(ambient: &FaceStructure, subset: &BTreeSet<FaceId>) -> Size {
    size_of_hypergraph(&ambient.hypergraph().restrict(subset))
}

/// Is the decomposition at `a` proper: both parts strictly smaller, both
/// parts closed and valid?
pub fn is_saddle(ambient: &FaceStructure, x: &BTreeSet<FaceId>, a: &str) -> bool {
    let Ok(d) = decompose(ambient, x, a) else {
        return false;
    };
    let h = ambient.hypergraph();
    if !h.is_closed(&d.down) || !h.is_closed(&d.up) {
        return false;
    }
    if validate_subset(h, &d.down).is_err() || validate_subset(h, &d.up).is_err() {
        return false;
    }
    let total = subset_size(ambient, x);
    subset_size(ambient, &d.down) < total && subset_size(ambient, &d.up) < total
}

/// All saddle faces of X (pivots outside ι of the ambient structure
/// whose decomposition is proper).
pub fn saddle_faces(ambient: &FaceStructure, x: &BTreeSet<FaceId>) -> BTreeSet<FaceId> {
    let internal = ambient.hypergraph().iota_all();
    x.iter()
        .filter(|a| !internal.contains(*a) && is_saddle(ambient, x, a))
        .cloned()
        .collect()
}

/// Saddle faces of a standalone structure (its own ambient).
pub fn saddles_of(x: &FaceStructure) -> BTreeSet<FaceId> {
    saddle_faces(x, &x.hypergraph().face_set())
}

/// A binary composition tree over subsets of one root structure: leaves
/// are principal sub-face-structures, nodes glue at a level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CompositionTree {
    Leaf(BTreeSet<FaceId>),
    Node {
        level: usize,
        down: Box<CompositionTree>,
        up: Box<CompositionTree>,
    },
}

impl CompositionTree {
    /// All faces in the tree (the subset it denotes).
    pub fn faces(&self) -> BTreeSet<FaceId> {
        match self {
            CompositionTree::Leaf(s) => s.clone(),
            CompositionTree::Node { down, up, .. } => {
                let mut out = down.faces();
                out.extend(up.faces());
                out
            }
        }
    }

    /// Indented rendering for CLI output.
    pub fn render(&self, indent: usize) -> String {
        let pad = "  ".repeat(indent);
        match self {
            CompositionTree::Leaf(s) => {
                let names: Vec<&str> = s.iter().map(String::as_str).collect();
                format!("{pad}leaf {{{}}}\n", names.join(","))
            }
            CompositionTree::Node { level, down, up } => {
                let mut out = format!("{pad}compose at {level}\n");
                out.push_str(&down.render(indent + 1));
                out.push_str(&up.render(indent + 1));
                out
            }
        }
    }
}

/// Recursively decomposes a structure: split at the saddle of highest
/// dimension (ties broken by the global order) until the pieces are
/// principal. Each node's saddles are computed intrinsically, with the
/// piece as its own ambient.
pub fn decompose_fully(x: &FaceStructure) -> CompositionTree {
    decompose_subset(x, &x.hypergraph().face_set())
}

fn decompose_subset(root: &FaceStructure, subset: &BTreeSet<FaceId>) -> CompositionTree {
    let piece = validate_subset(root.hypergraph(), subset)
        .expect("decomposition pieces of a valid structure are valid");
    let saddles = saddles_of(&piece);
    let Some(pivot) = pick_pivot(&piece, &saddles) else {
        return CompositionTree::Leaf(subset.clone());
    };
    let d = decompose(&piece, &piece.hypergraph().face_set(), &pivot)
        .expect("saddles admit decompositions");
    CompositionTree::Node {
        level: d.level,
        down: Box::new(decompose_subset(root, &d.down)),
        up: Box::new(decompose_subset(root, &d.up)),
    }
}

/// Highest dimension first, then least in the global order.
fn pick_pivot(piece: &FaceStructure, saddles: &BTreeSet<FaceId>) -> Option<FaceId> {
    let h = piece.hypergraph();
    let top = saddles.iter().map(|a| h.dim_of(a).unwrap()).max()?;
    saddles
        .iter()
        .filter(|a| h.dim_of(a) == Some(top))
        .cloned()
        .reduce(|best, cand| {
            if global_lt(piece, &cand, &best).unwrap() {
                cand
            } else {
                best
            }
        })
}

/// Rebuilds an abstract structure from the tree by gluing the leaf
/// shapes with special pushouts; isomorphic to the tree's face set.
pub fn evaluate(root: &FaceStructure, tree: &CompositionTree) -> FaceStructure {
    match tree {
        CompositionTree::Leaf(s) => {
            validate_subset(root.hypergraph(), s).expect("leaves are valid substructures")
        }
        CompositionTree::Node { level, down, up } => {
            let d = evaluate(root, down);
            let u = evaluate(root, up);
            special_pushout(&d, &u, *level).expect("tree nodes are composable")
        }
    }
}

/// Lemma Sd.2 size arithmetic for the tree's root node, used by tests.
pub fn composed_size(down: &Size, up: &Size, k: usize) -> Size {
    let len = down.0.len().max(up.0.len());
    Size(
        (0..len)
            .map(|l| {
                if l > k {
                    down.at(l) + up.at(l)
                } else {
                    up.at(l)
                }
            })
            .collect(),
    )
}

/// Evaluates a structure along *every* admissible saddle order,
/// returning all results (used to test evaluation independence).
pub fn evaluate_all_orders(x: &FaceStructure) -> Vec<FaceStructure> {
    let mut out = Vec::new();
    let saddles = saddles_of(x);
    if saddles.is_empty() {
        return vec![x.clone()];
    }
    for a in &saddles {
        let d = decompose(x, &x.hypergraph().face_set(), a).expect("saddle");
        let downs = evaluate_all_orders(
            &validate_subset(x.hypergraph(), &d.down).expect("down part validates"),
        );
        let ups = evaluate_all_orders(
            &validate_subset(x.hypergraph(), &d.up).expect("up part validates"),
        );
        for dn in &downs {
            for u in &ups {
                out.push(special_pushout(dn, u, d.level).expect("parts are composable"));
            }
        }
    }
    out
}
