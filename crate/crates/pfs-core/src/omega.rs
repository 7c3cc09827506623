//! The free ω-category on a face structure: cells are sub-face-structures,
//! composition is union along matching boundaries. Also: the law checker,
//! maps between these ω-categories represented by generator actions,
//! inner/outer factorization, total composition, and the globularization
//! pushout machinery with its equation checker.

use std::collections::{BTreeMap, BTreeSet};

use crate::axioms::{validate_subset, FaceStructure};
use crate::hypergraph::{FaceId, HgMorphism};
use crate::structure_ops::{
    alpha, codomain_k, codomain_subset, domain_k, domain_subset, globularize_full, is_normal,
    is_principal, one_step_globularize, simple_extension, special_pushout_full, unique_iso,
    OpError,
};

/// A cell of S*: a γ/δ-closed, axiom-satisfying subset of a fixed ambient
/// structure, held at a level at least its intrinsic dimension.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct OmegaCell {
    pub faces: BTreeSet<FaceId>,
    pub level: usize,
}

impl OmegaCell {
    pub fn new(faces: BTreeSet<FaceId>, level: usize) -> Self {
        OmegaCell { faces, level }
    }
}

fn subset_dim(s: &FaceStructure, faces: &BTreeSet<FaceId>) -> usize {
    faces
        .iter()
        .map(|f| s.hypergraph().dim_of(f).expect("face of the ambient"))
        .max()
        .unwrap_or(0)
}

/// Every nonempty γ/δ-closed subset that satisfies the axioms, in
/// deterministic order. Closed sets are exactly the unions of face spans,
/// so they are generated by repeatedly adjoining one more span.
pub fn all_cell_subsets(s: &FaceStructure) -> Vec<BTreeSet<FaceId>> {
    let h = s.hypergraph();
    let spans: Vec<BTreeSet<FaceId>> = h.faces().map(|f| h.span(std::iter::once(f))).collect();
    let mut closed: BTreeSet<BTreeSet<FaceId>> = BTreeSet::new();
    let mut queue: Vec<BTreeSet<FaceId>> = Vec::new();
    for sp in &spans {
        if closed.insert(sp.clone()) {
            queue.push(sp.clone());
        }
    }
    while let Some(c) = queue.pop() {
        for sp in &spans {
            if !sp.is_subset(&c) {
                let mut bigger = c.clone();
                bigger.extend(sp.iter().cloned());
                if closed.insert(bigger.clone()) {
                    queue.push(bigger);
                }
            }
        }
    }
    closed
        .into_iter()
        .filter(|c| validate_subset(h, c).is_ok())
        .collect()
}

/// cells(S, n): all cells of dimension ≤ n, at level n.
pub fn cells(s: &FaceStructure, n: usize) -> Vec<OmegaCell> {
    all_cell_subsets(s)
        .into_iter()
        .filter(|c| subset_dim(s, c) <= n)
        .map(|c| OmegaCell::new(c, n))
        .collect()
}

/// d⁽ᵏ⁾ of a cell.
pub fn cell_d(s: &FaceStructure, x: &OmegaCell, k: usize) -> OmegaCell {
    if k >= subset_dim(s, &x.faces) {
        return OmegaCell::new(x.faces.clone(), k);
    }
    let sub = s.hypergraph().restrict(&x.faces);
    OmegaCell::new(domain_subset(&sub, k), k)
}

/// c⁽ᵏ⁾ of a cell.
pub fn cell_c(s: &FaceStructure, x: &OmegaCell, k: usize) -> OmegaCell {
    if k >= subset_dim(s, &x.faces) {
        return OmegaCell::new(x.faces.clone(), k);
    }
    let sub = s.hypergraph().restrict(&x.faces);
    OmegaCell::new(codomain_subset(&sub, k), k)
}

/// The identity cell: the same faces at a higher level.
pub fn cell_id(x: &OmegaCell, n: usize) -> OmegaCell {
    assert!(n >= x.level, "identities only raise the level");
    OmegaCell::new(x.faces.clone(), n)
}

/// X +ₖ Y = X ∪ Y, defined when c⁽ᵏ⁾X = d⁽ᵏ⁾Y as literal subsets.
pub fn cell_compose(
    s: &FaceStructure,
    x: &OmegaCell,
    y: &OmegaCell,
    k: usize,
) -> Result<OmegaCell, OpError> {
    if cell_c(s, x, k).faces != cell_d(s, y, k).faces {
        return Err(OpError::NotComposable(format!(
            "c^({k}) of the left cell differs from d^({k}) of the right cell"
        )));
    }
    let faces: BTreeSet<FaceId> = x.faces.union(&y.faces).cloned().collect();
    Ok(OmegaCell::new(faces, x.level.max(y.level)))
}

/// Checks every ω-category law over cells(S, n): globularity of d/c,
/// units, associativity, and interchange — exhaustively over all
/// composable tuples. Returns the violations (empty = pass).
pub fn check_omega_laws(s: &FaceStructure, n: usize) -> Vec<String> {
    let mut bad = Vec::new();
    let cs = cells(s, n);
    // d/c globularity.
    for x in &cs {
        for l in 0..=n {
            for k in 0..l {
                let dl = cell_d(s, x, l);
                let cl = cell_c(s, x, l);
                if cell_d(s, &dl, k).faces != cell_d(s, x, k).faces
                    || cell_d(s, &cl, k).faces != cell_d(s, x, k).faces
                    || cell_c(s, &cl, k).faces != cell_c(s, x, k).faces
                    || cell_c(s, &dl, k).faces != cell_c(s, x, k).faces
                {
                    bad.push(format!("d/c globularity fails at k={k}, l={l} on {:?}", x.faces));
                }
            }
        }
    }
    // Units.
    for x in &cs {
        for k in 0..n {
            let left = cell_id(&cell_d(s, x, k), n);
            let right = cell_id(&cell_c(s, x, k), n);
            match (cell_compose(s, &left, x, k), cell_compose(s, x, &right, k)) {
                (Ok(a), Ok(b)) => {
                    if a.faces != x.faces || b.faces != x.faces {
                        bad.push(format!("unit law fails at k={k} on {:?}", x.faces));
                    }
                }
                _ => bad.push(format!("unit cells not composable at k={k} on {:?}", x.faces)),
            }
        }
    }
    // Associativity.
    for k in 0..n {
        let composable: Vec<(usize, usize)> = pairs_composable(s, &cs, k);
        for &(i, j) in &composable {
            for &(j2, l) in &composable {
                if j2 != j {
                    continue;
                }
                let xy = cell_compose(s, &cs[i], &cs[j], k).unwrap();
                let yz = cell_compose(s, &cs[j], &cs[l], k).unwrap();
                let a = cell_compose(s, &xy, &cs[l], k);
                let b = cell_compose(s, &cs[i], &yz, k);
                match (a, b) {
                    (Ok(a), Ok(b)) if a.faces == b.faces => {}
                    _ => bad.push(format!("associativity fails at k={k}")),
                }
            }
        }
    }
    // Interchange.
    for l in 0..n {
        for k in 0..l {
            let comp_l = pairs_composable(s, &cs, l);
            for &(w, x) in &comp_l {
                for &(y, z) in &comp_l {
                    let wx = cell_compose(s, &cs[w], &cs[x], l).unwrap();
                    let yz = cell_compose(s, &cs[y], &cs[z], l).unwrap();
                    let outer = cell_compose(s, &wx, &yz, k);
                    let wy = cell_compose(s, &cs[w], &cs[y], k);
                    let xz = cell_compose(s, &cs[x], &cs[z], k);
                    match (outer, wy, xz) {
                        (Ok(o), Ok(wy), Ok(xz)) => match cell_compose(s, &wy, &xz, l) {
                            Ok(inner) if inner.faces == o.faces => {}
                            _ => bad.push(format!("interchange fails at k={k}, l={l}")),
                        },
                        (Ok(_), _, _) => {
                            bad.push(format!("interchange factors not composable at k={k}, l={l}"))
                        }
                        _ => {}
                    }
                }
            }
        }
    }
    bad
}

fn pairs_composable(s: &FaceStructure, cs: &[OmegaCell], k: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (i, x) in cs.iter().enumerate() {
        for (j, y) in cs.iter().enumerate() {
            if cell_c(s, x, k).faces == cell_d(s, y, k).faces {
                out.push((i, j));
            }
        }
    }
    out
}

/// A map of free ω-categories S* → T*, represented by its action on the
/// generators: each face x of S is sent to a cell of T* at level dim(x).
/// The action on arbitrary cells is derived: a cell is the composite of
/// the principal spans of its maximal faces, and the map of a composite
/// is the union of the maps of the pieces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CtypeMap {
    pub source: FaceStructure,
    pub target: FaceStructure,
    pub action: BTreeMap<FaceId, OmegaCell>,
}

impl CtypeMap {
    pub fn identity(s: &FaceStructure) -> Self {
        let h = s.hypergraph();
        let action = h
            .faces()
            .map(|f| {
                (
                    f.clone(),
                    OmegaCell::new(h.span(std::iter::once(f)), h.dim_of(f).unwrap()),
                )
            })
            .collect();
        CtypeMap {
            source: s.clone(),
            target: s.clone(),
            action,
        }
    }

    /// The faces of a cell that are not inside another member's span.
    fn maximal_faces<'a>(s: &FaceStructure, faces: &'a BTreeSet<FaceId>) -> Vec<&'a FaceId> {
        let h = s.hypergraph();
        faces
            .iter()
            .filter(|f| {
                !faces
                    .iter()
                    .any(|g| g != *f && h.span(std::iter::once(g)).contains(*f))
            })
            .collect()
    }

    /// The image of an arbitrary cell of the source.
    pub fn eval(&self, x: &OmegaCell) -> OmegaCell {
        let mut faces = BTreeSet::new();
        for f in Self::maximal_faces(&self.source, &x.faces) {
            faces.extend(self.action[f].faces.iter().cloned());
        }
        OmegaCell::new(faces, x.level)
    }

    /// self then other.
    pub fn then(&self, other: &CtypeMap) -> CtypeMap {
        debug_assert_eq!(self.target.hypergraph(), other.source.hypergraph());
        let action = self
            .action
            .iter()
            .map(|(f, c)| (f.clone(), other.eval(c)))
            .collect();
        CtypeMap {
            source: self.source.clone(),
            target: other.target.clone(),
            action,
        }
    }

    /// Checks the freeness compatibility: every action cell is a genuine
    /// cell of the target at the right level, and for dim(x) ≥ 1 the
    /// boundaries of the image match the images of the boundaries.
    pub fn validate(&self) -> Result<(), String> {
        let hs = self.source.hypergraph();
        let ht = self.target.hypergraph();
        for f in hs.faces() {
            let m = hs.dim_of(f).unwrap();
            let cell = self
                .action
                .get(f)
                .ok_or_else(|| format!("no action for face {f}"))?;
            if cell.level != m {
                return Err(format!("action level of {f} is {}, expected {m}", cell.level));
            }
            if validate_subset(ht, &cell.faces).is_err() {
                return Err(format!("action of {f} is not a cell of the target"));
            }
            if m >= 1 {
                let span = OmegaCell::new(hs.span(std::iter::once(f)), m);
                let want_d = self.eval(&cell_d(&self.source, &span, m - 1));
                let want_c = self.eval(&cell_c(&self.source, &span, m - 1));
                if cell_d(&self.target, cell, m - 1).faces != want_d.faces {
                    return Err(format!("domain of the image of {f} mismatches"));
                }
                if cell_c(&self.target, cell, m - 1).faces != want_c.faces {
                    return Err(format!("codomain of the image of {f} mismatches"));
                }
            }
        }
        Ok(())
    }
}

/// The map X ↦ f(X) induced on cells by a hypergraph morphism.
pub fn star_map(f: &HgMorphism) -> CtypeMap {
    let action = f
        .source
        .faces()
        .map(|x| {
            let span = f.source.span(std::iter::once(x));
            (
                x.clone(),
                OmegaCell::new(f.image(&span), f.source.dim_of(x).unwrap()),
            )
        })
        .collect();
    CtypeMap {
        source: crate::axioms::validate(&f.source).expect("validated source"),
        target: crate::axioms::validate(&f.target).expect("validated target"),
        action,
    }
}

/// Inner: the image of the top cell is the whole target.
pub fn is_inner(g: &CtypeMap) -> bool {
    let top = OmegaCell::new(g.source.hypergraph().face_set(), g.source.dim());
    g.eval(&top).faces == g.target.hypergraph().face_set()
}

/// Outer: induced by a hypergraph morphism, i.e. every generator lands on
/// a principal cell of its own dimension and the resulting face map is a
/// morphism whose star is the given map.
pub fn is_outer(g: &CtypeMap) -> bool {
    outer_witness(g).is_some()
}

fn outer_witness(g: &CtypeMap) -> Option<HgMorphism> {
    let hs = g.source.hypergraph();
    let ht = g.target.hypergraph();
    let mut map = BTreeMap::new();
    for x in hs.faces() {
        let cell = &g.action[x];
        let m = hs.dim_of(x).unwrap();
        // The image must be the principal span of a single face of the
        // same dimension.
        let tops: Vec<&FaceId> = cell
            .faces
            .iter()
            .filter(|f| ht.dim_of(f) == Some(m))
            .collect();
        let [top] = tops.as_slice() else { return None };
        if ht.span(std::iter::once(*top)) != cell.faces {
            return None;
        }
        map.insert(x.clone(), (*top).clone());
    }
    let morphism = HgMorphism {
        source: hs.clone(),
        target: ht.clone(),
        map,
    };
    if morphism.validate().is_ok() && &star_map(&morphism) == g {
        Some(morphism)
    } else {
        None
    }
}

/// Factors g as an inner map onto the image of the top cell, followed by
/// the outer map induced by the image's inclusion.
pub fn factor(g: &CtypeMap) -> (CtypeMap, CtypeMap) {
    let top = OmegaCell::new(g.source.hypergraph().face_set(), g.source.dim());
    let image = g.eval(&top).faces;
    let mid = validate_subset(g.target.hypergraph(), &image)
        .expect("the image of the top cell is a cell");
    let inner = CtypeMap {
        source: g.source.clone(),
        target: mid.clone(),
        action: g.action.clone(),
    };
    let incl = HgMorphism {
        source: mid.hypergraph().clone(),
        target: g.target.hypergraph().clone(),
        map: mid
            .hypergraph()
            .faces()
            .map(|f| (f.clone(), f.clone()))
            .collect(),
    };
    (inner, star_map(&incl))
}

/// The unique map αⁿ* → S* sending the top cell to S: face 2k goes to
/// c⁽ᵏ⁾S, face 2k+1 to d⁽ᵏ⁾S, and the top face to S itself.
pub fn total_composition(s: &FaceStructure) -> CtypeMap {
    let n = s.dim();
    let source = alpha(n);
    let h = s.hypergraph();
    let mut action = BTreeMap::new();
    for k in 0..n {
        action.insert(
            (2 * k).to_string(),
            OmegaCell::new(codomain_subset(h, k), k),
        );
        action.insert(
            (2 * k + 1).to_string(),
            OmegaCell::new(domain_subset(h, k), k),
        );
    }
    action.insert((2 * n).to_string(), OmegaCell::new(h.face_set(), n));
    CtypeMap {
        source,
        target: s.clone(),
        action,
    }
}

/// All maps S* → T*: assign each generator (ascending dimension) a cell
/// of the right level whose boundaries match the already-determined
/// images of the generator's boundaries.
pub fn enumerate_ctype_maps(s: &FaceStructure, t: &FaceStructure) -> Vec<CtypeMap> {
    let hs = s.hypergraph();
    let candidates = all_cell_subsets(t);
    let mut order: Vec<FaceId> = hs.faces().cloned().collect(); // ascending dim
    order.sort_by_key(|f| hs.dim_of(f).unwrap());
    let mut out = Vec::new();
    let mut action: BTreeMap<FaceId, OmegaCell> = BTreeMap::new();
    fn go(
        s: &FaceStructure,
        t: &FaceStructure,
        order: &[FaceId],
        candidates: &[BTreeSet<FaceId>],
        pos: usize,
        action: &mut BTreeMap<FaceId, OmegaCell>,
        out: &mut Vec<CtypeMap>,
    ) {
        let Some(x) = order.get(pos) else {
            out.push(CtypeMap {
                source: s.clone(),
                target: t.clone(),
                action: action.clone(),
            });
            return;
        };
        let hs = s.hypergraph();
        let m = hs.dim_of(x).unwrap();
        let (want_d, want_c) = if m >= 1 {
            let span = OmegaCell::new(hs.span(std::iter::once(x)), m);
            let partial = CtypeMap {
                source: s.clone(),
                target: t.clone(),
                action: action.clone(),
            };
            (
                Some(partial.eval(&cell_d(s, &span, m - 1)).faces),
                Some(partial.eval(&cell_c(s, &span, m - 1)).faces),
            )
        } else {
            (None, None)
        };
        for cand in candidates {
            if subset_dim(t, cand) > m {
                continue;
            }
            let cell = OmegaCell::new(cand.clone(), m);
            if let (Some(wd), Some(wc)) = (&want_d, &want_c) {
                if &cell_d(t, &cell, m - 1).faces != wd || &cell_c(t, &cell, m - 1).faces != wc {
                    continue;
                }
            }
            action.insert(x.clone(), cell);
            go(s, t, order, candidates, pos + 1, action, out);
            action.remove(x);
        }
    }
    go(s, t, &order, &candidates, 0, &mut action, &mut out);
    out
}

// ---------------------------------------------------------------------------
// Globularization pushouts and the seven-equation checker.
// ---------------------------------------------------------------------------

/// The structures and maps around the two gluing squares of a principal
/// structure P at a level k: the (k+1)- and k-globularizations Q and G,
/// the codomain globes A = c⁽ᵏ⁺¹⁾Q and A′ = c⁽ᵏ⁺¹⁾G, and the two glued
/// structures `pre1` = A +ₖ G and `pre2` = A′ +ₖ G (with G keeping its
/// face names and the A-side interior renamed with the `r$` prefix).
pub struct HarnikData {
    pub q_struct: FaceStructure,
    pub g_struct: FaceStructure,
    pub a_struct: FaceStructure,
    pub a_prime: FaceStructure,
    pub pre1: FaceStructure,
    pub pre2: FaceStructure,
    /// Face embeddings A → pre1 and A′ → pre2.
    pub emb_a1: BTreeMap<FaceId, FaceId>,
    pub emb_a2: BTreeMap<FaceId, FaceId>,
    pub p_k: FaceId,
    pub q_k: FaceId,
    pub p_k1: FaceId,
    pub q_k1: Option<FaceId>,
    /// r_{k+1} in pre1 and pre2; r_k in pre2.
    pub r_k1_pre1: FaceId,
    pub r_k1_pre2: FaceId,
    pub r_k_pre2: FaceId,
}

/// Glues A +ₖ G, then renames so G keeps its names and the A-side
/// interior gets `r$` names (`r$<k+1>` for A's top face).
fn pushout_keep_right(
    a: &FaceStructure,
    g: &FaceStructure,
    k: usize,
    a_top: &FaceId,
) -> Result<(FaceStructure, BTreeMap<FaceId, FaceId>), OpError> {
    let (glued, emb_a, emb_g) = special_pushout_full(a, g, k)?;
    let mut rename: BTreeMap<FaceId, FaceId> = BTreeMap::new();
    let g_names: BTreeMap<&FaceId, &FaceId> = emb_g.iter().map(|(x, y)| (y, x)).collect();
    for f in glued.hypergraph().faces() {
        let new = if let Some(orig) = g_names.get(f) {
            (*orig).clone()
        } else {
            // A-interior face: find its A preimage.
            let a_face = emb_a
                .iter()
                .find(|(_, v)| *v == f)
                .map(|(x, _)| x)
                .expect("every pushout face comes from a leg");
            if a_face == a_top {
                format!("r${}", k + 1)
            } else {
                format!("r$i{a_face}")
            }
        };
        rename.insert(f.clone(), new);
    }
    let renamed = relabel(&glued, &rename);
    let emb: BTreeMap<FaceId, FaceId> = emb_a
        .iter()
        .map(|(x, y)| (x.clone(), rename[y].clone()))
        .collect();
    Ok((renamed, emb))
}

fn relabel(s: &FaceStructure, rename: &BTreeMap<FaceId, FaceId>) -> FaceStructure {
    let h = s.hypergraph();
    let levels: Vec<Vec<FaceId>> = (0..=s.dim())
        .map(|k| h.level(k).iter().map(|f| rename[f].clone()).collect())
        .collect();
    let mut gamma = Vec::new();
    let mut delta = Vec::new();
    for f in h.faces() {
        if let Some(g) = h.gamma(f) {
            gamma.push((rename[f].clone(), rename[g].clone()));
            delta.push((
                rename[f].clone(),
                h.delta(f).unwrap().iter().map(|x| rename[x].clone()).collect(),
            ));
        }
    }
    let hg = crate::hypergraph::PositiveHypergraph::build(levels, gamma, delta)
        .expect("relabeling preserves shape");
    crate::axioms::validate(&hg).expect("relabeling preserves the axioms")
}

pub fn harnik_data(p: &FaceStructure, k: usize) -> Result<HarnikData, OpError> {
    if !is_principal(p) {
        return Err(OpError::NotPrincipal);
    }
    let n = p.dim();
    if k >= n {
        return Err(OpError::BadLevel { level: k, dim: n });
    }
    let q_full = globularize_full(p, k + 1)?;
    let q_struct = q_full.structure;
    let (g_struct, q_k) = one_step_globularize(&q_struct, k);
    let a_struct = codomain_k(&q_struct, k + 1)?;
    let a_prime = codomain_k(&g_struct, k + 1)?;
    let p_k = q_full.p[&k].clone();
    let p_k1 = q_full.p[&(k + 1)].clone();
    let q_k1 = q_full.q.get(&(k + 1)).cloned();
    let a_top = crate::structure_ops::distinguished_p(&a_struct, k + 1)?;
    let ap_top = crate::structure_ops::distinguished_p(&a_prime, k + 1)?;
    let (pre1, emb_a1) = pushout_keep_right(&a_struct, &g_struct, k, &a_top)?;
    let (pre2, emb_a2) = pushout_keep_right(&a_prime, &g_struct, k, &ap_top)?;
    let r_k1_pre1 = emb_a1[&a_top].clone();
    let r_k1_pre2 = emb_a2[&ap_top].clone();
    let r_k_pre2 = emb_a2[&q_k].clone();
    Ok(HarnikData {
        q_struct,
        g_struct,
        a_struct,
        a_prime,
        pre1,
        pre2,
        emb_a1,
        emb_a2,
        p_k,
        q_k,
        p_k1,
        q_k1,
        r_k1_pre1,
        r_k1_pre2,
        r_k_pre2,
    })
}

/// The named maps of the two gluing squares.
pub struct HarnikMaps {
    pub data: HarnikData,
    /// d⁽ᵏ⁾Q and c⁽ᵏ⁾Q as structures (shared boundary objects).
    pub dkq: FaceStructure,
    pub ckq: FaceStructure,
    pub iota_a: CtypeMap,
    pub iota_a_prime: CtypeMap,
    pub beta_k: CtypeMap,
    pub mu_floor: CtypeMap,
    pub mu_k: CtypeMap,
    pub semi_k1: CtypeMap,
    pub semi_k: CtypeMap,
    pub mu_k_plus_1: CtypeMap,
    pub bracket1: CtypeMap,
    pub bracket2: CtypeMap,
    pub c_star_a: CtypeMap,
    pub d_star_a: CtypeMap,
    pub d_star_q: CtypeMap,
    pub kappa1: CtypeMap,
    pub kappa2: CtypeMap,
    pub cast_da_ckq: CtypeMap,
    pub k: usize,
}

fn inclusion_star(sub: &FaceStructure, ambient: &FaceStructure) -> CtypeMap {
    let incl = HgMorphism {
        source: sub.hypergraph().clone(),
        target: ambient.hypergraph().clone(),
        map: sub
            .hypergraph()
            .faces()
            .map(|f| (f.clone(), f.clone()))
            .collect(),
    };
    debug_assert!(incl.validate().is_ok());
    star_map(&incl)
}

fn span_cell(s: &FaceStructure, seed: BTreeSet<FaceId>, level: usize) -> OmegaCell {
    OmegaCell::new(s.hypergraph().span(seed.iter()), level)
}

pub fn harnik_maps(p: &FaceStructure, k: usize) -> Result<HarnikMaps, OpError> {
    let d = harnik_data(p, k)?;
    let hq = d.q_struct.hypergraph();
    let hg = d.g_struct.hypergraph();
    let dkq = domain_k(&d.q_struct, k)?;
    let ckq = codomain_k(&d.q_struct, k)?;
    let delta_pk1: BTreeSet<FaceId> = hq.delta(&d.p_k1).unwrap().clone();

    // ι over a principal globe: cells containing the k-codomain collapse
    // onto the k-domain; everything else already lies in the k-domain.
    let make_iota = |amb: &FaceStructure, dom: &FaceStructure| -> CtypeMap {
        let h = amb.hypergraph();
        let c_faces = codomain_subset(h, k);
        let d_faces = dom.hypergraph().face_set();
        let action = h
            .faces()
            .map(|x| {
                let m = h.dim_of(x).unwrap();
                let span = h.span(std::iter::once(x));
                let cell = if c_faces.is_subset(&span) {
                    OmegaCell::new(d_faces.clone(), m)
                } else {
                    OmegaCell::new(span, m)
                };
                (x.clone(), cell)
            })
            .collect();
        CtypeMap {
            source: amb.clone(),
            target: dom.clone(),
            action,
        }
    };
    let da = domain_k(&d.a_struct, k)?;
    debug_assert_eq!(da.hypergraph(), dkq.hypergraph());
    let iota_a = make_iota(&d.a_struct, &dkq);
    let da_prime = domain_k(&d.a_prime, k)?;
    let iota_a_prime = make_iota(&d.a_prime, &da_prime);

    // β_k: the whole k-codomain goes to the whole k-domain; every proper
    // cell is shared.
    let beta_k = {
        let h = ckq.hypergraph();
        let d_faces = dkq.hypergraph().face_set();
        let action = h
            .faces()
            .map(|x| {
                let m = h.dim_of(x).unwrap();
                let span = h.span(std::iter::once(x));
                let cell = if span.contains(&d.p_k) {
                    OmegaCell::new(d_faces.clone(), m)
                } else {
                    OmegaCell::new(span, m)
                };
                (x.clone(), cell)
            })
            .collect();
        CtypeMap {
            source: ckq.clone(),
            target: dkq.clone(),
            action,
        }
    };

    // μ_⌊k⌋: G* → Q*: substitute the composite domain for q_k.
    let mu_floor = {
        let action = hg
            .faces()
            .map(|x| {
                let m = hg.dim_of(x).unwrap();
                let span = hg.span(std::iter::once(x));
                let cell = if span.contains(&d.q_k) {
                    let mut seed: BTreeSet<FaceId> =
                        span.iter().filter(|f| **f != d.q_k).cloned().collect();
                    seed.extend(delta_pk1.iter().cloned());
                    span_cell(&d.q_struct, seed, m)
                } else {
                    OmegaCell::new(span, m)
                };
                (x.clone(), cell)
            })
            .collect();
        CtypeMap {
            source: d.g_struct.clone(),
            target: d.q_struct.clone(),
            action,
        }
    };

    // μ_k: A′* → A*: same substitution inside the codomain globes.
    let mu_k = {
        let h = d.a_prime.hypergraph();
        let action = h
            .faces()
            .map(|x| {
                let m = h.dim_of(x).unwrap();
                let span = h.span(std::iter::once(x));
                let cell = if span.contains(&d.q_k) {
                    let mut seed: BTreeSet<FaceId> =
                        span.iter().filter(|f| **f != d.q_k).cloned().collect();
                    seed.extend(delta_pk1.iter().cloned());
                    span_cell(&d.a_struct, seed, m)
                } else {
                    OmegaCell::new(span, m)
                };
                (x.clone(), cell)
            })
            .collect();
        CtypeMap {
            source: d.a_prime.clone(),
            target: d.a_struct.clone(),
            action,
        }
    };

    // Pre-composition maps: cells of dimension > k acquire the extra
    // (k+1)-face; lower cells embed (through the A leg for `pre1`, whose
    // lower levels are exactly Q's).
    let semi_k1 = {
        // Faces of dimension ≤ k embed through the A leg — except the
        // distinguished p_k, which stays on the gluing target side (the
        // codomain of the whole glued structure runs through it).
        let rel = |f: &FaceId| -> FaceId {
            if *f == d.p_k || hq.dim_of(f).unwrap() > k {
                f.clone()
            } else {
                d.emb_a1[f].clone()
            }
        };
        let action = hq
            .faces()
            .map(|x| {
                let m = hq.dim_of(x).unwrap();
                let span = hq.span(std::iter::once(x));
                let moved: BTreeSet<FaceId> = span.iter().map(&rel).collect();
                let cell = if m > k {
                    let mut seed = moved;
                    seed.insert(d.r_k1_pre1.clone());
                    span_cell(&d.pre1, seed, m)
                } else {
                    OmegaCell::new(moved, m)
                };
                (x.clone(), cell)
            })
            .collect();
        CtypeMap {
            source: d.q_struct.clone(),
            target: d.pre1.clone(),
            action,
        }
    };
    let semi_k = {
        // Same boundary routing one level down: faces of dimension ≤ k
        // embed through the fresh-cell leg — except p_k, which stays put.
        let rel = |f: &FaceId| -> FaceId {
            if *f == d.p_k || hg.dim_of(f).unwrap() > k {
                f.clone()
            } else {
                d.emb_a2[f].clone()
            }
        };
        let action = hg
            .faces()
            .map(|x| {
                let m = hg.dim_of(x).unwrap();
                let span = hg.span(std::iter::once(x));
                let cell = if m > k {
                    let mut seed: BTreeSet<FaceId> = span.iter().map(&rel).collect();
                    seed.insert(d.r_k1_pre2.clone());
                    span_cell(&d.pre2, seed, m)
                } else {
                    span_cell(&d.pre2, span.iter().map(&rel).collect(), m)
                };
                (x.clone(), cell)
            })
            .collect();
        CtypeMap {
            source: d.g_struct.clone(),
            target: d.pre2.clone(),
            action,
        }
    };

    // Pushout legs as star maps.
    let kappa1 = {
        let m = HgMorphism {
            source: d.a_struct.hypergraph().clone(),
            target: d.pre1.hypergraph().clone(),
            map: d.emb_a1.clone(),
        };
        debug_assert!(m.validate().is_ok());
        star_map(&m)
    };
    let kappa2 = inclusion_star(&d.g_struct, &d.pre1);

    // μ_{k+1}: pre2* → pre1*: μ_k then the A leg on the A′ part, the G
    // leg on the G part.
    let mu_k_plus_1 = {
        let h2 = d.pre2.hypergraph();
        let inv_a2: BTreeMap<&FaceId, &FaceId> = d.emb_a2.iter().map(|(x, y)| (y, x)).collect();
        let g_faces = d.g_struct.hypergraph().face_set();
        let action = h2
            .faces()
            .map(|x| {
                let m = h2.dim_of(x).unwrap();
                let cell = if g_faces.contains(x) {
                    OmegaCell::new(d.pre1.hypergraph().span(std::iter::once(x)), m)
                } else {
                    let a_face = inv_a2[x];
                    let in_a = &mu_k.action[a_face];
                    let moved: BTreeSet<FaceId> =
                        in_a.faces.iter().map(|f| d.emb_a1[f].clone()).collect();
                    OmegaCell::new(moved, m)
                };
                (x.clone(), cell)
            })
            .collect();
        CtypeMap {
            source: d.pre2.clone(),
            target: d.pre1.clone(),
            action,
        }
    };

    // Post-inverses of the pre-composition maps.
    let bracket1 = {
        let h1 = d.pre1.hypergraph();
        let inv_a1: BTreeMap<&FaceId, &FaceId> = d.emb_a1.iter().map(|(x, y)| (y, x)).collect();
        let g_faces = d.g_struct.hypergraph().face_set();
        let dkq_faces = dkq.hypergraph().face_set();
        let action = h1
            .faces()
            .map(|x| {
                let m = h1.dim_of(x).unwrap();
                let cell = if g_faces.contains(x) {
                    mu_floor.action[x].clone()
                } else {
                    let a_face = inv_a1[x];
                    if *x == d.r_k1_pre1 {
                        OmegaCell::new(dkq_faces.clone(), m)
                    } else {
                        OmegaCell::new(hq.span(std::iter::once(a_face)), m)
                    }
                };
                (x.clone(), cell)
            })
            .collect();
        CtypeMap {
            source: d.pre1.clone(),
            target: d.q_struct.clone(),
            action,
        }
    };
    let bracket2 = {
        let h2 = d.pre2.hypergraph();
        let inv_a2: BTreeMap<&FaceId, &FaceId> = d.emb_a2.iter().map(|(x, y)| (y, x)).collect();
        let g_faces = d.g_struct.hypergraph().face_set();
        let qk_span = hg.span(std::iter::once(&d.q_k));
        let action = h2
            .faces()
            .map(|x| {
                let m = h2.dim_of(x).unwrap();
                let cell = if g_faces.contains(x) {
                    OmegaCell::new(hg.span(std::iter::once(x)), m)
                } else if *x == d.r_k1_pre2 || *x == d.r_k_pre2 {
                    OmegaCell::new(qk_span.clone(), m)
                } else {
                    let a_face = inv_a2[x];
                    OmegaCell::new(hg.span(std::iter::once(a_face)), m)
                };
                (x.clone(), cell)
            })
            .collect();
        CtypeMap {
            source: d.pre2.clone(),
            target: d.g_struct.clone(),
            action,
        }
    };

    let c_star_a = inclusion_star(&ckq, &d.a_struct);
    let d_star_a = inclusion_star(&dkq, &d.a_struct);
    let d_star_q = inclusion_star(&dkq, &d.q_struct);

    // The k-domain of A′ is isomorphic to the k-codomain of Q (q_k ↔ p_k,
    // identity below); its star casts between the boundary objects.
    let cast_da_ckq = {
        let iso = unique_iso(&da_prime, &ckq).expect("boundary globes are uniquely isomorphic");
        let m = HgMorphism {
            source: da_prime.hypergraph().clone(),
            target: ckq.hypergraph().clone(),
            map: iso,
        };
        star_map(&m)
    };

    Ok(HarnikMaps {
        data: d,
        dkq,
        ckq,
        iota_a,
        iota_a_prime,
        beta_k,
        mu_floor,
        mu_k,
        semi_k1,
        semi_k,
        mu_k_plus_1,
        bracket1,
        bracket2,
        c_star_a,
        d_star_a,
        d_star_q,
        kappa1,
        kappa2,
        cast_da_ckq,
        k,
    })
}

/// Checks the seven equations of the gluing squares, plus the explicitly
/// tabulated γ/δ values of the glued structures. Empty result = pass.
pub fn verify_harnik(p: &FaceStructure, k: usize) -> Result<Vec<String>, OpError> {
    let m = harnik_maps(p, k)?;
    let d = &m.data;
    let mut bad = Vec::new();
    let mut check = |name: &str, lhs: &CtypeMap, rhs: &CtypeMap| {
        if lhs != rhs {
            bad.push(format!("equation {name} fails"));
        }
    };
    check("1: c*;iota = beta", &m.c_star_a.then(&m.iota_a), &m.beta_k);
    check(
        "2: d*;kappa1 = d*;semi_{k+1}",
        &m.d_star_a.then(&m.kappa1),
        &m.d_star_q.then(&m.semi_k1),
    );
    check(
        "3: d*;iota = 1",
        &m.d_star_a.then(&m.iota_a),
        &CtypeMap::identity(&m.dkq),
    );
    check(
        "4: mu_floor;semi_{k+1} = semi_k;mu_{k+1}",
        &m.mu_floor.then(&m.semi_k1),
        &m.semi_k.then(&m.mu_k_plus_1),
    );
    check(
        "5: iota';cast;beta = mu_k;iota",
        &m.iota_a_prime.then(&m.cast_da_ckq).then(&m.beta_k),
        &m.mu_k.then(&m.iota_a),
    );
    check(
        "6: semi_k;bracket = 1",
        &m.semi_k.then(&m.bracket2),
        &CtypeMap::identity(&d.g_struct),
    );
    check(
        "7: semi_{k+1};bracket = 1",
        &m.semi_k1.then(&m.bracket1),
        &CtypeMap::identity(&d.q_struct),
    );

    // Maps must be valid ω-functors to begin with.
    for (name, map) in [
        ("iota_a", &m.iota_a),
        ("iota_a'", &m.iota_a_prime),
        ("beta_k", &m.beta_k),
        ("mu_floor", &m.mu_floor),
        ("mu_k", &m.mu_k),
        ("semi_{k+1}", &m.semi_k1),
        ("semi_k", &m.semi_k),
        ("mu_{k+1}", &m.mu_k_plus_1),
        ("bracket1", &m.bracket1),
        ("bracket2", &m.bracket2),
    ] {
        if let Err(e) = map.validate() {
            bad.push(format!("map {name} is not a valid map: {e}"));
        }
    }

    // Explicitly tabulated values of the glued structures.
    let h1 = d.pre1.hypergraph();
    if h1.gamma(&d.r_k1_pre1) != Some(&d.q_k) {
        bad.push("pre1 table: gamma(r_{k+1}) should be q_k".into());
    }
    if let Some(q_k1) = &d.q_k1 {
        if h1.delta(q_k1).map(|s| s.len()) != Some(1) || !h1.delta(q_k1).unwrap().contains(&d.q_k) {
            bad.push("pre1 table: delta(q_{k+1}) should be {q_k}".into());
        }
        if h1.gamma(q_k1) != Some(&d.p_k) {
            bad.push("pre1 table: gamma(q_{k+1}) should be p_k".into());
        }
    }
    let h2 = d.pre2.hypergraph();
    let want: BTreeSet<FaceId> = std::iter::once(d.r_k_pre2.clone()).collect();
    if h2.delta(&d.r_k1_pre2) != Some(&want) {
        bad.push("pre2 table: delta(r_{k+1}) should be {r_k}".into());
    }
    if h2.gamma(&d.r_k1_pre2) != Some(&d.q_k) {
        bad.push("pre2 table: gamma(r_{k+1}) should be q_k".into());
    }
    Ok(bad)
}

/// Verifies that the square gluing N* and the globe chain at N• is a
/// pushout of these free ω-categories: the square commutes, and for every
/// enumerable cocone over the given targets there is exactly one mediator.
pub fn check_principal_pushout(
    n_struct: &FaceStructure,
    targets: &[FaceStructure],
) -> Result<Vec<String>, OpError> {
    if !is_normal(n_struct) {
        return Err(OpError::NotNormal);
    }
    let n = n_struct.dim();
    let n_bullet = simple_extension(n_struct)?;
    let a_n1 = alpha(n + 1);

    let tc_n = total_composition(n_struct); // αⁿ* → N*
    let mu = total_composition(&n_bullet); // αⁿ⁺¹* → N•*
    let d_star_n = inclusion_star(n_struct, &n_bullet); // N* → N•*
    let d_incl = {
        // αⁿ ≅ d(αⁿ⁺¹) ⊆ αⁿ⁺¹: identity below the top, top to 2n+1.
        let src = alpha(n);
        let mut map: BTreeMap<FaceId, FaceId> = src
            .hypergraph()
            .faces()
            .map(|f| (f.clone(), f.clone()))
            .collect();
        map.insert((2 * n).to_string(), (2 * n + 1).to_string());
        let m = HgMorphism {
            source: src.hypergraph().clone(),
            target: a_n1.hypergraph().clone(),
            map,
        };
        debug_assert!(m.validate().is_ok());
        star_map(&m)
    };

    let mut bad = Vec::new();
    if tc_n.then(&d_star_n) != d_incl.then(&mu) {
        bad.push("the gluing square does not commute".to_string());
    }
    for t in targets {
        let maps_n = enumerate_ctype_maps(n_struct, t);
        let maps_a1 = enumerate_ctype_maps(&a_n1, t);
        let maps_nb = enumerate_ctype_maps(&n_bullet, t);
        for u in &maps_n {
            for v in &maps_a1 {
                if tc_n.then(u) != d_incl.then(v) {
                    continue;
                }
                let mediators: Vec<&CtypeMap> = maps_nb
                    .iter()
                    .filter(|w| &d_star_n.then(w) == u && &mu.then(w) == v)
                    .collect();
                if mediators.len() != 1 {
                    bad.push(format!(
                        "cocone into a target with {} faces has {} mediators",
                        t.hypergraph().face_count(),
                        mediators.len()
                    ));
                }
            }
        }
    }
    Ok(bad)
}
