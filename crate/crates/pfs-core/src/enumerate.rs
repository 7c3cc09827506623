//! Canonical forms, isomorphism testing, morphism enumeration, and
//! bounded exhaustive generation of face structures up to isomorphism.
//!
//! Canonicalization needs no search: the global order is a theorem-backed
//! linear order per level and the only automorphism is the identity, so
//! relabeling faces by rank is a complete invariant.

use std::collections::{BTreeMap, BTreeSet};

use crate::axioms::{validate, FaceStructure};
use crate::hypergraph::{FaceId, HgMorphism, PositiveHypergraph};
use crate::orders::sort_level;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EnumError {
    #[error("bounds too large: naive candidate estimate {estimate} exceeds budget {budget}")]
    BoundsTooLarge { estimate: u128, budget: u128 },
}

/// Generation bounds. `max_total` optionally caps the total face count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    pub max_dim: usize,
    pub max_faces_per_dim: usize,
    pub max_total: Option<usize>,
}

impl Bounds {
    pub fn new(max_dim: usize, max_faces_per_dim: usize) -> Self {
        Bounds {
            max_dim,
            max_faces_per_dim,
            max_total: None,
        }
    }
}

pub const DEFAULT_BUDGET: u128 = 10_000_000;

/// A complete, deduplicated set of canonical structures within bounds.
#[derive(Debug, Clone)]
pub struct Catalog {
    pub bounds: Bounds,
    pub entries: Vec<FaceStructure>,
}

impl Catalog {
    /// Entry count per dimension, index = dimension.
    pub fn counts_by_dim(&self) -> Vec<usize> {
        let mut counts = vec![0; self.bounds.max_dim + 1];
        for e in &self.entries {
            counts[e.dim()] += 1;
        }
        counts
    }
}

/// Relabels every face by its rank in the global order: the i-th face of
/// dimension k becomes `d{k}_{i}`. Idempotent and isomorphism-invariant.
pub fn canonical_form(s: &FaceStructure) -> FaceStructure {
    let h = s.hypergraph();
    let dim = s.dim();
    let mut rename: BTreeMap<FaceId, FaceId> = BTreeMap::new();
    let mut levels: Vec<Vec<FaceId>> = Vec::new();
    for k in 0..=dim {
        let mut level = Vec::new();
        for (i, f) in sort_level(s, k).into_iter().enumerate() {
            let name = format!("d{k}_{i}");
            level.push(name.clone());
            rename.insert(f, name);
        }
        levels.push(level);
    }
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
    let hg = PositiveHypergraph::build(levels, gamma, delta)
        .expect("canonical relabeling preserves shape");
    validate(&hg).expect("canonical relabeling preserves the axioms")
}

/// Structures are isomorphic iff their canonical forms are equal.
pub fn iso_equal(s: &FaceStructure, t: &FaceStructure) -> bool {
    canonical_form(s).hypergraph() == canonical_form(t).hypergraph()
}

/// All morphisms S → T, found by backtracking in descending dimension:
/// every face is assigned after all faces one level above it, so its
/// candidates are cut down immediately by γ-commutation and membership
/// in (and injectivity into) the δ-sets of its assigned parents.
pub fn enumerate_morphisms(s: &FaceStructure, t: &FaceStructure) -> Vec<HgMorphism> {
    let hs = s.hypergraph();
    let ht = t.hypergraph();
    let mut order: Vec<FaceId> = hs.faces().cloned().collect();
    order.sort_by_key(|f| std::cmp::Reverse(hs.dim_of(f).unwrap()));
    // Parents: who names this face as codomain / in their domain.
    let mut gamma_parents: BTreeMap<&FaceId, Vec<&FaceId>> = BTreeMap::new();
    let mut delta_parents: BTreeMap<&FaceId, Vec<&FaceId>> = BTreeMap::new();
    for f in hs.faces() {
        if let Some(g) = hs.gamma(f) {
            gamma_parents.entry(g).or_default().push(f);
            for d in hs.delta(f).unwrap() {
                delta_parents.entry(d).or_default().push(f);
            }
        }
    }
    let mut out = Vec::new();
    let mut map: BTreeMap<FaceId, FaceId> = BTreeMap::new();
    backtrack(
        hs,
        ht,
        &order,
        &gamma_parents,
        &delta_parents,
        0,
        &mut map,
        &mut out,
    );
    out
}

#[allow(clippy::too_many_arguments)]
fn backtrack(
    hs: &PositiveHypergraph,
    ht: &PositiveHypergraph,
    order: &[FaceId],
    gamma_parents: &BTreeMap<&FaceId, Vec<&FaceId>>,
    delta_parents: &BTreeMap<&FaceId, Vec<&FaceId>>,
    pos: usize,
    map: &mut BTreeMap<FaceId, FaceId>,
    out: &mut Vec<HgMorphism>,
) {
    let Some(f) = order.get(pos) else {
        let m = HgMorphism {
            source: hs.clone(),
            target: ht.clone(),
            map: map.clone(),
        };
        if m.validate().is_ok() {
            out.push(m);
        }
        return;
    };
    let k = hs.dim_of(f).unwrap();
    'cand: for g in ht.level(k) {
        // δ-bijectivity needs matching arities.
        if k >= 1 && hs.delta(f).unwrap().len() != ht.delta(g).unwrap().len() {
            continue;
        }
        for &a in gamma_parents.get(f).map(Vec::as_slice).unwrap_or(&[]) {
            if ht.gamma(&map[a]).unwrap() != g {
                continue 'cand;
            }
        }
        for &a in delta_parents.get(f).map(Vec::as_slice).unwrap_or(&[]) {
            let target_delta = ht.delta(&map[a]).unwrap();
            if !target_delta.contains(g) {
                continue 'cand;
            }
            // Injective on each δ-set: g must not already be taken by a
            // sibling domain member.
            for sib in hs.delta(a).unwrap() {
                if sib != f && map.get(sib) == Some(g) {
                    continue 'cand;
                }
            }
        }
        map.insert(f.clone(), g.clone());
        backtrack(hs, ht, order, gamma_parents, delta_parents, pos + 1, map, out);
        map.remove(f);
    }
}

/// (γ, δ) assignments available for one new face over a top level.
fn face_choices(top: &[FaceId], new_dim: usize) -> Vec<(FaceId, Vec<FaceId>)> {
    let mut out = Vec::new();
    let n = top.len();
    for g in top {
        if new_dim == 1 {
            for d in top {
                out.push((g.clone(), vec![d.clone()]));
            }
        } else {
            // all nonempty subsets
            for mask in 1u32..(1 << n) {
                let subset: Vec<FaceId> = (0..n)
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| top[i].clone())
                    .collect();
                out.push((g.clone(), subset));
            }
        }
    }
    out
}

fn choices_per_level(faces: usize, new_dim: usize) -> u128 {
    let f = faces as u128;
    if new_dim == 1 {
        f * f
    } else {
        f * ((1u128 << faces) - 1)
    }
}

/// Multiset count: ways to pick `c` assignments with repetition from `n`.
fn multichoose(n: u128, c: usize) -> u128 {
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..c as u128 {
        num = num.saturating_mul(n + i);
        den *= i + 1;
    }
    num / den
}

/// Worst-case candidate estimate for the layered search.
pub fn estimate_candidates(bounds: &Bounds) -> u128 {
    let f = bounds.max_faces_per_dim;
    let mut total: u128 = f as u128; // level-0 seeds
    for dim in 1..=bounds.max_dim {
        let per = choices_per_level(f, dim);
        let mut stage: u128 = 1; // the empty extension
        for c in 1..=f {
            stage = stage.saturating_add(multichoose(per, c));
        }
        total = total.saturating_mul(stage);
    }
    total
}

/// Can the partial structure (complete up to its top level) still extend
/// to a valid structure? Everything that is already final is checked.
fn partial_ok(h: &PositiveHypergraph) -> bool {
    use crate::axioms::{
        check_disjointness_with, check_globularity, check_pencil_linearity_with,
        check_strictness_with,
    };
    let top = match h.dim() {
        Some(d) => d,
        None => return false,
    };
    if !check_globularity(h).globularity.is_empty() {
        return false;
    }
    let cache = crate::orders::OrderCache::new(h);
    let strict = check_strictness_with(h, &cache).strictness;
    // Cycles are fatal anywhere; 0-face linearity is final once the edge
    // level exists, and must not be demanded before then.
    for v in &strict {
        let is_linearity = v.faces.len() == 2;
        if !is_linearity || top >= 1 {
            return false;
        }
    }
    if !check_disjointness_with(h, &cache).disjointness.is_empty() {
        return false;
    }
    // Pencils at levels strictly below the top are final (their ⊥⁺ facts
    // cannot change once the level above is fixed).
    let pencil = check_pencil_linearity_with(h, &cache).pencil_linearity;
    for v in &pencil {
        let level = h.dim_of(&v.faces[0]).unwrap_or(0);
        if level < top {
            return false;
        }
    }
    true
}

fn within_total(h: &PositiveHypergraph, bounds: &Bounds) -> bool {
    bounds.max_total.is_none_or(|t| h.face_count() <= t)
}

/// Exhaustive generation up to isomorphism by dimension-layered search:
/// pick a vertex count, then repeatedly extend with a new top level
/// (every multiset of (γ, δ) assignments), pruning partial candidates
/// that already violate an axiom that can no longer be repaired.
pub fn enumerate_pfs(bounds: &Bounds) -> Result<Catalog, EnumError> {
    enumerate_pfs_with_budget(bounds, DEFAULT_BUDGET)
}

pub fn enumerate_pfs_with_budget(bounds: &Bounds, budget: u128) -> Result<Catalog, EnumError> {
    let estimate = estimate_candidates(bounds);
    if estimate > budget {
        return Err(EnumError::BoundsTooLarge { estimate, budget });
    }

    let mut seen: BTreeSet<PositiveHypergraph> = BTreeSet::new();
    let mut entries: Vec<FaceStructure> = Vec::new();
    let emit = |h: &PositiveHypergraph, seen: &mut BTreeSet<_>, entries: &mut Vec<_>| {
        if let Ok(s) = validate(h) {
            let canon = canonical_form(&s);
            if seen.insert(canon.hypergraph().clone()) {
                entries.push(canon);
            }
        }
    };

    for vertices in 1..=bounds.max_faces_per_dim {
        let level0: Vec<FaceId> = (0..vertices).map(|i| format!("x0_{i}")).collect();
        let seed = PositiveHypergraph::build(vec![level0], Vec::new(), Vec::new())
            .expect("vertex level is well-shaped");
        if !within_total(&seed, bounds) {
            continue;
        }
        let mut stack: Vec<PositiveHypergraph> = vec![seed];
        while let Some(h) = stack.pop() {
            emit(&h, &mut seen, &mut entries);
            let top = h.dim().unwrap();
            if top >= bounds.max_dim {
                continue;
            }
            let new_dim = top + 1;
            let top_faces: Vec<FaceId> = h.level(top).iter().cloned().collect();
            let choices = face_choices(&top_faces, new_dim);
            // Multisets of assignments: new same-level faces are
            // interchangeable, so a non-decreasing choice index loses
            // nothing up to isomorphism.
            let mut pick = Vec::new();
            extend_multisets(
                &h,
                bounds,
                &choices,
                new_dim,
                0,
                &mut pick,
                &mut |ext: PositiveHypergraph| {
                    if partial_ok(&ext) {
                        stack.push(ext);
                    }
                },
            );
        }
    }
    entries.sort();
    Ok(Catalog {
        bounds: *bounds,
        entries,
    })
}

fn extend_multisets(
    h: &PositiveHypergraph,
    bounds: &Bounds,
    choices: &[(FaceId, Vec<FaceId>)],
    new_dim: usize,
    from: usize,
    pick: &mut Vec<usize>,
    sink: &mut dyn FnMut(PositiveHypergraph),
) {
    if !pick.is_empty() {
        if let Some(ext) = apply_extension(h, choices, new_dim, pick) {
            if within_total(&ext, bounds) {
                sink(ext);
            }
        }
    }
    if pick.len() == bounds.max_faces_per_dim {
        return;
    }
    for i in from..choices.len() {
        pick.push(i);
        extend_multisets(h, bounds, choices, new_dim, i, pick, sink);
        pick.pop();
    }
}

fn apply_extension(
    h: &PositiveHypergraph,
    choices: &[(FaceId, Vec<FaceId>)],
    new_dim: usize,
    pick: &[usize],
) -> Option<PositiveHypergraph> {
    let mut levels: Vec<Vec<FaceId>> = (0..new_dim)
        .map(|k| h.level(k).iter().cloned().collect())
        .collect();
    let mut gamma: Vec<(FaceId, FaceId)> = Vec::new();
    let mut delta: Vec<(FaceId, Vec<FaceId>)> = Vec::new();
    for f in h.faces() {
        if let Some(g) = h.gamma(f) {
            gamma.push((f.clone(), g.clone()));
            delta.push((f.clone(), h.delta(f).unwrap().iter().cloned().collect()));
        }
    }
    let mut new_level = Vec::new();
    for (i, &c) in pick.iter().enumerate() {
        let name = format!("x{new_dim}_{i}");
        let (g, d) = &choices[c];
        new_level.push(name.clone());
        gamma.push((name.clone(), g.clone()));
        delta.push((name, d.clone()));
    }
    levels.push(new_level);
    PositiveHypergraph::build(levels, gamma, delta).ok()
}

/// Independent naive generator for tiny bounds: enumerate every table
/// (no symmetry reduction beyond final dedup, no pruning) and filter by
/// full validation. Used to cross-check the layered generator.
pub fn naive_enumerate(bounds: &Bounds) -> Vec<FaceStructure> {
    let mut seen: BTreeSet<PositiveHypergraph> = BTreeSet::new();
    let mut entries = Vec::new();

    // Level sizes: every profile with 1..=max faces at each level up to
    // some dimension ≤ max_dim.
    let mut profiles: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..=bounds.max_dim {
        let mut next = Vec::new();
        for p in &profiles {
            next.push(p.clone());
            if p.len() <= bounds.max_dim {
                for c in 1..=bounds.max_faces_per_dim {
                    let mut q = p.clone();
                    q.push(c);
                    next.push(q);
                }
            }
        }
        profiles = next;
    }
    profiles.retain(|p| !p.is_empty() && p.iter().sum::<usize>() <= bounds.max_total.unwrap_or(usize::MAX));
    profiles.sort();
    profiles.dedup();
    // Keep only contiguous profiles (no empty level below the top).
    for profile in profiles {
        let levels: Vec<Vec<FaceId>> = profile
            .iter()
            .enumerate()
            .map(|(k, &c)| (0..c).map(|i| format!("x{k}_{i}")).collect())
            .collect();
        gen_tables(&levels, 1, Vec::new(), &mut |rows| {
            let gamma = rows.iter().map(|(f, _, g): &(FaceId, Vec<FaceId>, FaceId)| (f.clone(), g.clone())).collect();
            let delta = rows.iter().map(|(f, d, _)| (f.clone(), d.clone())).collect();
            if let Ok(h) = PositiveHypergraph::build(levels.clone(), gamma, delta) {
                if let Ok(s) = validate(&h) {
                    let canon = canonical_form(&s);
                    if seen.insert(canon.hypergraph().clone()) {
                        entries.push(canon);
                    }
                }
            }
        });
    }
    entries.sort();
    entries
}

/// Every assignment of (γ, δ) rows for faces at `level` and above.
fn gen_tables(
    levels: &[Vec<FaceId>],
    level: usize,
    acc: Vec<(FaceId, Vec<FaceId>, FaceId)>,
    sink: &mut dyn FnMut(&[(FaceId, Vec<FaceId>, FaceId)]),
) {
    if level >= levels.len() {
        sink(&acc);
        return;
    }
    let below = &levels[level - 1];
    let faces = &levels[level];
    let choices = face_choices(below, level);
    let mut idx = vec![0usize; faces.len()];
    loop {
        let mut rows = acc.clone();
        for (f, &c) in faces.iter().zip(&idx) {
            let (g, d) = &choices[c];
            rows.push((f.clone(), d.clone(), g.clone()));
        }
        gen_tables(levels, level + 1, rows, sink);
        // advance the odometer
        let mut i = 0;
        loop {
            if i == idx.len() {
                return;
            }
            idx[i] += 1;
            if idx[i] < choices.len() {
                break;
            }
            idx[i] = 0;
            i += 1;
        }
    }
}
