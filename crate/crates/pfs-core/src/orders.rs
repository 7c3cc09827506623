//! The one-step relations ⊲⁻/⊲⁺, their transitive closures <⁻/<⁺, the
//! graded comparisons <ₗ, the global linear order, and path utilities.

use std::collections::{BTreeMap, BTreeSet};

use crate::axioms::FaceStructure;
use crate::hypergraph::{FaceId, PositiveHypergraph};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OrderError {
    #[error("unknown face `{0}`")]
    UnknownFace(FaceId),
    #[error("faces `{0}` and `{1}` have different dimensions")]
    DimensionMismatch(FaceId, FaceId),
    #[error("level {level} is not a valid comparison level for dimension {dim}")]
    BadLevel { level: usize, dim: usize },
    #[error("input is not a lower path")]
    NotLowerPath,
    #[error("path extension did not terminate (cyclic lower order)")]
    CyclicPath,
}

/// Which of the two orders to use in a comparability query.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Minus,
    Plus,
}

/// Per-dimension relation matrices for ⊲⁻, ⊲⁺ and their transitive
/// closures <⁻, <⁺ over the faces of one hypergraph. Immutable; rebuilt
/// from scratch when the hypergraph changes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderCache {
    faces: Vec<Vec<FaceId>>,
    index: BTreeMap<FaceId, (usize, usize)>,
    lhd_minus: Vec<Vec<Vec<bool>>>,
    lhd_plus: Vec<Vec<Vec<bool>>>,
    lt_minus: Vec<Vec<Vec<bool>>>,
    lt_plus: Vec<Vec<Vec<bool>>>,
}

/// Transitive closure in place (Floyd–Warshall-style saturation; levels
/// are tiny, cubic cost is fine).
fn close(m: &mut [Vec<bool>]) {
    let n = m.len();
    for k in 0..n {
        for i in 0..n {
            if m[i][k] {
                for j in 0..n {
                    if m[k][j] {
                        m[i][j] = true;
                    }
                }
            }
        }
    }
}

impl OrderCache {
    pub fn new(h: &PositiveHypergraph) -> Self {
        let n_levels = h.levels().len();
        let faces: Vec<Vec<FaceId>> = (0..n_levels)
            .map(|k| h.level(k).iter().cloned().collect())
            .collect();
        let mut index = BTreeMap::new();
        for (k, level) in faces.iter().enumerate() {
            for (i, f) in level.iter().enumerate() {
                index.insert(f.clone(), (k, i));
            }
        }
        let mut lhd_minus: Vec<Vec<Vec<bool>>> = faces
            .iter()
            .map(|l| vec![vec![false; l.len()]; l.len()])
            .collect();
        let mut lhd_plus = lhd_minus.clone();
        for k in 0..n_levels {
            // a ⊲⁻ b iff γ(a) ∈ δ(b); empty at dimension 0.
            if k >= 1 {
                for (i, a) in faces[k].iter().enumerate() {
                    let ga = h.gamma(a).unwrap();
                    for (j, b) in faces[k].iter().enumerate() {
                        if h.delta(b).unwrap().contains(ga) {
                            lhd_minus[k][i][j] = true;
                        }
                    }
                }
            }
            // a ⊲⁺ b iff some α one dimension up has a ∈ δ(α), γ(α) = b.
            for alpha in h.level(k + 1) {
                let b = h.gamma(alpha).unwrap();
                let (_, j) = index[b];
                for a in h.delta(alpha).unwrap() {
                    let (_, i) = index[a];
                    lhd_plus[k][i][j] = true;
                }
            }
        }
        let mut lt_minus = lhd_minus.clone();
        let mut lt_plus = lhd_plus.clone();
        for k in 0..n_levels {
            close(&mut lt_minus[k]);
            close(&mut lt_plus[k]);
        }
        OrderCache {
            faces,
            index,
            lhd_minus,
            lhd_plus,
            lt_minus,
            lt_plus,
        }
    }

    fn pair(&self, a: &str, b: &str) -> Result<(usize, usize, usize), OrderError> {
        let &(ka, ia) = self
            .index
            .get(a)
            .ok_or_else(|| OrderError::UnknownFace(a.to_string()))?;
        let &(kb, ib) = self
            .index
            .get(b)
            .ok_or_else(|| OrderError::UnknownFace(b.to_string()))?;
        if ka != kb {
            return Err(OrderError::DimensionMismatch(a.to_string(), b.to_string()));
        }
        Ok((ka, ia, ib))
    }

    pub fn lhd_minus(&self, a: &str, b: &str) -> Result<bool, OrderError> {
        let (k, i, j) = self.pair(a, b)?;
        Ok(self.lhd_minus[k][i][j])
    }

    pub fn lhd_plus(&self, a: &str, b: &str) -> Result<bool, OrderError> {
        let (k, i, j) = self.pair(a, b)?;
        Ok(self.lhd_plus[k][i][j])
    }

    pub fn lt_minus(&self, a: &str, b: &str) -> Result<bool, OrderError> {
        let (k, i, j) = self.pair(a, b)?;
        Ok(self.lt_minus[k][i][j])
    }

    pub fn lt_plus(&self, a: &str, b: &str) -> Result<bool, OrderError> {
        let (k, i, j) = self.pair(a, b)?;
        Ok(self.lt_plus[k][i][j])
    }

    pub fn le_plus(&self, a: &str, b: &str) -> Result<bool, OrderError> {
        Ok(a == b || self.lt_plus(a, b)?)
    }

    /// Comparability in the chosen order (either direction).
    pub fn perp(&self, sign: Sign, a: &str, b: &str) -> Result<bool, OrderError> {
        Ok(match sign {
            Sign::Minus => self.lt_minus(a, b)? || self.lt_minus(b, a)?,
            Sign::Plus => self.lt_plus(a, b)? || self.lt_plus(b, a)?,
        })
    }

    /// Does any pair at level `k` lie in the relation? (diagnostic)
    pub fn has_cycle(&self, k: usize) -> bool {
        let n = self.faces.get(k).map_or(0, Vec::len);
        (0..n).any(|i| self.lt_plus[k][i][i])
    }

    pub fn level_faces(&self, k: usize) -> &[FaceId] {
        self.faces.get(k).map_or(&[], Vec::as_slice)
    }
}

/// a <ₗ b iff γ⁽ˡ⁾(a) <⁻ γ⁽ˡ⁾(b); at l = dim(a) this is <⁻ itself.
pub fn lt_graded(
    h: &PositiveHypergraph,
    cache: &OrderCache,
    l: usize,
    a: &str,
    b: &str,
) -> Result<bool, OrderError> {
    let da = h
        .dim_of(a)
        .ok_or_else(|| OrderError::UnknownFace(a.to_string()))?;
    let db = h
        .dim_of(b)
        .ok_or_else(|| OrderError::UnknownFace(b.to_string()))?;
    if da != db {
        return Err(OrderError::DimensionMismatch(a.to_string(), b.to_string()));
    }
    if l > da {
        return Err(OrderError::BadLevel { level: l, dim: da });
    }
    let ga = h.gamma_to(a, l).expect("checked level");
    let gb = h.gamma_to(b, l).expect("checked level");
    cache.lt_minus(&ga, &gb)
}

/// The global order: a < b iff a <⁺ b or a <⁻ₗ b for some l ≤ dim(a).
/// Only defined on validated face structures (it is a linear order per
/// level there, and need not be well behaved on raw hypergraphs).
pub fn global_lt(s: &FaceStructure, a: &str, b: &str) -> Result<bool, OrderError> {
    let h = s.hypergraph();
    let cache = s.orders();
    if cache.lt_plus(a, b)? {
        return Ok(true);
    }
    let dim = h.dim_of(a).unwrap();
    for l in (0..=dim).rev() {
        if lt_graded(h, cache, l, a, b)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// The faces of `S_n` in strictly increasing global order.
pub fn sort_level(s: &FaceStructure, n: usize) -> Vec<FaceId> {
    let mut faces: Vec<FaceId> = s.hypergraph().level(n).iter().cloned().collect();
    faces.sort_by(|a, b| {
        if a == b {
            std::cmp::Ordering::Equal
        } else if global_lt(s, a, b).expect("faces of one level") {
            std::cmp::Ordering::Less
        } else {
            std::cmp::Ordering::Greater
        }
    });
    faces
}

/// Finds an upper path `x, a₀, …, aₘ, y` (x ∈ δ(a₀), γ(aᵢ) ∈ δ(aᵢ₊₁),
/// γ(aₘ) = y) with every witness aᵢ drawn from `allowed`, returning the
/// lexicographically least witness sequence, or `None`.
pub fn find_upper_path(
    h: &PositiveHypergraph,
    x: &str,
    y: &str,
    allowed: &BTreeSet<FaceId>,
) -> Option<Vec<FaceId>> {
    fn extend(
        h: &PositiveHypergraph,
        allowed: &BTreeSet<FaceId>,
        y: &str,
        attach: &str, // next witness must contain this face in its δ
        acc: &mut Vec<FaceId>,
    ) -> bool {
        // `allowed` iterates in lexicographic order, so the first success
        // is the lexicographically least continuation.
        for cand in allowed {
            if acc.contains(cand) || !h.delta(cand).is_some_and(|d| d.contains(attach)) {
                continue;
            }
            acc.push(cand.clone());
            if h.gamma(cand).map(String::as_str) == Some(y) {
                return true;
            }
            let g = h.gamma(cand).unwrap().clone();
            if extend(h, allowed, y, &g, acc) {
                return true;
            }
            acc.pop();
        }
        false
    }

    let mut witnesses = Vec::new();
    if extend(h, allowed, y, x, &mut witnesses) {
        let mut path = vec![x.to_string()];
        path.extend(witnesses);
        path.push(y.to_string());
        Some(path)
    } else {
        None
    }
}

/// Extends a lower path on both ends until it is maximal: no face c with
/// γ(c) ∈ δ(b₀) (equivalently δ(b₀) ⊆ δ(S)−γ(S)) and no face c with
/// γ(bₘ) ∈ δ(c) (equivalently γ(bₘ) ∈ γ(S)−δ(S)). Deterministic: the
/// least candidate is chosen at each step.
pub fn extend_maximal_lower_path(
    h: &PositiveHypergraph,
    seed: &[FaceId],
) -> Result<Vec<FaceId>, OrderError> {
    if seed.is_empty() {
        return Err(OrderError::NotLowerPath);
    }
    for w in seed.windows(2) {
        let good = h
            .gamma(&w[0])
            .zip(h.delta(&w[1]))
            .is_some_and(|(g, d)| d.contains(g));
        if !good {
            return Err(OrderError::NotLowerPath);
        }
    }
    let k = h
        .dim_of(&seed[0])
        .ok_or_else(|| OrderError::UnknownFace(seed[0].clone()))?;
    let level = h.level(k);
    let mut path: Vec<FaceId> = seed.to_vec();
    let budget = level.len() + 1;
    for _ in 0..budget {
        let first = &path[0];
        let prev = level.iter().find(|c| {
            h.gamma(c)
                .is_some_and(|g| h.delta(first).is_some_and(|d| d.contains(g)))
        });
        match prev {
            Some(c) if !path.contains(c) => path.insert(0, c.clone()),
            Some(_) => return Err(OrderError::CyclicPath),
            None => break,
        }
    }
    for _ in 0..budget {
        let last_gamma = h.gamma(path.last().unwrap()).cloned();
        let next = level.iter().find(|c| {
            h.delta(c)
                .zip(last_gamma.as_ref())
                .is_some_and(|(d, g)| d.contains(g))
        });
        match next {
            Some(c) if !path.contains(c) => path.push(c.clone()),
            Some(_) => return Err(OrderError::CyclicPath),
            None => break,
        }
    }
    if path.len() > 2 * budget {
        return Err(OrderError::CyclicPath);
    }
    Ok(path)
}
