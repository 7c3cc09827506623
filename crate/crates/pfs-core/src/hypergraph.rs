//! Positive hypergraphs: graded finite face sets with a codomain function γ
//! and a nonempty-domain relation δ one dimension down, plus the derived
//! operators θ and ι, iterated images, truncation, and hypergraph morphisms.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// Opaque face token. Faces of all dimensions share one namespace within a
/// hypergraph; uniqueness across dimensions is enforced by [`PositiveHypergraph::build`].
pub type FaceId = String;

/// A shape violation found while building a hypergraph.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ShapeError {
    #[error("face `{0}` is declared more than once")]
    DuplicateFace(FaceId),
    #[error("face `{face}` references undeclared face `{referenced}`")]
    DanglingReference { face: FaceId, referenced: FaceId },
    #[error("face `{0}` has an empty (or missing) delta set")]
    EmptyDelta(FaceId),
    #[error("1-dimensional face `{0}` must have a singleton delta set")]
    NonSingletonDelta0(FaceId),
    #[error("face `{face}`: {detail}")]
    DimensionMismatch { face: FaceId, detail: String },
    #[error("face `{face}` lists `{member}` twice in its delta set")]
    DuplicateDeltaMember { face: FaceId, member: FaceId },
}

/// Errors raised by derived-operator queries.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HgError {
    #[error("unknown face `{0}`")]
    UnknownFace(FaceId),
    #[error("face `{face}` has dimension {dim}, need at least {need}")]
    DimensionTooLow { face: FaceId, dim: usize, need: usize },
    #[error("operator word of length {word_len} would cross dimension 0 starting from dimension {start_dim}")]
    WordTooLong { word_len: usize, start_dim: usize },
}

/// Graded finite face sets `S_k` with codomain maps `γ_k : S_{k+1} → S_k`
/// and total domain relations `δ_k` (nonempty sets one dimension down,
/// singletons at dimension 1). The empty hypergraph is permitted at this
/// layer; [`dim`](Self::dim) then returns `None`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PositiveHypergraph {
    levels: Vec<BTreeSet<FaceId>>,
    gamma: BTreeMap<FaceId, FaceId>,
    delta: BTreeMap<FaceId, BTreeSet<FaceId>>,
    dims: BTreeMap<FaceId, usize>,
}

impl PositiveHypergraph {
    /// Validates the tables and builds a hypergraph, or reports *every*
    /// shape violation. `delta` entries are given as lists so duplicated
    /// members surface as errors instead of being silently deduplicated.
    pub fn build(
        levels: Vec<Vec<FaceId>>,
        gamma: Vec<(FaceId, FaceId)>,
        delta: Vec<(FaceId, Vec<FaceId>)>,
    ) -> Result<Self, Vec<ShapeError>> {
        let mut errors = Vec::new();
        let mut dims: BTreeMap<FaceId, usize> = BTreeMap::new();
        let mut level_sets: Vec<BTreeSet<FaceId>> = Vec::new();
        for (k, names) in levels.iter().enumerate() {
            let mut set = BTreeSet::new();
            for name in names {
                if dims.insert(name.clone(), k).is_some() {
                    errors.push(ShapeError::DuplicateFace(name.clone()));
                } else {
                    set.insert(name.clone());
                }
            }
            level_sets.push(set);
        }
        while level_sets.last().is_some_and(BTreeSet::is_empty) {
            level_sets.pop();
        }

        let mut gamma_map: BTreeMap<FaceId, FaceId> = BTreeMap::new();
        for (face, target) in gamma {
            match (dims.get(&face), dims.get(&target)) {
                (None, _) => errors.push(ShapeError::DanglingReference {
                    face: face.clone(),
                    referenced: face.clone(),
                }),
                (_, None) => errors.push(ShapeError::DanglingReference {
                    face,
                    referenced: target,
                }),
                (Some(&df), Some(&dt)) => {
                    if df == 0 {
                        errors.push(ShapeError::DimensionMismatch {
                            face,
                            detail: "gamma is not defined on 0-dimensional faces".into(),
                        });
                    } else if dt + 1 != df {
                        errors.push(ShapeError::DimensionMismatch {
                            face,
                            detail: format!(
                                "gamma target `{target}` has dimension {dt}, expected {}",
                                df - 1
                            ),
                        });
                    } else if gamma_map.insert(face.clone(), target).is_some() {
                        errors.push(ShapeError::DuplicateFace(face));
                    }
                }
            }
        }

        let mut delta_map: BTreeMap<FaceId, BTreeSet<FaceId>> = BTreeMap::new();
        for (face, members) in delta {
            let Some(&df) = dims.get(&face) else {
                errors.push(ShapeError::DanglingReference {
                    face: face.clone(),
                    referenced: face,
                });
                continue;
            };
            if df == 0 {
                errors.push(ShapeError::DimensionMismatch {
                    face,
                    detail: "delta is not defined on 0-dimensional faces".into(),
                });
                continue;
            }
            let mut set = BTreeSet::new();
            for member in &members {
                match dims.get(member) {
                    None => errors.push(ShapeError::DanglingReference {
                        face: face.clone(),
                        referenced: member.clone(),
                    }),
                    Some(&dm) if dm + 1 != df => errors.push(ShapeError::DimensionMismatch {
                        face: face.clone(),
                        detail: format!(
                            "delta member `{member}` has dimension {dm}, expected {}",
                            df - 1
                        ),
                    }),
                    Some(_) => {
                        if !set.insert(member.clone()) {
                            errors.push(ShapeError::DuplicateDeltaMember {
                                face: face.clone(),
                                member: member.clone(),
                            });
                        }
                    }
                }
            }
            if set.is_empty() {
                errors.push(ShapeError::EmptyDelta(face));
            } else if df == 1 && set.len() != 1 {
                errors.push(ShapeError::NonSingletonDelta0(face));
            } else if delta_map.insert(face.clone(), set).is_some() {
                errors.push(ShapeError::DuplicateFace(face));
            }
        }

        for (face, &d) in &dims {
            if d >= 1 {
                if !gamma_map.contains_key(face) {
                    errors.push(ShapeError::DimensionMismatch {
                        face: face.clone(),
                        detail: "no gamma entry".into(),
                    });
                }
                if !delta_map.contains_key(face) {
                    errors.push(ShapeError::EmptyDelta(face.clone()));
                }
            }
        }

        if errors.is_empty() {
            Ok(PositiveHypergraph {
                levels: level_sets,
                gamma: gamma_map,
                delta: delta_map,
                dims,
            })
        } else {
            Err(errors)
        }
    }

    /// Test/fixture-friendly constructor: levels plus `(face, delta, gamma)`
    /// rows for every face of dimension ≥ 1. Panics on shape errors.
    pub fn from_tables(levels: &[&[&str]], rows: &[(&str, &[&str], &str)]) -> Self {
        let levels = levels
            .iter()
            .map(|l| l.iter().map(|s| s.to_string()).collect())
            .collect();
        let gamma = rows
            .iter()
            .map(|(f, _, g)| (f.to_string(), g.to_string()))
            .collect();
        let delta = rows
            .iter()
            .map(|(f, d, _)| (f.to_string(), d.iter().map(|s| s.to_string()).collect()))
            .collect();
        Self::build(levels, gamma, delta).expect("fixture tables must be well-shaped")
    }

    /// Largest nonempty dimension, or `None` for the empty hypergraph.
    pub fn dim(&self) -> Option<usize> {
        if self.levels.is_empty() {
            None
        } else {
            Some(self.levels.len() - 1)
        }
    }

    /// The face set of dimension `k` (empty beyond the top dimension).
    pub fn level(&self, k: usize) -> &BTreeSet<FaceId> {
        static EMPTY: BTreeSet<FaceId> = BTreeSet::new();
        self.levels.get(k).unwrap_or(&EMPTY)
    }

    pub fn levels(&self) -> &[BTreeSet<FaceId>] {
        &self.levels
    }

    /// All faces, lowest dimension first, lexicographic within a dimension.
    pub fn faces(&self) -> impl Iterator<Item = &FaceId> {
        self.levels.iter().flatten()
    }

    pub fn face_count(&self) -> usize {
        self.levels.iter().map(BTreeSet::len).sum()
    }

    pub fn contains(&self, face: &str) -> bool {
        self.dims.contains_key(face)
    }

    pub fn dim_of(&self, face: &str) -> Option<usize> {
        self.dims.get(face).copied()
    }

    /// γ of a face of dimension ≥ 1.
    pub fn gamma(&self, face: &str) -> Option<&FaceId> {
        self.gamma.get(face)
    }

    /// δ of a face of dimension ≥ 1.
    pub fn delta(&self, face: &str) -> Option<&BTreeSet<FaceId>> {
        self.delta.get(face)
    }

    /// γ of a set of faces, taken elementwise.
    pub fn gamma_set<'a, I: IntoIterator<Item = &'a FaceId>>(&self, faces: I) -> BTreeSet<FaceId> {
        faces
            .into_iter()
            .filter_map(|f| self.gamma.get(f).cloned())
            .collect()
    }

    /// δ of a set of faces, taken as the union.
    pub fn delta_set<'a, I: IntoIterator<Item = &'a FaceId>>(&self, faces: I) -> BTreeSet<FaceId> {
        faces
            .into_iter()
            .filter_map(|f| self.delta.get(f))
            .flatten()
            .cloned()
            .collect()
    }

    /// θ(a) = δ(a) ∪ {γ(a)} for a face of dimension ≥ 1.
    pub fn theta(&self, face: &str) -> Result<BTreeSet<FaceId>, HgError> {
        self.need_dim(face, 1)?;
        let mut set = self.delta[face].clone();
        set.insert(self.gamma[face].clone());
        Ok(set)
    }

    /// ι(a) = δδ(a) ∩ γδ(a) for a face of dimension ≥ 2; lands two
    /// dimensions down.
    pub fn iota_face(&self, face: &str) -> Result<BTreeSet<FaceId>, HgError> {
        self.need_dim(face, 2)?;
        let dd = self.delta_set(&self.delta[face]);
        let gd = self.gamma_set(&self.delta[face]);
        Ok(dd.intersection(&gd).cloned().collect())
    }

    /// ι of a set of faces (union of the per-face ι's).
    pub fn iota_set<'a, I: IntoIterator<Item = &'a FaceId>>(
        &self,
        faces: I,
    ) -> Result<BTreeSet<FaceId>, HgError> {
        let mut out = BTreeSet::new();
        for f in faces {
            out.extend(self.iota_face(f)?);
        }
        Ok(out)
    }

    /// ι(S): union of ι(a) over every face of dimension ≥ 2.
    pub fn iota_all(&self) -> BTreeSet<FaceId> {
        let mut out = BTreeSet::new();
        for level in self.levels.iter().skip(2) {
            for f in level {
                out.extend(self.iota_face(f).expect("dim >= 2"));
            }
        }
        out
    }

    /// Applies a word over {γ, δ} (written with letters `g` and `d`,
    /// rightmost letter applied first) to a starting face set.
    pub fn image<'a, I: IntoIterator<Item = &'a FaceId>>(
        &self,
        word: &str,
        start: I,
    ) -> Result<BTreeSet<FaceId>, HgError> {
        let mut current: BTreeSet<FaceId> = start.into_iter().cloned().collect();
        let mut min_dim = current
            .iter()
            .map(|f| self.dims.get(f).copied().ok_or_else(|| HgError::UnknownFace(f.clone())))
            .try_fold(usize::MAX, |m, d| d.map(|d| m.min(d)))?;
        let letters: Vec<char> = word.chars().filter(|c| !c.is_whitespace()).collect();
        if min_dim != usize::MAX && letters.len() > min_dim {
            return Err(HgError::WordTooLong {
                word_len: letters.len(),
                start_dim: min_dim,
            });
        }
        for letter in letters.iter().rev() {
            current = match letter {
                'g' | 'γ' => self.gamma_set(&current),
                'd' | 'δ' => self.delta_set(&current),
                other => panic!("operator word may only contain g/d, got `{other}`"),
            };
            min_dim = min_dim.saturating_sub(1);
        }
        Ok(current)
    }

    /// γ⁽ᵏ⁾(a): iterate γ on a single face down to dimension `k`
    /// (identity when `k` is the face's own dimension).
    pub fn gamma_to(&self, face: &str, k: usize) -> Result<FaceId, HgError> {
        let d = self
            .dim_of(face)
            .ok_or_else(|| HgError::UnknownFace(face.to_string()))?;
        if k > d {
            return Err(HgError::DimensionTooLow {
                face: face.to_string(),
                dim: d,
                need: k,
            });
        }
        let mut cur = face.to_string();
        for _ in k..d {
            cur = self.gamma[&cur].clone();
        }
        Ok(cur)
    }

    /// δ⁽ᵏ⁾(A): iterate δ on a face set down to dimension `k`.
    pub fn delta_to<'a, I: IntoIterator<Item = &'a FaceId>>(
        &self,
        faces: I,
        k: usize,
    ) -> Result<BTreeSet<FaceId>, HgError> {
        let mut current: BTreeSet<FaceId> = BTreeSet::new();
        let mut dim = None;
        for f in faces {
            let d = self
                .dim_of(f)
                .ok_or_else(|| HgError::UnknownFace(f.clone()))?;
            if let Some(prev) = dim {
                assert_eq!(prev, d, "delta_to input must be homogeneous in dimension");
            }
            dim = Some(d);
            current.insert(f.clone());
        }
        let Some(mut d) = dim else {
            return Ok(current);
        };
        assert!(k <= d, "delta_to target dimension above input dimension");
        while d > k {
            current = self.delta_set(&current);
            d -= 1;
        }
        Ok(current)
    }

    /// `k`-truncation: drop every level above `k`.
    pub fn truncate(&self, k: usize) -> PositiveHypergraph {
        let levels: Vec<BTreeSet<FaceId>> = self.levels.iter().take(k + 1).cloned().collect();
        let keep: BTreeSet<&FaceId> = levels.iter().flatten().collect();
        PositiveHypergraph {
            gamma: self
                .gamma
                .iter()
                .filter(|(f, _)| keep.contains(f))
                .map(|(f, g)| (f.clone(), g.clone()))
                .collect(),
            delta: self
                .delta
                .iter()
                .filter(|(f, _)| keep.contains(f))
                .map(|(f, d)| (f.clone(), d.clone()))
                .collect(),
            dims: self
                .dims
                .iter()
                .filter(|(f, _)| keep.contains(f))
                .map(|(f, &d)| (f.clone(), d))
                .collect(),
            levels,
        }
    }

    /// Is the subset closed under γ and δ?
    pub fn is_closed(&self, subset: &BTreeSet<FaceId>) -> bool {
        subset.iter().all(|f| match self.dim_of(f) {
            Some(d) if d >= 1 => {
                subset.contains(&self.gamma[f]) && self.delta[f].iter().all(|x| subset.contains(x))
            }
            Some(_) => true,
            None => false,
        })
    }

    /// Least γ/δ-closed subset containing the given faces.
    pub fn span<'a, I: IntoIterator<Item = &'a FaceId>>(&self, faces: I) -> BTreeSet<FaceId> {
        let mut out = BTreeSet::new();
        let mut stack: Vec<FaceId> = faces.into_iter().cloned().collect();
        while let Some(f) = stack.pop() {
            assert!(self.contains(&f), "span of unknown face `{f}`");
            if out.insert(f.clone()) {
                if let Some(g) = self.gamma.get(&f) {
                    stack.push(g.clone());
                }
                if let Some(d) = self.delta.get(&f) {
                    stack.extend(d.iter().cloned());
                }
            }
        }
        out
    }

    /// The hypergraph on a γ/δ-closed subset of faces.
    pub fn restrict(&self, subset: &BTreeSet<FaceId>) -> PositiveHypergraph {
        assert!(self.is_closed(subset), "restrict requires a closed subset");
        let mut levels = vec![BTreeSet::new(); self.levels.len()];
        for f in subset {
            levels[self.dims[f]].insert(f.clone());
        }
        while levels.last().is_some_and(BTreeSet::is_empty) {
            levels.pop();
        }
        PositiveHypergraph {
            gamma: self
                .gamma
                .iter()
                .filter(|(f, _)| subset.contains(*f))
                .map(|(f, g)| (f.clone(), g.clone()))
                .collect(),
            delta: self
                .delta
                .iter()
                .filter(|(f, _)| subset.contains(*f))
                .map(|(f, d)| (f.clone(), d.clone()))
                .collect(),
            dims: subset.iter().map(|f| (f.clone(), self.dims[f])).collect(),
            levels,
        }
    }

    /// All faces as one set.
    pub fn face_set(&self) -> BTreeSet<FaceId> {
        self.faces().cloned().collect()
    }

    fn need_dim(&self, face: &str, need: usize) -> Result<usize, HgError> {
        let d = self
            .dim_of(face)
            .ok_or_else(|| HgError::UnknownFace(face.to_string()))?;
        if d < need {
            Err(HgError::DimensionTooLow {
                face: face.to_string(),
                dim: d,
                need,
            })
        } else {
            Ok(d)
        }
    }
}

impl fmt::Display for PositiveHypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, level) in self.levels.iter().enumerate() {
            write!(f, "dim{k}:")?;
            for face in level {
                write!(f, " {face}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// A violation found while validating a hypergraph morphism.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MorphismError {
    #[error("face `{face}` maps to `{image}` of a different dimension")]
    DimensionMismatch { face: FaceId, image: FaceId },
    #[error("source face `{0}` has no image")]
    MissingImage(FaceId),
    #[error("face `{0}`: gamma is not preserved")]
    GammaNotPreserved(FaceId),
    #[error("face `{0}`: delta is not mapped bijectively")]
    DeltaNotBijective(FaceId),
}

/// A dimension-preserving map of hypergraphs commuting with γ and restricting
/// to a bijection on every δ-set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HgMorphism {
    pub source: PositiveHypergraph,
    pub target: PositiveHypergraph,
    pub map: BTreeMap<FaceId, FaceId>,
}

impl HgMorphism {
    pub fn identity(h: &PositiveHypergraph) -> Self {
        HgMorphism {
            source: h.clone(),
            target: h.clone(),
            map: h.faces().map(|f| (f.clone(), f.clone())).collect(),
        }
    }

    /// The inclusion of a closed subset of `h` into `h`.
    pub fn inclusion(h: &PositiveHypergraph, subset: &BTreeSet<FaceId>) -> Self {
        HgMorphism {
            source: h.restrict(subset),
            target: h.clone(),
            map: subset.iter().map(|f| (f.clone(), f.clone())).collect(),
        }
    }

    /// Checks totality, dimension preservation, γ-commutation, and the
    /// δ-bijection condition, reporting every violation.
    pub fn validate(&self) -> Result<(), Vec<MorphismError>> {
        let mut errors = Vec::new();
        for face in self.source.faces() {
            let Some(image) = self.map.get(face) else {
                errors.push(MorphismError::MissingImage(face.clone()));
                continue;
            };
            if self.source.dim_of(face) != self.target.dim_of(image) {
                errors.push(MorphismError::DimensionMismatch {
                    face: face.clone(),
                    image: image.clone(),
                });
                continue;
            }
            if self.source.dim_of(face).unwrap_or(0) >= 1 {
                match self.map.get(self.source.gamma(face).unwrap()) {
                    Some(g) if g == self.target.gamma(image).unwrap() => {}
                    _ => errors.push(MorphismError::GammaNotPreserved(face.clone())),
                }
                let src_delta = self.source.delta(face).unwrap();
                let mapped: BTreeSet<&FaceId> =
                    src_delta.iter().filter_map(|x| self.map.get(x)).collect();
                let tgt_delta = self.target.delta(image).unwrap();
                let bijective = mapped.len() == src_delta.len()
                    && mapped.len() == tgt_delta.len()
                    && mapped.iter().all(|x| tgt_delta.contains(*x));
                if !bijective {
                    errors.push(MorphismError::DeltaNotBijective(face.clone()));
                }
            }
        }
        if errors.is_empty() {
            Ok(())
        } else {
            Err(errors)
        }
    }

    /// Image of a face set.
    pub fn image<'a, I: IntoIterator<Item = &'a FaceId>>(&self, faces: I) -> BTreeSet<FaceId> {
        faces
            .into_iter()
            .map(|f| self.map[f].clone())
            .collect()
    }

    /// Composition `other ∘ self` (apply `self` first).
    pub fn then(&self, other: &HgMorphism) -> HgMorphism {
        HgMorphism {
            source: self.source.clone(),
            target: other.target.clone(),
            map: self
                .map
                .iter()
                .map(|(f, g)| (f.clone(), other.map[g].clone()))
                .collect(),
        }
    }
}
