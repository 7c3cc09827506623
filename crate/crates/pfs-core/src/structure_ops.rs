//! Domain/codomain operators, principal spans, size and classification,
//! distinguished faces of normal structures, the simple extension, the
//! α-generators, k-globularization, and the special pushout (composition).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::axioms::{validate, FaceStructure};
use crate::hypergraph::{FaceId, PositiveHypergraph};
use crate::orders::sort_level;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OpError {
    #[error("level {level} out of range for dimension {dim}")]
    BadLevel { level: usize, dim: usize },
    #[error("structure is not normal")]
    NotNormal,
    #[error("structure is not principal")]
    NotPrincipal,
    #[error("no isomorphism between the gluing boundaries at level {0}")]
    BoundaryMismatch(usize),
    #[error("invalid arity constraints: {0}")]
    BadArity(String),
    #[error("not composable: {0}")]
    NotComposable(String),
}

/// size(S)ₖ = |Sₖ − δ(Sₖ₊₁)|, compared with higher dimensions dominant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Size(pub Vec<usize>);

impl Size {
    pub fn at(&self, k: usize) -> usize {
        self.0.get(k).copied().unwrap_or(0)
    }
}

impl PartialOrd for Size {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Size {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let len = self.0.len().max(other.0.len());
        for k in (0..len).rev() {
            match self.at(k).cmp(&other.at(k)) {
                std::cmp::Ordering::Equal => continue,
                ord => return ord,
            }
        }
        std::cmp::Ordering::Equal
    }
}

impl fmt::Display for Size {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

pub fn size(s: &FaceStructure) -> Size {
    size_of_hypergraph(s.hypergraph())
}

pub fn size_of_hypergraph(h: &PositiveHypergraph) -> Size {
    let dim = match h.dim() {
        Some(d) => d,
        None => return Size(Vec::new()),
    };
    Size(
        (0..=dim)
            .map(|k| {
                let removed = h.delta_set(h.level(k + 1));
                h.level(k).iter().filter(|f| !removed.contains(*f)).count()
            })
            .collect(),
    )
}

pub fn size_lt(a: &Size, b: &Size) -> bool {
    a < b
}

/// sizeₗ = 1 for every l ≤ k.
pub fn is_k_principal(s: &FaceStructure, k: usize) -> bool {
    let sz = size(s);
    (0..=k).all(|l| sz.at(l) == 1)
}

pub fn is_principal(s: &FaceStructure) -> bool {
    is_k_principal(s, s.dim())
}

pub fn is_normal(s: &FaceStructure) -> bool {
    let d = s.dim();
    d == 0 || is_k_principal(s, d - 1)
}

/// Classification summary for reporting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub size: Size,
    pub principal: bool,
    pub normal: bool,
}

pub fn classify(s: &FaceStructure) -> Classification {
    Classification {
        size: size(s),
        principal: is_principal(s),
        normal: is_normal(s),
    }
}

/// Face subset of d⁽ᵏ⁾: levels < k unchanged, level k loses γ(Sₖ₊₁).
pub fn domain_subset(h: &PositiveHypergraph, k: usize) -> BTreeSet<FaceId> {
    let mut out = BTreeSet::new();
    for l in 0..k {
        out.extend(h.level(l).iter().cloned());
    }
    let removed = h.gamma_set(h.level(k + 1));
    out.extend(h.level(k).iter().filter(|f| !removed.contains(*f)).cloned());
    out
}

/// Face subset of c⁽ᵏ⁾: level k loses δ(Sₖ₊₁), level k−1 loses ι(Sₖ₊₁),
/// lower levels unchanged.
pub fn codomain_subset(h: &PositiveHypergraph, k: usize) -> BTreeSet<FaceId> {
    let mut out = BTreeSet::new();
    if k >= 1 {
        for l in 0..k - 1 {
            out.extend(h.level(l).iter().cloned());
        }
        let internal = h.iota_set(h.level(k + 1)).expect("faces of dim >= 2");
        out.extend(
            h.level(k - 1)
                .iter()
                .filter(|f| !internal.contains(*f))
                .cloned(),
        );
    }
    let removed = h.delta_set(h.level(k + 1));
    out.extend(h.level(k).iter().filter(|f| !removed.contains(*f)).cloned());
    out
}

/// d⁽ᵏ⁾S as a validated structure.
pub fn domain_k(s: &FaceStructure, k: usize) -> Result<FaceStructure, OpError> {
    let dim = s.dim();
    if k > dim {
        return Err(OpError::BadLevel { level: k, dim });
    }
    let subset = domain_subset(s.hypergraph(), k);
    Ok(validate(&s.hypergraph().restrict(&subset))
        .expect("the k-domain of a face structure is a face structure"))
}

/// c⁽ᵏ⁾S as a validated structure.
pub fn codomain_k(s: &FaceStructure, k: usize) -> Result<FaceStructure, OpError> {
    let dim = s.dim();
    if k > dim {
        return Err(OpError::BadLevel { level: k, dim });
    }
    let subset = codomain_subset(s.hypergraph(), k);
    Ok(validate(&s.hypergraph().restrict(&subset))
        .expect("the k-codomain of a face structure is a face structure"))
}

/// The least sub-hypergraph [α] containing the face; it is a principal
/// face structure.
pub fn principal_span(s: &FaceStructure, alpha: &str) -> FaceStructure {
    span_of_set(s, std::iter::once(&alpha.to_string()).cloned().collect())
}

/// The least sub-hypergraph containing the given faces, validated.
pub fn span_of_set(s: &FaceStructure, faces: BTreeSet<FaceId>) -> FaceStructure {
    let subset = s.hypergraph().span(&faces);
    validate(&s.hypergraph().restrict(&subset))
        .expect("spans used by callers must validate; the span of one face always does")
}

/// pₗ of a normal structure: for l < dim the unique face outside
/// δ(Sₗ₊₁); for l = dim the <⁺-maximal face of the γ-pencil at p_{dim−1}.
pub fn distinguished_p(s: &FaceStructure, l: usize) -> Result<FaceId, OpError> {
    if !is_normal(s) {
        return Err(OpError::NotNormal);
    }
    let dim = s.dim();
    if l > dim {
        return Err(OpError::BadLevel { level: l, dim });
    }
    let h = s.hypergraph();
    if l < dim || dim == 0 {
        let removed = h.delta_set(h.level(l + 1));
        let mut rest = h.level(l).iter().filter(|f| !removed.contains(*f));
        let p = rest.next().expect("normality: size 1 below the top");
        debug_assert!(rest.next().is_none());
        Ok(p.clone())
    } else {
        let below = distinguished_p(s, dim - 1)?;
        let pencil: Vec<&FaceId> = h
            .level(dim)
            .iter()
            .filter(|a| h.gamma(a).unwrap() == &below)
            .collect();
        let mut best: Option<&FaceId> = None;
        for a in pencil {
            match best {
                None => best = Some(a),
                Some(b) => {
                    if s.orders().lt_plus(b, a).unwrap() {
                        best = Some(a);
                    }
                }
            }
        }
        best.cloned().ok_or(OpError::NotNormal)
    }
}

/// A name not yet used in the hypergraph, starting from `base`.
fn fresh_name(h: &PositiveHypergraph, base: &str) -> FaceId {
    if !h.contains(base) {
        return base.to_string();
    }
    for i in 0.. {
        let cand = format!("{base}_{i}");
        if !h.contains(&cand) {
            return cand;
        }
    }
    unreachable!()
}

/// The simple extension N• of a normal structure of dimension n: fresh
/// faces pₙ₊₁ (with δ = Nₙ, γ = pₙ) and pₙ (with δ = δ(Nₙ)−γ(Nₙ) and
/// γ = the unique face of γ(Nₙ)−δ(Nₙ)). For n = 0 a fresh vertex
/// becomes the new codomain endpoint.
pub fn simple_extension(n: &FaceStructure) -> Result<FaceStructure, OpError> {
    if !is_normal(n) {
        return Err(OpError::NotNormal);
    }
    let h = n.hypergraph();
    let dim = n.dim();
    let p_top = fresh_name(h, &format!("p${}", dim + 1));
    let p_new = fresh_name(h, &format!("p${dim}"));

    let mut levels: Vec<Vec<FaceId>> = h
        .levels()
        .iter()
        .map(|l| l.iter().cloned().collect())
        .collect();
    levels[dim].push(p_new.clone());
    levels.push(vec![p_top.clone()]);

    let mut gamma: Vec<(FaceId, FaceId)> = Vec::new();
    let mut delta: Vec<(FaceId, Vec<FaceId>)> = Vec::new();
    for f in h.faces() {
        if let Some(g) = h.gamma(f) {
            gamma.push((f.clone(), g.clone()));
            delta.push((f.clone(), h.delta(f).unwrap().iter().cloned().collect()));
        }
    }
    gamma.push((p_top.clone(), p_new.clone()));
    delta.push((p_top.clone(), h.level(dim).iter().cloned().collect()));

    // For dim = 0 the fresh face p_new is a vertex and carries no tables.
    if dim > 0 {
        let top = h.level(dim);
        let d_top = h.delta_set(top);
        let g_top = h.gamma_set(top);
        let p_delta: Vec<FaceId> = d_top.difference(&g_top).cloned().collect();
        let mut p_gamma = g_top.difference(&d_top).cloned();
        let target = p_gamma
            .next()
            .expect("normality: γ(Nₙ)−δ(Nₙ) is a singleton")
            .clone();
        debug_assert!(p_gamma.next().is_none());
        gamma.push((p_new.clone(), target));
        delta.push((p_new.clone(), p_delta));
    }

    let hg = PositiveHypergraph::build(levels, gamma, delta)
        .expect("simple extension tables are well-shaped");
    Ok(validate(&hg).expect("the simple extension of a normal structure validates"))
}

/// The globular generator αⁿ: level n = {2n}, level l < n = {2l, 2l+1};
/// every face at level l ≥ 1 has δ = {2l−1} and γ = 2l−2.
pub fn alpha(n: usize) -> FaceStructure {
    let mut levels: Vec<Vec<FaceId>> = Vec::new();
    for l in 0..n {
        levels.push(vec![(2 * l).to_string(), (2 * l + 1).to_string()]);
    }
    levels.push(vec![(2 * n).to_string()]);
    let mut gamma = Vec::new();
    let mut delta = Vec::new();
    for (l, level) in levels.iter().enumerate().skip(1) {
        for f in level {
            gamma.push((f.clone(), (2 * l - 2).to_string()));
            delta.push((f.clone(), vec![(2 * l - 1).to_string()]));
        }
    }
    let hg = PositiveHypergraph::build(levels, gamma, delta).expect("alpha tables are well-shaped");
    validate(&hg).expect("alpha(n) validates")
}

/// The unique isomorphism between two face structures, if one exists.
/// Rigidity makes the candidate unique: the i-th face in global order at
/// each level must map to the i-th face of the target.
pub fn unique_iso(s: &FaceStructure, t: &FaceStructure) -> Option<BTreeMap<FaceId, FaceId>> {
    let (hs, ht) = (s.hypergraph(), t.hypergraph());
    if hs.dim() != ht.dim() {
        return None;
    }
    let dim = s.dim();
    let mut map = BTreeMap::new();
    for k in 0..=dim {
        let from = sort_level(s, k);
        let to = sort_level(t, k);
        if from.len() != to.len() {
            return None;
        }
        for (a, b) in from.into_iter().zip(to) {
            map.insert(a, b);
        }
    }
    let morphism = crate::hypergraph::HgMorphism {
        source: hs.clone(),
        target: ht.clone(),
        map,
    };
    morphism.validate().ok().map(|()| morphism.map)
}

/// Special pushout S +ₖ T together with the two face embeddings into it.
/// The boundary c⁽ᵏ⁾S ≅ d⁽ᵏ⁾T is matched by its unique isomorphism; S
/// keeps its names, T's boundary takes the matching S names, and T's
/// remaining faces are renamed with the reserved `g$` prefix on collision.
pub fn special_pushout_full(
    s: &FaceStructure,
    t: &FaceStructure,
    k: usize,
) -> Result<(FaceStructure, BTreeMap<FaceId, FaceId>, BTreeMap<FaceId, FaceId>), OpError> {
    if k > s.dim() || k > t.dim() {
        return Err(OpError::BadLevel {
            level: k,
            dim: s.dim().min(t.dim()),
        });
    }
    let hs = s.hypergraph();
    let ht = t.hypergraph();
    let c_sub = codomain_subset(hs, k);
    let d_sub = domain_subset(ht, k);
    let c_struct = validate(&hs.restrict(&c_sub)).expect("codomain validates");
    let d_struct = validate(&ht.restrict(&d_sub)).expect("domain validates");
    let iso = unique_iso(&c_struct, &d_struct).ok_or(OpError::BoundaryMismatch(k))?;
    let iso_inv: BTreeMap<&FaceId, &FaceId> = iso.iter().map(|(a, b)| (b, a)).collect();

    // Rename T's faces: boundary faces take their glued S names; others
    // keep their names unless that would collide with an S face or an
    // already-chosen name.
    let mut t_rename: BTreeMap<FaceId, FaceId> = BTreeMap::new();
    let mut used: BTreeSet<FaceId> = hs.face_set();
    for f in ht.faces() {
        let new = if let Some(src) = iso_inv.get(f) {
            (*src).clone()
        } else if !used.contains(f) {
            f.clone()
        } else {
            let mut cand = format!("g${f}");
            let mut i = 0;
            while used.contains(&cand) {
                cand = format!("g${f}_{i}");
                i += 1;
            }
            cand
        };
        used.insert(new.clone());
        t_rename.insert(f.clone(), new);
    }

    let n_levels = hs.levels().len().max(ht.levels().len());
    let mut levels: Vec<Vec<FaceId>> = vec![Vec::new(); n_levels];
    let mut gamma: Vec<(FaceId, FaceId)> = Vec::new();
    let mut delta: Vec<(FaceId, Vec<FaceId>)> = Vec::new();
    for f in hs.faces() {
        levels[hs.dim_of(f).unwrap()].push(f.clone());
        if let Some(g) = hs.gamma(f) {
            gamma.push((f.clone(), g.clone()));
            delta.push((f.clone(), hs.delta(f).unwrap().iter().cloned().collect()));
        }
    }
    for f in ht.faces() {
        if iso_inv.contains_key(f) {
            continue; // glued: S already contributed this face
        }
        let name = t_rename[f].clone();
        levels[ht.dim_of(f).unwrap()].push(name.clone());
        if let Some(g) = ht.gamma(f) {
            gamma.push((name.clone(), t_rename[g].clone()));
            delta.push((
                name.clone(),
                ht.delta(f).unwrap().iter().map(|x| t_rename[x].clone()).collect(),
            ));
        }
    }
    let hg = PositiveHypergraph::build(levels, gamma, delta)
        .expect("pushout tables are well-shaped");
    let glued = validate(&hg).expect("a special pushout of face structures validates");
    let emb_s: BTreeMap<FaceId, FaceId> = hs.faces().map(|f| (f.clone(), f.clone())).collect();
    Ok((glued, emb_s, t_rename))
}

/// Special pushout S +ₖ T (gluing along c⁽ᵏ⁾S ≅ d⁽ᵏ⁾T).
pub fn special_pushout(
    s: &FaceStructure,
    t: &FaceStructure,
    k: usize,
) -> Result<FaceStructure, OpError> {
    special_pushout_full(s, t, k).map(|(g, _, _)| g)
}

/// α^{n0,n1,n2}: the pushout of αⁿ⁰ and αⁿ² over αⁿ¹ (n1 < n0, n2).
pub fn alpha_comp(n0: usize, n1: usize, n2: usize) -> Result<FaceStructure, OpError> {
    if n1 >= n0 || n1 >= n2 {
        return Err(OpError::BadArity(format!(
            "need n1 < n0 and n1 < n2, got ({n0},{n1},{n2})"
        )));
    }
    special_pushout(&alpha(n0), &alpha(n2), n1)
}

/// α^{n0,...,n4}: α^{n0,n1,n2} glued with αⁿ⁴ over αⁿ³ (n3 < n2, n4).
pub fn alpha_comp5(
    n0: usize,
    n1: usize,
    n2: usize,
    n3: usize,
    n4: usize,
) -> Result<FaceStructure, OpError> {
    if n3 >= n2 || n3 >= n4 {
        return Err(OpError::BadArity(format!(
            "need n3 < n2 and n3 < n4, got ({n0},{n1},{n2},{n3},{n4})"
        )));
    }
    // Associate so the middle gluing boundary is still a globe: gluing at
    // the lower level last keeps the higher-level boundary intact.
    if n1 <= n3 {
        special_pushout(&alpha(n0), &alpha_comp(n2, n3, n4)?, n1)
    } else {
        special_pushout(&alpha_comp(n0, n1, n2)?, &alpha(n4), n3)
    }
}

/// Result of globularization carrying the generated face names: `q[l]`
/// is the fresh face at level l, `p[l]` the distinguished face.
pub struct Globularized {
    pub structure: FaceStructure,
    pub q: BTreeMap<usize, FaceId>,
    pub p: BTreeMap<usize, FaceId>,
}

/// One collapse step: for an (l+1)-globular principal structure R,
/// produce the l-globular structure with level l replaced by {qₗ, pₗ}
/// (qₗ fresh, parallel to pₗ) and the lower levels cut down to the span
/// of pₗ.
pub(crate) fn one_step_globularize(r: &FaceStructure, l: usize) -> (FaceStructure, FaceId) {
    let h = r.hypergraph();
    let dim = r.dim();
    let p_l = distinguished_p(r, l).expect("principal input");
    let q_l = fresh_name(h, &format!("q${l}"));

    let span_p = h.span(std::iter::once(&p_l));
    let mut levels: Vec<Vec<FaceId>> = Vec::new();
    for m in 0..l {
        levels.push(
            h.level(m)
                .iter()
                .filter(|f| span_p.contains(*f))
                .cloned()
                .collect(),
        );
    }
    levels.push(vec![q_l.clone(), p_l.clone()]);
    for m in l + 1..=dim {
        levels.push(h.level(m).iter().cloned().collect());
    }

    let keep: BTreeSet<FaceId> = levels.iter().flatten().cloned().collect();
    let mut gamma: Vec<(FaceId, FaceId)> = Vec::new();
    let mut delta: Vec<(FaceId, Vec<FaceId>)> = Vec::new();
    for f in &keep {
        if f == &q_l {
            continue;
        }
        let fdim = h.dim_of(f).unwrap();
        if fdim == 0 {
            continue;
        }
        gamma.push((f.clone(), h.gamma(f).unwrap().clone()));
        if fdim == l + 1 {
            delta.push((f.clone(), vec![q_l.clone()]));
        } else {
            delta.push((f.clone(), h.delta(f).unwrap().iter().cloned().collect()));
        }
    }
    if l >= 1 {
        gamma.push((q_l.clone(), h.gamma(&p_l).unwrap().clone()));
        delta.push((q_l.clone(), h.delta(&p_l).unwrap().iter().cloned().collect()));
    }
    let hg = PositiveHypergraph::build(levels, gamma, delta)
        .expect("globularization tables are well-shaped");
    (
        validate(&hg).expect("a globularization step validates"),
        q_l,
    )
}

/// ⌊k⌋P with the generated names exposed.
pub fn globularize_full(p: &FaceStructure, k: usize) -> Result<Globularized, OpError> {
    if !is_principal(p) {
        return Err(OpError::NotPrincipal);
    }
    let dim = p.dim();
    if k > dim {
        return Err(OpError::BadLevel { level: k, dim });
    }
    let mut current = p.clone();
    let mut q = BTreeMap::new();
    for l in (k..dim).rev() {
        let (next, q_l) = one_step_globularize(&current, l);
        q.insert(l, q_l);
        current = next;
    }
    let mut p_names = BTreeMap::new();
    for l in 0..=dim {
        p_names.insert(l, distinguished_p(&current, l).expect("principal"));
    }
    Ok(Globularized {
        structure: current,
        q,
        p: p_names,
    })
}

/// The k-globularization ⌊k⌋P of a principal structure: every boundary
/// above level k collapsed to a single face; ⌊dim⌋P = P.
pub fn globularize(p: &FaceStructure, k: usize) -> Result<FaceStructure, OpError> {
    globularize_full(p, k).map(|g| g.structure)
}
