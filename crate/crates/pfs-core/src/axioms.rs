//! The four face-structure axioms as independent checkers, the weak/full
//! predicates, and the validated [`FaceStructure`] type.

use std::collections::BTreeSet;
use std::fmt;

use crate::hypergraph::{FaceId, PositiveHypergraph};
use crate::orders::OrderCache;

/// One concrete axiom violation: the faces involved and a readable reason.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub faces: Vec<FaceId>,
    pub reason: String,
}

impl Violation {
    fn new<I: IntoIterator<Item = S>, S: Into<FaceId>>(faces: I, reason: impl Into<String>) -> Self {
        Violation {
            faces: faces.into_iter().map(Into::into).collect(),
            reason: reason.into(),
        }
    }
}

/// Per-axiom violation lists. A list is empty iff the axiom passes;
/// checkers collect *all* violations, not just the first.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub nonempty: Vec<Violation>,
    pub globularity: Vec<Violation>,
    pub strictness: Vec<Violation>,
    pub disjointness: Vec<Violation>,
    pub pencil_linearity: Vec<Violation>,
}

impl AxiomReport {
    pub fn passes(&self) -> bool {
        self.passes_weak() && self.pencil_linearity.is_empty()
    }

    /// Everything except pencil linearity.
    pub fn passes_weak(&self) -> bool {
        self.nonempty.is_empty()
            && self.globularity.is_empty()
            && self.strictness.is_empty()
            && self.disjointness.is_empty()
    }

    fn merge(mut self, other: AxiomReport) -> AxiomReport {
        self.nonempty.extend(other.nonempty);
        self.globularity.extend(other.globularity);
        self.strictness.extend(other.strictness);
        self.disjointness.extend(other.disjointness);
        self.pencil_linearity.extend(other.pencil_linearity);
        self
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sections: [(&str, &Vec<Violation>); 5] = [
            ("nonempty", &self.nonempty),
            ("globularity", &self.globularity),
            ("strictness", &self.strictness),
            ("disjointness", &self.disjointness),
            ("pencil linearity", &self.pencil_linearity),
        ];
        for (name, violations) in sections {
            if violations.is_empty() {
                writeln!(f, "{name}: pass")?;
            } else {
                writeln!(f, "{name}: FAIL")?;
                for v in violations {
                    writeln!(f, "  [{}] {}", v.faces.join(", "), v.reason)?;
                }
            }
        }
        Ok(())
    }
}

fn fmt_set(s: &BTreeSet<FaceId>) -> String {
    let names: Vec<&str> = s.iter().map(String::as_str).collect();
    format!("{{{}}}", names.join(","))
}

/// Globularity: γγ(a) = γδ(a) − δδ(a) and δγ(a) = δδ(a) − γδ(a)
/// for every face of dimension ≥ 2.
pub fn check_globularity(h: &PositiveHypergraph) -> AxiomReport {
    let mut report = AxiomReport::default();
    for level in h.levels().iter().skip(2) {
        for a in level {
            let gd = h.gamma_set(h.delta(a).unwrap());
            let dd = h.delta_set(h.delta(a).unwrap());
            let gg: BTreeSet<FaceId> = [h.gamma(h.gamma(a).unwrap()).unwrap().clone()].into();
            let dg = h.delta(h.gamma(a).unwrap()).unwrap().clone();
            let gd_minus_dd: BTreeSet<FaceId> = gd.difference(&dd).cloned().collect();
            let dd_minus_gd: BTreeSet<FaceId> = dd.difference(&gd).cloned().collect();
            if gg != gd_minus_dd {
                report.globularity.push(Violation::new(
                    [a.clone()],
                    format!(
                        "γγ = {} but γδ−δδ = {}",
                        fmt_set(&gg),
                        fmt_set(&gd_minus_dd)
                    ),
                ));
            }
            if dg != dd_minus_gd {
                report.globularity.push(Violation::new(
                    [a.clone()],
                    format!(
                        "δγ = {} but δδ−γδ = {}",
                        fmt_set(&dg),
                        fmt_set(&dd_minus_gd)
                    ),
                ));
            }
        }
    }
    report
}

/// Strictness: <⁺ is a strict order at every dimension (the transitive
/// closure must be irreflexive) and <⁺ is linear on the 0-faces.
pub fn check_strictness(h: &PositiveHypergraph) -> AxiomReport {
    let cache = OrderCache::new(h);
    check_strictness_with(h, &cache)
}

pub(crate) fn check_strictness_with(h: &PositiveHypergraph, cache: &OrderCache) -> AxiomReport {
    let mut report = AxiomReport::default();
    for k in 0..h.levels().len() {
        for a in h.level(k) {
            if cache.lt_plus(a, a).unwrap() {
                report.strictness.push(Violation::new(
                    [a.clone()],
                    format!("face lies on a <⁺ cycle at dimension {k}"),
                ));
            }
        }
    }
    let vertices: Vec<&FaceId> = h.level(0).iter().collect();
    for (i, a) in vertices.iter().enumerate() {
        for b in &vertices[i + 1..] {
            if !cache.perp(crate::orders::Sign::Plus, a, b).unwrap() {
                report.strictness.push(Violation::new(
                    [(*a).clone(), (*b).clone()],
                    "0-faces are not <⁺-comparable (linearity fails)",
                ));
            }
        }
    }
    report
}

/// Disjointness: for k > 0 no pair of k-faces is comparable in both
/// orders (⊥⁻ ∩ ⊥⁺ = ∅).
pub fn check_disjointness(h: &PositiveHypergraph) -> AxiomReport {
    let cache = OrderCache::new(h);
    check_disjointness_with(h, &cache)
}

pub(crate) fn check_disjointness_with(h: &PositiveHypergraph, cache: &OrderCache) -> AxiomReport {
    use crate::orders::Sign;
    let mut report = AxiomReport::default();
    for k in 1..h.levels().len() {
        let faces: Vec<&FaceId> = h.level(k).iter().collect();
        for (i, a) in faces.iter().enumerate() {
            for b in &faces[i + 1..] {
                if cache.perp(Sign::Minus, a, b).unwrap() && cache.perp(Sign::Plus, a, b).unwrap() {
                    report.disjointness.push(Violation::new(
                        [(*a).clone(), (*b).clone()],
                        "pair comparable in both <⁻ and <⁺",
                    ));
                }
            }
        }
    }
    report
}

/// Pencil linearity (also called local linearity): for every k > 0 and
/// every (k−1)-face x, the γ-pencil {a : γ(a) = x} and the δ-pencil
/// {a : x ∈ δ(a)} are <⁺-chains.
pub fn check_pencil_linearity(h: &PositiveHypergraph) -> AxiomReport {
    let cache = OrderCache::new(h);
    check_pencil_linearity_with(h, &cache)
}

pub(crate) fn check_pencil_linearity_with(h: &PositiveHypergraph, cache: &OrderCache) -> AxiomReport {
    use crate::orders::Sign;
    let mut report = AxiomReport::default();
    for k in 1..h.levels().len() {
        for x in h.level(k - 1) {
            let gamma_pencil: Vec<&FaceId> =
                h.level(k).iter().filter(|a| h.gamma(a).unwrap() == x).collect();
            let delta_pencil: Vec<&FaceId> = h
                .level(k)
                .iter()
                .filter(|a| h.delta(a).unwrap().contains(x))
                .collect();
            for (name, pencil) in [("γ", gamma_pencil), ("δ", delta_pencil)] {
                for (i, a) in pencil.iter().enumerate() {
                    for b in &pencil[i + 1..] {
                        if !cache.perp(Sign::Plus, a, b).unwrap() {
                            report.pencil_linearity.push(Violation::new(
                                [(*a).clone(), (*b).clone()],
                                format!("{name}-pencil at `{x}` is not a <⁺-chain"),
                            ));
                        }
                    }
                }
            }
        }
    }
    report
}

fn check_nonempty(h: &PositiveHypergraph) -> AxiomReport {
    let mut report = AxiomReport::default();
    if h.dim().is_none() {
        report
            .nonempty
            .push(Violation::new(Vec::<FaceId>::new(), "structure is empty"));
    }
    report
}

fn full_report(h: &PositiveHypergraph) -> AxiomReport {
    let cache = OrderCache::new(h);
    check_nonempty(h)
        .merge(check_globularity(h))
        .merge(check_strictness_with(h, &cache))
        .merge(check_disjointness_with(h, &cache))
        .merge(check_pencil_linearity_with(h, &cache))
}

/// Weak face structure: nonempty + globular + strict + disjoint (pencil
/// linearity not required). Returns the verdict together with the report.
pub fn is_weak_pfs(h: &PositiveHypergraph) -> (bool, AxiomReport) {
    let report = full_report(h);
    (report.passes_weak(), report)
}

/// A hypergraph certified against all the axioms, carrying its order
/// cache. Obtained through [`validate`].
#[derive(Debug, Clone)]
pub struct FaceStructure {
    hg: PositiveHypergraph,
    orders: OrderCache,
}

impl PartialEq for FaceStructure {
    fn eq(&self, other: &Self) -> bool {
        self.hg == other.hg
    }
}
impl Eq for FaceStructure {}
impl PartialOrd for FaceStructure {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for FaceStructure {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.hg.cmp(&other.hg)
    }
}

impl FaceStructure {
    pub fn hypergraph(&self) -> &PositiveHypergraph {
        &self.hg
    }

    pub fn orders(&self) -> &OrderCache {
        &self.orders
    }

    /// Dimension; a validated structure is nonempty so this is total.
    pub fn dim(&self) -> usize {
        self.hg.dim().expect("validated structures are nonempty")
    }
}

/// Checks all axioms and returns the certified structure, or the full
/// violation report.
pub fn validate(h: &PositiveHypergraph) -> Result<FaceStructure, AxiomReport> {
    let report = full_report(h);
    if report.passes() {
        Ok(FaceStructure {
            hg: h.clone(),
            orders: OrderCache::new(h),
        })
    } else {
        Err(report)
    }
}

/// Validates a γ/δ-closed subset of a hypergraph as a standalone structure.
pub fn validate_subset(
    h: &PositiveHypergraph,
    subset: &BTreeSet<FaceId>,
) -> Result<FaceStructure, AxiomReport> {
    validate(&h.restrict(subset))
}
