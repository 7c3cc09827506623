//! Law-checking suites. Each suite sweeps a family of identities over a
//! catalog of face structures and returns human-readable counterexample
//! descriptions; an empty vector means every checked instance holds.
//!
//! The suites are shared by the acceptance tests and the `laws` CLI
//! subcommand, so all reporting goes through plain strings.

use std::collections::{BTreeMap, BTreeSet};

use crate::axioms::{validate_subset, FaceStructure};
use crate::computad::{
    bang, cell_compose, cell_identity, cells_equal, describe, evaluate, fixture_loop,
    fixture_two_gen, hom_cells, indet_cell, presheaf_of, realize_presheaf, shape_key,
    terminal_cell, terminal_computad, Computad, LabeledCell,
};
use crate::decompose::{
    composed_size, decompose, down, down_rel, evaluate_all_orders, saddles_of, up, up_rel,
};
use crate::enumerate::{canonical_form, enumerate_morphisms, iso_equal};
use crate::hypergraph::{FaceId, PositiveHypergraph};
use crate::omega::{cells, check_omega_laws, check_principal_pushout, verify_harnik};
use crate::orders::{global_lt, lt_graded, Sign};
use crate::structure_ops::{
    alpha, codomain_k, codomain_subset, domain_k, domain_subset, is_k_principal,
    is_normal, is_principal, simple_extension, size, special_pushout, special_pushout_full,
    span_of_set, unique_iso,
};

/// All words over {γ, δ} of the given length, as `g`/`d` strings.
fn words(len: usize) -> Vec<String> {
    let mut out = vec![String::new()];
    for _ in 0..len {
        out = out
            .iter()
            .flat_map(|w| ["g", "d"].iter().map(move |c| format!("{w}{c}")))
            .collect();
    }
    out
}

fn entry_tag(i: usize, s: &FaceStructure) -> String {
    format!("entry {i} (dim {})", s.dim())
}

// ---------------------------------------------------------------------
// Atlas suite: the interaction of γ, δ and ι on single faces.
// ---------------------------------------------------------------------

/// Identities relating δγ, γγ, δδ, γδ and ι on every face, plus the
/// word-level corollaries about iterated γ/δ applications.
pub fn atlas_suite(catalog: &[FaceStructure]) -> Vec<String> {
    let mut bad = Vec::new();
    for (i, s) in catalog.iter().enumerate() {
        let h = s.hypergraph();
        let tag = entry_tag(i, s);
        for a in h.faces() {
            let n = h.dim_of(a).unwrap();
            let start = BTreeSet::from([a.clone()]);
            if n >= 2 {
                let dg = h.image("dg", &start).unwrap();
                let gg = h.image("gg", &start).unwrap();
                let dd = h.image("dd", &start).unwrap();
                let gd = h.image("gd", &start).unwrap();
                let iota = h.iota_face(a).unwrap();
                if !dg.is_disjoint(&iota) || !dg.is_disjoint(&gg) || !iota.is_disjoint(&gg) {
                    bad.push(format!("{tag}: δγ, ι, γγ of `{a}` are not pairwise disjoint"));
                }
                if dd != dg.union(&iota).cloned().collect() {
                    bad.push(format!("{tag}: δδ(`{a}`) ≠ δγ(`{a}`) ∪ ι(`{a}`)"));
                }
                if gd != gg.union(&iota).cloned().collect() {
                    bad.push(format!("{tag}: γδ(`{a}`) ≠ γγ(`{a}`) ∪ ι(`{a}`)"));
                }
            }
            if n >= 3 {
                let ig = h.iota_face(h.gamma(a).unwrap()).unwrap();
                let dgg = h.image("dgg", &start).unwrap();
                let dgd = h.image("dgd", &start).unwrap();
                let ddg = h.image("ddg", &start).unwrap();
                let ddd = h.image("ddd", &start).unwrap();
                let chain = dgg.is_subset(&dgd)
                    && dgd.is_subset(&dgg.union(&ig).cloned().collect())
                    && dgg.union(&ig).cloned().collect::<BTreeSet<_>>() == ddg
                    && ddg == ddd;
                if !chain {
                    bad.push(format!("{tag}: δ-chain δγγ ⊆ δγδ ⊆ δγγ∪ιγ = δδγ = δδδ fails at `{a}`"));
                }
                let ggg = h.image("ggg", &start).unwrap();
                let ggd = h.image("ggd", &start).unwrap();
                let gdg = h.image("gdg", &start).unwrap();
                let gdd = h.image("gdd", &start).unwrap();
                let chain = ggg.is_subset(&ggd)
                    && ggd.is_subset(&ggg.union(&ig).cloned().collect())
                    && ggg.union(&ig).cloned().collect::<BTreeSet<_>>() == gdg
                    && gdg == gdd;
                if !chain {
                    bad.push(format!("{tag}: γ-chain γγγ ⊆ γγδ ⊆ γγγ∪ιγ = γδγ = γδδ fails at `{a}`"));
                }
            }
            // Iterated-word corollaries, for 1 ≤ k < n.
            for k in 1..n {
                let gk: BTreeSet<FaceId> = BTreeSet::from([h.gamma_to(a, n - k).unwrap()]);
                let dk = h.image(&"d".repeat(k), &start).unwrap();
                if !dk.is_disjoint(&gk) {
                    bad.push(format!("{tag}: δ^{k}(`{a}`) meets γ^{k}(`{a}`)"));
                }
                let boundary: BTreeSet<FaceId> = dk.union(&gk).cloned().collect();
                for xi in words(k - 1) {
                    if !gk.is_subset(&h.image(&format!("g{xi}"), &start).unwrap()) {
                        bad.push(format!("{tag}: γ^{k}(`{a}`) ⊄ γ·{xi}(`{a}`)"));
                    }
                    if !h.image(&format!("d{xi}"), &start).unwrap().is_subset(&dk) {
                        bad.push(format!("{tag}: δ·{xi}(`{a}`) ⊄ δ^{k}(`{a}`)"));
                    }
                }
                for xi in words(k) {
                    if !h.image(&xi, &start).unwrap().is_subset(&boundary) {
                        bad.push(format!("{tag}: word {xi}(`{a}`) escapes γ^{k} ∪ δ^{k}"));
                    }
                }
                if k >= 2 {
                    let dd_ref = h.image(&format!("dd{}", "g".repeat(k - 2)), &start).unwrap();
                    let gd_ref = h.image(&format!("gd{}", "g".repeat(k - 2)), &start).unwrap();
                    for xi in words(k - 2) {
                        if h.image(&format!("dd{xi}"), &start).unwrap() != dd_ref {
                            bad.push(format!("{tag}: δδ·{xi}(`{a}`) depends on the word"));
                        }
                        if h.image(&format!("gd{xi}"), &start).unwrap() != gd_ref {
                            bad.push(format!("{tag}: γδ·{xi}(`{a}`) depends on the word"));
                        }
                        if k > 2
                            && h.image(&format!("{xi}dg"), &start).unwrap()
                                != h.image(&format!("{xi}dd"), &start).unwrap()
                        {
                            bad.push(format!("{tag}: {xi}·δγ(`{a}`) ≠ {xi}·δδ(`{a}`)"));
                        }
                    }
                    let ig_part = h
                        .iota_face(&h.gamma_to(a, n - (k - 2)).unwrap())
                        .unwrap();
                    let rhs: BTreeSet<FaceId> = h
                        .image(&format!("d{}", "g".repeat(k - 1)), &start)
                        .unwrap()
                        .union(&ig_part)
                        .cloned()
                        .collect();
                    if dk != rhs {
                        bad.push(format!("{tag}: δ^{k}(`{a}`) ≠ δγ^{}(`{a}`) ∪ ιγ^{}(`{a}`)", k - 1, k - 2));
                    }
                }
            }
        }
    }
    bad
}

// ---------------------------------------------------------------------
// Order suite: comparability, linearity, the comparison pattern,
// successors, and the γ-compatibility of the orders.
// ---------------------------------------------------------------------

/// Order laws: the ⊥⁺/⊥⁻ dichotomy with a unique ⊥⁻ level, linearity
/// and transitivity of the global order, the level-by-level comparison
/// pattern for distinct same-dimension faces, the successor rule for
/// <⁺-minimal witnesses, and the γ-monotonicity facts.
pub fn order_suite(catalog: &[FaceStructure]) -> Vec<String> {
    let mut bad = Vec::new();
    for (i, s) in catalog.iter().enumerate() {
        let h = s.hypergraph();
        let o = s.orders();
        let tag = entry_tag(i, s);
        for n in 0..=s.dim() {
            let faces: Vec<&FaceId> = h.level(n).iter().collect();
            for (ai, a) in faces.iter().enumerate() {
                for b in &faces[ai + 1..] {
                    let plus = o.perp(Sign::Plus, a, b).unwrap();
                    let minus_levels: Vec<usize> = (0..=n)
                        .filter(|&l| {
                            let ga = h.gamma_to(a, l).unwrap();
                            let gb = h.gamma_to(b, l).unwrap();
                            o.perp(Sign::Minus, &ga, &gb).unwrap()
                        })
                        .collect();
                    let ok = if plus {
                        minus_levels.is_empty()
                    } else {
                        minus_levels.len() == 1
                    };
                    if !ok {
                        bad.push(format!(
                            "{tag}: `{a}`/`{b}` violate the ⊥⁺/unique-⊥⁻-level dichotomy \
                             (⊥⁺={plus}, ⊥⁻ levels {minus_levels:?})"
                        ));
                    }
                    // Global-order trichotomy.
                    let ab = global_lt(s, a, b).unwrap();
                    let ba = global_lt(s, b, a).unwrap();
                    if ab == ba {
                        bad.push(format!("{tag}: global order not linear on `{a}`/`{b}`"));
                    }
                    if !comparison_pattern(h, o, a, b, n) {
                        bad.push(format!("{tag}: no comparison pattern for `{a}`/`{b}`"));
                    }
                }
            }
            // Transitivity of the global order.
            for a in &faces {
                for b in &faces {
                    for c in &faces {
                        if global_lt(s, a, b).unwrap()
                            && global_lt(s, b, c).unwrap()
                            && !global_lt(s, a, c).unwrap()
                        {
                            bad.push(format!("{tag}: global order not transitive at `{a}`<`{b}`<`{c}`"));
                        }
                    }
                }
            }
            // Successor rule: for a <⁺-minimal witness α one level up,
            // γ(α) directly succeeds every element of δ(α).
            if n >= 1 {
                for alpha_face in h.level(n) {
                    let minimal = h
                        .level(n)
                        .iter()
                        .all(|x| x == alpha_face || !o.lt_plus(x, alpha_face).unwrap());
                    if !minimal {
                        continue;
                    }
                    let b = h.gamma(alpha_face).unwrap();
                    for a in h.delta(alpha_face).unwrap() {
                        let succ = o.lt_plus(a, b).unwrap()
                            && h.level(n - 1).iter().all(|c| {
                                !(o.lt_plus(a, c).unwrap() && o.lt_plus(c, b).unwrap())
                            });
                        if !succ {
                            bad.push(format!(
                                "{tag}: γ(`{alpha_face}`) is not the <⁺-successor of `{a}`"
                            ));
                        }
                    }
                }
            }
            // γ-compatibility of the one-level-down orders.
            if n >= 1 {
                for a in &faces {
                    for b in &faces {
                        if a == b {
                            continue;
                        }
                        let ga = h.gamma(a).unwrap();
                        let gb = h.gamma(b).unwrap();
                        if ga == gb && !o.perp(Sign::Plus, a, b).unwrap() {
                            bad.push(format!("{tag}: γ(`{a}`)=γ(`{b}`) but not ⊥⁺"));
                        }
                        if o.lt_plus(ga, gb).unwrap()
                            && !(o.lt_plus(a, b).unwrap() || o.lt_minus(a, b).unwrap())
                        {
                            bad.push(format!("{tag}: γ`{a}` <⁺ γ`{b}` but `{a}`,`{b}` unrelated"));
                        }
                        if o.lt_plus(a, b).unwrap() && !o.le_plus(ga, gb).unwrap() {
                            bad.push(format!("{tag}: `{a}` <⁺ `{b}` but γ`{a}` ≰⁺ γ`{b}`"));
                        }
                        if o.lt_minus(a, b).unwrap() && !o.lt_plus(ga, gb).unwrap() {
                            bad.push(format!("{tag}: `{a}` <⁻ `{b}` but γ`{a}` ≮⁺ γ`{b}`"));
                        }
                        if o.perp(Sign::Minus, ga, gb).unwrap()
                            && (o.perp(Sign::Minus, a, b).unwrap()
                                || o.perp(Sign::Plus, a, b).unwrap())
                        {
                            bad.push(format!("{tag}: γ`{a}` ⊥⁻ γ`{b}` but `{a}`,`{b}` comparable"));
                        }
                    }
                }
            }
        }
    }
    bad
}

/// Does some orientation of (a, b) match the level-by-level comparison
/// pattern: equal below l, <⁺ from l to k, <⁻ at k+1, incomparable above?
fn comparison_pattern(
    h: &PositiveHypergraph,
    o: &crate::orders::OrderCache,
    a: &str,
    b: &str,
    n: usize,
) -> bool {
    let seq = |x: &str| -> Vec<FaceId> { (0..=n).map(|i| h.gamma_to(x, i).unwrap()).collect() };
    let av = seq(a);
    let bv = seq(b);
    let fits = |xs: &[FaceId], ys: &[FaceId]| -> bool {
        for l in 0..=n {
            for k in l..=n {
                let mut ok = true;
                for i in 0..=n {
                    let good = if i < l {
                        xs[i] == ys[i]
                    } else if i <= k {
                        o.lt_plus(&xs[i], &ys[i]).unwrap()
                    } else if i == k + 1 {
                        o.lt_minus(&xs[i], &ys[i]).unwrap()
                    } else {
                        !o.perp(Sign::Plus, &xs[i], &ys[i]).unwrap()
                            && !o.perp(Sign::Minus, &xs[i], &ys[i]).unwrap()
                    };
                    if !good {
                        ok = false;
                        break;
                    }
                }
                if ok {
                    return true;
                }
            }
        }
        false
    };
    fits(&av, &bv) || fits(&bv, &av)
}

// ---------------------------------------------------------------------
// Domain/codomain algebra suite.
// ---------------------------------------------------------------------

/// Laws of the d⁽ᵏ⁾/c⁽ᵏ⁾ operators: validity and dimension, tower
/// coherence, globularity of the boundary pair, the values on principal
/// spans, and the principal/normal transfer rules.
pub fn dc_suite(catalog: &[FaceStructure]) -> Vec<String> {
    let mut bad = Vec::new();
    for (i, s) in catalog.iter().enumerate() {
        let h = s.hypergraph();
        let n = s.dim();
        let tag = entry_tag(i, s);
        for k in 0..=n {
            match (domain_k(s, k), codomain_k(s, k)) {
                (Ok(d), Ok(c)) => {
                    if d.dim() != k || c.dim() != k {
                        bad.push(format!("{tag}: d⁽{k}⁾/c⁽{k}⁾ have wrong dimension"));
                    }
                    if k < n {
                        let dd = domain_k(&domain_k(s, k + 1).unwrap(), k).unwrap();
                        let cc = codomain_k(&codomain_k(s, k + 1).unwrap(), k).unwrap();
                        if dd.hypergraph().face_set() != d.hypergraph().face_set() {
                            bad.push(format!("{tag}: d d⁽{}⁾ ≠ d⁽{k}⁾", k + 1));
                        }
                        if cc.hypergraph().face_set() != c.hypergraph().face_set() {
                            bad.push(format!("{tag}: c c⁽{}⁾ ≠ c⁽{k}⁾", k + 1));
                        }
                    }
                }
                _ => bad.push(format!("{tag}: d⁽{k}⁾ or c⁽{k}⁾ failed to validate")),
            }
        }
        if n >= 2 {
            let d1 = domain_k(s, n - 1).unwrap();
            let c1 = codomain_k(s, n - 1).unwrap();
            let dd = domain_k(&d1, n - 2).unwrap().hypergraph().face_set();
            let dc = domain_k(&c1, n - 2).unwrap().hypergraph().face_set();
            let cd = codomain_k(&d1, n - 2).unwrap().hypergraph().face_set();
            let cc = codomain_k(&c1, n - 2).unwrap().hypergraph().face_set();
            if dd != dc {
                bad.push(format!("{tag}: ddS ≠ dcS"));
            }
            if cd != cc {
                bad.push(format!("{tag}: cdS ≠ ccS"));
            }
        }
        // Values on principal spans: c[α] = [γ(α)], d[α] = [δ(α)].
        for a in h.faces() {
            let k = h.dim_of(a).unwrap();
            if k == 0 {
                continue;
            }
            let span = span_of_set(s, BTreeSet::from([a.clone()]));
            let c_span = codomain_k(&span, k - 1).unwrap().hypergraph().face_set();
            let d_span = domain_k(&span, k - 1).unwrap().hypergraph().face_set();
            let g_span = span_of_set(s, BTreeSet::from([h.gamma(a).unwrap().clone()]))
                .hypergraph()
                .face_set();
            let del_span = span_of_set(s, h.delta(a).unwrap().clone())
                .hypergraph()
                .face_set();
            if c_span != g_span {
                bad.push(format!("{tag}: c[{a}] ≠ [γ({a})]"));
            }
            if d_span != del_span {
                bad.push(format!("{tag}: d[{a}] ≠ [δ({a})]"));
            }
        }
        // Principality/normality transfer.
        for k in 1..=n {
            let lhs = is_k_principal(s, k - 1);
            let mid = is_normal(&domain_k(s, k).unwrap());
            let rhs = is_principal(&codomain_k(s, k - 1).unwrap());
            if lhs != mid || mid != rhs {
                bad.push(format!(
                    "{tag}: ({}-principal: {lhs}) ⇔ (d⁽{k}⁾ normal: {mid}) ⇔ (c⁽{}⁾ principal: {rhs}) fails",
                    k - 1,
                    k - 1
                ));
            }
        }
        if n >= 1 {
            if is_normal(s) && !is_normal(&domain_k(s, n - 1).unwrap()) {
                bad.push(format!("{tag}: normal but dS is not normal"));
            }
            if is_principal(s) && !is_principal(&codomain_k(s, n - 1).unwrap()) {
                bad.push(format!("{tag}: principal but cS is not principal"));
            }
        }
    }
    bad
}

// ---------------------------------------------------------------------
// Pushout suite.
// ---------------------------------------------------------------------

/// Special pushouts over all composable catalog pairs: the glued result
/// validates, its size obeys the composition arithmetic, and the square
/// is a genuine pushout against every small catalog target.
pub fn pushout_suite(catalog: &[FaceStructure]) -> Vec<String> {
    let mut bad = Vec::new();
    let targets: Vec<&FaceStructure> = catalog
        .iter()
        .filter(|u| u.hypergraph().face_count() <= 6)
        .collect();
    for (i, s) in catalog.iter().enumerate() {
        for (j, t) in catalog.iter().enumerate() {
            for k in 0..s.dim().min(t.dim()) {
                let c_s = codomain_k(s, k).unwrap();
                let d_t = domain_k(t, k).unwrap();
                if unique_iso(&c_s, &d_t).is_none() {
                    if special_pushout(s, t, k).is_ok() {
                        bad.push(format!(
                            "pair ({i},{j}) at {k}: not composable but the pushout succeeded"
                        ));
                    }
                    continue;
                }
                let Ok((glued, emb_s, t_ren)) = special_pushout_full(s, t, k) else {
                    bad.push(format!("pair ({i},{j}) at {k}: composable but the pushout failed"));
                    continue;
                };
                let expected = composed_size(&size(s), &size(t), k);
                if size(&glued) != expected {
                    bad.push(format!("pair ({i},{j}) at {k}: size arithmetic violated"));
                }
                bad.extend(
                    universal_property(s, t, k, &glued, &emb_s, &t_ren, &targets)
                        .into_iter()
                        .map(|m| format!("pair ({i},{j}) at {k}: {m}")),
                );
            }
        }
    }
    bad
}

/// For every small target U: pairs of morphisms out of S and T that
/// agree on the glued boundary correspond bijectively to morphisms out
/// of the pushout.
fn universal_property(
    s: &FaceStructure,
    t: &FaceStructure,
    k: usize,
    glued: &FaceStructure,
    emb_s: &BTreeMap<FaceId, FaceId>,
    t_ren: &BTreeMap<FaceId, FaceId>,
    targets: &[&FaceStructure],
) -> Vec<String> {
    let mut bad = Vec::new();
    let boundary = domain_subset(t.hypergraph(), k);
    for u in targets {
        let from_s = enumerate_morphisms(s, u);
        let from_t = enumerate_morphisms(t, u);
        let from_p = enumerate_morphisms(glued, u);
        let mut compatible = 0usize;
        for f in &from_s {
            for g in &from_t {
                if !boundary.iter().all(|y| f.map[&t_ren[y]] == g.map[y]) {
                    continue;
                }
                compatible += 1;
                let mediators = from_p
                    .iter()
                    .filter(|m| {
                        f.map.iter().all(|(x, fx)| &m.map[&emb_s[x]] == fx)
                            && g.map.iter().all(|(y, gy)| &m.map[&t_ren[y]] == gy)
                    })
                    .count();
                if mediators != 1 {
                    bad.push(format!(
                        "cocone into a {}-face target has {mediators} mediators",
                        u.hypergraph().face_count()
                    ));
                }
            }
        }
        if compatible != from_p.len() {
            bad.push(format!(
                "{} maps out of the pushout vs {compatible} compatible cocones",
                from_p.len()
            ));
        }
    }
    bad
}

// ---------------------------------------------------------------------
// Decomposition suite.
// ---------------------------------------------------------------------

/// ↓/↑ applied to the full face set at a pivot, `None` when undefined.
fn dec(
    ambient: &FaceStructure,
    x: &BTreeSet<FaceId>,
    a: &str,
    downward: bool,
) -> Option<BTreeSet<FaceId>> {
    if downward {
        down_rel(ambient, x, a).ok()
    } else {
        up_rel(ambient, x, a).ok()
    }
}

fn sub(ambient: &FaceStructure, x: &BTreeSet<FaceId>) -> FaceStructure {
    validate_subset(ambient.hypergraph(), x).expect("decomposition piece validates")
}

/// c⁽ᵏ⁾ of a face subset, as a face subset of the ambient structure.
fn c_sub(ambient: &FaceStructure, x: &BTreeSet<FaceId>, k: usize) -> BTreeSet<FaceId> {
    codomain_subset(sub(ambient, x).hypergraph(), k)
}

/// d⁽ᵏ⁾ of a face subset, as a face subset of the ambient structure.
fn d_sub(ambient: &FaceStructure, x: &BTreeSet<FaceId>, k: usize) -> BTreeSet<FaceId> {
    domain_subset(sub(ambient, x).hypergraph(), k)
}

fn is_saddle_of(ambient: &FaceStructure, x: &BTreeSet<FaceId>, a: &str) -> bool {
    crate::decompose::is_saddle(ambient, x, a)
}

/// Decomposition laws: the boundary and gluing equations at one pivot,
/// commutation of decompositions across and within dimensions, the
/// transfer of decompositions through d/c, recognition of decomposition
/// pairs, and order independence of full evaluation.
pub fn decomp_suite(catalog: &[FaceStructure]) -> Vec<String> {
    let mut bad = Vec::new();
    for (i, x) in catalog.iter().enumerate() {
        let h = x.hypergraph();
        let whole = h.face_set();
        let n = x.dim();
        let tag = entry_tag(i, x);
        let pivots: Vec<FaceId> = h
            .faces()
            .filter(|a| decompose(x, &whole, a).is_ok())
            .cloned()
            .collect();

        for a in &pivots {
            let k = h.dim_of(a).unwrap();
            let lo = down(x, &whole, a).unwrap();
            let hi = up(x, &whole, a).unwrap();
            // Boundary equations at the pivot level.
            let meet: BTreeSet<FaceId> = lo.intersection(&hi).cloned().collect();
            if c_sub(x, &lo, k) != meet || d_sub(x, &hi, k) != meet {
                bad.push(format!("{tag}: c⁽{k}⁾(X↓{a}) = d⁽{k}⁾(X↑{a}) = X↓{a} ∩ X↑{a} fails"));
            }
            if d_sub(x, &lo, k) != d_sub(x, &whole, k) {
                bad.push(format!("{tag}: d⁽{k}⁾(X↓{a}) ≠ d⁽{k}⁾X"));
            }
            if c_sub(x, &hi, k) != c_sub(x, &whole, k) {
                bad.push(format!("{tag}: c⁽{k}⁾(X↑{a}) ≠ c⁽{k}⁾X"));
            }
            // Gluing back along the pivot level.
            if lo.union(&hi).cloned().collect::<BTreeSet<_>>() != whole {
                bad.push(format!("{tag}: X↓{a} ∪ X↑{a} ≠ X"));
            }
            match special_pushout(&sub(x, &lo), &sub(x, &hi), k) {
                Ok(p) if iso_equal(&p, x) => {}
                _ => bad.push(format!("{tag}: X↓{a} +_{k} X↑{a} does not rebuild X")),
            }
        }

        // Commutation and gluing across pivot pairs.
        for a in &pivots {
            for b in &pivots {
                let ka = h.dim_of(a).unwrap();
                let kb = h.dim_of(b).unwrap();
                if ka < kb {
                    bad.extend(
                        cross_dim_pair(x, &whole, a, b)
                            .into_iter()
                            .map(|m| format!("{tag}: {m}")),
                    );
                } else if ka == kb && a < b {
                    bad.extend(
                        same_dim_pair(x, &whole, a, b)
                            .into_iter()
                            .map(|m| format!("{tag}: {m}")),
                    );
                }
            }
        }

        // Transfer through d/c for saddles at least two levels down.
        let saddles = saddles_of(x);
        if n >= 1 {
            let d_all = d_sub(x, &whole, n - 1);
            let c_all = c_sub(x, &whole, n - 1);
            let d_struct = sub(x, &d_all);
            let c_struct = sub(x, &c_all);
            for a in &saddles {
                if h.dim_of(a).unwrap() + 1 >= n {
                    continue;
                }
                if !is_saddle_of(x, &d_all, a) || !is_saddle_of(x, &c_all, a) {
                    bad.push(format!("{tag}: saddle `{a}` is not a saddle of dX and cX"));
                    continue;
                }
                let checks: [(&str, BTreeSet<FaceId>, BTreeSet<FaceId>); 4] = [
                    ("d(X↓a)=(dX)↓a",
                        d_sub(x, &down(x, &whole, a).unwrap(), n - 1),
                        down(&d_struct, &d_all, a).unwrap()),
                    ("d(X↑a)=(dX)↑a",
                        d_sub(x, &up(x, &whole, a).unwrap(), n - 1),
                        up(&d_struct, &d_all, a).unwrap()),
                    ("c(X↓a)=(cX)↓a",
                        c_sub(x, &down(x, &whole, a).unwrap(), n - 1),
                        down(&c_struct, &c_all, a).unwrap()),
                    ("c(X↑a)=(cX)↑a",
                        c_sub(x, &up(x, &whole, a).unwrap(), n - 1),
                        up(&c_struct, &c_all, a).unwrap()),
                ];
                for (name, lhs, rhs) in checks {
                    if lhs != rhs {
                        bad.push(format!("{tag}: {name} fails at `{a}`"));
                    }
                }
            }
        }

        // Recognition of decomposition pairs.
        for a0 in &saddles {
            bad.extend(
                decomposition_pair_laws(x, &whole, a0)
                    .into_iter()
                    .map(|m| format!("{tag}: {m}")),
            );
        }

        // Order independence of full evaluation.
        if saddles.len() <= 3 {
            for result in evaluate_all_orders(x) {
                if !iso_equal(&result, x) {
                    bad.push(format!("{tag}: evaluation order changed the composite"));
                }
            }
        }
    }
    bad
}

/// The cross-dimension commutation, boundary and gluing equations for a
/// pivot pair with dim(x_p) < dim(a).
fn cross_dim_pair(
    x: &FaceStructure,
    whole: &BTreeSet<FaceId>,
    x_p: &str,
    a: &str,
) -> Vec<String> {
    let mut bad = Vec::new();
    let h = x.hypergraph();
    let k = h.dim_of(x_p).unwrap();
    let m = h.dim_of(a).unwrap();
    // piece[xd][ad]: first decompose at x_p (direction xd), then at a.
    let mut piece = [[None, None], [None, None]];
    for (xi, xd) in [true, false].into_iter().enumerate() {
        for (ai, ad) in [true, false].into_iter().enumerate() {
            let first = dec(x, whole, x_p, xd);
            let lhs = first.as_ref().and_then(|p| dec(x, p, a, ad));
            let other = dec(x, whole, a, ad);
            let rhs = other.as_ref().and_then(|p| dec(x, p, x_p, xd));
            if lhs != rhs {
                bad.push(format!(
                    "iterated pieces at `{x_p}`/`{a}` differ between the two orders ({xd},{ad})"
                ));
            }
            piece[xi][ai] = lhs;
        }
    }
    // Saddle transfer: x_p stays a saddle in both a-pieces.
    if is_saddle_of(x, whole, x_p) {
        for ad in [true, false] {
            if let Some(p) = dec(x, whole, a, ad) {
                if !is_saddle_of(x, &p, x_p) {
                    bad.push(format!("saddle `{x_p}` lost in a piece at `{a}`"));
                }
            }
        }
    }
    let [[dd, du], [ud, uu]] = piece;
    if let (Some(dd), Some(du), Some(ud), Some(uu)) = (&dd, &du, &ud, &uu) {
        // Boundary equations.
        let ck = c_sub(x, dd, k);
        if c_sub(x, du, k) != ck || d_sub(x, ud, k) != ck || d_sub(x, uu, k) != ck {
            bad.push(format!("level-{k} boundaries of the four pieces at `{x_p}`/`{a}` differ"));
        }
        if c_sub(x, dd, m) != d_sub(x, du, m) || c_sub(x, ud, m) != d_sub(x, uu, m) {
            bad.push(format!("level-{m} boundaries of the pieces at `{x_p}`/`{a}` differ"));
        }
        // Gluing equations.
        let glue_checks: [(&BTreeSet<FaceId>, &BTreeSet<FaceId>, usize, Option<BTreeSet<FaceId>>); 4] = [
            (dd, du, m, dec(x, whole, x_p, true)),
            (ud, uu, m, dec(x, whole, x_p, false)),
            (dd, ud, k, dec(x, whole, a, true)),
            (du, uu, k, dec(x, whole, a, false)),
        ];
        for (p1, p2, lvl, target) in glue_checks {
            let Some(target) = target else { continue };
            if p1.union(p2).cloned().collect::<BTreeSet<_>>() != target {
                bad.push(format!("pieces at `{x_p}`/`{a}` do not reassemble at level {lvl}"));
                continue;
            }
            let s1 = sub(x, p1);
            let s2 = sub(x, p2);
            // At or above a piece's dimension the composition is an
            // identity gluing; the union equality already covers it.
            if lvl >= s1.dim().min(s2.dim()) {
                continue;
            }
            match special_pushout(&s1, &s2, lvl) {
                Ok(p) if iso_equal(&p, &sub(x, &target)) => {}
                _ => bad.push(format!("piece pushout at `{x_p}`/`{a}` level {lvl} fails")),
            }
        }
    }
    bad
}

/// The same-dimension commutation and exchange equations for a pivot
/// pair, split by how the two pivots compare.
fn same_dim_pair(x: &FaceStructure, whole: &BTreeSet<FaceId>, a: &str, b: &str) -> Vec<String> {
    let mut bad = Vec::new();
    let h = x.hypergraph();
    let o = x.orders();
    let m = h.dim_of(a).unwrap();
    for dir in [true, false] {
        let ab = dec(x, whole, a, dir).as_ref().and_then(|p| dec(x, p, b, dir));
        let ba = dec(x, whole, b, dir).as_ref().and_then(|p| dec(x, p, a, dir));
        if ab != ba {
            bad.push(format!("same-direction pieces at `{a}`/`{b}` do not commute"));
        }
    }
    // Orient the pair so that lo <⁺ hi / lo <⁻ hi where applicable.
    for (lo, hi) in [(a, b), (b, a)] {
        if o.lt_plus(lo, hi).unwrap() {
            let d_lo = dec(x, whole, lo, true);
            let u_hi = dec(x, whole, hi, false);
            let dd = d_lo.as_ref().and_then(|p| dec(x, p, hi, true));
            let uu = u_hi.as_ref().and_then(|p| dec(x, p, lo, false));
            if d_lo != dd {
                bad.push(format!("X↓{lo} ≠ X^(↓{lo}↓{hi}) despite `{lo}` <⁺ `{hi}`"));
            }
            if u_hi != uu {
                bad.push(format!("X↑{hi} ≠ X^(↑{lo}↑{hi}) despite `{lo}` <⁺ `{hi}`"));
            }
            let bu = dec(x, whole, hi, true).as_ref().and_then(|p| dec(x, p, lo, false));
            let ud = dec(x, whole, lo, false).as_ref().and_then(|p| dec(x, p, hi, true));
            if bu != ud {
                bad.push(format!("X^(↓{hi}↑{lo}) ≠ X^(↑{lo}↓{hi})"));
            }
            if is_saddle_of(x, whole, lo) && is_saddle_of(x, whole, hi) {
                let in_down_hi = dec(x, whole, hi, true)
                    .map(|p| is_saddle_of(x, &p, lo))
                    .unwrap_or(false);
                let in_up_lo = dec(x, whole, lo, false)
                    .map(|p| is_saddle_of(x, &p, hi))
                    .unwrap_or(false);
                if !in_down_hi || !in_up_lo {
                    bad.push(format!("saddles `{lo}` <⁺ `{hi}` not preserved in the outer pieces"));
                }
            }
        }
        let minus_level = (0..m).find(|&l| lt_graded(h, o, l, lo, hi).unwrap());
        if let Some(l) = minus_level {
            let p1 = dec(x, whole, hi, false).as_ref().and_then(|p| dec(x, p, lo, true));
            let p2 = dec(x, whole, lo, false).as_ref().and_then(|p| dec(x, p, hi, true));
            let (Some(p1), Some(p2)) = (p1, p2) else {
                bad.push(format!("X^(↑{hi}↓{lo}) or X^(↑{lo}↓{hi}) undefined despite `{lo}` <⁻ `{hi}`"));
                continue;
            };
            let left = special_pushout(&sub(x, &dec(x, whole, lo, true).unwrap()), &sub(x, &p2), m);
            let right = special_pushout(&sub(x, &dec(x, whole, hi, true).unwrap()), &sub(x, &p1), m);
            match (left, right) {
                (Ok(l_s), Ok(r_s)) if iso_equal(&l_s, &r_s) => {}
                _ => bad.push(format!("exchange composite at `{lo}` <⁻ `{hi}` differs")),
            }
            if is_saddle_of(x, whole, lo) && is_saddle_of(x, whole, hi) {
                let gamma_saddle = (l.saturating_sub(1)..m).any(|k| {
                    let g = h.gamma_to(lo, k).unwrap();
                    is_saddle_of(x, whole, &g)
                });
                let both_up = dec(x, whole, hi, false)
                    .map(|p| is_saddle_of(x, &p, lo))
                    .unwrap_or(false)
                    && dec(x, whole, lo, false)
                        .map(|p| is_saddle_of(x, &p, hi))
                        .unwrap_or(false);
                if !gamma_saddle && !both_up {
                    bad.push(format!("saddle disjunction fails for `{lo}` <⁻ `{hi}`"));
                }
            }
        }
    }
    bad
}

/// The recognition law: from T = T↓a₀ +ₖ T↑a₀, every face of
/// c⁽ᵏ⁾(T₁)ₖ ∩ γ(T₁) is a saddle of T and either reproduces the pair or
/// refines T₁.
fn decomposition_pair_laws(x: &FaceStructure, whole: &BTreeSet<FaceId>, a0: &str) -> Vec<String> {
    let mut bad = Vec::new();
    let h = x.hypergraph();
    let k = h.dim_of(a0).unwrap();
    let t1 = down(x, whole, a0).unwrap();
    let t2 = up(x, whole, a0).unwrap();
    let t1_struct = sub(x, &t1);
    if t1_struct.dim() <= k || sub(x, &t2).dim() <= k {
        return bad;
    }
    let gammas: BTreeSet<FaceId> = h.gamma_set(t1.iter().filter(|f| h.dim_of(f) == Some(k + 1)));
    let witnesses: BTreeSet<FaceId> = c_sub(x, &t1, k)
        .into_iter()
        .filter(|f| h.dim_of(f) == Some(k) && gammas.contains(f))
        .collect();
    if witnesses.is_empty() {
        bad.push(format!("no witness in c⁽{k}⁾(T₁)ₖ ∩ γ(T₁) for the pair at `{a0}`"));
    }
    for a in &witnesses {
        if !is_saddle_of(x, whole, a) {
            bad.push(format!("witness `{a}` for the pair at `{a0}` is not a saddle"));
            continue;
        }
        let xa_down = down(x, whole, a).unwrap();
        let xa_up = up(x, whole, a).unwrap();
        if xa_down == t1 && xa_up == t2 {
            continue;
        }
        let refine_ok = is_saddle_of(x, &t1, a)
            && xa_down == down(x, &t1, a).unwrap()
            && xa_up
                == up(x, &t1, a)
                    .unwrap()
                    .union(&t2)
                    .cloned()
                    .collect::<BTreeSet<_>>();
        if !refine_ok {
            bad.push(format!("witness `{a}` neither reproduces nor refines the pair at `{a0}`"));
        }
    }
    bad
}

// ---------------------------------------------------------------------
// ω-law suite.
// ---------------------------------------------------------------------

/// Cell laws of the free ω-category on each catalog shape, plus the
/// simple-extension facts: principality, boundaries, and the trichotomy
/// for sub-structures of the extension.
pub fn omega_suite(catalog: &[FaceStructure]) -> Vec<String> {
    let mut bad = Vec::new();
    for (i, s) in catalog.iter().enumerate() {
        let tag = entry_tag(i, s);
        bad.extend(
            check_omega_laws(s, s.dim())
                .into_iter()
                .map(|m| format!("{tag}: {m}")),
        );
        if !is_normal(s) {
            continue;
        }
        let n = s.dim();
        let nb = simple_extension(s).expect("normal structures extend");
        if !is_principal(&nb) || nb.dim() != n + 1 {
            bad.push(format!("{tag}: N• is not principal of dimension n+1"));
        }
        if !iso_equal(&domain_k(&nb, n).unwrap(), s) {
            bad.push(format!("{tag}: d(N•) ≇ N"));
        }
        if n >= 1 {
            let dn = domain_k(s, n - 1).unwrap();
            if !iso_equal(&codomain_k(&nb, n).unwrap(), &simple_extension(&dn).unwrap()) {
                bad.push(format!("{tag}: c(N•) ≇ (dN)•"));
            }
            if is_principal(s) && !iso_equal(s, &simple_extension(&dn).unwrap()) {
                bad.push(format!("{tag}: principal N ≇ (dN)•"));
            }
        }
        // Trichotomy: sub-structures of N• are N•, c(N•), or inside N.
        let hb = nb.hypergraph();
        let whole = hb.face_set();
        let c_nb = codomain_subset(hb, n);
        let n_faces = s.hypergraph().face_set();
        let all: Vec<FaceId> = whole.iter().cloned().collect();
        for mask in 1..(1u32 << all.len()) {
            let subset: BTreeSet<FaceId> = all
                .iter()
                .enumerate()
                .filter(|(j, _)| mask >> j & 1 == 1)
                .map(|(_, f)| f.clone())
                .collect();
            if !hb.is_closed(&subset) || validate_subset(hb, &subset).is_err() {
                continue;
            }
            if subset != whole && subset != c_nb && !subset.is_subset(&n_faces) {
                bad.push(format!("{tag}: sub-structure {subset:?} of N• escapes the trichotomy"));
            }
        }
        // Cross-check: the enumerated cells obey the same trichotomy.
        for cell in cells(&nb, n + 1) {
            if cell.faces != whole && cell.faces != c_nb && !cell.faces.is_subset(&n_faces) {
                bad.push(format!("{tag}: cell {:?} of N• escapes the trichotomy", cell.faces));
            }
        }
    }
    bad
}

// ---------------------------------------------------------------------
// Computad suite.
// ---------------------------------------------------------------------

/// All cells of the presentation reachable with at most `budget` binary
/// compositions from indet cells and their identities, deduplicated up
/// to cell equality (keeping the cheapest construction).
pub fn reachable_cells(p: &Computad, budget: usize) -> Vec<LabeledCell> {
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

/// Unique-description round trips in the fixture presentations and the
/// identity law of the terminal presentation over the catalog.
pub fn computad_suite(catalog: &[FaceStructure]) -> Vec<String> {
    let mut bad = Vec::new();
    for (name, p) in [("loop", fixture_loop()), ("two-generator", fixture_two_gen())] {
        if let Err(e) = p.validate() {
            bad.push(format!("{name} presentation invalid: {e}"));
            continue;
        }
        let reachable = reachable_cells(&p, 3);
        if reachable.len() <= 4 {
            bad.push(format!("{name} presentation: too few reachable cells"));
        }
        for cell in &reachable {
            let desc = describe(cell);
            if !cells_equal(&desc, cell) {
                bad.push(format!("{name} presentation: describe changed a level-{} cell", cell.level));
                continue;
            }
            match evaluate(&p, &desc) {
                Ok(back) if cells_equal(&back, cell) => {}
                _ => bad.push(format!(
                    "{name} presentation: description round trip failed at level {}",
                    cell.level
                )),
            }
        }
    }
    // In the terminal presentation every cell is its own description and
    // the shape map is the identity up to isomorphism.
    let t = terminal_computad(catalog);
    if let Err(e) = t.validate() {
        bad.push(format!("terminal presentation invalid: {e}"));
        return bad;
    }
    for (i, s) in catalog.iter().enumerate() {
        let cell = terminal_cell(s);
        if crate::computad::validate_cell(&t, &cell.shape, &cell.labels, cell.level).is_err() {
            bad.push(format!("terminal cell of entry {i} does not validate"));
            continue;
        }
        if !iso_equal(&bang(&cell), s) {
            bad.push(format!("terminal shape of entry {i} is not the entry itself"));
        }
        match evaluate(&t, &describe(&cell)) {
            Ok(back) if cells_equal(&back, &cell) => {}
            _ => bad.push(format!("terminal description round trip failed on entry {i}")),
        }
    }
    bad
}

/// The presheaf round trip for the loop presentation: tabulate the cells
/// over the catalog, realize the table, and compare cell counts level by
/// level against direct enumeration.
pub fn presheaf_suite(catalog: &[FaceStructure]) -> Vec<String> {
    let mut bad = Vec::new();
    let g = fixture_loop();
    let table = presheaf_of(&g, catalog);
    let realization = match realize_presheaf(&table) {
        Ok(r) => r,
        Err(e) => return vec![format!("realization failed: {e}")],
    };
    for (n, count) in realization.level_counts().iter().enumerate() {
        let direct: usize = catalog
            .iter()
            .filter(|s| s.dim() <= n)
            .map(|s| hom_cells(&g, s).len())
            .sum();
        if *count != direct {
            bad.push(format!("level {n}: realized {count} cells, direct count {direct}"));
        }
    }
    let _ = shape_key(&alpha(0));
    bad
}

// ---------------------------------------------------------------------
// Generator-gluing suite.
// ---------------------------------------------------------------------

/// The gluing-square equations for every principal catalog entry at
/// every admissible level, and the pushout property of the simple
/// extension for every normal entry of dimension at most 2.
pub fn harnik_suite(catalog: &[FaceStructure]) -> Vec<String> {
    let mut bad = Vec::new();
    for (i, s) in catalog.iter().enumerate() {
        let tag = entry_tag(i, s);
        if is_principal(s) {
            for k in 0..s.dim() {
                match verify_harnik(s, k) {
                    Ok(errs) => bad.extend(errs.into_iter().map(|m| format!("{tag} at {k}: {m}"))),
                    Err(e) => bad.push(format!("{tag} at {k}: {e}")),
                }
            }
        }
        if is_normal(s) && s.dim() <= 2 {
            let mut targets: Vec<FaceStructure> = (0..=s.dim() + 1).map(alpha).collect();
            targets.push(s.clone());
            match check_principal_pushout(s, &targets) {
                Ok(errs) => bad.extend(errs.into_iter().map(|m| format!("{tag}: {m}"))),
                Err(e) => bad.push(format!("{tag}: {e}")),
            }
        }
    }
    bad
}

// ---------------------------------------------------------------------
// Rigidity suite.
// ---------------------------------------------------------------------

/// Rigidity: the only endomorphism of a face structure is the identity,
/// and the canonical form is idempotent.
pub fn rigidity_suite(catalog: &[FaceStructure]) -> Vec<String> {
    let mut bad = Vec::new();
    for (i, s) in catalog.iter().enumerate() {
        let tag = entry_tag(i, s);
        let endos = enumerate_morphisms(s, s);
        let identity_only = endos.len() == 1
            && endos[0].map.iter().all(|(a, b)| a == b);
        if !identity_only {
            bad.push(format!("{tag}: {} endomorphisms (expected the identity alone)", endos.len()));
        }
        let canon = canonical_form(s);
        if canonical_form(&canon).hypergraph() != canon.hypergraph() {
            bad.push(format!("{tag}: canonical form is not idempotent"));
        }
    }
    bad
}

// ---------------------------------------------------------------------
// Suite registry.
// ---------------------------------------------------------------------

/// The suite names accepted by [`run_suite`], in presentation order.
pub fn suite_names() -> &'static [&'static str] {
    &[
        "atlas", "order", "dc", "pushout", "decomp", "omega", "computad", "harnik",
    ]
}

/// Runs one named suite over the catalog; `None` for an unknown name.
/// The `computad` suite also covers the presheaf round trip.
pub fn run_suite(name: &str, catalog: &[FaceStructure]) -> Option<Vec<String>> {
    Some(match name {
        "atlas" => atlas_suite(catalog),
        "order" => order_suite(catalog),
        "dc" => dc_suite(catalog),
        "pushout" => pushout_suite(catalog),
        "decomp" => decomp_suite(catalog),
        "omega" => omega_suite(catalog),
        "computad" => {
            let mut out = computad_suite(catalog);
            out.extend(presheaf_suite(catalog));
            out
        }
        "harnik" => harnik_suite(catalog),
        _ => return None,
    })
}
