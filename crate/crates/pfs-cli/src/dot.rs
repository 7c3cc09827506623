//! Deterministic DOT export: 0-faces as nodes, 1-faces as directed
//! edges, higher faces as record nodes. A dimension-2 face lists its
//! δ/γ 1-faces inside its record label (DOT has no node-to-edge edges);
//! faces of dimension ≥ 3 link to their θ members with real edges,
//! dashed for δ and labeled for γ.

use pfs_core::FaceStructure;

pub fn export_dot(s: &FaceStructure) -> String {
    let h = s.hypergraph();
    let mut out = String::from("digraph pfs {\n  rankdir=LR;\n");
    for v in h.level(0) {
        out.push_str(&format!("  \"{v}\" [shape=circle];\n"));
    }
    if s.dim() >= 1 {
        for e in h.level(1) {
            let src = h.delta(e).unwrap().iter().next().unwrap();
            out.push_str(&format!(
                "  \"{src}\" -> \"{}\" [label=\"{e}\"];\n",
                h.gamma(e).unwrap()
            ));
        }
    }
    for k in 2..=s.dim() {
        for f in h.level(k) {
            let deltas: Vec<&str> = h.delta(f).unwrap().iter().map(String::as_str).collect();
            let gamma = h.gamma(f).unwrap();
            out.push_str(&format!(
                "  \"{f}\" [shape=record, label=\"{f}|δ: {}|γ: {gamma}\"];\n",
                deltas.join(",")
            ));
            if k >= 3 {
                for d in h.delta(f).unwrap() {
                    out.push_str(&format!("  \"{f}\" -> \"{d}\" [style=dashed];\n"));
                }
                out.push_str(&format!("  \"{f}\" -> \"{gamma}\" [label=\"γ\"];\n"));
            }
        }
    }
    out.push_str("}\n");
    out
}
