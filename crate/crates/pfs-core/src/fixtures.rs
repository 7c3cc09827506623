//! Small example structures used throughout the documentation and tests.

use crate::hypergraph::PositiveHypergraph;

/// A 2-dimensional structure: a pasting diagram with three 2-faces
/// `a0, a1, a2`, ten edges `x0..x9`, and eight vertices `s0..s7`.
/// Known values: γ(a1)=x4, δ(a1)={x5,x6,x9}, γγ(a1)=s3, δγ(a1)={s7}.
pub fn intro_s() -> PositiveHypergraph {
    PositiveHypergraph::from_tables(
        &[
            &["s0", "s1", "s2", "s3", "s4", "s5", "s6", "s7"],
            &["x0", "x1", "x2", "x3", "x4", "x5", "x6", "x7", "x8", "x9"],
            &["a0", "a1", "a2"],
        ],
        &[
            ("x0", &["s2"], "s0"),
            ("x1", &["s1"], "s0"),
            ("x2", &["s2"], "s1"),
            ("x3", &["s3"], "s2"),
            ("x4", &["s7"], "s3"),
            ("x5", &["s4"], "s3"),
            ("x6", &["s6"], "s4"),
            ("x7", &["s5"], "s4"),
            ("x8", &["s6"], "s5"),
            ("x9", &["s7"], "s6"),
            ("a0", &["x1", "x2"], "x0"),
            ("a1", &["x5", "x6", "x9"], "x4"),
            ("a2", &["x7", "x8"], "x6"),
        ],
    )
}

/// A 3-dimensional structure with a single 3-face β whose domain is a
/// pasting of three 2-faces `b1, b2, b3` and whose codomain is `b0`.
/// Known values: γγ(β)=y0, δγ(β)={y1,y4,y5,y6}, γδ(β)={y0,y2,y3},
/// ι(β)={y2,y3}.
pub fn intro_t() -> PositiveHypergraph {
    PositiveHypergraph::from_tables(
        &[
            &["t0", "t1", "t2", "t3", "t4"],
            &["y0", "y1", "y2", "y3", "y4", "y5", "y6"],
            &["b0", "b1", "b2", "b3"],
            &["beta"],
        ],
        &[
            ("y0", &["t4"], "t0"),
            ("y1", &["t1"], "t0"),
            ("y2", &["t4"], "t1"),
            ("y3", &["t3"], "t1"),
            ("y4", &["t2"], "t1"),
            ("y5", &["t3"], "t2"),
            ("y6", &["t4"], "t3"),
            ("b0", &["y1", "y4", "y5", "y6"], "y0"),
            ("b1", &["y1", "y2"], "y0"),
            ("b2", &["y3", "y6"], "y2"),
            ("b3", &["y4", "y5"], "y3"),
            ("beta", &["b1", "b2", "b3"], "b0"),
        ],
    )
}

/// The normal 1-dimensional structure `N`: a path of three edges
/// x3 →f2→ x2 →f1→ x1 →f0→ x0.
pub fn path_n() -> PositiveHypergraph {
    PositiveHypergraph::from_tables(
        &[&["x0", "x1", "x2", "x3"], &["f0", "f1", "f2"]],
        &[
            ("f0", &["x1"], "x0"),
            ("f1", &["x2"], "x1"),
            ("f2", &["x3"], "x2"),
        ],
    )
}

/// The simple extension `N•` of [`path_n`] written with explicit tables:
/// a 2-face `p2` with domain {f0,f1,f2} and codomain a fresh edge `p1`
/// from x3 to x0.
pub fn path_n_bullet() -> PositiveHypergraph {
    PositiveHypergraph::from_tables(
        &[
            &["x0", "x1", "x2", "x3"],
            &["f0", "f1", "f2", "p1"],
            &["p2"],
        ],
        &[
            ("f0", &["x1"], "x0"),
            ("f1", &["x2"], "x1"),
            ("f2", &["x3"], "x2"),
            ("p1", &["x3"], "x0"),
            ("p2", &["f0", "f1", "f2"], "p1"),
        ],
    )
}

/// The two-edge path `P2`: u →e1→ m →e2→ v.
pub fn p2() -> PositiveHypergraph {
    PositiveHypergraph::from_tables(
        &[&["m", "u", "v"], &["e1", "e2"]],
        &[("e1", &["u"], "m"), ("e2", &["m"], "v")],
    )
}
