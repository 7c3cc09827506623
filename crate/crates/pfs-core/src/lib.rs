//! A combinatorial kernel for positive face structures and positive-to-one
//! computads: axiom validation, domain/codomain and composition operators,
//! decompositions, the cells of the free ω-category on a shape, computad
//! cells with unique descriptions, and bounded exhaustive enumeration.
//!
//! All values are immutable after construction and every operation is a pure
//! function, so everything may be freely shared between threads.

pub mod axioms;
pub mod computad;
pub mod decompose;
pub mod enumerate;
pub mod fixtures;
pub mod hypergraph;
pub mod laws;
pub mod omega;
pub mod orders;
pub mod structure_ops;

pub use axioms::{validate, AxiomReport, FaceStructure};
pub use hypergraph::{FaceId, HgMorphism, PositiveHypergraph};
pub use orders::OrderCache;
