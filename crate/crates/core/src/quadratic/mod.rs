//! Quadratic transformations: complexity, induction graphs and morphic presentations.

pub mod complexity;
pub mod euclid;
pub mod finite_union;
pub mod graph;
pub mod morphic;

pub use finite_union::FiniteUnion;
