//! Structure detectors: holes-with-hats, forcers, perfectness and extremal sets.

pub mod clique;
pub mod forcer;
pub mod holes;
pub mod perfect;

pub use clique::{chromatic_number, clique_number, extremal_set, homogeneous_number, max_clique, ExtremalKind};
pub use forcer::{find_forcer, forcers, Forcer};
pub use holes::{find_hole_with_hat, find_house, has_hole_with_hat, has_house, Hole, HoleWithHat};
pub use perfect::{is_perfect, is_perfect_graph, max_perfect_subsets, OddWitness, PerfectnessWitness};
