//! Splits, fractures and homogeneous sets of hole-with-hat-free graphs.

pub mod flat;
pub mod fracture;
pub mod homogeneous;
pub mod split;

pub use flat::{flat_piece, weighted_fractures, FlatPiece};
pub use fracture::{
    all_y_fractures, check_fracture_properties, crossing_check, fracture_from_split, small_side_components,
    Fracture,
};
pub use homogeneous::{homogeneous_partition, is_guarded, module_closure, HomogeneousPartition};
pub use split::{
    is_Y_split, is_optimal_Y_split, maximal_complete_pair, optimalize_split, split_from_forcer,
    split_from_forcer_traced, Split, SplitConstruction,
};
