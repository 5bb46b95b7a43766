//! The algebra side: the quiver of `A_n^d`, tilting and cluster-tilting
//! states, perpendicular categories, and d-maximal green sequences.

pub mod green;
pub mod quiver;
pub mod tilting;

pub use green::{
    enumerate_green_sequences, green_classes, green_leq_2, is_increasing_polygonal_deformation,
    odd_triangulation, summand_set, GreenClass, GreenSequence, GreenSystem,
};
pub use quiver::{build_quiver, Arrow, PathRelation, QuiverPresentation};
pub use tilting::{
    cluster_state, ext_nonzero, hst2_by_perp, is_tilting_state, left_mutations, perp,
    tilting_state, Framework, TiltingState,
};
