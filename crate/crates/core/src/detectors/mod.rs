//! Searches for the induced patterns the solvers condition on.

mod holes;
mod minor;
mod patterns;
mod witness;

pub use holes::{chordality, find_hole, find_short_hole, is_perfect_elimination_order, Chordality};
pub use minor::{has_induced_minor, MinorOracleConfig};
pub use patterns::{
    count_tc3_meeting, count_tc3_sets, find_induced_tk2, find_triangle_collection, induced_matchings,
    tc3_avoiding, triangles, Tc3Count,
};
pub use witness::{check_hole, PatternWitness, WitnessKind};
