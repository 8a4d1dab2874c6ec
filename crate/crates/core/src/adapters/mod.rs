//! Sources of sign functions: tournaments and generic point configurations.

pub mod points;
pub mod tournament;

pub use points::{orientation_sign, points_to_signfn, PointConfiguration};
pub use tournament::{
    closed_form_separation, score_parity_partition, score_vector, tournament_to_signfn, Tournament,
};
