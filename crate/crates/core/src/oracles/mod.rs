//! Independent cross-checks for the closed forms: hit-or-miss Monte Carlo,
//! the zonotope minor sum, and brute-force vertex enumeration.

mod lp;
mod mc;
mod zonotope;

pub use lp::{lp_vertices, MAX_LP_DIM};
pub use mc::{mc_volume, mc_volume_halfspaces, McEstimate, BLOCK_SIZE};
pub use zonotope::{zonotope_volume, MAX_GENERATORS};
