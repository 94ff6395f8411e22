//! The closed forms proved for specific graph families: Eulerian
//! polynomials, transfer-matrix path/cycle enumeration, per-family counting
//! formulas and generating functions, and the octahedral trace identities.

pub mod eulerian;
pub mod families;
pub mod octahedron;
pub mod transfer;

pub use eulerian::{eulerian_number, eulerian_poly, EulerianTable};
pub use families::{closed_count, family_count, family_gf};
pub use octahedron::{octa_count, octa_matrix, p_trace, woh_even, woh_odd};
pub use transfer::{
    cycle_count, cycle_gf, entry_sum_gf, path_count, path_gf, q_poly, q_poly_binomial_sum,
    transfer_matrix,
};
