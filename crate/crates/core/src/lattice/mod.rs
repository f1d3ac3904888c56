//! Lattice layer: occupation states, vertex weights, row operators and the
//! Yang-Baxter check.

pub mod ops;
pub mod state;
pub mod weights;
pub mod ybe;

pub use ops::{
    apply_double_row_b, apply_row_operator, double_row_matrix_element, OpKind, OperatorSpec,
};
pub use state::{OccupationState, StateVector, MAX_SITES};
pub use weights::{k_weight, l_weight, r_weight, LKind, OperatorParams, Variant, WeightFixture};
pub use ybe::{check_yang_baxter, check_yang_baxter_with_fixture, YbeMismatch};
