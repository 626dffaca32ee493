//! Independent reference implementations used to check the fast paths.

pub mod dense;
pub mod statevector;

pub use dense::{blade_product, sandwich_gate, DenseMultivector, SandwichGate};
pub use statevector::{correspondence, from_state_vector, StateVector};
