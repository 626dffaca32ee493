//! Geometric-product coding of bit strings.
//!
//! An `n`-bit string `A_1 ... A_n` is coded as the comb
//! `c_A = b_1^{A_1} ... b_n^{A_n}` of a real Euclidean Clifford algebra, and
//! superpositions become multivectors. This crate provides the sparse comb
//! arithmetic, the bit-level gate analogues built from it, a few named states
//! and a period-finding demo, a small circuit language, a polyline renderer
//! and brute-force oracles that cross-check all of the above.

pub mod algorithms;
pub mod circuit;
pub mod comb;
pub mod dsl;
pub mod error;
pub mod gates;
pub mod multivector;
pub mod mvtx;
pub mod oracle;
pub mod render;
pub mod verify;

pub use circuit::{Circuit, GateOp, Span};
pub use comb::{Algebra, Comb};
pub use error::{Error, Result};
pub use gates::{apply_circuit, OpCounter};
pub use multivector::{factor_at, factor_prefix, Multivector};
