use thiserror::Error;

use crate::comb::Algebra;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),

    #[error("width mismatch: {left} vs {right}")]
    WidthMismatch { left: Algebra, right: Algebra },

    #[error("mask {mask:#b} is not a comb of {algebra}")]
    MaskOutOfRange { mask: u64, algebra: Algebra },

    #[error("the complex bit is not enabled in {0}")]
    ComplexBitDisabled(Algebra),

    #[error("the auxiliary bit is not enabled in {0}")]
    AuxBitDisabled(Algebra),

    #[error("bit index {bit} out of range 1..={n}")]
    BitOutOfRange { bit: usize, n: usize },

    #[error("bit indices must be pairwise distinct, got {0:?}")]
    IndexCollision(Vec<usize>),

    #[error("terms disagree on the bits at or below position {split}; not factorable")]
    NotFactorable { split: usize },

    #[error("value {value} does not fit in {width} bits")]
    Overflow { value: u64, width: usize },

    #[error("register layout: {0}")]
    Layout(String),

    #[error("base {0} is not coprime to 15")]
    NotCoprime(u64),

    #[error("MVTX line {line}: {message}")]
    Mvtx { line: usize, message: String },

    #[error("multivector width {n} exceeds the rendering cap of {cap}")]
    RenderCap { n: usize, cap: usize },

    #[error("dense oracle: {0}")]
    Dense(String),
}
