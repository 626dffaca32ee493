use crate::error::{Error, Result};

/// One gate application. Bit indices are data positions `1..=n`; angles are
/// in radians.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum GateOp {
    /// Bit negation `n_k`.
    X(usize),
    /// Sign conjugation `(-1)^{A_k}`, the Pauli Z analogue.
    Z(usize),
    /// `i * X * Z`.
    Y(usize),
    H(usize),
    /// Controlled phase rotation: `e^{i phi}` on blades containing `b_k`.
    Phase(usize, f64),
    /// `Phase(k, pi/4)`.
    T(usize),
    Cnot {
        control: usize,
        target: usize,
    },
    Toffoli {
        controls: [usize; 2],
        target: usize,
    },
    /// Irreversible `c_{..1..} -> c_{..0..}`.
    Reset(usize),
    /// The projector `A_k` keeping blades that contain `b_k`.
    Select(usize),
    /// Global multiplication by the complex structure `i`.
    GlobalI,
    GlobalPhase(f64),
}

impl GateOp {
    /// Data bits the op touches, in declaration order.
    pub fn bits(&self) -> Vec<usize> {
        match *self {
            GateOp::X(k)
            | GateOp::Z(k)
            | GateOp::Y(k)
            | GateOp::H(k)
            | GateOp::Phase(k, _)
            | GateOp::T(k)
            | GateOp::Reset(k)
            | GateOp::Select(k) => vec![k],
            GateOp::Cnot { control, target } => vec![control, target],
            GateOp::Toffoli { controls: [a, b], target } => vec![a, b, target],
            GateOp::GlobalI | GateOp::GlobalPhase(_) => vec![],
        }
    }

    /// Whether the op needs the complex flag.
    pub fn needs_complex(&self) -> bool {
        matches!(self, GateOp::Y(_) | GateOp::Phase(..) | GateOp::T(_) | GateOp::GlobalI | GateOp::GlobalPhase(_))
    }

    /// Number of primitive multivector-level operations (bit negation, sign
    /// conjugation, projector, reset, complex structure) the op costs. The
    /// linear combination that assembles a gate's output is not counted
    /// separately, so a Hadamard costs 2.
    pub fn cost(&self) -> u64 {
        match self {
            GateOp::X(_) | GateOp::Z(_) | GateOp::Reset(_) | GateOp::Select(_) => 1,
            GateOp::GlobalI | GateOp::GlobalPhase(_) => 1,
            GateOp::H(_) => 2,
            // projector + complex structure
            GateOp::Phase(..) | GateOp::T(_) => 2,
            // projector + negation
            GateOp::Cnot { .. } => 2,
            GateOp::Toffoli { .. } => 3,
            GateOp::Y(_) => 3,
        }
    }

    /// Checks indices against the width and pairwise distinctness.
    pub fn validate(&self, n: usize) -> Result<()> {
        let bits = self.bits();
        for &bit in &bits {
            if !(1..=n).contains(&bit) {
                return Err(Error::BitOutOfRange { bit, n });
            }
        }
        for (i, a) in bits.iter().enumerate() {
            if bits[i + 1..].contains(a) {
                return Err(Error::IndexCollision(bits));
            }
        }
        Ok(())
    }
}

/// 1-based source position of an op.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Span {
    pub line: usize,
    pub column: usize,
}

#[derive(Clone, Debug)]
pub struct Circuit {
    pub width: usize,
    pub complex: bool,
    pub ops: Vec<GateOp>,
    /// Where each op came from; empty for circuits built in code.
    pub spans: Vec<Span>,
}

impl Circuit {
    pub fn new(width: usize, complex: bool) -> Self {
        Circuit { width, complex, ops: Vec::new(), spans: Vec::new() }
    }

    pub fn with_ops(width: usize, complex: bool, ops: Vec<GateOp>) -> Self {
        Circuit { width, complex, ops, spans: Vec::new() }
    }

    pub fn push(&mut self, op: GateOp) {
        self.ops.push(op);
    }

    pub fn validate(&self) -> Result<()> {
        self.ops.iter().try_for_each(|op| op.validate(self.width))
    }
}

/// Structural equality: width, complex flag and op list. Source spans are
/// ignored.
impl PartialEq for Circuit {
    fn eq(&self, other: &Self) -> bool {
        self.width == other.width && self.complex == other.complex && self.ops == other.ops
    }
}
