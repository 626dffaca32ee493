//! Tensor-product state-vector backend and the map from complex multivectors
//! to qubit amplitudes.
//!
//! Amplitude index bit `k - 1` holds data bit `A_k`. The real part of the
//! amplitude of `|A_1 ... A_n>` is the coefficient of `c_{0 A}`, the imaginary
//! part that of `c_{1 A}`.

use num_complex::Complex64;

use crate::circuit::GateOp;
use crate::comb::{Algebra, Comb};
use crate::error::{Error, Result};
use crate::multivector::Multivector;

#[derive(Clone, Debug, PartialEq)]
pub struct StateVector {
    n: usize,
    amplitudes: Vec<Complex64>,
}

type Matrix2 = [[Complex64; 2]; 2];

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);
const I: Complex64 = Complex64::new(0.0, 1.0);

impl StateVector {
    pub fn new(n: usize, amplitudes: Vec<Complex64>) -> Result<Self> {
        if amplitudes.len() != 1 << n {
            return Err(Error::Dense(format!("{} amplitudes for {n} qubits", amplitudes.len())));
        }
        Ok(StateVector { n, amplitudes })
    }

    /// `|0...0>`.
    pub fn vacuum(n: usize) -> Self {
        let mut amplitudes = vec![ZERO; 1 << n];
        amplitudes[0] = ONE;
        StateVector { n, amplitudes }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    /// Amplitude of the basis state with data bits `bits[0] = A_1, ...`.
    pub fn amplitude(&self, bits: &[u8]) -> Complex64 {
        let index = bits.iter().enumerate().fold(0usize, |acc, (i, &b)| acc | (usize::from(b) << i));
        self.amplitudes[index]
    }

    pub fn max_norm_diff(&self, other: &Self) -> f64 {
        self.amplitudes.iter().zip(&other.amplitudes).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }

    fn qubit(&self, k: usize) -> Result<usize> {
        if (1..=self.n).contains(&k) {
            Ok(1 << (k - 1))
        } else {
            Err(Error::BitOutOfRange { bit: k, n: self.n })
        }
    }

    /// Applies `u` to qubit `target` on the basis states where every control
    /// qubit is 1.
    fn controlled(&self, controls: &[usize], target: usize, u: Matrix2) -> Result<Self> {
        let t = self.qubit(target)?;
        let mut cmask = 0;
        for &c in controls {
            cmask |= self.qubit(c)?;
        }
        let mut out = self.amplitudes.clone();
        for i in 0..self.amplitudes.len() {
            if i & t != 0 || i & cmask != cmask {
                continue;
            }
            let (a0, a1) = (self.amplitudes[i], self.amplitudes[i | t]);
            out[i] = u[0][0] * a0 + u[0][1] * a1;
            out[i | t] = u[1][0] * a0 + u[1][1] * a1;
        }
        Ok(StateVector { n: self.n, amplitudes: out })
    }

    fn scaled(&self, factor: Complex64) -> Self {
        StateVector { n: self.n, amplitudes: self.amplitudes.iter().map(|a| a * factor).collect() }
    }

    /// Standard matrix action of `op`. `Reset` and `Select` are the linear
    /// (non-unitary) maps `|..1..> -> |..0..>` and `|1><1|` on the qubit.
    pub fn apply(&self, op: &GateOp) -> Result<Self> {
        op.validate(self.n)?;
        let h = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        let x: Matrix2 = [[ZERO, ONE], [ONE, ZERO]];
        let phase = |phi: f64| -> Matrix2 { [[ONE, ZERO], [ZERO, Complex64::from_polar(1.0, phi)]] };
        match *op {
            GateOp::X(k) => self.controlled(&[], k, x),
            GateOp::Z(k) => self.controlled(&[], k, [[ONE, ZERO], [ZERO, -ONE]]),
            GateOp::Y(k) => self.controlled(&[], k, [[ZERO, -I], [I, ZERO]]),
            GateOp::H(k) => self.controlled(&[], k, [[h, h], [h, -h]]),
            GateOp::Phase(k, phi) => self.controlled(&[], k, phase(phi)),
            GateOp::T(k) => self.controlled(&[], k, phase(std::f64::consts::FRAC_PI_4)),
            GateOp::Cnot { control, target } => self.controlled(&[control], target, x),
            GateOp::Toffoli { controls, target } => self.controlled(&controls, target, x),
            GateOp::Reset(k) => self.controlled(&[], k, [[ONE, ONE], [ZERO, ZERO]]),
            GateOp::Select(k) => self.controlled(&[], k, [[ZERO, ZERO], [ZERO, ONE]]),
            GateOp::GlobalI => Ok(self.scaled(I)),
            GateOp::GlobalPhase(phi) => Ok(self.scaled(Complex64::from_polar(1.0, phi))),
        }
    }
}

/// Reads a complex multivector as qubit amplitudes.
pub fn correspondence(z: &Multivector) -> Result<StateVector> {
    let algebra = z.algebra();
    if !algebra.has_complex() {
        return Err(Error::ComplexBitDisabled(algebra));
    }
    let n = algebra.n();
    let mut amplitudes = vec![ZERO; 1 << n];
    for (comb, c) in z.terms() {
        if algebra.has_aux() && comb.has(algebra.aux_position()) {
            return Err(Error::Dense(format!("term {comb:?} uses the auxiliary dimension")));
        }
        let index = ((comb.0 & algebra.data_mask()) >> 1) as usize;
        if comb.has(0) {
            amplitudes[index].im += c;
        } else {
            amplitudes[index].re += c;
        }
    }
    Ok(StateVector { n, amplitudes })
}

/// Inverse of [`correspondence`].
pub fn from_state_vector(s: &StateVector) -> Result<Multivector> {
    let algebra = Algebra::complex(s.n)?;
    let terms = s.amplitudes.iter().enumerate().flat_map(|(index, a)| {
        let data = (index as u64) << 1;
        [(Comb(data), a.re), (Comb(data | 1), a.im)]
    });
    Multivector::from_terms(algebra, terms)
}
