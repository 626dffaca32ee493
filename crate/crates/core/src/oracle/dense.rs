//! Dense Clifford engine that gets its signs by literally sorting generator
//! sequences. Slow on purpose; only used as ground truth.

use crate::comb::{Algebra, Comb};
use crate::error::{Error, Result};
use crate::multivector::Multivector;

pub const MAX_DIM: usize = 14;

#[derive(Clone, Debug, PartialEq)]
pub struct DenseMultivector {
    dim: usize,
    coeffs: Vec<f64>,
}

/// Sorts `seq` with adjacent transpositions and returns how many were made.
fn bubble_sort_swaps(seq: &mut [usize]) -> usize {
    let mut swaps = 0;
    for end in (1..seq.len()).rev() {
        for i in 0..end {
            if seq[i] > seq[i + 1] {
                seq.swap(i, i + 1);
                swaps += 1;
            }
        }
    }
    swaps
}

fn generators(mask: u64) -> Vec<usize> {
    (0..64).filter(|p| mask >> p & 1 == 1).collect()
}

/// Concatenates the generator lists of two blades, sorts them counting swaps
/// and cancels equal neighbours (`b_k b_k = 1`). Returns the surviving mask and
/// whether the sign is negative.
pub fn blade_product(left: u64, right: u64) -> (u64, bool) {
    let mut seq = generators(left);
    seq.extend(generators(right));
    let swaps = bubble_sort_swaps(&mut seq);
    let mut mask = 0u64;
    let mut i = 0;
    while i < seq.len() {
        if i + 1 < seq.len() && seq[i] == seq[i + 1] {
            i += 2;
        } else {
            mask |= 1 << seq[i];
            i += 1;
        }
    }
    (mask, swaps % 2 == 1)
}

/// Sign picked up when the generators of `mask` are written in reverse order
/// and sorted back.
pub fn blade_reverse_is_negative(mask: u64) -> bool {
    let mut seq = generators(mask);
    seq.reverse();
    bubble_sort_swaps(&mut seq) % 2 == 1
}

impl DenseMultivector {
    pub fn zeros(dim: usize) -> Result<Self> {
        if dim > MAX_DIM {
            return Err(Error::Dense(format!("dimension {dim} exceeds {MAX_DIM}")));
        }
        Ok(DenseMultivector { dim, coeffs: vec![0.0; 1 << dim] })
    }

    pub fn basis(dim: usize, mask: u64, coefficient: f64) -> Result<Self> {
        let mut d = Self::zeros(dim)?;
        let slot = d
            .coeffs
            .get_mut(mask as usize)
            .ok_or_else(|| Error::Dense(format!("mask {mask:#b} outside dimension {dim}")))?;
        *slot = coefficient;
        Ok(d)
    }

    /// Single generator `b_position`.
    pub fn vector(dim: usize, position: usize) -> Result<Self> {
        Self::basis(dim, 1 << position, 1.0)
    }

    pub fn scalar(dim: usize, value: f64) -> Result<Self> {
        Self::basis(dim, 0, value)
    }

    /// Embeds a sparse multivector into the full `n + 2` position space.
    pub fn from_multivector(m: &Multivector) -> Result<Self> {
        let mut d = Self::zeros(m.algebra().n() + 2)?;
        for (comb, c) in m.terms() {
            d.coeffs[comb.0 as usize] = c;
        }
        Ok(d)
    }

    pub fn to_multivector(&self, algebra: Algebra) -> Result<Multivector> {
        Multivector::from_terms(
            algebra,
            self.coeffs.iter().enumerate().filter(|(_, c)| **c != 0.0).map(|(m, &c)| (Comb(m as u64), c)),
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn product(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::Dense(format!("dimension mismatch {} vs {}", self.dim, other.dim)));
        }
        let mut out = Self::zeros(self.dim)?;
        for (a, &x) in self.coeffs.iter().enumerate().filter(|(_, c)| **c != 0.0) {
            for (b, &y) in other.coeffs.iter().enumerate().filter(|(_, c)| **c != 0.0) {
                let (mask, negative) = blade_product(a as u64, b as u64);
                let v = x * y;
                out.coeffs[mask as usize] += if negative { -v } else { v };
            }
        }
        Ok(out)
    }

    pub fn reverse(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(m, &c)| if blade_reverse_is_negative(m as u64) { -c } else { c })
            .collect();
        DenseMultivector { dim: self.dim, coeffs }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::Dense(format!("dimension mismatch {} vs {}", self.dim, other.dim)));
        }
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(DenseMultivector { dim: self.dim, coeffs })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SandwichGate {
    /// `b_k (a_0 ... a_{k-1})* z (a_0 ... a_{k-1})`
    Negate,
    /// `a_k* z a_k`
    Sign,
}

/// Evaluates the bivector sandwich definitions of bit negation and sign
/// conjugation by repeated dense products, with `a_j = b_j b_{n+1}`.
///
/// `z` must live in the `n + 2` position space: complex flag at 0, data at
/// `1..=n` and the auxiliary generator at `n + 1`.
pub fn sandwich_gate(z: &DenseMultivector, n: usize, k: usize, which: SandwichGate) -> Result<DenseMultivector> {
    let dim = n + 2;
    if z.dim() != dim {
        return Err(Error::Dense(format!(
            "sandwich needs the auxiliary dimension: expected {dim} positions, got {}",
            z.dim()
        )));
    }
    if !(1..=n).contains(&k) {
        return Err(Error::BitOutOfRange { bit: k, n });
    }
    let aux = DenseMultivector::vector(dim, n + 1)?;
    let bivector = |j: usize| DenseMultivector::vector(dim, j)?.product(&aux);
    match which {
        SandwichGate::Negate => {
            let mut chain = DenseMultivector::scalar(dim, 1.0)?;
            for j in 0..k {
                chain = chain.product(&bivector(j)?)?;
            }
            DenseMultivector::vector(dim, k)?.product(&chain.reverse())?.product(z)?.product(&chain)
        }
        SandwichGate::Sign => {
            let a = bivector(k)?;
            a.reverse().product(z)?.product(&a)
        }
    }
}
