//! Gate analogues acting directly on comb masks.
//!
//! Every gate here is built from three bit-level maps: negation of a bit,
//! the sign conjugation `(-1)^{A_k}`, and the complex structure `i`. They are
//! implemented as mask/coefficient rewrites; the algebraic sandwich forms that
//! define them live in [`crate::oracle::dense`] and are checked against these.

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_4};

use crate::circuit::{Circuit, GateOp};
use crate::comb::Algebra;
use crate::error::{Error, Result};
use crate::multivector::Multivector;

/// Running count of primitive multivector operations.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct OpCounter {
    count: u64,
}

impl OpCounter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn count(&self) -> u64 {
        self.count
    }

    pub fn add(&mut self, ops: u64) {
        self.count += ops;
    }
}

fn bit_of(z: &Multivector, k: usize) -> Result<u64> {
    z.algebra().check_bit(k)?;
    Ok(1u64 << k)
}

/// `n_k`: flips bit `k` of every comb, keeping coefficients.
pub fn negate_bit(z: &Multivector, k: usize) -> Result<Multivector> {
    let bit = bit_of(z, k)?;
    Ok(z.map_terms(|m, c| (m ^ bit, c)))
}

/// Multiplies each term by `(-1)^{A_k}`.
pub fn sign_bit(z: &Multivector, k: usize) -> Result<Multivector> {
    let bit = bit_of(z, k)?;
    Ok(z.map_terms(|m, c| (m, if m & bit != 0 { -c } else { c })))
}

/// The projector `A_k`: keeps the terms whose comb contains `b_k`.
pub fn project_bit(z: &Multivector, k: usize) -> Result<Multivector> {
    let bit = bit_of(z, k)?;
    Ok(z.filter_terms(|m| m & bit != 0))
}

/// `1 - A_k`: keeps the terms whose comb lacks `b_k`.
pub fn project_bit_complement(z: &Multivector, k: usize) -> Result<Multivector> {
    let bit = bit_of(z, k)?;
    Ok(z.filter_terms(|m| m & bit == 0))
}

/// `H_k z = (n_k z + (-1)^{A_k} z) / sqrt(2)`.
pub fn hadamard(z: &Multivector, k: usize) -> Result<Multivector> {
    let bit = bit_of(z, k)?;
    let terms = z.terms().flat_map(|(comb, c)| {
        let v = c * FRAC_1_SQRT_2;
        [(comb.flip(k), v), (comb, if comb.0 & bit != 0 { -v } else { v })]
    });
    Multivector::from_terms(z.algebra(), terms)
}

/// `X_k = 1 - A_k + X o A_k`: applies `gate` to the part of `z` whose combs
/// contain `b_k` and leaves the rest alone. `gate` must be linear.
pub fn control_x<F>(z: &Multivector, k: usize, gate: F) -> Result<Multivector>
where
    F: FnOnce(&Multivector) -> Result<Multivector>,
{
    let selected = project_bit(z, k)?;
    let rest = project_bit_complement(z, k)?;
    rest.add(&gate(&selected)?)
}

pub fn cnot(z: &Multivector, control: usize, target: usize) -> Result<Multivector> {
    GateOp::Cnot { control, target }.validate(z.algebra().n())?;
    control_x(z, control, |w| negate_bit(w, target))
}

pub fn toffoli(z: &Multivector, controls: [usize; 2], target: usize) -> Result<Multivector> {
    GateOp::Toffoli { controls, target }.validate(z.algebra().n())?;
    control_x(z, controls[0], |w| control_x(w, controls[1], |v| negate_bit(v, target)))
}

/// Controlled `e^{i phi}` on the blades containing `b_k`.
pub fn phase(z: &Multivector, k: usize, phi: f64) -> Result<Multivector> {
    control_x(z, k, |w| w.phase_rotate(phi))
}

/// The pi/8 gate, `phase(k, pi/4)`.
pub fn t_gate(z: &Multivector, k: usize) -> Result<Multivector> {
    phase(z, k, FRAC_PI_4)
}

/// Pauli Y as `i o n_k o (-1)^{A_k}`.
pub fn pauli_y(z: &Multivector, k: usize) -> Result<Multivector> {
    negate_bit(&sign_bit(z, k)?, k)?.complex_i()
}

/// Clears bit `k` of every comb. Terms that collide are summed.
pub fn reset_bit(z: &Multivector, k: usize) -> Result<Multivector> {
    let bit = bit_of(z, k)?;
    Ok(z.map_terms(|m, c| (m & !bit, c)))
}

pub fn apply_gate(z: &Multivector, op: &GateOp, counter: &mut OpCounter) -> Result<Multivector> {
    op.validate(z.algebra().n())?;
    let out = match *op {
        GateOp::X(k) => negate_bit(z, k),
        GateOp::Z(k) => sign_bit(z, k),
        GateOp::Y(k) => pauli_y(z, k),
        GateOp::H(k) => hadamard(z, k),
        GateOp::Phase(k, phi) => phase(z, k, phi),
        GateOp::T(k) => t_gate(z, k),
        GateOp::Cnot { control, target } => cnot(z, control, target),
        GateOp::Toffoli { controls, target } => toffoli(z, controls, target),
        GateOp::Reset(k) => reset_bit(z, k),
        GateOp::Select(k) => project_bit(z, k),
        GateOp::GlobalI => z.complex_i(),
        GateOp::GlobalPhase(phi) => z.phase_rotate(phi),
    }?;
    counter.add(op.cost());
    Ok(out)
}

/// Runs the ops left to right.
pub fn apply_circuit(z: &Multivector, circuit: &Circuit) -> Result<(Multivector, OpCounter)> {
    let algebra = z.algebra();
    if algebra.n() != circuit.width || (circuit.complex && !algebra.has_complex()) {
        let expected = Algebra::new(circuit.width, circuit.complex, algebra.has_aux())?;
        return Err(Error::WidthMismatch { left: algebra, right: expected });
    }
    circuit.validate()?;
    let mut counter = OpCounter::new();
    let mut state = z.clone();
    for op in &circuit.ops {
        state = apply_gate(&state, op, &mut counter)?;
    }
    Ok((state, counter))
}

/// The all-zero comb `c_{0...0}` with coefficient 1.
pub fn vacuum(algebra: Algebra) -> Multivector {
    Multivector::scalar(algebra, 1.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comb::Comb;

    fn real(n: usize) -> Algebra {
        Algebra::real(n).unwrap()
    }

    fn bits(alg: Algebra, s: &str, c: f64) -> Multivector {
        Multivector::from_bits(alg, s, c).unwrap()
    }

    #[test]
    fn negation_flips_one_bit() {
        let a = real(3);
        assert_eq!(negate_bit(&bits(a, "010", 1.0), 1).unwrap(), bits(a, "110", 1.0));
        assert_eq!(negate_bit(&bits(a, "010", 1.0), 4), Err(Error::BitOutOfRange { bit: 4, n: 3 }));
        assert_eq!(negate_bit(&bits(a, "010", 1.0), 0), Err(Error::BitOutOfRange { bit: 0, n: 3 }));
    }

    #[test]
    fn sign_and_projection() {
        let a = real(2);
        let z = bits(a, "10", 1.0).add(&bits(a, "01", 1.0)).unwrap();
        assert_eq!(sign_bit(&z, 1).unwrap(), bits(a, "10", -1.0).add(&bits(a, "01", 1.0)).unwrap());
        assert_eq!(project_bit(&z, 1).unwrap(), bits(a, "10", 1.0));
        assert_eq!(project_bit_complement(&z, 1).unwrap(), bits(a, "01", 1.0));
    }

    #[test]
    fn projector_matches_half_difference() {
        let a = real(3);
        let z = Multivector::from_terms(a, (0..8u64).map(|x| (Comb(x << 1), x as f64 - 3.0))).unwrap();
        for k in 1..=3 {
            let via_sign = z.scale(0.5).sub(&sign_bit(&z, k).unwrap().scale(0.5)).unwrap();
            assert_eq!(project_bit(&z, k).unwrap(), via_sign);
        }
    }

    #[test]
    fn hadamard_on_one() {
        let a = real(1);
        let h = hadamard(&bits(a, "1", 1.0), 1).unwrap();
        assert_eq!(h.coefficient(Comb(0)), FRAC_1_SQRT_2);
        assert_eq!(h.coefficient(Comb(0b10)), -FRAC_1_SQRT_2);
    }

    #[test]
    fn cnot_truth_table() {
        let a = real(2);
        assert_eq!(cnot(&bits(a, "11", 1.0), 1, 2).unwrap(), bits(a, "10", 1.0));
        assert_eq!(cnot(&bits(a, "01", 1.0), 1, 2).unwrap(), bits(a, "01", 1.0));
        assert_eq!(cnot(&bits(a, "10", 1.0), 1, 2).unwrap(), bits(a, "11", 1.0));
        assert!(matches!(cnot(&bits(a, "10", 1.0), 1, 1), Err(Error::IndexCollision(_))));
    }

    #[test]
    fn toffoli_truth_table() {
        let a = real(3);
        for x in 0..8u64 {
            let (b1, b2, b3) = (x >> 2 & 1, x >> 1 & 1, x & 1);
            let input = Comb(b1 << 1 | b2 << 2 | b3 << 3);
            let out_b3 = b3 ^ (b1 & b2);
            let expected = Comb(b1 << 1 | b2 << 2 | out_b3 << 3);
            let z = Multivector::comb(a, input, 1.0).unwrap();
            assert_eq!(toffoli(&z, [1, 2], 3).unwrap(), Multivector::comb(a, expected, 1.0).unwrap());
        }
    }

    #[test]
    fn control_with_identity_is_identity() {
        let a = real(3);
        let z = Multivector::from_terms(a, (0..8u64).map(|x| (Comb(x << 1), 1.0 + x as f64))).unwrap();
        assert_eq!(control_x(&z, 2, |w| Ok(w.clone())).unwrap(), z);
    }

    #[test]
    fn reset_table_for_three_bits() {
        let a = real(3);
        let rows = [
            ("000", "000"),
            ("100", "100"),
            ("010", "010"),
            ("001", "000"),
            ("110", "110"),
            ("101", "100"),
            ("011", "010"),
            ("111", "110"),
        ];
        for (from, to) in rows {
            assert_eq!(reset_bit(&bits(a, from, 1.0), 3).unwrap(), bits(a, to, 1.0), "{from}");
        }
        let collide = bits(a, "001", 1.0).add(&bits(a, "000", 1.0)).unwrap();
        assert_eq!(reset_bit(&collide, 3).unwrap(), bits(a, "000", 2.0));
    }

    #[test]
    fn pauli_y_on_zero_and_one() {
        let z = Algebra::complex(1).unwrap();
        // Y|0> = i|1>, Y|1> = -i|0>
        assert_eq!(pauli_y(&bits(z, "00", 1.0), 1).unwrap(), bits(z, "11", 1.0));
        assert_eq!(pauli_y(&bits(z, "01", 1.0), 1).unwrap(), bits(z, "10", -1.0));
        assert!(pauli_y(&bits(real(1), "1", 1.0), 1).is_err());
    }

    #[test]
    fn empty_circuit() {
        let a = real(2);
        let z = bits(a, "01", 3.0);
        let (out, counter) = apply_circuit(&z, &Circuit::new(2, false)).unwrap();
        assert_eq!(out, z);
        assert_eq!(counter.count(), 0);
    }

    #[test]
    fn circuit_width_must_match() {
        let z = vacuum(real(2));
        assert!(matches!(apply_circuit(&z, &Circuit::new(3, false)), Err(Error::WidthMismatch { .. })));
        assert!(matches!(apply_circuit(&z, &Circuit::new(2, true)), Err(Error::WidthMismatch { .. })));
        let bad = Circuit::with_ops(2, false, vec![GateOp::H(3)]);
        assert!(matches!(apply_circuit(&z, &bad), Err(Error::BitOutOfRange { .. })));
    }

    #[test]
    fn hadamards_cost_two_each() {
        for n in 1..=6 {
            let ops = (1..=n).map(GateOp::H).collect();
            let (state, counter) = apply_circuit(&vacuum(real(n)), &Circuit::with_ops(n, false, ops)).unwrap();
            assert_eq!(state.len(), 1 << n);
            assert_eq!(counter.count(), 2 * n as u64);
        }
    }
}
