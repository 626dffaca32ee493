//! Named states, integer registers and the Fourier-free period finding for 15.

use std::f64::consts::FRAC_1_SQRT_2;

use crate::comb::{Algebra, Comb};
use crate::error::{Error, Result};
use crate::gates::{project_bit, project_bit_complement};
use crate::multivector::Multivector;

/// Bit pattern of `x` in a `width`-bit register occupying positions
/// `1..=width`, most significant bit at position 1.
pub fn encode_int(x: u64, width: usize) -> Result<u64> {
    if width == 0 || width > 62 || x >> width != 0 {
        return Err(Error::Overflow { value: x, width });
    }
    Ok((0..width).filter(|i| x >> i & 1 == 1).fold(0, |acc, i| acc | 1 << (width - i)))
}

/// Reads the register at positions `first..first + width` of `mask`, most
/// significant bit first.
pub fn decode_int(mask: u64, first: usize, width: usize) -> u64 {
    (0..width).fold(0, |acc, i| acc << 1 | (mask >> (first + i) & 1))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Register {
    pub name: String,
    /// Position of the most significant bit.
    pub first: usize,
    pub width: usize,
}

impl Register {
    pub fn positions(&self) -> std::ops::Range<usize> {
        self.first..self.first + self.width
    }

    pub fn encode(&self, x: u64) -> Result<u64> {
        Ok(encode_int(x, self.width)? << (self.first - 1))
    }

    pub fn decode(&self, mask: u64) -> u64 {
        decode_int(mask, self.first, self.width)
    }
}

/// Named, disjoint bit ranges inside `1..=n`. Every register is MSB-first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegisterLayout {
    n: usize,
    registers: Vec<Register>,
}

impl RegisterLayout {
    /// Lays registers out back to back starting at position 1.
    pub fn contiguous(n: usize, widths: &[(&str, usize)]) -> Result<Self> {
        let mut first = 1;
        let mut registers = Vec::with_capacity(widths.len());
        for &(name, width) in widths {
            if width == 0 {
                return Err(Error::Layout(format!("register {name} has zero width")));
            }
            registers.push(Register { name: name.to_owned(), first, width });
            first += width;
        }
        if first - 1 > n {
            return Err(Error::Layout(format!("registers need {} bits but n = {n}", first - 1)));
        }
        Ok(RegisterLayout { n, registers })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, name: &str) -> Option<&Register> {
        self.registers.iter().find(|r| r.name == name)
    }

    pub fn registers(&self) -> &[Register] {
        &self.registers
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bell {
    PsiPlus,
    PsiMinus,
    PhiPlus,
    PhiMinus,
}

impl Bell {
    pub const ALL: [Bell; 4] = [Bell::PsiPlus, Bell::PsiMinus, Bell::PhiPlus, Bell::PhiMinus];
}

/// Two-bit Bell multivectors: `(b2 +- b1)/sqrt2` and `(1 +- b1 b2)/sqrt2`.
pub fn bell(which: Bell) -> Multivector {
    let algebra = Algebra::real(2).expect("two bits");
    let (first, second, sign) = match which {
        Bell::PsiPlus => (Comb::from_positions(&[2]), Comb::from_positions(&[1]), 1.0),
        Bell::PsiMinus => (Comb::from_positions(&[2]), Comb::from_positions(&[1]), -1.0),
        Bell::PhiPlus => (Comb::UNIT, Comb::from_positions(&[1, 2]), 1.0),
        Bell::PhiMinus => (Comb::UNIT, Comb::from_positions(&[1, 2]), -1.0),
    };
    Multivector::from_terms(algebra, [(first, FRAC_1_SQRT_2), (second, sign * FRAC_1_SQRT_2)]).expect("valid combs")
}

/// `(1 + b1 b2 b3)/sqrt2`.
pub fn ghz() -> Multivector {
    let algebra = Algebra::real(3).expect("three bits");
    Multivector::from_terms(algebra, [(Comb::UNIT, FRAC_1_SQRT_2), (Comb::from_positions(&[1, 2, 3]), FRAC_1_SQRT_2)])
        .expect("valid combs")
}

pub const MAX_HADAMARD_WIDTH: usize = 20;

/// `2^{-n/2} (1 + b1) ... (1 + bn)`, built as the product of the normalized
/// factors `(1 + b_k)/sqrt2`.
pub fn hadamard_state(n: usize) -> Result<Multivector> {
    if !(1..=MAX_HADAMARD_WIDTH).contains(&n) {
        return Err(Error::InvalidAlgebra(format!(
            "hadamard state width must be in 1..={MAX_HADAMARD_WIDTH}, got {n}"
        )));
    }
    let algebra = Algebra::real(n)?;
    (1..=n).try_fold(Multivector::scalar(algebra, 1.0), |acc, k| {
        let factor = Multivector::from_terms(
            algebra,
            [(Comb::UNIT, FRAC_1_SQRT_2), (Comb::from_positions(&[k]), FRAC_1_SQRT_2)],
        )?;
        acc.geometric_product(&factor)
    })
}

pub const SHOR_MODULUS: u64 = 15;
const SHOR_REGISTER: usize = 4;

#[derive(Clone, Debug, PartialEq)]
pub struct ShorOutcome {
    pub base: u64,
    pub period: u64,
    /// `gcd(base^{period/2} -+ 1, 15)` when the period is even and both are
    /// non-trivial.
    pub factors: Option<(u64, u64)>,
    /// `sum_x c_x c_{base^x mod 15}` on the 8-bit layout.
    pub pre_selection: Multivector,
    /// Blades of `pre_selection` whose value register reads 1.
    pub post_selection: Multivector,
    /// Decoded x-register of every surviving blade, ascending.
    pub selected_x: Vec<u64>,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn pow_mod(base: u64, exp: u64, modulus: u64) -> u64 {
    (0..exp).fold(1, |acc, _| acc * base % modulus)
}

/// x-register on positions 1..=4, value register on 5..=8.
pub fn shor15_layout() -> RegisterLayout {
    RegisterLayout::contiguous(2 * SHOR_REGISTER, &[("x", SHOR_REGISTER), ("value", SHOR_REGISTER)]).expect("fits")
}

/// Period finding for `x -> base^x mod 15` without a Fourier transform.
///
/// The oracle multivector pairs every `x` comb with its value comb. The
/// value register is then projected onto the comb of 1 using single-bit
/// projectors (the complement where the target bit is 0), and the smallest
/// surviving `x > 0` is the period.
pub fn shor15(base: u64) -> Result<ShorOutcome> {
    if base <= 1 || base >= SHOR_MODULUS || gcd(base, SHOR_MODULUS) != 1 {
        return Err(Error::NotCoprime(base));
    }
    let layout = shor15_layout();
    let algebra = Algebra::real(layout.n())?;
    let xreg = layout.get("x").expect("x register");
    let vreg = layout.get("value").expect("value register");

    let mut pre_selection = Multivector::zero(algebra);
    for x in 0..1u64 << SHOR_REGISTER {
        let value = pow_mod(base, x, SHOR_MODULUS);
        let cx = Multivector::comb(algebra, Comb(xreg.encode(x)?), 1.0)?;
        let cv = Multivector::comb(algebra, Comb(vreg.encode(value)?), 1.0)?;
        pre_selection = pre_selection.add(&cx.geometric_product(&cv)?)?;
    }

    let target = vreg.encode(1)?;
    let mut post_selection = pre_selection.clone();
    for position in vreg.positions() {
        post_selection = if target >> position & 1 == 1 {
            project_bit(&post_selection, position)?
        } else {
            project_bit_complement(&post_selection, position)?
        };
    }

    let mut selected_x: Vec<u64> = post_selection.terms().map(|(comb, _)| xreg.decode(comb.0)).collect();
    selected_x.sort_unstable();
    let period = selected_x
        .iter()
        .copied()
        .filter(|&x| x > 0)
        .min()
        .ok_or_else(|| Error::Layout(format!("no x > 0 maps to 1 for base {base}")))?;

    let factors = (period % 2 == 0)
        .then(|| {
            let half = pow_mod(base, period / 2, SHOR_MODULUS);
            let low = gcd(half + SHOR_MODULUS - 1, SHOR_MODULUS);
            let high = gcd(half + 1, SHOR_MODULUS);
            let trivial = |f: u64| f == 1 || f == SHOR_MODULUS;
            (!trivial(low) && !trivial(high)).then_some((low.min(high), low.max(high)))
        })
        .flatten();

    Ok(ShorOutcome { base, period, factors, pre_selection, post_selection, selected_x })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_codec() {
        assert_eq!(encode_int(4, 4).unwrap(), 0b0100);
        assert_eq!(Algebra::real(4).unwrap().format_bits(Comb(encode_int(4, 4).unwrap())), "0100");
        assert_eq!(encode_int(0, 6).unwrap(), 0);
        assert!(matches!(encode_int(16, 4), Err(Error::Overflow { .. })));
        for x in 0..256 {
            assert_eq!(decode_int(encode_int(x, 8).unwrap(), 1, 8), x);
        }
    }

    #[test]
    fn layout_bounds() {
        assert!(RegisterLayout::contiguous(7, &[("x", 4), ("v", 4)]).is_err());
        let l = shor15_layout();
        assert_eq!(l.get("value").unwrap().positions(), 5..9);
        assert_eq!(l.get("value").unwrap().encode(1).unwrap(), 1 << 8);
    }

    #[test]
    fn named_states() {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let psi = bell(Bell::PsiPlus);
        assert_eq!(psi.coefficient(Comb::from_positions(&[1])), s);
        assert_eq!(psi.coefficient(Comb::from_positions(&[2])), s);
        let phi = bell(Bell::PhiMinus);
        assert_eq!(phi.coefficient(Comb::UNIT), s);
        assert_eq!(phi.coefficient(Comb::from_positions(&[1, 2])), -s);
        assert_eq!(ghz().len(), 2);
    }

    #[test]
    fn small_hadamard_states() {
        let h1 = hadamard_state(1).unwrap();
        assert_eq!(h1.coefficient(Comb::UNIT), FRAC_1_SQRT_2);
        assert_eq!(h1.coefficient(Comb(0b10)), FRAC_1_SQRT_2);
        assert_eq!(hadamard_state(3).unwrap().len(), 8);
        assert!(hadamard_state(0).is_err());
        assert!(hadamard_state(21).is_err());
    }

    #[test]
    fn shor_base_two() {
        let out = shor15(2).unwrap();
        assert_eq!(out.period, 4);
        assert_eq!(out.factors, Some((3, 5)));
        assert_eq!(out.selected_x, vec![0, 4, 8, 12]);
        assert_eq!(out.pre_selection.len(), 16);
        // c_{01000001} survives: x = 4, value = 1
        let alg = Algebra::real(8).unwrap();
        assert_eq!(out.post_selection.coefficient(alg.parse_bits("01000001").unwrap()), 1.0);
    }

    #[test]
    fn shor_rejects_non_coprime() {
        for base in [0, 1, 3, 5, 6, 9, 10, 12, 15, 16] {
            assert_eq!(shor15(base), Err(Error::NotCoprime(base)));
        }
    }

    #[test]
    fn shor_base_fourteen_has_trivial_factors() {
        let out = shor15(14).unwrap();
        assert_eq!(out.period, 2);
        assert_eq!(out.factors, None);
    }
}
