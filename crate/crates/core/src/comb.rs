//! Combs: basis blades of a real Euclidean Clifford algebra indexed by a
//! bitmask.
//!
//! Bit position `k` of a mask is set iff the generator `b_k` occurs in the
//! blade. Position 0 is the complex flag, positions `1..=n` carry data bits
//! and position `n + 1` is the auxiliary dimension used by the gate
//! constructions. The layout is fixed whether or not the optional positions
//! are enabled, so masks from different configurations of the same width
//! line up.

use std::fmt;

use crate::error::{Error, Result};

/// Largest number of reserved positions in one algebra.
pub const MAX_TOTAL_BITS: usize = 62;

/// Which positions an algebra reserves: `n` data bits plus the optional
/// complex flag and auxiliary dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Algebra {
    n: usize,
    complex: bool,
    aux: bool,
}

impl Algebra {
    pub fn new(n: usize, complex: bool, aux: bool) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidAlgebra("at least one data bit is required".into()));
        }
        let total = n + usize::from(complex) + usize::from(aux);
        if total > MAX_TOTAL_BITS {
            return Err(Error::InvalidAlgebra(format!(
                "{total} reserved positions exceed the limit of {MAX_TOTAL_BITS}"
            )));
        }
        Ok(Algebra { n, complex, aux })
    }

    /// Real algebra over `n` data bits.
    pub fn real(n: usize) -> Result<Self> {
        Self::new(n, false, false)
    }

    /// Data bits plus the complex flag.
    pub fn complex(n: usize) -> Result<Self> {
        Self::new(n, true, false)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_complex(&self) -> bool {
        self.complex
    }

    pub fn has_aux(&self) -> bool {
        self.aux
    }

    pub fn aux_position(&self) -> usize {
        self.n + 1
    }

    /// The same data width with the auxiliary dimension switched on.
    pub fn with_aux(&self) -> Result<Self> {
        Self::new(self.n, self.complex, true)
    }

    pub fn with_complex(&self) -> Result<Self> {
        Self::new(self.n, true, self.aux)
    }

    /// Number of reserved positions, i.e. the dimension of the vector space.
    pub fn total_bits(&self) -> usize {
        self.n + usize::from(self.complex) + usize::from(self.aux)
    }

    /// Reserved positions in ascending order.
    pub fn positions(&self) -> impl Iterator<Item = usize> {
        let first = if self.complex { 0 } else { 1 };
        let last = if self.aux { self.n + 1 } else { self.n };
        first..=last
    }

    /// Union of every reserved position.
    pub fn reserved_mask(&self) -> u64 {
        self.positions().fold(0, |acc, p| acc | (1u64 << p))
    }

    /// Mask of the data positions `1..=n`.
    pub fn data_mask(&self) -> u64 {
        ((1u64 << self.n) - 1) << 1
    }

    pub fn contains(&self, mask: u64) -> bool {
        mask & !self.reserved_mask() == 0
    }

    pub fn check(&self, mask: u64) -> Result<Comb> {
        if self.contains(mask) {
            Ok(Comb(mask))
        } else {
            Err(Error::MaskOutOfRange { mask, algebra: *self })
        }
    }

    pub fn check_bit(&self, bit: usize) -> Result<()> {
        if (1..=self.n).contains(&bit) {
            Ok(())
        } else {
            Err(Error::BitOutOfRange { bit, n: self.n })
        }
    }

    /// Parses a bitstring with one character per reserved position, leftmost
    /// character first.
    pub fn parse_bits(&self, bits: &str) -> Result<Comb, String> {
        let expected = self.total_bits();
        let count = bits.chars().count();
        if count != expected {
            return Err(format!("bitstring has {count} characters, expected {expected}"));
        }
        let mut mask = 0u64;
        for (pos, ch) in self.positions().zip(bits.chars()) {
            match ch {
                '0' => {}
                '1' => mask |= 1 << pos,
                other => return Err(format!("invalid bit character {other:?}")),
            }
        }
        Ok(Comb(mask))
    }

    /// Inverse of [`Algebra::parse_bits`].
    pub fn format_bits(&self, comb: Comb) -> String {
        self.positions().map(|p| if comb.has(p) { '1' } else { '0' }).collect()
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} complex={} aux={}", self.n, u8::from(self.complex), u8::from(self.aux))
    }
}

/// A basis blade `b_{k1} b_{k2} ... b_{kj}` with `k1 < k2 < ... < kj`,
/// stored as the set of its generator positions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Comb(pub u64);

impl Comb {
    pub const UNIT: Comb = Comb(0);

    pub fn from_positions(positions: &[usize]) -> Comb {
        Comb(positions.iter().fold(0, |acc, &p| acc | (1u64 << p)))
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn grade(self) -> u32 {
        self.0.count_ones()
    }

    pub fn has(self, position: usize) -> bool {
        self.0 >> position & 1 == 1
    }

    pub fn flip(self, position: usize) -> Comb {
        Comb(self.0 ^ (1 << position))
    }

    /// Generator positions in ascending order.
    pub fn positions(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let p = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(p)
        })
    }

    /// `self * other = sign * Comb(self ^ other)`; returns `true` when the
    /// sign is negative.
    pub fn product_is_negative(self, other: Comb) -> bool {
        product_is_negative(self.0, other.0)
    }

    /// Sign picked up by reversing the order of the generators.
    pub fn reverse_is_negative(self) -> bool {
        matches!(self.grade() % 4, 2 | 3)
    }
}

/// Parity of the number of pairs `(k, l)`, `k < l`, with bit `k` set in
/// `right` and bit `l` set in `left`. This is the number of transpositions
/// needed to bring `left * right` into ascending generator order.
#[inline]
pub fn product_is_negative(left: u64, right: u64) -> bool {
    let mut shifted = left >> 1;
    let mut parity = 0u32;
    while shifted != 0 {
        parity ^= (shifted & right).count_ones();
        shifted >>= 1;
    }
    parity & 1 == 1
}
