//! Sparse multivectors over comb bitmasks.

use std::collections::BTreeMap;
use std::fmt;

use crate::comb::{product_is_negative, Algebra, Comb};
use crate::error::{Error, Result};

/// A real linear combination of combs.
///
/// Terms are kept in ascending mask order and a coefficient that is exactly
/// zero is never stored. All operations return new values.
#[derive(Clone, Debug, PartialEq)]
pub struct Multivector {
    algebra: Algebra,
    terms: BTreeMap<u64, f64>,
}

impl Multivector {
    pub fn zero(algebra: Algebra) -> Self {
        Multivector { algebra, terms: BTreeMap::new() }
    }

    pub fn scalar(algebra: Algebra, value: f64) -> Self {
        let mut m = Self::zero(algebra);
        m.accumulate(0, value);
        m.canonicalize();
        m
    }

    /// `coefficient * c_mask`.
    pub fn comb(algebra: Algebra, comb: Comb, coefficient: f64) -> Result<Self> {
        algebra.check(comb.0)?;
        let mut m = Self::zero(algebra);
        m.accumulate(comb.0, coefficient);
        m.canonicalize();
        Ok(m)
    }

    /// Product of the listed generators, e.g. `blade(alg, &[4, 5, 6])` is
    /// `b4 b5 b6`. Positions must be strictly ascending.
    pub fn blade(algebra: Algebra, positions: &[usize]) -> Result<Self> {
        if positions.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidAlgebra(format!(
                "blade positions must be strictly ascending, got {positions:?}"
            )));
        }
        if positions.iter().any(|&p| p >= 64) {
            return Err(Error::InvalidAlgebra(format!("position out of range in {positions:?}")));
        }
        Self::comb(algebra, Comb::from_positions(positions), 1.0)
    }

    /// Builds a multivector from `(comb, coefficient)` pairs, summing repeats.
    pub fn from_terms<I>(algebra: Algebra, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Comb, f64)>,
    {
        let mut m = Self::zero(algebra);
        for (comb, coefficient) in terms {
            algebra.check(comb.0)?;
            m.accumulate(comb.0, coefficient);
        }
        m.canonicalize();
        Ok(m)
    }

    /// Parses a bitstring in this algebra's layout (see [`Algebra::parse_bits`]).
    pub fn from_bits(algebra: Algebra, bits: &str, coefficient: f64) -> Result<Self> {
        let comb = algebra.parse_bits(bits).map_err(Error::InvalidAlgebra)?;
        Self::comb(algebra, comb, coefficient)
    }

    pub fn algebra(&self) -> Algebra {
        self.algebra
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending mask order.
    pub fn terms(&self) -> impl ExactSizeIterator<Item = (Comb, f64)> + '_ {
        self.terms.iter().map(|(&m, &c)| (Comb(m), c))
    }

    pub fn coefficient(&self, comb: Comb) -> f64 {
        self.terms.get(&comb.0).copied().unwrap_or(0.0)
    }

    /// Reinterprets the terms in another algebra; every mask has to be valid
    /// there.
    pub fn with_algebra(&self, algebra: Algebra) -> Result<Self> {
        for &mask in self.terms.keys() {
            algebra.check(mask)?;
        }
        Ok(Multivector { algebra, terms: self.terms.clone() })
    }

    fn same_algebra(&self, other: &Self) -> Result<()> {
        if self.algebra == other.algebra {
            Ok(())
        } else {
            Err(Error::WidthMismatch { left: self.algebra, right: other.algebra })
        }
    }

    fn accumulate(&mut self, mask: u64, value: f64) {
        *self.terms.entry(mask).or_insert(0.0) += value;
    }

    fn canonicalize(&mut self) {
        self.terms.retain(|_, c| *c != 0.0);
    }

    /// Applies `f` to every term and sums the images. `f` must keep masks
    /// inside the algebra.
    pub(crate) fn map_terms<F>(&self, mut f: F) -> Self
    where
        F: FnMut(u64, f64) -> (u64, f64),
    {
        let mut out = Self::zero(self.algebra);
        for (&mask, &c) in &self.terms {
            let (m, v) = f(mask, c);
            debug_assert!(self.algebra.contains(m));
            out.accumulate(m, v);
        }
        out.canonicalize();
        out
    }

    /// Keeps the terms selected by `keep`.
    pub(crate) fn filter_terms<F>(&self, mut keep: F) -> Self
    where
        F: FnMut(u64) -> bool,
    {
        Multivector {
            algebra: self.algebra,
            terms: self.terms.iter().filter(|(&m, _)| keep(m)).map(|(&m, &c)| (m, c)).collect(),
        }
    }

    /// Bilinear extension of `c_A c_B = (-1)^{#(k<l : B_k A_l)} c_{A xor B}`.
    pub fn geometric_product(&self, other: &Self) -> Result<Self> {
        self.same_algebra(other)?;
        let mut out = Self::zero(self.algebra);
        for (&a, &x) in &self.terms {
            for (&b, &y) in &other.terms {
                let v = x * y;
                out.accumulate(a ^ b, if product_is_negative(a, b) { -v } else { v });
            }
        }
        out.canonicalize();
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_algebra(other)?;
        let mut out = self.clone();
        for (&m, &c) in &other.terms {
            out.accumulate(m, c);
        }
        out.canonicalize();
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(-1.0))
    }

    pub fn scale(&self, s: f64) -> Self {
        self.map_terms(|m, c| (m, c * s))
    }

    /// The complex structure map: flips position 0 and negates terms in which
    /// it was set, so that `i * i = -1`.
    pub fn complex_i(&self) -> Result<Self> {
        if !self.algebra.has_complex() {
            return Err(Error::ComplexBitDisabled(self.algebra));
        }
        Ok(self.map_terms(|m, c| (m ^ 1, if m & 1 == 1 { -c } else { c })))
    }

    /// `cos(phi) z + sin(phi) i z`.
    pub fn phase_rotate(&self, phi: f64) -> Result<Self> {
        let rotated = self.complex_i()?;
        self.scale(phi.cos()).add(&rotated.scale(phi.sin()))
    }

    /// Reverses the generator order of every blade.
    pub fn reverse(&self) -> Self {
        self.map_terms(|m, c| (m, if Comb(m).reverse_is_negative() { -c } else { c }))
    }

    pub fn scalar_part(&self) -> f64 {
        self.coefficient(Comb::UNIT)
    }

    /// `scalar_part(reverse(self) * other)`.
    pub fn scalar_product(&self, other: &Self) -> Result<f64> {
        Ok(self.reverse().geometric_product(other)?.scalar_part())
    }

    /// Drops terms with `|coefficient| <= tolerance`.
    pub fn prune(&self, tolerance: f64) -> Self {
        Multivector {
            algebra: self.algebra,
            terms: self.terms.iter().filter(|(_, c)| c.abs() > tolerance).map(|(&m, &c)| (m, c)).collect(),
        }
    }

    /// Largest coefficient-wise absolute difference.
    pub fn max_abs_diff(&self, other: &Self) -> Result<f64> {
        self.same_algebra(other)?;
        let mut worst = 0.0f64;
        for (&m, &c) in &self.terms {
            worst = worst.max((c - other.coefficient(Comb(m))).abs());
        }
        for (&m, &c) in &other.terms {
            if !self.terms.contains_key(&m) {
                worst = worst.max(c.abs());
            }
        }
        Ok(worst)
    }
}

impl std::ops::Neg for &Multivector {
    type Output = Multivector;

    fn neg(self) -> Multivector {
        self.scale(-1.0)
    }
}

impl fmt::Display for Multivector {
    /// `<coefficient> c<bits>` terms joined by ` + `; `0` when empty.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (comb, c)) in self.terms().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c} c{}", self.algebra.format_bits(comb))?;
        }
        Ok(())
    }
}

/// Splits `alpha c_{AB} + beta c_{AC}` into `c_{A0..0}` and
/// `alpha c_{0..0B} + beta c_{0..0C}`.
///
/// `split` is the last position of the shared prefix: the two combs must agree
/// on positions `0..=split`. The prefix lies strictly below the suffix, so the
/// geometric product of the two parts recomposes the input with no sign
/// correction.
pub fn factor_prefix(
    algebra: Algebra,
    alpha: f64,
    comb_ab: Comb,
    beta: f64,
    comb_ac: Comb,
    split: usize,
) -> Result<(Multivector, Multivector)> {
    algebra.check(comb_ab.0)?;
    algebra.check(comb_ac.0)?;
    let low = low_mask(split);
    if (comb_ab.0 ^ comb_ac.0) & low != 0 {
        return Err(Error::NotFactorable { split });
    }
    let prefix = Multivector::comb(algebra, Comb(comb_ab.0 & low), 1.0)?;
    let suffix = Multivector::from_terms(algebra, [(Comb(comb_ab.0 & !low), alpha), (Comb(comb_ac.0 & !low), beta)])?;
    Ok((prefix, suffix))
}

/// Factors a multivector whose terms all share either the positions
/// `0..=split` or the positions above `split`.
///
/// The shared part becomes a single comb on its side of the split and the
/// varying parts are collected on the other side, so
/// `left.geometric_product(&right)` reproduces `m`.
pub fn factor_at(m: &Multivector, split: usize) -> Result<(Multivector, Multivector)> {
    let algebra = m.algebra();
    let low = low_mask(split);
    let Some(&first) = m.terms.keys().next() else {
        return Err(Error::NotFactorable { split });
    };
    let (shared_low, shared_high) = m
        .terms
        .keys()
        .fold((true, true), |(lo, hi), &mask| (lo && (mask ^ first) & low == 0, hi && (mask ^ first) & !low == 0));
    if shared_low {
        let prefix = Multivector::comb(algebra, Comb(first & low), 1.0)?;
        let rest = m.map_terms(|mask, c| (mask & !low, c));
        Ok((prefix, rest))
    } else if shared_high {
        let rest = m.map_terms(|mask, c| (mask & low, c));
        let suffix = Multivector::comb(algebra, Comb(first & !low), 1.0)?;
        Ok((rest, suffix))
    } else {
        Err(Error::NotFactorable { split })
    }
}

fn low_mask(split: usize) -> u64 {
    if split >= 63 {
        u64::MAX
    } else {
        (1u64 << (split + 1)) - 1
    }
}
