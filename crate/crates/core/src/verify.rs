//! Differential checks of the fast paths against the reference oracles.

use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::circuit::{Circuit, GateOp};
use crate::comb::{Algebra, Comb};
use crate::error::Result;
use crate::gates::{self, apply_circuit, negate_bit, sign_bit};
use crate::multivector::Multivector;
use crate::oracle::{self, blade_product, sandwich_gate, DenseMultivector, SandwichGate, StateVector};

/// Max-norm tolerance for the correspondence check.
pub const CORRESPONDENCE_TOLERANCE: f64 = 1e-10;

const MAX_REPORTED: usize = 5;

#[derive(Clone, Debug, PartialEq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub checks: u64,
    pub failures: u64,
    /// The first few mismatches.
    pub samples: Vec<String>,
}

impl SuiteReport {
    fn new(name: &'static str) -> Self {
        SuiteReport { name, checks: 0, failures: 0, samples: Vec::new() }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures += 1;
            if self.samples.len() < MAX_REPORTED {
                self.samples.push(describe());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{status} {} ({} checks, {} failures)", self.name, self.checks, self.failures)?;
        for s in &self.samples {
            write!(f, "\n  {s}")?;
        }
        Ok(())
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random sparse multivector with coefficients drawn from `coefficients`.
pub fn random_multivector<R: Rng>(
    rng: &mut R,
    algebra: Algebra,
    max_terms: usize,
    coefficients: &[f64],
) -> Multivector {
    let mask = algebra.reserved_mask();
    let count = rng.gen_range(0..=max_terms);
    let terms: Vec<(Comb, f64)> =
        (0..count).map(|_| (Comb(rng.gen::<u64>() & mask), *coefficients.choose(rng).expect("non-empty"))).collect();
    Multivector::from_terms(algebra, terms).expect("masks are reserved")
}

/// Random complex circuit over `h x y z phase t cnot toffoli gphase`.
pub fn random_circuit<R: Rng>(rng: &mut R, n: usize, depth: usize) -> Circuit {
    let mut circuit = Circuit::new(n, true);
    let distinct = |rng: &mut R, count: usize| -> Vec<usize> {
        let mut bits: Vec<usize> = (1..=n).collect();
        bits.shuffle(rng);
        bits.truncate(count);
        bits
    };
    for _ in 0..depth {
        let kinds: &[&str] = match n {
            1 => &["h", "x", "y", "z", "phase", "t", "gphase"],
            2 => &["h", "x", "y", "z", "phase", "t", "gphase", "cnot"],
            _ => &["h", "x", "y", "z", "phase", "t", "gphase", "cnot", "toffoli"],
        };
        let k = rng.gen_range(1..=n);
        let angle = rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI);
        let op = match *kinds.choose(rng).expect("non-empty") {
            "h" => GateOp::H(k),
            "x" => GateOp::X(k),
            "y" => GateOp::Y(k),
            "z" => GateOp::Z(k),
            "phase" => GateOp::Phase(k, angle),
            "t" => GateOp::T(k),
            "gphase" => GateOp::GlobalPhase(angle),
            "cnot" => {
                let b = distinct(rng, 2);
                GateOp::Cnot { control: b[0], target: b[1] }
            }
            _ => {
                let b = distinct(rng, 3);
                GateOp::Toffoli { controls: [b[0], b[1]], target: b[2] }
            }
        };
        circuit.push(op);
    }
    circuit
}

/// Comb-pair signs against transposition counting: exhaustive over all pairs
/// of masks on `n_exhaustive` positions, then `random_pairs` random pairs on
/// `n_random` positions.
pub fn sign_rule(n_exhaustive: usize, n_random: usize, random_pairs: u64, seed: u64) -> SuiteReport {
    let mut report = SuiteReport::new("sign rule vs transposition parity");
    let compare = |report: &mut SuiteReport, a: u64, b: u64| {
        let (mask, negative) = blade_product(a, b);
        let fast = (a ^ b, Comb(a).product_is_negative(Comb(b)));
        report.check(fast == (mask, negative), || {
            format!("{a:#b} * {b:#b}: fast {fast:?}, oracle {:?}", (mask, negative))
        });
    };
    for a in 0..1u64 << n_exhaustive {
        for b in 0..1u64 << n_exhaustive {
            compare(&mut report, a, b);
        }
    }
    let mut rng = rng(seed);
    let mask = (1u64 << n_random) - 1;
    for _ in 0..random_pairs {
        let (a, b) = (rng.gen::<u64>() & mask, rng.gen::<u64>() & mask);
        compare(&mut report, a, b);
    }
    report
}

/// Sparse products against the dense engine on random integer-coefficient
/// inputs; equality is exact.
pub fn product_vs_dense(n_max: usize, trials: u64, seed: u64) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("geometric product vs dense engine");
    let mut rng = rng(seed);
    for _ in 0..trials {
        let n = rng.gen_range(1..=n_max);
        let algebra = Algebra::new(n, rng.gen(), rng.gen())?;
        let coeffs = [-2.0, -1.0, 1.0, 2.0];
        let a = random_multivector(&mut rng, algebra, 6, &coeffs);
        let b = random_multivector(&mut rng, algebra, 6, &coeffs);
        let fast = a.geometric_product(&b)?;
        let dense = DenseMultivector::from_multivector(&a)?
            .product(&DenseMultivector::from_multivector(&b)?)?
            .to_multivector(algebra)?;
        report.check(fast == dense, || format!("({a}) * ({b}): fast {fast}, dense {dense}"));
    }
    Ok(report)
}

/// Bit-level negation and sign conjugation against the sandwich formulas in
/// the `n + 2` dimensional algebra, for every comb (complex flag included)
/// and every bit, `1 <= n <= n_max`.
pub fn sandwich_identities(n_max: usize) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("bit gates vs sandwich formulas");
    for n in 1..=n_max {
        let algebra = Algebra::complex(n)?;
        for mask in 0..1u64 << (n + 1) {
            let z = Multivector::comb(algebra, Comb(mask), 1.0)?;
            let dense = DenseMultivector::from_multivector(&z)?;
            for k in 1..=n {
                for (which, fast) in
                    [(SandwichGate::Negate, negate_bit(&z, k)?), (SandwichGate::Sign, sign_bit(&z, k)?)]
                {
                    let literal = sandwich_gate(&dense, n, k, which)?.to_multivector(algebra.with_aux()?)?;
                    let fast = fast.with_algebra(algebra.with_aux()?)?;
                    report.check(fast == literal, || {
                        format!("n={n} k={k} {which:?} on {mask:#b}: fast {fast}, sandwich {literal}")
                    });
                }
            }
        }
    }
    Ok(report)
}

/// Random complex circuits run on the vacuum, compared with the state-vector
/// backend through the correspondence map.
pub fn correspondence(n_max: usize, depth_max: usize, trials: u64, seed: u64) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("multivector circuits vs state vectors");
    let mut rng = rng(seed);
    for _ in 0..trials {
        let n = rng.gen_range(1..=n_max);
        let depth = rng.gen_range(0..=depth_max);
        let circuit = random_circuit(&mut rng, n, depth);
        let (state, _) = apply_circuit(&gates::vacuum(Algebra::complex(n)?), &circuit)?;
        let ga = oracle::correspondence(&state)?;
        let mut sv = StateVector::vacuum(n);
        for op in &circuit.ops {
            sv = sv.apply(op)?;
        }
        let diff = ga.max_norm_diff(&sv);
        report.check(diff <= CORRESPONDENCE_TOLERANCE, || {
            format!("n={n} depth={depth}: max-norm difference {diff:e}\n{}", crate::dsl::print_circuit(&circuit))
        });
    }
    Ok(report)
}

/// `(a b) c == a (b c)` on random integer-coefficient multivectors.
pub fn associativity(n_max: usize, trials: u64, seed: u64) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("associativity");
    let mut rng = rng(seed);
    let coeffs = [-2.0, -1.0, 1.0, 2.0];
    for _ in 0..trials {
        let algebra = Algebra::real(rng.gen_range(1..=n_max))?;
        let a = random_multivector(&mut rng, algebra, 5, &coeffs);
        let b = random_multivector(&mut rng, algebra, 5, &coeffs);
        let c = random_multivector(&mut rng, algebra, 5, &coeffs);
        let left = a.geometric_product(&b)?.geometric_product(&c)?;
        let right = a.geometric_product(&b.geometric_product(&c)?)?;
        report.check(left == right, || format!("({a}) ({b}) ({c})"));
    }
    Ok(report)
}

/// Every differential suite with the given sizes.
pub fn run_all(n: usize, trials: u64, seed: u64) -> Result<Vec<SuiteReport>> {
    Ok(vec![
        sign_rule(n.clamp(1, 6), 10, trials, seed),
        product_vs_dense(n.clamp(1, 8), trials, seed)?,
        associativity(n.clamp(1, 6), trials, seed)?,
        sandwich_identities(n.clamp(1, 5))?,
        correspondence(n.clamp(1, 4), 20, trials, seed)?,
    ])
}
