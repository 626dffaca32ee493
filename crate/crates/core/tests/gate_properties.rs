use gacode_core::algorithms::{ghz, hadamard_state, shor15};
use gacode_core::gates::{
    apply_circuit, control_x, hadamard, negate_bit, project_bit, project_bit_complement, sign_bit, vacuum,
};
use gacode_core::oracle::{correspondence, sandwich_gate, DenseMultivector, SandwichGate, StateVector};
use gacode_core::{Algebra, Circuit, Comb, GateOp, Multivector};
use proptest::prelude::*;

fn state(algebra: Algebra) -> impl Strategy<Value = Multivector> {
    let mask = algebra.reserved_mask();
    prop::collection::vec((any::<u64>(), -3.0f64..3.0), 0..10).prop_map(move |terms| {
        Multivector::from_terms(algebra, terms.into_iter().map(|(m, c)| (Comb(m & mask), c))).unwrap()
    })
}

fn state_and_bit(complex: bool) -> impl Strategy<Value = (Multivector, usize)> {
    (1usize..=5).prop_flat_map(move |n| (state(Algebra::new(n, complex, false).unwrap()), 1..=n))
}

#[test]
fn sandwich_forms_agree_for_every_comb() {
    for n in 1..=5 {
        let algebra = Algebra::complex(n).unwrap();
        let wide = algebra.with_aux().unwrap();
        for mask in 0..1u64 << (n + 1) {
            let z = Multivector::comb(algebra, Comb(mask), 1.0).unwrap();
            let dense = DenseMultivector::from_multivector(&z).unwrap();
            for k in 1..=n {
                let neg = sandwich_gate(&dense, n, k, SandwichGate::Negate).unwrap();
                assert_eq!(
                    neg.to_multivector(wide).unwrap(),
                    negate_bit(&z, k).unwrap().with_algebra(wide).unwrap(),
                    "negate n={n} k={k} mask={mask:#b}"
                );
                let sign = sandwich_gate(&dense, n, k, SandwichGate::Sign).unwrap();
                assert_eq!(
                    sign.to_multivector(wide).unwrap(),
                    sign_bit(&z, k).unwrap().with_algebra(wide).unwrap(),
                    "sign n={n} k={k} mask={mask:#b}"
                );
            }
        }
    }
}

#[test]
fn hadamard_of_ghz_matches_state_vector() {
    let z = ghz().with_algebra(Algebra::new(3, false, false).unwrap()).unwrap();
    // lift into the complex algebra: the masks keep their positions
    let lifted = Multivector::from_terms(Algebra::complex(3).unwrap(), z.terms()).unwrap();
    let ga = correspondence(&hadamard(&lifted, 1).unwrap()).unwrap();
    let sv = correspondence(&lifted).unwrap().apply(&GateOp::H(1)).unwrap();
    assert!(ga.max_norm_diff(&sv) < 1e-15);
}

#[test]
fn hadamard_state_equals_gate_route() {
    for n in 1..=10 {
        let ops = (1..=n).map(GateOp::H).collect();
        let (gate_route, counter) =
            apply_circuit(&vacuum(Algebra::real(n).unwrap()), &Circuit::with_ops(n, false, ops)).unwrap();
        assert_eq!(gate_route, hadamard_state(n).unwrap());
        assert_eq!(counter.count(), 2 * n as u64);
    }
}

#[test]
fn shor_period_is_multiplicative_order() {
    let order = |a: u64| (1..=16).find(|&r| (0..r).fold(1, |acc, _| acc * a % 15) == 1).unwrap();
    for base in [2, 4, 7, 8, 11, 13, 14] {
        let out = shor15(base).unwrap();
        assert_eq!(out.period, order(base), "base {base}");
        assert_eq!(out.post_selection.len() as u64, 16u64.div_ceil(out.period));
        for (comb, _) in out.post_selection.terms() {
            assert_eq!(comb.0 >> 5, 0b1000, "value register must read 1");
        }
    }
}

#[test]
fn shor_groups_factor_into_register_sum_times_value_comb() {
    let out = shor15(2).unwrap();
    let algebra = out.pre_selection.algebra();
    for value in [1u64, 2, 4, 8] {
        let value_mask = gacode_core::algorithms::shor15_layout().get("value").unwrap().encode(value).unwrap();
        let group = Multivector::from_terms(
            algebra,
            out.pre_selection.terms().filter(|(c, _)| c.0 & 0b1_1110_0000 == value_mask),
        )
        .unwrap();
        assert_eq!(group.len(), 4);
        let (sum, comb) = gacode_core::factor_at(&group, 4).unwrap();
        assert_eq!(comb, Multivector::comb(algebra, Comb(value_mask), 1.0).unwrap());
        assert_eq!(sum.len(), 4);
        assert_eq!(sum.geometric_product(&comb).unwrap(), group);
    }
}

#[test]
fn counter_ignores_number_of_terms() {
    let n = 6;
    let algebra = Algebra::real(n).unwrap();
    let dense = hadamard_state(n).unwrap();
    let ops: Vec<GateOp> = (1..=n).map(GateOp::H).collect();
    for z in [vacuum(algebra), dense] {
        let (_, counter) = apply_circuit(&z, &Circuit::with_ops(n, false, ops.clone())).unwrap();
        assert_eq!(counter.count(), 2 * n as u64);
    }
}

#[test]
fn state_vector_agrees_on_reset_and_select() {
    let algebra = Algebra::complex(3).unwrap();
    let z = Multivector::from_terms(algebra, (0..16u64).map(|m| (Comb(m), 1.0 + m as f64))).unwrap();
    for op in [GateOp::Reset(2), GateOp::Select(3)] {
        let (ga, _) = apply_circuit(&z, &Circuit::with_ops(3, true, vec![op])).unwrap();
        let sv: StateVector = correspondence(&z).unwrap().apply(&op).unwrap();
        assert_eq!(correspondence(&ga).unwrap().max_norm_diff(&sv), 0.0);
    }
}

proptest! {
    #[test]
    fn negation_and_sign_are_involutions((z, k) in state_and_bit(true)) {
        prop_assert_eq!(negate_bit(&negate_bit(&z, k).unwrap(), k).unwrap(), z.clone());
        prop_assert_eq!(sign_bit(&sign_bit(&z, k).unwrap(), k).unwrap(), z);
    }

    #[test]
    fn bit_maps_commute((z, k) in state_and_bit(true), j in 1usize..=5) {
        let n = z.algebra().n();
        let j = (j - 1) % n + 1;
        prop_assert_eq!(
            negate_bit(&z.complex_i().unwrap(), k).unwrap(),
            negate_bit(&z, k).unwrap().complex_i().unwrap()
        );
        prop_assert_eq!(
            sign_bit(&z.complex_i().unwrap(), k).unwrap(),
            sign_bit(&z, k).unwrap().complex_i().unwrap()
        );
        if j != k {
            prop_assert_eq!(
                negate_bit(&sign_bit(&z, j).unwrap(), k).unwrap(),
                sign_bit(&negate_bit(&z, k).unwrap(), j).unwrap()
            );
        }
    }

    #[test]
    fn projector_is_idempotent_and_complete((z, k) in state_and_bit(false)) {
        let p = project_bit(&z, k).unwrap();
        prop_assert_eq!(project_bit(&p, k).unwrap(), p.clone());
        let q = project_bit_complement(&z, k).unwrap();
        prop_assert_eq!(p.add(&q).unwrap(), z);
    }

    #[test]
    fn hadamard_squares_to_identity((z, k) in state_and_bit(false)) {
        let twice = hadamard(&hadamard(&z, k).unwrap(), k).unwrap();
        prop_assert!(twice.max_abs_diff(&z).unwrap() <= 1e-12);
    }

    #[test]
    fn hadamard_preserves_scalar_product(((a, b), k) in (1usize..=5).prop_flat_map(|n| {
        let alg = Algebra::real(n).unwrap();
        ((state(alg), state(alg)), 1..=n)
    })) {
        let before = a.scalar_product(&b).unwrap();
        let after = hadamard(&a, k).unwrap().scalar_product(&hadamard(&b, k).unwrap()).unwrap();
        prop_assert!((before - after).abs() <= 1e-12);
    }

    #[test]
    fn control_splits_into_subspaces((z, k) in state_and_bit(false), t in 1usize..=5) {
        let n = z.algebra().n();
        let t = (t - 1) % n + 1;
        let gate = |w: &Multivector| sign_bit(w, t);
        let out = control_x(&z, k, gate).unwrap();
        prop_assert_eq!(project_bit_complement(&out, k).unwrap(), project_bit_complement(&z, k).unwrap());
        prop_assert_eq!(project_bit(&out, k).unwrap(), gate(&project_bit(&z, k).unwrap()).unwrap());
    }
}
