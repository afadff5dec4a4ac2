use nalgebra::DMatrix;
use num_complex::Complex64;
use proptest::prelude::*;
use qlinsolve::sim::{chi_square, run, sample, unitary_of, Circuit, Gate, QuantumState};

fn gate_strategy(n: usize) -> impl Strategy<Value = Gate> {
    let q = 0..n;
    prop_oneof![
        q.clone().prop_map(Gate::H),
        q.clone().prop_map(Gate::X),
        q.clone().prop_map(Gate::Y),
        q.clone().prop_map(Gate::Z),
        q.clone().prop_map(Gate::S),
        q.clone().prop_map(Gate::Sdg),
        q.clone().prop_map(Gate::T),
        (q.clone(), 1..n).prop_map(move |(c, d)| Gate::Cnot { control: c, target: (c + d) % n }),
        (q, 1..n).prop_map(move |(a, d)| Gate::Cz(a, (a + d) % n)),
        prop::collection::vec(0..(1usize << n), 1..4).prop_map(Gate::PhaseFlipDiag),
    ]
}

fn circuit_strategy() -> impl Strategy<Value = Circuit> {
    (2usize..5).prop_flat_map(|n| prop::collection::vec(gate_strategy(n), 0..30).prop_map(move |g| Circuit::from_gates(n, g).unwrap()))
}

proptest! {
    #[test]
    fn norm_is_preserved(circuit in circuit_strategy(), start in 0usize..4) {
        let s = run(&circuit, start).unwrap();
        prop_assert!((s.norm_sqr() - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn columns_of_unitary_match_runs(circuit in circuit_strategy()) {
        let u = unitary_of(&circuit);
        let dim = 1usize << circuit.n_qubits();
        for j in 0..dim {
            let s = run(&circuit, j).unwrap();
            for i in 0..dim {
                prop_assert_eq!(u[(i, j)], s.amplitudes()[i]);
            }
        }
        let err = (u.adjoint() * &u - DMatrix::<Complex64>::identity(dim, dim)).iter().map(|z| z.norm()).fold(0.0, f64::max);
        prop_assert!(err <= 1e-10);
    }
}

#[test]
fn hadamard_pair_equals_family_member() {
    let c = Circuit::from_gates(2, [Gate::H(0), Gate::H(1)]).unwrap();
    let u = unitary_of(&c);
    let m = qlinsolve::matrix_for("A_1342".parse().unwrap());
    for i in 0..4 {
        for j in 0..4 {
            assert!((u[(i, j)] - Complex64::new(m.get(i, j), 0.0)).norm() < 1e-15);
        }
    }
}

#[test]
fn large_sample_matches_uniform() {
    let s = QuantumState::from_real(&[0.5; 4]).unwrap();
    let t = sample(&s, 100_000, 11);
    for f in t.frequencies() {
        assert!((f - 0.25).abs() <= 0.012, "{f}");
    }
    let (_, p) = chi_square(&t, &[0.25; 4]);
    assert!(p > 0.001, "p = {p}");
}
