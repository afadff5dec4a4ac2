use std::f64::consts::FRAC_PI_4;

use qlinsolve::grover::{build_grover_circuit, geometry, optimal_iterations, success_probability};
use qlinsolve::sim::{probabilities, run};

#[test]
fn closed_form_matches_simulation() {
    for n in 2..=4usize {
        let dim = 1usize << n;
        let g = geometry(dim, 1).unwrap();
        for marked in 0..dim {
            for k in 0..=4 {
                let state = run(&build_grover_circuit(n, &[marked], k).unwrap(), 0).unwrap();
                let p = probabilities(&state)[marked];
                assert!((p - success_probability(&g, k)).abs() <= 1e-10, "n={n} marked={marked} k={k}");
            }
        }
    }
}

#[test]
fn state_stays_in_two_dimensional_plane() {
    let marked = [1usize, 6, 9];
    let n = 4;
    for k in 0..=5 {
        let state = run(&build_grover_circuit(n, &marked, k).unwrap(), 0).unwrap();
        let amps = state.amplitudes();
        let m0 = amps[marked[0]];
        let u0 = amps[0];
        for (i, a) in amps.iter().enumerate() {
            let reference = if marked.contains(&i) { m0 } else { u0 };
            assert!((a - reference).norm() <= 1e-10, "k={k} i={i}");
        }
        let g = geometry(16, 3).unwrap();
        let p: f64 = marked.iter().map(|&i| amps[i].norm_sqr()).sum();
        assert!((p - success_probability(&g, k)).abs() <= 1e-10);
    }
}

#[test]
fn iterations_scale_with_square_root() {
    for bits in 1..=10u32 {
        let n = 1usize << bits;
        let k = optimal_iterations(&geometry(n, 1).unwrap()) as f64;
        let scale = FRAC_PI_4 * (n as f64).sqrt();
        assert!(k <= scale.ceil() && k >= scale.floor() - 1.0, "N={n} k={k}");
    }
}

#[test]
fn optimal_count_maximizes_success_locally() {
    for bits in 2..=10u32 {
        let g = geometry(1usize << bits, 1).unwrap();
        let k = optimal_iterations(&g);
        let best = success_probability(&g, k);
        assert!(best >= success_probability(&g, k + 1));
        if k > 0 {
            assert!(best >= success_probability(&g, k - 1));
        }
    }
}
