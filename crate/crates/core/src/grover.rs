//! Grover search: rotation geometry and executable circuits.
//!
//! With `sin θ = √(M/N)`, `k` Grover iterations leave probability
//! `sin²((2k+1)θ)` on the marked set.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::sim::{Circuit, Gate};

/// Largest register accepted by [`build_grover_circuit`].
pub const MAX_GROVER_QUBITS: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GroverGeometry {
    pub n: usize,
    pub m: usize,
    /// Radians, `arcsin(√(M/N))`.
    pub theta: f64,
}

/// Geometry for `m` marked states out of `n`. `m == n` is accepted and gives `θ = π/2`.
pub fn geometry(n: usize, m: usize) -> Result<GroverGeometry> {
    if n < 2 || !n.is_power_of_two() || m == 0 || m > n {
        return Err(Error::InvalidCounts { n, m });
    }
    let theta = if m == n { FRAC_PI_2 } else { (m as f64 / n as f64).sqrt().asin() };
    Ok(GroverGeometry { n, m, theta })
}

/// `round(π/(4θ) - 1/2)`, clamped at zero.
pub fn optimal_iterations(g: &GroverGeometry) -> usize {
    let k = (FRAC_PI_4 / g.theta - 0.5).round();
    if k > 0.0 { k as usize } else { 0 }
}

/// `sin²((2k+1)θ)`.
pub fn success_probability(g: &GroverGeometry, k: usize) -> f64 {
    ((2 * k + 1) as f64 * g.theta).sin().powi(2)
}

/// `H^⊗n` followed by `k` rounds of oracle and diffusion.
///
/// The oracle flips the sign of each marked basis state; the diffusion is
/// `H^⊗n · (flip |0…0⟩) · H^⊗n`, which equals inversion about the mean up to a
/// global sign.
pub fn build_grover_circuit(n: usize, marked: &[usize], k: usize) -> Result<Circuit> {
    if n == 0 || n > MAX_GROVER_QUBITS {
        return Err(Error::InvalidMarkedSet(format!("register size {n} outside 1..={MAX_GROVER_QUBITS}")));
    }
    let dim = 1usize << n;
    if marked.is_empty() {
        return Err(Error::InvalidMarkedSet("no marked states".into()));
    }
    let mut marked = marked.to_vec();
    marked.sort_unstable();
    marked.dedup();
    if let Some(&bad) = marked.iter().find(|&&i| i >= dim) {
        return Err(Error::InvalidMarkedSet(format!("basis index {bad} out of range for {n} qubits")));
    }
    let hadamards = || (0..n).map(Gate::H);
    let mut gates: Vec<Gate> = hadamards().collect();
    for _ in 0..k {
        gates.push(Gate::PhaseFlipDiag(marked.clone()));
        gates.extend(hadamards());
        gates.push(Gate::PhaseFlipDiag(vec![0]));
        gates.extend(hadamards());
    }
    Circuit::from_gates(n, gates)
}

/// Closed-form prediction and simulated marked-set probability.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GroverReport {
    pub n: usize,
    pub marked: Vec<usize>,
    pub k: usize,
    pub theta: f64,
    pub predicted: f64,
    pub simulated: f64,
}

/// Builds and simulates the circuit; `k = None` uses [`optimal_iterations`].
pub fn grover_report(n: usize, marked: &[usize], k: Option<usize>) -> Result<GroverReport> {
    let circuit = build_grover_circuit(n, marked, 0)?;
    let mut marked = marked.to_vec();
    marked.sort_unstable();
    marked.dedup();
    let g = geometry(1usize << circuit.n_qubits(), marked.len())?;
    let k = k.unwrap_or_else(|| optimal_iterations(&g));
    let circuit = build_grover_circuit(n, &marked, k)?;
    let state = crate::sim::run(&circuit, 0)?;
    let probs = crate::sim::probabilities(&state);
    let simulated = marked.iter().map(|&i| probs[i]).sum();
    Ok(GroverReport { n, marked, k, theta: g.theta, predicted: success_probability(&g, k), simulated })
}
