//! Linear systems with ±1/2 orthogonal coefficient matrices, solved as
//! two-qubit circuits.
//!
//! For `A·x = y` with orthonormal columns the inverse operator is `U = Aᵀ`,
//! so `x = U·y`. This crate builds the 48-member family of such 4×4 matrices,
//! synthesizes a short circuit for each `U`, simulates it, samples
//! measurement shots and reconstructs the output state by Pauli tomography.
//!
//! Modules:
//! * [`linsys`]: matrix checks, inverse operator, solve.
//! * [`family`]: the `A_ijkl` / `B_ijkl` matrices.
//! * [`sim`]: state-vector simulator and shot sampling.
//! * [`synth`]: shortest-circuit synthesis over a real gate vocabulary.
//! * [`tomo`]: density matrices, depolarizing noise, tomography, fidelity.
//! * [`grover`]: Grover geometry and circuits.
//! * [`qasm`]: OpenQASM 2.0 export.
//!
//! Qubit 0 is the least-significant bit of a basis index throughout.

pub mod error;
pub mod family;
pub mod grover;
pub mod linsys;
pub mod qasm;
pub mod sim;
pub mod synth;
pub mod table1;
pub mod tomo;

pub use error::{Error, Result};
pub use family::{enumerate_family, matrix_for, ColumnClass, FamilyLabel, LinearSystemSpec};
pub use linsys::{RealMatrix, RealVector};
pub use sim::{Circuit, Gate, QuantumState, ShotTable};

/// The solution state `x = Aᵀ·e_basis` of a family member, as a two-qubit state.
pub fn solution_state(label: FamilyLabel, basis: usize) -> Result<QuantumState> {
    let x = linsys::solve(&matrix_for(label), &RealVector::basis(4, basis))?;
    QuantumState::from_real(x.as_slice())
}

/// Synthesizes the label's circuit, runs it from `|basis⟩` and samples `shots`
/// outcomes. With `noise > 0` the output state first passes through a global
/// depolarizing channel and outcomes are drawn from the mixed state's diagonal.
pub fn sample_label(label: FamilyLabel, basis: usize, shots: u64, seed: u64, noise: f64, max_gates: usize) -> Result<ShotTable> {
    let result = synth::synthesize_label(label, max_gates)?;
    let state = sim::run(&result.circuit, basis)?;
    if noise == 0.0 {
        return Ok(sim::sample(&state, shots, seed));
    }
    let rho = tomo::apply_depolarizing(&tomo::density_from_state(&state), noise)?;
    let probs: Vec<f64> = rho.matrix().diagonal().iter().map(|z| z.re.max(0.0)).collect();
    Ok(sim::sample_distribution(&probs, state.n_qubits(), shots, seed))
}
