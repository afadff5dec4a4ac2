//! Dense state-vector simulation of small qubit registers.

mod circuit;
mod gate;
mod sampling;
mod state;

pub use circuit::{run, unitary_of, Circuit};
pub use gate::{Gate, GateRecord};
pub use sampling::{chi_square, outcome_label, sample, sample_distribution, ShotTable, DEFAULT_SHOTS};
pub use state::{amplitudes_from_probabilities, apply_gate, probabilities, QuantumState, MAX_QUBITS};
