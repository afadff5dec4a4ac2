use nalgebra::DMatrix;
use num_complex::Complex64;

use super::gate::{Gate, GateRecord};
use super::state::{QuantumState, MAX_QUBITS};
use crate::error::{Error, Result};

/// Ordered gate list on a fixed-size register.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Circuit {
    n_qubits: usize,
    ops: Vec<Gate>,
}

impl Circuit {
    pub fn new(n_qubits: usize) -> Result<Self> {
        if n_qubits == 0 || n_qubits > MAX_QUBITS {
            return Err(Error::InvalidTarget(format!("register size {n_qubits} outside 1..={MAX_QUBITS}")));
        }
        Ok(Self { n_qubits, ops: Vec::new() })
    }

    pub fn from_gates(n_qubits: usize, gates: impl IntoIterator<Item = Gate>) -> Result<Self> {
        let mut circuit = Self::new(n_qubits)?;
        for gate in gates {
            circuit.push(gate)?;
        }
        Ok(circuit)
    }

    pub fn push(&mut self, gate: Gate) -> Result<&mut Self> {
        gate.validate(self.n_qubits)?;
        self.ops.push(gate);
        Ok(self)
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn gates(&self) -> &[Gate] {
        &self.ops
    }

    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }

    pub fn records(&self) -> Vec<GateRecord> {
        self.ops.iter().map(Gate::record).collect()
    }
}

/// Runs `circuit` on the computational basis state `|initial⟩`.
pub fn run(circuit: &Circuit, initial: usize) -> Result<QuantumState> {
    let mut state = QuantumState::basis(circuit.n_qubits(), initial)?;
    for gate in circuit.gates() {
        state.apply(gate)?;
    }
    Ok(state)
}

/// The circuit's unitary; column `j` is `run(circuit, j)`.
pub fn unitary_of(circuit: &Circuit) -> DMatrix<Complex64> {
    let dim = 1usize << circuit.n_qubits();
    let mut u = DMatrix::zeros(dim, dim);
    for j in 0..dim {
        // gates were validated on push
        let column = run(circuit, j).expect("validated circuit");
        for (i, amp) in column.amplitudes().iter().enumerate() {
            u[(i, j)] = *amp;
        }
    }
    u
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_circuit() {
        let c = Circuit::new(2).unwrap();
        assert_eq!(run(&c, 0).unwrap(), QuantumState::basis(2, 0).unwrap());
        assert_eq!(unitary_of(&c), DMatrix::identity(4, 4));
    }

    #[test]
    fn hadamard_pair_gives_uniform_state() {
        let c = Circuit::from_gates(2, [Gate::H(0), Gate::H(1)]).unwrap();
        let s = run(&c, 0).unwrap();
        for amp in s.amplitudes() {
            assert!((amp.re - 0.5).abs() < 1e-15 && amp.im == 0.0);
        }
    }

    #[test]
    fn push_validates() {
        let mut c = Circuit::new(2).unwrap();
        assert!(c.push(Gate::X(3)).is_err());
        assert!(c.is_empty());
        assert!(run(&c, 4).is_err());
    }

    #[test]
    fn unitary_is_unitary() {
        let c = Circuit::from_gates(2, [Gate::H(0), Gate::S(1), Gate::Cnot { control: 0, target: 1 }, Gate::T(0), Gate::Y(1)]).unwrap();
        let u = unitary_of(&c);
        let product = u.adjoint() * &u;
        let err = (product - DMatrix::<Complex64>::identity(4, 4)).iter().map(|z| z.norm()).fold(0.0, f64::max);
        assert!(err < 1e-12);
    }
}
