use std::f64::consts::FRAC_1_SQRT_2;

use num_complex::Complex64;

use super::gate::Gate;
use crate::error::{Error, Result};

/// Largest register the dense simulator accepts.
pub const MAX_QUBITS: usize = 20;

/// Pure state of an `n`-qubit register as `2^n` complex amplitudes.
#[derive(Debug, Clone, PartialEq)]
pub struct QuantumState {
    n_qubits: usize,
    amplitudes: Vec<Complex64>,
}

impl QuantumState {
    /// Computational basis state `|index⟩`.
    pub fn basis(n_qubits: usize, index: usize) -> Result<Self> {
        if n_qubits == 0 || n_qubits > MAX_QUBITS {
            return Err(Error::InvalidTarget(format!("register size {n_qubits} outside 1..={MAX_QUBITS}")));
        }
        let dim = 1usize << n_qubits;
        if index >= dim {
            return Err(Error::InvalidTarget(format!("basis index {index} out of range for {n_qubits} qubits")));
        }
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); dim];
        amplitudes[index] = Complex64::new(1.0, 0.0);
        Ok(Self { n_qubits, amplitudes })
    }

    /// Wraps amplitudes, checking length is a power of two and norm is 1 within `1e-10`.
    pub fn from_amplitudes(amplitudes: Vec<Complex64>) -> Result<Self> {
        let dim = amplitudes.len();
        if dim < 2 || !dim.is_power_of_two() {
            return Err(Error::DimensionMismatch { expected: dim.next_power_of_two().max(2), got: dim });
        }
        let norm: f64 = amplitudes.iter().map(Complex64::norm_sqr).sum::<f64>().sqrt();
        if (norm - 1.0).abs() > 1e-10 {
            return Err(Error::NotNormalized { norm });
        }
        Ok(Self { n_qubits: dim.trailing_zeros() as usize, amplitudes })
    }

    pub fn from_real(amplitudes: &[f64]) -> Result<Self> {
        Self::from_amplitudes(amplitudes.iter().map(|&a| Complex64::new(a, 0.0)).collect())
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(Complex64::norm_sqr).sum()
    }

    /// Applies `gate` in place.
    pub fn apply(&mut self, gate: &Gate) -> Result<()> {
        gate.validate(self.n_qubits)?;
        let h = FRAC_1_SQRT_2;
        let i = Complex64::i();
        match *gate {
            Gate::H(q) => self.apply_single(q, |a, b| ((a + b) * h, (a - b) * h)),
            Gate::X(q) => self.apply_single(q, |a, b| (b, a)),
            Gate::Y(q) => self.apply_single(q, |a, b| (-i * b, i * a)),
            Gate::Z(q) => self.apply_single(q, |a, b| (a, -b)),
            Gate::S(q) => self.apply_single(q, |a, b| (a, i * b)),
            Gate::Sdg(q) => self.apply_single(q, |a, b| (a, -i * b)),
            Gate::T(q) => {
                let phase = Complex64::from_polar(1.0, std::f64::consts::FRAC_PI_4);
                self.apply_single(q, |a, b| (a, phase * b))
            }
            Gate::Cnot { control, target } => {
                let (c, t) = (1usize << control, 1usize << target);
                for idx in 0..self.amplitudes.len() {
                    if idx & c != 0 && idx & t == 0 {
                        self.amplitudes.swap(idx, idx | t);
                    }
                }
            }
            Gate::Cz(a, b) => {
                let mask = (1usize << a) | (1usize << b);
                for (idx, amp) in self.amplitudes.iter_mut().enumerate() {
                    if idx & mask == mask {
                        *amp = -*amp;
                    }
                }
            }
            Gate::PhaseFlipDiag(ref indices) => {
                let mut flip = vec![false; self.amplitudes.len()];
                for &idx in indices {
                    flip[idx] = true;
                }
                for (amp, flip) in self.amplitudes.iter_mut().zip(flip) {
                    if flip {
                        *amp = -*amp;
                    }
                }
            }
        }
        Ok(())
    }

    fn apply_single(&mut self, qubit: usize, f: impl Fn(Complex64, Complex64) -> (Complex64, Complex64)) {
        let stride = 1usize << qubit;
        for idx in 0..self.amplitudes.len() {
            if idx & stride == 0 {
                let (a, b) = f(self.amplitudes[idx], self.amplitudes[idx | stride]);
                self.amplitudes[idx] = a;
                self.amplitudes[idx | stride] = b;
            }
        }
    }
}

/// Returns `gate` applied to a copy of `state`.
pub fn apply_gate(state: &QuantumState, gate: &Gate) -> Result<QuantumState> {
    let mut next = state.clone();
    next.apply(gate)?;
    Ok(next)
}

/// Measurement probabilities `|amplitude_i|²`.
pub fn probabilities(state: &QuantumState) -> Vec<f64> {
    state.amplitudes.iter().map(Complex64::norm_sqr).collect()
}

/// Entrywise square roots of measurement probabilities.
///
/// Signs are lost: the result equals the true amplitudes only when every true
/// amplitude is real and nonnegative. Use tomography to recover signs.
pub fn amplitudes_from_probabilities(probs: &[f64]) -> Result<Vec<f64>> {
    probs
        .iter()
        .enumerate()
        .map(|(index, &value)| if value < 0.0 { Err(Error::NegativeProbability { index, value }) } else { Ok(value.sqrt()) })
        .collect()
}
