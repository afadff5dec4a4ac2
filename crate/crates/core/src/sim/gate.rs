use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// A gate application on specific qubits. Qubit 0 is the least-significant
/// bit of the basis index.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Gate {
    H(usize),
    X(usize),
    Y(usize),
    Z(usize),
    S(usize),
    Sdg(usize),
    T(usize),
    Cnot { control: usize, target: usize },
    /// Symmetric in its two qubits.
    Cz(usize, usize),
    /// Multiplies the listed basis amplitudes by -1.
    PhaseFlipDiag(Vec<usize>),
}

/// Serializable `{kind, targets}` view of a gate.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GateRecord {
    pub kind: &'static str,
    pub targets: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub flipped: Option<Vec<usize>>,
}

impl Gate {
    pub fn kind(&self) -> &'static str {
        match self {
            Gate::H(_) => "H",
            Gate::X(_) => "X",
            Gate::Y(_) => "Y",
            Gate::Z(_) => "Z",
            Gate::S(_) => "S",
            Gate::Sdg(_) => "Sdg",
            Gate::T(_) => "T",
            Gate::Cnot { .. } => "CNOT",
            Gate::Cz(..) => "CZ",
            Gate::PhaseFlipDiag(_) => "PhaseFlipDiag",
        }
    }

    /// Qubits acted on; for controlled gates the control comes first.
    /// `PhaseFlipDiag` acts on the whole register and reports no targets.
    pub fn targets(&self) -> Vec<usize> {
        match *self {
            Gate::H(q) | Gate::X(q) | Gate::Y(q) | Gate::Z(q) | Gate::S(q) | Gate::Sdg(q) | Gate::T(q) => vec![q],
            Gate::Cnot { control, target } => vec![control, target],
            Gate::Cz(a, b) => vec![a, b],
            Gate::PhaseFlipDiag(_) => Vec::new(),
        }
    }

    pub fn record(&self) -> GateRecord {
        let flipped = match self {
            Gate::PhaseFlipDiag(indices) => Some(indices.clone()),
            _ => None,
        };
        GateRecord { kind: self.kind(), targets: self.targets(), flipped }
    }

    /// Checks the gate against an `n_qubits` register.
    pub fn validate(&self, n_qubits: usize) -> Result<()> {
        let targets = self.targets();
        if let Some(&q) = targets.iter().find(|&&q| q >= n_qubits) {
            return Err(Error::InvalidTarget(format!("{self} uses qubit {q} on a {n_qubits}-qubit register")));
        }
        if targets.len() == 2 && targets[0] == targets[1] {
            return Err(Error::InvalidTarget(format!("{self} repeats qubit {}", targets[0])));
        }
        if let Gate::PhaseFlipDiag(indices) = self {
            let dim = 1usize << n_qubits;
            if let Some(&i) = indices.iter().find(|&&i| i >= dim) {
                return Err(Error::InvalidTarget(format!("basis index {i} out of range for {n_qubits} qubits")));
            }
        }
        Ok(())
    }
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gate::Cnot { control, target } => write!(f, "CNOT(q{control}->q{target})"),
            Gate::Cz(a, b) => write!(f, "CZ(q{a},q{b})"),
            Gate::PhaseFlipDiag(indices) => write!(f, "PhaseFlipDiag{indices:?}"),
            other => write!(f, "{}(q{})", other.kind(), other.targets()[0]),
        }
    }
}
