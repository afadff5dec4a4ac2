//! OpenQASM 2.0 export.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::sim::{Circuit, Gate};

/// Serializes `circuit` followed by a full-register measurement.
pub fn to_qasm(circuit: &Circuit) -> Result<String> {
    let n = circuit.n_qubits();
    let mut out = String::new();
    out.push_str("OPENQASM 2.0;\n");
    out.push_str("include \"qelib1.inc\";\n");
    let _ = writeln!(out, "qreg q[{n}];");
    let _ = writeln!(out, "creg c[{n}];");
    for gate in circuit.gates() {
        let line = match *gate {
            Gate::H(q) => format!("h q[{q}];"),
            Gate::X(q) => format!("x q[{q}];"),
            Gate::Y(q) => format!("y q[{q}];"),
            Gate::Z(q) => format!("z q[{q}];"),
            Gate::S(q) => format!("s q[{q}];"),
            Gate::Sdg(q) => format!("sdg q[{q}];"),
            Gate::T(q) => format!("t q[{q}];"),
            Gate::Cnot { control, target } => format!("cx q[{control}],q[{target}];"),
            Gate::Cz(a, b) => format!("cz q[{a}],q[{b}];"),
            Gate::PhaseFlipDiag(_) => return Err(Error::UnsupportedGate(gate.to_string())),
        };
        out.push_str(&line);
        out.push('\n');
    }
    out.push_str("measure q -> c;\n");
    Ok(out)
}
