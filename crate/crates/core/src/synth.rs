//! Shortest-circuit synthesis for real orthogonal 4×4 targets.
//!
//! Breadth-first search over sequences drawn from a fixed nine-gate real
//! vocabulary. Unitaries are deduplicated up to global sign, so the first
//! sequence reaching a unitary is both minimal in length and, because
//! children are expanded in vocabulary order, lexicographically smallest
//! among minimal sequences. The vocabulary generates a finite group (1152
//! elements up to sign), so the whole search tree is built once and cached.

use std::collections::hash_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::family::{matrix_for, FamilyLabel};
use crate::linsys::{inverse_operator, orthonormality_deviation, RealMatrix, EXACT_TOL};
use crate::sim::{unitary_of, Circuit, Gate, GateRecord};

pub const DEFAULT_MAX_GATES: usize = 8;

/// Instruction set searched by [`synthesize`], in tie-breaking order.
pub fn vocabulary() -> [Gate; 9] {
    [
        Gate::H(0),
        Gate::H(1),
        Gate::X(0),
        Gate::X(1),
        Gate::Z(0),
        Gate::Z(1),
        Gate::Cnot { control: 0, target: 1 },
        Gate::Cnot { control: 1, target: 0 },
        Gate::Cz(0, 1),
    ]
}

type Real4 = [f64; 16];
type Key = [i64; 16];

const IDENTITY: Real4 = [1.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 1.0];

fn mul(a: &Real4, b: &Real4) -> Real4 {
    let mut out = [0.0; 16];
    for i in 0..4 {
        for k in 0..4 {
            let x = a[i * 4 + k];
            if x != 0.0 {
                for j in 0..4 {
                    out[i * 4 + j] += x * b[k * 4 + j];
                }
            }
        }
    }
    out
}

/// Entries rounded to 12 decimals, with the sign fixed so the first nonzero entry is positive.
fn canonical_key(m: &Real4) -> Key {
    let flip = m.iter().find(|v| v.abs() > 1e-9).is_some_and(|v| *v < 0.0);
    m.map(|v| {
        let v = if flip { -v } else { v };
        let k = (v * 1e12).round() as i64;
        if k == 0 { 0 } else { k }
    })
}

fn real_unitary(gate: &Gate) -> Real4 {
    let c = Circuit::from_gates(2, [gate.clone()]).expect("vocabulary gate fits two qubits");
    let u = unitary_of(&c);
    let mut out = [0.0; 16];
    for i in 0..4 {
        for j in 0..4 {
            debug_assert!(u[(i, j)].im.abs() < 1e-15);
            out[i * 4 + j] = u[(i, j)].re;
        }
    }
    out
}

/// Minimal vocabulary-index sequence for every reachable unitary, keyed up to sign.
fn search_tree() -> &'static HashMap<Key, Vec<u8>> {
    static TREE: OnceLock<HashMap<Key, Vec<u8>>> = OnceLock::new();
    TREE.get_or_init(|| {
        let gates: Vec<Real4> = vocabulary().iter().map(real_unitary).collect();
        let mut seen: HashMap<Key, Vec<u8>> = HashMap::new();
        seen.insert(canonical_key(&IDENTITY), Vec::new());
        let mut frontier: Vec<(Real4, Vec<u8>)> = vec![(IDENTITY, Vec::new())];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for (u, seq) in &frontier {
                for (g, gate) in gates.iter().enumerate() {
                    // appending a gate multiplies on the left
                    let v = mul(gate, u);
                    let key = canonical_key(&v);
                    if let Entry::Vacant(slot) = seen.entry(key) {
                        let mut s = seq.clone();
                        s.push(g as u8);
                        slot.insert(s.clone());
                        next.push((v, s));
                    }
                }
            }
            frontier = next;
        }
        seen
    })
}

/// Number of distinct unitaries (up to sign) the vocabulary generates.
pub fn group_order() -> usize {
    search_tree().len()
}

/// A circuit realizing `matched_sign · target`.
#[derive(Debug, Clone, PartialEq)]
pub struct SynthesisResult {
    pub circuit: Circuit,
    pub gate_count: usize,
    pub matched_sign: i8,
    pub max_deviation: f64,
}

#[derive(Serialize)]
struct SynthesisRecord {
    #[serde(skip_serializing_if = "Option::is_none")]
    label: Option<String>,
    gates: Vec<GateRecord>,
    gate_count: usize,
    matched_sign: i8,
    max_deviation: f64,
}

impl SynthesisResult {
    /// JSON object `{label, gates, gate_count, matched_sign, max_deviation}`.
    pub fn to_json(&self, label: Option<FamilyLabel>) -> serde_json::Value {
        serde_json::to_value(SynthesisRecord {
            label: label.map(|l| l.to_string()),
            gates: self.circuit.records(),
            gate_count: self.gate_count,
            matched_sign: self.matched_sign,
            max_deviation: self.max_deviation,
        })
        .expect("serializable")
    }
}

/// Finds a shortest circuit over [`vocabulary`] whose unitary equals `±target`.
pub fn synthesize(target: &RealMatrix, max_gates: usize) -> Result<SynthesisResult> {
    if target.dim() != 4 || orthonormality_deviation(target) > EXACT_TOL {
        return Err(Error::NotOrthogonal);
    }
    let t: Real4 = target.entries().try_into().expect("4x4");
    let seq = search_tree().get(&canonical_key(&t)).filter(|s| s.len() <= max_gates).ok_or(Error::NotFound { max_gates })?;
    let vocab = vocabulary();
    let circuit = Circuit::from_gates(2, seq.iter().map(|&g| vocab[usize::from(g)].clone()))?;
    let u = unitary_of(&circuit);
    let deviation = |sign: f64| {
        (0..4)
            .flat_map(|i| (0..4).map(move |j| (i, j)))
            .map(|(i, j)| (u[(i, j)] - sign * target.get(i, j)).norm())
            .fold(0.0, f64::max)
    };
    let (plus, minus) = (deviation(1.0), deviation(-1.0));
    let (matched_sign, max_deviation) = if plus <= minus { (1, plus) } else { (-1, minus) };
    Ok(SynthesisResult { gate_count: circuit.len(), circuit, matched_sign, max_deviation })
}

/// Synthesizes the inverse operator of a family member.
pub fn synthesize_label(label: FamilyLabel, max_gates: usize) -> Result<SynthesisResult> {
    synthesize(&inverse_operator(&matrix_for(label))?, max_gates)
}

/// Synthesizes all 48 family members; fails on the first label with no circuit.
pub fn synthesize_family(max_gates: usize) -> Result<BTreeMap<FamilyLabel, SynthesisResult>> {
    FamilyLabel::all().into_iter().map(|label| Ok((label, synthesize_label(label, max_gates)?))).collect()
}

/// `min over s = ±1` of the max-norm of `s·U·A - I`, with `U` the circuit's unitary.
pub fn verify(circuit: &Circuit, a: &RealMatrix) -> f64 {
    let u = unitary_of(circuit);
    let n = a.dim();
    assert_eq!(u.nrows(), n, "circuit and matrix dimensions differ");
    [1.0, -1.0]
        .into_iter()
        .map(|sign| {
            let mut worst: f64 = 0.0;
            for i in 0..n {
                for j in 0..n {
                    let entry: num_complex::Complex64 = (0..n).map(|k| u[(i, k)] * a.get(k, j)).sum();
                    let expected = if i == j { 1.0 } else { 0.0 };
                    worst = worst.max((entry * sign - expected).norm());
                }
            }
            worst
        })
        .fold(f64::INFINITY, f64::min)
}
