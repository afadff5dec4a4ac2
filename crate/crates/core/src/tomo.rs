//! Two-qubit state tomography.
//!
//! Expectations of the 16 Pauli words are measured (exactly, or by sampling
//! the nine `{X,Y,Z}²` settings) and inverted linearly into a density matrix,
//! which is then projected onto the physical states by clipping negative
//! eigenvalues. A one-parameter global depolarizing channel models hardware noise.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::sim::{sample_distribution, unitary_of, Circuit, Gate, QuantumState};

/// Fidelity of the reference hardware run for the `A_1234` solution state.
pub const REFERENCE_FIDELITY: f64 = 0.9878;

/// Depolarizing strength that yields [`REFERENCE_FIDELITY`] on a pure two-qubit state.
pub const CALIBRATED_DEPOLARIZING: f64 = 0.016267;

/// Hermitian, unit-trace complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    entries: DMatrix<Complex64>,
}

impl DensityMatrix {
    /// Wraps a square matrix after checking Hermiticity and unit trace within `1e-10`.
    pub fn new(entries: DMatrix<Complex64>) -> Result<Self> {
        if !entries.is_square() || entries.nrows() == 0 {
            return Err(Error::DimensionMismatch { expected: entries.nrows(), got: entries.ncols() });
        }
        let rho = Self { entries };
        if rho.hermiticity_error() > 1e-10 {
            return Err(Error::InvalidMatrix("density matrix is not Hermitian".into()));
        }
        if (rho.trace() - 1.0).abs() > 1e-10 {
            return Err(Error::InvalidMatrix(format!("density matrix has trace {}", rho.trace())));
        }
        Ok(rho)
    }

    pub fn maximally_mixed(dim: usize) -> Self {
        Self { entries: DMatrix::identity(dim, dim) * Complex64::new(1.0 / dim as f64, 0.0) }
    }

    pub fn dim(&self) -> usize {
        self.entries.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.entries
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.entries[(row, col)]
    }

    pub fn trace(&self) -> f64 {
        self.entries.diagonal().iter().map(|z| z.re).sum()
    }

    /// `trace(ρ²)`; 1 for pure states.
    pub fn purity(&self) -> f64 {
        (&self.entries * &self.entries).diagonal().iter().map(|z| z.re).sum()
    }

    pub fn hermiticity_error(&self) -> f64 {
        max_abs(&(&self.entries - self.entries.adjoint()))
    }

    /// Eigenvalues in ascending order.
    pub fn eigenvalues(&self) -> Vec<f64> {
        let mut values: Vec<f64> = SymmetricEigen::new(self.entries.clone()).eigenvalues.iter().copied().collect();
        values.sort_by(f64::total_cmp);
        values
    }

    pub fn max_abs_diff(&self, other: &DensityMatrix) -> f64 {
        max_abs(&(&self.entries - &other.entries))
    }

    /// `{"dim": d, "re": [[..]], "im": [[..]]}`.
    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Record {
            dim: usize,
            re: Vec<Vec<f64>>,
            im: Vec<Vec<f64>>,
        }
        let d = self.dim();
        let part = |f: fn(&Complex64) -> f64| (0..d).map(|i| (0..d).map(|j| f(&self.entries[(i, j)])).collect()).collect();
        serde_json::to_value(Record { dim: d, re: part(|z| z.re), im: part(|z| z.im) }).expect("serializable")
    }

    /// One `row,col,re,im` line per entry, with a header.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("row,col,re,im\n");
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                let z = self.entries[(i, j)];
                let _ = writeln!(out, "{i},{j},{},{}", z.re, z.im);
            }
        }
        out
    }
}

fn max_abs(m: &DMatrix<Complex64>) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Pure-state density matrix `|ψ⟩⟨ψ|`.
pub fn density_from_state(psi: &QuantumState) -> DensityMatrix {
    let v = DMatrix::from_column_slice(psi.dim(), 1, psi.amplitudes());
    DensityMatrix { entries: &v * v.adjoint() }
}

/// Global depolarizing channel `(1 - p)·ρ + p·I/d`.
pub fn apply_depolarizing(rho: &DensityMatrix, p: f64) -> Result<DensityMatrix> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidProbability(p));
    }
    let d = rho.dim();
    let mixed = DMatrix::<Complex64>::identity(d, d) * Complex64::new(p / d as f64, 0.0);
    Ok(DensityMatrix { entries: &rho.entries * Complex64::new(1.0 - p, 0.0) + mixed })
}

/// Depolarizing strength giving pure-target fidelity `target` at dimension `dim`.
pub fn depolarizing_for_fidelity(target: f64, dim: usize) -> f64 {
    (1.0 - target) * dim as f64 / (dim as f64 - 1.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    pub const ALL: [Pauli; 4] = [Pauli::I, Pauli::X, Pauli::Y, Pauli::Z];

    pub fn letter(self) -> char {
        match self {
            Pauli::I => 'I',
            Pauli::X => 'X',
            Pauli::Y => 'Y',
            Pauli::Z => 'Z',
        }
    }

    fn matrix(self) -> DMatrix<Complex64> {
        let (o, l, i) = (Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0), Complex64::i());
        let entries = match self {
            Pauli::I => [l, o, o, l],
            Pauli::X => [o, l, l, o],
            Pauli::Y => [o, -i, i, o],
            Pauli::Z => [l, o, o, -l],
        };
        DMatrix::from_row_slice(2, 2, &entries)
    }
}

/// Two-letter Pauli word; the first letter acts on qubit 1, the second on qubit 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PauliWord(pub Pauli, pub Pauli);

impl PauliWord {
    /// All 16 words in `II, IX, ..., ZZ` order.
    pub fn all() -> Vec<PauliWord> {
        Pauli::ALL.iter().flat_map(|&a| Pauli::ALL.iter().map(move |&b| PauliWord(a, b))).collect()
    }

    pub fn name(self) -> String {
        format!("{}{}", self.0.letter(), self.1.letter())
    }

    pub fn matrix(self) -> DMatrix<Complex64> {
        self.0.matrix().kronecker(&self.1.matrix())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase", tag = "kind")]
pub enum TomographyMode {
    Analytic,
    Sampled { shots: u64, seed: u64 },
}

/// Pauli-word expectation values, keyed by word name (`"XZ"`).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExpectationTable {
    pub values: BTreeMap<String, f64>,
    pub mode: TomographyMode,
}

impl ExpectationTable {
    pub fn get(&self, word: PauliWord) -> Option<f64> {
        self.values.get(&word.name()).copied()
    }
}

fn real_trace_product(rho: &DensityMatrix, op: &DMatrix<Complex64>) -> f64 {
    (&rho.entries * op).diagonal().iter().map(|z| z.re).sum()
}

/// Expectations of all 16 two-qubit Pauli words.
///
/// In sampled mode each of the nine settings `{X,Y,Z}²` rotates the state into
/// the computational basis (H for X, S† then H for Y) and draws `shots`
/// outcomes with seed `seed + setting_index`. Words containing `I` are averaged
/// over the marginals of the three settings compatible with them.
///
/// # Panics
/// If `rho` is not a two-qubit density matrix.
pub fn pauli_expectations(rho: &DensityMatrix, mode: TomographyMode) -> ExpectationTable {
    assert_eq!(rho.dim(), 4, "tomography supports two qubits");
    let values = match mode {
        TomographyMode::Analytic => {
            PauliWord::all().into_iter().map(|w| (w.name(), real_trace_product(rho, &w.matrix()))).collect()
        }
        TomographyMode::Sampled { shots, seed } => sampled_expectations(rho, shots, seed),
    };
    let mut values: BTreeMap<String, f64> = values;
    values.insert("II".into(), 1.0);
    ExpectationTable { values, mode }
}

const MEASURED: [Pauli; 3] = [Pauli::X, Pauli::Y, Pauli::Z];

fn basis_rotation(pauli: Pauli, qubit: usize) -> Vec<Gate> {
    match pauli {
        Pauli::X => vec![Gate::H(qubit)],
        Pauli::Y => vec![Gate::Sdg(qubit), Gate::H(qubit)],
        _ => Vec::new(),
    }
}

fn sampled_expectations(rho: &DensityMatrix, shots: u64, seed: u64) -> BTreeMap<String, f64> {
    let mut sums: BTreeMap<String, (f64, u32)> = BTreeMap::new();
    for (index, (&p1, &p0)) in MEASURED.iter().flat_map(|a| MEASURED.iter().map(move |b| (a, b))).enumerate() {
        let gates = basis_rotation(p1, 1).into_iter().chain(basis_rotation(p0, 0));
        let u = unitary_of(&Circuit::from_gates(2, gates).expect("two-qubit rotation"));
        let rotated = &u * &rho.entries * u.adjoint();
        let probs: Vec<f64> = rotated.diagonal().iter().map(|z| z.re.max(0.0)).collect();
        let table = sample_distribution(&probs, 2, shots, seed.wrapping_add(index as u64));
        let counts = table.count_vec();
        // (word, parity mask over outcome bits)
        for (word, mask) in [(PauliWord(p1, p0), 0b11), (PauliWord(p1, Pauli::I), 0b10), (PauliWord(Pauli::I, p0), 0b01)] {
            let signed: f64 = counts
                .iter()
                .enumerate()
                .map(|(outcome, &c)| if (outcome & mask).count_ones() % 2 == 0 { c as f64 } else { -(c as f64) })
                .sum();
            let entry = sums.entry(word.name()).or_insert((0.0, 0));
            entry.0 += signed / shots as f64;
            entry.1 += 1;
        }
    }
    sums.into_iter().map(|(k, (s, n))| (k, s / f64::from(n))).collect()
}

/// Linear inversion `ρ = (1/4)·Σ_P ⟨P⟩·P`; missing words count as 0.
pub fn linear_inversion(table: &ExpectationTable) -> DMatrix<Complex64> {
    let mut rho = DMatrix::<Complex64>::zeros(4, 4);
    for word in PauliWord::all() {
        if let Some(v) = table.get(word) {
            rho += word.matrix() * Complex64::new(v / 4.0, 0.0);
        }
    }
    rho
}

/// Nearest physical state by eigenvalue clipping and trace renormalization.
/// Matrices that are already positive semidefinite are returned unchanged.
pub fn project_to_physical(m: &DMatrix<Complex64>) -> DensityMatrix {
    let hermitian = (m + m.adjoint()) * Complex64::new(0.5, 0.0);
    let eig = SymmetricEigen::new(hermitian.clone());
    if eig.eigenvalues.iter().all(|&l| l >= 0.0) {
        let trace: f64 = hermitian.diagonal().iter().map(|z| z.re).sum();
        return DensityMatrix { entries: hermitian / Complex64::new(trace, 0.0) };
    }
    let clipped: Vec<f64> = eig.eigenvalues.iter().map(|&l| l.max(0.0)).collect();
    let total: f64 = clipped.iter().sum();
    let d = m.nrows();
    let mut rho = DMatrix::<Complex64>::zeros(d, d);
    for (k, &l) in clipped.iter().enumerate() {
        if l > 0.0 {
            let v = eig.eigenvectors.column(k);
            rho += v * v.adjoint() * Complex64::new(l / total, 0.0);
        }
    }
    DensityMatrix { entries: rho }
}

/// Linear inversion followed by the physicality projection.
pub fn reconstruct(table: &ExpectationTable) -> DensityMatrix {
    project_to_physical(&linear_inversion(table))
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum FidelityConvention {
    /// `⟨ψ|ρ|ψ⟩`
    #[default]
    Overlap,
    /// `√⟨ψ|ρ|ψ⟩`, the Uhlmann fidelity for a pure target.
    Root,
}

/// Pure-target fidelity `⟨ψ|ρ|ψ⟩`, clamped to `[0, 1]`.
pub fn fidelity(rho: &DensityMatrix, psi: &QuantumState) -> Result<f64> {
    if psi.dim() != rho.dim() {
        return Err(Error::DimensionMismatch { expected: rho.dim(), got: psi.dim() });
    }
    let amps = psi.amplitudes();
    let mut overlap = Complex64::new(0.0, 0.0);
    for i in 0..amps.len() {
        for j in 0..amps.len() {
            overlap += amps[i].conj() * rho.entries[(i, j)] * amps[j];
        }
    }
    Ok(overlap.re.clamp(0.0, 1.0))
}

pub fn fidelity_with(rho: &DensityMatrix, psi: &QuantumState, convention: FidelityConvention) -> Result<f64> {
    let f = fidelity(rho, psi)?;
    Ok(match convention {
        FidelityConvention::Overlap => f,
        FidelityConvention::Root => f.sqrt(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn uniform() -> QuantumState {
        QuantumState::from_real(&[0.5; 4]).unwrap()
    }

    #[test]
    fn outer_products() {
        let rho = density_from_state(&uniform());
        assert!(rho.matrix().iter().all(|z| *z == Complex64::new(0.25, 0.0)));
        assert_abs_diff_eq!(rho.purity(), 1.0, epsilon = 1e-12);
        let rho = density_from_state(&QuantumState::basis(2, 0).unwrap());
        assert_eq!(rho.get(0, 0).re, 1.0);
        assert_eq!(rho.trace(), 1.0);
        let signed = density_from_state(&QuantumState::from_real(&[0.5, -0.5, -0.5, 0.5]).unwrap());
        assert_eq!(signed.get(0, 1).re, -0.25);
        assert_eq!(signed.get(1, 2).re, 0.25);
        assert_eq!(signed.get(0, 3).re, 0.25);
    }

    #[test]
    fn depolarizing_endpoints() {
        let rho = density_from_state(&uniform());
        assert_eq!(apply_depolarizing(&rho, 0.0).unwrap(), rho);
        assert!(apply_depolarizing(&rho, 1.0).unwrap().max_abs_diff(&DensityMatrix::maximally_mixed(4)) < 1e-15);
        assert!(matches!(apply_depolarizing(&rho, 1.5), Err(Error::InvalidProbability(_))));
        assert!(matches!(apply_depolarizing(&rho, -0.1), Err(Error::InvalidProbability(_))));
    }

    #[test]
    fn calibrated_noise_matches_reference_fidelity() {
        let psi = uniform();
        let noisy = apply_depolarizing(&density_from_state(&psi), CALIBRATED_DEPOLARIZING).unwrap();
        let f = fidelity(&noisy, &psi).unwrap();
        assert_abs_diff_eq!(f, 1.0 - 0.75 * CALIBRATED_DEPOLARIZING, epsilon = 1e-14);
        assert!((f - REFERENCE_FIDELITY).abs() <= 1e-4);
        assert_abs_diff_eq!(depolarizing_for_fidelity(REFERENCE_FIDELITY, 4), CALIBRATED_DEPOLARIZING, epsilon = 1e-6);
        let root = fidelity_with(&noisy, &psi, FidelityConvention::Root).unwrap();
        assert_abs_diff_eq!(root, f.sqrt(), epsilon = 1e-15);
    }

    #[test]
    fn analytic_expectations() {
        let mixed = pauli_expectations(&DensityMatrix::maximally_mixed(4), TomographyMode::Analytic);
        for (word, v) in &mixed.values {
            let expected = if word == "II" { 1.0 } else { 0.0 };
            assert_abs_diff_eq!(*v, expected, epsilon = 1e-15);
        }
        let plus = pauli_expectations(&density_from_state(&uniform()), TomographyMode::Analytic);
        for (word, v) in &plus.values {
            let expected = if word.contains('Y') || word.contains('Z') { 0.0 } else { 1.0 };
            assert_abs_diff_eq!(*v, expected, epsilon = 1e-15);
        }
    }

    #[test]
    fn qubit_order_of_words() {
        // |01⟩: qubit 0 is 1, qubit 1 is 0
        let rho = density_from_state(&QuantumState::basis(2, 1).unwrap());
        let t = pauli_expectations(&rho, TomographyMode::Analytic);
        assert_abs_diff_eq!(t.get(PauliWord(Pauli::I, Pauli::Z)).unwrap(), -1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(t.get(PauliWord(Pauli::Z, Pauli::I)).unwrap(), 1.0, epsilon = 1e-15);
        let s = pauli_expectations(&rho, TomographyMode::Sampled { shots: 200, seed: 3 });
        assert_eq!(s.get(PauliWord(Pauli::I, Pauli::Z)).unwrap(), -1.0);
        assert_eq!(s.get(PauliWord(Pauli::Z, Pauli::I)).unwrap(), 1.0);
    }

    #[test]
    fn round_trip_and_trivial_table() {
        let rho = density_from_state(&uniform());
        let back = reconstruct(&pauli_expectations(&rho, TomographyMode::Analytic));
        assert!(back.max_abs_diff(&rho) <= 1e-10);
        let mut values = BTreeMap::new();
        values.insert("II".to_string(), 1.0);
        let t = ExpectationTable { values, mode: TomographyMode::Analytic };
        assert!(reconstruct(&t).max_abs_diff(&DensityMatrix::maximally_mixed(4)) < 1e-15);
    }

    #[test]
    fn projection_clips_negative_eigenvalues() {
        let mut m = DMatrix::<Complex64>::zeros(4, 4);
        m[(0, 0)] = Complex64::new(1.2, 0.0);
        m[(1, 1)] = Complex64::new(-0.2, 0.0);
        let rho = project_to_physical(&m);
        assert!(rho.eigenvalues().iter().all(|&l| l >= -1e-12));
        assert_abs_diff_eq!(rho.trace(), 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(rho.get(0, 0).re, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn fidelity_examples() {
        let psi = uniform();
        assert_abs_diff_eq!(fidelity(&density_from_state(&psi), &psi).unwrap(), 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(fidelity(&DensityMatrix::maximally_mixed(4), &psi).unwrap(), 0.25, epsilon = 1e-15);
        let one_qubit = QuantumState::basis(1, 0).unwrap();
        assert!(matches!(fidelity(&DensityMatrix::maximally_mixed(4), &one_qubit), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn serialization() {
        let rho = density_from_state(&QuantumState::basis(2, 0).unwrap());
        let json = rho.to_json();
        assert_eq!(json["dim"], 4);
        assert_eq!(json["re"][0][0], 1.0);
        assert_eq!(json["im"][3][3], 0.0);
        let csv = rho.to_csv();
        assert_eq!(csv.lines().count(), 17);
        assert_eq!(csv.lines().nth(1), Some("0,0,1,0"));
    }

    #[test]
    fn density_matrix_validation() {
        let bad = DMatrix::<Complex64>::identity(2, 2);
        assert!(DensityMatrix::new(bad).is_err());
        let ok = DMatrix::<Complex64>::identity(2, 2) * Complex64::new(0.5, 0.0);
        assert!(DensityMatrix::new(ok).is_ok());
    }
}
