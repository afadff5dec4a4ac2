use std::collections::BTreeMap;

use rand::distr::weighted::WeightedIndex;
use rand::distr::Distribution;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use statrs::distribution::{ChiSquared, ContinuousCDF};

use super::state::{probabilities, QuantumState};

/// Default shot count. The recorded hardware percentages are multiples of 1/1024.
pub const DEFAULT_SHOTS: u64 = 1024;

/// Outcome counts from repeated computational-basis measurement.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShotTable {
    pub shots: u64,
    pub seed: u64,
    pub n_qubits: usize,
    /// Every outcome `0..2^n`, keyed by its bit string (qubit `n-1` leftmost).
    pub counts: BTreeMap<String, u64>,
}

impl ShotTable {
    pub fn count(&self, outcome: usize) -> u64 {
        self.counts.get(&outcome_label(outcome, self.n_qubits)).copied().unwrap_or(0)
    }

    /// Counts in basis-index order.
    pub fn count_vec(&self) -> Vec<u64> {
        (0..1usize << self.n_qubits).map(|i| self.count(i)).collect()
    }

    pub fn frequencies(&self) -> Vec<f64> {
        self.count_vec().into_iter().map(|c| c as f64 / self.shots as f64).collect()
    }

    pub fn frequency_map(&self) -> BTreeMap<String, f64> {
        self.counts.iter().map(|(k, &c)| (k.clone(), c as f64 / self.shots as f64)).collect()
    }
}

/// Bit string of `index`, `width` characters, most-significant qubit first.
pub fn outcome_label(index: usize, width: usize) -> String {
    format!("{index:0width$b}")
}

/// Draws `shots` samples from `probabilities(state)` with a ChaCha8 stream seeded by `seed`.
pub fn sample(state: &QuantumState, shots: u64, seed: u64) -> ShotTable {
    sample_distribution(&probabilities(state), state.n_qubits(), shots, seed)
}

/// Draws `shots` samples from an explicit outcome distribution over `2^n_qubits` outcomes.
///
/// # Panics
/// If `probs` has the wrong length, contains negative or non-finite weights, or sums to zero.
pub fn sample_distribution(probs: &[f64], n_qubits: usize, shots: u64, seed: u64) -> ShotTable {
    assert_eq!(probs.len(), 1usize << n_qubits, "distribution length must be 2^n");
    let dist = WeightedIndex::new(probs).expect("valid probability weights");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut raw = vec![0u64; probs.len()];
    for _ in 0..shots {
        raw[dist.sample(&mut rng)] += 1;
    }
    let counts = raw.into_iter().enumerate().map(|(i, c)| (outcome_label(i, n_qubits), c)).collect();
    ShotTable { shots, seed, n_qubits, counts }
}

/// Pearson chi-square statistic of `table` against `expected` probabilities and its p-value.
/// Outcomes with zero expected probability are skipped.
pub fn chi_square(table: &ShotTable, expected: &[f64]) -> (f64, f64) {
    let shots = table.shots as f64;
    let mut statistic = 0.0;
    let mut cells = 0usize;
    for (observed, &p) in table.count_vec().into_iter().zip(expected) {
        if p > 0.0 {
            let e = p * shots;
            statistic += (observed as f64 - e).powi(2) / e;
            cells += 1;
        }
    }
    if cells < 2 {
        return (statistic, 1.0);
    }
    let dist = ChiSquared::new((cells - 1) as f64).expect("positive degrees of freedom");
    (statistic, 1.0 - dist.cdf(statistic))
}
