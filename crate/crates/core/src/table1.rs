//! The eight benchmark circuits and their recorded hardware outcome percentages.

use crate::error::Result;
use crate::family::FamilyLabel;
use crate::sim::{chi_square, ShotTable};
use crate::synth::DEFAULT_MAX_GATES;

/// `(label, percentages for outcomes 0000, 0001, 0010, 0011)` as reported.
/// Display-only; simulated counts are never compared against these.
pub const REPORTED: [(&str, [f64; 4]); 8] = [
    ("A_1324", [21.875, 24.805, 27.051, 26.27]),
    ("A_2413", [24.023, 25.781, 23.926, 26.27]),
    ("A_3124", [24.414, 24.609, 25.684, 25.293]),
    ("A_4213", [24.316, 24.121, 26.563, 25.0]),
    ("B_1342", [24.707, 24.832, 24.219, 23.242]),
    ("B_2413", [24.902, 26.66, 23.047, 25.391]),
    ("B_3142", [24.805, 25.977, 24.707, 24.512]),
    ("B_4213", [26.758, 25.098, 25.195, 22.949]),
];

pub fn labels() -> Vec<FamilyLabel> {
    REPORTED.iter().map(|(l, _)| l.parse().expect("valid label")).collect()
}

/// Left-pads a 2-bit outcome label to the 4-bit form used by a 5-qubit device (`"01"` → `"0001"`).
pub fn padded_outcome(label: &str) -> String {
    format!("{label:0>4}")
}

/// One simulated row next to the reported percentages.
#[derive(Debug, Clone)]
pub struct Table1Row {
    pub label: FamilyLabel,
    pub reported_percent: [f64; 4],
    pub table: ShotTable,
    /// Chi-square p-value against the uniform distribution.
    pub p_value: f64,
}

/// Samples the eight circuits from `|00⟩`; row `i` uses seed `seed + i` so the
/// rows, which share the same ideal distribution, get independent streams.
pub fn simulate(shots: u64, seed: u64) -> Result<Vec<Table1Row>> {
    REPORTED
        .iter()
        .zip(labels())
        .enumerate()
        .map(|(row, ((_, reported), label))| {
            let table = crate::sample_label(label, 0, shots, seed.wrapping_add(row as u64), 0.0, DEFAULT_MAX_GATES)?;
            let (_, p_value) = chi_square(&table, &[0.25; 4]);
            Ok(Table1Row { label, reported_percent: *reported, table, p_value })
        })
        .collect()
}
