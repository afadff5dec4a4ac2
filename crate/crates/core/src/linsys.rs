//! Real linear systems `A·x = y` with orthonormal columns.
//!
//! For such systems the inverse operator is the transpose, so `x = Aᵀ·y`
//! is exact up to floating-point rounding.

use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Tolerance used for every exactness check on matrices and vectors.
pub const EXACT_TOL: f64 = 1e-10;

/// Square real matrix stored row-major.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RealMatrix {
    dim: usize,
    entries: Vec<f64>,
}

/// Dense real vector.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RealVector(Vec<f64>);

impl RealMatrix {
    pub fn new(dim: usize, entries: Vec<f64>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidMatrix("dimension must be at least 1".into()));
        }
        if entries.len() != dim * dim {
            return Err(Error::DimensionMismatch { expected: dim * dim, got: entries.len() });
        }
        if entries.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidMatrix("entries must be finite".into()));
        }
        Ok(Self { dim, entries })
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let dim = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != dim) {
            return Err(Error::DimensionMismatch { expected: dim, got: bad.len() });
        }
        Self::new(dim, rows.concat())
    }

    /// Builds a matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(columns: &[RealVector]) -> Result<Self> {
        let dim = columns.len();
        let mut entries = vec![0.0; dim * dim];
        for (j, col) in columns.iter().enumerate() {
            if col.dim() != dim {
                return Err(Error::DimensionMismatch { expected: dim, got: col.dim() });
            }
            for (i, v) in col.iter().enumerate() {
                entries[i * dim + j] = v;
            }
        }
        Self::new(dim, entries)
    }

    pub fn identity(dim: usize) -> Self {
        let mut entries = vec![0.0; dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = 1.0;
        }
        Self { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.entries[row * self.dim + col]
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> RealVector {
        RealVector(self.entries[i * self.dim..(i + 1) * self.dim].to_vec())
    }

    pub fn column(&self, j: usize) -> RealVector {
        RealVector((0..self.dim).map(|i| self.get(i, j)).collect())
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        self.entries.chunks(self.dim).map(<[f64]>::to_vec).collect()
    }

    pub fn transpose(&self) -> Self {
        let n = self.dim;
        let mut entries = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                entries[j * n + i] = self.entries[i * n + j];
            }
        }
        Self { dim: n, entries }
    }

    pub fn matmul(&self, other: &RealMatrix) -> Result<RealMatrix> {
        let n = self.dim;
        if other.dim != n {
            return Err(Error::DimensionMismatch { expected: n, got: other.dim });
        }
        let mut entries = vec![0.0; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.entries[i * n + k];
                for j in 0..n {
                    entries[i * n + j] += a * other.entries[k * n + j];
                }
            }
        }
        Ok(RealMatrix { dim: n, entries })
    }

    pub fn mul_vec(&self, v: &RealVector) -> Result<RealVector> {
        if v.dim() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: v.dim() });
        }
        Ok(RealVector(
            self.entries.chunks(self.dim).map(|row| row.iter().zip(v.iter()).map(|(a, b)| a * b).sum()).collect(),
        ))
    }

    /// Largest absolute entry of `self - other`.
    pub fn max_abs_diff(&self, other: &RealMatrix) -> f64 {
        self.entries.iter().zip(&other.entries).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max)
    }

    /// Reads a square matrix from CSV text, one row per line.
    pub fn from_csv_str(text: &str) -> Result<Self> {
        Self::from_rows(&parse_csv_rows(text)?)
    }

    pub fn from_csv_path(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        Self::from_csv_str(&text)
    }
}

impl fmt::Display for RealMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.entries.chunks(self.dim) {
            let cells: Vec<String> = row.iter().map(|v| format!("{v:>7.4}")).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

impl RealVector {
    pub fn new(entries: Vec<f64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidMatrix("vector must be non-empty".into()));
        }
        if entries.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidMatrix("entries must be finite".into()));
        }
        Ok(Self(entries))
    }

    /// The `index`-th standard basis vector of length `dim`.
    pub fn basis(dim: usize, index: usize) -> Self {
        let mut v = vec![0.0; dim];
        v[index] = 1.0;
        Self(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = f64> + '_ {
        self.0.iter().copied()
    }

    pub fn dot(&self, other: &RealVector) -> f64 {
        self.iter().zip(other.iter()).map(|(a, b)| a * b).sum()
    }

    pub fn norm(&self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn max_abs_diff(&self, other: &RealVector) -> f64 {
        self.iter().zip(other.iter()).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max)
    }

    /// Parses a single CSV line (or a one-value-per-line column) into a vector.
    pub fn from_csv_str(text: &str) -> Result<Self> {
        Self::new(parse_csv_rows(text)?.concat())
    }
}

impl std::ops::Index<usize> for RealVector {
    type Output = f64;

    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

fn parse_csv_rows(text: &str) -> Result<Vec<Vec<f64>>> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_reader(text.as_bytes());
    let mut rows = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| Error::Parse(e.to_string()))?;
        if record.iter().all(str::is_empty) {
            continue;
        }
        let row = record
            .iter()
            .map(|cell| cell.parse::<f64>().map_err(|_| Error::Parse(format!("not a number: {cell:?}"))))
            .collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(Error::Parse("no numeric rows".into()));
    }
    Ok(rows)
}

/// True iff every column has unit Euclidean norm within `tol`.
pub fn check_column_normalization(a: &RealMatrix, tol: f64) -> bool {
    (0..a.dim()).all(|j| {
        let col = a.column(j);
        (col.dot(&col) - 1.0).abs() <= tol
    })
}

/// Max-norm of `AᵀA - I`.
pub fn orthonormality_deviation(a: &RealMatrix) -> f64 {
    let n = a.dim();
    let mut worst: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            let inner: f64 = (0..n).map(|k| a.get(k, i) * a.get(k, j)).sum();
            let expected = if i == j { 1.0 } else { 0.0 };
            worst = worst.max((inner - expected).abs());
        }
    }
    worst
}

pub fn check_orthonormal_columns(a: &RealMatrix, tol: f64) -> bool {
    orthonormality_deviation(a) <= tol
}

/// The operator `U` with `U·A = I`; for orthonormal columns this is `Aᵀ`.
pub fn inverse_operator(a: &RealMatrix) -> Result<RealMatrix> {
    let deviation = orthonormality_deviation(a);
    if deviation > EXACT_TOL {
        return Err(Error::NotOrthonormal { deviation });
    }
    Ok(a.transpose())
}

/// Solves `A·x = y` for orthonormal `A` and unit-norm `y`.
pub fn solve(a: &RealMatrix, y: &RealVector) -> Result<RealVector> {
    if y.dim() != a.dim() {
        return Err(Error::DimensionMismatch { expected: a.dim(), got: y.dim() });
    }
    let u = inverse_operator(a)?;
    let norm = y.norm();
    if (norm - 1.0).abs() > EXACT_TOL {
        return Err(Error::NotNormalized { norm });
    }
    u.mul_vec(y)
}

/// Max-norm of `A·x - y`.
pub fn residual(a: &RealMatrix, x: &RealVector, y: &RealVector) -> Result<f64> {
    if y.dim() != a.dim() {
        return Err(Error::DimensionMismatch { expected: a.dim(), got: y.dim() });
    }
    Ok(a.mul_vec(x)?.max_abs_diff(y))
}
