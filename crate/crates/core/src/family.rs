//! The 48 coefficient matrices with entries ±1/2.
//!
//! The eight vectors in {±1/2}⁴ whose first entry is +1/2 split into two
//! classes of four mutually orthogonal columns. Each class, under the 24
//! column orderings, gives 24 matrices; labels such as `A_1342` name the class
//! and the column order.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linsys::{RealMatrix, RealVector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ColumnClass {
    A,
    B,
}

impl ColumnClass {
    pub const ALL: [ColumnClass; 2] = [ColumnClass::A, ColumnClass::B];
}

impl fmt::Display for ColumnClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ColumnClass::A => "A",
            ColumnClass::B => "B",
        })
    }
}

impl FromStr for ColumnClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(ColumnClass::A),
            "B" | "b" => Ok(ColumnClass::B),
            other => Err(Error::InvalidLabel(format!("unknown class {other:?}"))),
        }
    }
}

// Sign patterns of the base columns, scaled by 2.
const A_COLUMNS: [[f64; 4]; 4] = [[1.0, 1.0, 1.0, 1.0], [1.0, -1.0, -1.0, 1.0], [1.0, -1.0, 1.0, -1.0], [1.0, 1.0, -1.0, -1.0]];
const B_COLUMNS: [[f64; 4]; 4] = [[1.0, 1.0, 1.0, -1.0], [1.0, 1.0, -1.0, 1.0], [1.0, -1.0, 1.0, 1.0], [1.0, -1.0, -1.0, -1.0]];

/// The four base columns of a class, in label order 1..4.
pub fn base_columns(class: ColumnClass) -> [RealVector; 4] {
    let signs = match class {
        ColumnClass::A => &A_COLUMNS,
        ColumnClass::B => &B_COLUMNS,
    };
    signs.map(|col| RealVector::new(col.iter().map(|s| s * 0.5).collect()).expect("finite"))
}

/// A class plus a column ordering, written `A_1234`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FamilyLabel {
    pub class: ColumnClass,
    /// 1-based column indices, a permutation of (1, 2, 3, 4).
    perm: [u8; 4],
}

impl FamilyLabel {
    pub fn new(class: ColumnClass, perm: [u8; 4]) -> Result<Self> {
        let mut sorted = perm;
        sorted.sort_unstable();
        if sorted != [1, 2, 3, 4] {
            return Err(Error::InvalidLabel(format!("{perm:?} is not a permutation of 1..4")));
        }
        Ok(Self { class, perm })
    }

    pub fn perm(&self) -> [u8; 4] {
        self.perm
    }

    /// Subset name `A1`..`B4`: class plus the fixed first column.
    pub fn subset(&self) -> String {
        format!("{}{}", self.class, self.perm[0])
    }

    /// All 24 labels of a class in lexicographic permutation order.
    pub fn all_for(class: ColumnClass) -> Vec<FamilyLabel> {
        permutations_of_1234().into_iter().map(|perm| FamilyLabel { class, perm }).collect()
    }

    /// All 48 labels, A class first.
    pub fn all() -> Vec<FamilyLabel> {
        ColumnClass::ALL.iter().flat_map(|&c| Self::all_for(c)).collect()
    }
}

impl fmt::Display for FamilyLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.perm;
        write!(f, "{}_{a}{b}{c}{d}", self.class)
    }
}

impl FromStr for FamilyLabel {
    type Err = Error;

    /// Accepts `A_1234`, `A1234` and lowercase class letters.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidLabel(format!("{s:?} (expected e.g. A_1234 or B_2413)"));
        let mut chars = s.trim().chars();
        let class = chars.next().ok_or_else(bad)?.to_string().parse::<ColumnClass>().map_err(|_| bad())?;
        let digits: String = chars.as_str().trim_start_matches('_').to_string();
        if digits.len() != 4 {
            return Err(bad());
        }
        let mut perm = [0u8; 4];
        for (slot, ch) in perm.iter_mut().zip(digits.chars()) {
            *slot = ch.to_digit(10).ok_or_else(bad)? as u8;
        }
        FamilyLabel::new(class, perm).map_err(|_| bad())
    }
}

impl Serialize for FamilyLabel {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

fn permutations_of_1234() -> Vec<[u8; 4]> {
    let mut out = Vec::with_capacity(24);
    for a in 1..=4u8 {
        for b in (1..=4u8).filter(|&b| b != a) {
            for c in (1..=4u8).filter(|&c| c != a && c != b) {
                let d = 10 - a - b - c;
                out.push([a, b, c, d]);
            }
        }
    }
    out
}

/// Places the class columns in the label's order.
pub fn matrix_for(label: FamilyLabel) -> RealMatrix {
    let columns = base_columns(label.class);
    let ordered: Vec<RealVector> = label.perm.iter().map(|&p| columns[usize::from(p) - 1].clone()).collect();
    RealMatrix::from_columns(&ordered).expect("4 columns of length 4")
}

/// One member of the family: matrix, right-hand side and rendered equations.
#[derive(Debug, Clone, Serialize)]
pub struct LinearSystemSpec {
    pub label: FamilyLabel,
    pub subset: String,
    pub matrix: RealMatrix,
    pub y: RealVector,
    pub equations: Vec<String>,
}

pub fn enumerate_family() -> Vec<LinearSystemSpec> {
    FamilyLabel::all()
        .into_iter()
        .map(|label| {
            let matrix = matrix_for(label);
            let y = RealVector::basis(4, 0);
            let equations = render_equations(&matrix, &y);
            LinearSystemSpec { label, subset: label.subset(), matrix, y, equations }
        })
        .collect()
}

/// Equations of `label` with right-hand side `e₁`.
pub fn equations_for(label: FamilyLabel) -> Vec<String> {
    render_equations(&matrix_for(label), &RealVector::basis(4, 0))
}

/// Renders the rows of `2·A·x = 2·y` as `x1 - x2 + ... = c`.
pub fn render_equations(a: &RealMatrix, y: &RealVector) -> Vec<String> {
    (0..a.dim())
        .map(|i| {
            let mut line = String::new();
            for j in 0..a.dim() {
                let coeff = 2.0 * a.get(i, j);
                if coeff == 0.0 {
                    continue;
                }
                let magnitude = coeff.abs();
                let term = if magnitude == 1.0 { format!("x{}", j + 1) } else { format!("{}*x{}", fmt_number(magnitude), j + 1) };
                match (line.is_empty(), coeff < 0.0) {
                    (true, false) => line.push_str(&term),
                    (true, true) => line.push_str(&format!("-{term}")),
                    (false, false) => line.push_str(&format!(" + {term}")),
                    (false, true) => line.push_str(&format!(" - {term}")),
                }
            }
            if line.is_empty() {
                line.push('0');
            }
            format!("{line} = {}", fmt_number(2.0 * y[i]))
        })
        .collect()
}

fn fmt_number(v: f64) -> String {
    // avoid "-0"
    let v = if v == 0.0 { 0.0 } else { v };
    format!("{v}")
}
