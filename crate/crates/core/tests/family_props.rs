use std::collections::HashSet;
use std::time::Instant;

use qlinsolve::family::{base_columns, enumerate_family, matrix_for, ColumnClass, FamilyLabel};
use qlinsolve::linsys::{solve, RealVector};

fn key(entries: &[f64]) -> Vec<i64> {
    entries.iter().map(|v| (v * 2.0).round() as i64).collect()
}

#[test]
fn forty_eight_distinct_members() {
    let start = Instant::now();
    let family = enumerate_family();
    assert!(start.elapsed().as_secs_f64() < 1.0);
    assert_eq!(family.len(), 48);
    let distinct: HashSet<Vec<i64>> = family.iter().map(|s| key(s.matrix.entries())).collect();
    assert_eq!(distinct.len(), 48);
    for spec in &family {
        assert_eq!(spec.y, RealVector::basis(4, 0));
        assert_eq!(spec.equations.len(), 4);
    }
}

#[test]
fn eight_subsets_of_six() {
    let family = enumerate_family();
    for subset in ["A1", "A2", "A3", "A4", "B1", "B2", "B3", "B4"] {
        let members: Vec<_> = family.iter().filter(|s| s.subset == subset).collect();
        assert_eq!(members.len(), 6, "{subset}");
        assert!(members.iter().all(|s| s.label.perm()[0] == subset.as_bytes()[1] - b'0'));
    }
}

#[test]
fn classes_generate_disjoint_sets() {
    let a: HashSet<_> = FamilyLabel::all_for(ColumnClass::A).into_iter().map(|l| key(matrix_for(l).entries())).collect();
    let b: HashSet<_> = FamilyLabel::all_for(ColumnClass::B).into_iter().map(|l| key(matrix_for(l).entries())).collect();
    assert_eq!(a.len(), 24);
    assert_eq!(b.len(), 24);
    assert!(a.is_disjoint(&b));
}

#[test]
fn b_is_not_a_signed_column_permutation_of_a() {
    let b = matrix_for("B_1234".parse().unwrap());
    let b_key = key(b.entries());
    for label in FamilyLabel::all_for(ColumnClass::A) {
        let a = matrix_for(label);
        for signs in 0u8..16 {
            let mut entries = a.entries().to_vec();
            for (i, v) in entries.iter_mut().enumerate() {
                if signs >> (i % 4) & 1 == 1 {
                    *v = -*v;
                }
            }
            assert_ne!(key(&entries), b_key, "{label} signs {signs:04b}");
        }
    }
    let phi = base_columns(ColumnClass::B);
    let psi = base_columns(ColumnClass::A);
    for p in &phi {
        for q in &psi {
            assert!(p.dot(q).abs() < 1.0);
        }
    }
}

#[test]
fn solution_is_first_row() {
    for label in FamilyLabel::all() {
        let m = matrix_for(label);
        assert_eq!(solve(&m, &RealVector::basis(4, 0)).unwrap(), m.row(0), "{label}");
    }
}
