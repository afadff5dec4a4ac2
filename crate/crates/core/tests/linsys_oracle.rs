use proptest::prelude::*;
use qlinsolve::family::{base_columns, matrix_for, ColumnClass, FamilyLabel};
use qlinsolve::linsys::{check_orthonormal_columns, inverse_operator, residual, solve, RealMatrix, RealVector};

/// Gaussian elimination with partial pivoting, independent of the transpose route.
fn gauss_solve(a: &RealMatrix, y: &[f64]) -> Vec<f64> {
    let n = a.dim();
    let mut m: Vec<Vec<f64>> = (0..n).map(|i| (0..n).map(|j| a.get(i, j)).chain([y[i]]).collect()).collect();
    for col in 0..n {
        let pivot = (col..n).max_by(|&r, &s| m[r][col].abs().total_cmp(&m[s][col].abs())).unwrap();
        m.swap(col, pivot);
        for r in col + 1..n {
            let f = m[r][col] / m[col][col];
            let pivot = m[col].clone();
            for (v, p) in m[r].iter_mut().zip(&pivot).skip(col) {
                *v -= f * p;
            }
        }
    }
    let mut x = vec![0.0; n];
    for r in (0..n).rev() {
        let tail: f64 = (r + 1..n).map(|c| m[r][c] * x[c]).sum();
        x[r] = (m[r][n] - tail) / m[r][r];
    }
    x
}

#[test]
fn solve_agrees_with_gaussian_elimination_on_all_48() {
    let e1 = RealVector::basis(4, 0);
    for label in FamilyLabel::all() {
        let a = matrix_for(label);
        let x = solve(&a, &e1).unwrap();
        let oracle = gauss_solve(&a, e1.as_slice());
        for (got, want) in x.iter().zip(&oracle) {
            assert!((got - want).abs() <= 1e-10, "{label}: {got} vs {want}");
        }
    }
}

#[test]
fn worked_example_by_elimination() {
    let a = matrix_for("A_1234".parse().unwrap());
    assert_eq!(gauss_solve(&a, &[1.0, 0.0, 0.0, 0.0]), vec![0.5; 4]);
    let x = solve(&a, &RealVector::basis(4, 1)).unwrap();
    assert_eq!(x, a.row(1));
}

#[test]
fn inverse_operator_of_b1234() {
    let b = matrix_for("B_1234".parse().unwrap());
    let u = inverse_operator(&b).unwrap();
    assert_eq!(u, b.transpose());
    // explicit product
    for i in 0..4 {
        for j in 0..4 {
            let entry: f64 = (0..4).map(|k| u.get(i, k) * b.get(k, j)).sum();
            assert_eq!(entry, if i == j { 1.0 } else { 0.0 });
        }
    }
}

#[test]
fn transpose_is_an_involution_on_the_family() {
    for label in FamilyLabel::all() {
        let a = matrix_for(label);
        assert_eq!(inverse_operator(&inverse_operator(&a).unwrap()).unwrap(), a);
    }
}

#[test]
fn permutation_covariance() {
    let y = RealVector::basis(4, 0);
    for class in ColumnClass::ALL {
        let base = solve(&matrix_for(FamilyLabel::new(class, [1, 2, 3, 4]).unwrap()), &y).unwrap();
        for label in FamilyLabel::all_for(class) {
            let x = solve(&matrix_for(label), &y).unwrap();
            for (slot, &p) in label.perm().iter().enumerate() {
                assert_eq!(x[slot], base[usize::from(p) - 1], "{label}");
            }
        }
    }
}

#[test]
fn family_columns_are_orthonormal() {
    for class in ColumnClass::ALL {
        let cols = base_columns(class);
        for (i, a) in cols.iter().enumerate() {
            for (j, b) in cols.iter().enumerate() {
                assert_eq!(a.dot(b), if i == j { 1.0 } else { 0.0 });
            }
        }
    }
    for label in FamilyLabel::all() {
        assert!(check_orthonormal_columns(&matrix_for(label), 1e-12));
    }
}

fn unit_vector(dim: usize) -> impl Strategy<Value = RealVector> {
    prop::collection::vec(-1.0f64..1.0, dim)
        .prop_filter("non-degenerate", |v| v.iter().map(|x| x * x).sum::<f64>() > 1e-3)
        .prop_map(|v| {
            let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            RealVector::new(v.into_iter().map(|x| x / n).collect()).unwrap()
        })
}

proptest! {
    #[test]
    fn residual_of_solution_is_tiny(idx in 0usize..48, y in unit_vector(4)) {
        let a = matrix_for(FamilyLabel::all()[idx]);
        let x = solve(&a, &y).unwrap();
        prop_assert!(residual(&a, &x, &y).unwrap() <= 1e-10);
    }

    #[test]
    fn general_orthogonal_matrices(angle in -3.2f64..3.2, y in unit_vector(2)) {
        let (c, s) = (angle.cos(), angle.sin());
        let a = RealMatrix::new(2, vec![c, -s, s, c]).unwrap();
        let x = solve(&a, &y).unwrap();
        prop_assert!(residual(&a, &x, &y).unwrap() <= 1e-10);
    }
}
