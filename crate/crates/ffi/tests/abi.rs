use std::ffi::{CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use qlinsolve_ffi::*;

fn last_error() -> String {
    let p = qls_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

fn label_matrix(label: &str) -> *mut QlsMatrix {
    let c = CString::new(label).unwrap();
    let mut m = ptr::null_mut();
    assert_eq!(unsafe { qls_matrix_from_label(c.as_ptr(), &mut m) }, QlsStatus::Ok);
    m
}

#[test]
fn family_labels_enumerate() {
    assert_eq!(qls_family_count(), 48);
    let mut buf = [0 as std::ffi::c_char; 16];
    assert_eq!(unsafe { qls_family_label(0, buf.as_mut_ptr(), buf.len()) }, QlsStatus::Ok);
    assert_eq!(unsafe { CStr::from_ptr(buf.as_ptr()) }.to_str().unwrap(), "A_1234");
    assert_eq!(unsafe { qls_family_label(47, buf.as_mut_ptr(), buf.len()) }, QlsStatus::Ok);
    assert_eq!(unsafe { CStr::from_ptr(buf.as_ptr()) }.to_str().unwrap(), "B_4321");
    assert_eq!(unsafe { qls_family_label(48, buf.as_mut_ptr(), buf.len()) }, QlsStatus::InvalidArgument);
    assert_eq!(unsafe { qls_family_label(0, buf.as_mut_ptr(), 3) }, QlsStatus::BufferTooSmall);
}

#[test]
fn solve_roundtrip_through_handles() {
    let m = label_matrix("A_1234");
    assert_eq!(unsafe { qls_matrix_dim(m) }, 4);
    let mut entries = [0.0; 16];
    assert_eq!(unsafe { qls_matrix_entries(m, entries.as_mut_ptr(), 16) }, QlsStatus::Ok);
    assert!(entries.iter().all(|v| (v.abs() - 0.5).abs() < 1e-15));

    let y = [1.0, 0.0, 0.0, 0.0];
    let mut x = [0.0; 4];
    assert_eq!(unsafe { qls_solve(m, y.as_ptr(), 4, x.as_mut_ptr(), 4) }, QlsStatus::Ok);
    for i in 0..4 {
        let row: f64 = (0..4).map(|j| entries[i * 4 + j] * x[j]).sum();
        assert!((row - y[i]).abs() < 1e-12);
    }

    let bad_y = [1.0, 1.0, 0.0, 0.0];
    assert_eq!(unsafe { qls_solve(m, bad_y.as_ptr(), 4, x.as_mut_ptr(), 4) }, QlsStatus::NotNormalized);
    assert!(!last_error().is_empty());
    assert_eq!(unsafe { qls_solve(m, y.as_ptr(), 3, x.as_mut_ptr(), 4) }, QlsStatus::DimensionMismatch);
    unsafe { qls_matrix_free(m) };
}

#[test]
fn non_orthonormal_matrix_rejected() {
    let entries = [1.0, 1.0, 0.0, 1.0];
    let mut m = ptr::null_mut();
    assert_eq!(unsafe { qls_matrix_new(2, entries.as_ptr(), 4, &mut m) }, QlsStatus::Ok);
    let mut u = ptr::null_mut();
    assert_eq!(unsafe { qls_inverse_operator(m, &mut u) }, QlsStatus::NotOrthonormal);
    assert!(u.is_null());
    unsafe { qls_matrix_free(m) };
    assert_eq!(unsafe { qls_matrix_new(2, entries.as_ptr(), 3, &mut m) }, QlsStatus::DimensionMismatch);
}

#[test]
fn null_pointers_are_reported() {
    let mut m = ptr::null_mut();
    assert_eq!(unsafe { qls_matrix_from_label(ptr::null(), &mut m) }, QlsStatus::NullPointer);
    assert_eq!(unsafe { qls_matrix_dim(ptr::null()) }, 0);
    assert_eq!(unsafe { qls_circuit_gate_count(ptr::null()) }, 0);
    unsafe { qls_matrix_free(ptr::null_mut()) };
    unsafe { qls_circuit_free(ptr::null_mut()) };
    unsafe { qls_string_free(ptr::null_mut()) };
    let bad = CString::new("C_1234").unwrap();
    assert_eq!(unsafe { qls_matrix_from_label(bad.as_ptr(), &mut m) }, QlsStatus::InvalidLabel);
}

#[test]
fn synthesis_run_and_qasm() {
    let label = CString::new("A_1342").unwrap();
    let mut c = ptr::null_mut();
    assert_eq!(unsafe { qls_synthesize_label(label.as_ptr(), 8, &mut c) }, QlsStatus::Ok);
    assert_eq!(unsafe { qls_circuit_gate_count(c) }, 2);
    assert_eq!(unsafe { qls_circuit_matched_sign(c) }.abs(), 1);

    let mut text = ptr::null_mut();
    assert_eq!(unsafe { qls_circuit_to_qasm(c, &mut text) }, QlsStatus::Ok);
    let qasm = unsafe { CStr::from_ptr(text) }.to_str().unwrap().to_owned();
    unsafe { qls_string_free(text) };
    assert!(qasm.starts_with("OPENQASM 2.0;"));
    assert!(qasm.contains("h q[0];") && qasm.contains("h q[1];"));

    let (mut re, mut im) = ([0.0; 4], [0.0; 4]);
    assert_eq!(unsafe { qls_circuit_run(c, 0, re.as_mut_ptr(), im.as_mut_ptr(), 4) }, QlsStatus::Ok);
    let norm: f64 = re.iter().zip(&im).map(|(a, b)| a * a + b * b).sum();
    assert!((norm - 1.0).abs() < 1e-12);
    assert!(re.iter().all(|v| (v.abs() - 0.5).abs() < 1e-12));
    assert_eq!(unsafe { qls_circuit_run(c, 0, re.as_mut_ptr(), im.as_mut_ptr(), 2) }, QlsStatus::BufferTooSmall);

    let mut counts = [0u64; 4];
    assert_eq!(unsafe { qls_circuit_sample(c, 0, 1000, 7, 0.0, counts.as_mut_ptr(), 4) }, QlsStatus::Ok);
    assert_eq!(counts.iter().sum::<u64>(), 1000);
    let mut again = [0u64; 4];
    assert_eq!(unsafe { qls_circuit_sample(c, 0, 1000, 7, 0.0, again.as_mut_ptr(), 4) }, QlsStatus::Ok);
    assert_eq!(counts, again);
    assert_eq!(unsafe { qls_circuit_sample(c, 0, 0, 7, 0.0, again.as_mut_ptr(), 4) }, QlsStatus::InvalidArgument);
    unsafe { qls_circuit_free(c) };
}

#[test]
fn synthesize_from_matrix_handle() {
    let m = label_matrix("B_2143");
    let mut u = ptr::null_mut();
    assert_eq!(unsafe { qls_inverse_operator(m, &mut u) }, QlsStatus::Ok);
    let mut c = ptr::null_mut();
    assert_eq!(unsafe { qls_synthesize(u, 8, &mut c) }, QlsStatus::Ok);
    assert!(unsafe { qls_circuit_gate_count(c) } <= 8);
    let mut none = ptr::null_mut();
    assert_eq!(unsafe { qls_synthesize(u, 0, &mut none) }, QlsStatus::NotFound);
    unsafe {
        qls_circuit_free(c);
        qls_matrix_free(u);
        qls_matrix_free(m);
    }
}

#[test]
fn tomography_and_grover() {
    let label = CString::new("A_1234").unwrap();
    let mut f = 0.0;
    assert_eq!(unsafe { qls_tomography_fidelity(label.as_ptr(), 0, 0.0, true, 0, 0, &mut f) }, QlsStatus::Ok);
    assert!((f - 1.0).abs() < 1e-10);
    assert_eq!(unsafe { qls_tomography_fidelity(label.as_ptr(), 0, 0.016267, true, 0, 0, &mut f) }, QlsStatus::Ok);
    assert!((f - 0.9878).abs() < 1e-3);
    assert_eq!(unsafe { qls_tomography_fidelity(label.as_ptr(), 0, 0.0, false, 4096, 3, &mut f) }, QlsStatus::Ok);
    assert!(f > 0.95);
    assert_eq!(unsafe { qls_tomography_fidelity(label.as_ptr(), 0, 2.0, true, 0, 0, &mut f) }, QlsStatus::InvalidArgument);

    let mut p = 0.0;
    assert_eq!(unsafe { qls_grover_success_probability(4, 1, 1, &mut p) }, QlsStatus::Ok);
    assert!((p - 1.0).abs() < 1e-12);
    assert_eq!(unsafe { qls_grover_success_probability(4, 5, 1, &mut p) }, QlsStatus::InvalidArgument);
    let marked = [3usize];
    assert_eq!(unsafe { qls_grover_simulate(2, marked.as_ptr(), 1, 1, &mut p) }, QlsStatus::Ok);
    assert!((p - 1.0).abs() < 1e-12);
}

#[test]
fn header_declares_api_and_compiles() {
    let header = Path::new(env!("CARGO_MANIFEST_DIR")).join("include/qlinsolve.h");
    let text = std::fs::read_to_string(&header).unwrap();
    for name in [
        "typedef struct QlsMatrix QlsMatrix;",
        "typedef struct QlsCircuit QlsCircuit;",
        "QLS_STATUS_NOT_ORTHONORMAL = 3",
        "qls_synthesize_label",
        "qls_circuit_to_qasm",
        "qls_string_free",
        "qls_last_error_message",
    ] {
        assert!(text.contains(name), "header lacks {name}");
    }
    let Ok(status) = Command::new("cc")
        .args(["-fsyntax-only", "-x", "c", "-std=c99", "-Wall", "-Werror"])
        .arg(&header)
        .status()
    else {
        eprintln!("no C compiler available; skipping syntax check");
        return;
    };
    assert!(status.success());
}
