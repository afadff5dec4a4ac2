//! C ABI for qlinsolve.
//!
//! Objects cross the boundary as opaque handles (`QlsMatrix`, `QlsCircuit`)
//! that the caller frees with the matching `*_free` function. Every fallible
//! function returns a `QlsStatus`; on failure `qls_last_error_message` holds a
//! description for the calling thread. Output buffers are caller-allocated and
//! their lengths are checked.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use qlinsolve::family::{matrix_for, FamilyLabel};
use qlinsolve::linsys::{self, RealMatrix, RealVector};
use qlinsolve::sim::{self, Circuit};
use qlinsolve::synth::{self, SynthesisResult};
use qlinsolve::tomo::{self, TomographyMode};
use qlinsolve::{grover, qasm, Error};

/// Result codes returned by every fallible function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QlsStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    NotOrthonormal = 3,
    NotNormalized = 4,
    DimensionMismatch = 5,
    NotFound = 6,
    InvalidLabel = 7,
    UnsupportedGate = 8,
    BufferTooSmall = 9,
    Panic = 10,
}

impl From<&Error> for QlsStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::NotOrthonormal { .. } | Error::NotOrthogonal => QlsStatus::NotOrthonormal,
            Error::NotNormalized { .. } => QlsStatus::NotNormalized,
            Error::DimensionMismatch { .. } => QlsStatus::DimensionMismatch,
            Error::NotFound { .. } => QlsStatus::NotFound,
            Error::InvalidLabel(_) => QlsStatus::InvalidLabel,
            Error::UnsupportedGate(_) => QlsStatus::UnsupportedGate,
            _ => QlsStatus::InvalidArgument,
        }
    }
}

/// Opaque square real matrix.
pub struct QlsMatrix(RealMatrix);

/// Opaque synthesized (or built) circuit.
pub struct QlsCircuit {
    circuit: Circuit,
    matched_sign: i8,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(msg));
}

fn fail(status: QlsStatus, msg: impl Into<String>) -> QlsStatus {
    set_error(msg);
    status
}

fn fail_with(e: &Error) -> QlsStatus {
    fail(QlsStatus::from(e), e.to_string())
}

/// Runs `f`, converting panics into `QlsStatus::Panic`.
fn guarded(f: impl FnOnce() -> QlsStatus) -> QlsStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| fail(QlsStatus::Panic, "internal panic"))
}

unsafe fn read_label(label: *const c_char) -> Result<FamilyLabel, QlsStatus> {
    if label.is_null() {
        return Err(fail(QlsStatus::NullPointer, "label is null"));
    }
    let text = unsafe { CStr::from_ptr(label) }.to_str().map_err(|_| fail(QlsStatus::InvalidLabel, "label is not UTF-8"))?;
    text.parse().map_err(|e: Error| fail_with(&e))
}

unsafe fn read_slice<'a>(data: *const f64, len: usize) -> Result<&'a [f64], QlsStatus> {
    if data.is_null() {
        return Err(fail(QlsStatus::NullPointer, "input buffer is null"));
    }
    Ok(unsafe { std::slice::from_raw_parts(data, len) })
}

unsafe fn write_slice<T: Copy>(out: *mut T, out_len: usize, values: &[T]) -> QlsStatus {
    if out.is_null() {
        return fail(QlsStatus::NullPointer, "output buffer is null");
    }
    if out_len < values.len() {
        return fail(QlsStatus::BufferTooSmall, format!("need {} elements, got {out_len}", values.len()));
    }
    unsafe { ptr::copy_nonoverlapping(values.as_ptr(), out, values.len()) };
    QlsStatus::Ok
}

fn boxed<T>(out: *mut *mut T, value: T) -> QlsStatus {
    if out.is_null() {
        return fail(QlsStatus::NullPointer, "output handle pointer is null");
    }
    unsafe { *out = Box::into_raw(Box::new(value)) };
    QlsStatus::Ok
}

/// Message for the last failure on this thread, or NULL. Valid until the next
/// failing call on the same thread; do not free.
#[no_mangle]
pub extern "C" fn qls_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Number of family members (48).
#[no_mangle]
pub extern "C" fn qls_family_count() -> usize {
    FamilyLabel::all().len()
}

/// Writes the NUL-terminated label of family member `index` (e.g. `A_1234`) into `buf`.
///
/// # Safety
/// `buf` must point to `buf_len` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn qls_family_label(index: usize, buf: *mut c_char, buf_len: usize) -> QlsStatus {
    guarded(|| {
        let Some(label) = FamilyLabel::all().get(index).copied() else {
            return fail(QlsStatus::InvalidArgument, format!("index {index} out of range"));
        };
        let text = CString::new(label.to_string()).expect("ascii label");
        unsafe { write_slice(buf.cast::<u8>(), buf_len, text.as_bytes_with_nul()) }
    })
}

/// Creates a `dim`×`dim` matrix from `dim*dim` row-major entries.
///
/// # Safety
/// `entries` must point to `len` readable doubles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qls_matrix_new(dim: usize, entries: *const f64, len: usize, out: *mut *mut QlsMatrix) -> QlsStatus {
    guarded(|| {
        let data = match unsafe { read_slice(entries, len) } {
            Ok(d) => d,
            Err(s) => return s,
        };
        match RealMatrix::new(dim, data.to_vec()) {
            Ok(m) => boxed(out, QlsMatrix(m)),
            Err(e) => fail_with(&e),
        }
    })
}

/// Matrix of a family label such as `"A_1234"`.
///
/// # Safety
/// `label` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qls_matrix_from_label(label: *const c_char, out: *mut *mut QlsMatrix) -> QlsStatus {
    guarded(|| match unsafe { read_label(label) } {
        Ok(label) => boxed(out, QlsMatrix(matrix_for(label))),
        Err(s) => s,
    })
}

/// # Safety
/// `matrix` must come from a `qls_matrix_*` constructor and not be freed twice. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn qls_matrix_free(matrix: *mut QlsMatrix) {
    if !matrix.is_null() {
        drop(unsafe { Box::from_raw(matrix) });
    }
}

/// Dimension of the matrix, or 0 for NULL.
///
/// # Safety
/// `matrix` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn qls_matrix_dim(matrix: *const QlsMatrix) -> usize {
    unsafe { matrix.as_ref() }.map_or(0, |m| m.0.dim())
}

/// Copies the row-major entries into `out`.
///
/// # Safety
/// `matrix` must be live; `out` must point to `out_len` writable doubles.
#[no_mangle]
pub unsafe extern "C" fn qls_matrix_entries(matrix: *const QlsMatrix, out: *mut f64, out_len: usize) -> QlsStatus {
    guarded(|| match unsafe { matrix.as_ref() } {
        Some(m) => unsafe { write_slice(out, out_len, m.0.entries()) },
        None => fail(QlsStatus::NullPointer, "matrix is null"),
    })
}

/// Inverse operator `U` with `U·A = I`; fails with `NOT_ORTHONORMAL` otherwise.
///
/// # Safety
/// `matrix` must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qls_inverse_operator(matrix: *const QlsMatrix, out: *mut *mut QlsMatrix) -> QlsStatus {
    guarded(|| match unsafe { matrix.as_ref() } {
        Some(m) => match linsys::inverse_operator(&m.0) {
            Ok(u) => boxed(out, QlsMatrix(u)),
            Err(e) => fail_with(&e),
        },
        None => fail(QlsStatus::NullPointer, "matrix is null"),
    })
}

/// Solves `A·x = y`; `y` must have unit norm.
///
/// # Safety
/// `y` must point to `y_len` doubles and `x_out` to `x_len` writable doubles.
#[no_mangle]
pub unsafe extern "C" fn qls_solve(
    matrix: *const QlsMatrix,
    y: *const f64,
    y_len: usize,
    x_out: *mut f64,
    x_len: usize,
) -> QlsStatus {
    guarded(|| {
        let Some(m) = (unsafe { matrix.as_ref() }) else {
            return fail(QlsStatus::NullPointer, "matrix is null");
        };
        let y = match unsafe { read_slice(y, y_len) }.map(|d| RealVector::new(d.to_vec())) {
            Ok(Ok(v)) => v,
            Ok(Err(e)) => return fail_with(&e),
            Err(s) => return s,
        };
        match linsys::solve(&m.0, &y) {
            Ok(x) => unsafe { write_slice(x_out, x_len, x.as_slice()) },
            Err(e) => fail_with(&e),
        }
    })
}

fn circuit_from(result: SynthesisResult, out: *mut *mut QlsCircuit) -> QlsStatus {
    boxed(out, QlsCircuit { circuit: result.circuit, matched_sign: result.matched_sign })
}

/// Shortest circuit realizing `±target` for a 4×4 real orthogonal target.
///
/// # Safety
/// `target` must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qls_synthesize(target: *const QlsMatrix, max_gates: usize, out: *mut *mut QlsCircuit) -> QlsStatus {
    guarded(|| match unsafe { target.as_ref() } {
        Some(t) => match synth::synthesize(&t.0, max_gates) {
            Ok(r) => circuit_from(r, out),
            Err(e) => fail_with(&e),
        },
        None => fail(QlsStatus::NullPointer, "target is null"),
    })
}

/// Circuit for the inverse operator of a family label.
///
/// # Safety
/// `label` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qls_synthesize_label(label: *const c_char, max_gates: usize, out: *mut *mut QlsCircuit) -> QlsStatus {
    guarded(|| match unsafe { read_label(label) } {
        Ok(label) => match synth::synthesize_label(label, max_gates) {
            Ok(r) => circuit_from(r, out),
            Err(e) => fail_with(&e),
        },
        Err(s) => s,
    })
}

/// # Safety
/// `circuit` must come from a `qls_synthesize*` call and not be freed twice. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn qls_circuit_free(circuit: *mut QlsCircuit) {
    if !circuit.is_null() {
        drop(unsafe { Box::from_raw(circuit) });
    }
}

/// # Safety
/// `circuit` must be a live handle or NULL (returns 0).
#[no_mangle]
pub unsafe extern "C" fn qls_circuit_gate_count(circuit: *const QlsCircuit) -> usize {
    unsafe { circuit.as_ref() }.map_or(0, |c| c.circuit.len())
}

/// `+1` or `-1`: the global sign relating the circuit's unitary to the target; 0 for NULL.
///
/// # Safety
/// `circuit` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn qls_circuit_matched_sign(circuit: *const QlsCircuit) -> i32 {
    unsafe { circuit.as_ref() }.map_or(0, |c| i32::from(c.matched_sign))
}

/// OpenQASM 2.0 text; free the returned string with `qls_string_free`.
///
/// # Safety
/// `circuit` must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qls_circuit_to_qasm(circuit: *const QlsCircuit, out: *mut *mut c_char) -> QlsStatus {
    guarded(|| {
        let Some(c) = (unsafe { circuit.as_ref() }) else {
            return fail(QlsStatus::NullPointer, "circuit is null");
        };
        if out.is_null() {
            return fail(QlsStatus::NullPointer, "output pointer is null");
        }
        match qasm::to_qasm(&c.circuit) {
            Ok(text) => {
                unsafe { *out = CString::new(text).expect("no interior nul").into_raw() };
                QlsStatus::Ok
            }
            Err(e) => fail_with(&e),
        }
    })
}

/// # Safety
/// `s` must come from this library and not be freed twice. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn qls_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Runs the circuit on `|basis⟩`, writing real and imaginary amplitude parts.
///
/// # Safety
/// `circuit` must be live; `re_out` and `im_out` must each hold `len` doubles.
#[no_mangle]
pub unsafe extern "C" fn qls_circuit_run(
    circuit: *const QlsCircuit,
    basis: usize,
    re_out: *mut f64,
    im_out: *mut f64,
    len: usize,
) -> QlsStatus {
    guarded(|| {
        let Some(c) = (unsafe { circuit.as_ref() }) else {
            return fail(QlsStatus::NullPointer, "circuit is null");
        };
        let state = match sim::run(&c.circuit, basis) {
            Ok(s) => s,
            Err(e) => return fail_with(&e),
        };
        let re: Vec<f64> = state.amplitudes().iter().map(|a| a.re).collect();
        let im: Vec<f64> = state.amplitudes().iter().map(|a| a.im).collect();
        match unsafe { write_slice(re_out, len, &re) } {
            QlsStatus::Ok => unsafe { write_slice(im_out, len, &im) },
            other => other,
        }
    })
}

/// Samples `shots` measurements of the circuit's output from `|basis⟩`, optionally
/// through global depolarizing noise `noise`. Counts are written in basis-index order.
///
/// # Safety
/// `circuit` must be live; `counts_out` must hold `len` writable `uint64_t`.
#[no_mangle]
pub unsafe extern "C" fn qls_circuit_sample(
    circuit: *const QlsCircuit,
    basis: usize,
    shots: u64,
    seed: u64,
    noise: f64,
    counts_out: *mut u64,
    len: usize,
) -> QlsStatus {
    guarded(|| {
        let Some(c) = (unsafe { circuit.as_ref() }) else {
            return fail(QlsStatus::NullPointer, "circuit is null");
        };
        if shots == 0 {
            return fail(QlsStatus::InvalidArgument, "shots must be at least 1");
        }
        let state = match sim::run(&c.circuit, basis) {
            Ok(s) => s,
            Err(e) => return fail_with(&e),
        };
        let rho = match tomo::apply_depolarizing(&tomo::density_from_state(&state), noise) {
            Ok(r) => r,
            Err(e) => return fail_with(&e),
        };
        let probs: Vec<f64> = rho.matrix().diagonal().iter().map(|z| z.re.max(0.0)).collect();
        let table = sim::sample_distribution(&probs, state.n_qubits(), shots, seed);
        unsafe { write_slice(counts_out, len, &table.count_vec()) }
    })
}

/// Fidelity of the reconstructed solution state of `label` (right-hand side `e_basis`)
/// after depolarizing noise `noise`. With `analytic` false, each of the nine
/// settings is sampled with `shots` shots.
///
/// # Safety
/// `label` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qls_tomography_fidelity(
    label: *const c_char,
    basis: usize,
    noise: f64,
    analytic: bool,
    shots: u64,
    seed: u64,
    out: *mut f64,
) -> QlsStatus {
    guarded(|| {
        let label = match unsafe { read_label(label) } {
            Ok(l) => l,
            Err(s) => return s,
        };
        if out.is_null() {
            return fail(QlsStatus::NullPointer, "output pointer is null");
        }
        if !analytic && shots == 0 {
            return fail(QlsStatus::InvalidArgument, "shots must be at least 1");
        }
        let result = (|| -> Result<f64, Error> {
            let psi = qlinsolve::solution_state(label, basis)?;
            let rho = tomo::apply_depolarizing(&tomo::density_from_state(&psi), noise)?;
            let mode = if analytic { TomographyMode::Analytic } else { TomographyMode::Sampled { shots, seed } };
            tomo::fidelity(&tomo::reconstruct(&tomo::pauli_expectations(&rho, mode)), &psi)
        })();
        match result {
            Ok(f) => {
                unsafe { *out = f };
                QlsStatus::Ok
            }
            Err(e) => fail_with(&e),
        }
    })
}

/// Closed-form Grover success probability `sin²((2k+1)θ)`, `sin θ = √(M/N)`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qls_grover_success_probability(n_states: usize, n_marked: usize, k: usize, out: *mut f64) -> QlsStatus {
    guarded(|| match grover::geometry(n_states, n_marked) {
        Ok(g) if !out.is_null() => {
            unsafe { *out = grover::success_probability(&g, k) };
            QlsStatus::Ok
        }
        Ok(_) => fail(QlsStatus::NullPointer, "output pointer is null"),
        Err(e) => fail_with(&e),
    })
}

/// Simulated marked-set probability after `k` Grover iterations on `n_qubits`.
///
/// # Safety
/// `marked` must point to `marked_len` indices; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qls_grover_simulate(
    n_qubits: usize,
    marked: *const usize,
    marked_len: usize,
    k: usize,
    out: *mut f64,
) -> QlsStatus {
    guarded(|| {
        if marked.is_null() || out.is_null() {
            return fail(QlsStatus::NullPointer, "null pointer argument");
        }
        let marked = unsafe { std::slice::from_raw_parts(marked, marked_len) };
        match grover::grover_report(n_qubits, marked, Some(k)) {
            Ok(r) => {
                unsafe { *out = r.simulated };
                QlsStatus::Ok
            }
            Err(e) => fail_with(&e),
        }
    })
}
