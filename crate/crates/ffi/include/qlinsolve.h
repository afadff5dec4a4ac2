#ifndef QLINSOLVE_H
#define QLINSOLVE_H

/* Generated by cbindgen. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes returned by every fallible function.
 */
typedef enum QlsStatus {
  QLS_STATUS_OK = 0,
  QLS_STATUS_NULL_POINTER = 1,
  QLS_STATUS_INVALID_ARGUMENT = 2,
  QLS_STATUS_NOT_ORTHONORMAL = 3,
  QLS_STATUS_NOT_NORMALIZED = 4,
  QLS_STATUS_DIMENSION_MISMATCH = 5,
  QLS_STATUS_NOT_FOUND = 6,
  QLS_STATUS_INVALID_LABEL = 7,
  QLS_STATUS_UNSUPPORTED_GATE = 8,
  QLS_STATUS_BUFFER_TOO_SMALL = 9,
  QLS_STATUS_PANIC = 10,
} QlsStatus;

/**
 * Opaque synthesized (or built) circuit.
 */
typedef struct QlsCircuit QlsCircuit;

/**
 * Opaque square real matrix.
 */
typedef struct QlsMatrix QlsMatrix;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failure on this thread, or NULL. Valid until the next
 * failing call on the same thread; do not free.
 */
const char *qls_last_error_message(void);

/**
 * Number of family members (48).
 */
size_t qls_family_count(void);

/**
 * Writes the NUL-terminated label of family member `index` (e.g. `A_1234`) into `buf`.
 *
 * # Safety
 * `buf` must point to `buf_len` writable bytes.
 */
enum QlsStatus qls_family_label(size_t index, char *buf, size_t buf_len);

/**
 * Creates a `dim`×`dim` matrix from `dim*dim` row-major entries.
 *
 * # Safety
 * `entries` must point to `len` readable doubles; `out` must be writable.
 */
enum QlsStatus qls_matrix_new(size_t dim,
                              const double *entries,
                              size_t len,
                              struct QlsMatrix **out);

/**
 * Matrix of a family label such as `"A_1234"`.
 *
 * # Safety
 * `label` must be a NUL-terminated string; `out` must be writable.
 */
enum QlsStatus qls_matrix_from_label(const char *label, struct QlsMatrix **out);

/**
 * # Safety
 * `matrix` must come from a `qls_matrix_*` constructor and not be freed twice. NULL is ignored.
 */
void qls_matrix_free(struct QlsMatrix *matrix);

/**
 * Dimension of the matrix, or 0 for NULL.
 *
 * # Safety
 * `matrix` must be a live handle or NULL.
 */
size_t qls_matrix_dim(const struct QlsMatrix *matrix);

/**
 * Copies the row-major entries into `out`.
 *
 * # Safety
 * `matrix` must be live; `out` must point to `out_len` writable doubles.
 */
enum QlsStatus qls_matrix_entries(const struct QlsMatrix *matrix, double *out, size_t out_len);

/**
 * Inverse operator `U` with `U·A = I`; fails with `NOT_ORTHONORMAL` otherwise.
 *
 * # Safety
 * `matrix` must be live; `out` must be writable.
 */
enum QlsStatus qls_inverse_operator(const struct QlsMatrix *matrix, struct QlsMatrix **out);

/**
 * Solves `A·x = y`; `y` must have unit norm.
 *
 * # Safety
 * `y` must point to `y_len` doubles and `x_out` to `x_len` writable doubles.
 */
enum QlsStatus qls_solve(const struct QlsMatrix *matrix,
                         const double *y,
                         size_t y_len,
                         double *x_out,
                         size_t x_len);

/**
 * Shortest circuit realizing `±target` for a 4×4 real orthogonal target.
 *
 * # Safety
 * `target` must be live; `out` must be writable.
 */
enum QlsStatus qls_synthesize(const struct QlsMatrix *target,
                              size_t max_gates,
                              struct QlsCircuit **out);

/**
 * Circuit for the inverse operator of a family label.
 *
 * # Safety
 * `label` must be a NUL-terminated string; `out` must be writable.
 */
enum QlsStatus qls_synthesize_label(const char *label, size_t max_gates, struct QlsCircuit **out);

/**
 * # Safety
 * `circuit` must come from a `qls_synthesize*` call and not be freed twice. NULL is ignored.
 */
void qls_circuit_free(struct QlsCircuit *circuit);

/**
 * # Safety
 * `circuit` must be a live handle or NULL (returns 0).
 */
size_t qls_circuit_gate_count(const struct QlsCircuit *circuit);

/**
 * `+1` or `-1`: the global sign relating the circuit's unitary to the target; 0 for NULL.
 *
 * # Safety
 * `circuit` must be a live handle or NULL.
 */
int32_t qls_circuit_matched_sign(const struct QlsCircuit *circuit);

/**
 * OpenQASM 2.0 text; free the returned string with `qls_string_free`.
 *
 * # Safety
 * `circuit` must be live; `out` must be writable.
 */
enum QlsStatus qls_circuit_to_qasm(const struct QlsCircuit *circuit, char **out);

/**
 * # Safety
 * `s` must come from this library and not be freed twice. NULL is ignored.
 */
void qls_string_free(char *s);

/**
 * Runs the circuit on `|basis⟩`, writing real and imaginary amplitude parts.
 *
 * # Safety
 * `circuit` must be live; `re_out` and `im_out` must each hold `len` doubles.
 */
enum QlsStatus qls_circuit_run(const struct QlsCircuit *circuit,
                               size_t basis,
                               double *re_out,
                               double *im_out,
                               size_t len);

/**
 * Samples `shots` measurements of the circuit's output from `|basis⟩`, optionally
 * through global depolarizing noise `noise`. Counts are written in basis-index order.
 *
 * # Safety
 * `circuit` must be live; `counts_out` must hold `len` writable `uint64_t`.
 */
enum QlsStatus qls_circuit_sample(const struct QlsCircuit *circuit,
                                  size_t basis,
                                  uint64_t shots,
                                  uint64_t seed,
                                  double noise,
                                  uint64_t *counts_out,
                                  size_t len);

/**
 * Fidelity of the reconstructed solution state of `label` (right-hand side `e_basis`)
 * after depolarizing noise `noise`. With `analytic` false, each of the nine
 * settings is sampled with `shots` shots.
 *
 * # Safety
 * `label` must be a NUL-terminated string; `out` must be writable.
 */
enum QlsStatus qls_tomography_fidelity(const char *label,
                                       size_t basis,
                                       double noise,
                                       bool analytic,
                                       uint64_t shots,
                                       uint64_t seed,
                                       double *out);

/**
 * Closed-form Grover success probability `sin²((2k+1)θ)`, `sin θ = √(M/N)`.
 *
 * # Safety
 * `out` must be writable.
 */
enum QlsStatus qls_grover_success_probability(size_t n_states,
                                              size_t n_marked,
                                              size_t k,
                                              double *out);

/**
 * Simulated marked-set probability after `k` Grover iterations on `n_qubits`.
 *
 * # Safety
 * `marked` must point to `marked_len` indices; `out` must be writable.
 */
enum QlsStatus qls_grover_simulate(size_t n_qubits,
                                   const size_t *marked,
                                   size_t marked_len,
                                   size_t k,
                                   double *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QLINSOLVE_H */
