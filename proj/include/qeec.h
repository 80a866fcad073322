/* Copyright (c) 2026 the qeec authors.
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface to the qeec compiler and simulation stack.
 *
 * All functions return QEEC_OK (0) on success or a nonzero error code;
 * qeec_last_error() describes the most recent failure on the calling
 * thread.  Strings returned through char** are heap-allocated and must
 * be released with qeec_string_free().  Structured inputs and outputs
 * are JSON documents; see the library documentation for the schemas.
 */
#ifndef QEEC_H
#define QEEC_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#define QEEC_OK 0
#define QEEC_ERR_INTERNAL 1
#define QEEC_ERR_INPUT 3
#define QEEC_ERR_NUMERIC 4

/* Opaque handle to a qubit operator (weighted sum of Pauli strings). */
typedef struct qeec_op qeec_op;

const char* qeec_version(void);

/* Message for the last error raised on this thread; empty if none. */
const char* qeec_last_error(void);

void qeec_string_free(char* s);
void qeec_op_free(qeec_op* op);

/* Exact qubit count for m particles in n spin-orbitals under the
 * particle-number filter alone.  Uses arbitrary-precision arithmetic;
 * n may exceed the 64-orbital enumeration limit. */
int qeec_qubit_count_for(unsigned n, unsigned m, unsigned* out_qubits);

/* Enumerate the admitted configurations for a filter document and
 * return the mapping table (occupied orbitals, f-string, q-string)
 * as JSON. */
int qeec_enumerate_configs(const char* filter_json, char** out_json);

/* Compile an integral table to a qubit operator.
 *   integrals_text: JSON integral document or FCIDUMP text.
 *   format:         "auto", "json" or "fcidump".
 *   filter_json:    symmetry filter document.
 *   encoding:       "qee" (subspace encoding) or "jw" (full register).
 * On success *out owns the compiled operator. */
int qeec_encode(const char* integrals_text, const char* format,
                const char* filter_json, const char* encoding,
                qeec_op** out);

int qeec_op_from_json(const char* op_json, qeec_op** out);
int qeec_op_to_json(const qeec_op* op, char** out_json);

/* Fixed-point rendering, one "+c.cccccc LABEL" line per term at or
 * above the magnitude threshold. */
int qeec_op_pretty(const qeec_op* op, int decimals, double threshold,
                   char** out_text);

int qeec_op_qubits(const qeec_op* op, unsigned* out_qubits);
int qeec_op_term_count(const qeec_op* op, double threshold,
                       unsigned long long* out_count);

/* Dense spectrum, ascending, as a JSON array.  Refuses operators wider
 * than ~14 qubits. */
int qeec_op_eigenvalues(const qeec_op* op, char** out_json);

/* Constant shift recorded with the operator's source (e.g. nuclear
 * repulsion from integral metadata); 0 when absent. */
int qeec_op_metadata(const qeec_op* op, char** out_json);

/* Variational ground-state search.  options_json keys: reps,
 * redundant_cnot_pairs, backend {kind, shots, noise, mitigate_readout},
 * seed, max_iterations, restarts, target, initial_step, tolerance.
 * Output: {energy, parameters, evaluations, starts, cnots, sigma?}. */
int qeec_vqe(const qeec_op* op, const char* options_json, char** out_json);

/* Noise-amplified extrapolation pipeline.  options_json keys: reps,
 * pair_counts, shots, repeats, mode ("fixed-angles"|"full-vqe"), seed,
 * mitigate_readout, noise, optimizer{...}.  Output: {points, fit,
 * angles}. */
int qeec_zne(const qeec_op* op, const char* options_json, char** out_json);

/* Register-size and term-count comparison between the full-register
 * encoding and the subspace encoding for one integral table + filter.
 * Output: {jw_qubits, jw_terms, qee_qubits, qee_terms}. */
int qeec_term_report(const char* integrals_text, const char* format,
                     const char* filter_json, double count_threshold,
                     char** out_json);

/* Compile-cost measurement on random integral tables.  grid_json:
 * {"points": [{"n": N, "m": M}, ...], "seed": S}.  Output rows carry
 * measured element/term counts, the analytic prediction, the
 * pre-merge bound, and wall time. */
int qeec_bench(const char* grid_json, char** out_json);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* QEEC_H */
