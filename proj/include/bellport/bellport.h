/* Copyright 2026 The bellport authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C API of the bellport shared library.
 *
 * bellport simulates N independent single photons interfering in an N x N
 * multiport beam splitter, postselected on collecting one photon in every
 * output port. Photons carry a two-valued internal label written '+'/'-'
 * (polarisation, time bin, frequency); the multiport redirects photons
 * without touching the label.
 *
 * Conventions:
 *   - All functions return bp_status; BP_OK is 0. On failure,
 *     bp_last_error_message() returns a human-readable detail string for
 *     the current thread (valid until the next failing call).
 *   - Objects created through bp_*_create/bp_* factories are released with
 *     their matching bp_*_free. Strings returned through char** out
 *     parameters are released with bp_string_free.
 *   - Matrix row j / column i is the amplitude for redirecting a photon
 *     from input port i to output port j. Row, column and port indices are
 *     zero-based.
 *   - Label strings list output (or input) ports left to right starting at
 *     port 0, e.g. "+---".
 *   - All handles are immutable once created and safe to share between
 *     threads.
 */

#ifndef BELLPORT_BELLPORT_H
#define BELLPORT_BELLPORT_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bp_status {
    BP_OK = 0,
    BP_ERROR_NULL_ARGUMENT = 1,
    BP_ERROR_INVALID_DIMENSION = 2,
    BP_ERROR_INVALID_INDEX = 3,
    BP_ERROR_SIZE_LIMIT = 4,
    BP_ERROR_CONFIGURATION = 5,
    BP_ERROR_EMPTY_STATE = 6,
    BP_ERROR_INSUFFICIENT_DATA = 7,
    BP_ERROR_PARSE = 8,
    BP_ERROR_INTERNAL = 9
} bp_status;

/* Square complex matrix (not necessarily unitary). */
typedef struct bp_matrix bp_matrix;
/* One normalized photon per input port. */
typedef struct bp_input bp_input;
/* Sparse postselected N-photon state: label assignment -> amplitude. */
typedef struct bp_state bp_state;

const char *bp_status_name(bp_status status);
const char *bp_last_error_message(void);
void bp_string_free(char *s);

/* ---- matrices -------------------------------------------------------- */

/* The n-port discrete Fourier multiport: entry (j, i) equals
 * exp(2*pi*I*j*i/n)/sqrt(n). Symmetric and unitary. */
bp_status bp_matrix_bell(int32_t n, bp_matrix **out);

/* entries: 2*n*n doubles, row-major, each entry as re then im. */
bp_status bp_matrix_create(int32_t n, const double *entries, bp_matrix **out);

void bp_matrix_free(bp_matrix *m);

bp_status bp_matrix_dim(const bp_matrix *m, int32_t *n);
bp_status bp_matrix_entry(const bp_matrix *m, int32_t row, int32_t col, double *re, double *im);

/* *result is 1 iff the max-norm deviation of M^dagger M from the identity
 * is at most tol (tol must be positive). */
bp_status bp_matrix_is_unitary(const bp_matrix *m, double tol, int32_t *result);

/* The (n-1) x (n-1) submatrix with one row and one column deleted. */
bp_status bp_matrix_reduced(const bp_matrix *m, int32_t drop_row, int32_t drop_col, bp_matrix **out);

/* {"n": int, "entries": [[[re, im], ...], ...]} row-major. */
bp_status bp_matrix_to_json(const bp_matrix *m, char **json);
bp_status bp_matrix_from_json(const char *json, bp_matrix **out);

/* ---- permanents ------------------------------------------------------ */

/* Ryser inclusion-exclusion evaluation, O(2^n * n); n <= 30. Results are
 * bit-deterministic run to run. */
bp_status bp_permanent(const bp_matrix *m, double *re, double *im);

/* Reference permutation-sum evaluation, O(n! * n); n <= 10. */
bp_status bp_permanent_naive(const bp_matrix *m, double *re, double *im);

/* ---- inputs ---------------------------------------------------------- */

/* amplitudes: 4 doubles per port, ordered plus_re, plus_im, minus_re,
 * minus_im. Every port must satisfy |a+|^2 + |a-|^2 = 1 within 1e-9;
 * unnormalized ports are rejected, not rescaled. */
bp_status bp_input_create(int32_t n, const double *amplitudes, bp_input **out);

/* Basis-state input from a label string such as "+---" (port 0 first). */
bp_status bp_input_basis(const char *labels, bp_input **out);

void bp_input_free(bp_input *input);

/* ---- postselected states --------------------------------------------- */

/* Scatters the input through u (which must be unitary within 1e-10) and
 * keeps the unnormalized projection onto one photon per output port.
 * Amplitudes of magnitude <= 1e-12 are destructive-interference zeros and
 * are dropped. */
bp_status bp_postselect(const bp_matrix *u, const bp_input *input, bp_state **out);

void bp_state_free(bp_state *s);

bp_status bp_state_ports(const bp_state *s, int32_t *n);
bp_status bp_state_term_count(const bp_state *s, int32_t *count);

/* Reads term `index` (0 <= index < term count, ascending assignment order).
 * labels must hold at least ports+1 bytes; labels_len is its capacity. */
bp_status bp_state_term(const bp_state *s, int32_t index, char *labels, int32_t labels_len, double *re, double *im);

/* Squared norm of the state: the probability that postselection succeeds. */
bp_status bp_state_success_probability(const bp_state *s, double *p);

/* Unit-norm copy. Fails with BP_ERROR_EMPTY_STATE on empty states. */
bp_status bp_state_normalized(const bp_state *s, bp_state **out);

/* Single-port Pauli operation on the photon label at `port`; axis is one
 * of 'x', 'y', 'z'. */
bp_status bp_state_apply_pauli(const bp_state *s, int32_t port, char axis, bp_state **out);

/* |<a|b>|^2 of the normalized states, in [0, 1]. */
bp_status bp_state_fidelity(const bp_state *a, const bp_state *b, double *fidelity);

/* {"n": int, "terms": [{"labels": "+-...", "amp": [re, im]}, ...]} */
bp_status bp_state_to_json(const bp_state *s, char **json);
bp_status bp_state_from_json(const char *json, bp_state **out);

/* ---- reference entangled states -------------------------------------- */

typedef enum bp_canonical_kind {
    /* W state: one '+' among '-', amplitudes 1/sqrt(n), sign (-1)^port for
     * even n and constant sign for odd n. Any n >= 2. */
    BP_CANONICAL_W = 0,
    /* Label-swapped W: one '-' among '+', same signs. Any n >= 2. */
    BP_CANONICAL_W_PRIME = 1,
    /* (|+-+-> - |-+-+>)/sqrt(2); n = 4 only. */
    BP_CANONICAL_GHZ4 = 2,
    /* (|++--> + |--++> - |+--+> - |-++->)/2; n = 4 only. */
    BP_CANONICAL_DOUBLE_SINGLET4 = 3
} bp_canonical_kind;

bp_status bp_canonical_state(bp_canonical_kind kind, int32_t n, bp_state **out);

/* ---- 4-photon decomposition ------------------------------------------ */

/* Complex values as {re, im} pairs. gammas[k] is the k+1-th of the 14
 * balanced products of input amplitudes; the four coefficients multiply the
 * canonical double-singlet, GHZ, W and W' states, and their weighted sum
 * reconstructs postselect(bell(4), input) exactly. */
typedef struct bp_decomposition {
    double c_double_singlet[2];
    double c_ghz[2];
    double c_w[2];
    double c_w_prime[2];
    double gammas[14][2];
} bp_decomposition;

bp_status bp_decompose4(const bp_input *input, bp_decomposition *out);
bp_status bp_decomposition_to_json(const bp_decomposition *d, char **json);

/* ---- W-state success-probability sweep ------------------------------- */

/* p_out receives n_max - n_min + 1 probabilities for the W input (plus in
 * port 0, minus elsewhere) on the Bell multiport; 2 <= n_min <= n_max <= 20.
 * Values <= 1e-12 are genuine destructive-interference zeros. */
bp_status bp_sweep_w(int32_t n_min, int32_t n_max, double *p_out);

/* Same sweep as CSV text: header "n,p_suc", 15 significant digits. */
bp_status bp_sweep_w_csv(int32_t n_min, int32_t n_max, char **csv);

typedef struct bp_fit_result {
    double a;
    double b;        /* decay rate: model is p = exp(a - b*n) */
    double residual; /* sum of squared log-residuals */
    int32_t point_count;
    int32_t points_used[64]; /* first 64 of the n values used */
} bp_fit_result;

/* Least squares of ln(p) against n over points with p > 1e-12 (at least 3
 * of them required). */
bp_status bp_fit_exponential(const int32_t *ns, const double *ps, int32_t count, bp_fit_result *out);

/* Parses "n,p_suc" CSV text and fits it. */
bp_status bp_fit_csv(const char *csv, bp_fit_result *out);
bp_status bp_fit_to_json(const bp_fit_result *fit, char **json);

/* ---- self-verification ------------------------------------------------ */

/* Cross-checks the permanent kernel and the scattering pipeline against
 * brute-force references for port counts up to max_n (2..7). Writes a
 * report with one PASS/FAIL line per check and sets *all_passed to 0/1.
 * configured_unitary may be NULL; when given, its unitarity is checked as
 * part of the report. */
bp_status bp_verify(int32_t max_n, const bp_matrix *configured_unitary, char **report, int32_t *all_passed);

/* ---- formatting helpers ------------------------------------------------ */

/* If value is within 1e-12 of a rational p/q with q <= max_den, writes the
 * "p/q" text into *label, else sets *label to NULL. Success probabilities
 * of small multiports are exact small rationals (1/16, 1/8, ...). */
bp_status bp_rational_label(double value, int32_t max_den, char **label);

#ifdef __cplusplus
}
#endif

#endif /* BELLPORT_BELLPORT_H */
